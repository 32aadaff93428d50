#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "metric_core.hpp"
#include "rational.hpp"
#include "words.hpp"

namespace windmill {

// Evaluation of action words in a decidable quotient (or in the group itself
// when faithful). Nontrivial image certifies nontriviality; triviality is only
// concluded from a faithful oracle.
struct QuotientOracle {
  GroupSig target;
  std::vector<Word> gen_images;  // one per action generator
  bool faithful = false;

  Word image(const Word& action_word) const;
};

// A group acting on a materialized vertex set by named generator permutations,
// possibly partial (image -1 = outside the truncation). Words over the
// generators are free-reduced; real relations live in the permutations and in
// the optional quotient oracle.
class GroupAction {
 public:
  struct Generator {
    std::string name;  // single letter
    std::vector<int> image;
  };

  GroupAction(int degree, std::vector<Generator> gens,
              std::optional<QuotientOracle> oracle = std::nullopt);

  int degree() const { return degree_; }
  int gen_count() const { return static_cast<int>(gens_.size()); }
  const Generator& gen(int i) const { return gens_[static_cast<std::size_t>(i)]; }
  const GroupSig& word_sig() const { return sig_; }
  const std::optional<QuotientOracle>& oracle() const { return oracle_; }

  Word parse(const std::string& text) const { return parse_word(sig_, text); }
  std::string str(const Word& w) const { return word_str(sig_, w); }

  // -1 when the word walks outside the truncation.
  int apply(const Word& w, int v) const;
  std::vector<int> apply_all(const Word& w) const;

  // nullopt = inconclusive on the truncation and through the oracle.
  std::optional<bool> is_trivial(const Word& w) const;

  // Identity key of the group element behind w: the faithful oracle image when
  // one is declared, otherwise the (possibly partial) image vector.
  std::string word_key(const Word& w) const;

  // Images agree wherever both are defined on the truncation.
  bool compatible(const Word& a, const Word& b, bool& fully_compared) const;

  // All reduced nonempty words of length <= bound, deterministic order.
  std::vector<Word> words_up_to(int bound) const;

 private:
  int degree_;
  std::vector<Generator> gens_;
  std::vector<std::vector<int>> inverse_;  // per generator
  GroupSig sig_;
  std::optional<QuotientOracle> oracle_;
};

// Generator words of R_v on explicitly assigned vertices. Vertices without an
// assignment inherit by conjugation when a transporter word is known.
struct VertexFamily {
  std::map<int, std::vector<Word>> assignments;

  bool has(int v) const { return assignments.count(v) != 0; }
  const std::vector<Word>& at(int v) const { return assignments.at(v); }
};

struct CheckWitness {
  std::string kind;
  std::string detail;
};

struct InvarianceReport {
  bool pass = false;
  int word_bound = 0;
  long long words_tested = 0;
  long long entries_checked = 0;
  long long entries_skipped = 0;  // image outside the truncation
  long long violations = 0;
  std::vector<CheckWitness> witnesses;
};

// d(gy)(gx,gz) = d(y)(x,z) for all table entries and words g up to the bound.
InvarianceReport check_invariance(const GroupAction& a, const DistanceSystem& ds, int word_bound);

struct EquivarianceReport {
  bool pass = false;
  int word_bound = 0;
  long long pairs_checked = 0;
  long long pairs_skipped = 0;
  long long violations = 0;
  std::vector<CheckWitness> witnesses;
};

// For tested g and assigned v with g v assigned too: the generator set of
// R_{gv} must equal {g r g^-1 : r in R_v} as permutations of the truncation.
EquivarianceReport check_equivariance(const VertexFamily& fam, const GroupAction& a,
                                      int word_bound);

struct SpinningReport {
  bool pass = false;
  Rat L_required{0};
  Rat L_measured{0};  // min over tested (v,h,w); meaningful when tuples_checked > 0
  bool measured_any = false;
  int word_bound = 0;
  long long tuples_checked = 0;
  long long tuples_skipped = 0;       // h w outside truncation or h inconclusive
  long long inconclusive_words = 0;   // skipped because triviality was undecidable
  bool tree_form_checked = false;     // indicator systems: h(e) != e on incident edges
  bool tree_form_pass = false;
  long long violations = 0;
  std::vector<CheckWitness> witnesses;
};

// d_v(w, hw) >= L for every assigned v, nontrivial h in R_v up to word_bound
// (words in the R_v generators), and every w != v.
SpinningReport check_spinning(const VertexFamily& fam, const GroupAction& a,
                              const DistanceSystem& ds, const Rat& L, int word_bound);

// One orbit of components inside a composite vertex: g[i] carries comp[0] to
// comp[i]; g[0] must be the identity.
struct ComponentOrbit {
  std::vector<int> components;
  std::vector<Word> transporters;
};

struct SymmetrizeResult {
  VertexFamily family;
  long long generators_before = 0;
  long long generators_after = 0;   // after word reduction and dedup
  bool closure_verified = false;    // every conjugator permutes the listed components
};

// Union over i,j of (g_j g_i^-1) F_{X_i} (g_j g_i^-1)^-1, installed at every
// component; leaves vertices outside the orbits untouched.
SymmetrizeResult symmetrize(const VertexFamily& fam, const GroupAction& a,
                            const std::vector<ComponentOrbit>& orbits);

}  // namespace windmill
