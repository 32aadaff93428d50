#pragma once

#include <algorithm>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "errors.hpp"
#include "metric_core.hpp"
#include "rational.hpp"
#include "words.hpp"

namespace windmill {

// The windmill machinery is generic over an instance context Inst providing:
//   using Vertex; struct Less;                      deterministic vertex order
//   std::string vertex_label(Vertex) const;
//   std::vector<Vertex> universe() const;           quantification domain (truncation)
//   bool in_universe(Vertex) const;
//   std::vector<Vertex> neighbors(Vertex) const;    edges of P within the truncation
//   Rat dist_fn(Vertex y, Vertex x, Vertex z) const;
//   std::vector<std::vector<Vertex>> geodesics(Vertex, Vertex) const;
//   Vertex act(const Word&, Vertex) const;          throws TruncationError when unresolvable
//   bool family_nontrivial(Vertex) const;
//   Word family_generator(Vertex) const;            cyclic R_v
//   int family_order(Vertex) const;                 0 = infinite cyclic
//   const GroupSig& group_sig() const;
//   std::optional<bool> oracle_trivial(const Word&) const;
//   std::string oracle_normal_form(const Word&) const;
//   std::optional<Word> kernel_image(const Word&) const;    quotient image, when declared
//   // tri-state membership in W_i beyond the inner approximation:
//   //   1 = certainly inside, 0 = certainly outside, -1 = unknown
//   int outer_membership(const std::vector<Vertex>& inner_N, const Word& join_image,
//                        Vertex v) const;

struct LevelSummary {
  int index = 0;
  long long W_size = 0, N_size = 0, L_size = 0;
  std::vector<std::string> orbit_reps;
  long long h_generators = 0;
  bool connected = true;
  bool truncated = false;
};

struct WindmillSummary {
  std::string v0;
  std::vector<LevelSummary> levels;
  bool truncated = false;
  long long universe_size = 0;
};

struct PivotEvidence {
  std::string pivot;
  Rat projection{0};     // d_w(v0, h v0)
  bool waypoint = false;  // on every geodesic
  bool metric_ok = false; // projection > m + theta
};

struct WordEvidence {
  std::string word;
  std::string image;
  std::string normal_form;
  int level = 0;
  int syllable_count = 0;
  std::vector<PivotEvidence> pivots;
  bool has_waypoint = false;
  bool all_waypoints = false;
  bool in_order = false;
  bool oracle_nontrivial = false;
  bool kernel_member = true;  // quotient image trivial, when a kernel oracle is declared
};

struct StatementsReport {
  Rat m{0}, theta{0}, L{0}, Kp{0};
  bool a_ok = true, b_ok = true, c_ok = true, convexity_ok = true, remember_ok = true;
  bool forms_agree = true;  // metric vs graph waypoint form, when m + theta >= Kg
  long long a_checked = 0, b_checked = 0, c_checked = 0, theta_checked = 0, remember_checked = 0;
  long long c_skipped_membership = 0;  // W_i membership unresolved on the truncation
  Rat remember_min_slack{0};
  bool remember_any = false;
  Rat derived_gap{0};  // L - 3(m+theta), positive iff inequality (1) is strict
  std::vector<std::string> failures;
};

struct ClassifyResult {
  std::string verdict;  // "bounded", "unbounded", "unknown"
  std::string fixed_vertex;
  long long power = 0;          // h = r_w^power when bounded and resolved
  Rat drift{0};                 // distance growth per power when unbounded
  int powers_tested = 0;
};

struct CertificateResult {
  bool pass = false;
  std::string refusal;
  std::string counterexample;
  std::vector<std::string> orbit_reps;        // reps carrying nontrivial R_v
  long long orbit_reps_total = 0;             // including trivial ones
  std::string target;
  int word_bound = 0;
  long long words_tested = 0;
  long long words_skipped = 0;  // outside the truncation
  bool word_cap_hit = false;
  bool inclusion_realized = false;
  long long distinct_images = 0;
  WindmillSummary windmill;
  std::vector<WordEvidence> sample_evidence;  // capped sample for the report
  StatementsReport statements;
};

// A letter of the abstract free product F = *_{v in O} R_v.
template <class V>
struct FpLetter {
  V vertex;
  long long exp;
  int level;
};

template <class V>
using FpWord = std::vector<FpLetter<V>>;

template <class Inst>
class WindmillBuilder {
 public:
  using V = typename Inst::Vertex;
  using Less = typename Inst::Less;
  using VSet = std::set<V, Less>;

  struct Level {
    VSet W;  // inner approximation of W_i within the truncation
    VSet N;  // N_i (1-neighborhood of W_{i-1}); level 0 stores {v0}
    VSet L;  // N_i \ W_{i-1}
    std::vector<V> O;
    std::vector<Word> h_gens;  // generators of H_i as ambient words
    bool connected = true;
    bool truncated = false;
  };

  WindmillBuilder(const Inst& inst, V v0, int depth) : inst_(inst), v0_(v0) {
    auto uni = inst_.universe();
    universe_ = VSet(uni.begin(), uni.end());
    if (!universe_.count(v0_)) throw InputError("base point outside the truncation");
    build(depth);
  }

  const Inst& inst() const { return inst_; }
  const V& v0() const { return v0_; }
  const std::vector<Level>& levels() const { return levels_; }
  const VSet& universe() const { return universe_; }

  // Orbit representatives across all levels, with their levels.
  std::vector<std::pair<V, int>> all_reps() const {
    std::vector<std::pair<V, int>> out;
    for (std::size_t i = 0; i < levels_.size(); ++i)
      for (const V& v : levels_[i].O) out.emplace_back(v, static_cast<int>(i));
    return out;
  }

  WindmillSummary summary() const {
    WindmillSummary s;
    s.v0 = inst_.vertex_label(v0_);
    s.universe_size = static_cast<long long>(universe_.size());
    for (std::size_t i = 0; i < levels_.size(); ++i) {
      const Level& lv = levels_[i];
      LevelSummary ls;
      ls.index = static_cast<int>(i);
      ls.W_size = static_cast<long long>(lv.W.size());
      ls.N_size = static_cast<long long>(lv.N.size());
      ls.L_size = static_cast<long long>(lv.L.size());
      for (const V& v : lv.O) ls.orbit_reps.push_back(inst_.vertex_label(v));
      ls.h_generators = static_cast<long long>(lv.h_gens.size());
      ls.connected = lv.connected;
      ls.truncated = lv.truncated;
      s.levels.push_back(std::move(ls));
      s.truncated = s.truncated || lv.truncated;
    }
    return s;
  }

 private:
  const Inst& inst_;
  V v0_;
  VSet universe_;
  std::vector<Level> levels_;

  // Orbit closure of `seed` under the given generator words, restricted to
  // `domain`. Images falling outside the universe flag truncation.
  VSet closure(const VSet& seed, const std::vector<Word>& gens, const VSet& domain,
               bool& truncated) const {
    VSet out;
    std::vector<V> queue;
    for (const V& v : seed)
      if (domain.count(v)) {
        out.insert(v);
        queue.push_back(v);
      }
    const GroupSig& sig = inst_.group_sig();
    while (!queue.empty()) {
      V v = queue.back();
      queue.pop_back();
      for (const Word& g : gens)
        for (int dir : {1, -1}) {
          Word w = dir > 0 ? g : word_inv(sig, g);
          V img;
          try {
            img = inst_.act(w, v);
          } catch (const TruncationError&) {
            truncated = true;
            continue;
          }
          if (!domain.count(img)) {
            truncated = true;  // the orbit continues past the tested range
            continue;
          }
          if (out.insert(img).second) queue.push_back(img);
        }
    }
    return out;
  }

  bool connected_within(const VSet& set) const {
    if (set.empty()) return true;
    VSet seen;
    std::vector<V> queue{*set.begin()};
    seen.insert(*set.begin());
    while (!queue.empty()) {
      V v = queue.back();
      queue.pop_back();
      for (const V& w : inst_.neighbors(v))
        if (set.count(w) && seen.insert(w).second) queue.push_back(w);
    }
    return seen.size() == set.size();
  }

  void build(int depth) {
    Level l0;
    l0.W.insert(v0_);
    l0.N.insert(v0_);
    l0.O.push_back(v0_);
    if (inst_.family_nontrivial(v0_)) l0.h_gens.push_back(inst_.family_generator(v0_));
    levels_.push_back(std::move(l0));

    for (int i = 1; i <= depth; ++i) {
      const Level& prev = levels_.back();
      Level lv;
      lv.truncated = prev.truncated;
      // N_i = 1-neighborhood of W_{i-1} inside the truncation.
      lv.N = prev.W;
      for (const V& v : prev.W)
        for (const V& w : inst_.neighbors(v))
          if (universe_.count(w)) lv.N.insert(w);
      for (const V& v : lv.N)
        if (!prev.W.count(v)) lv.L.insert(v);
      // H_i = < R_v : v in N_i >.
      std::set<Word, WordLess> gens(prev.h_gens.begin(), prev.h_gens.end());
      for (const V& v : lv.N)
        if (inst_.family_nontrivial(v)) gens.insert(inst_.family_generator(v));
      lv.h_gens.assign(gens.begin(), gens.end());
      // O_i: lexicographically minimal representative of each H_{i-1}-orbit on L_i.
      VSet unassigned = lv.L;
      while (!unassigned.empty()) {
        V rep = *unassigned.begin();
        VSet seed;
        seed.insert(rep);
        VSet orbit = closure(seed, prev.h_gens, lv.L, lv.truncated);
        // rep is the Less-minimal member: unassigned is ordered and orbits are
        // removed whole, so the first remaining element is minimal in its orbit.
        lv.O.push_back(rep);
        for (const V& v : orbit) unassigned.erase(v);
      }
      // W_i = H_i . N_i (inner approximation on the truncation).
      lv.W = closure(lv.N, lv.h_gens, universe_, lv.truncated);
      lv.connected = connected_within(lv.W);
      levels_.push_back(std::move(lv));
    }
  }
};

// ---- free product words, syllables, pivots ----

template <class Inst>
struct FpAlphabet {
  using V = typename Inst::Vertex;
  struct Entry {
    V vertex;
    int level;
    Word generator;
    int order;  // 0 = infinite
  };
  std::vector<Entry> entries;  // sorted by Inst::Less on vertex
};

template <class Inst>
FpAlphabet<Inst> fp_alphabet(const WindmillBuilder<Inst>& wb) {
  FpAlphabet<Inst> a;
  for (auto [v, level] : wb.all_reps()) {
    if (!wb.inst().family_nontrivial(v)) continue;
    a.entries.push_back({v, level, wb.inst().family_generator(v), wb.inst().family_order(v)});
  }
  return a;
}

template <class Inst>
std::string fp_word_str(const Inst& inst, const FpWord<typename Inst::Vertex>& w) {
  std::string s;
  for (const auto& l : w) {
    if (!s.empty()) s += " ";
    s += "(" + inst.vertex_label(l.vertex) + ")^" + std::to_string(l.exp);
  }
  return s.empty() ? "1" : s;
}

// Canonical form: merge adjacent letters at the same vertex, reduce exponents
// mod the factor order, drop trivial letters. Implements the syllable
// normalization of free product words.
template <class Inst>
FpWord<typename Inst::Vertex> fp_normalize(const Inst& inst,
                                           const FpWord<typename Inst::Vertex>& w) {
  using V = typename Inst::Vertex;
  typename Inst::Less less;
  FpWord<V> out;
  auto same = [&](const V& a, const V& b) { return !less(a, b) && !less(b, a); };
  auto canon = [&](const FpLetter<V>& l) {
    FpLetter<V> c = l;
    int ord = inst.family_order(l.vertex);
    if (ord > 0) {
      c.exp %= ord;
      if (c.exp < 0) c.exp += ord;
    }
    return c;
  };
  for (const auto& raw : w) {
    FpLetter<V> l = canon(raw);
    if (l.exp == 0) continue;
    if (!out.empty() && same(out.back().vertex, l.vertex)) {
      out.back().exp += l.exp;
      out.back() = canon(out.back());
      if (out.back().exp == 0) out.pop_back();
    } else {
      out.push_back(l);
    }
  }
  return out;
}

template <class V>
int fp_level(const FpWord<V>& w) {
  int level = 0;
  for (const auto& l : w) level = std::max(level, l.level);
  return level;
}

// Syllables with respect to the top level: maximal runs of lower-level letters
// form single F_{i-1} syllables; top-level letters stand alone.
template <class V>
struct Syllable {
  bool lower;                     // element of F_{i-1}
  std::size_t begin, end;         // letter range [begin, end)
  V vertex;                       // defined when !lower
  long long exp = 0;              // defined when !lower
};

template <class Inst>
std::vector<Syllable<typename Inst::Vertex>> fp_syllables(
    const Inst& inst, const FpWord<typename Inst::Vertex>& w) {
  using V = typename Inst::Vertex;
  std::vector<Syllable<V>> out;
  int top = fp_level(w);
  std::size_t i = 0;
  while (i < w.size()) {
    if (w[i].level == top && top > 0) {
      out.push_back({false, i, i + 1, w[i].vertex, w[i].exp});
      ++i;
    } else {
      std::size_t j = i;
      while (j < w.size() && (w[j].level < top || top == 0)) ++j;
      Syllable<V> s;
      s.lower = true;
      s.begin = i;
      s.end = j;
      if (i < w.size()) s.vertex = w[i].vertex;
      out.push_back(s);
      i = j;
    }
  }
  return out;
}

// Image of an fp word in the ambient group.
template <class Inst>
Word fp_image(const Inst& inst, const FpWord<typename Inst::Vertex>& w, std::size_t begin,
              std::size_t end) {
  const GroupSig& sig = inst.group_sig();
  Word out;
  for (std::size_t i = begin; i < end && i < w.size(); ++i)
    out = word_mul(sig, out, word_pow(sig, inst.family_generator(w[i].vertex), w[i].exp));
  return out;
}

template <class Inst>
Word fp_image(const Inst& inst, const FpWord<typename Inst::Vertex>& w) {
  return fp_image(inst, w, 0, w.size());
}

// Pivot points: for each top-level syllable h_j fixing v_j, the vertex
// h_1 ... h_{j-1} v_j. Lower-level syllables contribute no pivot.
template <class Inst>
std::vector<typename Inst::Vertex> pivot_points(const Inst& inst,
                                                const FpWord<typename Inst::Vertex>& w) {
  using V = typename Inst::Vertex;
  std::vector<V> out;
  if (fp_level(w) == 0) return out;  // words of F_0 have no pivots
  auto syls = fp_syllables(inst, w);
  for (const auto& s : syls) {
    if (s.lower) continue;
    Word prefix = fp_image(inst, w, 0, s.begin);
    out.push_back(inst.act(prefix, s.vertex));
  }
  return out;
}

}  // namespace windmill
