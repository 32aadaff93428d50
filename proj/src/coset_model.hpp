#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "rational.hpp"
#include "words.hpp"

namespace windmill {

// Cosets g<s> and g<t> in a two-generator free product of cyclic groups.
// side 0 = first generator's subgroup, side 1 = second. The rep is canonical:
// it never ends in a letter of its own side's generator.
struct Coset {
  int side = 0;
  Word rep;
  bool operator==(const Coset&) const = default;
};

struct CosetLess {
  bool operator()(const Coset& a, const Coset& b) const {
    if (a.side != b.side) return a.side < b.side;
    return compare_words(a.rep, b.rep) < 0;
  }
};

// The tree of the splitting <s> * <t>: vertices are cosets, and g<s> is
// adjacent to h<t> exactly when the cosets intersect. Everything is computed
// from reduced words, so the model is exact at any distance from the base.
class CosetModel {
 public:
  explicit CosetModel(GroupSig sig);

  const GroupSig& sig() const { return sig_; }

  Coset canonical(int side, const Word& g) const;
  Coset act(const Word& g, const Coset& v) const;
  Coset base(int side) const { return Coset{side, Word{}}; }

  int distance(const Coset& x, const Coset& z) const;
  std::vector<Coset> geodesic(const Coset& x, const Coset& z) const;  // unique in a tree
  bool on_geodesic(const Coset& y, const Coset& x, const Coset& z) const;

  // Generator of the (cyclic) full stabilizer of v: rep * gen_side * rep^-1.
  Word stabilizer_generator(const Coset& v) const;
  int stabilizer_order(const Coset& v) const {
    return sig_.orders[static_cast<std::size_t>(v.side)];
  }

  // Ball of the coset tree around v0. exp_bound caps block exponents when the
  // corresponding factor is infinite (finite factors enumerate fully).
  std::vector<Coset> ball(const Coset& v0, int radius, int exp_bound) const;
  std::vector<Coset> neighbors(const Coset& v, int exp_bound) const;

  // Gate position of the line of beta on the line of alpha, measured in powers
  // of alpha's generator from alpha's rep: the nearest-point projection in the
  // Cayley tree of every vertex of line(beta) is the single vertex
  // rep_alpha * s^offset. Throws on alpha == beta.
  long long gate_offset(const Coset& alpha, const Coset& beta) const;

  std::string label(const Coset& v) const;
  Coset parse_label(const std::string& text) const;

 private:
  GroupSig sig_;
};

}  // namespace windmill
