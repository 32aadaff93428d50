#pragma once

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "rational.hpp"

namespace windmill {

// Integer 2x2 matrix taken projectively (up to global sign); determinant 1
// before the sign quotient. Arithmetic is overflow-checked.
struct Mat2 {
  long long a = 1, b = 0, c = 0, d = 1;  // [[a, b], [c, d]]
  bool operator==(const Mat2&) const = default;
};

Mat2 mat_mul(const Mat2& x, const Mat2& y);
Mat2 mat_pow(const Mat2& x, long long k);  // k may be negative (det 1 inverse)
long long mat_det(const Mat2& x);
long long mat_trace(const Mat2& x);
Mat2 projectivize(const Mat2& x);  // canonical sign: first nonzero entry positive
bool mat_proj_equal(const Mat2& x, const Mat2& y);
std::string mat_str(const Mat2& x);

enum class NTClass { Periodic, Reducible, PseudoAnosov };
std::string nt_class_str(NTClass c);

// |trace| < 2 periodic, = 2 reducible, > 2 pseudo-Anosov. Requires det 1.
NTClass classify_nt(const Mat2& m);

// a + b sqrt(d) with d squarefree and positive; b == 0 is stored with d == 1.
struct QuadraticNumber {
  Rat a{0};
  Rat b{0};
  long long d = 1;
  bool operator==(const QuadraticNumber&) const = default;
};

QuadraticNumber qn_make(const Rat& a, const Rat& b, long long d);  // canonicalizes
QuadraticNumber qn_add(const QuadraticNumber& x, const QuadraticNumber& y);
QuadraticNumber qn_sub(const QuadraticNumber& x, const QuadraticNumber& y);
QuadraticNumber qn_mul(const QuadraticNumber& x, const QuadraticNumber& y);
QuadraticNumber qn_div(const QuadraticNumber& x, const QuadraticNumber& y);
QuadraticNumber qn_from_rat(const Rat& a);
std::string qn_str(const QuadraticNumber& x);

long long squarefree_part(long long n);  // n >= 1, by trial factorization

// Word in the twist generators about two curves; 'c' and 'd' symbols.
struct TwistWord {
  std::vector<std::pair<char, long long>> letters;  // (symbol, exponent != 0)
};
TwistWord parse_twist_word(const std::string& text);  // "c d^-1", "cd-1" style
std::string twist_word_str(const TwistWord& w);

// Derivative of the twist word at intersection number n:
// Dc = [[1, n], [0, 1]], Dd = [[1, 0], [-n, 1]].
Mat2 derivative(const TwistWord& w, long long n);

// Leading eigenvalue (t + sqrt(t^2 - 4)) / 2 of a pseudo-Anosov matrix.
QuadraticNumber stretch_factor(const Mat2& m);

struct IndependenceCertificate {
  bool independent = false;
  bool inconclusive = false;
  QuadraticNumber lambda1, lambda2;
  long long field1 = 1, field2 = 1;  // squarefree discriminants
  std::string reasoning;
};

// Distinct quadratic fields certify that no powers are conjugate; equal fields
// stay inconclusive, never "dependent".
IndependenceCertificate normal_independence(const TwistWord& f1, const TwistWord& f2, long long n);

using IVec = std::vector<long long>;
using IMat = std::vector<std::vector<long long>>;

// Rank 2g lattice with symplectic form J; curve classes as integer vectors
// (the zero vector is a separating class).
struct HomologyRep {
  int genus = 0;
  IMat form;
  std::map<std::string, IVec> classes;
};

// Standard form: <e_i, e_{g+i}> = +1.
HomologyRep standard_homology(int genus);

IMat identity_matrix(int n);
IMat mat_mul_n(const IMat& x, const IMat& y);
bool preserves_form(const IMat& m, const IMat& j);

// Composition of transvections x -> x + k w(c, x) c, with w(x,y) = x^T J y.
// The sign convention is fixed so the twist about e_1 in genus 1 coordinates
// is [[1, 1], [0, 1]].
IMat homology_twist_action(const HomologyRep& rep,
                           const std::vector<std::pair<IVec, long long>>& twists);

struct CongruenceCertificate {
  long long p1 = 0, p2 = 0;
  int m_lo = 2, m_hi = 1000;
  bool power_matches_transvection = false;  // f^p acts as the p-th transvection power
  bool pass = false;                        // membership iff divisibility, all m
  long long violations = 0;
  std::vector<long long> violating_m;
  bool no_common_level = false;  // no m > 1 contains both powers
};

// Level-m membership of the p-th twist powers: in the kernel iff m divides p.
CongruenceCertificate congruence_certificate(long long p1, long long p2, const HomologyRep& rep,
                                             const IVec& c_class, int m_lo = 2, int m_hi = 1000);

// Element of D_2g x <central f>: r^rot k^ref f^fpow.
struct DihedralElement {
  long long rot = 0;
  bool ref = false;
  long long fpow = 0;
  bool operator==(const DihedralElement&) const = default;
};

struct DihedralReport {
  int g = 0;
  long long n = 0;
  DihedralElement symbolic;       // [r, h^n] with h = k f
  bool matches_permutation = false;  // cross-check in the 2g-gon representation
  bool expected = false;          // r^2 for odd n, identity for even n
  bool even_power_is_f_power = false;  // h^n = f^n for even n
};

DihedralReport dihedral_power_commutator(int g, long long n);

// Mutual compatibility: every block of each partition contains or is contained
// in some block of the other.
struct PartitionReport {
  bool compatible = false;
  std::string witness;  // offending block when incompatible
};
PartitionReport partition_compatible(const std::vector<std::vector<int>>& p1,
                                     const std::vector<std::vector<int>>& p2);

// No swap of the two multicurve families can exist when their sizes differ.
inline bool swap_obstruction(std::size_t size_a, std::size_t size_b) { return size_a != size_b; }

}  // namespace windmill
