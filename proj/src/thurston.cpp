#include "thurston.hpp"

#include <algorithm>
#include <cctype>
#include <set>

#include "errors.hpp"

namespace windmill {

namespace {

long long checked_mul(long long x, long long y) {
  long long out;
  if (__builtin_mul_overflow(x, y, &out)) throw InputError("integer overflow in matrix arithmetic");
  return out;
}

long long checked_add(long long x, long long y) {
  long long out;
  if (__builtin_add_overflow(x, y, &out)) throw InputError("integer overflow in matrix arithmetic");
  return out;
}

}  // namespace

Mat2 mat_mul(const Mat2& x, const Mat2& y) {
  Mat2 out;
  out.a = checked_add(checked_mul(x.a, y.a), checked_mul(x.b, y.c));
  out.b = checked_add(checked_mul(x.a, y.b), checked_mul(x.b, y.d));
  out.c = checked_add(checked_mul(x.c, y.a), checked_mul(x.d, y.c));
  out.d = checked_add(checked_mul(x.c, y.b), checked_mul(x.d, y.d));
  return out;
}

long long mat_det(const Mat2& x) {
  return checked_add(checked_mul(x.a, x.d), -checked_mul(x.b, x.c));
}

long long mat_trace(const Mat2& x) { return checked_add(x.a, x.d); }

Mat2 mat_pow(const Mat2& x, long long k) {
  Mat2 base = x;
  if (k < 0) {
    if (mat_det(x) != 1) throw InputError("inverse needs determinant 1");
    base = Mat2{x.d, -x.b, -x.c, x.a};
    k = -k;
  }
  Mat2 out;
  for (long long i = 0; i < k; ++i) out = mat_mul(out, base);
  return out;
}

Mat2 projectivize(const Mat2& x) {
  long long lead[] = {x.a, x.b, x.c, x.d};
  for (long long v : lead) {
    if (v > 0) return x;
    if (v < 0) return Mat2{-x.a, -x.b, -x.c, -x.d};
  }
  return x;
}

bool mat_proj_equal(const Mat2& x, const Mat2& y) { return projectivize(x) == projectivize(y); }

std::string mat_str(const Mat2& x) {
  return "[[" + std::to_string(x.a) + "," + std::to_string(x.b) + "],[" + std::to_string(x.c) +
         "," + std::to_string(x.d) + "]]";
}

std::string nt_class_str(NTClass c) {
  switch (c) {
    case NTClass::Periodic: return "periodic";
    case NTClass::Reducible: return "reducible";
    case NTClass::PseudoAnosov: return "pseudo_anosov";
  }
  return "?";
}

NTClass classify_nt(const Mat2& m) {
  if (mat_det(m) != 1) throw InputError("classification needs determinant 1");
  long long t = mat_trace(m);
  if (t < 0) t = -t;
  if (t < 2) return NTClass::Periodic;
  if (t == 2) return NTClass::Reducible;
  return NTClass::PseudoAnosov;
}

long long squarefree_part(long long n) {
  if (n < 1) throw InputError("squarefree part needs a positive integer");
  long long rest = n, core = 1;
  for (long long p = 2; p * p <= rest; ++p) {
    int mult = 0;
    while (rest % p == 0) {
      rest /= p;
      ++mult;
    }
    if (mult % 2 == 1) core *= p;
  }
  return core * rest;
}

QuadraticNumber qn_make(const Rat& a, const Rat& b, long long d) {
  if (d < 1) throw InputError("quadratic field discriminant must be positive");
  QuadraticNumber out;
  if (b == Rat(0)) {
    out.a = a;
    return out;
  }
  // Pull the square kernel of d into b.
  long long core = squarefree_part(d);
  long long square = d / core;
  long long root = 1;
  while (root * root < square) ++root;
  if (core == 1) {  // d was a perfect square, the value is rational
    out.a = a + b * Rat(root);
    return out;
  }
  out.a = a;
  out.b = b * Rat(root);
  out.d = core;
  return out;
}

QuadraticNumber qn_from_rat(const Rat& a) { return QuadraticNumber{a, Rat(0), 1}; }

namespace {

long long join_field(const QuadraticNumber& x, const QuadraticNumber& y) {
  if (x.d == y.d) return x.d;
  if (x.d == 1) return y.d;
  if (y.d == 1) return x.d;
  throw InputError("arithmetic across distinct quadratic fields");
}

}  // namespace

QuadraticNumber qn_add(const QuadraticNumber& x, const QuadraticNumber& y) {
  long long d = join_field(x, y);
  return qn_make(x.a + y.a, x.b + y.b, d);
}

QuadraticNumber qn_sub(const QuadraticNumber& x, const QuadraticNumber& y) {
  long long d = join_field(x, y);
  return qn_make(x.a - y.a, x.b - y.b, d);
}

QuadraticNumber qn_mul(const QuadraticNumber& x, const QuadraticNumber& y) {
  long long d = join_field(x, y);
  return qn_make(x.a * y.a + x.b * y.b * Rat(d), x.a * y.b + x.b * y.a, d);
}

QuadraticNumber qn_div(const QuadraticNumber& x, const QuadraticNumber& y) {
  long long d = join_field(x, y);
  Rat norm = y.a * y.a - y.b * y.b * Rat(d);
  if (norm == Rat(0)) throw InputError("division by zero quadratic number");
  QuadraticNumber conj{y.a, -y.b, y.d};
  QuadraticNumber num = qn_mul(x, conj);
  return qn_make(num.a / norm, num.b / norm, d);
}

std::string qn_str(const QuadraticNumber& x) {
  if (x.b == Rat(0)) return format_rat(x.a);
  return format_rat(x.a) + " + " + format_rat(x.b) + "*sqrt(" + std::to_string(x.d) + ")";
}

TwistWord parse_twist_word(const std::string& text) {
  TwistWord w;
  std::size_t i = 0;
  while (i < text.size()) {
    char ch = text[i];
    if (std::isspace(static_cast<unsigned char>(ch)) || ch == '*') {
      ++i;
      continue;
    }
    if (ch != 'c' && ch != 'd') throw InputError(std::string("unknown twist symbol '") + ch + "'");
    ++i;
    long long exp = 1;
    if (i < text.size() && (text[i] == '^' || text[i] == '-' || std::isdigit(static_cast<unsigned char>(text[i])))) {
      if (text[i] == '^') ++i;
      bool neg = false;
      if (i < text.size() && text[i] == '-') {
        neg = true;
        ++i;
      }
      long long v = 0;
      bool any = false;
      while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) {
        v = v * 10 + (text[i] - '0');
        ++i;
        any = true;
      }
      if (!any) throw InputError("missing exponent digits in twist word");
      exp = neg ? -v : v;
    }
    if (exp == 0) throw InputError("zero exponent in twist word");
    w.letters.emplace_back(ch, exp);
  }
  return w;
}

std::string twist_word_str(const TwistWord& w) {
  std::string s;
  for (auto [sym, exp] : w.letters) {
    if (!s.empty()) s += " ";
    s += sym;
    if (exp != 1) s += "^" + std::to_string(exp);
  }
  return s.empty() ? "1" : s;
}

Mat2 derivative(const TwistWord& w, long long n) {
  if (n <= 0) throw InputError("intersection number must be positive");
  Mat2 out;
  for (auto [sym, exp] : w.letters) {
    Mat2 gen;
    if (sym == 'c')
      gen = Mat2{1, n, 0, 1};
    else if (sym == 'd')
      gen = Mat2{1, 0, -n, 1};
    else
      throw InputError(std::string("unknown twist symbol '") + sym + "'");
    out = mat_mul(out, mat_pow(gen, exp));
  }
  return out;
}

QuadraticNumber stretch_factor(const Mat2& m) {
  if (classify_nt(m) != NTClass::PseudoAnosov)
    throw InputError("stretch factor is defined for pseudo-Anosov matrices only");
  long long t = mat_trace(m);
  if (t < 0) t = -t;
  return qn_make(Rat(t, 2), Rat(1, 2), t * t - 4);
}

IndependenceCertificate normal_independence(const TwistWord& f1, const TwistWord& f2, long long n) {
  Mat2 m1 = derivative(f1, n);
  Mat2 m2 = derivative(f2, n);
  if (classify_nt(m1) != NTClass::PseudoAnosov || classify_nt(m2) != NTClass::PseudoAnosov)
    throw InputError("normal independence needs two pseudo-Anosov inputs");
  IndependenceCertificate cert;
  cert.lambda1 = stretch_factor(m1);
  cert.lambda2 = stretch_factor(m2);
  cert.field1 = cert.lambda1.d;
  cert.field2 = cert.lambda2.d;
  if (cert.field1 != cert.field2) {
    cert.independent = true;
    cert.reasoning = "stretch factors generate distinct quadratic fields Q(sqrt(" +
                     std::to_string(cert.field1) + ")) and Q(sqrt(" + std::to_string(cert.field2) +
                     ")); an irrational element of both would force the fields to coincide, so no "
                     "conjugate of a power of one equals a power of the other";
  } else {
    cert.inconclusive = true;
    cert.reasoning = "stretch factors lie in the same quadratic field; the field criterion is "
                     "one-sided and certifies nothing here";
  }
  return cert;
}

HomologyRep standard_homology(int genus) {
  if (genus < 1) throw InputError("genus must be positive");
  HomologyRep rep;
  rep.genus = genus;
  int n = 2 * genus;
  rep.form.assign(static_cast<std::size_t>(n), IVec(static_cast<std::size_t>(n), 0));
  for (int i = 0; i < genus; ++i) {
    rep.form[static_cast<std::size_t>(i)][static_cast<std::size_t>(genus + i)] = 1;
    rep.form[static_cast<std::size_t>(genus + i)][static_cast<std::size_t>(i)] = -1;
  }
  return rep;
}

IMat identity_matrix(int n) {
  IMat out(static_cast<std::size_t>(n), IVec(static_cast<std::size_t>(n), 0));
  for (int i = 0; i < n; ++i) out[static_cast<std::size_t>(i)][static_cast<std::size_t>(i)] = 1;
  return out;
}

IMat mat_mul_n(const IMat& x, const IMat& y) {
  std::size_t n = x.size();
  IMat out(n, IVec(n, 0));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t k = 0; k < n; ++k) {
      if (x[i][k] == 0) continue;
      for (std::size_t j = 0; j < n; ++j)
        out[i][j] = checked_add(out[i][j], checked_mul(x[i][k], y[k][j]));
    }
  return out;
}

bool preserves_form(const IMat& m, const IMat& j) {
  std::size_t n = m.size();
  // m^T j m == j
  IMat mt(n, IVec(n, 0));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t k = 0; k < n; ++k) mt[i][k] = m[k][i];
  return mat_mul_n(mat_mul_n(mt, j), m) == j;
}

IMat homology_twist_action(const HomologyRep& rep,
                           const std::vector<std::pair<IVec, long long>>& twists) {
  std::size_t n = rep.form.size();
  if (n == 0) throw InputError("empty homology representation");
  // The form must be nondegenerate mod nothing; integer symplectic forms used
  // here have determinant 1, so a zero row is the degeneracy witness.
  for (const auto& row : rep.form) {
    bool nonzero = false;
    for (long long v : row) nonzero = nonzero || v != 0;
    if (!nonzero) throw InputError("degenerate intersection form");
  }
  IMat total = identity_matrix(static_cast<int>(n));
  for (const auto& [c, k] : twists) {
    if (c.size() != n) throw InputError("curve class has wrong rank");
    // T(x) = x + k w(c, x) c, i.e. M = I + k c (c^T J).
    IVec cj(n, 0);
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t i = 0; i < n; ++i)
        cj[j] = checked_add(cj[j], checked_mul(c[i], rep.form[i][j]));
    IMat m = identity_matrix(static_cast<int>(n));
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j)
        m[i][j] = checked_add(m[i][j], checked_mul(k, checked_mul(c[i], cj[j])));
    total = mat_mul_n(total, m);
  }
  if (!preserves_form(total, rep.form))
    throw InputError("twist action failed to preserve the symplectic form");
  return total;
}

CongruenceCertificate congruence_certificate(long long p1, long long p2, const HomologyRep& rep,
                                             const IVec& c_class, int m_lo, int m_hi) {
  bool all_zero = true;
  for (long long v : c_class) all_zero = all_zero && v == 0;
  if (all_zero) throw InputError("congruence certificate needs a nonzero curve class");
  if (p1 == p2) throw InputError("the two primes must be distinct");

  CongruenceCertificate cert;
  cert.p1 = p1;
  cert.p2 = p2;
  cert.m_lo = m_lo;
  cert.m_hi = m_hi;

  std::size_t n = rep.form.size();
  IVec zero(n, 0);
  // f = T_c T_d^-1 with d separating: the separating factor acts trivially.
  IMat f_action = homology_twist_action(rep, {{c_class, 1}, {zero, -1}});
  IMat f_power = identity_matrix(static_cast<int>(n));
  for (long long i = 0; i < p1; ++i) f_power = mat_mul_n(f_power, f_action);
  IMat transvection_power = homology_twist_action(rep, {{c_class, p1}});
  cert.power_matches_transvection = f_power == transvection_power;

  auto in_level = [&](const IMat& m, long long mod) {
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) {
        long long want = i == j ? 1 : 0;
        if (((m[i][j] - want) % mod + mod) % mod != 0) return false;
      }
    return true;
  };

  IMat power1 = homology_twist_action(rep, {{c_class, p1}});
  IMat power2 = homology_twist_action(rep, {{c_class, p2}});
  cert.pass = true;
  cert.no_common_level = true;
  for (long long m = m_lo; m <= m_hi; ++m) {
    bool member1 = in_level(power1, m);
    bool member2 = in_level(power2, m);
    bool want1 = p1 % m == 0;
    bool want2 = p2 % m == 0;
    if (member1 != want1 || member2 != want2) {
      cert.pass = false;
      ++cert.violations;
      if (cert.violating_m.size() < 16) cert.violating_m.push_back(m);
    }
    if (member1 && member2) cert.no_common_level = false;
  }
  return cert;
}

namespace {

DihedralElement dihedral_mul(int g, const DihedralElement& x, const DihedralElement& y) {
  // (r^a k^e f^s)(r^b k^d f^t) = r^{a + (e ? -b : b)} k^{e xor d} f^{s+t}.
  DihedralElement out;
  long long b = x.ref ? -y.rot : y.rot;
  out.rot = ((x.rot + b) % g + g) % g;
  out.ref = x.ref != y.ref;
  out.fpow = x.fpow + y.fpow;
  return out;
}

DihedralElement dihedral_pow(int g, const DihedralElement& x, long long k) {
  DihedralElement out;
  DihedralElement base = x;
  long long reps = k;
  if (reps < 0) {
    // inverse: (r^a k^e f^s)^-1
    base = x.ref ? DihedralElement{x.rot, true, -x.fpow}
                 : DihedralElement{((-x.rot) % g + g) % g, false, -x.fpow};
    reps = -reps;
  }
  for (long long i = 0; i < reps; ++i) out = dihedral_mul(g, out, base);
  return out;
}

using Perm = std::vector<int>;

Perm perm_mul(const Perm& x, const Perm& y) {  // (x*y)(i) = x(y(i))
  Perm out(x.size());
  for (std::size_t i = 0; i < x.size(); ++i) out[i] = x[static_cast<std::size_t>(y[i])];
  return out;
}

Perm perm_inv(const Perm& x) {
  Perm out(x.size());
  for (std::size_t i = 0; i < x.size(); ++i) out[static_cast<std::size_t>(x[i])] = static_cast<int>(i);
  return out;
}

Perm perm_pow(const Perm& x, long long k) {
  Perm base = k < 0 ? perm_inv(x) : x;
  long long reps = k < 0 ? -k : k;
  Perm out(x.size());
  for (std::size_t i = 0; i < x.size(); ++i) out[i] = static_cast<int>(i);
  for (long long i = 0; i < reps; ++i) out = perm_mul(out, base);
  return out;
}

}  // namespace

DihedralReport dihedral_power_commutator(int g, long long n) {
  if (g < 3) throw InputError("dihedral construction needs g >= 3");
  DihedralReport rep;
  rep.g = g;
  rep.n = n;

  DihedralElement r{1, false, 0};
  DihedralElement h{0, true, 1};  // h = k f, f central
  DihedralElement hn = dihedral_pow(g, h, n);
  DihedralElement commutator =
      dihedral_mul(g, dihedral_mul(g, r, hn), dihedral_mul(g, dihedral_pow(g, r, -1), dihedral_pow(g, h, -n)));
  rep.symbolic = commutator;

  DihedralElement want = n % 2 == 0 ? DihedralElement{0, false, 0} : DihedralElement{2 % g, false, 0};
  rep.expected = commutator == want;
  if (n % 2 == 0) {
    DihedralElement fn{0, false, n};
    rep.even_power_is_f_power = hn == fn;
  }

  // Cross-check on the vertices of a 2g-gon: r rotates by 2, k reflects,
  // f is the antipodal map (central, kills the f-exponent parity only).
  int m = 2 * g;
  Perm pr(static_cast<std::size_t>(m)), pk(static_cast<std::size_t>(m)), pf(static_cast<std::size_t>(m));
  for (int i = 0; i < m; ++i) {
    pr[static_cast<std::size_t>(i)] = (i + 2) % m;
    pk[static_cast<std::size_t>(i)] = (m - 1 - i + m) % m;
    pf[static_cast<std::size_t>(i)] = (i + g) % m;
  }
  Perm ph = perm_mul(pk, pf);
  Perm phn = perm_pow(ph, n);
  Perm pcomm = perm_mul(perm_mul(pr, phn), perm_mul(perm_inv(pr), perm_inv(phn)));
  auto realize = [&](const DihedralElement& e) {
    Perm out = perm_pow(pr, e.rot);
    if (e.ref) out = perm_mul(out, pk);
    out = perm_mul(out, perm_pow(pf, e.fpow));
    return out;
  };
  rep.matches_permutation = pcomm == realize(commutator);
  return rep;
}

PartitionReport partition_compatible(const std::vector<std::vector<int>>& p1,
                                     const std::vector<std::vector<int>>& p2) {
  auto validate = [](const std::vector<std::vector<int>>& p, std::set<int>& rng) {
    for (const auto& block : p) {
      if (block.empty()) throw InputError("empty partition block");
      for (int x : block)
        if (!rng.insert(x).second) throw InputError("element repeated across partition blocks");
    }
  };
  std::set<int> set1, set2;
  validate(p1, set1);
  validate(p2, set2);
  if (set1 != set2) throw InputError("partitions do not cover the same set");

  auto subset = [](const std::vector<int>& a, const std::vector<int>& b) {
    std::set<int> bs(b.begin(), b.end());
    for (int x : a)
      if (!bs.count(x)) return false;
    return true;
  };
  PartitionReport rep;
  rep.compatible = true;
  auto one_direction = [&](const std::vector<std::vector<int>>& from,
                           const std::vector<std::vector<int>>& to, const char* tag) {
    for (const auto& block : from) {
      bool related = false;
      for (const auto& other : to)
        if (subset(block, other) || subset(other, block)) {
          related = true;
          break;
        }
      if (!related) {
        rep.compatible = false;
        if (rep.witness.empty()) {
          rep.witness = std::string(tag) + " block {";
          for (std::size_t i = 0; i < block.size(); ++i)
            rep.witness += (i ? "," : "") + std::to_string(block[i]);
          rep.witness += "} relates to no block of the other partition";
        }
      }
    }
  };
  one_direction(p1, p2, "first");
  one_direction(p2, p1, "second");
  return rep;
}

}  // namespace windmill
