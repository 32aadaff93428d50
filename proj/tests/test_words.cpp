#include <doctest.h>

#include "words.hpp"

using namespace windmill;

TEST_CASE("free group reduction") {
  GroupSig f2 = GroupSig::free_group(2);
  Word w = parse_word(f2, "abBA");
  CHECK(w.is_identity());
  Word v = parse_word(f2, "abAB");
  CHECK(!v.is_identity());
  CHECK(word_str(f2, v) == "abAB");
  CHECK(word_mul(f2, v, word_inv(f2, v)).is_identity());
  CHECK(word_length(f2, parse_word(f2, "aaB")) == 3);
}

TEST_CASE("cyclic exponents reduce mod the order") {
  GroupSig z3z3 = GroupSig::cyclics({3, 3});
  z3z3.names = {'x', 'y'};
  Word x = word_letter(z3z3, 0, 1);
  Word x3 = word_pow(z3z3, x, 3);
  CHECK(x3.is_identity());
  Word w = parse_word(z3z3, "xxyyy");
  CHECK(word_str(z3z3, w) == "xx");
  CHECK(word_length(z3z3, w) == 1);  // x^2 = x^-1 costs one letter
  Word conj = word_conj(z3z3, parse_word(z3z3, "y"), x);
  CHECK(word_str(z3z3, conj) == "yxyy");
}

TEST_CASE("quotient map to the dihedral target") {
  GroupSig f2 = GroupSig::free_group(2);
  GroupSig d_inf = GroupSig::cyclics({2, 2});
  Word kernel_elt = parse_word(f2, "aa");
  CHECK(word_map(f2, d_inf, kernel_elt).is_identity());
  Word off = parse_word(f2, "ab");
  CHECK(!word_map(f2, d_inf, off).is_identity());
  // b a^2 b^-1 a^-2 lies in the kernel of F2 -> Z/2 * Z/2
  Word comm = parse_word(f2, "baaBAA");
  CHECK(word_map(f2, d_inf, comm).is_identity());
  CHECK(!comm.is_identity());
}

TEST_CASE("deterministic word order") {
  GroupSig f2 = GroupSig::free_group(2);
  Word a = parse_word(f2, "a");
  Word b = parse_word(f2, "ab");
  CHECK(compare_words(a, b) < 0);  // shorter first
  CHECK(compare_words(a, a) == 0);
}
