#pragma once

#include <compare>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace windmill {

// A free product of cyclic groups <g_0 | g_0^{p_0}> * <g_1 | p_1> * ...
// Order 0 means infinite order. Generator names are single lowercase letters;
// the uppercase letter is the inverse.
struct GroupSig {
  std::vector<int> orders;
  std::vector<char> names;

  static GroupSig free_group(int rank);                     // all orders 0, names a, b, ...
  static GroupSig cyclics(const std::vector<int>& orders);  // names a, b, ... (x, y for rank 2 by request)
  int arity() const { return static_cast<int>(orders.size()); }
  bool operator==(const GroupSig&) const = default;
};

struct Letter {
  int gen;
  long long exp;  // normalized: order 0 -> exp != 0; order p -> 1 <= exp < p
  bool operator==(const Letter&) const = default;
};

// Words are always stored in normal form: adjacent letters have distinct
// generators and every exponent is canonical. The empty word is the identity.
struct Word {
  std::vector<Letter> letters;
  bool is_identity() const { return letters.empty(); }
  bool operator==(const Word&) const = default;
};

// Deterministic total order (length, then letters lexicographically).
std::strong_ordering compare_words(const Word& a, const Word& b);
struct WordLess {
  bool operator()(const Word& a, const Word& b) const { return compare_words(a, b) < 0; }
};

Word word_letter(const GroupSig& sig, int gen, long long exp);
Word word_mul(const GroupSig& sig, const Word& a, const Word& b);
Word word_inv(const GroupSig& sig, const Word& a);
Word word_pow(const GroupSig& sig, const Word& a, long long k);
Word word_conj(const GroupSig& sig, const Word& g, const Word& h);  // g h g^-1

// Sum over letters of the geodesic cost in the cyclic factor
// (order 0: |exp|; order p: min(exp, p - exp)).
long long word_length(const GroupSig& sig, const Word& a);

// "" for the identity; otherwise letters in order, lowercase for a positive
// power repeated, uppercase for negative powers (infinite order only), e.g.
// a^3 b^-2 -> "aaaBB"; in Z/3, x^2 -> "xx".
std::string word_str(const GroupSig& sig, const Word& a);
Word parse_word(const GroupSig& sig, const std::string& text);

// Applies the generator-index-preserving homomorphism into another signature
// (e.g. F_2 -> Z/2 * Z/2) and renormalizes.
Word word_map(const GroupSig& from, const GroupSig& to, const Word& a);

}  // namespace windmill
