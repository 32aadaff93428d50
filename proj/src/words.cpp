#include "words.hpp"

#include <algorithm>
#include <cctype>

#include "errors.hpp"

namespace windmill {

GroupSig GroupSig::free_group(int rank) {
  GroupSig s;
  for (int i = 0; i < rank; ++i) {
    s.orders.push_back(0);
    s.names.push_back(static_cast<char>('a' + i));
  }
  return s;
}

GroupSig GroupSig::cyclics(const std::vector<int>& orders) {
  GroupSig s;
  s.orders = orders;
  for (std::size_t i = 0; i < orders.size(); ++i) s.names.push_back(static_cast<char>('a' + i));
  return s;
}

namespace {

long long canon_exp(const GroupSig& sig, int gen, long long exp) {
  int p = sig.orders[static_cast<std::size_t>(gen)];
  if (p == 0) return exp;
  long long e = exp % p;
  if (e < 0) e += p;
  return e;
}

void push_letter(const GroupSig& sig, std::vector<Letter>& out, int gen, long long exp) {
  exp = canon_exp(sig, gen, exp);
  if (exp == 0) return;
  if (!out.empty() && out.back().gen == gen) {
    long long merged = canon_exp(sig, gen, out.back().exp + exp);
    out.pop_back();
    if (merged != 0) out.push_back({gen, merged});
    return;
  }
  out.push_back({gen, exp});
}

}  // namespace

std::strong_ordering compare_words(const Word& a, const Word& b) {
  if (a.letters.size() != b.letters.size())
    return a.letters.size() <=> b.letters.size();
  for (std::size_t i = 0; i < a.letters.size(); ++i) {
    if (a.letters[i].gen != b.letters[i].gen) return a.letters[i].gen <=> b.letters[i].gen;
    if (a.letters[i].exp != b.letters[i].exp) return a.letters[i].exp <=> b.letters[i].exp;
  }
  return std::strong_ordering::equal;
}

Word word_letter(const GroupSig& sig, int gen, long long exp) {
  if (gen < 0 || gen >= sig.arity()) throw InputError("generator index out of range");
  Word w;
  push_letter(sig, w.letters, gen, exp);
  return w;
}

Word word_mul(const GroupSig& sig, const Word& a, const Word& b) {
  Word out = a;
  for (const Letter& l : b.letters) push_letter(sig, out.letters, l.gen, l.exp);
  return out;
}

Word word_inv(const GroupSig& sig, const Word& a) {
  Word out;
  for (auto it = a.letters.rbegin(); it != a.letters.rend(); ++it)
    push_letter(sig, out.letters, it->gen, -it->exp);
  return out;
}

Word word_pow(const GroupSig& sig, const Word& a, long long k) {
  Word base = k < 0 ? word_inv(sig, a) : a;
  long long reps = k < 0 ? -k : k;
  Word out;
  for (long long i = 0; i < reps; ++i) out = word_mul(sig, out, base);
  return out;
}

Word word_conj(const GroupSig& sig, const Word& g, const Word& h) {
  return word_mul(sig, word_mul(sig, g, h), word_inv(sig, g));
}

long long word_length(const GroupSig& sig, const Word& a) {
  long long total = 0;
  for (const Letter& l : a.letters) {
    int p = sig.orders[static_cast<std::size_t>(l.gen)];
    if (p == 0)
      total += l.exp < 0 ? -l.exp : l.exp;
    else
      total += std::min(l.exp, p - l.exp);
  }
  return total;
}

std::string word_str(const GroupSig& sig, const Word& a) {
  std::string s;
  for (const Letter& l : a.letters) {
    char name = sig.names[static_cast<std::size_t>(l.gen)];
    if (l.exp > 0) {
      s.append(static_cast<std::size_t>(l.exp), name);
    } else {
      s.append(static_cast<std::size_t>(-l.exp),
               static_cast<char>(std::toupper(static_cast<unsigned char>(name))));
    }
  }
  return s;
}

Word parse_word(const GroupSig& sig, const std::string& text) {
  Word out;
  for (char c : text) {
    if (std::isspace(static_cast<unsigned char>(c))) continue;
    char lower = static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
    int gen = -1;
    for (int i = 0; i < sig.arity(); ++i)
      if (sig.names[static_cast<std::size_t>(i)] == lower) gen = i;
    if (gen < 0) throw InputError(std::string("unknown generator letter '") + c + "'");
    bool upper = std::isupper(static_cast<unsigned char>(c)) != 0;
    if (upper && sig.orders[static_cast<std::size_t>(gen)] == 0)
      push_letter(sig, out.letters, gen, -1);
    else if (upper)
      push_letter(sig, out.letters, gen, sig.orders[static_cast<std::size_t>(gen)] - 1);
    else
      push_letter(sig, out.letters, gen, 1);
  }
  return out;
}

Word word_map(const GroupSig& from, const GroupSig& to, const Word& a) {
  if (from.arity() != to.arity()) throw InputError("signature arity mismatch in homomorphism");
  Word out;
  for (const Letter& l : a.letters) out = word_mul(to, out, word_letter(to, l.gen, l.exp));
  return out;
}

}  // namespace windmill
