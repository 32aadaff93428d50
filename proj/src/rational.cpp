#include "rational.hpp"

#include <cstdlib>

#include "errors.hpp"

namespace windmill {

namespace {

long long parse_ll(const std::string& s) {
  if (s.empty()) throw InputError("empty integer in rational literal");
  std::size_t pos = 0;
  long long v = 0;
  try {
    v = std::stoll(s, &pos);
  } catch (const std::exception&) {
    throw InputError("bad integer in rational literal: '" + s + "'");
  }
  if (pos != s.size()) throw InputError("trailing junk in rational literal: '" + s + "'");
  return v;
}

}  // namespace

Rat parse_rat(const std::string& text) {
  auto slash = text.find('/');
  if (slash == std::string::npos) return Rat(parse_ll(text));
  long long p = parse_ll(text.substr(0, slash));
  long long q = parse_ll(text.substr(slash + 1));
  if (q == 0) throw InputError("zero denominator in rational literal: '" + text + "'");
  return Rat(p, q);
}

std::string format_rat(const Rat& r) {
  if (r.denominator() == 1) return std::to_string(r.numerator());
  return std::to_string(r.numerator()) + "/" + std::to_string(r.denominator());
}

}  // namespace windmill
