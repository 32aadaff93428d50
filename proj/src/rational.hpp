#pragma once

#include <boost/rational.hpp>
#include <string>

namespace windmill {

// Exact rational arithmetic everywhere; no floating point in any report.
using Rat = boost::rational<long long>;

// Accepts "p", "-p", "p/q". Throws InputError on anything else or q == 0.
Rat parse_rat(const std::string& text);

// "p" when the denominator is 1, "p/q" otherwise.
std::string format_rat(const Rat& r);

inline Rat rat_abs(const Rat& r) { return r < Rat(0) ? -r : r; }

}  // namespace windmill
