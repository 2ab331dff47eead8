#pragma once

#include <gmpxx.h>
#include <cstdint>
#include <string>

namespace twistinv {

// Exact rational scalar used throughout; no floating point anywhere.
using Rat = mpq_class;
using Int = mpz_class;

inline Rat rat(long num, long den = 1) {
  Rat q(num, den);
  q.canonicalize();
  return q;
}

// Renders "p" when the denominator is 1, else "p/q".
std::string rat_to_string(const Rat& q);

// Accepts "p" or "p/q"; throws std::invalid_argument on malformed input.
Rat rat_from_string(const std::string& s);

}  // namespace twistinv
