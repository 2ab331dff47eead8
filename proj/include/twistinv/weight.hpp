#pragma once

#include <cstdint>
#include <vector>

namespace twistinv {

// A weight of the maximal torus, stored in fundamental-weight coordinates:
// coords[i] = <lambda, alpha_i^vee>. For a simply-connected group this
// identifies the character lattice with Z^rank.
using Weight = std::vector<int64_t>;

inline Weight operator+(const Weight& a, const Weight& b) {
  Weight c(a.size());
  for (size_t i = 0; i < a.size(); ++i) c[i] = a[i] + b[i];
  return c;
}

inline Weight operator-(const Weight& a, const Weight& b) {
  Weight c(a.size());
  for (size_t i = 0; i < a.size(); ++i) c[i] = a[i] - b[i];
  return c;
}

inline Weight operator-(const Weight& a) {
  Weight c(a.size());
  for (size_t i = 0; i < a.size(); ++i) c[i] = -a[i];
  return c;
}

inline Weight operator*(int64_t n, const Weight& a) {
  Weight c(a.size());
  for (size_t i = 0; i < a.size(); ++i) c[i] = n * a[i];
  return c;
}

inline bool is_zero(const Weight& a) {
  for (auto x : a)
    if (x != 0) return false;
  return true;
}

inline Weight zero_weight(size_t rank) { return Weight(rank, 0); }

}  // namespace twistinv
