#pragma once

#include <cstdint>
#include <cstdlib>
#include <exception>
#include <functional>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace twistinv {

// OpenMP is used for the coarse-grained sweeps (per-weight filtration
// profiles, pairing-matrix entries). TWISTINV_SERIAL=1 selects the serial
// reference path; results are identical either way.
inline bool parallel_enabled() {
#ifdef _OPENMP
  const char* s = std::getenv("TWISTINV_SERIAL");
  return !(s && s[0] == '1');
#else
  return false;
#endif
}

inline void parallel_for(int64_t n, const std::function<void(int64_t)>& fn) {
  if (!parallel_enabled()) {
    for (int64_t i = 0; i < n; ++i) fn(i);
    return;
  }
#ifdef _OPENMP
  std::exception_ptr err;
#pragma omp parallel for schedule(dynamic)
  for (int64_t i = 0; i < n; ++i) {
    try {
      fn(i);
    } catch (...) {
#pragma omp critical
      if (!err) err = std::current_exception();
    }
  }
  if (err) std::rethrow_exception(err);
#else
  for (int64_t i = 0; i < n; ++i) fn(i);
#endif
}

}  // namespace twistinv
