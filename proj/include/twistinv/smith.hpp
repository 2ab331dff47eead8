#pragma once

#include <cstdint>
#include <vector>

namespace twistinv {

// Integer matrix, row-major.
struct IntMat {
  int rows = 0;
  int cols = 0;
  std::vector<int64_t> a;

  IntMat() = default;
  IntMat(int r, int c) : rows(r), cols(c), a(size_t(r) * size_t(c), 0) {}
  int64_t& at(int i, int j) { return a[size_t(i) * cols + j]; }
  int64_t at(int i, int j) const { return a[size_t(i) * cols + j]; }
  static IntMat identity(int n);
};

// Smith normal form: u * m * v = d with u, v unimodular and d diagonal,
// d(0,0) | d(1,1) | ... (nonnegative diagonal).
struct SmithForm {
  IntMat u, v, d;
  int rank = 0;  // number of nonzero diagonal entries
};

SmithForm smith_normal_form(IntMat m);

}  // namespace twistinv
