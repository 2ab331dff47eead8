#include "twistinv/smith.hpp"

#include <cstdlib>

namespace twistinv {

IntMat IntMat::identity(int n) {
  IntMat m(n, n);
  for (int i = 0; i < n; ++i) m.at(i, i) = 1;
  return m;
}

namespace {

void row_swap(IntMat& m, IntMat& u, int a, int b) {
  for (int j = 0; j < m.cols; ++j) std::swap(m.at(a, j), m.at(b, j));
  for (int j = 0; j < u.cols; ++j) std::swap(u.at(a, j), u.at(b, j));
}

void col_swap(IntMat& m, IntMat& v, int a, int b) {
  for (int i = 0; i < m.rows; ++i) std::swap(m.at(i, a), m.at(i, b));
  for (int i = 0; i < v.rows; ++i) std::swap(v.at(i, a), v.at(i, b));
}

// row[a] -= f * row[b]
void row_axpy(IntMat& m, IntMat& u, int a, int b, int64_t f) {
  for (int j = 0; j < m.cols; ++j) m.at(a, j) -= f * m.at(b, j);
  for (int j = 0; j < u.cols; ++j) u.at(a, j) -= f * u.at(b, j);
}

void col_axpy(IntMat& m, IntMat& v, int a, int b, int64_t f) {
  for (int i = 0; i < m.rows; ++i) m.at(i, a) -= f * m.at(i, b);
  for (int i = 0; i < v.rows; ++i) v.at(i, a) -= f * v.at(i, b);
}

void row_negate(IntMat& m, IntMat& u, int a) {
  for (int j = 0; j < m.cols; ++j) m.at(a, j) = -m.at(a, j);
  for (int j = 0; j < u.cols; ++j) u.at(a, j) = -u.at(a, j);
}

}  // namespace

SmithForm smith_normal_form(IntMat m) {
  SmithForm s;
  s.u = IntMat::identity(m.rows);
  s.v = IntMat::identity(m.cols);
  int t = 0;
  int n = std::min(m.rows, m.cols);
  while (t < n) {
    // locate a nonzero pivot with minimal absolute value in the trailing block
    int pi = -1, pj = -1;
    int64_t best = 0;
    for (int i = t; i < m.rows; ++i)
      for (int j = t; j < m.cols; ++j) {
        int64_t x = std::llabs(m.at(i, j));
        if (x != 0 && (best == 0 || x < best)) {
          best = x;
          pi = i;
          pj = j;
        }
      }
    if (pi < 0) break;
    if (pi != t) row_swap(m, s.u, pi, t);
    if (pj != t) col_swap(m, s.v, pj, t);
    if (m.at(t, t) < 0) row_negate(m, s.u, t);

    bool clean = true;
    for (int i = t + 1; i < m.rows; ++i) {
      int64_t q = m.at(i, t) / m.at(t, t);
      if (q != 0) row_axpy(m, s.u, i, t, q);
      if (m.at(i, t) != 0) clean = false;
    }
    for (int j = t + 1; j < m.cols; ++j) {
      int64_t q = m.at(t, j) / m.at(t, t);
      if (q != 0) col_axpy(m, s.v, j, t, q);
      if (m.at(t, j) != 0) clean = false;
    }
    if (!clean) continue;  // remainders left; rerun pivot search on the block

    // enforce divisibility d_t | d_k for k > t
    bool redo = false;
    for (int i = t + 1; i < m.rows && !redo; ++i)
      for (int j = t + 1; j < m.cols && !redo; ++j)
        if (m.at(i, j) % m.at(t, t) != 0) {
          row_axpy(m, s.u, t, i, -1);  // add row i into row t
          redo = true;
        }
    if (redo) continue;
    ++t;
  }
  s.d = m;
  s.rank = t;
  return s;
}

}  // namespace twistinv
