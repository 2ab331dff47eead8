#include "twistinv/linalg.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

namespace twistinv {

Mat Mat::identity(int n) {
  Mat m(n, n);
  for (int i = 0; i < n; ++i) m.at(i, i) = 1;
  return m;
}

bool Mat::is_zero() const {
  for (const auto& x : a)
    if (x != 0) return false;
  return true;
}

bool operator==(const Mat& x, const Mat& y) {
  return x.rows == y.rows && x.cols == y.cols && x.a == y.a;
}

Mat mat_mul(const Mat& x, const Mat& y) {
  if (x.cols != y.rows) throw std::invalid_argument("mat_mul: shape mismatch");
  Mat z(x.rows, y.cols);
  for (int i = 0; i < x.rows; ++i)
    for (int k = 0; k < x.cols; ++k) {
      const Rat& v = x.at(i, k);
      if (v == 0) continue;
      for (int j = 0; j < y.cols; ++j) {
        const Rat& w = y.at(k, j);
        if (w != 0) z.at(i, j) += v * w;
      }
    }
  return z;
}

Mat mat_add(const Mat& x, const Mat& y) {
  if (x.rows != y.rows || x.cols != y.cols) throw std::invalid_argument("mat_add: shape mismatch");
  Mat z(x.rows, x.cols);
  for (size_t i = 0; i < x.a.size(); ++i) z.a[i] = x.a[i] + y.a[i];
  return z;
}

Mat mat_scale(const Rat& c, const Mat& x) {
  Mat z(x.rows, x.cols);
  for (size_t i = 0; i < x.a.size(); ++i) z.a[i] = c * x.a[i];
  return z;
}

Mat transpose(const Mat& x) {
  Mat z(x.cols, x.rows);
  for (int i = 0; i < x.rows; ++i)
    for (int j = 0; j < x.cols; ++j) z.at(j, i) = x.at(i, j);
  return z;
}

Mat vstack(const std::vector<const Mat*>& blocks) {
  if (blocks.empty()) return Mat();
  int cols = blocks[0]->cols, rows = 0;
  for (auto* b : blocks) {
    if (b->cols != cols) throw std::invalid_argument("vstack: column mismatch");
    rows += b->rows;
  }
  Mat z(rows, cols);
  int r0 = 0;
  for (auto* b : blocks) {
    for (int i = 0; i < b->rows; ++i)
      for (int j = 0; j < cols; ++j) z.at(r0 + i, j) = b->at(i, j);
    r0 += b->rows;
  }
  return z;
}

Mat hstack(const std::vector<const Mat*>& blocks) {
  if (blocks.empty()) return Mat();
  int rows = blocks[0]->rows, cols = 0;
  for (auto* b : blocks) {
    if (b->rows != rows) throw std::invalid_argument("hstack: row mismatch");
    cols += b->cols;
  }
  Mat z(rows, cols);
  int c0 = 0;
  for (auto* b : blocks) {
    for (int i = 0; i < rows; ++i)
      for (int j = 0; j < b->cols; ++j) z.at(i, c0 + j) = b->at(i, j);
    c0 += b->cols;
  }
  return z;
}

namespace {

// Row echelon elimination; returns pivot (row, col) pairs in order.
std::vector<std::pair<int, int>> echelon(Mat& m) {
  std::vector<std::pair<int, int>> pivots;
  int r = 0;
  for (int c = 0; c < m.cols && r < m.rows; ++c) {
    int p = -1;
    for (int i = r; i < m.rows; ++i)
      if (m.at(i, c) != 0) {
        p = i;
        break;
      }
    if (p < 0) continue;
    if (p != r)
      for (int j = 0; j < m.cols; ++j) std::swap(m.at(p, j), m.at(r, j));
    Rat inv = 1 / m.at(r, c);
    for (int j = c; j < m.cols; ++j) m.at(r, j) *= inv;
    for (int i = 0; i < m.rows; ++i) {
      if (i == r) continue;
      Rat f = m.at(i, c);
      if (f == 0) continue;
      for (int j = c; j < m.cols; ++j) m.at(i, j) -= f * m.at(r, j);
    }
    pivots.emplace_back(r, c);
    ++r;
  }
  return pivots;
}

}  // namespace

int rank(Mat m) { return int(echelon(m).size()); }

Mat kernel_basis(Mat m) {
  int n = m.cols;
  auto pivots = echelon(m);
  std::vector<int> pivot_col(pivots.size());
  std::vector<bool> is_pivot(n, false);
  for (size_t k = 0; k < pivots.size(); ++k) {
    pivot_col[k] = pivots[k].second;
    is_pivot[pivots[k].second] = true;
  }
  int nullity = n - int(pivots.size());
  Mat ker(n, nullity);
  int kcol = 0;
  for (int c = 0; c < n; ++c) {
    if (is_pivot[c]) continue;
    ker.at(c, kcol) = 1;
    for (size_t k = 0; k < pivots.size(); ++k) ker.at(pivot_col[k], kcol) = -m.at(int(k), c);
    ++kcol;
  }
  return ker;
}

Mat column_space_basis(Mat m) {
  Mat work = m;
  auto pivots = echelon(work);
  Mat basis(m.rows, int(pivots.size()));
  int c = 0;
  for (auto& p : pivots) {
    for (int i = 0; i < m.rows; ++i) basis.at(i, c) = m.at(i, p.second);
    ++c;
  }
  return basis;
}

std::vector<Rat> solve(Mat a, std::vector<Rat> b) {
  if (int(b.size()) != a.rows) throw std::invalid_argument("solve: shape mismatch");
  Mat aug(a.rows, a.cols + 1);
  for (int i = 0; i < a.rows; ++i) {
    for (int j = 0; j < a.cols; ++j) aug.at(i, j) = a.at(i, j);
    aug.at(i, a.cols) = b[i];
  }
  auto pivots = echelon(aug);
  std::vector<Rat> x(a.cols);
  for (auto& p : pivots) {
    if (p.second == a.cols) throw std::runtime_error("solve: inconsistent system");
    x[p.second] = aug.at(p.first, a.cols);
  }
  return x;
}

Mat solve_matrix(const Mat& a, const Mat& b) {
  if (a.rows != b.rows) throw std::invalid_argument("solve_matrix: shape mismatch");
  Mat x(a.cols, b.cols);
  for (int j = 0; j < b.cols; ++j) {
    std::vector<Rat> rhs(b.rows);
    for (int i = 0; i < b.rows; ++i) rhs[i] = b.at(i, j);
    auto col = solve(a, std::move(rhs));
    for (int i = 0; i < a.cols; ++i) x.at(i, j) = col[i];
  }
  return x;
}

Mat inverse(Mat m) {
  if (m.rows != m.cols) throw std::invalid_argument("inverse: not square");
  Mat x = solve_matrix(m, Mat::identity(m.rows));
  if (!(mat_mul(m, x) == Mat::identity(m.rows))) throw std::runtime_error("inverse: singular matrix");
  return x;
}

Rat determinant(Mat m) {
  if (m.rows != m.cols) throw std::invalid_argument("determinant: not square");
  Rat det = 1;
  int n = m.rows;
  for (int c = 0; c < n; ++c) {
    int p = -1;
    for (int i = c; i < n; ++i)
      if (m.at(i, c) != 0) {
        p = i;
        break;
      }
    if (p < 0) return Rat(0);
    if (p != c) {
      for (int j = 0; j < n; ++j) std::swap(m.at(p, j), m.at(c, j));
      det = -det;
    }
    det *= m.at(c, c);
    Rat inv = 1 / m.at(c, c);
    for (int i = c + 1; i < n; ++i) {
      Rat f = m.at(i, c) * inv;
      if (f == 0) continue;
      for (int j = c; j < n; ++j) m.at(i, j) -= f * m.at(c, j);
    }
  }
  return det;
}

bool subspace_contains(const Mat& space, const Mat& sub) {
  if (sub.cols == 0) return true;
  int r0 = rank(space);
  std::vector<const Mat*> both{&space, &sub};
  return rank(hstack(both)) == r0;
}

Mat joint_kernel(const std::vector<Mat>& mats, int ambient_dim) {
  Mat k = Mat::identity(ambient_dim);
  for (const auto& m : mats) {
    if (k.cols == 0) break;
    Mat restricted = mat_mul(m, k);
    Mat n = kernel_basis(std::move(restricted));
    k = mat_mul(k, n);
  }
  return k;
}

void SparseMat::add(int i, int j, const Rat& v) {
  if (v == 0) return;
  auto& c = col[j];
  auto it = std::lower_bound(c.begin(), c.end(), i,
                             [](const std::pair<int, Rat>& e, int row) { return e.first < row; });
  if (it != c.end() && it->first == i) {
    it->second += v;
    if (it->second == 0) c.erase(it);
  } else {
    c.insert(it, {i, v});
  }
}

Mat SparseMat::dense() const {
  Mat m(rows, cols);
  for (int j = 0; j < cols; ++j)
    for (auto& [i, v] : col[j]) m.at(i, j) = v;
  return m;
}

SparseMat SparseMat::transposed() const {
  SparseMat t(cols, rows);
  for (int j = 0; j < cols; ++j)
    for (auto& [i, v] : col[j]) t.col[i].emplace_back(j, v);
  for (auto& c : t.col)
    std::sort(c.begin(), c.end(), [](auto& a, auto& b) { return a.first < b.first; });
  return t;
}

SparseMat SparseMat::negated() const {
  SparseMat n = *this;
  for (auto& c : n.col)
    for (auto& e : c) e.second = -e.second;
  return n;
}

size_t SparseMat::nnz() const {
  size_t n = 0;
  for (auto& c : col) n += c.size();
  return n;
}

bool operator==(const SparseMat& x, const SparseMat& y) {
  return x.rows == y.rows && x.cols == y.cols && x.col == y.col;
}

std::vector<Rat> apply(const SparseMat& m, const std::vector<Rat>& x) {
  if (int(x.size()) != m.cols) throw std::invalid_argument("apply: shape mismatch");
  std::vector<Rat> y(m.rows);
  for (int j = 0; j < m.cols; ++j) {
    if (x[j] == 0) continue;
    for (auto& [i, v] : m.col[j]) y[i] += v * x[j];
  }
  return y;
}

Mat apply(const SparseMat& m, const Mat& k) {
  if (k.rows != m.cols) throw std::invalid_argument("apply: shape mismatch");
  Mat y(m.rows, k.cols);
  for (int j = 0; j < m.cols; ++j)
    for (auto& [i, v] : m.col[j])
      for (int c = 0; c < k.cols; ++c) {
        const Rat& w = k.at(j, c);
        if (w != 0) y.at(i, c) += v * w;
      }
  return y;
}

SparseMat sparse_mul(const SparseMat& x, const SparseMat& y) {
  if (x.cols != y.rows) throw std::invalid_argument("sparse_mul: shape mismatch");
  SparseMat z(x.rows, y.cols);
  for (int j = 0; j < y.cols; ++j) {
    std::map<int, Rat> acc;
    for (auto& [k, v] : y.col[j])
      for (auto& [i, w] : x.col[k]) acc[i] += w * v;
    for (auto& [i, v] : acc)
      if (v != 0) z.col[j].emplace_back(i, v);
  }
  return z;
}

}  // namespace twistinv
