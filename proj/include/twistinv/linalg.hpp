#pragma once

#include <utility>
#include <vector>

#include "twistinv/rational.hpp"

namespace twistinv {

// Dense matrix over exact rationals, row-major flat storage.
struct Mat {
  int rows = 0;
  int cols = 0;
  std::vector<Rat> a;

  Mat() = default;
  Mat(int r, int c) : rows(r), cols(c), a(size_t(r) * size_t(c)) {}

  Rat& at(int i, int j) { return a[size_t(i) * cols + j]; }
  const Rat& at(int i, int j) const { return a[size_t(i) * cols + j]; }

  static Mat identity(int n);
  bool is_zero() const;
};

bool operator==(const Mat& x, const Mat& y);

Mat mat_mul(const Mat& x, const Mat& y);
Mat mat_add(const Mat& x, const Mat& y);
Mat mat_scale(const Rat& c, const Mat& x);
Mat transpose(const Mat& x);

// Vertical stack; all blocks must agree in column count.
Mat vstack(const std::vector<const Mat*>& blocks);
// Horizontal concatenation; all blocks must agree in row count.
Mat hstack(const std::vector<const Mat*>& blocks);

int rank(Mat m);  // by value: elimination is destructive

// Basis of the right kernel as columns of a (cols x nullity) matrix,
// echelonized with a deterministic pivot order (first nonzero row wins).
Mat kernel_basis(Mat m);

// Reduced column echelon basis of the column space (deterministic).
Mat column_space_basis(Mat m);

// Solves A x = b; requires consistency (throws std::runtime_error otherwise).
// When the solution is non-unique the free variables are set to zero.
std::vector<Rat> solve(Mat a, std::vector<Rat> b);

// Solves A X = B columnwise.
Mat solve_matrix(const Mat& a, const Mat& b);

Mat inverse(Mat m);  // throws on singular input

Rat determinant(Mat m);

// True iff every column of sub lies in the column span of space.
bool subspace_contains(const Mat& space, const Mat& sub);

// Joint right kernel of a family of maps given as (matrix applied to the
// ambient space); returns columns spanning  { v : M v = 0 for all M }.
Mat joint_kernel(const std::vector<Mat>& mats, int ambient_dim);

// Sparse matrix, column-major: col[j] lists (row, value) sorted by row.
struct SparseMat {
  int rows = 0;
  int cols = 0;
  std::vector<std::vector<std::pair<int, Rat>>> col;

  SparseMat() = default;
  SparseMat(int r, int c) : rows(r), cols(c), col(c) {}

  void add(int i, int j, const Rat& v);  // accumulate, drop exact zeros
  Mat dense() const;
  SparseMat transposed() const;
  SparseMat negated() const;
  size_t nnz() const;
};

bool operator==(const SparseMat& x, const SparseMat& y);

// y = M x for a dense vector x.
std::vector<Rat> apply(const SparseMat& m, const std::vector<Rat>& x);
// Dense product M * K.
Mat apply(const SparseMat& m, const Mat& k);
SparseMat sparse_mul(const SparseMat& x, const SparseMat& y);

}  // namespace twistinv
