#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "twistinv/linalg.hpp"
#include "twistinv/smith.hpp"
#include "twistinv/weight.hpp"

namespace twistinv {

enum class SimpleType : char { A = 'A', B = 'B', C = 'C', D = 'D', E = 'E', F = 'F', G = 'G' };

struct SimpleFactor {
  SimpleType type;
  int rank;
};

// A Weyl word is a sequence of simple-reflection indices; words act
// left-to-right on the argument: apply([i,j], w) = s_i(s_j(w)).
// Words are never canonicalized, only their action matters.
using WeylWord = std::vector<int>;

// Root datum of a semisimple simply-connected group. Weights live in
// fundamental-weight coordinates; roots carry cached root-lattice
// coordinates as well. Immutable after construction.
class RootDatum {
 public:
  // Builds from a spec string with grammar TYPE RANK ("x" TYPE RANK)*,
  // e.g. "A2", "D4", "A1xA1xA1". Bourbaki node labels per factor,
  // concatenated factor by factor. Throws std::invalid_argument on
  // unknown type tokens or out-of-range ranks.
  static RootDatum build(const std::string& spec);

  int rank() const { return rank_; }
  const std::vector<SimpleFactor>& factors() const { return factors_; }
  const std::string& spec() const { return spec_; }

  // cartan(i, j) = <alpha_j, alpha_i^vee>
  int64_t cartan(int i, int j) const { return cartan_.at(i, j); }
  const IntMat& cartan_matrix() const { return cartan_; }
  const Mat& inverse_cartan() const { return inv_cartan_; }

  // Simple root alpha_j in fundamental-weight coordinates (column j of the
  // Cartan matrix).
  Weight simple_root(int j) const;

  // Positive roots; root_coords(k)[j] is the coefficient of alpha_j.
  const std::vector<Weight>& positive_roots() const { return positive_roots_; }
  const std::vector<std::vector<int64_t>>& positive_root_coords() const { return pos_root_coords_; }
  size_t num_positive_roots() const { return positive_roots_.size(); }

  // All roots: positives followed by their negatives.
  std::vector<Weight> all_roots() const;

  // <lambda, beta^vee> for the coroot of an arbitrary root beta
  // (beta in fundamental-weight coordinates).
  int64_t coroot_pairing(const Weight& lambda, const Weight& beta) const;

  // Symmetrizer d_i (minimal positive integers with d_i a_ij = d_j a_ji);
  // (alpha_i, alpha_j) = d_i a_ij defines the W-invariant form.
  const std::vector<int64_t>& symmetrizer() const { return sym_; }

  // W-invariant bilinear form on weights (exact rational).
  Rat bilinear(const Weight& x, const Weight& y) const;

  bool is_dominant(const Weight& w) const;
  Weight simple_reflection(int i, const Weight& w) const;
  Weight apply_word(const WeylWord& word, const Weight& w) const;

  // The order <= on N^Delta: componentwise comparison.
  static bool componentwise_leq(const Weight& a, const Weight& b);

  // The dominance order: true iff b - a is a nonnegative integral
  // combination of simple roots (solved through the inverse Cartan matrix).
  bool dominance_leq(const Weight& a, const Weight& b) const;

  // Root-lattice coordinates of a weight, or empty if not in the root
  // lattice; integrality is checked exactly.
  bool root_coordinates(const Weight& w, std::vector<int64_t>* coords) const;

  std::vector<Weight> weyl_orbit(const Weight& w) const;

  // Returns (dominant representative, word) with word(w) = dominant.
  std::pair<Weight, WeylWord> dominant_conjugate(const Weight& w) const;

  const WeylWord& w0_word() const { return w0_; }

  // lambda* = -w0(lambda)
  Weight star(const Weight& w) const;

  Weight rho() const;  // sum of fundamental weights

  // |W| from the factor types.
  Int weyl_order() const;

  // Order of the stabilizer of a dominant weight (standard parabolic).
  Int orbit_size(const Weight& dominant) const;

  // Weights w with w = other.w under permutation compatibility are the
  // caller's concern; equality of data defines equality of datum.
  bool operator==(const RootDatum& o) const { return spec_ == o.spec_; }

 private:
  std::string spec_;
  std::vector<SimpleFactor> factors_;
  int rank_ = 0;
  IntMat cartan_;
  Mat inv_cartan_;
  std::vector<int64_t> sym_;
  std::vector<Weight> positive_roots_;
  std::vector<std::vector<int64_t>> pos_root_coords_;
  WeylWord w0_;
};

// |W| for a single simple factor.
Int weyl_order_of(SimpleType t, int rank);

// Number of positive roots of a simple factor (classical count).
int64_t positive_root_count(SimpleType t, int rank);

// Classifies an abstract Cartan matrix (valid, indecomposable blocks) into
// a type string such as "B2", "G2", "A1xB3". Rank-1 blocks are named "A1"
// when the corresponding simple root is divisible by 2 inside the ambient
// lattice and "B1" otherwise; root_divisible reports that flag per block
// in block order. Rank-2 double-bond blocks are named "B2".
std::string classify_cartan(const IntMat& cartan, const std::vector<bool>& root_divisible);

}  // namespace twistinv
