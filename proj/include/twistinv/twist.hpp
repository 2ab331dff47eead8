#pragma once

#include <optional>
#include <string>
#include <vector>

#include "twistinv/rootdata.hpp"
#include "twistinv/smith.hpp"

namespace twistinv {

// A Dynkin-diagram automorphism preserving the pinning: a permutation of
// simple-root indices compatible with the Cartan matrix.
struct PinnedAutomorphism {
  const RootDatum* datum = nullptr;
  std::vector<int> perm;  // perm[i] = sigma(i)
  int order = 1;

  int apply_node(int i) const { return perm[i]; }
  int apply_node_inverse(int i) const;
  // Action on fundamental-weight coordinates: (sigma w)_{sigma(i)} = w_i.
  Weight apply(const Weight& w) const;
  Weight apply_inverse(const Weight& w) const;
  bool is_identity() const;
};

// Throws std::invalid_argument when perm is not Cartan-compatible.
PinnedAutomorphism validate_automorphism(const RootDatum& datum, const std::vector<int>& perm);

// Parses cycle notation over 1-based Bourbaki node labels, e.g. "(1 2)" or
// "(1 3 4)" or "(1 2)(3 4)"; "" or "id" is the identity.
PinnedAutomorphism parse_sigma(const RootDatum& datum, const std::string& cycles);

enum class OrbitType { A, BCminus, BCplus };

std::string orbit_type_name(OrbitType t);

// A single <sigma>-orbit of roots with its classification data.
struct SigmaOrbit {
  std::vector<Weight> roots;  // sorted, a full <sigma>-orbit
  OrbitType orbit_type = OrbitType::A;
  Weight alpha_O;        // sum over the orbit, sigma-fixed
  int divisor_sign = 1;  // -1 exactly for type BC+
  int partner = -1;      // index of the BC-paired orbit, -1 for type A
  bool positive = false; // orbit contained in the positive roots
};

// Partition of all roots into sigma-orbits, classified; BC pairs are
// cross-linked through `partner`.
std::vector<SigmaOrbit> sigma_orbits(const RootDatum& datum, const PinnedAutomorphism& sigma);

// Folded root datum Phi(G_sigma, A) on the coinvariant torus.
struct FoldedDatum {
  const RootDatum* datum = nullptr;
  PinnedAutomorphism sigma;
  std::vector<SigmaOrbit> simple_folded_roots;  // one per sigma-orbit on Delta
  IntMat folded_cartan;                         // over X(A)
  std::string folded_type;                      // e.g. "B2", "G2", "A1"
  std::vector<WeylWord> w0_generators;          // one word per folded simple root

  // Basis of the fixed lattice X(T)^sigma = X(A): orbit sums of
  // fundamental weights, in orbit order.
  std::vector<Weight> fixed_lattice_basis;

  // Coordinates of a sigma-fixed weight in fixed_lattice_basis; throws if
  // the weight is not sigma-fixed.
  std::vector<int64_t> fixed_coordinates(const Weight& w) const;
};

FoldedDatum fold(const RootDatum& datum, const PinnedAutomorphism& sigma);

// Canonical form of a weight in X(T) / (sigma - 1) X(T), computed through
// the Smith normal form of (sigma - 1); torsion components retained.
class CoinvariantLattice {
 public:
  CoinvariantLattice(const RootDatum& datum, const PinnedAutomorphism& sigma);

  // Reduced representative: entries i < rank(D) are y_i mod d_i (in
  // [0, d_i)), the rest are free integers.
  std::vector<int64_t> coinvariant_class(const Weight& w) const;
  bool is_zero_class(const Weight& w) const;

  // Solves class(mu - n*shift) = 0 for integral n; at most one solution
  // exists for shift with no torsion multiple in the image. Returns
  // nullopt when there is none.
  std::optional<int64_t> solve_multiple(const Weight& mu, const Weight& shift) const;

  const std::vector<int64_t>& moduli() const { return moduli_; }

 private:
  int rank_ = 0;
  SmithForm snf_;
  std::vector<int64_t> moduli_;  // d_i for i < snf rank, 0 afterwards
};

}  // namespace twistinv
