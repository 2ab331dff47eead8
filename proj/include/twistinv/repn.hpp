#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "twistinv/groupalgebra.hpp"
#include "twistinv/linalg.hpp"
#include "twistinv/rootdata.hpp"
#include "twistinv/twist.hpp"

namespace twistinv {

// Default guard for the Shapovalov radical computation; the environment
// variable TWISTINV_DIM_CAP overrides it.
int64_t dimension_cap();

struct BasisVector {
  Weight weight;
  // provenance inside an irreducible construction: this vector is
  // f_{def_gen}(basis[def_parent]); seeds carry (-1, -1)
  int def_gen = -1;
  int def_parent = -1;
};

// A module with chosen weight basis and exact sparse matrices of the
// Chevalley generators e_i, f_i. Irreducible highest-weight modules are
// produced by build_irreducible; tensor/dual/exterior constructions return
// the same shape (possibly reducible, no highest weight). Immutable after
// construction.
struct Module {
  const RootDatum* datum = nullptr;
  std::vector<BasisVector> basis;
  std::vector<SparseMat> e_mats, f_mats;  // one per simple root
  std::optional<Weight> highest;
  std::optional<Mat> sigma_map;  // intertwiner rho.sigma ~ rho, fixes the highest line
  std::vector<int> sigma_perm;
  // Shapovalov Gram matrix per weight space (filled by build_irreducible).
  std::map<Weight, Mat> gram;

  int dim() const { return int(basis.size()); }
  std::map<Weight, std::vector<int>> weight_spaces() const;
  std::map<Weight, int64_t> weight_multiplicities() const;
  int64_t multiplicity(const Weight& w) const;
  GroupAlgebraElement character() const;
  // [e_i, f_j] = delta_ij h_i and the weight-shift pattern; used by tests
  // and by the deserializer.
  void check_serre_relations() const;
};

// Irreducible (= Schur = Weyl in characteristic zero) module of highest
// weight lambda, built by spanning f-monomials from a highest-weight
// vector and quotienting by the radical of the contravariant form.
// Throws on non-dominant lambda or when the cap is exceeded.
Module build_irreducible(const RootDatum& datum, const Weight& lambda,
                         int64_t cap = dimension_cap());

Module trivial_module(const RootDatum& datum);

// Freudenthal recursion (independent multiplicity oracle).
int64_t freudenthal(const RootDatum& datum, const Weight& lambda, const Weight& nu);
// Full table over dominant weights of V(lambda).
std::map<Weight, int64_t> freudenthal_table(const RootDatum& datum, const Weight& lambda);

// Weyl character formula in Kostant form (second independent oracle).
int64_t kostant_multiplicity(const RootDatum& datum, const Weight& lambda, const Weight& nu);

// Weyl dimension formula.
Int weyl_dim(const RootDatum& datum, const Weight& lambda);

// Dominant weights below lambda in the dominance order, sorted by depth.
std::vector<Weight> dominant_weights_below(const RootDatum& datum, const Weight& lambda);

Module tensor(const Module& v, const Module& w);
Module dual(const Module& v);
Module exterior_power(const Module& v, int k);
Module direct_sum(const Module& v, const Module& w);

// The unique intertwiner src -> dst with A f_i = f_{perm(i)} A mapping the
// highest-weight seed of src to dst.basis[dst_seed]; src must carry
// construction provenance. The intertwining relations are verified exactly.
Mat equivariant_map(const Module& src, const Module& dst, const std::vector<int>& node_perm,
                    int dst_seed);

// sigma-structure. When sigma fixes the highest weight the returned matrix
// is stored into v.sigma_map semantics by the caller; otherwise it is the
// intertwiner V -> V(sigma lambda) into `cross`.
Mat sigma_structure(Module& v, const PinnedAutomorphism& sigma);
Mat sigma_intertwiner(const Module& v, const Module& dst, const PinnedAutomorphism& sigma);

// Wedge functoriality of a sigma-structure: k-th compound matrix.
Mat compound_matrix(const Mat& m, int k);

// Number of weights (with multiplicity) restricting to zero on T^sigma.
int64_t r_V(const Module& v, const CoinvariantLattice& lattice);

// zeta_O(V) = sum_{n >= 1} dim V|_{T^sigma}(n alpha), alpha in O.
int64_t zeta(const Module& v, const CoinvariantLattice& lattice, const SigmaOrbit& orbit);

// Sum over sigma-fixed weights mu of trace(sigma_map on V(mu)) e^mu.
// Zero when no weight is sigma-fixed; requires sigma_map otherwise.
GroupAlgebraElement twisted_character(const Module& v, const PinnedAutomorphism& sigma);

}  // namespace twistinv
