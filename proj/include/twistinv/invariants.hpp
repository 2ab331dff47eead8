#pragma once

#include <vector>

#include "twistinv/filtration.hpp"
#include "twistinv/repn.hpp"
#include "twistinv/twist.hpp"

namespace twistinv {

// Basis of the invariant space (S_{sigma(nu*)} (x) S_nu (x) V)^G, i.e. the
// joint kernel of all Chevalley generators on the triple tensor product.
// Index layout of a tensor coordinate: (a * dim(s_mid) + j) * dim(V) + m.
struct InvariantBasis {
  Weight nu;
  Module s_left;  // S_{sigma(nu*)}
  Module s_mid;   // S_nu
  const Module* v = nullptr;
  Mat vectors;  // columns form the echelonized kernel basis

  int dim() const { return vectors.cols; }
};

InvariantBasis invariant_basis(const RootDatum& datum, const PinnedAutomorphism& sigma,
                               const Module& v, const Weight& nu);

// Contraction against the lowest-weight covector of S_{sigma(nu*)} and the
// highest-weight covector of S_nu; lands in V(sigma nu - nu).
std::vector<Rat> leading_term(const InvariantBasis& basis, int column);

// V-valued function on the torus: one Laurent element per basis vector of
// the carrier module.
struct TorusValuedFunction {
  const Module* v = nullptr;
  std::vector<GroupAlgebraElement> comp;
};

// f_b(t sigma) = sum_{i,j} <sigma e_i^*, t sigma e_j> v_ij computed through
// the canonical dual pairing and the sigma-intertwiner S_nu -> S_{sigma nu}.
TorusValuedFunction restrict_to_torus(const RootDatum& datum, const PinnedAutomorphism& sigma,
                                      const InvariantBasis& basis, int column);

// Pointwise pairing of a V-valued and a V*-valued function (dual bases).
GroupAlgebraElement pair_functions(const TorusValuedFunction& f, const TorusValuedFunction& g);

bool is_w0_invariant(const GroupAlgebraElement& x, const RootDatum& datum,
                     const FoldedDatum& folded);

struct PairingRow {
  Weight xi;  // leading terms of this row live in V(xi)
  Weight nu;  // the row was extracted at S_{sigma(nu*)} (x) S_nu (x) V
  TorusValuedFunction f;
};

struct PairingMatrix {
  std::vector<PairingRow> rows;  // J(V) side
  std::vector<PairingRow> cols;  // J(V*) side
  std::vector<std::vector<GroupAlgebraElement>> entries;
  GroupAlgebraElement det;
  GroupAlgebraElement predicted;           // prod over orbits of (e^{alpha_O} -+ 1)^{zeta_O}
  std::vector<int64_t> factored_exponents; // divisor exponent per sigma-orbit
  bool matches = false;
  Rat unit = 0;  // det / predicted when matches

  int size() const { return int(rows.size()); }
};

// Assembles the matrix of the J-bilinear pairing J(V) x J(V*) -> J on rows
// chosen per weight xi at nu_h and successively larger sigma-fixed shifts.
// Throws std::runtime_error when an entry fails W0-invariance or the matrix
// is not square.
PairingMatrix pairing_matrix(const RootDatum& datum, const PinnedAutomorphism& sigma,
                             const Module& v);

// prod_{type A or BC-} (e^{alpha_O}-1)^{zeta_O} * prod_{BC+} (e^{alpha_O}+1)^{zeta_O}
GroupAlgebraElement predicted_determinant(const RootDatum& datum,
                                          const PinnedAutomorphism& sigma, const Module& v);

struct DeterminantReport {
  bool matches = false;
  Rat unit = 0;
};
DeterminantReport determinant_check(const PairingMatrix& m);

// The canonical invariant sigma_eta in S_{eta*} (x) S_eta (tensor index
// a * dim(s_eta) + b), unique up to scalar.
std::vector<Rat> canonical_invariant(const Module& s_eta_star, const Module& s_eta);

// Cartan multiplication S_nu (x) S_eta -> S_{nu+eta}: the contravariant
// adjoint of the embedding of S_{nu+eta} into the tensor product.
Mat cartan_quotient(const Module& s_nu, const Module& s_eta, const Module& s_sum);

// Multiplication by sigma_eta: maps a column of `basis` into the invariant
// space at nu + eta (eta must be sigma-fixed dominant). Returns the tensor
// coordinates in the layout of invariant_basis(nu + eta).
std::vector<Rat> multiply_by_sigma_eta(const RootDatum& datum, const PinnedAutomorphism& sigma,
                                       const InvariantBasis& basis, int column, const Weight& eta);

}  // namespace twistinv
