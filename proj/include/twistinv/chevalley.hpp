#pragma once

#include <vector>

#include "twistinv/groupalgebra.hpp"
#include "twistinv/repn.hpp"
#include "twistinv/twist.hpp"

namespace twistinv {

// Torus restriction of the tautological endomorphism: the matrix with
// block (mu -> sigma mu) equal to e^{sigma mu} times the sigma-structure
// block. Entries are Laurent monomials.
struct TorusEndomorphism {
  const Module* module = nullptr;
  std::vector<std::vector<GroupAlgebraElement>> entries;  // dense, dim x dim

  int dim() const { return int(entries.size()); }
};

// Requires a sigma-structure on v (v.sigma_map). Checks the block rule:
// entry (i, j) vanishes unless wt_i = sigma(wt_j).
TorusEndomorphism gamma_taut(const Module& v, const PinnedAutomorphism& sigma);

// The minimal sigma-stable module carrying lambda's isotypic orbit:
// V(lambda) when sigma(lambda) = lambda, otherwise the direct sum over the
// sigma-orbit of lambda with the cyclic intertwiner installed as
// sigma_map. gamma_taut of a non-sigma-stable irreducible is taken here.
Module sigma_stable_envelope(const RootDatum& datum, const PinnedAutomorphism& sigma,
                             const Weight& lambda);

// Monic characteristic polynomial det(x Id - gamma_taut|_T); coeffs[i] is
// the coefficient of x^i, and coeffs[d - k] = (-1)^k chi_{wedge^k V}(t sigma).
struct CharPolynomial {
  std::vector<GroupAlgebraElement> coeffs;  // size dim + 1, monic

  int degree() const { return int(coeffs.size()) - 1; }
};

// Coefficients computed as twisted characters of the exterior powers (with
// the compound sigma-structure), not by expanding the determinant.
CharPolynomial char_polynomial(const Module& v, const PinnedAutomorphism& sigma);

// Evaluates the characteristic polynomial on gamma_taut|_T exactly; true
// iff the result is the zero matrix over k[X(T)].
bool cayley_hamilton_check(const Module& v, const PinnedAutomorphism& sigma);

// Vandermonde product over the weights of a minuscule module (sigma = id):
// prod_{j < j'} (e^{lambda_j} - e^{lambda_{j'}}) with weights sorted.
// Throws std::invalid_argument when v is not minuscule.
GroupAlgebraElement vandermonde_minuscule(const Module& v);

// True iff every difference of distinct weights of the (minuscule) module
// is a root; each Vandermonde factor is then monomial * (e^root - 1).
bool vandermonde_factors_are_root_divisors(const Module& v);

bool chevalley_w0_invariance(const GroupAlgebraElement& chi, const RootDatum& datum,
                             const FoldedDatum& folded);

}  // namespace twistinv
