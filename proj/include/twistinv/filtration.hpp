#pragma once

#include <cstdint>
#include <map>
#include <vector>

#include "twistinv/repn.hpp"
#include "twistinv/twist.hpp"

namespace twistinv {

// Coefficients of the multivariable polynomial P_{mu,nu}(q), one exponent
// per simple root.
struct MultiWeightPolynomial {
  std::map<std::vector<int64_t>, int64_t> coeffs;

  int64_t eval_at_one() const {
    int64_t s = 0;
    for (auto& [e, c] : coeffs) s += c;
    return s;
  }
};

// dim fil^alpha_d V(nu) = dim ker E_alpha^{d+1} on V(nu) (characteristic 0:
// the single power detects the whole divided-power kernel family).
int64_t fil_alpha_dim(const Module& v, const Weight& nu, int simple, int64_t d);

// Same filtration through lowering operators, used as a cross-oracle.
int64_t fil_alpha_dim_via_F(const Module& v, const Weight& nu, int simple, int64_t d);

// dim of the intersection over simple roots of fil^alpha_{lambda_alpha}.
int64_t multifil_dim(const Module& v, const Weight& nu, const std::vector<int64_t>& lambda);

// Basis (columns, in V(nu)-coordinates) of fil_lambda V(nu).
Mat multifil_basis(const Module& v, const Weight& nu, const std::vector<int64_t>& lambda);

// Stabilization bound per simple root: N_alpha(nu) = max{n >= 0 : V(nu + n
// alpha) != 0}.
std::vector<int64_t> filtration_box(const Module& v, const Weight& nu);

// Full filtration profile of one weight space.
struct FiltrationProfile {
  Weight nu;
  std::vector<int64_t> box;
  // per simple root, dim fil^alpha_i for 0 <= i <= N_alpha
  std::vector<std::vector<int64_t>> fil_dims;
  MultiWeightPolynomial gr;  // graded dimensions over the box
  int64_t dim_nu = 0;
};

FiltrationProfile filtration_profile(const Module& v, const Weight& nu);

MultiWeightPolynomial gr_polynomial(const Module& v, const Weight& nu);

// Profiles of every weight space, parallelized across weights.
std::map<Weight, FiltrationProfile> all_filtration_profiles(const Module& v);
// Serial reference of the same sweep, kept for testing and benchmarking.
std::map<Weight, FiltrationProfile> all_filtration_profiles_serial(const Module& v);

// The unique minimal dominant nu >= nu0 (componentwise) with
// sigma(nu) - nu = xi. Throws std::invalid_argument when xi is not in the
// image of (sigma - 1).
Weight nu_h(const RootDatum& datum, const PinnedAutomorphism& sigma, const Weight& nu0,
            const Weight& xi);

// Graded dimensions of the sub-filtration of V(xi) indexed by the dominant
// weights nu with sigma(nu) - nu = xi; keys are those nu, values the
// graded jumps. Their sum equals dim V(xi).
std::map<Weight, int64_t> twisted_graded_dims(const Module& v, const PinnedAutomorphism& sigma,
                                              const Weight& xi);

// dim fil_nu k[T] = sum over dominant mu <= nu (dominance) of |W mu|.
Int fil_kT_dim(const RootDatum& datum, const Weight& nu);

}  // namespace twistinv
