#include "twistinv/filtration.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

#include "twistinv/parallel.hpp"

namespace twistinv {

namespace {

// Block of generator g between the weight spaces at `from` and `to`.
Mat weight_block(const Module& v, const SparseMat& g, const std::vector<int>& from,
                 const std::vector<int>& to) {
  std::map<int, int> row_of;
  for (size_t i = 0; i < to.size(); ++i) row_of[to[i]] = int(i);
  Mat b(int(to.size()), int(from.size()));
  for (size_t j = 0; j < from.size(); ++j)
    for (auto& [row, val] : g.col[from[j]]) {
      auto it = row_of.find(row);
      if (it != row_of.end()) b.at(it->second, int(j)) = val;
    }
  return b;
}

// Matrix of E_i^p (or F_i^p) restricted to V(nu), as a chain of blocks.
Mat power_block(const Module& v, int simple, int64_t p, const Weight& nu, bool raising) {
  auto spaces = v.weight_spaces();
  auto it = spaces.find(nu);
  if (it == spaces.end()) return Mat(0, 0);
  const Weight alpha = v.datum->simple_root(simple);
  std::vector<int> cur = it->second;
  Mat acc = Mat::identity(int(cur.size()));
  Weight w = nu;
  for (int64_t s = 0; s < p; ++s) {
    Weight next = raising ? w + alpha : w - alpha;
    auto jt = spaces.find(next);
    if (jt == spaces.end()) return Mat(0, acc.cols);  // zero map onward
    const SparseMat& g = raising ? v.e_mats[simple] : v.f_mats[simple];
    acc = mat_mul(weight_block(v, g, cur, jt->second), acc);
    cur = jt->second;
    w = next;
    if (acc.is_zero()) return Mat(0, acc.cols);
  }
  return acc;
}

int64_t space_dim(const Module& v, const Weight& nu) { return v.multiplicity(nu); }

// Ranks of all chain prefixes g^p restricted to V(nu), p = 1..len, by
// propagating a reduced image basis; the echelon step keeps entries small.
std::vector<int> prefix_ranks(const Module& v, int simple, int64_t len, const Weight& nu,
                              bool raising) {
  auto spaces = v.weight_spaces();
  const Weight alpha = v.datum->simple_root(simple);
  std::vector<int> cur = spaces.at(nu);
  Mat image = Mat::identity(int(cur.size()));
  std::vector<int> ranks;
  Weight w = nu;
  for (int64_t p = 1; p <= len; ++p) {
    Weight next = raising ? w + alpha : w - alpha;
    auto jt = spaces.find(next);
    if (jt == spaces.end() || image.cols == 0) {
      for (int64_t q = p; q <= len; ++q) ranks.push_back(0);
      return ranks;
    }
    const SparseMat& g = raising ? v.e_mats[simple] : v.f_mats[simple];
    image = column_space_basis(mat_mul(weight_block(v, g, cur, jt->second), image));
    ranks.push_back(image.cols);
    cur = jt->second;
    w = next;
  }
  return ranks;
}

}  // namespace

int64_t fil_alpha_dim(const Module& v, const Weight& nu, int simple, int64_t d) {
  int64_t dim_nu = space_dim(v, nu);
  if (dim_nu == 0) return 0;
  auto ranks = prefix_ranks(v, simple, d + 1, nu, true);
  return dim_nu - ranks.back();
}

int64_t fil_alpha_dim_via_F(const Module& v, const Weight& nu, int simple, int64_t d) {
  int64_t dim_nu = space_dim(v, nu);
  if (dim_nu == 0) return 0;
  int64_t m = v.datum->coroot_pairing(nu, v.datum->simple_root(simple));
  // the divided-power family F^{(m+d+j)}, j >= 1, contains the identity
  // when some exponent vanishes
  if (m + d <= -1) return 0;
  auto ranks = prefix_ranks(v, simple, m + d + 1, nu, false);
  return dim_nu - ranks.back();
}

Mat multifil_basis(const Module& v, const Weight& nu, const std::vector<int64_t>& lambda) {
  int64_t dim_nu = space_dim(v, nu);
  std::vector<Mat> powers;
  for (int i = 0; i < v.datum->rank(); ++i) {
    Mat p = power_block(v, i, lambda[i] + 1, nu, true);
    if (p.rows > 0) powers.push_back(std::move(p));
  }
  return joint_kernel(powers, int(dim_nu));
}

int64_t multifil_dim(const Module& v, const Weight& nu, const std::vector<int64_t>& lambda) {
  return multifil_basis(v, nu, lambda).cols;
}

std::vector<int64_t> filtration_box(const Module& v, const Weight& nu) {
  std::vector<int64_t> box(v.datum->rank(), 0);
  for (int i = 0; i < v.datum->rank(); ++i) {
    const Weight alpha = v.datum->simple_root(i);
    Weight w = nu + alpha;
    while (space_dim(v, w) > 0) {
      ++box[i];
      w = w + alpha;
    }
  }
  return box;
}

FiltrationProfile filtration_profile(const Module& v, const Weight& nu) {
  FiltrationProfile prof;
  prof.nu = nu;
  prof.dim_nu = space_dim(v, nu);
  prof.box = filtration_box(v, nu);
  const int r = v.datum->rank();
  for (int i = 0; i < r; ++i) {
    std::vector<int64_t> dims(prof.box[i] + 1, prof.dim_nu);
    if (prof.dim_nu > 0) {
      auto ranks = prefix_ranks(v, i, prof.box[i] + 1, nu, true);
      for (int64_t d = 0; d <= prof.box[i]; ++d) dims[d] = prof.dim_nu - ranks[d];
    }
    prof.fil_dims.push_back(std::move(dims));
  }
  if (prof.dim_nu == 0) return prof;

  if (r == 1) {
    // single filtration: graded jumps read off the dimension sequence
    int64_t prev = 0;
    for (int64_t d = 0; d <= prof.box[0]; ++d) {
      int64_t g = prof.fil_dims[0][d] - prev;
      prev = prof.fil_dims[0][d];
      if (g > 0) prof.gr.coeffs[{d}] = g;
    }
    return prof;
  }

  // fil bases over the box, visited in product order so that the sum of
  // the lower neighbours is available when each lambda is reached
  std::map<std::vector<int64_t>, Mat> basis;
  std::vector<int64_t> lam(r, 0);
  for (;;) {
    Mat b = multifil_basis(v, nu, lam);
    std::vector<const Mat*> lower;
    for (int i = 0; i < r; ++i)
      if (lam[i] > 0) {
        auto prev = lam;
        --prev[i];
        lower.push_back(&basis.at(prev));
      }
    int below = lower.empty() ? 0 : rank(hstack(lower));
    int64_t g = b.cols - below;
    if (g < 0) throw std::logic_error("gr dimension negative");
    if (g > 0) prof.gr.coeffs[lam] = g;
    basis.emplace(lam, std::move(b));

    int k = 0;
    while (k < r && lam[k] == prof.box[k]) lam[k++] = 0;
    if (k == r) break;
    ++lam[k];
  }
  return prof;
}

MultiWeightPolynomial gr_polynomial(const Module& v, const Weight& nu) {
  return filtration_profile(v, nu).gr;
}

std::map<Weight, FiltrationProfile> all_filtration_profiles(const Module& v) {
  std::vector<Weight> weights;
  for (auto& [w, idx] : v.weight_spaces()) weights.push_back(w);
  std::vector<FiltrationProfile> profs(weights.size());
  parallel_for(int64_t(weights.size()),
               [&](int64_t i) { profs[i] = filtration_profile(v, weights[i]); });
  std::map<Weight, FiltrationProfile> out;
  for (size_t i = 0; i < weights.size(); ++i) out.emplace(weights[i], std::move(profs[i]));
  return out;
}

std::map<Weight, FiltrationProfile> all_filtration_profiles_serial(const Module& v) {
  std::map<Weight, FiltrationProfile> out;
  for (auto& [w, idx] : v.weight_spaces()) out.emplace(w, filtration_profile(v, w));
  return out;
}

Weight nu_h(const RootDatum& datum, const PinnedAutomorphism& sigma, const Weight& nu0,
            const Weight& xi) {
  const int r = datum.rank();
  if (!datum.is_dominant(nu0)) throw std::invalid_argument("nu_h: nu0 not dominant");
  Weight nu(r, 0);
  std::vector<bool> seen(r, false);
  for (int a = 0; a < r; ++a) {
    if (seen[a]) continue;
    // walk the orbit: nu_{sigma^{-1}(i)} = nu_i + xi_i
    std::vector<int> orbit;
    std::vector<int64_t> offset;
    int i = a;
    int64_t off = 0;
    do {
      orbit.push_back(i);
      offset.push_back(off);
      seen[i] = true;
      off += xi[i];
      i = sigma.apply_node_inverse(i);
    } while (i != a);
    if (off != 0) throw std::invalid_argument("nu_h: xi is not in the image of (sigma - 1)");
    int64_t t = nu0[orbit[0]] - offset[0];
    for (size_t k = 0; k < orbit.size(); ++k) t = std::max(t, nu0[orbit[k]] - offset[k]);
    for (size_t k = 0; k < orbit.size(); ++k) nu[orbit[k]] = t + offset[k];
  }
  if (sigma.apply(nu) - nu != xi) throw std::logic_error("nu_h: solution check failed");
  return nu;
}

std::map<Weight, int64_t> twisted_graded_dims(const Module& v, const PinnedAutomorphism& sigma,
                                              const Weight& xi) {
  const RootDatum& datum = *v.datum;
  const int r = datum.rank();
  Weight base = nu_h(datum, sigma, zero_weight(r), xi);
  std::vector<int64_t> box = filtration_box(v, xi);

  // sigma-orbits of nodes index the sigma-fixed dominant cone
  std::vector<std::vector<int>> orbits;
  std::vector<bool> seen(r, false);
  for (int a = 0; a < r; ++a) {
    if (seen[a]) continue;
    std::vector<int> orb;
    int i = a;
    do {
      orb.push_back(i);
      seen[i] = true;
      i = sigma.apply_node(i);
    } while (i != a);
    orbits.push_back(orb);
  }
  std::vector<int64_t> bound(orbits.size(), 0);
  for (size_t o = 0; o < orbits.size(); ++o)
    for (int i : orbits[o]) bound[o] = std::max(bound[o], std::max<int64_t>(0, box[i] - base[i]));

  auto nu_of = [&](const std::vector<int64_t>& kappa) {
    Weight nu = base;
    for (size_t o = 0; o < orbits.size(); ++o)
      for (int i : orbits[o]) nu[i] += kappa[o];
    return nu;
  };
  auto clamp_lambda = [&](const Weight& nu) {
    std::vector<int64_t> lam(r);
    for (int i = 0; i < r; ++i) lam[i] = std::min(nu[i], box[i]);
    return lam;
  };

  std::map<std::vector<int64_t>, Mat> basis;
  std::map<Weight, int64_t> out;
  std::vector<int64_t> kappa(orbits.size(), 0);
  for (;;) {
    Weight nu = nu_of(kappa);
    Mat b = multifil_basis(v, xi, clamp_lambda(nu));
    std::vector<const Mat*> lower;
    for (size_t o = 0; o < orbits.size(); ++o)
      if (kappa[o] > 0) {
        auto prev = kappa;
        --prev[o];
        lower.push_back(&basis.at(prev));
      }
    int below = lower.empty() ? 0 : rank(hstack(lower));
    int64_t g = b.cols - below;
    if (g > 0) out[nu] = g;
    basis.emplace(kappa, std::move(b));

    size_t k = 0;
    while (k < orbits.size() && kappa[k] == bound[k]) kappa[k++] = 0;
    if (k == orbits.size()) break;
    ++kappa[k];
  }
  return out;
}

Int fil_kT_dim(const RootDatum& datum, const Weight& nu) {
  if (!datum.is_dominant(nu)) throw std::invalid_argument("fil_kT_dim: nu not dominant");
  Int total = 0;
  for (const Weight& mu : dominant_weights_below(datum, nu)) total += datum.orbit_size(mu);
  return total;
}

}  // namespace twistinv
