#include "twistinv/chevalley.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

#include "twistinv/invariants.hpp"

namespace twistinv {

TorusEndomorphism gamma_taut(const Module& v, const PinnedAutomorphism& sigma) {
  if (!v.sigma_map) throw std::invalid_argument("gamma_taut: sigma structure unavailable");
  const Mat& s = *v.sigma_map;
  TorusEndomorphism g;
  g.module = &v;
  int d = v.dim();
  g.entries.assign(d, std::vector<GroupAlgebraElement>(d, GroupAlgebraElement(v.datum->rank())));
  for (int j = 0; j < d; ++j) {
    Weight exp = sigma.apply(v.basis[j].weight);
    for (int i = 0; i < d; ++i) {
      if (s.at(i, j) == 0) continue;
      if (v.basis[i].weight != exp)
        throw std::logic_error("gamma_taut: sigma block violates the weight rule");
      g.entries[i][j] = GroupAlgebraElement::monomial(exp, s.at(i, j));
    }
  }
  return g;
}

Module sigma_stable_envelope(const RootDatum& datum, const PinnedAutomorphism& sigma,
                             const Weight& lambda) {
  if (!datum.is_dominant(lambda))
    throw std::invalid_argument("sigma_stable_envelope: non-dominant weight");
  if (sigma.apply(lambda) == lambda) {
    Module v = build_irreducible(datum, lambda);
    sigma_structure(v, sigma);
    return v;
  }
  // the sigma-orbit of lambda, cyclically linked by intertwiners
  std::vector<Weight> orbit{lambda};
  for (Weight w = sigma.apply(lambda); w != lambda; w = sigma.apply(w)) orbit.push_back(w);
  std::vector<Module> blocks;
  for (const Weight& w : orbit) blocks.push_back(build_irreducible(datum, w));
  Module sum = blocks[0];
  std::vector<int> offset{0};
  for (size_t k = 1; k < blocks.size(); ++k) {
    offset.push_back(sum.dim());
    sum = direct_sum(sum, blocks[k]);
  }
  int d = sum.dim();
  Mat map(d, d);
  for (size_t k = 0; k < blocks.size(); ++k) {
    size_t next = (k + 1) % blocks.size();
    Mat a = sigma_intertwiner(blocks[k], blocks[next], sigma);
    for (int i = 0; i < a.rows; ++i)
      for (int j = 0; j < a.cols; ++j)
        if (a.at(i, j) != 0) map.at(offset[next] + i, offset[k] + j) = a.at(i, j);
  }
  sum.sigma_map = map;
  sum.sigma_perm = sigma.perm;
  sum.highest.reset();  // reducible unless the orbit is a point
  return sum;
}

CharPolynomial char_polynomial(const Module& v, const PinnedAutomorphism& sigma) {
  if (!v.sigma_map) throw std::invalid_argument("char_polynomial: sigma structure unavailable");
  int d = v.dim();
  CharPolynomial p;
  p.coeffs.assign(d + 1, GroupAlgebraElement(v.datum->rank()));
  for (int k = 0; k <= d; ++k) {
    Module wedge = exterior_power(v, k);
    GroupAlgebraElement chi = twisted_character(wedge, sigma);
    if (k % 2 == 1) chi = -chi;
    p.coeffs[d - k] = std::move(chi);  // (-1)^k chi_{wedge^k} x^{d-k}
  }
  return p;
}

bool cayley_hamilton_check(const Module& v, const PinnedAutomorphism& sigma) {
  TorusEndomorphism g = gamma_taut(v, sigma);
  CharPolynomial f = char_polynomial(v, sigma);
  int d = g.dim();
  size_t rank = v.datum->rank();
  auto zero_row = std::vector<GroupAlgebraElement>(d, GroupAlgebraElement(rank));
  std::vector<std::vector<GroupAlgebraElement>> acc(d, zero_row);  // f(gamma), accumulated
  std::vector<std::vector<GroupAlgebraElement>> power(d, zero_row);
  for (int i = 0; i < d; ++i) power[i][i] = GroupAlgebraElement::constant(rank, 1);
  for (int k = 0; k <= d; ++k) {
    for (int i = 0; i < d; ++i)
      for (int j = 0; j < d; ++j) acc[i][j] += power[i][j] * f.coeffs[k];
    if (k == d) break;
    std::vector<std::vector<GroupAlgebraElement>> next(d, zero_row);
    for (int i = 0; i < d; ++i)
      for (int l = 0; l < d; ++l) {
        if (g.entries[i][l].is_zero()) continue;
        for (int j = 0; j < d; ++j)
          if (!power[l][j].is_zero()) next[i][j] += g.entries[i][l] * power[l][j];
      }
    power = std::move(next);
  }
  for (int i = 0; i < d; ++i)
    for (int j = 0; j < d; ++j)
      if (!acc[i][j].is_zero()) return false;
  return true;
}

namespace {

std::vector<Weight> minuscule_weights(const Module& v) {
  std::vector<Weight> weights;
  for (auto& b : v.basis) weights.push_back(b.weight);
  std::sort(weights.begin(), weights.end(), std::greater<>());  // highest first
  if (std::adjacent_find(weights.begin(), weights.end()) != weights.end())
    throw std::invalid_argument("module is not minuscule: repeated weight");
  auto orbit = v.datum->weyl_orbit(weights.front());
  std::set<Weight> os(orbit.begin(), orbit.end());
  for (auto& w : weights)
    if (!os.count(w)) throw std::invalid_argument("module is not minuscule: several orbits");
  if (os.size() != weights.size())
    throw std::invalid_argument("module is not minuscule: orbit not exhausted");
  return weights;
}

}  // namespace

GroupAlgebraElement vandermonde_minuscule(const Module& v) {
  auto weights = minuscule_weights(v);
  size_t rank = v.datum->rank();
  GroupAlgebraElement prod = GroupAlgebraElement::constant(rank, 1);
  for (size_t a = 0; a < weights.size(); ++a)
    for (size_t b = a + 1; b < weights.size(); ++b)
      prod = prod * (GroupAlgebraElement::monomial(weights[a], 1) -
                     GroupAlgebraElement::monomial(weights[b], 1));
  return prod;
}

bool vandermonde_factors_are_root_divisors(const Module& v) {
  auto weights = minuscule_weights(v);
  std::set<Weight> roots;
  for (auto& r : v.datum->all_roots()) roots.insert(r);
  for (size_t a = 0; a < weights.size(); ++a)
    for (size_t b = a + 1; b < weights.size(); ++b)
      if (!roots.count(weights[a] - weights[b])) return false;
  return true;
}

bool chevalley_w0_invariance(const GroupAlgebraElement& chi, const RootDatum& datum,
                             const FoldedDatum& folded) {
  return is_w0_invariant(chi, datum, folded);
}

}  // namespace twistinv
