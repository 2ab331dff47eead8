#include "twistinv/invariants.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

#include "twistinv/parallel.hpp"

namespace twistinv {

namespace {

int unique_weight_index(const Module& m, const Weight& w) {
  int found = -1;
  for (int i = 0; i < m.dim(); ++i)
    if (m.basis[i].weight == w) {
      if (found >= 0) throw std::logic_error("weight space not one-dimensional");
      found = i;
    }
  if (found < 0) throw std::logic_error("weight vector not found");
  return found;
}

// G-invariant vectors of a finite-dimensional module over characteristic
// zero: weight-zero vectors killed by every raising operator (such a
// vector is primitive of weight zero, hence spans a trivial summand).
// Columns are returned in full-module coordinates; annihilation by the
// lowering operators is verified afterwards.
Mat g_invariants(const Module& m) {
  const int r = m.datum->rank();
  std::vector<int> zero_idx;
  for (int i = 0; i < m.dim(); ++i)
    if (is_zero(m.basis[i].weight)) zero_idx.push_back(i);
  int z = int(zero_idx.size());
  if (z == 0) return Mat(m.dim(), 0);

  std::vector<Mat> blocks;
  for (int i = 0; i < r; ++i) {
    std::map<int, int> target_row;
    Weight alpha = m.datum->simple_root(i);
    for (int k = 0; k < m.dim(); ++k)
      if (m.basis[k].weight == alpha) target_row.emplace(k, int(target_row.size()));
    Mat b(int(target_row.size()), z);
    for (int c = 0; c < z; ++c)
      for (auto& [row, val] : m.e_mats[i].col[zero_idx[c]]) {
        auto it = target_row.find(row);
        if (it != target_row.end()) b.at(it->second, c) = val;
      }
    if (b.rows > 0) blocks.push_back(std::move(b));
  }
  std::vector<const Mat*> ptrs;
  for (auto& b : blocks) ptrs.push_back(&b);
  Mat small = ptrs.empty() ? Mat::identity(z) : kernel_basis(vstack(ptrs));

  Mat full(m.dim(), small.cols);
  for (int c = 0; c < small.cols; ++c)
    for (int k = 0; k < z; ++k) full.at(zero_idx[k], c) = small.at(k, c);
  for (int i = 0; i < r; ++i) {
    if (!apply(m.e_mats[i], full).is_zero() || !apply(m.f_mats[i], full).is_zero())
      throw std::logic_error("g_invariants: primitive vector is not invariant");
  }
  return full;
}

}  // namespace

InvariantBasis invariant_basis(const RootDatum& datum, const PinnedAutomorphism& sigma,
                               const Module& v, const Weight& nu) {
  if (!datum.is_dominant(nu)) throw std::invalid_argument("invariant_basis: nu not dominant");
  InvariantBasis b;
  b.nu = nu;
  b.v = &v;
  Int triple_dim = weyl_dim(datum, nu) * weyl_dim(datum, sigma.apply(datum.star(nu))) * v.dim();
  if (triple_dim > dimension_cap())
    throw std::runtime_error("invariant_basis: dimension cap exceeded");
  b.s_left = build_irreducible(datum, sigma.apply(datum.star(nu)));
  b.s_mid = build_irreducible(datum, nu);
  Module triple = tensor(tensor(b.s_left, b.s_mid), v);
  b.vectors = g_invariants(triple);
  return b;
}

std::vector<Rat> leading_term(const InvariantBasis& basis, int column) {
  const Module& v = *basis.v;
  const RootDatum& datum = *v.datum;
  // lowest weight of S_{sigma(nu*)} is -sigma(nu); highest of S_nu is the seed
  Weight low = datum.apply_word(datum.w0_word(), *basis.s_left.highest);
  int idx_low = unique_weight_index(basis.s_left, low);
  int dm = basis.s_mid.dim(), dv = v.dim();
  std::vector<Rat> out(dv);
  for (int m = 0; m < dv; ++m)
    out[m] = basis.vectors.at((idx_low * dm + 0) * dv + m, column);
  return out;
}

TorusValuedFunction restrict_to_torus(const RootDatum& datum, const PinnedAutomorphism& sigma,
                                      const InvariantBasis& basis, int column) {
  const Module& v = *basis.v;
  // S_{sigma nu} receives both the sigma-intertwiner from S_nu and the
  // canonical pairing against S_{sigma(nu*)} (as its dual realization)
  Module s_twist = build_irreducible(datum, sigma.apply(basis.nu));
  Mat inter = sigma_intertwiner(basis.s_mid, s_twist, sigma);
  Module s_twist_dual = dual(s_twist);
  Weight low_tw = datum.apply_word(datum.w0_word(), *s_twist.highest);
  int seed = unique_weight_index(s_twist, low_tw);  // dual seed index matches
  std::vector<int> id_perm(datum.rank());
  for (int i = 0; i < datum.rank(); ++i) id_perm[i] = i;
  Mat phi = equivariant_map(basis.s_left, s_twist_dual, id_perm, seed);
  // pairing P[a][j] = <phi(u_a), inter(e_j)> in dual coordinates
  Mat pairing = mat_mul(transpose(phi), inter);

  int dl = basis.s_left.dim(), dm = basis.s_mid.dim(), dv = v.dim();
  TorusValuedFunction f;
  f.v = &v;
  f.comp.assign(dv, GroupAlgebraElement(datum.rank()));
  for (int a = 0; a < dl; ++a)
    for (int j = 0; j < dm; ++j) {
      if (pairing.at(a, j) == 0) continue;
      Weight exp = sigma.apply(basis.s_mid.basis[j].weight);
      for (int m = 0; m < dv; ++m) {
        Rat c = basis.vectors.at((a * dm + j) * dv + m, column);
        if (c != 0) f.comp[m].add_term(exp, c * pairing.at(a, j));
      }
    }
  return f;
}

GroupAlgebraElement pair_functions(const TorusValuedFunction& f, const TorusValuedFunction& g) {
  if (f.comp.size() != g.comp.size()) throw std::invalid_argument("pair_functions: size mismatch");
  GroupAlgebraElement out(f.comp.empty() ? 0 : f.comp[0].rank());
  for (size_t m = 0; m < f.comp.size(); ++m) out += f.comp[m] * g.comp[m];
  return out;
}

bool is_w0_invariant(const GroupAlgebraElement& x, const RootDatum& datum,
                     const FoldedDatum& folded) {
  for (const WeylWord& word : folded.w0_generators) {
    GroupAlgebraElement moved =
        x.map_exponents([&](const Weight& e) { return datum.apply_word(word, e); });
    if (!(moved == x)) return false;
  }
  return true;
}

namespace {

std::vector<int> identity_perm(int r) {
  std::vector<int> p(r);
  for (int i = 0; i < r; ++i) p[i] = i;
  return p;
}

struct RowPlan {
  Weight xi;
  Weight nu;
  InvariantBasis basis;
  int column;
};

// Collects dim V(xi) rows per xi: start at nu_h and climb along the
// sigma-fixed dominant cone, keeping only columns whose leading terms
// extend the span of the earlier ones.
std::vector<RowPlan> collect_rows(const RootDatum& datum, const PinnedAutomorphism& sigma,
                                  const Module& v, const CoinvariantLattice& lattice) {
  std::vector<RowPlan> rows;
  std::set<Weight> xis;
  for (auto& b : v.basis)
    if (lattice.is_zero_class(b.weight)) xis.insert(b.weight);

  const int r = datum.rank();
  std::vector<std::vector<int>> orbits;
  {
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
  }

  for (const Weight& xi : xis) {
    int64_t target = v.multiplicity(xi);
    Weight base = nu_h(datum, sigma, zero_weight(r), xi);
    std::vector<int64_t> box = filtration_box(v, xi);
    std::vector<int64_t> bound(orbits.size(), 0);
    for (size_t o = 0; o < orbits.size(); ++o)
      for (int i : orbits[o])
        bound[o] = std::max(bound[o], std::max<int64_t>(0, box[i] - base[i]));

    // enumerate kappa by total degree, then lex
    std::vector<std::vector<int64_t>> kappas;
    std::vector<int64_t> kappa(orbits.size(), 0);
    for (;;) {
      kappas.push_back(kappa);
      size_t k = 0;
      while (k < orbits.size() && kappa[k] == bound[k]) kappa[k++] = 0;
      if (k == orbits.size()) break;
      ++kappa[k];
    }
    std::sort(kappas.begin(), kappas.end(), [](const auto& x, const auto& y) {
      int64_t sx = 0, sy = 0;
      for (auto t : x) sx += t;
      for (auto t : y) sy += t;
      if (sx != sy) return sx < sy;
      return x < y;
    });

    Mat span(int(target), 0);
    // V(xi) coordinates: positions of xi-basis vectors inside V
    std::vector<int> xi_idx;
    for (int i = 0; i < v.dim(); ++i)
      if (v.basis[i].weight == xi) xi_idx.push_back(i);

    for (const auto& k : kappas) {
      if (span.cols == int(target)) break;
      Weight nu = base;
      for (size_t o = 0; o < orbits.size(); ++o)
        for (int i : orbits[o]) nu[i] += k[o];
      std::vector<int64_t> lam(r);
      for (int i = 0; i < r; ++i) lam[i] = std::min(nu[i], box[i]);
      Mat fil = multifil_basis(v, xi, lam);
      // the span always contains every fil space processed earlier, so the
      // rows land exactly at the graded jumps of the nu_h-indexed chain
      if (subspace_contains(span, fil)) continue;

      InvariantBasis ib = invariant_basis(datum, sigma, v, nu);
      for (int c = 0; c < ib.dim(); ++c) {
        std::vector<Rat> lt = leading_term(ib, c);
        Mat col(int(target), 1);
        for (size_t p = 0; p < xi_idx.size(); ++p) col.at(int(p), 0) = lt[xi_idx[p]];
        if (col.is_zero()) continue;
        std::vector<const Mat*> joined{&span, &col};
        Mat bigger = hstack(joined);
        if (rank(bigger) == span.cols) continue;
        span = column_space_basis(std::move(bigger));
        rows.push_back({xi, nu, ib, c});
        if (span.cols == int(target)) break;
      }
    }
    if (span.cols != int(target))
      throw std::runtime_error("pairing rows: leading terms did not fill V(xi)");
  }
  return rows;
}

GroupAlgebraElement laurent_determinant(const std::vector<std::vector<GroupAlgebraElement>>& m,
                                        size_t rank_hint) {
  size_t n = m.size();
  if (n == 0) return GroupAlgebraElement::constant(rank_hint, 1);
  if (n == 1) return m[0][0];
  GroupAlgebraElement det(m[0][0].rank());
  for (size_t j = 0; j < n; ++j) {
    std::vector<std::vector<GroupAlgebraElement>> minor;
    for (size_t i = 1; i < n; ++i) {
      std::vector<GroupAlgebraElement> row;
      for (size_t c = 0; c < n; ++c)
        if (c != j) row.push_back(m[i][c]);
      minor.push_back(std::move(row));
    }
    GroupAlgebraElement term = m[0][j] * laurent_determinant(minor, rank_hint);
    if (j % 2 == 0)
      det += term;
    else
      det -= term;
  }
  return det;
}

}  // namespace

GroupAlgebraElement predicted_determinant(const RootDatum& datum,
                                          const PinnedAutomorphism& sigma, const Module& v) {
  CoinvariantLattice lattice(datum, sigma);
  GroupAlgebraElement pred = GroupAlgebraElement::constant(datum.rank(), 1);
  for (const SigmaOrbit& o : sigma_orbits(datum, sigma)) {
    int64_t z = zeta(v, lattice, o);
    if (z == 0) continue;
    GroupAlgebraElement factor =
        GroupAlgebraElement::monomial(o.alpha_O, 1) +
        GroupAlgebraElement::constant(datum.rank(), o.orbit_type == OrbitType::BCplus ? 1 : -1);
    for (int64_t k = 0; k < z; ++k) pred = pred * factor;
  }
  return pred;
}

PairingMatrix pairing_matrix(const RootDatum& datum, const PinnedAutomorphism& sigma,
                             const Module& v) {
  CoinvariantLattice lattice(datum, sigma);
  FoldedDatum folded = fold(datum, sigma);
  Module vdual = dual(v);

  auto row_plans = collect_rows(datum, sigma, v, lattice);
  auto col_plans = collect_rows(datum, sigma, vdual, lattice);
  if (row_plans.size() != col_plans.size())
    throw std::runtime_error("pairing_matrix: V and V* row counts differ");

  PairingMatrix pm;
  for (auto& p : row_plans)
    pm.rows.push_back({p.xi, p.nu, restrict_to_torus(datum, sigma, p.basis, p.column)});
  for (auto& p : col_plans)
    pm.cols.push_back({p.xi, p.nu, restrict_to_torus(datum, sigma, p.basis, p.column)});

  size_t n = pm.rows.size();
  pm.entries.assign(n, std::vector<GroupAlgebraElement>(n, GroupAlgebraElement(datum.rank())));
  std::vector<std::pair<size_t, size_t>> cells;
  for (size_t i = 0; i < n; ++i)
    for (size_t j = 0; j < n; ++j) cells.emplace_back(i, j);
  parallel_for(int64_t(cells.size()), [&](int64_t c) {
    auto [i, j] = cells[size_t(c)];
    pm.entries[i][j] = pair_functions(pm.rows[i].f, pm.cols[j].f);
  });
  for (size_t i = 0; i < n; ++i)
    for (size_t j = 0; j < n; ++j) {
      for (auto& [e, cf] : pm.entries[i][j].terms())
        if (sigma.apply(e) != e)
          throw std::runtime_error("pairing_matrix: entry exponent not sigma-fixed");
      if (!is_w0_invariant(pm.entries[i][j], datum, folded))
        throw std::runtime_error("pairing_matrix: entry fails W0-invariance");
    }

  pm.det = laurent_determinant(pm.entries, datum.rank());
  pm.predicted = predicted_determinant(datum, sigma, v);

  // factored form against the candidate divisors e^{alpha_O} -+ 1; the
  // orbits O and -O cut out the same divisor, so extract per +-class and
  // split the (even) count between the two
  auto orbits = sigma_orbits(datum, sigma);
  pm.factored_exponents.assign(orbits.size(), 0);
  GroupAlgebraElement rem = pm.det;
  std::vector<bool> done(orbits.size(), false);
  for (size_t k = 0; k < orbits.size(); ++k) {
    if (done[k]) continue;
    size_t mate = k;
    for (size_t l = k + 1; l < orbits.size(); ++l)
      if (orbits[l].alpha_O == -orbits[k].alpha_O &&
          orbits[l].orbit_type == orbits[k].orbit_type)
        mate = l;
    done[k] = done[mate] = true;
    GroupAlgebraElement factor =
        GroupAlgebraElement::monomial(orbits[k].alpha_O, 1) +
        GroupAlgebraElement::constant(datum.rank(),
                                      orbits[k].orbit_type == OrbitType::BCplus ? 1 : -1);
    int64_t count = 0;
    GroupAlgebraElement q;
    while (!rem.is_zero() && rem.divide_exact(factor, &q)) {
      rem = q;
      ++count;
    }
    if (mate != k) {
      pm.factored_exponents[k] = count / 2;
      pm.factored_exponents[mate] = count - count / 2;
    } else {
      pm.factored_exponents[k] = count;
    }
  }

  auto rep = determinant_check(pm);
  pm.matches = rep.matches;
  pm.unit = rep.unit;
  return pm;
}

DeterminantReport determinant_check(const PairingMatrix& m) {
  DeterminantReport rep;
  GroupAlgebraElement q1, q2;
  if (m.det.is_zero()) return rep;
  if (!m.det.divide_exact(m.predicted, &q1)) return rep;
  if (!m.predicted.divide_exact(m.det, &q2)) return rep;
  if (q1.num_terms() != 1) return rep;
  Weight shift = q1.terms().begin()->first;
  if (!is_zero(shift)) return rep;
  rep.matches = true;
  rep.unit = q1.terms().begin()->second;
  return rep;
}

std::vector<Rat> canonical_invariant(const Module& s_eta_star, const Module& s_eta) {
  Module t = tensor(s_eta_star, s_eta);
  Mat k = g_invariants(t);
  if (k.cols != 1) throw std::logic_error("canonical_invariant: invariant space not a line");
  std::vector<Rat> v(t.dim());
  for (int i = 0; i < t.dim(); ++i) v[i] = k.at(i, 0);
  return v;
}

Mat cartan_quotient(const Module& s_nu, const Module& s_eta, const Module& s_sum) {
  Module t = tensor(s_nu, s_eta);
  Mat iota = equivariant_map(s_sum, t, identity_perm(s_sum.datum->rank()), 0);
  // q is the contravariant adjoint of iota, block by weight space:
  // <q(x), z>_{sum} = <x, iota(z)>_{tensor}
  Mat q(s_sum.dim(), t.dim());
  auto sum_spaces = s_sum.weight_spaces();
  int de = s_eta.dim();
  for (auto& [mu, sum_idx] : sum_spaces) {
    // tensor indices of weight mu
    std::vector<int> t_idx;
    for (int i = 0; i < t.dim(); ++i)
      if (t.basis[i].weight == mu) t_idx.push_back(i);
    // product Gram on the tensor block
    Mat gt(int(t_idx.size()), int(t_idx.size()));
    for (size_t a = 0; a < t_idx.size(); ++a)
      for (size_t b = 0; b < t_idx.size(); ++b) {
        int a1 = t_idx[a] / de, a2 = t_idx[a] % de;
        int b1 = t_idx[b] / de, b2 = t_idx[b] % de;
        if (s_nu.basis[a1].weight != s_nu.basis[b1].weight) continue;
        const Mat& g1 = s_nu.gram.at(s_nu.basis[a1].weight);
        const Mat& g2 = s_eta.gram.at(s_eta.basis[a2].weight);
        auto pos = [](const Module& m, const Weight& w, int idx) {
          int p = 0;
          for (int i = 0; i < idx; ++i)
            if (m.basis[i].weight == w) ++p;
          return p;
        };
        gt.at(int(a), int(b)) = g1.at(pos(s_nu, s_nu.basis[a1].weight, a1),
                                      pos(s_nu, s_nu.basis[b1].weight, b1)) *
                                g2.at(pos(s_eta, s_eta.basis[a2].weight, a2),
                                      pos(s_eta, s_eta.basis[b2].weight, b2));
      }
    // iota block: rows t_idx, cols sum_idx
    Mat ib(int(t_idx.size()), int(sum_idx.size()));
    for (size_t a = 0; a < t_idx.size(); ++a)
      for (size_t b = 0; b < sum_idx.size(); ++b) ib.at(int(a), int(b)) = iota.at(t_idx[a], sum_idx[b]);
    Mat block = mat_mul(solve_matrix(s_sum.gram.at(mu), transpose(ib)), gt);
    for (size_t a = 0; a < sum_idx.size(); ++a)
      for (size_t b = 0; b < t_idx.size(); ++b) q.at(sum_idx[a], t_idx[b]) = block.at(int(a), int(b));
  }
  // exact verification of the intertwining relations
  for (int i = 0; i < s_sum.datum->rank(); ++i) {
    if (!(mat_mul(q, t.e_mats[i].dense()) == apply(s_sum.e_mats[i], q)))
      throw std::runtime_error("cartan_quotient: e-relation failed");
    if (!(mat_mul(q, t.f_mats[i].dense()) == apply(s_sum.f_mats[i], q)))
      throw std::runtime_error("cartan_quotient: f-relation failed");
  }
  return q;
}

std::vector<Rat> multiply_by_sigma_eta(const RootDatum& datum, const PinnedAutomorphism& sigma,
                                       const InvariantBasis& basis, int column, const Weight& eta) {
  if (sigma.apply(eta) != eta) throw std::invalid_argument("multiply_by_sigma_eta: eta not fixed");
  const Module& v = *basis.v;
  Weight eta_star = datum.star(eta);
  Module s_eta = build_irreducible(datum, eta);
  Module s_eta_star = build_irreducible(datum, eta_star);
  std::vector<Rat> c = canonical_invariant(s_eta_star, s_eta);

  Weight nu2 = basis.nu + eta;
  Module left2 = build_irreducible(datum, sigma.apply(datum.star(nu2)));
  Module mid2 = build_irreducible(datum, nu2);
  Mat ql = cartan_quotient(basis.s_left, s_eta_star, left2);
  Mat qm = cartan_quotient(basis.s_mid, s_eta, mid2);

  int dl = basis.s_left.dim(), dm = basis.s_mid.dim(), dv = v.dim();
  int dls = s_eta_star.dim(), dms = s_eta.dim();
  int DL = left2.dim(), DM = mid2.dim();
  std::vector<Rat> out(size_t(DL) * DM * dv);
  for (int a = 0; a < dl; ++a)
    for (int j = 0; j < dm; ++j)
      for (int m = 0; m < dv; ++m) {
        Rat bc = basis.vectors.at((a * dm + j) * dv + m, column);
        if (bc == 0) continue;
        for (int x = 0; x < dls; ++x)
          for (int y = 0; y < dms; ++y) {
            Rat cc = c[x * dms + y];
            if (cc == 0) continue;
            for (int A = 0; A < DL; ++A) {
              Rat la = ql.at(A, a * dls + x);
              if (la == 0) continue;
              for (int J = 0; J < DM; ++J) {
                Rat mb = qm.at(J, j * dms + y);
                if (mb == 0) continue;
                out[(size_t(A) * DM + J) * dv + m] += bc * cc * la * mb;
              }
            }
          }
      }
  return out;
}

}  // namespace twistinv
