#include "twistinv/repn.hpp"

#include <algorithm>
#include <cstdlib>
#include <functional>
#include <numeric>
#include <set>
#include <stdexcept>

namespace twistinv {

int64_t dimension_cap() {
  const char* s = std::getenv("TWISTINV_DIM_CAP");
  if (s) {
    int64_t v = std::atoll(s);
    if (v > 0) return v;
  }
  return 5000;
}

std::map<Weight, std::vector<int>> Module::weight_spaces() const {
  std::map<Weight, std::vector<int>> ws;
  for (int i = 0; i < dim(); ++i) ws[basis[i].weight].push_back(i);
  return ws;
}

std::map<Weight, int64_t> Module::weight_multiplicities() const {
  std::map<Weight, int64_t> m;
  for (auto& b : basis) ++m[b.weight];
  return m;
}

int64_t Module::multiplicity(const Weight& w) const {
  int64_t n = 0;
  for (auto& b : basis)
    if (b.weight == w) ++n;
  return n;
}

GroupAlgebraElement Module::character() const {
  GroupAlgebraElement ch(datum->rank());
  for (auto& b : basis) ch.add_term(b.weight, 1);
  return ch;
}

void Module::check_serre_relations() const {
  int r = datum->rank();
  for (int i = 0; i < r; ++i)
    for (int j = 0; j < r; ++j) {
      SparseMat ef = sparse_mul(e_mats[i], f_mats[j]);
      SparseMat fe = sparse_mul(f_mats[j], e_mats[i]);
      SparseMat comm(dim(), dim());
      for (int c = 0; c < dim(); ++c) {
        for (auto& [row, v] : ef.col[c]) comm.add(row, c, v);
        for (auto& [row, v] : fe.col[c]) comm.add(row, c, -v);
        if (i == j) comm.add(c, c, -Rat(basis[c].weight[i]));
      }
      if (comm.nnz() != 0) throw std::runtime_error("Serre relation [e_i, f_j] failed");
    }
  for (int i = 0; i < r; ++i)
    for (int c = 0; c < dim(); ++c) {
      Weight up = basis[c].weight + datum->simple_root(i);
      Weight down = basis[c].weight - datum->simple_root(i);
      for (auto& [row, v] : e_mats[i].col[c])
        if (basis[row].weight != up) throw std::runtime_error("e_i does not raise by alpha_i");
      for (auto& [row, v] : f_mats[i].col[c])
        if (basis[row].weight != down) throw std::runtime_error("f_i does not lower by alpha_i");
    }
}

namespace {

using SparseVec = std::vector<std::pair<int, Rat>>;

SparseVec scale(const SparseVec& v, const Rat& c) {
  SparseVec r;
  if (c == 0) return r;
  r.reserve(v.size());
  for (auto& [i, x] : v) r.emplace_back(i, x * c);
  return r;
}

void axpy(SparseVec& acc, const SparseVec& v, const Rat& c) {
  if (c == 0) return;
  SparseVec merged;
  merged.reserve(acc.size() + v.size());
  size_t a = 0, b = 0;
  while (a < acc.size() || b < v.size()) {
    if (b == v.size() || (a < acc.size() && acc[a].first < v[b].first)) {
      merged.push_back(acc[a++]);
    } else if (a == acc.size() || v[b].first < acc[a].first) {
      merged.emplace_back(v[b].first, v[b].second * c);
      ++b;
    } else {
      Rat s = acc[a].second + v[b].second * c;
      if (s != 0) merged.emplace_back(acc[a].first, s);
      ++a;
      ++b;
    }
  }
  acc = std::move(merged);
}

}  // namespace

Module build_irreducible(const RootDatum& datum, const Weight& lambda, int64_t cap) {
  if (!datum.is_dominant(lambda))
    throw std::invalid_argument("build_irreducible: non-dominant highest weight");
  const int r = datum.rank();

  Module v;
  v.datum = &datum;
  v.highest = lambda;
  v.basis.push_back({lambda, -1, -1});

  // per-basis-vector generator images over the global basis
  std::vector<std::vector<SparseVec>> e_img(1, std::vector<SparseVec>(r));
  std::vector<std::vector<SparseVec>> f_img(1, std::vector<SparseVec>(r));

  struct WS {
    std::vector<int> idx;  // global basis indices
    Mat gram;              // contravariant form on that basis
  };
  std::map<Weight, WS> spaces;
  spaces[lambda] = {{0}, Mat::identity(1)};
  v.gram[lambda] = Mat::identity(1);

  std::vector<Weight> level{lambda};
  while (!level.empty()) {
    std::set<Weight> next_set;
    for (const Weight& mu : level)
      for (int i = 0; i < r; ++i) next_set.insert(mu - datum.simple_root(i));
    std::vector<Weight> next_level;

    for (const Weight& nu : next_set) {
      // spanning set: f_i applied to every basis vector one level up
      struct Span {
        int gen;
        int parent;             // global index
        std::vector<SparseVec> e_act;  // e_j(span) over bases of V(nu+alpha_j)
      };
      std::vector<Span> spans;
      for (int i = 0; i < r; ++i) {
        auto it = spaces.find(nu + datum.simple_root(i));
        if (it == spaces.end()) continue;
        for (int w : it->second.idx) spans.push_back({i, w, {}});
      }
      if (spans.empty()) continue;

      for (auto& s : spans) {
        s.e_act.resize(r);
        // e_j f_i w = f_i e_j w + delta_ij <wt(w), alpha_j^vee> w
        for (int j = 0; j < r; ++j) {
          SparseVec acc;
          for (auto& [k, c] : e_img[s.parent][j]) axpy(acc, f_img[k][s.gen], c);
          if (j == s.gen) axpy(acc, {{s.parent, Rat(1)}}, Rat(v.basis[s.parent].weight[j]));
          s.e_act[j] = std::move(acc);
        }
      }

      // contravariant Gram on the spanning set:
      // <f_i w, t> = <w, e_i t> read off in V(nu + alpha_i)
      int n = int(spans.size());
      Mat g(n, n);
      for (int a = 0; a < n; ++a) {
        const Weight up = nu + datum.simple_root(spans[a].gen);
        const WS& ws_up = spaces.at(up);
        std::map<int, int> pos;  // global index -> position in ws_up
        for (size_t p = 0; p < ws_up.idx.size(); ++p) pos[ws_up.idx[p]] = int(p);
        int wa = pos.at(spans[a].parent);
        for (int b = 0; b < n; ++b) {
          Rat sum = 0;
          for (auto& [k, c] : spans[b].e_act[spans[a].gen]) sum += c * ws_up.gram.at(wa, pos.at(k));
          g.at(a, b) = sum;
        }
      }

      // greedy pivot choice: radical = kernel of g; pivots give the basis
      std::vector<int> pivots;
      {
        Mat work = g;
        std::vector<bool> used_row(n, false);
        for (int c = 0; c < n; ++c) {
          int p = -1;
          for (int i2 = 0; i2 < n; ++i2)
            if (!used_row[i2] && work.at(i2, c) != 0) {
              p = i2;
              break;
            }
          if (p < 0) continue;
          used_row[p] = true;
          pivots.push_back(c);
          Rat inv = 1 / work.at(p, c);
          for (int i2 = 0; i2 < n; ++i2) {
            if (i2 == p || work.at(i2, c) == 0) continue;
            Rat f = work.at(i2, c) * inv;
            for (int j2 = 0; j2 < n; ++j2) work.at(i2, j2) -= f * work.at(p, j2);
          }
          for (int j2 = 0; j2 < n; ++j2) work.at(p, j2) = 0;  // retire the pivot row
        }
      }
      if (pivots.empty()) continue;  // weight space dies in the quotient

      if (int64_t(v.basis.size()) + int64_t(pivots.size()) > cap)
        throw std::runtime_error("build_irreducible: dimension cap exceeded");

      WS ws;
      int base = int(v.basis.size());
      std::map<int, int> span_to_basis;  // spanning position -> global index
      for (size_t p = 0; p < pivots.size(); ++p) {
        const Span& s = spans[pivots[p]];
        v.basis.push_back({nu, s.gen, s.parent});
        e_img.emplace_back(r);
        f_img.emplace_back(r);
        ws.idx.push_back(base + int(p));
        span_to_basis[pivots[p]] = base + int(p);
      }
      ws.gram = Mat(int(pivots.size()), int(pivots.size()));
      for (size_t a = 0; a < pivots.size(); ++a)
        for (size_t b = 0; b < pivots.size(); ++b)
          ws.gram.at(int(a), int(b)) = g.at(pivots[a], pivots[b]);

      // e-action of the new basis vectors
      for (size_t p = 0; p < pivots.size(); ++p)
        e_img[size_t(base) + p] = spans[pivots[p]].e_act;

      // every spanning vector expands over the pivot basis: the non-pivot
      // coordinates come from solving against the invertible pivot Gram
      for (int sidx = 0; sidx < n; ++sidx) {
        SparseVec expansion;
        if (span_to_basis.count(sidx)) {
          expansion = {{span_to_basis[sidx], Rat(1)}};
        } else {
          std::vector<Rat> rhs(pivots.size());
          for (size_t a = 0; a < pivots.size(); ++a) rhs[a] = g.at(pivots[a], sidx);
          auto coeffs = solve(ws.gram, std::move(rhs));
          for (size_t a = 0; a < pivots.size(); ++a)
            if (coeffs[a] != 0) expansion.emplace_back(base + int(a), coeffs[a]);
        }
        f_img[spans[sidx].parent][spans[sidx].gen] = std::move(expansion);
      }

      v.gram[nu] = ws.gram;
      spaces.emplace(nu, std::move(ws));
      next_level.push_back(nu);
    }
    level = std::move(next_level);
  }

  int d = v.dim();
  v.e_mats.assign(r, SparseMat(d, d));
  v.f_mats.assign(r, SparseMat(d, d));
  for (int c = 0; c < d; ++c)
    for (int i = 0; i < r; ++i) {
      for (auto& [row, val] : e_img[c][i]) v.e_mats[i].add(row, c, val);
      for (auto& [row, val] : f_img[c][i]) v.f_mats[i].add(row, c, val);
    }
  return v;
}

Module trivial_module(const RootDatum& datum) {
  return build_irreducible(datum, zero_weight(datum.rank()));
}

// Enumerates dominant nu <= lambda (dominance order) through the box of
// root-coordinate differences, which the inverse Cartan matrix bounds.
std::vector<Weight> dominant_weights_below(const RootDatum& datum, const Weight& lambda) {
  int r = datum.rank();
  std::vector<int64_t> bound(r);
  for (int k = 0; k < r; ++k) {
    Rat v = 0;
    for (int j = 0; j < r; ++j) v += datum.inverse_cartan().at(k, j) * Rat(lambda[j]);
    Int fl = v.get_num() / v.get_den();
    bound[k] = fl >= 0 ? fl.get_si() : 0;
  }
  std::vector<Weight> out;
  std::vector<int64_t> c(r, 0);
  for (;;) {
    Weight nu = lambda;
    for (int k = 0; k < r; ++k) {
      const Weight a = datum.simple_root(k);
      for (int i = 0; i < r; ++i) nu[i] -= c[k] * a[i];
    }
    if (datum.is_dominant(nu)) out.push_back(nu);
    int k = 0;
    while (k < r && c[k] == bound[k]) c[k++] = 0;
    if (k == r) break;
    ++c[k];
  }
  std::sort(out.begin(), out.end(), [&](const Weight& x, const Weight& y) {
    Rat hx = 0, hy = 0;  // order by depth below lambda
    for (int k = 0; k < r; ++k)
      for (int j = 0; j < r; ++j) {
        hx += datum.inverse_cartan().at(k, j) * Rat(lambda[j] - x[j]);
        hy += datum.inverse_cartan().at(k, j) * Rat(lambda[j] - y[j]);
      }
    if (hx != hy) return hx < hy;
    return x < y;
  });
  return out;
}

std::map<Weight, int64_t> freudenthal_table(const RootDatum& datum, const Weight& lambda) {
  if (!datum.is_dominant(lambda)) throw std::invalid_argument("freudenthal: non-dominant lambda");
  const Weight rho = datum.rho();
  std::map<Weight, int64_t> table;
  auto doms = dominant_weights_below(datum, lambda);
  const Rat norm_top = datum.bilinear(lambda + rho, lambda + rho);
  for (const Weight& nu : doms) {
    if (nu == lambda) {
      table[nu] = 1;
      continue;
    }
    Rat denom = norm_top - datum.bilinear(nu + rho, nu + rho);
    Rat sum = 0;
    for (const Weight& alpha : datum.positive_roots()) {
      for (int64_t k = 1;; ++k) {
        Weight mu = nu + k * alpha;
        Weight dom = datum.dominant_conjugate(mu).first;
        auto it = table.find(dom);
        if (it == table.end()) {
          if (!datum.dominance_leq(dom, lambda)) break;  // left the weight polytope
          continue;  // zero multiplicity but higher weights may still hit
        }
        if (it->second != 0) sum += Rat(it->second) * datum.bilinear(mu, alpha);
      }
    }
    Rat m = 2 * sum / denom;
    if (m.get_den() != 1) throw std::logic_error("freudenthal: non-integral multiplicity");
    table[nu] = m.get_num().get_si();
  }
  return table;
}

int64_t freudenthal(const RootDatum& datum, const Weight& lambda, const Weight& nu) {
  Weight dom = datum.dominant_conjugate(nu).first;
  if (!datum.dominance_leq(dom, lambda)) return 0;
  auto table = freudenthal_table(datum, lambda);
  auto it = table.find(dom);
  return it == table.end() ? 0 : it->second;
}

int64_t kostant_multiplicity(const RootDatum& datum, const Weight& lambda, const Weight& nu) {
  if (!datum.is_dominant(lambda)) throw std::invalid_argument("kostant: non-dominant lambda");
  const Weight rho = datum.rho();
  // free W-orbit of the regular weight lambda + rho, with signs
  std::map<Weight, int> orbit{{lambda + rho, 1}};
  std::vector<Weight> queue{lambda + rho};
  while (!queue.empty()) {
    Weight w = queue.back();
    queue.pop_back();
    int sgn = orbit[w];
    for (int i = 0; i < datum.rank(); ++i) {
      Weight u = datum.simple_reflection(i, w);
      if (u == w) throw std::logic_error("kostant: non-regular orbit point");
      if (!orbit.count(u)) {
        orbit[u] = -sgn;
        queue.push_back(u);
      }
    }
  }
  // Kostant partition function over positive roots, memoized
  const auto& roots = datum.positive_root_coords();
  std::map<std::pair<int, std::vector<int64_t>>, Int> memo;
  std::function<Int(int, const std::vector<int64_t>&)> part =
      [&](int upto, const std::vector<int64_t>& beta) -> Int {
    bool zero = true, neg = false;
    for (auto x : beta) {
      if (x != 0) zero = false;
      if (x < 0) neg = true;
    }
    if (zero) return 1;
    if (neg || upto == 0) return 0;
    auto key = std::make_pair(upto, beta);
    auto it = memo.find(key);
    if (it != memo.end()) return it->second;
    Int total = 0;
    std::vector<int64_t> rem = beta;
    for (;;) {
      total += part(upto - 1, rem);
      bool ok = true;
      for (size_t i = 0; i < rem.size(); ++i) {
        rem[i] -= roots[upto - 1][i];
        if (rem[i] < 0) ok = false;
      }
      if (!ok) break;
    }
    memo[key] = total;
    return total;
  };
  Int total = 0;
  for (auto& [w, sgn] : orbit) {
    std::vector<int64_t> beta;
    if (!datum.root_coordinates(w - (nu + rho), &beta)) continue;
    bool neg = false;
    for (auto x : beta) neg = neg || x < 0;
    if (neg) continue;
    total += Int(sgn) * part(int(roots.size()), beta);
  }
  if (!total.fits_slong_p()) throw std::overflow_error("kostant: multiplicity overflow");
  return total.get_si();
}

Int weyl_dim(const RootDatum& datum, const Weight& lambda) {
  if (!datum.is_dominant(lambda)) throw std::invalid_argument("weyl_dim: non-dominant weight");
  const Weight rho = datum.rho();
  Rat d = 1;
  for (const Weight& alpha : datum.positive_roots())
    d *= datum.bilinear(lambda + rho, alpha) / datum.bilinear(rho, alpha);
  if (d.get_den() != 1) throw std::logic_error("weyl_dim: non-integral value");
  return d.get_num();
}

Module tensor(const Module& v, const Module& w) {
  if (v.datum != w.datum) throw std::invalid_argument("tensor: different root data");
  const int r = v.datum->rank();
  Module t;
  t.datum = v.datum;
  int dv = v.dim(), dw = w.dim();
  t.basis.reserve(size_t(dv) * dw);
  for (int a = 0; a < dv; ++a)
    for (int b = 0; b < dw; ++b) t.basis.push_back({v.basis[a].weight + w.basis[b].weight, -1, -1});
  t.e_mats.assign(r, SparseMat(dv * dw, dv * dw));
  t.f_mats.assign(r, SparseMat(dv * dw, dv * dw));
  auto leibniz = [&](const SparseMat& mv, const SparseMat& mw, SparseMat& out) {
    for (int a = 0; a < dv; ++a)
      for (int b = 0; b < dw; ++b) {
        int col = a * dw + b;
        for (auto& [a2, c] : mv.col[a]) out.add(a2 * dw + b, col, c);
        for (auto& [b2, c] : mw.col[b]) out.add(a * dw + b2, col, c);
      }
  };
  for (int i = 0; i < r; ++i) {
    leibniz(v.e_mats[i], w.e_mats[i], t.e_mats[i]);
    leibniz(v.f_mats[i], w.f_mats[i], t.f_mats[i]);
  }
  return t;
}

Module dual(const Module& v) {
  const int r = v.datum->rank();
  Module d;
  d.datum = v.datum;
  for (auto& b : v.basis) d.basis.push_back({-b.weight, -1, -1});
  d.e_mats.reserve(r);
  d.f_mats.reserve(r);
  for (int i = 0; i < r; ++i) {
    d.e_mats.push_back(v.e_mats[i].transposed().negated());
    d.f_mats.push_back(v.f_mats[i].transposed().negated());
  }
  return d;
}

Module exterior_power(const Module& v, int k) {
  if (k < 0 || k > v.dim()) throw std::invalid_argument("exterior_power: bad degree");
  const int r = v.datum->rank();
  const int dv = v.dim();
  std::vector<std::vector<int>> subsets;
  std::vector<int> cur;
  std::function<void(int)> gen = [&](int start) {
    if (int(cur.size()) == k) {
      subsets.push_back(cur);
      return;
    }
    for (int i = start; i < dv; ++i) {
      cur.push_back(i);
      gen(i + 1);
      cur.pop_back();
    }
  };
  gen(0);
  std::map<std::vector<int>, int> index;
  for (size_t s = 0; s < subsets.size(); ++s) index[subsets[s]] = int(s);

  Module w;
  w.datum = v.datum;
  for (auto& s : subsets) {
    Weight wt = zero_weight(v.datum->rank());
    for (int i : s) wt = wt + v.basis[i].weight;
    w.basis.push_back({wt, -1, -1});
  }
  int dw = int(subsets.size());
  w.e_mats.assign(r, SparseMat(dw, dw));
  w.f_mats.assign(r, SparseMat(dw, dw));
  auto derive = [&](const SparseMat& m, SparseMat& out) {
    for (int s = 0; s < dw; ++s) {
      const auto& sub = subsets[s];
      for (int pos = 0; pos < k; ++pos)
        for (auto& [img, c] : m.col[sub[pos]]) {
          std::vector<int> t = sub;
          t[pos] = img;
          // sort with sign, drop repeated indices
          int sign = 1;
          bool dup = false;
          for (int i = 0; i < k && !dup; ++i)
            for (int j = i + 1; j < k; ++j) {
              if (t[i] == t[j]) dup = true;
              if (t[i] > t[j]) {
                std::swap(t[i], t[j]);
                sign = -sign;
              }
            }
          if (dup) continue;
          out.add(index.at(t), s, Rat(sign) * c);
        }
    }
  };
  for (int i = 0; i < r; ++i) {
    derive(v.e_mats[i], w.e_mats[i]);
    derive(v.f_mats[i], w.f_mats[i]);
  }
  if (v.sigma_map) {
    w.sigma_map = compound_matrix(*v.sigma_map, k);
    w.sigma_perm = v.sigma_perm;
  }
  return w;
}

Module direct_sum(const Module& v, const Module& w) {
  if (v.datum != w.datum) throw std::invalid_argument("direct_sum: different root data");
  const int r = v.datum->rank();
  Module s;
  s.datum = v.datum;
  s.basis = v.basis;
  for (auto& b : w.basis) s.basis.push_back({b.weight, -1, -1});
  int dv = v.dim(), d = dv + w.dim();
  s.e_mats.assign(r, SparseMat(d, d));
  s.f_mats.assign(r, SparseMat(d, d));
  for (int i = 0; i < r; ++i) {
    for (int c = 0; c < dv; ++c) {
      for (auto& [row, val] : v.e_mats[i].col[c]) s.e_mats[i].add(row, c, val);
      for (auto& [row, val] : v.f_mats[i].col[c]) s.f_mats[i].add(row, c, val);
    }
    for (int c = 0; c < w.dim(); ++c) {
      for (auto& [row, val] : w.e_mats[i].col[c]) s.e_mats[i].add(dv + row, dv + c, val);
      for (auto& [row, val] : w.f_mats[i].col[c]) s.f_mats[i].add(dv + row, dv + c, val);
    }
  }
  return s;
}

Mat compound_matrix(const Mat& m, int k) {
  if (m.rows != m.cols) throw std::invalid_argument("compound_matrix: not square");
  const int n = m.rows;
  std::vector<std::vector<int>> subsets;
  std::vector<int> cur;
  std::function<void(int)> gen = [&](int start) {
    if (int(cur.size()) == k) {
      subsets.push_back(cur);
      return;
    }
    for (int i = start; i < n; ++i) {
      cur.push_back(i);
      gen(i + 1);
      cur.pop_back();
    }
  };
  gen(0);
  Mat c(int(subsets.size()), int(subsets.size()));
  for (size_t a = 0; a < subsets.size(); ++a)
    for (size_t b = 0; b < subsets.size(); ++b) {
      Mat minor(k, k);
      for (int i = 0; i < k; ++i)
        for (int j = 0; j < k; ++j) minor.at(i, j) = m.at(subsets[a][i], subsets[b][j]);
      c.at(int(a), int(b)) = determinant(std::move(minor));
    }
  return c;
}

Mat equivariant_map(const Module& src, const Module& dst, const std::vector<int>& node_perm,
                    int dst_seed) {
  const int r = src.datum->rank();
  Mat a(dst.dim(), src.dim());
  for (int c = 0; c < src.dim(); ++c) {
    const BasisVector& b = src.basis[c];
    if (b.def_gen < 0) {
      if (!src.highest || src.basis[c].weight != *src.highest)
        throw std::invalid_argument("equivariant_map: source lacks construction provenance");
      a.at(dst_seed, c) = 1;
      continue;
    }
    // A(f_i p) = f_{perm(i)} A(p); parents precede children in basis order
    int i = node_perm[b.def_gen];
    for (int row = 0; row < dst.dim(); ++row) {
      if (a.at(row, b.def_parent) == 0) continue;
      for (auto& [img, val] : dst.f_mats[i].col[row]) a.at(img, c) += val * a.at(row, b.def_parent);
    }
  }
  // exact verification of the intertwining relations
  for (int i = 0; i < r; ++i) {
    Mat lhs_e = mat_mul(a, src.e_mats[i].dense());
    Mat rhs_e = apply(dst.e_mats[node_perm[i]], a);
    if (!(lhs_e == rhs_e)) throw std::runtime_error("equivariant_map: e-relation failed");
    Mat lhs_f = mat_mul(a, src.f_mats[i].dense());
    Mat rhs_f = apply(dst.f_mats[node_perm[i]], a);
    if (!(lhs_f == rhs_f)) throw std::runtime_error("equivariant_map: f-relation failed");
  }
  return a;
}

Mat sigma_intertwiner(const Module& v, const Module& dst, const PinnedAutomorphism& sigma) {
  if (!v.highest) throw std::invalid_argument("sigma_intertwiner: source not irreducible");
  if (!dst.highest || *dst.highest != sigma.apply(*v.highest))
    throw std::invalid_argument("sigma_intertwiner: target highest weight mismatch");
  return equivariant_map(v, dst, sigma.perm, 0);
}

Mat sigma_structure(Module& v, const PinnedAutomorphism& sigma) {
  if (!v.highest) throw std::invalid_argument("sigma_structure: module not irreducible");
  if (sigma.apply(*v.highest) != *v.highest) {
    Module cross = build_irreducible(*v.datum, sigma.apply(*v.highest));
    return sigma_intertwiner(v, cross, sigma);
  }
  Mat a = equivariant_map(v, v, sigma.perm, 0);
  v.sigma_map = a;
  v.sigma_perm = sigma.perm;
  return a;
}

int64_t r_V(const Module& v, const CoinvariantLattice& lattice) {
  int64_t n = 0;
  for (auto& b : v.basis)
    if (lattice.is_zero_class(b.weight)) ++n;
  return n;
}

int64_t zeta(const Module& v, const CoinvariantLattice& lattice, const SigmaOrbit& orbit) {
  const Weight& alpha = orbit.roots.front();
  int64_t z = 0;
  for (auto& b : v.basis) {
    auto n = lattice.solve_multiple(b.weight, alpha);
    if (n && *n >= 1) ++z;
  }
  return z;
}

GroupAlgebraElement twisted_character(const Module& v, const PinnedAutomorphism& sigma) {
  GroupAlgebraElement ch(v.datum->rank());
  std::vector<int> fixed;
  for (int i = 0; i < v.dim(); ++i)
    if (sigma.apply(v.basis[i].weight) == v.basis[i].weight) fixed.push_back(i);
  if (fixed.empty()) return ch;
  if (!v.sigma_map) throw std::runtime_error("twisted_character: sigma structure unavailable");
  std::map<Weight, Rat> traces;
  for (int i : fixed) traces[v.basis[i].weight] += v.sigma_map->at(i, i);
  for (auto& [w, tr] : traces) ch.add_term(w, tr);
  return ch;
}

}  // namespace twistinv
