#include "twistinv/twist.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>
#include <sstream>
#include <stdexcept>

namespace twistinv {

int PinnedAutomorphism::apply_node_inverse(int i) const {
  for (int j = 0; j < int(perm.size()); ++j)
    if (perm[j] == i) return j;
  throw std::logic_error("not a permutation");
}

Weight PinnedAutomorphism::apply(const Weight& w) const {
  Weight r(w.size());
  for (size_t i = 0; i < w.size(); ++i) r[perm[i]] = w[i];
  return r;
}

Weight PinnedAutomorphism::apply_inverse(const Weight& w) const {
  Weight r(w.size());
  for (size_t i = 0; i < w.size(); ++i) r[i] = w[perm[i]];
  return r;
}

bool PinnedAutomorphism::is_identity() const {
  for (size_t i = 0; i < perm.size(); ++i)
    if (perm[i] != int(i)) return false;
  return true;
}

PinnedAutomorphism validate_automorphism(const RootDatum& datum, const std::vector<int>& perm) {
  int r = datum.rank();
  if (int(perm.size()) != r) throw std::invalid_argument("sigma: wrong permutation length");
  std::vector<bool> hit(r, false);
  for (int i = 0; i < r; ++i) {
    if (perm[i] < 0 || perm[i] >= r || hit[perm[i]])
      throw std::invalid_argument("sigma: not a permutation of node indices");
    hit[perm[i]] = true;
  }
  for (int i = 0; i < r; ++i)
    for (int j = 0; j < r; ++j)
      if (datum.cartan(perm[i], perm[j]) != datum.cartan(i, j))
        throw std::invalid_argument("sigma: permutation is not Cartan-compatible");
  PinnedAutomorphism s;
  s.datum = &datum;
  s.perm = perm;
  // multiplicative order = lcm of cycle lengths
  std::vector<bool> seen(r, false);
  int64_t ord = 1;
  for (int i = 0; i < r; ++i) {
    if (seen[i]) continue;
    int len = 0, j = i;
    do {
      seen[j] = true;
      j = perm[j];
      ++len;
    } while (j != i);
    ord = std::lcm(ord, int64_t(len));
  }
  s.order = int(ord);
  return s;
}

PinnedAutomorphism parse_sigma(const RootDatum& datum, const std::string& cycles) {
  std::vector<int> perm(datum.rank());
  std::iota(perm.begin(), perm.end(), 0);
  std::string s = cycles;
  if (s.empty() || s == "id" || s == "()") return validate_automorphism(datum, perm);
  size_t pos = 0;
  auto skip_ws = [&] {
    while (pos < s.size() && (s[pos] == ' ' || s[pos] == ',')) ++pos;
  };
  std::vector<bool> moved(datum.rank(), false);
  while (true) {
    skip_ws();
    if (pos == s.size()) break;
    if (s[pos] != '(') throw std::invalid_argument("sigma: expected '(' in cycle notation");
    ++pos;
    std::vector<int> cyc;
    for (;;) {
      skip_ws();
      if (pos < s.size() && s[pos] == ')') {
        ++pos;
        break;
      }
      size_t start = pos;
      while (pos < s.size() && isdigit(s[pos])) ++pos;
      if (start == pos) throw std::invalid_argument("sigma: malformed cycle notation");
      int node = std::stoi(s.substr(start, pos - start)) - 1;  // Bourbaki labels are 1-based
      if (node < 0 || node >= datum.rank())
        throw std::invalid_argument("sigma: node index out of range");
      if (moved[node]) throw std::invalid_argument("sigma: repeated node in cycles");
      moved[node] = true;
      cyc.push_back(node);
    }
    for (size_t k = 0; k < cyc.size(); ++k) perm[cyc[k]] = cyc[(k + 1) % cyc.size()];
  }
  return validate_automorphism(datum, perm);
}

std::string orbit_type_name(OrbitType t) {
  switch (t) {
    case OrbitType::A: return "A";
    case OrbitType::BCminus: return "BC-";
    case OrbitType::BCplus: return "BC+";
  }
  return "?";
}

std::vector<SigmaOrbit> sigma_orbits(const RootDatum& datum, const PinnedAutomorphism& sigma) {
  std::vector<SigmaOrbit> orbits;
  std::set<Weight> assigned;
  for (const Weight& root : datum.all_roots()) {
    if (assigned.count(root)) continue;
    SigmaOrbit o;
    Weight g = root;
    do {
      o.roots.push_back(g);
      assigned.insert(g);
      g = sigma.apply(g);
    } while (g != root);
    std::sort(o.roots.begin(), o.roots.end());
    o.alpha_O = zero_weight(datum.rank());
    for (auto& w : o.roots) o.alpha_O = o.alpha_O + w;
    bool pos = true;
    std::vector<int64_t> rc;
    datum.root_coordinates(o.roots.front(), &rc);
    for (auto c : rc) pos = pos && c >= 0;
    o.positive = pos;
    orbits.push_back(std::move(o));
  }
  std::sort(orbits.begin(), orbits.end(),
            [](const SigmaOrbit& x, const SigmaOrbit& y) { return x.roots < y.roots; });
  // classification: orbits sharing alpha_O come in BC pairs with 2:1 sizes
  std::map<Weight, std::vector<int>> by_alpha;
  for (size_t i = 0; i < orbits.size(); ++i) by_alpha[orbits[i].alpha_O].push_back(int(i));
  for (auto& [alpha, idx] : by_alpha) {
    if (idx.size() == 1) {
      orbits[idx[0]].orbit_type = OrbitType::A;
      continue;
    }
    if (idx.size() != 2) throw std::logic_error("more than two orbits share alpha_O");
    int a = idx[0], b = idx[1];
    if (orbits[a].roots.size() < orbits[b].roots.size()) std::swap(a, b);
    if (orbits[a].roots.size() != 2 * orbits[b].roots.size())
      throw std::logic_error("BC pair sizes not in ratio 2:1");
    orbits[a].orbit_type = OrbitType::BCminus;
    orbits[b].orbit_type = OrbitType::BCplus;
    orbits[b].divisor_sign = -1;
    orbits[a].partner = b;
    orbits[b].partner = a;
  }
  return orbits;
}

FoldedDatum fold(const RootDatum& datum, const PinnedAutomorphism& sigma) {
  FoldedDatum f;
  f.datum = &datum;
  f.sigma = sigma;
  auto orbits = sigma_orbits(datum, sigma);

  // locate the orbits of simple roots, ordered by smallest node index
  std::vector<std::pair<int, int>> delta_orbits;  // (min node, orbit index)
  std::set<int> taken;
  for (int i = 0; i < datum.rank(); ++i) {
    if (taken.count(i)) continue;
    std::set<int> nodes;
    int j = i;
    do {
      nodes.insert(j);
      taken.insert(j);
      j = sigma.apply_node(j);
    } while (j != i);
    std::set<Weight> roots;
    for (int n : nodes) roots.insert(datum.simple_root(n));
    for (size_t k = 0; k < orbits.size(); ++k) {
      std::set<Weight> os(orbits[k].roots.begin(), orbits[k].roots.end());
      if (os == roots) {
        delta_orbits.emplace_back(i, int(k));
        break;
      }
    }
  }

  int m = int(delta_orbits.size());
  f.folded_cartan = IntMat(m, m);
  std::vector<Weight> reps(m);  // coroot representative per folded simple root
  for (int p = 0; p < m; ++p) {
    const SigmaOrbit& op = orbits[delta_orbits[p].second];
    f.simple_folded_roots.push_back(op);
    const SigmaOrbit& source = op.orbit_type == OrbitType::A ? op : orbits[op.partner];
    reps[p] = source.roots.front();
    // any representative gives the same folded Cartan entry
    for (const Weight& g : source.roots)
      for (int q = 0; q < m; ++q) {
        const Weight& aq = orbits[delta_orbits[q].second].alpha_O;
        if (datum.coroot_pairing(aq, g) != datum.coroot_pairing(aq, source.roots.front()))
          throw std::logic_error("folded Cartan entry depends on orbit representative");
      }
  }
  for (int p = 0; p < m; ++p)
    for (int q = 0; q < m; ++q)
      f.folded_cartan.at(p, q) =
          datum.coroot_pairing(orbits[delta_orbits[q].second].alpha_O, reps[p]);

  // folded type; rank-1 blocks are SL2 exactly when alpha_O is divisible
  // by 2 inside the fixed lattice (all fundamental coordinates even)
  std::vector<bool> divisible(m, false);
  for (int p = 0; p < m; ++p) {
    bool even = true;
    for (auto c : f.simple_folded_roots[p].alpha_O)
      if (c % 2 != 0) even = false;
    divisible[p] = even;
  }
  f.folded_type = classify_cartan(f.folded_cartan, divisible);

  // w0 generators: s_{alpha_O} = prod of s_alpha over O (type A) or over
  // O+ (type BC); in the BC case each root of O+ is a sum of two simple
  // roots a+b inside O-, and s_{a+b} = s_a s_b s_a
  for (int p = 0; p < m; ++p) {
    const SigmaOrbit& op = f.simple_folded_roots[p];
    WeylWord word;
    if (op.orbit_type == OrbitType::A) {
      for (const Weight& r : op.roots)
        for (int i = 0; i < datum.rank(); ++i)
          if (datum.simple_root(i) == r) word.push_back(i);
    } else {
      const SigmaOrbit& plus = orbits[op.partner];
      for (const Weight& beta : plus.roots) {
        int a = -1, b = -1;
        for (const Weight& r1 : op.roots)
          for (const Weight& r2 : op.roots)
            if (r1 < r2 && r1 + r2 == beta) {
              for (int i = 0; i < datum.rank(); ++i) {
                if (datum.simple_root(i) == r1) a = i;
                if (datum.simple_root(i) == r2) b = i;
              }
            }
        if (a < 0 || b < 0) throw std::logic_error("BC+ root is not a sum of two simple roots");
        word.push_back(a);
        word.push_back(b);
        word.push_back(a);
      }
    }
    f.w0_generators.push_back(word);
  }

  // basis of the fixed lattice: orbit sums of fundamental weights
  taken.clear();
  for (int i = 0; i < datum.rank(); ++i) {
    if (taken.count(i)) continue;
    Weight b = zero_weight(datum.rank());
    int j = i;
    do {
      b[j] = 1;
      taken.insert(j);
      j = sigma.apply_node(j);
    } while (j != i);
    f.fixed_lattice_basis.push_back(b);
  }
  return f;
}

std::vector<int64_t> FoldedDatum::fixed_coordinates(const Weight& w) const {
  if (sigma.apply(w) != w) throw std::invalid_argument("fixed_coordinates: weight not sigma-fixed");
  std::vector<int64_t> c;
  for (const Weight& b : fixed_lattice_basis)
    for (size_t i = 0; i < b.size(); ++i)
      if (b[i] == 1) {
        c.push_back(w[i]);
        break;
      }
  return c;
}

CoinvariantLattice::CoinvariantLattice(const RootDatum& datum, const PinnedAutomorphism& sigma) {
  rank_ = datum.rank();
  IntMat m(rank_, rank_);
  for (int j = 0; j < rank_; ++j) {
    m.at(sigma.apply_node(j), j) += 1;  // sigma(e_j) = e_{sigma(j)}
    m.at(j, j) -= 1;
  }
  snf_ = smith_normal_form(m);
  moduli_.assign(rank_, 0);
  for (int i = 0; i < snf_.rank; ++i) moduli_[i] = snf_.d.at(i, i);
}

std::vector<int64_t> CoinvariantLattice::coinvariant_class(const Weight& w) const {
  if (int(w.size()) != rank_) throw std::invalid_argument("coinvariant_class: rank mismatch");
  std::vector<int64_t> y(rank_, 0);
  for (int i = 0; i < rank_; ++i)
    for (int j = 0; j < rank_; ++j) y[i] += snf_.u.at(i, j) * w[j];
  for (int i = 0; i < rank_; ++i)
    if (moduli_[i] != 0) y[i] = ((y[i] % moduli_[i]) + moduli_[i]) % moduli_[i];
  return y;
}

bool CoinvariantLattice::is_zero_class(const Weight& w) const {
  for (auto v : coinvariant_class(w))
    if (v != 0) return false;
  return true;
}

std::optional<int64_t> CoinvariantLattice::solve_multiple(const Weight& mu,
                                                          const Weight& shift) const {
  std::vector<int64_t> y(rank_, 0), s(rank_, 0);
  for (int i = 0; i < rank_; ++i)
    for (int j = 0; j < rank_; ++j) {
      y[i] += snf_.u.at(i, j) * mu[j];
      s[i] += snf_.u.at(i, j) * shift[j];
    }
  int pin = -1;
  for (int i = snf_.rank; i < rank_; ++i)
    if (s[i] != 0) {
      pin = i;
      break;
    }
  if (pin < 0) throw std::runtime_error("solve_multiple: shift has finite order in coinvariants");
  if (y[pin] % s[pin] != 0) return std::nullopt;
  int64_t n = y[pin] / s[pin];
  Weight cand = mu - n * shift;
  if (!is_zero_class(cand)) return std::nullopt;
  return n;
}

}  // namespace twistinv
