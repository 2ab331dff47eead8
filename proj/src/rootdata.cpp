#include "twistinv/rootdata.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>
#include <stdexcept>

namespace twistinv {

namespace {

void add_bond(IntMat& c, int i, int j, int64_t aij, int64_t aji) {
  c.at(i, j) = aij;
  c.at(j, i) = aji;
}

// Bourbaki Cartan matrix of one simple factor, a_ij = <alpha_j, alpha_i^vee>.
IntMat simple_cartan(SimpleType t, int n) {
  IntMat c(n, n);
  for (int i = 0; i < n; ++i) c.at(i, i) = 2;
  auto chain = [&](int upto) {
    for (int i = 0; i + 1 < upto; ++i) add_bond(c, i, i + 1, -1, -1);
  };
  switch (t) {
    case SimpleType::A:
      chain(n);
      break;
    case SimpleType::B:
      chain(n);
      add_bond(c, n - 2, n - 1, -1, -2);  // alpha_n short
      break;
    case SimpleType::C:
      chain(n);
      add_bond(c, n - 2, n - 1, -2, -1);  // alpha_n long
      break;
    case SimpleType::D:
      chain(n - 1);
      add_bond(c, n - 3, n - 1, -1, -1);
      break;
    case SimpleType::E: {
      // nodes 1,3,4,...,n in a chain; node 2 hangs off node 4
      std::vector<int> path{0};
      for (int k = 2; k < n; ++k) path.push_back(k);
      for (size_t i = 0; i + 1 < path.size(); ++i) add_bond(c, path[i], path[i + 1], -1, -1);
      add_bond(c, 1, 3, -1, -1);
      break;
    }
    case SimpleType::F:
      chain(n);
      c.at(1, 2) = -1;
      c.at(2, 1) = -2;  // alpha_3, alpha_4 short
      break;
    case SimpleType::G:
      add_bond(c, 0, 1, -3, -1);  // alpha_1 short
      break;
  }
  return c;
}

void check_rank(SimpleType t, int n) {
  bool ok = false;
  switch (t) {
    case SimpleType::A: ok = n >= 1; break;
    case SimpleType::B: ok = n >= 2; break;
    case SimpleType::C: ok = n >= 2; break;
    case SimpleType::D: ok = n >= 3; break;
    case SimpleType::E: ok = n >= 6 && n <= 8; break;
    case SimpleType::F: ok = n == 4; break;
    case SimpleType::G: ok = n == 2; break;
  }
  if (!ok) throw std::invalid_argument("rank out of range for simple type");
}

Int factorial(int n) {
  Int f = 1;
  for (int i = 2; i <= n; ++i) f *= i;
  return f;
}

Int pow2(int n) {
  Int p = 1;
  for (int i = 0; i < n; ++i) p *= 2;
  return p;
}

}  // namespace

Int weyl_order_of(SimpleType t, int n) {
  switch (t) {
    case SimpleType::A: return factorial(n + 1);
    case SimpleType::B:
    case SimpleType::C: return pow2(n) * factorial(n);
    case SimpleType::D: return pow2(n - 1) * factorial(n);
    case SimpleType::E: return n == 6 ? Int(51840) : (n == 7 ? Int(2903040) : Int(696729600));
    case SimpleType::F: return Int(1152);
    case SimpleType::G: return Int(12);
  }
  throw std::logic_error("unreachable");
}

int64_t positive_root_count(SimpleType t, int n) {
  switch (t) {
    case SimpleType::A: return int64_t(n) * (n + 1) / 2;
    case SimpleType::B:
    case SimpleType::C: return int64_t(n) * n;
    case SimpleType::D: return int64_t(n) * (n - 1);
    case SimpleType::E: return n == 6 ? 36 : (n == 7 ? 63 : 120);
    case SimpleType::F: return 24;
    case SimpleType::G: return 6;
  }
  throw std::logic_error("unreachable");
}

RootDatum RootDatum::build(const std::string& spec) {
  RootDatum d;
  d.spec_ = spec;
  size_t pos = 0;
  while (pos < spec.size()) {
    char t = spec[pos];
    if (t < 'A' || t > 'G') throw std::invalid_argument("unknown type token in group spec: " + spec);
    ++pos;
    size_t start = pos;
    while (pos < spec.size() && isdigit(spec[pos])) ++pos;
    if (start == pos) throw std::invalid_argument("missing rank in group spec: " + spec);
    int n = std::stoi(spec.substr(start, pos - start));
    SimpleType st = SimpleType(t);
    check_rank(st, n);
    d.factors_.push_back({st, n});
    if (pos < spec.size()) {
      if (spec[pos] != 'x') throw std::invalid_argument("expected 'x' between factors: " + spec);
      ++pos;
      if (pos == spec.size()) throw std::invalid_argument("trailing 'x' in group spec: " + spec);
    }
  }
  if (d.factors_.empty()) throw std::invalid_argument("empty group spec");

  for (auto& f : d.factors_) d.rank_ += f.rank;
  d.cartan_ = IntMat(d.rank_, d.rank_);
  int off = 0;
  for (auto& f : d.factors_) {
    IntMat c = simple_cartan(f.type, f.rank);
    for (int i = 0; i < f.rank; ++i)
      for (int j = 0; j < f.rank; ++j) d.cartan_.at(off + i, off + j) = c.at(i, j);
    off += f.rank;
  }

  // inverse Cartan, exact
  Mat cm(d.rank_, d.rank_);
  for (int i = 0; i < d.rank_; ++i)
    for (int j = 0; j < d.rank_; ++j) cm.at(i, j) = Rat(d.cartan_.at(i, j));
  d.inv_cartan_ = inverse(cm);

  // symmetrizer per component of the diagram
  {
    std::vector<Rat> w(d.rank_);
    std::vector<bool> seen(d.rank_, false);
    for (int s = 0; s < d.rank_; ++s) {
      if (seen[s]) continue;
      std::vector<int> comp{s};
      w[s] = 1;
      seen[s] = true;
      for (size_t q = 0; q < comp.size(); ++q) {
        int i = comp[q];
        for (int j = 0; j < d.rank_; ++j) {
          if (seen[j] || d.cartan_.at(i, j) == 0 || i == j) continue;
          w[j] = w[i] * d.cartan_.at(i, j) / d.cartan_.at(j, i);
          seen[j] = true;
          comp.push_back(j);
        }
      }
      Int l = 1;
      for (int i : comp) l = l * w[i].get_den() / gcd(l, Int(w[i].get_den()));
      Int g = 0;
      for (int i : comp) {
        Int num = w[i].get_num() * l / w[i].get_den();
        g = gcd(g, num);
      }
      for (int i : comp) w[i] = w[i] * Rat(l) / Rat(g);
    }
    d.sym_.resize(d.rank_);
    for (int i = 0; i < d.rank_; ++i) d.sym_[i] = w[i].get_num().get_si();
  }

  // positive roots by reflection closure on root-lattice coordinates
  {
    std::set<std::vector<int64_t>> all;
    std::vector<std::vector<int64_t>> queue;
    for (int i = 0; i < d.rank_; ++i) {
      std::vector<int64_t> e(d.rank_, 0);
      e[i] = 1;
      all.insert(e);
      queue.push_back(e);
    }
    while (!queue.empty()) {
      auto c = queue.back();
      queue.pop_back();
      for (int i = 0; i < d.rank_; ++i) {
        int64_t p = 0;
        for (int j = 0; j < d.rank_; ++j) p += c[j] * d.cartan_.at(i, j);
        auto c2 = c;
        c2[i] -= p;
        if (all.insert(c2).second) queue.push_back(c2);
      }
    }
    for (auto& c : all) {
      bool pos = true;
      for (auto x : c)
        if (x < 0) pos = false;
      if (!pos) continue;
      d.pos_root_coords_.push_back(c);
      Weight w(d.rank_, 0);
      for (int i = 0; i < d.rank_; ++i)
        for (int j = 0; j < d.rank_; ++j) w[i] += c[j] * d.cartan_.at(i, j);
      d.positive_roots_.push_back(w);
    }
  }

  d.w0_ = d.dominant_conjugate(-d.rho()).second;
  return d;
}

Weight RootDatum::simple_root(int j) const {
  Weight w(rank_);
  for (int i = 0; i < rank_; ++i) w[i] = cartan_.at(i, j);
  return w;
}

std::vector<Weight> RootDatum::all_roots() const {
  std::vector<Weight> r = positive_roots_;
  for (auto& p : positive_roots_) r.push_back(-p);
  return r;
}

Rat RootDatum::bilinear(const Weight& x, const Weight& y) const {
  if (int(x.size()) != rank_ || int(y.size()) != rank_)
    throw std::invalid_argument("bilinear: rank mismatch");
  Rat s = 0;
  for (int k = 0; k < rank_; ++k) {
    Rat ck = 0;
    for (int j = 0; j < rank_; ++j) ck += inv_cartan_.at(k, j) * Rat(x[j]);
    s += ck * Rat(sym_[k]) * Rat(y[k]);
  }
  return s;
}

int64_t RootDatum::coroot_pairing(const Weight& lambda, const Weight& beta) const {
  Rat v = 2 * bilinear(lambda, beta) / bilinear(beta, beta);
  if (v.get_den() != 1) throw std::runtime_error("coroot_pairing: non-integral value");
  return v.get_num().get_si();
}

bool RootDatum::is_dominant(const Weight& w) const {
  for (auto x : w)
    if (x < 0) return false;
  return true;
}

Weight RootDatum::simple_reflection(int i, const Weight& w) const {
  Weight r = w;
  int64_t c = w[i];
  if (c == 0) return r;
  for (int k = 0; k < rank_; ++k) r[k] -= c * cartan_.at(k, i);
  return r;
}

Weight RootDatum::apply_word(const WeylWord& word, const Weight& w) const {
  Weight r = w;
  for (auto it = word.rbegin(); it != word.rend(); ++it) r = simple_reflection(*it, r);
  return r;
}

bool RootDatum::componentwise_leq(const Weight& a, const Weight& b) {
  if (a.size() != b.size()) throw std::invalid_argument("componentwise_leq: rank mismatch");
  for (size_t i = 0; i < a.size(); ++i)
    if (a[i] > b[i]) return false;
  return true;
}

bool RootDatum::dominance_leq(const Weight& a, const Weight& b) const {
  if (int(a.size()) != rank_ || int(b.size()) != rank_)
    throw std::invalid_argument("dominance_leq: rank mismatch");
  std::vector<int64_t> c;
  if (!root_coordinates(b - a, &c)) return false;
  for (auto x : c)
    if (x < 0) return false;
  return true;
}

bool RootDatum::root_coordinates(const Weight& w, std::vector<int64_t>* coords) const {
  std::vector<int64_t> c(rank_);
  for (int k = 0; k < rank_; ++k) {
    Rat v = 0;
    for (int j = 0; j < rank_; ++j) v += inv_cartan_.at(k, j) * Rat(w[j]);
    if (v.get_den() != 1) return false;
    c[k] = v.get_num().get_si();
  }
  if (coords) *coords = std::move(c);
  return true;
}

std::vector<Weight> RootDatum::weyl_orbit(const Weight& w) const {
  std::set<Weight> orbit{w};
  std::vector<Weight> queue{w};
  while (!queue.empty()) {
    Weight v = queue.back();
    queue.pop_back();
    for (int i = 0; i < rank_; ++i) {
      Weight u = simple_reflection(i, v);
      if (orbit.insert(u).second) queue.push_back(u);
    }
  }
  return {orbit.begin(), orbit.end()};
}

std::pair<Weight, WeylWord> RootDatum::dominant_conjugate(const Weight& w) const {
  Weight v = w;
  WeylWord word;
  for (;;) {
    int neg = -1;
    for (int i = 0; i < rank_; ++i)
      if (v[i] < 0) {
        neg = i;
        break;
      }
    if (neg < 0) break;
    v = simple_reflection(neg, v);
    word.push_back(neg);
  }
  std::reverse(word.begin(), word.end());
  return {v, word};
}

Weight RootDatum::star(const Weight& w) const { return -apply_word(w0_, w); }

Weight RootDatum::rho() const { return Weight(rank_, 1); }

Int RootDatum::weyl_order() const {
  Int n = 1;
  for (auto& f : factors_) n *= weyl_order_of(f.type, f.rank);
  return n;
}

namespace {

std::vector<std::vector<int>> cartan_components(const IntMat& c) {
  int n = c.rows;
  std::vector<bool> seen(n, false);
  std::vector<std::vector<int>> comps;
  for (int s = 0; s < n; ++s) {
    if (seen[s]) continue;
    std::vector<int> comp{s};
    seen[s] = true;
    for (size_t q = 0; q < comp.size(); ++q)
      for (int j = 0; j < n; ++j)
        if (!seen[j] && c.at(comp[q], j) != 0) {
          seen[j] = true;
          comp.push_back(j);
        }
    std::sort(comp.begin(), comp.end());
    comps.push_back(comp);
  }
  return comps;
}

SimpleFactor classify_component(const IntMat& c, const std::vector<int>& nodes) {
  int n = int(nodes.size());
  if (n == 1) return {SimpleType::A, 1};
  auto a = [&](int i, int j) { return c.at(nodes[i], nodes[j]); };
  std::vector<int> deg(n, 0);
  int double_i = -1, double_j = -1;
  bool triple = false;
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      if (i == j || a(i, j) == 0) continue;
      if (j > i) {
        int64_t m = a(i, j) * a(j, i);
        if (m == 3) triple = true;
        if (m == 2) {
          double_i = i;
          double_j = j;
        }
      }
      ++deg[i];
    }
  if (triple) {
    if (n != 2) throw std::invalid_argument("classify: triple bond in rank > 2 diagram");
    return {SimpleType::G, 2};
  }
  if (double_i >= 0) {
    if (n == 2) return {SimpleType::B, 2};
    // a(s,t) = -2 marks s as the short node of the bond
    int short_node = a(double_i, double_j) == -2 ? double_i : double_j;
    int long_node = short_node == double_i ? double_j : double_i;
    if (deg[short_node] == 1) return {SimpleType::B, n};
    if (deg[long_node] == 1) return {SimpleType::C, n};
    if (n == 4) return {SimpleType::F, 4};
    throw std::invalid_argument("classify: unrecognized multiply-laced diagram");
  }
  int branch = -1;
  for (int i = 0; i < n; ++i) {
    if (deg[i] > 3) throw std::invalid_argument("classify: node of degree > 3");
    if (deg[i] == 3) {
      if (branch >= 0) throw std::invalid_argument("classify: two branch nodes");
      branch = i;
    }
  }
  if (branch < 0) return {SimpleType::A, n};
  // branch lengths from the trivalent node
  std::vector<int> lens;
  for (int j = 0; j < n; ++j) {
    if (a(branch, j) == 0 || j == branch) continue;
    int len = 1, prev = branch, cur = j;
    for (;;) {
      int next = -1;
      for (int k = 0; k < n; ++k)
        if (k != prev && k != cur && a(cur, k) != 0) next = k;
      if (next < 0) break;
      prev = cur;
      cur = next;
      ++len;
    }
    lens.push_back(len);
  }
  std::sort(lens.begin(), lens.end());
  if (lens[0] == 1 && lens[1] == 1) return {SimpleType::D, n};
  if (lens == std::vector<int>{1, 2, 2}) return {SimpleType::E, 6};
  if (lens == std::vector<int>{1, 2, 3}) return {SimpleType::E, 7};
  if (lens == std::vector<int>{1, 2, 4}) return {SimpleType::E, 8};
  throw std::invalid_argument("classify: unrecognized branched diagram");
}

}  // namespace

Int RootDatum::orbit_size(const Weight& dominant) const {
  if (!is_dominant(dominant)) throw std::invalid_argument("orbit_size: weight not dominant");
  std::vector<int> zero_nodes;
  for (int i = 0; i < rank_; ++i)
    if (dominant[i] == 0) zero_nodes.push_back(i);
  IntMat sub(int(zero_nodes.size()), int(zero_nodes.size()));
  for (size_t i = 0; i < zero_nodes.size(); ++i)
    for (size_t j = 0; j < zero_nodes.size(); ++j)
      sub.at(int(i), int(j)) = cartan_.at(zero_nodes[i], zero_nodes[j]);
  Int stab = 1;
  for (auto& comp : cartan_components(sub)) {
    SimpleFactor f = classify_component(sub, comp);
    stab *= weyl_order_of(f.type, f.rank);
  }
  return weyl_order() / stab;
}

std::string classify_cartan(const IntMat& cartan, const std::vector<bool>& root_divisible) {
  auto comps = cartan_components(cartan);
  std::string name;
  for (auto& comp : comps) {
    SimpleFactor f = classify_component(cartan, comp);
    if (!name.empty()) name += "x";
    if (f.rank == 1) {
      // SL2 when the simple root is twice a lattice vector, SO3 otherwise
      bool div = root_divisible.empty() ? true : root_divisible[comp[0]];
      name += div ? "A1" : "B1";
    } else {
      name += char(f.type) + std::to_string(f.rank);
    }
  }
  return name;
}

}  // namespace twistinv
