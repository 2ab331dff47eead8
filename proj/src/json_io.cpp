#include "twistinv/json_io.hpp"

#include <stdexcept>

namespace twistinv {

json weight_to_json(const Weight& w) {
  json a = json::array();
  for (auto x : w) a.push_back(x);
  return a;
}

Weight weight_from_json(const json& j) {
  Weight w;
  for (auto& x : j) w.push_back(x.get<int64_t>());
  return w;
}

json ga_to_json(const GroupAlgebraElement& x) {
  json a = json::array();
  for (auto& [e, c] : x.terms())
    a.push_back(json{{"exp", weight_to_json(e)}, {"coeff", rat_to_string(c)}});
  return a;
}

GroupAlgebraElement ga_from_json(const json& j) {
  GroupAlgebraElement x;
  bool first = true;
  for (auto& t : j) {
    Weight e = weight_from_json(t.at("exp"));
    if (first) {
      x = GroupAlgebraElement(e.size());
      first = false;
    }
    x.add_term(e, rat_from_string(t.at("coeff").get<std::string>()));
  }
  return x;
}

json poly_to_json(const MultiWeightPolynomial& p) {
  json a = json::array();
  for (auto& [lam, c] : p.coeffs) {
    json e = json::array();
    for (auto x : lam) e.push_back(x);
    a.push_back(json{{"lambda", e}, {"coeff", c}});
  }
  return a;
}

namespace {

json sparse_to_json(const SparseMat& m) {
  json a = json::array();
  for (int c = 0; c < m.cols; ++c)
    for (auto& [r, v] : m.col[c]) a.push_back(json::array({r, c, rat_to_string(v)}));
  return a;
}

SparseMat sparse_from_json(const json& j, int dim) {
  SparseMat m(dim, dim);
  for (auto& t : j) m.add(t.at(0).get<int>(), t.at(1).get<int>(), rat_from_string(t.at(2)));
  return m;
}

json mat_to_json(const Mat& m) {
  json rows = json::array();
  for (int i = 0; i < m.rows; ++i) {
    json row = json::array();
    for (int j = 0; j < m.cols; ++j) row.push_back(rat_to_string(m.at(i, j)));
    rows.push_back(row);
  }
  return rows;
}

Mat mat_from_json(const json& j) {
  int rows = int(j.size());
  int cols = rows ? int(j.at(0).size()) : 0;
  Mat m(rows, cols);
  for (int i = 0; i < rows; ++i)
    for (int c = 0; c < cols; ++c) m.at(i, c) = rat_from_string(j.at(i).at(c));
  return m;
}

}  // namespace

json module_to_json(const Module& m) {
  json j;
  j["group"] = m.datum->spec();
  j["dim"] = m.dim();
  json basis = json::array(), defs = json::array();
  for (auto& b : m.basis) {
    basis.push_back(weight_to_json(b.weight));
    defs.push_back(json::array({b.def_gen, b.def_parent}));
  }
  j["basis"] = basis;
  j["defs"] = defs;
  if (m.highest) j["highest"] = weight_to_json(*m.highest);
  json e = json::array(), f = json::array();
  for (auto& g : m.e_mats) e.push_back(sparse_to_json(g));
  for (auto& g : m.f_mats) f.push_back(sparse_to_json(g));
  j["e"] = e;
  j["f"] = f;
  json gram = json::array();
  for (auto& [w, g] : m.gram)
    gram.push_back(json{{"weight", weight_to_json(w)}, {"mat", mat_to_json(g)}});
  j["gram"] = gram;
  if (m.sigma_map) {
    j["sigma"] = json{{"perm", m.sigma_perm}, {"mat", mat_to_json(*m.sigma_map)}};
  }
  return j;
}

Module module_from_json(const RootDatum& datum, const json& j) {
  if (j.at("group").get<std::string>() != datum.spec())
    throw std::invalid_argument("module bundle group mismatch");
  Module m;
  m.datum = &datum;
  int dim = j.at("dim").get<int>();
  for (int i = 0; i < dim; ++i) {
    BasisVector b;
    b.weight = weight_from_json(j.at("basis").at(i));
    b.def_gen = j.at("defs").at(i).at(0).get<int>();
    b.def_parent = j.at("defs").at(i).at(1).get<int>();
    m.basis.push_back(std::move(b));
  }
  if (j.contains("highest")) m.highest = weight_from_json(j.at("highest"));
  for (auto& g : j.at("e")) m.e_mats.push_back(sparse_from_json(g, dim));
  for (auto& g : j.at("f")) m.f_mats.push_back(sparse_from_json(g, dim));
  for (auto& g : j.at("gram")) m.gram[weight_from_json(g.at("weight"))] = mat_from_json(g.at("mat"));
  if (j.contains("sigma")) {
    m.sigma_perm = j.at("sigma").at("perm").get<std::vector<int>>();
    m.sigma_map = mat_from_json(j.at("sigma").at("mat"));
  }
  m.check_serre_relations();
  return m;
}

}  // namespace twistinv
