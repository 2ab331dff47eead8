#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <set>

#include "twistinv/repn.hpp"

using namespace twistinv;

TEST_CASE("sl2 modules") {
  auto a1 = RootDatum::build("A1");
  for (int64_t n = 0; n <= 6; ++n) {
    auto v = build_irreducible(a1, {n});
    CHECK(v.dim() == n + 1);
    v.check_serre_relations();
    for (int64_t k = 0; k <= n; ++k) CHECK(v.multiplicity({n - 2 * k}) == 1);
  }
  CHECK_THROWS_AS(build_irreducible(a1, {-1}), std::invalid_argument);
}

TEST_CASE("A2 modules against the dimension and multiplicity oracles") {
  auto a2 = RootDatum::build("A2");
  auto std3 = build_irreducible(a2, {1, 0});
  CHECK(std3.dim() == 3);
  CHECK(weyl_dim(a2, {1, 0}) == 3);

  auto adj = build_irreducible(a2, {1, 1});
  CHECK(adj.dim() == 8);
  CHECK(weyl_dim(a2, {1, 1}) == 8);
  CHECK(adj.multiplicity({0, 0}) == 2);
  CHECK(freudenthal(a2, {1, 1}, {0, 0}) == 2);
  CHECK(kostant_multiplicity(a2, {1, 1}, {0, 0}) == 2);
  adj.check_serre_relations();
}

TEST_CASE("weyl dimension formula examples") {
  CHECK(weyl_dim(RootDatum::build("A1"), {2}) == 3);
  CHECK(weyl_dim(RootDatum::build("A2"), {1, 1}) == 8);
  CHECK(weyl_dim(RootDatum::build("D4"), {1, 0, 0, 0}) == 8);
  CHECK(weyl_dim(RootDatum::build("D4"), {0, 0, 0, 1}) == 8);
  CHECK(weyl_dim(RootDatum::build("G2"), {0, 1}) == 14);
}

TEST_CASE("freudenthal edge cases") {
  auto a2 = RootDatum::build("A2");
  CHECK(freudenthal(a2, {2, 1}, {2, 1}) == 1);       // highest weight
  CHECK(freudenthal(a2, {1, 0}, {2, 0}) == 0);       // not below lambda
  CHECK(freudenthal(a2, {1, 0}, {0, 0}) == 0);       // off the weight coset
  CHECK(freudenthal(a2, {1, 1}, {1, -2}) == 1);      // non-dominant weight of the adjoint
}

TEST_CASE("oracle triangle on small modules") {
  for (auto& [spec, lam] : std::vector<std::pair<const char*, Weight>>{
           {"A1", {5}}, {"A2", {2, 1}}, {"B2", {1, 1}}, {"G2", {1, 0}}, {"A3", {1, 0, 1}}}) {
    auto d = RootDatum::build(spec);
    auto v = build_irreducible(d, lam);
    CHECK(Int(v.dim()) == weyl_dim(d, lam));
    auto table = freudenthal_table(d, lam);
    for (auto& [w, mult] : v.weight_multiplicities()) {
      Weight dom = d.dominant_conjugate(w).first;
      CHECK(table.at(dom) == mult);
      CHECK(kostant_multiplicity(d, lam, w) == mult);
    }
    // freudenthal reports 0 outside the support
    int64_t total = 0;
    for (auto& [w, mult] : table) total += int64_t(d.orbit_size(w).get_si()) * mult;
    CHECK(Int(total) == weyl_dim(d, lam));
  }
}

TEST_CASE("tensor products") {
  auto a2 = RootDatum::build("A2");
  auto std3 = build_irreducible(a2, {1, 0});
  auto triv = trivial_module(a2);

  auto vt = tensor(std3, triv);
  CHECK(vt.dim() == 3);
  CHECK(vt.character() == std3.character());
  vt.check_serre_relations();

  auto a1 = RootDatum::build("A1");
  auto v1 = build_irreducible(a1, {1});
  CHECK(tensor(v1, v1).dim() == 4);

  auto prod = tensor(std3, std3);
  CHECK(prod.character() == std3.character() * std3.character());
  prod.check_serre_relations();
}

TEST_CASE("duals") {
  auto a2 = RootDatum::build("A2");
  auto triv = trivial_module(a2);
  CHECK(dual(triv).character() == triv.character());

  auto std3 = build_irreducible(a2, {1, 0});
  auto d = dual(std3);
  d.check_serre_relations();
  CHECK(d.character() == std3.character().map_exponents([](const Weight& w) { return -w; }));
  // highest weight of the dual is omega_2
  CHECK(d.multiplicity({0, 1}) == 1);
  for (auto& [w, m] : d.weight_multiplicities()) CHECK(a2.dominance_leq(w, {0, 1}));
  CHECK(dual(d).character() == std3.character());
}

TEST_CASE("exterior powers") {
  auto a3 = RootDatum::build("A3");
  auto std4 = build_irreducible(a3, {1, 0, 0});
  CHECK(exterior_power(std4, 1).character() == std4.character());

  auto w2 = exterior_power(std4, 2);
  CHECK(w2.dim() == 6);
  w2.check_serre_relations();
  CHECK(w2.character() == build_irreducible(a3, {0, 1, 0}).character());

  // top wedge is the trivial character for simply-connected simple groups
  CHECK(exterior_power(std4, 4).character() == trivial_module(a3).character());

  // elementary symmetric identity: prod_j (1 + t e^{mu_j}) expanded
  for (auto& [spec, lam] : std::vector<std::pair<const char*, Weight>>{
           {"A2", {1, 0}}, {"B2", {0, 1}}}) {
    auto d = RootDatum::build(spec);
    auto v = build_irreducible(d, lam);
    std::vector<GroupAlgebraElement> poly{GroupAlgebraElement::constant(d.rank(), 1)};
    for (auto& b : v.basis) {
      poly.push_back(GroupAlgebraElement(d.rank()));
      for (size_t k = poly.size() - 1; k > 0; --k)
        poly[k] += poly[k - 1] * GroupAlgebraElement::monomial(b.weight, 1);
    }
    for (int k = 0; k <= v.dim(); ++k) CHECK(poly[k] == exterior_power(v, k).character());
  }
}

TEST_CASE("sigma structures") {
  auto a2 = RootDatum::build("A2");
  auto id = parse_sigma(a2, "");
  auto adj = build_irreducible(a2, {1, 1});
  CHECK(sigma_structure(adj, id) == Mat::identity(8));

  auto s = parse_sigma(a2, "(1 2)");
  auto adj2 = build_irreducible(a2, {1, 1});
  Mat m = sigma_structure(adj2, s);
  // normalized at the highest weight line, squares to the identity
  CHECK(m.at(0, 0) == 1);
  CHECK(mat_mul(m, m) == Mat::identity(8));

  // A3+swap on the wedge square: sigma fixes omega_2
  auto a3 = RootDatum::build("A3");
  auto s3 = parse_sigma(a3, "(1 3)");
  auto w2 = build_irreducible(a3, {0, 1, 0});
  Mat m3 = sigma_structure(w2, s3);
  CHECK(mat_mul(m3, m3) == Mat::identity(6));
  REQUIRE(w2.sigma_map.has_value());

  // cross intertwiner for a non-fixed highest weight
  auto std3 = build_irreducible(a2, {1, 0});
  Mat cross = sigma_structure(std3, s);
  CHECK(cross.rows == 3);
  CHECK_FALSE(std3.sigma_map.has_value());
}

TEST_CASE("sigma structure on the adjoint sees the BC+ divisor sign") {
  // twisted character of the A2 adjoint: no contribution from the
  // two-dimensional zero weight space, a unit times e^{alpha_O}+e^{-alpha_O}
  auto a2 = RootDatum::build("A2");
  auto s = parse_sigma(a2, "(1 2)");
  auto adj = build_irreducible(a2, {1, 1});
  sigma_structure(adj, s);
  auto chi = twisted_character(adj, s);
  GroupAlgebraElement expect =
      GroupAlgebraElement::monomial({1, 1}, 1) + GroupAlgebraElement::monomial({-1, -1}, 1);
  CHECK(chi.equals_up_to_rational_unit(expect));
  CHECK(chi.coeff({0, 0}) == 0);
}

TEST_CASE("r_V counts") {
  auto a2 = RootDatum::build("A2");
  auto id = parse_sigma(a2, "");
  CoinvariantLattice cl_id(a2, id);
  auto adj = build_irreducible(a2, {1, 1});
  CHECK(r_V(adj, cl_id) == adj.multiplicity({0, 0}));  // sigma = id

  auto s = parse_sigma(a2, "(1 2)");
  CoinvariantLattice cl(a2, s);
  auto std3 = build_irreducible(a2, {1, 0});
  CHECK(r_V(std3, cl) == 1);

  auto a3 = RootDatum::build("A3");
  auto s3 = parse_sigma(a3, "(1 3)");
  CoinvariantLattice cl3(a3, s3);
  auto w2 = build_irreducible(a3, {0, 1, 0});
  CHECK(r_V(w2, cl3) == 2);
}

TEST_CASE("zeta counts") {
  // A3+swap, wedge^2 std: zeta vanishes on singleton orbits, is 1 on pairs
  auto a3 = RootDatum::build("A3");
  auto s3 = parse_sigma(a3, "(1 3)");
  CoinvariantLattice cl3(a3, s3);
  auto w2 = build_irreducible(a3, {0, 1, 0});
  for (auto& o : sigma_orbits(a3, s3)) {
    int64_t expect = o.roots.size() == 2 ? 1 : 0;
    CHECK(zeta(w2, cl3, o) == expect);
  }

  // sigma = id on A1: zeta = n/2 for even n
  auto a1 = RootDatum::build("A1");
  auto id1 = parse_sigma(a1, "");
  CoinvariantLattice cl1(a1, id1);
  auto orbits1 = sigma_orbits(a1, id1);
  for (int64_t n : {0, 2, 4, 6}) {
    auto v = build_irreducible(a1, {n});
    for (auto& o : orbits1) CHECK(zeta(v, cl1, o) == n / 2);
  }

  // D4 with the fork swap, vector representation
  auto d4 = RootDatum::build("D4");
  auto sd = parse_sigma(d4, "(3 4)");
  CoinvariantLattice cld(d4, sd);
  auto vec = build_irreducible(d4, {1, 0, 0, 0});
  for (auto& o : sigma_orbits(d4, sd)) {
    int64_t expect = o.roots.size() == 2 ? 1 : 0;  // O_i^pm vs O_{i,j}^pm
    CHECK(zeta(vec, cld, o) == expect);
  }
}

TEST_CASE("zeta duality") {
  auto a3 = RootDatum::build("A3");
  auto s3 = parse_sigma(a3, "(1 3)");
  CoinvariantLattice cl(a3, s3);
  auto w2 = build_irreducible(a3, {0, 1, 0});
  auto std4 = build_irreducible(a3, {1, 0, 0});
  for (auto& o : sigma_orbits(a3, s3)) {
    CHECK(zeta(w2, cl, o) == zeta(dual(w2), cl, o));
    CHECK(zeta(std4, cl, o) == zeta(dual(std4), cl, o));
  }
}

TEST_CASE("twisted characters") {
  auto a2 = RootDatum::build("A2");
  auto id = parse_sigma(a2, "");
  auto adj = build_irreducible(a2, {1, 1});
  sigma_structure(adj, id);
  CHECK(twisted_character(adj, id) == adj.character());

  // A2+swap std: no sigma-fixed weights, the twisted character vanishes
  auto s = parse_sigma(a2, "(1 2)");
  auto std3 = build_irreducible(a2, {1, 0});
  CHECK(twisted_character(std3, s).is_zero());

  // W0-invariance for the A3+swap adjoint
  auto a3 = RootDatum::build("A3");
  auto s3 = parse_sigma(a3, "(1 3)");
  auto adj3 = build_irreducible(a3, {1, 0, 1});
  sigma_structure(adj3, s3);
  auto chi = twisted_character(adj3, s3);
  auto folded = fold(a3, s3);
  for (auto& word : folded.w0_generators)
    CHECK(chi.map_exponents([&](const Weight& e) { return a3.apply_word(word, e); }) == chi);
}

TEST_CASE("sigma conjugation permutes the generator matrices") {
  auto a3 = RootDatum::build("A3");
  auto s3 = parse_sigma(a3, "(1 3)");
  auto w2 = build_irreducible(a3, {0, 1, 0});
  Mat m = sigma_structure(w2, s3);
  Mat minv = inverse(m);
  for (int i = 0; i < 3; ++i) {
    CHECK(mat_mul(m, mat_mul(w2.e_mats[i].dense(), minv)) == w2.e_mats[s3.apply_node(i)].dense());
    CHECK(mat_mul(m, mat_mul(w2.f_mats[i].dense(), minv)) == w2.f_mats[s3.apply_node(i)].dense());
  }
}

TEST_CASE("exceptional types") {
  struct Case {
    const char* group;
    Weight lambda;
    int dim;
  };
  for (auto c : std::vector<Case>{{"F4", {0, 0, 0, 1}, 26},
                                  {"E6", {1, 0, 0, 0, 0, 0}, 27},
                                  {"C3", {0, 1, 0}, 14},
                                  {"B3", {0, 0, 1}, 8}}) {
    auto d = RootDatum::build(c.group);
    CHECK(weyl_dim(d, c.lambda) == Int(c.dim));
    auto v = build_irreducible(d, c.lambda);
    CHECK(v.dim() == c.dim);
    v.check_serre_relations();
    auto table = freudenthal_table(d, c.lambda);
    for (auto& [w, mult] : v.weight_multiplicities())
      CHECK(table.at(d.dominant_conjugate(w).first) == mult);
  }
}

TEST_CASE("dimension cap") {
  auto a2 = RootDatum::build("A2");
  CHECK_THROWS_AS(build_irreducible(a2, {3, 3}, 10), std::runtime_error);
}

TEST_CASE("direct sums") {
  auto a1 = RootDatum::build("A1");
  auto v2 = build_irreducible(a1, {2});
  auto v4 = build_irreducible(a1, {4});
  auto s = direct_sum(v2, v4);
  CHECK(s.dim() == 8);
  s.check_serre_relations();
  CHECK(s.character() == v2.character() + v4.character());
}
