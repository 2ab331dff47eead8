#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "twistinv/chevalley.hpp"

using namespace twistinv;

namespace {

// Determinant of x*Id - gamma as a polynomial in x with Laurent
// coefficients, by direct expansion over permutations (small dims only);
// an independent route to the characteristic polynomial.
std::vector<GroupAlgebraElement> char_poly_by_determinant(const TorusEndomorphism& g,
                                                          size_t rank) {
  int d = g.dim();
  std::vector<GroupAlgebraElement> coeffs(d + 1, GroupAlgebraElement(rank));
  std::vector<int> perm(d);
  for (int i = 0; i < d; ++i) perm[i] = i;
  do {
    int sign = 1;
    {
      std::vector<bool> seen(d, false);
      for (int i = 0; i < d; ++i) {
        if (seen[i]) continue;
        int len = 0, j = i;
        while (!seen[j]) {
          seen[j] = true;
          j = perm[j];
          ++len;
        }
        if (len % 2 == 0) sign = -sign;
      }
    }
    // product over i of (x delta - gamma)_{i, perm(i)}: expand the x-part
    // as a subset of fixed points
    std::vector<int> fixed;
    for (int i = 0; i < d; ++i)
      if (perm[i] == i) fixed.push_back(i);
    int f = int(fixed.size());
    bool offdiag_zero = false;
    GroupAlgebraElement base = GroupAlgebraElement::constant(rank, sign);
    for (int i = 0; i < d; ++i) {
      if (perm[i] == i) continue;
      if (g.entries[i][perm[i]].is_zero()) {
        offdiag_zero = true;
        break;
      }
      base = base * -g.entries[i][perm[i]];
    }
    if (offdiag_zero) continue;
    // distribute (x - gamma_ii) over the fixed points
    for (int mask = 0; mask < (1 << f); ++mask) {
      GroupAlgebraElement term = base;
      int xs = 0;
      bool dead = false;
      for (int b = 0; b < f; ++b) {
        if (mask & (1 << b)) {
          ++xs;
        } else {
          if (g.entries[fixed[b]][fixed[b]].is_zero()) {
            dead = true;
            break;
          }
          term = term * -g.entries[fixed[b]][fixed[b]];
        }
      }
      if (!dead) coeffs[xs] += term;
    }
  } while (std::next_permutation(perm.begin(), perm.end()));
  return coeffs;
}

}  // namespace

TEST_CASE("gamma_taut shapes") {
  auto a1 = RootDatum::build("A1");
  auto id1 = parse_sigma(a1, "");
  auto triv = sigma_stable_envelope(a1, id1, {0});
  auto g0 = gamma_taut(triv, id1);
  CHECK(g0.dim() == 1);
  CHECK(g0.entries[0][0] == GroupAlgebraElement::constant(1, 1));

  auto v1 = sigma_stable_envelope(a1, id1, {1});
  auto g1 = gamma_taut(v1, id1);
  CHECK(g1.dim() == 2);
  // diagonal e^{omega}, e^{-omega}
  for (int i = 0; i < 2; ++i) {
    CHECK(g1.entries[i][i] ==
          GroupAlgebraElement::monomial(v1.basis[i].weight, 1));
    CHECK(g1.entries[i][1 - i].is_zero());
  }
}

TEST_CASE("gamma_taut for A2+swap std is permutation-like with zero diagonal") {
  auto a2 = RootDatum::build("A2");
  auto s = parse_sigma(a2, "(1 2)");
  auto env = sigma_stable_envelope(a2, s, {1, 0});
  CHECK(env.dim() == 6);  // std + its sigma-twist
  auto g = gamma_taut(env, s);
  for (int j = 0; j < 6; ++j) {
    CHECK(g.entries[j][j].is_zero());  // no sigma-fixed weights
    int nonzero = 0;
    for (int i = 0; i < 6; ++i)
      if (!g.entries[i][j].is_zero()) {
        ++nonzero;
        CHECK(g.entries[i][j].num_terms() == 1);  // monomial entries
      }
    CHECK(nonzero == 1);
  }
}

TEST_CASE("characteristic polynomials") {
  auto a1 = RootDatum::build("A1");
  auto id1 = parse_sigma(a1, "");

  auto triv = sigma_stable_envelope(a1, id1, {0});
  auto f0 = char_polynomial(triv, id1);
  REQUIRE(f0.degree() == 1);
  CHECK(f0.coeffs[1] == GroupAlgebraElement::constant(1, 1));
  CHECK(f0.coeffs[0] == GroupAlgebraElement::constant(1, -1));  // x - 1

  auto v1 = sigma_stable_envelope(a1, id1, {1});
  auto f1 = char_polynomial(v1, id1);
  REQUIRE(f1.degree() == 2);
  CHECK(f1.coeffs[2] == GroupAlgebraElement::constant(1, 1));
  CHECK(f1.coeffs[1] == -(GroupAlgebraElement::monomial({1}, 1) +
                          GroupAlgebraElement::monomial({-1}, 1)));
  CHECK(f1.coeffs[0] == GroupAlgebraElement::constant(1, 1));
}

TEST_CASE("coefficients equal the determinant expansion") {
  struct Case {
    const char* group;
    const char* sigma;
    Weight lambda;
  };
  for (auto c : std::vector<Case>{{"A1", "", {1}},
                                  {"A1", "", {2}},
                                  {"C2", "", {1, 0}},
                                  {"A2", "(1 2)", {1, 0}},
                                  {"A2", "(1 2)", {1, 1}}}) {
    auto d = RootDatum::build(c.group);
    auto s = parse_sigma(d, c.sigma);
    auto v = sigma_stable_envelope(d, s, c.lambda);
    auto f = char_polynomial(v, s);
    auto g = gamma_taut(v, s);
    auto expanded = char_poly_by_determinant(g, d.rank());
    REQUIRE(int(expanded.size()) == f.degree() + 1);
    for (int k = 0; k <= f.degree(); ++k) CHECK(f.coeffs[k] == expanded[k]);
  }
}

TEST_CASE("Cayley-Hamilton holds exactly") {
  struct Case {
    const char* group;
    const char* sigma;
    Weight lambda;
  };
  for (auto c : std::vector<Case>{{"A1", "", {0}},
                                  {"A1", "", {1}},
                                  {"C2", "", {1, 0}},
                                  {"A2", "(1 2)", {1, 0}},
                                  {"A2", "(1 2)", {1, 1}},
                                  {"A3", "(1 3)", {0, 1, 0}}}) {
    auto d = RootDatum::build(c.group);
    auto s = parse_sigma(d, c.sigma);
    auto v = sigma_stable_envelope(d, s, c.lambda);
    CHECK(cayley_hamilton_check(v, s));
  }
}

TEST_CASE("char poly coefficients are W0-invariant") {
  auto a3 = RootDatum::build("A3");
  auto s = parse_sigma(a3, "(1 3)");
  auto folded = fold(a3, s);
  auto v = sigma_stable_envelope(a3, s, {0, 1, 0});
  auto f = char_polynomial(v, s);
  for (auto& c : f.coeffs) CHECK(chevalley_w0_invariance(c, a3, folded));
}

TEST_CASE("vandermonde for minuscule modules") {
  auto a1 = RootDatum::build("A1");
  auto v1 = build_irreducible(a1, {1});
  auto vdm = vandermonde_minuscule(v1);
  CHECK(vdm == GroupAlgebraElement::monomial({1}, 1) - GroupAlgebraElement::monomial({-1}, 1));
  CHECK(vandermonde_factors_are_root_divisors(v1));

  auto c2 = RootDatum::build("C2");
  auto std4 = build_irreducible(c2, {1, 0});
  auto v = vandermonde_minuscule(std4);
  CHECK_FALSE(v.is_zero());
  CHECK(vandermonde_factors_are_root_divisors(std4));

  // one-dimensional module: empty product
  auto triv = trivial_module(c2);
  CHECK(vandermonde_minuscule(triv) == GroupAlgebraElement::constant(2, 1));

  // non-minuscule inputs are rejected
  auto a2 = RootDatum::build("A2");
  CHECK_THROWS_AS(vandermonde_minuscule(build_irreducible(a2, {1, 1})), std::invalid_argument);
  CHECK_THROWS_AS(vandermonde_minuscule(build_irreducible(a1, {2})), std::invalid_argument);
}

TEST_CASE("w0 invariance of class functions") {
  auto a3 = RootDatum::build("A3");
  auto s = parse_sigma(a3, "(1 3)");
  auto folded = fold(a3, s);
  CHECK(chevalley_w0_invariance(GroupAlgebraElement::constant(3, 7), a3, folded));

  auto w2 = build_irreducible(a3, {0, 1, 0});
  sigma_structure(w2, s);
  CHECK(chevalley_w0_invariance(twisted_character(w2, s), a3, folded));

  Weight alpha_O = folded.simple_folded_roots[0].alpha_O;
  CHECK_FALSE(chevalley_w0_invariance(GroupAlgebraElement::monomial(alpha_O, 1), a3, folded));
}
