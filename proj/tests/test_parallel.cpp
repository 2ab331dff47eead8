#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdlib>

#include "twistinv/filtration.hpp"
#include "twistinv/parallel.hpp"

using namespace twistinv;

TEST_CASE("parallel sweep matches the serial reference") {
  auto b2 = RootDatum::build("B2");
  auto v = build_irreducible(b2, {1, 1});
  auto serial = all_filtration_profiles_serial(v);
  auto parallel = all_filtration_profiles(v);
  REQUIRE(serial.size() == parallel.size());
  for (auto& [w, p] : serial) {
    auto it = parallel.find(w);
    REQUIRE(it != parallel.end());
    CHECK(p.gr.coeffs == it->second.gr.coeffs);
    CHECK(p.fil_dims == it->second.fil_dims);
    CHECK(p.box == it->second.box);
  }
}

TEST_CASE("parallel_for covers every index exactly once") {
  std::vector<int> hits(512, 0);
  parallel_for(512, [&](int64_t i) { hits[size_t(i)] += 1; });
  for (int h : hits) CHECK(h == 1);
}

TEST_CASE("TWISTINV_SERIAL forces the serial path") {
  setenv("TWISTINV_SERIAL", "1", 1);
  CHECK_FALSE(parallel_enabled());
  std::vector<int> hits(64, 0);
  parallel_for(64, [&](int64_t i) { hits[size_t(i)] += 1; });
  for (int h : hits) CHECK(h == 1);
  unsetenv("TWISTINV_SERIAL");
}

TEST_CASE("exceptions propagate out of the parallel region") {
  CHECK_THROWS_AS(
      parallel_for(16, [&](int64_t i) { if (i == 7) throw std::runtime_error("boom"); }),
      std::runtime_error);
}
