#include <catch2/catch_amalgamated.hpp>

#include "oracles.hpp"
#include "solgrowth/growth.hpp"
#include "solgrowth/catalog.hpp"
#include "solgrowth/subgroup.hpp"

using namespace solgrowth;

TEST_CASE("Z^2 balls match lattice counts", "[growth-engine]") {
  auto g = growth_table(catalog("Z^2"), 25);
  REQUIRE(g.gamma.size() == 26);
  CHECK_FALSE(g.truncated);
  CHECK_FALSE(g.exhausted);
  for (std::int64_t n = 0; n <= 25; ++n) {
    INFO(n);
    CHECK(g.gamma[n] == oracle::lattice_ball(n));
    CHECK(g.gamma[n] == static_cast<std::uint64_t>(2 * n * n + 2 * n + 1));
  }
  auto f = growth_exponent_fit(g);
  CHECK(f.model == GrowthModel::Polynomial);
  CHECK(f.poly_degree == Catch::Approx(2).margin(0.2));
}

TEST_CASE("Sanov subgroup is free", "[growth-engine]") {
  auto g = growth_table(catalog("Sanov"), 12);
  REQUIRE(g.gamma.size() == 13);
  std::uint64_t p3 = 1;
  for (int n = 0; n <= 12; ++n) {
    INFO(n);
    CHECK(g.gamma[n] == oracle::free_ball(n));
    CHECK(g.gamma[n] == 2 * p3 - 1);
    p3 *= 3;
  }
  auto f = growth_exponent_fit(g);
  CHECK(f.beta == Catch::Approx(1).margin(0.15));
}

TEST_CASE("Heisenberg degree", "[growth-engine]") {
  auto g = growth_table(catalog("Heisenberg"), 18);
  auto f = growth_exponent_fit(g, 10, 18);
  CHECK(f.poly_degree >= 3.3);
  CHECK(f.poly_degree <= 4.5);
  // small radii against brute-force words
  auto w = oracle::ball_sizes_by_words(catalog("Heisenberg").elements, 6);
  for (std::size_t n = 0; n < w.size(); ++n) {
    CHECK(g.gamma[n] == w[n]);
  }
}

TEST_CASE("growth tables are deterministic and submultiplicative", "[growth-engine]") {
  for (auto const& name : {"Lamplighter", "Heisenberg", "Z^2"}) {
    INFO(name);
    auto a = growth_table(catalog(name), 10);
    auto b = growth_table(catalog(name), 10);
    CHECK(a.gamma == b.gamma);
    CHECK(a.digest == b.digest);
    for (std::size_t m = 0; m < a.gamma.size(); ++m) {
      for (std::size_t n = 0; m + n < a.gamma.size(); ++n) {
        CHECK(a.gamma[m + n] <= a.gamma[m] * a.gamma[n]);
      }
    }
  }
  auto l = growth_table(catalog("Lamplighter"), 7);
  auto w = oracle::ball_sizes_by_words(catalog("Lamplighter").elements, 7);
  CHECK(l.gamma == w);
}

TEST_CASE("finite groups agree with their tables", "[growth-engine]") {
  for (auto const& name : {"S4", "SL2(3)", "F3^2:Q8", "AGL1(7)", "C12"}) {
    INFO(name);
    auto X   = catalog(name);
    auto T   = enumerate_group(X);
    auto tg  = T.growth();
    auto g   = growth_table(X, T.diameter() + 3);
    CHECK(g.exhausted);
    for (std::size_t r = 0; r < g.gamma.size(); ++r) {
      CHECK(g.gamma[r] == tg[std::min(r, tg.size() - 1)]);
    }
  }
  auto z = growth_table(catalog("Z^2"), 0);
  CHECK(z.gamma == std::vector<std::uint64_t>{1});
}

TEST_CASE("gap hypothesis", "[growth-engine]") {
  auto z = growth_table(catalog("Z^2"), 25);
  CHECK(gap_hypothesis_check(z, 1.0 / 3, 10));
  auto f = growth_table(catalog("Sanov"), 10);
  CHECK_FALSE(gap_hypothesis_check(f, 0.5, 1));
  CHECK_THROWS_AS(gap_hypothesis_check(f, 0, 1), GroupError);
  CHECK_THROWS_AS(gap_hypothesis_check(f, 0.5, 0.5), GroupError);
}

TEST_CASE("caps truncate and flag", "[growth-engine]") {
  GrowthCaps caps;
  caps.max_elements = 500;
  auto g = growth_table(catalog("Sanov"), 12, caps);
  CHECK(g.truncated);
  CHECK(g.truncation_reason == "max_elements");
  CHECK(g.radius() < 12);
  auto full = growth_table(catalog("Sanov"), g.radius());
  CHECK(std::equal(g.gamma.begin(), g.gamma.end(), full.gamma.begin()));

  caps              = {};
  caps.memory_bytes = 4096;
  auto m = growth_table(catalog("Z^2"), 25, caps);
  CHECK(m.truncated);
  CHECK(m.truncation_reason == "memory");
}

TEST_CASE("fit windows", "[growth-engine]") {
  auto z = growth_table(catalog("Z^2"), 3);
  CHECK_THROWS_AS(growth_exponent_fit(z, 2, 3), GroupError);
  CHECK_THROWS_AS(growth_exponent_fit(growth_table(catalog("Z^2"), 1)), GroupError);
  auto c = growth_table(catalog("C5"), 8);
  CHECK_NOTHROW(growth_exponent_fit(c, 1, 3));
}

TEST_CASE("S4 tower truncations", "[growth-engine]") {
  auto T1 = enumerate_group(catalog("S4tower(1)"));
  CHECK(T1.order() == 24);
  auto D1 = enumerate_group(catalog("S4tower'(1)"));
  CHECK(D1.order() == 12);
  CHECK(commutator_subgroup(T1, whole_group(T1), whole_group(T1)).order() == 12);
}
