#include <catch2/catch_amalgamated.hpp>

#include <set>

#include "oracles.hpp"
#include "solgrowth/certificate.hpp"
#include "solgrowth/catalog.hpp"
#include "solgrowth/growth.hpp"

using namespace solgrowth;

namespace {

  // Y_i recomputed from scratch: conjugate every y by every g with l(g) <= i.
  std::vector<Index> level_by_definition(FiniteGroupTable const& T, std::vector<Index> const& Y,
                                         std::uint32_t i) {
    std::set<Index> out;
    for (Index g = 0; g < T.order(); ++g) {
      if (T.word_length(g) <= i) {
        for (auto y : Y) {
          out.insert(T.conj(y, g));
        }
      }
    }
    return {out.begin(), out.end()};
  }

  std::vector<Index> normal_closure_oracle(FiniteGroupTable const& T, std::vector<Index> const& Y) {
    std::vector<Index> seeds;
    for (Index g = 0; g < T.order(); ++g) {
      for (auto y : Y) {
        seeds.push_back(T.conj(y, g));
      }
    }
    return oracle::table_closure(T, seeds);
  }

  Index find_perm(FiniteGroupTable const& T, std::vector<std::uint32_t> images) {
    return *T.find(GroupElement::permutation(std::move(images)));
  }

}  // namespace

TEST_CASE("chains on symmetric groups", "[milnor-certifier]") {
  auto S3 = enumerate_group(catalog("S3"));
  auto t  = find_perm(S3, {1, 0, 2});
  auto c  = milnor_chain(S3, {t});
  CHECK(c.closure_verified);
  CHECK(c.H.back().order() == 6);
  CHECK(c.k >= 1);
  CHECK(c.length_Z <= c.length_Y + 2 * c.k);

  auto S4 = enumerate_group(catalog("S4"));
  auto v  = find_perm(S4, {1, 0, 3, 2});
  auto cv = milnor_chain(S4, {v});
  CHECK(cv.H.back().order() == 4);
  CHECK(cv.k <= 1);
  CHECK(cv.closure_verified);

  // Y already normal
  auto Q  = enumerate_group(catalog("Q8"));
  auto z  = center(Q, whole_group(Q));
  std::vector<Index> zy(z.members().begin() + 1, z.members().end());
  auto cz = milnor_chain(Q, zy);
  CHECK(cz.k == 0);
  CHECK(cz.Z == cz.Y);
}

TEST_CASE("chain soundness on the corpus", "[milnor-certifier]") {
  std::size_t pairs = 0;
  for (auto const& name : {"S3", "S4", "Q8", "SL2(3)", "D8", "A4", "AGL1(5)", "F2^3:C7",
                           "GL2(3)", "F3^2:Q8", "C2wrC2", "(7:3)"}) {
    auto T = enumerate_group(catalog(name));
    // Y = a single element of each order class, and the first two generators' commutator
    std::vector<std::vector<Index>> seeds;
    std::set<Index> orders_seen;
    for (Index g = 1; g < T.order() && seeds.size() < 3; ++g) {
      if (orders_seen.insert(T.element_order(g)).second) {
        seeds.push_back({g});
      }
    }
    if (T.generators().size() >= 2) {
      seeds.push_back({T.comm(T.generators()[0], T.generators()[1])});
    }
    for (auto const& Y : seeds) {
      INFO(name << " y=" << Y.front());
      auto c = milnor_chain(T, Y);
      CHECK(c.closure_verified);
      CHECK(c.H.back().members() == normal_closure_oracle(T, Y));
      CHECK(c.length_Z <= c.length_Y + 2 * c.k);
      for (std::size_t i = 0; i < c.levels.size(); ++i) {
        CHECK(c.levels[i] == level_by_definition(T, c.Y, static_cast<std::uint32_t>(i)));
        if (i > 0) {
          CHECK(c.H[i - 1].subset_of(c.H[i]));
          CHECK(c.H[i - 1] != c.H[i]);
        }
      }
      // the chain stops exactly when the next level adds nothing new
      auto next = level_by_definition(T, c.Y, static_cast<std::uint32_t>(c.k + 1));
      CHECK(subgroup_generated(T, next) == c.H.back());
      auto d = distinct_products_check(T, c);
      CHECK(d.distinct);
      CHECK(d.holds);
      auto tbl = T.growth();
      CHECK(tbl[std::min<std::size_t>(d.radius, tbl.size() - 1)] >= d.bound);
      ++pairs;
    }
  }
  CHECK(pairs >= 20);
}

TEST_CASE("distinct products", "[milnor-certifier]") {
  auto T = enumerate_group(catalog("F2^3:C7"));
  // three independent vectors of the normal F2^3
  auto V = commutator_subgroup(T, whole_group(T), whole_group(T));
  REQUIRE(V.order() == 8);
  std::vector<Index> ys;
  Subgroup span = Subgroup::trivial(T);
  for (auto v : V.members()) {
    if (!span.contains(v)) {
      ys.push_back(v);
      span = subgroup_generated(T, ys);
    }
  }
  REQUIRE(ys.size() == 3);
  auto prods = subset_products(T, ys);
  CHECK(prods.size() == 8);
  CHECK(all_distinct(prods, T.order()));
  CHECK(subset_products(T, {ys[0]}) == std::vector<Index>{0, ys[0]});

  MilnorChain bad;
  bad.H = {whole_group(T)};
  bad.witnesses = {ys[0]};
  bad.k = 1;
  CHECK_THROWS_AS(distinct_products_check(T, bad), GroupError);
}

TEST_CASE("quantitative bound", "[milnor-certifier]") {
  auto S3 = enumerate_group(catalog("S3"));
  auto c  = milnor_chain(S3, {find_perm(S3, {1, 0, 2})});
  auto q  = quantitative_bound_check(S3, c, 1.0 / 3, 5);
  CHECK(q.k_holds);
  CHECK(q.z_holds);

  auto S4 = enumerate_group(catalog("S4"));
  auto c4 = milnor_chain(S4, {find_perm(S4, {1, 0, 3, 2})});
  auto q4 = quantitative_bound_check(S4, c4, 0.4, 50);
  CHECK(q4.k_holds);
  CHECK(q4.k_bound > q4.k);
  // the full S4 table violates exp(n^0.1)
  CHECK_THROWS_AS(quantitative_bound_check(S4, c4, 0.1, 1), GroupError);
  CHECK_THROWS_AS(quantitative_bound_check(S4, c4, 0.6, 5), GroupError);
}

TEST_CASE("derived generators", "[milnor-certifier]") {
  auto T = enumerate_group(catalog("SL2(3)"));
  auto d = derived_generators(T, 10);
  REQUIRE(d.steps.size() == 4);
  CHECK(d.steps[1].order == 8);
  CHECK(d.steps[2].order == 2);
  CHECK(d.steps[3].order == 1);
  CHECK(d.matches_series);
  for (std::size_t k = 1; k < d.steps.size(); ++k) {
    double const Lp = d.steps[k - 1].length;
    CHECK(d.steps[k].length <= 4 * Lp + d.recurrence_C * std::sqrt(Lp) + 1e-9);
  }

  auto S4 = enumerate_group(catalog("S4"));
  auto s  = derived_generators(S4, 10);
  CHECK(s.steps.size() == 4);  // S4 > A4 > V4 > 1
  CHECK(s.matches_series);

  auto C = enumerate_group(catalog("C12"));
  auto a = derived_generators(C, 10);
  REQUIRE(a.steps.size() == 2);
  CHECK(a.steps[1].order == 1);
}

namespace {

  void check_certificate(std::string const& name, std::vector<std::uint32_t> const& want_costs,
                         std::uint32_t want_n) {
    INFO(name);
    auto X    = catalog(name);
    auto T    = enumerate_group(X);
    auto cert = certify_growth_lower_bound(T, Subgroup::trivial(T));
    CHECK(cert.n == want_n);
    if (!want_costs.empty()) {
      CHECK(cert.costs == want_costs);
    }
    CHECK(cert.independent);
    CHECK(cert.distinct);
    CHECK(cert.holds);
    CHECK(cert.cost_word_matches);
    CHECK(cert.mu == mu_fast(T).first);
    CHECK(cert.series_orders.back() == 1);
    // the last nontrivial term is V, of order p^n
    std::size_t pn = 1;
    for (std::uint32_t i = 0; i < cert.n; ++i) {
      pn *= cert.p;
    }
    CHECK(cert.series_orders[cert.series_orders.size() - 2] == pn);
    // datapoint against an independent growth computation
    auto g = growth_table(X, static_cast<std::uint32_t>(cert.radius));
    CHECK(g.gamma.back() >= cert.bound);
    CHECK(g.gamma.back() == cert.gamma);
    for (std::size_t i = 0; i < cert.words.size(); ++i) {
      CHECK(cert.words[i].size() <= cert.L);
      CHECK(T.word_length(cert.b[i]) <= cert.L);
    }
  }

}  // namespace

TEST_CASE("certificates", "[milnor-certifier]") {
  check_certificate("F2^3:C7", {4, 4}, 3);
  check_certificate("S4", {}, 2);
  check_certificate("AGL1(5)", {4, 4}, 1);
  check_certificate("F3^2:Q8", {}, 2);
  auto T    = enumerate_group(catalog("F3^2:Q8"));
  auto cert = certify_growth_lower_bound(T, Subgroup::trivial(T));
  CHECK(std::count(cert.costs.begin(), cert.costs.end(), 10u) >= 1);

  auto S4 = enumerate_group(catalog("S4"));
  auto s  = certify_growth_lower_bound(S4, Subgroup::trivial(S4), {true});
  CHECK(s.transcript.size() == 4);

  // a quotient: S4 / V4 is S3 with V = C3
  auto V4 = commutator_subgroup(S4, commutator_subgroup(S4, whole_group(S4), whole_group(S4)),
                                commutator_subgroup(S4, whole_group(S4), whole_group(S4)));
  auto q = certify_growth_lower_bound(S4, V4);
  CHECK(q.p == 3);
  CHECK(q.n == 1);
  CHECK(q.holds);

  // no self-centralizing minimal normal subgroup in Q8 or C2 x C2 x ... abelian noncyclic
  auto Q8 = enumerate_group(catalog("Q8"));
  CHECK_THROWS_AS(certify_growth_lower_bound(Q8, Subgroup::trivial(Q8)), GroupError);
}

TEST_CASE("canonical chain", "[milnor-certifier]") {
  auto T  = enumerate_group(catalog("AGL1(5)"));
  auto V  = commutator_subgroup(T, whole_group(T), whole_group(T));
  auto cc = canonical_modified_chain(T, V);
  CHECK(cc.costs == std::vector<std::uint32_t>{4, 4});
  REQUIRE(cc.series.chain.size() == 3);
  CHECK(cc.series.chain[1] == V);
  CHECK(validate_series(T, cc.series));
  CHECK_THROWS_AS(canonical_modified_chain(T, whole_group(T)), GroupError);
}
