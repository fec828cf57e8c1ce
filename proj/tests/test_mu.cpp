#include <catch2/catch_amalgamated.hpp>

#include <map>

#include "oracles.hpp"
#include "solgrowth/catalog.hpp"
#include "solgrowth/mu.hpp"

using namespace solgrowth;

namespace {

  std::vector<Index> all_indices(FiniteGroupTable const& T) {
    std::vector<Index> v(T.order());
    for (Index i = 0; i < T.order(); ++i) {
      v[i] = i;
    }
    return v;
  }

  MuValue oracle_mu(FiniteGroupTable const& T) {
    oracle::MuOracle o{T, {}};
    auto             v = o(all_indices(T));
    return {static_cast<std::uint32_t>(v.first), static_cast<std::uint32_t>(v.second)};
  }

  // Frozen from the definition-level oracle above.
  std::map<std::string, MuValue> const kGolden{
      {"S3", {2, 0}},      {"Q8", {0, 1}},      {"SL2(3)", {1, 1}}, {"GL2(3)", {2, 1}},
      {"S4", {3, 0}},      {"F3^2:Q8", {1, 1}}, {"D8", {0, 1}},     {"C2wrC2", {0, 1}},
      {"A4", {2, 0}},      {"AGL1(5)", {2, 0}}, {"F2^3:C7", {2, 0}}, {"C12", {1, 0}},
      {"Q8xC2", {0, 1}}};

}  // namespace

TEST_CASE("MuValue order agrees with 50-digit evaluation", "[mu]") {
  std::vector<MuValue> vs;
  for (std::uint32_t a = 0; a <= 8; ++a) {
    for (std::uint32_t b = 0; b <= 6; ++b) {
      vs.push_back({a, b});
    }
  }
  for (auto x : vs) {
    for (auto y : vs) {
      bool const less = x.decimal() < y.decimal();
      CHECK((x < y) == less);
      CHECK((x == y) == (x.a == y.a && x.b == y.b));
    }
  }
  CHECK(MuValue{0, 1}.value() == Catch::Approx(1.6609640474));
  CHECK(MuValue{1, 1}.str() == "1 + log4(10)");
  CHECK(MuValue{3, 0}.str() == "3");
}

TEST_CASE("golden mu values come from the oracle", "[mu]") {
  for (auto const& [name, want] : kGolden) {
    INFO(name);
    auto T = enumerate_group(catalog(name));
    CHECK(oracle_mu(T) == want);
    CHECK(mu_fast(T).first == want);
    CHECK(mu_bruteforce(T).first == want);
  }
}

TEST_CASE("fast and brute-force mu agree with valid witnesses", "[mu]") {
  for (auto const& name :
       {"S3", "S4", "Q8", "SL2(3)", "C6", "D8", "A4", "AGL1(5)", "F2^3:C7", "GL2(3)",
        "C2xC2", "D12", "C12", "F3^2:Q8", "C2wrC2", "GL1(3)wrS2", "S3wrS2", "D16",
        "Q8xC2", "F2^3:(7:3)", "AGL1(7)", "AGL1(8)", "AGL1(9)"}) {
    INFO(name);
    auto T      = enumerate_group(catalog(name));
    auto [f, S] = mu_fast(T);
    auto [b, B] = mu_bruteforce(T);
    CHECK(f == b);
    CHECK(validate_series(T, S));
    CHECK(validate_series(T, B));
    CHECK(S.chain.front().order() == T.order());
    // trivially mu <= delta
    CHECK(f <= MuValue{static_cast<std::uint32_t>(*derived_length(T)), 0});
  }
}

TEST_CASE("abelian groups cost one step", "[mu]") {
  for (auto const& name : {"C2", "C12", "C2xC2", "F3^2"}) {
    auto [v, S] = mu_fast(enumerate_group(catalog(name)));
    CHECK(v == MuValue{1, 0});
    REQUIRE(S.kinds.size() == 1);
    CHECK(S.kinds[0] == FactorKind::Abelian);
  }
}

TEST_CASE("witness series rejects tampering", "[mu]") {
  auto T      = enumerate_group(catalog("Q8"));
  auto [v, S] = mu_fast(T);
  REQUIRE(S.kinds == std::vector<FactorKind>{FactorKind::ClassTwo});
  auto bad = S;
  bad.kinds[0] = FactorKind::Abelian;
  CHECK_FALSE(validate_series(T, bad));
  bad      = S;
  bad.cost = MuValue{1, 0};
  CHECK_FALSE(validate_series(T, bad));
}

TEST_CASE("non-soluble groups are rejected", "[mu]") {
  auto T = enumerate_group(catalog("A5"));
  CHECK_THROWS_AS(mu_fast(T), GroupError);
  CHECK_THROWS_AS(mu_bruteforce(T), GroupError);
}

TEST_CASE("mu properties on small groups", "[mu]") {
  for (auto const& name : {"Q8", "S3", "SL2(3)"}) {
    INFO(name);
    auto rep = mu_properties_check(enumerate_group(catalog(name)), name, true);
    CHECK(rep.ok());
    CHECK(rep.power_checks == 1);
    CHECK(rep.subgroup_checks > 0);
  }
  for (auto const& name : {"S4", "GL2(3)", "F3^2:Q8", "D8"}) {
    INFO(name);
    auto rep = mu_properties_check(enumerate_group(catalog(name)), name);
    CHECK(rep.ok());
  }
  // SL2(3) over its normal Q8: the extension bound is attained
  auto T  = enumerate_group(catalog("SL2(3)"));
  auto D  = commutator_subgroup(T, whole_group(T), whole_group(T));
  REQUIRE(D.order() == 8);
  MuFast m(T);
  CHECK(m.value(D) + mu(quotient(T, D).table) == mu(T));
}

TEST_CASE("mu of the direct product exceeds both factors", "[mu]") {
  auto const G1 = catalog("SL2(3)");
  auto const G2 = catalog("F3^2:Q8");
  auto       r  = product_counterexample_check(G1, G2);
  CHECK(r.mu1 == MuValue{1, 1});
  CHECK(r.mu2 == MuValue{1, 1});
  CHECK(r.strict);
  CHECK(r.mu_product == MuValue{3, 0});

  // identity sanity: G1 x 1 behaves like G1
  CHECK(mu(enumerate_group(direct_product(G1, GenSet({GroupElement::identity_matrix_fp(2, 3)},
                                                     true, true))))
        == r.mu1);
}

TEST_CASE("wreath product bound", "[mu]") {
  auto w = mu_of_wreath_check(catalog("C2"), catalog("C2"));
  CHECK(w.holds);
  CHECK(w.mu_w == MuValue{0, 1});
  w = mu_of_wreath_check(catalog("S3"), catalog("S2"));
  CHECK(w.holds);
  CHECK(w.mu_w <= MuValue{4, 0});
  w = mu_of_wreath_check(catalog("S3"), catalog("S3"));
  CHECK(w.holds);
}
