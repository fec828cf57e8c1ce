#include <catch2/catch_amalgamated.hpp>

#include <map>
#include <set>

#include "oracles.hpp"
#include "solgrowth/catalog.hpp"
#include "solgrowth/soluble.hpp"

using namespace solgrowth;

namespace {

  std::vector<std::string> const kCorpus{
      "S3", "S4", "Q8", "SL2(3)", "C6", "D8", "A4", "AGL1(5)", "F2^3:C7", "GL2(3)",
      "C2xC2", "D12", "C12", "F3^2:Q8", "C2xS3", "AGL1(7)", "(7:3)"};

  std::set<std::vector<Index>> member_sets(NormalLattice const& L) {
    std::set<std::vector<Index>> out;
    for (auto const& N : L.members) {
      out.insert(N.members());
    }
    return out;
  }

  std::multiset<std::pair<std::uint32_t, std::uint32_t>>
  factor_multiset(std::vector<ChiefFactorRecord> const& fs) {
    std::multiset<std::pair<std::uint32_t, std::uint32_t>> out;
    for (auto const& f : fs) {
      out.emplace(f.p, f.rank);
    }
    return out;
  }

}  // namespace

TEST_CASE("normal lattice matches class-union enumeration", "[soluble]") {
  for (auto const& name : kCorpus) {
    INFO(name);
    auto T = enumerate_group(catalog(name));
    CHECK(member_sets(normal_subgroups(T)) == oracle::normal_subgroups(T));
  }
  CHECK(normal_subgroups(enumerate_group(catalog("S3"))).size() == 3);
  CHECK(normal_subgroups(enumerate_group(catalog("Q8"))).size() == 6);
  CHECK(normal_subgroups(enumerate_group(catalog("C7"))).size() == 2);
}

TEST_CASE("minimal normal subgroups", "[soluble]") {
  auto S3 = enumerate_group(catalog("S3"));
  auto m  = minimal_normal_subgroups(S3);
  REQUIRE(m.size() == 1);
  CHECK(m[0].order() == 3);

  auto Q8 = enumerate_group(catalog("Q8"));
  m       = minimal_normal_subgroups(Q8);
  REQUIRE(m.size() == 1);
  CHECK(m[0] == center(Q8, whole_group(Q8)));

  auto C5 = enumerate_group(catalog("C5"));
  m       = minimal_normal_subgroups(C5);
  REQUIRE(m.size() == 1);
  CHECK(m[0].order() == 5);
}

TEST_CASE("chief series of S4 and friends", "[soluble]") {
  auto S4 = enumerate_group(catalog("S4"));
  auto cs = chief_series(S4);
  REQUIRE(cs.size() == 3);
  CHECK(cs[0].M.order() / cs[0].N.order() == 4);
  CHECK(cs[1].M.order() / cs[1].N.order() == 3);
  CHECK(cs[2].M.order() / cs[2].N.order() == 2);
  CHECK(cs[0].self_centralizing);
  CHECK(cs[1].self_centralizing);
  // S4/A4 is C2, which is its own centralizer in the quotient
  CHECK(cs[2].self_centralizing);
  for (auto const& f : cs) {
    CHECK(f.self_centralizing
          == oracle::self_centralizing(S4, f.N.members(), f.M.members()));
  }

  auto C6 = enumerate_group(catalog("C6"));
  auto c6 = chief_series(C6);
  REQUIRE(c6.size() == 2);
  CHECK(factor_multiset(c6) == std::multiset<std::pair<std::uint32_t, std::uint32_t>>{
                                   {2, 1}, {3, 1}});

  auto F = enumerate_group(catalog("F3^2:Q8"));
  auto fs = chief_series(F);
  REQUIRE(!fs.empty());
  CHECK(fs[0].p == 3);
  CHECK(fs[0].rank == 2);
  CHECK(fs[0].self_centralizing);

  CHECK_THROWS_AS(chief_series(enumerate_group(catalog("A5"))), GroupError);
}

TEST_CASE("chief factor multiset is independent of the series", "[soluble]") {
  for (auto const& name : kCorpus) {
    INFO(name);
    auto T = enumerate_group(catalog(name));
    CHECK(factor_multiset(chief_series(T, TieBreak::First))
          == factor_multiset(chief_series(T, TieBreak::Last)));
  }
}

TEST_CASE("self-centralizing chief rank over all quotients", "[soluble]") {
  for (auto const& name : kCorpus) {
    INFO(name);
    auto          T    = enumerate_group(catalog(name));
    std::uint32_t best = 0;
    for (auto const& [N, M] : oracle::chief_pairs(T)) {
      if (oracle::self_centralizing(T, N, M)) {
        auto idx = M.size() / N.size();
        std::uint32_t r = 0;
        for (auto x = idx; x > 1; ++r) {
          auto p = 2u;
          while (x % p) {
            ++p;
          }
          x /= p;
        }
        best = std::max(best, r);
      }
    }
    CHECK(sc_chief_rank(T) == best);
    CHECK(sc_chief_rank(T) >= 1);
  }
  CHECK(sc_chief_rank(enumerate_group(catalog("C6"))) == 1);
  CHECK(sc_chief_rank(enumerate_group(catalog("S4"))) == 2);
  CHECK(sc_chief_rank(enumerate_group(catalog("F3^2:Q8"))) == 2);
  auto one = enumerate_group(GenSet({GroupElement::identity_permutation(3)}, true, true));
  REQUIRE(one.order() == 1);
  CHECK_THROWS_AS(sc_chief_rank(one), GroupError);
}

TEST_CASE("supersolubility", "[soluble]") {
  CHECK(is_supersoluble(enumerate_group(catalog("C12"))));
  CHECK(is_supersoluble(enumerate_group(catalog("S3"))));
  CHECK_FALSE(is_supersoluble(enumerate_group(catalog("S4"))));
  for (auto const& name : kCorpus) {
    INFO(name);
    auto T = enumerate_group(catalog(name));
    CHECK(is_supersoluble(T) == has_cyclic_chief_series(T));
  }
}

TEST_CASE("maximal subgroups and self-centralizing factor orders", "[soluble]") {
  for (auto const& name : {"S3", "C5", "S4", "Q8", "A4", "D8", "AGL1(5)", "SL2(3)"}) {
    INFO(name);
    auto T    = enumerate_group(catalog(name));
    auto subs = oracle::all_subgroups(T);
    std::set<std::vector<Index>> maxes;
    for (auto const& H : subs) {
      if (H.size() == T.order()) {
        continue;
      }
      bool maximal = true;
      for (auto const& K : subs) {
        if (K.size() > H.size() && K.size() < T.order() && oracle::subset(H, K)) {
          maximal = false;
          break;
        }
      }
      if (maximal) {
        maxes.insert(H);
      }
    }
    std::set<std::vector<Index>> got;
    for (auto const& M : maximal_subgroups(T)) {
      got.insert(M.members());
    }
    CHECK(got == maxes);
    CHECK(sc_iff_maximal_index_check(T).agree);
    CHECK(sc_factors_non_frattini(T));
  }
  auto rep = sc_iff_maximal_index_check(enumerate_group(catalog("S4")));
  CHECK(rep.maximal_indices.count(4));
  CHECK(rep.factor_orders.count(4));
}

TEST_CASE("derived term at the sigma exponent is nilpotent", "[soluble]") {
  for (auto const& name : kCorpus) {
    INFO(name);
    auto T = enumerate_group(catalog(name));
    CHECK(check_srank_nilpotency(T, sc_chief_rank(T)));
  }
  CHECK(check_srank_nilpotency(enumerate_group(catalog("S4")), 2));
  CHECK(check_srank_nilpotency(enumerate_group(catalog("Q8")), 1));
  CHECK(check_srank_nilpotency(enumerate_group(catalog("SL2(3)xF3^2:Q8")), 2));
}
