#include <catch2/catch_amalgamated.hpp>

#include <random>
#include <set>

#include "oracles.hpp"
#include "solgrowth/catalog.hpp"
#include "solgrowth/subgroup.hpp"

using namespace solgrowth;

namespace {

  GroupElement perm(std::vector<std::uint32_t> im) {
    return GroupElement::permutation(std::move(im));
  }

  std::vector<Index> all_indices(FiniteGroupTable const& T) {
    std::vector<Index> v(T.order());
    for (Index i = 0; i < T.order(); ++i) {
      v[i] = i;
    }
    return v;
  }

  // Element of the table with the given order (first in index order).
  Index first_of_order(FiniteGroupTable const& T, Index k) {
    for (Index i = 0; i < T.order(); ++i) {
      if (T.element_order(i) == k) {
        return i;
      }
    }
    FAIL("no element of order " << k);
    return 0;
  }

  std::vector<std::string> const kSmallCorpus{
      "S3", "S4", "Q8", "SL2(3)", "C6", "D8", "A4", "C2wrC2", "AGL1(5)", "F2^3:C7",
      "GL2(3)", "C2xC2", "GL1(3)wrS2", "D12", "C12"};

}  // namespace

TEST_CASE("element invariants across variants", "[group-core]") {
  std::vector<GroupElement> xs{
      perm({1, 2, 0, 4, 3}),
      GroupElement::matrix_fp(2, 5, {1, 2, 3, 4}),
      GroupElement::matrix_z(2, {2, 1, 1, 1}),
      GroupElement::lamplighter({-3, 0, 5}, 2),
      catalog("S4tower(2)").elements[3]};
  std::vector<GroupElement> ys{
      perm({4, 0, 1, 2, 3}),
      GroupElement::matrix_fp(2, 5, {0, 1, 4, 0}),
      GroupElement::matrix_z(2, {1, 3, 0, 1}),
      GroupElement::lamplighter({1}, -1),
      catalog("S4tower(2)").elements[1]};
  for (std::size_t i = 0; i < xs.size(); ++i) {
    auto const &g = xs[i], &h = ys[i];
    CHECK((g * h).inverse() == h.inverse() * g.inverse());
    CHECK((g * g.inverse()).is_identity());
    CHECK(GroupElement::decode(g.encode()) == g);
    CHECK(g.encode() != h.encode());
    CHECK((g * h).variant() == g.variant());
  }
}

TEST_CASE("element validation", "[group-core]") {
  using Catch::Matchers::Predicate;
  auto kind_is = [](ErrorKind k) {
    return Predicate<GroupError>([k](GroupError const& e) { return e.kind() == k; });
  };
  CHECK_THROWS_MATCHES(perm({0, 0, 1}), GroupError, kind_is(ErrorKind::InvalidElement));
  CHECK_THROWS_MATCHES(GroupElement::matrix_fp(2, 4, {1, 0, 0, 1}), GroupError,
                       kind_is(ErrorKind::InvalidElement));
  CHECK_THROWS_MATCHES(GroupElement::matrix_fp(2, 3, {1, 1, 1, 1}), GroupError,
                       kind_is(ErrorKind::InvalidElement));
  CHECK_THROWS_MATCHES(GroupElement::matrix_z(2, {2, 0, 0, 1}), GroupError,
                       kind_is(ErrorKind::InvalidElement));
  CHECK_THROWS_MATCHES(GenSet({perm({1, 0}), perm({1, 2, 0})}), GroupError,
                       kind_is(ErrorKind::MixedVariants));
  CHECK_THROWS_MATCHES(GenSet({perm({0, 1})}), GroupError, kind_is(ErrorKind::InvalidElement));
  CHECK_NOTHROW(GenSet({perm({0, 1})}, true, true));
  CHECK_THROWS_MATCHES(enumerate_group(catalog("S5"), 100), GroupError,
                       kind_is(ErrorKind::CapExceeded));
}

TEST_CASE("enumerate_group on small examples", "[group-core]") {
  SECTION("Sym(3) with a transposition and a 3-cycle") {
    std::vector<GroupElement> X{perm({1, 0, 2}), perm({1, 2, 0})};
    auto T = enumerate_group(GenSet(X));
    CHECK(T.order() == 6);
    // (0 1) is an involution, so X u X^-1 has 3 distinct letters.
    auto expect = oracle::ball_sizes_by_words(X, 3);
    CHECK(expect == std::vector<std::uint64_t>{1, 4, 6, 6});
    auto g = T.growth();
    CHECK(g == std::vector<std::uint64_t>{1, 4, 6});
  }
  SECTION("cyclic of order 2") {
    auto T = enumerate_group(GenSet({perm({1, 0})}));
    CHECK(T.order() == 2);
    CHECK(T.word_lengths() == std::vector<std::uint32_t>{0, 1});
  }
  SECTION("Q8 over F_3") {
    auto T = enumerate_group(catalog("Q8"));
    CHECK(T.order() == 8);
    auto i = first_of_order(T, 4);
    auto z = T.mul(i, i);
    CHECK(T.element_order(z) == 2);
    std::size_t involutions = 0;
    for (Index x = 0; x < T.order(); ++x) {
      involutions += T.element_order(x) == 2;
    }
    CHECK(involutions == 1);
  }
}

TEST_CASE("table axioms and word lengths", "[group-core]") {
  std::mt19937 rng(7);
  for (auto const& name : kSmallCorpus) {
    CAPTURE(name);
    auto X = catalog(name);
    auto T = enumerate_group(X);
    // order agrees with the naive closure
    CHECK(oracle::closure(X.elements, X.identity()).size() == T.order());
    std::uniform_int_distribution<Index> pick(0, static_cast<Index>(T.order() - 1));
    for (int k = 0; k < 200; ++k) {
      auto a = pick(rng), b = pick(rng), c = pick(rng);
      CHECK(T.mul(T.mul(a, b), c) == T.mul(a, T.mul(b, c)));
      auto ga = T.element(a), gb = T.element(b);
      CHECK(T.mul(a, b) == T.index_of(ga * gb));
    }
    for (Index a = 0; a < T.order(); ++a) {
      CHECK(T.mul(a, T.inv(a)) == 0);
      CHECK(T.mul(0, a) == a);
      if (a != 0) {
        bool down = false;
        for (std::size_t s = 0; s < T.num_symbols(); ++s) {
          auto b = T.right_mul_symbol(a, s);
          CHECK(T.word_length(b) <= T.word_length(a) + 1);
          down = down || T.word_length(b) + 1 == T.word_length(a);
        }
        CHECK(down);
      }
    }
    auto g = T.growth();
    CHECK(g.front() == 1);
    CHECK(std::is_sorted(g.begin(), g.end()));
    CHECK(g.back() == T.order());
    // word lengths are BFS distances: compare with the word-listing oracle
    auto radius = std::min<std::size_t>(T.diameter(), 4);
    auto words  = oracle::ball_sizes_by_words(X.elements, radius);
    for (std::size_t r = 0; r <= radius; ++r) {
      CHECK(words[r] == g[r]);
    }
  }
}

TEST_CASE("word-walk products agree with dense products", "[group-core]") {
  // GL2(5) has order 480 and gets a dense table; the large group takes the
  // other path. Check the non-dense path on a group above the threshold.
  auto T = enumerate_group(catalog("S3wrS3"));
  REQUIRE(T.order() == 1296);
  auto U = enumerate_group(catalog("S2wrS4"));
  REQUIRE(U.order() == 384);
  auto V = enumerate_group(catalog("AGL2(3)xC2xC7"));
  REQUIRE(V.order() == 432 * 14);
  CHECK_FALSE(V.dense());
  std::mt19937 rng(3);
  std::uniform_int_distribution<Index> pick(0, static_cast<Index>(V.order() - 1));
  for (int k = 0; k < 500; ++k) {
    auto a = pick(rng), b = pick(rng);
    CHECK(V.mul(a, b) == V.index_of(V.element(a) * V.element(b)));
  }
}

TEST_CASE("subgroup_generated and normal_closure", "[group-core]") {
  auto S3 = enumerate_group(catalog("S3"));
  CHECK(subgroup_generated(S3, {}).order() == 1);
  auto c3 = first_of_order(S3, 3);
  CHECK(subgroup_generated(S3, {c3}).order() == 3);
  auto t = first_of_order(S3, 2);
  CHECK(normal_closure(S3, std::vector<Index>{t}).order() == 6);
  CHECK(normal_closure(S3, std::vector<Index>{0}).order() == 1);

  auto S4 = enumerate_group(catalog("S4"));
  auto v  = S4.index_of(perm({1, 0, 3, 2}));
  auto V4 = normal_closure(S4, std::vector<Index>{v});
  CHECK(V4.order() == 4);
  CHECK(V4.members() == oracle::table_closure(S4, {v, S4.index_of(perm({2, 3, 0, 1}))}));

  auto SL = enumerate_group(catalog("SL2(3)"));
  std::vector<Index> fours;
  for (Index x = 0; x < SL.order(); ++x) {
    if (SL.element_order(x) == 4) {
      fours.push_back(x);
    }
  }
  // two order-4 elements that are not mutual powers generate Q8
  Index a = fours[0], b = 0;
  for (auto y : fours) {
    if (y != a && y != SL.inv(a)) {
      b = y;
      break;
    }
  }
  auto Q = subgroup_generated(SL, {a, b});
  CHECK(Q.order() == 8);
  CHECK(Q.members() == oracle::table_closure(SL, {a, b}));

  // idempotence, monotonicity, closure containment
  for (auto const& name : kSmallCorpus) {
    CAPTURE(name);
    auto T = enumerate_group(catalog(name));
    std::vector<Index> seeds{static_cast<Index>(T.order() / 3),
                             static_cast<Index>(T.order() - 1)};
    auto H  = subgroup_generated(T, seeds);
    auto H2 = subgroup_generated(T, H.members());
    CHECK(H == H2);
    CHECK(subgroup_generated(T, std::vector<Index>{seeds[0]}).subset_of(H));
    auto N = normal_closure(T, seeds);
    CHECK(H.subset_of(N));
    CHECK((N == H) == is_normal(T, H));
    CHECK(T.order() % H.order() == 0);
    CHECK(subgroup_generated(T, H.generators()) == H);
  }
}

TEST_CASE("commutator subgroups and series against naive recomputation",
          "[group-core]") {
  auto S3 = enumerate_group(catalog("S3"));
  auto G  = whole_group(S3);
  CHECK(commutator_subgroup(S3, G, G).order() == 3);

  auto SL = enumerate_group(catalog("SL2(3)"));
  auto D  = derived_series(SL);
  REQUIRE(D.size() == 4);
  CHECK(D[1].order() == 8);
  CHECK(D[2].order() == 2);
  CHECK(D[3].order() == 1);
  CHECK(derived_length(SL) == 3);

  auto Q  = enumerate_group(catalog("Q8"));
  auto LQ = lower_central_series(Q);
  REQUIRE(LQ.size() == 3);
  CHECK(LQ[1].order() == 2);
  CHECK(nilpotency_class(Q) == 2);

  auto C6 = enumerate_group(catalog("C6"));
  auto DC = derived_series(C6);
  CHECK(DC.size() == 2);
  CHECK(derived_length(C6) == 1);
  auto ab = whole_group(C6);
  CHECK(commutator_subgroup(C6, ab, ab).is_trivial());

  CHECK_FALSE(nilpotency_class(S3).has_value());
  CHECK_FALSE(is_nilpotent(S3));
  CHECK(is_soluble(S3));
  CHECK_FALSE(is_soluble(enumerate_group(catalog("A5"))));

  for (auto const& name : kSmallCorpus) {
    auto T = enumerate_group(catalog(name));
    if (T.order() > 24) {
      continue;
    }
    CAPTURE(name);
    auto d  = derived_series(T);
    auto dn = oracle::derived_series(T);
    REQUIRE(d.size() == dn.size());
    for (std::size_t i = 0; i < d.size(); ++i) {
      CHECK(d[i].members() == dn[i]);
    }
    auto l  = lower_central_series(T);
    auto ln = oracle::lower_central_series(T);
    REQUIRE(l.size() == ln.size());
    for (std::size_t i = 0; i < l.size(); ++i) {
      CHECK(l[i].members() == ln[i]);
    }
  }
}

TEST_CASE("conjugacy classes and centralizers", "[group-core]") {
  auto S3  = enumerate_group(catalog("S3"));
  auto cls = conjugacy_classes(S3);
  std::multiset<std::size_t> sizes;
  for (auto const& c : cls) {
    sizes.insert(c.size());
  }
  CHECK(sizes == std::multiset<std::size_t>{1, 2, 3});

  auto C12 = enumerate_group(catalog("C12"));
  CHECK(conjugacy_classes(C12).size() == 12);
  CHECK(centralizer(C12, subgroup_generated(C12, {3})).order() == 12);

  auto Q  = enumerate_group(catalog("Q8"));
  auto i  = first_of_order(Q, 4);
  CHECK(centralizer(Q, subgroup_generated(Q, {i})).order() == 4);

  for (auto const& name : kSmallCorpus) {
    CAPTURE(name);
    auto T = enumerate_group(catalog(name));
    auto a = conjugacy_classes(T);
    auto b = oracle::classes(T);
    CHECK(a == b);
  }
}

TEST_CASE("quotients", "[group-core]") {
  auto S3 = enumerate_group(catalog("S3"));
  auto G  = whole_group(S3);
  CHECK(quotient(S3, G).table.order() == 1);
  auto C3 = derived_series(S3)[1];
  auto q  = quotient(S3, C3);
  CHECK(q.table.order() == 2);

  auto t = first_of_order(S3, 2);
  CHECK_THROWS_AS(quotient(S3, subgroup_generated(S3, {t})), GroupError);

  auto SL = enumerate_group(catalog("SL2(3)"));
  auto Z  = center(SL, whole_group(SL));
  REQUIRE(Z.order() == 2);
  auto Q  = quotient(SL, Z);
  auto& A = Q.table;
  CHECK(A.order() == 12);
  CHECK_FALSE(is_abelian(A, whole_group(A)));
  // Alt(4) has no subgroup of order 6: no pair generates one
  bool six = false;
  for (Index x = 0; x < A.order(); ++x) {
    for (Index y = x; y < A.order(); ++y) {
      six = six || subgroup_generated(A, {x, y}).order() == 6;
    }
  }
  CHECK_FALSE(six);
  // homomorphism property and Lagrange
  for (Index x = 0; x < SL.order(); ++x) {
    for (Index y = 0; y < SL.order(); ++y) {
      CHECK(Q.image(SL.mul(x, y)) == A.mul(Q.image(x), Q.image(y)));
    }
  }
  CHECK(A.order() * Z.order() == SL.order());
  // word lengths in the quotient are minima over lifts
  for (Index c = 0; c < A.order(); ++c) {
    std::uint32_t best = 1000;
    for (Index x = 0; x < SL.order(); ++x) {
      if (Q.image(x) == c) {
        best = std::min(best, SL.word_length(x));
      }
    }
    CHECK(A.word_length(c) == best);
  }
}

TEST_CASE("constructions", "[group-core]") {
  auto W = enumerate_group(catalog("C2wrC2"));
  CHECK(W.order() == 8);
  CHECK(nilpotency_class(W) == 2);
  CHECK(enumerate_group(catalog("S3wrS2")).order() == 72);
  auto M = catalog("GL1(3)wrS2");
  CHECK(M.elements.front().variant() == Variant::MatrixFp);
  CHECK(enumerate_group(M).order() == 8);
  CHECK(enumerate_group(catalog("AGL1(5)")).order() == 20);
  CHECK(enumerate_group(affine_semidirect(2, 3)).order() == 9);
  CHECK(enumerate_group(catalog("F3^2:Q8")).order() == 72);
  CHECK(enumerate_group(catalog("AGL2(3)")).order() == 432);
  CHECK(enumerate_group(catalog("GL2(3)")).order() == 48);
  CHECK(enumerate_group(catalog("SL2(3)")).order() == 24);
  CHECK(enumerate_group(catalog("GL3(2)")).order() == 168);
  CHECK(enumerate_group(catalog("F2^3:C7")).order() == 56);
  CHECK(enumerate_group(catalog("F2^3:(7:3)")).order() == 168);
  CHECK(enumerate_group(catalog("(7:3)")).order() == 21);
  CHECK(enumerate_group(catalog("(31:5)")).order() == 155);
  CHECK(enumerate_group(catalog("AGL1(8)")).order() == 56);
  CHECK(enumerate_group(catalog("Q8^2")).order() == 64);
  CHECK(enumerate_group(catalog("S4wrS2")).order() == 1152);
  CHECK(enumerate_group(catalog("S4tower(1)")).order() == 24);
  CHECK_THROWS_AS(wreath_product(catalog("S3"), GenSet({perm({1, 0, 2})})), GroupError);
  CHECK_THROWS_AS(catalog("NoSuchGroup"), GroupError);
}
