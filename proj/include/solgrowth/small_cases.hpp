#ifndef SOLGROWTH_SMALL_CASES_HPP_
#define SOLGROWTH_SMALL_CASES_HPP_

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "solgrowth/bounds.hpp"
#include "solgrowth/catalog.hpp"
#include "solgrowth/linear.hpp"
#include "solgrowth/mu.hpp"
#include "solgrowth/soluble.hpp"

namespace solgrowth {

  /// Ambient groups up to this order are searched exhaustively.
  inline constexpr std::size_t kExhaustiveAmbientCap = 10'000;

  // Context checks for the mu bounds --------------------------------------

  struct MuContext {
    BoundKind     kind = BoundKind::Transitive;
    std::uint32_t n    = 0;
    std::uint32_t p    = 0;  // irreducible only

    static MuContext transitive(std::uint32_t n) {
      return {BoundKind::Transitive, n, 0};
    }

    static MuContext irreducible(std::uint32_t n, std::uint32_t p) {
      return {BoundKind::Irreducible, n, p};
    }
  };

  struct MuBoundCheck {
    MuValue mu;
    Decimal bound;
    bool    holds = false;
  };

  /// Checks the group's structural context, then mu(G) <= the bound exactly.
  inline MuBoundCheck verify_mu_bound(GenSet const& X, MuContext ctx) {
    auto const& g0 = X.elements.front();
    if (ctx.kind == BoundKind::Transitive) {
      if (g0.variant() != Variant::Permutation
          || g0.as<Permutation>().images.size() != ctx.n
          || !permutation_structure(X).transitive) {
        fail(ErrorKind::ContextViolated, "group is not transitive of the stated degree");
      }
    } else {
      if (g0.variant() != Variant::MatrixFp || g0.as<MatrixFp>().n != ctx.n
          || g0.as<MatrixFp>().p != ctx.p || !is_irreducible(X)) {
        fail(ErrorKind::ContextViolated, "group is not irreducible in GL_n(p)");
      }
    }
    MuBoundCheck out;
    out.mu    = mu(enumerate_group(X));
    out.bound = mu_bound(ctx.n, ctx.kind);
    out.holds = mu_within_bound(out.mu, ctx.n, ctx.kind);
    return out;
  }

  // Small cases -------------------------------------------------------------

  enum class CheckMode { Exhaustive, Witness };

  inline std::string_view to_string(CheckMode m) {
    return m == CheckMode::Exhaustive ? "exhaustive" : "witness";
  }

  struct CaseResult {
    std::string              id;
    std::string              claim;
    CheckMode                mode = CheckMode::Witness;
    std::vector<std::string> sources;  // ambient groups or witnesses
    std::size_t              groups_checked = 0;
    std::optional<MuValue>   max_mu;
    std::optional<std::size_t> max_delta;
    bool                     pass = true;
    std::vector<std::string> failures;
  };

  struct CaseBound {
    std::optional<MuValue>     mu;
    std::optional<std::size_t> delta;
  };

  namespace detail {

    inline std::string bound_claim(std::string const& ctx, CaseBound const& b) {
      std::string s = ctx + ":";
      if (b.delta) {
        s += " delta <= " + std::to_string(*b.delta);
      }
      if (b.mu) {
        s += std::string(b.delta ? "," : "") + " mu <= " + b.mu->str();
      }
      return s;
    }

    inline void record(CaseResult& r, std::string const& what, MuValue m, std::size_t d,
                       CaseBound const& b) {
      ++r.groups_checked;
      if (!r.max_mu || *r.max_mu < m) {
        r.max_mu = m;
      }
      if (!r.max_delta || *r.max_delta < d) {
        r.max_delta = d;
      }
      if (b.mu && m > *b.mu) {
        r.pass = false;
        r.failures.push_back(what + ": mu = " + m.str());
      }
      if (b.delta && d > *b.delta) {
        r.pass = false;
        r.failures.push_back(what + ": delta = " + std::to_string(d));
      }
    }

    inline std::vector<GroupElement> subgroup_elements(FiniteGroupTable const& T,
                                                       Subgroup const&         H) {
      std::vector<GroupElement> out;
      for (auto i : H.generators()) {
        out.push_back(T.element(i));
      }
      return out;
    }

    // Every soluble irreducible subgroup of GL_n(p), up to conjugacy.
    inline void exhaust_linear(CaseResult& r, std::uint32_t n, std::uint32_t p,
                               CaseBound const& b, std::size_t cap = kExhaustiveAmbientCap) {
      auto const name = "GL" + std::to_string(n) + "(" + std::to_string(p) + ")";
      auto       T    = enumerate_group(general_linear(n, p));
      if (T.order() > cap) {
        fail(ErrorKind::CapExceeded, name + " is beyond the exhaustive cap");
      }
      r.sources.push_back(name);
      MuFast m(T);
      for (auto const& cls : soluble_subgroup_classes(T)) {
        auto const& H = cls.representative;
        if (H.is_trivial() || !is_irreducible(subgroup_elements(T, H), n, p)) {
          continue;
        }
        record(r, name + " subgroup of order " + std::to_string(H.order()), m.value(H),
               *derived_length(T, H), b);
      }
    }

    // Every soluble transitive subgroup of S_n, up to conjugacy.
    inline void exhaust_transitive(CaseResult& r, std::uint32_t n, CaseBound const& b) {
      auto const name = "S" + std::to_string(n);
      auto       T    = enumerate_group(symmetric_group(n));
      r.sources.push_back(name);
      MuFast m(T);
      for (auto const& cls : soluble_subgroup_classes(T)) {
        auto const& H = cls.representative;
        if (H.is_trivial() || !permutation_structure(subgroup_elements(T, H)).transitive) {
          continue;
        }
        record(r, name + " subgroup of order " + std::to_string(H.order()), m.value(H),
               *derived_length(T, H), b);
      }
    }

    inline void witness_linear(CaseResult& r, std::string const& name, std::uint32_t n,
                               std::uint32_t p, CaseBound const& b) {
      r.sources.push_back(name);
      auto X = catalog(name);
      auto const& g0 = X.elements.front();
      if (g0.variant() != Variant::MatrixFp || g0.as<MatrixFp>().n != n
          || g0.as<MatrixFp>().p != p || !is_irreducible(X)) {
        r.pass = false;
        r.failures.push_back(name + ": not irreducible in GL_n(p)");
        return;
      }
      auto T = enumerate_group(X);
      if (!is_soluble(T)) {
        r.pass = false;
        r.failures.push_back(name + ": not soluble");
        return;
      }
      record(r, name, mu(T), *derived_length(T), b);
    }

  }  // namespace detail

  struct SmallCaseOptions {
    bool          include_large_witnesses = true;  // witnesses of order > 2e4
    bool          exhaust_gl4_2 = true;  // GL_4(2), order 20160, past the usual cap
    std::uint32_t max_transitive_degree   = 6;
  };

  /// The nine linear small cases plus the transitive degree checks. Cases
  /// whose ambient GL_n(p) fits under the exhaustive cap enumerate every
  /// soluble irreducible subgroup; the rest check named witnesses only.
  inline std::vector<CaseResult> verify_small_cases(SmallCaseOptions const& opt = {}) {
    using detail::exhaust_linear;
    using detail::witness_linear;
    MuValue const           t{0, 1};
    std::vector<CaseResult> out;

    auto start = [&](std::string id, std::string ctx, CheckMode mode, CaseBound b) {
      CaseResult r;
      r.id    = std::move(id);
      r.claim = detail::bound_claim(ctx, b);
      r.mode  = mode;
      return r;
    };

    {
      CaseBound b{MuValue{2, 0} + t, std::nullopt};
      auto r = start("1", "soluble irreducible G <= GL_2(p)", CheckMode::Exhaustive, b);
      for (auto p : {2u, 3u, 5u, 7u}) {
        exhaust_linear(r, 2, p, b);
      }
      out.push_back(std::move(r));
    }
    {
      CaseBound b{MuValue{1, 2}, std::nullopt};
      auto r = start("2", "soluble irreducible G <= GL_3(p)", CheckMode::Exhaustive, b);
      exhaust_linear(r, 3, 2, b);
      out.push_back(std::move(r));
      auto w = start("2", "soluble irreducible G <= GL_3(p)", CheckMode::Witness, b);
      witness_linear(w, "GammaL1(3^3)", 3, 3, b);
      witness_linear(w, "GL1(3)wrS3", 3, 3, b);
      witness_linear(w, "GammaL1(5^3)", 3, 5, b);
      out.push_back(std::move(w));
    }
    {
      CaseBound b{MuValue{3, 1}, std::nullopt};
      if (opt.exhaust_gl4_2) {
        auto e = start("3", "soluble irreducible G <= GL_4(p)", CheckMode::Exhaustive, b);
        exhaust_linear(e, 4, 2, b, 20160);
        out.push_back(std::move(e));
      }
      auto r = start("3", "soluble irreducible G <= GL_4(p)", CheckMode::Witness, b);
      witness_linear(r, "GL2(2)wrS2", 4, 2, b);
      witness_linear(r, "GammaL1(2^4)", 4, 2, b);
      witness_linear(r, "GL2(3)wrS2", 4, 3, b);
      witness_linear(r, "SL2(3)wrS2", 4, 3, b);
      witness_linear(r, "GammaL1(3^4)", 4, 3, b);
      witness_linear(r, "GL1(3)wrS4", 4, 3, b);
      witness_linear(r, "GL1(5)wrS4", 4, 5, b);
      out.push_back(std::move(r));
    }
    {
      CaseBound b{std::nullopt, 2};
      auto r = start("4", "p = 2, n prime", CheckMode::Exhaustive, b);
      exhaust_linear(r, 2, 2, b);
      exhaust_linear(r, 3, 2, b);
      out.push_back(std::move(r));
      auto w = start("4", "p = 2, n prime", CheckMode::Witness, b);
      witness_linear(w, "GammaL1(2^5)", 5, 2, b);
      witness_linear(w, "GammaL1(2^7)", 7, 2, b);
      out.push_back(std::move(w));
    }
    {
      CaseBound b{std::nullopt, 3};
      auto r = start("5", "p = 2, n = 4", CheckMode::Witness, b);
      witness_linear(r, "GL2(2)wrS2", 4, 2, b);
      witness_linear(r, "GL2(2)wrC2", 4, 2, b);
      witness_linear(r, "GammaL1(2^4)", 4, 2, b);
      out.push_back(std::move(r));
    }
    {
      CaseBound b{MuValue{2, 2}, 6};
      auto r = start("6", "p = 2, n = 6", CheckMode::Witness, b);
      witness_linear(r, "GL2(2)wrS3", 6, 2, b);
      witness_linear(r, "GL2(2)wrC3", 6, 2, b);
      witness_linear(r, "GammaL1(2^3)wrS2", 6, 2, b);
      witness_linear(r, "GammaL1(2^6)", 6, 2, b);
      out.push_back(std::move(r));
    }
    {
      CaseBound b{std::nullopt, 5};
      auto r = start("7", "p = 2, n = 8", CheckMode::Witness, b);
      witness_linear(r, "GammaL1(2^8)", 8, 2, b);
      witness_linear(r, "GammaL1(2^4)wrS2", 8, 2, b);
      if (opt.include_large_witnesses) {
        witness_linear(r, "GL2(2)wrS4", 8, 2, b);
      }
      out.push_back(std::move(r));
    }
    {
      CaseBound b{std::nullopt, 5};
      auto r = start("8", "p = 2, n = 9", CheckMode::Witness, b);
      witness_linear(r, "GammaL1(2^9)", 9, 2, b);
      if (opt.include_large_witnesses) {
        witness_linear(r, "GammaL1(2^3)wrC3", 9, 2, b);
      }
      out.push_back(std::move(r));
    }
    {
      CaseBound b{std::nullopt, 4};
      auto r = start("9", "p = 2, n = 10", CheckMode::Witness, b);
      witness_linear(r, "GammaL1(2^10)", 10, 2, b);
      if (opt.include_large_witnesses) {
        witness_linear(r, "GammaL1(2^5)wrC2", 10, 2, b);
      }
      out.push_back(std::move(r));
    }
    // transitive shadows: mu <= 3 log_4 n on every soluble transitive
    // subgroup of S_n, and delta <= 2 when n is prime
    for (std::uint32_t n = 2; n <= opt.max_transitive_degree; ++n) {
      bool const prime = detail::is_prime(n);
      CaseBound  b{std::nullopt, prime ? std::optional<std::size_t>(2) : std::nullopt};
      CaseResult r;
      r.id    = "T" + std::to_string(n);
      r.mode  = CheckMode::Exhaustive;
      r.claim = "soluble transitive G <= S_" + std::to_string(n) + ": mu <= 3 log4(n)"
                + (prime ? ", delta <= 2" : "");
      detail::exhaust_transitive(r, n, b);
      if (r.max_mu && !mu_within_bound(*r.max_mu, n, BoundKind::Transitive)) {
        r.pass = false;
        r.failures.push_back("max mu " + r.max_mu->str() + " exceeds 3 log4(n)");
      }
      out.push_back(std::move(r));
    }
    return out;
  }

}  // namespace solgrowth

#endif  // SOLGROWTH_SMALL_CASES_HPP_
