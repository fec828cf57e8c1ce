#ifndef SOLGROWTH_MU_HPP_
#define SOLGROWTH_MU_HPP_

#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>
#include <string_view>
#include <string>
#include <unordered_map>
#include <vector>

#include "solgrowth/constructions.hpp"
#include "solgrowth/error.hpp"
#include "solgrowth/mu_value.hpp"
#include "solgrowth/soluble.hpp"
#include "solgrowth/subgroup.hpp"
#include "solgrowth/table.hpp"

namespace solgrowth {

  enum class FactorKind { Abelian, ClassTwo };

  inline std::string_view to_string(FactorKind k) {
    return k == FactorKind::Abelian ? "abelian" : "class2";
  }

  /// H_0 = H >= H_1 >= ... >= H_k = 1 with abelian or class-2 factors.
  struct ModifiedSeries {
    std::vector<Subgroup>   chain;
    std::vector<FactorKind> kinds;
    MuValue                 cost;
  };

  /// Kind of H/K for K normal in H: abelian, class two, or neither.
  inline std::optional<FactorKind> factor_kind(FiniteGroupTable const& T,
                                               Subgroup const&         H,
                                               Subgroup const&         K) {
    auto D = commutator_subgroup(T, H, H);
    if (D.subset_of(K)) {
      return FactorKind::Abelian;
    }
    if (commutator_subgroup(T, D, H).subset_of(K)) {
      return FactorKind::ClassTwo;
    }
    return std::nullopt;
  }

  /// Re-checks a series: normality at every step, factor kinds and cost.
  inline bool validate_series(FiniteGroupTable const& T, ModifiedSeries const& S) {
    if (S.chain.empty() || !S.chain.back().is_trivial()
        || S.kinds.size() + 1 != S.chain.size()) {
      return false;
    }
    MuValue cost;
    for (std::size_t i = 1; i < S.chain.size(); ++i) {
      auto const& H = S.chain[i - 1];
      auto const& K = S.chain[i];
      if (!K.subset_of(H) || K == H || !is_normal(T, K, H)) {
        return false;
      }
      auto kind = factor_kind(T, H, K);
      if (!kind || *kind != S.kinds[i - 1]) {
        return false;
      }
      cost = cost + (*kind == FactorKind::Abelian ? kAbelianStep : kClassTwoStep);
    }
    return cost == S.cost;
  }

  namespace detail {

    struct MembersHash {
      std::size_t operator()(std::vector<Index> const& v) const {
        std::size_t h = v.size();
        for (auto x : v) {
          h ^= std::hash<Index>{}(x) + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
        }
        return h;
      }
    };

    struct MuNode {
      MuValue    value;
      Subgroup   next;
      FactorKind kind = FactorKind::Abelian;
    };

    using MuMemo = std::unordered_map<std::vector<Index>, MuNode, MembersHash>;

    inline ModifiedSeries unwind(MuMemo const& memo, Subgroup const& H) {
      ModifiedSeries S;
      S.chain.push_back(H);
      auto const& top = memo.at(H.members());
      S.cost          = top.value;
      while (!S.chain.back().is_trivial()) {
        auto const& node = memo.at(S.chain.back().members());
        S.kinds.push_back(node.kind);
        S.chain.push_back(node.next);
      }
      return S;
    }

  }  // namespace detail

  /// mu via the two canonical first steps: min(1 + mu(H'), log4(10) +
  /// mu(gamma_3(H))). Ties go to the derived step.
  class MuFast {
   public:
    explicit MuFast(FiniteGroupTable const& T) : _T(T) {}

    MuValue value(Subgroup const& H) {
      return solve(H).value;
    }

    ModifiedSeries series(Subgroup const& H) {
      solve(H);
      return detail::unwind(_memo, H);
    }

   private:
    detail::MuNode const& solve(Subgroup const& H) {
      auto it = _memo.find(H.members());
      if (it != _memo.end()) {
        return it->second;
      }
      detail::MuNode node;
      if (H.is_trivial()) {
        node.next = H;
        return _memo.emplace(H.members(), node).first->second;
      }
      auto D = commutator_subgroup(_T, H, H);
      if (D == H) {
        fail(ErrorKind::NotSoluble, "group is not soluble");
      }
      auto const derived = solve(D).value + kAbelianStep;
      node               = {derived, D, FactorKind::Abelian};
      auto C             = commutator_subgroup(_T, D, H);
      if (C != D) {
        auto const nil = solve(C).value + kClassTwoStep;
        if (nil < derived) {
          node = {nil, C, FactorKind::ClassTwo};
        }
      }
      return _memo.emplace(H.members(), node).first->second;
    }

    FiniteGroupTable const& _T;
    detail::MuMemo          _memo;
  };

  /// mu by exhaustive search: every proper K normal in H with H/K of class
  /// at most two, i.e. gamma_3(H) <= K.
  class MuBruteForce {
   public:
    explicit MuBruteForce(FiniteGroupTable const& T, std::size_t cap = 20000)
        : _T(T), _cap(cap) {}

    MuValue value(Subgroup const& H) {
      return solve(H).value;
    }

    ModifiedSeries series(Subgroup const& H) {
      solve(H);
      return detail::unwind(_memo, H);
    }

   private:
    detail::MuNode const& solve(Subgroup const& H) {
      auto it = _memo.find(H.members());
      if (it != _memo.end()) {
        return it->second;
      }
      if (H.order() > _cap) {
        fail(ErrorKind::CapExceeded, "brute-force mu is gated by subgroup order");
      }
      detail::MuNode node;
      if (H.is_trivial()) {
        node.next = H;
        return _memo.emplace(H.members(), node).first->second;
      }
      auto D = commutator_subgroup(_T, H, H);
      if (D == H) {
        fail(ErrorKind::NotSoluble, "group is not soluble");
      }
      auto C = commutator_subgroup(_T, D, H);
      auto L = normal_subgroups(_T, H, C);
      bool have = false;
      for (auto const& K : L.members) {
        if (K == H) {
          continue;
        }
        auto kind = D.subset_of(K) ? FactorKind::Abelian : FactorKind::ClassTwo;
        auto cost = solve(K).value
                    + (kind == FactorKind::Abelian ? kAbelianStep : kClassTwoStep);
        // strict improvement keeps the first (smallest) K among ties
        if (!have || cost < node.value) {
          node = {cost, K, kind};
          have = true;
        }
      }
      return _memo.emplace(H.members(), node).first->second;
    }

    FiniteGroupTable const& _T;
    std::size_t             _cap;
    detail::MuMemo          _memo;
  };

  inline std::pair<MuValue, ModifiedSeries> mu_fast(FiniteGroupTable const& T) {
    MuFast m(T);
    auto   S = m.series(whole_group(T));
    return {S.cost, S};
  }

  inline std::pair<MuValue, ModifiedSeries> mu_bruteforce(FiniteGroupTable const& T,
                                                          std::size_t cap = 20000) {
    if (T.order() > cap) {
      fail(ErrorKind::CapExceeded, "brute-force mu is gated by group order");
    }
    MuBruteForce m(T, cap);
    auto         S = m.series(whole_group(T));
    return {S.cost, S};
  }

  inline MuValue mu(FiniteGroupTable const& T) {
    return mu_fast(T).first;
  }

  // Property checks ----------------------------------------------------------

  struct MuPropertyReport {
    std::size_t              subgroup_checks  = 0;
    std::size_t              quotient_checks  = 0;
    std::size_t              extension_checks = 0;
    std::size_t              power_checks     = 0;
    std::vector<std::string> violations;

    bool ok() const {
      return violations.empty();
    }
  };

  /// mu(H) <= mu(G) for every soluble subgroup class, mu(G/N) <= mu(G) and
  /// mu(G) <= mu(N) + mu(G/N) for every normal N, and mu(G^2) = mu(G) when
  /// `with_power` is set.
  inline MuPropertyReport mu_properties_check(FiniteGroupTable const& T,
                                              std::string const&      label,
                                              bool                    with_power = false) {
    MuPropertyReport rep;
    MuFast           m(T);
    auto const       G   = whole_group(T);
    auto const       muG = m.value(G);
    for (auto const& cls : soluble_subgroup_classes(T, G)) {
      ++rep.subgroup_checks;
      auto v = m.value(cls.representative);
      if (v > muG) {
        rep.violations.push_back(label + ": mu(H) > mu(G) for |H| = "
                                 + std::to_string(cls.representative.order()));
      }
    }
    auto L = normal_subgroups(T);
    for (auto const& N : L.members) {
      auto Q   = quotient(T, N);
      auto muQ = mu(Q.table);
      auto muN = m.value(N);
      ++rep.quotient_checks;
      if (muQ > muG) {
        rep.violations.push_back(label + ": mu(G/N) > mu(G) for |N| = "
                                 + std::to_string(N.order()));
      }
      ++rep.extension_checks;
      if (muG > muN + muQ) {
        rep.violations.push_back(label + ": mu(G) > mu(N) + mu(G/N) for |N| = "
                                 + std::to_string(N.order()));
      }
    }
    if (with_power) {
      auto X2 = direct_power(T.generating_set(), 2);
      auto P  = enumerate_group(X2);
      ++rep.power_checks;
      if (mu(P) != muG) {
        rep.violations.push_back(label + ": mu(G^2) != mu(G)");
      }
    }
    return rep;
  }

  struct ProductCounterexample {
    MuValue mu1, mu2, mu_product;
    bool    strict = false;
  };

  /// mu(G1 x G2) against max(mu(G1), mu(G2)).
  inline ProductCounterexample product_counterexample_check(GenSet const& G1,
                                                            GenSet const& G2) {
    ProductCounterexample out;
    out.mu1        = mu(enumerate_group(G1));
    out.mu2        = mu(enumerate_group(G2));
    out.mu_product = mu(enumerate_group(direct_product(G1, G2)));
    out.strict     = out.mu_product > std::max(out.mu1, out.mu2);
    return out;
  }

  struct WreathCheck {
    MuValue mu_a, mu_b, mu_w;
    bool    holds = false;
  };

  /// mu(A wr B) <= mu(A) + mu(B) for permutation groups A and transitive B.
  inline WreathCheck mu_of_wreath_check(GenSet const& A,
                                        GenSet const& B,
                                        std::size_t   cap = kDefaultCap) {
    WreathCheck out;
    out.mu_a  = mu(enumerate_group(A, cap));
    out.mu_b  = mu(enumerate_group(B, cap));
    out.mu_w  = mu(enumerate_group(wreath_product(A, B), cap));
    out.holds = out.mu_w <= out.mu_a + out.mu_b;
    return out;
  }

}  // namespace solgrowth

#endif  // SOLGROWTH_MU_HPP_
