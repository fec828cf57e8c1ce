#ifndef SOLGROWTH_MILNOR_HPP_
#define SOLGROWTH_MILNOR_HPP_

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <cstdint>
#include <vector>

#include <boost/dynamic_bitset.hpp>

#include "solgrowth/error.hpp"
#include "solgrowth/growth.hpp"
#include "solgrowth/subgroup.hpp"
#include "solgrowth/table.hpp"

namespace solgrowth {

  /// Y_i = {y^g : y in Y, l(g) <= i}, H_i = <Y_i>, up to the first k with
  /// H_k = H_{k+1}; then H_k is the normal closure of Y and Z = Y_k.
  struct MilnorChain {
    std::vector<Index>              Y;
    std::vector<std::vector<Index>> levels;     // Y_0 .. Y_k, sorted
    std::vector<Subgroup>           H;          // H_0 .. H_k
    std::size_t                     k = 0;
    std::vector<Index>              Z;          // = Y_k
    std::vector<Index>              witnesses;  // y_1 .. y_k, y_i in Y_i \ H_{i-1}
    std::uint32_t                   length_Y = 0;
    std::uint32_t                   length_Z = 0;
    bool                            closure_verified = false;
  };

  inline std::uint32_t max_length(FiniteGroupTable const& T, std::vector<Index> const& S) {
    std::uint32_t L = 0;
    for (auto s : S) {
      L = std::max(L, T.word_length(s));
    }
    return L;
  }

  /// Sorts by (word length, index): the canonical witness order.
  inline void sort_by_length(FiniteGroupTable const& T, std::vector<Index>& S) {
    std::sort(S.begin(), S.end(), [&](Index a, Index b) {
      return T.word_length(a) != T.word_length(b) ? T.word_length(a) < T.word_length(b)
                                                  : a < b;
    });
  }

  inline MilnorChain milnor_chain(FiniteGroupTable const& T, std::vector<Index> Y) {
    std::sort(Y.begin(), Y.end());
    Y.erase(std::unique(Y.begin(), Y.end()), Y.end());
    MilnorChain C;
    C.Y        = Y;
    C.length_Y = max_length(T, Y);

    // elements of each exact length, in index order
    std::vector<std::vector<Index>> sphere(T.diameter() + 1);
    for (Index g = 0; g < T.order(); ++g) {
      sphere[T.word_length(g)].push_back(g);
    }

    boost::dynamic_bitset<> in_level(T.order());
    for (auto y : Y) {
      in_level.set(y);
    }
    C.levels.push_back(Y);
    Subgroup H = subgroup_generated(T, Y);
    C.H.push_back(H);
    for (std::size_t i = 1;; ++i) {
      std::vector<Index> fresh;
      if (i < sphere.size()) {
        for (auto g : sphere[i]) {
          for (auto y : Y) {
            auto c = T.conj(y, g);
            if (!in_level.test(c)) {
              in_level.set(c);
              fresh.push_back(c);
            }
          }
        }
      }
      auto level = C.levels.back();
      level.insert(level.end(), fresh.begin(), fresh.end());
      std::sort(level.begin(), level.end());
      // witness: shortest element of Y_i outside H_{i-1}, ties by index
      std::vector<Index> outside;
      for (auto c : fresh) {
        if (!H.contains(c)) {
          outside.push_back(c);
        }
      }
      if (outside.empty()) {
        break;  // H_i = H_{i-1}
      }
      sort_by_length(T, outside);
      C.witnesses.push_back(outside.front());
      for (auto c : outside) {
        if (!H.contains(c)) {
          detail::extend_closure(T, H, c);
        }
      }
      H.sort_members();
      C.levels.push_back(std::move(level));
      C.H.push_back(H);
    }
    C.k                = C.H.size() - 1;
    C.Z                = C.levels.back();
    C.length_Z         = max_length(T, C.Z);
    C.closure_verified = C.H.back() == normal_closure(T, Y);
    return C;
  }

  /// Shortest-first greedy subset of S generating <S>.
  inline std::vector<Index> reduced_generators(FiniteGroupTable const& T, std::vector<Index> S) {
    sort_by_length(T, S);
    Subgroup           H = Subgroup::trivial(T);
    std::vector<Index> out;
    for (auto s : S) {
      if (!H.contains(s)) {
        detail::extend_closure(T, H, s);
        out.push_back(s);
      }
    }
    return out;
  }

  /// The 2^k products y_1^e_1 ... y_k^e_k as table indices, indexed by the
  /// bit mask (e_i = bit i-1).
  inline std::vector<Index> subset_products(FiniteGroupTable const& T,
                                            std::vector<Index> const& ys) {
    if (ys.size() > 24) {
      fail(ErrorKind::CapExceeded, "too many factors for exhaustive products");
    }
    std::vector<Index> prod(std::size_t{1} << ys.size(), 0);
    for (std::size_t i = 0; i < ys.size(); ++i) {
      auto const half = std::size_t{1} << i;
      for (std::size_t m = 0; m < half; ++m) {
        prod[m | half] = T.mul(prod[m], ys[i]);
      }
    }
    return prod;
  }

  inline bool all_distinct(std::vector<Index> const& xs, std::size_t universe) {
    boost::dynamic_bitset<> seen(universe);
    for (auto x : xs) {
      if (seen.test(x)) {
        return false;
      }
      seen.set(x);
    }
    return true;
  }

  /// gamma at radius r for a finite table (constant past the diameter).
  inline std::uint64_t ball_size(FiniteGroupTable const& T, std::uint64_t r) {
    auto const g = T.growth();
    return g[std::min<std::uint64_t>(r, g.size() - 1)];
  }

  struct DistinctProducts {
    std::size_t   k = 0;
    bool          distinct = false;
    std::uint64_t radius = 0;   // kL + 2k^2
    std::uint64_t bound  = 0;   // 2^k
    std::uint64_t gamma  = 0;   // gamma_X(radius), clipped to |G|
    std::uint32_t max_product_length = 0;
    bool          holds = false;  // gamma >= bound
  };

  /// Checks the chain witnesses: every y_i lies outside H_{i-1}, their 2^k
  /// subset products are distinct and gamma_X(kL + 2k^2) >= 2^k.
  inline DistinctProducts distinct_products_check(FiniteGroupTable const& T,
                                                  MilnorChain const&      C) {
    for (std::size_t i = 0; i < C.witnesses.size(); ++i) {
      if (C.H[i].contains(C.witnesses[i])) {
        fail(ErrorKind::WitnessDegenerate, "chain witness lies in the previous subgroup");
      }
    }
    DistinctProducts out;
    out.k        = C.k;
    auto prods   = subset_products(T, C.witnesses);
    out.distinct = all_distinct(prods, T.order());
    out.radius   = static_cast<std::uint64_t>(C.k) * C.length_Y + 2 * C.k * C.k;
    out.bound    = std::uint64_t{1} << C.k;
    out.gamma    = ball_size(T, out.radius);
    out.max_product_length = max_length(T, prods);
    out.holds    = out.distinct && out.gamma >= out.bound
                && out.max_product_length <= out.radius;
    return out;
  }

  struct QuantitativeBound {
    double L = 0, k = 0, z = 0;
    double k_bound = 0;   // (5C)^(1/(1-2 theta)) max(L,1)^(theta/(1-theta))
    double z_bound = 0;   // L + C1 L^(theta/(1-theta)), C1 = 2 (5C)^(1/(1-2 theta))
    double C1 = 0;
    bool   k_holds = false;
    bool   z_holds = false;
  };

  /// Needs theta < 1/2, C >= 1 and gamma(n) <= exp(C n^theta) on the whole
  /// table; otherwise the bound does not apply (HypothesisViolated).
  inline QuantitativeBound quantitative_bound_check(FiniteGroupTable const& T,
                                                    MilnorChain const&      chain,
                                                    double theta, double C) {
    if (!(theta > 0 && theta < 0.5) || C < 1) {
      fail(ErrorKind::HypothesisViolated, "need 0 < theta < 1/2 and C >= 1");
    }
    GrowthTable g;
    g.gamma = T.growth();
    if (!gap_hypothesis_check(g, theta, C)) {
      fail(ErrorKind::HypothesisViolated, "growth hypothesis fails on this table");
    }
    QuantitativeBound q;
    q.L       = chain.length_Y;
    q.k       = static_cast<double>(chain.k);
    q.z       = chain.length_Z;
    auto const base = std::pow(5 * C, 1 / (1 - 2 * theta));
    auto const e    = theta / (1 - theta);
    q.C1      = 2 * base;
    q.k_bound = base * std::pow(std::max(q.L, 1.0), e);
    q.z_bound = q.L + q.C1 * std::pow(q.L, e);
    q.k_holds = q.k <= q.k_bound;
    q.z_holds = q.z <= q.z_bound;
    return q;
  }

  struct DerivedStep {
    std::size_t        k = 0;
    std::vector<Index> X;          // generates G^(k)
    std::size_t        order = 0;  // |G^(k)|
    std::uint32_t      length = 0; // l_X(X_k)
    double             ratio = 0;  // length / 4^k
    std::size_t        chain_k = 0;
  };

  struct DerivedGenerators {
    std::vector<DerivedStep> steps;
    double                   recurrence_C = 0;  // least C with L_k <= 4 L_{k-1} + C L_{k-1}^(1/2)
    bool                     matches_series = false;
  };

  /// X_0 = X; X_k generates G^(k): Milnor chain on the commutators of
  /// X_{k-1}, reduced shortest-first to a generating subset.
  inline DerivedGenerators derived_generators(FiniteGroupTable const& T, std::size_t k_max) {
    DerivedGenerators out;
    std::vector<Index> X = T.generators();
    X.erase(std::remove(X.begin(), X.end(), Index{0}), X.end());
    DerivedStep first;
    first.X      = X;
    first.order  = T.order();
    first.length = max_length(T, X);
    first.ratio  = first.length;
    out.steps.push_back(std::move(first));
    out.matches_series = true;
    Subgroup D         = whole_group(T);
    for (std::size_t k = 1; k <= k_max && out.steps.back().order > 1; ++k) {
      auto const& prev = out.steps.back().X;
      std::vector<Index> Y;
      for (auto a : prev) {
        for (auto b : prev) {
          Y.push_back(T.comm(a, b));
        }
      }
      auto chain = milnor_chain(T, Y);
      D          = commutator_subgroup(T, D, D);
      DerivedStep s;
      s.k       = k;
      s.X       = reduced_generators(T, chain.Z);
      s.X.erase(std::remove(s.X.begin(), s.X.end(), Index{0}), s.X.end());
      s.order   = chain.H.back().order();
      s.length  = max_length(T, s.X);
      s.ratio   = s.length / std::pow(4.0, static_cast<double>(k));
      s.chain_k = chain.k;
      out.matches_series = out.matches_series && chain.H.back() == D;
      auto const Lp = static_cast<double>(out.steps.back().length);
      if (Lp > 0 && s.length > 0) {
        out.recurrence_C = std::max(out.recurrence_C, (s.length - 4 * Lp) / std::sqrt(Lp));
      }
      out.steps.push_back(std::move(s));
    }
    return out;
  }

}  // namespace solgrowth

#endif  // SOLGROWTH_MILNOR_HPP_
