#ifndef SOLGROWTH_CERTIFICATE_HPP_
#define SOLGROWTH_CERTIFICATE_HPP_

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "solgrowth/error.hpp"
#include "solgrowth/linear.hpp"
#include "solgrowth/milnor.hpp"
#include "solgrowth/mu.hpp"
#include "solgrowth/soluble.hpp"
#include "solgrowth/subgroup.hpp"

namespace solgrowth {

  struct CanonicalChain {
    ModifiedSeries             series;
    std::vector<std::uint32_t> costs;  // a_i: 4 for an abelian step, 10 for class two
  };

  inline std::uint32_t step_cost(FactorKind k) {
    return k == FactorKind::Abelian ? 4 : 10;
  }

  /// An optimal series of Q whose steps are H' or gamma_3(H) and whose last
  /// nontrivial term is V. Among optimal canonical series the derived step
  /// is tried first; SeriesMismatch if none ends at V.
  inline CanonicalChain canonical_modified_chain(FiniteGroupTable const& Q,
                                                 Subgroup const&         V) {
    MuFast m(Q);
    auto const G = whole_group(Q);
    auto const target = m.value(G);

    std::vector<Subgroup>   chain{G};
    std::vector<FactorKind> kinds;
    // depth-first over optimal choices; the recursion depth is the length
    std::function<bool(Subgroup const&)> go = [&](Subgroup const& H) -> bool {
      if (H.is_trivial()) {
        return chain.size() >= 2 && chain[chain.size() - 2] == V;
      }
      auto const here = m.value(H);
      auto D = commutator_subgroup(Q, H, H);
      auto C = commutator_subgroup(Q, D, H);
      std::vector<std::pair<Subgroup, FactorKind>> options;
      if (m.value(D) + kAbelianStep == here) {
        options.emplace_back(D, FactorKind::Abelian);
      }
      if (C != D && m.value(C) + kClassTwoStep == here) {
        options.emplace_back(C, FactorKind::ClassTwo);
      }
      for (auto const& [K, kind] : options) {
        chain.push_back(K);
        kinds.push_back(kind);
        if (go(K)) {
          return true;
        }
        chain.pop_back();
        kinds.pop_back();
      }
      return false;
    };
    if (!go(G)) {
      fail(ErrorKind::SeriesMismatch, "no optimal canonical series ends at V");
    }
    CanonicalChain out;
    out.series.chain = std::move(chain);
    out.series.kinds = std::move(kinds);
    out.series.cost  = target;
    for (auto k : out.series.kinds) {
      out.costs.push_back(step_cost(k));
    }
    return out;
  }

  struct Certificate {
    std::size_t                group_order = 0;
    std::size_t                kernel_order = 0;  // |N|
    std::size_t                quotient_order = 0;
    std::uint32_t              p = 0;
    std::uint32_t              n = 0;             // rank of V
    MuValue                    mu;
    std::vector<std::size_t>   series_orders;     // |H_0|, ..., |H_k| in G/N
    std::vector<FactorKind>    kinds;
    std::vector<std::uint32_t> costs;             // a_1 .. a_k
    std::vector<std::uint32_t> step_lengths;      // L_0 .. L_{k-1}: generator lengths of H_i
    std::vector<std::vector<int>> words;          // b_1 .. b_n as signed generator numbers
    std::vector<Index>         b;                 // lifts of b_i in G
    std::uint32_t              L = 0;             // max l_X(b_i)
    std::uint64_t              radius = 0;        // L n
    std::uint64_t              bound = 0;         // 2^n
    std::uint64_t              gamma = 0;         // gamma_X(radius) from the table of G
    bool                       independent = false;
    bool                       distinct = false;
    bool                       holds = false;
    bool                       vacuous = false;   // radius past the diameter
    bool                       cost_word_matches = false;
    double                     measured_C = 0;    // least C with L_i <= a_i L_{i-1} + C L_{i-1}^(1/2)
    double                     measured_C_prime = 0;  // max L_i / (a_1 ... a_i)
    std::vector<std::pair<std::uint32_t, std::string>> transcript;  // (mask, product encoding)
  };

  namespace detail {

    // Coordinates of an elementary abelian p-group V inside a table: a
    // basis e_1..e_n and the coordinate vector of each member.
    struct Coordinates {
      std::vector<Index>                         basis;
      std::unordered_map<Index, std::vector<std::uint32_t>> coords;
    };

    inline Coordinates coordinates(FiniteGroupTable const& T, Subgroup const& V,
                                   std::uint32_t p) {
      Coordinates C;
      C.coords[0] = {};
      for (auto v : V.members()) {
        if (C.coords.count(v)) {
          continue;
        }
        // v is outside the span so far: extend every known vector by v^c
        C.basis.push_back(v);
        std::vector<std::pair<Index, std::vector<std::uint32_t>>> old(C.coords.begin(),
                                                                      C.coords.end());
        for (auto& [x, c] : C.coords) {
          c.push_back(0);
        }
        for (auto const& [x, c] : old) {
          Index y = x;
          for (std::uint32_t k = 1; k < p; ++k) {
            y = T.mul(y, v);
            auto cc = c;
            cc.push_back(k);
            C.coords[y] = std::move(cc);
          }
        }
      }
      return C;
    }

    inline Index evaluate(FiniteGroupTable const& T, std::vector<int> const& word) {
      Index x = 0;
      for (auto w : word) {
        auto g = T.generators()[static_cast<std::size_t>(std::abs(w)) - 1];
        x      = T.mul(x, w > 0 ? g : T.inv(g));
      }
      return x;
    }

  }  // namespace detail

  struct CertifyOptions {
    bool emit_transcript = false;  // only for n <= 10
  };

  /// Growth lower bound from a self-centralizing minimal normal V of G/N:
  /// generators of each canonical step are tracked with their lengths, n of
  /// them with independent images in V give 2^n distinct products of
  /// length <= L n.
  inline Certificate certify_growth_lower_bound(FiniteGroupTable const& T,
                                                Subgroup const&         N,
                                                CertifyOptions const&   opt = {}) {
    auto Q  = quotient(T, N);
    auto const& QT = Q.table;
    if (QT.order() == 1) {
      fail(ErrorKind::Trivial, "G/N is trivial");
    }
    if (!is_soluble(QT)) {
      fail(ErrorKind::NotSoluble, "G/N is not soluble");
    }
    Certificate cert;
    cert.group_order    = T.order();
    cert.kernel_order   = N.order();
    cert.quotient_order = QT.order();

    std::optional<Subgroup> V;
    for (auto const& M : minimal_normal_subgroups(QT)) {
      if (centralizer(QT, M) == M) {
        V = M;
        break;
      }
    }
    if (!V) {
      fail(ErrorKind::NotSelfCentralizing, "G/N has no self-centralizing minimal normal subgroup");
    }
    auto const ea = elementary_abelian_factor(QT, *V, Subgroup::trivial(QT));
    if (!ea) {
      fail(ErrorKind::NotSoluble, "minimal normal subgroup is not elementary abelian");
    }
    cert.p = ea->first;
    cert.n = ea->second;

    auto canon = canonical_modified_chain(QT, *V);
    cert.mu    = canon.series.cost;
    cert.kinds = canon.series.kinds;
    cert.costs = canon.costs;
    for (auto const& H : canon.series.chain) {
      cert.series_orders.push_back(H.order());
    }
    BigInt word_product = 1;
    for (auto a : cert.costs) {
      word_product *= a;
    }
    cert.cost_word_matches = word_product == cert.mu.power4();

    // generators of H_0 .. H_{k-1} with tracked lengths
    std::vector<Index> X = QT.generators();
    X.erase(std::remove(X.begin(), X.end(), Index{0}), X.end());
    cert.step_lengths.push_back(max_length(QT, X));
    auto const k = canon.series.kinds.size();
    for (std::size_t i = 0; i + 1 < k; ++i) {
      std::vector<Index> Y;
      for (auto a : X) {
        for (auto b : X) {
          auto c = QT.comm(a, b);
          if (canon.series.kinds[i] == FactorKind::Abelian) {
            Y.push_back(c);
          } else {
            for (auto d : X) {
              Y.push_back(QT.comm(c, d));
            }
          }
        }
      }
      auto chain = milnor_chain(QT, Y);
      if (chain.H.back() != canon.series.chain[i + 1]) {
        fail(ErrorKind::SeriesMismatch, "tracked generators miss a series term");
      }
      X = reduced_generators(QT, chain.Z);
      X.erase(std::remove(X.begin(), X.end(), Index{0}), X.end());
      cert.step_lengths.push_back(max_length(QT, X));
    }
    for (std::size_t i = 1; i < cert.step_lengths.size(); ++i) {
      double const Lp = cert.step_lengths[i - 1];
      double const Li = cert.step_lengths[i];
      if (Lp > 0) {
        cert.measured_C = std::max(cert.measured_C, (Li - cert.costs[i - 1] * Lp) / std::sqrt(Lp));
      }
    }
    double prod_a = 1;
    for (std::size_t i = 1; i < cert.step_lengths.size(); ++i) {
      prod_a *= cert.costs[i - 1];
      cert.measured_C_prime = std::max(cert.measured_C_prime, cert.step_lengths[i] / prod_a);
    }

    // X now generates V: pick n of minimal length with independent images
    auto coords = detail::coordinates(QT, *V, cert.p);
    sort_by_length(QT, X);
    detail::Echelon E{cert.p, {}, {}};
    std::vector<Index> bq;
    for (auto x : X) {
      if (bq.size() == cert.n) {
        break;
      }
      if (!V->contains(x)) {
        fail(ErrorKind::SeriesMismatch, "tracked generator lies outside V");
      }
      if (E.add(coords.coords.at(x))) {
        bq.push_back(x);
      }
    }
    if (bq.size() < cert.n) {
      fail(ErrorKind::RankDeficient, "generators of the last term do not span V");
    }
    cert.independent = true;
    for (auto x : bq) {
      auto w = QT.word(x);
      cert.words.push_back(w);
      auto lift = detail::evaluate(T, w);
      if (Q.image(lift) != x) {
        fail(ErrorKind::SeriesMismatch, "word does not lift to the coset");
      }
      cert.b.push_back(lift);
      cert.L = std::max(cert.L, static_cast<std::uint32_t>(w.size()));
    }
    auto prods    = subset_products(T, cert.b);
    cert.distinct = all_distinct(prods, T.order());
    cert.radius   = static_cast<std::uint64_t>(cert.L) * cert.n;
    cert.bound    = std::uint64_t{1} << cert.n;
    cert.gamma    = ball_size(T, cert.radius);
    cert.vacuous  = cert.radius >= T.diameter();
    cert.holds    = cert.distinct && cert.gamma >= cert.bound
                 && max_length(T, prods) <= cert.radius;
    if (opt.emit_transcript && cert.n <= 10 && T.has_elements()) {
      for (std::uint32_t m = 0; m < prods.size(); ++m) {
        cert.transcript.emplace_back(m, T.encoding(prods[m]));
      }
    }
    return cert;
  }

}  // namespace solgrowth

#endif  // SOLGROWTH_CERTIFICATE_HPP_
