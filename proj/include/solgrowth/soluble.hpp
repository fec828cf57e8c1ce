#ifndef SOLGROWTH_SOLUBLE_HPP_
#define SOLGROWTH_SOLUBLE_HPP_

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <set>
#include <unordered_map>
#include <unordered_set>
#include <vector>

#include "solgrowth/bounds.hpp"
#include "solgrowth/error.hpp"
#include "solgrowth/subgroup.hpp"
#include "solgrowth/table.hpp"

namespace solgrowth {

  /// Normal subgroups of an ambient group (normal in the ambient, not in the
  /// whole table), ordered by order and then by member list.
  struct NormalLattice {
    std::vector<Subgroup> members;

    std::size_t size() const {
      return members.size();
    }

    /// Indices j such that members[j] covers members[i]: strictly larger,
    /// with nothing in the lattice strictly between.
    std::vector<std::size_t> covers(std::size_t i) const {
      std::vector<std::size_t> above;
      auto const&              N = members[i];
      for (std::size_t j = 0; j < members.size(); ++j) {
        if (j != i && members[j].order() > N.order() && N.subset_of(members[j])) {
          above.push_back(j);
        }
      }
      std::vector<std::size_t> out;
      for (auto j : above) {
        bool minimal = true;
        for (auto k : above) {
          if (k != j && members[k].order() < members[j].order()
              && members[k].subset_of(members[j])) {
            minimal = false;
            break;
          }
        }
        if (minimal) {
          out.push_back(j);
        }
      }
      return out;
    }

    std::optional<std::size_t> find(Subgroup const& H) const {
      for (std::size_t i = 0; i < members.size(); ++i) {
        if (members[i] == H) {
          return i;
        }
      }
      return std::nullopt;
    }
  };

  /// All subgroups K with base <= K, K normal in `ambient` (base must itself
  /// be normal in ambient). Every such K is the join of base with the
  /// normal closures of the classes it meets, so the lattice is closed
  /// under joins of those generators.
  inline NormalLattice normal_subgroups(FiniteGroupTable const& T,
                                        Subgroup const&         ambient,
                                        Subgroup const&         base) {
    std::vector<Subgroup> atoms;
    std::unordered_set<Subgroup, SubgroupHash> seen;
    for (auto const& cls : conjugacy_classes(T, ambient)) {
      if (base.contains(cls.front())) {
        continue;
      }
      std::vector<Index> seeds(base.generators());
      seeds.push_back(cls.front());
      auto N = normal_closure(T, ambient, seeds);
      if (seen.insert(N).second) {
        atoms.push_back(std::move(N));
      }
    }
    std::vector<Subgroup> all{base};
    seen.clear();
    seen.insert(base);
    for (auto const& a : atoms) {
      if (seen.insert(a).second) {
        all.push_back(a);
      }
    }
    for (std::size_t i = 0; i < all.size(); ++i) {
      for (std::size_t k = 0; k < atoms.size(); ++k) {
        if (atoms[k].subset_of(all[i]) || all[i].subset_of(atoms[k])) {
          continue;
        }
        auto J = join(T, all[i], atoms[k]);
        if (seen.insert(J).second) {
          all.push_back(std::move(J));
        }
      }
    }
    std::sort(all.begin(), all.end(), [](Subgroup const& a, Subgroup const& b) {
      if (a.order() != b.order()) {
        return a.order() < b.order();
      }
      return a.members() < b.members();
    });
    return NormalLattice{std::move(all)};
  }

  inline NormalLattice normal_subgroups(FiniteGroupTable const& T) {
    return normal_subgroups(T, whole_group(T), Subgroup::trivial(T));
  }

  inline std::vector<Subgroup> minimal_normal_subgroups(FiniteGroupTable const& T) {
    auto L = normal_subgroups(T);
    std::vector<Subgroup> out;
    for (auto j : L.covers(0)) {
      out.push_back(L.members[j]);
    }
    return out;
  }

  /// If |M : N| = p^r with M/N elementary abelian, returns (p, r).
  inline std::optional<std::pair<std::uint32_t, std::uint32_t>>
  elementary_abelian_factor(FiniteGroupTable const& T,
                            Subgroup const&         M,
                            Subgroup const&         N) {
    auto index = M.order() / N.order();
    if (index < 2 || M.order() % N.order() != 0) {
      return std::nullopt;
    }
    std::uint32_t p = 2;
    while (index % p != 0) {
      ++p;
    }
    std::uint32_t r = 0;
    for (auto x = index; x > 1; x /= p) {
      if (x % p != 0) {
        return std::nullopt;
      }
      ++r;
    }
    for (auto a : M.generators()) {
      for (auto b : M.generators()) {
        if (!N.contains(T.comm(a, b))) {
          return std::nullopt;
        }
      }
    }
    for (auto m : M.members()) {
      Index x = 0;
      for (std::uint32_t k = 0; k < p; ++k) {
        x = T.mul(x, m);
      }
      if (!N.contains(x)) {
        return std::nullopt;
      }
    }
    return std::make_pair(p, r);
  }

  /// {g in ambient : [g, m] in N for all m in M}, the preimage of
  /// C_{G/N}(M/N).
  inline Subgroup centralizer_mod(FiniteGroupTable const& T,
                                  Subgroup const&         ambient,
                                  Subgroup const&         M,
                                  Subgroup const&         N) {
    std::vector<Index> members;
    for (auto g : ambient.members()) {
      bool ok = true;
      for (auto m : M.generators()) {
        if (!N.contains(T.comm(g, m))) {
          ok = false;
          break;
        }
      }
      if (ok) {
        members.push_back(g);
      }
    }
    return subgroup_from_members(T, members);
  }

  struct ChiefFactorRecord {
    Subgroup      N;
    Subgroup      M;
    std::uint32_t p                 = 0;
    std::uint32_t rank              = 0;
    bool          self_centralizing = false;
  };

  inline ChiefFactorRecord chief_factor_record(FiniteGroupTable const& T,
                                               Subgroup const&         G,
                                               Subgroup const&         N,
                                               Subgroup const&         M) {
    auto pr = elementary_abelian_factor(T, M, N);
    if (!pr) {
      fail(ErrorKind::NotSoluble, "chief factor is not elementary abelian");
    }
    ChiefFactorRecord rec{N, M, pr->first, pr->second, false};
    rec.self_centralizing = centralizer_mod(T, G, M, N) == M;
    return rec;
  }

  enum class TieBreak { First, Last };

  /// A chief series 1 = G_0 < ... < G_m = G, walking up the normal lattice by
  /// covers; ties between covers go to the first or last in lattice order.
  inline std::vector<ChiefFactorRecord> chief_series(FiniteGroupTable const& T,
                                                     NormalLattice const&    L,
                                                     TieBreak tie = TieBreak::First) {
    auto G = whole_group(T);
    if (!is_soluble(T, G)) {
      fail(ErrorKind::NotSoluble, "chief series requested for a non-soluble group");
    }
    std::vector<ChiefFactorRecord> out;
    std::size_t                    cur = 0;
    while (L.members[cur].order() < T.order()) {
      auto up   = L.covers(cur);
      auto next = tie == TieBreak::First ? up.front() : up.back();
      out.push_back(chief_factor_record(T, G, L.members[cur], L.members[next]));
      cur = next;
    }
    return out;
  }

  inline std::vector<ChiefFactorRecord> chief_series(FiniteGroupTable const& T,
                                                     TieBreak tie = TieBreak::First) {
    return chief_series(T, normal_subgroups(T), tie);
  }

  /// Every chief factor M/N of G: N in the normal lattice and M/N minimal
  /// normal in G/N.
  inline std::vector<ChiefFactorRecord> all_chief_factors(FiniteGroupTable const& T,
                                                          NormalLattice const&    L) {
    auto                           G = whole_group(T);
    std::vector<ChiefFactorRecord> out;
    for (std::size_t i = 0; i < L.size(); ++i) {
      for (auto j : L.covers(i)) {
        out.push_back(chief_factor_record(T, G, L.members[i], L.members[j]));
      }
    }
    return out;
  }

  /// Maximum rank of a self-centralizing chief factor over all quotients.
  inline std::uint32_t sc_chief_rank(FiniteGroupTable const& T, NormalLattice const& L) {
    if (T.order() == 1) {
      fail(ErrorKind::Trivial, "trivial group has no chief factors");
    }
    if (!is_soluble(T)) {
      fail(ErrorKind::NotSoluble, "self-centralizing chief rank needs a soluble group");
    }
    std::uint32_t best = 0;
    for (auto const& f : all_chief_factors(T, L)) {
      if (f.self_centralizing) {
        best = std::max(best, f.rank);
      }
    }
    return best;
  }

  inline std::uint32_t sc_chief_rank(FiniteGroupTable const& T) {
    if (T.order() == 1) {
      fail(ErrorKind::Trivial, "trivial group has no chief factors");
    }
    return sc_chief_rank(T, normal_subgroups(T));
  }

  inline bool is_supersoluble(FiniteGroupTable const& T) {
    if (T.order() == 1) {
      return true;
    }
    return sc_chief_rank(T) == 1;
  }

  /// Direct definition: some (hence every) chief series has all factors of
  /// prime order.
  inline bool has_cyclic_chief_series(FiniteGroupTable const& T) {
    if (T.order() == 1) {
      return true;
    }
    for (auto const& f : chief_series(T)) {
      if (f.rank != 1) {
        return false;
      }
    }
    return true;
  }

  // Subgroup enumeration --------------------------------------------------

  /// Sorted member lists of all distinct conjugates of H under `ambient`.
  inline std::vector<std::vector<Index>> conjugates(FiniteGroupTable const& T,
                                                    Subgroup const&         ambient,
                                                    Subgroup const&         H) {
    std::vector<std::vector<Index>> queue{H.members()};
    std::set<std::vector<Index>>    seen{H.members()};
    for (std::size_t i = 0; i < queue.size(); ++i) {
      for (auto a : ambient.generators()) {
        std::vector<Index> c;
        c.reserve(queue[i].size());
        auto ai = T.inv(a);
        for (auto h : queue[i]) {
          c.push_back(T.mul(T.mul(ai, h), a));
        }
        std::sort(c.begin(), c.end());
        if (seen.insert(c).second) {
          queue.push_back(std::move(c));
        }
      }
    }
    return queue;
  }

  struct SubgroupClass {
    Subgroup    representative;
    std::size_t size = 1;  // number of conjugates
  };

  /// Soluble subgroups of `ambient` up to conjugacy in `ambient`. Every
  /// soluble subgroup has a subnormal chain with prime indices, so each
  /// class is reached from a smaller one by adjoining an element of the
  /// normalizer whose coset has prime order. Representatives are sorted by
  /// order. Throws CapExceeded once more than `max_classes` are found.
  inline std::vector<SubgroupClass> soluble_subgroup_classes(FiniteGroupTable const& T,
                                                             Subgroup const& ambient,
                                                             std::size_t max_classes
                                                             = 100000) {
    std::vector<SubgroupClass> classes;
    std::set<std::vector<Index>> seen;
    auto add = [&](Subgroup H) {
      auto conj = conjugates(T, ambient, H);
      for (auto& c : conj) {
        seen.insert(std::move(c));
      }
      classes.push_back(SubgroupClass{std::move(H), conj.size()});
      if (classes.size() > max_classes) {
        fail(ErrorKind::CapExceeded, "too many subgroup classes");
      }
    };
    add(Subgroup::trivial(T));
    for (std::size_t i = 0; i < classes.size(); ++i) {
      Subgroup K  = classes[i].representative;
      auto     NK = normalizer(T, ambient, K);
      boost::dynamic_bitset<> done(T.order());
      for (auto k : K.members()) {
        done.set(k);
      }
      for (auto g : NK.members()) {
        if (done.test(g)) {
          continue;
        }
        // order of gK in N(K)/K
        Index         x = g;
        std::uint32_t m = 1;
        while (!K.contains(x)) {
          x = T.mul(x, g);
          ++m;
        }
        if (!detail::is_prime(m)) {
          continue;
        }
        std::vector<Index> seeds(K.generators());
        seeds.push_back(g);
        auto L = subgroup_generated(T, seeds);
        for (auto y : L.members()) {
          done.set(y);
        }
        if (!seen.count(L.members())) {
          add(std::move(L));
        }
      }
    }
    std::stable_sort(classes.begin(), classes.end(),
                     [](SubgroupClass const& a, SubgroupClass const& b) {
                       return a.representative.order() < b.representative.order();
                     });
    return classes;
  }

  inline std::vector<SubgroupClass> soluble_subgroup_classes(FiniteGroupTable const& T) {
    return soluble_subgroup_classes(T, whole_group(T));
  }

  /// All maximal subgroups of a soluble table (every conjugate listed).
  /// Gated: intended for |T| <= 500.
  inline std::vector<Subgroup> maximal_subgroups(FiniteGroupTable const& T,
                                                 std::size_t max_order = 500) {
    if (T.order() > max_order) {
      fail(ErrorKind::CapExceeded, "maximal subgroup enumeration is gated by order");
    }
    auto G = whole_group(T);
    if (!is_soluble(T, G)) {
      fail(ErrorKind::NotSoluble, "maximal subgroup enumeration needs a soluble group");
    }
    std::vector<Subgroup> out;
    for (auto const& cls : soluble_subgroup_classes(T, G)) {
      auto const& H = cls.representative;
      if (H.order() == T.order()) {
        continue;
      }
      bool maximal = true;
      boost::dynamic_bitset<> covered(T.order());
      for (auto h : H.members()) {
        covered.set(h);
      }
      for (Index g = 0; g < T.order() && maximal; ++g) {
        if (covered.test(g)) {
          continue;
        }
        std::vector<Index> seeds(H.generators());
        seeds.push_back(g);
        auto J = subgroup_generated(T, seeds);
        if (J.order() != T.order()) {
          maximal = false;
        }
        // the coset Hg gives the same join
        for (auto h : H.members()) {
          covered.set(T.mul(h, g));
        }
      }
      if (maximal) {
        for (auto const& c : conjugates(T, G, H)) {
          out.push_back(subgroup_from_members(T, c));
        }
      }
    }
    return out;
  }

  /// Diagnostic: the orders of self-centralizing chief factors coincide
  /// with the indices of maximal subgroups.
  struct ScMaximalReport {
    std::set<std::size_t> factor_orders;
    std::set<std::size_t> maximal_indices;
    bool                  agree = false;
  };

  inline ScMaximalReport sc_iff_maximal_index_check(FiniteGroupTable const& T) {
    ScMaximalReport rep;
    auto            L = normal_subgroups(T);
    for (auto const& f : all_chief_factors(T, L)) {
      if (f.self_centralizing) {
        rep.factor_orders.insert(f.M.order() / f.N.order());
      }
    }
    for (auto const& M : maximal_subgroups(T)) {
      rep.maximal_indices.insert(T.order() / M.order());
    }
    rep.agree = rep.factor_orders == rep.maximal_indices;
    return rep;
  }

  /// Every self-centralizing chief factor M/N lies outside the Frattini
  /// subgroup of G/N: some maximal subgroup contains N but not M.
  inline bool sc_factors_non_frattini(FiniteGroupTable const& T) {
    auto L   = normal_subgroups(T);
    auto Max = maximal_subgroups(T);
    for (auto const& f : all_chief_factors(T, L)) {
      if (!f.self_centralizing) {
        continue;
      }
      bool found = false;
      for (auto const& H : Max) {
        if (f.N.subset_of(H) && !f.M.subset_of(H)) {
          found = true;
          break;
        }
      }
      if (!found) {
        return false;
      }
    }
    return true;
  }

  /// G^(e) is nilpotent for e = sigma(n), n >= sc_chief_rank. Each
  /// G/C_G(V) over a complemented chief factor V is an irreducible soluble
  /// linear group of degree at most n, so the table value sigma(n) already
  /// suffices and is the sharper test; the rho exponent sits deeper in the
  /// derived series and follows from it.
  inline bool check_srank_nilpotency(FiniteGroupTable const& T, std::uint32_t n) {
    if (T.order() == 1) {
      return true;
    }
    auto const D = derived_series(T);
    auto const e = std::min<std::size_t>(sigma_value(std::max(n, 1u)).value, D.size() - 1);
    return is_nilpotent(T, D[e]);
  }

}  // namespace solgrowth

#endif  // SOLGROWTH_SOLUBLE_HPP_
