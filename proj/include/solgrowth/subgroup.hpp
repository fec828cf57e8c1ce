#ifndef SOLGROWTH_SUBGROUP_HPP_
#define SOLGROWTH_SUBGROUP_HPP_

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <utility>
#include <vector>

#include <boost/dynamic_bitset.hpp>

#include "solgrowth/error.hpp"
#include "solgrowth/table.hpp"

namespace solgrowth {

  /// A subgroup of a FiniteGroupTable: sorted member indices, a membership
  /// mask over the parent and a generating list. The parent table is passed
  /// explicitly to every operation.
  class Subgroup {
   public:
    Subgroup() = default;

    static Subgroup trivial(FiniteGroupTable const& T) {
      Subgroup H;
      H._mask.resize(T.order());
      H._mask.set(0);
      H._members = {0};
      return H;
    }

    std::vector<Index> const& members() const {
      return _members;
    }

    std::vector<Index> const& generators() const {
      return _generators;
    }

    boost::dynamic_bitset<> const& mask() const {
      return _mask;
    }

    bool contains(Index a) const {
      return _mask.test(a);
    }

    std::size_t order() const {
      return _members.size();
    }

    bool is_trivial() const {
      return _members.size() == 1;
    }

    bool subset_of(Subgroup const& that) const {
      return _mask.is_subset_of(that._mask);
    }

    friend bool operator==(Subgroup const& a, Subgroup const& b) {
      return a._mask == b._mask;
    }

    friend bool operator!=(Subgroup const& a, Subgroup const& b) {
      return !(a == b);
    }

    // Building blocks for the closure routines below.
    void add_member(Index a) {
      _mask.set(a);
      _members.push_back(a);
    }

    void add_generator(Index a) {
      _generators.push_back(a);
    }

    void sort_members() {
      std::sort(_members.begin(), _members.end());
    }

   private:
    std::vector<Index>      _members;
    std::vector<Index>      _generators;
    boost::dynamic_bitset<> _mask;
  };

  struct SubgroupHash {
    std::size_t operator()(Subgroup const& H) const {
      std::size_t h = H.order();
      for (auto x : H.members()) {
        h ^= std::hash<Index>{}(x) + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
      }
      return h;
    }
  };

  namespace detail {

    // Adds generator h to the closed set H (members unsorted during growth).
    inline void extend_closure(FiniteGroupTable const& T, Subgroup& H, Index h) {
      H.add_generator(h);
      auto const old  = H.order();
      auto const& mem = H.members();
      for (std::size_t i = 0; i < old; ++i) {
        auto y = T.mul(mem[i], h);
        if (!H.contains(y)) {
          H.add_member(y);
        }
      }
      for (std::size_t i = old; i < H.order(); ++i) {
        for (auto g : H.generators()) {
          auto y = T.mul(H.members()[i], g);
          if (!H.contains(y)) {
            H.add_member(y);
          }
        }
      }
    }

  }  // namespace detail

  /// Smallest subgroup containing the seeds (and the identity).
  inline Subgroup subgroup_generated(FiniteGroupTable const& T,
                                     std::span<Index const>  seeds) {
    Subgroup H = Subgroup::trivial(T);
    for (auto s : seeds) {
      if (!H.contains(s)) {
        detail::extend_closure(T, H, s);
      }
    }
    H.sort_members();
    return H;
  }

  inline Subgroup subgroup_generated(FiniteGroupTable const&      T,
                                     std::initializer_list<Index> seeds) {
    return subgroup_generated(T, std::span<Index const>(seeds.begin(), seeds.size()));
  }

  inline Subgroup whole_group(FiniteGroupTable const& T) {
    return subgroup_generated(T, T.generators());
  }

  /// Subgroup whose member set is already known to be closed; a generating
  /// list is picked greedily in index order.
  inline Subgroup subgroup_from_members(FiniteGroupTable const& T,
                                        std::span<Index const>  members) {
    Subgroup H = Subgroup::trivial(T);
    for (auto m : members) {
      if (!H.contains(m)) {
        detail::extend_closure(T, H, m);
      }
    }
    if (H.order() != members.size()) {
      fail(ErrorKind::InvalidElement, "member set is not closed under products");
    }
    H.sort_members();
    return H;
  }

  inline Subgroup join(FiniteGroupTable const& T,
                       Subgroup const&         A,
                       Subgroup const&         B) {
    std::vector<Index> seeds(A.generators());
    seeds.insert(seeds.end(), B.generators().begin(), B.generators().end());
    return subgroup_generated(T, seeds);
  }

  inline Subgroup intersection(FiniteGroupTable const& T,
                               Subgroup const&         A,
                               Subgroup const&         B) {
    std::vector<Index> common;
    std::set_intersection(A.members().begin(),
                          A.members().end(),
                          B.members().begin(),
                          B.members().end(),
                          std::back_inserter(common));
    return subgroup_from_members(T, common);
  }

  /// Smallest subgroup normal in `ambient` that contains the seeds.
  inline Subgroup normal_closure(FiniteGroupTable const& T,
                                 Subgroup const&         ambient,
                                 std::span<Index const>  seeds) {
    Subgroup N = Subgroup::trivial(T);
    for (auto s : seeds) {
      if (!N.contains(s)) {
        detail::extend_closure(T, N, s);
      }
    }
    for (std::size_t i = 0; i < N.generators().size(); ++i) {
      for (auto a : ambient.generators()) {
        auto c = T.conj(N.generators()[i], a);
        if (!N.contains(c)) {
          detail::extend_closure(T, N, c);
        }
      }
    }
    N.sort_members();
    return N;
  }

  inline Subgroup normal_closure(FiniteGroupTable const& T,
                                 std::span<Index const>  seeds) {
    return normal_closure(T, whole_group(T), seeds);
  }

  inline bool is_normal(FiniteGroupTable const& T,
                        Subgroup const&         N,
                        Subgroup const&         ambient) {
    if (!N.subset_of(ambient)) {
      return false;
    }
    for (auto n : N.generators()) {
      for (auto a : ambient.generators()) {
        if (!N.contains(T.conj(n, a))) {
          return false;
        }
      }
    }
    return true;
  }

  inline bool is_normal(FiniteGroupTable const& T, Subgroup const& N) {
    return is_normal(T, N, whole_group(T));
  }

  /// [A, B]: the normal closure in <A, B> of the commutators of generators.
  inline Subgroup commutator_subgroup(FiniteGroupTable const& T,
                                      Subgroup const&         A,
                                      Subgroup const&         B) {
    std::vector<Index> seeds;
    for (auto a : A.generators()) {
      for (auto b : B.generators()) {
        auto c = T.comm(a, b);
        if (c != 0) {
          seeds.push_back(c);
        }
      }
    }
    return normal_closure(T, join(T, A, B), seeds);
  }

  inline bool is_abelian(FiniteGroupTable const& T, Subgroup const& H) {
    for (auto a : H.generators()) {
      for (auto b : H.generators()) {
        if (T.mul(a, b) != T.mul(b, a)) {
          return false;
        }
      }
    }
    return true;
  }

  /// H, H', H'', ... up to the first repeated term.
  inline std::vector<Subgroup> derived_series(FiniteGroupTable const& T,
                                              Subgroup const&         H) {
    std::vector<Subgroup> series{H};
    while (!series.back().is_trivial()) {
      auto next = commutator_subgroup(T, series.back(), series.back());
      if (next == series.back()) {
        break;
      }
      series.push_back(std::move(next));
    }
    return series;
  }

  inline std::vector<Subgroup> derived_series(FiniteGroupTable const& T) {
    return derived_series(T, whole_group(T));
  }

  /// gamma_1 = H, gamma_{i+1} = [gamma_i, H], up to the first repeated term.
  inline std::vector<Subgroup> lower_central_series(FiniteGroupTable const& T,
                                                    Subgroup const&         H) {
    std::vector<Subgroup> series{H};
    while (!series.back().is_trivial()) {
      auto next = commutator_subgroup(T, series.back(), H);
      if (next == series.back()) {
        break;
      }
      series.push_back(std::move(next));
    }
    return series;
  }

  inline std::vector<Subgroup> lower_central_series(FiniteGroupTable const& T) {
    return lower_central_series(T, whole_group(T));
  }

  /// Derived length, or nullopt when the series stalls above 1.
  inline std::optional<std::size_t> derived_length(FiniteGroupTable const& T,
                                                   Subgroup const&         H) {
    auto s = derived_series(T, H);
    if (!s.back().is_trivial()) {
      return std::nullopt;
    }
    return s.size() - 1;
  }

  inline std::optional<std::size_t> derived_length(FiniteGroupTable const& T) {
    return derived_length(T, whole_group(T));
  }

  inline std::optional<std::size_t> nilpotency_class(FiniteGroupTable const& T,
                                                     Subgroup const&         H) {
    auto s = lower_central_series(T, H);
    if (!s.back().is_trivial()) {
      return std::nullopt;
    }
    return s.size() - 1;
  }

  inline std::optional<std::size_t> nilpotency_class(FiniteGroupTable const& T) {
    return nilpotency_class(T, whole_group(T));
  }

  inline bool is_soluble(FiniteGroupTable const& T, Subgroup const& H) {
    return derived_length(T, H).has_value();
  }

  inline bool is_soluble(FiniteGroupTable const& T) {
    return is_soluble(T, whole_group(T));
  }

  inline bool is_nilpotent(FiniteGroupTable const& T, Subgroup const& H) {
    return nilpotency_class(T, H).has_value();
  }

  inline bool is_nilpotent(FiniteGroupTable const& T) {
    return is_nilpotent(T, whole_group(T));
  }

  /// Conjugacy classes of `ambient`, each sorted, ordered by least member.
  inline std::vector<std::vector<Index>>
  conjugacy_classes(FiniteGroupTable const& T, Subgroup const& ambient) {
    std::vector<std::vector<Index>> classes;
    boost::dynamic_bitset<>         done(T.order());
    for (auto x : ambient.members()) {
      if (done.test(x)) {
        continue;
      }
      std::vector<Index> cls{x};
      done.set(x);
      for (std::size_t i = 0; i < cls.size(); ++i) {
        for (auto a : ambient.generators()) {
          auto y = T.conj(cls[i], a);
          if (!done.test(y)) {
            done.set(y);
            cls.push_back(y);
          }
        }
      }
      std::sort(cls.begin(), cls.end());
      classes.push_back(std::move(cls));
    }
    return classes;
  }

  inline std::vector<std::vector<Index>>
  conjugacy_classes(FiniteGroupTable const& T) {
    return conjugacy_classes(T, whole_group(T));
  }

  /// C_ambient(S) = {g in ambient : gs = sg for all s in S}.
  inline Subgroup centralizer(FiniteGroupTable const& T,
                              Subgroup const&         ambient,
                              Subgroup const&         S) {
    std::vector<Index> members;
    for (auto g : ambient.members()) {
      bool ok = true;
      for (auto s : S.generators()) {
        if (T.mul(g, s) != T.mul(s, g)) {
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

  inline Subgroup centralizer(FiniteGroupTable const& T, Subgroup const& S) {
    return centralizer(T, whole_group(T), S);
  }

  inline Subgroup center(FiniteGroupTable const& T, Subgroup const& H) {
    return centralizer(T, H, H);
  }

  /// N_ambient(K) = {g in ambient : K^g = K}.
  inline Subgroup normalizer(FiniteGroupTable const& T,
                             Subgroup const&         ambient,
                             Subgroup const&         K) {
    std::vector<Index> members;
    for (auto g : ambient.members()) {
      bool ok = true;
      for (auto k : K.generators()) {
        if (!K.contains(T.conj(k, g))) {
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

  /// K^g as a member list (sorted).
  inline std::vector<Index> conjugate_members(FiniteGroupTable const& T,
                                              Subgroup const&         K,
                                              Index                   g) {
    std::vector<Index> out;
    out.reserve(K.order());
    auto gi = T.inv(g);
    for (auto k : K.members()) {
      out.push_back(T.mul(T.mul(gi, k), g));
    }
    std::sort(out.begin(), out.end());
    return out;
  }

  /// G/N carried as a coset table over the parent plus an abstract table
  /// for the quotient, generated by the images of the parent's generators.
  struct QuotientGroup {
    Subgroup           kernel;
    std::vector<Index> coset_of;        // parent index -> quotient index
    std::vector<Index> representative;  // quotient index -> parent index
    FiniteGroupTable   table;

    Index image(Index g) const {
      return coset_of[g];
    }

    /// Full preimage of a subgroup of the quotient.
    Subgroup preimage(FiniteGroupTable const& parent, Subgroup const& Q) const {
      std::vector<Index> members;
      for (Index g = 0; g < coset_of.size(); ++g) {
        if (Q.contains(coset_of[g])) {
          members.push_back(g);
        }
      }
      return subgroup_from_members(parent, members);
    }

    /// Image of a subgroup of the parent.
    Subgroup image(Subgroup const& H) const {
      std::vector<Index> seeds;
      for (auto h : H.generators()) {
        seeds.push_back(coset_of[h]);
      }
      return subgroup_generated(table, seeds);
    }
  };

  /// G/N for N normal in the whole table. Throws NotNormal otherwise.
  inline QuotientGroup quotient(FiniteGroupTable const& T, Subgroup const& N) {
    if (!is_normal(T, N)) {
      fail(ErrorKind::NotNormal, "subgroup is not normal");
    }
    constexpr Index    kNone = static_cast<Index>(-1);
    std::vector<Index> coset(T.order(), kNone);
    std::vector<Index> reps;
    for (Index g = 0; g < T.order(); ++g) {
      if (coset[g] != kNone) {
        continue;
      }
      auto id = static_cast<Index>(reps.size());
      reps.push_back(g);
      for (auto n : N.members()) {
        coset[T.mul(g, n)] = id;
      }
    }
    auto [Q, index] = FiniteGroupTable::from_cayley_graph(
        reps.size(),
        coset[0],
        T.symbols(),
        [&](std::size_t c, std::size_t s) {
          return static_cast<std::size_t>(coset[T.right_mul_symbol(reps[c], s)]);
        },
        [&](std::size_t c) { return static_cast<std::size_t>(coset[T.inv(reps[c])]); },
        T.generators().size());
    QuotientGroup out;
    out.kernel = N;
    out.coset_of.resize(T.order());
    out.representative.assign(reps.size(), 0);
    for (Index g = 0; g < T.order(); ++g) {
      out.coset_of[g] = index[coset[g]];
    }
    for (std::size_t c = 0; c < reps.size(); ++c) {
      out.representative[index[c]] = reps[c];
    }
    out.table = std::move(Q);
    return out;
  }

}  // namespace solgrowth

#endif  // SOLGROWTH_SUBGROUP_HPP_
