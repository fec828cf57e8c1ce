// Independent brute-force recomputations used as test oracles. They work
// straight from the definitions and share nothing with the library's
// algorithms beyond element multiplication.
#ifndef SOLGROWTH_TESTS_ORACLES_HPP_
#define SOLGROWTH_TESTS_ORACLES_HPP_

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <map>
#include <set>
#include <string>
#include <vector>

#include "solgrowth/element.hpp"
#include "solgrowth/table.hpp"

namespace oracle {

  using solgrowth::FiniteGroupTable;
  using solgrowth::GroupElement;
  using solgrowth::Index;

  // Closure of a set of elements under pairwise products (finite groups).
  inline std::set<std::string> closure(std::vector<GroupElement> const& seeds,
                                       GroupElement const&              one) {
    std::map<std::string, GroupElement> all{{one.encode(), one}};
    for (auto const& s : seeds) {
      all.emplace(s.encode(), s);
    }
    bool grew = true;
    while (grew) {
      grew = false;
      std::vector<GroupElement> cur;
      for (auto const& [k, v] : all) {
        cur.push_back(v);
      }
      for (auto const& a : cur) {
        for (auto const& b : cur) {
          auto c = a * b;
          if (all.emplace(c.encode(), c).second) {
            grew = true;
          }
        }
      }
    }
    std::set<std::string> out;
    for (auto const& [k, v] : all) {
      out.insert(k);
    }
    return out;
  }

  // Ball sizes by listing every word of length <= r over X u X^-1.
  inline std::vector<std::uint64_t> ball_sizes_by_words(std::vector<GroupElement> const& X,
                                                        std::size_t                      r) {
    std::vector<GroupElement> letters;
    for (auto const& x : X) {
      letters.push_back(x);
      letters.push_back(x.inverse());
    }
    std::set<std::string>     seen{X.front().identity().encode()};
    std::vector<GroupElement> layer{X.front().identity()};
    std::vector<std::uint64_t> out{1};
    for (std::size_t len = 1; len <= r; ++len) {
      std::vector<GroupElement> next;
      for (auto const& w : layer) {
        for (auto const& a : letters) {
          next.push_back(w * a);  // every word, duplicates included
          seen.insert(next.back().encode());
        }
      }
      layer = std::move(next);
      out.push_back(seen.size());
    }
    return out;
  }

  // Subgroup of a table as a sorted index list, by pairwise-product closure.
  inline std::vector<Index> table_closure(FiniteGroupTable const& T,
                                          std::vector<Index>      seeds) {
    std::set<Index> all(seeds.begin(), seeds.end());
    all.insert(0);
    bool grew = true;
    while (grew) {
      grew = false;
      std::vector<Index> cur(all.begin(), all.end());
      for (auto a : cur) {
        for (auto b : cur) {
          if (all.insert(T.mul(a, b)).second) {
            grew = true;
          }
        }
      }
    }
    return {all.begin(), all.end()};
  }

  // [A, B] as the closure of every commutator [a, b], a in A, b in B.
  inline std::vector<Index> commutator(FiniteGroupTable const&   T,
                                       std::vector<Index> const& A,
                                       std::vector<Index> const& B) {
    std::vector<Index> seeds;
    for (auto a : A) {
      for (auto b : B) {
        auto ai = T.inv(a), bi = T.inv(b);
        seeds.push_back(T.mul(T.mul(ai, bi), T.mul(a, b)));
      }
    }
    std::sort(seeds.begin(), seeds.end());
    seeds.erase(std::unique(seeds.begin(), seeds.end()), seeds.end());
    return table_closure(T, seeds);
  }

  inline std::vector<std::vector<Index>> derived_series(FiniteGroupTable const& T) {
    std::vector<Index> G(T.order());
    for (Index i = 0; i < T.order(); ++i) {
      G[i] = i;
    }
    std::vector<std::vector<Index>> s{G};
    while (s.back().size() > 1) {
      auto next = commutator(T, s.back(), s.back());
      if (next == s.back()) {
        break;
      }
      s.push_back(next);
    }
    return s;
  }

  inline std::vector<std::vector<Index>> lower_central_series(FiniteGroupTable const& T) {
    std::vector<Index> G(T.order());
    for (Index i = 0; i < T.order(); ++i) {
      G[i] = i;
    }
    std::vector<std::vector<Index>> s{G};
    while (s.back().size() > 1) {
      auto next = commutator(T, s.back(), G);
      if (next == s.back()) {
        break;
      }
      s.push_back(next);
    }
    return s;
  }

  // Conjugacy classes by conjugating with every element.
  inline std::vector<std::vector<Index>> classes(FiniteGroupTable const& T) {
    std::vector<std::vector<Index>> out;
    std::vector<bool>               done(T.order(), false);
    for (Index x = 0; x < T.order(); ++x) {
      if (done[x]) {
        continue;
      }
      std::set<Index> cls;
      for (Index g = 0; g < T.order(); ++g) {
        cls.insert(T.mul(T.mul(T.inv(g), x), g));
      }
      for (auto y : cls) {
        done[y] = true;
      }
      out.emplace_back(cls.begin(), cls.end());
    }
    return out;
  }

  // All normal subgroups: every union of classes that is closed under
  // products. Exponential in the number of classes; small groups only.
  inline std::set<std::vector<Index>> normal_subgroups(FiniteGroupTable const& T) {
    auto cls = classes(T);
    std::set<std::vector<Index>> out;
    auto const k = cls.size();
    for (std::uint64_t mask = 0; mask < (1ULL << k); ++mask) {
      if (!(mask & 1)) {
        continue;  // class of the identity
      }
      std::vector<bool> in(T.order(), false);
      std::vector<Index> members;
      for (std::size_t c = 0; c < k; ++c) {
        if (mask >> c & 1) {
          for (auto x : cls[c]) {
            in[x] = true;
            members.push_back(x);
          }
        }
      }
      bool closed = true;
      for (auto a : members) {
        for (auto b : members) {
          if (!in[T.mul(a, b)]) {
            closed = false;
            break;
          }
        }
        if (!closed) {
          break;
        }
      }
      if (closed) {
        std::sort(members.begin(), members.end());
        out.insert(members);
      }
    }
    return out;
  }

  // Every subgroup, by repeatedly adjoining one element to known subgroups.
  inline std::set<std::vector<Index>> all_subgroups(FiniteGroupTable const& T) {
    std::set<std::vector<Index>>    out{{0}};
    std::vector<std::vector<Index>> todo{{0}};
    while (!todo.empty()) {
      auto S = todo.back();
      todo.pop_back();
      std::set<Index> in(S.begin(), S.end());
      for (Index g = 0; g < T.order(); ++g) {
        if (in.count(g)) {
          continue;
        }
        auto seeds = S;
        seeds.push_back(g);
        auto H = table_closure(T, seeds);
        if (out.insert(H).second) {
          todo.push_back(H);
        }
      }
    }
    return out;
  }

  inline bool subset(std::vector<Index> const& a, std::vector<Index> const& b) {
    return std::includes(b.begin(), b.end(), a.begin(), a.end());
  }

  // Chief factors of every quotient: pairs N < M of normal subgroups with no
  // normal subgroup strictly between them.
  inline std::vector<std::pair<std::vector<Index>, std::vector<Index>>>
  chief_pairs(FiniteGroupTable const& T) {
    auto ns = normal_subgroups(T);
    std::vector<std::pair<std::vector<Index>, std::vector<Index>>> out;
    for (auto const& N : ns) {
      for (auto const& M : ns) {
        if (M.size() <= N.size() || !subset(N, M)) {
          continue;
        }
        bool cover = true;
        for (auto const& X : ns) {
          if (X.size() > N.size() && X.size() < M.size() && subset(N, X) && subset(X, M)) {
            cover = false;
            break;
          }
        }
        if (cover) {
          out.emplace_back(N, M);
        }
      }
    }
    return out;
  }

  // M/N equals its centralizer in G/N: g centralizes M/N iff [g, m] in N
  // for every m in M.
  inline bool self_centralizing(FiniteGroupTable const&   T,
                                std::vector<Index> const& N,
                                std::vector<Index> const& M) {
    std::set<Index> n(N.begin(), N.end()), m(M.begin(), M.end());
    for (Index g = 0; g < T.order(); ++g) {
      bool cent = true;
      for (auto x : M) {
        if (!n.count(T.comm(g, x))) {
          cent = false;
          break;
        }
      }
      if (cent != static_cast<bool>(m.count(g))) {
        return false;
      }
    }
    return true;
  }

  // mu as a pair (abelian steps, class-2 steps), straight from the
  // definition: minimise over every proper normal K of H with H/K abelian or
  // of class two, tested elementwise. Costs compared as long doubles.
  struct MuOracle {
    FiniteGroupTable const&                       T;
    std::map<std::vector<Index>, std::pair<int, int>> memo;

    static long double value(std::pair<int, int> v) {
      return v.first + v.second * (std::log(10.0L) / std::log(4.0L));
    }

    std::pair<int, int> operator()(std::vector<Index> const& H) {
      if (H.size() == 1) {
        return {0, 0};
      }
      if (auto it = memo.find(H); it != memo.end()) {
        return it->second;
      }
      // normal subgroups of H: unions of H-classes closed under products
      std::vector<std::vector<Index>> cls;
      std::set<Index>                 seen;
      for (auto x : H) {
        if (seen.count(x)) {
          continue;
        }
        std::set<Index> c;
        for (auto h : H) {
          c.insert(T.conj(x, h));
        }
        seen.insert(c.begin(), c.end());
        cls.emplace_back(c.begin(), c.end());
      }
      std::pair<int, int> best{1 << 20, 0};
      bool                have = false;
      for (std::uint64_t mask = 1; mask < (1ULL << cls.size()); mask += 2) {
        std::set<Index> k;
        for (std::size_t c = 0; c < cls.size(); ++c) {
          if (mask >> c & 1) {
            k.insert(cls[c].begin(), cls[c].end());
          }
        }
        if (k.size() == H.size() || H.size() % k.size() != 0) {
          continue;
        }
        bool closed = true;
        for (auto a : k) {
          for (auto b : k) {
            if (!k.count(T.mul(a, b))) {
              closed = false;
              break;
            }
          }
          if (!closed) {
            break;
          }
        }
        if (!closed) {
          continue;
        }
        bool abelian = true, class2 = true;
        for (auto x : H) {
          for (auto y : H) {
            auto c = T.comm(x, y);
            if (!k.count(c)) {
              abelian = false;
            }
            for (auto z : H) {
              if (!k.count(T.comm(c, z))) {
                class2 = false;
                break;
              }
            }
            if (!class2) {
              break;
            }
          }
          if (!class2) {
            break;
          }
        }
        if (!class2) {
          continue;
        }
        auto sub = (*this)(std::vector<Index>(k.begin(), k.end()));
        auto v   = abelian ? std::pair{sub.first + 1, sub.second}
                           : std::pair{sub.first, sub.second + 1};
        if (!have || value(v) < value(best) - 1e-12L) {
          best = v;
          have = true;
        }
      }
      memo[H] = best;
      return best;
    }
  };

  // |{(i, j) in Z^2 : |i| + |j| <= n}| by listing points.
  inline std::uint64_t lattice_ball(std::int64_t n) {
    std::uint64_t c = 0;
    for (std::int64_t i = -n; i <= n; ++i) {
      for (std::int64_t j = -n; j <= n; ++j) {
        if (std::abs(i) + std::abs(j) <= n) {
          ++c;
        }
      }
    }
    return c;
  }

  // Number of freely reduced words of length <= n on two letters, listed.
  inline std::uint64_t free_ball(int n) {
    std::uint64_t      total = 1;
    std::vector<int>   layer{-1};  // last letter of each word; -1 = empty
    for (int len = 1; len <= n; ++len) {
      std::vector<int> next;
      for (int last : layer) {
        for (int a = 0; a < 4; ++a) {
          if (last >= 0 && (a ^ 1) == last) {
            continue;  // a cancels the previous letter
          }
          next.push_back(a);
        }
      }
      total += next.size();
      layer = std::move(next);
    }
    return total;
  }

}  // namespace oracle

#endif  // SOLGROWTH_TESTS_ORACLES_HPP_
