#ifndef SOLGROWTH_LINEAR_HPP_
#define SOLGROWTH_LINEAR_HPP_

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <numeric>
#include <optional>
#include <set>
#include <vector>

#include "solgrowth/element.hpp"
#include "solgrowth/error.hpp"
#include "solgrowth/table.hpp"

namespace solgrowth {

  inline constexpr std::size_t kMaxSpinLines = 1'000'000;

  namespace detail {

    using Vec = std::vector<std::uint32_t>;

    // Row vector times matrix over F_p.
    inline Vec vec_mul(Vec const& v, MatrixFp const& m) {
      Vec out(m.n, 0);
      for (std::uint32_t i = 0; i < m.n; ++i) {
        if (!v[i]) {
          continue;
        }
        for (std::uint32_t j = 0; j < m.n; ++j) {
          out[j] = static_cast<std::uint32_t>(
              (out[j] + static_cast<std::uint64_t>(v[i]) * m.entries[i * m.n + j]) % m.p);
        }
      }
      return out;
    }

    // Echelon basis over F_p; each row is normalised to a leading 1 at a
    // distinct pivot column.
    struct Echelon {
      std::uint32_t         p;
      std::vector<Vec>      rows;
      std::vector<std::uint32_t> pivots;

      // Adds v if independent; returns whether the span grew.
      bool add(Vec v) {
        for (std::size_t r = 0; r < rows.size(); ++r) {
          auto const c = pivots[r];
          if (auto f = v[c]) {
            for (std::size_t j = 0; j < v.size(); ++j) {
              v[j] = static_cast<std::uint32_t>(
                  (v[j] + static_cast<std::uint64_t>(p - f) * rows[r][j]) % p);
            }
          }
        }
        auto it = std::find_if(v.begin(), v.end(), [](auto x) { return x != 0; });
        if (it == v.end()) {
          return false;
        }
        auto const c   = static_cast<std::uint32_t>(it - v.begin());
        auto const inv = inverse_mod(v[c], p);
        for (auto& x : v) {
          x = static_cast<std::uint32_t>(static_cast<std::uint64_t>(x) * inv % p);
        }
        // keep the basis fully reduced so later reductions see every pivot
        for (auto& row : rows) {
          if (auto f = row[c]) {
            for (std::size_t j = 0; j < v.size(); ++j) {
              row[j] = static_cast<std::uint32_t>(
                  (row[j] + static_cast<std::uint64_t>(p - f) * v[j]) % p);
            }
          }
        }
        rows.push_back(std::move(v));
        pivots.push_back(c);
        return true;
      }
    };

    inline std::vector<MatrixFp> matrices(std::vector<GroupElement> const& gens) {
      std::vector<MatrixFp> out;
      for (auto const& g : gens) {
        if (g.variant() != Variant::MatrixFp) {
          fail(ErrorKind::MixedVariants, "irreducibility needs F_p matrices");
        }
        out.push_back(g.as<MatrixFp>());
      }
      return out;
    }

  }  // namespace detail

  /// Smallest invariant subspace containing v (the spin of v), as a basis.
  inline std::vector<std::vector<std::uint32_t>>
  spin(std::vector<GroupElement> const& gens, std::vector<std::uint32_t> const& v) {
    auto const     ms = detail::matrices(gens);
    auto const     p  = ms.empty() ? 2u : ms.front().p;
    detail::Echelon E{p, {}, {}};
    std::vector<detail::Vec> todo;
    if (E.add(v)) {
      todo.push_back(v);
    }
    while (!todo.empty()) {
      auto w = todo.back();
      todo.pop_back();
      for (auto const& m : ms) {
        auto u = detail::vec_mul(w, m);
        if (E.add(u)) {
          todo.push_back(std::move(u));
        }
      }
    }
    return E.rows;
  }

  /// A proper nonzero invariant subspace of F_p^n, if there is one, found by
  /// spinning every line.
  inline std::optional<std::vector<std::vector<std::uint32_t>>>
  invariant_subspace(std::vector<GroupElement> const& gens, std::uint32_t n, std::uint32_t p) {
    for (auto const& g : gens) {
      if (g.variant() != Variant::MatrixFp || g.as<MatrixFp>().n != n
          || g.as<MatrixFp>().p != p) {
        fail(ErrorKind::MixedVariants, "generators must lie in GL_n(p)");
      }
    }
    std::size_t lines = 1;
    for (std::uint32_t i = 1; i < n; ++i) {
      lines = lines * p + 1;
      if (lines > kMaxSpinLines) {
        fail(ErrorKind::CapExceeded, "too many lines to spin");
      }
    }
    // a line is numbered by its vector with leading coordinate 1
    for (std::uint32_t lead = 0; lead < n; ++lead) {
      std::size_t tail = 1;
      for (std::uint32_t j = lead + 1; j < n; ++j) {
        tail *= p;
      }
      for (std::size_t code = 0; code < tail; ++code) {
        detail::Vec v(n, 0);
        v[lead]   = 1;
        auto rest = code;
        for (std::uint32_t j = lead + 1; j < n; ++j) {
          v[j] = static_cast<std::uint32_t>(rest % p);
          rest /= p;
        }
        auto S = spin(gens, v);
        if (S.size() < n) {
          return S;
        }
      }
    }
    return std::nullopt;
  }

  inline bool is_irreducible(std::vector<GroupElement> const& gens,
                             std::uint32_t                    n,
                             std::uint32_t                    p) {
    return !invariant_subspace(gens, n, p);
  }

  inline bool is_irreducible(GenSet const& X) {
    auto const& m = X.elements.front();
    if (m.variant() != Variant::MatrixFp) {
      fail(ErrorKind::MixedVariants, "irreducibility needs F_p matrices");
    }
    return is_irreducible(X.elements, m.as<MatrixFp>().n, m.as<MatrixFp>().p);
  }

  // Permutation structure ----------------------------------------------------

  using BlockSystem = std::vector<std::vector<std::uint32_t>>;

  struct PermutationStructure {
    std::uint32_t            degree = 0;
    bool                     transitive = false;
    bool                     primitive  = false;
    std::vector<BlockSystem> block_systems;  // minimal nontrivial systems
  };

  namespace detail {

    struct UnionFind {
      std::vector<std::uint32_t> parent;

      explicit UnionFind(std::uint32_t n) : parent(n) {
        std::iota(parent.begin(), parent.end(), 0u);
      }

      std::uint32_t find(std::uint32_t x) {
        while (parent[x] != x) {
          x = parent[x] = parent[parent[x]];
        }
        return x;
      }

      bool unite(std::uint32_t a, std::uint32_t b) {
        a = find(a);
        b = find(b);
        if (a == b) {
          return false;
        }
        parent[std::max(a, b)] = std::min(a, b);
        return true;
      }
    };

    // Finest block system with a and b in one block.
    inline BlockSystem block_closure(std::vector<Vec> const& perms,
                                     std::uint32_t           n,
                                     std::uint32_t           a,
                                     std::uint32_t           b) {
      UnionFind uf(n);
      std::vector<std::pair<std::uint32_t, std::uint32_t>> todo{{a, b}};
      uf.unite(a, b);
      while (!todo.empty()) {
        auto [x, y] = todo.back();
        todo.pop_back();
        for (auto const& g : perms) {
          if (uf.unite(g[x], g[y])) {
            todo.emplace_back(g[x], g[y]);
          }
        }
      }
      std::vector<std::vector<std::uint32_t>> by_root(n);
      for (std::uint32_t i = 0; i < n; ++i) {
        by_root[uf.find(i)].push_back(i);
      }
      BlockSystem out;
      for (auto& blk : by_root) {
        if (!blk.empty()) {
          out.push_back(std::move(blk));
        }
      }
      return out;
    }

    // Every block of `fine` lies in a block of `coarse`.
    inline bool refines(BlockSystem const& fine, BlockSystem const& coarse) {
      for (auto const& f : fine) {
        bool inside = false;
        for (auto const& c : coarse) {
          if (std::includes(c.begin(), c.end(), f.begin(), f.end())) {
            inside = true;
            break;
          }
        }
        if (!inside) {
          return false;
        }
      }
      return true;
    }

  }  // namespace detail

  inline PermutationStructure permutation_structure(std::vector<GroupElement> const& gens) {
    PermutationStructure out;
    if (gens.empty()) {
      fail(ErrorKind::Trivial, "no generators");
    }
    std::vector<detail::Vec> perms;
    for (auto const& g : gens) {
      if (g.variant() != Variant::Permutation) {
        fail(ErrorKind::MixedVariants, "permutation structure needs permutations");
      }
      perms.push_back(g.as<Permutation>().images);
    }
    auto const n = static_cast<std::uint32_t>(perms.front().size());
    out.degree   = n;
    std::vector<bool>          seen(n, false);
    std::vector<std::uint32_t> orbit{0};
    seen[0] = true;
    for (std::size_t i = 0; i < orbit.size(); ++i) {
      for (auto const& g : perms) {
        if (!seen[g[orbit[i]]]) {
          seen[g[orbit[i]]] = true;
          orbit.push_back(g[orbit[i]]);
        }
      }
    }
    out.transitive = orbit.size() == n;
    if (!out.transitive) {
      return out;
    }
    std::set<BlockSystem> found;
    for (std::uint32_t b = 1; b < n; ++b) {
      auto sys = detail::block_closure(perms, n, 0, b);
      if (sys.size() > 1) {
        found.insert(std::move(sys));
      }
    }
    for (auto const& s : found) {
      bool minimal = true;
      for (auto const& t : found) {
        if (t != s && detail::refines(t, s)) {
          minimal = false;
          break;
        }
      }
      if (minimal) {
        out.block_systems.push_back(s);
      }
    }
    out.primitive = out.block_systems.empty();
    return out;
  }

  inline PermutationStructure permutation_structure(GenSet const& X) {
    return permutation_structure(X.elements);
  }

}  // namespace solgrowth

#endif  // SOLGROWTH_LINEAR_HPP_
