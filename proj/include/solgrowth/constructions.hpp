#ifndef SOLGROWTH_CONSTRUCTIONS_HPP_
#define SOLGROWTH_CONSTRUCTIONS_HPP_

#include <cstddef>
#include <cstdint>
#include <numeric>
#include <vector>

#include "solgrowth/element.hpp"
#include "solgrowth/error.hpp"
#include "solgrowth/table.hpp"

namespace solgrowth {

  namespace detail {

    inline std::uint32_t perm_degree(GroupElement const& g) {
      return static_cast<std::uint32_t>(g.as<Permutation>().images.size());
    }

    inline void require_variant(GenSet const& X, Variant v, char const* what) {
      X.validate();
      if (X.elements.front().variant() != v) {
        fail(ErrorKind::MixedVariants,
             std::string(what) + " expects " + std::string(to_string(v)) + " generators");
      }
    }

    inline std::uint64_t ipow(std::uint64_t b, std::uint32_t e) {
      std::uint64_t r = 1;
      while (e-- > 0) {
        r *= b;
      }
      return r;
    }

    // Union of the orbits of point 0 under the generators.
    inline std::vector<std::uint32_t> orbit(std::vector<GroupElement> const& gens,
                                            std::uint32_t                    start) {
      auto const        m = perm_degree(gens.front());
      std::vector<bool> seen(m, false);
      std::vector<std::uint32_t> out{start};
      seen[start] = true;
      for (std::size_t i = 0; i < out.size(); ++i) {
        for (auto const& g : gens) {
          auto y = g.as<Permutation>().images[out[i]];
          if (!seen[y]) {
            seen[y] = true;
            out.push_back(y);
          }
        }
      }
      return out;
    }

  }  // namespace detail

  inline bool is_transitive(GenSet const& X) {
    detail::require_variant(X, Variant::Permutation, "is_transitive");
    return detail::orbit(X.elements, 0).size() == detail::perm_degree(X.elements.front());
  }

  inline GenSet symmetric_group(std::uint32_t n) {
    if (n < 2) {
      fail(ErrorKind::Trivial, "Sym(n) needs n >= 2");
    }
    std::vector<std::uint32_t> t(n), c(n);
    std::iota(t.begin(), t.end(), 0u);
    std::swap(t[0], t[1]);
    for (std::uint32_t i = 0; i < n; ++i) {
      c[i] = (i + 1) % n;
    }
    if (n == 2) {
      return GenSet({GroupElement::permutation(t)});
    }
    return GenSet({GroupElement::permutation(t), GroupElement::permutation(c)});
  }

  inline GenSet cyclic_group(std::uint32_t n) {
    if (n < 2) {
      fail(ErrorKind::Trivial, "C_n needs n >= 2");
    }
    std::vector<std::uint32_t> c(n);
    for (std::uint32_t i = 0; i < n; ++i) {
      c[i] = (i + 1) % n;
    }
    return GenSet({GroupElement::permutation(c)});
  }

  /// Regular permutation action of a matrix over F_p on the p^n vectors of
  /// F_p^n (vector v numbered sum v_j p^j), acting on row vectors.
  inline GroupElement matrix_as_permutation(GroupElement const& g) {
    auto const&   m = g.as<MatrixFp>();
    auto const    N = detail::ipow(m.p, m.n);
    if (N > 65536) {
      fail(ErrorKind::CapExceeded, "matrix permutation action too large");
    }
    std::vector<std::uint32_t> im(N);
    std::vector<std::uint32_t> v(m.n), w(m.n);
    for (std::uint64_t x = 0; x < N; ++x) {
      auto rest = x;
      for (std::uint32_t j = 0; j < m.n; ++j) {
        v[j] = rest % m.p;
        rest /= m.p;
      }
      std::uint64_t code = 0, place = 1;
      for (std::uint32_t j = 0; j < m.n; ++j) {
        std::uint64_t s = 0;
        for (std::uint32_t i = 0; i < m.n; ++i) {
          s += static_cast<std::uint64_t>(v[i]) * m.entries[i * m.n + j];
        }
        code += (s % m.p) * place;
        place *= m.p;
      }
      im[x] = static_cast<std::uint32_t>(code);
    }
    return GroupElement::permutation(std::move(im));
  }

  /// Permutation matrix of pi over F_p, with the given block size: block i
  /// goes to block pi(i).
  inline GroupElement block_permutation_matrix(GroupElement const& pi,
                                               std::uint32_t       block,
                                               std::uint32_t       p) {
    auto const& im = pi.as<Permutation>().images;
    auto const  t  = static_cast<std::uint32_t>(im.size());
    auto const  n  = t * block;
    std::vector<std::uint32_t> e(static_cast<std::size_t>(n) * n, 0);
    for (std::uint32_t i = 0; i < t; ++i) {
      for (std::uint32_t r = 0; r < block; ++r) {
        e[(i * block + r) * n + im[i] * block + r] = 1;
      }
    }
    return GroupElement::matrix_fp(n, p, std::move(e));
  }

  /// Block-diagonal matrix with g in block `slot` of `blocks` and identity
  /// elsewhere.
  inline GroupElement embed_block(GroupElement const& g,
                                  std::uint32_t       slot,
                                  std::uint32_t       blocks) {
    auto const& m = g.as<MatrixFp>();
    auto const  n = m.n * blocks;
    std::vector<std::uint32_t> e(static_cast<std::size_t>(n) * n, 0);
    for (std::uint32_t i = 0; i < n; ++i) {
      e[i * n + i] = 1;
    }
    auto const off = slot * m.n;
    for (std::uint32_t i = 0; i < m.n; ++i) {
      for (std::uint32_t j = 0; j < m.n; ++j) {
        e[(off + i) * n + off + j] = m.entries[i * m.n + j];
      }
    }
    return GroupElement::matrix_fp(n, m.p, std::move(e));
  }

  /// Permutation wreath product A wr B on a * b points (imprimitive action):
  /// A's generators act on the first block, B's generators permute blocks.
  inline GenSet wreath_product(GenSet const& A, GenSet const& B) {
    detail::require_variant(A, Variant::Permutation, "wreath_product");
    detail::require_variant(B, Variant::Permutation, "wreath_product");
    if (!is_transitive(B)) {
      fail(ErrorKind::NotTransitive, "top group of a wreath product must be transitive");
    }
    auto const a = detail::perm_degree(A.elements.front());
    auto const b = detail::perm_degree(B.elements.front());
    std::vector<GroupElement> gens;
    for (auto const& x : A.elements) {
      std::vector<std::uint32_t> im(a * b);
      std::iota(im.begin(), im.end(), 0u);
      auto const& ax = x.as<Permutation>().images;
      for (std::uint32_t j = 0; j < a; ++j) {
        im[j] = ax[j];
      }
      gens.push_back(GroupElement::permutation(std::move(im)));
    }
    for (auto const& y : B.elements) {
      std::vector<std::uint32_t> im(a * b);
      auto const& by = y.as<Permutation>().images;
      for (std::uint32_t i = 0; i < b; ++i) {
        for (std::uint32_t j = 0; j < a; ++j) {
          im[i * a + j] = by[i] * a + j;
        }
      }
      gens.push_back(GroupElement::permutation(std::move(im)));
    }
    return GenSet(std::move(gens));
  }

  inline GenSet wreath_product(FiniteGroupTable const& A, FiniteGroupTable const& B) {
    return wreath_product(A.generating_set(), B.generating_set());
  }

  /// Matrix wreath product L wr M inside GL_{n t}(p): L in the first diagonal
  /// block, M (transitive on t points) permuting the blocks.
  inline GenSet matrix_wreath_product(GenSet const& L, GenSet const& M) {
    detail::require_variant(L, Variant::MatrixFp, "matrix_wreath_product");
    detail::require_variant(M, Variant::Permutation, "matrix_wreath_product");
    if (!is_transitive(M)) {
      fail(ErrorKind::NotTransitive, "top group of a wreath product must be transitive");
    }
    auto const& m0 = L.elements.front().as<MatrixFp>();
    auto const  t  = detail::perm_degree(M.elements.front());
    std::vector<GroupElement> gens;
    for (auto const& x : L.elements) {
      gens.push_back(embed_block(x, 0, t));
    }
    for (auto const& y : M.elements) {
      gens.push_back(block_permutation_matrix(y, m0.n, m0.p));
    }
    return GenSet(std::move(gens));
  }

  /// V x| H for H <= GL_n(p), as permutations of the p^n affine points:
  /// translations by the standard basis vectors, then H's linear parts.
  inline GenSet affine_semidirect(std::uint32_t n, std::uint32_t p, GenSet const& H) {
    std::vector<GroupElement> gens;
    auto const                N = detail::ipow(p, n);
    if (N > 65536) {
      fail(ErrorKind::CapExceeded, "affine action too large");
    }
    std::uint64_t place = 1;
    for (std::uint32_t k = 0; k < n; ++k, place *= p) {
      std::vector<std::uint32_t> im(N);
      for (std::uint64_t x = 0; x < N; ++x) {
        auto digit = (x / place) % p;
        im[x] = static_cast<std::uint32_t>(x - digit * place + ((digit + 1) % p) * place);
      }
      gens.push_back(GroupElement::permutation(std::move(im)));
    }
    for (auto const& h : H.elements) {
      if (h.variant() != Variant::MatrixFp || h.as<MatrixFp>().n != n
          || h.as<MatrixFp>().p != p) {
        fail(ErrorKind::MixedVariants, "linear part must be an n x n matrix over F_p");
      }
      if (!h.is_identity()) {
        gens.push_back(matrix_as_permutation(h));
      }
    }
    return GenSet(std::move(gens));
  }

  inline GenSet affine_semidirect(std::uint32_t n, std::uint32_t p) {
    return affine_semidirect(n, p, GenSet{});
  }

  /// G x H. Permutation groups act on disjoint point sets; matrix groups over
  /// the same field go block-diagonal; anything else is first converted to
  /// its permutation action on vectors.
  inline GenSet direct_product(GenSet const& A, GenSet const& B) {
    A.validate();
    B.validate();
    auto const& a0 = A.elements.front();
    auto const& b0  = B.elements.front();
    bool const  one = A.allow_identity || B.allow_identity;
    if (a0.variant() == Variant::MatrixFp && b0.variant() == Variant::MatrixFp
        && a0.as<MatrixFp>().p == b0.as<MatrixFp>().p) {
      auto const na = a0.as<MatrixFp>().n, nb = b0.as<MatrixFp>().n;
      auto const p  = a0.as<MatrixFp>().p;
      auto const n  = na + nb;
      std::vector<GroupElement> gens;
      auto place = [&](GroupElement const& g, std::uint32_t off) {
        auto const& m = g.as<MatrixFp>();
        std::vector<std::uint32_t> e(static_cast<std::size_t>(n) * n, 0);
        for (std::uint32_t i = 0; i < n; ++i) {
          e[i * n + i] = 1;
        }
        for (std::uint32_t i = 0; i < m.n; ++i) {
          for (std::uint32_t j = 0; j < m.n; ++j) {
            e[(off + i) * n + off + j] = m.entries[i * m.n + j];
          }
        }
        return GroupElement::matrix_fp(n, p, std::move(e));
      };
      for (auto const& g : A.elements) {
        gens.push_back(place(g, 0));
      }
      for (auto const& g : B.elements) {
        gens.push_back(place(g, na));
      }
      return GenSet(std::move(gens), true, one);
    }
    auto as_perms = [](GenSet const& X) {
      std::vector<GroupElement> out;
      for (auto const& g : X.elements) {
        switch (g.variant()) {
          case Variant::Permutation: out.push_back(g); break;
          case Variant::MatrixFp: out.push_back(matrix_as_permutation(g)); break;
          default:
            fail(ErrorKind::MixedVariants,
                 "direct product supports permutation and F_p-matrix factors");
        }
      }
      return out;
    };
    auto       pa = as_perms(A);
    auto       pb = as_perms(B);
    auto const da = detail::perm_degree(pa.front());
    auto const db = detail::perm_degree(pb.front());
    std::vector<GroupElement> gens;
    for (auto const& g : pa) {
      std::vector<std::uint32_t> im(da + db);
      std::iota(im.begin(), im.end(), 0u);
      auto const& gi = g.as<Permutation>().images;
      std::copy(gi.begin(), gi.end(), im.begin());
      gens.push_back(GroupElement::permutation(std::move(im)));
    }
    for (auto const& g : pb) {
      std::vector<std::uint32_t> im(da + db);
      std::iota(im.begin(), im.end(), 0u);
      auto const& gi = g.as<Permutation>().images;
      for (std::uint32_t j = 0; j < db; ++j) {
        im[da + j] = da + gi[j];
      }
      gens.push_back(GroupElement::permutation(std::move(im)));
    }
    return GenSet(std::move(gens), true, one);
  }

  inline GenSet direct_power(GenSet const& A, std::uint32_t k) {
    if (k == 0) {
      fail(ErrorKind::Trivial, "direct power needs k >= 1");
    }
    GenSet out = A;
    for (std::uint32_t i = 1; i < k; ++i) {
      out = direct_product(out, A);
    }
    return out;
  }

  /// Permutation group generated by the leaf actions of tree automorphisms.
  inline GenSet leaf_actions(GenSet const& X) {
    detail::require_variant(X, Variant::TreeAuto, "leaf_actions");
    std::vector<GroupElement> gens;
    for (auto const& g : X.elements) {
      gens.push_back(g.leaf_action());
    }
    return GenSet(std::move(gens));
  }

}  // namespace solgrowth

#endif  // SOLGROWTH_CONSTRUCTIONS_HPP_
