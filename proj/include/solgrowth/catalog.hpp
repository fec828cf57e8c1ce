#ifndef SOLGROWTH_CATALOG_HPP_
#define SOLGROWTH_CATALOG_HPP_

#include <cstddef>
#include <cstdint>
#include <regex>
#include <string>
#include <vector>

#include "solgrowth/constructions.hpp"
#include "solgrowth/element.hpp"
#include "solgrowth/error.hpp"

namespace solgrowth {

  namespace detail {

    inline std::vector<std::uint64_t> prime_factors(std::uint64_t n) {
      std::vector<std::uint64_t> out;
      for (std::uint64_t r = 2; r * r <= n; ++r) {
        if (n % r == 0) {
          out.push_back(r);
          while (n % r == 0) {
            n /= r;
          }
        }
      }
      if (n > 1) {
        out.push_back(n);
      }
      return out;
    }

    inline std::uint32_t primitive_root(std::uint32_t p) {
      if (p == 2) {
        return 1;
      }
      auto const primes = prime_factors(p - 1);
      for (std::uint32_t g = 2; g < p; ++g) {
        bool ok = true;
        for (auto r : primes) {
          if (pow_mod(g, (p - 1) / r, p) == 1) {
            ok = false;
            break;
          }
        }
        if (ok) {
          return g;
        }
      }
      return 1;
    }

    inline GroupElement power(GroupElement const& g, std::uint64_t e) {
      GroupElement result = g.identity(), base = g;
      while (e > 0) {
        if (e & 1) {
          result = result * base;
        }
        base = base * base;
        e >>= 1;
      }
      return result;
    }

    inline GroupElement matrix(std::uint32_t n,
                               std::uint32_t p,
                               std::vector<std::uint32_t> e) {
      return GroupElement::matrix_fp(n, p, std::move(e));
    }

    inline GroupElement unit_plus(std::uint32_t n,
                                  std::uint32_t p,
                                  std::uint32_t i,
                                  std::uint32_t j,
                                  std::uint32_t value) {
      std::vector<std::uint32_t> e(n * n, 0);
      for (std::uint32_t k = 0; k < n; ++k) {
        e[k * n + k] = 1;
      }
      e[i * n + j] = (e[i * n + j] + value) % p;
      return matrix(n, p, std::move(e));
    }

  }  // namespace detail

  /// Companion matrix of the first primitive polynomial of degree k over F_p
  /// (lexicographic search): multiplication by t on F_{p^k} in the basis
  /// 1, t, ..., t^{k-1}. Its order is p^k - 1.
  inline GroupElement singer_cycle(std::uint32_t k, std::uint32_t p) {
    auto const q     = detail::ipow(p, k);
    auto const order = q - 1;
    auto const primes = detail::prime_factors(order);
    for (std::uint64_t code = 0; code < q; ++code) {
      std::vector<std::uint32_t> c(k);
      auto rest = code;
      for (std::uint32_t i = 0; i < k; ++i) {
        c[i] = rest % p;
        rest /= p;
      }
      if (c[0] == 0) {
        continue;
      }
      std::vector<std::uint32_t> e(k * k, 0);
      for (std::uint32_t i = 0; i + 1 < k; ++i) {
        e[i * k + i + 1] = 1;
      }
      for (std::uint32_t j = 0; j < k; ++j) {
        e[(k - 1) * k + j] = c[j];
      }
      auto C = GroupElement::matrix_fp(k, p, e);
      bool ok = true;
      for (auto r : primes) {
        if (detail::power(C, order / r).is_identity()) {
          ok = false;
          break;
        }
      }
      if (ok && detail::power(C, order).is_identity()) {
        return C;
      }
    }
    fail(ErrorKind::UnknownName, "no primitive polynomial found");
  }

  /// The Frobenius x -> x^p on F_{p^k}, in the basis used by singer_cycle.
  inline GroupElement frobenius(std::uint32_t k, std::uint32_t p) {
    auto const C = singer_cycle(k, p);
    std::vector<std::uint32_t> e(k * k);
    for (std::uint32_t i = 0; i < k; ++i) {
      auto const row = detail::power(C, static_cast<std::uint64_t>(i) * p);
      for (std::uint32_t j = 0; j < k; ++j) {
        e[i * k + j] = row.as<MatrixFp>().entries[j];
      }
    }
    return GroupElement::matrix_fp(k, p, std::move(e));
  }

  inline GenSet general_linear(std::uint32_t n, std::uint32_t p) {
    if (!detail::is_prime(p) || n == 0) {
      fail(ErrorKind::UnknownName, "GL_n(p) needs n >= 1 and p prime");
    }
    std::vector<GroupElement> gens;
    auto const w = detail::primitive_root(p);
    if (p > 2) {
      std::vector<std::uint32_t> e(n * n, 0);
      for (std::uint32_t k = 0; k < n; ++k) {
        e[k * n + k] = 1;
      }
      e[0] = w;
      gens.push_back(detail::matrix(n, p, std::move(e)));
    }
    for (std::uint32_t i = 0; i + 1 < n; ++i) {
      gens.push_back(detail::unit_plus(n, p, i, i + 1, 1));
      gens.push_back(detail::unit_plus(n, p, i + 1, i, 1));
    }
    if (gens.empty()) {
      fail(ErrorKind::Trivial, "GL_1(2) is trivial");
    }
    return GenSet(std::move(gens));
  }

  inline GenSet special_linear(std::uint32_t n, std::uint32_t p) {
    if (!detail::is_prime(p) || n < 2) {
      fail(ErrorKind::UnknownName, "SL_n(p) needs n >= 2 and p prime");
    }
    std::vector<GroupElement> gens;
    for (std::uint32_t i = 0; i + 1 < n; ++i) {
      gens.push_back(detail::unit_plus(n, p, i, i + 1, 1));
      gens.push_back(detail::unit_plus(n, p, i + 1, i, 1));
    }
    return GenSet(std::move(gens));
  }

  /// Q8 inside SL_2(3): i = [[0,1],[2,0]], j = [[1,1],[1,2]].
  inline GenSet quaternion_q8() {
    return GenSet({detail::matrix(2, 3, {0, 1, 2, 0}), detail::matrix(2, 3, {1, 1, 1, 2})});
  }

  /// Semilinear group GammaL_1(p^k) = <singer, frobenius> inside GL_k(p).
  inline GenSet gamma_l1(std::uint32_t k, std::uint32_t p) {
    std::vector<GroupElement> gens{singer_cycle(k, p)};
    if (k > 1) {
      gens.push_back(frobenius(k, p));
    }
    return GenSet(std::move(gens));
  }

  inline GenSet alternating_group(std::uint32_t n) {
    if (n < 3) {
      fail(ErrorKind::Trivial, "A_n needs n >= 3");
    }
    std::vector<GroupElement> gens;
    for (std::uint32_t i = 2; i < n; ++i) {
      std::vector<std::uint32_t> im(n);
      std::iota(im.begin(), im.end(), 0u);
      im[0] = 1;
      im[1] = i;
      im[i] = 0;
      gens.push_back(GroupElement::permutation(std::move(im)));
    }
    return GenSet(std::move(gens));
  }

  inline GenSet dihedral_group(std::uint32_t order) {
    if (order < 4 || order % 2 != 0) {
      fail(ErrorKind::UnknownName, "dihedral group order must be even and >= 4");
    }
    std::uint32_t m = order / 2;
    if (m == 2) {
      return GenSet({GroupElement::permutation({1, 0, 3, 2}),
                     GroupElement::permutation({2, 3, 0, 1})});
    }
    std::vector<std::uint32_t> r(m), s(m);
    for (std::uint32_t i = 0; i < m; ++i) {
      r[i] = (i + 1) % m;
      s[i] = (m - i) % m;
    }
    return GenSet({GroupElement::permutation(r), GroupElement::permutation(s)});
  }

  /// AGL_1(q): the affine maps x -> ax + b of F_q (q a prime power).
  inline GenSet affine_line(std::uint32_t q) {
    if (q < 2) {
      fail(ErrorKind::UnknownName, "AGL_1(q) needs q >= 2");
    }
    std::uint32_t p = 2;
    while (q % p != 0) {
      ++p;
    }
    std::uint32_t k = 0;
    for (std::uint32_t r = q; r > 1; r /= p) {
      if (r % p != 0) {
        fail(ErrorKind::UnknownName, "AGL_1(q) needs a prime power q");
      }
      ++k;
    }
    if (q == 2) {
      return cyclic_group(2);
    }
    return affine_semidirect(k, p, GenSet({singer_cycle(k, p)}));
  }

  /// Generators of the depth-d truncation of the iterated wreath product
  /// S4 wr S4 wr ... : a transposition and a 4-cycle at the first vertex of
  /// each level.
  inline GenSet s4_tower(std::uint32_t depth);
  inline GenSet s4_tower_derived(std::uint32_t depth);

  namespace detail {

    inline std::uint32_t parse_u32(std::string const& s) {
      return static_cast<std::uint32_t>(std::stoul(s));
    }

    // Splits "A<sep>B" at the last top-level occurrence of sep.
    inline bool split_top(std::string const& name,
                          std::string const& sep,
                          std::string&       left,
                          std::string&       right) {
      int         depth = 0;
      std::size_t found = std::string::npos;
      for (std::size_t i = 0; i < name.size(); ++i) {
        if (name[i] == '(') {
          ++depth;
        } else if (name[i] == ')') {
          --depth;
        } else if (depth == 0 && name.compare(i, sep.size(), sep) == 0) {
          found = i;
        }
      }
      if (found == std::string::npos || found == 0
          || found + sep.size() >= name.size()) {
        return false;
      }
      left  = name.substr(0, found);
      right = name.substr(found + sep.size());
      return true;
    }

  }  // namespace detail

  /// Named groups. Grammar: A x B (direct product), A wr B (wreath product;
  /// matrix base gives the monomial-style matrix wreath, permutation base the
  /// imprimitive permutation wreath), A^k (direct power), plus atoms:
  ///   C<n>  S<n>  A<n>  D<order>  Q8  GL<n>(<p>)  SL<n>(<p>)  AGL1(<q>)
  ///   AGL<d>(<p>)  F<p>^<n>  F3^2:Q8  F2^3:C7  F2^3:(7:3)  (7:3)  (31:5)
  ///   GammaL1(<p>^<k>)  S4tower(<d>)  S4tower'(<d>)
  ///   Z^2  Heisenberg  Sanov  Lamplighter   (infinite)
  inline GenSet catalog(std::string const& raw) {
    std::string name;
    for (char c : raw) {
      if (c != ' ') {
        name.push_back(c);
      }
    }
    std::smatch m;
    std::string left, right;
    if (name.size() > 2 && name.front() == '(' && name.back() == ')') {
      // "(A)" is A unless the parentheses are part of an atom like (7:3)
      int  depth = 0;
      bool outer = true;
      for (std::size_t i = 0; i + 1 < name.size(); ++i) {
        depth += name[i] == '(' ? 1 : name[i] == ')' ? -1 : 0;
        if (depth == 0) {
          outer = false;
          break;
        }
      }
      if (outer && name.find(':') == std::string::npos) {
        return catalog(name.substr(1, name.size() - 2));
      }
    }
    if (detail::split_top(name, "x", left, right)) {
      return direct_product(catalog(left), catalog(right));
    }
    if (detail::split_top(name, "wr", left, right)) {
      auto A = catalog(left);
      auto B = catalog(right);
      if (A.elements.front().variant() == Variant::MatrixFp) {
        return matrix_wreath_product(A, B);
      }
      return wreath_product(A, B);
    }
    if (std::regex_match(name, m, std::regex(R"(F(\d+)\^(\d+))"))) {
      return affine_semidirect(detail::parse_u32(m[2]), detail::parse_u32(m[1]));
    }
    if (std::regex_match(name, m, std::regex(R"((.+)\^(\d+))"))
        && name.find(':') == std::string::npos && name.rfind("GammaL1", 0) != 0
        && name != "Z^2") {
      return direct_power(catalog(m[1]), detail::parse_u32(m[2]));
    }
    if (std::regex_match(name, m, std::regex(R"(C(\d+))"))) {
      return cyclic_group(detail::parse_u32(m[1]));
    }
    if (std::regex_match(name, m, std::regex(R"(S(\d+))"))) {
      return symmetric_group(detail::parse_u32(m[1]));
    }
    if (std::regex_match(name, m, std::regex(R"(A(\d+))"))) {
      return alternating_group(detail::parse_u32(m[1]));
    }
    if (std::regex_match(name, m, std::regex(R"(D(\d+))"))) {
      return dihedral_group(detail::parse_u32(m[1]));
    }
    if (name == "Q8") {
      return quaternion_q8();
    }
    if (std::regex_match(name, m, std::regex(R"(GL(\d+)\((\d+)\))"))) {
      return general_linear(detail::parse_u32(m[1]), detail::parse_u32(m[2]));
    }
    if (std::regex_match(name, m, std::regex(R"(SL(\d+)\((\d+)\))"))) {
      return special_linear(detail::parse_u32(m[1]), detail::parse_u32(m[2]));
    }
    if (std::regex_match(name, m, std::regex(R"(AGL1\((\d+)\))"))) {
      return affine_line(detail::parse_u32(m[1]));
    }
    if (std::regex_match(name, m, std::regex(R"(AGL(\d+)\((\d+)\))"))) {
      auto d = detail::parse_u32(m[1]), p = detail::parse_u32(m[2]);
      return affine_semidirect(d, p, general_linear(d, p));
    }
    if (std::regex_match(name, m, std::regex(R"(GammaL1\((\d+)\^(\d+)\))"))) {
      return gamma_l1(detail::parse_u32(m[2]), detail::parse_u32(m[1]));
    }
    if (name == "F3^2:Q8") {
      return affine_semidirect(2, 3, quaternion_q8());
    }
    if (name == "F2^3:C7") {
      return affine_semidirect(3, 2, GenSet({singer_cycle(3, 2)}));
    }
    if (name == "F2^3:(7:3)") {
      return affine_semidirect(3, 2, gamma_l1(3, 2));
    }
    if (name == "(7:3)") {
      return gamma_l1(3, 2);
    }
    if (name == "(31:5)") {
      return gamma_l1(5, 2);
    }
    if (std::regex_match(name, m, std::regex(R"(S4tower\((\d+)\))"))) {
      return s4_tower(detail::parse_u32(m[1]));
    }
    if (std::regex_match(name, m, std::regex(R"(S4tower'\((\d+)\))"))) {
      return s4_tower_derived(detail::parse_u32(m[1]));
    }
    if (name == "Z^2") {
      return GenSet({GroupElement::matrix_z(3, {1, 0, 1, 0, 1, 0, 0, 0, 1}),
                     GroupElement::matrix_z(3, {1, 0, 0, 0, 1, 1, 0, 0, 1})});
    }
    if (name == "Heisenberg") {
      return GenSet({GroupElement::matrix_z(3, {1, 1, 0, 0, 1, 0, 0, 0, 1}),
                     GroupElement::matrix_z(3, {1, 0, 0, 0, 1, 1, 0, 0, 1})});
    }
    if (name == "Sanov") {
      return GenSet({GroupElement::matrix_z(2, {1, 2, 0, 1}),
                     GroupElement::matrix_z(2, {1, 0, 2, 1})});
    }
    if (name == "Lamplighter") {
      return GenSet({GroupElement::lamplighter({}, 1), GroupElement::lamplighter({0}, 0)});
    }
    fail(ErrorKind::UnknownName, "unknown catalog group '" + raw + "'");
  }

  // Tree generators ----------------------------------------------------------

  namespace detail {

    inline std::size_t tree_vertex(std::uint32_t                     depth,
                                   std::uint32_t                     arity,
                                   std::vector<std::uint32_t> const& path) {
      TreeAuto    shape{depth, arity, {}};
      std::size_t node = 0;
      for (std::uint32_t l = 0; l < path.size(); ++l) {
        node = GroupElement::child_index(shape, node, l, path[l]);
      }
      return node;
    }

    // Tree automorphism with the given labels at the listed vertices (paths)
    // and the identity elsewhere.
    inline GroupElement
    tree_element(std::uint32_t depth,
                 std::vector<std::pair<std::vector<std::uint32_t>,
                                       std::vector<std::uint8_t>>> const& spots) {
      std::uint32_t const       m = 4;
      std::vector<std::uint8_t> labels(tree_nodes(depth, m) * m);
      for (std::size_t i = 0; i < labels.size(); ++i) {
        labels[i] = static_cast<std::uint8_t>(i % m);
      }
      for (auto const& [path, perm] : spots) {
        auto v = tree_vertex(depth, m, path);
        for (std::uint32_t x = 0; x < m; ++x) {
          labels[v * m + x] = perm[x];
        }
      }
      return GroupElement::tree_auto(depth, m, std::move(labels));
    }

  }  // namespace detail

  inline GenSet s4_tower(std::uint32_t depth) {
    if (depth == 0 || depth > 8) {
      fail(ErrorKind::CapExceeded, "S4 tower depth must be in [1, 8]");
    }
    std::vector<GroupElement> gens;
    for (std::uint32_t l = 0; l < depth; ++l) {
      std::vector<std::uint32_t> path(l, 0);
      gens.push_back(detail::tree_element(depth, {{path, {1, 0, 2, 3}}}));
      gens.push_back(detail::tree_element(depth, {{path, {1, 2, 3, 0}}}));
    }
    return GenSet(std::move(gens));
  }

  /// Generators of the derived subgroup of the depth-d truncation. Lift rule:
  /// on each level l, the two 3-cycles (0 1 2), (1 2 3) at the vertex 0^l,
  /// and for every coordinate j < l the product of the transposition (0 1)
  /// at 0^l with (0 1) at the vertex that differs from 0^l only in
  /// coordinate j (value 1 there). The derived subgroup is the set of
  /// portraits whose labels on each level have even total sign; these
  /// elements generate that kernel.
  inline GenSet s4_tower_derived(std::uint32_t depth) {
    if (depth == 0 || depth > 8) {
      fail(ErrorKind::CapExceeded, "S4 tower depth must be in [1, 8]");
    }
    std::vector<std::uint8_t> const c1{1, 2, 0, 3}, c2{0, 2, 3, 1}, t{1, 0, 2, 3};
    std::vector<GroupElement>       gens;
    for (std::uint32_t l = 0; l < depth; ++l) {
      std::vector<std::uint32_t> path(l, 0);
      gens.push_back(detail::tree_element(depth, {{path, c1}}));
      gens.push_back(detail::tree_element(depth, {{path, c2}}));
      for (std::uint32_t j = 0; j < l; ++j) {
        auto other = path;
        other[j]   = 1;
        gens.push_back(detail::tree_element(depth, {{path, t}, {other, t}}));
      }
    }
    return GenSet(std::move(gens));
  }

}  // namespace solgrowth

#endif  // SOLGROWTH_CATALOG_HPP_
