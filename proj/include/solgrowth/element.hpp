#ifndef SOLGROWTH_ELEMENT_HPP_
#define SOLGROWTH_ELEMENT_HPP_

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <numeric>
#include <string>
#include <string_view>
#include <utility>
#include <variant>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "solgrowth/error.hpp"

namespace solgrowth {

  using BigInt = boost::multiprecision::cpp_int;
  using BigRational = boost::multiprecision::cpp_rational;

  enum class Variant : std::uint8_t {
    Permutation,
    MatrixFp,
    MatrixZ,
    Lamplighter,
    TreeAuto
  };

  inline std::string_view to_string(Variant v) {
    switch (v) {
      case Variant::Permutation: return "perm";
      case Variant::MatrixFp: return "matfp";
      case Variant::MatrixZ: return "matz";
      case Variant::Lamplighter: return "lamplighter";
      case Variant::TreeAuto: return "treeauto";
    }
    return "?";
  }

  /// Permutation of {0, ..., m - 1}; products apply the left factor first.
  struct Permutation {
    std::vector<std::uint32_t> images;
  };

  /// Invertible n x n matrix over F_p, row-major, acting on row vectors.
  struct MatrixFp {
    std::uint32_t              n = 0;
    std::uint32_t              p = 2;
    std::vector<std::uint32_t> entries;
  };

  /// n x n integer matrix of determinant +1 or -1, row-major.
  struct MatrixZ {
    std::uint32_t       n = 0;
    std::vector<BigInt> entries;
  };

  /// Element of the lamplighter group Z/2 wr Z: lit lamps (sorted) and head.
  struct Lamplighter {
    std::vector<std::int64_t> lamps;
    std::int64_t              head = 0;
  };

  /// Automorphism of the depth-d rooted tree of arity m, stored as a
  /// portrait: one permutation of {0..m-1} per internal vertex, vertices in
  /// depth-first preorder.
  struct TreeAuto {
    std::uint32_t             depth = 0;
    std::uint32_t             arity = 0;
    std::vector<std::uint8_t> labels;
  };

  namespace detail {

    inline bool is_prime(std::uint64_t p) {
      if (p < 2) {
        return false;
      }
      for (std::uint64_t d = 2; d * d <= p; ++d) {
        if (p % d == 0) {
          return false;
        }
      }
      return true;
    }

    inline std::uint64_t pow_mod(std::uint64_t base,
                                 std::uint64_t exp,
                                 std::uint64_t mod) {
      std::uint64_t result = 1 % mod;
      base %= mod;
      while (exp > 0) {
        if (exp & 1) {
          result = result * base % mod;
        }
        base = base * base % mod;
        exp >>= 1;
      }
      return result;
    }

    inline std::uint32_t inverse_mod(std::uint32_t a, std::uint32_t p) {
      return static_cast<std::uint32_t>(pow_mod(a, p - 2, p));
    }

    // Number of internal vertices of a depth-d, arity-m tree.
    inline std::size_t tree_nodes(std::uint32_t depth, std::uint32_t arity) {
      std::size_t total = 0, level = 1;
      for (std::uint32_t l = 0; l < depth; ++l) {
        total += level;
        level *= arity;
      }
      return total;
    }

    inline void put_u32(std::string& out, std::uint32_t x) {
      for (int i = 0; i < 4; ++i) {
        out.push_back(static_cast<char>((x >> (8 * i)) & 0xFF));
      }
    }

    inline void put_u64(std::string& out, std::uint64_t x) {
      for (int i = 0; i < 8; ++i) {
        out.push_back(static_cast<char>((x >> (8 * i)) & 0xFF));
      }
    }

    class Reader {
     public:
      explicit Reader(std::string_view data) : _data(data) {}

      std::uint8_t u8() {
        need(1);
        return static_cast<std::uint8_t>(_data[_pos++]);
      }

      std::uint32_t u16() {
        std::uint32_t lo = u8();
        return lo | (static_cast<std::uint32_t>(u8()) << 8);
      }

      std::uint32_t u32() {
        std::uint32_t x = 0;
        for (int i = 0; i < 4; ++i) {
          x |= static_cast<std::uint32_t>(u8()) << (8 * i);
        }
        return x;
      }

      std::uint64_t u64() {
        std::uint64_t x = 0;
        for (int i = 0; i < 8; ++i) {
          x |= static_cast<std::uint64_t>(u8()) << (8 * i);
        }
        return x;
      }

      std::string_view bytes(std::size_t k) {
        need(k);
        auto out = _data.substr(_pos, k);
        _pos += k;
        return out;
      }

      bool done() const {
        return _pos == _data.size();
      }

     private:
      void need(std::size_t k) const {
        if (_pos + k > _data.size()) {
          fail(ErrorKind::ParseError, "truncated element encoding");
        }
      }

      std::string_view _data;
      std::size_t      _pos = 0;
    };

    // Determinant of an integer matrix by Bareiss fraction-free elimination.
    inline BigInt determinant(std::uint32_t n, std::vector<BigInt> m) {
      if (n == 0) {
        return 1;
      }
      BigInt prev = 1;
      int    sign = 1;
      for (std::uint32_t k = 0; k + 1 < n; ++k) {
        if (m[k * n + k] == 0) {
          std::uint32_t r = k + 1;
          while (r < n && m[r * n + k] == 0) {
            ++r;
          }
          if (r == n) {
            return 0;
          }
          for (std::uint32_t c = 0; c < n; ++c) {
            std::swap(m[k * n + c], m[r * n + c]);
          }
          sign = -sign;
        }
        for (std::uint32_t i = k + 1; i < n; ++i) {
          for (std::uint32_t j = k + 1; j < n; ++j) {
            m[i * n + j] = (m[i * n + j] * m[k * n + k]
                            - m[i * n + k] * m[k * n + j])
                           / prev;
          }
        }
        prev = m[k * n + k];
      }
      return sign * m[(n - 1) * n + (n - 1)];
    }

    // Rank of a matrix over F_p (entries already reduced).
    inline std::uint32_t rank_mod_p(std::uint32_t              rows,
                                    std::uint32_t              cols,
                                    std::vector<std::uint32_t> m,
                                    std::uint32_t              p) {
      std::uint32_t rank = 0;
      for (std::uint32_t c = 0; c < cols && rank < rows; ++c) {
        std::uint32_t piv = rank;
        while (piv < rows && m[piv * cols + c] == 0) {
          ++piv;
        }
        if (piv == rows) {
          continue;
        }
        for (std::uint32_t j = 0; j < cols; ++j) {
          std::swap(m[rank * cols + j], m[piv * cols + j]);
        }
        std::uint64_t inv = inverse_mod(m[rank * cols + c], p);
        for (std::uint32_t i = rank + 1; i < rows; ++i) {
          std::uint64_t f = m[i * cols + c] * inv % p;
          if (f == 0) {
            continue;
          }
          for (std::uint32_t j = c; j < cols; ++j) {
            m[i * cols + j] = static_cast<std::uint32_t>(
                (m[i * cols + j] + p - f * m[rank * cols + j] % p) % p);
          }
        }
        ++rank;
      }
      return rank;
    }

  }  // namespace detail

  /// A concrete group element: one of five representations sharing a single
  /// multiply / inverse / canonical-encoding contract.
  class GroupElement {
   public:
    using Payload
        = std::variant<Permutation, MatrixFp, MatrixZ, Lamplighter, TreeAuto>;

    GroupElement() : _payload(Permutation{}) {}

    static GroupElement permutation(std::vector<std::uint32_t> images) {
      if (images.empty() || images.size() > 65536) {
        fail(ErrorKind::InvalidElement, "permutation degree must be in [1, 65536]");
      }
      std::vector<bool> seen(images.size(), false);
      for (auto x : images) {
        if (x >= images.size() || seen[x]) {
          fail(ErrorKind::InvalidElement, "permutation images are not a bijection");
        }
        seen[x] = true;
      }
      return GroupElement(Permutation{std::move(images)});
    }

    static GroupElement matrix_fp(std::uint32_t              n,
                                  std::uint32_t              p,
                                  std::vector<std::uint32_t> entries) {
      if (!detail::is_prime(p)) {
        fail(ErrorKind::InvalidElement, "modulus " + std::to_string(p) + " is not prime");
      }
      if (entries.size() != static_cast<std::size_t>(n) * n || n == 0) {
        fail(ErrorKind::InvalidElement, "matrix over F_p has wrong shape");
      }
      for (auto x : entries) {
        if (x >= p) {
          fail(ErrorKind::InvalidElement, "matrix entry not reduced mod p");
        }
      }
      if (detail::rank_mod_p(n, n, entries, p) != n) {
        fail(ErrorKind::InvalidElement, "matrix over F_p is singular");
      }
      return GroupElement(MatrixFp{n, p, std::move(entries)});
    }

    static GroupElement matrix_z(std::uint32_t n, std::vector<BigInt> entries) {
      if (entries.size() != static_cast<std::size_t>(n) * n || n == 0) {
        fail(ErrorKind::InvalidElement, "integer matrix has wrong shape");
      }
      BigInt det = detail::determinant(n, entries);
      if (det != 1 && det != -1) {
        fail(ErrorKind::InvalidElement, "integer matrix determinant is not +-1");
      }
      return GroupElement(MatrixZ{n, std::move(entries)});
    }

    static GroupElement lamplighter(std::vector<std::int64_t> lamps,
                                    std::int64_t              head) {
      std::sort(lamps.begin(), lamps.end());
      if (std::adjacent_find(lamps.begin(), lamps.end()) != lamps.end()) {
        fail(ErrorKind::InvalidElement, "repeated lamp position");
      }
      return GroupElement(Lamplighter{std::move(lamps), head});
    }

    static GroupElement tree_auto(std::uint32_t             depth,
                                  std::uint32_t             arity,
                                  std::vector<std::uint8_t> labels) {
      if (arity < 2 || arity > 255 || depth == 0) {
        fail(ErrorKind::InvalidElement, "tree needs depth >= 1 and 2 <= arity <= 255");
      }
      if (labels.size() != detail::tree_nodes(depth, arity) * arity) {
        fail(ErrorKind::InvalidElement, "portrait has wrong number of labels");
      }
      for (std::size_t u = 0; u < labels.size(); u += arity) {
        std::vector<bool> seen(arity, false);
        for (std::uint32_t x = 0; x < arity; ++x) {
          auto y = labels[u + x];
          if (y >= arity || seen[y]) {
            fail(ErrorKind::InvalidElement, "portrait label is not a permutation");
          }
          seen[y] = true;
        }
      }
      return GroupElement(TreeAuto{depth, arity, std::move(labels)});
    }

    /// Identity permutation / matrix / tree automorphism of the given shape.
    static GroupElement identity_permutation(std::uint32_t degree) {
      std::vector<std::uint32_t> im(degree);
      std::iota(im.begin(), im.end(), 0u);
      return GroupElement(Permutation{std::move(im)});
    }

    static GroupElement identity_matrix_fp(std::uint32_t n, std::uint32_t p) {
      std::vector<std::uint32_t> e(static_cast<std::size_t>(n) * n, 0);
      for (std::uint32_t i = 0; i < n; ++i) {
        e[i * n + i] = 1;
      }
      return GroupElement(MatrixFp{n, p, std::move(e)});
    }

    Variant variant() const {
      return static_cast<Variant>(_payload.index());
    }

    template <typename T>
    T const& as() const {
      return std::get<T>(_payload);
    }

    Payload const& payload() const {
      return _payload;
    }

    /// True if both elements live in the same concrete group (same variant
    /// and the same degree / dimension / modulus / tree shape).
    bool same_kind(GroupElement const& that) const {
      if (variant() != that.variant()) {
        return false;
      }
      switch (variant()) {
        case Variant::Permutation:
          return as<Permutation>().images.size()
                 == that.as<Permutation>().images.size();
        case Variant::MatrixFp:
          return as<MatrixFp>().n == that.as<MatrixFp>().n
                 && as<MatrixFp>().p == that.as<MatrixFp>().p;
        case Variant::MatrixZ:
          return as<MatrixZ>().n == that.as<MatrixZ>().n;
        case Variant::Lamplighter: return true;
        case Variant::TreeAuto:
          return as<TreeAuto>().depth == that.as<TreeAuto>().depth
                 && as<TreeAuto>().arity == that.as<TreeAuto>().arity;
      }
      return false;
    }

    GroupElement operator*(GroupElement const& that) const {
      if (!same_kind(that)) {
        fail(ErrorKind::MixedVariants, "cannot multiply elements of different groups");
      }
      switch (variant()) {
        case Variant::Permutation: {
          auto const& a = as<Permutation>().images;
          auto const& b = that.as<Permutation>().images;
          std::vector<std::uint32_t> c(a.size());
          for (std::size_t i = 0; i < a.size(); ++i) {
            c[i] = b[a[i]];
          }
          return GroupElement(Permutation{std::move(c)});
        }
        case Variant::MatrixFp: {
          auto const&   a = as<MatrixFp>();
          auto const&   b = that.as<MatrixFp>();
          std::uint32_t n = a.n;
          std::uint64_t p = a.p;
          std::vector<std::uint32_t> c(static_cast<std::size_t>(n) * n);
          for (std::uint32_t i = 0; i < n; ++i) {
            for (std::uint32_t j = 0; j < n; ++j) {
              std::uint64_t s = 0;
              for (std::uint32_t k = 0; k < n; ++k) {
                s += static_cast<std::uint64_t>(a.entries[i * n + k])
                     * b.entries[k * n + j];
                if (s >= (1ULL << 62)) {
                  s %= p;
                }
              }
              c[i * n + j] = static_cast<std::uint32_t>(s % p);
            }
          }
          return GroupElement(MatrixFp{n, a.p, std::move(c)});
        }
        case Variant::MatrixZ: {
          auto const&         a = as<MatrixZ>();
          auto const&         b = that.as<MatrixZ>();
          std::uint32_t       n = a.n;
          std::vector<BigInt> c(static_cast<std::size_t>(n) * n);
          for (std::uint32_t i = 0; i < n; ++i) {
            for (std::uint32_t k = 0; k < n; ++k) {
              auto const& aik = a.entries[i * n + k];
              if (aik == 0) {
                continue;
              }
              for (std::uint32_t j = 0; j < n; ++j) {
                c[i * n + j] += aik * b.entries[k * n + j];
              }
            }
          }
          return GroupElement(MatrixZ{n, std::move(c)});
        }
        case Variant::Lamplighter: {
          auto const& a = as<Lamplighter>();
          auto const& b = that.as<Lamplighter>();
          std::vector<std::int64_t> shifted(b.lamps);
          for (auto& x : shifted) {
            x += a.head;
          }
          std::vector<std::int64_t> c;
          std::set_symmetric_difference(a.lamps.begin(),
                                        a.lamps.end(),
                                        shifted.begin(),
                                        shifted.end(),
                                        std::back_inserter(c));
          return GroupElement(Lamplighter{std::move(c), a.head + b.head});
        }
        case Variant::TreeAuto: return GroupElement(tree_product(that));
      }
      return {};
    }

    GroupElement inverse() const {
      switch (variant()) {
        case Variant::Permutation: {
          auto const&                a = as<Permutation>().images;
          std::vector<std::uint32_t> c(a.size());
          for (std::uint32_t i = 0; i < a.size(); ++i) {
            c[a[i]] = i;
          }
          return GroupElement(Permutation{std::move(c)});
        }
        case Variant::MatrixFp: return GroupElement(fp_inverse());
        case Variant::MatrixZ: return GroupElement(z_inverse());
        case Variant::Lamplighter: {
          auto const& a = as<Lamplighter>();
          std::vector<std::int64_t> c(a.lamps);
          for (auto& x : c) {
            x -= a.head;
          }
          return GroupElement(Lamplighter{std::move(c), -a.head});
        }
        case Variant::TreeAuto: return GroupElement(tree_inverse());
      }
      return {};
    }

    GroupElement identity() const {
      switch (variant()) {
        case Variant::Permutation:
          return identity_permutation(
              static_cast<std::uint32_t>(as<Permutation>().images.size()));
        case Variant::MatrixFp:
          return identity_matrix_fp(as<MatrixFp>().n, as<MatrixFp>().p);
        case Variant::MatrixZ: {
          auto                n = as<MatrixZ>().n;
          std::vector<BigInt> e(static_cast<std::size_t>(n) * n);
          for (std::uint32_t i = 0; i < n; ++i) {
            e[i * n + i] = 1;
          }
          return GroupElement(MatrixZ{n, std::move(e)});
        }
        case Variant::Lamplighter: return GroupElement(Lamplighter{});
        case Variant::TreeAuto: {
          auto const& t = as<TreeAuto>();
          std::vector<std::uint8_t> labels(t.labels.size());
          for (std::size_t i = 0; i < labels.size(); ++i) {
            labels[i] = static_cast<std::uint8_t>(i % t.arity);
          }
          return GroupElement(TreeAuto{t.depth, t.arity, std::move(labels)});
        }
      }
      return {};
    }

    bool is_identity() const {
      return *this == identity();
    }

    /// Injective byte serialization: a variant tag, the shape parameters and
    /// then the payload in a fixed layout.
    std::string encode() const {
      std::string out;
      out.push_back(static_cast<char>(variant()));
      switch (variant()) {
        case Variant::Permutation: {
          auto const& im = as<Permutation>().images;
          detail::put_u32(out, static_cast<std::uint32_t>(im.size()));
          bool wide = im.size() > 256;
          for (auto x : im) {
            out.push_back(static_cast<char>(x & 0xFF));
            if (wide) {
              out.push_back(static_cast<char>((x >> 8) & 0xFF));
            }
          }
          break;
        }
        case Variant::MatrixFp: {
          auto const& m = as<MatrixFp>();
          out.push_back(static_cast<char>(m.n));
          detail::put_u32(out, m.p);
          for (auto x : m.entries) {
            if (m.p <= 256) {
              out.push_back(static_cast<char>(x));
            } else {
              detail::put_u32(out, x);
            }
          }
          break;
        }
        case Variant::MatrixZ: {
          auto const& m = as<MatrixZ>();
          out.push_back(static_cast<char>(m.n));
          for (auto const& x : m.entries) {
            out.push_back(x < 0 ? 1 : 0);
            std::vector<std::uint8_t> bytes;
            if (x != 0) {
              boost::multiprecision::export_bits(
                  BigInt(abs(x)), std::back_inserter(bytes), 8);
            }
            detail::put_u32(out, static_cast<std::uint32_t>(bytes.size()));
            out.append(bytes.begin(), bytes.end());
          }
          break;
        }
        case Variant::Lamplighter: {
          auto const& l = as<Lamplighter>();
          detail::put_u64(out, static_cast<std::uint64_t>(l.head));
          detail::put_u32(out, static_cast<std::uint32_t>(l.lamps.size()));
          for (auto x : l.lamps) {
            detail::put_u64(out, static_cast<std::uint64_t>(x));
          }
          break;
        }
        case Variant::TreeAuto: {
          auto const& t = as<TreeAuto>();
          out.push_back(static_cast<char>(t.depth));
          out.push_back(static_cast<char>(t.arity));
          out.append(t.labels.begin(), t.labels.end());
          break;
        }
      }
      return out;
    }

    static GroupElement decode(std::string_view data) {
      detail::Reader in(data);
      auto           tag = in.u8();
      GroupElement   result;
      switch (static_cast<Variant>(tag)) {
        case Variant::Permutation: {
          auto                       m = in.u32();
          std::vector<std::uint32_t> im(m);
          for (auto& x : im) {
            x = m > 256 ? in.u16() : in.u8();
          }
          result = GroupElement(Permutation{std::move(im)});
          break;
        }
        case Variant::MatrixFp: {
          std::uint32_t              n = in.u8();
          std::uint32_t              p = in.u32();
          std::vector<std::uint32_t> e(static_cast<std::size_t>(n) * n);
          for (auto& x : e) {
            x = p <= 256 ? in.u8() : in.u32();
          }
          result = GroupElement(MatrixFp{n, p, std::move(e)});
          break;
        }
        case Variant::MatrixZ: {
          std::uint32_t       n = in.u8();
          std::vector<BigInt> e(static_cast<std::size_t>(n) * n);
          for (auto& x : e) {
            bool negative = in.u8() != 0;
            auto len      = in.u32();
            auto bytes    = in.bytes(len);
            x             = 0;
            if (len > 0) {
              boost::multiprecision::import_bits(
                  x,
                  reinterpret_cast<std::uint8_t const*>(bytes.data()),
                  reinterpret_cast<std::uint8_t const*>(bytes.data()) + len,
                  8);
            }
            if (negative) {
              x = -x;
            }
          }
          result = GroupElement(MatrixZ{n, std::move(e)});
          break;
        }
        case Variant::Lamplighter: {
          auto head  = static_cast<std::int64_t>(in.u64());
          auto count = in.u32();
          std::vector<std::int64_t> lamps(count);
          for (auto& x : lamps) {
            x = static_cast<std::int64_t>(in.u64());
          }
          result = GroupElement(Lamplighter{std::move(lamps), head});
          break;
        }
        case Variant::TreeAuto: {
          std::uint32_t depth = in.u8();
          std::uint32_t arity = in.u8();
          auto bytes = in.bytes(detail::tree_nodes(depth, arity) * arity);
          result     = GroupElement(TreeAuto{
              depth, arity, std::vector<std::uint8_t>(bytes.begin(), bytes.end())});
          break;
        }
        default: fail(ErrorKind::ParseError, "unknown element tag");
      }
      if (!in.done()) {
        fail(ErrorKind::ParseError, "trailing bytes in element encoding");
      }
      return result;
    }

    friend bool operator==(GroupElement const& a, GroupElement const& b) {
      if (a.variant() != b.variant()) {
        return false;
      }
      switch (a.variant()) {
        case Variant::Permutation:
          return a.as<Permutation>().images == b.as<Permutation>().images;
        case Variant::MatrixFp:
          return a.same_kind(b)
                 && a.as<MatrixFp>().entries == b.as<MatrixFp>().entries;
        case Variant::MatrixZ:
          return a.same_kind(b)
                 && a.as<MatrixZ>().entries == b.as<MatrixZ>().entries;
        case Variant::Lamplighter:
          return a.as<Lamplighter>().head == b.as<Lamplighter>().head
                 && a.as<Lamplighter>().lamps == b.as<Lamplighter>().lamps;
        case Variant::TreeAuto:
          return a.same_kind(b)
                 && a.as<TreeAuto>().labels == b.as<TreeAuto>().labels;
      }
      return false;
    }

    friend bool operator!=(GroupElement const& a, GroupElement const& b) {
      return !(a == b);
    }

    /// Commutator [a, b] = a^-1 b^-1 a b.
    friend GroupElement commutator(GroupElement const& a, GroupElement const& b) {
      return a.inverse() * b.inverse() * a * b;
    }

    /// Leaf permutation of a tree automorphism on arity^depth points, with
    /// leaf x_1 ... x_d numbered in base arity, x_1 most significant.
    GroupElement leaf_action() const {
      auto const&   t = as<TreeAuto>();
      std::uint32_t leaves = 1;
      for (std::uint32_t l = 0; l < t.depth; ++l) {
        leaves *= t.arity;
      }
      std::vector<std::uint32_t> im(leaves);
      for (std::uint32_t leaf = 0; leaf < leaves; ++leaf) {
        std::vector<std::uint32_t> digits(t.depth);
        std::uint32_t              rest = leaf;
        for (std::uint32_t l = t.depth; l-- > 0;) {
          digits[l] = rest % t.arity;
          rest /= t.arity;
        }
        std::size_t   node  = 0;
        std::uint32_t image = 0;
        for (std::uint32_t l = 0; l < t.depth; ++l) {
          auto x = digits[l];
          image  = image * t.arity + t.labels[node * t.arity + x];
          node   = child_index(t, node, l, x);
        }
        im[leaf] = image;
      }
      return GroupElement(Permutation{std::move(im)});
    }

    /// Preorder index of child x of the vertex at preorder index node, which
    /// sits on the given level.
    static std::size_t child_index(TreeAuto const& t,
                                   std::size_t     node,
                                   std::uint32_t   level,
                                   std::uint32_t   x) {
      return node + 1 + x * detail::tree_nodes(t.depth - level - 1, t.arity);
    }

   private:
    explicit GroupElement(Payload p) : _payload(std::move(p)) {}

    TreeAuto tree_product(GroupElement const& that) const {
      auto const& g = as<TreeAuto>();
      auto const& h = that.as<TreeAuto>();
      TreeAuto    out{g.depth, g.arity, std::vector<std::uint8_t>(g.labels.size())};
      // (u, v): vertex u of g's portrait and its image v = u^g.
      std::vector<std::tuple<std::size_t, std::size_t, std::uint32_t>> stack;
      stack.emplace_back(0, 0, 0);
      auto const m = g.arity;
      while (!stack.empty()) {
        auto [u, v, level] = stack.back();
        stack.pop_back();
        for (std::uint32_t x = 0; x < m; ++x) {
          out.labels[u * m + x] = h.labels[v * m + g.labels[u * m + x]];
        }
        if (level + 1 < g.depth) {
          for (std::uint32_t x = 0; x < m; ++x) {
            stack.emplace_back(child_index(g, u, level, x),
                               child_index(g, v, level, g.labels[u * m + x]),
                               level + 1);
          }
        }
      }
      return out;
    }

    TreeAuto tree_inverse() const {
      auto const& g = as<TreeAuto>();
      TreeAuto    out{g.depth, g.arity, std::vector<std::uint8_t>(g.labels.size())};
      std::vector<std::tuple<std::size_t, std::size_t, std::uint32_t>> stack;
      stack.emplace_back(0, 0, 0);
      auto const m = g.arity;
      while (!stack.empty()) {
        auto [u, w, level] = stack.back();
        stack.pop_back();
        for (std::uint32_t x = 0; x < m; ++x) {
          out.labels[w * m + g.labels[u * m + x]] = static_cast<std::uint8_t>(x);
        }
        if (level + 1 < g.depth) {
          for (std::uint32_t x = 0; x < m; ++x) {
            stack.emplace_back(child_index(g, u, level, x),
                               child_index(g, w, level, g.labels[u * m + x]),
                               level + 1);
          }
        }
      }
      return out;
    }

    MatrixFp fp_inverse() const {
      auto const&   a = as<MatrixFp>();
      std::uint32_t n = a.n;
      std::uint64_t p = a.p;
      std::uint32_t w = 2 * n;
      std::vector<std::uint64_t> m(static_cast<std::size_t>(n) * w, 0);
      for (std::uint32_t i = 0; i < n; ++i) {
        for (std::uint32_t j = 0; j < n; ++j) {
          m[i * w + j] = a.entries[i * n + j];
        }
        m[i * w + n + i] = 1;
      }
      for (std::uint32_t c = 0; c < n; ++c) {
        std::uint32_t piv = c;
        while (m[piv * w + c] == 0) {
          ++piv;
        }
        for (std::uint32_t j = 0; j < w; ++j) {
          std::swap(m[c * w + j], m[piv * w + j]);
        }
        std::uint64_t inv = detail::inverse_mod(
            static_cast<std::uint32_t>(m[c * w + c]), a.p);
        for (std::uint32_t j = 0; j < w; ++j) {
          m[c * w + j] = m[c * w + j] * inv % p;
        }
        for (std::uint32_t i = 0; i < n; ++i) {
          if (i == c || m[i * w + c] == 0) {
            continue;
          }
          std::uint64_t f = m[i * w + c];
          for (std::uint32_t j = 0; j < w; ++j) {
            m[i * w + j] = (m[i * w + j] + p * p - f * m[c * w + j]) % p;
          }
        }
      }
      std::vector<std::uint32_t> e(static_cast<std::size_t>(n) * n);
      for (std::uint32_t i = 0; i < n; ++i) {
        for (std::uint32_t j = 0; j < n; ++j) {
          e[i * n + j] = static_cast<std::uint32_t>(m[i * w + n + j]);
        }
      }
      return MatrixFp{n, a.p, std::move(e)};
    }

    MatrixZ z_inverse() const {
      auto const&              a = as<MatrixZ>();
      std::uint32_t            n = a.n;
      std::uint32_t            w = 2 * n;
      std::vector<BigRational> m(static_cast<std::size_t>(n) * w, 0);
      for (std::uint32_t i = 0; i < n; ++i) {
        for (std::uint32_t j = 0; j < n; ++j) {
          m[i * w + j] = a.entries[i * n + j];
        }
        m[i * w + n + i] = 1;
      }
      for (std::uint32_t c = 0; c < n; ++c) {
        std::uint32_t piv = c;
        while (m[piv * w + c] == 0) {
          ++piv;
        }
        for (std::uint32_t j = 0; j < w; ++j) {
          std::swap(m[c * w + j], m[piv * w + j]);
        }
        BigRational inv = 1 / m[c * w + c];
        for (std::uint32_t j = 0; j < w; ++j) {
          m[c * w + j] *= inv;
        }
        for (std::uint32_t i = 0; i < n; ++i) {
          if (i == c || m[i * w + c] == 0) {
            continue;
          }
          BigRational f = m[i * w + c];
          for (std::uint32_t j = 0; j < w; ++j) {
            m[i * w + j] -= f * m[c * w + j];
          }
        }
      }
      std::vector<BigInt> e(static_cast<std::size_t>(n) * n);
      for (std::uint32_t i = 0; i < n; ++i) {
        for (std::uint32_t j = 0; j < n; ++j) {
          // determinant +-1 makes the inverse integral
          e[i * n + j] = boost::multiprecision::numerator(m[i * w + n + j]);
        }
      }
      return MatrixZ{n, std::move(e)};
    }

    Payload _payload;
  };

  /// A finite generating set X. With `symmetric` set, word lengths are taken
  /// over X together with X^-1; otherwise the caller supplies the full
  /// alphabet.
  struct GenSet {
    std::vector<GroupElement> elements;
    bool                      symmetric      = true;
    bool                      allow_identity = false;

    GenSet() = default;

    explicit GenSet(std::vector<GroupElement> xs,
                    bool                      sym       = true,
                    bool                      allow_one = false)
        : elements(std::move(xs)), symmetric(sym), allow_identity(allow_one) {
      validate();
    }

    void validate() const {
      if (elements.empty()) {
        fail(ErrorKind::InvalidElement, "generating set is empty");
      }
      for (auto const& x : elements) {
        if (!x.same_kind(elements.front())) {
          fail(ErrorKind::MixedVariants,
               "generators do not share one variant and degree");
        }
        if (!allow_identity && x.is_identity()) {
          fail(ErrorKind::InvalidElement, "identity in generating set");
        }
      }
    }

    std::size_t size() const {
      return elements.size();
    }

    GroupElement identity() const {
      return elements.front().identity();
    }
  };

}  // namespace solgrowth

#endif  // SOLGROWTH_ELEMENT_HPP_
