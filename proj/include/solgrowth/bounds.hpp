#ifndef SOLGROWTH_BOUNDS_HPP_
#define SOLGROWTH_BOUNDS_HPP_

#include <cstdint>
#include <string>
#include <string_view>

#include "solgrowth/error.hpp"
#include "solgrowth/mu_value.hpp"

namespace solgrowth {

  namespace detail {

    inline Decimal log_base(Decimal const& b, Decimal const& x) {
      return boost::multiprecision::log(x) / boost::multiprecision::log(b);
    }

    inline BigInt big_pow(BigInt b, std::uint32_t e) {
      BigInt r = 1;
      for (; e; e >>= 1, b *= b) {
        if (e & 1) {
          r *= b;
        }
      }
      return r;
    }

  }  // namespace detail

  /// 8 - 15 log_9(2).
  inline Decimal newman_constant() {
    return Decimal(8) - 15 * detail::log_base(9, 2);
  }

  /// -5/2 + 3 log_4(10).
  inline Decimal mu_constant_k() {
    return Decimal(-5) / 2 + 3 * log4_10();
  }

  /// 5 log_9(n) + 6, a strict upper bound on the derived length of soluble
  /// linear groups of degree n.
  inline Decimal rho_bound(std::uint32_t n) {
    if (n == 0) {
      fail(ErrorKind::ContextViolated, "degree must be positive");
    }
    return 5 * detail::log_base(9, n) + 6;
  }

  /// Largest integer strictly below rho_bound(n): the greatest m with
  /// 9^(m-6) < n^5.
  inline std::uint32_t rho_integer(std::uint32_t n) {
    if (n == 0) {
      fail(ErrorKind::ContextViolated, "degree must be positive");
    }
    BigInt const  n5 = detail::big_pow(n, 5);
    std::uint32_t m  = 5;
    while (detail::big_pow(9, m + 1 - 6) < n5) {
      ++m;
    }
    return m;
  }

  struct SigmaValue {
    std::uint32_t value = 0;
    bool          tabulated = false;  // literal table entry vs floor of the formula
  };

  /// Derived-length bound for completely reducible soluble linear groups of
  /// degree n. Beyond the table it is floor(8 + 5 log_9(n / 8)), the same
  /// quantity as 5 log_9 n + 8 - 15 log_9 2, computed as the greatest m with
  /// 8^5 9^(m-8) <= n^5.
  inline SigmaValue sigma_value(std::uint32_t n) {
    static constexpr std::uint32_t table[] = {0, 1, 4, 5, 5, 5, 6, 6};
    if (n == 0) {
      fail(ErrorKind::ContextViolated, "degree must be positive");
    }
    if (n <= 7) {
      return {table[n], true};
    }
    BigInt const  n5 = detail::big_pow(n, 5);
    BigInt const  e5 = detail::big_pow(8, 5);
    std::uint32_t m  = 8;
    while (e5 * detail::big_pow(9, m + 1 - 8) <= n5) {
      ++m;
    }
    return {m, false};
  }

  inline Decimal sigma_formula(std::uint32_t n) {
    return 5 * detail::log_base(9, n) + newman_constant();
  }

  enum class BoundKind { Transitive, Irreducible };

  inline std::string_view to_string(BoundKind k) {
    return k == BoundKind::Transitive ? "transitive" : "irreducible";
  }

  /// 3 log_4(n), plus K for the irreducible kind.
  inline Decimal mu_bound(std::uint32_t n, BoundKind kind) {
    if (n == 0) {
      fail(ErrorKind::ContextViolated, "degree must be positive");
    }
    Decimal b = 3 * detail::log_base(4, n);
    return kind == BoundKind::Irreducible ? b + mu_constant_k() : b;
  }

  /// Exact test of mu <= mu_bound(n, kind). Taking 4^(.) of both sides:
  /// 4^a 10^b <= n^3 for the transitive bound and 32 4^a 10^b <= 1000 n^3
  /// for the irreducible one. The 50-digit evaluation must agree.
  inline bool mu_within_bound(MuValue mu, std::uint32_t n, BoundKind kind) {
    BigInt const n3 = detail::big_pow(n, 3);
    bool const exact = kind == BoundKind::Transitive ? mu.power4() <= n3
                                                     : 32 * mu.power4() <= 1000 * n3;
    bool const approx = mu.decimal() <= mu_bound(n, kind) + Decimal("1e-40");
    if (exact != approx) {
      // only an exact tie could separate the two, and ties are decided exactly
      auto diff = boost::multiprecision::abs(mu.decimal() - mu_bound(n, kind));
      if (diff > Decimal("1e-40")) {
        fail(ErrorKind::ContextViolated, "exact and decimal bound checks disagree");
      }
    }
    return exact;
  }

}  // namespace solgrowth

#endif  // SOLGROWTH_BOUNDS_HPP_
