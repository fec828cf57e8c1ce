#ifndef SOLGROWTH_MU_VALUE_HPP_
#define SOLGROWTH_MU_VALUE_HPP_

#include <cstdint>
#include <string>

#include <boost/multiprecision/cpp_dec_float.hpp>
#include <boost/multiprecision/cpp_int.hpp>

#include "solgrowth/element.hpp"

namespace solgrowth {

  using Decimal = boost::multiprecision::cpp_dec_float_50;

  /// log_4(10) to 50 digits.
  inline Decimal log4_10() {
    return boost::multiprecision::log(Decimal(10)) / boost::multiprecision::log(Decimal(4));
  }

  /// a + b log_4(10). Since 4^(a + b log_4 10) = 4^a 10^b = 2^(2a+b) 5^b, the
  /// value is determined by (a, b) and comparisons reduce to integers.
  struct MuValue {
    std::uint32_t a = 0;
    std::uint32_t b = 0;

    /// 4^a * 10^b, the exponential of the value.
    BigInt power4() const {
      BigInt x = 1;
      x <<= 2 * a;
      for (std::uint32_t i = 0; i < b; ++i) {
        x *= 10;
      }
      return x;
    }

    Decimal decimal() const {
      return Decimal(a) + Decimal(b) * log4_10();
    }

    double value() const {
      return static_cast<double>(decimal());
    }

    std::string str() const {
      if (b == 0) {
        return std::to_string(a);
      }
      std::string t = b == 1 ? "log4(10)" : std::to_string(b) + "*log4(10)";
      return a == 0 ? t : std::to_string(a) + " + " + t;
    }

    friend MuValue operator+(MuValue x, MuValue y) {
      return {x.a + y.a, x.b + y.b};
    }

    friend bool operator==(MuValue x, MuValue y) {
      return x.a == y.a && x.b == y.b;
    }

    friend bool operator!=(MuValue x, MuValue y) {
      return !(x == y);
    }

    friend bool operator<(MuValue x, MuValue y) {
      return x.power4() < y.power4();
    }

    friend bool operator<=(MuValue x, MuValue y) {
      return !(y < x);
    }

    friend bool operator>(MuValue x, MuValue y) {
      return y < x;
    }

    friend bool operator>=(MuValue x, MuValue y) {
      return !(x < y);
    }
  };

  inline constexpr MuValue kAbelianStep{1, 0};
  inline constexpr MuValue kClassTwoStep{0, 1};

}  // namespace solgrowth

#endif  // SOLGROWTH_MU_VALUE_HPP_
