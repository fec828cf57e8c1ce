#ifndef SOLGROWTH_GROWTH_HPP_
#define SOLGROWTH_GROWTH_HPP_

#include <cmath>
#include <cstddef>
#include <cstdint>
#include <cstdio>
#include <optional>
#include <string>
#include <unordered_set>
#include <vector>

#include "solgrowth/element.hpp"
#include "solgrowth/error.hpp"
#include "solgrowth/table.hpp"

namespace solgrowth {

  struct GrowthCaps {
    std::size_t max_elements = 50'000'000;       // stored encodings
    std::size_t memory_bytes = std::size_t{8} << 30;  // estimate, see below
  };

  struct GrowthTable {
    std::vector<std::uint64_t> gamma;  // cumulative ball sizes, radius 0..
    std::uint32_t              requested_radius = 0;
    bool                       truncated = false;   // a cap stopped the BFS early
    bool                       exhausted = false;   // a sphere came up empty: group finite
    std::string                truncation_reason;
    std::string                digest;
    std::size_t                generator_count = 0;

    std::uint32_t radius() const {
      return static_cast<std::uint32_t>(gamma.size() - 1);
    }
  };

  /// FNV-1a over the generator encodings and the symmetric flag.
  inline std::string genset_digest(GenSet const& X) {
    std::uint64_t h = 1469598103934665603ULL;
    auto mix = [&](std::string const& s) {
      for (unsigned char c : s) {
        h ^= c;
        h *= 1099511628211ULL;
      }
      h ^= 0xff;
      h *= 1099511628211ULL;
    };
    for (auto const& g : X.elements) {
      mix(g.encode());
    }
    mix(X.symmetric ? "sym" : "mon");
    char buf[17];
    std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
    return buf;
  }

  /// Exact ball sizes gamma(0..R) by breadth-first search over canonical
  /// encodings. With an inverse-closed alphabet the neighbours of sphere n
  /// lie in spheres n-1, n, n+1, so only three spheres are stored. The
  /// memory estimate charges each stored element twice its encoding plus
  /// 128 bytes. Hitting a cap returns the completed radii with `truncated`.
  inline GrowthTable growth_table(GenSet const& X, std::uint32_t R, GrowthCaps caps = {}) {
    X.validate();
    GrowthTable out;
    out.requested_radius = R;
    out.digest           = genset_digest(X);
    out.generator_count  = X.size();
    auto [symbols, letters] = alphabet(X);

    std::unordered_set<std::string> letter_codes;
    for (auto const& a : letters) {
      letter_codes.insert(a.encode());
    }
    bool closed = true;
    for (auto const& a : letters) {
      closed = closed && letter_codes.count(a.inverse().encode());
    }

    using Layer = std::unordered_set<std::string>;
    Layer                     prev, cur{X.identity().encode()};
    Layer                     all;  // only for alphabets that are not inverse-closed
    std::vector<GroupElement> frontier{X.identity()};
    std::size_t               stored = 1;
    std::size_t               bytes  = 2 * cur.begin()->size() + 128;
    if (!closed) {
      all = cur;
    }
    out.gamma.push_back(1);
    for (std::uint32_t r = 1; r <= R; ++r) {
      if (frontier.empty()) {
        out.exhausted = true;
        out.gamma.push_back(out.gamma.back());
        continue;
      }
      Layer                     next;
      std::vector<GroupElement> next_frontier;
      std::size_t               next_bytes = 0;
      for (auto const& g : frontier) {
        for (auto const& a : letters) {
          GroupElement h    = g * a;
          auto         code = h.encode();
          bool const   old  = closed ? (prev.count(code) || cur.count(code))
                                     : all.count(code) > 0;
          if (old || next.count(code)) {
            continue;
          }
          next_bytes += 2 * code.size() + 128;
          if (stored + next.size() + 1 > caps.max_elements
              || bytes + next_bytes > caps.memory_bytes) {
            out.truncated         = true;
            out.truncation_reason = stored + next.size() + 1 > caps.max_elements
                                        ? "max_elements"
                                        : "memory";
            return out;
          }
          if (!closed) {
            all.insert(code);
          }
          next.insert(std::move(code));
          next_frontier.push_back(std::move(h));
        }
      }
      out.gamma.push_back(out.gamma.back() + next.size());
      if (closed) {
        stored -= prev.size();
        for (auto const& c : prev) {
          bytes -= 2 * c.size() + 128;
        }
        prev = std::move(cur);
      }
      stored += next.size();
      bytes += next_bytes;
      cur      = std::move(next);
      frontier = std::move(next_frontier);
    }
    if (frontier.empty()) {
      out.exhausted = true;
    }
    return out;
  }

  /// gamma(n) <= exp(C n^theta) at every computed radius n >= 1.
  inline bool gap_hypothesis_check(GrowthTable const& tbl, double theta, double C) {
    if (!(theta > 0 && theta < 1) || C < 1) {
      fail(ErrorKind::HypothesisViolated, "need theta in (0, 1) and C >= 1");
    }
    for (std::size_t n = 1; n < tbl.gamma.size(); ++n) {
      long double const lhs = std::log(static_cast<long double>(tbl.gamma[n]));
      long double const rhs = C * std::pow(static_cast<long double>(n), theta);
      if (lhs > rhs) {
        return false;
      }
    }
    return true;
  }

  enum class GrowthModel { Polynomial, StretchedExponential };

  inline std::string_view to_string(GrowthModel m) {
    return m == GrowthModel::Polynomial ? "polynomial" : "stretched_exponential";
  }

  struct GrowthFit {
    GrowthModel   model = GrowthModel::Polynomial;
    double        parameter = 0;  // degree d or exponent beta
    double        intercept = 0;
    double        residual  = 0;  // RMS error in log gamma
    double        poly_degree = 0, poly_residual = 0;
    double        beta = 0, beta_residual = 0;
    std::uint32_t lo = 0, hi = 0;
  };

  /// Least squares of log gamma against log n (degree d) and of
  /// log log gamma against log n (exponent beta) on radii lo..hi; the model
  /// with the smaller RMS error in log gamma wins. Default window is the top
  /// half of the table.
  inline GrowthFit growth_exponent_fit(GrowthTable const&           tbl,
                                       std::optional<std::uint32_t> lo = std::nullopt,
                                       std::optional<std::uint32_t> hi = std::nullopt) {
    auto const R = tbl.radius();
    GrowthFit  f;
    f.hi = hi.value_or(R);
    f.lo = lo.value_or(std::max<std::uint32_t>(1, (R + 1) / 2));
    if (f.lo < 1 || f.hi > R || f.hi < f.lo + 2) {
      fail(ErrorKind::DegenerateWindow, "fit window needs at least 3 radii >= 1 in range");
    }
    std::vector<double> x, y1, y2;
    for (auto n = f.lo; n <= f.hi; ++n) {
      if (tbl.gamma[n] < 2) {
        fail(ErrorKind::DegenerateWindow, "fit window contains gamma(n) = 1");
      }
      auto const lg = std::log(static_cast<double>(tbl.gamma[n]));
      x.push_back(std::log(static_cast<double>(n)));
      y1.push_back(lg);
      y2.push_back(std::log(lg));
    }
    auto line = [&](std::vector<double> const& y) {
      double const k  = static_cast<double>(x.size());
      double       sx = 0, sy = 0, sxx = 0, sxy = 0;
      for (std::size_t i = 0; i < x.size(); ++i) {
        sx += x[i];
        sy += y[i];
        sxx += x[i] * x[i];
        sxy += x[i] * y[i];
      }
      double const den   = k * sxx - sx * sx;
      double const slope = (k * sxy - sx * sy) / den;
      return std::pair{slope, (sy - slope * sx) / k};
    };
    auto const [d, c1] = line(y1);
    auto const [b, c2] = line(y2);
    double e1 = 0, e2 = 0;
    for (std::size_t i = 0; i < x.size(); ++i) {
      e1 += std::pow(d * x[i] + c1 - y1[i], 2);
      e2 += std::pow(std::exp(b * x[i] + c2) - y1[i], 2);
    }
    f.poly_degree   = d;
    f.poly_residual = std::sqrt(e1 / x.size());
    f.beta          = b;
    f.beta_residual = std::sqrt(e2 / x.size());
    if (f.poly_residual <= f.beta_residual) {
      f.model     = GrowthModel::Polynomial;
      f.parameter = d;
      f.intercept = c1;
      f.residual  = f.poly_residual;
    } else {
      f.model     = GrowthModel::StretchedExponential;
      f.parameter = b;
      f.intercept = c2;
      f.residual  = f.beta_residual;
    }
    return f;
  }

}  // namespace solgrowth

#endif  // SOLGROWTH_GROWTH_HPP_
