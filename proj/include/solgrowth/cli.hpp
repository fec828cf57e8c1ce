#ifndef SOLGROWTH_CLI_HPP_
#define SOLGROWTH_CLI_HPP_

#include <cstdlib>
#include <fstream>
#include <iomanip>
#include <optional>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "solgrowth/certificate.hpp"
#include "solgrowth/growth.hpp"
#include "solgrowth/small_cases.hpp"
#include "solgrowth/soluble.hpp"
#include "solgrowth/spec_io.hpp"

namespace solgrowth::cli {

  using nlohmann::ordered_json;

  enum ExitCode : int {
    kOk           = 0,
    kInvalidInput = 1,
    kCapExhausted = 2,
    kFailed       = 3,
  };

  struct RunConfig {
    std::string                subcommand;
    std::vector<std::string>   inputs;
    std::size_t                max_elements = kDefaultCap;
    std::size_t                memory_bytes = GrowthCaps{}.memory_bytes;
    std::uint32_t              radius       = 10;
    std::string                format       = "csv";
    std::optional<std::string> output;
  };

  /// Byte counts like 512, 64K, 8M, 2G.
  inline std::size_t parse_bytes(std::string const& s) {
    if (s.empty()) {
      fail(ErrorKind::ParseError, "empty memory cap");
    }
    std::size_t mult = 1;
    std::string digits = s;
    switch (s.back()) {
      case 'K': case 'k': mult = std::size_t{1} << 10; digits.pop_back(); break;
      case 'M': case 'm': mult = std::size_t{1} << 20; digits.pop_back(); break;
      case 'G': case 'g': mult = std::size_t{1} << 30; digits.pop_back(); break;
      default: break;
    }
    if (digits.empty() || digits.find_first_not_of("0123456789") != std::string::npos) {
      fail(ErrorKind::ParseError, "bad memory cap '" + s + "'");
    }
    auto v = std::stoull(digits) * mult;
    if (v == 0) {
      fail(ErrorKind::ParseError, "memory cap must be positive");
    }
    return v;
  }

  namespace detail {

    inline ordered_json mu_json(MuValue m) {
      return ordered_json{{"a", m.a},
                          {"b", m.b},
                          {"value", m.value()},
                          {"expression", m.str()}};
    }

    inline ordered_json series_json(ModifiedSeries const& S) {
      ordered_json out = ordered_json::array();
      for (std::size_t i = 0; i < S.chain.size(); ++i) {
        ordered_json t{{"order", S.chain[i].order()}};
        if (i > 0) {
          t["kind"] = std::string(to_string(S.kinds[i - 1]));
        }
        out.push_back(t);
      }
      return out;
    }

    inline double rounded(Decimal const& x) {
      return static_cast<double>(x);
    }

    inline std::string digits30(Decimal const& x) {
      std::ostringstream s;
      s << std::setprecision(30) << x;
      return s.str();
    }

    inline FiniteGroupTable load_table(std::string const& path, std::size_t cap) {
      return enumerate_group(load_group_spec(path).genset, cap);
    }

    inline std::string spec_name(std::string const& path) {
      auto spec = load_group_spec(path);
      if (spec.name) {
        return *spec.name;
      }
      return spec.catalog_name.value_or(path.substr(path.find_last_of('/') + 1));
    }

  }  // namespace detail

  inline ordered_json analyze_json(FiniteGroupTable const& T, std::string const& name) {
    ordered_json j;
    j["name"]     = name;
    j["order"]    = T.order();
    bool const sol = is_soluble(T);
    j["soluble"]  = sol;
    j["derived_length"] = sol ? ordered_json(*derived_length(T)) : ordered_json(nullptr);
    auto c = nilpotency_class(T);
    j["nilpotency_class"] = c ? ordered_json(*c) : ordered_json("not nilpotent");
    if (!sol) {
      j["chief_factors"] = nullptr;
      j["sc_chief_rank"] = nullptr;
      j["supersoluble"]  = false;
      j["mu"]            = nullptr;
      return j;
    }
    auto L = normal_subgroups(T);
    ordered_json cf = ordered_json::array();
    for (auto const& f : chief_series(T, L)) {
      cf.push_back({{"lower_order", f.N.order()},
                    {"upper_order", f.M.order()},
                    {"p", f.p},
                    {"rank", f.rank},
                    {"self_centralizing", f.self_centralizing}});
    }
    j["chief_factors"] = cf;
    j["sc_chief_rank"] = sc_chief_rank(T, L);
    j["supersoluble"]  = is_supersoluble(T);
    j["mu"]            = detail::mu_json(mu(T));
    return j;
  }

  inline ordered_json mu_report(FiniteGroupTable const& T, bool check) {
    auto [m, S] = mu_fast(T);
    auto j      = detail::mu_json(m);
    j["series"] = detail::series_json(S);
    if (check) {
      j["bruteforce"] = detail::mu_json(mu_bruteforce(T).first);
    }
    return j;
  }

  inline ordered_json bounds_json(std::uint32_t n, std::optional<std::uint32_t> p,
                                  std::string const& kind) {
    ordered_json j;
    j["n"] = n;
    if (p) {
      j["p"] = *p;
    }
    auto s = sigma_value(n);
    j["sigma"]           = s.value;
    j["sigma_tabulated"] = s.tabulated;
    j["rho"]             = detail::rounded(rho_bound(n));
    j["rho_digits"]      = detail::digits30(rho_bound(n));
    j["rho_integer"]     = rho_integer(n);
    j["K"]               = detail::rounded(mu_constant_k());
    if (kind == "both" || kind == "transitive") {
      j["mu_transitive"]        = detail::rounded(mu_bound(n, BoundKind::Transitive));
      j["mu_transitive_digits"] = detail::digits30(mu_bound(n, BoundKind::Transitive));
    }
    if (kind == "both" || kind == "irreducible") {
      j["mu_irreducible"]        = detail::rounded(mu_bound(n, BoundKind::Irreducible));
      j["mu_irreducible_digits"] = detail::digits30(mu_bound(n, BoundKind::Irreducible));
    }
    return j;
  }

  inline ordered_json cases_json(std::vector<CaseResult> const& rep) {
    ordered_json out = ordered_json::array();
    for (auto const& r : rep) {
      ordered_json c{{"case", r.id},
                     {"claim", r.claim},
                     {"mode", std::string(to_string(r.mode))},
                     {"sources", r.sources},
                     {"groups_checked", r.groups_checked},
                     {"max_mu", r.max_mu ? detail::mu_json(*r.max_mu) : ordered_json(nullptr)},
                     {"max_delta", r.max_delta ? ordered_json(*r.max_delta) : ordered_json(nullptr)},
                     {"pass", r.pass},
                     {"failures", r.failures}};
      out.push_back(c);
    }
    return out;
  }

  inline ordered_json growth_json(GrowthTable const& g) {
    return ordered_json{{"digest", g.digest},
                        {"generators", g.generator_count},
                        {"requested_radius", g.requested_radius},
                        {"radius", g.radius()},
                        {"truncated", g.truncated},
                        {"truncation_reason", g.truncated ? ordered_json(g.truncation_reason)
                                                          : ordered_json(nullptr)},
                        {"exhausted", g.exhausted},
                        {"gamma", g.gamma}};
  }

  inline ordered_json fit_json(GrowthFit const& f) {
    return ordered_json{{"model", std::string(to_string(f.model))},
                        {"parameter", f.parameter},
                        {"intercept", f.intercept},
                        {"residual", f.residual},
                        {"poly_degree", f.poly_degree},
                        {"poly_residual", f.poly_residual},
                        {"beta", f.beta},
                        {"beta_residual", f.beta_residual},
                        {"lo", f.lo},
                        {"hi", f.hi}};
  }

  inline ordered_json certificate_json(Certificate const& c, FiniteGroupTable const& T) {
    ordered_json j;
    j["group_order"]    = c.group_order;
    j["kernel_order"]   = c.kernel_order;
    j["quotient_order"] = c.quotient_order;
    j["p"]              = c.p;
    j["n"]              = c.n;
    j["mu"]             = detail::mu_json(c.mu);
    ordered_json series = ordered_json::array();
    for (std::size_t i = 0; i < c.series_orders.size(); ++i) {
      ordered_json t{{"order", c.series_orders[i]}};
      if (i > 0) {
        t["kind"] = std::string(to_string(c.kinds[i - 1]));
        t["cost"] = c.costs[i - 1];
      }
      series.push_back(t);
    }
    j["series"]       = series;
    j["costs"]        = c.costs;
    j["step_lengths"] = c.step_lengths;
    ordered_json b = ordered_json::array();
    for (std::size_t i = 0; i < c.b.size(); ++i) {
      b.push_back({{"word", c.words[i]},
                   {"length", c.words[i].size()},
                   {"element", T.has_elements() ? ordered_json(T.encoding(c.b[i]))
                                                : ordered_json(nullptr)}});
    }
    j["b"] = b;
    j["L"] = c.L;
    j["datapoint"] = {{"radius", c.radius}, {"lower_bound", c.bound}, {"gamma", c.gamma}};
    j["checks"] = {{"independent", c.independent},
                   {"distinct", c.distinct},
                   {"cost_word_matches", c.cost_word_matches},
                   {"holds", c.holds}};
    j["vacuous"]          = c.vacuous;
    j["measured_C"]       = c.measured_C;
    j["measured_C_prime"] = c.measured_C_prime;
    if (!c.transcript.empty()) {
      ordered_json t = ordered_json::array();
      for (auto const& [mask, enc] : c.transcript) {
        t.push_back({{"mask", mask}, {"product", enc}});
      }
      j["transcript"] = t;
    }
    return j;
  }

  inline int exit_code(ErrorKind k) {
    switch (k) {
      case ErrorKind::CapExceeded: return kCapExhausted;
      case ErrorKind::SeriesMismatch:
      case ErrorKind::RankDeficient:
      case ErrorKind::WitnessDegenerate: return kFailed;
      default: return kInvalidInput;
    }
  }

  /// Runs one command line. Output goes to `out` (or --output), diagnostics
  /// to `err`; the return value is the process exit code.
  inline int run(int argc, char const* const* argv, std::ostream& out, std::ostream& err) {
    CLI::App app{"Soluble groups: chief ranks, modified derived length, growth"};
    app.require_subcommand(1);
    RunConfig cfg;

    if (char const* env = std::getenv("SOLGROWTH_MEMORY_CAP")) {
      try {
        cfg.memory_bytes = parse_bytes(env);
      } catch (GroupError const& e) {
        err << e.what() << "\n";
        return kInvalidInput;
      }
    }
    std::string memory_flag;
    auto add_common = [&](CLI::App* sub, bool spec) {
      if (spec) {
        sub->add_option("spec", cfg.inputs, "group spec file")->required()->expected(1);
      }
      sub->add_option("-o,--output", cfg.output, "write output here instead of stdout");
      sub->add_option("--max-elements", cfg.max_elements, "element cap")
          ->check(CLI::PositiveNumber);
    };

    auto* analyze = app.add_subcommand("analyze", "order, derived length, chief factors, mu");
    add_common(analyze, true);

    bool  check   = false;
    auto* mu_cmd  = app.add_subcommand("mu", "modified derived length and an optimal series");
    add_common(mu_cmd, true);
    mu_cmd->add_flag("--check", check, "cross-check against the brute-force recursion");

    std::uint32_t                bn = 0;
    std::optional<std::uint32_t> bp;
    std::string                  kind = "both";
    auto* bounds = app.add_subcommand("bounds", "sigma, rho and mu bounds for degree n");
    add_common(bounds, false);
    bounds->add_option("--n", bn, "degree")->required()->check(CLI::Range(1u, 1000000u));
    bounds->add_option("--p", bp, "characteristic (recorded)")->check(CLI::PositiveNumber);
    bounds->add_option("--kind", kind, "transitive, irreducible or both")
        ->check(CLI::IsMember({"transitive", "irreducible", "both"}));

    bool  quick  = false;
    auto* verify = app.add_subcommand("verify-cases", "small-case assertion suite");
    add_common(verify, false);
    verify->add_flag("--quick", quick, "skip the largest witnesses");

    bool                         fit = false;
    std::optional<std::uint32_t> fit_lo, fit_hi;
    std::optional<std::string>   fit_output;
    auto* growth = app.add_subcommand("growth", "ball sizes gamma(0..R)");
    add_common(growth, true);
    growth->add_option("--radius", cfg.radius, "radius R")->required();
    growth->add_option("--memory-cap", memory_flag, "memory estimate cap, e.g. 512M");
    growth->add_option("--format", cfg.format, "csv or json")
        ->check(CLI::IsMember({"csv", "json"}));
    growth->add_flag("--fit", fit, "fit polynomial and stretched exponential models");
    growth->add_option("--fit-lo", fit_lo, "first radius of the fit window");
    growth->add_option("--fit-hi", fit_hi, "last radius of the fit window");
    growth->add_option("--fit-output", fit_output, "fit record path (csv format)");

    std::optional<std::string> normal_spec;
    bool                       transcript = false;
    auto* certify = app.add_subcommand("certify", "growth lower bound certificate");
    add_common(certify, true);
    certify->add_option("--normal", normal_spec, "spec whose generators generate N");
    certify->add_flag("--emit-transcript", transcript, "list all 2^n products (n <= 10)");

    try {
      app.parse(argc, argv);
    } catch (CLI::CallForHelp const& e) {
      return app.exit(e, out, err);
    } catch (CLI::CallForAllHelp const& e) {
      return app.exit(e, out, err);
    } catch (CLI::ParseError const& e) {
      if (dynamic_cast<CLI::ExtrasError const*>(&e) || dynamic_cast<CLI::RequiredError const*>(&e)) {
        if (app.get_subcommands().empty()) {
          err << to_string(ErrorKind::UnknownSubcommand) << ": expected one of analyze, mu, "
              << "bounds, verify-cases, growth, certify\n";
          return kInvalidInput;
        }
      }
      err << to_string(ErrorKind::ParseError) << ": " << e.what() << "\n";
      return kInvalidInput;
    }
    cfg.subcommand = app.get_subcommands().front()->get_name();

    std::ofstream file;
    std::ostream* sink = &out;
    if (cfg.output) {
      file.open(*cfg.output, std::ios::binary);
      if (!file) {
        err << "ParseError: cannot write '" << *cfg.output << "'\n";
        return kInvalidInput;
      }
      sink = &file;
    }
    auto emit = [&](ordered_json const& j) { *sink << j.dump(2) << "\n"; };

    try {
      if (!memory_flag.empty()) {
        cfg.memory_bytes = parse_bytes(memory_flag);
      }
      if (cfg.subcommand == "analyze") {
        auto T = detail::load_table(cfg.inputs[0], cfg.max_elements);
        emit(analyze_json(T, detail::spec_name(cfg.inputs[0])));
        return kOk;
      }
      if (cfg.subcommand == "mu") {
        auto T = detail::load_table(cfg.inputs[0], cfg.max_elements);
        auto j = mu_report(T, check);
        emit(j);
        if (check && j["bruteforce"] != detail::mu_json(mu_fast(T).first)) {
          err << "mu: fast and brute-force values differ\n";
          return kFailed;
        }
        return kOk;
      }
      if (cfg.subcommand == "bounds") {
        emit(bounds_json(bn, bp, kind));
        return kOk;
      }
      if (cfg.subcommand == "verify-cases") {
        SmallCaseOptions opt;
        opt.include_large_witnesses = !quick;
        auto rep = verify_small_cases(opt);
        emit(cases_json(rep));
        for (auto const& r : rep) {
          if (!r.pass) {
            return kFailed;
          }
        }
        return kOk;
      }
      if (cfg.subcommand == "growth") {
        auto spec = load_group_spec(cfg.inputs[0]);
        GrowthCaps caps;
        caps.max_elements = cfg.max_elements;
        caps.memory_bytes = cfg.memory_bytes;
        auto g = growth_table(spec.genset, cfg.radius, caps);
        std::optional<GrowthFit> f;
        if (fit) {
          f = growth_exponent_fit(g, fit_lo, fit_hi);
        }
        if (cfg.format == "json") {
          auto j = growth_json(g);
          if (f) {
            j["fit"] = fit_json(*f);
          }
          emit(j);
        } else {
          if (fit && !fit_output) {
            err << "ParseError: --fit with csv output needs --fit-output\n";
            return kInvalidInput;
          }
          *sink << "radius,gamma\n";
          for (std::size_t r = 0; r < g.gamma.size(); ++r) {
            *sink << r << "," << g.gamma[r] << "\n";
          }
          if (g.truncated) {
            *sink << "# truncated at radius " << g.radius() << " (" << g.truncation_reason
                  << ")\n";
          }
          if (f) {
            std::ofstream fo(*fit_output, std::ios::binary);
            if (!fo) {
              err << "ParseError: cannot write '" << *fit_output << "'\n";
              return kInvalidInput;
            }
            fo << fit_json(*f).dump(2) << "\n";
          }
        }
        if (g.truncated) {
          err << "CapExceeded: stopped at radius " << g.radius() << " ("
              << g.truncation_reason << ")\n";
          return kCapExhausted;
        }
        return kOk;
      }
      if (cfg.subcommand == "certify") {
        auto T = detail::load_table(cfg.inputs[0], cfg.max_elements);
        auto N = Subgroup::trivial(T);
        if (normal_spec) {
          std::vector<Index> gens;
          for (auto const& g : load_group_spec(*normal_spec).genset.elements) {
            auto i = T.find(g);
            if (!i) {
              fail(ErrorKind::InvalidElement, "normal generator is not in the group");
            }
            gens.push_back(*i);
          }
          N = subgroup_generated(T, gens);
          if (!is_normal(T, N)) {
            fail(ErrorKind::NotNormal, "--normal does not generate a normal subgroup");
          }
        }
        auto c = certify_growth_lower_bound(T, N, {transcript});
        emit(certificate_json(c, T));
        return c.holds && c.independent && c.cost_word_matches ? kOk : kFailed;
      }
    } catch (GroupError const& e) {
      err << e.what() << "\n";
      return exit_code(e.kind());
    }
    return kInvalidInput;
  }

}  // namespace solgrowth::cli

#endif  // SOLGROWTH_CLI_HPP_
