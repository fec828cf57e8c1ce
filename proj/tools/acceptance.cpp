// Acceptance run: one PASS/FAIL line per criterion, exit status 1 if any fails.

#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <map>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "solgrowth/certificate.hpp"
#include "solgrowth/growth.hpp"
#include "solgrowth/small_cases.hpp"

using namespace solgrowth;

namespace {

  struct Outcome {
    bool        pass = false;
    std::string detail;
  };

  // Named groups of order <= 200 built from the catalog: atoms, wreath
  // products, and direct products of pairs.
  std::vector<std::string> catalog_names() {
    std::vector<std::string> names;
    for (int n = 2; n <= 200; ++n) {
      names.push_back("C" + std::to_string(n));
    }
    for (int n = 4; n <= 200; n += 2) {
      names.push_back("D" + std::to_string(n));
    }
    for (auto const* s :
         {"S3", "S4", "A4", "Q8", "SL2(3)", "GL2(2)", "GL2(3)", "F2^2", "F2^3", "F2^4", "F2^5",
          "F3^2", "F3^3", "F5^2", "F7^2", "F11^2", "F13^2", "AGL1(3)", "AGL1(4)", "AGL1(5)",
          "AGL1(7)", "AGL1(8)", "AGL1(9)", "AGL1(11)", "AGL1(13)", "F3^2:Q8", "F2^3:C7",
          "F2^3:(7:3)", "(7:3)", "(31:5)", "GammaL1(3^2)", "GammaL1(2^4)", "GammaL1(5^2)",
          "GammaL1(7^2)", "GammaL1(2^5)", "C2wrC2", "C2wrC3", "C3wrC2", "C2wrS3", "S3wrC2",
          "C3wrC3", "C2wrC4", "C4wrC2", "S3wrS2", "C2wrA4", "C2wrD8", "C5wrC2", "C2wrC5",
          "C3wrS3", "D8wrC2", "Q8wrC2", "GL1(3)wrS2", "GL1(5)wrS2", "GL1(7)wrS2", "GL1(3)wrS3",
          "GL2(2)wrC2", "Q8^2", "S3^2", "A4^2", "D8^2", "C2wrC2wrC2", "S4tower(1)",
          "S4tower'(1)"}) {
      names.push_back(s);
    }
    std::vector<std::pair<std::string, std::size_t>> base{
        {"C2", 2},   {"C3", 3},   {"C4", 4},    {"C5", 5},      {"C6", 6},   {"C7", 7},
        {"S3", 6},   {"D8", 8},   {"Q8", 8},    {"C2xC2", 4},   {"A4", 12},  {"D10", 10},
        {"D12", 12}, {"S4", 24},  {"SL2(3)", 24}, {"AGL1(5)", 20}, {"F3^2:Q8", 72},
        {"(7:3)", 21}, {"GL2(3)", 48}, {"F2^3:C7", 56}, {"C9", 9}, {"F3^2", 9}};
    for (std::size_t i = 0; i < base.size(); ++i) {
      for (std::size_t j = i; j < base.size(); ++j) {
        if (base[i].second * base[j].second <= 200) {
          names.push_back(base[i].first + "x" + base[j].first);
        }
      }
    }
    return names;
  }

  struct CorpusGroup {
    std::string      name;
    FiniteGroupTable table;
  };

  std::vector<CorpusGroup> const& catalog_corpus() {
    static std::vector<CorpusGroup> const corpus = [] {
      std::vector<CorpusGroup> out;
      for (auto const& name : catalog_names()) {
        try {
          auto T = enumerate_group(catalog(name), 200);
          if (is_soluble(T)) {
            out.push_back({name, std::move(T)});
          }
        } catch (GroupError const& e) {
          if (e.kind() != ErrorKind::CapExceeded) {
            throw;
          }
        }
      }
      return out;
    }();
    return corpus;
  }

  std::vector<std::string> const kAmbients{"S4", "SL2(3)", "GL2(3)", "Q8^2", "F3^2:Q8"};

  // Every subgroup of the ambient groups, as (ambient index, subgroup).
  struct AmbientSubgroups {
    std::vector<FiniteGroupTable>                   tables;
    std::vector<std::pair<std::size_t, Subgroup>>   subgroups;
  };

  AmbientSubgroups const& ambient_subgroups() {
    static AmbientSubgroups const all = [] {
      AmbientSubgroups out;
      for (auto const& name : kAmbients) {
        out.tables.push_back(enumerate_group(catalog(name)));
      }
      for (std::size_t a = 0; a < out.tables.size(); ++a) {
        auto const& T = out.tables[a];
        auto const  G = whole_group(T);
        for (auto const& cls : soluble_subgroup_classes(T)) {
          for (auto const& members : conjugates(T, G, cls.representative)) {
            out.subgroups.emplace_back(a, subgroup_from_members(T, members));
          }
        }
      }
      return out;
    }();
    return all;
  }

  FiniteGroupTable subgroup_table(FiniteGroupTable const& T, Subgroup const& H) {
    if (H.is_trivial()) {
      auto g = T.element(0);
      return enumerate_group(GenSet({g}, true, true));
    }
    return enumerate_group(GenSet(detail::subgroup_elements(T, H)));
  }

  // 1 -----------------------------------------------------------------------
  Outcome mu_oracle_equivalence() {
    std::size_t groups = 0, mismatches = 0;
    std::string first;
    for (auto const& g : catalog_corpus()) {
      ++groups;
      auto f = mu_fast(g.table).first;
      auto b = mu_bruteforce(g.table).first;
      if (f != b) {
        ++mismatches;
        first = first.empty() ? g.name : first;
      }
    }
    auto const& A = ambient_subgroups();
    std::vector<MuFast>       fast;
    std::vector<MuBruteForce> brute;
    for (auto const& T : A.tables) {
      fast.emplace_back(T);
      brute.emplace_back(T);
    }
    for (auto const& [a, H] : A.subgroups) {
      ++groups;
      if (fast[a].value(H) != brute[a].value(H)) {
        ++mismatches;
        first = first.empty() ? kAmbients[a] + " subgroup" : first;
      }
    }
    return {mismatches == 0 && groups > 0,
            std::to_string(groups) + " groups (" + std::to_string(catalog_corpus().size())
                + " catalog, " + std::to_string(A.subgroups.size())
                + " ambient subgroups), " + std::to_string(mismatches) + " mismatches"
                + (first.empty() ? "" : ", first " + first)};
  }

  // 2 -----------------------------------------------------------------------
  Outcome anchor_values() {
    auto q8  = mu_fast(enumerate_group(catalog("Q8"))).first;
    auto sl  = mu_fast(enumerate_group(catalog("SL2(3)"))).first;
    auto gl  = enumerate_group(catalog("GL2(3)"));
    auto del = *derived_length(gl);
    auto sig = sigma_value(2).value;
    bool ok  = q8 == MuValue{0, 1} && sl == MuValue{1, 1} && sig == 4 && del == 4;
    return {ok, "mu(Q8) = " + q8.str() + ", mu(SL2(3)) = " + sl.str() + ", sigma(2) = "
                    + std::to_string(sig) + ", delta(GL2(3)) = " + std::to_string(del)};
  }

  // 3 -----------------------------------------------------------------------
  Outcome product_counterexample() {
    auto r = product_counterexample_check(catalog("SL2(3)"), catalog("F3^2:Q8"));
    bool ok = r.strict && r.mu1 == MuValue{1, 1} && r.mu2 == MuValue{1, 1}
           && r.mu_product > MuValue{1, 1};
    return {ok, "mu(G1) = " + r.mu1.str() + ", mu(G2) = " + r.mu2.str()
                    + ", mu(G1 x G2) = " + r.mu_product.str()};
  }

  // 4 -----------------------------------------------------------------------
  Outcome mu_properties() {
    std::set<std::string> const powered{"Q8", "S3", "SL2(3)"};
    std::size_t sub = 0, quo = 0, ext = 0, pw = 0, bad = 0;
    std::string first;
    auto run = [&](FiniteGroupTable const& T, std::string const& name) {
      auto r = mu_properties_check(T, name, powered.count(name) > 0);
      sub += r.subgroup_checks;
      quo += r.quotient_checks;
      ext += r.extension_checks;
      pw += r.power_checks;
      bad += r.violations.size();
      if (!r.violations.empty() && first.empty()) {
        first = r.violations.front();
      }
    };
    for (auto const& g : catalog_corpus()) {
      run(g.table, g.name);
    }
    for (std::size_t a = 0; a < kAmbients.size(); ++a) {
      run(ambient_subgroups().tables[a], kAmbients[a]);
    }
    bool ok = bad == 0 && pw >= powered.size();
    return {ok, std::to_string(sub) + " subgroup, " + std::to_string(quo) + " quotient, "
                    + std::to_string(ext) + " extension, " + std::to_string(pw)
                    + " power checks, " + std::to_string(bad) + " violations"
                    + (first.empty() ? "" : ", first: " + first)};
  }

  // 5 -----------------------------------------------------------------------
  Outcome small_cases() {
    auto rep = verify_small_cases();
    std::set<std::string> exhaustive, witness;
    std::size_t           failures = 0;
    for (auto const& r : rep) {
      (r.mode == CheckMode::Exhaustive ? exhaustive : witness).insert(r.id);
      failures += r.pass ? 0 : 1;
    }
    bool ok = failures == 0;
    for (auto id : {"1", "2", "3", "4", "T2", "T3", "T4", "T5", "T6"}) {
      ok = ok && exhaustive.count(id);
    }
    for (auto id : {"5", "6", "7", "8", "9"}) {
      ok = ok && witness.count(id);
    }
    return {ok, std::to_string(rep.size()) + " reports, " + std::to_string(exhaustive.size())
                    + " exhaustive / " + std::to_string(witness.size()) + " witness ids, "
                    + std::to_string(failures) + " failures"};
  }

  // 6 -----------------------------------------------------------------------
  Outcome mu_bound_spot_checks() {
    std::size_t checked = 0, bad = 0;
    std::string first;
    auto check = [&](std::string const& name, MuContext ctx) {
      ++checked;
      auto r = verify_mu_bound(catalog(name), ctx);
      if (!r.holds) {
        ++bad;
        first = first.empty() ? name : first;
      }
    };
    for (auto const& name : catalog_names()) {
      auto X = catalog(name);
      if (X.elements.front().variant() != Variant::Permutation) {
        continue;
      }
      auto const deg = static_cast<std::uint32_t>(
          X.elements.front().as<Permutation>().images.size());
      if (deg > 8 || !permutation_structure(X).transitive) {
        continue;
      }
      if (!is_soluble(enumerate_group(X))) {
        continue;
      }
      check(name, MuContext::transitive(deg));
    }
    for (auto const* name : {"S2wrS4", "C2wrC2wrC2", "AGL1(8)", "AGL1(7)", "S4wrC2", "D16"}) {
      auto X = catalog(name);
      check(name, MuContext::transitive(static_cast<std::uint32_t>(
                      X.elements.front().as<Permutation>().images.size())));
    }
    std::size_t irr = 0;
    for (auto const* name : {"GL2(2)", "GL2(3)", "SL2(3)", "GammaL1(2^3)",
                             "GammaL1(3^2)", "GammaL1(5^2)", "GammaL1(2^4)", "GL1(3)wrS2",
                             "GL1(5)wrS2", "GL1(3)wrS3", "GL1(5)wrS3", "GL2(2)wrS2",
                             "GammaL1(3^3)", "GL1(3)wrS4", "GL2(3)wrS2", "SL2(3)wrS2",
                             "GammaL1(3^4)", "GL1(5)wrS4", "GammaL1(2^2)"}) {
      auto        X = catalog(name);
      auto const& m = X.elements.front().as<MatrixFp>();
      if (m.n <= 4 && is_irreducible(X)) {
        ++irr;
        check(name, MuContext::irreducible(m.n, m.p));
      }
    }
    return {bad == 0 && irr > 0, std::to_string(checked) + " groups (" + std::to_string(irr)
                                     + " irreducible), " + std::to_string(bad) + " failures"
                                     + (first.empty() ? "" : ", first " + first)};
  }

  // 7 -----------------------------------------------------------------------
  Outcome growth_exactness() {
    using clock = std::chrono::steady_clock;
    bool ok = true;
    auto t0 = clock::now();
    auto z  = growth_table(catalog("Z^2"), 25);
    for (std::uint64_t n = 0; n <= 25; ++n) {
      ok = ok && z.gamma.size() == 26 && z.gamma[n] == 2 * n * n + 2 * n + 1;
    }
    auto t1 = clock::now();
    auto f  = growth_table(catalog("Sanov"), 12);
    std::uint64_t p3 = 1;
    for (std::size_t n = 0; n <= 12; ++n, p3 *= 3) {
      ok = ok && f.gamma.size() == 13 && f.gamma[n] == 2 * p3 - 1;
    }
    auto t2  = clock::now();
    auto h   = growth_table(catalog("Heisenberg"), 18);
    auto fit = growth_exponent_fit(h, 10, 18);
    auto t3  = clock::now();
    ok = ok && fit.poly_degree >= 3.3 && fit.poly_degree <= 4.5;
    auto secs = [](auto a, auto b) { return std::chrono::duration<double>(b - a).count(); };
    ok = ok && secs(t0, t1) < 120 && secs(t1, t2) < 120 && secs(t2, t3) < 120;
    char buf[200];
    std::snprintf(buf, sizeof buf,
                  "Z^2 0..25 and Sanov 0..12 exact, Heisenberg degree %.3f on 10..18 "
                  "(%.2fs, %.2fs, %.2fs)",
                  fit.poly_degree, secs(t0, t1), secs(t1, t2), secs(t2, t3));
    return {ok, buf};
  }

  // 8 -----------------------------------------------------------------------
  Outcome milnor_soundness() {
    std::size_t pairs = 0, bad = 0;
    for (auto const* name : {"S3", "S4", "Q8", "SL2(3)", "D8", "A4", "AGL1(5)", "F2^3:C7",
                             "GL2(3)", "F3^2:Q8", "C2wrC2", "(7:3)", "S3wrS2", "AGL1(7)"}) {
      auto T = enumerate_group(catalog(name));
      std::vector<std::vector<Index>> seeds;
      std::set<Index>                 orders;
      for (Index g = 1; g < T.order(); ++g) {
        if (orders.insert(T.element_order(g)).second) {
          seeds.push_back({g});
        }
      }
      if (T.generators().size() >= 2) {
        seeds.push_back({T.comm(T.generators()[0], T.generators()[1])});
      }
      auto const growth = T.growth();
      for (auto const& Y : seeds) {
        ++pairs;
        auto c = milnor_chain(T, Y);
        auto d = distinct_products_check(T, c);
        bool ok = c.closure_verified && c.H.back() == normal_closure(T, Y)
               && c.length_Z <= c.length_Y + 2 * c.k && d.distinct
               && growth[std::min<std::size_t>(d.radius, growth.size() - 1)] >= d.bound;
        bad += ok ? 0 : 1;
      }
    }
    return {pairs >= 20 && bad == 0,
            std::to_string(pairs) + " (group, Y) pairs, " + std::to_string(bad) + " failures"};
  }

  // 9 -----------------------------------------------------------------------
  Outcome certificate_pipeline() {
    bool        ok = true;
    std::string detail;
    for (auto const* name : {"F2^3:C7", "S4", "F3^2:Q8"}) {
      auto X = catalog(name);
      auto T = enumerate_group(X);
      auto c = certify_growth_lower_bound(T, Subgroup::trivial(T));
      auto g = growth_table(X, static_cast<std::uint32_t>(c.radius));
      std::size_t pn = 1;
      for (std::uint32_t i = 0; i < c.n; ++i) {
        pn *= c.p;
      }
      bool const ends_at_v = c.series_orders.size() >= 2
                          && c.series_orders[c.series_orders.size() - 2] == pn;
      bool const this_ok = c.holds && c.independent && c.distinct && c.cost_word_matches
                        && c.mu == mu_fast(T).first && g.gamma.back() >= c.bound && ends_at_v;
      ok = ok && this_ok;
      std::string costs;
      for (auto a : c.costs) {
        costs += (costs.empty() ? "" : ",") + std::to_string(a);
      }
      detail += std::string(detail.empty() ? "" : "; ") + name + ": n=" + std::to_string(c.n)
              + " a=(" + costs + ") gamma(" + std::to_string(c.radius)
              + ")=" + std::to_string(g.gamma.back()) + ">=" + std::to_string(c.bound);
    }
    return {ok, detail};
  }

  // 10 ----------------------------------------------------------------------
  Outcome srank_checks() {
    std::size_t groups = 0, bad = 0;
    std::string first;
    auto run = [&](FiniteGroupTable const& T, std::string const& name) {
      if (T.order() == 1) {
        return;
      }
      ++groups;
      auto const r  = sc_chief_rank(T);
      bool const ok = check_srank_nilpotency(T, r)
                   && is_supersoluble(T) == has_cyclic_chief_series(T)
                   && (r == 1) == has_cyclic_chief_series(T);
      if (!ok) {
        ++bad;
        first = first.empty() ? name : first;
      }
    };
    for (auto const& g : catalog_corpus()) {
      run(g.table, g.name);
    }
    auto const& A = ambient_subgroups();
    for (auto const& [a, H] : A.subgroups) {
      run(subgroup_table(A.tables[a], H), kAmbients[a] + " subgroup");
    }
    return {bad == 0, std::to_string(groups) + " groups, " + std::to_string(bad) + " failures"
                          + (first.empty() ? "" : ", first " + first)};
  }

}  // namespace

int main() {
  using clock = std::chrono::steady_clock;
  std::vector<std::pair<std::string, std::function<Outcome()>>> const criteria{
      {"mu oracle equivalence", mu_oracle_equivalence},
      {"anchor values", anchor_values},
      {"direct-product counterexample", product_counterexample},
      {"mu subgroup, quotient and extension properties", mu_properties},
      {"small-cases suite", small_cases},
      {"mu bound spot checks", mu_bound_spot_checks},
      {"growth engine exactness", growth_exactness},
      {"Milnor chain soundness", milnor_soundness},
      {"certificate pipeline", certificate_pipeline},
      {"chief rank nilpotency and supersolubility", srank_checks},
  };
  int failed = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    auto    t0 = clock::now();
    Outcome o;
    try {
      o = criteria[i].second();
    } catch (std::exception const& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    double const s = std::chrono::duration<double>(clock::now() - t0).count();
    std::printf("%s %zu %s: %s [%.1fs]\n", o.pass ? "PASS" : "FAIL", i + 1,
                criteria[i].first.c_str(), o.detail.c_str(), s);
    std::fflush(stdout);
    failed += o.pass ? 0 : 1;
  }
  return failed == 0 ? 0 : 1;
}
