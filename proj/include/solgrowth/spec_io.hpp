#ifndef SOLGROWTH_SPEC_IO_HPP_
#define SOLGROWTH_SPEC_IO_HPP_

#include <fstream>
#include <limits>
#include <optional>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "json.hpp"

#include "solgrowth/catalog.hpp"
#include "solgrowth/element.hpp"
#include "solgrowth/error.hpp"

// Group spec files are JSON objects:
//
//   {"variant": "perm",        "degree": m,            "generators": [[images...], ...]}
//   {"variant": "matfp",       "n": n, "p": p,         "generators": [[[row], ...], ...]}
//   {"variant": "matz",        "n": n,                 "generators": [[[row], ...], ...]}
//   {"variant": "lamplighter",                         "generators": [{"lamps": [...], "head": h}, ...]}
//   {"variant": "treeauto",    "depth": d, "arity": m, "generators": [[[node labels], ...], ...]}
//   {"catalog": "<name>"}
//
// Optional keys: "name" (free text) and "symmetric" (default true). Integer
// matrix entries may be JSON integers or decimal strings. Any other key is
// rejected.

namespace solgrowth {

  using json = nlohmann::json;

  struct GroupSpec {
    GenSet                     genset;
    std::optional<std::string> name;
    std::optional<std::string> catalog_name;
  };

  namespace detail {

    [[noreturn]] inline void spec_error(std::string const& what) {
      fail(ErrorKind::ParseError, what);
    }

    inline void check_keys(json const& j, std::set<std::string> const& allowed) {
      if (!j.is_object()) {
        spec_error("group spec must be a JSON object");
      }
      for (auto const& [k, v] : j.items()) {
        if (!allowed.count(k)) {
          spec_error("unknown field '" + k + "'");
        }
      }
    }

    inline std::uint32_t get_u32(json const& j, char const* key) {
      if (!j.contains(key) || !j.at(key).is_number_unsigned()) {
        spec_error(std::string("field '") + key + "' must be a non-negative integer");
      }
      auto v = j.at(key).get<std::uint64_t>();
      if (v > 0xFFFFFFFFULL) {
        spec_error(std::string("field '") + key + "' out of range");
      }
      return static_cast<std::uint32_t>(v);
    }

    inline BigInt parse_bigint(json const& x) {
      if (x.is_number_integer()) {
        return BigInt(x.get<std::int64_t>());
      }
      if (x.is_string()) {
        auto const& s = x.get_ref<std::string const&>();
        std::size_t i = (!s.empty() && (s[0] == '-' || s[0] == '+')) ? 1 : 0;
        if (i == s.size()) {
          spec_error("bad integer '" + s + "'");
        }
        for (; i < s.size(); ++i) {
          if (s[i] < '0' || s[i] > '9') {
            spec_error("bad integer '" + s + "'");
          }
        }
        return BigInt(s);
      }
      spec_error("integer matrix entry must be an integer or a decimal string");
    }

    inline json bigint_json(BigInt const& x) {
      if (x >= std::numeric_limits<std::int64_t>::min()
          && x <= std::numeric_limits<std::int64_t>::max()) {
        return json(static_cast<std::int64_t>(x));
      }
      return json(x.str());
    }

    template <typename F>
    void matrix_rows(json const& g, std::uint32_t n, F&& each) {
      if (!g.is_array() || g.size() != n) {
        spec_error("matrix must have n rows");
      }
      for (auto const& row : g) {
        if (!row.is_array() || row.size() != n) {
          spec_error("matrix rows must have n entries");
        }
        for (auto const& x : row) {
          each(x);
        }
      }
    }

  }  // namespace detail

  inline GroupSpec parse_group_spec(json const& j) {
    using namespace detail;
    if (j.is_object() && j.contains("catalog")) {
      check_keys(j, {"catalog", "name", "symmetric"});
      if (!j.at("catalog").is_string()) {
        spec_error("'catalog' must be a string");
      }
      GroupSpec spec;
      spec.catalog_name = j.at("catalog").get<std::string>();
      spec.genset       = catalog(*spec.catalog_name);
      if (j.contains("name")) {
        spec.name = j.at("name").get<std::string>();
      }
      if (j.contains("symmetric")) {
        spec.genset.symmetric = j.at("symmetric").get<bool>();
      }
      return spec;
    }
    if (!j.is_object() || !j.contains("variant") || !j.at("variant").is_string()) {
      spec_error("group spec needs a string 'variant' or a 'catalog' name");
    }
    auto const variant = j.at("variant").get<std::string>();
    std::set<std::string> allowed{"variant", "generators", "name", "symmetric"};
    if (variant == "perm") {
      allowed.insert("degree");
    } else if (variant == "matfp") {
      allowed.insert({"n", "p"});
    } else if (variant == "matz") {
      allowed.insert("n");
    } else if (variant == "treeauto") {
      allowed.insert({"depth", "arity"});
    } else if (variant != "lamplighter") {
      spec_error("unknown variant '" + variant + "'");
    }
    check_keys(j, allowed);
    if (!j.contains("generators") || !j.at("generators").is_array()
        || j.at("generators").empty()) {
      spec_error("'generators' must be a nonempty array");
    }
    GroupSpec spec;
    if (j.contains("name")) {
      if (!j.at("name").is_string()) {
        spec_error("'name' must be a string");
      }
      spec.name = j.at("name").get<std::string>();
    }
    bool symmetric = true;
    if (j.contains("symmetric")) {
      if (!j.at("symmetric").is_boolean()) {
        spec_error("'symmetric' must be a boolean");
      }
      symmetric = j.at("symmetric").get<bool>();
    }
    std::vector<GroupElement> gens;
    for (auto const& g : j.at("generators")) {
      if (variant == "perm") {
        auto const m = get_u32(j, "degree");
        if (!g.is_array() || g.size() != m) {
          spec_error("permutation must list 'degree' images");
        }
        std::vector<std::uint32_t> im;
        for (auto const& x : g) {
          if (!x.is_number_unsigned() || x.get<std::uint64_t>() >= m) {
            spec_error("permutation image out of range");
          }
          im.push_back(x.get<std::uint32_t>());
        }
        gens.push_back(GroupElement::permutation(std::move(im)));
      } else if (variant == "matfp") {
        auto const n = get_u32(j, "n"), p = get_u32(j, "p");
        std::vector<std::uint32_t> e;
        matrix_rows(g, n, [&](json const& x) {
          if (!x.is_number_unsigned() || x.get<std::uint64_t>() >= p) {
            spec_error("F_p matrix entry must be an integer in [0, p)");
          }
          e.push_back(x.get<std::uint32_t>());
        });
        gens.push_back(GroupElement::matrix_fp(n, p, std::move(e)));
      } else if (variant == "matz") {
        auto const n = get_u32(j, "n");
        std::vector<BigInt> e;
        matrix_rows(g, n, [&](json const& x) { e.push_back(parse_bigint(x)); });
        gens.push_back(GroupElement::matrix_z(n, std::move(e)));
      } else if (variant == "lamplighter") {
        check_keys(g, {"lamps", "head"});
        if (!g.contains("lamps") || !g.at("lamps").is_array() || !g.contains("head")
            || !g.at("head").is_number_integer()) {
          spec_error("lamplighter element needs 'lamps' array and integer 'head'");
        }
        std::vector<std::int64_t> lamps;
        for (auto const& x : g.at("lamps")) {
          if (!x.is_number_integer()) {
            spec_error("lamp position must be an integer");
          }
          lamps.push_back(x.get<std::int64_t>());
        }
        gens.push_back(GroupElement::lamplighter(std::move(lamps),
                                                 g.at("head").get<std::int64_t>()));
      } else {
        auto const d = get_u32(j, "depth"), m = get_u32(j, "arity");
        if (d == 0 || m < 2 || m > 255 || tree_nodes(d, m) > (1u << 20)) {
          spec_error("tree shape out of range");
        }
        if (!g.is_array() || g.size() != tree_nodes(d, m)) {
          spec_error("portrait must list one label per internal vertex");
        }
        std::vector<std::uint8_t> labels;
        for (auto const& node : g) {
          if (!node.is_array() || node.size() != m) {
            spec_error("vertex label must be a permutation of the arity");
          }
          for (auto const& x : node) {
            if (!x.is_number_unsigned() || x.get<std::uint64_t>() >= m) {
              spec_error("vertex label entry out of range");
            }
            labels.push_back(x.get<std::uint8_t>());
          }
        }
        gens.push_back(GroupElement::tree_auto(d, m, std::move(labels)));
      }
    }
    spec.genset = GenSet(std::move(gens), symmetric);
    return spec;
  }

  inline json element_json(GroupElement const& g) {
    switch (g.variant()) {
      case Variant::Permutation: return json(g.as<Permutation>().images);
      case Variant::MatrixFp: {
        auto const& m = g.as<MatrixFp>();
        json rows = json::array();
        for (std::uint32_t i = 0; i < m.n; ++i) {
          rows.push_back(std::vector<std::uint32_t>(m.entries.begin() + i * m.n,
                                                    m.entries.begin() + (i + 1) * m.n));
        }
        return rows;
      }
      case Variant::MatrixZ: {
        auto const& m = g.as<MatrixZ>();
        json rows = json::array();
        for (std::uint32_t i = 0; i < m.n; ++i) {
          json row = json::array();
          for (std::uint32_t k = 0; k < m.n; ++k) {
            row.push_back(detail::bigint_json(m.entries[i * m.n + k]));
          }
          rows.push_back(row);
        }
        return rows;
      }
      case Variant::Lamplighter: {
        auto const& l = g.as<Lamplighter>();
        return json{{"lamps", l.lamps}, {"head", l.head}};
      }
      case Variant::TreeAuto: {
        auto const& t = g.as<TreeAuto>();
        json nodes = json::array();
        for (std::size_t u = 0; u < t.labels.size(); u += t.arity) {
          std::vector<std::uint32_t> lab(t.labels.begin() + u,
                                         t.labels.begin() + u + t.arity);
          nodes.push_back(lab);
        }
        return nodes;
      }
    }
    return {};
  }

  /// Explicit form of a spec (catalog specs are expanded to generators).
  inline json to_json(GroupSpec const& spec) {
    auto const& X  = spec.genset;
    auto const& g0 = X.elements.front();
    json        j;
    j["variant"] = std::string(to_string(g0.variant()));
    switch (g0.variant()) {
      case Variant::Permutation: j["degree"] = g0.as<Permutation>().images.size(); break;
      case Variant::MatrixFp:
        j["n"] = g0.as<MatrixFp>().n;
        j["p"] = g0.as<MatrixFp>().p;
        break;
      case Variant::MatrixZ: j["n"] = g0.as<MatrixZ>().n; break;
      case Variant::Lamplighter: break;
      case Variant::TreeAuto:
        j["depth"] = g0.as<TreeAuto>().depth;
        j["arity"] = g0.as<TreeAuto>().arity;
        break;
    }
    json gens = json::array();
    for (auto const& g : X.elements) {
      gens.push_back(element_json(g));
    }
    j["generators"] = gens;
    if (spec.name) {
      j["name"] = *spec.name;
    } else if (spec.catalog_name) {
      j["name"] = *spec.catalog_name;
    }
    if (!X.symmetric) {
      j["symmetric"] = false;
    }
    return j;
  }

  inline json read_json_file(std::string const& path) {
    std::ifstream in(path);
    if (!in) {
      detail::spec_error("cannot open '" + path + "'");
    }
    std::stringstream buf;
    buf << in.rdbuf();
    try {
      return json::parse(buf.str());
    } catch (json::parse_error const& e) {
      detail::spec_error("malformed JSON in '" + path + "': " + e.what());
    }
  }

  inline GroupSpec load_group_spec(std::string const& path) {
    try {
      return parse_group_spec(read_json_file(path));
    } catch (json::exception const& e) {
      detail::spec_error(std::string("bad group spec: ") + e.what());
    }
  }

}  // namespace solgrowth

#endif  // SOLGROWTH_SPEC_IO_HPP_
