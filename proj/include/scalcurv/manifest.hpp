#pragma once

/*
 * JSON manifests for manifolds and cobordisms.
 *
 * Manifold manifest:
 *   {"name": str, "dimension": int, "signature": int,
 *    "pontrjagin_numbers": {"[2,1]": "num/den", ...},
 *    "is_spin": bool, "rational_pontrjagin_classes_vanish": bool,
 *    "admits_psc": bool}
 *
 * Cobordism manifest:
 *   {"name": str, "dimension": int, "signature": int,
 *    "relative_pontrjagin_numbers": {...},
 *    "boundary": <manifold manifest object or "catalog:S7">,
 *    "psc_extension": bool}
 *
 * Parsing is strict: unknown fields are rejected, partition keys must be
 * in canonical non-increasing form, and the structural invariants of the
 * parsed data are enforced.  `name` and `dimension` are required; number
 * tables, signature, and flags default to empty/0/false.  Anywhere a
 * manifold is expected, the string "catalog:NAME" resolves against the
 * built-in catalog, extended by *.json files in the directory named by
 * the SCALCURV_CATALOG environment variable.
 */

#include "scalcurv/cobordism.hpp"
#include "scalcurv/manifold.hpp"

#include <json.hpp>

#include <algorithm>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <limits>
#include <map>
#include <sstream>
#include <string>
#include <vector>

namespace scalcurv {

namespace detail {

inline Rational parse_rational_field(const nlohmann::json& v, const std::string& where) {
    if (v.is_string()) return Rational::parse(v.get<std::string>());
    if (v.is_number_integer()) return Rational(v.get<long long>());
    throw std::invalid_argument(where + ": expected a rational as \"num/den\" string or integer");
}

inline Integer parse_integer_field(const nlohmann::json& v, const std::string& where) {
    if (v.is_number_integer()) return Integer(v.get<long long>());
    if (v.is_string()) {
        Rational r = Rational::parse(v.get<std::string>());
        if (!r.is_integer()) throw std::invalid_argument(where + ": expected an integer");
        return r.numerator();
    }
    throw std::invalid_argument(where + ": expected an integer");
}

inline std::map<Partition, Rational> parse_number_table(const nlohmann::json& v,
                                                        const std::string& where) {
    if (!v.is_object())
        throw std::invalid_argument(where + ": expected an object of partition keys");
    std::map<Partition, Rational> table;
    for (const auto& [key, val] : v.items()) {
        Partition p = Partition::parse(key);
        Rational c = parse_rational_field(val, where + "." + key);
        if (!c.is_zero()) table.emplace(std::move(p), std::move(c));
    }
    return table;
}

inline void reject_unknown_fields(const nlohmann::json& j,
                                  const std::vector<std::string>& allowed,
                                  const std::string& what) {
    for (const auto& [key, val] : j.items()) {
        bool known = false;
        for (const auto& a : allowed)
            if (key == a) {
                known = true;
                break;
            }
        if (!known)
            throw std::invalid_argument("unknown field '" + key + "' in " + what);
    }
}

inline nlohmann::json rational_to_json(const Rational& r) { return r.to_string(); }

inline nlohmann::json integer_to_json(const Integer& n) {
    static const Integer lo = Integer(std::numeric_limits<long long>::min());
    static const Integer hi = Integer(std::numeric_limits<long long>::max());
    if (n >= lo && n <= hi) return n.convert_to<long long>();
    return n.str();
}

}  // namespace detail

CharacteristicData resolve_catalog(const std::string& name);

inline CharacteristicData parse_manifold_manifest(const nlohmann::json& j) {
    if (j.is_string()) {
        const std::string s = j.get<std::string>();
        if (s.rfind("catalog:", 0) == 0) return resolve_catalog(s.substr(8));
        throw std::invalid_argument("manifold manifest: expected an object or a "
                                    "\"catalog:NAME\" reference, got string '" + s + "'");
    }
    if (!j.is_object())
        throw std::invalid_argument("manifold manifest: expected a JSON object");
    detail::reject_unknown_fields(j,
                                  {"name", "dimension", "signature", "pontrjagin_numbers",
                                   "is_spin", "rational_pontrjagin_classes_vanish",
                                   "admits_psc"},
                                  "manifold manifest");
    CharacteristicData m;
    if (!j.contains("name") || !j.at("name").is_string())
        throw std::invalid_argument("manifold manifest: required field 'name' (string)");
    m.name = j.at("name").get<std::string>();
    if (!j.contains("dimension") || !j.at("dimension").is_number_integer() ||
        j.at("dimension").get<long long>() < 0)
        throw std::invalid_argument("manifold manifest field 'dimension': required "
                                    "non-negative integer");
    m.dimension = unsigned(j.at("dimension").get<long long>());
    if (j.contains("signature"))
        m.signature = detail::parse_integer_field(j.at("signature"), "field 'signature'");
    if (j.contains("pontrjagin_numbers"))
        m.pontrjagin_numbers =
            detail::parse_number_table(j.at("pontrjagin_numbers"), "field 'pontrjagin_numbers'");
    auto flag = [&](const char* field) {
        if (!j.contains(field)) return false;
        if (!j.at(field).is_boolean())
            throw std::invalid_argument(std::string("manifold manifest field '") + field +
                                        "': expected a boolean");
        return j.at(field).get<bool>();
    };
    m.is_spin = flag("is_spin");
    m.rational_pontrjagin_classes_vanish = flag("rational_pontrjagin_classes_vanish");
    m.admits_psc = flag("admits_psc");
    validate_characteristic_data(m);
    return m;
}

inline nlohmann::json manifold_to_json(const CharacteristicData& m) {
    nlohmann::json numbers = nlohmann::json::object();
    for (const auto& [p, c] : m.pontrjagin_numbers)
        numbers[p.to_string()] = detail::rational_to_json(c);
    return nlohmann::json{{"name", m.name},
                          {"dimension", m.dimension},
                          {"signature", detail::integer_to_json(m.signature)},
                          {"pontrjagin_numbers", numbers},
                          {"is_spin", m.is_spin},
                          {"rational_pontrjagin_classes_vanish",
                           m.rational_pontrjagin_classes_vanish},
                          {"admits_psc", m.admits_psc}};
}

inline CobordismData parse_cobordism_manifest(const nlohmann::json& j) {
    if (!j.is_object())
        throw std::invalid_argument("cobordism manifest: expected a JSON object");
    detail::reject_unknown_fields(j,
                                  {"name", "dimension", "signature",
                                   "relative_pontrjagin_numbers", "boundary",
                                   "psc_extension"},
                                  "cobordism manifest");
    CobordismData w;
    if (!j.contains("name") || !j.at("name").is_string())
        throw std::invalid_argument("cobordism manifest: required field 'name' (string)");
    w.name = j.at("name").get<std::string>();
    if (!j.contains("dimension") || !j.at("dimension").is_number_integer() ||
        j.at("dimension").get<long long>() <= 0)
        throw std::invalid_argument("cobordism manifest field 'dimension': required "
                                    "positive integer");
    w.dimension = unsigned(j.at("dimension").get<long long>());
    if (j.contains("signature"))
        w.signature = detail::parse_integer_field(j.at("signature"), "field 'signature'");
    if (j.contains("relative_pontrjagin_numbers"))
        w.relative_pontrjagin_numbers = detail::parse_number_table(
            j.at("relative_pontrjagin_numbers"), "field 'relative_pontrjagin_numbers'");
    if (!j.contains("boundary"))
        throw std::invalid_argument("cobordism manifest: required field 'boundary'");
    w.boundary = parse_manifold_manifest(j.at("boundary"));
    if (j.contains("psc_extension")) {
        if (!j.at("psc_extension").is_boolean())
            throw std::invalid_argument(
                "cobordism manifest field 'psc_extension': expected a boolean");
        w.psc_extension = j.at("psc_extension").get<bool>();
    }
    validate_cobordism_data(w);
    return w;
}

inline nlohmann::json cobordism_to_json(const CobordismData& w) {
    nlohmann::json numbers = nlohmann::json::object();
    for (const auto& [p, c] : w.relative_pontrjagin_numbers)
        numbers[p.to_string()] = detail::rational_to_json(c);
    return nlohmann::json{{"name", w.name},
                          {"dimension", w.dimension},
                          {"signature", detail::integer_to_json(w.signature)},
                          {"relative_pontrjagin_numbers", numbers},
                          {"boundary", manifold_to_json(w.boundary)},
                          {"psc_extension", w.psc_extension}};
}

namespace detail {

inline nlohmann::json parse_json_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::invalid_argument("cannot open file '" + path + "'");
    std::stringstream buf;
    buf << in.rdbuf();
    const std::string text = buf.str();
    try {
        return nlohmann::json::parse(text);
    } catch (const nlohmann::json::parse_error& e) {
        // Convert the byte offset in the exception to a line/column pair.
        std::size_t line = 1, col = 1;
        for (std::size_t i = 0; i + 1 < e.byte && i < text.size(); ++i) {
            if (text[i] == '\n') {
                ++line;
                col = 1;
            } else {
                ++col;
            }
        }
        throw std::invalid_argument("'" + path + "' line " + std::to_string(line) +
                                    ", column " + std::to_string(col) +
                                    ": JSON parse error: " + e.what());
    }
}

}  // namespace detail

// Built-in catalog extended by *.json manifold manifests in the directory
// named by SCALCURV_CATALOG.  File entries are matched by their "name"
// field; the built-in names win.
inline CharacteristicData resolve_catalog(const std::string& name) {
    try {
        return catalog(name);
    } catch (const std::invalid_argument&) {
    }
    std::vector<std::string> extra_names;
    if (const char* dir = std::getenv("SCALCURV_CATALOG")) {
        std::vector<std::filesystem::path> files;
        std::error_code ec;
        for (const auto& entry : std::filesystem::directory_iterator(dir, ec))
            if (entry.path().extension() == ".json") files.push_back(entry.path());
        std::sort(files.begin(), files.end());
        for (const auto& f : files) {
            CharacteristicData m;
            try {
                m = parse_manifold_manifest(detail::parse_json_file(f.string()));
            } catch (const std::exception& e) {
                throw std::invalid_argument("catalog directory entry '" + f.string() +
                                            "': " + e.what());
            }
            if (m.name == name) return m;
            extra_names.push_back(m.name);
        }
    }
    std::string msg = "unknown catalog entry '" + name +
                      "'; available: point, K3, Bott, HP2, S<n> for n >= 1";
    for (const auto& n : extra_names) msg += ", " + n;
    throw std::invalid_argument(msg);
}

// Loads a manifold from a "catalog:NAME" reference or a manifest file path.
inline CharacteristicData load_manifold(const std::string& ref) {
    if (ref.rfind("catalog:", 0) == 0) return resolve_catalog(ref.substr(8));
    try {
        return parse_manifold_manifest(detail::parse_json_file(ref));
    } catch (const std::invalid_argument& e) {
        std::string what = e.what();
        if (what.rfind("'" + ref + "'", 0) == 0 || what.rfind("cannot open", 0) == 0)
            throw;
        throw std::invalid_argument("'" + ref + "': " + what);
    }
}

inline CobordismData load_cobordism(const std::string& path) {
    try {
        return parse_cobordism_manifest(detail::parse_json_file(path));
    } catch (const std::invalid_argument& e) {
        std::string what = e.what();
        if (what.rfind("'" + path + "'", 0) == 0 || what.rfind("cannot open", 0) == 0)
            throw;
        throw std::invalid_argument("'" + path + "': " + what);
    }
}

}  // namespace scalcurv
