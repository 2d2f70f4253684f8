#include "satkit/catalog.hpp"

#include <algorithm>
#include <fstream>
#include <set>
#include <sstream>

#include "satkit/polyexpr.hpp"

#ifndef SATKIT_DATA_DIR
#define SATKIT_DATA_DIR "data"
#endif

namespace satkit {

using nlohmann::json;

SatelliteFamily CatalogEntry::satellite_family() const {
    if (family) return *family;
    if (record.rank.value_or(-1) != 1) {
        throw MissingData(id + ": no satellite family stored and the entry is not of rank one");
    }
    return SatelliteFamily{1, {{{}, record.p_gh_empty}, {{1}, record.p_gh}}};
}

LaurentPoly CatalogEntry::recompute_p_gh_empty() const {
    if (!closed_orbit) throw MissingData(id + ": no closed-orbit data");
    const RootSystem rs = RootSystem::parse(closed_orbit->type);
    return LaurentPoly::t_power_minus_one(1) * flag_poincare_degrees(rs, LeviSubset::parse(rs, closed_orbit->levi));
}

// ---------------------------------------------------------------- schema

namespace {

const std::set<std::string> kEntryKeys{"id",     "row",         "description", "G",           "H",
                                       "parameter", "p_gh",     "p_gh_empty",  "r_empty",     "rank",
                                       "groups", "connected_h", "closed_orbit", "p_x",        "family",
                                       "r_family"};

[[noreturn]] void schema_fail(const std::string& where, const std::string& msg) { throw SchemaError(where + ": " + msg); }

void require_type(const json& e, const std::string& id, const char* key, bool (json::*pred)() const noexcept,
                  const char* what, bool required) {
    if (!e.contains(key)) {
        if (required) schema_fail(id + "." + key, "missing");
        return;
    }
    if (!(e[key].*pred)()) schema_fail(id + "." + key, std::string("expected ") + what);
}

void check_string_map(const json& e, const std::string& id, const char* key) {
    if (!e.contains(key)) return;
    if (!e[key].is_object()) schema_fail(id + "." + key, "expected an object of polynomial strings");
    for (const auto& [k, v] : e[key].items()) {
        if (!v.is_string()) schema_fail(id + "." + key + "[" + k + "]", "expected a polynomial string");
        try {
            parse_index_list(k);
        } catch (const BadLevi&) {
            schema_fail(id + "." + key, "key \"" + k + "\" is not an index list");
        }
    }
}

std::optional<ParameterRange> check_entry_schema(const json& e, const std::string& id) {
    for (const auto& [key, value] : e.items()) {
        if (!kEntryKeys.count(key)) schema_fail(id + "." + key, "unknown field");
        (void)value;
    }
    require_type(e, id, "description", &json::is_string, "a string", true);
    require_type(e, id, "row", &json::is_string, "a string", false);
    require_type(e, id, "G", &json::is_string, "a string", false);
    require_type(e, id, "H", &json::is_string, "a string", false);
    require_type(e, id, "p_gh", &json::is_string, "a polynomial string", true);
    require_type(e, id, "p_gh_empty", &json::is_string, "a polynomial string", true);
    require_type(e, id, "r_empty", &json::is_string, "a polynomial string", false);
    require_type(e, id, "p_x", &json::is_string, "a polynomial string", false);
    require_type(e, id, "rank", &json::is_number_integer, "an integer", false);
    require_type(e, id, "connected_h", &json::is_boolean, "a boolean", false);
    if (e.contains("rank") && e["rank"].get<long>() < 0) schema_fail(id + ".rank", "negative");
    check_string_map(e, id, "family");
    check_string_map(e, id, "r_family");

    if (e.contains("groups")) {
        const json& g = e["groups"];
        if (!g.is_object()) schema_fail(id + ".groups", "expected an object");
        for (const char* k : {"u_G", "u_H", "r_G", "r_H"}) {
            if (!g.contains(k)) schema_fail(id + ".groups." + k, "missing");
            if (!g[k].is_number_integer() && !g[k].is_string()) {
                schema_fail(id + ".groups." + k, "expected an integer or integer expression");
            }
        }
        if (g.size() != 4) schema_fail(id + ".groups", "unexpected extra fields");
    }
    if (e.contains("closed_orbit")) {
        const json& c = e["closed_orbit"];
        if (!c.is_object() || !c.contains("type") || !c["type"].is_string() || !c.contains("levi") ||
            !c["levi"].is_string() || c.size() != 2) {
            schema_fail(id + ".closed_orbit", "expected {\"type\": string, \"levi\": string}");
        }
    }
    if (!e.contains("parameter")) return std::nullopt;
    const json& p = e["parameter"];
    if (!p.is_object() || !p.contains("name") || !p["name"].is_string() || !p.contains("min") ||
        !p["min"].is_number_integer() || !p.contains("max") || !p["max"].is_number_integer() || p.size() != 3) {
        schema_fail(id + ".parameter", "expected {\"name\": string, \"min\": integer, \"max\": integer}");
    }
    ParameterRange range{p["name"].get<std::string>(), p["min"].get<long>(), p["max"].get<long>()};
    if (range.min > range.max) schema_fail(id + ".parameter", "min exceeds max");
    if (range.name == "t") schema_fail(id + ".parameter.name", "\"t\" is the polynomial variable");
    return range;
}

// ---------------------------------------------------------------- instantiation

struct Evaluator {
    std::string where;
    Bindings bindings;

    LaurentPoly poly(const json& e, const std::string& field) const {
        return poly_text(e[field].get<std::string>(), field);
    }

    LaurentPoly poly_text(const std::string& text, const std::string& field) const {
        try {
            return eval_poly_expr(text, bindings);
        } catch (const ParseError& err) {
            throw ParseError(where + "." + field + ": " + err.what());
        } catch (const NotDivisible& err) {
            throw InvariantViolation(where + "." + field + ": quotient does not clear: " + err.what());
        }
    }

    long integer(const json& v, const std::string& field) const {
        if (v.is_number_integer()) return v.get<long>();
        try {
            return eval_int_expr(v.get<std::string>(), bindings);
        } catch (const ParseError& err) {
            throw ParseError(where + "." + field + ": " + err.what());
        } catch (const NotDivisible& err) {
            throw InvariantViolation(where + "." + field + ": " + err.what());
        }
    }

    std::string braces(const std::string& text, const std::string& field) const {
        try {
            return substitute_braces(text, bindings);
        } catch (const Error& err) {
            throw ParseError(where + "." + field + ": " + err.what());
        }
    }
};

std::map<IndexSet, LaurentPoly> poly_map(const json& m, const Evaluator& ev, const std::string& field) {
    std::map<IndexSet, LaurentPoly> out;
    for (const auto& [k, v] : m.items()) {
        const SimpleRootSet s = parse_index_list(k);
        if (!out.emplace(IndexSet(s.begin(), s.end()), ev.poly_text(v.get<std::string>(), field + "[" + k + "]")).second) {
            throw SchemaError(ev.where + "." + field + ": subset \"" + k + "\" listed twice");
        }
    }
    return out;
}

void check_invariants(const CatalogEntry& c, const std::string& where) {
    c.record.validate();
    if (c.record.rank) {
        try {
            horospherical_factor(c.record.p_gh_empty, *c.record.rank);
        } catch (const NotDivisible&) {
            throw InvariantViolation(where + ".p_gh_empty: " + c.record.p_gh_empty.str() + " is not divisible by (t - 1)^" +
                                     std::to_string(*c.record.rank));
        }
    }
    if (c.closed_orbit) {
        LaurentPoly recomputed;
        try {
            recomputed = c.recompute_p_gh_empty();
        } catch (const Error& err) {
            throw InvariantViolation(where + ".closed_orbit: " + err.what());
        }
        if (recomputed != c.record.p_gh_empty) {
            throw InvariantViolation(where + ".closed_orbit: (t - 1) * flag polynomial = " + recomputed.str() +
                                     " differs from p_gh_empty = " + c.record.p_gh_empty.str());
        }
    }
    if (c.family) {
        const auto& fam = *c.family;
        if (!c.record.rank) throw InvariantViolation(where + ".family: needs a rank");
        if (fam.polynomials.size() != (std::size_t{1} << fam.rank)) {
            throw InvariantViolation(where + ".family: expected " + std::to_string(1 << fam.rank) + " members");
        }
        IndexSet full;
        for (int i = 1; i <= fam.rank; ++i) full.insert(i);
        for (const auto& [subset, p] : fam.polynomials) {
            if (!std::includes(full.begin(), full.end(), subset.begin(), subset.end())) {
                throw InvariantViolation(where + ".family: subset " + subset_str(subset) + " outside the rank");
            }
            PoincareRecord pair{where + ".family" + subset_str(subset), c.record.p_gh, p, {}, {}, {}};
            pair.validate();
        }
        if (fam.at({}) != c.record.p_gh_empty) throw InvariantViolation(where + ".family[]: differs from p_gh_empty");
        if (fam.at(full) != c.record.p_gh) throw InvariantViolation(where + ".family[full]: differs from p_gh");
    }
}

}  // namespace

CatalogEntry Catalog::instantiate(const Template& t, std::optional<long> n) {
    const json& e = t.raw;
    Evaluator ev{t.id, {}};
    if (t.param) {
        if (!n) {
            throw MissingParameter(t.id + " needs " + t.param->name + " in " + std::to_string(t.param->min) + ".." +
                                   std::to_string(t.param->max));
        }
        if (*n < t.param->min || *n > t.param->max) {
            throw OutOfRange(t.id + ": " + t.param->name + " = " + std::to_string(*n) + " outside " +
                             std::to_string(t.param->min) + ".." + std::to_string(t.param->max));
        }
        ev.bindings[t.param->name] = *n;
        ev.where = t.id + "[" + t.param->name + "=" + std::to_string(*n) + "]";
    }

    CatalogEntry c;
    c.id = t.id;
    c.row = e.value("row", "");
    c.description = e["description"].get<std::string>();
    c.group_g = e.value("G", "");
    c.group_h = e.value("H", "");
    if (t.param) c.parameter = n;
    c.record.label = ev.where;
    c.record.p_gh = ev.poly(e, "p_gh");
    c.record.p_gh_empty = ev.poly(e, "p_gh_empty");
    if (e.contains("r_empty")) c.record.r_empty = ev.poly(e, "r_empty");
    if (e.contains("rank")) c.record.rank = e["rank"].get<int>();
    if (e.contains("groups")) {
        const json& g = e["groups"];
        c.record.groups = GroupData{ev.integer(g["u_G"], "groups.u_G"), ev.integer(g["u_H"], "groups.u_H"),
                                    ev.integer(g["r_G"], "groups.r_G"), ev.integer(g["r_H"], "groups.r_H")};
    }
    if (e.contains("connected_h")) c.connected_h = e["connected_h"].get<bool>();
    if (e.contains("closed_orbit")) {
        c.closed_orbit = ClosedOrbitSpec{ev.braces(e["closed_orbit"]["type"].get<std::string>(), "closed_orbit.type"),
                                         ev.braces(e["closed_orbit"]["levi"].get<std::string>(), "closed_orbit.levi")};
    }
    if (e.contains("p_x")) c.p_x = ev.poly(e, "p_x");
    if (e.contains("family")) c.family = SatelliteFamily{c.record.rank.value_or(0), poly_map(e["family"], ev, "family")};
    if (e.contains("r_family")) c.r_family = poly_map(e["r_family"], ev, "r_family");
    check_invariants(c, ev.where);
    return c;
}

Catalog Catalog::parse(const std::string& text, const std::string& source) {
    Catalog cat;
    if (text.find_first_not_of(" \t\r\n") == std::string::npos) return cat;
    json doc;
    try {
        doc = json::parse(text);
    } catch (const json::parse_error& err) {
        throw ParseError(source + ": " + err.what());
    }
    if (!doc.is_object() || !doc.contains("entries") || !doc["entries"].is_array()) {
        throw SchemaError(source + ": expected an object with an \"entries\" array");
    }
    for (const auto& [key, value] : doc.items()) {
        if (key != "entries" && key != "version") throw SchemaError(source + "." + key + ": unknown field");
        (void)value;
    }
    std::set<std::string> seen;
    for (std::size_t i = 0; i < doc["entries"].size(); ++i) {
        const json& e = doc["entries"][i];
        const std::string where = "entries[" + std::to_string(i) + "]";
        if (!e.is_object()) throw SchemaError(where + ": expected an object");
        if (!e.contains("id") || !e["id"].is_string() || e["id"].get<std::string>().empty()) {
            throw SchemaError(where + ".id: missing or not a string");
        }
        const std::string id = e["id"].get<std::string>();
        if (!seen.insert(id).second) throw SchemaError(id + ": duplicate id");
        cat.templates_.push_back({id, e, check_entry_schema(e, id)});
    }
    for (const auto& t : cat.templates_) {
        if (!t.param) {
            instantiate(t, std::nullopt);
            continue;
        }
        for (long n = t.param->min; n <= t.param->max; ++n) instantiate(t, n);
    }
    return cat;
}

Catalog Catalog::load(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ParseError("cannot open catalog " + path);
    std::stringstream buf;
    buf << in.rdbuf();
    return parse(buf.str(), path);
}

std::string Catalog::default_path() { return std::string(SATKIT_DATA_DIR) + "/catalog.json"; }

std::vector<std::string> Catalog::ids() const {
    std::vector<std::string> out;
    for (const auto& t : templates_) out.push_back(t.id);
    return out;
}

bool Catalog::contains(const std::string& id) const {
    return std::any_of(templates_.begin(), templates_.end(), [&](const Template& t) { return t.id == id; });
}

const Catalog::Template& Catalog::find(const std::string& id) const {
    for (const auto& t : templates_) {
        if (t.id == id) return t;
    }
    throw OutOfRange("no catalog entry \"" + id + "\"");
}

std::optional<ParameterRange> Catalog::parameter(const std::string& id) const { return find(id).param; }

CatalogEntry Catalog::entry(const std::string& id, std::optional<long> n) const {
    const Template& t = find(id);
    return instantiate(t, t.param ? n : std::nullopt);
}

std::vector<CatalogEntry> Catalog::entries(long n) const {
    std::vector<CatalogEntry> out;
    for (const auto& t : templates_) {
        if (t.param && (n < t.param->min || n > t.param->max)) continue;
        out.push_back(instantiate(t, t.param ? std::optional<long>(n) : std::nullopt));
    }
    return out;
}

CatalogEntry table1_row(const Catalog& catalog, const std::string& row, std::optional<long> n) {
    const std::string id = "table1.row" + row;
    if (!catalog.contains(id)) throw OutOfRange("rank-one table has no row \"" + row + "\"");
    return catalog.entry(id, n);
}

namespace {

void check_example71_n(int n) {
    if (n < 2 || n > 8) throw OutOfRange("GL(n) family needs 2 <= n <= 8, got n = " + std::to_string(n));
}

int outside_count(const RootSystem& rs, const SimpleRootSet& subset) {
    return static_cast<int>(rs.positive_roots().size() - rs.levi_positive_roots(subset).size());
}

}  // namespace

LaurentPoly example71_family(int n, const SimpleRootSet& subset) {
    check_example71_n(n);
    const RootSystem rs({{CartanType::A, n - 1}});
    return flag_poincare_heights(rs, LeviSubset(rs, subset)).shifted(-outside_count(rs, subset));
}

LaurentPoly example71_family_degrees(int n, const SimpleRootSet& subset) {
    check_example71_n(n);
    const RootSystem rs({{CartanType::A, n - 1}});
    return flag_poincare_degrees(rs, LeviSubset(rs, subset)).shifted(-outside_count(rs, subset));
}

}  // namespace satkit
