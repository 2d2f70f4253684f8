#pragma once

// The shipped dataset of worked examples (the rank-one table, the SL(2)^3
// family, the two compactification examples) and the GL(n) satellite family
// generated from root data. Parameterized entries are polynomial templates
// in n, instantiated on demand.

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "json.hpp"
#include "satkit/poincare.hpp"
#include "satkit/rootsys.hpp"

namespace satkit {

struct ClosedOrbitSpec {
    std::string type;  // root-system descriptor, braces substituted
    std::string levi;  // index list or type form
};

struct ParameterRange {
    std::string name;
    long min = 0;
    long max = 0;
};

struct CatalogEntry {
    std::string id;
    std::string row;  // table row label, empty for worked examples
    std::string description;
    std::string group_g;
    std::string group_h;
    std::optional<long> parameter;
    PoincareRecord record;
    std::optional<bool> connected_h;
    std::optional<ClosedOrbitSpec> closed_orbit;
    std::optional<LaurentPoly> p_x;  // P~ of the wonderful embedding
    std::optional<SatelliteFamily> family;
    std::map<IndexSet, LaurentPoly> r_family;  // expected R_I

    // The explicit family, or {0: p_gh_empty, {1}: p_gh} for rank one.
    SatelliteFamily satellite_family() const;
    // (t-1) * flag_poincare_degrees of the closed-orbit data.
    LaurentPoly recompute_p_gh_empty() const;
};

class Catalog {
public:
    // ParseError, SchemaError or InvariantViolation, each naming the entry
    // and field. Every parameterized entry is checked over its whole range.
    static Catalog parse(const std::string& text, const std::string& source = "<catalog>");
    static Catalog load(const std::string& path);
    static std::string default_path();

    std::size_t size() const { return templates_.size(); }
    std::vector<std::string> ids() const;
    bool contains(const std::string& id) const;
    std::optional<ParameterRange> parameter(const std::string& id) const;

    // MissingParameter / OutOfRange for parameterized entries; OutOfRange
    // for unknown ids.
    CatalogEntry entry(const std::string& id, std::optional<long> n = std::nullopt) const;

    // Every entry; parameterized ones at n (skipped when outside their range).
    std::vector<CatalogEntry> entries(long n) const;

private:
    struct Template {
        std::string id;
        nlohmann::json raw;
        std::optional<ParameterRange> param;
    };
    const Template& find(const std::string& id) const;
    static CatalogEntry instantiate(const Template& t, std::optional<long> n);

    std::vector<Template> templates_;
};

// Row label "1".."15", "7a", "8b"; the numeric forms 7 and 8 are ambiguous.
CatalogEntry table1_row(const Catalog& catalog, const std::string& row, std::optional<long> n = std::nullopt);

// R_I for GL(n) x GL(n) / diag GL(n) by the height product, times
// t^{-|positive roots outside I|}. OutOfRange unless 2 <= n <= 8.
LaurentPoly example71_family(int n, const SimpleRootSet& subset);
// The same via fundamental degrees.
LaurentPoly example71_family_degrees(int n, const SimpleRootSet& subset);

}  // namespace satkit
