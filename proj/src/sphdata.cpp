#include "satkit/sphdata.hpp"

#include <algorithm>
#include <fstream>
#include <map>
#include <sstream>

namespace satkit {

using nlohmann::json;
using nlohmann::ordered_json;

std::string color_type_str(ColorType t) {
    switch (t) {
        case ColorType::TwoA: return "2a";
        case ColorType::A: return "a";
        case ColorType::B: return "b";
    }
    return "?";
}

void ColorMatrix::validate() const {
    for (std::size_t i = 0; i < rows.size(); ++i) {
        if (static_cast<int>(rows[i].size()) != columns) {
            throw InconsistentColor("row " + std::to_string(i + 1) + " has " + std::to_string(rows[i].size()) +
                                    " entries, expected " + std::to_string(columns));
        }
        for (int x : rows[i]) {
            if (x < 0 || x > 2) throw InconsistentColor("entry " + std::to_string(x) + " in row " + std::to_string(i + 1));
        }
    }
    const auto sums = column_sums();
    for (std::size_t j = 0; j < sums.size(); ++j) {
        if (sums[j] > 2) {
            throw InconsistentColor("column " + std::to_string(j + 1) + " sums to " + std::to_string(sums[j]));
        }
    }
}

std::vector<int> ColorMatrix::column_sums() const {
    std::vector<int> sums(static_cast<std::size_t>(columns), 0);
    for (const auto& row : rows) {
        for (std::size_t j = 0; j < sums.size() && j < row.size(); ++j) sums[j] += row[j];
    }
    return sums;
}

ColorType classify_color(const std::vector<int>& row, const std::vector<int>& column_sums) {
    if (row.size() != column_sums.size()) throw InconsistentColor("row and column sums differ in length");
    int twos = 0;
    int nonzero = 0;
    for (int x : row) {
        if (x < 0 || x > 2) throw InconsistentColor("entry " + std::to_string(x) + " outside {0,1,2}");
        twos += x == 2;
        nonzero += x != 0;
    }
    if (twos > 0) {
        if (nonzero > 1) throw InconsistentColor("a 2 shares its row with another nonzero entry");
        return ColorType::TwoA;
    }
    if (nonzero == 0) throw InconsistentColor("zero row: J is empty");
    bool all_two = true;
    bool all_one = true;
    for (std::size_t j = 0; j < row.size(); ++j) {
        if (row[j] != 1) continue;
        all_two = all_two && column_sums[j] == 2;
        all_one = all_one && column_sums[j] == 1;
    }
    if (all_two) return ColorType::A;
    if (all_one) return ColorType::B;
    throw InconsistentColor("column sums over J are mixed");
}

std::set<int> compute_s_p(const ColorMatrix& matrix) {
    std::set<int> out;
    const auto sums = matrix.column_sums();
    for (std::size_t j = 0; j < sums.size(); ++j) {
        if (sums[j] == 0) out.insert(static_cast<int>(j + 1));
    }
    return out;
}

// ---------------------------------------------------------------- datum

namespace {

RootSystem parse_ambient(const std::string& ambient) {
    try {
        return RootSystem::parse(ambient);
    } catch (const UnsupportedType& e) {
        throw InvalidDatum(std::string("ambient: ") + e.what());
    }
}

void check_indices(const std::set<int>& s, int bound, const std::string& field) {
    for (int i : s) {
        if (i < 1 || i > bound) {
            throw InvalidDatum(field + ": simple-root index " + std::to_string(i) + " outside 1.." + std::to_string(bound));
        }
    }
}

bool meets(const std::set<int>& a, const std::set<int>& b) {
    return std::any_of(a.begin(), a.end(), [&](int x) { return b.count(x) > 0; });
}

}  // namespace

SphericalDatum::SphericalDatum(std::string ambient, int lattice_rank, std::vector<SphericalRoot> roots,
                               std::set<int> s_p, std::vector<Color> colors)
    : ambient_(std::move(ambient)),
      root_system_(parse_ambient(ambient_)),
      lattice_rank_(lattice_rank),
      roots_(std::move(roots)),
      s_p_(std::move(s_p)),
      colors_(std::move(colors)) {
    const int n = root_system_.rank();
    if (lattice_rank_ < 0) throw InvalidDatum("lattice_rank: negative");

    std::set<std::string> names;
    std::vector<LatticeVector> vectors;
    for (std::size_t i = 0; i < roots_.size(); ++i) {
        const auto& s = roots_[i];
        const std::string field = "spherical_roots[" + std::to_string(i) + "]";
        if (s.name.empty()) throw InvalidDatum(field + ".name: empty");
        if (!names.insert(s.name).second) throw InvalidDatum(field + ".name: duplicate name " + s.name);
        if (static_cast<int>(s.vector.size()) != lattice_rank_) {
            throw InvalidDatum(field + ".vector: dimension " + std::to_string(s.vector.size()) + ", expected " +
                               std::to_string(lattice_rank_));
        }
        if (s.support.empty()) throw InvalidDatum(field + ".support: empty");
        check_indices(s.support, n, field + ".support");
        vectors.push_back(s.vector);
    }
    try {
        ValuationCone(lattice_rank_, vectors);
    } catch (const InvalidCone& e) {
        throw InvalidDatum(std::string("spherical_roots: ") + e.what());
    }

    check_indices(s_p_, n, "s_p");
    const std::set<int> total_support = support_of([&] {
        IndexSet all;
        for (std::size_t i = 0; i < roots_.size(); ++i) all.insert(static_cast<int>(i + 1));
        return all;
    }());

    std::sort(colors_.begin(), colors_.end(), [](const Color& a, const Color& b) { return a.id < b.id; });
    for (std::size_t i = 0; i < colors_.size(); ++i) {
        const auto& c = colors_[i];
        const std::string field = "colors_a[" + c.id + "]";
        if (c.id.empty()) throw InvalidDatum("colors_a: color without id");
        if (i > 0 && colors_[i - 1].id == c.id) throw InvalidDatum(field + ": duplicate id");
        if (c.j_set.empty()) throw InvalidDatum(field + ".j_set: empty");
        check_indices(c.j_set, n, field + ".j_set");
        if (static_cast<int>(c.rho.size()) != lattice_rank_) {
            throw InvalidDatum(field + ".rho: dimension " + std::to_string(c.rho.size()) + ", expected " +
                               std::to_string(lattice_rank_));
        }
        if (meets(c.j_set, s_p_)) throw InvalidDatum(field + ".j_set: meets s_p");
        if (!meets(c.j_set, total_support)) {
            throw InvalidDatum(field + ".j_set: meets no spherical-root support, so the color is not of type a");
        }
    }
}

ValuationCone SphericalDatum::cone() const {
    std::vector<LatticeVector> vectors;
    for (const auto& s : roots_) vectors.push_back(s.vector);
    return ValuationCone(lattice_rank_, vectors);
}

IndexSet SphericalDatum::resolve(const std::string& list) const {
    IndexSet out;
    std::stringstream ss(list);
    std::string token;
    while (std::getline(ss, token, ',')) {
        token.erase(0, token.find_first_not_of(" \t"));
        token.erase(token.find_last_not_of(" \t") + 1);
        if (token.empty()) {
            if (list.find_first_not_of(" \t,") == std::string::npos) continue;
            throw BadSubset("empty entry in \"" + list + "\"");
        }
        bool found = false;
        for (std::size_t i = 0; i < roots_.size(); ++i) {
            if (roots_[i].name == token) {
                out.insert(static_cast<int>(i + 1));
                found = true;
            }
        }
        if (found) continue;
        if (token.find_first_not_of("0123456789") == std::string::npos && token.size() < 9) {
            const int idx = std::stoi(token);
            if (idx >= 1 && idx <= static_cast<int>(roots_.size())) {
                out.insert(idx);
                continue;
            }
        }
        throw BadSubset("unknown spherical root \"" + token + "\"");
    }
    return out;
}

std::set<int> SphericalDatum::support_of(const IndexSet& subset) const {
    std::set<int> out;
    for (int i : subset) {
        if (i < 1 || i > static_cast<int>(roots_.size())) {
            throw BadSubset("no spherical root with index " + std::to_string(i));
        }
        const auto& s = roots_[static_cast<std::size_t>(i - 1)].support;
        out.insert(s.begin(), s.end());
    }
    return out;
}

std::vector<std::string> SphericalDatum::names_of(const IndexSet& subset) const {
    std::vector<std::string> out;
    for (int i : subset) {
        support_of({i});
        out.push_back(roots_[static_cast<std::size_t>(i - 1)].name);
    }
    return out;
}

bool operator==(const SphericalDatum& a, const SphericalDatum& b) {
    return a.ambient_ == b.ambient_ && a.lattice_rank_ == b.lattice_rank_ && a.roots_ == b.roots_ &&
           a.s_p_ == b.s_p_ && a.colors_ == b.colors_;
}

// ---------------------------------------------------------------- JSON

ordered_json SphericalDatum::to_json() const {
    ordered_json j;
    j["ambient"] = ambient_;
    j["lattice_rank"] = lattice_rank_;
    j["spherical_roots"] = ordered_json::array();
    for (const auto& s : roots_) {
        j["spherical_roots"].push_back({{"name", s.name}, {"vector", s.vector}, {"support", s.support}});
    }
    j["s_p"] = s_p_;
    j["colors_a"] = ordered_json::array();
    for (const auto& c : colors_) j["colors_a"].push_back({{"id", c.id}, {"j_set", c.j_set}, {"rho", c.rho}});
    return j;
}

namespace {

const json& field(const json& obj, const char* key, const std::string& where) {
    if (!obj.is_object()) throw InvalidDatum(where + ": expected an object");
    auto it = obj.find(key);
    if (it == obj.end()) throw InvalidDatum(where + (where.empty() ? "" : ".") + key + ": missing");
    return *it;
}

LatticeVector int_array(const json& j, const std::string& where) {
    if (!j.is_array()) throw InvalidDatum(where + ": expected an integer array");
    LatticeVector out;
    for (const auto& x : j) {
        if (!x.is_number_integer()) throw InvalidDatum(where + ": expected an integer array");
        out.push_back(x.get<long>());
    }
    return out;
}

std::set<int> index_set(const json& j, const std::string& where) {
    std::set<int> out;
    for (long x : int_array(j, where)) {
        if (!out.insert(static_cast<int>(x)).second) throw InvalidDatum(where + ": repeated index " + std::to_string(x));
    }
    return out;
}

std::string string_field(const json& obj, const char* key, const std::string& where) {
    const json& v = field(obj, key, where);
    if (!v.is_string()) throw InvalidDatum(where + (where.empty() ? "" : ".") + key + ": expected a string");
    return v.get<std::string>();
}

}  // namespace

SphericalDatum SphericalDatum::from_json(const json& j) {
    if (!j.is_object()) throw InvalidDatum("datum: expected a JSON object");
    const std::string ambient = string_field(j, "ambient", "");
    const json& rank = field(j, "lattice_rank", "");
    if (!rank.is_number_integer()) throw InvalidDatum("lattice_rank: expected an integer");

    std::vector<SphericalRoot> roots;
    const json& sr = field(j, "spherical_roots", "");
    if (!sr.is_array()) throw InvalidDatum("spherical_roots: expected an array");
    for (std::size_t i = 0; i < sr.size(); ++i) {
        const std::string where = "spherical_roots[" + std::to_string(i) + "]";
        roots.push_back({string_field(sr[i], "name", where), int_array(field(sr[i], "vector", where), where + ".vector"),
                         index_set(field(sr[i], "support", where), where + ".support")});
    }
    std::set<int> s_p;
    if (j.contains("s_p")) s_p = index_set(j["s_p"], "s_p");
    std::vector<Color> colors;
    if (j.contains("colors_a")) {
        const json& ca = j["colors_a"];
        if (!ca.is_array()) throw InvalidDatum("colors_a: expected an array");
        for (std::size_t i = 0; i < ca.size(); ++i) {
            const std::string where = "colors_a[" + std::to_string(i) + "]";
            colors.push_back({string_field(ca[i], "id", where), index_set(field(ca[i], "j_set", where), where + ".j_set"),
                              int_array(field(ca[i], "rho", where), where + ".rho")});
        }
    }
    for (const auto& [key, value] : j.items()) {
        static const std::set<std::string> known{"ambient", "lattice_rank", "spherical_roots", "s_p", "colors_a"};
        if (!known.count(key)) throw InvalidDatum(key + ": unknown field");
        (void)value;
    }
    return SphericalDatum(ambient, rank.get<int>(), std::move(roots), std::move(s_p), std::move(colors));
}

SphericalDatum SphericalDatum::parse(const std::string& text) {
    json j;
    try {
        j = json::parse(text);
    } catch (const json::parse_error& e) {
        throw ParseError(std::string("datum JSON: ") + e.what());
    }
    return from_json(j);
}

SphericalDatum SphericalDatum::load(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ParseError("cannot open datum file " + path);
    std::stringstream buf;
    buf << in.rdbuf();
    return parse(buf.str());
}

// ---------------------------------------------------------------- transforms

SphericalDatum satellite_datum(const SphericalDatum& d, const IndexSet& subset) {
    const std::set<int> support = d.support_of(subset);
    std::vector<SphericalRoot> roots;
    for (int i : subset) roots.push_back(d.roots()[static_cast<std::size_t>(i - 1)]);
    std::vector<Color> colors;
    for (const auto& c : d.colors()) {
        if (meets(c.j_set, support)) colors.push_back(c);
    }
    return SphericalDatum(d.ambient(), d.lattice_rank(), std::move(roots), d.s_p(), std::move(colors));
}

ClosedOrbitDatum closed_orbit_datum(const SphericalDatum& d, const std::vector<LatticeVector>& generators) {
    const ValuationCone cone = d.cone();
    for (std::size_t g = 0; g < generators.size(); ++g) {
        if (static_cast<int>(generators[g].size()) != d.lattice_rank()) {
            throw DimensionMismatch("generator " + std::to_string(g + 1) + " has dimension " +
                                    std::to_string(generators[g].size()));
        }
        if (!cone.contains(generators[g])) {
            throw DegenerateCone("generator " + std::to_string(g + 1) + " lies outside the valuation cone");
        }
    }
    const IntMatrix basis = integer_kernel(to_int_matrix(generators), d.lattice_rank());
    std::vector<LatticeVector> m0;
    for (const auto& row : basis) {
        LatticeVector v;
        for (const auto& x : row) v.push_back(x.get_si());
        m0.push_back(std::move(v));
    }

    IndexSet kept;
    std::vector<SphericalRoot> roots;
    for (std::size_t i = 0; i < d.roots().size(); ++i) {
        const auto& s = d.roots()[i];
        const bool vanishes = std::all_of(generators.begin(), generators.end(),
                                          [&](const LatticeVector& g) { return pairing(s.vector, g) == 0; });
        if (!vanishes) continue;
        kept.insert(static_cast<int>(i + 1));
        const auto coords = solve_in_basis(basis, std::vector<Integer>(s.vector.begin(), s.vector.end()));
        LatticeVector v;
        for (const auto& x : coords) v.push_back(x.get_si());
        roots.push_back({s.name, v, s.support});
    }
    const std::set<int> support = d.support_of(kept);
    std::vector<Color> colors;
    for (const auto& c : d.colors()) {
        if (!meets(c.j_set, support)) continue;
        LatticeVector rho;
        for (const auto& b : m0) rho.push_back(pairing(b, c.rho));
        colors.push_back({c.id, c.j_set, rho});
    }
    return {SphericalDatum(d.ambient(), static_cast<int>(m0.size()), std::move(roots), d.s_p(), std::move(colors)), m0};
}

Integer count_satellites(const SphericalDatum& d) {
    Integer out = 1;
    out <<= static_cast<unsigned>(d.roots().size());
    return out;
}

}  // namespace satkit
