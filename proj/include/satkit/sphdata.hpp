#pragma once

// Homogeneous spherical data (M, S, S^p, D^a) and the two transforms acting
// on them: passing to a satellite (same M, fewer spherical roots) and passing
// to the closed orbit of a simple embedding (M cut down to M n C^perp).

#include <set>
#include <string>
#include <vector>

#include "json.hpp"
#include "satkit/latcone.hpp"
#include "satkit/rootsys.hpp"

namespace satkit {

// ---------------------------------------------------------------- color matrix

enum class ColorType { TwoA, A, B };

std::string color_type_str(ColorType t);  // "2a", "a", "b"

// Rows are colors, columns simple roots; a_ij in {0,1,2}.
struct ColorMatrix {
    std::vector<std::vector<int>> rows;
    int columns = 0;

    // Throws InconsistentColor on entries or column sums outside {0,1,2}.
    void validate() const;
    std::vector<int> column_sums() const;
};

// InconsistentColor if a 2 shares its row with another nonzero entry, the row
// is zero, or the column sums over J(i) are mixed.
ColorType classify_color(const std::vector<int>& row, const std::vector<int>& column_sums);

// Simple roots (1-based) with zero column sum.
std::set<int> compute_s_p(const ColorMatrix& matrix);

// ---------------------------------------------------------------- datum

struct SphericalRoot {
    std::string name;
    LatticeVector vector;   // in M
    std::set<int> support;  // simple roots it is built from
    friend bool operator==(const SphericalRoot&, const SphericalRoot&) = default;
};

// A color of type a.
struct Color {
    std::string id;
    std::set<int> j_set;
    LatticeVector rho;  // in N
    friend bool operator==(const Color&, const Color&) = default;
};

class SphericalDatum {
public:
    // Validates everything and sorts colors by id; throws InvalidDatum
    // naming the offending field.
    SphericalDatum(std::string ambient, int lattice_rank, std::vector<SphericalRoot> roots, std::set<int> s_p,
                   std::vector<Color> colors);

    const std::string& ambient() const { return ambient_; }
    const RootSystem& root_system() const { return root_system_; }
    int lattice_rank() const { return lattice_rank_; }
    const std::vector<SphericalRoot>& roots() const { return roots_; }
    const std::set<int>& s_p() const { return s_p_; }
    const std::vector<Color>& colors() const { return colors_; }

    ValuationCone cone() const;

    // "s1,s3" by name, or 1-based positions; "" is the empty set. BadSubset on
    // anything unknown.
    IndexSet resolve(const std::string& list) const;
    // Union of the simple-root supports of the roots in I.
    std::set<int> support_of(const IndexSet& subset) const;
    std::vector<std::string> names_of(const IndexSet& subset) const;

    nlohmann::ordered_json to_json() const;
    // Throws ParseError on malformed JSON text, InvalidDatum on bad fields.
    static SphericalDatum from_json(const nlohmann::json& j);
    static SphericalDatum parse(const std::string& text);
    static SphericalDatum load(const std::string& path);

    friend bool operator==(const SphericalDatum& a, const SphericalDatum& b);

private:
    std::string ambient_;
    RootSystem root_system_;
    int lattice_rank_;
    std::vector<SphericalRoot> roots_;
    std::set<int> s_p_;
    std::vector<Color> colors_;
};

// (M, I, S^p, D^a_I): the roots in I, the colors whose J meets their support.
SphericalDatum satellite_datum(const SphericalDatum& d, const IndexSet& subset);

struct ClosedOrbitDatum {
    SphericalDatum datum;                 // expressed in coordinates of M0
    std::vector<LatticeVector> m0_basis;  // basis of M0 inside M
};

// M0 = M n C^perp, S0 = roots vanishing on C, colors kept when J meets the
// support of S0, rho pushed to N/<C> = Hom(M0, Z). DegenerateCone if a
// generator lies outside the valuation cone.
ClosedOrbitDatum closed_orbit_datum(const SphericalDatum& d, const std::vector<LatticeVector>& generators);

Integer count_satellites(const SphericalDatum& d);

}  // namespace satkit
