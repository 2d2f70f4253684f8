#pragma once

// Finite root systems of types A-G (and products of them), their positive
// roots, fundamental degrees, and the virtual Poincare polynomials of the
// partial flag varieties G/P_I, computed two independent ways.

#include <set>
#include <string>
#include <string_view>
#include <vector>

#include "satkit/exactpoly.hpp"

namespace satkit {

enum class CartanType : char { A = 'A', B = 'B', C = 'C', D = 'D', E = 'E', F = 'F', G = 'G' };

struct SimpleComponent {
    CartanType type;
    int rank;

    std::string str() const { return std::string(1, static_cast<char>(type)) + std::to_string(rank); }
    friend bool operator==(const SimpleComponent&, const SimpleComponent&) = default;
};

// Throws UnsupportedType for pairs such as E5, F3, B1 or ranks beyond the
// supported bounds (8 for exceptional, 16 for classical components).
void validate_component(const SimpleComponent& c);

// Bourbaki-numbered Cartan matrix, a_ij = <alpha_i^vee, alpha_j>.
std::vector<std::vector<int>> cartan_matrix(const SimpleComponent& c);

// Degrees of the basic Weyl group invariants.
std::vector<int> fundamental_degrees(const SimpleComponent& c);

// |W| from the closed-form order formulas.
Integer weyl_group_order(const SimpleComponent& c);

using RootVector = std::vector<int>;  // coefficients over the simple roots
using SimpleRootSet = std::set<int>;  // 1-based simple-root indices

class RootSystem {
public:
    explicit RootSystem(std::vector<SimpleComponent> components);

    // "A3", "C4", "A1xA1xA1".
    static RootSystem parse(std::string_view descriptor);

    const std::vector<SimpleComponent>& components() const { return components_; }
    int rank() const { return static_cast<int>(cartan_.size()); }
    const std::vector<std::vector<int>>& cartan() const { return cartan_; }

    // Sorted by height, then lexicographically.
    const std::vector<RootVector>& positive_roots() const { return positive_roots_; }
    const std::vector<int>& degrees() const { return degrees_; }
    Integer weyl_order() const;

    // Positive roots supported on `levi`, i.e. the positive roots of the
    // Levi subsystem generated by those simple roots.
    std::vector<RootVector> levi_positive_roots(const SimpleRootSet& levi) const;

    // Types of the connected components of the Dynkin subdiagram on `levi`.
    std::vector<SimpleComponent> levi_components(const SimpleRootSet& levi) const;

    std::string str() const;

private:
    std::vector<SimpleComponent> components_;
    std::vector<std::vector<int>> cartan_;
    std::vector<RootVector> positive_roots_;
    std::vector<int> degrees_;
};

// A subset of the simple roots of a given root system (the Levi of P_I).
class LeviSubset {
public:
    // Throws BadLevi if an index lies outside 1..rank.
    LeviSubset(const RootSystem& rs, SimpleRootSet subset);

    // Comma-separated indices with optional ranges: "1,3", "2..4", "".
    // Alternatively a type descriptor such as "B3": the lexicographically
    // first subset whose Dynkin subdiagram has exactly those components.
    static LeviSubset parse(const RootSystem& rs, std::string_view text);

    const SimpleRootSet& indices() const { return subset_; }
    bool contains(int i) const { return subset_.count(i) > 0; }

private:
    SimpleRootSet subset_;
};

// Parses just the index-list form, without a root system for bounds.
SimpleRootSet parse_index_list(std::string_view text);

// Identifies a connected Cartan matrix as a finite type.
SimpleComponent identify_component(const std::vector<std::vector<int>>& cartan);

std::vector<RootVector> positive_roots(const RootSystem& rs);

int height(const RootVector& root);

// Product over the positive roots outside the Levi subsystem of
// (t^{ht+1} - 1)/(t^{ht} - 1), cleared exactly.
LaurentPoly flag_poincare_heights(const RootSystem& rs, const LeviSubset& levi);

// prod (t^{d_i} - 1) over the ambient degrees, divided by
// (t - 1)^{rank - |levi|} and prod (t^{d'_j} - 1) over the Levi degrees.
LaurentPoly flag_poincare_degrees(const RootSystem& rs, const LeviSubset& levi);

}  // namespace satkit
