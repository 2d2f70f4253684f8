#pragma once

// The lattices M = Z^r (weights) and N = Z^r (valuations) paired by the dot
// product, cosimplicial valuation cones cut out by spherical roots, their
// faces, and generating series of lattice points in relative interiors.
//
// Sign convention: V = { v : <s_i, v> <= 0 for all i }. In the wonderful
// configuration the generators e_j of V satisfy <s_i, e_j> = -delta_ij and
// kappa is the sum of the spherical roots, so kappa(e_j) = -1.

#include <set>
#include <string>
#include <vector>

#include "satkit/exactpoly.hpp"

namespace satkit {

using LatticeVector = std::vector<long>;
using IndexSet = std::set<int>;  // 1-based indices into the spherical roots

long pairing(const LatticeVector& m, const LatticeVector& n);

// ---------------------------------------------------------------- integer matrices

using IntMatrix = std::vector<std::vector<Integer>>;

IntMatrix to_int_matrix(const std::vector<LatticeVector>& rows);

// Rank over Q.
int matrix_rank(const IntMatrix& rows);

// Row-style Hermite normal form of the lattice spanned by the rows; zero rows
// dropped. Unique for a given lattice, so it doubles as a canonical basis.
IntMatrix hermite_normal_form(IntMatrix rows);

// Basis (as rows, in Hermite normal form) of { x in Z^cols : A x = 0 }. The
// result is saturated by construction.
IntMatrix integer_kernel(const IntMatrix& a, int cols);

// Integer x with B^T x = v, where the rows of B are a lattice basis; throws
// DomainError if v is not in the lattice.
std::vector<Integer> solve_in_basis(const IntMatrix& basis, const std::vector<Integer>& v);

bool is_primitive(const LatticeVector& v);

// ---------------------------------------------------------------- cones

class ValuationCone {
public:
    // Throws InvalidCone unless the roots have dimension `rank`, are
    // primitive and linearly independent.
    ValuationCone(int rank, std::vector<LatticeVector> spherical_roots);

    int rank() const { return rank_; }
    int root_count() const { return static_cast<int>(roots_.size()); }
    const std::vector<LatticeVector>& spherical_roots() const { return roots_; }
    const LatticeVector& root(int index) const;  // 1-based

    bool contains(const LatticeVector& v) const;
    // Spherical roots vanishing on v; throws NotInCone outside V.
    IndexSet i_of_v(const LatticeVector& v) const;

    // S a basis of M with |det| = 1, so the dual generators are integral.
    bool is_wonderful() const;
    // Generators e_1..e_r with <s_i, e_j> = -delta_ij; NotWonderful otherwise.
    std::vector<LatticeVector> wonderful_generators() const;

private:
    void check_dimension(const LatticeVector& v) const;

    int rank_;
    std::vector<LatticeVector> roots_;
};

struct ConeFace {
    IndexSet subset;  // I, the roots vanishing on the face

    // v in V_I: in V and every root of I vanishes.
    bool contains(const ValuationCone& cone, const LatticeVector& v) const;
    // v in the relative interior: additionally the roots outside I are negative.
    bool in_relative_interior(const ValuationCone& cone, const LatticeVector& v) const;
};

// All 2^k faces, ordered by |I| and then lexicographically.
std::vector<ConeFace> enumerate_faces(const ValuationCone& cone);

std::string subset_str(const IndexSet& s);

struct KappaFunctional {
    LatticeVector m;
    long operator()(const LatticeVector& v) const { return pairing(m, v); }
};

// Sum of the spherical roots; NotWonderful outside the wonderful case.
KappaFunctional wonderful_kappa(const ValuationCone& cone);

// Sum of t^{kappa(v)} over lattice points v of relint(V_I) with
// kappa(v) >= -depth, as a series in t^-1 known through t^-depth.
TruncSeries relint_lattice_points(const ValuationCone& cone, const ConeFace& face,
                                  const KappaFunctional& kappa, int depth);

}  // namespace satkit
