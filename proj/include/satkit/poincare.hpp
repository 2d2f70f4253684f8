#pragma once

// Virtual Poincare polynomials of spherical homogeneous spaces and their
// satellites: the ratios R_I, the Brion-Peyre factorization, the sum over
// orbits of a wonderful compactification, and the degree laws for R_I.

#include <map>
#include <optional>
#include <string>

#include "satkit/exactpoly.hpp"
#include "satkit/latcone.hpp"

namespace satkit {

struct GroupData {
    long u_g = 0;  // dimensions of maximal unipotent subgroups
    long u_h = 0;
    long r_g = 0;  // ranks
    long r_h = 0;
};

struct PoincareRecord {
    std::string label;
    LaurentPoly p_gh;        // P~_{G/H}
    LaurentPoly p_gh_empty;  // P~_{G/H_0}, the horospherical satellite
    std::optional<LaurentPoly> r_empty;
    std::optional<int> rank;
    std::optional<GroupData> groups;

    // InvariantViolation unless both are monic of the same degree.
    void validate() const;
};

// R with R * p == p_i, checked to live in Z[t^-1]. NotDivisible if the
// division fails, NotPolynomialInInverse if a positive exponent survives.
LaurentPoly ratio_r(const LaurentPoly& p_i, const LaurentPoly& p);

// Degree of a polynomial in t^-1 (the largest power of t^-1 present).
int inverse_degree(const LaurentPoly& r);

// Members P~_{G/H_I} indexed by subsets of {1..rank}.
struct SatelliteFamily {
    int rank = 0;
    std::map<IndexSet, LaurentPoly> polynomials;

    // MissingData if a subset is absent.
    const LaurentPoly& at(const IndexSet& subset) const;
};

// sum_I P~_{G/H_I} / (t-1)^{r-|I|}; NotDivisible naming the offending I.
LaurentPoly wonderful_sum(const SatelliteFamily& family);

// The same sum with 1/(t-1)^{r-|I|} replaced by the lattice-point series of
// relint V_I for a wonderful cone of the family's rank; known through
// t^-order.
TruncSeries wonderful_sum_series(const SatelliteFamily& family, const ValuationCone& cone, int order);

struct BrionPeyre {
    LaurentPoly q;
    bool nonnegative = false;
    bool q0_is_one = false;
};

// p = t^u (t-1)^r Q; DomainError on negative u or r, NotDivisible otherwise.
BrionPeyre brion_peyre_q(const LaurentPoly& p, long u_diff, long r_diff);

struct DegreeLawReport {
    LaurentPoly r;
    int degree = 0;    // computed degree of R_0 in t^-1
    long expected = 0; // u_G - u_H
    bool degree_ok = false;
    bool constant_term_one = false;
    bool pass() const { return degree_ok && constant_term_one; }
};

// MissingData if the record carries no group data.
DegreeLawReport check_degree_laws(const PoincareRecord& rec);

struct HorosphericalFactor {
    LaurentPoly factor;  // P~_{G/N_G(H_0)}
    Integer value_at_zero;
};

// p_gh_empty / (t-1)^r, exact; NotDivisible otherwise.
HorosphericalFactor horospherical_factor(const LaurentPoly& p_gh_empty, int r);

}  // namespace satkit
