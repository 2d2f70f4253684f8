#pragma once

// Matrices of truncated Laurent series acting on curves in projective space,
// used to check isotropy curves gamma(t) of a one-parameter subgroup and their
// limits at t = 0 (the SL(2) x SL(2) / SL(2) example: isotropy of
// ([0:t^-1], [t:t^-1]) and limits filling out U_2).

#include <array>
#include <vector>

#include "satkit/exactpoly.hpp"

namespace satkit {

class SeriesMatrix {
public:
    // Series in t; entries are clamped to a common truncation order.
    explicit SeriesMatrix(std::vector<std::vector<TruncSeries>> entries);

    static SeriesMatrix identity(int n, int order);
    // Exact polynomial entries.
    static SeriesMatrix from_polys(const std::vector<std::vector<LaurentPoly>>& entries, int order);

    int size() const { return static_cast<int>(entries_.size()); }
    int order() const { return order_; }
    const TruncSeries& at(int i, int j) const { return entries_[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)]; }

private:
    std::vector<std::vector<TruncSeries>> entries_;
    int order_;
};

struct ProjectivePointCurve {
    std::vector<TruncSeries> coords;

    // DomainError if every coordinate vanishes to its order.
    explicit ProjectivePointCurve(std::vector<TruncSeries> c);
    static ProjectivePointCurve from_polys(const std::vector<LaurentPoly>& c, int order);
};

// Matrix-vector product; TruncationExhausted if nothing nonzero survives.
ProjectivePointCurve apply(const SeriesMatrix& m, const ProjectivePointCurve& p);

// det [m p | p] vanishes to its known order (2-dimensional coordinates).
bool projectively_fixes(const SeriesMatrix& m, const ProjectivePointCurve& p);

using RationalMatrix = std::vector<std::vector<Rational>>;

// Constant terms; PoleAtZero naming the entry if a negative power survives.
RationalMatrix limit_at_zero(const SeriesMatrix& m);

// [[a, 0], [c, 1/a]] with a the root of a^2 - t^2 c a - 1 = 0 whose constant
// term is `sign`, so that a d = 1 and a - d = t^2 c.
SeriesMatrix isotropy_curve(int sign, const TruncSeries& c);
SeriesMatrix example61_witness(int sign, const Rational& c0, int order);

// [0 : t^-1] and [t : t^-1].
std::array<ProjectivePointCurve, 2> example61_base_curves(int order);

struct IsotropyRelations {
    bool b_zero = false;
    bool ad_one = false;
    bool a_minus_d = false;  // a - d = t^2 c
    bool all() const { return b_zero && ad_one && a_minus_d; }
};

IsotropyRelations check_example61_relations(const SeriesMatrix& m);

// [[a0, 0], [c0, a0]] with a0^2 = 1.
bool in_u2(const RationalMatrix& m);

}  // namespace satkit
