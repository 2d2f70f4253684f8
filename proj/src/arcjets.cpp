#include "satkit/arcjets.hpp"

namespace satkit {

SeriesMatrix::SeriesMatrix(std::vector<std::vector<TruncSeries>> entries) : entries_(std::move(entries)) {
    if (entries_.empty()) throw DimensionMismatch("empty series matrix");
    order_ = entries_[0][0].order();
    for (const auto& row : entries_) {
        if (row.size() != entries_.size()) throw DimensionMismatch("series matrix is not square");
        for (const auto& e : row) {
            if (e.variable() != SeriesVar::T) throw DomainError("series matrix entries must be series in t");
            order_ = std::min(order_, e.order());
        }
    }
    for (auto& row : entries_) {
        for (auto& e : row) e = e.truncated(order_);
    }
}

SeriesMatrix SeriesMatrix::identity(int n, int order) {
    std::vector<std::vector<TruncSeries>> e(static_cast<std::size_t>(n),
                                            std::vector<TruncSeries>(static_cast<std::size_t>(n), TruncSeries(SeriesVar::T, order)));
    for (int i = 0; i < n; ++i) e[static_cast<std::size_t>(i)][static_cast<std::size_t>(i)].set(0, 1);
    return SeriesMatrix(std::move(e));
}

SeriesMatrix SeriesMatrix::from_polys(const std::vector<std::vector<LaurentPoly>>& entries, int order) {
    std::vector<std::vector<TruncSeries>> e;
    for (const auto& row : entries) {
        std::vector<TruncSeries> r;
        for (const auto& p : row) r.push_back(TruncSeries::from_poly(p, order));
        e.push_back(std::move(r));
    }
    return SeriesMatrix(std::move(e));
}

ProjectivePointCurve::ProjectivePointCurve(std::vector<TruncSeries> c) : coords(std::move(c)) {
    bool any = false;
    for (const auto& x : coords) any = any || !x.is_zero();
    if (!any) throw DomainError("projective point curve with all coordinates zero");
}

ProjectivePointCurve ProjectivePointCurve::from_polys(const std::vector<LaurentPoly>& c, int order) {
    std::vector<TruncSeries> s;
    for (const auto& p : c) s.push_back(TruncSeries::from_poly(p, order));
    return ProjectivePointCurve(std::move(s));
}

ProjectivePointCurve apply(const SeriesMatrix& m, const ProjectivePointCurve& p) {
    if (static_cast<int>(p.coords.size()) != m.size()) {
        throw DimensionMismatch("matrix of size " + std::to_string(m.size()) + " on a point with " +
                                std::to_string(p.coords.size()) + " coordinates");
    }
    std::vector<TruncSeries> out;
    bool any = false;
    for (int i = 0; i < m.size(); ++i) {
        TruncSeries acc = m.at(i, 0) * p.coords[0];
        for (int j = 1; j < m.size(); ++j) acc += m.at(i, j) * p.coords[static_cast<std::size_t>(j)];
        any = any || !acc.is_zero();
        out.push_back(std::move(acc));
    }
    if (!any) throw TruncationExhausted("image curve vanishes to the tracked order");
    return ProjectivePointCurve(std::move(out));
}

bool projectively_fixes(const SeriesMatrix& m, const ProjectivePointCurve& p) {
    if (p.coords.size() != 2) throw DimensionMismatch("projectively_fixes needs a point of P^1");
    const ProjectivePointCurve q = apply(m, p);
    const TruncSeries det = q.coords[0] * p.coords[1] - q.coords[1] * p.coords[0];
    return det.is_zero();
}

RationalMatrix limit_at_zero(const SeriesMatrix& m) {
    RationalMatrix out(static_cast<std::size_t>(m.size()));
    for (int i = 0; i < m.size(); ++i) {
        for (int j = 0; j < m.size(); ++j) {
            const TruncSeries& e = m.at(i, j);
            for (const auto& [exp, c] : e.coeffs()) {
                if (exp < 0) {
                    throw PoleAtZero("entry (" + std::to_string(i + 1) + "," + std::to_string(j + 1) + ") has t^" +
                                     std::to_string(exp) + " with coefficient " + c.get_str());
                }
            }
            if (e.order() < 0) throw TruncationExhausted("constant term of an entry is not known");
            out[static_cast<std::size_t>(i)].push_back(e.coeff(0));
        }
    }
    return out;
}

SeriesMatrix isotropy_curve(int sign, const TruncSeries& c) {
    if (sign != 1 && sign != -1) throw DomainError("sign must be +1 or -1");
    const int order = c.order();
    const TruncSeries t2c = LaurentPoly::t(2) * c;
    const TruncSeries radicand = t2c * t2c + TruncSeries::constant(4, order);
    const TruncSeries root = series_sqrt(radicand);
    const TruncSeries a = (t2c + root * Rational(sign)) * Rational(1, 2);
    const TruncSeries d = a.inverse();
    return SeriesMatrix({{a, TruncSeries(SeriesVar::T, order)}, {c, d}});
}

SeriesMatrix example61_witness(int sign, const Rational& c0, int order) {
    return isotropy_curve(sign, TruncSeries::constant(c0, order));
}

std::array<ProjectivePointCurve, 2> example61_base_curves(int order) {
    return {ProjectivePointCurve::from_polys({LaurentPoly(), LaurentPoly::t(-1)}, order),
            ProjectivePointCurve::from_polys({LaurentPoly::t(1), LaurentPoly::t(-1)}, order)};
}

IsotropyRelations check_example61_relations(const SeriesMatrix& m) {
    if (m.size() != 2) throw DimensionMismatch("relations are stated for 2x2 matrices");
    const TruncSeries& a = m.at(0, 0);
    const TruncSeries& b = m.at(0, 1);
    const TruncSeries& c = m.at(1, 0);
    const TruncSeries& d = m.at(1, 1);
    IsotropyRelations r;
    r.b_zero = b.is_zero();
    r.ad_one = (a * d - TruncSeries::constant(1, m.order())).is_zero();
    r.a_minus_d = (a - d - LaurentPoly::t(2) * c).is_zero();
    return r;
}

bool in_u2(const RationalMatrix& m) {
    if (m.size() != 2 || m[0].size() != 2 || m[1].size() != 2) return false;
    return m[0][1] == 0 && m[0][0] == m[1][1] && m[0][0] * m[0][0] == 1;
}

}  // namespace satkit
