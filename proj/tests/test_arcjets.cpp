#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "satkit/arcjets.hpp"
#include "support.hpp"

using namespace satkit;

namespace {

LaurentPoly P(const char* s) { return LaurentPoly::parse(s); }

TruncSeries S(const char* s, int order) { return TruncSeries::from_poly(P(s), order); }

SeriesMatrix diag_t(int order) { return SeriesMatrix::from_polys({{P("t"), P("0")}, {P("0"), P("t^-1")}}, order); }

}  // namespace

TEST_CASE("apply") {
    const auto p = ProjectivePointCurve::from_polys({P("t + 2"), P("t^-1")}, 8);
    const auto q = apply(SeriesMatrix::identity(2, 8), p);
    CHECK(q.coords[0].coeffs() == p.coords[0].coeffs());
    CHECK(q.coords[1].coeffs() == p.coords[1].coeffs());
    CHECK(q.coords[1].order() == 7);

    const auto a = apply(diag_t(8), ProjectivePointCurve::from_polys({P("0"), P("1")}, 8));
    CHECK(a.coords[0].is_zero());
    CHECK(a.coords[1].coeffs() == S("t^-1", 8).coeffs());
    const auto b = apply(diag_t(8), ProjectivePointCurve::from_polys({P("1"), P("1")}, 8));
    CHECK(b.coords[0].coeffs() == S("t", 8).coeffs());
    CHECK(b.coords[1].coeffs() == S("t^-1", 8).coeffs());

    const SeriesMatrix zero = SeriesMatrix::from_polys({{P("0"), P("0")}, {P("0"), P("0")}}, 3);
    CHECK_THROWS_AS(apply(zero, ProjectivePointCurve::from_polys({P("1"), P("0")}, 3)), TruncationExhausted);
    CHECK_THROWS_AS(apply(zero, ProjectivePointCurve::from_polys({P("1")}, 3)), DimensionMismatch);
    CHECK_THROWS_AS(ProjectivePointCurve::from_polys({P("0"), P("0")}, 3), DomainError);
}

TEST_CASE("projectively_fixes") {
    const auto base = example61_base_curves(8);
    CHECK(projectively_fixes(SeriesMatrix::identity(2, 8), base[0]));
    CHECK(projectively_fixes(SeriesMatrix::identity(2, 8), base[1]));
    const SeriesMatrix upper = SeriesMatrix::from_polys({{P("1"), P("1")}, {P("0"), P("1")}}, 8);
    CHECK(projectively_fixes(upper, ProjectivePointCurve::from_polys({P("1"), P("0")}, 8)));
    CHECK_FALSE(projectively_fixes(upper, ProjectivePointCurve::from_polys({P("0"), P("1")}, 8)));
    // Scalars fix everything.
    const SeriesMatrix scalar = SeriesMatrix::from_polys({{P("t^2 + 3"), P("0")}, {P("0"), P("t^2 + 3")}}, 8);
    CHECK(projectively_fixes(scalar, base[1]));
}

TEST_CASE("fixing is invariant under unit rescaling") {
    std::mt19937_64 rng(17);
    const SeriesMatrix w = example61_witness(1, 2, 10);
    const SeriesMatrix moving = SeriesMatrix::from_polys({{P("1"), P("t")}, {P("0"), P("1")}}, 10);
    for (int trial = 0; trial < 30; ++trial) {
        TruncSeries unit = TruncSeries::constant(testing::random_rational(rng) + 8, 10);
        for (int e = 1; e <= 10; ++e) unit.set(e, testing::random_rational(rng));
        for (const auto& b : example61_base_curves(10)) {
            const ProjectivePointCurve scaled({unit * b.coords[0], unit * b.coords[1]});
            CHECK(projectively_fixes(w, scaled) == projectively_fixes(w, b));
            CHECK(projectively_fixes(moving, scaled) == projectively_fixes(moving, b));
        }
    }
}

TEST_CASE("limit_at_zero") {
    const RationalMatrix id = limit_at_zero(SeriesMatrix::identity(2, 4));
    CHECK(id == RationalMatrix{{1, 0}, {0, 1}});
    CHECK_THROWS_WITH_AS(limit_at_zero(diag_t(4)), doctest::Contains("(2,2)"), PoleAtZero);
}

TEST_CASE("witness examples") {
    const SeriesMatrix plus = example61_witness(1, 0, 8);
    CHECK(limit_at_zero(plus) == RationalMatrix{{1, 0}, {0, 1}});
    for (int i = 0; i < 2; ++i) {
        for (int j = 0; j < 2; ++j) CHECK(plus.at(i, j) == SeriesMatrix::identity(2, 8).at(i, j));
    }
    const SeriesMatrix minus = example61_witness(-1, 0, 8);
    CHECK(limit_at_zero(minus) == RationalMatrix{{-1, 0}, {0, -1}});
    CHECK(minus.at(0, 0) == TruncSeries::constant(-1, 8));

    const SeriesMatrix five = example61_witness(1, 5, 8);
    CHECK(five.order() == 8);
    CHECK(limit_at_zero(five) == RationalMatrix{{1, 0}, {5, 1}});
    const TruncSeries det = five.at(0, 0) * five.at(1, 1) - five.at(0, 1) * five.at(1, 0);
    CHECK(det == TruncSeries::constant(1, 8));
    // a = 1 + 5t^2/2 + 25t^4/8 + ..., from a^2 - 5t^2 a - 1 = 0 term by term.
    CHECK(five.at(0, 0).coeff(1) == 0);
    CHECK(five.at(0, 0).coeff(2) == Rational(5, 2));
    CHECK(five.at(0, 0).coeff(4) == Rational(25, 8));
}

TEST_CASE("witness family over a grid") {
    for (int sign : {1, -1}) {
        for (int c0 = -4; c0 <= 4; ++c0) {
            for (int order : {4, 8, 12}) {
                const SeriesMatrix w = example61_witness(sign, c0, order);
                CHECK(check_example61_relations(w).all());
                for (const auto& b : example61_base_curves(order)) CHECK(projectively_fixes(w, b));
                const RationalMatrix lim = limit_at_zero(w);
                CHECK(in_u2(lim));
                CHECK(lim[1][0] == c0);
                CHECK(lim[0][0] == sign);
            }
        }
    }
}

TEST_CASE("corrupted witness fails") {
    const SeriesMatrix w = example61_witness(1, 2, 8);
    const SeriesMatrix bad({{w.at(0, 0), S("t", 8)}, {w.at(1, 0), w.at(1, 1)}});
    CHECK_FALSE(check_example61_relations(bad).b_zero);
    CHECK_FALSE(projectively_fixes(bad, example61_base_curves(8)[0]));
    // Breaking a - d = t^2 c instead moves the second curve.
    const SeriesMatrix skew({{w.at(0, 0), w.at(0, 1)}, {w.at(1, 0) + TruncSeries::constant(1, 8), w.at(1, 1)}});
    CHECK_FALSE(check_example61_relations(skew).a_minus_d);
    CHECK(projectively_fixes(skew, example61_base_curves(8)[0]));
    CHECK_FALSE(projectively_fixes(skew, example61_base_curves(8)[1]));
    CHECK_FALSE(in_u2({{1, 0}, {0, -1}}));
    CHECK_FALSE(in_u2({{2, 0}, {0, 2}}));
}

TEST_CASE("random isotropy curves have limits in U2") {
    std::mt19937_64 rng(8);
    for (int trial = 0; trial < 100; ++trial) {
        const int order = 8;
        TruncSeries c(SeriesVar::T, order);
        for (int e = 0; e <= order; ++e) c.set(e, testing::random_rational(rng));
        const int sign = trial % 2 ? 1 : -1;
        const SeriesMatrix g = isotropy_curve(sign, c);
        CHECK(check_example61_relations(g).all());
        for (const auto& b : example61_base_curves(order)) CHECK(projectively_fixes(g, b));
        const RationalMatrix lim = limit_at_zero(g);
        CHECK(in_u2(lim));
        CHECK(lim[1][0] == c.coeff(0));
    }
}
