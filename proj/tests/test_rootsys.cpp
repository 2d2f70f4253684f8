#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <algorithm>

#include "satkit/rootsys.hpp"

using namespace satkit;

namespace {

LaurentPoly P(const char* s) { return LaurentPoly::parse(s); }

std::vector<SimpleComponent> irreducible_up_to(int max_rank) {
    std::vector<SimpleComponent> out;
    for (int n = 1; n <= max_rank; ++n) out.push_back({CartanType::A, n});
    for (int n = 2; n <= max_rank; ++n) out.push_back({CartanType::B, n});
    for (int n = 2; n <= max_rank; ++n) out.push_back({CartanType::C, n});
    for (int n = 3; n <= max_rank; ++n) out.push_back({CartanType::D, n});
    if (max_rank >= 6) out.push_back({CartanType::E, 6});
    out.push_back({CartanType::F, 4});
    out.push_back({CartanType::G, 2});
    return out;
}

std::vector<SimpleRootSet> all_subsets(int n) {
    std::vector<SimpleRootSet> out;
    for (unsigned mask = 0; mask < (1u << n); ++mask) {
        SimpleRootSet s;
        for (int i = 0; i < n; ++i) {
            if (mask & (1u << i)) s.insert(i + 1);
        }
        out.push_back(s);
    }
    return out;
}

std::size_t classical_count(const SimpleComponent& c) {
    const std::size_t n = c.rank;
    switch (c.type) {
        case CartanType::A: return n * (n + 1) / 2;
        case CartanType::B:
        case CartanType::C: return n * n;
        case CartanType::D: return n * (n - 1);
        case CartanType::E: return n == 6 ? 36 : n == 7 ? 63 : 120;
        case CartanType::F: return 24;
        case CartanType::G: return 6;
    }
    return 0;
}

}  // namespace

TEST_CASE("positive roots of small systems") {
    const RootSystem a2 = RootSystem::parse("A2");
    const std::vector<RootVector> expected{{1, 0}, {0, 1}, {1, 1}};
    auto roots = a2.positive_roots();
    std::sort(roots.begin(), roots.end());
    auto want = expected;
    std::sort(want.begin(), want.end());
    CHECK(roots == want);

    const RootSystem g2 = RootSystem::parse("G2");
    std::vector<int> heights;
    for (const auto& r : g2.positive_roots()) heights.push_back(height(r));
    std::sort(heights.begin(), heights.end());
    CHECK(heights == std::vector<int>{1, 1, 2, 3, 4, 5});
    CHECK(g2.positive_roots().back() == RootVector{3, 2});

    CHECK(RootSystem::parse("F4").positive_roots().size() == 24);
    CHECK(RootSystem::parse("B2").positive_roots().back() == RootVector{1, 2});
    CHECK(RootSystem::parse("C2").positive_roots().back() == RootVector{2, 1});
}

TEST_CASE("height") {
    CHECK(height({0, 1, 0}) == 1);
    CHECK(height({1, 1}) == 2);
    CHECK(height(RootSystem::parse("G2").positive_roots().back()) == 5);
    CHECK(height(RootSystem::parse("E8").positive_roots().back()) == 29);
}

TEST_CASE("root counts match the classical formulas") {
    for (int n = 1; n <= 16; ++n) {
        for (CartanType ty : {CartanType::A, CartanType::B, CartanType::C, CartanType::D}) {
            const SimpleComponent c{ty, n};
            if ((ty == CartanType::B || ty == CartanType::C) && n < 2) continue;
            if (ty == CartanType::D && n < 3) continue;
            const RootSystem rs({c});
            CAPTURE(c.str());
            CHECK(rs.positive_roots().size() == classical_count(c));
            for (const auto& r : rs.positive_roots()) {
                CHECK(std::all_of(r.begin(), r.end(), [](int x) { return x >= 0; }));
                CHECK(height(r) > 0);
            }
        }
    }
    for (int n : {6, 7, 8}) CHECK(RootSystem({{CartanType::E, n}}).positive_roots().size() == classical_count({CartanType::E, n}));
}

TEST_CASE("unsupported descriptors") {
    CHECK_THROWS_AS(RootSystem::parse("E5"), UnsupportedType);
    CHECK_THROWS_AS(RootSystem::parse("F3"), UnsupportedType);
    CHECK_THROWS_AS(RootSystem::parse("G3"), UnsupportedType);
    CHECK_THROWS_AS(RootSystem::parse("B1"), UnsupportedType);
    CHECK_THROWS_AS(RootSystem::parse("A0"), UnsupportedType);
    CHECK_THROWS_AS(RootSystem::parse("A17"), UnsupportedType);
    CHECK_THROWS_AS(RootSystem::parse("Q2"), UnsupportedType);
    CHECK_THROWS_AS(RootSystem::parse("A1xx"), UnsupportedType);
    CHECK_THROWS_AS(RootSystem::parse(""), UnsupportedType);
}

TEST_CASE("product descriptors") {
    const RootSystem rs = RootSystem::parse("A1xA1xA1");
    CHECK(rs.rank() == 3);
    CHECK(rs.positive_roots().size() == 3);
    CHECK(rs.str() == "A1xA1xA1");
    CHECK(rs.weyl_order() == 8);
    CHECK(flag_poincare_degrees(rs, LeviSubset(rs, {})) == P("(t+1)^3"));
}

TEST_CASE("degree tables") {
    for (const auto& c : irreducible_up_to(8)) {
        const auto d = fundamental_degrees(c);
        int sum = 0;
        Integer prod = 1;
        for (int x : d) {
            sum += x - 1;
            prod *= x;
        }
        CAPTURE(c.str());
        CHECK(sum == static_cast<int>(classical_count(c)));
        CHECK(prod == weyl_group_order(c));
    }
}

TEST_CASE("Levi component identification") {
    const RootSystem f4 = RootSystem::parse("F4");
    CHECK(f4.levi_components({1, 2, 3}) == std::vector<SimpleComponent>{{CartanType::B, 3}});
    CHECK(f4.levi_components({2, 3, 4}) == std::vector<SimpleComponent>{{CartanType::C, 3}});
    CHECK(f4.levi_components({1, 3, 4}) == std::vector<SimpleComponent>{{CartanType::A, 1}, {CartanType::A, 2}});
    const RootSystem e8 = RootSystem::parse("E8");
    CHECK(e8.levi_components({1, 2, 3, 4, 5, 6, 7}) == std::vector<SimpleComponent>{{CartanType::E, 7}});
    CHECK(e8.levi_components({2, 3, 4, 5, 6, 7, 8}) == std::vector<SimpleComponent>{{CartanType::D, 7}});
    CHECK(e8.levi_components({1, 2, 3, 4, 5, 6}) == std::vector<SimpleComponent>{{CartanType::E, 6}});
    const RootSystem b4 = RootSystem::parse("B4");
    CHECK(b4.levi_components({3, 4}) == std::vector<SimpleComponent>{{CartanType::B, 2}});
    CHECK(b4.levi_components({1, 2, 3}) == std::vector<SimpleComponent>{{CartanType::A, 3}});
    const RootSystem c5 = RootSystem::parse("C5");
    CHECK(c5.levi_components({2, 3, 4, 5}) == std::vector<SimpleComponent>{{CartanType::C, 4}});
    const RootSystem d5 = RootSystem::parse("D5");
    CHECK(d5.levi_components({2, 3, 4, 5}) == std::vector<SimpleComponent>{{CartanType::D, 4}});
    CHECK(d5.levi_components({3, 4, 5}) == std::vector<SimpleComponent>{{CartanType::A, 3}});
    CHECK(d5.levi_components({}).empty());
}

TEST_CASE("Levi subset parsing") {
    const RootSystem f4 = RootSystem::parse("F4");
    CHECK(LeviSubset::parse(f4, "1,3").indices() == SimpleRootSet{1, 3});
    CHECK(LeviSubset::parse(f4, "").indices().empty());
    CHECK(LeviSubset::parse(f4, "2..4").indices() == SimpleRootSet{2, 3, 4});
    CHECK(LeviSubset::parse(f4, "B3").indices() == SimpleRootSet{1, 2, 3});
    CHECK(LeviSubset::parse(f4, "C3").indices() == SimpleRootSet{2, 3, 4});
    CHECK(LeviSubset::parse(f4, "A1xA2").indices() == SimpleRootSet{1, 2, 4});
    CHECK(LeviSubset::parse(f4, "A2xA1").indices() == SimpleRootSet{1, 2, 4});
    CHECK_THROWS_AS(LeviSubset::parse(f4, "5"), BadLevi);
    CHECK_THROWS_AS(LeviSubset::parse(f4, "1,x"), BadLevi);
    CHECK_THROWS_AS(LeviSubset::parse(f4, "D4"), BadLevi);
}

TEST_CASE("flag_poincare_heights examples") {
    const RootSystem a1 = RootSystem::parse("A1");
    CHECK(flag_poincare_heights(a1, LeviSubset(a1, {})) == P("t + 1"));
    const RootSystem a2 = RootSystem::parse("A2");
    const LaurentPoly p = flag_poincare_heights(a2, LeviSubset(a2, {}));
    CHECK(p == P("(1+t)(1+t+t^2)"));
    CHECK(p.value_at_one() == 6);
}

TEST_CASE("flag_poincare_degrees examples") {
    const RootSystem f4 = RootSystem::parse("F4");
    const LaurentPoly f4_b3 = flag_poincare_degrees(f4, LeviSubset::parse(f4, "B3"));
    CHECK(f4_b3 == P("(t^2-1)(t^6-1)(t^8-1)(t^12-1)/((t-1)(t^2-1)(t^4-1)(t^6-1))"));
    CHECK(f4_b3 * P("t - 1") == P("(t^4+1)(t^12-1)"));
    CHECK(flag_poincare_degrees(f4, LeviSubset::parse(f4, "C3")) == f4_b3);

    for (const auto& c : irreducible_up_to(6)) {
        const RootSystem rs({c});
        SimpleRootSet full;
        for (int i = 1; i <= rs.rank(); ++i) full.insert(i);
        CHECK(flag_poincare_degrees(rs, LeviSubset(rs, full)) == LaurentPoly(1));
    }

    for (int n : {3, 4}) {
        const RootSystem cn({{CartanType::C, n}});
        SimpleRootSet levi;
        for (int i = 1; i <= n; ++i) {
            if (i != 2) levi.insert(i);
        }
        const LaurentPoly got = flag_poincare_degrees(cn, LeviSubset(cn, levi));
        const LaurentPoly want = LaurentPoly::t_power_minus_one(2 * n - 2) * LaurentPoly::t_power_minus_one(2 * n);
        CHECK(got * P("(t-1)(t^2-1)") == want);
        const int dim = static_cast<int>(cn.positive_roots().size() - cn.levi_positive_roots(levi).size());
        CHECK(dim == 4 * n - 5);
        CHECK(got.max_exp() == dim);
    }
}

TEST_CASE("heights and degrees agree for every Levi subset up to rank 6") {
    for (const auto& c : irreducible_up_to(6)) {
        const RootSystem rs({c});
        const int total = static_cast<int>(rs.positive_roots().size());
        for (const auto& subset : all_subsets(rs.rank())) {
            const LeviSubset levi(rs, subset);
            const LaurentPoly h = flag_poincare_heights(rs, levi);
            const LaurentPoly d = flag_poincare_degrees(rs, levi);
            CAPTURE(c.str());
            REQUIRE(h == d);
            REQUIRE(h.is_palindromic());
            REQUIRE(h.min_exp() == 0);
            REQUIRE(h.max_exp() == total - static_cast<int>(rs.levi_positive_roots(subset).size()));
        }
        CHECK(flag_poincare_heights(rs, LeviSubset(rs, {})).value_at_one() == rs.weyl_order());
    }
}

TEST_CASE("large exceptional full flags") {
    for (const char* name : {"E7", "E8"}) {
        const RootSystem rs = RootSystem::parse(name);
        const LeviSubset none(rs, {});
        const LaurentPoly h = flag_poincare_heights(rs, none);
        CHECK(h == flag_poincare_degrees(rs, none));
        CHECK(h.value_at_one() == rs.weyl_order());
    }
}
