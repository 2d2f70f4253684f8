#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "satkit/sphdata.hpp"
#include "support.hpp"

using namespace satkit;

namespace {

SphericalDatum fixture(const std::string& name) {
    return SphericalDatum::load(std::string(SATKIT_DATA_DIR) + "/datums/" + name + ".json");
}

std::vector<std::string> color_ids(const SphericalDatum& d) {
    std::vector<std::string> out;
    for (const auto& c : d.colors()) out.push_back(c.id);
    return out;
}

// Colors of GL(n) x GL(n) / diag: the minor D_i pairs the fundamental weight
// i of each factor, i.e. ones in columns i and n-1+i.
ColorMatrix gl_pair_matrix(int n) {
    ColorMatrix m;
    m.columns = 2 * (n - 1);
    for (int i = 1; i < n; ++i) {
        std::vector<int> row(static_cast<std::size_t>(m.columns), 0);
        row[static_cast<std::size_t>(i - 1)] = 1;
        row[static_cast<std::size_t>(n - 2 + i)] = 1;
        m.rows.push_back(row);
    }
    return m;
}

}  // namespace

TEST_CASE("classify_color") {
    CHECK(classify_color({0, 2, 0}, {1, 2, 0}) == ColorType::TwoA);
    CHECK(classify_color({1, 1, 0}, {2, 2, 1}) == ColorType::A);
    CHECK(classify_color({1, 0, 0}, {1, 2, 0}) == ColorType::B);
    CHECK_THROWS_AS(classify_color({2, 1, 0}, {2, 1, 0}), InconsistentColor);
    CHECK_THROWS_AS(classify_color({1, 1, 0}, {2, 1, 0}), InconsistentColor);
    CHECK_THROWS_AS(classify_color({0, 0, 0}, {0, 0, 0}), InconsistentColor);
    CHECK_THROWS_AS(classify_color({3, 0}, {3, 0}), InconsistentColor);
    CHECK(color_type_str(ColorType::TwoA) == "2a");
}

TEST_CASE("compute_s_p") {
    ColorMatrix zero{{{0, 0}}, 2};
    CHECK(compute_s_p(zero) == std::set<int>{1, 2});
    ColorMatrix m{{{1, 0, 1}, {1, 0, 0}}, 3};
    CHECK(m.column_sums() == std::vector<int>{2, 0, 1});
    CHECK(compute_s_p(m) == std::set<int>{2});

    for (int n = 2; n <= 5; ++n) {
        const ColorMatrix gl = gl_pair_matrix(n);
        CHECK_NOTHROW(gl.validate());
        CHECK(compute_s_p(gl).empty());
        for (const auto& row : gl.rows) CHECK(classify_color(row, gl.column_sums()) == ColorType::B);
    }
    ColorMatrix bad{{{2, 0}, {1, 0}}, 2};
    CHECK_THROWS_AS(bad.validate(), InconsistentColor);
}

TEST_CASE("datum validation names the field") {
    const auto make = [](std::vector<SphericalRoot> roots, std::set<int> s_p, std::vector<Color> colors) {
        return SphericalDatum("A2", 2, std::move(roots), std::move(s_p), std::move(colors));
    };
    const SphericalRoot s1{"s1", {1, 0}, {1}};
    CHECK_NOTHROW(make({s1}, {2}, {{"D", {1}, {0, 1}}}));
    CHECK_THROWS_WITH_AS(make({{"s1", {2, 0}, {1}}}, {}, {}), doctest::Contains("spherical_roots"), InvalidDatum);
    CHECK_THROWS_WITH_AS(make({s1, {"s2", {1, 0}, {2}}}, {}, {}), doctest::Contains("dependent"), InvalidDatum);
    CHECK_THROWS_WITH_AS(make({s1, {"s1", {0, 1}, {2}}}, {}, {}), doctest::Contains("duplicate"), InvalidDatum);
    CHECK_THROWS_WITH_AS(make({{"s1", {1, 0}, {3}}}, {}, {}), doctest::Contains("support"), InvalidDatum);
    CHECK_THROWS_WITH_AS(make({s1}, {1}, {{"D", {1}, {0, 1}}}), doctest::Contains("s_p"), InvalidDatum);
    CHECK_THROWS_WITH_AS(make({s1}, {}, {{"D", {2}, {0, 1}}}), doctest::Contains("type a"), InvalidDatum);
    CHECK_THROWS_WITH_AS(make({s1}, {}, {{"D", {1}, {0}}}), doctest::Contains("rho"), InvalidDatum);
    CHECK_THROWS_WITH_AS(SphericalDatum("E5", 1, {}, {}, {}), doctest::Contains("ambient"), InvalidDatum);
}

TEST_CASE("JSON round trip and errors") {
    const SphericalDatum d = fixture("sl2_cube");
    CHECK(SphericalDatum::parse(d.to_json().dump()) == d);
    CHECK(d.to_json().dump() == SphericalDatum::parse(d.to_json().dump(2)).to_json().dump());
    CHECK_THROWS_AS(SphericalDatum::parse("{"), ParseError);
    CHECK_THROWS_WITH_AS(SphericalDatum::parse(R"({"ambient":"A1","lattice_rank":1})"),
                         doctest::Contains("spherical_roots"), InvalidDatum);
    CHECK_THROWS_WITH_AS(
        SphericalDatum::parse(R"({"ambient":"A1","lattice_rank":1,"spherical_roots":[{"name":"s","vector":["x"],"support":[1]}]})"),
        doctest::Contains("spherical_roots[0].vector"), InvalidDatum);
    CHECK_THROWS_WITH_AS(SphericalDatum::parse(R"({"ambient":"A1","lattice_rank":1,"spherical_roots":[],"extra":1})"),
                         doctest::Contains("extra"), InvalidDatum);
}

TEST_CASE("resolve") {
    const SphericalDatum d = fixture("sl2_cube");
    CHECK(d.resolve("a1,a3") == IndexSet{1, 3});
    CHECK(d.resolve("2") == IndexSet{2});
    CHECK(d.resolve("").empty());
    CHECK_THROWS_WITH_AS(d.resolve("a1,bogus"), doctest::Contains("bogus"), BadSubset);
    CHECK_THROWS_AS(d.resolve("4"), BadSubset);
}

TEST_CASE("satellite examples") {
    const SphericalDatum d = fixture("sl2_cube");
    CHECK(satellite_datum(d, d.resolve("a1,a2,a3")) == d);
    const SphericalDatum horo = satellite_datum(d, {});
    CHECK(horo.roots().empty());
    CHECK(horo.colors().empty());
    CHECK(horo.lattice_rank() == 3);
    CHECK(color_ids(satellite_datum(d, d.resolve("a1"))) == std::vector<std::string>{"D0", "D1"});
    CHECK(color_ids(satellite_datum(d, d.resolve("a1,a2"))) == std::vector<std::string>{"D0", "D1", "D2"});
    CHECK_THROWS_AS(satellite_datum(d, {5}), BadSubset);

    // GL(3) x GL(3) / diag, I = {s1}: only D1 has J meeting {1, 3}.
    const SphericalDatum gl = fixture("gl3_pair");
    const SphericalDatum sat = satellite_datum(gl, gl.resolve("s1"));
    CHECK(color_ids(sat) == std::vector<std::string>{"D1"});
    CHECK(sat.roots().size() == 1);
    CHECK(sat.roots()[0].name == "s1");
}

TEST_CASE("count_satellites") {
    CHECK(count_satellites(satellite_datum(fixture("sl2_cube"), {})) == 1);
    CHECK(count_satellites(fixture("sl2_cube")) == 8);
    CHECK(count_satellites(fixture("gl3_pair")) == 4);
}

TEST_CASE("closed orbit examples") {
    const SphericalDatum d = fixture("sl2_cube");
    const ClosedOrbitDatum same = closed_orbit_datum(d, {});
    CHECK(same.datum == d);

    // Interior point: every root is negative on it.
    const LatticeVector v{-1, -1, -1};
    REQUIRE(d.cone().i_of_v(v).empty());
    const ClosedOrbitDatum interior = closed_orbit_datum(d, {v});
    CHECK(interior.datum.roots().empty());
    CHECK(interior.datum.colors().empty());
    CHECK(interior.datum.lattice_rank() == 2);
    for (const auto& b : interior.m0_basis) CHECK(pairing(b, v) == 0);
    // Saturated: (1,-1,0) and (0,1,-1) are in v^perp and must be reachable.
    CHECK_NOTHROW(solve_in_basis(to_int_matrix(interior.m0_basis), {1, -1, 0}));
    CHECK_NOTHROW(solve_in_basis(to_int_matrix(interior.m0_basis), {0, 1, -1}));

    const SphericalDatum w = fixture("rank2_wonderful");
    const auto gens = w.cone().wonderful_generators();
    const ClosedOrbitDatum point = closed_orbit_datum(w, gens);
    CHECK(point.datum.lattice_rank() == 0);
    CHECK(point.datum.roots().empty());
    CHECK(point.m0_basis.empty());

    CHECK_THROWS_AS(closed_orbit_datum(d, {{1, 1, 1}}), DegenerateCone);
    CHECK_THROWS_AS(closed_orbit_datum(d, {{1, 1}}), DimensionMismatch);
}

TEST_CASE("closed orbit against satellite on the SL2 cube datum") {
    const SphericalDatum d = fixture("sl2_cube");
    // v on the face where only a1 vanishes.
    const LatticeVector v{-1, -2, -1};
    const IndexSet label = d.cone().i_of_v(v);
    REQUIRE(label == IndexSet{1});
    const ClosedOrbitDatum closed = closed_orbit_datum(d, {v});
    const SphericalDatum sat = satellite_datum(d, label);
    CHECK(color_ids(closed.datum) == color_ids(sat));
    CHECK(closed.datum.lattice_rank() == 2);
    CHECK(sat.lattice_rank() == 3);
    REQUIRE(closed.datum.roots().size() == 1);
    CHECK(closed.datum.roots()[0].name == "a1");
    // The root re-expressed in M0 maps back to itself.
    LatticeVector back(3, 0);
    for (std::size_t i = 0; i < closed.m0_basis.size(); ++i) {
        for (std::size_t c = 0; c < 3; ++c) back[c] += closed.datum.roots()[0].vector[i] * closed.m0_basis[i][c];
    }
    CHECK(back == d.roots()[0].vector);
    // rho pushed forward agrees with rho on M0.
    for (const auto& c : closed.datum.colors()) {
        const auto& orig = *std::find_if(d.colors().begin(), d.colors().end(), [&](const Color& x) { return x.id == c.id; });
        for (std::size_t i = 0; i < closed.m0_basis.size(); ++i) CHECK(c.rho[i] == pairing(closed.m0_basis[i], orig.rho));
    }
}

TEST_CASE("satellite laws on random data") {
    std::mt19937_64 rng(31337);
    for (int trial = 0; trial < 200; ++trial) {
        const SphericalDatum d = testing::random_datum(rng);
        const int k = static_cast<int>(d.roots().size());
        IndexSet all;
        for (int i = 1; i <= k; ++i) all.insert(i);
        CHECK(satellite_datum(d, all) == d);
        const SphericalDatum empty = satellite_datum(d, {});
        CHECK(empty.roots().empty());
        CHECK(empty.colors().empty());
        CHECK(count_satellites(d) == Integer(1) << k);
        CHECK(enumerate_faces(d.cone()).size() == (std::size_t{1} << k));

        for (const auto& face_i : enumerate_faces(d.cone())) {
            const SphericalDatum sat_i = satellite_datum(d, face_i.subset);
            CHECK(sat_i.lattice_rank() == d.lattice_rank());
            CHECK(sat_i.s_p() == d.s_p());
            for (const auto& c : sat_i.colors()) {
                const auto it = std::find_if(d.colors().begin(), d.colors().end(), [&](const Color& x) { return x.id == c.id; });
                REQUIRE(it != d.colors().end());
                CHECK(*it == c);
            }
            for (const auto& face_j : enumerate_faces(d.cone())) {
                if (!std::includes(face_i.subset.begin(), face_i.subset.end(), face_j.subset.begin(), face_j.subset.end())) {
                    continue;
                }
                const auto names = d.names_of(face_j.subset);
                std::string list;
                for (const auto& n : names) list += (list.empty() ? "" : ",") + n;
                CHECK(satellite_datum(sat_i, sat_i.resolve(list)) == satellite_datum(d, face_j.subset));
            }
        }
    }
}
