#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "ncdegen/incidence.hpp"

#include <algorithm>
#include <map>
#include <random>
#include <set>

using namespace ncdegen::incidence;

namespace {

Permutation random_permutation(std::mt19937& rng) {
    Permutation p{1, 2, 3, 4, 5, 6};
    std::shuffle(p.begin(), p.end(), rng);
    return p;
}

}  // namespace

TEST_CASE("component enumeration and ordering") {
    const auto comps = enumerate_components();
    REQUIRE(comps.size() == 21);
    CHECK(comps[0] == ComponentId::del_pezzo(1));
    CHECK(comps[6] == ComponentId::blown_plane(1, 2));
    CHECK(comps[0].label() == "D(1)");
    CHECK(comps[6].label() == "B(1,2)");
    CHECK(std::count_if(comps.begin(), comps.end(), [](const ComponentId& c) {
              return c.kind == ComponentId::Kind::blown_plane;
          }) == 15);
    CHECK(std::is_sorted(comps.begin(), comps.end()));
}

TEST_CASE("id validation") {
    CHECK_THROWS_AS(ComponentId::del_pezzo(7), std::invalid_argument);
    CHECK_THROWS_AS(ComponentId::blown_plane(2, 2), std::invalid_argument);
    CHECK_THROWS_AS(CurveId::r_curve(1, {1, 2}), std::invalid_argument);
    CHECK_THROWS_AS(CurveId::e_curve({1, 2}, {2, 3}), std::invalid_argument);
    CHECK_THROWS_AS(TriplePointId::make(1, {1, 2}, {3, 4}), std::invalid_argument);
    CHECK(CurveId::e_curve({3, 4}, {1, 2}) == CurveId::e_curve({1, 2}, {3, 4}));
}

TEST_CASE("pairwise intersection rules") {
    CHECK(!component_intersection(ComponentId::del_pezzo(1), ComponentId::del_pezzo(2)));
    CHECK(component_intersection(ComponentId::blown_plane(1, 2), ComponentId::blown_plane(3, 4)) ==
          CurveId::e_curve({1, 2}, {3, 4}));
    CHECK(!component_intersection(ComponentId::del_pezzo(1), ComponentId::blown_plane(1, 2)));
    CHECK(component_intersection(ComponentId::del_pezzo(3), ComponentId::blown_plane(1, 2)) ==
          CurveId::r_curve(3, {1, 2}));
    CHECK(!component_intersection(ComponentId::blown_plane(1, 2), ComponentId::blown_plane(2, 3)));
    CHECK_THROWS_AS(component_intersection(ComponentId::del_pezzo(1), ComponentId::del_pezzo(1)),
                    std::invalid_argument);
}

TEST_CASE("global curve and point counts") {
    const auto& scheme = Scheme::canonical();
    CHECK(scheme.curves().size() == 105);
    CHECK(scheme.points().size() == 90);
    std::size_t r = 0, e = 0;
    for (const auto& c : scheme.curves()) (c.kind == CurveId::Kind::r_curve ? r : e) += 1;
    CHECK(r == 60);
    CHECK(e == 45);
}

TEST_CASE("curves on a component") {
    const auto on_d1 = curves_on_component(ComponentId::del_pezzo(1));
    CHECK(on_d1.size() == 10);
    CHECK(std::all_of(on_d1.begin(), on_d1.end(),
                      [](const CurveId& c) { return c.kind == CurveId::Kind::r_curve; }));

    const auto on_b12 = curves_on_component(ComponentId::blown_plane(1, 2));
    CHECK(on_b12.size() == 10);
    CHECK(std::count_if(on_b12.begin(), on_b12.end(), [](const CurveId& c) {
              return c.kind == CurveId::Kind::r_curve;
          }) == 4);

    // every curve on exactly two components
    std::map<CurveId, int> sides;
    for (const auto& comp : enumerate_components())
        for (const auto& c : curves_on_component(comp)) ++sides[c];
    CHECK(sides.size() == 105);
    CHECK(std::all_of(sides.begin(), sides.end(), [](const auto& kv) { return kv.second == 2; }));
}

TEST_CASE("points on curves and double counting") {
    CHECK(points_on_curve(CurveId::r_curve(1, {2, 3})).size() == 3);
    const auto on_e = points_on_curve(CurveId::e_curve({1, 2}, {3, 4}));
    REQUIRE(on_e.size() == 2);
    CHECK(on_e[0].m == 5);
    CHECK(on_e[1].m == 6);

    const auto& scheme = Scheme::canonical();
    std::size_t total = 0;
    for (const auto& c : scheme.curves()) total += points_on_curve(c).size();
    CHECK(total == 270);  // = 3 * 90 = 60*3 + 45*2
}

TEST_CASE("every triple point lies on 3 components and 3 curves") {
    const auto& scheme = Scheme::canonical();
    for (const auto& p : scheme.points()) {
        const auto comps = point_components(p);
        CHECK(std::set(comps.begin(), comps.end()).size() == 3);
        const auto curves = point_curves(p);
        CHECK(std::set(curves.begin(), curves.end()).size() == 3);
        for (const auto& c : curves) {
            const auto pts = points_on_curve(c);
            CHECK(std::find(pts.begin(), pts.end(), p) != pts.end());
        }
    }
}

TEST_CASE("pre-resolution intersections") {
    const auto dd = segre_intersections(ComponentId::del_pezzo(5), ComponentId::del_pezzo(6));
    REQUIRE(dd.points.size() == 3);
    CHECK(dd.points[0] == DistinguishedLine::make({1, 2}, {3, 4}));
    CHECK(dd.points[1] == DistinguishedLine::make({1, 3}, {2, 4}));
    CHECK(dd.points[2] == DistinguishedLine::make({1, 4}, {2, 3}));
    CHECK(!dd.curve);

    CHECK(segre_intersections(ComponentId::blown_plane(1, 2), ComponentId::blown_plane(1, 3)).empty());
    const auto pp = segre_intersections(ComponentId::blown_plane(1, 2), ComponentId::blown_plane(3, 4));
    REQUIRE(pp.points.size() == 1);
    CHECK(pp.points[0] == DistinguishedLine::make({1, 2}, {3, 4}));

    CHECK(segre_intersections(ComponentId::del_pezzo(1), ComponentId::blown_plane(1, 2)).empty());
    const auto dp = segre_intersections(ComponentId::del_pezzo(3), ComponentId::blown_plane(1, 2));
    CHECK(dp.curve == CurveId::r_curve(3, {1, 2}));
    CHECK(dp.points.empty());

    CHECK(enumerate_distinguished_lines().size() == 45);

    // each distinguished point lies on exactly two D's and two P's
    const auto comps = enumerate_components();
    for (const auto& l : enumerate_distinguished_lines()) {
        int on_dd = 0, on_pp = 0;
        for (std::size_t i = 0; i < comps.size(); ++i)
            for (std::size_t j = i + 1; j < comps.size(); ++j) {
                const auto got = segre_intersections(comps[i], comps[j]);
                if (std::find(got.points.begin(), got.points.end(), l) != got.points.end()) {
                    if (comps[i].kind == ComponentId::Kind::del_pezzo) ++on_dd;
                    else ++on_pp;
                }
            }
        CHECK(on_dd == 1);  // one D-D pair
        CHECK(on_pp == 1);  // one P-P pair
    }
}

TEST_CASE("relabelling action on entities") {
    const Permutation swap12{2, 1, 3, 4, 5, 6};
    const Permutation id{1, 2, 3, 4, 5, 6};
    CHECK(apply_s6(swap12, ComponentId::del_pezzo(1)) == ComponentId::del_pezzo(2));
    CHECK(apply_s6(swap12, ComponentId::blown_plane(1, 2)) == ComponentId::blown_plane(1, 2));
    CHECK(apply_s6(id, CurveId::r_curve(1, {2, 3})) == CurveId::r_curve(1, {2, 3}));
    CHECK(apply_s6(swap12, TriplePointId::make(5, {1, 3}, {2, 4})) ==
          TriplePointId::make(5, {2, 3}, {1, 4}));
    CHECK_THROWS_AS(validate_permutation(Permutation{1, 1, 3, 4, 5, 6}), std::invalid_argument);
}

TEST_CASE("intersections are equivariant under relabelling") {
    std::mt19937 rng(47);
    const auto comps = enumerate_components();
    for (int trial = 0; trial < 8; ++trial) {
        const auto sigma = random_permutation(rng);
        for (std::size_t i = 0; i < comps.size(); ++i)
            for (std::size_t j = i + 1; j < comps.size(); ++j) {
                const auto plain = component_intersection(comps[i], comps[j]);
                const auto moved =
                    component_intersection(apply_s6(sigma, comps[i]), apply_s6(sigma, comps[j]));
                if (plain)
                    CHECK(moved == apply_s6(sigma, *plain));
                else
                    CHECK(!moved);
            }
    }
}

TEST_CASE("scheme indices are consistent") {
    const auto& scheme = Scheme::canonical();
    CHECK(scheme.component_index(ComponentId::del_pezzo(1)) == 0);
    CHECK(scheme.component_index(ComponentId::blown_plane(1, 2)) == 6);
    for (std::size_t i = 0; i < scheme.curves().size(); ++i)
        CHECK(scheme.curve_index(scheme.curves()[i]) == i);
    // curves sorted by their side pairs
    std::vector<std::array<std::size_t, 2>> side_pairs;
    for (const auto& c : scheme.curves()) side_pairs.push_back(scheme.curve_side_indices(c));
    CHECK(std::is_sorted(side_pairs.begin(), side_pairs.end()));
}
