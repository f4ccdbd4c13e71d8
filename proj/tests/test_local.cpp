#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <algorithm>
#include <map>
#include <set>

#include "doctest.h"
#include "fixtures.hpp"
#include "plconvex/errors.hpp"
#include "plconvex/local.hpp"

using namespace plconvex;
using fixtures::pt;

namespace {

PLSurface sheared(const PLSurface& s) {
    PLSurface out = s;
    for (auto& v : out.vertices) v[0] += v[1];
    return out;
}

std::map<RidgeKind, int> kind_histogram(const PLSurface& s) {
    std::map<RidgeKind, int> hist;
    for (const auto& rv : local_report(s).ridge_verdicts) ++hist[rv.kind];
    return hist;
}

}  // namespace

TEST_CASE("cube coorientation is consistent and encloses every vertex") {
    PLSurface s = fixtures::cube();
    Coorientation co = propagate_coorientation(s);
    CHECK(co.consistent());
    REQUIRE(co.facet_sides.size() == 6);
    for (const auto& h : co.facet_sides)
        for (const auto& v : s.vertices) CHECK(side(h, v) <= 0);
}

TEST_CASE("every cube ridge is strictly convex") {
    PLSurface s = fixtures::cube();
    LocalReport rep = local_report(s);
    CHECK(rep.locally_convex());
    CHECK(rep.ridge_verdicts.size() == 12);
    for (const auto& rv : rep.ridge_verdicts) {
        CHECK(rv.kind == RidgeKind::StrictlyConvex);
        CHECK(rv.orientation_consistent);
        CHECK(rv.vertices.size() == 2);
    }
    CHECK(rep.vertex_verdicts.size() == 8);
    for (const auto& vv : rep.vertex_verdicts) CHECK(vv.convex);
}

TEST_CASE("splitting a facet in two creates one flat ridge") {
    PLSurface s = fixtures::cube();
    s.facets[0] = {0, 1, 2};
    s.facets.push_back({1, 2, 3});
    LocalReport rep = local_report(s);
    CHECK(rep.locally_convex());
    int flats = 0;
    for (const auto& rv : rep.ridge_verdicts)
        if (rv.kind == RidgeKind::Flat) {
            ++flats;
            CHECK(rv.vertices == std::vector<int>{1, 2});
        }
    CHECK(flats == 1);
}

TEST_CASE("a dented vertex certifies reflex ridges around its star") {
    PLSurface s = fixtures::dented_octahedron();
    LocalReport rep = local_report(s);
    CHECK(!rep.locally_convex());
    REQUIRE(rep.first_violation.has_value());
    CHECK(rep.first_violation->kind == "reflex-ridge");
    CHECK(rep.first_violation->face == std::vector<int>{2, 4});

    /* The dent apex star is itself a convex cone; the fold shows at the four
     * ridges bounding it, each sharing a facet with the apex. */
    std::set<std::vector<int>> reflex;
    for (const auto& rv : rep.ridge_verdicts)
        if (rv.kind == RidgeKind::Reflex) {
            CHECK(std::find(rv.vertices.begin(), rv.vertices.end(), 0) == rv.vertices.end());
            CHECK(!rv.orientation_consistent);
            reflex.insert(rv.vertices);
        }
    CHECK(reflex == std::set<std::vector<int>>{{2, 4}, {2, 5}, {3, 4}, {3, 5}});
}

TEST_CASE("ridge kinds are invariant under a shear of the ambient space") {
    auto base = kind_histogram(fixtures::dented_octahedron());
    auto mapped = kind_histogram(sheared(fixtures::dented_octahedron()));
    CHECK(base == mapped);
    CHECK(kind_histogram(fixtures::cube()) == kind_histogram(sheared(fixtures::cube())));
}

TEST_CASE("star hull check accepts convex corners and rejects the dent") {
    PLSurface cube = fixtures::cube();
    for (int v = 0; v < 8; ++v) {
        LocalCheck c = star_hull_check(cube, {v});
        CHECK(c.convex);
        CHECK(!c.witness.empty());
    }
    /* The apex star of the dent is a convex cone, so the apex itself passes;
     * the fold is caught at the neighboring vertices. */
    PLSurface dent = fixtures::dented_octahedron();
    CHECK(star_hull_check(dent, {0}).convex);
    LocalCheck bad = star_hull_check(dent, {2});
    CHECK(!bad.convex);
    CHECK(!bad.certificate.empty());
}

TEST_CASE("both vertex routes agree on every fixture vertex") {
    for (const PLSurface& s : {fixtures::cube(), fixtures::octahedron(), fixtures::dented_octahedron()})
        for (int v = 0; v < static_cast<int>(s.vertices.size()); ++v)
            CHECK(star_hull_check(s, {v}).convex == recursive_link_check(s, v));
}

TEST_CASE("exposed vertices are found lexicographically") {
    CHECK(exposed_vertex(fixtures::cube()) == 0);
    CHECK(exposed_vertex(fixtures::octahedron()) == 1);
}

TEST_CASE("strict spherical vertices exist exactly for pointed vertex cones") {
    CHECK(strict_spherical_vertex(fixtures::square_cone_s2()) == 0);
    CHECK(!strict_spherical_vertex(fixtures::octa_sphere()).has_value());
}

TEST_CASE("boundary ridges throw unless interior-only is requested") {
    PLSurface s = fixtures::cube();
    s.facets.erase(s.facets.begin());
    s.allow_boundary = true;
    CHECK_THROWS_AS(local_report(s), error);
    LocalReport rep = local_report(s, true);
    CHECK(rep.locally_convex());
    for (const auto& vv : rep.vertex_verdicts) CHECK(vv.vertex >= 4);
}
