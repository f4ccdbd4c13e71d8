#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <random>

#include "doctest.h"
#include "oracles.hpp"
#include "plconvex/lp.hpp"

using namespace plconvex;

namespace {

Vec vec(std::initializer_list<long> xs) {
    Vec out;
    for (long x : xs) out.push_back(Rat(x));
    return out;
}

oracle::Row orow(const Vec& v) { return {v.begin(), v.end()}; }

std::vector<oracle::Row> orows(const Mat& m) {
    std::vector<oracle::Row> out;
    for (const auto& r : m) out.push_back(orow(r));
    return out;
}

}  // namespace

TEST_CASE("simplex solves a pinned equality program") {
    /* max x0 + x1 on the segment x0 + 2 x1 = 4, x >= 0: optimum at (4, 0). */
    LpResult r = lp_solve({vec({1, 2})}, vec({4}), vec({1, 1}));
    REQUIRE(r.status == LpStatus::Optimal);
    CHECK(r.value == Rat(4));
    CHECK(r.x == Vec{Rat(4), Rat(0)});
}

TEST_CASE("simplex flags infeasible and unbounded programs") {
    /* x0 + x1 = -1 has no nonnegative solution. */
    CHECK(lp_solve({vec({1, 1})}, vec({-1}), vec({1, 0})).status == LpStatus::Infeasible);
    /* max x1 with only x0 pinned leaves x1 free upward. */
    CHECK(lp_solve({vec({1, 0})}, vec({1}), vec({0, 1})).status == LpStatus::Unbounded);
}

TEST_CASE("simplex accepts negative right-hand sides by row normalization") {
    LpResult r = lp_solve({vec({-1, -2})}, vec({-4}), vec({1, 1}));
    REQUIRE(r.status == LpStatus::Optimal);
    CHECK(r.value == Rat(4));
}

TEST_CASE("optimal vertices satisfy the constraints exactly") {
    Mat a = {vec({1, 1, 1, 0}), vec({1, 3, 0, 1})};
    Vec b = vec({4, 6});
    LpResult r = lp_solve(a, b, vec({3, 5, 0, 0}));
    REQUIRE(r.status == LpStatus::Optimal);
    for (size_t i = 0; i < a.size(); ++i) CHECK(dot(a[i], r.x) == b[i]);
    for (const auto& xi : r.x) CHECK(sign(xi) >= 0);
    CHECK(r.value == dot(vec({3, 5, 0, 0}), r.x));
}

TEST_CASE("cone membership on pinned generators") {
    Mat gens = {vec({1, 0}), vec({1, 1})};
    CHECK(in_cone(gens, vec({2, 1})));
    CHECK(in_cone(gens, vec({1, 1})));
    CHECK(in_cone(gens, vec({0, 0})));
    CHECK(!in_cone(gens, vec({0, 1})));
    CHECK(!in_cone(gens, vec({-1, 0})));
    CHECK(in_cone({}, vec({0, 0})));
    CHECK(!in_cone({}, vec({1, 0})));
}

TEST_CASE("hull membership matches the enumeration oracle on random draws") {
    std::mt19937_64 eng(5);
    auto coord = [&] { return Rat(static_cast<long>(eng() % 21) - 10); };
    for (int trial = 0; trial < 40; ++trial) {
        const int n = 2 + static_cast<int>(trial % 2);
        Mat pts;
        for (int i = 0; i < 6; ++i) {
            Vec p(n);
            for (auto& x : p) x = coord();
            pts.push_back(p);
        }
        Vec target(n);
        for (auto& x : target) x = coord();
        CHECK(in_convex_hull(pts, target) == oracle::hull_member(orows(pts), orow(target)));
    }
}

TEST_CASE("separation output satisfies its own constraints") {
    std::mt19937_64 eng(17);
    auto coord = [&] { return Rat(static_cast<long>(eng() % 13) - 6); };
    for (int trial = 0; trial < 30; ++trial) {
        const int dim = 2 + static_cast<int>(trial % 3);
        Mat ge0, get, eq0;
        for (int i = 0; i < 3; ++i) {
            Vec g(dim);
            for (auto& x : g) x = coord();
            ge0.push_back(g);
        }
        Vec g(dim);
        for (auto& x : g) x = coord();
        get.push_back(g);
        SeparationResult r = best_separation(ge0, get, eq0, dim);
        CHECK(r.t <= Rat(1));
        for (const auto& row : ge0) CHECK(sign(dot(r.c, row)) >= 0);
        for (const auto& row : get) CHECK(dot(r.c, row) >= r.t);
        for (const auto& ci : r.c) CHECK(abs(ci) <= Rat(1));
    }
}

TEST_CASE("separation finds the obvious certificate") {
    SeparationResult r = best_separation({}, {vec({1, 0}), vec({1, 1})}, {}, 2);
    CHECK(sign(r.t) > 0);
    r = best_separation({}, {vec({1, 0}), vec({-1, 0})}, {}, 2);
    CHECK(sign(r.t) <= 0);
}

TEST_CASE("strict interior points respect every inequality strictly") {
    std::vector<Halfspace> box = {
        make_halfspace(vec({1, 0}), Rat(1)),
        make_halfspace(vec({-1, 0}), Rat(0)),
        make_halfspace(vec({0, 1}), Rat(1)),
        make_halfspace(vec({0, -1}), Rat(0)),
    };
    StrictPoint p = strict_interior_point(box, 2);
    REQUIRE(p.found);
    for (const auto& h : box) CHECK(side(h, p.x) < 0);

    box.push_back(make_halfspace(vec({1, 0}), Rat(-2)));
    CHECK(!strict_interior_point(box, 2).found);

    std::vector<Halfspace> slab = {
        make_halfspace(vec({1, 1}), Rat(0)),
        make_halfspace(vec({-1, -1}), Rat(0)),
    };
    CHECK(!strict_interior_point(slab, 2).found);
}
