#pragma once

#include "plconvex/surface.hpp"

namespace fixtures {

using namespace plconvex;

inline Vec pt(std::initializer_list<long> xs) {
    Vec out;
    for (long x : xs) out.push_back(Rat(x));
    return out;
}

/* Boundary of the unit cube: vertex i has bits (x, y, z) = (i&1, i>>1&1, i>>2&1). */
inline PLSurface cube() {
    PLSurface s;
    s.ambient_dim = 3;
    for (int i = 0; i < 8; ++i) s.vertices.push_back(pt({i & 1, (i >> 1) & 1, (i >> 2) & 1}));
    s.facets = {{0, 1, 2, 3}, {4, 5, 6, 7}, {0, 1, 4, 5}, {2, 3, 6, 7}, {0, 2, 4, 6}, {1, 3, 5, 7}};
    return s;
}

inline PLSurface octahedron() {
    PLSurface s;
    s.ambient_dim = 3;
    s.vertices = {pt({1, 0, 0}),  pt({-1, 0, 0}), pt({0, 1, 0}),
                  pt({0, -1, 0}), pt({0, 0, 1}),  pt({0, 0, -1})};
    for (int a : {0, 1})
        for (int b : {2, 3})
            for (int c : {4, 5}) s.facets.push_back({a, b, c});
    return s;
}

/* Octahedron with vertex 0 pulled strictly inside the hull of the others:
 * every ridge through it turns reflex. */
inline PLSurface dented_octahedron() {
    PLSurface s = octahedron();
    s.vertices[0] = {Rat(-1, 4), Rat(0), Rat(0)};
    return s;
}

/* Octahedral triangulation of the great 2-sphere {x4 = 0} inside S^3. */
inline PLSurface octa_sphere() {
    PLSurface s;
    s.ambient_dim = 3;
    s.mode = Mode::Spherical;
    s.vertices = {pt({1, 0, 0, 0}),  pt({-1, 0, 0, 0}), pt({0, 1, 0, 0}),
                  pt({0, -1, 0, 0}), pt({0, 0, 1, 0}),  pt({0, 0, -1, 0})};
    for (int a : {0, 1})
        for (int b : {2, 3})
            for (int c : {4, 5}) s.facets.push_back({a, b, c});
    return s;
}

/* Closed spherical polygon: boundary of the pointed cone over a square. */
inline PLSurface square_cone_s2() {
    PLSurface s;
    s.ambient_dim = 2;
    s.mode = Mode::Spherical;
    s.vertices = {pt({1, 1, 1}), pt({-1, 1, 1}), pt({-1, -1, 1}), pt({1, -1, 1})};
    s.facets = {{0, 1}, {1, 2}, {2, 3}, {0, 3}};
    return s;
}

}  // namespace fixtures
