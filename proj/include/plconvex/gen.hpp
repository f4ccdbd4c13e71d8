#pragma once

#include <cstdint>
#include <string>

#include "plconvex/surface.hpp"

namespace plconvex {

/* Instance generators. All draws come from std::mt19937_64 (sequence pinned by
 * the standard) reduced by modulo, so a given seed reproduces the same surface
 * on every platform. */

/* Boundary complex of the convex hull of m integer points drawn in [-40, 40]^n;
 * only hull vertices are kept. Throws bad_params when m < n + 1 or the draws
 * keep collapsing to lower dimension. */
PLSurface gen_hull(int n, int m, std::uint64_t seed);

struct PerturbedHull {
    PLSurface s;
    int perturbed_vertex = -1;
};

/* Simplicial hull boundary with one vertex pulled strictly inside the hull of
 * the others: locally convex everywhere except around the dent. */
PerturbedHull gen_perturbed_hull(int n, int m, std::uint64_t seed);

/* Triangulated S^3 boundary of a random cone K in R^4 with the requested
 * lineality dimension (0..3): 3 gives a great 2-sphere, 2 two glued hemisphere
 * fans, 1 a polygon wedge fan, 0 the cone over a random 3-polytope. A random
 * unimodular change of basis mixes the coordinates. */
PLSurface gen_sph_cone(int lineality, std::uint64_t seed);

/* Octahedral triangulation of a random great 2-sphere in S^3. */
PLSurface gen_great_sphere(std::uint64_t seed);

/* Combinatorial doubling: two disjoint copies of the same geometry. */
PLSurface gen_double_cover(const PLSurface& s);

/* Pentagram prism: a locally convex self-overlapping pentagon (exact unit-circle
 * rationals) crossed with a unit segment, boundary allowed. The shape is fixed;
 * the seed is accepted for interface uniformity and ignored. */
PLSurface gen_cylinder_truncated(std::uint64_t seed);

}  // namespace plconvex
