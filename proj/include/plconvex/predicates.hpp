#pragma once

#include "plconvex/linalg.hpp"
#include "plconvex/rational.hpp"

namespace plconvex {

/* A ray through the origin in canonical form: primitive integer coordinates with the
 * sign of the first nonzero coordinate preserved (so p and -p stay distinct). */
struct SphPoint {
    IVec ray;
    bool operator==(const SphPoint& o) const = default;
};

/* Unoriented hyperplane {x : normal . x = offset}. Canonical form: (normal, offset)
 * jointly primitive integer, first nonzero normal entry positive. */
struct Hyperplane {
    IVec normal;
    Int offset = 0;
    bool operator==(const Hyperplane& o) const = default;
};

/* Oriented halfspace {x : normal . x <= offset}, (normal, offset) jointly primitive. */
struct Halfspace {
    IVec normal;
    Int offset = 0;
    bool operator==(const Halfspace& o) const = default;
    Hyperplane boundary() const;
    Halfspace flipped() const;
};

bool lex_less(const Halfspace& a, const Halfspace& b);
bool lex_less(const Hyperplane& a, const Hyperplane& b);

/* Canonical halfspace from a rational normal and offset; throws zero_vector. */
Halfspace make_halfspace(const Vec& normal, const Rat& offset);

/* Sign of the determinant of (p1-p0, ..., pn-p0): +1, 0, -1.
 * Takes exactly n+1 points of R^n. */
int orientation(const std::vector<Vec>& pts);

/* The unique hyperplane through n affinely independent points of R^n.
 * Throws degenerate when the points are affinely dependent. */
Hyperplane hyperplane_through(const std::vector<Vec>& pts);

/* sign(normal . p - offset). */
int side(const Hyperplane& h, const Vec& p);
int side(const Halfspace& h, const Vec& p);

/* Canonical ray through p; throws zero_vector on the origin. */
SphPoint canonical_sph(const Vec& p);
SphPoint antipodal(const SphPoint& p);

}  // namespace plconvex
