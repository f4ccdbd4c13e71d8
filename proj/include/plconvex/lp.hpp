#pragma once

#include "plconvex/predicates.hpp"
#include "plconvex/rational.hpp"

namespace plconvex {

enum class LpStatus { Optimal, Infeasible, Unbounded };

struct LpResult {
    LpStatus status = LpStatus::Infeasible;
    Rat value;
    Vec x;
};

/* max c.x  subject to  A x = b, x >= 0. Two-phase simplex with Bland's rule,
 * exact rational pivots, guaranteed termination. */
LpResult lp_solve(const Mat& a, const Vec& b, const Vec& c);

/* target in cone(rows of gens), exact. An empty generator set spans {0}. */
bool in_cone(const Mat& gens, const Vec& target);

/* target in conv(rows of pts), exact. */
bool in_convex_hull(const Mat& pts, const Vec& target);

/* max t  s.t.  c.g >= 0 for g in ge0,  c.g >= t for g in get,  c.g = 0 for g in eq0,
 * |c_i| <= 1, t <= 1. Always feasible; t > 0 certifies a strict separation. */
struct SeparationResult {
    Rat t;
    Vec c;
};
SeparationResult best_separation(const Mat& ge0, const Mat& get, const Mat& eq0, int dim);

/* Point with a_i.x + eps <= b_i for all halfspaces and maximal eps <= 1.
 * found iff the intersection has nonempty interior (eps > 0). */
struct StrictPoint {
    bool found = false;
    Vec x;
};
StrictPoint strict_interior_point(const std::vector<Halfspace>& hs, int dim);

}  // namespace plconvex
