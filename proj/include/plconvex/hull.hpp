#pragma once

#include <vector>

#include "plconvex/predicates.hpp"
#include "plconvex/rational.hpp"

namespace plconvex {

/* One supporting halfspace of a hull with the indices of input points on its
 * boundary (ascending). The halfspace contains the hull: side <= 0 for every
 * input point. */
struct HullFacet {
    Halfspace h;
    std::vector<int> pts;
};

/* Facets of conv(points) by exhaustive supporting-hyperplane enumeration.
 * Deterministic (sorted by halfspace); points must affinely span the ambient
 * space, else throws degenerate. Intended for desk-scale point sets. */
std::vector<HullFacet> hull_facets(const Mat& pts);

/* Facets of cone(rays): supporting halfspaces through the origin. The cone must
 * be full-dimensional (lineality is fine), else throws degenerate. */
std::vector<HullFacet> cone_hull_facets(const Mat& rays);

/* Indices of the points that are vertices of conv(points). Coordinates are
 * deduplicated first; only the first index of each repeated point can appear. */
std::vector<int> hull_vertices(const Mat& pts);

/* Extreme rays of {x : n.x <= 0 for every row n}, which must be a pointed
 * full-dimensional cone; canonical primitive rays sorted lexicographically. */
Mat cone_extreme_rays(const Mat& normals);

}  // namespace plconvex
