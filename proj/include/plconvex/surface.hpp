#pragma once

#include <string>
#include <vector>

#include "plconvex/predicates.hpp"
#include "plconvex/rational.hpp"

namespace plconvex {

enum class Mode { Euclidean, Spherical };

/* Piecewise-linear (n-1)-surface. Euclidean vertices live in R^n; spherical
 * vertices are rays in R^{n+1} kept in canonical primitive form. Facets are
 * 0-based vertex index lists. The combinatorics define the abstract manifold;
 * the realization map may be non-injective (repeated coordinates are legal). */
struct PLSurface {
    int ambient_dim = 0;
    Mode mode = Mode::Euclidean;
    bool allow_boundary = false;
    std::vector<Vec> vertices;
    std::vector<std::vector<int>> facets;
    int coord_dim() const { return mode == Mode::Spherical ? ambient_dim + 1 : ambient_dim; }
};

/* An (n-2)-face with its incident facets; both lists sorted ascending. */
struct RidgeRecord {
    std::vector<int> vertices;
    std::vector<int> facets;
};

struct ValidationReport {
    bool pseudomanifold = true;
    bool connected = true;
    bool closed = true;
    std::vector<int> facet_defects;
    std::vector<int> ridge_defects;
    std::vector<std::string> notes;
    bool ok(const PLSurface& s) const;
};

/* Defects are reported as data; only malformed containers throw. */
ValidationReport validate(const PLSurface& s);

/* All ridges, lexicographic by vertex list. Throws not_pseudomanifold when a
 * ridge has more than two incident facets. */
std::vector<RidgeRecord> ridges(const PLSurface& s);

/* Row per facet vertex, in facet order. */
Mat facet_point_rows(const PLSurface& s, int f);

/* Euclidean: vertex average. Spherical: ray sum (interior direction of the cone). */
Vec facet_centroid(const PLSurface& s, int f);

/* The unique supporting hyperplane of facet f (offset 0 in spherical mode).
 * Throws degenerate when the facet does not span one. */
Hyperplane facet_plane(const PLSurface& s, int f);

/* The (n-2)-faces of facet f as sorted global vertex lists (the facet's own
 * boundary walls). Simplicial facets take the subset fast path; polytopal
 * facets enumerate supporting subplanes. */
std::vector<std::vector<int>> facet_walls(const PLSurface& s, int f);

/* Link of a face: the complex of directions in which the star leaves the face,
 * a spherical surface of ambient_dim n-1-dim(face). cell_to_facet maps link
 * cells back to star facets (ascending facet order). Link coordinates live in
 * the row space of normal_space; base/face_span record the projection frame,
 * so the ambient direction of a link vertex y is sum_k y[k] * normal_space.rows[k]. */
struct LinkComplex {
    PLSurface complex;
    std::vector<int> cell_to_facet;
    Vec base;
    SubspaceBasis face_span;
    SubspaceBasis normal_space;
};

LinkComplex face_link(const PLSurface& s, std::vector<int> face);

/* Number of facet cones containing a generic ray (spherical mode). A probe on some
 * cone's relative boundary is rejected and replaced by deterministically perturbed
 * interior rays of facet 0, at most 64 of them. The overload starts from the facet-0
 * centroid. The count is independent of the generic probe chosen. */
int covering_multiplicity(const PLSurface& s, const SphPoint& probe);
int covering_multiplicity(const PLSurface& s);

/* Facets of each connected component of the facet-adjacency graph (two facets are
 * adjacent when they share a ridge); components ordered by smallest facet index. */
std::vector<std::vector<int>> facet_components(const PLSurface& s);

/* Restriction to a facet subset, dropping unused vertices (index order kept). */
PLSurface subsurface(const PLSurface& s, const std::vector<int>& facet_subset);

}  // namespace plconvex
