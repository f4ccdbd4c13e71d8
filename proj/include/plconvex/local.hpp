#pragma once

#include <optional>
#include <string>
#include <vector>

#include "plconvex/predicates.hpp"
#include "plconvex/surface.hpp"

namespace plconvex {

enum class RidgeKind { StrictlyConvex, Flat, Reflex };

struct RidgeVerdict {
    int ridge = -1;
    std::vector<int> vertices;
    RidgeKind kind = RidgeKind::Flat;
    bool orientation_consistent = true;
};

/* Transverse orientation: per facet, the halfspace bounded by the facet's plane,
 * oriented so that across every ridge each facet's off-ridge vertices end up
 * weakly inside the neighbor's halfspace. Ridges where no choice achieves that
 * are conflicts; a conflict doubles as a local-convexity failure certificate. */
struct Coorientation {
    std::vector<Halfspace> facet_sides;
    std::vector<int> conflict_ridges;
    bool consistent() const { return conflict_ridges.empty(); }
};

Coorientation propagate_coorientation(const PLSurface& s, const std::vector<RidgeRecord>& rr);
Coorientation propagate_coorientation(const PLSurface& s);

/* Dihedral classification at ridge rr[index] under the propagated orientation;
 * symmetric in the two facets. Throws boundary_ridge on a one-facet ridge. */
RidgeVerdict ridge_convexity(const PLSurface& s, const std::vector<RidgeRecord>& rr,
                             const Coorientation& co, int index);

/* Witness route for star-of-face convexity: the star's cells must support and
 * combinatorially tile the boundary of the hull of the star near the face.
 * On success the witness lists the hull's supporting halfspaces at the face
 * in ambient coordinates. */
struct LocalCheck {
    bool convex = false;
    std::vector<Halfspace> witness;
    std::string certificate;
};

LocalCheck star_hull_check(const PLSurface& s, const std::vector<int>& face);

/* Reduction route: the vertex is locally convex iff its link, a spherical
 * surface one dimension down, is locally convex everywhere and single-wrapped.
 * Links that are curves fall back to the witness route. */
bool recursive_link_check(const PLSurface& s, int vertex);

/* The lexicographically smallest vertex of a closed Euclidean surface that is a
 * vertex of conv(all vertices); throws internal_inconsistency if none is. */
int exposed_vertex(const PLSurface& s);

/* Spherical: smallest vertex whose ray is exposed on the vertex cone (some
 * hyperplane through the origin supports all vertex rays and meets them only
 * in that ray). */
std::optional<int> strict_spherical_vertex(const PLSurface& s);

enum class VertexMethod { WitnessHull, RecursiveLink, Both };

struct VertexVerdict {
    int vertex = -1;
    bool convex = false;
    VertexMethod method = VertexMethod::WitnessHull;
};

struct FaceCertificate {
    std::string kind;
    std::vector<int> face;
};

/* Ridge verdicts for every two-facet ridge, then vertex checks (both routes
 * where the recursion applies, and they must agree). Vertex checks are skipped
 * once a ridge-level violation exists. interior_only restricts to ridges with
 * two facets and vertices not on any boundary ridge. */
struct LocalReport {
    std::vector<RidgeVerdict> ridge_verdicts;
    std::vector<VertexVerdict> vertex_verdicts;
    std::optional<FaceCertificate> first_violation;
    bool locally_convex() const { return !first_violation.has_value(); }
};

LocalReport local_report(const PLSurface& s, bool interior_only = false);

}  // namespace plconvex
