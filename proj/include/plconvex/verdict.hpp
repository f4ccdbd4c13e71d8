#pragma once

#include <optional>
#include <string>
#include <vector>

#include "plconvex/local.hpp"
#include "plconvex/predicates.hpp"
#include "plconvex/surface.hpp"

namespace plconvex {

/* Supporting description of the convex body traced by a locally convex closed
 * surface: K = intersection of the halfspaces (all offsets 0 in spherical mode,
 * so K is a cone). lineality is exactly {x : a.x = 0 for every normal a} and
 * pointed_part_dim = coordinate dim minus its dim. K must be full-dimensional. */
struct ConeWitness {
    std::vector<Halfspace> halfspaces;
    SubspaceBasis lineality;
    int pointed_part_dim = 0;
};

/* Directrix/generatrix split of a spherical cone surface: the directrix is the
 * great subsphere of the witness lineality space (sphere dimension directrix_dim,
 * -1 for a pointed cone), the generatrix the cross-section of the surface by the
 * orthogonal complement. No generatrix exists when the surface itself is a great
 * subsphere. multiplicity counts cells over a generic image point. */
struct Decomposition {
    int directrix_dim = -1;
    SubspaceBasis directrix;
    std::optional<PLSurface> generatrix;
    int multiplicity = 1;
};

enum class VerdictTag {
    ConvexEmbedding,
    ConvexConeBoundary,
    GreatSubsphere,
    GluedHemispheres,
    NotLocallyConvex,
    StructuralReject,
    BoundaryPresentNoGlobalClaim,
    Unsupported,
};

const char* to_string(VerdictTag tag);

/* A positive tag asserts convexity (or, with boundary, that every interior
 * check passed); it always carries a witness that verify_witness accepts. */
bool positive(VerdictTag tag);

struct Verdict {
    VerdictTag tag = VerdictTag::Unsupported;
    std::optional<ConeWitness> witness;
    std::optional<Decomposition> decomposition;
    std::optional<FaceCertificate> violation;
    ValidationReport validation;
    LocalReport local;
    std::string note;
};

/* false carries the failing clause: "w" witness malformed, "a" facet plane not
 * a witness boundary, "b" untouched halfspace, "c" vertex outside, "d" boundary
 * coverage or extreme-structure mismatch. face is the offending facet, vertex,
 * or halfspace index for the clause, -1 when global. */
struct WitnessCheck {
    bool ok = false;
    std::string clause;
    int face = -1;
    std::string detail;
    /* Uniform cell count over a generic interior point of each witness facet:
     * 1 for embeddings, the covering number for multiple spherical covers. */
    int multiplicity = 1;
};

/* Checks that the surface traces the whole boundary of the witness body exactly:
 * every facet lies in a witness hyperplane and vice versa, all vertices satisfy
 * all inequalities, each witness facet carries the right extreme structure, and
 * the cells in each hyperplane tile its facet (generic-probe count = 1). */
WitnessCheck verify_witness(const PLSurface& s, const ConeWitness& w);

/* Exact lineality space {x : a_j.x = 0 for all j} of the witness cone. */
SubspaceBasis directrix_of_cone(const ConeWitness& w);

/* Cross-section of a spherical cone surface by the orthogonal complement of the
 * witness lineality: a spherical surface one ambient dimension down per lineality
 * dimension. Identity for a pointed witness; throws degenerate_section when the
 * lineality is a hyperplane (great-subsphere case, no cross-section exists). */
PLSurface generatrix_section(const PLSurface& s, const ConeWitness& w);

/* Geodesic arc between two rays in the closed complement of the witness cone,
 * staying in that closed complement; mid is a midpoint witness. Verified by sign
 * checks: each of the three rays satisfies some a_j.x >= 0. */
struct ArcCertificate {
    SphPoint from;
    SphPoint to;
    SphPoint mid;
};

ArcCertificate a_convexity_probe(const ConeWitness& w, const SphPoint& x, const SphPoint& x2);

/* Closed connected Euclidean surface, ambient >= 3: local convexity everywhere
 * forces the surface to be the boundary of the convex hull of its vertices; the
 * hull halfspaces are the witness. */
Verdict check_euclidean_closed(const PLSurface& s);

/* Closed spherical surface, sphere dimension >= 3: local convexity forces the
 * surface to trace the boundary of a convex cone; the witness halfspaces come
 * from the propagated facet coorientation, and the verdict carries the
 * directrix/generatrix split and the covering multiplicity. */
Verdict check_spherical_closed(const PLSurface& s);

/* Surface with boundary: interior ridges and interior vertices are checked
 * locally; no global claim is ever made. */
Verdict check_with_boundary(const PLSurface& s);

/* Dispatch on allow_boundary and mode. */
Verdict check_surface(const PLSurface& s);

}  // namespace plconvex
