#include "plconvex/predicates.hpp"

#include <algorithm>

#include "plconvex/errors.hpp"

namespace plconvex {

Hyperplane Halfspace::boundary() const {
    Vec joint = to_rat(normal);
    joint.push_back(Rat(offset));
    IVec p = primitive(joint);
    /* Canonical sign keys on the normal part. */
    for (std::size_t i = 0; i + 1 < p.size(); ++i) {
        if (sign(p[i]) == 0) continue;
        if (sign(p[i]) < 0)
            for (Int& x : p) x = -x;
        break;
    }
    Hyperplane h;
    h.offset = p.back();
    p.pop_back();
    h.normal = std::move(p);
    return h;
}

Halfspace Halfspace::flipped() const {
    Halfspace f;
    f.normal.reserve(normal.size());
    for (const Int& x : normal) f.normal.push_back(-x);
    f.offset = -offset;
    return f;
}

namespace {

IVec joint_primitive(const Vec& normal, const Rat& offset) {
    Vec joint = normal;
    joint.push_back(offset);
    return primitive(joint);
}

int compare_joint(const IVec& na, const Int& oa, const IVec& nb, const Int& ob) {
    for (std::size_t i = 0; i < na.size(); ++i) {
        if (na[i] != nb[i]) return na[i] < nb[i] ? -1 : 1;
    }
    if (oa != ob) return oa < ob ? -1 : 1;
    return 0;
}

}  // namespace

bool lex_less(const Halfspace& a, const Halfspace& b) {
    return compare_joint(a.normal, a.offset, b.normal, b.offset) < 0;
}

bool lex_less(const Hyperplane& a, const Hyperplane& b) {
    return compare_joint(a.normal, a.offset, b.normal, b.offset) < 0;
}

Halfspace make_halfspace(const Vec& normal, const Rat& offset) {
    if (is_zero(normal)) throw error(errc::zero_vector, "halfspace with zero normal");
    IVec joint = joint_primitive(normal, offset);
    Halfspace h;
    h.offset = joint.back();
    joint.pop_back();
    h.normal = std::move(joint);
    return h;
}

int orientation(const std::vector<Vec>& pts) {
    if (pts.empty()) throw error(errc::dimension_mismatch, "orientation needs n+1 points");
    const std::size_t n = pts[0].size();
    if (pts.size() != n + 1)
        throw error(errc::dimension_mismatch, "orientation needs n+1 points in R^n");
    Mat m;
    m.reserve(n);
    for (std::size_t i = 1; i <= n; ++i) {
        if (pts[i].size() != n) throw error(errc::dimension_mismatch, "orientation point length");
        m.push_back(sub(pts[i], pts[0]));
    }
    return det_sign(m);
}

Hyperplane hyperplane_through(const std::vector<Vec>& pts) {
    if (pts.empty()) throw error(errc::dimension_mismatch, "hyperplane needs n points");
    const std::size_t n = pts[0].size();
    if (pts.size() != n)
        throw error(errc::dimension_mismatch, "hyperplane needs exactly n points in R^n");
    /* Solve (normal, -offset) . (p, 1) = 0 for all points; a 1-dim kernel means the
     * points are affinely independent. */
    Mat rows;
    rows.reserve(n);
    for (const Vec& p : pts) {
        if (p.size() != n) throw error(errc::dimension_mismatch, "hyperplane point length");
        Vec r = p;
        r.push_back(Rat(1));
        rows.push_back(std::move(r));
    }
    Mat kern = kernel_basis(rows, static_cast<int>(n) + 1);
    if (kern.size() != 1) throw error(errc::degenerate, "points are affinely dependent");
    Vec joint = kern[0];
    Rat off = -joint.back();
    joint.pop_back();
    if (is_zero(joint)) throw error(errc::degenerate, "points are affinely dependent");
    return make_halfspace(joint, off).boundary();
}

int side(const Hyperplane& h, const Vec& p) {
    if (p.size() != h.normal.size())
        throw error(errc::dimension_mismatch, "side point length");
    return sign(idot(h.normal, p) - Rat(h.offset));
}

int side(const Halfspace& h, const Vec& p) {
    if (p.size() != h.normal.size())
        throw error(errc::dimension_mismatch, "side point length");
    return sign(idot(h.normal, p) - Rat(h.offset));
}

SphPoint canonical_sph(const Vec& p) {
    SphPoint s;
    try {
        s.ray = primitive(p);
    } catch (const error& e) {
        throw error(errc::zero_vector, "spherical point at the origin");
    }
    return s;
}

SphPoint antipodal(const SphPoint& p) {
    SphPoint a;
    a.ray.reserve(p.ray.size());
    for (const Int& x : p.ray) a.ray.push_back(-x);
    return a;
}

}  // namespace plconvex
