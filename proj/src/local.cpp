#include "plconvex/local.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <set>

#include "plconvex/errors.hpp"
#include "plconvex/hull.hpp"
#include "plconvex/linalg.hpp"
#include "plconvex/lp.hpp"

namespace plconvex {

namespace {

struct HalfspaceLess {
    bool operator()(const Halfspace& a, const Halfspace& b) const { return lex_less(a, b); }
};

int first_off(const PLSurface& s, int f, const std::vector<int>& ridge) {
    for (int v : s.facets[f])
        if (!std::binary_search(ridge.begin(), ridge.end(), v)) return v;
    throw error(errc::degenerate, "facet " + std::to_string(f) + " has no off-ridge vertex");
}

/* All off-ridge vertices of facet f weakly inside h? Also reports strict ones. */
struct SideTally {
    int pos = 0, neg = 0;
};

SideTally off_ridge_sides(const PLSurface& s, const Halfspace& h, int f, const std::vector<int>& ridge) {
    SideTally t;
    for (int v : s.facets[f]) {
        if (std::binary_search(ridge.begin(), ridge.end(), v)) continue;
        int sg = side(h, s.vertices[v]);
        if (sg > 0) ++t.pos;
        else if (sg < 0) ++t.neg;
    }
    return t;
}

Vec ambient_dir(const LinkComplex& l, const Vec& y) {
    Vec d(static_cast<size_t>(l.normal_space.ambient), Rat(0));
    for (int k = 0; k < l.normal_space.dim(); ++k) d = add(d, scaled(y[k], l.normal_space.rows[k]));
    return d;
}

/* Fold test at a link ridge whose two cells share one plane: their off-ridge
 * rays must lie strictly on opposite sides of the ridge span within the plane.
 * Returns true on a fold or on degenerate geometry. */
bool folds_at(const PLSurface& lk, const RidgeRecord& r, const Vec& plane_normal) {
    const int m = lk.coord_dim();
    Mat wall;
    for (int v : r.vertices) wall.push_back(lk.vertices[v]);
    SubspaceBasis wb = make_basis(wall, m);
    if (wb.dim() != m - 2) return true;
    int cell_sign[2] = {0, 0};
    for (int t = 0; t < 2; ++t) {
        for (int v : lk.facets[r.facets[t]]) {
            if (std::binary_search(r.vertices.begin(), r.vertices.end(), v)) continue;
            Mat rows = wb.rows;
            rows.push_back(lk.vertices[v]);
            rows.push_back(plane_normal);
            int d = det_sign(rows);
            if (d == 0) return true;
            if (cell_sign[t] == 0) cell_sign[t] = d;
            else if (cell_sign[t] != d) return true;
        }
    }
    return cell_sign[0] == cell_sign[1];
}

/* Hyperplane through the face span and the listed link rays, as an ambient
 * halfspace holding the ray `neg` weakly inside. */
Halfspace ambient_star_side(const PLSurface& s, const LinkComplex& l, const std::vector<int>& on_rays,
                            const Vec& neg_ray) {
    const int dim = s.coord_dim();
    Mat rows = l.face_span.rows;
    for (int id : on_rays) rows.push_back(ambient_dir(l, l.complex.vertices[id]));
    Mat ker = kernel_basis(rows, dim);
    if (ker.size() != 1) throw error(errc::hull_failure, "star witness hyperplane is not unique");
    Rat off = s.mode == Mode::Euclidean ? dot(ker[0], l.base) : Rat(0);
    Halfspace h = make_halfspace(ker[0], off);
    int sg = sign(dot(to_rat(h.normal), ambient_dir(l, neg_ray)));
    if (sg == 0) throw error(errc::hull_failure, "star witness orientation is ambiguous");
    return sg > 0 ? h.flipped() : h;
}

}  // namespace

Coorientation propagate_coorientation(const PLSurface& s, const std::vector<RidgeRecord>& rr) {
    const int nf = static_cast<int>(s.facets.size());
    std::vector<Hyperplane> planes;
    planes.reserve(nf);
    for (int f = 0; f < nf; ++f) planes.push_back(facet_plane(s, f));

    std::vector<std::vector<std::pair<int, int>>> adj(nf);
    for (int i = 0; i < static_cast<int>(rr.size()); ++i) {
        if (rr[i].facets.size() != 2) continue;
        adj[rr[i].facets[0]].push_back({i, rr[i].facets[1]});
        adj[rr[i].facets[1]].push_back({i, rr[i].facets[0]});
    }

    Coorientation co;
    co.facet_sides.resize(nf);
    std::vector<int> comp_of(nf, -1);
    for (int start = 0; start < nf; ++start) {
        if (comp_of[start] >= 0) continue;

        std::vector<int> comp{start};
        comp_of[start] = start;
        for (size_t q = 0; q < comp.size(); ++q)
            for (auto [ridx, g] : adj[comp[q]])
                if (comp_of[g] < 0) {
                    comp_of[g] = start;
                    comp.push_back(g);
                }
        std::vector<int> comp_ridges;
        for (int i = 0; i < static_cast<int>(rr.size()); ++i)
            if (rr[i].facets.size() == 2 && comp_of[rr[i].facets[0]] == start)
                comp_ridges.push_back(i);

        /* The seed orientation is not determined by the agreement rule, so both
         * are tried; the one with fewer conflicts wins, the canonical one on ties. */
        struct Attempt {
            std::vector<Halfspace> sides;
            std::vector<int> conflicts;
        };
        auto attempt = [&](bool flip_seed) {
            Attempt a;
            a.sides.resize(nf);
            Halfspace h{planes[start].normal, planes[start].offset};
            a.sides[start] = flip_seed ? h.flipped() : h;
            std::vector<char> vis(nf, 0);
            vis[start] = 1;
            std::deque<int> queue{start};
            while (!queue.empty()) {
                int f = queue.front();
                queue.pop_front();
                for (auto [ridx, g] : adj[f]) {
                    if (vis[g]) continue;
                    if (planes[f] == planes[g]) {
                        a.sides[g] = a.sides[f];
                    } else {
                        Halfspace cand{planes[g].normal, planes[g].offset};
                        SideTally t = off_ridge_sides(s, cand, f, rr[ridx].vertices);
                        a.sides[g] = t.pos > 0 ? cand.flipped() : cand;
                    }
                    vis[g] = 1;
                    queue.push_back(g);
                }
            }
            for (int i : comp_ridges) {
                int f = rr[i].facets[0], g = rr[i].facets[1];
                bool ok;
                if (planes[f] == planes[g]) {
                    ok = a.sides[f] == a.sides[g];
                } else {
                    ok = off_ridge_sides(s, a.sides[f], g, rr[i].vertices).pos == 0 &&
                         off_ridge_sides(s, a.sides[g], f, rr[i].vertices).pos == 0;
                }
                if (!ok) a.conflicts.push_back(i);
            }
            return a;
        };

        Attempt best = attempt(false);
        if (!best.conflicts.empty()) {
            Attempt alt = attempt(true);
            if (alt.conflicts.size() < best.conflicts.size()) best = alt;
        }
        for (int f : comp) co.facet_sides[f] = best.sides[f];
        co.conflict_ridges.insert(co.conflict_ridges.end(), best.conflicts.begin(), best.conflicts.end());
    }
    std::sort(co.conflict_ridges.begin(), co.conflict_ridges.end());
    return co;
}

Coorientation propagate_coorientation(const PLSurface& s) { return propagate_coorientation(s, ridges(s)); }

RidgeVerdict ridge_convexity(const PLSurface& s, const std::vector<RidgeRecord>& rr,
                             const Coorientation& co, int index) {
    const RidgeRecord& r = rr.at(index);
    if (r.facets.size() != 2)
        throw error(errc::boundary_ridge, "ridge " + std::to_string(index) + " has a single facet");
    int f = r.facets[0], g = r.facets[1];
    SideTally a = off_ridge_sides(s, co.facet_sides[f], g, r.vertices);
    SideTally b = off_ridge_sides(s, co.facet_sides[g], f, r.vertices);

    RidgeVerdict v;
    v.ridge = index;
    v.vertices = r.vertices;
    if (a.pos > 0 || b.pos > 0) {
        v.kind = RidgeKind::Reflex;
        v.orientation_consistent = false;
    } else if (a.neg == 0 && b.neg == 0) {
        v.kind = RidgeKind::Flat;
    } else {
        v.kind = RidgeKind::StrictlyConvex;
    }
    return v;
}

LocalCheck star_hull_check(const PLSurface& s, const std::vector<int>& face) {
    LinkComplex l = face_link(s, face);
    const PLSurface& lk = l.complex;
    const int m = l.normal_space.dim();
    if (m < 3) throw error(errc::unsupported, "star quotient dimension below 3");

    ValidationReport rep = validate(lk);
    if (!rep.pseudomanifold || !rep.closed || !rep.facet_defects.empty() || !rep.ridge_defects.empty())
        throw error(errc::hull_failure, "star link is not a closed pseudomanifold");
    if (!rep.connected) return {false, {}, "star link is disconnected"};

    Mat rays = lk.vertices;
    const bool flat = rank_of(rays) == m - 1;

    std::vector<IVec> cell_normals;
    for (auto& cell : lk.facets) {
        Mat rows;
        for (int v : cell) rows.push_back(lk.vertices[v]);
        Mat ker = kernel_basis(rows, m);
        if (ker.size() != 1) throw error(errc::hull_failure, "star cell does not span a hyperplane");
        cell_normals.push_back(primitive_positive(ker[0]));
    }

    std::set<Halfspace, HalfspaceLess> cell_sides;
    std::vector<HullFacet> hull;
    if (!flat) {
        for (size_t c = 0; c < lk.facets.size(); ++c) {
            int pos = 0, neg = 0;
            for (auto& r : rays) {
                int sg = sign(idot(cell_normals[c], r));
                if (sg > 0) ++pos;
                else if (sg < 0) ++neg;
            }
            if (pos > 0 && neg > 0)
                return {false, {}, "star cell of facet " + std::to_string(l.cell_to_facet[c]) +
                                       " does not support the star"};
            Halfspace h = make_halfspace(to_rat(cell_normals[c]), Rat(0));
            cell_sides.insert(pos > 0 ? h.flipped() : h);
        }
        hull = cone_hull_facets(rays);
        std::set<Halfspace, HalfspaceLess> hull_sides;
        for (auto& hf : hull) hull_sides.insert(hf.h);
        if (hull_sides != cell_sides) return {false, {}, "star does not reach every hull facet"};
    }

    for (auto& r : ridges(lk)) {
        if (!flat && cell_normals[r.facets[0]] != cell_normals[r.facets[1]]) continue;
        if (folds_at(lk, r, to_rat(cell_normals[r.facets[0]])))
            return {false, {}, "star folds along a ridge"};
    }

    if (covering_multiplicity(lk) != 1)
        return {false, {}, "star wraps its hull boundary more than once"};

    LocalCheck out;
    out.convex = true;
    if (flat) {
        Mat rows = l.face_span.rows;
        for (auto& y : lk.vertices) rows.push_back(ambient_dir(l, y));
        Mat ker = kernel_basis(rows, s.coord_dim());
        if (ker.size() != 1) throw error(errc::hull_failure, "flat star spans no hyperplane");
        Rat off = s.mode == Mode::Euclidean ? dot(ker[0], l.base) : Rat(0);
        out.witness.push_back(make_halfspace(ker[0], off));
    } else {
        std::set<Halfspace, HalfspaceLess> witness;
        for (auto& hf : hull) {
            int neg = -1;
            for (int i = 0; i < static_cast<int>(rays.size()); ++i)
                if (side(hf.h, rays[i]) < 0) { neg = i; break; }
            if (neg < 0) throw error(errc::hull_failure, "hull facet touches every star ray");
            witness.insert(ambient_star_side(s, l, hf.pts, rays[neg]));
        }
        out.witness.assign(witness.begin(), witness.end());
    }
    return out;
}

bool recursive_link_check(const PLSurface& s, int vertex) {
    LinkComplex l = face_link(s, {vertex});
    const PLSurface& lk = l.complex;
    ValidationReport rep = validate(lk);
    if (!rep.pseudomanifold || !rep.closed || !rep.facet_defects.empty() || !rep.ridge_defects.empty())
        throw error(errc::degenerate_star, "link of vertex " + std::to_string(vertex) + " is not closed");
    if (!rep.connected) return false;
    if (lk.ambient_dim == 2) return star_hull_check(s, {vertex}).convex;

    auto rr = ridges(lk);
    Coorientation co = propagate_coorientation(lk, rr);
    if (!co.consistent()) return false;
    for (int i = 0; i < static_cast<int>(rr.size()); ++i)
        if (ridge_convexity(lk, rr, co, i).kind == RidgeKind::Reflex) return false;
    for (int w = 0; w < static_cast<int>(lk.vertices.size()); ++w)
        if (!recursive_link_check(lk, w)) return false;
    return covering_multiplicity(lk) == 1;
}

int exposed_vertex(const PLSurface& s) {
    if (s.mode != Mode::Euclidean)
        throw error(errc::unsupported, "exposed vertex search applies to Euclidean surfaces");
    std::vector<int> order(s.vertices.size());
    for (size_t i = 0; i < order.size(); ++i) order[i] = static_cast<int>(i);
    std::sort(order.begin(), order.end(), [&](int a, int b) {
        for (size_t i = 0; i < s.vertices[a].size(); ++i) {
            int c = cmp(s.vertices[a][i], s.vertices[b][i]);
            if (c != 0) return c < 0;
        }
        return a < b;
    });
    for (int v : order) {
        Mat others;
        for (size_t w = 0; w < s.vertices.size(); ++w)
            if (s.vertices[w] != s.vertices[v]) others.push_back(s.vertices[w]);
        if (others.empty() || !in_convex_hull(others, s.vertices[v])) return v;
    }
    throw error(errc::internal_inconsistency, "no vertex of the surface is a hull vertex");
}

std::optional<int> strict_spherical_vertex(const PLSurface& s) {
    if (s.mode != Mode::Spherical)
        throw error(errc::unsupported, "strict vertex search applies to spherical surfaces");
    std::vector<SphPoint> rays;
    for (auto& v : s.vertices) rays.push_back(canonical_sph(v));
    for (size_t v = 0; v < s.vertices.size(); ++v) {
        Mat get;
        for (size_t w = 0; w < s.vertices.size(); ++w)
            if (!(rays[w] == rays[v])) get.push_back(scaled(Rat(-1), s.vertices[w]));
        if (get.empty()) return static_cast<int>(v);
        Mat eq0{s.vertices[v]};
        if (sign(best_separation({}, get, eq0, s.coord_dim()).t) > 0) return static_cast<int>(v);
    }
    return std::nullopt;
}

LocalReport local_report(const PLSurface& s, bool interior_only) {
    auto rr = ridges(s);
    Coorientation co = propagate_coorientation(s, rr);
    std::set<int> conflicts(co.conflict_ridges.begin(), co.conflict_ridges.end());

    LocalReport rep;
    std::map<int, RidgeKind> kinds;
    for (int i = 0; i < static_cast<int>(rr.size()); ++i) {
        if (rr[i].facets.size() != 2) {
            if (!interior_only)
                throw error(errc::boundary_ridge, "ridge " + std::to_string(i) + " has a single facet");
            continue;
        }
        RidgeVerdict v = ridge_convexity(s, rr, co, i);
        if (conflicts.count(i)) v.orientation_consistent = false;
        kinds[i] = v.kind;
        rep.ridge_verdicts.push_back(v);
    }
    for (int i = 0; i < static_cast<int>(rr.size()) && !rep.first_violation; ++i) {
        if (conflicts.count(i) && kinds.count(i) && kinds[i] != RidgeKind::Reflex)
            rep.first_violation = FaceCertificate{"orientation", rr[i].vertices};
        else if (kinds.count(i) && kinds[i] == RidgeKind::Reflex)
            rep.first_violation = FaceCertificate{"reflex-ridge", rr[i].vertices};
    }
    if (rep.first_violation) return rep;

    std::set<int> boundary_vertices;
    if (interior_only)
        for (auto& r : rr)
            if (r.facets.size() == 1) boundary_vertices.insert(r.vertices.begin(), r.vertices.end());

    std::vector<char> referenced(s.vertices.size(), 0);
    for (auto& f : s.facets)
        for (int v : f) referenced[v] = 1;

    /* One level of link recursion is cheap and re-verifies every vertex with an
     * independent route; deeper recursion grows combinatorially, so higher
     * dimensions rely on the witness route alone. */
    const bool both = s.ambient_dim == 4;
    for (int v = 0; v < static_cast<int>(s.vertices.size()); ++v) {
        if (!referenced[v] || boundary_vertices.count(v)) continue;
        LocalCheck sh = star_hull_check(s, {v});
        VertexVerdict vv;
        vv.vertex = v;
        vv.convex = sh.convex;
        vv.method = VertexMethod::WitnessHull;
        if (both) {
            bool rec = recursive_link_check(s, v);
            if (rec != sh.convex)
                throw error(errc::internal_inconsistency,
                            "the two local checks disagree at vertex " + std::to_string(v));
            vv.method = VertexMethod::Both;
        }
        rep.vertex_verdicts.push_back(vv);
        if (!vv.convex && !rep.first_violation) rep.first_violation = FaceCertificate{"vertex", {v}};
    }
    return rep;
}

}  // namespace plconvex
