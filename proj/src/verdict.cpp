#include "plconvex/verdict.hpp"

#include <algorithm>
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

struct HyperplaneLess {
    bool operator()(const Hyperplane& a, const Hyperplane& b) const { return lex_less(a, b); }
};

bool next_combination(std::vector<int>& idx, int n) {
    const int k = static_cast<int>(idx.size());
    for (int i = k - 1; i >= 0; --i) {
        if (idx[i] < n - k + i) {
            ++idx[i];
            for (int j = i + 1; j < k; ++j) idx[j] = idx[j - 1] + 1;
            return true;
        }
    }
    return false;
}

bool contains_point(const PLSurface& s, const Mat& rows, const Vec& p) {
    return s.mode == Mode::Euclidean ? in_convex_hull(rows, p) : in_cone(rows, p);
}

Mat rows_of(const PLSurface& s, const std::vector<int>& verts) {
    Mat rows;
    rows.reserve(verts.size());
    for (int v : verts) rows.push_back(s.vertices[v]);
    return rows;
}

/* Strict relative-interior point of witness facet j: maximize eps subject to
 * a_j.x = b_j and a_i.x + eps <= b_i for i != j, eps <= 1. Spherical witnesses
 * are scale-free, so coordinates are boxed to |x_k| <= 1 there. */
struct FacetInterior {
    bool found = false;
    Vec x;
    Rat eps;
};

FacetInterior facet_interior(const std::vector<Halfspace>& hs, int j, int dim, bool boxed) {
    const int m = static_cast<int>(hs.size());
    const int nslack = (m - 1) + 1 + (boxed ? 2 * dim : 0);
    const int ncols = 2 * dim + 1 + nslack;
    const int eps_col = 2 * dim;
    Mat a;
    Vec b;
    int slack = eps_col + 1;
    auto add_row = [&](const Vec& coef, const Rat& rhs, bool with_slack) {
        Vec row(ncols, Rat(0));
        for (int k = 0; k < static_cast<int>(coef.size()); ++k) row[k] = coef[k];
        if (with_slack) row[slack++] = 1;
        a.push_back(row);
        b.push_back(rhs);
    };
    for (int i = 0; i < m; ++i) {
        Vec coef(2 * dim + 1, Rat(0));
        Vec nv = to_rat(hs[i].normal);
        for (int k = 0; k < dim; ++k) {
            coef[k] = nv[k];
            coef[dim + k] = -nv[k];
        }
        if (i == j) {
            add_row(coef, Rat(hs[i].offset), false);
        } else {
            coef[eps_col] = 1;
            add_row(coef, Rat(hs[i].offset), true);
        }
    }
    {
        Vec coef(2 * dim + 1, Rat(0));
        coef[eps_col] = 1;
        add_row(coef, Rat(1), true);
    }
    if (boxed) {
        for (int k = 0; k < 2 * dim; ++k) {
            Vec coef(2 * dim + 1, Rat(0));
            coef[k] = 1;
            add_row(coef, Rat(1), true);
        }
    }
    Vec c(ncols, Rat(0));
    c[eps_col] = 1;
    LpResult r = lp_solve(a, b, c);
    FacetInterior fi;
    if (r.status != LpStatus::Optimal || sign(r.value) <= 0) return fi;
    fi.found = true;
    fi.eps = r.value;
    fi.x.resize(dim);
    for (int k = 0; k < dim; ++k) fi.x[k] = r.x[k] - r.x[dim + k];
    return fi;
}

/* One generic probe strictly inside witness facet j decides coverage: local
 * convexity plus closedness make the cell multiplicity constant across the
 * facet's relative interior, so a single count settles the tiling. */
std::optional<std::string> facet_coverage(const PLSurface& s, const std::vector<Halfspace>& hs,
                                          int j, const std::vector<int>& cells, int& count_out) {
    const int dim = s.coord_dim();
    FacetInterior fi = facet_interior(hs, j, dim, s.mode == Mode::Spherical);
    if (!fi.found) return "witness hyperplane supports in dimension below a facet";

    Mat tdirs = kernel_basis(Mat{to_rat(hs[j].normal)}, dim);
    Rat reach(0);
    for (const auto& h : hs) {
        Rat mi(0);
        Vec nv = to_rat(h.normal);
        for (const auto& t : tdirs) mi += abs(dot(nv, t));
        if (mi > reach) reach = mi;
    }
    /* Direction coefficients stay in [1, 9]; this step keeps every strict margin. */
    Rat step = fi.eps / (Rat(18) * (reach + 1));

    std::vector<std::vector<Mat>> wall_rows(cells.size());
    std::vector<Mat> cell_rows(cells.size());
    for (size_t i = 0; i < cells.size(); ++i) {
        cell_rows[i] = facet_point_rows(s, cells[i]);
        for (const auto& w : facet_walls(s, cells[i])) wall_rows[i].push_back(rows_of(s, w));
    }

    for (int attempt = 0; attempt < 64; ++attempt) {
        Vec p = fi.x;
        if (attempt > 0) {
            Vec d(dim, Rat(0));
            for (size_t k = 0; k < tdirs.size(); ++k)
                d = add(d, scaled(Rat((attempt * (static_cast<int>(k) + 2)) % 9 + 1), tdirs[k]));
            p = add(fi.x, scaled(step, d));
        }
        bool generic = true;
        int count = 0;
        for (size_t i = 0; i < cells.size() && generic; ++i) {
            for (const auto& w : wall_rows[i])
                if (contains_point(s, w, p)) {
                    generic = false;
                    break;
                }
            if (generic && contains_point(s, cell_rows[i], p)) ++count;
        }
        if (!generic) continue;
        count_out = count;
        return std::nullopt;
    }
    throw error(errc::non_generic_probe, "facet coverage probe exhausted its attempts");
}

/* Spans are equal iff dimensions match and the union does not gain rank. */
bool same_span(const Mat& a, const SubspaceBasis& b) {
    if (static_cast<int>(a.size()) != b.dim()) return false;
    Mat both = a;
    for (const auto& r : b.rows) both.push_back(r);
    return rank_of(both) == static_cast<int>(a.size());
}

WitnessCheck fail(std::string clause, int face, std::string detail) {
    WitnessCheck w;
    w.clause = std::move(clause);
    w.face = face;
    w.detail = std::move(detail);
    return w;
}

}  // namespace

WitnessCheck verify_witness(const PLSurface& s, const ConeWitness& w) {
    const int dim = s.coord_dim();
    const bool sph = s.mode == Mode::Spherical;

    if (w.halfspaces.empty()) return fail("w", -1, "witness has no halfspaces");
    Mat normals;
    for (size_t j = 0; j < w.halfspaces.size(); ++j) {
        const Halfspace& h = w.halfspaces[j];
        if (static_cast<int>(h.normal.size()) != dim)
            return fail("w", static_cast<int>(j), "halfspace normal has the wrong dimension");
        if (sph && sign(h.offset) != 0)
            return fail("w", static_cast<int>(j), "spherical witness halfspace has a nonzero offset");
        normals.push_back(to_rat(h.normal));
    }
    Mat ker = kernel_basis(normals, dim);
    if (!same_span(ker, w.lineality)) return fail("w", -1, "lineality is not the kernel of the normals");
    if (w.pointed_part_dim != dim - w.lineality.dim())
        return fail("w", -1, "pointed_part_dim does not match the lineality");
    if (!strict_interior_point(w.halfspaces, dim).found)
        return fail("w", -1, "witness body has empty interior");

    std::map<Hyperplane, int, HyperplaneLess> plane_to_witness;
    for (size_t j = 0; j < w.halfspaces.size(); ++j) {
        auto [it, fresh] = plane_to_witness.insert({w.halfspaces[j].boundary(), static_cast<int>(j)});
        if (!fresh) return fail("w", static_cast<int>(j), "two witness halfspaces share a boundary");
    }

    std::vector<std::vector<int>> cells_at(w.halfspaces.size());
    for (size_t f = 0; f < s.facets.size(); ++f) {
        auto it = plane_to_witness.find(facet_plane(s, static_cast<int>(f)));
        if (it == plane_to_witness.end())
            return fail("a", static_cast<int>(f), "facet plane is not a witness hyperplane");
        cells_at[it->second].push_back(static_cast<int>(f));
    }
    for (size_t j = 0; j < cells_at.size(); ++j)
        if (cells_at[j].empty()) return fail("b", static_cast<int>(j), "witness halfspace touches no facet");

    for (size_t v = 0; v < s.vertices.size(); ++v)
        for (const auto& h : w.halfspaces)
            if (side(h, s.vertices[v]) > 0)
                return fail("c", static_cast<int>(v), "vertex lies outside a witness halfspace");

    if (!sph) {
        /* Each witness facet must meet the surface in full facet dimension; the
         * coverage probe below then forces the on-plane cells to tile it, which
         * pins its vertex set to surface vertices. */
        for (size_t j = 0; j < w.halfspaces.size(); ++j) {
            Mat lifted;
            for (const auto& p : s.vertices)
                if (side(w.halfspaces[j], p) == 0) {
                    Vec row = p;
                    row.push_back(Rat(1));
                    lifted.push_back(row);
                }
            if (rank_of(lifted) != dim)
                return fail("d", static_cast<int>(j), "witness facet is degenerate on the surface");
        }
    } else {
        /* Extreme rays of each witness facet, taken modulo the lineality, must
         * appear among the surface's vertex rays. */
        const int dl = w.lineality.dim();
        const int q = dim - dl;
        SubspaceBasis wsp = orthogonal_complement(w.lineality);
        SubspaceBasis combined{dim, w.lineality.rows};
        for (const auto& r : wsp.rows) combined.rows.push_back(r);
        Mat qnorm;
        for (const auto& h : w.halfspaces) {
            Vec row(q);
            Vec nv = to_rat(h.normal);
            for (int k = 0; k < q; ++k) row[k] = dot(nv, wsp.rows[k]);
            qnorm.push_back(row);
        }
        std::vector<std::optional<SphPoint>> vertex_part(s.vertices.size());
        for (size_t v = 0; v < s.vertices.size(); ++v) {
            Vec c = coordinates_in(combined, s.vertices[v]);
            Vec y(c.begin() + dl, c.end());
            if (!is_zero(y)) vertex_part[v] = canonical_sph(y);
        }
        for (size_t j = 0; j < w.halfspaces.size() && q >= 2; ++j) {
            Mat bj = kernel_basis(Mat{qnorm[j]}, q);
            Mat rows;
            for (size_t i = 0; i < w.halfspaces.size(); ++i) {
                if (i == j) continue;
                Vec row(bj.size());
                for (size_t t = 0; t < bj.size(); ++t) row[t] = dot(qnorm[i], bj[t]);
                rows.push_back(row);
            }
            for (const auto& t : cone_extreme_rays(rows)) {
                Vec y(q, Rat(0));
                for (size_t k = 0; k < bj.size(); ++k) y = add(y, scaled(t[k], bj[k]));
                SphPoint want = canonical_sph(y);
                bool found = false;
                for (const auto& vp : vertex_part)
                    if (vp && *vp == want) {
                        found = true;
                        break;
                    }
                if (!found)
                    return fail("d", static_cast<int>(j), "facet extreme ray missing from surface vertices");
            }
        }
    }

    int mult = -1;
    for (size_t j = 0; j < w.halfspaces.size(); ++j) {
        int count = 0;
        if (auto bad = facet_coverage(s, w.halfspaces, static_cast<int>(j), cells_at[j], count))
            return fail("d", static_cast<int>(j), *bad);
        if (count == 0) return fail("d", static_cast<int>(j), "witness facet not covered by surface cells");
        if (!sph && count != 1) return fail("d", static_cast<int>(j), "witness facet covered more than once");
        if (mult < 0)
            mult = count;
        else if (count != mult)
            return fail("d", static_cast<int>(j), "coverage multiplicity differs between witness facets");
    }

    WitnessCheck ok;
    ok.ok = true;
    ok.multiplicity = mult;
    return ok;
}

SubspaceBasis directrix_of_cone(const ConeWitness& w) {
    if (w.halfspaces.empty()) throw error(errc::bad_params, "witness has no halfspaces");
    const int dim = static_cast<int>(w.halfspaces[0].normal.size());
    Mat normals;
    for (const auto& h : w.halfspaces) normals.push_back(to_rat(h.normal));
    return SubspaceBasis{dim, kernel_basis(normals, dim)};
}

PLSurface generatrix_section(const PLSurface& s, const ConeWitness& w) {
    if (s.mode != Mode::Spherical) throw error(errc::bad_params, "cross-section requires a spherical surface");
    const int dim = s.coord_dim();
    const int dl = w.lineality.dim();
    if (dl == dim - 1)
        throw error(errc::degenerate_section, "lineality is a hyperplane; no cross-section exists");
    if (dl == 0) return s;

    SubspaceBasis wsp = orthogonal_complement(w.lineality);
    const int q = wsp.dim();

    std::vector<SphPoint> registry;
    Mat reg_coords;
    auto ray_id = [&](const Vec& y) {
        SphPoint c = canonical_sph(y);
        for (size_t i = 0; i < registry.size(); ++i)
            if (registry[i] == c) return static_cast<int>(i);
        registry.push_back(c);
        reg_coords.push_back(to_rat(c.ray));
        return static_cast<int>(registry.size()) - 1;
    };

    std::vector<std::vector<int>> cells;
    for (size_t f = 0; f < s.facets.size(); ++f) {
        Mat rays = facet_point_rows(s, static_cast<int>(f));
        const int k = static_cast<int>(rays.size());
        Mat m(dl, Vec(k));
        for (int t = 0; t < dl; ++t)
            for (int i = 0; i < k; ++i) m[t][i] = dot(w.lineality.rows[t], rays[i]);

        /* Extreme rays of the cell cone meet the complement in nonnegative ray
         * combinations with minimal support; supports larger than dl + 1 are
         * never minimal. Every candidate lands in the complement subspace. */
        std::vector<SphPoint> seen;
        Mat found;
        for (int sz = 1; sz <= std::min(k, dl + 1); ++sz) {
            std::vector<int> idx(sz);
            for (int i = 0; i < sz; ++i) idx[i] = i;
            do {
                Mat cols(dl, Vec(sz));
                for (int t = 0; t < dl; ++t)
                    for (int a = 0; a < sz; ++a) cols[t][a] = m[t][idx[a]];
                Mat kerc = kernel_basis(cols, sz);
                if (kerc.size() != 1) continue;
                int pos = 0, neg = 0;
                for (const auto& e : kerc[0]) {
                    int sg = sign(e);
                    if (sg > 0) ++pos;
                    else if (sg < 0) ++neg;
                }
                if (pos != sz && neg != sz) continue;
                Vec z(dim, Rat(0));
                for (int a = 0; a < sz; ++a)
                    z = add(z, scaled(neg == sz ? -kerc[0][a] : kerc[0][a], rays[idx[a]]));
                if (is_zero(z)) continue;
                Vec y = coordinates_in(wsp, z);
                SphPoint c = canonical_sph(y);
                if (std::find(seen.begin(), seen.end(), c) == seen.end()) {
                    seen.push_back(c);
                    found.push_back(to_rat(c.ray));
                }
            } while (next_combination(idx, k));
        }

        std::vector<int> cell;
        for (size_t i = 0; i < found.size(); ++i) {
            Mat others;
            for (size_t o = 0; o < found.size(); ++o)
                if (o != i) others.push_back(found[o]);
            if (!in_cone(others, found[i])) cell.push_back(ray_id(found[i]));
        }
        std::sort(cell.begin(), cell.end());
        if (static_cast<int>(cell.size()) < q - 1) continue;
        Mat crows;
        for (int id : cell) crows.push_back(reg_coords[id]);
        if (rank_of(crows) != q - 1) continue;
        cells.push_back(cell);
    }

    /* Identical section cells collapse: many surface cells can graze the
     * complement in the same face. */
    std::set<std::vector<int>> dedup;
    std::vector<std::vector<int>> uniq;
    for (auto& c : cells)
        if (dedup.insert(c).second) uniq.push_back(c);

    std::vector<int> remap(registry.size(), -1);
    PLSurface g;
    g.ambient_dim = q - 1;
    g.mode = Mode::Spherical;
    g.allow_boundary = false;
    for (auto& c : uniq) {
        for (int& id : c) {
            if (remap[id] < 0) {
                remap[id] = static_cast<int>(g.vertices.size());
                g.vertices.push_back(reg_coords[id]);
            }
            id = remap[id];
        }
        std::sort(c.begin(), c.end());
        g.facets.push_back(c);
    }

    if (q - 1 == 1) {
        if (g.facets.size() != 2 || g.vertices.size() != 2)
            throw error(errc::internal_inconsistency, "codimension-one cross-section must be a ray pair");
    } else {
        ValidationReport rep = validate(g);
        if (!rep.pseudomanifold || !rep.closed || !rep.facet_defects.empty() || !rep.ridge_defects.empty())
            throw error(errc::internal_inconsistency, "cross-section is not a closed surface");
    }
    return g;
}

ArcCertificate a_convexity_probe(const ConeWitness& w, const SphPoint& x, const SphPoint& x2) {
    if (w.halfspaces.empty()) throw error(errc::bad_params, "witness has no halfspaces");
    const int dim = static_cast<int>(w.halfspaces[0].normal.size());
    for (const auto& h : w.halfspaces)
        if (sign(h.offset) != 0) throw error(errc::bad_params, "arc probe requires a cone witness");

    auto strictly_inside = [&](const Vec& p) {
        for (const auto& h : w.halfspaces)
            if (side(h, p) >= 0) return false;
        return true;
    };
    Vec xv = to_rat(x.ray), yv = to_rat(x2.ray);
    if (strictly_inside(xv) || strictly_inside(yv))
        throw error(errc::input_inside_s, "arc endpoint lies inside the open cone");
    if (x == x2) return {x, x2, x};

    const bool antip = x2 == antipodal(x);
    Mat prows{xv};
    if (antip) {
        for (int k = 0; k < dim; ++k) {
            Vec e(dim, Rat(0));
            e[k] = 1;
            Mat pair{xv, e};
            if (rank_of(pair) == 2) {
                prows.push_back(e);
                break;
            }
        }
    } else {
        prows.push_back(yv);
    }
    SubspaceBasis plane = make_basis(prows, dim);
    Vec u1 = coordinates_in(plane, xv);

    /* Strict interior direction of the cone inside the 2-plane, if any. */
    Mat get;
    for (const auto& h : w.halfspaces) {
        Vec nv = to_rat(h.normal);
        get.push_back({-dot(nv, plane.rows[0]), -dot(nv, plane.rows[1])});
    }
    SeparationResult sep = best_separation({}, get, {}, 2);
    const bool blocked = sign(sep.t) > 0;

    auto det2 = [](const Vec& a, const Vec& b) { return sign(a[0] * b[1] - a[1] * b[0]); };
    Vec mid2;
    if (antip) {
        Vec pole{-u1[1], u1[0]};
        if (blocked) {
            int sz = det2(u1, sep.c);
            if (sz == 0) throw error(errc::internal_inconsistency, "interior direction collapsed onto the endpoints");
            /* The blocked half is the one holding the interior direction. */
            mid2 = sz > 0 ? Vec{u1[1], -u1[0]} : pole;
        } else {
            mid2 = pole;
        }
    } else {
        Vec u2 = coordinates_in(plane, yv);
        Vec minor_mid = add(u1, u2);
        if (blocked && in_cone(Mat{u1, u2}, sep.c)) mid2 = scaled(Rat(-1), minor_mid);
        else mid2 = minor_mid;
    }
    Vec mid_amb = add(scaled(mid2[0], plane.rows[0]), scaled(mid2[1], plane.rows[1]));
    return {x, x2, canonical_sph(mid_amb)};
}

namespace {

bool structurally_closed(const ValidationReport& rep) {
    return rep.pseudomanifold && rep.closed && rep.facet_defects.empty() && rep.ridge_defects.empty();
}

/* Witness machinery failures after clean local checks contradict the convexity
 * guarantees; surface them as checker inconsistencies, except probe exhaustion. */
[[noreturn]] void rethrow_as_inconsistency(const error& e, const char* stage) {
    if (e.code() == errc::non_generic_probe || e.code() == errc::internal_inconsistency) throw e;
    throw error(errc::internal_inconsistency, std::string(stage) + " failed after local checks: " + e.what());
}

}  // namespace

Verdict check_euclidean_closed(const PLSurface& s) {
    if (s.mode != Mode::Euclidean) throw error(errc::bad_params, "euclidean check on a spherical surface");
    if (s.allow_boundary) throw error(errc::bad_params, "closed check on a boundary-allowed surface");
    Verdict out;
    out.validation = validate(s);
    if (s.ambient_dim < 3) {
        out.tag = VerdictTag::Unsupported;
        out.note = "ambient dimension below 3";
        return out;
    }
    if (!structurally_closed(out.validation) || !out.validation.connected) {
        out.tag = VerdictTag::StructuralReject;
        if (!out.validation.connected) out.note = "surface is not connected";
        return out;
    }
    out.local = local_report(s);
    if (out.local.first_violation) {
        out.tag = VerdictTag::NotLocallyConvex;
        out.violation = out.local.first_violation;
        return out;
    }

    try {
        ConeWitness w;
        for (const auto& hf : hull_facets(s.vertices)) w.halfspaces.push_back(hf.h);
        std::sort(w.halfspaces.begin(), w.halfspaces.end(), HalfspaceLess{});
        w.halfspaces.erase(std::unique(w.halfspaces.begin(), w.halfspaces.end()), w.halfspaces.end());
        w.lineality = directrix_of_cone(w);
        w.pointed_part_dim = s.ambient_dim - w.lineality.dim();
        WitnessCheck wc = verify_witness(s, w);
        if (!wc.ok)
            throw error(errc::internal_inconsistency,
                        "hull witness rejected after local checks: clause " + wc.clause + ", " + wc.detail);
        out.tag = VerdictTag::ConvexEmbedding;
        out.witness = std::move(w);
    } catch (const error& e) {
        rethrow_as_inconsistency(e, "hull witness construction");
    }
    return out;
}

Verdict check_spherical_closed(const PLSurface& s) {
    if (s.mode != Mode::Spherical) throw error(errc::bad_params, "spherical check on a euclidean surface");
    if (s.allow_boundary) throw error(errc::bad_params, "closed check on a boundary-allowed surface");
    Verdict out;
    out.validation = validate(s);
    if (s.ambient_dim < 3) {
        out.tag = VerdictTag::Unsupported;
        out.note = "sphere dimension below 3";
        return out;
    }
    if (!structurally_closed(out.validation)) {
        out.tag = VerdictTag::StructuralReject;
        return out;
    }
    out.local = local_report(s);
    if (out.local.first_violation) {
        out.tag = VerdictTag::NotLocallyConvex;
        out.violation = out.local.first_violation;
        return out;
    }

    std::vector<RidgeRecord> rr = ridges(s);
    Coorientation co = propagate_coorientation(s, rr);
    std::set<Halfspace, HalfspaceLess> merged;
    bool first = true;
    for (const auto& comp : facet_components(s)) {
        std::set<Halfspace, HalfspaceLess> sides;
        for (int f : comp) sides.insert(co.facet_sides[f]);
        if (first) {
            merged = std::move(sides);
            first = false;
        } else if (sides != merged) {
            out.tag = VerdictTag::Unsupported;
            out.note = "disconnected components trace different cones";
            return out;
        }
    }

    try {
        ConeWitness w;
        w.halfspaces.assign(merged.begin(), merged.end());
        w.lineality = directrix_of_cone(w);
        w.pointed_part_dim = s.coord_dim() - w.lineality.dim();
        WitnessCheck wc = verify_witness(s, w);
        if (!wc.ok)
            throw error(errc::internal_inconsistency,
                        "cone witness rejected after local checks: clause " + wc.clause + ", " + wc.detail);

        const int n = s.ambient_dim;
        const int d = w.lineality.dim() - 1;
        Decomposition dec;
        dec.directrix_dim = d;
        dec.directrix = w.lineality;
        dec.multiplicity = covering_multiplicity(s);
        if (dec.multiplicity != wc.multiplicity)
            throw error(errc::internal_inconsistency, "surface and witness facet multiplicities disagree");
        if (d == n - 1) {
            out.tag = VerdictTag::GreatSubsphere;
        } else {
            dec.generatrix = generatrix_section(s, w);
            if (dec.generatrix->ambient_dim != n - d - 1)
                throw error(errc::internal_inconsistency, "cross-section has the wrong dimension");
            if (d == n - 2 && dec.generatrix->facets.size() == 2) out.tag = VerdictTag::GluedHemispheres;
            else out.tag = VerdictTag::ConvexConeBoundary;
        }

        /* A strict vertex on a connected surface forces an embedding, hence a
         * single-wrapped image; a pointed cone always has a strict vertex. */
        if (out.validation.connected) {
            std::optional<int> sv = strict_spherical_vertex(s);
            if (sv && dec.multiplicity != 1)
                throw error(errc::internal_inconsistency, "strict vertex with covering multiplicity above 1");
            if (d == -1 && !sv)
                throw error(errc::internal_inconsistency, "pointed cone surface without a strict vertex");
        }
        out.witness = std::move(w);
        out.decomposition = std::move(dec);
    } catch (const error& e) {
        rethrow_as_inconsistency(e, "cone witness construction");
    }
    return out;
}

Verdict check_with_boundary(const PLSurface& s) {
    Verdict out;
    out.validation = validate(s);
    if (s.ambient_dim < 3) {
        out.tag = VerdictTag::Unsupported;
        out.note = "ambient dimension below 3";
        return out;
    }
    if (!out.validation.pseudomanifold || !out.validation.facet_defects.empty() ||
        !out.validation.ridge_defects.empty()) {
        out.tag = VerdictTag::StructuralReject;
        return out;
    }
    out.local = local_report(s, true);
    if (out.local.first_violation) {
        out.tag = VerdictTag::NotLocallyConvex;
        out.violation = out.local.first_violation;
        return out;
    }
    out.tag = VerdictTag::BoundaryPresentNoGlobalClaim;
    return out;
}

Verdict check_surface(const PLSurface& s) {
    if (s.allow_boundary) return check_with_boundary(s);
    return s.mode == Mode::Euclidean ? check_euclidean_closed(s) : check_spherical_closed(s);
}

const char* to_string(VerdictTag tag) {
    switch (tag) {
        case VerdictTag::ConvexEmbedding: return "ConvexEmbedding";
        case VerdictTag::ConvexConeBoundary: return "ConvexConeBoundary";
        case VerdictTag::GreatSubsphere: return "GreatSubsphere";
        case VerdictTag::GluedHemispheres: return "GluedHemispheres";
        case VerdictTag::NotLocallyConvex: return "NotLocallyConvex";
        case VerdictTag::StructuralReject: return "StructuralReject";
        case VerdictTag::BoundaryPresentNoGlobalClaim: return "BoundaryPresentNoGlobalClaim";
        case VerdictTag::Unsupported: return "Unsupported";
    }
    return "Unsupported";
}

bool positive(VerdictTag tag) {
    switch (tag) {
        case VerdictTag::ConvexEmbedding:
        case VerdictTag::ConvexConeBoundary:
        case VerdictTag::GreatSubsphere:
        case VerdictTag::GluedHemispheres:
        case VerdictTag::BoundaryPresentNoGlobalClaim:
            return true;
        default:
            return false;
    }
}

}  // namespace plconvex
