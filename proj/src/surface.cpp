#include "plconvex/surface.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>
#include <sstream>

#include "plconvex/errors.hpp"
#include "plconvex/linalg.hpp"
#include "plconvex/lp.hpp"

namespace plconvex {

namespace {

std::string face_str(const std::vector<int>& vs) {
    std::ostringstream os;
    os << '{';
    for (size_t i = 0; i < vs.size(); ++i) os << (i ? "," : "") << vs[i];
    os << '}';
    return os.str();
}

struct UnionFind {
    std::vector<int> parent;
    explicit UnionFind(int n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
    int find(int a) {
        while (parent[a] != a) a = parent[a] = parent[parent[a]];
        return a;
    }
    void unite(int a, int b) { parent[find(a)] = find(b); }
};

bool structurally_sound_facet(const PLSurface& s, int f) {
    const auto& fac = s.facets[f];
    if (static_cast<int>(fac.size()) < s.ambient_dim) return false;
    std::set<int> seen;
    for (int v : fac) {
        if (v < 0 || v >= static_cast<int>(s.vertices.size())) return false;
        if (!seen.insert(v).second) return false;
    }
    return true;
}

/* Walls shared between facets, with incident facet lists. Facets failing the
 * structural test contribute nothing. */
std::map<std::vector<int>, std::vector<int>> wall_incidence(const PLSurface& s) {
    std::map<std::vector<int>, std::vector<int>> inc;
    for (int f = 0; f < static_cast<int>(s.facets.size()); ++f) {
        if (!structurally_sound_facet(s, f)) continue;
        std::vector<std::vector<int>> walls;
        try {
            walls = facet_walls(s, f);
        } catch (const error&) {
            continue;
        }
        for (auto& w : walls) inc[w].push_back(f);
    }
    return inc;
}

/* Signed side of each off-subset facet vertex relative to the span of the
 * subset within the facet plane; zero means the vertex lies in that span. */
std::vector<int> wall_side_signs(const PLSurface& s, int f, const std::vector<int>& subset,
                                 const Hyperplane& plane, const std::vector<int>& others) {
    const auto& fac = s.facets[f];
    const bool sph = s.mode == Mode::Spherical;
    Mat gens;
    if (sph) {
        for (int j : subset) gens.push_back(s.vertices[fac[j]]);
    } else {
        const Vec& base = s.vertices[fac[subset[0]]];
        for (size_t i = 1; i < subset.size(); ++i)
            gens.push_back(sub(s.vertices[fac[subset[i]]], base));
    }
    const int want = static_cast<int>(gens.size());
    if (rank_of(gens) != want) return {};
    Vec nrow = to_rat(plane.normal);
    std::vector<int> signs;
    for (int j : others) {
        Mat m = gens;
        if (sph)
            m.push_back(s.vertices[fac[j]]);
        else
            m.push_back(sub(s.vertices[fac[j]], s.vertices[fac[subset[0]]]));
        m.push_back(nrow);
        signs.push_back(det_sign(m));
    }
    return signs;
}

}  // namespace

bool ValidationReport::ok(const PLSurface& s) const {
    return pseudomanifold && facet_defects.empty() && ridge_defects.empty() &&
           (closed || s.allow_boundary);
}

Mat facet_point_rows(const PLSurface& s, int f) {
    Mat rows;
    for (int v : s.facets[f]) rows.push_back(s.vertices[v]);
    return rows;
}

Vec facet_centroid(const PLSurface& s, int f) {
    const auto& fac = s.facets[f];
    Vec c(s.coord_dim(), Rat(0));
    for (int v : fac) c = add(c, s.vertices[v]);
    if (s.mode == Mode::Euclidean)
        for (auto& x : c) x /= static_cast<int>(fac.size());
    return c;
}

Hyperplane facet_plane(const PLSurface& s, int f) {
    const int d = s.coord_dim();
    Mat rows;
    if (s.mode == Mode::Spherical) {
        rows = facet_point_rows(s, f);
    } else {
        for (int v : s.facets[f]) {
            Vec r = s.vertices[v];
            r.push_back(Rat(1));
            rows.push_back(r);
        }
    }
    const int ker_dim = s.mode == Mode::Spherical ? d : d + 1;
    Mat ker = kernel_basis(rows, ker_dim);
    if (ker.size() != 1) throw error(errc::degenerate, "facet " + std::to_string(f) + " does not span a unique hyperplane");
    Vec joint = ker[0];
    Rat off(0);
    if (s.mode == Mode::Euclidean) {
        off = -joint.back();
        joint.pop_back();
    }
    return make_halfspace(joint, off).boundary();
}

std::vector<std::vector<int>> facet_walls(const PLSurface& s, int f) {
    const auto& fac = s.facets[f];
    const int k = static_cast<int>(fac.size());
    const int pick = s.ambient_dim - 1;
    std::set<std::vector<int>> walls;

    if (k == s.ambient_dim) {
        /* Simplicial cell: every co-vertex subset is a wall. */
        for (int skip = 0; skip < k; ++skip) {
            std::vector<int> w;
            for (int j = 0; j < k; ++j)
                if (j != skip) w.push_back(fac[j]);
            std::sort(w.begin(), w.end());
            walls.insert(w);
        }
        return {walls.begin(), walls.end()};
    }

    const Hyperplane plane = facet_plane(s, f);
    std::vector<int> subset(pick);
    std::vector<bool> in_subset(k, false);
    /* Enumerate pick-subsets of facet positions. */
    std::vector<int> idx(pick);
    std::iota(idx.begin(), idx.end(), 0);
    while (true) {
        std::fill(in_subset.begin(), in_subset.end(), false);
        for (int j : idx) in_subset[j] = true;
        std::vector<int> others;
        for (int j = 0; j < k; ++j)
            if (!in_subset[j]) others.push_back(j);
        std::vector<int> signs = wall_side_signs(s, f, idx, plane, others);
        if (!signs.empty()) {
            int pos = 0, neg = 0;
            for (int sg : signs) {
                if (sg > 0) ++pos;
                else if (sg < 0) ++neg;
            }
            if ((pos > 0) != (neg > 0)) {
                std::vector<int> w;
                for (int j : idx) w.push_back(fac[j]);
                for (size_t i = 0; i < others.size(); ++i)
                    if (signs[i] == 0) w.push_back(fac[others[i]]);
                std::sort(w.begin(), w.end());
                walls.insert(w);
            }
        }
        /* Advance to the next combination. */
        int i = pick - 1;
        while (i >= 0 && idx[i] == k - pick + i) --i;
        if (i < 0) break;
        ++idx[i];
        for (int j = i + 1; j < pick; ++j) idx[j] = idx[j - 1] + 1;
    }
    return {walls.begin(), walls.end()};
}

std::vector<RidgeRecord> ridges(const PLSurface& s) {
    std::vector<RidgeRecord> out;
    for (auto& [w, fs] : wall_incidence(s)) {
        if (fs.size() > 2)
            throw error(errc::not_pseudomanifold,
                        "ridge " + face_str(w) + " has " + std::to_string(fs.size()) + " incident facets");
        out.push_back({w, fs});
    }
    return out;
}

ValidationReport validate(const PLSurface& s) {
    if (s.ambient_dim < 2) throw error(errc::unsupported, "ambient dimension must be at least 2");
    const int d = s.coord_dim();
    for (size_t i = 0; i < s.vertices.size(); ++i) {
        if (static_cast<int>(s.vertices[i].size()) != d)
            throw error(errc::dimension_mismatch, "vertex " + std::to_string(i) + " has wrong coordinate count");
        if (s.mode == Mode::Spherical && is_zero(s.vertices[i]))
            throw error(errc::zero_vector, "vertex " + std::to_string(i) + " is not a ray");
    }

    ValidationReport r;
    if (s.facets.empty()) {
        r.pseudomanifold = false;
        r.notes.push_back("surface has no facets");
        return r;
    }

    for (int f = 0; f < static_cast<int>(s.facets.size()); ++f) {
        if (!structurally_sound_facet(s, f)) {
            r.facet_defects.push_back(f);
            r.notes.push_back("facet " + std::to_string(f) + " is structurally malformed");
            continue;
        }
        try {
            facet_plane(s, f);
        } catch (const error&) {
            r.facet_defects.push_back(f);
            r.notes.push_back("facet " + std::to_string(f) + " does not span a unique hyperplane");
            continue;
        }
        Mat pts = facet_point_rows(s, f);
        if (s.mode == Mode::Spherical) {
            SeparationResult sep = best_separation({}, pts, {}, d);
            if (sign(sep.t) <= 0) {
                r.facet_defects.push_back(f);
                r.notes.push_back("facet " + std::to_string(f) + " rays do not fit in an open halfspace");
                continue;
            }
        }
        const Vec centroid = facet_centroid(s, f);
        bool convex = true;
        for (size_t i = 0; i < pts.size() && convex; ++i) {
            Mat ge0, eq0;
            for (size_t j = 0; j < pts.size(); ++j) {
                if (j == i) continue;
                ge0.push_back(s.mode == Mode::Spherical ? pts[j] : sub(pts[j], pts[i]));
            }
            Mat get{s.mode == Mode::Spherical ? centroid : sub(centroid, pts[i])};
            if (s.mode == Mode::Spherical) eq0.push_back(pts[i]);
            SeparationResult sep = best_separation(ge0, get, eq0, d);
            if (sign(sep.t) <= 0) {
                convex = false;
                r.facet_defects.push_back(f);
                r.notes.push_back("vertex " + std::to_string(s.facets[f][i]) + " of facet " +
                                  std::to_string(f) + " lies in the facet hull interior");
            }
        }
    }

    auto inc = wall_incidence(s);
    int idx = 0;
    UnionFind uf(static_cast<int>(s.facets.size()));
    std::vector<bool> touched(s.facets.size(), false);
    for (auto& [w, fs] : inc) {
        if (fs.size() > 2) {
            r.pseudomanifold = false;
            r.ridge_defects.push_back(idx);
            r.notes.push_back("ridge " + face_str(w) + " has " + std::to_string(fs.size()) + " incident facets");
        } else if (fs.size() == 1) {
            r.closed = false;
        } else {
            uf.unite(fs[0], fs[1]);
        }
        for (int f : fs) touched[f] = true;
        ++idx;
    }
    if (!r.closed && !s.allow_boundary) r.notes.push_back("surface has boundary ridges");

    std::set<int> roots;
    for (int f = 0; f < static_cast<int>(s.facets.size()); ++f)
        if (touched[f]) roots.insert(uf.find(f));
    for (int f = 0; f < static_cast<int>(s.facets.size()); ++f)
        if (!touched[f]) roots.insert(f);
    if (roots.size() > 1) {
        r.connected = false;
        r.notes.push_back("facet adjacency graph has " + std::to_string(roots.size()) + " components");
    }
    return r;
}

std::vector<std::vector<int>> facet_components(const PLSurface& s) {
    UnionFind uf(static_cast<int>(s.facets.size()));
    for (auto& rec : ridges(s))
        if (rec.facets.size() == 2) uf.unite(rec.facets[0], rec.facets[1]);
    std::map<int, std::vector<int>> comps;
    for (int f = 0; f < static_cast<int>(s.facets.size()); ++f) comps[uf.find(f)].push_back(f);
    std::vector<std::vector<int>> out;
    for (auto& [root, fs] : comps) out.push_back(fs);
    std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) { return a[0] < b[0]; });
    return out;
}

PLSurface subsurface(const PLSurface& s, const std::vector<int>& facet_subset) {
    std::set<int> used;
    for (int f : facet_subset)
        for (int v : s.facets[f]) used.insert(v);
    std::map<int, int> remap;
    PLSurface out;
    out.ambient_dim = s.ambient_dim;
    out.mode = s.mode;
    out.allow_boundary = s.allow_boundary;
    for (int v : used) {
        remap[v] = static_cast<int>(out.vertices.size());
        out.vertices.push_back(s.vertices[v]);
    }
    for (int f : facet_subset) {
        std::vector<int> fac;
        for (int v : s.facets[f]) fac.push_back(remap[v]);
        out.facets.push_back(fac);
    }
    return out;
}

LinkComplex face_link(const PLSurface& s, std::vector<int> face) {
    std::sort(face.begin(), face.end());
    face.erase(std::unique(face.begin(), face.end()), face.end());
    if (face.empty()) throw error(errc::face_not_found, "empty face");
    for (int v : face)
        if (v < 0 || v >= static_cast<int>(s.vertices.size()))
            throw error(errc::bad_index, "face vertex " + std::to_string(v) + " out of range");

    std::vector<int> star;
    for (int f = 0; f < static_cast<int>(s.facets.size()); ++f) {
        std::set<int> fv(s.facets[f].begin(), s.facets[f].end());
        if (std::all_of(face.begin(), face.end(), [&](int v) { return fv.count(v) > 0; }))
            star.push_back(f);
    }
    if (star.empty()) throw error(errc::face_not_found, "face " + face_str(face) + " is not in the complex");

    const int d = s.coord_dim();
    Vec p(d, Rat(0));
    Mat span_rows;
    if (s.mode == Mode::Euclidean) {
        for (int v : face) p = add(p, s.vertices[v]);
        for (auto& x : p) x /= static_cast<int>(face.size());
        for (int v : face) span_rows.push_back(sub(s.vertices[v], p));
    } else {
        for (int v : face) span_rows.push_back(s.vertices[v]);
    }
    SubspaceBasis A = make_basis(span_rows, d);
    SubspaceBasis N = orthogonal_complement(A);
    if (N.dim() < 2) throw error(errc::degenerate_star, "face " + face_str(face) + " leaves no link directions");

    SubspaceBasis combined{d, A.rows};
    combined.rows.insert(combined.rows.end(), N.rows.begin(), N.rows.end());

    LinkComplex link;
    link.complex.ambient_dim = N.dim() - 1;
    link.complex.mode = Mode::Spherical;
    link.complex.allow_boundary = s.allow_boundary;
    link.base = p;
    link.face_span = A;
    link.normal_space = N;

    std::vector<SphPoint> ray_ids;
    for (int g : star) {
        std::set<int> cell;
        for (int v : s.facets[g]) {
            if (std::binary_search(face.begin(), face.end(), v)) continue;
            Vec dvec = s.mode == Mode::Euclidean ? sub(s.vertices[v], p) : s.vertices[v];
            Vec coords = coordinates_in(combined, dvec);
            Vec proj(coords.begin() + A.dim(), coords.end());
            if (is_zero(proj))
                throw error(errc::degenerate_star,
                            "star vertex " + std::to_string(v) + " lies in the span of face " + face_str(face));
            SphPoint ray = canonical_sph(proj);
            int id = -1;
            for (size_t i = 0; i < ray_ids.size(); ++i)
                if (ray_ids[i] == ray) { id = static_cast<int>(i); break; }
            if (id < 0) {
                id = static_cast<int>(ray_ids.size());
                ray_ids.push_back(ray);
            }
            cell.insert(id);
        }
        /* A facet vertex opposite the face can project inside the cell cone
         * (the far corner of a quad, seen from one of its corners); cells keep
         * extreme rays only, matching the facet form validate expects. */
        std::vector<int> ids(cell.begin(), cell.end());
        std::vector<int> kept;
        for (size_t i = 0; i < ids.size(); ++i) {
            Mat others;
            for (size_t o = 0; o < ids.size(); ++o)
                if (o != i) others.push_back(to_rat(ray_ids[ids[o]].ray));
            if (!in_cone(others, to_rat(ray_ids[ids[i]].ray))) kept.push_back(ids[i]);
        }
        Mat cell_rays;
        for (int id : kept) cell_rays.push_back(to_rat(ray_ids[id].ray));
        if (rank_of(cell_rays) != N.dim() - 1)
            throw error(errc::degenerate_star, "star facet " + std::to_string(g) + " collapses at face " + face_str(face));
        link.complex.facets.push_back(kept);
        link.cell_to_facet.push_back(g);
    }
    std::vector<int> remap(ray_ids.size(), -1);
    for (auto& cell : link.complex.facets) {
        for (int& id : cell) {
            if (remap[id] < 0) {
                remap[id] = static_cast<int>(link.complex.vertices.size());
                link.complex.vertices.push_back(to_rat(ray_ids[id].ray));
            }
            id = remap[id];
        }
        std::sort(cell.begin(), cell.end());
    }
    return link;
}

int covering_multiplicity(const PLSurface& s, const SphPoint& probe) {
    if (s.mode != Mode::Spherical)
        throw error(errc::unsupported, "covering multiplicity is defined for spherical surfaces");
    if (s.facets.empty()) throw error(errc::degenerate, "surface has no facets");
    const int d = s.coord_dim();
    if (static_cast<int>(probe.ray.size()) != d)
        throw error(errc::dimension_mismatch, "probe has wrong coordinate count");

    std::vector<Mat> cones;
    std::vector<std::vector<Mat>> wall_rays;
    for (int f = 0; f < static_cast<int>(s.facets.size()); ++f) {
        cones.push_back(facet_point_rows(s, f));
        std::vector<Mat> ws;
        for (auto& w : facet_walls(s, f)) {
            Mat rows;
            for (int v : w) rows.push_back(s.vertices[v]);
            ws.push_back(rows);
        }
        wall_rays.push_back(ws);
    }

    /* Attempt 0 is the caller's probe; later attempts perturb the facet-0 centroid. */
    for (int attempt = 0; attempt <= 64; ++attempt) {
        Vec ray;
        if (attempt == 0) {
            ray = to_rat(probe.ray);
        } else {
            ray.assign(d, Rat(0));
            const auto& fac0 = s.facets[0];
            for (size_t i = 0; i < fac0.size(); ++i) {
                Rat w = Rat(1) + Rat((attempt * static_cast<int>(i + 1)) % 17, 19);
                ray = add(ray, scaled(w, s.vertices[fac0[i]]));
            }
        }
        bool generic = true;
        int count = 0;
        for (size_t f = 0; f < cones.size() && generic; ++f) {
            if (!in_cone(cones[f], ray)) continue;
            for (auto& w : wall_rays[f])
                if (in_cone(w, ray)) { generic = false; break; }
            ++count;
        }
        if (generic) return count;
    }
    throw error(errc::non_generic_probe, "no generic probe found after 64 attempts");
}

int covering_multiplicity(const PLSurface& s) {
    if (s.mode != Mode::Spherical)
        throw error(errc::unsupported, "covering multiplicity is defined for spherical surfaces");
    if (s.facets.empty()) throw error(errc::degenerate, "surface has no facets");
    return covering_multiplicity(s, canonical_sph(facet_centroid(s, 0)));
}

}  // namespace plconvex
