#include "plconvex/gen.hpp"

#include <algorithm>
#include <map>
#include <optional>
#include <random>

#include "plconvex/errors.hpp"
#include "plconvex/hull.hpp"
#include "plconvex/linalg.hpp"
#include "plconvex/local.hpp"
#include "plconvex/lp.hpp"

namespace plconvex {

namespace {

struct Rng {
    std::mt19937_64 eng;
    explicit Rng(std::uint64_t seed) : eng(seed) {}
    /* Modulo reduction; the slight bias is irrelevant for instance draws. */
    long range(long lo, long hi) {
        return lo + static_cast<long>(eng() % static_cast<unsigned long long>(hi - lo + 1));
    }
};

struct VecLess {
    bool operator()(const Vec& a, const Vec& b) const {
        for (size_t i = 0; i < a.size() && i < b.size(); ++i) {
            int c = cmp(a[i], b[i]);
            if (c != 0) return c < 0;
        }
        return a.size() < b.size();
    }
};

/* Hull boundary of one point draw; empty when the draw is degenerate or, with
 * simplicial_only, when any facet is not a simplex. */
std::optional<PLSurface> hull_draw(int n, int m, Rng& rng, bool simplicial_only) {
    Mat pts;
    for (int i = 0; i < m; ++i) {
        Vec p(n);
        for (int k = 0; k < n; ++k) p[k] = Rat(rng.range(-40, 40));
        pts.push_back(std::move(p));
    }
    std::vector<HullFacet> hf;
    try {
        hf = hull_facets(pts);
    } catch (const error&) {
        return std::nullopt;
    }

    std::map<Vec, int, VecLess> kept;
    PLSurface s;
    s.ambient_dim = n;
    for (int idx : hull_vertices(pts)) {
        kept.emplace(pts[idx], static_cast<int>(s.vertices.size()));
        s.vertices.push_back(pts[idx]);
    }
    for (const auto& facet : hf) {
        std::vector<int> ids;
        for (int p : facet.pts) {
            auto it = kept.find(pts[p]);
            if (it != kept.end()) ids.push_back(it->second);
        }
        std::sort(ids.begin(), ids.end());
        ids.erase(std::unique(ids.begin(), ids.end()), ids.end());
        if (simplicial_only && static_cast<int>(ids.size()) != n) return std::nullopt;
        s.facets.push_back(std::move(ids));
    }
    std::sort(s.facets.begin(), s.facets.end());
    ValidationReport rep = validate(s);
    if (!rep.ok(s) || !rep.connected) return std::nullopt;
    return s;
}

Vec average(const Mat& rows) {
    Vec c(rows.at(0).size(), Rat(0));
    for (const auto& r : rows) c = add(c, r);
    return scaled(Rat(1, static_cast<unsigned long>(rows.size())), c);
}

/* Row operation mix with determinant 1; keeps integer rays integral. */
Mat unimodular_mix(int dim, Rng& rng) {
    Mat t(dim, Vec(dim, Rat(0)));
    for (int i = 0; i < dim; ++i) t[i][i] = 1;
    for (int step = 0; step < 3; ++step) {
        int i = static_cast<int>(rng.range(0, dim - 1));
        int j = static_cast<int>(rng.range(0, dim - 2));
        if (j >= i) ++j;
        long c = rng.range(-2, 2);
        if (c == 0) c = 1;
        for (int k = 0; k < dim; ++k) t[i][k] += Rat(c) * t[j][k];
    }
    return t;
}

Vec apply_map(const Mat& t, const Vec& v) {
    Vec out(t.size(), Rat(0));
    for (size_t i = 0; i < t.size(); ++i) out[i] = dot(t[i], v);
    return out;
}

Vec ray4(int a, int b, int c, int d) { return Vec{Rat(a), Rat(b), Rat(c), Rat(d)}; }

void finish_spherical(PLSurface& s, Rng& rng) {
    Mat t = unimodular_mix(s.coord_dim(), rng);
    for (auto& v : s.vertices) v = to_rat(canonical_sph(apply_map(t, v)).ray);
    for (auto& f : s.facets) std::sort(f.begin(), f.end());
    std::sort(s.facets.begin(), s.facets.end());
}

/* Counterclockwise order around the centroid, exact: upper half before lower,
 * cross-product sign within a half. */
std::vector<int> angular_order(const Mat& pts, const std::vector<int>& ids) {
    Mat sel;
    for (int i : ids) sel.push_back(pts[i]);
    Vec c = average(sel);
    auto half = [&](int i) {
        int sy = cmp(pts[i][1], c[1]);
        if (sy != 0) return sy < 0;
        return cmp(pts[i][0], c[0]) < 0;
    };
    std::vector<int> order = ids;
    std::sort(order.begin(), order.end(), [&](int a, int b) {
        bool ha = half(a), hb = half(b);
        if (ha != hb) return !ha;
        Rat cross = (pts[a][0] - c[0]) * (pts[b][1] - c[1]) - (pts[a][1] - c[1]) * (pts[b][0] - c[0]);
        int sg = sign(cross);
        if (sg != 0) return sg > 0;
        return a < b;
    });
    return order;
}

}  // namespace

PLSurface gen_hull(int n, int m, std::uint64_t seed) {
    if (n < 2 || m < n + 1) throw error(errc::bad_params, "hull generator needs n >= 2 and m >= n + 1");
    Rng rng(seed);
    for (int attempt = 0; attempt < 100; ++attempt)
        if (auto s = hull_draw(n, m, rng, false)) return *s;
    throw error(errc::bad_params, "point draws kept collapsing to lower dimension");
}

PerturbedHull gen_perturbed_hull(int n, int m, std::uint64_t seed) {
    if (n < 3 || m < n + 2) throw error(errc::bad_params, "perturbed hull needs n >= 3 and m >= n + 2");
    Rng rng(seed);
    for (int attempt = 0; attempt < 100; ++attempt) {
        auto drawn = hull_draw(n, m, rng, true);
        if (!drawn) continue;
        PLSurface& s = *drawn;
        const int nv = static_cast<int>(s.vertices.size());
        if (nv < n + 2) continue;
        int first = static_cast<int>(rng.range(0, nv - 1));
        for (int off = 0; off < nv; ++off) {
            const int v = (first + off) % nv;
            Mat others;
            for (int i = 0; i < nv; ++i)
                if (i != v) others.push_back(s.vertices[i]);
            {
                Mat lifted;
                for (const auto& p : others) {
                    Vec row = p;
                    row.push_back(Rat(1));
                    lifted.push_back(row);
                }
                if (rank_of(lifted) != n + 1) continue;
            }
            Vec c = average(others);
            Vec dir = sub(c, s.vertices[v]);
            Rat t(1, 2);
            std::optional<Vec> dent;
            for (int i = 0; i < 8 && !dent; ++i) {
                Vec cand = add(s.vertices[v], scaled(t, dir));
                if (in_convex_hull(others, cand)) dent = scaled(Rat(1, 2), add(cand, c));
                t = (t + 1) / 2;
            }
            if (!dent) continue;
            PLSurface bent = s;
            bent.vertices[v] = *dent;
            ValidationReport rep = validate(bent);
            if (!rep.ok(bent)) continue;
            if (propagate_coorientation(bent).consistent()) continue;
            return {bent, v};
        }
    }
    throw error(errc::bad_params, "could not build a dented hull from the draws");
}

PLSurface gen_sph_cone(int lineality, std::uint64_t seed) {
    if (lineality < 0 || lineality > 3)
        throw error(errc::bad_params, "lineality dimension must be within 0..3");
    Rng rng(seed);
    PLSurface s;
    s.ambient_dim = 3;
    s.mode = Mode::Spherical;

    if (lineality == 3) {
        for (int axis = 1; axis <= 3; ++axis)
            for (int sg : {1, -1}) {
                Vec r(4, Rat(0));
                r[axis] = sg;
                s.vertices.push_back(r);
            }
        for (int a : {0, 1})
            for (int b : {2, 3})
                for (int c : {4, 5}) s.facets.push_back({a, b, c});
    } else if (lineality == 2) {
        Vec r1(2), r2(2);
        do {
            for (auto* r : {&r1, &r2})
                for (int k = 0; k < 2; ++k) (*r)[k] = Rat(rng.range(-9, 9));
        } while (sign(r1[0] * r2[1] - r1[1] * r2[0]) == 0);
        s.vertices = {Vec{r1[0], r1[1], Rat(0), Rat(0)}, Vec{r2[0], r2[1], Rat(0), Rat(0)},
                      ray4(0, 0, 1, 0), ray4(0, 0, -1, 0), ray4(0, 0, 0, 1), ray4(0, 0, 0, -1)};
        for (int i : {0, 1})
            for (auto cell : {std::vector<int>{i, 2, 4}, {i, 4, 3}, {i, 3, 5}, {i, 5, 2}})
                s.facets.push_back(cell);
    } else if (lineality == 1) {
        for (int attempt = 0;; ++attempt) {
            if (attempt >= 100) throw error(errc::bad_params, "polygon draws kept collapsing");
            const int m = static_cast<int>(rng.range(5, 8));
            Mat pts;
            for (int i = 0; i < m; ++i) pts.push_back({Rat(rng.range(-15, 15)), Rat(rng.range(-15, 15))});
            std::vector<int> ext;
            try {
                ext = hull_vertices(pts);
            } catch (const error&) {
                continue;
            }
            if (ext.size() < 3) continue;
            std::vector<int> ring = angular_order(pts, ext);
            const int k = static_cast<int>(ring.size());
            s.vertices.clear();
            s.facets.clear();
            for (int i : ring) s.vertices.push_back({pts[i][0], pts[i][1], Rat(1), Rat(0)});
            s.vertices.push_back(ray4(0, 0, 0, 1));
            s.vertices.push_back(ray4(0, 0, 0, -1));
            for (int i = 0; i < k; ++i) {
                s.facets.push_back({i, (i + 1) % k, k});
                s.facets.push_back({i, (i + 1) % k, k + 1});
            }
            break;
        }
    } else {
        for (int attempt = 0;; ++attempt) {
            if (attempt >= 100) throw error(errc::bad_params, "polytope draws kept collapsing");
            const int m = static_cast<int>(rng.range(6, 9));
            Mat pts;
            for (int i = 0; i < m; ++i)
                pts.push_back({Rat(rng.range(-12, 12)), Rat(rng.range(-12, 12)), Rat(rng.range(-12, 12))});
            std::vector<HullFacet> hf;
            try {
                hf = hull_facets(pts);
            } catch (const error&) {
                continue;
            }
            std::map<Vec, int, VecLess> kept;
            s.vertices.clear();
            s.facets.clear();
            for (int idx : hull_vertices(pts)) {
                kept.emplace(pts[idx], static_cast<int>(s.vertices.size()));
                s.vertices.push_back({pts[idx][0], pts[idx][1], pts[idx][2], Rat(1)});
            }
            for (const auto& facet : hf) {
                std::vector<int> ids;
                for (int p : facet.pts) {
                    auto it = kept.find(pts[p]);
                    if (it != kept.end()) ids.push_back(it->second);
                }
                std::sort(ids.begin(), ids.end());
                ids.erase(std::unique(ids.begin(), ids.end()), ids.end());
                s.facets.push_back(std::move(ids));
            }
            break;
        }
    }
    finish_spherical(s, rng);
    return s;
}

PLSurface gen_great_sphere(std::uint64_t seed) { return gen_sph_cone(3, seed); }

PLSurface gen_double_cover(const PLSurface& s) {
    PLSurface d = s;
    const int nv = static_cast<int>(s.vertices.size());
    for (const auto& v : s.vertices) d.vertices.push_back(v);
    for (const auto& f : s.facets) {
        std::vector<int> g = f;
        for (int& x : g) x += nv;
        d.facets.push_back(std::move(g));
    }
    return d;
}

PLSurface gen_cylinder_truncated(std::uint64_t) {
    /* Unit-circle rationals from tangent half-angles {0, 3, -8/11, 8/11, -3},
     * listed in pentagram visit order; every turn is a left turn, so the prism
     * is locally convex along each vertical ridge while winding twice. */
    const Mat ring = {
        {Rat(1), Rat(0)},
        {Rat(-4, 5), Rat(3, 5)},
        {Rat(57, 185), Rat(-176, 185)},
        {Rat(57, 185), Rat(176, 185)},
        {Rat(-4, 5), Rat(-3, 5)},
    };
    PLSurface s;
    s.ambient_dim = 3;
    s.allow_boundary = true;
    for (int level : {0, 1})
        for (const auto& p : ring) s.vertices.push_back({p[0], p[1], Rat(level)});
    for (int i = 0; i < 5; ++i) {
        int j = (i + 1) % 5;
        std::vector<int> f{i, j, 5 + i, 5 + j};
        std::sort(f.begin(), f.end());
        s.facets.push_back(f);
    }
    return s;
}

}  // namespace plconvex
