#include "plconvex/hull.hpp"

#include <algorithm>
#include <map>
#include <numeric>

#include "plconvex/errors.hpp"
#include "plconvex/linalg.hpp"
#include "plconvex/lp.hpp"

namespace plconvex {

namespace {

bool next_combination(std::vector<int>& idx, int m) {
    const int k = static_cast<int>(idx.size());
    int i = k - 1;
    while (i >= 0 && idx[i] == m - k + i) --i;
    if (i < 0) return false;
    ++idx[i];
    for (int j = i + 1; j < k; ++j) idx[j] = idx[j - 1] + 1;
    return true;
}

struct HalfspaceLess {
    bool operator()(const Halfspace& a, const Halfspace& b) const { return lex_less(a, b); }
};

/* Classify all rows against a candidate halfspace: {supporting?, flipped?, on-list}. */
struct SideScan {
    bool supporting = false;
    bool flip = false;
    std::vector<int> on;
};

SideScan scan_sides(const Mat& rows, const IVec& normal, const Rat& offset) {
    SideScan out;
    int pos = 0, neg = 0;
    for (int i = 0; i < static_cast<int>(rows.size()); ++i) {
        int sg = sign(idot(normal, rows[i]) - offset);
        if (sg > 0) ++pos;
        else if (sg < 0) ++neg;
        else out.on.push_back(i);
        if (pos > 0 && neg > 0) return out;
    }
    if (pos == 0 || neg == 0) {
        out.supporting = true;
        out.flip = pos > 0;
    }
    return out;
}

}  // namespace

std::vector<HullFacet> hull_facets(const Mat& pts) {
    if (pts.empty()) throw error(errc::degenerate, "no points");
    const int n = static_cast<int>(pts[0].size());
    const int m = static_cast<int>(pts.size());
    if (m < n + 1) throw error(errc::degenerate, "too few points for a full-dimensional hull");
    {
        Mat lifted;
        for (auto& p : pts) {
            Vec r = p;
            r.push_back(Rat(1));
            lifted.push_back(r);
        }
        if (rank_of(lifted) != n + 1)
            throw error(errc::degenerate, "points do not span the ambient space");
    }

    std::map<Halfspace, std::vector<int>, HalfspaceLess> found;
    std::vector<int> idx(n);
    std::iota(idx.begin(), idx.end(), 0);
    do {
        std::vector<Vec> subset;
        for (int i : idx) subset.push_back(pts[i]);
        Hyperplane hp;
        try {
            hp = hyperplane_through(subset);
        } catch (const error&) {
            continue;
        }
        Halfspace h{hp.normal, hp.offset};
        SideScan sc = scan_sides(pts, h.normal, Rat(h.offset));
        if (!sc.supporting) continue;
        if (sc.flip) h = h.flipped();
        found.emplace(h, sc.on);
    } while (next_combination(idx, m));

    std::vector<HullFacet> out;
    for (auto& [h, on] : found) out.push_back({h, on});
    return out;
}

std::vector<HullFacet> cone_hull_facets(const Mat& rays) {
    if (rays.empty()) throw error(errc::degenerate, "no rays");
    const int d = static_cast<int>(rays[0].size());
    const int m = static_cast<int>(rays.size());
    if (rank_of(rays) != d) throw error(errc::degenerate, "cone is not full-dimensional");

    std::map<Halfspace, std::vector<int>, HalfspaceLess> found;
    std::vector<int> idx(d - 1);
    std::iota(idx.begin(), idx.end(), 0);
    do {
        Mat subset;
        for (int i : idx) subset.push_back(rays[i]);
        Mat ker = kernel_basis(subset, d);
        if (ker.size() != 1) continue;
        Halfspace h = make_halfspace(ker[0], Rat(0));
        SideScan sc = scan_sides(rays, h.normal, Rat(0));
        if (!sc.supporting) continue;
        if (sc.flip) h = h.flipped();
        found.emplace(h, sc.on);
    } while (next_combination(idx, m));

    std::vector<HullFacet> out;
    for (auto& [h, on] : found) out.push_back({h, on});
    return out;
}

std::vector<int> hull_vertices(const Mat& pts) {
    auto vec_less = [](const Vec& a, const Vec& b) {
        for (size_t i = 0; i < a.size() && i < b.size(); ++i) {
            int c = cmp(a[i], b[i]);
            if (c != 0) return c < 0;
        }
        return a.size() < b.size();
    };
    std::map<Vec, int, decltype(vec_less)> first_of(vec_less);
    for (int i = 0; i < static_cast<int>(pts.size()); ++i) first_of.try_emplace(pts[i], i);

    Mat uniq;
    std::vector<int> uniq_idx;
    for (auto& [p, i] : first_of) {
        uniq.push_back(p);
        uniq_idx.push_back(i);
    }
    std::vector<int> out;
    for (size_t i = 0; i < uniq.size(); ++i) {
        Mat others;
        for (size_t j = 0; j < uniq.size(); ++j)
            if (j != i) others.push_back(uniq[j]);
        if (others.empty() || !in_convex_hull(others, uniq[i])) out.push_back(uniq_idx[i]);
    }
    std::sort(out.begin(), out.end());
    return out;
}

Mat cone_extreme_rays(const Mat& normals) {
    if (normals.empty()) throw error(errc::degenerate, "no facet normals");
    const int d = static_cast<int>(normals[0].size());
    const int m = static_cast<int>(normals.size());
    if (m < d - 1) return {};

    std::vector<SphPoint> rays;
    std::vector<int> idx(d - 1);
    std::iota(idx.begin(), idx.end(), 0);
    do {
        Mat subset;
        for (int i : idx) subset.push_back(normals[i]);
        Mat ker = kernel_basis(subset, d);
        if (ker.size() != 1) continue;
        const Vec& z = ker[0];
        int pos = 0, neg = 0;
        for (auto& nrm : normals) {
            int sg = sign(dot(nrm, z));
            if (sg > 0) ++pos;
            else if (sg < 0) ++neg;
        }
        if (pos > 0 && neg > 0) continue;
        if (pos == 0 && neg == 0) throw error(errc::degenerate, "cone is not pointed");
        SphPoint ray = canonical_sph(pos == 0 ? z : scaled(Rat(-1), z));
        if (std::find(rays.begin(), rays.end(), ray) == rays.end()) rays.push_back(ray);
    } while (next_combination(idx, m));

    std::sort(rays.begin(), rays.end(), [](const SphPoint& a, const SphPoint& b) { return lex_less(a.ray, b.ray); });
    Mat out;
    for (auto& r : rays) out.push_back(to_rat(r.ray));
    return out;
}

}  // namespace plconvex
