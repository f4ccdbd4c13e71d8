#include "plconvex/lp.hpp"

#include <algorithm>

#include "plconvex/errors.hpp"
#include "plconvex/linalg.hpp"

namespace plconvex {

namespace {

/* Full-tableau simplex on  max obj.x, T x = rhs, x >= 0, pivoting with Bland's rule.
 * `basis` holds the basic column of each row; basic columns are unit columns. */
class Tableau {
public:
    Tableau(Mat t, Vec rhs, std::vector<int> basis)
        : t_(std::move(t)), rhs_(std::move(rhs)), basis_(std::move(basis)) {}

    int rows() const { return static_cast<int>(t_.size()); }
    int cols() const { return t_.empty() ? 0 : static_cast<int>(t_[0].size()); }

    /* Runs simplex for the given objective. Returns false when unbounded. */
    bool optimize(const Vec& obj) {
        reduced_ = obj;
        value_ = 0;
        for (int i = 0; i < rows(); ++i) {
            if (sign(obj[basis_[i]]) == 0) continue;
            Rat cb = obj[basis_[i]];
            for (int j = 0; j < cols(); ++j) reduced_[j] -= cb * t_[i][j];
            value_ += cb * rhs_[i];
        }
        while (true) {
            int enter = -1;
            for (int j = 0; j < cols(); ++j)
                if (sign(reduced_[j]) > 0) {
                    enter = j;
                    break;
                }
            if (enter < 0) return true;
            int leave = -1;
            Rat best;
            for (int i = 0; i < rows(); ++i) {
                if (sign(t_[i][enter]) <= 0) continue;
                Rat ratio = rhs_[i] / t_[i][enter];
                if (leave < 0 || ratio < best ||
                    (ratio == best && basis_[i] < basis_[leave])) {
                    leave = i;
                    best = ratio;
                }
            }
            if (leave < 0) return false;
            pivot(leave, enter);
        }
    }

    void pivot(int row, int col) {
        Rat p = t_[row][col];
        for (int j = 0; j < cols(); ++j) t_[row][j] /= p;
        rhs_[row] /= p;
        for (int i = 0; i < rows(); ++i) {
            if (i == row || sign(t_[i][col]) == 0) continue;
            Rat f = t_[i][col];
            for (int j = 0; j < cols(); ++j) t_[i][j] -= f * t_[row][j];
            rhs_[i] -= f * rhs_[row];
        }
        Rat f = reduced_[col];
        if (sign(f) != 0) {
            for (int j = 0; j < cols(); ++j) reduced_[j] -= f * t_[row][j];
            value_ += f * rhs_[row];
        }
        basis_[row] = col;
    }

    const Rat& value() const { return value_; }
    const std::vector<int>& basis() const { return basis_; }
    const Mat& body() const { return t_; }
    const Vec& rhs() const { return rhs_; }

    /* Removes trailing columns [from, cols()) after pivoting their basics out;
     * rows that cannot be repaired are redundant and dropped. */
    void drop_columns_from(int from) {
        for (int i = rows() - 1; i >= 0; --i) {
            if (basis_[i] < from) continue;
            int col = -1;
            for (int j = 0; j < from; ++j)
                if (sign(t_[i][j]) != 0) {
                    col = j;
                    break;
                }
            if (col >= 0) {
                pivot(i, col);
            } else {
                t_.erase(t_.begin() + i);
                rhs_.erase(rhs_.begin() + i);
                basis_.erase(basis_.begin() + i);
            }
        }
        for (Vec& row : t_) row.resize(from);
    }

private:
    Mat t_;
    Vec rhs_;
    std::vector<int> basis_;
    Vec reduced_;
    Rat value_;
};

}  // namespace

LpResult lp_solve(const Mat& a, const Vec& b, const Vec& c) {
    const int m = static_cast<int>(a.size());
    const int n = static_cast<int>(c.size());
    for (const Vec& row : a)
        if (static_cast<int>(row.size()) != n)
            throw error(errc::dimension_mismatch, "lp row length vs objective");
    if (static_cast<int>(b.size()) != m)
        throw error(errc::dimension_mismatch, "lp rhs length vs rows");

    Mat t(m, Vec(n + m, Rat(0)));
    Vec rhs(m);
    std::vector<int> basis(m);
    for (int i = 0; i < m; ++i) {
        int s = sign(b[i]) < 0 ? -1 : 1;
        for (int j = 0; j < n; ++j) t[i][j] = Rat(s) * a[i][j];
        rhs[i] = Rat(s) * b[i];
        t[i][n + i] = 1;
        basis[i] = n + i;
    }
    Tableau tab(std::move(t), std::move(rhs), std::move(basis));

    Vec phase1(n + m, Rat(0));
    for (int i = 0; i < m; ++i) phase1[n + i] = -1;
    tab.optimize(phase1);
    if (sign(tab.value()) < 0) return {LpStatus::Infeasible, Rat(0), {}};
    tab.drop_columns_from(n);

    LpResult res;
    if (!tab.optimize(c)) {
        res.status = LpStatus::Unbounded;
        return res;
    }
    res.status = LpStatus::Optimal;
    res.value = tab.value();
    res.x.assign(n, Rat(0));
    for (int i = 0; i < tab.rows(); ++i) res.x[tab.basis()[i]] = tab.rhs()[i];
    return res;
}

bool in_cone(const Mat& gens, const Vec& target) {
    const int d = static_cast<int>(target.size());
    const int s = static_cast<int>(gens.size());
    if (s == 0) return is_zero(target);
    Mat a(d, Vec(s));
    for (int i = 0; i < d; ++i)
        for (int j = 0; j < s; ++j) a[i][j] = gens[j][i];
    return lp_solve(a, target, Vec(s, Rat(0))).status == LpStatus::Optimal;
}

bool in_convex_hull(const Mat& pts, const Vec& target) {
    const int d = static_cast<int>(target.size());
    const int s = static_cast<int>(pts.size());
    if (s == 0) return false;
    Mat a(d + 1, Vec(s));
    for (int i = 0; i < d; ++i)
        for (int j = 0; j < s; ++j) a[i][j] = pts[j][i];
    for (int j = 0; j < s; ++j) a[d][j] = 1;
    Vec b = target;
    b.push_back(Rat(1));
    return lp_solve(a, b, Vec(s, Rat(0))).status == LpStatus::Optimal;
}

SeparationResult best_separation(const Mat& ge0, const Mat& get, const Mat& eq0, int dim) {
    /* Variables: u, v (c = u - v, both in [0,1]), tp, tm (t = tp - tm), one slack per
     * inequality, one slack per bound, one slack for t <= 1. */
    const int n_ineq = static_cast<int>(ge0.size() + get.size());
    const int n_slack = n_ineq + 2 * dim + 1;
    const int nv = 2 * dim + 2 + n_slack;
    const int iu = 0, iv = dim, itp = 2 * dim, itm = 2 * dim + 1, is0 = 2 * dim + 2;

    Mat a;
    Vec b;
    int slack = 0;
    auto row_for = [&](const Vec& g, bool with_t, bool equality) {
        Vec row(nv, Rat(0));
        for (int j = 0; j < dim; ++j) {
            row[iu + j] = g[j];
            row[iv + j] = -g[j];
        }
        if (with_t) {
            row[itp] = -1;
            row[itm] = 1;
        }
        if (!equality) row[is0 + slack++] = -1;
        a.push_back(std::move(row));
        b.push_back(Rat(0));
    };
    for (const Vec& g : ge0) row_for(g, false, false);
    for (const Vec& g : get) row_for(g, true, false);
    for (const Vec& g : eq0) row_for(g, false, true);
    for (int j = 0; j < 2 * dim; ++j) {
        Vec row(nv, Rat(0));
        row[j] = 1;
        row[is0 + slack++] = 1;
        a.push_back(std::move(row));
        b.push_back(Rat(1));
    }
    {
        Vec row(nv, Rat(0));
        row[itp] = 1;
        row[itm] = -1;
        row[is0 + slack++] = 1;
        a.push_back(std::move(row));
        b.push_back(Rat(1));
    }
    Vec c(nv, Rat(0));
    c[itp] = 1;
    c[itm] = -1;

    LpResult r = lp_solve(a, b, c);
    if (r.status != LpStatus::Optimal)
        throw error(errc::internal_inconsistency, "separation lp must be bounded feasible");
    SeparationResult out;
    out.t = r.value;
    out.c.resize(dim);
    for (int j = 0; j < dim; ++j) out.c[j] = r.x[iu + j] - r.x[iv + j];
    return out;
}

StrictPoint strict_interior_point(const std::vector<Halfspace>& hs, int dim) {
    /* Variables: u, v (x = u - v), eps, slack per halfspace, slack for eps <= 1. */
    const int nv = 2 * dim + 1 + static_cast<int>(hs.size()) + 1;
    const int ie = 2 * dim, is0 = 2 * dim + 1;
    Mat a;
    Vec b;
    int slack = 0;
    for (const Halfspace& h : hs) {
        Vec row(nv, Rat(0));
        for (int j = 0; j < dim; ++j) {
            row[j] = Rat(h.normal[j]);
            row[dim + j] = -Rat(h.normal[j]);
        }
        row[ie] = 1;
        row[is0 + slack++] = 1;
        a.push_back(std::move(row));
        b.push_back(Rat(h.offset));
    }
    {
        Vec row(nv, Rat(0));
        row[ie] = 1;
        row[is0 + slack++] = 1;
        a.push_back(std::move(row));
        b.push_back(Rat(1));
    }
    Vec c(nv, Rat(0));
    c[ie] = 1;
    LpResult r = lp_solve(a, b, c);
    StrictPoint out;
    if (r.status != LpStatus::Optimal || sign(r.value) <= 0) return out;
    out.found = true;
    out.x.resize(dim);
    for (int j = 0; j < dim; ++j) out.x[j] = r.x[j] - r.x[dim + j];
    return out;
}

}  // namespace plconvex
