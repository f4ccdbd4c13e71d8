#include "plconvex/linalg.hpp"

#include <algorithm>
#include <utility>

#include "plconvex/errors.hpp"

namespace plconvex {

Rat dot(const Vec& a, const Vec& b) {
    if (a.size() != b.size())
        throw error(errc::dimension_mismatch, "dot of lengths " + std::to_string(a.size()) +
                                                  " and " + std::to_string(b.size()));
    Rat s = 0;
    for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
    return s;
}

Vec sub(const Vec& a, const Vec& b) {
    if (a.size() != b.size()) throw error(errc::dimension_mismatch, "sub of unequal lengths");
    Vec r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] - b[i];
    return r;
}

Vec add(const Vec& a, const Vec& b) {
    if (a.size() != b.size()) throw error(errc::dimension_mismatch, "add of unequal lengths");
    Vec r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] + b[i];
    return r;
}

Vec scaled(const Rat& s, const Vec& a) {
    Vec r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = s * a[i];
    return r;
}

bool is_zero(const Vec& a) {
    for (const Rat& x : a)
        if (sign(x) != 0) return false;
    return true;
}

Vec to_rat(const IVec& a) {
    Vec r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = Rat(a[i]);
    return r;
}

Rat idot(const IVec& a, const Vec& b) {
    if (a.size() != b.size()) throw error(errc::dimension_mismatch, "idot of unequal lengths");
    Rat s = 0;
    for (std::size_t i = 0; i < a.size(); ++i) s += Rat(a[i]) * b[i];
    return s;
}

IVec primitive(const Vec& a) {
    Int l = 1;
    for (const Rat& x : a) {
        Int d = x.get_den();
        l = l / gcd(l, d) * d;
    }
    IVec r(a.size());
    Int content = 0;
    for (std::size_t i = 0; i < a.size(); ++i) {
        Rat scaled_entry = a[i] * Rat(l);
        r[i] = scaled_entry.get_num();
        content = gcd(content, r[i]);
    }
    if (sign(content) == 0) throw error(errc::zero_vector, "primitive form of zero vector");
    for (Int& x : r) x /= content;
    return r;
}

IVec primitive_positive(const Vec& a) {
    IVec r = primitive(a);
    for (const Int& x : r) {
        if (sign(x) == 0) continue;
        if (sign(x) < 0)
            for (Int& y : r) y = -y;
        break;
    }
    return r;
}

bool lex_less(const IVec& a, const IVec& b) {
    return std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end(),
                                        [](const Int& x, const Int& y) { return x < y; });
}

namespace {

/* One row scaled to integers by its positive denominator lcm. */
IVec int_row(const Vec& row) {
    Int l = 1;
    for (const Rat& x : row) {
        Int d = x.get_den();
        l = l / gcd(l, d) * d;
    }
    IVec r(row.size());
    for (std::size_t i = 0; i < row.size(); ++i) r[i] = Rat(row[i] * Rat(l)).get_num();
    return r;
}

struct Echelon {
    std::vector<IVec> rows;
    std::vector<int> pivot_cols;
    int swap_sign = 1;
    int rank() const { return static_cast<int>(pivot_cols.size()); }
};

/* Fraction-free Gaussian elimination (Bareiss): every intermediate entry stays integral,
 * the division by the previous pivot is exact. */
Echelon bareiss(std::vector<IVec> m) {
    Echelon e;
    e.swap_sign = 1;
    if (m.empty()) {
        e.rows = std::move(m);
        return e;
    }
    const int nrows = static_cast<int>(m.size());
    const int ncols = static_cast<int>(m[0].size());
    Int prev = 1;
    int row = 0;
    for (int col = 0; col < ncols && row < nrows; ++col) {
        int piv = -1;
        for (int i = row; i < nrows; ++i)
            if (sign(m[i][col]) != 0) {
                piv = i;
                break;
            }
        if (piv < 0) continue;
        if (piv != row) {
            std::swap(m[piv], m[row]);
            e.swap_sign = -e.swap_sign;
        }
        for (int i = row + 1; i < nrows; ++i) {
            for (int k = col + 1; k < ncols; ++k)
                m[i][k] = (m[row][col] * m[i][k] - m[i][col] * m[row][k]) / prev;
            m[i][col] = 0;
        }
        prev = m[row][col];
        e.pivot_cols.push_back(col);
        ++row;
    }
    e.rows = std::move(m);
    return e;
}

std::vector<IVec> int_rows(const Mat& rows) {
    std::vector<IVec> m;
    m.reserve(rows.size());
    for (const Vec& r : rows) m.push_back(int_row(r));
    return m;
}

}  // namespace

int rank_of(const Mat& rows) {
    if (rows.empty()) return 0;
    return bareiss(int_rows(rows)).rank();
}

int det_sign(const Mat& square) {
    if (square.empty()) return 1;
    for (const Vec& r : square)
        if (r.size() != square.size())
            throw error(errc::dimension_mismatch, "det of non-square matrix");
    /* Row scaling by positive lcms preserves the determinant sign. */
    Echelon e = bareiss(int_rows(square));
    if (e.rank() < static_cast<int>(square.size())) return 0;
    return e.swap_sign * sign(e.rows.back().back());
}

Mat kernel_basis(const Mat& rows, int ambient) {
    for (const Vec& r : rows)
        if (static_cast<int>(r.size()) != ambient)
            throw error(errc::dimension_mismatch, "kernel basis row length");
    Echelon e = bareiss(int_rows(rows));
    std::vector<bool> is_pivot(ambient, false);
    for (int c : e.pivot_cols) is_pivot[c] = true;
    Mat basis;
    for (int f = 0; f < ambient; ++f) {
        if (is_pivot[f]) continue;
        Vec x(ambient, Rat(0));
        x[f] = 1;
        for (int r = e.rank() - 1; r >= 0; --r) {
            int p = e.pivot_cols[r];
            Rat s = 0;
            for (int k = p + 1; k < ambient; ++k)
                if (sign(e.rows[r][k]) != 0) s += Rat(e.rows[r][k]) * x[k];
            x[p] = -s / Rat(e.rows[r][p]);
        }
        basis.push_back(to_rat(primitive_positive(x)));
    }
    return basis;
}

SubspaceBasis orthogonal_complement(const SubspaceBasis& b) {
    for (const Vec& r : b.rows)
        if (static_cast<int>(r.size()) != b.ambient)
            throw error(errc::dimension_mismatch, "basis row length vs ambient");
    SubspaceBasis c;
    c.ambient = b.ambient;
    c.rows = kernel_basis(b.rows, b.ambient);
    return c;
}

SubspaceBasis make_basis(const Mat& rows, int ambient) {
    SubspaceBasis b;
    b.ambient = ambient;
    int r = 0;
    for (const Vec& row : rows) {
        if (static_cast<int>(row.size()) != ambient)
            throw error(errc::dimension_mismatch, "make_basis row length");
        if (is_zero(row)) continue;
        b.rows.push_back(row);
        int nr = rank_of(b.rows);
        if (nr > r)
            r = nr;
        else
            b.rows.pop_back();
    }
    return b;
}

/* Bareiss elimination on the augmented matrix keeps every intermediate value integral. */
Vec linear_solve(const Mat& a, const Vec& rhs) {
    const int n = static_cast<int>(a.size());
    Mat aug(n);
    for (int i = 0; i < n; ++i) {
        aug[i] = a[i];
        aug[i].push_back(rhs[i]);
    }
    Echelon e = bareiss(int_rows(aug));
    for (int r = 0; r < e.rank(); ++r)
        if (e.pivot_cols[r] >= n) throw error(errc::degenerate, "inconsistent linear system");
    if (e.rank() < n) throw error(errc::degenerate, "singular linear system");
    Vec x(n, Rat(0));
    for (int r = n - 1; r >= 0; --r) {
        int p = e.pivot_cols[r];
        Rat s = Rat(e.rows[r][n]);
        for (int k = p + 1; k < n; ++k)
            if (sign(e.rows[r][k]) != 0) s -= Rat(e.rows[r][k]) * x[k];
        x[p] = s / Rat(e.rows[r][p]);
    }
    return x;
}

Vec coordinates_in(const SubspaceBasis& basis, const Vec& v) {
    const int d = basis.dim();
    if (static_cast<int>(v.size()) != basis.ambient)
        throw error(errc::dimension_mismatch, "coordinates_in vector length");
    if (d == 0) {
        if (!is_zero(v)) throw error(errc::degenerate, "vector outside zero subspace");
        return {};
    }
    /* Gram system: basis rows are independent, so the Gram matrix is invertible. */
    Mat gram(d, Vec(d));
    Vec rhs(d);
    for (int i = 0; i < d; ++i) {
        for (int j = 0; j < d; ++j) gram[i][j] = dot(basis.rows[i], basis.rows[j]);
        rhs[i] = dot(basis.rows[i], v);
    }
    Vec c = linear_solve(gram, rhs);
    Vec check(basis.ambient, Rat(0));
    for (int i = 0; i < d; ++i) check = add(check, scaled(c[i], basis.rows[i]));
    if (!(check == v)) throw error(errc::degenerate, "vector outside subspace");
    return c;
}

}  // namespace plconvex
