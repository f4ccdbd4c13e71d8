#pragma once

#include "plconvex/rational.hpp"

namespace plconvex {

Rat dot(const Vec& a, const Vec& b);
Vec sub(const Vec& a, const Vec& b);
Vec add(const Vec& a, const Vec& b);
Vec scaled(const Rat& s, const Vec& a);
bool is_zero(const Vec& a);
Vec to_rat(const IVec& a);
Rat idot(const IVec& a, const Vec& b);

/* Clears denominators and divides out the content; sign of the first nonzero
 * entry is preserved. Throws zero_vector on the zero vector. */
IVec primitive(const Vec& a);
/* Same, but flips so the first nonzero entry is positive. */
IVec primitive_positive(const Vec& a);

bool lex_less(const IVec& a, const IVec& b);

/* Rows spanning a linear subspace of R^ambient; rows are linearly independent. */
struct SubspaceBasis {
    int ambient = 0;
    Mat rows;
    int dim() const { return static_cast<int>(rows.size()); }
};

/* Rank by integer fraction-free (Bareiss) elimination after clearing row denominators. */
int rank_of(const Mat& rows);

/* Sign of det of a square matrix, same elimination scheme. */
int det_sign(const Mat& square);

/* Basis of {x : rows * x = 0}; each basis vector is a primitive integer vector
 * (returned as rationals). The result is deterministic. */
Mat kernel_basis(const Mat& rows, int ambient);

/* Orthogonal complement wrt the standard inner product. dim + dim complement = ambient;
 * every dot product between the two bases is zero. */
SubspaceBasis orthogonal_complement(const SubspaceBasis& b);

/* Row-reduces `rows` to an independent spanning subset (deterministic: keeps the
 * earliest rows that increase rank). */
SubspaceBasis make_basis(const Mat& rows, int ambient);

/* Coordinates of v in the row space of `basis`; throws degenerate if v is outside. */
Vec coordinates_in(const SubspaceBasis& basis, const Vec& v);

/* Solves the square system A x = rhs exactly; throws degenerate if A is singular. */
Vec linear_solve(const Mat& square, const Vec& rhs);

}  // namespace plconvex
