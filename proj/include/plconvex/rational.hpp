#pragma once

#include <gmpxx.h>

#include <string>
#include <vector>

namespace plconvex {

/* All geometry runs on exact rationals; no floating point anywhere in the library. */
using Rat = mpq_class;
using Int = mpz_class;
using Vec = std::vector<Rat>;
using Mat = std::vector<Vec>;
using IVec = std::vector<Int>;

inline int sign(const Rat& x) { return sgn(x); }
inline int sign(const Int& x) { return sgn(x); }

/* Accepts "p" or "p/q" with optional leading '-'; result is canonical (reduced, q > 0).
 * Throws bad_rational on malformed input or q == 0. */
Rat rat_from_string(const std::string& s);

/* Canonical text form: "p" when the denominator is 1, else "p/q". */
std::string rat_to_string(const Rat& x);

}  // namespace plconvex
