#pragma once

#include <string>

#include "plconvex/surface.hpp"
#include "plconvex/verdict.hpp"

namespace plconvex {

/* Native surface format, line oriented, LF endings, '#' starts a comment:
 *   plconvex 1
 *   dim <n>
 *   mode euclidean|spherical
 *   boundary closed|allowed
 *   counts <V> <F>
 * then V coordinate lines of space-separated "p/q" rationals (n entries, n+1 in
 * spherical mode) and F facet lines "<k> i1 ... ik" with 0-based indices. */
PLSurface parse_surface(const std::string& text);
PLSurface read_surface_file(const std::string& path);

/* Canonical text of the same format; write(parse(t)) is a fixed point. */
std::string write_surface(const PLSurface& s);
void write_surface_file(const std::string& path, const PLSurface& s);

/* JSON report with fixed key order and index-sorted arrays; every number that
 * could be non-integral is a "p/q" string. The timings object is reserved and
 * stays empty so identical inputs give byte-identical reports. */
std::string report_json(const Verdict& v);

/* Short human-readable form of the same data. */
std::string report_text(const Verdict& v);

}  // namespace plconvex
