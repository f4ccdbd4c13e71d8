/* Acceptance gate: eight go/no-go checks over seeded corpora, one printed line
 * per check. The exit status is the number of failed checks. */

#include <algorithm>
#include <cctype>
#include <chrono>
#include <cstdint>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <functional>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "json.hpp"
#include "oracles.hpp"
#include "plconvex/gen.hpp"
#include "plconvex/hull.hpp"
#include "plconvex/io.hpp"
#include "plconvex/local.hpp"
#include "plconvex/verdict.hpp"

using namespace plconvex;

namespace {

std::string where(int n, std::uint64_t seed) {
    return "n=" + std::to_string(n) + " seed=" + std::to_string(seed) + ": ";
}

std::set<std::string> oracle_keys(const Mat& pts) {
    std::vector<oracle::Row> rows;
    for (const auto& p : pts) rows.emplace_back(p.begin(), p.end());
    return oracle::hull_inequalities(rows);
}

std::set<std::string> witness_oracle_keys(const ConeWitness& w) {
    std::set<std::string> out;
    for (const auto& h : w.halfspaces) {
        oracle::Row normal;
        for (const auto& c : h.normal) normal.emplace_back(c);
        out.insert(oracle::halfspace_key(normal, oracle::Q(h.offset)));
    }
    return out;
}

bool strictly_inside(const ConeWitness& w, const SphPoint& p) {
    for (const auto& h : w.halfspaces)
        if (side(h, to_rat(p.ray)) >= 0) return false;
    return true;
}

std::string witness_block(const Verdict& v) {
    return nlohmann::ordered_json::parse(report_json(v))["witness"].dump(2);
}

/* Check 1: seeded hull boundaries in dimensions 3..5 come back as convex
 * embeddings whose witness halfspace set equals the independent subset
 * enumeration oracle exactly, each instance well under the time budget. */
std::string check_hulls(std::vector<PLSurface>& corpus) {
    for (int n : {3, 4, 5}) {
        const int m = n == 3 ? 14 : n == 4 ? 12 : 11;
        for (std::uint64_t seed = 1; seed <= 100; ++seed) {
            const auto t0 = std::chrono::steady_clock::now();
            PLSurface s = gen_hull(n, m, seed);
            if (s.vertices.size() > 50)
                return where(n, seed) + "instance has more than 50 vertices";
            Verdict v = check_surface(s);
            if (v.tag != VerdictTag::ConvexEmbedding)
                return where(n, seed) + "verdict " + to_string(v.tag);
            if (!v.witness) return where(n, seed) + "missing witness";
            if (witness_oracle_keys(*v.witness) != oracle_keys(s.vertices))
                return where(n, seed) + "witness differs from the enumeration oracle";
            const auto ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                                std::chrono::steady_clock::now() - t0)
                                .count();
            if (ms >= 10000) return where(n, seed) + "took " + std::to_string(ms) + " ms";
            corpus.push_back(std::move(s));
        }
    }
    return {};
}

/* Check 2: every dented hull is rejected as not locally convex and the
 * certified ridge lies in a facet of the moved vertex. No false accepts. */
std::string check_dents(std::vector<PLSurface>& corpus) {
    for (int n : {3, 4}) {
        const int m = n == 3 ? 10 : 11;
        for (std::uint64_t seed = 1; seed <= 100; ++seed) {
            PerturbedHull ph = gen_perturbed_hull(n, m, seed);
            Verdict v = check_surface(ph.s);
            if (positive(v.tag)) return where(n, seed) + "accepted a dented hull";
            if (v.tag != VerdictTag::NotLocallyConvex)
                return where(n, seed) + "verdict " + to_string(v.tag);
            if (!v.violation) return where(n, seed) + "missing violation certificate";
            if (v.violation->kind == "vertex")
                return where(n, seed) + "certificate is not a ridge";
            std::vector<int> face = v.violation->face;
            std::sort(face.begin(), face.end());
            bool incident = false;
            for (const auto& r : ridges(ph.s)) {
                if (r.vertices != face) continue;
                for (int f : r.facets) {
                    const auto& cell = ph.s.facets[f];
                    if (std::find(cell.begin(), cell.end(), ph.perturbed_vertex) != cell.end())
                        incident = true;
                }
                break;
            }
            if (!incident)
                return where(n, seed) + "certified ridge is not incident to the moved vertex";
            corpus.push_back(std::move(ph.s));
        }
    }
    return {};
}

/* Check 3: seeded spherical cone surfaces get a positive verdict, the witness
 * lineality dimension matches the construction, full lineality lands on the
 * great-subsphere tag, and lineality 2 exercises the glued-hemispheres tag
 * with a two-halfspace witness and a two-cell cross-section. */
std::string check_cones(std::vector<std::pair<PLSurface, Verdict>>& pairs,
                        std::vector<PLSurface>& corpus) {
    for (std::uint64_t seed = 1; seed <= 50; ++seed) {
        const int l = static_cast<int>(seed % 4);
        PLSurface s = gen_sph_cone(l, seed);
        Verdict v = check_surface(s);
        if (!positive(v.tag)) return where(l, seed) + "verdict " + to_string(v.tag);
        if (!v.witness || !v.decomposition)
            return where(l, seed) + "missing witness or decomposition";
        if (directrix_of_cone(*v.witness).dim() != l || v.witness->lineality.dim() != l)
            return where(l, seed) + "recovered lineality " +
                   std::to_string(directrix_of_cone(*v.witness).dim());
        if (v.decomposition->directrix_dim != l - 1)
            return where(l, seed) + "directrix dimension " +
                   std::to_string(v.decomposition->directrix_dim);
        if (v.decomposition->multiplicity != 1)
            return where(l, seed) + "multiplicity " +
                   std::to_string(v.decomposition->multiplicity);
        if (l == 3) {
            if (v.tag != VerdictTag::GreatSubsphere)
                return where(l, seed) + "full lineality got " + to_string(v.tag);
            if (v.decomposition->generatrix)
                return where(l, seed) + "great subsphere carries a cross-section";
        } else if (l == 2) {
            if (v.tag != VerdictTag::GluedHemispheres)
                return where(l, seed) + "lineality 2 got " + to_string(v.tag);
            if (v.witness->halfspaces.size() != 2)
                return where(l, seed) + "glued witness has " +
                       std::to_string(v.witness->halfspaces.size()) + " halfspaces";
            if (!v.decomposition->generatrix || v.decomposition->generatrix->facets.size() != 2)
                return where(l, seed) + "glued cross-section is not a two-cell pair";
        } else if (v.tag != VerdictTag::ConvexConeBoundary) {
            return where(l, seed) + "verdict " + to_string(v.tag);
        }
        corpus.push_back(s);
        pairs.emplace_back(std::move(s), std::move(v));
    }
    return {};
}

/* Check 4: doubling every positive cone instance doubles the reported
 * multiplicity and leaves the witness block of the report byte-identical. */
std::string check_covers(const std::vector<std::pair<PLSurface, Verdict>>& pairs) {
    for (size_t i = 0; i < pairs.size(); ++i) {
        const std::string at = "seed=" + std::to_string(i + 1) + ": ";
        PLSurface d = gen_double_cover(pairs[i].first);
        Verdict vd = check_surface(d);
        if (!positive(vd.tag)) return at + "cover verdict " + to_string(vd.tag);
        if (!vd.decomposition) return at + "cover lost its decomposition";
        if (vd.decomposition->multiplicity != 2)
            return at + "cover multiplicity " + std::to_string(vd.decomposition->multiplicity);
        if (witness_block(vd) != witness_block(pairs[i].second))
            return at + "cover witness block differs";
    }
    return {};
}

/* Check 5: the hull-witness route and the recursive link route agree at every
 * vertex of every instance collected by checks 1..3. */
std::string check_route_agreement(const std::vector<PLSurface>& corpus) {
    if (corpus.empty()) return "empty corpus";
    for (size_t i = 0; i < corpus.size(); ++i) {
        const PLSurface& s = corpus[i];
        for (int v = 0; v < static_cast<int>(s.vertices.size()); ++v) {
            const bool hull_route = star_hull_check(s, std::vector<int>{v}).convex;
            const bool link_route = recursive_link_check(s, v);
            if (hull_route != link_route)
                return "instance " + std::to_string(i) + " vertex " + std::to_string(v) +
                       ": witness route says " + (hull_route ? "convex" : "not convex") +
                       ", recursive route disagrees";
        }
    }
    return {};
}

/* Check 6: arc certificates for random outside ray pairs against random
 * pointed full-dimensional cones; endpoints echo the query and all three rays
 * fail strict membership by sign checks alone. Every fifth pair is antipodal. */
std::string check_arcs() {
    for (int dim : {3, 4}) {
        std::mt19937_64 eng(2026u + static_cast<unsigned>(dim));
        auto draw = [&](long lo, long hi) {
            return lo + static_cast<long>(eng() % static_cast<std::uint64_t>(hi - lo + 1));
        };
        auto draw_ray = [&]() {
            for (;;) {
                Vec p(dim, Rat(0));
                bool nonzero = false;
                for (auto& e : p) {
                    e = Rat(draw(-9, 9));
                    if (sign(e) != 0) nonzero = true;
                }
                if (nonzero) return canonical_sph(p);
            }
        };
        int made = 0;
        while (made < 100) {
            Mat rays;
            const int k = static_cast<int>(draw(4, 6));
            for (int i = 0; i < k; ++i) {
                Vec r(dim, Rat(0));
                r[0] = Rat(draw(1, 6));
                for (int j = 1; j < dim; ++j) r[j] = Rat(draw(-6, 6));
                rays.push_back(r);
            }
            if (rank_of(rays) != dim) continue;
            ConeWitness w;
            for (const auto& hf : cone_hull_facets(rays)) w.halfspaces.push_back(hf.h);
            w.lineality = directrix_of_cone(w);
            w.pointed_part_dim = dim - w.lineality.dim();
            if (w.lineality.dim() != 0) continue;

            SphPoint x = draw_ray();
            if (strictly_inside(w, x)) continue;
            SphPoint x2 = made % 5 == 4 ? antipodal(x) : draw_ray();
            if (strictly_inside(w, x2)) continue;

            const std::string at = "S^" + std::to_string(dim - 1) + " pair " +
                                   std::to_string(made + 1) + ": ";
            ArcCertificate cert = a_convexity_probe(w, x, x2);
            if (!(cert.from == x) || !(cert.to == x2))
                return at + "certificate endpoints differ from the query";
            for (const SphPoint* p : {&cert.from, &cert.to, &cert.mid})
                if (strictly_inside(w, *p)) return at + "certificate ray is inside the open cone";
            ++made;
        }
    }
    return {};
}

/* Check 7: the self-overlapping pentagram prism validates with boundary,
 * passes every interior local check, and yields no global claim. */
std::string check_boundary_case() {
    PLSurface s = gen_cylinder_truncated(1);
    ValidationReport rep = validate(s);
    if (!rep.ok(s)) return "pentagram prism fails validation";
    if (rep.closed) return "pentagram prism should have boundary";
    LocalReport lr = local_report(s, true);
    if (!lr.locally_convex()) return "an interior local check failed";
    for (const auto& rv : lr.ridge_verdicts)
        if (rv.kind == RidgeKind::Reflex) return "interior reflex ridge";
    Verdict v = check_surface(s);
    if (v.tag != VerdictTag::BoundaryPresentNoGlobalClaim)
        return std::string("verdict ") + to_string(v.tag);
    return {};
}

/* Blank out comments, string literals, and character literals, preserving
 * offsets so token boundaries survive. Digit separators and literal suffixes
 * like 10'000 or 'u' after a digit do not open a character literal. */
std::string strip_comments_and_strings(const std::string& in) {
    std::string out(in.size(), ' ');
    enum { Code, Line, Block, Str, Chr } st = Code;
    for (size_t i = 0; i < in.size(); ++i) {
        const char c = in[i];
        const char n = i + 1 < in.size() ? in[i + 1] : '\0';
        switch (st) {
            case Code:
                if (c == '/' && n == '/') {
                    st = Line;
                    ++i;
                } else if (c == '/' && n == '*') {
                    st = Block;
                    ++i;
                } else if (c == '"') {
                    st = Str;
                } else if (c == '\'' && (i == 0 || (!std::isalnum(static_cast<unsigned char>(in[i - 1])) &&
                                                    in[i - 1] != '_'))) {
                    st = Chr;
                } else {
                    out[i] = c;
                }
                break;
            case Line:
                if (c == '\n') {
                    st = Code;
                    out[i] = '\n';
                }
                break;
            case Block:
                if (c == '*' && n == '/') {
                    st = Code;
                    ++i;
                }
                break;
            case Str:
                if (c == '\\')
                    ++i;
                else if (c == '"')
                    st = Code;
                break;
            case Chr:
                if (c == '\\')
                    ++i;
                else if (c == '\'')
                    st = Code;
                break;
        }
    }
    return out;
}

std::string first_floating_token(const std::string& code) {
    static const std::set<std::string> banned = {"float",  "double", "stof",    "stod",   "stold",
                                                "atof",   "strtof", "strtod",  "strtold"};
    auto word = [](char c) {
        return std::isalnum(static_cast<unsigned char>(c)) || c == '_';
    };
    auto digit = [](char c) { return std::isdigit(static_cast<unsigned char>(c)) != 0; };
    for (size_t i = 0; i < code.size();) {
        const char c = code[i];
        if (word(c) && !digit(c)) {
            size_t j = i;
            while (j < code.size() && word(code[j])) ++j;
            const std::string t = code.substr(i, j - i);
            if (banned.count(t)) return "token '" + t + "'";
            i = j;
        } else if (digit(c)) {
            size_t j = i;
            while (j < code.size() && digit(code[j])) ++j;
            if (j < code.size() && code[j] == '.' && j + 1 < code.size() && digit(code[j + 1]))
                return "a floating literal";
            if (j < code.size() && (code[j] == 'e' || code[j] == 'E')) {
                size_t e = j + 1;
                if (e < code.size() && (code[e] == '+' || code[e] == '-')) ++e;
                if (e < code.size() && digit(code[e])) return "a floating literal";
            }
            i = j;
        } else {
            if (c == '.' && i + 1 < code.size() && digit(code[i + 1]) &&
                (i == 0 || (!word(code[i - 1]) && code[i - 1] != '.')))
                return "a floating literal";
            ++i;
        }
    }
    return {};
}

/* Check 8: the audited sources (library, headers, CLI) contain no floating
 * types, floating parses, or floating literals after stripping comments and
 * strings, and the audit checklist document exists. */
std::string check_exactness_audit() {
    namespace fs = std::filesystem;
    const fs::path root = SRC_ROOT;

    std::ifstream doc(root / "docs" / "exactness-checklist.md");
    std::stringstream dbuf;
    dbuf << doc.rdbuf();
    if (!doc || dbuf.str().size() < 200)
        return "docs/exactness-checklist.md is missing or too short";

    std::vector<fs::path> files;
    for (const char* sub : {"src", "include/plconvex", "tools"})
        for (const auto& entry : fs::directory_iterator(root / sub)) {
            const std::string ext = entry.path().extension().string();
            if (ext == ".cpp" || ext == ".hpp") files.push_back(entry.path());
        }
    std::sort(files.begin(), files.end());
    if (files.size() < 10) return "audit found too few sources under " + root.string();

    for (const auto& path : files) {
        std::ifstream in(path);
        std::stringstream buf;
        buf << in.rdbuf();
        const std::string hit = first_floating_token(strip_comments_and_strings(buf.str()));
        if (!hit.empty()) return path.filename().string() + " contains " + hit;
    }
    return {};
}

}  // namespace

int main() {
    int failed = 0;
    std::vector<PLSurface> corpus;
    std::vector<std::pair<PLSurface, Verdict>> cone_pairs;

    auto run = [&](int idx, const char* label, const std::function<std::string()>& body) {
        std::string err;
        try {
            err = body();
        } catch (const std::exception& e) {
            err = std::string("unexpected exception: ") + e.what();
        }
        if (err.empty()) {
            std::printf("criterion %d: PASS  %s\n", idx, label);
        } else {
            std::printf("criterion %d: FAIL  %s: %s\n", idx, label, err.c_str());
            ++failed;
        }
        std::fflush(stdout);
    };

    run(1, "seeded hulls match the enumeration oracle", [&] { return check_hulls(corpus); });
    run(2, "dented hulls are rejected with an incident ridge certificate",
        [&] { return check_dents(corpus); });
    run(3, "spherical cones recover their lineality", [&] { return check_cones(cone_pairs, corpus); });
    run(4, "double covers report multiplicity 2 with the same witness",
        [&] { return check_covers(cone_pairs); });
    run(5, "witness and recursive vertex routes agree everywhere",
        [&] { return check_route_agreement(corpus); });
    run(6, "arc certificates stay outside the open cone", [&] { return check_arcs(); });
    run(7, "boundary case passes interior checks without a global claim",
        [&] { return check_boundary_case(); });
    run(8, "exactness audit finds no floating-point usage",
        [&] { return check_exactness_audit(); });
    return failed;
}
