#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <optional>
#include <set>
#include <string>

#include "doctest.h"
#include "fixtures.hpp"
#include "oracles.hpp"
#include "plconvex/errors.hpp"
#include "plconvex/gen.hpp"
#include "plconvex/hull.hpp"
#include "plconvex/verdict.hpp"

using namespace plconvex;
using fixtures::pt;

namespace {

std::string key_of(const Halfspace& h) {
    std::string key;
    for (const auto& n : h.normal) key += n.get_str() + " ";
    key += h.offset.get_str() + " ";
    return key;
}

std::set<std::string> witness_keys(const ConeWitness& w) {
    std::set<std::string> out;
    for (const auto& h : w.halfspaces) out.insert(key_of(h));
    return out;
}

ConeWitness cone_witness_of(const Mat& rays) {
    ConeWitness w;
    for (const auto& hf : cone_hull_facets(rays)) w.halfspaces.push_back(hf.h);
    w.lineality = directrix_of_cone(w);
    w.pointed_part_dim = static_cast<int>(rays[0].size()) - w.lineality.dim();
    return w;
}

bool strictly_inside(const ConeWitness& w, const SphPoint& p) {
    for (const auto& h : w.halfspaces)
        if (side(h, to_rat(p.ray)) >= 0) return false;
    return true;
}

template <class F>
std::optional<errc> thrown_code(F&& f) {
    try {
        f();
    } catch (const error& e) {
        return e.code();
    }
    return std::nullopt;
}

}  // namespace

TEST_CASE("cube witness equals the brute-force hull oracle exactly") {
    PLSurface s = fixtures::cube();
    Verdict v = check_euclidean_closed(s);
    CHECK(v.tag == VerdictTag::ConvexEmbedding);
    REQUIRE(v.witness.has_value());
    CHECK(v.witness->lineality.dim() == 0);
    CHECK(v.witness->pointed_part_dim == 3);

    std::vector<oracle::Row> pts;
    for (const auto& p : s.vertices) pts.emplace_back(p.begin(), p.end());
    std::set<std::string> expect = oracle::hull_inequalities(pts);
    std::set<std::string> got;
    for (const auto& h : v.witness->halfspaces) {
        oracle::Row normal;
        for (const auto& n : h.normal) normal.emplace_back(n);
        got.insert(oracle::halfspace_key(normal, oracle::Q(h.offset)));
    }
    CHECK(got == expect);

    WitnessCheck wc = verify_witness(s, *v.witness);
    CHECK(wc.ok);
    CHECK(wc.multiplicity == 1);
}

TEST_CASE("witness verification pinpoints each tampered clause") {
    PLSurface s = fixtures::cube();
    ConeWitness w = *check_euclidean_closed(s).witness;

    SUBCASE("missing halfspace leaves a facet plane uncovered") {
        w.halfspaces.erase(w.halfspaces.begin());
        CHECK(verify_witness(s, w).clause == "a");
    }
    SUBCASE("extraneous halfspace touches no facet") {
        w.halfspaces.push_back(make_halfspace(pt({1, 1, 1}), Rat(10)));
        CHECK(verify_witness(s, w).clause == "b");
    }
    SUBCASE("reversed halfspace expels a vertex") {
        w.halfspaces[0] = w.halfspaces[0].flipped();
        CHECK(verify_witness(s, w).clause == "c");
    }
    SUBCASE("wrong lineality is malformed") {
        w.lineality = SubspaceBasis{3, {pt({1, 0, 0})}};
        CHECK(verify_witness(s, w).clause == "w");
    }
    SUBCASE("wrong pointed dimension is malformed") {
        w.pointed_part_dim = 1;
        CHECK(verify_witness(s, w).clause == "w");
    }
    SUBCASE("duplicated boundary is malformed") {
        w.halfspaces.push_back(w.halfspaces[0]);
        CHECK(verify_witness(s, w).clause == "w");
    }
    SUBCASE("no halfspaces is malformed") {
        w.halfspaces.clear();
        CHECK(verify_witness(s, w).clause == "w");
    }
}

TEST_CASE("euclidean rejections carry the right tags") {
    CHECK(check_euclidean_closed(fixtures::dented_octahedron()).tag == VerdictTag::NotLocallyConvex);
    REQUIRE(check_euclidean_closed(fixtures::dented_octahedron()).violation.has_value());

    PLSurface open_cube = fixtures::cube();
    open_cube.facets.erase(open_cube.facets.begin());
    CHECK(check_euclidean_closed(open_cube).tag == VerdictTag::StructuralReject);

    PLSurface pair = fixtures::octahedron();
    const int nv = static_cast<int>(pair.vertices.size());
    for (int i = 0; i < nv; ++i) {
        Vec v = pair.vertices[i];
        v[0] += Rat(10);
        pair.vertices.push_back(v);
    }
    for (size_t f = 0; f < 8; ++f) {
        std::vector<int> g = pair.facets[f];
        for (int& x : g) x += nv;
        pair.facets.push_back(g);
    }
    Verdict v = check_euclidean_closed(pair);
    CHECK(v.tag == VerdictTag::StructuralReject);
    CHECK(v.note == "surface is not connected");

    PLSurface square;
    square.ambient_dim = 2;
    square.vertices = {pt({0, 0}), pt({1, 0}), pt({1, 1}), pt({0, 1})};
    square.facets = {{0, 1}, {1, 2}, {2, 3}, {0, 3}};
    CHECK(check_euclidean_closed(square).tag == VerdictTag::Unsupported);
}

TEST_CASE("spherical cone verdicts recover the constructed lineality") {
    for (int l = 0; l <= 3; ++l) {
        PLSurface s = gen_sph_cone(l, 40 + static_cast<std::uint64_t>(l));
        Verdict v = check_spherical_closed(s);
        REQUIRE(v.witness.has_value());
        REQUIRE(v.decomposition.has_value());
        CHECK(v.witness->lineality.dim() == l);
        CHECK(v.decomposition->directrix_dim == l - 1);
        CHECK(v.decomposition->multiplicity == 1);
        if (l == 3) {
            CHECK(v.tag == VerdictTag::GreatSubsphere);
            CHECK(!v.decomposition->generatrix.has_value());
        } else if (l == 2) {
            CHECK(v.tag == VerdictTag::GluedHemispheres);
            REQUIRE(v.decomposition->generatrix.has_value());
            CHECK(v.decomposition->generatrix->facets.size() == 2);
        } else {
            CHECK(v.tag == VerdictTag::ConvexConeBoundary);
            REQUIRE(v.decomposition->generatrix.has_value());
            CHECK(v.decomposition->generatrix->ambient_dim == 3 - (l - 1) - 1);
        }
    }
}

TEST_CASE("double covers double the multiplicity but keep the witness") {
    for (int l = 0; l <= 3; ++l) {
        PLSurface s = gen_sph_cone(l, 60 + static_cast<std::uint64_t>(l));
        Verdict single = check_spherical_closed(s);
        Verdict doubled = check_spherical_closed(gen_double_cover(s));
        CHECK(doubled.tag == single.tag);
        REQUIRE(doubled.decomposition.has_value());
        CHECK(doubled.decomposition->multiplicity == 2);
        CHECK(witness_keys(*doubled.witness) == witness_keys(*single.witness));
    }
}

TEST_CASE("components tracing different cones are unsupported") {
    PLSurface a = gen_sph_cone(0, 2);
    PLSurface b = gen_sph_cone(0, 3);
    const int nv = static_cast<int>(a.vertices.size());
    for (const auto& v : b.vertices) a.vertices.push_back(v);
    for (const auto& f : b.facets) {
        std::vector<int> g = f;
        for (int& x : g) x += nv;
        a.facets.push_back(g);
    }
    Verdict v = check_spherical_closed(a);
    CHECK(v.tag == VerdictTag::Unsupported);
}

TEST_CASE("witness verification counts spherical covers uniformly") {
    PLSurface s = fixtures::square_cone_s2();
    ConeWitness w = cone_witness_of({pt({1, 1, 1}), pt({-1, 1, 1}), pt({-1, -1, 1}), pt({1, -1, 1})});
    WitnessCheck one = verify_witness(s, w);
    CHECK(one.ok);
    CHECK(one.multiplicity == 1);
    WitnessCheck two = verify_witness(gen_double_cover(s), w);
    CHECK(two.ok);
    CHECK(two.multiplicity == 2);
}

TEST_CASE("generatrix sections respect the lineality split") {
    PLSurface pointed = gen_sph_cone(0, 9);
    ConeWitness w = *check_spherical_closed(pointed).witness;
    PLSurface g = generatrix_section(pointed, w);
    CHECK(g.vertices == pointed.vertices);
    CHECK(g.facets == pointed.facets);

    PLSurface great = gen_sph_cone(3, 9);
    ConeWitness wg = *check_spherical_closed(great).witness;
    CHECK(thrown_code([&] { generatrix_section(great, wg); }) == errc::degenerate_section);

    PLSurface glued = gen_sph_cone(2, 9);
    ConeWitness w2 = *check_spherical_closed(glued).witness;
    PLSurface sec = generatrix_section(glued, w2);
    CHECK(sec.ambient_dim == 1);
    CHECK(sec.vertices.size() == 2);
    CHECK(sec.facets.size() == 2);
}

TEST_CASE("arc certificates stay outside the open cone") {
    ConeWitness w = cone_witness_of({pt({1, 1, 1}), pt({-1, 1, 1}), pt({-1, -1, 1}), pt({1, -1, 1})});
    SphPoint x = canonical_sph(pt({0, 0, -1}));
    SphPoint y = canonical_sph(pt({1, 0, 0}));

    ArcCertificate cert = a_convexity_probe(w, x, y);
    CHECK(cert.from == x);
    CHECK(cert.to == y);
    for (const SphPoint& p : {cert.from, cert.to, cert.mid}) CHECK(!strictly_inside(w, p));

    ArcCertificate anti = a_convexity_probe(w, y, antipodal(y));
    CHECK(!strictly_inside(w, anti.mid));
    CHECK(anti.mid != y);
    CHECK(anti.mid != antipodal(y));

    ArcCertificate same = a_convexity_probe(w, x, x);
    CHECK(same.mid == x);

    SphPoint inside = canonical_sph(pt({0, 0, 1}));
    CHECK(thrown_code([&] { a_convexity_probe(w, inside, y); }) == errc::input_inside_s);
}

TEST_CASE("dispatch routes boundary and spherical inputs") {
    CHECK(check_surface(gen_cylinder_truncated(0)).tag == VerdictTag::BoundaryPresentNoGlobalClaim);
    CHECK(check_surface(fixtures::square_cone_s2()).tag == VerdictTag::Unsupported);
    CHECK(check_surface(fixtures::octa_sphere()).tag == VerdictTag::GreatSubsphere);
    CHECK(check_surface(fixtures::cube()).tag == VerdictTag::ConvexEmbedding);
}
