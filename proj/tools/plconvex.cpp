#include <cstdint>
#include <fstream>
#include <iostream>
#include <string>

#include "CLI11.hpp"
#include "json.hpp"
#include "plconvex/errors.hpp"
#include "plconvex/gen.hpp"
#include "plconvex/io.hpp"
#include "plconvex/verdict.hpp"

namespace {

using namespace plconvex;

int exit_for(VerdictTag tag) {
    if (positive(tag)) return 0;
    switch (tag) {
        case VerdictTag::NotLocallyConvex: return 1;
        case VerdictTag::StructuralReject: return 2;
        default: return 3;
    }
}

/* Reinterprets the same coordinate columns under the other mode, so the
 * coordinate width stays fixed and only the sphere/flat reading changes. */
PLSurface with_mode(PLSurface s, const std::string& mode) {
    Mode want = mode == "spherical" ? Mode::Spherical : Mode::Euclidean;
    if (want == s.mode) return s;
    const int width = s.coord_dim();
    s.mode = want;
    s.ambient_dim = want == Mode::Spherical ? width - 1 : width;
    return s;
}

void emit_report(const Verdict& v, const std::string& format) {
    std::cout << (format == "text" ? report_text(v) : report_json(v));
}

void write_text_file(const std::string& path, const std::string& text) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw error(errc::bad_params, "cannot open output file: " + path);
    out << text;
}

void maybe_write_witness(const Verdict& v, const std::string& path) {
    if (path.empty()) return;
    auto doc = nlohmann::ordered_json::parse(report_json(v));
    write_text_file(path, doc["witness"].dump(2) + "\n");
}

std::string generatrix_path(const std::string& input) {
    auto dot = input.find_last_of('.');
    auto slash = input.find_last_of('/');
    if (dot == std::string::npos || (slash != std::string::npos && dot < slash))
        return input + ".generatrix";
    return input.substr(0, dot) + ".generatrix" + input.substr(dot);
}

int run_check(const std::string& path, const std::string& format, const std::string& mode_override,
              const std::string& witness_out) {
    PLSurface s = read_surface_file(path);
    if (!mode_override.empty()) s = with_mode(std::move(s), mode_override);
    Verdict v = check_surface(s);
    emit_report(v, format);
    maybe_write_witness(v, witness_out);
    return exit_for(v.tag);
}

int run_decompose(const std::string& path, const std::string& format, const std::string& witness_out) {
    PLSurface s = read_surface_file(path);
    Verdict v = check_surface(s);
    if (positive(v.tag) && v.decomposition && v.decomposition->generatrix)
        write_surface_file(generatrix_path(path), *v.decomposition->generatrix);
    emit_report(v, format);
    maybe_write_witness(v, witness_out);
    return exit_for(v.tag);
}

int run_gen(const std::string& kind, int n, int m, int lineality, std::uint64_t seed,
            const std::string& input, const std::string& out) {
    std::string text;
    if (kind == "hull") {
        text = write_surface(gen_hull(n, m, seed));
    } else if (kind == "perturbed-hull") {
        PerturbedHull ph = gen_perturbed_hull(n, m, seed);
        text = "# perturbed vertex " + std::to_string(ph.perturbed_vertex) + "\n" + write_surface(ph.s);
    } else if (kind == "sph-cone") {
        if (n != 3) throw error(errc::bad_params, "spherical cone generator is fixed to n = 3");
        text = write_surface(gen_sph_cone(lineality, seed));
    } else if (kind == "great-sphere") {
        text = write_surface(gen_great_sphere(seed));
    } else if (kind == "double-cover") {
        if (input.empty()) throw error(errc::bad_params, "double-cover needs --input");
        text = write_surface(gen_double_cover(read_surface_file(input)));
    } else if (kind == "cylinder-truncated") {
        text = write_surface(gen_cylinder_truncated(seed));
    } else {
        throw error(errc::bad_params, "unknown generator kind: " + kind);
    }
    if (out.empty())
        std::cout << text;
    else
        write_text_file(out, text);
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact convexity verdicts for piecewise-linear hypersurfaces"};
    app.require_subcommand(1);

    std::string path, format = "json", mode_override, witness_out;
    std::string kind, input, out;
    int n = 3, m = 20, lineality = 0, jobs = 1;
    std::uint64_t seed = 1;

    auto* check = app.add_subcommand("check", "decide convexity of a surface file");
    check->add_option("file", path, "surface file")->required();
    check->add_option("--format", format, "report format")->check(CLI::IsMember({"json", "text"}));
    check->add_option("--mode-override", mode_override, "reinterpret coordinates under this mode")
        ->check(CLI::IsMember({"euclidean", "spherical"}));
    check->add_option("--jobs", jobs, "reserved; the pipeline runs single threaded");
    check->add_option("--witness-out", witness_out, "write the witness block to this file");

    auto* dec = app.add_subcommand("decompose", "directrix/generatrix split of a spherical surface");
    dec->add_option("file", path, "surface file")->required();
    dec->add_option("--format", format, "report format")->check(CLI::IsMember({"json", "text"}));
    dec->add_option("--witness-out", witness_out, "write the witness block to this file");

    auto* gen = app.add_subcommand("gen", "emit a deterministic test instance");
    gen->add_option("kind", kind,
                    "hull | perturbed-hull | sph-cone | great-sphere | double-cover | cylinder-truncated")
        ->required();
    gen->add_option("-n,--dim", n, "ambient dimension");
    gen->add_option("-m,--points", m, "point draw count");
    gen->add_option("--lineality", lineality, "lineality dimension for sph-cone");
    gen->add_option("--seed", seed, "pseudo-random seed");
    gen->add_option("--input", input, "source surface for double-cover");
    gen->add_option("-o,--out", out, "output file (default stdout)");

    CLI11_PARSE(app, argc, argv);

    try {
        if (check->parsed()) return run_check(path, format, mode_override, witness_out);
        if (dec->parsed()) return run_decompose(path, format, witness_out);
        return run_gen(kind, n, m, lineality, seed, input, out);
    } catch (const plconvex::error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return e.code() == plconvex::errc::unsupported ? 3 : 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
}
