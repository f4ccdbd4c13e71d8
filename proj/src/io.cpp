#include "plconvex/io.hpp"

#include <fstream>
#include <limits>
#include <sstream>

#include "json.hpp"
#include "plconvex/errors.hpp"

namespace plconvex {

namespace {

using ordered_json = nlohmann::ordered_json;

struct Token {
    int line = 0;
    int col = 0;
    std::string text;
};

/* Comment-stripped, whitespace-split tokens grouped per source line. */
std::vector<std::vector<Token>> token_lines(const std::string& text) {
    std::vector<std::vector<Token>> out;
    int line = 0;
    size_t pos = 0;
    while (pos <= text.size()) {
        size_t eol = text.find('\n', pos);
        if (eol == std::string::npos) eol = text.size();
        ++line;
        std::vector<Token> toks;
        size_t i = pos;
        while (i < eol && text[i] != '#') {
            if (text[i] == ' ' || text[i] == '\t' || text[i] == '\r') {
                ++i;
                continue;
            }
            size_t start = i;
            while (i < eol && text[i] != '#' && text[i] != ' ' && text[i] != '\t' && text[i] != '\r') ++i;
            toks.push_back({line, static_cast<int>(start - pos) + 1, text.substr(start, i - start)});
        }
        if (!toks.empty()) out.push_back(std::move(toks));
        if (eol == text.size()) break;
        pos = eol + 1;
    }
    return out;
}

long long parse_int(const Token& t, long long lo, long long hi) {
    size_t used = 0;
    long long v = 0;
    try {
        v = std::stoll(t.text, &used);
    } catch (const std::exception&) {
        throw parse_error(t.line, t.col, "expected an integer, got '" + t.text + "'");
    }
    if (used != t.text.size())
        throw parse_error(t.line, t.col, "expected an integer, got '" + t.text + "'");
    if (v < lo || v > hi)
        throw parse_error(t.line, t.col, "integer " + t.text + " out of range");
    return v;
}

Rat parse_rat(const Token& t) {
    try {
        return rat_from_string(t.text);
    } catch (const error& e) {
        throw error(errc::bad_rational, "line " + std::to_string(t.line) + ", col " +
                                            std::to_string(t.col) + ": " + e.what());
    }
}

const std::vector<Token>& expect_line(const std::vector<std::vector<Token>>& lines, size_t i,
                                      const std::string& what) {
    if (i >= lines.size()) throw parse_error(static_cast<int>(i) + 1, 1, "unexpected end of file, expected " + what);
    return lines[i];
}

void expect_keyword(const std::vector<Token>& line, const std::string& kw, size_t ntokens) {
    if (line[0].text != kw)
        throw parse_error(line[0].line, line[0].col, "expected '" + kw + "' line");
    if (line.size() != ntokens)
        throw parse_error(line[0].line, line[0].col,
                          "'" + kw + "' line takes " + std::to_string(ntokens - 1) + " value(s)");
}

}  // namespace

PLSurface parse_surface(const std::string& text) {
    auto lines = token_lines(text);
    size_t at = 0;

    const auto& magic = expect_line(lines, at++, "header 'plconvex 1'");
    if (magic.size() != 2 || magic[0].text != "plconvex" || magic[1].text != "1")
        throw parse_error(magic[0].line, magic[0].col, "bad header, expected 'plconvex 1'");

    PLSurface s;
    const auto& dim_line = expect_line(lines, at++, "'dim' line");
    expect_keyword(dim_line, "dim", 2);
    s.ambient_dim = static_cast<int>(parse_int(dim_line[1], 1, 64));

    const auto& mode_line = expect_line(lines, at++, "'mode' line");
    expect_keyword(mode_line, "mode", 2);
    if (mode_line[1].text == "euclidean") s.mode = Mode::Euclidean;
    else if (mode_line[1].text == "spherical") s.mode = Mode::Spherical;
    else throw parse_error(mode_line[1].line, mode_line[1].col, "mode must be euclidean or spherical");

    const auto& bnd_line = expect_line(lines, at++, "'boundary' line");
    expect_keyword(bnd_line, "boundary", 2);
    if (bnd_line[1].text == "allowed") s.allow_boundary = true;
    else if (bnd_line[1].text == "closed") s.allow_boundary = false;
    else throw parse_error(bnd_line[1].line, bnd_line[1].col, "boundary must be closed or allowed");

    const auto& counts = expect_line(lines, at++, "'counts' line");
    expect_keyword(counts, "counts", 3);
    const int nv = static_cast<int>(parse_int(counts[1], 0, 100000));
    const int nf = static_cast<int>(parse_int(counts[2], 0, 100000));

    const int width = s.coord_dim();
    for (int v = 0; v < nv; ++v) {
        const auto& line = expect_line(lines, at++, "vertex line");
        if (static_cast<int>(line.size()) != width)
            throw parse_error(line[0].line, line[0].col,
                              "vertex line needs " + std::to_string(width) + " coordinates");
        Vec p(width);
        for (int k = 0; k < width; ++k) p[k] = parse_rat(line[k]);
        s.vertices.push_back(std::move(p));
    }
    for (int f = 0; f < nf; ++f) {
        const auto& line = expect_line(lines, at++, "facet line");
        const int k = static_cast<int>(parse_int(line[0], 1, 100000));
        if (static_cast<int>(line.size()) != k + 1)
            throw parse_error(line[0].line, line[0].col,
                              "facet line announces " + std::to_string(k) + " vertices");
        std::vector<int> facet(k);
        for (int i = 0; i < k; ++i) {
            const Token& t = line[i + 1];
            long long idx = parse_int(t, std::numeric_limits<long long>::min(),
                                      std::numeric_limits<long long>::max());
            if (idx < 0 || idx >= nv)
                throw error(errc::bad_index, "line " + std::to_string(t.line) + ", col " +
                                                 std::to_string(t.col) + ": vertex index " + t.text +
                                                 " out of range");
            facet[i] = static_cast<int>(idx);
        }
        s.facets.push_back(std::move(facet));
    }
    if (at != lines.size()) {
        const Token& t = lines[at][0];
        throw parse_error(t.line, t.col, "unexpected content after the last facet");
    }
    return s;
}

PLSurface read_surface_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw error(errc::parse_error, "cannot open '" + path + "'");
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse_surface(buf.str());
}

std::string write_surface(const PLSurface& s) {
    std::ostringstream out;
    out << "plconvex 1\n";
    out << "dim " << s.ambient_dim << "\n";
    out << "mode " << (s.mode == Mode::Spherical ? "spherical" : "euclidean") << "\n";
    out << "boundary " << (s.allow_boundary ? "allowed" : "closed") << "\n";
    out << "counts " << s.vertices.size() << " " << s.facets.size() << "\n";
    for (const auto& p : s.vertices) {
        for (size_t k = 0; k < p.size(); ++k) out << (k ? " " : "") << rat_to_string(p[k]);
        out << "\n";
    }
    for (const auto& f : s.facets) {
        out << f.size();
        for (int v : f) out << " " << v;
        out << "\n";
    }
    return out.str();
}

void write_surface_file(const std::string& path, const PLSurface& s) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw error(errc::parse_error, "cannot open '" + path + "' for writing");
    out << write_surface(s);
    if (!out) throw error(errc::parse_error, "write to '" + path + "' failed");
}

namespace {

ordered_json rat_row(const Vec& v) {
    ordered_json arr = ordered_json::array();
    for (const auto& x : v) arr.push_back(rat_to_string(x));
    return arr;
}

ordered_json halfspace_row(const Halfspace& h) {
    ordered_json arr = ordered_json::array();
    for (const auto& x : h.normal) arr.push_back(rat_to_string(Rat(x)));
    arr.push_back(rat_to_string(Rat(h.offset)));
    return arr;
}

ordered_json violations_of(const Verdict& v) {
    ordered_json arr = ordered_json::array();
    for (const auto& rv : v.local.ridge_verdicts) {
        const char* kind = nullptr;
        if (rv.kind == RidgeKind::Reflex) kind = "reflex-ridge";
        else if (!rv.orientation_consistent) kind = "orientation";
        if (!kind) continue;
        ordered_json e;
        e["face"] = rv.vertices;
        e["kind"] = kind;
        arr.push_back(e);
    }
    for (const auto& vv : v.local.vertex_verdicts) {
        if (vv.convex) continue;
        ordered_json e;
        e["face"] = std::vector<int>{vv.vertex};
        e["kind"] = "vertex";
        arr.push_back(e);
    }
    return arr;
}

ordered_json validation_of(const ValidationReport& rep) {
    ordered_json val;
    val["pseudomanifold"] = rep.pseudomanifold;
    val["connected"] = rep.connected;
    val["closed"] = rep.closed;
    val["facet_defects"] = rep.facet_defects;
    val["ridge_defects"] = rep.ridge_defects;
    val["notes"] = rep.notes;
    return val;
}

}  // namespace

std::string report_json(const Verdict& v) {
    ordered_json doc;
    doc["verdict"] = to_string(v.tag);
    if (v.witness) {
        ordered_json w;
        ordered_json hs = ordered_json::array();
        for (const auto& h : v.witness->halfspaces) hs.push_back(halfspace_row(h));
        w["halfspaces"] = hs;
        ordered_json lin = ordered_json::array();
        for (const auto& row : v.witness->lineality.rows) lin.push_back(rat_row(row));
        w["lineality"] = lin;
        doc["witness"] = w;
    } else {
        doc["witness"] = nullptr;
    }
    if (v.decomposition) {
        ordered_json d;
        d["directrix_dim"] = v.decomposition->directrix_dim;
        d["multiplicity"] = v.decomposition->multiplicity;
        doc["decomposition"] = d;
    } else {
        doc["decomposition"] = nullptr;
    }
    doc["violations"] = violations_of(v);
    doc["validation"] = validation_of(v.validation);
    if (!v.note.empty()) doc["note"] = v.note;
    doc["timings"] = ordered_json::object();
    return doc.dump(2) + "\n";
}

std::string report_text(const Verdict& v) {
    std::ostringstream out;
    out << "verdict: " << to_string(v.tag) << "\n";
    if (!v.note.empty()) out << "note: " << v.note << "\n";
    if (v.witness) {
        out << "witness: " << v.witness->halfspaces.size() << " halfspace(s), lineality dim "
            << v.witness->lineality.dim() << "\n";
        for (const auto& h : v.witness->halfspaces) {
            out << "  ";
            for (const auto& x : h.normal) out << rat_to_string(Rat(x)) << " ";
            out << "| " << rat_to_string(Rat(h.offset)) << "\n";
        }
    }
    if (v.decomposition)
        out << "decomposition: directrix_dim "
            << (v.decomposition->directrix_dim < 0 ? std::string("pointed")
                                                   : std::to_string(v.decomposition->directrix_dim))
            << ", multiplicity " << v.decomposition->multiplicity << "\n";
    if (v.violation) {
        out << "violation: " << v.violation->kind << " at face";
        for (int x : v.violation->face) out << " " << x;
        out << "\n";
    }
    out << "validation: " << (v.validation.pseudomanifold ? "pseudomanifold" : "not-pseudomanifold")
        << ", " << (v.validation.connected ? "connected" : "disconnected") << ", "
        << (v.validation.closed ? "closed" : "with-boundary") << "\n";
    return out.str();
}

}  // namespace plconvex
