#pragma once

#include <stdexcept>
#include <string>

namespace plconvex {

enum class errc {
    dimension_mismatch,
    degenerate,
    zero_vector,
    not_pseudomanifold,
    face_not_found,
    degenerate_star,
    non_generic_probe,
    boundary_ridge,
    hull_failure,
    internal_inconsistency,
    degenerate_section,
    input_inside_s,
    parse_error,
    bad_index,
    bad_rational,
    bad_params,
    unsupported,
};

const char* errc_name(errc c);

class error : public std::runtime_error {
public:
    error(errc code, const std::string& what)
        : std::runtime_error(std::string(errc_name(code)) + ": " + what), code_(code) {}
    errc code() const { return code_; }

private:
    errc code_;
};

/* Parse failures carry the 1-based source position. */
class parse_error : public error {
public:
    parse_error(int line, int col, const std::string& what)
        : error(errc::parse_error,
                "line " + std::to_string(line) + ", col " + std::to_string(col) + ": " + what),
          line_(line), col_(col) {}
    int line() const { return line_; }
    int col() const { return col_; }

private:
    int line_;
    int col_;
};

}  // namespace plconvex
