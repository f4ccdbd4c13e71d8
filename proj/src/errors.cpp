#include "plconvex/errors.hpp"

namespace plconvex {

const char* errc_name(errc c) {
    switch (c) {
        case errc::dimension_mismatch: return "DimensionMismatch";
        case errc::degenerate: return "Degenerate";
        case errc::zero_vector: return "ZeroVector";
        case errc::not_pseudomanifold: return "NotPseudomanifold";
        case errc::face_not_found: return "FaceNotFound";
        case errc::degenerate_star: return "DegenerateStar";
        case errc::non_generic_probe: return "NonGenericProbe";
        case errc::boundary_ridge: return "BoundaryRidge";
        case errc::hull_failure: return "HullFailure";
        case errc::internal_inconsistency: return "InternalInconsistency";
        case errc::degenerate_section: return "DegenerateSection";
        case errc::input_inside_s: return "InputInsideS";
        case errc::parse_error: return "Syntax";
        case errc::bad_index: return "BadIndex";
        case errc::bad_rational: return "BadRational";
        case errc::bad_params: return "BadParams";
        case errc::unsupported: return "Unsupported";
    }
    return "Unknown";
}

}  // namespace plconvex
