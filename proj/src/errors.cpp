#include "spancom/errors.hpp"

namespace spancom {

const char* error_code_name(ErrorCode code) noexcept {
    switch (code) {
        case ErrorCode::ok: return "ok";
        case ErrorCode::self_loop: return "self_loop";
        case ErrorCode::duplicate_edge: return "duplicate_edge";
        case ErrorCode::vertex_out_of_range: return "vertex_out_of_range";
        case ErrorCode::not_unicyclic: return "not_unicyclic";
        case ErrorCode::bad_cycle_length: return "bad_cycle_length";
        case ErrorCode::bad_attachment: return "bad_attachment";
        case ErrorCode::disconnected: return "disconnected";
        case ErrorCode::too_large: return "too_large";
        case ErrorCode::not_canonical: return "not_canonical";
        case ErrorCode::empty_input: return "empty_input";
        case ErrorCode::label_out_of_range: return "label_out_of_range";
        case ErrorCode::not_pure: return "not_pure";
        case ErrorCode::not_permutation: return "not_permutation";
        case ErrorCode::zero_numerator: return "zero_numerator";
        case ErrorCode::bad_params: return "bad_params";
        case ErrorCode::negative_upper: return "negative_upper";
        case ErrorCode::parse_error: return "parse_error";
        case ErrorCode::invalid_argument: return "invalid_argument";
        case ErrorCode::internal_error: return "internal_error";
    }
    return "unknown";
}

} // namespace spancom
