#pragma once

#include <stdexcept>
#include <string>

namespace spancom {

enum class ErrorCode {
    ok = 0,
    self_loop,
    duplicate_edge,
    vertex_out_of_range,
    not_unicyclic,
    bad_cycle_length,
    bad_attachment,
    disconnected,
    too_large,
    not_canonical,
    empty_input,
    label_out_of_range,
    not_pure,
    not_permutation,
    zero_numerator,
    bad_params,
    negative_upper,
    parse_error,
    invalid_argument,
    internal_error,
};

const char* error_code_name(ErrorCode code) noexcept;

class Error : public std::runtime_error {
public:
    Error(ErrorCode code, const std::string& message)
        : std::runtime_error(message), code_(code) {}

    ErrorCode code() const noexcept { return code_; }

private:
    ErrorCode code_;
};

[[noreturn]] inline void raise(ErrorCode code, const std::string& message) {
    throw Error(code, message);
}

} // namespace spancom
