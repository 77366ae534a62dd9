#pragma once

#include <stdexcept>
#include <string>

namespace qseries {

enum class Errc {
    invalid_precision,
    invalid_argument,
    non_unit,
    unbounded_z_support,
    division_by_zero_series,
    insufficient_window,
    negative_exponent,
    order_mismatch,
    unknown_id,
    invalid_params,
    syntax_error,
    exponent_overflow,
};

const char* errc_name(Errc code);

class Error : public std::runtime_error {
public:
    Error(Errc code, const std::string& what)
        : std::runtime_error(std::string(errc_name(code)) + ": " + what), code_(code) {}

    Errc code() const noexcept { return code_; }

private:
    Errc code_;
};

}  // namespace qseries
