#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace genival {

enum class errc {
    malformed_interval,
    not_invertible,
    bad_shape,
    divisor_not_positive,
    centered_divisor,
    ratio_condition_failed,
    condition_failed,
    point_divisor_degenerate,
    division_by_zero_point,
    unsupported,
    inconsistent_dimensions,
    negative_rhs,
    invalid_basis,
    positivity_lost,
    parse_error,
    probe_failure,
};

std::string_view to_string(errc code) noexcept;

// Every domain failure in the library is reported through this type.
class error : public std::runtime_error {
public:
    error(errc code, const std::string& what)
        : std::runtime_error(what), code_(code) {}

    errc code() const noexcept { return code_; }

private:
    errc code_;
};

class parse_error : public error {
public:
    parse_error(std::size_t position, const std::string& what)
        : error(errc::parse_error, what + " at position " + std::to_string(position)),
          position_(position) {}

    std::size_t position() const noexcept { return position_; }

private:
    std::size_t position_;
};

} // namespace genival
