#include "genival/error.hpp"

namespace genival {

std::string_view to_string(errc code) noexcept
{
    switch (code) {
    case errc::malformed_interval: return "malformed-interval";
    case errc::not_invertible: return "not-invertible";
    case errc::bad_shape: return "bad-shape";
    case errc::divisor_not_positive: return "divisor-not-positive";
    case errc::centered_divisor: return "centered-divisor";
    case errc::ratio_condition_failed: return "ratio-condition-failed";
    case errc::condition_failed: return "condition-failed";
    case errc::point_divisor_degenerate: return "point-divisor-degenerate";
    case errc::division_by_zero_point: return "division-by-zero-point";
    case errc::unsupported: return "unsupported";
    case errc::inconsistent_dimensions: return "inconsistent-dimensions";
    case errc::negative_rhs: return "negative-rhs";
    case errc::invalid_basis: return "invalid-basis";
    case errc::positivity_lost: return "positivity-lost";
    case errc::parse_error: return "parse-error";
    case errc::probe_failure: return "probe-failure";
    }
    return "unknown";
}

} // namespace genival
