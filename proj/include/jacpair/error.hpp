#pragma once

#include <stdexcept>
#include <string>

namespace jacpair {

// Stable machine-readable failure codes; these strings appear verbatim in
// CLI/JSON output, so renaming one is a breaking change.
enum class errc {
    zero_divisor,
    not_divisible,
    zero_polynomial,
    not_homogeneous,
    not_a_vertex,
    anchor_out_of_range,
    non_integral_root_power,
    zero_leading,
    leading_mismatch,
    not_commuting,
    not_proportional,
    non_constant_jacobian,
    residual_not_proportional,
    fractional_exponent_residual,
    odd_vertex,
    non_square_leading,
    precondition_violated,
    membership_failed,
    hypothesis_failed,
    sweep_violation,
    syntax_error,
    negative_exponent,
    generator_exhausted,
};

const char* errc_name(errc c);

class error : public std::runtime_error {
public:
    error(errc code, const std::string& detail)
        : std::runtime_error(std::string(errc_name(code)) + ": " + detail), code_(code) {}

    errc code() const noexcept { return code_; }
    const char* code_name() const noexcept { return errc_name(code_); }

private:
    errc code_;
};

[[noreturn]] inline void fail(errc c, const std::string& detail) { throw error(c, detail); }

} // namespace jacpair
