#pragma once

#include <stdexcept>
#include <string>

namespace fracops {

/// A fraction representation (or an operation result) acquired a zero denominator.
struct zero_denominator_error : std::domain_error {
    explicit zero_denominator_error(const std::string& what_arg = "zero denominator")
        : std::domain_error(what_arg) {}
};

/// rescale() was asked to scale a representation by zero.
struct zero_scale_error : std::domain_error {
    explicit zero_scale_error(const std::string& what_arg = "rescale by zero")
        : std::domain_error(what_arg) {}
};

} // namespace fracops
