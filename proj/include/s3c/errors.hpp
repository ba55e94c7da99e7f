#pragma once

#include <stdexcept>
#include <string>

namespace s3c {

// Out-of-domain coordinates, ordering violations, argument ranges.
struct domain_error : std::invalid_argument {
    explicit domain_error(const std::string& msg) : std::invalid_argument(msg) {}
};

// Requested operation not supported by the chart (capability flags).
struct capability_error : std::invalid_argument {
    explicit capability_error(const std::string& msg) : std::invalid_argument(msg) {}
};

// Invalid quantum numbers; message names the violated constraint.
struct validation_error : std::invalid_argument {
    explicit validation_error(const std::string& msg) : std::invalid_argument(msg) {}
};

// Function evaluated at a pole or outside its documented reliable region.
struct range_error : std::invalid_argument {
    explicit range_error(const std::string& msg) : std::invalid_argument(msg) {}
};

// Metric degeneracy, pole proximity, nonconvergence.
struct numerical_error : std::runtime_error {
    explicit numerical_error(const std::string& msg) : std::runtime_error(msg) {}
};

}  // namespace s3c
