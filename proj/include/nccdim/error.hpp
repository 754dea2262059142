#pragma once

#include <stdexcept>
#include <string>
#include <utility>

namespace nccdim {

// Precondition violation on caller-supplied data. Carries the operation
// name and the violated precondition (including the numeric bound when one
// applies) so front ends can report it structurally.
class ValidationError : public std::runtime_error {
public:
    ValidationError(std::string op, std::string precondition, std::string detail)
        : std::runtime_error(op + ": " + detail + " (requires: " + precondition + ")"),
          op_(std::move(op)),
          precondition_(std::move(precondition)),
          detail_(std::move(detail)) {}

    const std::string& op() const noexcept { return op_; }
    const std::string& precondition() const noexcept { return precondition_; }
    const std::string& detail() const noexcept { return detail_; }

private:
    std::string op_;
    std::string precondition_;
    std::string detail_;
};

// Broken internal invariant. Reaching this is a bug, not a usage error.
class InternalError : public std::logic_error {
    using std::logic_error::logic_error;
};

// Exact arithmetic left the representable range.
class OverflowError : public std::overflow_error {
    using std::overflow_error::overflow_error;
};

} // namespace nccdim
