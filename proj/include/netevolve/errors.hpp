#pragma once

#include <stdexcept>
#include <string>

namespace netevolve {

// Error categories surfaced by the library. The CLI maps them onto exit codes.

struct InvalidArgument : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

struct NotFound : std::out_of_range {
    using std::out_of_range::out_of_range;
};

/// A measure that has no value for the given input (empty graph, zero variance, ...).
struct UndefinedMetric : std::domain_error {
    using std::domain_error::domain_error;
};

/// Too few usable observations for a fit or a correlation.
struct InsufficientData : std::domain_error {
    using std::domain_error::domain_error;
};

struct IoError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct ParseError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Non-fatal problem found while reading input; the offending record is skipped.
struct IngestWarning {
    std::size_t record = 0;  // 1-based line (CSV/JSONL) or position in the input list
    std::string message;

    bool operator==(const IngestWarning&) const = default;
};

}  // namespace netevolve
