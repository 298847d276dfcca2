#pragma once

#include <stdexcept>
#include <string>

namespace qseries {

struct QSeriesError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// inverse() needs a constant term of +1 or -1 to stay in Z[[q]].
struct NonUnitConstantTerm : QSeriesError {
    using QSeriesError::QSeriesError;
};

// dissect() called with r >= m.
struct ResidueOutOfRange : QSeriesError {
    using QSeriesError::QSeriesError;
};

// A coefficient past the truncation order was requested; the caller
// must re-expand at higher order.
struct OrderExceeded : QSeriesError {
    using QSeriesError::QSeriesError;
};

// theta_general() with monomial arguments q^s, q^t needs s + t >= 1.
struct DivergentSpec : QSeriesError {
    using QSeriesError::QSeriesError;
};

// bracket(a, b) needs 0 < a < b.
struct BadResidue : QSeriesError {
    using QSeriesError::QSeriesError;
};

// A scan or claim check was asked about indices the series does not reach.
struct InsufficientOrder : QSeriesError {
    using QSeriesError::QSeriesError;
};

// Wraps any error thrown while building a catalog entry, tagged with the
// entry id so batch runs can attribute failures.
struct BuildFailure : QSeriesError {
    BuildFailure(const std::string& entry_id, const std::string& what)
        : QSeriesError("entry " + entry_id + ": " + what), id(entry_id) {}
    std::string id;
};

} // namespace qseries
