#pragma once

#include "opoly/rational.hpp"

#include <string>
#include <vector>

namespace opoly {

// A formula whose printed form fails the oracle, evaluated at one point in
// both forms. The residuals are measured against the oracle: either
// value - oracle value, or the recurrence residual on oracle coefficients.
struct MisprintCheck {
    std::string id;
    std::string formula;
    std::string change;  // printed form -> shipped form
    std::string point;
    Rational printed{}, corrected{};
    Rational printed_residual{}, corrected_residual{};

    bool resolved() const { return corrected_residual.is_zero() && !printed_residual.is_zero(); }
};

std::vector<MisprintCheck> misprint_checks();

// A shipped formula that disagrees with the oracle.
struct TranscriptionMismatch {
    std::string formula;
    std::string point;
    long n = 0, m = 0;
    std::string transcribed, oracle;
};

struct TranscriptionReport {
    long checks = 0;
    std::vector<TranscriptionMismatch> mismatches;
    bool ok() const { return mismatches.empty(); }
};

// Cross-checks every shipped formula family against its oracle at one
// parameter point per catalog family, 0 <= n <= n_max.
TranscriptionReport transcription_check(long n_max);

}  // namespace opoly
