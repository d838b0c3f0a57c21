#include "doctest.h"

#include "opoly/diagnostics.hpp"

#include <set>

using namespace opoly;

TEST_CASE("every listed misprint fails the oracle and its correction passes") {
    auto checks = misprint_checks();
    CHECK(checks.size() == 14);
    std::set<std::string> ids;
    for (const auto& c : checks) {
        INFO(c.id << " at " << c.point << ": printed " << c.printed.to_string() << " residual "
                  << c.printed_residual.to_string() << ", corrected " << c.corrected.to_string() << " residual "
                  << c.corrected_residual.to_string());
        CHECK(c.corrected_residual.is_zero());
        CHECK_FALSE(c.printed_residual.is_zero());
        CHECK(c.printed != c.corrected);
        CHECK(c.resolved());
        CHECK(ids.insert(c.id).second);
    }
}

TEST_CASE("shipped formulas agree with the oracle") {
    auto rep = transcription_check(8);
    for (const auto& m : rep.mismatches)
        INFO(m.formula << " at " << m.point << " n=" << m.n << ": " << m.transcribed << " vs " << m.oracle);
    std::string first;
    if (!rep.ok()) {
        const auto& m = rep.mismatches.front();
        first = m.formula + " at " + m.point + " n=" + std::to_string(m.n) + ": " + m.transcribed + " vs " + m.oracle;
    }
    CHECK_MESSAGE(rep.ok(), first);
    CHECK(rep.checks > 1000);
}
