#pragma once

#include <cstddef>
#include <string>
#include <utility>
#include <vector>

namespace eisen {

/// One failed check: where it happened and both sides' values.
struct CheckFailure {
    std::string where;
    std::string expected;
    std::string actual;
};

/// Outcome of a verifier. An empty failure list means the suite passed.
struct CheckReport {
    std::string name;
    std::string params;
    std::size_t checks = 0;
    std::vector<CheckFailure> failures;

    bool passed() const { return failures.empty(); }

    /// Counts one check; `describe` is only invoked on failure and returns a CheckFailure.
    template <class Describe>
    bool expect(bool ok, Describe&& describe) {
        ++checks;
        if (!ok) failures.push_back(std::forward<Describe>(describe)());
        return ok;
    }

    void merge(const CheckReport& other) {
        checks += other.checks;
        for (const auto& f : other.failures)
            failures.push_back({other.name + ": " + f.where, f.expected, f.actual});
    }
};

}  // namespace eisen
