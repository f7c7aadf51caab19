#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "zinbiel/linalg.hpp"

namespace zinbiel {

/* One failing basis tuple of a checked identity, with the exact residual. */
struct Violation {
    std::vector<std::size_t> at;
    Vec residual;
};

struct ConditionReport {
    std::string id;
    /* Informational conditions are recorded (e.g. variant readings of an
     * identity) but do not affect pass/fail. */
    bool informational = false;
    std::vector<Violation> violations;

    bool ok() const { return violations.empty(); }
};

struct CheckReport {
    std::string subject;
    std::vector<ConditionReport> conditions;

    bool pass() const {
        for (const auto& c : conditions)
            if (!c.informational && !c.ok()) return false;
        return true;
    }
    const ConditionReport* find(std::string_view id) const {
        for (const auto& c : conditions)
            if (c.id == id) return &c;
        return nullptr;
    }
};

/* Thrown when an operation's input fails a prerequisite checker; carries the
 * failing report so callers can surface the violations. */
class precondition_error : public std::runtime_error {
public:
    precondition_error(const std::string& what, CheckReport failed)
        : std::runtime_error(what), report(std::move(failed)) {}
    CheckReport report;
};

inline void require_pass(const CheckReport& r, const std::string& context) {
    if (!r.pass()) throw precondition_error(context + ": input fails " + r.subject + " checker", r);
}

} // namespace zinbiel
