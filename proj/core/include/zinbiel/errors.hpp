#pragma once

#include <stdexcept>

namespace zinbiel {

/* Malformed input: unreadable file, bad JSON, schema violation, index out of
 * range, malformed rational. Maps to CLI exit code 2. */
class io_error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/* Structurally invalid request on well-formed data: unsupported degree,
 * mismatched dimensions, non-composable morphisms. Maps to exit code 2. */
class domain_error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/* Invariant breach that valid inputs cannot trigger. */
class internal_error : public std::logic_error {
public:
    using std::logic_error::logic_error;
};

} // namespace zinbiel
