#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>

#include "zinbiel/errors.hpp"

namespace zinbiel {

/* Exact rational scalar. mpq_class keeps values canonical (lowest terms,
 * positive denominator) through arithmetic; the helpers below guarantee the
 * same for construction and text. */
using Rational = mpq_class;

inline bool is_zero(const Rational& r) { return mpq_sgn(r.get_mpq_t()) == 0; }

/* Canonical fraction from machine integers. */
inline Rational frac(long num, long den = 1) {
    if (den == 0) throw domain_error("zero denominator");
    Rational r(num, den);
    r.canonicalize();
    return r;
}

/* Strict "p" or "p/q" with optional leading '-' on either part; no
 * whitespace, no empty parts, nonzero q. */
inline Rational parse_rational(std::string_view text) {
    auto fail = [&] { throw io_error("malformed rational '" + std::string(text) + "'"); };
    auto digits_ok = [&](std::string_view part) {
        if (!part.empty() && part.front() == '-') part.remove_prefix(1);
        if (part.empty()) return false;
        for (char c : part)
            if (c < '0' || c > '9') return false;
        return true;
    };
    std::string_view num = text, den;
    if (auto slash = text.find('/'); slash != std::string_view::npos) {
        num = text.substr(0, slash);
        den = text.substr(slash + 1);
        if (!digits_ok(den)) fail();
    }
    if (!digits_ok(num)) fail();
    Rational r;
    if (den.empty()) {
        r = Rational(std::string(num), 10);
    } else {
        r = Rational(std::string(num) + "/" + std::string(den), 10);
        if (mpz_sgn(r.get_den().get_mpz_t()) == 0) fail();
    }
    r.canonicalize();
    return r;
}

/* Canonical "p" or "p/q". */
inline std::string to_string(const Rational& r) { return r.get_str(); }

} // namespace zinbiel
