#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <variant>

#include "zinbiel/algebra.hpp"
#include "zinbiel/cohomology.hpp"
#include "zinbiel/dendriform.hpp"
#include "zinbiel/zinf.hpp"

namespace zinbiel {

/* One structure file, parsed. `kind` keeps the file-level tag; the kinds
 * "crossed" and "extension" both carry a CrossedModule and are told apart by
 * the tag alone. */
struct ParsedFile {
    std::string kind;
    std::optional<std::uint64_t> seed;
    std::variant<Algebra, Bimodule, TwoTermZinf, AlgebraMorphism, CrossedModule, Cochain,
                 TwoTermAinf, TwoTermDend, RotaBaxter2>
        value;
};

/* Strict parse of a structure file. Rejects unknown keys, duplicate tensor
 * entries, out-of-range indices, wrong-arity index tuples, and malformed
 * rationals; every io_error names the offending field, e.g.
 * "fixture.json: product[3].i[0]: index out of range". */
ParsedFile parse_structure(const std::string& path);

/* Same, from in-memory text; `origin` stands in for the path in messages. */
ParsedFile parse_structure_text(const std::string& text, const std::string& origin);

/* Canonical text form: keys sorted, entry lists in lexicographic index
 * order, zero entries omitted, two-space indent, trailing newline.
 * parse_structure_text(emit_structure(f)) reproduces f exactly. */
std::string emit_structure(const ParsedFile& f);

} // namespace zinbiel
