#pragma once

#include <stdexcept>
#include <string>

#include "leibniz/algebra.hpp"
#include "leibniz/repn.hpp"

namespace leibniz {

/// Error raised by the parsers. line/column are 1-based and meaningful for
/// syntax errors; both are 0 for structural (semantic) errors.
class ParseError : public std::runtime_error {
public:
    explicit ParseError(const std::string& message, int line_ = 0, int column_ = 0)
        : std::runtime_error(message), line(line_), column(column_) {}

    int line = 0;
    int column = 0;
};

/// Reads an algebra definition:
///   {"name": str, "dim": int, "basis": [str...],
///    "products": [{"left": label, "right": label,
///                  "value": {label: "p" or "p/q", ...}}, ...]}
/// Products omitted are zero. Coefficients are accepted in non-reduced form
/// ("2/4", "1/-2") and canonicalized. Errors: malformed text (with line and
/// column), dim/basis mismatch, duplicate basis label, unknown label,
/// non-rational coefficient, duplicate (left, right) product entry.
AlgebraTable parse_algebra(const std::string& text);

/// Canonical rendering of an algebra definition. Products are listed in basis
/// order with only nonzero coefficients, reduced, positive denominators.
/// Round-trips bitwise: serialize(parse(s)) == s for canonical s, and
/// parse(serialize(a)) == a for every table.
std::string serialize_algebra(const AlgebraTable& a);

/// Reads a bilinear map g x g -> h:
///   {"entries": [{"left": g-label, "right": g-label,
///                 "value": {h-label: rational-string, ...}}, ...]}
/// Same error contract as parse_algebra, with labels resolved against the two
/// given algebras.
BilinearMap parse_cocycle(const std::string& text, const AlgebraTable& g, const AlgebraTable& h);

std::string serialize_cocycle(const BilinearMap& w, const AlgebraTable& g, const AlgebraTable& h);

/// File convenience wrappers; raise ParseError on unreadable paths too.
AlgebraTable load_algebra_file(const std::string& path);
void save_algebra_file(const AlgebraTable& a, const std::string& path);

}  // namespace leibniz
