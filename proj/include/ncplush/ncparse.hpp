/*
 * ncparse.hpp
 * -----------
 * Text grammar for nc polynomials and the deterministic pretty-printer.
 *
 *   poly     := ["-"] term (("+"|"-") term)*
 *   term     := rational | [rational "*"?] factor ("*" factor)*
 *   factor   := atom ["'"] ["^" uint] | "(" poly ")" ["'"] ["^" uint]
 *   atom     := ("x"|"h") uint
 *   rational := int ["/" uint]
 *
 * Whitespace is insignificant. "'" binds tighter than "^", so x1'^2 is
 * (x1')^2. The alias ^T is accepted wherever "'" is; only "'" is printed.
 */
#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

#include "ncplush/freealg.hpp"

namespace ncplush {

struct ParseError : std::runtime_error {
    ParseError(const std::string& what, std::size_t pos)
        : std::runtime_error(what + " (at position " + std::to_string(pos + 1) + ")"),
          position(pos) {}
    std::size_t position;  // 0-based offset into the input text
};

// Parses `text` over variables x1..xg / h1..hg. Indices above g raise
// ParseError; powers ^n expand by repeated multiplication.
Polynomial parse(const std::string& text, int g);

// Parses with g inferred as the maximum variable index used (0 for a
// constant expression).
Polynomial parse(const std::string& text);

// Deterministic printer: terms in the fixed word order, coefficient 1
// suppressed, transposes as postfix '. parse(print(p), g) == p.
std::string print(const Polynomial& p);

}  // namespace ncplush
