#pragma once

#include "ccdet/chart.hpp"
#include "ccdet/exterior.hpp"

#include <stdexcept>
#include <string>
#include <vector>

namespace ccdet {

// Raised with a position-annotated message on malformed input.
struct ParseError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Grammar:
//   object  := term ((+|-) term)*
//   term    := [polyexpr *] basis | polyexpr
//   basis   := ('dx'|'Dx') '[' int (',' int)* ']'
//   polyexpr:= rationals, x<k>, + - * ^, parentheses
// Basis tuples are normalized by sign; mixing dx and Dx or degrees is an
// error. A bare polyexpr parses as a degree-0 form.
Object parse_object(const std::string& text, int n);

Poly parse_poly(const std::string& text, int n);
Rational parse_rational(const std::string& text);
std::vector<Rational> parse_point(const std::string& text, int n);

// Chart file format: lines "u<i> = <poly>" for the forward map, then
// either "inv x<i> = <poly>" lines or a single "FORMAL" line when no
// polynomial inverse exists. '#' starts a comment.
Chart parse_chart(const std::string& text, int n);
std::string render_chart(const Chart& chart);

std::string render_object(const Object& obj);

} // namespace ccdet
