#pragma once

#include <string>
#include <vector>

#include "saitoforge/cycnum.hpp"

namespace sf::cli {

// Exact rational such as "3", "-1/6". Throws ParseError.
CycNum parse_rational(const std::string& text);

// Field element written with rationals, i, sqrt2, sqrt3, sqrt5 and zN or
// zN^k (zeta_N), combined by + - * and parentheses, e.g. "12*i*sqrt3".
// Throws ParseError.
CycNum parse_scalar(const std::string& text);

// Comma separated list of scalars.
std::vector<CycNum> parse_vector(const std::string& text);

}  // namespace sf::cli
