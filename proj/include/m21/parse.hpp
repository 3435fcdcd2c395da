#ifndef M21_PARSE_HPP
#define M21_PARSE_HPP

#include <string_view>

#include "m21/polynomial.hpp"

namespace m21 {

/// Parses the polynomial grammar: integer/rational literals (`-3`, `5/2`),
/// variables, `+ - * ^ ( )`; `*` is mandatory between factors, `^` takes a
/// nonnegative integer exponent. Errors carry the byte position.
Polynomial parse_poly(std::string_view text, const Ring& ring);

} // namespace m21

#endif
