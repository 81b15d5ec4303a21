#ifndef MONOGEN_CLI_POLYSPEC_HPP_
#define MONOGEN_CLI_POLYSPEC_HPP_

#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>

#include "monogen/intpoly.hpp"

namespace monogen::cli {

class PolySpecError : public std::invalid_argument {
 public:
  PolySpecError(const std::string& what, std::size_t position)
      : std::invalid_argument(what + " at position " + std::to_string(position)), position_(position) {}
  std::size_t position() const { return position_; }

 private:
  std::size_t position_;
};

/* Two accepted forms:
 *
 *   [c0, c1, ..., cd]     ascending coefficient list
 *   x^9 - 15x^6 + 75x^3   expression over one variable
 *
 * Expressions use integer literals, + - * ^ and parentheses; a product may
 * omit the '*' ("15x^6", "2(x+1)"). Exponents are nonnegative integer
 * literals. Any single identifier works as the variable, but only one may
 * appear. Whitespace is ignored.
 */
IntPoly parse_poly(std::string_view text);

// Same text as IntPoly::to_string, which parse_poly reads back.
std::string render_poly(const IntPoly& f);

}  // namespace monogen::cli

#endif  // MONOGEN_CLI_POLYSPEC_HPP_
