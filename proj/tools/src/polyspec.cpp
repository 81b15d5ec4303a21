#include "monogen_cli/polyspec.hpp"

#include <cctype>
#include <optional>
#include <vector>

namespace monogen::cli {

namespace {

class Parser {
 public:
  explicit Parser(std::string_view text) : s_(text) {}

  IntPoly parse() {
    skip_ws();
    if (peek() == '[') return parse_list();
    if (at_end()) fail("empty polynomial");
    IntPoly f = expr();
    skip_ws();
    if (!at_end()) fail(std::string("unexpected '") + s_[pos_] + "'");
    return f;
  }

 private:
  [[noreturn]] void fail(const std::string& msg) const { throw PolySpecError(msg, pos_); }

  bool at_end() const { return pos_ >= s_.size(); }
  char peek() const { return at_end() ? '\0' : s_[pos_]; }
  void skip_ws() {
    while (!at_end() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }
  bool accept(char c) {
    skip_ws();
    if (peek() != c) return false;
    ++pos_;
    return true;
  }

  std::string digits() {
    skip_ws();
    const std::size_t start = pos_;
    while (!at_end() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    if (start == pos_) fail("expected an integer");
    return std::string(s_.substr(start, pos_ - start));
  }

  IntPoly parse_list() {
    ++pos_;
    std::vector<Integer> coeffs;
    skip_ws();
    if (accept(']')) fail("empty coefficient list");
    do {
      const bool neg = accept('-');
      if (!neg) accept('+');
      Integer c(digits());
      coeffs.push_back(neg ? Integer(-c) : c);
    } while (accept(','));
    if (!accept(']')) fail("expected ',' or ']'");
    skip_ws();
    if (!at_end()) fail("trailing input after ']'");
    return IntPoly(std::move(coeffs));
  }

  // expr := ['+'|'-'] term (('+'|'-') term)*
  IntPoly expr() {
    IntPoly acc;
    bool neg = false;
    if (accept('-')) neg = true;
    else accept('+');
    IntPoly t = term();
    acc = neg ? -t : t;
    for (;;) {
      if (accept('+')) acc += term();
      else if (accept('-')) acc -= term();
      else return acc;
    }
  }

  // term := power (['*'] power)*, with a leading '-' allowed on factors
  // after an explicit '*'.
  IntPoly term() {
    IntPoly acc = power();
    for (;;) {
      skip_ws();
      if (accept('*')) {
        if (accept('-')) acc = -(acc * power());
        else acc *= power();
      } else if (starts_primary()) {
        acc *= power();
      } else {
        return acc;
      }
    }
  }

  bool starts_primary() const {
    const char c = peek();
    return c == '(' || std::isdigit(static_cast<unsigned char>(c)) || std::isalpha(static_cast<unsigned char>(c)) ||
           c == '_';
  }

  // power := primary ['^' integer]
  IntPoly power() {
    IntPoly base = primary();
    if (!accept('^')) return base;
    const std::size_t where = pos_;
    const Integer e(digits());
    if (e > static_cast<unsigned long>(kMaxIterateDegree)) {
      pos_ = where;
      fail("exponent too large");
    }
    if (base.degree() > 0 && e * base.degree() > static_cast<unsigned long>(kMaxIterateDegree)) {
      pos_ = where;
      fail("degree too large");
    }
    return pow(base, static_cast<unsigned>(e.get_ui()));
  }

  IntPoly primary() {
    skip_ws();
    const char c = peek();
    if (c == '(') {
      ++pos_;
      IntPoly inner = expr();
      if (!accept(')')) fail("expected ')'");
      return inner;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) return IntPoly::constant(Integer(digits()));
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      const std::size_t start = pos_;
      while (!at_end() && (std::isalnum(static_cast<unsigned char>(s_[pos_])) || s_[pos_] == '_')) ++pos_;
      std::string name(s_.substr(start, pos_ - start));
      if (!var_) var_ = name;
      else if (*var_ != name) {
        pos_ = start;
        fail("second variable '" + name + "' (already using '" + *var_ + "')");
      }
      return IntPoly::x();
    }
    if (at_end()) fail("unexpected end of input");
    fail(std::string("unexpected '") + c + "'");
  }

  std::string_view s_;
  std::size_t pos_ = 0;
  std::optional<std::string> var_;
};

}  // namespace

IntPoly parse_poly(std::string_view text) { return Parser(text).parse(); }

std::string render_poly(const IntPoly& f) { return f.to_string("x"); }

}  // namespace monogen::cli
