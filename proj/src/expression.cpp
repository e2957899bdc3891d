#include "wick/expression.hpp"

#include <cctype>

#include "wick/error.hpp"

namespace wick {

namespace {

class Parser {
 public:
  Parser(std::string_view text, int dimension) : text_(text), dim_(dimension) {
    if (dimension < 1 || dimension > kMaxDim)
      throw InputError("dimension must be between 1 and " + std::to_string(kMaxDim));
  }

  RationalFunction parse() {
    RationalFunction r = expr();
    skip_space();
    if (pos_ != text_.size()) fail("unexpected character '" + std::string(1, text_[pos_]) + "'");
    return r;
  }

 private:
  [[noreturn]] void fail(const std::string& what) const {
    throw InputError("expression \"" + std::string(text_) + "\", column " +
                     std::to_string(pos_ + 1) + ": " + what);
  }

  void skip_space() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  bool accept(char c) {
    skip_space();
    if (pos_ < text_.size() && text_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  RationalFunction expr() {
    RationalFunction r = term();
    while (true) {
      if (accept('+')) {
        r += term();
      } else if (accept('-')) {
        r -= term();
      } else {
        return r;
      }
    }
  }

  RationalFunction term() {
    RationalFunction r = unary();
    while (true) {
      if (accept('*')) {
        r *= unary();
      } else if (accept('/')) {
        std::size_t at = pos_;
        RationalFunction d = unary();
        if (d.is_zero()) {
          pos_ = at;
          fail("zero divisor");
        }
        r /= d;
      } else {
        return r;
      }
    }
  }

  RationalFunction unary() {
    if (accept('-')) return -unary();
    if (accept('+')) return unary();
    return power();
  }

  RationalFunction power() {
    RationalFunction base = atom();
    if (accept('^')) {
      skip_space();
      if (pos_ >= text_.size() || !std::isdigit(static_cast<unsigned char>(text_[pos_])))
        fail("exponent must be a non-negative integer");
      unsigned long e = 0;
      while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
        e = e * 10 + static_cast<unsigned long>(text_[pos_] - '0');
        if (e > 1000) fail("exponent too large");
        ++pos_;
      }
      return base.pow(static_cast<unsigned>(e));
    }
    return base;
  }

  RationalFunction atom() {
    skip_space();
    if (pos_ >= text_.size()) fail("unexpected end of expression");
    const char c = text_[pos_];
    if (c == '(') {
      ++pos_;
      RationalFunction r = expr();
      if (!accept(')')) fail("expected ')'");
      return r;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      std::size_t start = pos_;
      while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
      return RationalFunction(Scalar(mpq_class(std::string(text_.substr(start, pos_ - start)))));
    }
    if (c == 'i') {
      ++pos_;
      if (pos_ < text_.size() && std::isalnum(static_cast<unsigned char>(text_[pos_])))
        fail("unknown identifier");
      return RationalFunction(Scalar::imaginary_unit());
    }
    if (c == 'z' || c == 'w') {
      std::size_t start = pos_++;
      int index = 0;
      bool digits = false;
      while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
        index = index * 10 + (text_[pos_] - '0');
        digits = true;
        ++pos_;
        if (index > kMaxDim) break;
      }
      if (!digits || index < 1 || index > dim_) {
        pos_ = start;
        fail("variable index out of range for dimension " + std::to_string(dim_));
      }
      return RationalFunction::variable(c == 'z' ? z_slot(index) : w_slot(index));
    }
    if (c == 'v') fail("the deformation parameter v is not allowed inside coefficients");
    fail("unexpected character '" + std::string(1, c) + "'");
  }

  std::string_view text_;
  int dim_;
  std::size_t pos_ = 0;
};

bool single_negative_term(const RationalFunction& f) {
  if (!f.den().is_one() || f.num().size() != 1) return false;
  const Scalar& c = f.num().leading_term().coef;
  if (c.is_real()) return sgn(c.re()) < 0;
  return sgn(c.re()) == 0 && sgn(c.im()) < 0;
}

std::string nu_power(int k) { return k == 1 ? "v" : "v^" + std::to_string(k); }

}  // namespace

RationalFunction parse_expression(std::string_view text, int dimension) {
  return Parser(text, dimension).parse();
}

std::string to_string(const Series<RationalFunction>& s) {
  std::string out;
  for (int k = 0; k <= s.order(); ++k) {
    const RationalFunction& c = s[k];
    if (c.is_zero()) continue;
    bool negative = false;
    std::string piece;
    if (k == 0) {
      piece = c.to_string();
      if (!out.empty()) piece = "(" + piece + ")";
    } else {
      RationalFunction mag = c;
      if (single_negative_term(c)) {
        negative = true;
        mag = -c;
      }
      if (mag.is_one()) {
        piece = nu_power(k);
      } else if (mag.needs_parentheses()) {
        piece = "(" + mag.to_string() + ")*" + nu_power(k);
      } else {
        piece = mag.to_string() + "*" + nu_power(k);
      }
    }
    if (out.empty()) {
      out = negative ? "-" + piece : piece;
    } else {
      out += negative ? " - " : " + ";
      out += piece;
    }
  }
  return out.empty() ? "0" : out;
}

}  // namespace wick
