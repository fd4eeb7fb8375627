#pragma once

#include <string>
#include <string_view>
#include <vector>

namespace bajra {

/// A scalar function of one variable `x` parsed from a small grammar:
/// numbers, `x`, `+ - * / ^`, unary minus, parentheses, `ln(...)`, `exp(...)`.
class Expression {
 public:
  /// Throws ParseError on malformed input.
  static Expression parse(std::string_view text);

  double operator()(double x) const;
  const std::string& text() const noexcept { return text_; }

 private:
  enum class Op { Const, Var, Add, Sub, Mul, Div, Pow, Neg, Ln, Exp };
  struct Instr {
    Op op;
    double value = 0.0;
  };
  friend class ExprParser;
  static constexpr std::size_t kMaxDepth = 64;

  std::string text_;
  std::vector<Instr> code_;  // postfix
};

}  // namespace bajra
