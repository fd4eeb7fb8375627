#include "bajra/expr.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <cmath>

#include "bajra/error.hpp"

namespace bajra {

class ExprParser {
 public:
  using Op = Expression::Op;

  explicit ExprParser(std::string_view s) : s_(s) {}

  std::vector<Expression::Instr> run() {
    expr();
    skip_space();
    if (pos_ != s_.size()) fail("unexpected '" + std::string(1, s_[pos_]) + "'");
    return std::move(code_);
  }

 private:
  [[noreturn]] void fail(const std::string& msg) const {
    throw Error(Errc::ParseError,
                msg + " at offset " + std::to_string(pos_) + " in \"" + std::string(s_) + "\"");
  }

  void skip_space() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }

  bool accept(char c) {
    skip_space();
    if (pos_ < s_.size() && s_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  void expect(char c) {
    if (!accept(c)) fail(std::string("expected '") + c + "'");
  }

  bool accept_word(std::string_view w) {
    skip_space();
    if (s_.substr(pos_, w.size()) != w) return false;
    const std::size_t end = pos_ + w.size();
    if (end < s_.size() && std::isalnum(static_cast<unsigned char>(s_[end]))) return false;
    pos_ = end;
    return true;
  }

  void emit(Op op, double v = 0.0) { code_.push_back({op, v}); }

  void expr() {
    term();
    for (;;) {
      if (accept('+')) {
        term();
        emit(Op::Add);
      } else if (accept('-')) {
        term();
        emit(Op::Sub);
      } else {
        return;
      }
    }
  }

  void term() {
    unary();
    for (;;) {
      if (accept('*')) {
        unary();
        emit(Op::Mul);
      } else if (accept('/')) {
        unary();
        emit(Op::Div);
      } else {
        return;
      }
    }
  }

  void unary() {
    if (accept('-')) {
      unary();
      emit(Op::Neg);
    } else if (accept('+')) {
      unary();
    } else {
      power();
    }
  }

  // right associative: 2^3^2 = 2^(3^2)
  void power() {
    primary();
    if (accept('^')) {
      unary();
      emit(Op::Pow);
    }
  }

  void primary() {
    skip_space();
    if (pos_ >= s_.size()) fail("unexpected end of expression");
    if (accept('(')) {
      expr();
      expect(')');
      return;
    }
    if (accept_word("ln")) {
      expect('(');
      expr();
      expect(')');
      emit(Op::Ln);
      return;
    }
    if (accept_word("exp")) {
      expect('(');
      expr();
      expect(')');
      emit(Op::Exp);
      return;
    }
    if (accept_word("x")) {
      emit(Op::Var);
      return;
    }
    const char c = s_[pos_];
    if (std::isdigit(static_cast<unsigned char>(c)) || c == '.') {
      double v = 0.0;
      const char* first = s_.data() + pos_;
      const auto [ptr, ec] = std::from_chars(first, s_.data() + s_.size(), v);
      if (ec != std::errc()) fail("bad number");
      pos_ += static_cast<std::size_t>(ptr - first);
      emit(Op::Const, v);
      return;
    }
    fail("unexpected '" + std::string(1, c) + "'");
  }

  std::string_view s_;
  std::size_t pos_ = 0;
  std::vector<Expression::Instr> code_;
};

Expression Expression::parse(std::string_view text) {
  Expression e;
  e.text_ = std::string(text);
  e.code_ = ExprParser(text).run();
  std::size_t depth = 0, max_depth = 0;
  for (const Instr& in : e.code_) {
    if (in.op == Op::Const || in.op == Op::Var) {
      ++depth;
    } else if (in.op != Op::Neg && in.op != Op::Ln && in.op != Op::Exp) {
      --depth;
    }
    max_depth = std::max(max_depth, depth);
  }
  if (max_depth > kMaxDepth) throw Error(Errc::ParseError, "expression nests too deeply");
  return e;
}

double Expression::operator()(double x) const {
  double stack[kMaxDepth];
  std::size_t top = 0;
  for (const Instr& in : code_) {
    switch (in.op) {
      case Op::Const: stack[top++] = in.value; break;
      case Op::Var: stack[top++] = x; break;
      case Op::Neg: stack[top - 1] = -stack[top - 1]; break;
      case Op::Ln: stack[top - 1] = std::log(stack[top - 1]); break;
      case Op::Exp: stack[top - 1] = std::exp(stack[top - 1]); break;
      default: {
        const double b = stack[--top];
        double& a = stack[top - 1];
        switch (in.op) {
          case Op::Add: a += b; break;
          case Op::Sub: a -= b; break;
          case Op::Mul: a *= b; break;
          case Op::Div: a /= b; break;
          case Op::Pow: a = std::pow(a, b); break;
          default: break;
        }
      }
    }
  }
  return stack[0];
}

}  // namespace bajra
