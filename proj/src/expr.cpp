#include "hodgerep/expr.hpp"

#include <cctype>
#include <vector>

#include "hodgerep/errors.hpp"

namespace hodgerep {

namespace {

class Parser {
 public:
  Parser(std::string_view text, const ExprEnv& env) : text_(text), env_(env) {}

  ExprValue run() {
    ExprValue v = ternary();
    skip();
    if (pos_ != text_.size()) fail("unexpected '" + std::string(1, text_[pos_]) + "'");
    return v;
  }

 private:
  std::string_view text_;
  const ExprEnv& env_;
  std::size_t pos_ = 0;

  [[noreturn]] void fail(const std::string& msg) const {
    throw ParseError("expression '" + std::string(text_) + "': " + msg);
  }

  void skip() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  bool eat(std::string_view tok) {
    skip();
    if (text_.substr(pos_, tok.size()) != tok) return false;
    pos_ += tok.size();
    return true;
  }

  void expect(std::string_view tok) {
    if (!eat(tok)) fail("expected '" + std::string(tok) + "'");
  }

  const Rational& num(const ExprValue& v) const {
    if (auto* q = std::get_if<Rational>(&v)) return *q;
    fail("expected a number, got string '" + std::get<std::string>(v) + "'");
  }

  static bool truthy(const Rational& q) { return q != 0; }

  ExprValue ternary() {
    ExprValue cond = logical_or();
    if (!eat("?")) return cond;
    ExprValue a = ternary();
    expect(":");
    ExprValue b = ternary();
    return truthy(num(cond)) ? a : b;
  }

  ExprValue logical_or() {
    ExprValue v = logical_and();
    while (eat("||")) {
      const bool rhs = truthy(num(logical_and()));
      v = Rational((truthy(num(v)) || rhs) ? 1 : 0);
    }
    return v;
  }

  ExprValue logical_and() {
    ExprValue v = comparison();
    while (eat("&&")) {
      const bool rhs = truthy(num(comparison()));
      v = Rational((truthy(num(v)) && rhs) ? 1 : 0);
    }
    return v;
  }

  ExprValue comparison() {
    ExprValue a = additive();
    for (std::string_view op : {"==", "!=", "<=", ">=", "<", ">"}) {
      if (!eat(op)) continue;
      ExprValue b = additive();
      if (op == "==") return Rational(a == b ? 1 : 0);
      if (op == "!=") return Rational(a != b ? 1 : 0);
      const Rational& x = num(a);
      const Rational& y = num(b);
      bool r = op == "<=" ? x <= y : op == ">=" ? x >= y : op == "<" ? x < y : x > y;
      return Rational(r ? 1 : 0);
    }
    return a;
  }

  ExprValue additive() {
    ExprValue v = multiplicative();
    for (;;) {
      if (eat("+")) {
        v = Rational(num(v) + num(multiplicative()));
      } else if (eat("-")) {
        v = Rational(num(v) - num(multiplicative()));
      } else {
        return v;
      }
    }
  }

  ExprValue multiplicative() {
    ExprValue v = unary();
    for (;;) {
      if (eat("*")) {
        v = Rational(num(v) * num(unary()));
      } else if (eat("/")) {
        const Rational d = num(unary());
        if (d == 0) fail("division by zero");
        v = Rational(num(v) / d);
      } else if (eat("%")) {
        const Rational d = num(unary());
        const Rational& a = num(v);
        if (!is_integer(a) || !is_integer(d) || d == 0) fail("% needs nonzero integers");
        BigInt r;
        mpz_fdiv_r(r.get_mpz_t(), a.get_num_mpz_t(), d.get_num_mpz_t());
        if (r < 0) r += abs(d.get_num());
        v = Rational(r);
      } else {
        return v;
      }
    }
  }

  ExprValue unary() {
    if (eat("-")) return Rational(-num(unary()));
    if (eat("!")) return Rational(truthy(num(unary())) ? 0 : 1);
    return primary();
  }

  ExprValue primary() {
    skip();
    if (pos_ >= text_.size()) fail("unexpected end");
    const char ch = text_[pos_];
    if (ch == '(') {
      ++pos_;
      ExprValue v = ternary();
      expect(")");
      return v;
    }
    if (ch == '"') {
      const std::size_t end = text_.find('"', pos_ + 1);
      if (end == std::string_view::npos) fail("unterminated string");
      std::string s(text_.substr(pos_ + 1, end - pos_ - 1));
      pos_ = end + 1;
      return s;
    }
    if (std::isdigit(static_cast<unsigned char>(ch))) {
      const std::size_t start = pos_;
      while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
      return Rational(BigInt(std::string(text_.substr(start, pos_ - start))));
    }
    if (std::isalpha(static_cast<unsigned char>(ch)) || ch == '_') {
      const std::size_t start = pos_;
      while (pos_ < text_.size() && (std::isalnum(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '_')) ++pos_;
      const std::string name(text_.substr(start, pos_ - start));
      if (eat("(")) return call(name);
      if (name == "real" || name == "complex" || name == "quaternionic") return name;
      auto it = env_.find(name);
      if (it == env_.end()) fail("unknown identifier '" + name + "'");
      return it->second;
    }
    fail("unexpected '" + std::string(1, ch) + "'");
  }

  ExprValue call(const std::string& name) {
    std::vector<Rational> args;
    if (!eat(")")) {
      do {
        args.push_back(num(ternary()));
      } while (eat(","));
      expect(")");
    }
    auto need = [&](std::size_t n) {
      if (args.size() != n) fail(name + " takes " + std::to_string(n) + " arguments");
      for (const auto& a : args)
        if (!is_integer(a) && name != "min" && name != "max") fail(name + " needs integer arguments");
    };
    if (name == "binom") {
      need(2);
      const BigInt& n = args[0].get_num();
      const BigInt& k = args[1].get_num();
      if (k < 0 || n < 0 || k > n) return Rational(0);
      BigInt r;
      mpz_bin_ui(r.get_mpz_t(), n.get_mpz_t(), k.get_ui());
      return Rational(r);
    }
    if (name == "min" || name == "max") {
      need(2);
      return name == "min" ? std::min(args[0], args[1]) : std::max(args[0], args[1]);
    }
    if (name == "pow") {
      need(2);
      if (args[1] < 0) fail("pow needs a nonnegative exponent");
      BigInt r;
      mpz_pow_ui(r.get_mpz_t(), args[0].get_num_mpz_t(), args[1].get_num().get_ui());
      return Rational(r);
    }
    fail("unknown function '" + name + "'");
  }
};

}  // namespace

ExprValue evaluate(std::string_view expr, const ExprEnv& env) { return Parser(expr, env).run(); }

Rational evaluate_number(std::string_view expr, const ExprEnv& env) {
  ExprValue v = evaluate(expr, env);
  if (auto* q = std::get_if<Rational>(&v)) return *q;
  throw ParseError("expression '" + std::string(expr) + "' is not numeric");
}

long evaluate_int(std::string_view expr, const ExprEnv& env) {
  const Rational q = evaluate_number(expr, env);
  if (!is_integer(q)) throw ParseError("expression '" + std::string(expr) + "' is not an integer: " + to_string(q));
  return q.get_num().get_si();
}

bool evaluate_bool(std::string_view expr, const ExprEnv& env) { return evaluate_number(expr, env) != 0; }

std::string evaluate_string(std::string_view expr, const ExprEnv& env) {
  ExprValue v = evaluate(expr, env);
  if (auto* s = std::get_if<std::string>(&v)) return *s;
  throw ParseError("expression '" + std::string(expr) + "' is not a string");
}

std::string expand_template(std::string_view tmpl, const ExprEnv& env) {
  std::string out;
  std::size_t pos = 0;
  while (pos < tmpl.size()) {
    const std::size_t open = tmpl.find('{', pos);
    if (open == std::string_view::npos) {
      out += tmpl.substr(pos);
      break;
    }
    const std::size_t close = tmpl.find('}', open);
    if (close == std::string_view::npos) throw ParseError("unbalanced braces in '" + std::string(tmpl) + "'");
    out += tmpl.substr(pos, open - pos);
    out += std::to_string(evaluate_int(tmpl.substr(open + 1, close - open - 1), env));
    pos = close + 1;
  }
  return out;
}

}  // namespace hodgerep
