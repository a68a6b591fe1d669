#include "adscmc/expr.hpp"

#include <cctype>
#include <charconv>
#include <cmath>
#include <cstdio>
#include <numbers>

#include "adscmc/errors.hpp"

namespace adscmc {

namespace {

using NodePtr = std::shared_ptr<const ExprNode>;
using Kind = ExprNode::Kind;

struct FuncEntry {
  const char* name;
  Func f;
};

constexpr FuncEntry kFuncs[] = {
    {"sin", Func::Sin},   {"cos", Func::Cos}, {"sinh", Func::Sinh},
    {"cosh", Func::Cosh}, {"tanh", Func::Tanh}, {"exp", Func::Exp},
    {"ln", Func::Ln},     {"sqrt", Func::Sqrt}, {"abs", Func::Abs},
};

NodePtr make_number(double v) {
  auto n = std::make_shared<ExprNode>();
  n->kind = Kind::Number;
  n->value = v;
  return n;
}

NodePtr make_node(Kind k, NodePtr lhs, NodePtr rhs = nullptr) {
  auto n = std::make_shared<ExprNode>();
  n->kind = k;
  n->lhs = std::move(lhs);
  n->rhs = std::move(rhs);
  return n;
}

class Parser {
public:
  Parser(std::string_view src, const std::vector<std::string>& vars, bool allow_pi)
      : s_(src), vars_(vars), allow_pi_(allow_pi) {}

  NodePtr run() {
    skip();
    if (pos_ >= s_.size()) throw ParseError("empty expression", pos_);
    NodePtr e = expr();
    skip();
    if (pos_ < s_.size()) throw ParseError(std::string("unexpected '") + s_[pos_] + "'", pos_);
    return e;
  }

private:
  void skip() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }

  bool accept(char c) {
    skip();
    if (pos_ < s_.size() && s_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  NodePtr expr() {
    NodePtr lhs = term();
    for (;;) {
      if (accept('+'))
        lhs = make_node(Kind::Add, lhs, term());
      else if (accept('-'))
        lhs = make_node(Kind::Sub, lhs, term());
      else
        return lhs;
    }
  }

  NodePtr term() {
    NodePtr lhs = unary();
    for (;;) {
      if (accept('*'))
        lhs = make_node(Kind::Mul, lhs, unary());
      else if (accept('/'))
        lhs = make_node(Kind::Div, lhs, unary());
      else
        return lhs;
    }
  }

  NodePtr unary() {
    if (accept('-')) return make_node(Kind::Neg, unary());
    return power();
  }

  NodePtr power() {
    NodePtr base = primary();
    if (accept('^')) return make_node(Kind::Pow, base, unary());
    return base;
  }

  NodePtr primary() {
    skip();
    if (pos_ >= s_.size()) throw ParseError("unexpected end of input", pos_);
    char c = s_[pos_];
    if (std::isdigit(static_cast<unsigned char>(c)) || c == '.') return number();
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') return identifier();
    if (accept('(')) {
      NodePtr e = expr();
      if (!accept(')')) throw ParseError("expected ')'", pos_);
      return e;
    }
    throw ParseError(std::string("unexpected '") + c + "'", pos_);
  }

  NodePtr number() {
    std::size_t start = pos_;
    auto digits = [&] {
      while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    };
    digits();
    if (pos_ < s_.size() && s_[pos_] == '.') {
      ++pos_;
      digits();
    }
    if (pos_ < s_.size() && (s_[pos_] == 'e' || s_[pos_] == 'E')) {
      std::size_t mark = pos_++;
      if (pos_ < s_.size() && (s_[pos_] == '+' || s_[pos_] == '-')) ++pos_;
      if (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_])))
        digits();
      else
        pos_ = mark;
    }
    double v = 0.0;
    auto res = std::from_chars(s_.data() + start, s_.data() + pos_, v);
    if (res.ec != std::errc() || res.ptr != s_.data() + pos_)
      throw ParseError("malformed number", start);
    return make_number(v);
  }

  NodePtr identifier() {
    std::size_t start = pos_;
    while (pos_ < s_.size() &&
           (std::isalnum(static_cast<unsigned char>(s_[pos_])) || s_[pos_] == '_'))
      ++pos_;
    std::string name(s_.substr(start, pos_ - start));
    for (std::size_t i = 0; i < vars_.size(); ++i) {
      if (vars_[i] == name) {
        auto n = std::make_shared<ExprNode>();
        n->kind = Kind::Variable;
        n->var = static_cast<int>(i);
        return n;
      }
    }
    for (const auto& fe : kFuncs) {
      if (name == fe.name) {
        if (!accept('(')) throw ParseError("expected '(' after " + name, pos_);
        NodePtr arg = expr();
        if (!accept(')')) throw ParseError("expected ')'", pos_);
        auto n = std::make_shared<ExprNode>();
        n->kind = Kind::Call;
        n->func = fe.f;
        n->lhs = arg;
        return n;
      }
    }
    if (allow_pi_ && name == "pi") return make_number(std::numbers::pi);
    throw UnknownIdentifier(name, start);
  }

  std::string_view s_;
  const std::vector<std::string>& vars_;
  bool allow_pi_;
  std::size_t pos_ = 0;
};

struct Dual {
  double v, d;
};

double apply(Func f, double x) {
  switch (f) {
    case Func::Sin: return std::sin(x);
    case Func::Cos: return std::cos(x);
    case Func::Sinh: return std::sinh(x);
    case Func::Cosh: return std::cosh(x);
    case Func::Tanh: return std::tanh(x);
    case Func::Exp: return std::exp(x);
    case Func::Ln: return std::log(x);
    case Func::Sqrt: return std::sqrt(x);
    case Func::Abs: return std::abs(x);
  }
  return 0.0;
}

double apply_d(Func f, double x) {
  switch (f) {
    case Func::Sin: return std::cos(x);
    case Func::Cos: return -std::sin(x);
    case Func::Sinh: return std::cosh(x);
    case Func::Cosh: return std::sinh(x);
    case Func::Tanh: {
      double c = std::cosh(x);
      return 1.0 / (c * c);
    }
    case Func::Exp: return std::exp(x);
    case Func::Ln: return 1.0 / x;
    case Func::Sqrt: return 0.5 / std::sqrt(x);
    case Func::Abs: return x > 0.0 ? 1.0 : (x < 0.0 ? -1.0 : 0.0);
  }
  return 0.0;
}

double eval_node(const ExprNode& n, std::span<const double> a) {
  switch (n.kind) {
    case Kind::Number: return n.value;
    case Kind::Variable: return a[n.var];
    case Kind::Neg: return -eval_node(*n.lhs, a);
    case Kind::Add: return eval_node(*n.lhs, a) + eval_node(*n.rhs, a);
    case Kind::Sub: return eval_node(*n.lhs, a) - eval_node(*n.rhs, a);
    case Kind::Mul: return eval_node(*n.lhs, a) * eval_node(*n.rhs, a);
    case Kind::Div: return eval_node(*n.lhs, a) / eval_node(*n.rhs, a);
    case Kind::Pow: return std::pow(eval_node(*n.lhs, a), eval_node(*n.rhs, a));
    case Kind::Call: return apply(n.func, eval_node(*n.lhs, a));
  }
  return 0.0;
}

Dual eval_dual(const ExprNode& n, std::span<const double> a, int wrt) {
  switch (n.kind) {
    case Kind::Number: return {n.value, 0.0};
    case Kind::Variable: return {a[n.var], n.var == wrt ? 1.0 : 0.0};
    case Kind::Neg: {
      Dual x = eval_dual(*n.lhs, a, wrt);
      return {-x.v, -x.d};
    }
    case Kind::Add: {
      Dual x = eval_dual(*n.lhs, a, wrt), y = eval_dual(*n.rhs, a, wrt);
      return {x.v + y.v, x.d + y.d};
    }
    case Kind::Sub: {
      Dual x = eval_dual(*n.lhs, a, wrt), y = eval_dual(*n.rhs, a, wrt);
      return {x.v - y.v, x.d - y.d};
    }
    case Kind::Mul: {
      Dual x = eval_dual(*n.lhs, a, wrt), y = eval_dual(*n.rhs, a, wrt);
      return {x.v * y.v, x.d * y.v + x.v * y.d};
    }
    case Kind::Div: {
      Dual x = eval_dual(*n.lhs, a, wrt), y = eval_dual(*n.rhs, a, wrt);
      return {x.v / y.v, (x.d * y.v - x.v * y.d) / (y.v * y.v)};
    }
    case Kind::Pow: {
      Dual x = eval_dual(*n.lhs, a, wrt), y = eval_dual(*n.rhs, a, wrt);
      double p = std::pow(x.v, y.v);
      double d = 0.0;
      if (x.d != 0.0) d += y.v * std::pow(x.v, y.v - 1.0) * x.d;
      if (y.d != 0.0) d += p * std::log(x.v) * y.d;
      return {p, d};
    }
    case Kind::Call: {
      Dual x = eval_dual(*n.lhs, a, wrt);
      return {apply(n.func, x.v), apply_d(n.func, x.v) * x.d};
    }
  }
  return {0.0, 0.0};
}

void print_node(const ExprNode& n, const std::vector<std::string>& vars, std::string& out) {
  auto bin = [&](const char* op) {
    out += '(';
    print_node(*n.lhs, vars, out);
    out += op;
    print_node(*n.rhs, vars, out);
    out += ')';
  };
  switch (n.kind) {
    case Kind::Number: {
      char buf[32];
      std::snprintf(buf, sizeof buf, "%.17g", n.value);
      out += buf;
      return;
    }
    case Kind::Variable: out += vars[n.var]; return;
    case Kind::Neg:
      out += "(-";
      print_node(*n.lhs, vars, out);
      out += ')';
      return;
    case Kind::Add: bin(" + "); return;
    case Kind::Sub: bin(" - "); return;
    case Kind::Mul: bin(" * "); return;
    case Kind::Div: bin(" / "); return;
    case Kind::Pow: bin(" ^ "); return;
    case Kind::Call:
      out += func_name(n.func);
      out += '(';
      print_node(*n.lhs, vars, out);
      out += ')';
      return;
  }
}

bool depends(const ExprNode& n, int var) {
  if (n.kind == Kind::Variable) return n.var == var;
  return (n.lhs && depends(*n.lhs, var)) || (n.rhs && depends(*n.rhs, var));
}

}  // namespace

const char* func_name(Func f) {
  for (const auto& fe : kFuncs)
    if (fe.f == f) return fe.name;
  return "?";
}

bool same_tree(const ExprNode& a, const ExprNode& b) {
  if (a.kind != b.kind) return false;
  switch (a.kind) {
    case Kind::Number: return a.value == b.value;
    case Kind::Variable: return a.var == b.var;
    case Kind::Call:
      if (a.func != b.func) return false;
      break;
    default: break;
  }
  if (static_cast<bool>(a.lhs) != static_cast<bool>(b.lhs)) return false;
  if (static_cast<bool>(a.rhs) != static_cast<bool>(b.rhs)) return false;
  if (a.lhs && !same_tree(*a.lhs, *b.lhs)) return false;
  if (a.rhs && !same_tree(*a.rhs, *b.rhs)) return false;
  return true;
}

Expr::Expr() : root_(make_number(0.0)) {}

double Expr::eval(std::span<const double> args) const {
  double v = eval_node(*root_, args);
  if (!std::isfinite(v)) throw EvaluationError("non-finite value from " + print());
  return v;
}

std::pair<double, double> Expr::eval_d(std::span<const double> args, int wrt) const {
  Dual r = eval_dual(*root_, args, wrt);
  if (!std::isfinite(r.v) || !std::isfinite(r.d))
    throw EvaluationError("non-finite value or derivative from " + print());
  return {r.v, r.d};
}

std::string Expr::print() const {
  std::string out;
  print_node(*root_, vars_, out);
  return out;
}

bool Expr::depends_on(int var) const { return depends(*root_, var); }

bool operator==(const Expr& a, const Expr& b) {
  return a.vars_ == b.vars_ && same_tree(*a.root_, *b.root_);
}

Expr parse_expression(std::string_view src, const std::vector<std::string>& vars,
                      bool allow_pi) {
  Expr e;
  e.vars_ = vars;
  e.root_ = Parser(src, vars, allow_pi).run();
  return e;
}

}  // namespace adscmc
