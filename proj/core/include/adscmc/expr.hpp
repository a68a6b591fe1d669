#ifndef ADSCMC_EXPR_HPP
#define ADSCMC_EXPR_HPP

#include <memory>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace adscmc {

enum class Func { Sin, Cos, Sinh, Cosh, Tanh, Exp, Ln, Sqrt, Abs };

struct ExprNode {
  enum class Kind { Number, Variable, Neg, Add, Sub, Mul, Div, Pow, Call };
  Kind kind = Kind::Number;
  double value = 0.0;
  int var = -1;
  Func func = Func::Sin;
  std::shared_ptr<const ExprNode> lhs, rhs;
};

bool same_tree(const ExprNode& a, const ExprNode& b);

// Immutable expression tree over a fixed list of variable names.
class Expr {
public:
  Expr();  // the constant 0

  const ExprNode& root() const { return *root_; }
  const std::vector<std::string>& vars() const { return vars_; }

  // Throws EvaluationError when the result is not finite.
  double eval(std::span<const double> args) const;
  // Value and partial derivative with respect to variable `wrt`.
  std::pair<double, double> eval_d(std::span<const double> args, int wrt) const;

  // Fully parenthesized, numbers as %.17g.
  std::string print() const;
  bool depends_on(int var) const;

  friend bool operator==(const Expr& a, const Expr& b);

private:
  friend Expr parse_expression(std::string_view, const std::vector<std::string>&, bool);
  std::shared_ptr<const ExprNode> root_;
  std::vector<std::string> vars_;
};

// Precedence: ^ (right assoc) > unary minus > * / > + -.
// Throws ParseError (with byte offset) or UnknownIdentifier.
Expr parse_expression(std::string_view src, const std::vector<std::string>& vars,
                      bool allow_pi = true);

const char* func_name(Func f);

}  // namespace adscmc

#endif
