#pragma once

#include <cstddef>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "umbral/error.hpp"
#include "umbral/polynomial.hpp"
#include "umbral/rational.hpp"
#include "umbral/series.hpp"

namespace umbral {

// Grammar shared by series and polynomial expressions:
//
//   expr     := term (('+' | '-') term)*
//   term     := unary (('*' | '/') unary)*
//   unary    := '-' unary | power
//   power    := primary ('^' exponent)*
//   exponent := ['-'] INTEGER
//   primary  := INTEGER | SYMBOL | 'exp' '(' expr ')' | '(' expr ')'
//
// Series expressions know the symbol t and exp(q*t); polynomial
// expressions know x, and only divide by constants.

struct ExprNode;
using ExprPtr = std::shared_ptr<const ExprNode>;

struct ExprNode {
  enum class Kind { Number, Symbol, Exp, Neg, Add, Sub, Mul, Div, Pow };
  Kind kind;
  Integer number;        // Number
  char symbol = 0;       // Symbol: 't' or 'x'
  long exponent = 0;     // Pow
  ExprPtr lhs;           // operand of Neg, Exp and Pow; left operand otherwise
  ExprPtr rhs;
};

bool operator==(const ExprNode& a, const ExprNode& b);

struct SeriesExpr {
  ExprPtr root;
};

struct PolyExpr {
  ExprPtr root;
};

/// Diagnostic with the byte offset of the offending input and the tokens
/// the parser would have accepted there.
class ParseError : public Error {
 public:
  ParseError(std::size_t offset, const std::string& message, std::vector<std::string> expected = {});

  std::size_t offset() const { return offset_; }
  const std::vector<std::string>& expected() const { return expected_; }

 private:
  std::size_t offset_;
  std::vector<std::string> expected_;
};

SeriesExpr parse_series(std::string_view input);
PolyExpr parse_poly(std::string_view input);

/// Minimal-parenthesis rendering that parses back to the same tree.
std::string to_string(const ExprNode& node);
inline std::string to_string(const SeriesExpr& e) { return to_string(*e.root); }
inline std::string to_string(const PolyExpr& e) { return to_string(*e.root); }

/// Evaluates modulo t^(N+1). Quotients lose precision to the pole shift,
/// so the evaluator raises its working precision until N coefficients
/// survive.
TruncatedSeries evaluate_series_expr(const SeriesExpr& e, std::size_t truncation);

Polynomial evaluate_poly_expr(const PolyExpr& e);

/// Renders p as an expression parse_poly() accepts, highest degree first,
/// e.g. "x^3 - 3/2*x^2 + 1/4".
std::string poly_to_expr(const Polynomial& p);

}  // namespace umbral
