#include "umbral/expr.hpp"

#include <cctype>
#include <limits>

namespace umbral {

bool operator==(const ExprNode& a, const ExprNode& b) {
  if (a.kind != b.kind || a.number != b.number || a.symbol != b.symbol || a.exponent != b.exponent) return false;
  const auto same = [](const ExprPtr& x, const ExprPtr& y) { return (!x && !y) || (x && y && *x == *y); };
  return same(a.lhs, b.lhs) && same(a.rhs, b.rhs);
}

ParseError::ParseError(std::size_t offset, const std::string& message, std::vector<std::string> expected)
    : Error([&] {
        std::string text = "offset " + std::to_string(offset) + ": " + message;
        if (!expected.empty()) {
          text += " (expected one of:";
          for (const auto& e : expected) text += " " + e;
          text += ")";
        }
        return text;
      }()),
      offset_(offset),
      expected_(std::move(expected)) {}

namespace {

using Kind = ExprNode::Kind;

ExprPtr make_node(Kind kind, ExprPtr lhs = nullptr, ExprPtr rhs = nullptr) {
  auto node = std::make_shared<ExprNode>();
  node->kind = kind;
  node->lhs = std::move(lhs);
  node->rhs = std::move(rhs);
  return node;
}

enum class Sort { Series, Poly };

struct Token {
  enum class Type { Number, Ident, Plus, Minus, Star, Slash, Caret, LParen, RParen, End };
  Type type;
  std::size_t offset;
  std::string text;
};

std::vector<Token> tokenize(std::string_view input) {
  std::vector<Token> tokens;
  std::size_t i = 0;
  while (i < input.size()) {
    const char c = input[i];
    if (std::isspace(static_cast<unsigned char>(c))) {
      ++i;
      continue;
    }
    const std::size_t start = i;
    if (std::isdigit(static_cast<unsigned char>(c))) {
      while (i < input.size() && std::isdigit(static_cast<unsigned char>(input[i]))) ++i;
      tokens.push_back({Token::Type::Number, start, std::string(input.substr(start, i - start))});
      continue;
    }
    if (std::isalpha(static_cast<unsigned char>(c))) {
      while (i < input.size() && std::isalnum(static_cast<unsigned char>(input[i]))) ++i;
      tokens.push_back({Token::Type::Ident, start, std::string(input.substr(start, i - start))});
      continue;
    }
    Token::Type type;
    switch (c) {
      case '+': type = Token::Type::Plus; break;
      case '-': type = Token::Type::Minus; break;
      case '*': type = Token::Type::Star; break;
      case '/': type = Token::Type::Slash; break;
      case '^': type = Token::Type::Caret; break;
      case '(': type = Token::Type::LParen; break;
      case ')': type = Token::Type::RParen; break;
      default: throw ParseError(start, std::string("unexpected character '") + c + "'");
    }
    tokens.push_back({type, start, std::string(1, c)});
    ++i;
  }
  tokens.push_back({Token::Type::End, input.size(), ""});
  return tokens;
}

std::optional<Rational> constant_value(const ExprNode& e) {
  switch (e.kind) {
    case Kind::Number: return Rational(e.number);
    case Kind::Neg: {
      auto v = constant_value(*e.lhs);
      if (v) return Rational(-*v);
      return std::nullopt;
    }
    case Kind::Add:
    case Kind::Sub:
    case Kind::Mul:
    case Kind::Div: {
      auto a = constant_value(*e.lhs);
      auto b = constant_value(*e.rhs);
      if (!a || !b) return std::nullopt;
      if (e.kind == Kind::Add) return Rational(*a + *b);
      if (e.kind == Kind::Sub) return Rational(*a - *b);
      if (e.kind == Kind::Mul) return Rational(*a * *b);
      if (*b == 0) return std::nullopt;
      return Rational(*a / *b);
    }
    case Kind::Pow: {
      auto a = constant_value(*e.lhs);
      if (!a || (e.exponent < 0 && *a == 0)) return std::nullopt;
      const Rational mag = pow(*a, static_cast<unsigned long>(e.exponent < 0 ? -e.exponent : e.exponent));
      return e.exponent < 0 ? Rational(1 / mag) : mag;
    }
    default: return std::nullopt;
  }
}

/// q when e is structurally q*t.
std::optional<Rational> linear_coefficient(const ExprNode& e) {
  switch (e.kind) {
    case Kind::Symbol: return e.symbol == 't' ? std::optional<Rational>(1) : std::nullopt;
    case Kind::Neg: {
      auto v = linear_coefficient(*e.lhs);
      if (v) return Rational(-*v);
      return std::nullopt;
    }
    case Kind::Add:
    case Kind::Sub: {
      auto a = linear_coefficient(*e.lhs);
      auto b = linear_coefficient(*e.rhs);
      if (!a || !b) return std::nullopt;
      return e.kind == Kind::Add ? Rational(*a + *b) : Rational(*a - *b);
    }
    case Kind::Mul: {
      if (auto c = constant_value(*e.lhs)) {
        if (auto l = linear_coefficient(*e.rhs)) return Rational(*c * *l);
      }
      if (auto c = constant_value(*e.rhs)) {
        if (auto l = linear_coefficient(*e.lhs)) return Rational(*c * *l);
      }
      return std::nullopt;
    }
    case Kind::Div: {
      auto c = constant_value(*e.rhs);
      auto l = linear_coefficient(*e.lhs);
      if (c && l && *c != 0) return Rational(*l / *c);
      return std::nullopt;
    }
    default: return std::nullopt;
  }
}

bool mentions_symbol(const ExprNode& e) {
  if (e.kind == Kind::Symbol || e.kind == Kind::Exp) return true;
  return (e.lhs && mentions_symbol(*e.lhs)) || (e.rhs && mentions_symbol(*e.rhs));
}

class Parser {
 public:
  Parser(std::string_view input, Sort sort) : tokens_(tokenize(input)), sort_(sort) {}

  ExprPtr parse() {
    ExprPtr root = expr();
    if (peek().type != Token::Type::End) {
      throw ParseError(peek().offset, "unexpected token '" + peek().text + "'", {"+", "-", "*", "/", "^", "end of input"});
    }
    return root;
  }

 private:
  const Token& peek() const { return tokens_[pos_]; }
  const Token& next() { return tokens_[pos_++]; }

  std::string context() const { return sort_ == Sort::Series ? "series" : "polynomial"; }

  ExprPtr expr() {
    ExprPtr left = term();
    while (peek().type == Token::Type::Plus || peek().type == Token::Type::Minus) {
      const Kind kind = next().type == Token::Type::Plus ? Kind::Add : Kind::Sub;
      left = make_node(kind, left, term());
    }
    return left;
  }

  ExprPtr term() {
    ExprPtr left = unary();
    while (peek().type == Token::Type::Star || peek().type == Token::Type::Slash) {
      const Token op = next();
      ExprPtr right = unary();
      if (op.type == Token::Type::Slash && sort_ == Sort::Poly && mentions_symbol(*right)) {
        throw ParseError(op.offset, "polynomial division requires a rational-literal divisor");
      }
      left = make_node(op.type == Token::Type::Star ? Kind::Mul : Kind::Div, left, right);
    }
    return left;
  }

  ExprPtr unary() {
    if (peek().type == Token::Type::Minus) {
      next();
      return make_node(Kind::Neg, unary());
    }
    return power();
  }

  ExprPtr power() {
    ExprPtr base = primary();
    while (peek().type == Token::Type::Caret) {
      next();
      bool negative = false;
      if (peek().type == Token::Type::Minus) {
        negative = true;
        next();
      }
      const Token& tok = peek();
      if (tok.type != Token::Type::Number) {
        throw ParseError(tok.offset, "non-integer exponent", {"integer literal"});
      }
      next();
      const Integer value(tok.text, 10);
      if (!value.fits_slong_p()) throw ParseError(tok.offset, "exponent too large");
      auto node = std::make_shared<ExprNode>();
      node->kind = Kind::Pow;
      node->lhs = base;
      node->exponent = negative ? -value.get_si() : value.get_si();
      base = node;
    }
    return base;
  }

  ExprPtr primary() {
    const Token tok = peek();
    switch (tok.type) {
      case Token::Type::Number: {
        next();
        auto node = std::make_shared<ExprNode>();
        node->kind = Kind::Number;
        node->number = Integer(tok.text, 10);
        return node;
      }
      case Token::Type::LParen: {
        next();
        ExprPtr inner = expr();
        expect(Token::Type::RParen, ")");
        return inner;
      }
      case Token::Type::Ident: {
        next();
        if (tok.text == "exp" && sort_ == Sort::Series) return exp_call(tok);
        const char wanted = sort_ == Sort::Series ? 't' : 'x';
        if (tok.text.size() == 1 && tok.text[0] == wanted) {
          auto node = std::make_shared<ExprNode>();
          node->kind = Kind::Symbol;
          node->symbol = wanted;
          return node;
        }
        throw ParseError(tok.offset, "unknown symbol " + tok.text + " in " + context() + " context");
      }
      default: {
        std::vector<std::string> expected = {"integer literal", "(", "-"};
        expected.emplace_back(sort_ == Sort::Series ? "t" : "x");
        if (sort_ == Sort::Series) expected.emplace_back("exp");
        throw ParseError(tok.offset, tok.type == Token::Type::End ? "unexpected end of input"
                                                                  : "unexpected token '" + tok.text + "'",
                         std::move(expected));
      }
    }
  }

  ExprPtr exp_call(const Token& name) {
    expect(Token::Type::LParen, "(");
    const std::size_t arg_offset = peek().offset;
    ExprPtr arg = expr();
    expect(Token::Type::RParen, ")");
    if (!linear_coefficient(*arg)) {
      throw ParseError(arg_offset, "exp() argument not of the form q*t");
    }
    (void)name;
    return make_node(Kind::Exp, arg);
  }

  void expect(Token::Type type, const std::string& text) {
    if (peek().type != type) {
      throw ParseError(peek().offset,
                       peek().type == Token::Type::End ? "unexpected end of input" : "unexpected token '" + peek().text + "'",
                       {text});
    }
    next();
  }

  std::vector<Token> tokens_;
  std::size_t pos_ = 0;
  Sort sort_;
};

int precedence(const ExprNode& e) {
  switch (e.kind) {
    case Kind::Add:
    case Kind::Sub: return 1;
    case Kind::Mul:
    case Kind::Div: return 2;
    case Kind::Neg: return 3;
    case Kind::Pow: return 4;
    default: return 5;
  }
}

std::string wrap_if(const ExprNode& e, bool parens) {
  const std::string inner = to_string(e);
  return parens ? "(" + inner + ")" : inner;
}

// Series evaluation at a fixed working precision.
TruncatedSeries eval_series(const ExprNode& e, std::size_t n) {
  switch (e.kind) {
    case Kind::Number: return TruncatedSeries::constant(Rational(e.number), n);
    case Kind::Symbol: return TruncatedSeries::t(n);
    case Kind::Exp: return exp_series(*linear_coefficient(*e.lhs), n);
    case Kind::Neg: return -eval_series(*e.lhs, n);
    case Kind::Add: return eval_series(*e.lhs, n) + eval_series(*e.rhs, n);
    case Kind::Sub: return eval_series(*e.lhs, n) - eval_series(*e.rhs, n);
    case Kind::Mul: return mul(eval_series(*e.lhs, n), eval_series(*e.rhs, n));
    case Kind::Div: return div(eval_series(*e.lhs, n), eval_series(*e.rhs, n));
    case Kind::Pow: {
      const TruncatedSeries base = eval_series(*e.lhs, n);
      const auto k = static_cast<unsigned>(e.exponent < 0 ? -e.exponent : e.exponent);
      const TruncatedSeries p = power(base, k);
      return e.exponent < 0 ? div(TruncatedSeries::one(p.truncation()), p) : p;
    }
  }
  throw Error("unknown expression node");
}

Polynomial eval_poly(const ExprNode& e) {
  switch (e.kind) {
    case Kind::Number: return Polynomial::constant(Rational(e.number));
    case Kind::Symbol: return Polynomial::x();
    case Kind::Neg: return -eval_poly(*e.lhs);
    case Kind::Add: return eval_poly(*e.lhs) + eval_poly(*e.rhs);
    case Kind::Sub: return eval_poly(*e.lhs) - eval_poly(*e.rhs);
    case Kind::Mul: return eval_poly(*e.lhs) * eval_poly(*e.rhs);
    case Kind::Div: {
      const Polynomial divisor = eval_poly(*e.rhs);
      if (divisor.degree().value_or(0) != 0) throw Error("polynomial division requires a rational-literal divisor");
      if (divisor.is_zero()) throw Error("division by zero");
      return (1 / divisor.coeff(0)) * eval_poly(*e.lhs);
    }
    case Kind::Pow:
      if (e.exponent < 0) throw Error("negative power of a polynomial");
      return power(eval_poly(*e.lhs), static_cast<unsigned>(e.exponent));
    case Kind::Exp: break;
  }
  throw Error("exp() is not a polynomial");
}

}  // namespace

SeriesExpr parse_series(std::string_view input) { return {Parser(input, Sort::Series).parse()}; }

PolyExpr parse_poly(std::string_view input) { return {Parser(input, Sort::Poly).parse()}; }

std::string to_string(const ExprNode& e) {
  switch (e.kind) {
    case Kind::Number: return e.number.get_str(10);
    case Kind::Symbol: return std::string(1, e.symbol);
    case Kind::Exp: return "exp(" + to_string(*e.lhs) + ")";
    case Kind::Neg: return "-" + wrap_if(*e.lhs, precedence(*e.lhs) < 3);
    case Kind::Add:
    case Kind::Sub:
      return wrap_if(*e.lhs, false) + (e.kind == Kind::Add ? " + " : " - ") + wrap_if(*e.rhs, precedence(*e.rhs) <= 1);
    case Kind::Mul:
    case Kind::Div:
      return wrap_if(*e.lhs, precedence(*e.lhs) < 2) + (e.kind == Kind::Mul ? "*" : "/") +
             wrap_if(*e.rhs, precedence(*e.rhs) <= 2);
    case Kind::Pow: return wrap_if(*e.lhs, precedence(*e.lhs) < 4) + "^" + std::to_string(e.exponent);
  }
  return {};
}

TruncatedSeries evaluate_series_expr(const SeriesExpr& e, std::size_t truncation) {
  // Each quotient by a series of order m costs m coefficients; a divisor
  // whose leading term lies beyond the window looks like zero, so those
  // are retried with more room before giving up.
  constexpr std::size_t kMaxExtra = 64;
  std::size_t extra = 0;
  while (true) {
    try {
      const TruncatedSeries s = eval_series(*e.root, truncation + extra);
      if (s.truncation() >= truncation) return s.truncated(truncation);
      extra += truncation - s.truncation();
    } catch (const Error& err) {
      if (std::string_view(err.what()) != "division by zero series" || extra >= kMaxExtra) throw;
      extra = extra == 0 ? 1 : 2 * extra;
    }
    if (extra > kMaxExtra) throw Error("series expression loses too much precision");
  }
}

Polynomial evaluate_poly_expr(const PolyExpr& e) { return eval_poly(*e.root); }

std::string poly_to_expr(const Polynomial& p) {
  if (p.is_zero()) return "0";
  std::string out;
  for (std::size_t k = p.size(); k-- > 0;) {
    const Rational& c = p.coeffs()[k];
    if (c == 0) continue;
    const bool negative = c < 0;
    const Rational mag = abs(c);
    if (out.empty()) {
      if (negative) out += "-";
    } else {
      out += negative ? " - " : " + ";
    }
    std::string monomial;
    if (k == 1) monomial = "x";
    if (k > 1) monomial = "x^" + std::to_string(k);
    if (monomial.empty()) {
      out += to_string(mag);
    } else if (mag == 1) {
      out += monomial;
    } else {
      out += to_string(mag) + "*" + monomial;
    }
  }
  return out;
}

}  // namespace umbral
