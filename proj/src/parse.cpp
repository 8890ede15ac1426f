#include "virdop/parse.hpp"

#include <cctype>
#include <climits>

namespace virdop {

namespace {

struct Token {
  enum Kind { num, ident, plus, minus, star, slash, caret, lparen, rparen, end } kind;
  std::string text;
  std::size_t pos;
};

class Lexer {
  const std::string &s_;
  std::size_t i_ = 0;

public:
  explicit Lexer(const std::string &s) : s_(s) {}

  Token next() {
    while (i_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[i_]))) ++i_;
    std::size_t p = i_;
    if (i_ >= s_.size()) return {Token::end, "", p};
    char c = s_[i_];
    if (std::isdigit(static_cast<unsigned char>(c))) {
      std::size_t j = i_;
      while (j < s_.size() && std::isdigit(static_cast<unsigned char>(s_[j]))) ++j;
      Token t{Token::num, s_.substr(i_, j - i_), p};
      i_ = j;
      return t;
    }
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      std::size_t j = i_;
      while (j < s_.size() &&
             (std::isalnum(static_cast<unsigned char>(s_[j])) || s_[j] == '_'))
        ++j;
      Token t{Token::ident, s_.substr(i_, j - i_), p};
      i_ = j;
      return t;
    }
    ++i_;
    switch (c) {
      case '+': return {Token::plus, "+", p};
      case '-': return {Token::minus, "-", p};
      case '*': return {Token::star, "*", p};
      case '/': return {Token::slash, "/", p};
      case '^': return {Token::caret, "^", p};
      case '(': return {Token::lparen, "(", p};
      case ')': return {Token::rparen, ")", p};
    }
    throw SyntaxError(p, "token", "unexpected character '" + std::string(1, c) + "'");
  }
};

// operator value plus the syntactic flag "a derivative symbol occurred here"
// and a pending O(z^k) tail precision (INT_MAX when absent)
struct Value {
  DiffOp op;
  bool used_d = false;
  int otail = INT_MAX;
};

class Parser {
  Lexer lex_;
  Token cur_;
  RingSpec ring_;

  void advance() { cur_ = lex_.next(); }

  void expect(Token::Kind k, const std::string &what) {
    if (cur_.kind != k)
      throw SyntaxError(cur_.pos, what, "expected " + what + " at position " +
                                            std::to_string(cur_.pos));
    advance();
  }

  long parse_sint() {
    bool neg = false;
    if (cur_.kind == Token::minus || cur_.kind == Token::plus) {
      neg = cur_.kind == Token::minus;
      advance();
    }
    if (cur_.kind != Token::num)
      throw SyntaxError(cur_.pos, "integer exponent", "expected integer exponent");
    long v = std::stol(cur_.text);
    advance();
    return neg ? -v : v;
  }

  Value atom() {
    switch (cur_.kind) {
      case Token::num: {
        Scalar s(GaussRat(mpq_class(cur_.text)));
        advance();
        return {DiffOp::mult(CoeffElem::from_scalar(s, ring_), ring_), false};
      }
      case Token::lparen: {
        advance();
        Value v = expr();
        expect(Token::rparen, "')'");
        return v;
      }
      case Token::ident: {
        std::string id = cur_.text;
        std::size_t pos = cur_.pos;
        advance();
        if (id == "i")
          return {DiffOp::mult(CoeffElem::from_scalar(Scalar::unit_i(), ring_), ring_), false};
        if (id == "z" || id == "q") {
          if (id[0] != ring_.var)
            throw SyntaxError(pos, "variable " + std::string(1, ring_.var),
                              "variable '" + id + "' does not belong to ring " + ring_.name());
          return {DiffOp::mult(CoeffElem::var(ring_), ring_), false};
        }
        if (id == "d" || id == "dq") {
          char want = id == "dq" ? 'q' : 'z';
          if (want != ring_.var)
            throw SyntaxError(pos, "derivative symbol",
                              "'" + id + "' does not act on ring " + ring_.name());
          return {DiffOp::d(ring_), true};
        }
        if (id == "O") {
          if (ring_.kind != RingKind::series)
            throw SyntaxError(pos, "series ring", "O(...) tails only make sense in C((z))");
          expect(Token::lparen, "'('");
          if (cur_.kind != Token::ident || cur_.text[0] != ring_.var)
            throw SyntaxError(cur_.pos, "series variable", "expected series variable in O(...)");
          advance();
          long prec = 1;
          if (cur_.kind == Token::caret) {
            advance();
            prec = parse_sint();
          }
          expect(Token::rparen, "')'");
          if (prec < LaurentTrunc::kMinSeriesPrec)
            throw SyntaxError(pos, "precision >= 4", "O-tail precision too small");
          return {DiffOp::zero(ring_), false, static_cast<int>(prec)};
        }
        Scalar p = Scalar::param(id);
        return {DiffOp::mult(CoeffElem::from_scalar(p, ring_), ring_), false};
      }
      default:
        throw SyntaxError(cur_.pos, "atom", "expected number, identifier or '('");
    }
  }

  Value factor() {
    Value v = atom();
    if (cur_.kind == Token::caret) {
      std::size_t pos = cur_.pos;
      advance();
      long e = parse_sint();
      materialize(v);
      if (v.used_d) {
        if (e < 0)
          throw SyntaxError(pos, "nonnegative exponent",
                            "negative exponents require a d-free base");
        v.op = op_pow(v.op, static_cast<unsigned>(e));
      } else {
        v.op = DiffOp::mult(order_zero(v.op, pos).pow(e), ring_);
      }
    }
    return v;
  }

  // fold a pending O-tail into the coefficients by truncation
  void materialize(Value &v) {
    if (v.otail == INT_MAX) return;
    if (v.op.is_zero()) return;  // keep the tail on pure O-values
    DiffOp r = DiffOp::zero(ring_);
    for (const auto &[j, f] : v.op.terms())
      r += DiffOp::term(CoeffElem(f.series().truncate(v.otail)), j, ring_);
    v.op = r;
    v.otail = INT_MAX;
  }

  CoeffElem order_zero(const DiffOp &p, std::size_t pos) {
    auto o = p.order();
    if (o && *o > 0)
      throw SyntaxError(pos, "d-free expression", "expected d-free expression");
    return p.coeff(0);
  }

  Value term() {
    Value v = factor();
    for (;;) {
      if (cur_.kind == Token::star) {
        advance();
        Value w = factor();
        materialize(v);
        materialize(w);
        v.op = compose(v.op, w.op);
        v.used_d |= w.used_d;
        v.otail = std::min(v.otail, w.otail);
      } else if (cur_.kind == Token::slash) {
        std::size_t pos = cur_.pos;
        advance();
        Value w = factor();
        if (w.used_d)
          throw NonCommutativeDivision("division by an expression containing d (position " +
                                       std::to_string(pos) + ")");
        materialize(v);
        materialize(w);
        if (w.otail != INT_MAX)
          throw SyntaxError(pos, "exact divisor", "cannot divide by an O(...) tail");
        v.op = compose(v.op, DiffOp::mult(order_zero(w.op, pos).inverse(), ring_));
      } else if (cur_.kind == Token::num || cur_.kind == Token::ident ||
                 cur_.kind == Token::lparen) {
        Value w = factor();  // implicit multiplication
        materialize(v);
        materialize(w);
        v.op = compose(v.op, w.op);
        v.used_d |= w.used_d;
        v.otail = std::min(v.otail, w.otail);
      } else {
        break;
      }
    }
    return v;
  }

  Value expr() {
    bool neg = false;
    if (cur_.kind == Token::plus || cur_.kind == Token::minus) {
      neg = cur_.kind == Token::minus;
      advance();
    }
    Value v = term();
    if (neg) v.op = -v.op;
    for (;;) {
      if (cur_.kind == Token::plus || cur_.kind == Token::minus) {
        bool sub = cur_.kind == Token::minus;
        advance();
        Value w = term();
        v.op = sub ? v.op - w.op : v.op + w.op;
        v.used_d |= w.used_d;
        v.otail = std::min(v.otail, w.otail);
      } else {
        break;
      }
    }
    materialize(v);
    return v;
  }

public:
  Parser(const std::string &text, RingSpec ring) : lex_(text), ring_(ring) { advance(); }

  DiffOp run(int *otail = nullptr) {
    Value v = expr();
    if (cur_.kind != Token::end)
      throw SyntaxError(cur_.pos, "end of input",
                        "unexpected trailing input at position " + std::to_string(cur_.pos));
    if (otail) *otail = v.otail;
    return v.op;
  }
};

} // namespace

DiffOp parse_op(const std::string &text, const RingSpec &ring) {
  return Parser(text, ring).run();
}

CoeffElem parse_coeff(const std::string &text, const RingSpec &ring) {
  int otail = INT_MAX;
  DiffOp p = Parser(text, ring).run(&otail);
  auto o = p.order();
  if (o && *o > 0)
    throw SyntaxError(0, "coefficient expression", "expected a d-free expression");
  if (p.is_zero() && otail != INT_MAX && ring.kind == RingKind::series) {
    RingSpec r = ring;
    r.prec = otail;
    return CoeffElem::zero(r);
  }
  return p.coeff(0);
}

Scalar parse_scalar(const std::string &text) {
  CoeffElem c = parse_coeff(text, RingSpec::rational());
  if (!c.is_constant())
    throw SyntaxError(0, "constant", "expected a constant expression");
  return c.constant_value();
}

} // namespace virdop
