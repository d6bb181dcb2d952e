// Text syntax for functions and differential forms.
//
//   sum     := wedge (('+' | '-') wedge)*
//   wedge   := product ('/\' product)*
//   product := unary (('*' | '/') unary)*
//   unary   := ('-' | '+') unary | power
//   power   := atom ('^' exponent)?
//   atom    := INT | 'I' | variable | differential
//            | ('Re' | 'Im' | 'd' | 'conj' | 'mirror') '(' sum ')' | '(' sum ')'
//
// Variables are z<k>, zb<k>, x<k>, y<k> (real-paired) and z<k>, w<k>
// (complexified); differentials are dz, dzb, dx, dy, dw with an index.
// The canonical printers of Poly, RatFun and DForm produce text in this
// grammar, so printing is a right inverse of parsing.
#pragma once

#include "lfk/levi.hpp"

#include <cctype>
#include <memory>
#include <variant>

namespace lfk {

class ParseError : public Error {
 public:
  ParseError(const std::string& what, std::size_t pos)
      : Error("col " + std::to_string(pos + 1) + ": " + what), pos_(pos) {}
  std::size_t position() const { return pos_; }

 private:
  std::size_t pos_;
};

struct Expr;
using ExprPtr = std::shared_ptr<const Expr>;

struct Expr {
  enum class Kind { Number, Imag, Variable, Differential, Neg, Add, Sub, Mul, Div, Wedge, Pow, Call };
  Kind kind;
  std::size_t pos = 0;
  /// Number: decimal digits. Variable/Differential: letter prefix (z, zb, dz, ...). Call: function name.
  std::string text;
  int index = 0;
  int exponent = 0;
  std::vector<ExprPtr> args;
};

namespace detail {

class Parser {
 public:
  explicit Parser(std::string_view src) : s_(src) {}

  ExprPtr parse() {
    ExprPtr e = sum();
    skip();
    if (p_ < s_.size()) fail("unexpected '" + std::string(1, s_[p_]) + "'");
    return e;
  }

 private:
  [[noreturn]] void fail(const std::string& msg) const { throw ParseError(msg, p_); }

  void skip() {
    while (p_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[p_]))) ++p_;
  }
  bool peek(std::string_view tok) {
    skip();
    return s_.substr(p_, tok.size()) == tok;
  }
  bool accept(std::string_view tok) {
    if (!peek(tok)) return false;
    p_ += tok.size();
    return true;
  }
  void expect(std::string_view tok) {
    if (!accept(tok)) fail("expected '" + std::string(tok) + "'");
  }

  static ExprPtr node(Expr::Kind k, std::size_t pos, std::vector<ExprPtr> args = {}) {
    auto e = std::make_shared<Expr>();
    e->kind = k;
    e->pos = pos;
    e->args = std::move(args);
    return e;
  }

  ExprPtr sum() {
    ExprPtr lhs = wedge();
    for (;;) {
      std::size_t at = (skip(), p_);
      if (accept("+"))
        lhs = node(Expr::Kind::Add, at, {lhs, wedge()});
      else if (accept("-"))
        lhs = node(Expr::Kind::Sub, at, {lhs, wedge()});
      else
        return lhs;
    }
  }

  ExprPtr wedge() {
    ExprPtr lhs = product();
    for (;;) {
      std::size_t at = (skip(), p_);
      if (!accept("/\\")) return lhs;
      lhs = node(Expr::Kind::Wedge, at, {lhs, product()});
    }
  }

  ExprPtr product() {
    ExprPtr lhs = unary();
    for (;;) {
      std::size_t at = (skip(), p_);
      if (accept("*")) {
        lhs = node(Expr::Kind::Mul, at, {lhs, unary()});
      } else if (peek("/") && !peek("/\\")) {
        ++p_;
        lhs = node(Expr::Kind::Div, at, {lhs, unary()});
      } else {
        return lhs;
      }
    }
  }

  ExprPtr unary() {
    std::size_t at = (skip(), p_);
    if (accept("-")) return node(Expr::Kind::Neg, at, {unary()});
    if (accept("+")) return unary();
    return power();
  }

  int integer_literal() {
    skip();
    bool neg = accept("-");
    skip();
    std::size_t start = p_;
    while (p_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[p_]))) ++p_;
    if (start == p_) fail("expected an integer exponent");
    if (p_ - start > 6) fail("exponent too large");
    int v = std::stoi(std::string(s_.substr(start, p_ - start)));
    return neg ? -v : v;
  }

  ExprPtr power() {
    ExprPtr base = atom();
    std::size_t at = (skip(), p_);
    if (!accept("^")) return base;
    int k;
    if (accept("(")) {
      k = integer_literal();
      expect(")");
    } else {
      k = integer_literal();
    }
    auto e = std::make_shared<Expr>();
    e->kind = Expr::Kind::Pow;
    e->pos = at;
    e->exponent = k;
    e->args = {base};
    return e;
  }

  ExprPtr atom() {
    skip();
    const std::size_t at = p_;
    if (p_ >= s_.size()) fail("unexpected end of input");
    const char c = s_[p_];
    if (c == '(') {
      ++p_;
      ExprPtr e = sum();
      expect(")");
      return e;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      while (p_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[p_]))) ++p_;
      auto e = std::make_shared<Expr>();
      e->kind = Expr::Kind::Number;
      e->pos = at;
      e->text = std::string(s_.substr(at, p_ - at));
      return e;
    }
    if (!std::isalpha(static_cast<unsigned char>(c))) fail("unexpected '" + std::string(1, c) + "'");
    while (p_ < s_.size() && std::isalpha(static_cast<unsigned char>(s_[p_]))) ++p_;
    std::string word(s_.substr(at, p_ - at));
    std::size_t digits = p_;
    while (p_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[p_]))) ++p_;
    std::string idx(s_.substr(digits, p_ - digits));

    if (idx.empty()) {
      if (word == "I") return node(Expr::Kind::Imag, at);
      if (word == "Re" || word == "Im" || word == "d" || word == "conj" || word == "mirror") {
        expect("(");
        auto e = std::make_shared<Expr>();
        e->kind = Expr::Kind::Call;
        e->pos = at;
        e->text = word;
        e->args = {sum()};
        expect(")");
        return e;
      }
      p_ = at;
      fail("unknown identifier '" + word + "'");
    }
    static const char* vars[] = {"z", "zb", "w", "wb", "x", "y", "u"};
    static const char* diffs[] = {"dz", "dzb", "dw", "dx", "dy"};
    auto e = std::make_shared<Expr>();
    e->pos = at;
    e->text = word;
    if (idx.size() > 6) {
      p_ = at;
      fail("index too large");
    }
    e->index = std::stoi(idx);
    if (std::find(std::begin(vars), std::end(vars), word) != std::end(vars))
      e->kind = Expr::Kind::Variable;
    else if (std::find(std::begin(diffs), std::end(diffs), word) != std::end(diffs))
      e->kind = Expr::Kind::Differential;
    else {
      p_ = at;
      fail("unknown identifier '" + word + idx + "'");
    }
    return e;
  }

  std::string_view s_;
  std::size_t p_ = 0;
};

}  // namespace detail

inline ExprPtr parse_expr(std::string_view text) { return detail::Parser(text).parse(); }

/// Result of evaluating an expression: a function or a p-form.
using Value = std::variant<RatFun, DForm>;

struct ParseContext {
  VarSpace space;
  /// Accept u<k> as the first-block variables (binary forms R(u1, u2)).
  bool u_variables = false;
};

namespace detail {

class Evaluator {
 public:
  explicit Evaluator(ParseContext ctx) : ctx_(ctx) {}

  Value eval(const Expr& e) const {
    using K = Expr::Kind;
    const VarSpace& sp = ctx_.space;
    switch (e.kind) {
      case K::Number: return RatFun::constant(sp, GaussRat(mpq_class(mpz_class(e.text))));
      case K::Imag: return RatFun::constant(sp, GaussRat::i());
      case K::Variable: return variable(e);
      case K::Differential: return differential(e);
      case K::Neg: {
        Value v = eval(*e.args[0]);
        if (auto* f = std::get_if<RatFun>(&v)) return -*f;
        return -std::get<DForm>(v);
      }
      case K::Add:
      case K::Sub: return add(e, eval(*e.args[0]), eval(*e.args[1]), e.kind == K::Sub);
      case K::Mul: return mul(e, eval(*e.args[0]), eval(*e.args[1]));
      case K::Div: {
        Value a = eval(*e.args[0]), b = eval(*e.args[1]);
        auto* den = std::get_if<RatFun>(&b);
        if (!den) fail(e, "cannot divide by a differential form");
        if (den->is_zero()) fail(e, "division by zero");
        return mul(e, a, den->inverse());
      }
      case K::Wedge: {
        DForm a = as_form(eval(*e.args[0])), b = as_form(eval(*e.args[1]));
        return wedge(a, b);
      }
      case K::Pow: {
        Value v = eval(*e.args[0]);
        auto* f = std::get_if<RatFun>(&v);
        if (!f) fail(e, "cannot raise a differential form to a power");
        if (e.exponent < 0 && f->is_zero()) fail(e, "negative power of zero");
        return f->pow(e.exponent);
      }
      case K::Call: return call(e, eval(*e.args[0]));
    }
    fail(e, "unsupported expression");
  }

 private:
  [[noreturn]] static void fail(const Expr& e, const std::string& msg) { throw ParseError(msg, e.pos); }

  bool real() const { return ctx_.space.flavor == Flavor::REAL_PAIRED; }

  int slot(const Expr& e) const {
    const int k = e.index - ctx_.space.base;
    if (k < 0 || k >= ctx_.space.n)
      fail(e, "undeclared variable index " + std::to_string(e.index) + " (dimension " + std::to_string(ctx_.space.n) +
                  ")");
    return k;
  }

  Value variable(const Expr& e) const {
    const VarSpace& sp = ctx_.space;
    const std::string& w = e.text;
    if (ctx_.u_variables != (w == "u")) fail(e, "variable '" + w + "' is not available here");
    const int k = slot(e);
    auto var = [&](int v) { return RatFun(Poly::variable(sp, v)); };
    if (w == "z" || w == "u") return var(k);
    if (real()) {
      if (w == "zb") return var(sp.n + k);
      if (w == "x") return GaussRat(mpq_class(1, 2)) * (var(k) + var(sp.n + k));
      if (w == "y") return GaussRat(0, mpq_class(-1, 2)) * (var(k) - var(sp.n + k));
    } else if (w == "w") {
      return var(sp.n + k);
    }
    fail(e, "variable '" + w + "' is not available in the " + flavor_name(sp.flavor) + " flavor");
  }

  Value differential(const Expr& e) const {
    const VarSpace& sp = ctx_.space;
    const std::string& w = e.text;
    if (ctx_.u_variables) fail(e, "differentials are not available here");
    const int k = slot(e);
    if (w == "dz") return DForm::basis(sp, k);
    if (real()) {
      if (w == "dzb") return DForm::basis(sp, sp.n + k);
      if (w == "dx") return GaussRat(mpq_class(1, 2)) * (DForm::basis(sp, k) + DForm::basis(sp, sp.n + k));
      if (w == "dy")
        return GaussRat(0, mpq_class(-1, 2)) * (DForm::basis(sp, k) - DForm::basis(sp, sp.n + k));
    } else if (w == "dw") {
      return DForm::basis(sp, sp.n + k);
    }
    fail(e, "differential '" + w + "' is not available in the " + flavor_name(sp.flavor) + " flavor");
  }

  DForm as_form(const Value& v) const {
    if (auto* f = std::get_if<RatFun>(&v)) return DForm::function(*f);
    return std::get<DForm>(v);
  }

  Value add(const Expr& e, const Value& a, const Value& b, bool subtract) const {
    auto* fa = std::get_if<RatFun>(&a);
    auto* fb = std::get_if<RatFun>(&b);
    if (fa && fb) return subtract ? *fa - *fb : *fa + *fb;
    // A literal zero is accepted as the zero form of any degree.
    if (fa && fa->is_zero()) return subtract ? -std::get<DForm>(b) : b;
    if (fb && fb->is_zero()) return a;
    if (fa || fb) fail(e, "cannot add a function and a differential form");
    const DForm &da = std::get<DForm>(a), &db = std::get<DForm>(b);
    if (da.degree() != db.degree() && !da.is_zero() && !db.is_zero())
      fail(e, "cannot add forms of degrees " + std::to_string(da.degree()) + " and " + std::to_string(db.degree()));
    if (da.is_zero()) return subtract ? -db : db;
    return subtract ? da - db : da + db;
  }

  Value mul(const Expr& e, const Value& a, const Value& b) const {
    auto* fa = std::get_if<RatFun>(&a);
    auto* fb = std::get_if<RatFun>(&b);
    if (fa && fb) return *fa * *fb;
    if (fa) return *fa * std::get<DForm>(b);
    if (fb) return *fb * std::get<DForm>(a);
    fail(e, "use /\\ to multiply differential forms");
  }

  Value call(const Expr& e, const Value& v) const {
    const std::string& fn = e.text;
    auto* f = std::get_if<RatFun>(&v);
    if (fn == "d") return f ? ext_d(*f) : ext_d(std::get<DForm>(v));
    if (fn == "mirror") {
      if (f) return mirror_fun(*f);
      return mirror_form(std::get<DForm>(v));
    }
    if (!real()) fail(e, fn + "(...) requires the real flavor");
    if (fn == "conj") {
      if (f) return conj_ratfun(*f);
      return conj_form(std::get<DForm>(v));
    }
    if (fn == "Re") {
      if (f) return real_part(*f);
      return real_part(std::get<DForm>(v));
    }
    if (fn == "Im") {
      if (f) return imag_part(*f);
      const DForm& a = std::get<DForm>(v);
      return GaussRat(0, mpq_class(-1, 2)) * (a - conj_form(a));
    }
    fail(e, "unknown function '" + fn + "'");
  }

  ParseContext ctx_;
};

}  // namespace detail

inline Value evaluate(const Expr& e, const ParseContext& ctx) { return detail::Evaluator(ctx).eval(e); }

inline Value parse_value(std::string_view text, const ParseContext& ctx) { return evaluate(*parse_expr(text), ctx); }
inline Value parse_value(std::string_view text, VarSpace space) { return parse_value(text, ParseContext{space}); }

inline RatFun parse_function(std::string_view text, const ParseContext& ctx) {
  Value v = parse_value(text, ctx);
  if (auto* f = std::get_if<RatFun>(&v)) return *f;
  const DForm& a = std::get<DForm>(v);
  if (a.is_zero()) return RatFun(ctx.space);
  throw ParseError("expected a function, got a " + std::to_string(a.degree()) + "-form", 0);
}
inline RatFun parse_function(std::string_view text, VarSpace space) { return parse_function(text, ParseContext{space}); }

inline Poly parse_poly(std::string_view text, const ParseContext& ctx) {
  RatFun f = parse_function(text, ctx);
  if (!f.is_polynomial()) throw ParseError("expected a polynomial", 0);
  return f.num();
}
inline Poly parse_poly(std::string_view text, VarSpace space) { return parse_poly(text, ParseContext{space}); }

/// Parses a p-form. A bare function is accepted only when `degree` is 0; a
/// zero function is promoted to the zero form of the requested degree.
inline DForm parse_form(std::string_view text, VarSpace space, int degree = 1) {
  Value v = parse_value(text, space);
  if (auto* f = std::get_if<RatFun>(&v)) {
    if (f->is_zero()) return DForm::zero(space, degree);
    if (degree == 0) return DForm::function(*f);
    throw ParseError("expected a " + std::to_string(degree) + "-form, got a function", 0);
  }
  DForm a = std::get<DForm>(v);
  if (a.is_zero()) return DForm::zero(space, degree);
  if (a.degree() != degree)
    throw ParseError("expected a " + std::to_string(degree) + "-form, got a " + std::to_string(a.degree()) + "-form", 0);
  return a;
}

inline std::string print(const Value& v) {
  return std::visit([](const auto& x) { return x.str(); }, v);
}

}  // namespace lfk
