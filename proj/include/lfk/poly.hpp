// Multivariate polynomials over Q(i) in paired variables (z, zb) or (z, w).
//
// A polynomial lives in a VarSpace of complex dimension n. Its variables are
// split into two blocks of n each: the holomorphic block z_1..z_n and the
// second block, which is either the conjugates zb_1..zb_n (REAL_PAIRED) or
// independent coordinates w_1..w_n (COMPLEXIFIED). Terms are kept in a map
// ordered lexicographically on the exponent vector (z_1 > ... > z_n > second
// block), largest first, so the leading term is terms().begin().
#pragma once

#include "lfk/gauss_rat.hpp"

#include <algorithm>
#include <cstdint>
#include <functional>
#include <map>
#include <numeric>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace lfk {

enum class Flavor { REAL_PAIRED, COMPLEXIFIED };

inline const char* flavor_name(Flavor f) {
  return f == Flavor::REAL_PAIRED ? "real" : "complexified";
}

struct VarSpace {
  int n = 1;
  Flavor flavor = Flavor::REAL_PAIRED;
  /// Index printed for the first variable: 1 for affine charts (z1..zn), 0 for
  /// homogeneous coordinates (z0..z_{n-1}).
  int base = 1;

  int nvars() const { return 2 * n; }
  bool operator==(const VarSpace&) const = default;

  VarSpace with_flavor(Flavor f) const { return VarSpace{n, f, base}; }

  /// Printed name of variable slot `v` (0 <= v < 2n).
  std::string var_name(int v) const {
    int k = v % n + base;
    if (v < n) return "z" + std::to_string(k);
    return (flavor == Flavor::REAL_PAIRED ? "zb" : "w") + std::to_string(k);
  }
};

inline void require_same_space(const VarSpace& a, const VarSpace& b) {
  if (!(a == b)) throw SpaceError("operands live in different variable spaces");
}

using Exponents = std::vector<int>;

/// Lex order with the first slot most significant; greater sorts first.
struct MonomialOrder {
  bool operator()(const Exponents& a, const Exponents& b) const { return a > b; }
};

class Poly {
 public:
  using TermMap = std::map<Exponents, GaussRat, MonomialOrder>;

  Poly() = default;
  explicit Poly(VarSpace space) : space_(space) {}

  static Poly constant(VarSpace space, const GaussRat& c) {
    Poly p(space);
    if (!c.is_zero()) p.terms_.emplace(Exponents(space.nvars(), 0), c);
    return p;
  }
  static Poly one(VarSpace space) { return constant(space, GaussRat(1)); }
  static Poly variable(VarSpace space, int v) {
    Exponents e(space.nvars(), 0);
    e.at(v) = 1;
    return monomial(space, std::move(e), GaussRat(1));
  }
  static Poly monomial(VarSpace space, Exponents e, const GaussRat& c) {
    Poly p(space);
    if (!c.is_zero()) p.terms_.emplace(std::move(e), c);
    return p;
  }

  const VarSpace& space() const { return space_; }
  const TermMap& terms() const { return terms_; }
  std::size_t size() const { return terms_.size(); }

  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const {
    return terms_.empty() ||
           (terms_.size() == 1 && std::all_of(terms_.begin()->first.begin(),
                                              terms_.begin()->first.end(),
                                              [](int e) { return e == 0; }));
  }
  GaussRat constant_term() const {
    auto it = terms_.find(Exponents(space_.nvars(), 0));
    return it == terms_.end() ? GaussRat() : it->second;
  }
  const Exponents& leading_exponents() const { return terms_.begin()->first; }
  const GaussRat& leading_coeff() const { return terms_.begin()->second; }

  int total_degree() const {
    int d = -1;
    for (const auto& [e, c] : terms_) d = std::max(d, std::accumulate(e.begin(), e.end(), 0));
    return d;
  }
  int degree_in(int v) const {
    int d = -1;
    for (const auto& [e, c] : terms_) d = std::max(d, e[v]);
    return d;
  }
  bool depends_on(int v) const { return degree_in(v) > 0; }
  /// True when some term carries a variable of the second block.
  bool uses_second_block() const {
    for (const auto& [e, c] : terms_)
      for (int v = space_.n; v < space_.nvars(); ++v)
        if (e[v] > 0) return true;
    return false;
  }
  bool uses_first_block() const {
    for (const auto& [e, c] : terms_)
      for (int v = 0; v < space_.n; ++v)
        if (e[v] > 0) return true;
    return false;
  }

  /// Adds c * x^e in place.
  void add_term(const Exponents& e, const GaussRat& c) {
    if (c.is_zero()) return;
    auto [it, inserted] = terms_.try_emplace(e, c);
    if (!inserted) {
      it->second += c;
      if (it->second.is_zero()) terms_.erase(it);
    }
  }

  Poly operator-() const {
    Poly r(space_);
    for (const auto& [e, c] : terms_) r.terms_.emplace_hint(r.terms_.end(), e, -c);
    return r;
  }
  Poly& operator+=(const Poly& o) {
    require_same_space(space_, o.space_);
    for (const auto& [e, c] : o.terms_) add_term(e, c);
    return *this;
  }
  Poly& operator-=(const Poly& o) {
    require_same_space(space_, o.space_);
    for (const auto& [e, c] : o.terms_) add_term(e, -c);
    return *this;
  }
  Poly& operator*=(const GaussRat& s) {
    if (s.is_zero()) {
      terms_.clear();
      return *this;
    }
    for (auto& [e, c] : terms_) c *= s;
    return *this;
  }

  friend Poly operator+(Poly a, const Poly& b) { return a += b; }
  friend Poly operator-(Poly a, const Poly& b) { return a -= b; }
  friend Poly operator*(Poly a, const GaussRat& s) { return a *= s; }
  friend Poly operator*(const GaussRat& s, Poly a) { return a *= s; }
  friend Poly operator*(const Poly& a, const Poly& b) {
    require_same_space(a.space_, b.space_);
    Poly r(a.space_);
    Exponents e(a.space_.nvars());
    for (const auto& [ea, ca] : a.terms_)
      for (const auto& [eb, cb] : b.terms_) {
        for (std::size_t k = 0; k < e.size(); ++k) e[k] = ea[k] + eb[k];
        r.add_term(e, ca * cb);
      }
    return r;
  }
  Poly& operator*=(const Poly& o) { return *this = *this * o; }

  friend bool operator==(const Poly& a, const Poly& b) {
    return a.space_ == b.space_ && a.terms_ == b.terms_;
  }

  Poly pow(unsigned k) const {
    Poly result = one(space_), base = *this;
    while (k) {
      if (k & 1u) result *= base;
      k >>= 1u;
      if (k) base *= base;
    }
    return result;
  }

  Poly derivative(int v) const {
    Poly r(space_);
    for (const auto& [e, c] : terms_) {
      if (e[v] == 0) continue;
      Exponents f = e;
      f[v] -= 1;
      r.add_term(f, c * GaussRat(e[v]));
    }
    return r;
  }

  /// Coefficient of v^k, as a polynomial in the remaining variables.
  Poly coeff_in(int v, int k) const {
    Poly r(space_);
    for (const auto& [e, c] : terms_) {
      if (e[v] != k) continue;
      Exponents f = e;
      f[v] = 0;
      r.terms_.emplace(std::move(f), c);
    }
    return r;
  }

  /// Same polynomial with every coefficient replaced by its conjugate; the
  /// exponents are untouched.
  Poly conj_coefficients() const {
    Poly r(space_);
    for (const auto& [e, c] : terms_) r.terms_.emplace_hint(r.terms_.end(), e, c.conj());
    return r;
  }

  /// Exchanges the exponent blocks (mu, nu) -> (nu, mu) and conjugates
  /// coefficients. This is complex conjugation in REAL_PAIRED flavor and the
  /// (*)-operator in COMPLEXIFIED flavor.
  Poly swap_blocks_conj() const {
    Poly r(space_);
    const int n = space_.n;
    for (const auto& [e, c] : terms_) {
      Exponents f(e.size());
      for (int k = 0; k < n; ++k) {
        f[k] = e[n + k];
        f[n + k] = e[k];
      }
      r.terms_.emplace(std::move(f), c.conj());
    }
    return r;
  }

  /// Reinterprets the same coefficients in another flavor of the same n.
  Poly reflavored(Flavor f) const {
    Poly r = *this;
    r.space_.flavor = f;
    return r;
  }

  /// Rescales so that the leading coefficient is 1 (zero stays zero).
  Poly monic() const {
    if (is_zero()) return *this;
    return *this * leading_coeff().inverse();
  }

  /// Substitutes images[v] for variable v (images live in `target`).
  Poly compose(const std::vector<Poly>& images, VarSpace target) const {
    Poly r(target);
    for (const auto& [e, c] : terms_) {
      Poly t = constant(target, c);
      for (std::size_t v = 0; v < e.size(); ++v)
        if (e[v] > 0) t *= images.at(v).pow(static_cast<unsigned>(e[v]));
      r += t;
    }
    return r;
  }

  std::string str() const;

 private:
  VarSpace space_{};
  TermMap terms_;
};

// -------------------------------------------------------------------------
// Printing

namespace detail {

inline std::string monomial_str(const VarSpace& s, const Exponents& e) {
  std::string out;
  for (int v = 0; v < s.nvars(); ++v) {
    if (e[v] == 0) continue;
    if (!out.empty()) out += "*";
    out += s.var_name(v);
    if (e[v] > 1) out += "^" + std::to_string(e[v]);
  }
  return out;
}

}  // namespace detail

inline std::string Poly::str() const {
  if (terms_.empty()) return "0";
  std::string out;
  bool first = true;
  for (const auto& [e, c] : terms_) {
    std::string mono = detail::monomial_str(space_, e);
    GaussRat coeff = c;
    bool negative = c.is_real() && sgn(c.re()) < 0;
    if (c.is_real() == false && sgn(c.re()) == 0 && sgn(c.im()) < 0) negative = true;
    if (negative) coeff = -c;
    if (first)
      out += negative ? "-" : "";
    else
      out += negative ? " - " : " + ";
    first = false;
    if (mono.empty())
      out += coeff.str();
    else if (coeff.is_one())
      out += mono;
    else
      out += coeff.str() + "*" + mono;
  }
  return out;
}

inline std::ostream& operator<<(std::ostream& os, const Poly& p) { return os << p.str(); }

// -------------------------------------------------------------------------
// Division and gcd

/// Exact quotient a / b, or nullopt when b does not divide a.
inline std::optional<Poly> exact_div(const Poly& a, const Poly& b) {
  require_same_space(a.space(), b.space());
  if (b.is_zero()) throw DomainError("division by the zero polynomial");
  Poly q(a.space()), r = a;
  const Exponents& lb = b.leading_exponents();
  const GaussRat lc_inv = b.leading_coeff().inverse();
  Exponents t(lb.size());
  while (!r.is_zero()) {
    const Exponents& lr = r.leading_exponents();
    for (std::size_t k = 0; k < lb.size(); ++k) {
      if (lr[k] < lb[k]) return std::nullopt;
      t[k] = lr[k] - lb[k];
    }
    Poly term = Poly::monomial(a.space(), t, r.leading_coeff() * lc_inv);
    r -= term * b;
    q += term;
  }
  return q;
}

namespace detail {

inline Exponents min_exponents(const Poly& p) {
  Exponents m = p.terms().begin()->first;
  for (const auto& [e, c] : p.terms())
    for (std::size_t k = 0; k < m.size(); ++k) m[k] = std::min(m[k], e[k]);
  return m;
}

inline Poly divide_by_monomial(const Poly& p, const Exponents& m) {
  Poly r(p.space());
  for (const auto& [e, c] : p.terms()) {
    Exponents f = e;
    for (std::size_t k = 0; k < f.size(); ++k) f[k] -= m[k];
    r.add_term(f, c);
  }
  return r;
}

Poly gcd_core(const Poly& a, const Poly& b);

/// gcd of the coefficients of p viewed as a polynomial in v.
inline Poly content_in(const Poly& p, int v) {
  int d = p.degree_in(v);
  Poly g(p.space());
  for (int k = d; k >= 0; --k) {
    Poly c = p.coeff_in(v, k);
    if (c.is_zero()) continue;
    g = g.is_zero() ? c.monic() : gcd_core(g, c);
    if (g.is_constant()) return Poly::one(p.space());
  }
  return g;
}

inline Poly shift(const Poly& p, int v, int k) {
  Poly r(p.space());
  for (const auto& [e, c] : p.terms()) {
    Exponents f = e;
    f[v] += k;
    r.add_term(f, c);
  }
  return r;
}

/// Primitive polynomial remainder sequence in v; inputs primitive in v.
inline Poly primitive_prs_gcd(Poly a, Poly b, int v) {
  if (a.degree_in(v) < b.degree_in(v)) std::swap(a, b);
  while (!b.is_zero()) {
    const int db = b.degree_in(v);
    if (db == 0) return Poly::one(a.space());
    Poly lb = b.coeff_in(v, db);
    Poly r = a;
    while (!r.is_zero() && r.degree_in(v) >= db) {
      int dr = r.degree_in(v);
      Poly lr = r.coeff_in(v, dr);
      r = r * lb - shift(lr * b, v, dr - db);
    }
    if (!r.is_zero()) {
      Poly c = content_in(r, v);
      r = *exact_div(r, c);
    }
    a = std::move(b);
    b = std::move(r);
  }
  return a.monic();
}

inline Poly gcd_core(const Poly& a, const Poly& b) {
  if (a.is_zero()) return b.monic();
  if (b.is_zero()) return a.monic();
  if (a.is_constant() || b.is_constant()) return Poly::one(a.space());
  if (a.size() == 1 || b.size() == 1) {
    // gcd with a monomial is the common monomial content.
    Exponents ma = min_exponents(a), mb = min_exponents(b);
    for (std::size_t k = 0; k < ma.size(); ++k) ma[k] = std::min(ma[k], mb[k]);
    return Poly::monomial(a.space(), ma, GaussRat(1));
  }
  Exponents ma = min_exponents(a), mb = min_exponents(b), m(ma.size());
  bool has_content = false;
  for (std::size_t k = 0; k < m.size(); ++k) {
    m[k] = std::min(ma[k], mb[k]);
    has_content = has_content || ma[k] > 0 || mb[k] > 0;
  }
  if (has_content) {
    Poly g = gcd_core(divide_by_monomial(a, ma), divide_by_monomial(b, mb));
    return g * Poly::monomial(a.space(), m, GaussRat(1));
  }
  const int nv = a.space().nvars();
  // A variable present in only one operand cannot appear in the gcd.
  for (int v = 0; v < nv; ++v) {
    bool in_a = a.depends_on(v), in_b = b.depends_on(v);
    if (in_a && !in_b) return gcd_core(content_in(a, v), b);
    if (in_b && !in_a) return gcd_core(a, content_in(b, v));
  }
  int main_var = -1, best = 0;
  for (int v = 0; v < nv; ++v) {
    int d = std::max(a.degree_in(v), b.degree_in(v));
    if (d > 0 && (main_var < 0 || d < best)) {
      main_var = v;
      best = d;
    }
  }
  if (main_var < 0) return Poly::one(a.space());
  Poly ca = content_in(a, main_var), cb = content_in(b, main_var);
  Poly c = gcd_core(ca, cb);
  Poly pa = *exact_div(a, ca), pb = *exact_div(b, cb);
  Poly g = primitive_prs_gcd(std::move(pa), std::move(pb), main_var);
  return (c * g).monic();
}

}  // namespace detail

/// Greatest common divisor, normalized to leading coefficient 1.
/// gcd(0, 0) is 0.
inline Poly poly_gcd(const Poly& a, const Poly& b) {
  require_same_space(a.space(), b.space());
  return detail::gcd_core(a, b);
}

inline Poly poly_gcd(const std::vector<Poly>& ps, VarSpace space) {
  Poly g(space);
  for (const auto& p : ps) {
    g = poly_gcd(g, p);
    if (!g.is_zero() && g.is_constant()) break;
  }
  return g;
}

/// Complex conjugation of a real-paired polynomial: conjugates coefficients
/// and swaps the z / zb exponent blocks.
inline Poly conj_poly(const Poly& p) {
  if (p.space().flavor != Flavor::REAL_PAIRED)
    throw SpaceError("conj_poly requires a real-paired polynomial");
  return p.swap_blocks_conj();
}

/// Common bidegree of all terms, or nullopt when the terms are mixed.
inline std::optional<std::pair<int, int>> bidegree(const Poly& p) {
  if (p.is_zero()) throw DomainError("bidegree of the zero polynomial");
  const int n = p.space().n;
  std::optional<std::pair<int, int>> result;
  for (const auto& [e, c] : p.terms()) {
    int d1 = std::accumulate(e.begin(), e.begin() + n, 0);
    int d2 = std::accumulate(e.begin() + n, e.end(), 0);
    if (!result)
      result = std::make_pair(d1, d2);
    else if (result->first != d1 || result->second != d2)
      return std::nullopt;
  }
  return result;
}

/// True when every term has the same total degree.
inline bool is_homogeneous(const Poly& p) {
  if (p.is_zero()) return true;
  int d = -1;
  for (const auto& [e, c] : p.terms()) {
    int t = std::accumulate(e.begin(), e.end(), 0);
    if (d >= 0 && t != d) return false;
    d = t;
  }
  return true;
}

/// Square-free part: p / gcd(p, dp/dv_1, ..., dp/dv_m), monic.
inline Poly squarefree_part(const Poly& p) {
  if (p.is_constant()) return p.monic();
  Poly g = p;
  for (int v = 0; v < p.space().nvars(); ++v)
    if (p.depends_on(v)) g = poly_gcd(g, p.derivative(v));
  return exact_div(p, g)->monic();
}

}  // namespace lfk
