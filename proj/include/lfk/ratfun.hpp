// Rational functions num/den in lowest terms with a monic denominator.
#pragma once

#include "lfk/poly.hpp"

namespace lfk {

class RatFun {
 public:
  RatFun() = default;
  explicit RatFun(VarSpace space) : num_(space), den_(Poly::one(space)) {}
  RatFun(const Poly& p)  // NOLINT(google-explicit-constructor)
      : num_(p), den_(Poly::one(p.space())) {}
  /// Reduces by the gcd and rescales so that den's leading coefficient is 1.
  RatFun(const Poly& num, const Poly& den) {
    require_same_space(num.space(), den.space());
    if (den.is_zero()) throw DomainError("rational function with zero denominator");
    if (num.is_zero()) {
      num_ = Poly(num.space());
      den_ = Poly::one(num.space());
      return;
    }
    if (den.is_constant()) {
      GaussRat inv = den.leading_coeff().inverse();
      num_ = num * inv;
      den_ = Poly::one(num.space());
      return;
    }
    Poly g = poly_gcd(num, den);
    Poly n = g.is_constant() ? num : *exact_div(num, g);
    Poly d = g.is_constant() ? den : *exact_div(den, g);
    GaussRat inv = d.leading_coeff().inverse();
    num_ = n * inv;
    den_ = d * inv;
  }

  static RatFun constant(VarSpace space, const GaussRat& c) { return RatFun(Poly::constant(space, c)); }

  const Poly& num() const { return num_; }
  const Poly& den() const { return den_; }
  const VarSpace& space() const { return num_.space(); }

  bool is_zero() const { return num_.is_zero(); }
  bool is_polynomial() const { return den_.is_constant(); }
  bool is_constant() const { return num_.is_constant() && den_.is_constant(); }
  bool is_one() const { return is_constant() && num_.constant_term().is_one(); }
  bool uses_second_block() const { return num_.uses_second_block() || den_.uses_second_block(); }
  bool uses_first_block() const { return num_.uses_first_block() || den_.uses_first_block(); }

  RatFun operator-() const { return from_reduced(-num_, den_); }

  friend RatFun operator+(const RatFun& a, const RatFun& b) {
    if (a.is_zero()) return b;
    if (b.is_zero()) return a;
    if (a.den_ == b.den_) return RatFun(a.num_ + b.num_, a.den_);
    if (a.is_polynomial() && b.is_polynomial()) return from_reduced(a.num_ + b.num_, a.den_);
    Poly g = poly_gcd(a.den_, b.den_);
    Poly ad = *exact_div(a.den_, g), bd = *exact_div(b.den_, g);
    return RatFun(a.num_ * bd + b.num_ * ad, ad * b.den_);
  }
  friend RatFun operator-(const RatFun& a, const RatFun& b) { return a + (-b); }
  friend RatFun operator*(const RatFun& a, const RatFun& b) {
    if (a.is_zero() || b.is_zero()) return RatFun(a.space());
    if (a.is_polynomial() && b.is_polynomial()) return from_reduced(a.num_ * b.num_, a.den_);
    // Cross-cancel before multiplying; the result is already in lowest terms.
    Poly g1 = poly_gcd(a.num_, b.den_), g2 = poly_gcd(b.num_, a.den_);
    Poly n = *exact_div(a.num_, g1) * *exact_div(b.num_, g2);
    Poly d = *exact_div(a.den_, g2) * *exact_div(b.den_, g1);
    GaussRat inv = d.leading_coeff().inverse();
    return from_reduced(n * inv, d * inv);
  }
  friend RatFun operator*(const RatFun& a, const GaussRat& s) { return from_reduced(a.num_ * s, a.den_).fix_zero(); }
  friend RatFun operator*(const GaussRat& s, const RatFun& a) { return a * s; }

  RatFun inverse() const {
    if (is_zero()) throw DomainError("inverse of the zero rational function");
    return RatFun(den_, num_);
  }
  friend RatFun operator/(const RatFun& a, const RatFun& b) { return a * b.inverse(); }

  RatFun& operator+=(const RatFun& o) { return *this = *this + o; }
  RatFun& operator-=(const RatFun& o) { return *this = *this - o; }
  RatFun& operator*=(const RatFun& o) { return *this = *this * o; }

  friend bool operator==(const RatFun& a, const RatFun& b) { return a.num_ == b.num_ && a.den_ == b.den_; }

  RatFun pow(int k) const {
    if (k < 0) return inverse().pow(-k);
    return from_reduced(num_.pow(static_cast<unsigned>(k)), den_.pow(static_cast<unsigned>(k)));
  }

  RatFun derivative(int v) const {
    if (is_polynomial()) return from_reduced(num_.derivative(v), den_);
    return RatFun(num_.derivative(v) * den_ - num_ * den_.derivative(v), den_ * den_);
  }

  /// Applies a coefficient/exponent map that is a ring automorphism up to
  /// conjugation (conj, mirror, complexify) to numerator and denominator.
  template <class F>
  RatFun map_parts(F&& f) const {
    return RatFun(f(num_), f(den_));
  }

  std::string str() const {
    if (is_polynomial()) return num_.str();
    return "(" + num_.str() + ")/(" + den_.str() + ")";
  }

 private:
  static RatFun from_reduced(Poly n, Poly d) {
    RatFun r;
    r.num_ = std::move(n);
    r.den_ = std::move(d);
    return r;
  }
  RatFun fix_zero() const {
    if (num_.is_zero()) return RatFun(num_.space());
    return *this;
  }

  Poly num_{};
  Poly den_{};
};

inline std::ostream& operator<<(std::ostream& os, const RatFun& f) { return os << f.str(); }

/// Canonical representative of num/den (gcd-reduced, monic denominator).
inline RatFun ratfun_normalize(const Poly& num, const Poly& den) { return RatFun(num, den); }

inline RatFun conj_ratfun(const RatFun& f) {
  return f.map_parts([](const Poly& p) { return conj_poly(p); });
}

}  // namespace lfk
