// Exact Gaussian rationals: a + b*i with a, b in Q.
#pragma once

#include <gmpxx.h>

#include <compare>
#include <optional>
#include <ostream>
#include <stdexcept>
#include <string>

namespace lfk {

/// Base class for every error raised by the toolkit.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// An operand lives in a different variable space, or the operation is not
/// defined for the operand's flavor.
class SpaceError : public Error {
 public:
  using Error::Error;
};

/// A mathematical precondition was violated (zero divisor, non-real input...).
class DomainError : public Error {
 public:
  using Error::Error;
};

class GaussRat {
 public:
  GaussRat() = default;
  GaussRat(long re) : re_(re) {}  // NOLINT(google-explicit-constructor)
  GaussRat(mpq_class re, mpq_class im = 0) : re_(std::move(re)), im_(std::move(im)) {
    re_.canonicalize();
    im_.canonicalize();
  }

  static GaussRat i() { return GaussRat(0, 1); }

  const mpq_class& re() const { return re_; }
  const mpq_class& im() const { return im_; }

  bool is_zero() const { return sgn(re_) == 0 && sgn(im_) == 0; }
  bool is_one() const { return re_ == 1 && sgn(im_) == 0; }
  bool is_real() const { return sgn(im_) == 0; }

  GaussRat conj() const { return GaussRat(re_, -im_); }
  mpq_class norm() const { return re_ * re_ + im_ * im_; }

  GaussRat inverse() const {
    if (is_zero()) throw DomainError("division by zero in GaussRat");
    mpq_class n = norm();
    return GaussRat(re_ / n, -im_ / n);
  }

  GaussRat operator-() const { return GaussRat(-re_, -im_); }

  GaussRat& operator+=(const GaussRat& o) {
    re_ += o.re_;
    im_ += o.im_;
    return *this;
  }
  GaussRat& operator-=(const GaussRat& o) {
    re_ -= o.re_;
    im_ -= o.im_;
    return *this;
  }
  GaussRat& operator*=(const GaussRat& o) {
    if (o.im_ == 0) {
      re_ *= o.re_;
      im_ *= o.re_;
      return *this;
    }
    mpq_class r = re_ * o.re_ - im_ * o.im_;
    mpq_class m = re_ * o.im_ + im_ * o.re_;
    re_ = std::move(r);
    im_ = std::move(m);
    return *this;
  }
  GaussRat& operator/=(const GaussRat& o) { return *this *= o.inverse(); }

  friend GaussRat operator+(GaussRat a, const GaussRat& b) { return a += b; }
  friend GaussRat operator-(GaussRat a, const GaussRat& b) { return a -= b; }
  friend GaussRat operator*(GaussRat a, const GaussRat& b) { return a *= b; }
  friend GaussRat operator/(GaussRat a, const GaussRat& b) { return a /= b; }

  friend bool operator==(const GaussRat& a, const GaussRat& b) {
    return a.re_ == b.re_ && a.im_ == b.im_;
  }

  /// Total order (real part, then imaginary part); only used for containers.
  friend std::strong_ordering operator<=>(const GaussRat& a, const GaussRat& b) {
    int c = cmp(a.re_, b.re_);
    if (c == 0) c = cmp(a.im_, b.im_);
    return c < 0 ? std::strong_ordering::less
                 : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
  }

  /// Square root inside Q(i), if one exists.
  std::optional<GaussRat> sqrt() const;

  /// Canonical text: "3", "-1/2", "I", "-2*I", "(1+2*I)", "(1/2-3/4*I)".
  std::string str() const;

 private:
  mpq_class re_{0};
  mpq_class im_{0};
};

namespace detail {

inline std::optional<mpq_class> rational_sqrt(const mpq_class& q) {
  if (sgn(q) < 0) return std::nullopt;
  mpz_class num = q.get_num(), den = q.get_den();
  if (!mpz_perfect_square_p(num.get_mpz_t()) || !mpz_perfect_square_p(den.get_mpz_t()))
    return std::nullopt;
  mpz_class rn, rd;
  mpz_sqrt(rn.get_mpz_t(), num.get_mpz_t());
  mpz_sqrt(rd.get_mpz_t(), den.get_mpz_t());
  return mpq_class(rn, rd);
}

}  // namespace detail

inline std::optional<GaussRat> GaussRat::sqrt() const {
  if (is_zero()) return GaussRat();
  // (x + iy)^2 = a + ib  =>  x^2 = (|c| + a)/2, y^2 = (|c| - a)/2, sign(xy) = sign(b).
  auto modulus = detail::rational_sqrt(norm());
  if (!modulus) return std::nullopt;
  auto x = detail::rational_sqrt((*modulus + re_) / 2);
  auto y = detail::rational_sqrt((*modulus - re_) / 2);
  if (!x || !y) return std::nullopt;
  mpq_class yy = sgn(im_) < 0 ? mpq_class(-*y) : *y;
  GaussRat root(*x, yy);
  if (root * root != *this) return std::nullopt;
  return root;
}

inline std::string GaussRat::str() const {
  auto q = [](const mpq_class& v) { return v.get_str(); };
  if (im_ == 0) return q(re_);
  std::string imag;
  if (im_ == 1)
    imag = "I";
  else if (im_ == -1)
    imag = "-I";
  else
    imag = q(im_) + "*I";
  if (re_ == 0) return imag;
  std::string s = "(" + q(re_);
  if (sgn(im_) > 0) s += "+";
  s += imag + ")";
  return s;
}

inline std::ostream& operator<<(std::ostream& os, const GaussRat& c) { return os << c.str(); }

}  // namespace lfk
