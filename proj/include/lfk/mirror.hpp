// Mirroring (the (*)-operator), complexification and realness tests.
//
// Real-paired data live on C^n with coordinates (z, zb); complexified data
// live on C^n x C^n* with coordinates (z, w). Complexification replaces zb by
// w coefficientwise. Mirroring conjugates coefficients and exchanges the two
// blocks; on real-paired data, read back in z through w = zb, it is complex
// conjugation.
#pragma once

#include "lfk/forms.hpp"
#include "lfk/report.hpp"

#include <optional>

namespace lfk {

inline Poly mirror_fun(const Poly& p) { return p.swap_blocks_conj(); }
inline RatFun mirror_fun(const RatFun& f) {
  return f.map_parts([](const Poly& p) { return p.swap_blocks_conj(); });
}

/// Mirrors coefficients and exchanges dz <-> dw (resp. dz <-> dzb).
inline DForm mirror_form(const DForm& a) {
  return swap_slot_blocks(a, [](const RatFun& c) { return mirror_fun(c); });
}

inline Poly complexify(const Poly& p) {
  if (p.space().flavor != Flavor::REAL_PAIRED) throw SpaceError("complexify requires real-paired input");
  return p.reflavored(Flavor::COMPLEXIFIED);
}
inline RatFun complexify(const RatFun& f) {
  return f.map_parts([](const Poly& p) { return complexify(p); });
}
inline DForm complexify(const DForm& a) {
  if (a.space().flavor != Flavor::REAL_PAIRED) throw SpaceError("complexify requires real-paired input");
  return a.reflavored(Flavor::COMPLEXIFIED);
}

inline Poly decomplexify(const Poly& p) {
  if (p.space().flavor != Flavor::COMPLEXIFIED) throw SpaceError("decomplexify requires complexified input");
  return p.reflavored(Flavor::REAL_PAIRED);
}
inline RatFun decomplexify(const RatFun& f) {
  return f.map_parts([](const Poly& p) { return decomplexify(p); });
}
inline DForm decomplexify(const DForm& a) {
  if (a.space().flavor != Flavor::COMPLEXIFIED) throw SpaceError("decomplexify requires complexified input");
  return a.reflavored(Flavor::REAL_PAIRED);
}

struct SymmetryReport {
  bool symmetric = false;
  /// F - F* (resp. p - conj p); zero exactly when symmetric.
  Poly witness;
};

inline SymmetryReport is_real(const Poly& p) {
  if (p.space().flavor != Flavor::REAL_PAIRED) throw SpaceError("is_real requires a real-paired polynomial");
  Poly w = p - conj_poly(p);
  return {w.is_zero(), w};
}

/// Realness of a rational function, decided by cross-multiplication.
inline SymmetryReport is_real(const RatFun& f) {
  if (f.space().flavor != Flavor::REAL_PAIRED) throw SpaceError("is_real requires a real-paired function");
  Poly w = f.num() * conj_poly(f.den()) - conj_poly(f.num()) * f.den();
  return {w.is_zero(), w};
}

inline SymmetryReport is_star_symmetric(const Poly& p) {
  Poly w = p - mirror_fun(p);
  return {w.is_zero(), w};
}

inline SymmetryReport is_star_symmetric(const RatFun& f) {
  Poly w = f.num() * mirror_fun(f.den()) - mirror_fun(f.num()) * f.den();
  return {w.is_zero(), w};
}

inline bool is_star_symmetric(const DForm& a) { return mirror_form(a) == a; }

/// Real 1-form test: conj(a) == a.
inline bool is_real_form(const DForm& a) { return conj_form(a) == a; }

/// The constant c with p* = c p, when p is mirror-proportional to itself.
inline std::optional<GaussRat> mirror_unit(const Poly& p) {
  if (p.is_zero()) return std::nullopt;
  Poly m = mirror_fun(p);
  auto it = m.terms().find(p.leading_exponents());
  if (it == m.terms().end()) return std::nullopt;
  GaussRat c = it->second / p.leading_coeff();
  if (!(m == p * c)) return std::nullopt;
  return c;
}

/// A scalar alpha with alpha / conj(alpha) = c, for |c| = 1. Prefers a
/// square root of c (unit modulus); falls back to 1 + c, which also lies in
/// Q(i) since c = -1 always has the root i. The flag tells whether the
/// square root was available.
inline std::pair<GaussRat, bool> balancing_scalar(const GaussRat& c) {
  if (auto root = c.sqrt()) return {*root, true};
  return {c + GaussRat(1), false};
}

/// Rescales p by a constant so that it becomes (*)-symmetric, if possible.
inline std::optional<Poly> symmetric_associate(const Poly& p) {
  auto c = mirror_unit(p);
  if (!c) return std::nullopt;
  return p * balancing_scalar(*c).first;
}

struct SymmetricQuotient {
  Poly G_tilde;
  Poly H_tilde;
  /// The unit c with G* = c G and H* = c H.
  GaussRat unit;
  /// The rescaling constant applied to numerator and denominator.
  GaussRat alpha;
  /// Set to c when c has no unit-modulus square root in Q(i); the quotient is
  /// then rebalanced with the non-unit alpha = 1 + c.
  std::optional<GaussRat> obstruction;
};

/// Writes a (*)-symmetric quotient num/den as G~/H~ with both parts
/// (*)-symmetric. The gcd is divided out but no unit normalization is
/// applied, so the unit c refers to the supplied representative.
inline SymmetricQuotient symmetric_quotient(const Poly& num, const Poly& den) {
  require_same_space(num.space(), den.space());
  if (den.is_zero()) throw DomainError("symmetric_quotient: zero denominator");
  Poly g = poly_gcd(num, den);
  Poly G = num.is_zero() ? num : *exact_div(num, g);
  Poly H = num.is_zero() ? Poly::one(num.space()) : *exact_div(den, g);
  Poly cross = G * mirror_fun(H) - mirror_fun(G) * H;
  if (!cross.is_zero()) throw WitnessError("symmetric_quotient: input is not (*)-symmetric", cross.str());
  auto c = mirror_unit(H);
  if (!c) throw DomainError("symmetric_quotient: denominator is not mirror-proportional to itself");
  auto [alpha, unit_root] = balancing_scalar(*c);
  SymmetricQuotient out{G * alpha, H * alpha, *c, alpha, std::nullopt};
  if (!unit_root) out.obstruction = *c;
  return out;
}

inline SymmetricQuotient symmetric_quotient(const RatFun& f) { return symmetric_quotient(f.num(), f.den()); }

/// Largest real-valued factor of phi, detected as gcd(phi_C, phi*_C) and
/// decomplexified; nullopt when that gcd is a unit. The factor is rescaled to
/// be real-valued.
inline std::optional<Poly> common_real_factor(const Poly& phi) {
  if (phi.space().flavor != Flavor::REAL_PAIRED) throw SpaceError("common_real_factor requires real-paired input");
  if (phi.is_zero()) throw DomainError("common_real_factor of the zero polynomial");
  Poly fc = complexify(phi);
  Poly g = poly_gcd(fc, mirror_fun(fc));
  if (g.is_constant()) return std::nullopt;
  Poly r = decomplexify(g);
  if (auto sym = symmetric_associate(r)) return *sym;
  return r;
}

}  // namespace lfk
