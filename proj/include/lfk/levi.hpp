// Levi decomposition of real 1-forms and the holomorphic Levi equation.
#pragma once

#include "lfk/mirror.hpp"

#include <optional>

namespace lfk {

struct LeviDecomposition {
  DForm eta;          ///< type (1,0), omega = (eta + conj eta) / 2
  DForm omega_sharp;  ///< (eta - conj eta) / 2i
  std::optional<RatFun> phi;
  std::optional<DForm> sigma;
};

inline void require_real_one_form(const DForm& omega, const char* who) {
  if (omega.space().flavor != Flavor::REAL_PAIRED) throw SpaceError(std::string(who) + ": expected a real-paired form");
  if (omega.degree() != 1) throw DomainError(std::string(who) + ": expected a 1-form");
  DForm diff = omega - conj_form(omega);
  if (!diff.is_zero()) throw WitnessError(std::string(who) + ": input is not real", diff.str());
}

inline LeviDecomposition decompose(const DForm& omega) {
  require_real_one_form(omega, "decompose");
  DForm eta = GaussRat(2) * type_part(omega, 1, 0);
  DForm eta_bar = conj_form(eta);
  DForm sharp = GaussRat(mpq_class(0), mpq_class(-1, 2)) * (eta - eta_bar);
  return {eta, sharp, std::nullopt, std::nullopt};
}

/// Re(eta) = (eta + conj eta) / 2.
inline DForm real_part(const DForm& eta) { return GaussRat(mpq_class(1, 2)) * (eta + conj_form(eta)); }
inline RatFun real_part(const RatFun& f) { return GaussRat(mpq_class(1, 2)) * (f + conj_ratfun(f)); }
inline RatFun imag_part(const RatFun& f) {
  return GaussRat(mpq_class(0), mpq_class(-1, 2)) * (f - conj_ratfun(f));
}

/// a ^ da; zero exactly when a is Frobenius integrable.
inline DForm integrability_form(const DForm& a) { return wedge(a, ext_d(a)); }

inline Report is_integrable(const DForm& a) {
  if (a.degree() != 1) throw DomainError("is_integrable expects a 1-form");
  DForm w = integrability_form(a);
  Report r;
  r.check("a^da=0", w.is_zero(), w.str());
  return r;
}

/// The 2-form eta ^ conj(eta) defining the Levi foliation.
inline DForm levi_distribution(const LeviDecomposition& dec) { return wedge(dec.eta, conj_form(dec.eta)); }

struct HolomorphicSigma {
  bool holomorphic = false;
  RatFun phi;
  DForm sigma;
  /// When not holomorphic: the coefficient ratio that depends on the second block.
  RatFun failing_ratio;
};

/// Writes eta = phi * sigma with sigma a z-only 1-form whose polynomial
/// coefficients have trivial gcd. phi is scaled to leading coefficient 1.
inline HolomorphicSigma extract_holomorphic_sigma(const DForm& eta) {
  if (eta.degree() != 1) throw DomainError("extract_holomorphic_sigma expects a 1-form");
  if (eta.is_zero()) throw DomainError("extract_holomorphic_sigma: eta is zero");
  if (!(type_part(eta, 1, 0) == eta)) throw DomainError("extract_holomorphic_sigma: eta is not of type (1,0)");
  const VarSpace space = eta.space();
  const auto& [ref_idx, ref] = *eta.terms().begin();
  HolomorphicSigma out;
  std::vector<RatFun> ratios(space.nvars(), RatFun(space));
  for (const auto& [k, c] : eta.terms()) {
    RatFun r = c / ref;
    if (r.uses_second_block()) {
      out.failing_ratio = r;
      return out;
    }
    ratios[k[0]] = r;
  }
  DForm scaled = DForm::one_form(space, ratios);
  auto [cleared, l] = clear_denominators(scaled);
  Poly g = poly_gcd(polynomial_coefficients(cleared), space);
  DForm sigma = RatFun(Poly::one(space), g) * cleared;
  RatFun phi = ref / sigma.coeff(ref_idx);
  GaussRat lead = phi.num().leading_coeff();
  phi = phi * lead.inverse();
  sigma = lead * sigma;
  if (!(phi * sigma == eta)) throw Error("extract_holomorphic_sigma: reconstruction mismatch");
  out.holomorphic = true;
  out.phi = phi;
  out.sigma = sigma;
  return out;
}

/// Tests whether the foliation sigma = 0 is tangent to the levels of the real
/// function f: df ^ sigma ^ conj(sigma) = 0 after clearing denominators.
inline Report tangent_to_levels(const RatFun& f, const DForm& sigma) {
  require_same_space(f.space(), sigma.space());
  if (f.space().flavor != Flavor::REAL_PAIRED) throw SpaceError("tangent_to_levels: expected real-paired data");
  if (auto real = is_real(f); !real.symmetric) throw WitnessError("tangent_to_levels: f is not real-valued", real.witness.str());
  if (f.is_constant()) throw DomainError("tangent_to_levels: f is constant");
  if (sigma.degree() != 1 || !(type_part(sigma, 1, 0) == sigma))
    throw DomainError("tangent_to_levels: sigma must be a (1,0)-form");
  const DForm dnum = ext_d(RatFun(f.num())), dden = ext_d(RatFun(f.den()));
  DForm df = RatFun(f.den()) * dnum - RatFun(f.num()) * dden;
  DForm w = wedge(df, sigma, conj_form(sigma));
  Report r;
  r.check("df^sigma^conj(sigma)=0", w.is_zero(), w.str());
  return r;
}

struct PrimitiveForm {
  DForm omega;
  /// Product of the real factors divided out (1 when already primitive).
  Poly removed;
};

/// Divides a real polynomial 1-form by its largest real-valued coefficient factor.
inline PrimitiveForm primitive_real_part(const DForm& omega) {
  require_real_one_form(omega, "primitive_real_part");
  const VarSpace space = omega.space();
  PrimitiveForm out{omega, Poly::one(space)};
  if (omega.is_zero()) return out;
  auto [cleared, l] = clear_denominators(omega);
  if (!l.is_constant()) {
    // The denominators of a real form are closed under conjugation.
    auto real_l = symmetric_associate(l);
    if (!real_l) throw DomainError("primitive_real_part: denominator has no real associate");
    cleared = RatFun(*real_l) * omega;
  }
  out.omega = cleared;
  Poly g = poly_gcd(polynomial_coefficients(cleared), space);
  while (auto r = common_real_factor(g)) {
    out.omega = RatFun(Poly::one(space), *r) * out.omega;
    out.removed *= *r;
    g = *exact_div(g, *r);
  }
  return out;
}

}  // namespace lfk
