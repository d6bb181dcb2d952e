// Complexified pencils of real Levi-flat 1-forms and certificate checks for
// the two normal forms h |psi|^2 Re(tau) and Re(kappa d rho).
#pragma once

#include "lfk/pencil.hpp"

namespace lfk {

struct ComplexifiedPencil {
  DForm omega_c;
  DForm eta_c;
  DForm eta_c_star;
  Pencil pencil;
  RatFun phi;
  DForm sigma;
  Report report;
};

/// Complexifies a real integrable primitive 1-form with holomorphic Levi
/// foliation into the pencil (eta_C, eta_C*).
///
/// Throws WitnessError for a non-integrable or non-primitive form and for a
/// non-holomorphic Levi foliation.
inline ComplexifiedPencil build_pencil(const DForm& omega) {
  LeviDecomposition dec = decompose(omega);
  DForm integ = integrability_form(omega);
  if (!integ.is_zero()) throw WitnessError("NOT_INTEGRABLE", integ.str());
  auto [cleared, l] = clear_denominators(omega);
  Poly g = poly_gcd(polynomial_coefficients(cleared), omega.space());
  if (auto factor = common_real_factor(g)) throw WitnessError("NOT_PRIMITIVE", factor->str());
  HolomorphicSigma hs = extract_holomorphic_sigma(dec.eta);
  if (!hs.holomorphic) throw WitnessError("NOT_HOLOMORPHIC_LEVI", hs.failing_ratio.str());

  ComplexifiedPencil out;
  out.phi = hs.phi;
  out.sigma = hs.sigma;
  out.omega_c = complexify(omega);
  out.eta_c = complexify(dec.eta);
  out.eta_c_star = mirror_form(out.eta_c);
  out.pencil = Pencil{out.eta_c, out.eta_c_star};

  Report& r = out.report;
  DForm recon = out.omega_c - GaussRat(mpq_class(1, 2)) * (out.eta_c + out.eta_c_star);
  r.check("omega_C=(eta_C+eta_C*)/2", recon.is_zero(), recon.str());
  r.check("omega_C (*)-symmetric", is_star_symmetric(out.omega_c),
          (mirror_form(out.omega_c) - out.omega_c).str());
  r.merge(pencil_condition(out.eta_c, out.eta_c_star), "pencil");
  bool coprime = true;
  std::string offending;
  for (const Poly& part : {hs.phi.num(), hs.phi.den()}) {
    if (part.is_constant()) continue;
    if (auto f = common_real_factor(part)) {
      coprime = false;
      offending = f->str();
    }
  }
  r.check("phi_C, phi_C* coprime", coprime, offending);
  r.value("eta_C", out.eta_c.str());
  r.value("eta_C*", out.eta_c_star.str());
  r.value("phi", hs.phi.str());
  r.value("sigma", hs.sigma.str());
  return out;
}

/// h(0) != 0 for rational h: both constant terms nonzero.
inline bool nonvanishing_at_origin(const RatFun& h) {
  return !h.num().constant_term().is_zero() && !h.den().constant_term().is_zero();
}

/// True when every coefficient of a 1-form depends on the first block only
/// and the form has type (1,0).
inline bool is_first_block_form(const DForm& a) {
  for (const auto& [k, c] : a.terms()) {
    for (int s : k)
      if (s >= a.space().n) return false;
    if (c.uses_second_block()) return false;
  }
  return true;
}

inline Report verify_model_a(const DForm& omega, const DForm& tau, const Poly& psi, const RatFun& h) {
  require_same_space(omega.space(), tau.space());
  require_same_space(omega.space(), psi.space());
  require_same_space(omega.space(), h.space());
  if (omega.space().flavor != Flavor::REAL_PAIRED) throw SpaceError("verify_model_a expects real-paired data");
  if (tau.degree() != 1) throw DomainError("verify_model_a: tau must be a 1-form");
  Report r;
  auto real = is_real(h);
  r.check("h real-valued", real.symmetric, real.witness.str());
  r.check("h(0)!=0", nonvanishing_at_origin(h), h.str());
  r.check("tau holomorphic", is_first_block_form(tau), type_part(tau, 0, 1).str());
  DForm dtau = ext_d(tau);
  r.check("d(tau)=0", dtau.is_zero(), dtau.str());

  DForm pt = RatFun(psi) * tau;
  bool polynomial = true;
  for (const auto& [k, c] : pt.terms()) polynomial = polynomial && c.is_polynomial();
  if (!polynomial) {
    r.check("psi*tau polynomial", false, pt.str());
  } else {
    std::vector<Poly> cs = polynomial_coefficients(pt);
    cs.push_back(psi);
    Poly g = poly_gcd(cs, psi.space());
    r.check("psi is a pole equation", g.is_constant(), g.str());
  }
  DForm model = GaussRat(mpq_class(1, 2)) * (RatFun(psi * conj_poly(psi)) * h * (tau + conj_form(tau)));
  DForm diff = omega - model;
  r.check("omega=h|psi|^2 Re(tau)", diff.is_zero(), diff.str());
  return r;
}

/// Re(kappa d rho).
inline DForm model_b_form(const RatFun& kappa, const RatFun& rho) {
  return real_part(kappa * ext_d(rho));
}

inline Report verify_model_b(const DForm& omega, const RatFun& kappa, const RatFun& rho) {
  require_same_space(omega.space(), kappa.space());
  require_same_space(omega.space(), rho.space());
  if (omega.space().flavor != Flavor::REAL_PAIRED) throw SpaceError("verify_model_b expects real-paired data");
  Report r;
  r.check("rho non-constant", !rho.is_constant(), rho.str());
  r.check("rho holomorphic", !rho.uses_second_block(), rho.str());
  DForm diff = omega - model_b_form(kappa, rho);
  r.check("omega=Re(kappa d rho)", diff.is_zero(), diff.str());
  // kappa / conj(kappa) is constant along the leaves {rho = const}.
  const RatFun ratio = kappa / conj_ratfun(kappa);
  const DForm drho = ext_d(rho);
  DForm w = wedge(ext_d(ratio), drho, conj_form(drho));
  r.check("d(kappa/conj kappa)^drho^conj(drho)=0", w.is_zero(), w.str());
  return r;
}

struct LogDecomposition {
  std::vector<GaussRat> residues;
  std::vector<Poly> pole_factors;
  Poly exact_num;
  std::vector<int> exponents;
};

/// sum lambda_j dF_j/F_j + d(G / prod F_j^k_j).
inline DForm assemble_log_form(const LogDecomposition& dec, VarSpace space) {
  if (dec.residues.size() != dec.pole_factors.size()) throw DomainError("log decomposition: residue/factor count mismatch");
  if (!dec.exponents.empty() && dec.exponents.size() != dec.pole_factors.size())
    throw DomainError("log decomposition: exponent/factor count mismatch");
  DForm out(space, 1);
  Poly den = Poly::one(space);
  for (std::size_t j = 0; j < dec.pole_factors.size(); ++j) {
    const Poly& f = dec.pole_factors[j];
    require_same_space(f.space(), space);
    if (f.is_zero()) throw DomainError("log decomposition: zero pole factor");
    out += dec.residues[j] * (RatFun(Poly::one(space), f) * ext_d(RatFun(f)));
    if (!dec.exponents.empty()) {
      if (dec.exponents[j] < 0) throw DomainError("log decomposition: negative exponent");
      den *= f.pow(static_cast<unsigned>(dec.exponents[j]));
    }
  }
  if (!dec.exact_num.is_zero()) {
    require_same_space(dec.exact_num.space(), space);
    out += ext_d(RatFun(dec.exact_num, den));
  }
  return out;
}

inline Report verify_log_decomposition(const DForm& theta, const LogDecomposition& dec) {
  const auto& fs = dec.pole_factors;
  for (std::size_t i = 0; i < fs.size(); ++i)
    for (std::size_t j = i + 1; j < fs.size(); ++j)
      if (!poly_gcd(fs[i], fs[j]).is_constant())
        throw DomainError("log decomposition: pole factors " + fs[i].str() + " and " + fs[j].str() + " share a factor");
  Report r;
  DForm diff = theta - assemble_log_form(dec, theta.space());
  r.check("theta=sum lambda dF/F + d(G/F^k)", diff.is_zero(), diff.str());
  DForm dtheta = ext_d(theta);
  r.check("d(theta)=0", dtheta.is_zero(), dtheta.str());
  return r;
}

struct DichotomyParams {
  std::optional<int> degree_bound;
  std::optional<Poly> denominator;
  int retries = 3;
};

enum class CurvatureBranch { ZERO, NONZERO };

struct DichotomyReport {
  ComplexifiedPencil pencil;
  ThetaResult theta;
  std::optional<CurvatureBranch> branch;
  Report report;
};

inline DichotomyReport curvature_dichotomy(const DForm& omega, const DichotomyParams& params = {}) {
  DichotomyReport out{build_pencil(omega), {}, std::nullopt, {}};
  Report& r = out.report;
  r.merge(out.pencil.report, "build");
  std::optional<Poly> den;
  if (params.denominator) den = params.denominator->reflavored(Flavor::COMPLEXIFIED);
  out.theta = solve_theta_auto(out.pencil.pencil, params.degree_bound, den, params.retries);
  r.value("theta_status", theta_status_name(out.theta.status));
  r.value("degree_bound", std::to_string(out.theta.degree_bound));
  r.value("kernel_dim", std::to_string(out.theta.kernel_dim));
  r.check("theta solved", out.theta.status == ThetaStatus::SOLVED, theta_status_name(out.theta.status));
  if (!out.theta.cert) return out;
  const PencilCert& cert = *out.theta.cert;
  r.value("theta", cert.theta.str());
  r.value("curvature", cert.curvature.str());
  if (cert.curvature.is_zero()) {
    out.branch = CurvatureBranch::ZERO;
    r.value("branch", "zero-curvature");
    DForm asym = mirror_form(cert.theta) - cert.theta;
    r.check("theta (*)-symmetric", asym.is_zero(), asym.str());
  } else {
    out.branch = CurvatureBranch::NONZERO;
    r.value("branch", "nonzero-curvature");
    RatioResult a = collinearity_alpha(cert, axis(out.pencil.pencil));
    r.check("d(theta) collinear with axis", a.ok, a.witness);
    if (a.ok) {
      r.value("alpha", a.ratio.str());
      r.info("alpha constant", a.ratio.is_constant());
    }
  }
  return out;
}

}  // namespace lfk
