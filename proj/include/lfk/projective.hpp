// Descent of real Levi-flat 1-forms from C^{n+1} to projective space.
#pragma once

#include "lfk/classify.hpp"

namespace lfk {

inline Report radial_check(const DForm& eta) {
  if (eta.degree() != 1) throw DomainError("radial_check expects a 1-form");
  DForm c = contract(VField::complex_radial(eta.space()), eta);
  Report r;
  r.check("i_R eta=0", c.is_zero(), c.str());
  return r;
}

/// Bidegree of a rational coefficient: difference of the numerator and
/// denominator bidegrees; nullopt when either part is mixed.
inline std::optional<std::pair<int, int>> ratfun_bidegree(const RatFun& f) {
  auto bn = bidegree(f.num()), bd = bidegree(f.den());
  if (!bn || !bd) return std::nullopt;
  return std::make_pair(bn->first - bd->first, bn->second - bd->second);
}

inline std::string bidegree_str(const std::optional<std::pair<int, int>>& b) {
  if (!b) return "MIXED";
  return "(" + std::to_string(b->first) + "," + std::to_string(b->second) + ")";
}

/// Common bidegree of all coefficients of a nonzero form, or nullopt.
inline std::optional<std::pair<int, int>> form_bidegree(const DForm& a) {
  std::optional<std::pair<int, int>> out;
  for (const auto& [k, c] : a.terms()) {
    auto b = ratfun_bidegree(c);
    if (!b || (out && *out != *b)) return std::nullopt;
    out = b;
  }
  return out;
}

inline Report bidegree_check(const DForm& eta, int d) {
  if (eta.is_zero()) throw DomainError("bidegree_check of the zero form");
  Report r;
  const std::pair<int, int> want{d - 1, d};
  std::string offending;
  for (const auto& [k, c] : eta.terms()) {
    auto b = ratfun_bidegree(c);
    if (!b || *b != want) {
      if (!offending.empty()) offending += "; ";
      offending += c.str() + " has bidegree " + bidegree_str(b);
    }
  }
  r.check("coefficients of bidegree (" + std::to_string(d - 1) + "," + std::to_string(d) + ")",
          offending.empty(), offending);
  return r;
}

inline Report residue_sum_check(const LogDecomposition& dec) {
  if (dec.residues.size() != dec.pole_factors.size()) throw DomainError("residue_sum_check: residue/factor count mismatch");
  GaussRat sum;
  long weighted = 0;
  for (std::size_t j = 0; j < dec.pole_factors.size(); ++j) {
    const Poly& f = dec.pole_factors[j];
    if (f.is_zero() || !is_homogeneous(f)) throw DomainError("residue_sum_check: " + f.str() + " is not homogeneous");
    sum += dec.residues[j] * GaussRat(f.total_degree());
    if (j < dec.exponents.size()) weighted += static_cast<long>(dec.exponents[j]) * f.total_degree();
  }
  Report r;
  r.check("sum lambda_j deg F_j=0", sum.is_zero(), sum.str());
  if (!dec.exact_num.is_zero()) {
    bool ok = is_homogeneous(dec.exact_num) && dec.exact_num.total_degree() == weighted;
    r.check("deg G=sum k_j deg F_j", ok,
            "deg G=" + std::to_string(dec.exact_num.total_degree()) + ", sum=" + std::to_string(weighted));
  }
  return r;
}

struct ProjectiveForm {
  DForm omega;
  int degree_d = 0;
};

struct DescentResult {
  std::optional<ProjectiveForm> form;
  Report report;
};

/// Conditions for descent: i_R eta = 0 and eta bihomogeneous of bidegree
/// (d-1, d) for some d >= 1, with d inferred from the coefficients.
inline DescentResult descent_check(const DForm& omega) {
  LeviDecomposition dec = decompose(omega);
  DescentResult out;
  Report& r = out.report;
  if (dec.eta.is_zero()) throw DomainError("descent_check: omega is zero");
  r.merge(radial_check(dec.eta));
  auto b = form_bidegree(dec.eta);
  r.value("eta bidegree", bidegree_str(b));
  const bool fits = b && b->second == b->first + 1 && b->second >= 1;
  r.check("bidegree (d-1,d) with d>=1", fits, "bidegree " + bidegree_str(b));
  if (!r.passed()) return out;
  const int d = b->second;
  r.value("d", std::to_string(d));
  out.form = ProjectiveForm{omega, d};

  // Degree bookkeeping of the Levi foliation, when it is holomorphic.
  HolomorphicSigma hs = extract_holomorphic_sigma(dec.eta);
  if (hs.holomorphic) {
    auto sb = form_bidegree(hs.sigma);
    auto pb = ratfun_bidegree(hs.phi);
    r.value("phi bidegree", bidegree_str(pb));
    if (sb && sb->second == 0) {
      const int d0 = sb->first - 1;
      r.value("d0", std::to_string(d0));
      r.info("d0<=d+2", d0 <= d + 2);
      r.info("d0<=d-2", d0 <= d - 2);
    }
  }
  return out;
}

struct Example61 {
  DForm omega;
  RatFun kappa;
  RatFun rho;
  Report report;
};

/// Builds omega = Re(kappa d rho) from homogeneous F, G of equal degree and
/// binary forms R(u1,u2), S(u1,u2) of equal degree with u2^2 | R. Here
/// rho = F/G and kappa = R(F,G) conj(S(F,G)).
///
/// R and S live in a two-variable space (first block u1, u2).
inline Example61 example61_build(const Poly& F, const Poly& G, const Poly& R, const Poly& S) {
  require_same_space(F.space(), G.space());
  require_same_space(R.space(), S.space());
  const VarSpace space = F.space();
  if (space.flavor != Flavor::REAL_PAIRED) throw SpaceError("example61_build expects real-paired F, G");
  if (F.uses_second_block() || G.uses_second_block()) throw DomainError("example61_build: F and G must be holomorphic");
  if (F.is_zero() || G.is_zero() || !is_homogeneous(F) || !is_homogeneous(G) || F.total_degree() != G.total_degree())
    throw DomainError("example61_build: F and G must be nonzero homogeneous of the same degree");
  if (!poly_gcd(F, G).is_constant()) throw DomainError("example61_build: F and G are not coprime");
  if (R.space().n != 2 || R.uses_second_block() || S.uses_second_block())
    throw DomainError("example61_build: R and S must be polynomials in u1, u2");
  if (R.is_zero() || S.is_zero() || !is_homogeneous(R) || !is_homogeneous(S) || R.total_degree() != S.total_degree())
    throw DomainError("example61_build: R and S must be nonzero homogeneous of the same degree");
  const Poly u2sq = Poly::variable(R.space(), 1).pow(2);
  if (!exact_div(R, u2sq)) throw DomainError("example61_build: u2^2 does not divide R");

  Example61 out;
  Report& r = out.report;
  const bool rs_coprime = poly_gcd(R, S).is_constant();
  r.info("R,S coprime", rs_coprime, rs_coprime ? "" : "degenerate: R and S share a factor");

  const std::vector<Poly> images{F, G, conj_poly(F), conj_poly(G)};
  const Poly RFG = R.compose(images, space), SFG = S.compose(images, space);
  out.rho = RatFun(F, G);
  out.kappa = RatFun(RFG * conj_poly(SFG));

  // R(F,G) d(F/G) = R(F,G) (G dF - F dG) / G^2 is polynomial since G^2 | R(F,G).
  DForm eta = RatFun(conj_poly(SFG)) * (RatFun(*exact_div(RFG, G * G)) *
                                        (RatFun(G) * ext_d(RatFun(F)) - RatFun(F) * ext_d(RatFun(G))));
  out.omega = real_part(eta);
  r.value("kappa", out.kappa.str());
  r.value("rho", out.rho.str());
  r.value("omega", out.omega.str());
  r.value("eta", eta.str());

  r.merge(is_integrable(out.omega), "omega");
  r.merge(verify_model_b(out.omega, out.kappa, out.rho), "model_b");
  r.merge(radial_check(eta), "projective");
  r.merge(bidegree_check(eta, RFG.total_degree()), "projective");
  return out;
}

}  // namespace lfk
