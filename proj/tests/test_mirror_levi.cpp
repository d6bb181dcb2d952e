#include <gtest/gtest.h>

#include "support/fixtures.hpp"
#include "support/oracles.hpp"

using namespace lfk;
using namespace lfk::testing;

namespace {

const VarSpace R1 = real(1), R2 = real(2), R3 = real(3);
const VarSpace C1 = cplx(1), C2 = cplx(2);

const char* kTangentF = "(x1^2+y1^2)/(x1^4+y1^4)";
const char* kTangentFTilde =
    "((x1*x2-y1*y2)^2+(y1*x2+x1*y2)^2)/((x1*x2-y1*y2)^4+(y1*x2+x1*y2)^4)";

}  // namespace

// ---------------------------------------------------------------- mirror

TEST(MirrorFun, Examples) {
  EXPECT_EQ(mirror_fun(P("(2+I)*z1*w2", C2)), P("(2-I)*z2*w1", C2));
  EXPECT_EQ(mirror_fun(P("z1*w1", C1)), P("z1*w1", C1));
  const Poly p = P("3*I*z1^2*w2 - z2 + (1-I)/2*w1*w2", C2);
  EXPECT_EQ(mirror_fun(mirror_fun(p)), p);
}

TEST(MirrorFun, RealPairedActsAsConjugation) {
  const Poly p = P("I*z1*zb2 + 2*zb1", R2);
  EXPECT_EQ(mirror_fun(p), conj_poly(p));
}

TEST(MirrorForm, Examples) {
  EXPECT_EQ(mirror_form(W("dz1", C1)), W("dw1", C1));

  // z2 dz1 ^ dw1  ->  w2 dw1 ^ dz1 = -w2 dz1 ^ dw1 after reordering.
  const DForm a = W("z2*dz1/\\dw1", C2, 2);
  const DForm by_definition = RatFun(P("w2", C2)) * wedge(W("dw1", C2), W("dz1", C2));
  EXPECT_EQ(mirror_form(a), by_definition);
  EXPECT_EQ(mirror_form(a), W("-w2*dz1/\\dw1", C2, 2));
  EXPECT_EQ(mirror_form(mirror_form(a)), a);
}

TEST(MirrorForm, ComplexifiedRealFormIsSymmetric) {
  const DForm omega = W("Re(zb1*(zb2*z2)*dz1 + 2*(z1*zb1)*zb2*dz2)", R2);
  const DForm oc = complexify(omega);
  EXPECT_EQ(mirror_form(oc), oc);
  EXPECT_TRUE(is_star_symmetric(oc));
}

TEST(Complexify, Examples) {
  EXPECT_EQ(complexify(P("z1*zb1", R1)), P("z1*w1", C1));
  EXPECT_EQ(complexify(P("x1", R1)), P("(z1+w1)/2", C1));
  const Poly p = P("I*z1^2*zb2 - 3*zb1 + 7", R2);
  EXPECT_EQ(decomplexify(complexify(p)), p);
  EXPECT_THROW(complexify(P("z1", C1)), SpaceError);
}

TEST(Decomplexify, Examples) {
  EXPECT_EQ(decomplexify(P("z1*w1", C1)), P("z1*zb1", R1));
  EXPECT_EQ(decomplexify(P("(z1+w1)/2", C1)), P("x1", R1));
  EXPECT_THROW(decomplexify(P("z1", R1)), SpaceError);
}

TEST(IsReal, Examples) {
  EXPECT_TRUE(is_real(P("z1+zb1", R1)).symmetric);
  auto r = is_real(P("I*z1", R1));
  EXPECT_FALSE(r.symmetric);
  EXPECT_FALSE(r.witness.is_zero());
  EXPECT_TRUE(is_real(P("x1^2+y1^2", R1)).symmetric);
  EXPECT_EQ(P("x1^2+y1^2", R1), P("z1*zb1", R1));
}

TEST(IsStarSymmetric, Examples) {
  EXPECT_TRUE(is_star_symmetric(P("z1*w1", C1)).symmetric);
  auto s = is_star_symmetric(P("z1", C1));
  EXPECT_FALSE(s.symmetric);
  EXPECT_EQ(s.witness, P("z1", C1) - P("w1", C1));
  const Poly real_poly = P("x1^3 - 2*y1*x1 + 5", R1);
  EXPECT_TRUE(is_star_symmetric(complexify(real_poly)).symmetric);
}

TEST(SymmetricQuotient, AlreadySymmetric) {
  SymmetricQuotient q = symmetric_quotient(P("z1*w1", C2), P("1+z2*w2", C2));
  EXPECT_EQ(q.G_tilde, P("z1*w1", C2));
  EXPECT_EQ(q.H_tilde, P("1+z2*w2", C2));
  EXPECT_FALSE(q.obstruction);
}

TEST(SymmetricQuotient, ImaginaryRepresentativeRebalances) {
  // num* = -num and den* = -den: the unit is -1, whose square root i lies in Q(i).
  const Poly num = P("I*z1*w1", C2), den = P("I*(1+z2*w2)", C2);
  SymmetricQuotient q = symmetric_quotient(num, den);
  EXPECT_EQ(q.unit, GaussRat(-1));
  EXPECT_EQ(q.alpha * q.alpha, q.unit);
  EXPECT_FALSE(q.obstruction);
  EXPECT_TRUE(is_star_symmetric(q.G_tilde).symmetric);
  EXPECT_TRUE(is_star_symmetric(q.H_tilde).symmetric);
  EXPECT_TRUE((q.G_tilde * den - num * q.H_tilde).is_zero());
}

TEST(SymmetricQuotient, ObstructionWhenNoSquareRoot) {
  // (1-i)* = 1+i = i (1-i): the unit is i, and x^2 = i has no solution in Q(i).
  const Poly num = P("(1-I)*z1*w1", C2), den = P("(1-I)*(1+z2*w2)", C2);
  SymmetricQuotient q = symmetric_quotient(num, den);
  ASSERT_TRUE(q.obstruction);
  EXPECT_EQ(*q.obstruction, GaussRat::i());
  EXPECT_TRUE(is_star_symmetric(q.G_tilde).symmetric);
  EXPECT_TRUE(is_star_symmetric(q.H_tilde).symmetric);
  EXPECT_TRUE((q.G_tilde * den - num * q.H_tilde).is_zero());
}

TEST(SymmetricQuotient, NegativeUnitRepresentative) {
  const Poly num = P("-z1*w1", C1), den = P("-1", C1);
  SymmetricQuotient q = symmetric_quotient(num, den);
  EXPECT_FALSE(q.obstruction);
  EXPECT_TRUE(is_star_symmetric(q.G_tilde).symmetric);
  EXPECT_TRUE(is_star_symmetric(q.H_tilde).symmetric);
  EXPECT_EQ(RatFun(q.G_tilde, q.H_tilde), RatFun(num, den));
}

TEST(SymmetricQuotient, RejectsAsymmetricInput) {
  EXPECT_THROW(symmetric_quotient(P("z1", C1), P("1", C1)), WitnessError);
}

TEST(CommonRealFactor, Examples) {
  auto f = common_real_factor(P("z1*zb1*z2", R2));
  ASSERT_TRUE(f);
  EXPECT_EQ(*f, P("z1*zb1", R2));
  EXPECT_FALSE(common_real_factor(P("z1", R2)));
  EXPECT_FALSE(common_real_factor(P("z1*zb2", R2)));
  // The gcd it relies on, computed directly.
  EXPECT_TRUE(poly_gcd(P("z1*w2", C2), P("z2*w1", C2)).is_constant());
  EXPECT_THROW(common_real_factor(Poly(R1)), DomainError);
}

TEST(CommonRealFactor, AgreesWithFactorEnumeration) {
  const char* cases[] = {"z1*zb1*(z1+1)", "(z1+zb1)*(z1-I)", "(z1+I)*(zb1-I)", "z1^2+zb1", "(z1-zb1)*z1*zb1",
                         "(z1+1)*(zb1+1)*(z1+I)"};
  for (const char* text : cases) {
    const Poly p = P(text, R1);
    auto f = common_real_factor(p);
    EXPECT_EQ(f ? f->total_degree() : 0, oracle::max_real_factor_degree(oracle::to_dense(p))) << text;
  }
}

// ---------------------------------------------------------------- levi

TEST(Decompose, DxOne) {
  LeviDecomposition dec = decompose(W("dx1", R1));
  EXPECT_EQ(dec.eta, W("dz1", R1));
  EXPECT_EQ(dec.omega_sharp, W("dy1", R1));
}

TEST(Decompose, ProjectiveInstance) {
  const VarSpace H = homog(2);
  const DForm eta = W("zb1^2*(z0*dz1 - z1*dz0)", H);
  LeviDecomposition dec = decompose(W("Re(zb1^2*(z0*dz1 - z1*dz0))", H));
  EXPECT_EQ(dec.eta, eta);
  EXPECT_EQ(real_part(dec.eta), W("Re(zb1^2*(z0*dz1 - z1*dz0))", H));
}

TEST(Decompose, LogarithmicRealForm) {
  // lambda = -2.
  const DForm omega = W("zb1*z2*zb2*dz1 + z1*z2*zb2*dzb1 + 2*z1*zb1*zb2*dz2 + 2*z1*zb1*z2*dzb2", R2);
  LeviDecomposition dec = decompose(omega);
  EXPECT_EQ(dec.eta, Q(2) * W("zb1*z2*zb2*dz1 + 2*z1*zb1*zb2*dz2", R2));
  EXPECT_EQ(GaussRat(mpq_class(1, 2)) * (dec.eta + conj_form(dec.eta)), omega);
  EXPECT_EQ(GaussRat(mpq_class(0), mpq_class(-1, 2)) * (dec.eta - conj_form(dec.eta)), dec.omega_sharp);
}

TEST(Decompose, RejectsNonRealInput) {
  EXPECT_THROW(decompose(W("dz1", R1)), WitnessError);
  EXPECT_THROW(decompose(W("dz1", C1)), SpaceError);
}

TEST(IsIntegrable, Examples) {
  EXPECT_TRUE(is_integrable(W("dx1", R1)).passed());
  EXPECT_TRUE(is_integrable(W("z2*dz1 + 2*z1*dz2", R2)).passed());

  const DForm a = W("dz1 + z1*dz2 + dz3", R3);
  Report r = is_integrable(a);
  EXPECT_FALSE(r.passed());
  EXPECT_EQ(r.witness(), W("dz1/\\dz2/\\dz3", R3, 3).str());
  // Oracle: a ^ da evaluated pointwise.
  std::mt19937_64 rng(3);
  for (int k = 0; k < 5; ++k) {
    oracle::Point pt = oracle::random_point(rng, R3.nvars());
    auto lib = oracle::eval(integrability_form(a), pt);
    auto ref = oracle::wedge(*oracle::eval(a, pt), *oracle::exterior_derivative(a, pt));
    EXPECT_EQ(*lib, ref);
  }
}

TEST(LeviDistribution, Examples) {
  EXPECT_EQ(levi_distribution(decompose(W("dx1", R1))), W("dz1/\\dzb1", R1, 2));

  const DForm omega = W("Re((1+z1*zb2)*dz1)", R2);
  EXPECT_EQ(levi_distribution(decompose(omega)), W("(1+z1*zb2)*(1+zb1*z2)*dz1/\\dzb1", R2, 2));

  const VarSpace H = homog(2);
  LeviDecomposition dec = decompose(W("Re(zb1^2*(z0*dz1 - z1*dz0))", H));
  EXPECT_EQ(levi_distribution(dec), W("zb1^2*z1^2*(z0*dz1-z1*dz0)/\\(zb0*dzb1-zb1*dzb0)", H, 2));
}

TEST(ExtractSigma, Examples) {
  HolomorphicSigma a = extract_holomorphic_sigma(W("zb1*(z2*dz1 + z1*dz2)", R2));
  ASSERT_TRUE(a.holomorphic);
  EXPECT_EQ(a.phi, F("zb1", R2));
  EXPECT_EQ(a.sigma, W("z2*dz1 + z1*dz2", R2));

  HolomorphicSigma b = extract_holomorphic_sigma(W("zb1*dz1 + zb2*dz2", R2));
  EXPECT_FALSE(b.holomorphic);
  EXPECT_TRUE(b.failing_ratio.uses_second_block());

  const VarSpace H = homog(2);
  HolomorphicSigma c = extract_holomorphic_sigma(W("zb1^2*(z0*dz1 - z1*dz0)", H));
  ASSERT_TRUE(c.holomorphic);
  EXPECT_EQ(c.phi, F("zb1^2", H));
  EXPECT_EQ(c.sigma, W("z0*dz1 - z1*dz0", H));
}

TEST(ExtractSigma, RationalCoefficients) {
  const DForm eta = W("zb2/(1+z1)*dz1 + zb2*z2*dz2", R2);
  HolomorphicSigma s = extract_holomorphic_sigma(eta);
  ASSERT_TRUE(s.holomorphic);
  EXPECT_EQ(s.phi * s.sigma, eta);
  EXPECT_TRUE(wedge(eta, s.sigma).is_zero());
  EXPECT_TRUE(poly_gcd(polynomial_coefficients(s.sigma), R2).is_constant());
  EXPECT_THROW(extract_holomorphic_sigma(W("dzb1", R1)), DomainError);
}

TEST(TangentToLevels, RadialQuotientAndVerticalFoliation) {
  EXPECT_TRUE(tangent_to_levels(F(kTangentF, R2), W("dz1", R2)).passed());
}

TEST(TangentToLevels, StrictTransform) {
  EXPECT_TRUE(tangent_to_levels(F(kTangentFTilde, R2), W("z2*dz1 + z1*dz2", R2)).passed());
}

TEST(TangentToLevels, TransverseLevelsFail) {
  Report r = tangent_to_levels(F("x2", R2), W("dz1", R2));
  EXPECT_FALSE(r.passed());
  EXPECT_FALSE(r.witness().empty());
  EXPECT_NE(r.witness(), "0");
}

TEST(TangentToLevels, Preconditions) {
  EXPECT_THROW(tangent_to_levels(F("z1", R2), W("dz1", R2)), WitnessError);
  EXPECT_THROW(tangent_to_levels(F("3", R2), W("dz1", R2)), DomainError);
  EXPECT_THROW(tangent_to_levels(F("x1", R2), W("dzb1", R2)), DomainError);
}

TEST(TangentToLevels, LogarithmicFirstIntegral) {
  // |z1 z2^k|^2 is a real first integral of z2 dz1 + k z1 dz2.
  for (int k = 1; k <= 3; ++k) {
    const std::string f = "z1*zb1*(z2*zb2)^" + std::to_string(k);
    const std::string sigma = "z2*dz1 + " + std::to_string(k) + "*z1*dz2";
    EXPECT_TRUE(tangent_to_levels(F(f, R2), W(sigma, R2)).passed()) << k;
  }
}

TEST(LogarithmicIdentity, MatchesDisplayedExpansion) {
  for (int lambda : {-1, -2, -3}) {
    const int k = -lambda;
    const RatFun g = F("z1*zb1*(z2*zb2)^" + std::to_string(k), R2);
    const DForm lhs = F("z1*zb1*z2*zb2", R2) * (g.inverse() * ext_d(g));
    const std::string l = std::to_string(lambda);
    const DForm rhs = W("zb1*z2*zb2*dz1 + z1*z2*zb2*dzb1 - (" + l + ")*z1*zb1*zb2*dz2 - (" + l + ")*z1*zb1*z2*dzb2", R2);
    EXPECT_EQ(lhs, rhs) << lambda;
    EXPECT_TRUE(is_integrable(rhs).passed());
  }
}

TEST(PrimitiveRealPart, Examples) {
  PrimitiveForm a = primitive_real_part(W("z1*zb1*dx1", R1));
  EXPECT_EQ(a.omega, W("dx1", R1));
  EXPECT_EQ(a.removed, P("z1*zb1", R1));

  PrimitiveForm b = primitive_real_part(W("dx1", R1));
  EXPECT_EQ(b.omega, W("dx1", R1));
  EXPECT_EQ(b.removed, Poly::one(R1));
}

TEST(PrimitiveRealPart, ModelFormIsAlreadyPrimitive) {
  // |psi|^2 Re(tau) with psi = z1 z2, tau = dz1/z1 + dz2/z2.
  const DForm omega = W("z1*zb1*z2*zb2*Re(dz1/z1 + dz2/z2)", R2);
  PrimitiveForm p = primitive_real_part(omega);
  for (const auto& [k, c] : p.omega.terms()) EXPECT_TRUE(c.is_polynomial());
  EXPECT_FALSE(common_real_factor(poly_gcd(polynomial_coefficients(p.omega), R2)));
  // With an extra |z1|^2 the factor is found and removed.
  PrimitiveForm q = primitive_real_part(RatFun(P("z1*zb1", R2)) * omega);
  EXPECT_EQ(q.removed, P("z1*zb1", R2));
  EXPECT_FALSE(common_real_factor(poly_gcd(polynomial_coefficients(q.omega), R2)));
}
