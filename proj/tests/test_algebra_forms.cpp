#include <gtest/gtest.h>

#include <functional>

#include "support/fixtures.hpp"
#include "support/oracles.hpp"

using namespace lfk;
using namespace lfk::testing;

namespace {

const VarSpace R1 = real(1), R2 = real(2), R3 = real(3);

// Compares a library form with the numeric oracle at a handful of points.
void expect_agrees(const DForm& lib, const std::function<std::optional<oracle::NumForm>(const oracle::Point&)>& ref,
                   int samples = 8) {
  std::mt19937_64 rng(17);
  int checked = 0;
  for (int k = 0; k < 50 && checked < samples; ++k) {
    oracle::Point pt = oracle::random_point(rng, lib.space().nvars());
    auto a = oracle::eval(lib, pt);
    auto b = ref(pt);
    if (!a || !b) continue;
    EXPECT_EQ(*a, *b) << lib.str();
    ++checked;
  }
  EXPECT_EQ(checked, samples);
}

}  // namespace

// ---------------------------------------------------------------- GaussRat

TEST(GaussRat, ArithmeticIsExact) {
  GaussRat a(mpq_class(1, 3), mpq_class(2)), b(mpq_class(-1, 2), mpq_class(1, 4));
  EXPECT_EQ((a * b) / b, a);
  EXPECT_EQ(a * a.inverse(), GaussRat(1));
  EXPECT_EQ(a.conj().conj(), a);
  EXPECT_EQ(GaussRat::i() * GaussRat::i(), GaussRat(-1));
  EXPECT_THROW(GaussRat().inverse(), DomainError);
}

TEST(GaussRat, SquareRootsInQi) {
  EXPECT_EQ(*GaussRat(-1).sqrt() * *GaussRat(-1).sqrt(), GaussRat(-1));
  auto r = GaussRat(mpq_class(0), mpq_class(2)).sqrt();  // 2i = (1+i)^2
  ASSERT_TRUE(r);
  EXPECT_EQ(*r * *r, GaussRat(mpq_class(0), mpq_class(2)));
  EXPECT_FALSE(GaussRat::i().sqrt());
  EXPECT_FALSE(GaussRat(2).sqrt());
}

// ---------------------------------------------------------------- Poly

TEST(PolyArith, DifferenceOfSquares) {
  EXPECT_EQ(P("z1+zb1", R1) * P("z1-zb1", R1), P("z1^2-zb1^2", R1));
  EXPECT_EQ((P("z1+zb1", R1) * P("z1-zb1", R1)).str(), "z1^2 - zb1^2");
}

TEST(PolyArith, AdditiveIdentity) {
  Poly p = P("3*z1*zb2 - I*z2 + 1/2", R2);
  EXPECT_EQ(p + Poly(R2), p);
  EXPECT_EQ(p - p, Poly(R2));
}

TEST(PolyArith, MonomialProduct) {
  EXPECT_EQ(P("z1*zb2", R2) * P("z2*zb1", R2), P("z1*z2*zb1*zb2", R2));
}

TEST(PolyArith, SpaceMismatchRejected) {
  EXPECT_THROW(P("z1", R1) + P("z1", R2), SpaceError);
  EXPECT_THROW(P("z1", R1) * P("z1", cplx(1)), SpaceError);
}

TEST(ExactDiv, Examples) {
  auto q = exact_div(P("z1^2-zb1^2", R1), P("z1-zb1", R1));
  ASSERT_TRUE(q);
  EXPECT_EQ(*q, P("z1+zb1", R1));
  EXPECT_FALSE(exact_div(P("z1", R2), P("z2", R2)));
  auto q2 = exact_div(P("z1*zb1*z2", R2), P("z1*zb1", R2));
  ASSERT_TRUE(q2);
  EXPECT_EQ(*q2, P("z2", R2));
  EXPECT_THROW(exact_div(P("z1", R1), Poly(R1)), DomainError);
}

TEST(PolyGcd, Examples) {
  EXPECT_EQ(poly_gcd(P("z1*z2", R2), P("z1*zb1", R2)), P("z1", R2));
  EXPECT_EQ(poly_gcd(P("2*z1+4", R1), Poly(R1)), P("z1+2", R1));

  const Poly a = P("z1^2-zb1^2", R1), b = P("z1+zb1", R1);
  const Poly g = poly_gcd(a, b);
  EXPECT_EQ(g, b);
  EXPECT_TRUE(exact_div(a, g));
  EXPECT_TRUE(exact_div(b, g));
}

TEST(PolyGcd, MultivariateCommonFactor) {
  const Poly f = P("z1*zb2 + 3*I*z2 - 1", R2), g = P("z1 + zb1*zb2", R2), h = P("z2^2 - I*zb1", R2);
  const Poly d = poly_gcd(f * g, f * h);
  EXPECT_EQ(d, f.monic());
}

TEST(ConjPoly, Examples) {
  EXPECT_EQ(conj_poly(P("I*z1", R1)), P("-I*zb1", R1));
  EXPECT_EQ(conj_poly(P("z1*zb2", R2)), P("z2*zb1", R2));
  EXPECT_EQ(conj_poly(P("x1", R1)), P("(z1+zb1)/2", R1));
  EXPECT_THROW(conj_poly(P("z1", cplx(1))), SpaceError);
}

TEST(Bidegree, Examples) {
  const VarSpace H = homog(2);
  const Poly p = P("zb1^2*z0", H);
  ASSERT_TRUE(bidegree(p));
  EXPECT_EQ(*bidegree(p), std::make_pair(1, 2));
  // Independent check: count the exponents of the single term by hand.
  for (const auto& [e, c] : p.terms()) {
    EXPECT_EQ(e[0] + e[1], 1);
    EXPECT_EQ(e[2] + e[3], 2);
  }
  EXPECT_FALSE(bidegree(P("z1 + z1*zb1", R1)));
  EXPECT_EQ(*bidegree(Poly::one(R1)), std::make_pair(0, 0));
  EXPECT_THROW(bidegree(Poly(R1)), DomainError);
}

// ---------------------------------------------------------------- RatFun

TEST(RatFunNormalize, Examples) {
  RatFun a = ratfun_normalize(P("z1*z2", R2), P("z2", R2));
  EXPECT_EQ(a.num(), P("z1", R2));
  EXPECT_EQ(a.den(), Poly::one(R2));

  RatFun z = ratfun_normalize(Poly(R2), P("z1+z2", R2));
  EXPECT_TRUE(z.is_zero());
  EXPECT_EQ(z.den(), Poly::one(R2));

  RatFun c = ratfun_normalize(P("z1^2-zb1^2", R1), P("z1-zb1", R1));
  EXPECT_EQ(c.num(), P("z1+zb1", R1));
  EXPECT_EQ(c.den(), Poly::one(R1));

  EXPECT_THROW(ratfun_normalize(P("z1", R1), Poly(R1)), DomainError);
}

TEST(RatFunNormalize, DenominatorIsMonic) {
  RatFun f(P("z1", R1), P("2*I*zb1 + 4", R1));
  EXPECT_TRUE(f.den().leading_coeff().is_one());
  EXPECT_EQ(f * RatFun(P("2*I*zb1 + 4", R1)), RatFun(P("z1", R1)));
}

// ---------------------------------------------------------------- Forms

TEST(Wedge, Examples) {
  EXPECT_TRUE(wedge(W("dz1", R2), W("dz1", R2)).is_zero());
  EXPECT_EQ(wedge(W("dz1", R2), W("dz2", R2)), -wedge(W("dz2", R2), W("dz1", R2)));
}

TEST(Wedge, PencilMemberAgainstTheLogForm) {
  // (z2 dz1 - lambda z1 dz2) ^ (dz1/z1 + dz2/z2) with lambda = -2.
  const DForm a = W("z2*dz1 + 2*z1*dz2", R2), b = W("dz1/z1 + dz2/z2", R2);
  const DForm w = wedge(a, b);
  expect_agrees(w, [&](const oracle::Point& pt) -> std::optional<oracle::NumForm> {
    auto x = oracle::eval(a, pt), y = oracle::eval(b, pt);
    if (!x || !y) return std::nullopt;
    return oracle::wedge(*x, *y);
  });
  // (1 + lambda) dz1 ^ dz2.
  EXPECT_EQ(w, W("-dz1/\\dz2", R2, 2));
}

TEST(Wedge, GradedCommutative) {
  const DForm a = W("z1*dz1 + zb2*dzb1", R2), b = W("dz2/\\dzb2", R2, 2);
  EXPECT_EQ(wedge(a, b), wedge(b, a));
  EXPECT_EQ(wedge(a, W("dz2", R2)), -wedge(W("dz2", R2), a));
  EXPECT_THROW(wedge(W("dz1", R1), W("dz1", R2)), SpaceError);
}

TEST(ExtD, Examples) {
  EXPECT_EQ(ext_d(F("z1*zb1", R1)), W("zb1*dz1 + z1*dzb1", R1));
  EXPECT_TRUE(ext_d(W("dz1", R2)).is_zero());
  EXPECT_EQ(ext_d(W("dz1", R2)).degree(), 2);
}

TEST(ExtD, LinearMemberAgainstOracle) {
  for (int lam : {-3, -2, -1, 2}) {
    const DForm a = RatFun(P("z2", R2)) * W("dz1", R2) - Q(lam) * (RatFun(P("z1", R2)) * W("dz2", R2));
    const DForm da = ext_d(a);
    expect_agrees(da, [&](const oracle::Point& pt) { return oracle::exterior_derivative(a, pt); });
    EXPECT_EQ(da, Q(-(1 + lam)) * W("dz1/\\dz2", R2, 2));
  }
}

TEST(ExtD, RationalCoefficientsAgainstOracle) {
  const DForm a = W("zb1/(1+z1*z2)*dz2 + z2^2*zb2*dzb1", R2);
  expect_agrees(ext_d(a), [&](const oracle::Point& pt) { return oracle::exterior_derivative(a, pt); });
}

TEST(SplitD, Examples) {
  const VarSpace C1 = cplx(1), C2 = cplx(2);
  auto [dz, dw] = split_d(DForm::function(F("z1*w1", C1)));
  EXPECT_EQ(dw, W("z1*dw1", C1));
  EXPECT_EQ(dz, W("w1*dz1", C1));

  const DForm a = W("z1*w2*dz2 + w1^2*dw2", C2);
  auto [pz, pw] = split_d(a);
  EXPECT_EQ(pz + pw, ext_d(a));

  auto [gz, gw] = split_d(DForm::function(F("z1^3 + z2", C2)));
  EXPECT_TRUE(gw.is_zero());
  EXPECT_THROW(split_d(W("dz1", R1)), SpaceError);
}

TEST(Contract, Examples) {
  const VField rad = VField::complex_radial(R2);
  EXPECT_TRUE(contract(rad, W("z2*dz1 - z1*dz2", R2)).is_zero());
  EXPECT_EQ(contract(rad, W("dz1", R2)).as_function(), F("z1", R2));

  const VarSpace H = homog(2);
  const DForm eta = W("zb1^2*(z0*dz1 - z1*dz0)", H);
  const DForm c = contract(VField::complex_radial(H), eta);
  EXPECT_TRUE(c.is_zero());
  std::mt19937_64 rng(5);
  for (int k = 0; k < 5; ++k) {
    oracle::Point pt = oracle::random_point(rng, H.nvars());
    std::vector<GaussRat> x{pt[0], pt[1], GaussRat(), GaussRat()};
    EXPECT_TRUE(oracle::contract(x, *oracle::eval(eta, pt)).empty());
  }
  EXPECT_THROW(contract(rad, DForm::function(F("z1", R2))), DomainError);
}

TEST(TypePart, Examples) {
  EXPECT_EQ(type_part(W("dz1 + dzb1", R1), 1, 0), W("dz1", R1));
  EXPECT_TRUE(type_part(W("dz1", R1), 0, 1).is_zero());
  const DForm a = W("z1*dz1/\\dz2 + dz1/\\dzb2 + zb1*dzb1/\\dzb2", R2, 2);
  EXPECT_EQ(type_part(a, 2, 0) + type_part(a, 1, 1) + type_part(a, 0, 2), a);
  EXPECT_THROW(type_part(a, 1, 0), DomainError);
}

TEST(ClearDenominators, PolynomialMultiple) {
  const DForm a = W("dz1/z1 + dz2/(z2+1)", R2);
  auto [e, l] = clear_denominators(a);
  EXPECT_EQ(e, RatFun(l) * a);
  for (const auto& c : polynomial_coefficients(e)) EXPECT_FALSE(c.is_zero());
  EXPECT_EQ(max_coefficient_degree(e), 1);
}
