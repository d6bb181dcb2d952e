// Integrable pencils a*eta1 + b*eta2, their connection form and curvature.
//
// The connection form theta is the meromorphic 1-form with
// d(eta_i) = theta ^ eta_i for both generators. It is found by a linear
// ansatz theta = Theta / D, where Theta has unknown polynomial coefficients
// of bounded degree and D is a supplied denominator.
#pragma once

#include "lfk/levi.hpp"
#include "lfk/linear_solve.hpp"

#include <optional>
#include <tuple>

namespace lfk {

struct Pencil {
  DForm eta1;
  DForm eta2;
};

struct PencilCert {
  DForm theta;
  DForm curvature;
  std::optional<RatFun> alpha;
  std::optional<std::pair<RatFun, RatFun>> mu;
  std::optional<std::pair<RatFun, RatFun>> k;
};

inline void require_one_forms(const DForm& a, const DForm& b, const char* who) {
  require_same_space(a.space(), b.space());
  if (a.degree() != 1 || b.degree() != 1) throw DomainError(std::string(who) + ": expected 1-forms");
}

inline Report pencil_condition(const DForm& eta1, const DForm& eta2) {
  require_one_forms(eta1, eta2, "pencil_condition");
  Report r;
  DForm i1 = integrability_form(eta1), i2 = integrability_form(eta2);
  r.check("eta1 integrable", i1.is_zero(), i1.str());
  r.check("eta2 integrable", i2.is_zero(), i2.str());
  DForm w = wedge(eta1, ext_d(eta2)) + wedge(eta2, ext_d(eta1));
  r.check("eta1^d(eta2)+eta2^d(eta1)=0", w.is_zero(), w.str());
  return r;
}

inline Report member_integrability(const Pencil& p, const GaussRat& a, const GaussRat& b) {
  if (a.is_zero() && b.is_zero()) throw DomainError("member_integrability: (a,b) = (0,0)");
  DForm m = a * p.eta1 + b * p.eta2;
  DForm w = integrability_form(m);
  Report r;
  r.check("member " + a.str() + "," + b.str() + " integrable", w.is_zero(), w.str());
  return r;
}

inline DForm axis(const Pencil& p) {
  DForm ax = wedge(p.eta1, p.eta2);
  if (ax.is_zero()) throw DomainError("axis: eta1 and eta2 are not independent");
  return ax;
}

// -------------------------------------------------------------------------
// Default ansatz parameters

namespace detail {

/// Refines a list of polynomials into pairwise coprime square-free factors
/// whose products recover the inputs' radicals.
inline std::vector<Poly> coprime_base(std::vector<Poly> items) {
  std::vector<Poly> base;
  for (auto& p : items) {
    if (p.is_constant()) continue;
    base.push_back(squarefree_part(p));
  }
  bool changed = true;
  while (changed) {
    changed = false;
    for (std::size_t i = 0; i < base.size() && !changed; ++i)
      for (std::size_t j = i + 1; j < base.size() && !changed; ++j) {
        Poly g = poly_gcd(base[i], base[j]);
        if (g.is_constant()) continue;
        Poly a = *exact_div(base[i], g), b = *exact_div(base[j], g);
        base.erase(base.begin() + static_cast<long>(j));
        base.erase(base.begin() + static_cast<long>(i));
        for (Poly* q : {&a, &b, &g})
          if (!q->is_constant()) base.push_back(q->monic());
        changed = true;
      }
  }
  std::sort(base.begin(), base.end(), [](const Poly& x, const Poly& y) { return x.str() < y.str(); });
  base.erase(std::unique(base.begin(), base.end()), base.end());
  return base;
}

}  // namespace detail

/// Product of the distinct factors obtained by gcd-splitting the coefficients
/// of the cleared axis and the denominators of the generators. Variables
/// dividing some coefficient contribute themselves.
inline Poly default_denominator(const Pencil& p) {
  const VarSpace space = p.eta1.space();
  std::vector<Poly> pieces;
  for (const DForm* f : {&p.eta1, &p.eta2})
    for (const auto& [k, c] : f->terms()) pieces.push_back(c.den());
  auto [cleared, l] = clear_denominators(axis(p));
  for (const auto& c : polynomial_coefficients(cleared)) pieces.push_back(c);

  std::vector<bool> var_used(space.nvars(), false);
  std::vector<Poly> stripped;
  for (const auto& q : pieces) {
    if (q.is_constant()) continue;
    Exponents m = detail::min_exponents(q);
    for (int v = 0; v < space.nvars(); ++v)
      if (m[v] > 0) var_used[v] = true;
    stripped.push_back(detail::divide_by_monomial(q, m));
  }
  Poly d = Poly::one(space);
  for (int v = 0; v < space.nvars(); ++v)
    if (var_used[v]) d *= Poly::variable(space, v);
  for (const auto& f : detail::coprime_base(std::move(stripped))) d *= f;
  return d;
}

/// 1 + the largest total degree among the generators' coefficients.
inline int default_degree_bound(const Pencil& p) {
  return 1 + std::max(max_coefficient_degree(p.eta1), max_coefficient_degree(p.eta2));
}

// -------------------------------------------------------------------------
// Connection form

enum class ThetaStatus { SOLVED, NO_SOLUTION, AMBIGUOUS };

inline const char* theta_status_name(ThetaStatus s) {
  switch (s) {
    case ThetaStatus::SOLVED: return "SOLVED";
    case ThetaStatus::NO_SOLUTION: return "NO_SOLUTION";
    case ThetaStatus::AMBIGUOUS: return "AMBIGUOUS";
  }
  return "NO_SOLUTION";
}

struct ThetaResult {
  ThetaStatus status = ThetaStatus::NO_SOLUTION;
  std::optional<PencilCert> cert;
  /// Dimension of the homogenized solution space; 1 means a unique theta.
  int kernel_dim = 0;
  /// For AMBIGUOUS: candidate forms spanning the solutions.
  std::vector<DForm> basis;
  int degree_bound = 0;
  Poly denominator;
  int unknowns = 0;
};

namespace detail {

inline std::vector<Exponents> monomials_up_to(int nvars, int bound) {
  std::vector<Exponents> out;
  Exponents e(nvars, 0);
  std::function<void(int, int)> rec = [&](int v, int left) {
    if (v == nvars) {
      out.push_back(e);
      return;
    }
    for (int k = 0; k <= left; ++k) {
      e[v] = k;
      rec(v + 1, left - k);
    }
    e[v] = 0;
  };
  rec(0, bound);
  return out;
}

}  // namespace detail

/// Solves d(eta_i) = theta ^ eta_i with theta = Theta / denominator and the
/// coefficients of Theta polynomials of total degree <= degree_bound.
///
/// Writing eta_i = E_i / q_i with E_i polynomial, the equations become
///   q_i Theta ^ E_i - t D (q_i dE_i - dq_i ^ E_i) = 0,
/// linear in the coefficients of Theta and the extra unknown t; solutions with
/// t = 1 are the connection forms.
inline ThetaResult solve_theta(const Pencil& p, int degree_bound, const Poly& denominator) {
  require_one_forms(p.eta1, p.eta2, "solve_theta");
  require_same_space(p.eta1.space(), denominator.space());
  if (denominator.is_zero()) throw DomainError("solve_theta: zero denominator");
  if (degree_bound < 0) throw DomainError("solve_theta: negative degree bound");
  const VarSpace space = p.eta1.space();
  const int nv = space.nvars();
  const auto monos = detail::monomials_up_to(nv, degree_bound);
  const int per_slot = static_cast<int>(monos.size());
  const int t_col = nv * per_slot;

  ThetaResult res;
  res.degree_bound = degree_bound;
  res.denominator = denominator;
  res.unknowns = t_col + 1;

  // Row key: (generator, wedge index, exponent).
  using RowKey = std::tuple<int, WedgeIndex, Exponents>;
  std::map<RowKey, SparseRow> rows;
  auto add_poly_form = [&](int gen, const DForm& f, int col, const Exponents* shift) {
    for (const auto& [idx, c] : f.terms())
      for (const auto& [e, coef] : c.num().terms()) {
        Exponents ex = e;
        if (shift)
          for (int v = 0; v < nv; ++v) ex[v] += (*shift)[v];
        auto& row = rows[RowKey{gen, idx, ex}];
        auto [it, inserted] = row.try_emplace(col, coef);
        if (!inserted) {
          it->second += coef;
          if (it->second.is_zero()) row.erase(it);
        }
      }
  };

  int gen = 0;
  for (const DForm* eta : {&p.eta1, &p.eta2}) {
    auto [e, q] = clear_denominators(*eta);
    const RatFun qf(q);
    // Constant term: -D (q dE - dq ^ E).
    DForm rhs = RatFun(q) * ext_d(e) - wedge(ext_d(qf), e);
    add_poly_form(gen, GaussRat(-1) * (RatFun(denominator) * rhs), t_col, nullptr);
    for (int s = 0; s < nv; ++s) {
      DForm base = qf * wedge(DForm::basis(space, s), e);
      for (int m = 0; m < per_slot; ++m) add_poly_form(gen, base, s * per_slot + m, &monos[m]);
    }
    ++gen;
  }

  EchelonSystem sys(res.unknowns);
  for (auto& [key, row] : rows)
    if (!row.empty()) sys.add_row(std::move(row));
  auto kernel = sys.kernel();
  res.kernel_dim = static_cast<int>(kernel.size());

  auto to_form = [&](const std::vector<GaussRat>& x) {
    std::vector<RatFun> coeffs;
    for (int s = 0; s < nv; ++s) {
      Poly c(space);
      for (int m = 0; m < per_slot; ++m)
        if (!x[s * per_slot + m].is_zero()) c.add_term(monos[m], x[s * per_slot + m]);
      coeffs.emplace_back(c, denominator);
    }
    return DForm::one_form(space, coeffs);
  };

  if (kernel.empty()) return res;
  if (kernel.size() > 1) {
    res.status = ThetaStatus::AMBIGUOUS;
    for (const auto& x : kernel) res.basis.push_back(to_form(x));
    return res;
  }
  const auto& x = kernel.front();
  if (x[t_col].is_zero()) return res;
  std::vector<GaussRat> scaled = x;
  const GaussRat inv = x[t_col].inverse();
  for (auto& v : scaled) v *= inv;
  DForm theta = to_form(scaled);
  for (const DForm* eta : {&p.eta1, &p.eta2})
    if (!(ext_d(*eta) == wedge(theta, *eta))) throw Error("solve_theta: solution failed substitution");
  res.status = ThetaStatus::SOLVED;
  res.cert = PencilCert{theta, ext_d(theta), std::nullopt, std::nullopt, std::nullopt};
  return res;
}

/// solve_theta with the default denominator (unless given) and a bound that
/// grows by one after each NO_SOLUTION, for at most `retries` extra attempts.
inline ThetaResult solve_theta_auto(const Pencil& p, std::optional<int> degree_bound = std::nullopt,
                                    std::optional<Poly> denominator = std::nullopt, int retries = 3) {
  Poly den = denominator ? *denominator : default_denominator(p);
  int bound = degree_bound ? *degree_bound : default_degree_bound(p);
  ThetaResult res;
  for (int attempt = 0; attempt <= retries; ++attempt, ++bound) {
    res = solve_theta(p, bound, den);
    if (res.status != ThetaStatus::NO_SOLUTION) break;
  }
  return res;
}

// -------------------------------------------------------------------------
// Curvature certificates

struct RatioResult {
  bool ok = false;
  RatFun ratio;
  /// When not ok: the two inconsistent ratios (or the offending coefficient).
  std::string witness;
};

/// The function r with a = r * b for forms of equal degree, if one exists.
inline RatioResult form_ratio(const DForm& a, const DForm& b) {
  require_same_space(a.space(), b.space());
  RatioResult out;
  out.ratio = RatFun(a.space());
  if (a.is_zero()) {
    out.ok = true;
    return out;
  }
  if (b.is_zero()) {
    out.witness = a.str();
    return out;
  }
  const auto& [idx, bc] = *b.terms().begin();
  RatFun r = a.coeff(idx) / bc;
  DForm diff = a - r * b;
  if (!diff.is_zero()) {
    // Report two disagreeing coefficient ratios.
    const auto& [didx, dc] = *diff.terms().begin();
    RatFun bd = b.coeff(didx);
    std::string other = bd.is_zero() ? "(" + a.coeff(didx).str() + ")/0" : (a.coeff(didx) / bd).str();
    out.witness = r.str() + " vs " + other;
    return out;
  }
  out.ok = true;
  out.ratio = r;
  return out;
}

/// alpha with d(theta) = alpha * axis.
inline RatioResult collinearity_alpha(const PencilCert& cert, const DForm& ax) {
  return form_ratio(cert.curvature, ax);
}

inline Report axis_first_integral_check(const RatFun& f, const Pencil& p) {
  if (f.is_constant()) throw DomainError("axis_first_integral_check: F is constant");
  DForm w = wedge(ext_d(f), p.eta1, p.eta2);
  Report r;
  r.check("dF^eta1^eta2=0", w.is_zero(), w.str());
  return r;
}

enum class SubcaseMode { MU, K };

struct SpanResult {
  bool ok = false;
  std::pair<RatFun, RatFun> coeffs;
  std::string witness;
};

/// Writes target = c1 eta1 + c2 eta2 over the function field, verified by
/// substitution.
inline SpanResult pencil_span(const DForm& target, const Pencil& p) {
  const DForm ax = axis(p);
  SpanResult out;
  RatioResult c1 = form_ratio(wedge(target, p.eta2), ax);
  RatioResult c2 = form_ratio(wedge(p.eta1, target), ax);
  if (!c1.ok || !c2.ok) {
    out.witness = !c1.ok ? c1.witness : c2.witness;
    return out;
  }
  DForm diff = target - (c1.ratio * p.eta1 + c2.ratio * p.eta2);
  if (!diff.is_zero()) {
    out.witness = diff.str();
    return out;
  }
  out.ok = true;
  out.coeffs = {c1.ratio, c2.ratio};
  return out;
}

/// MU: theta = mu1 eta1 + mu2 eta2 (alpha constant).
/// K:  dalpha / (2 alpha) + theta = k1 eta1 + k2 eta2 (alpha non-constant).
inline SpanResult subcase_coefficients(const PencilCert& cert, const Pencil& p, SubcaseMode mode) {
  RatFun alpha;
  if (cert.alpha) {
    alpha = *cert.alpha;
  } else {
    RatioResult a = collinearity_alpha(cert, axis(p));
    if (!a.ok) throw WitnessError("subcase_coefficients: curvature not collinear with the axis", a.witness);
    alpha = a.ratio;
  }
  if (mode == SubcaseMode::MU) {
    if (!alpha.is_constant()) throw DomainError("subcase_coefficients: MU requires a constant alpha");
    return pencil_span(cert.theta, p);
  }
  if (alpha.is_constant()) throw DomainError("subcase_coefficients: K requires a non-constant alpha");
  DForm target = GaussRat(mpq_class(1, 2)) * (alpha.inverse() * ext_d(alpha)) + cert.theta;
  return pencil_span(target, p);
}

/// theta' = theta + dh/h for the rescaled pencil (h eta1, h eta2).
inline PencilCert unit_rescale_theta(const PencilCert& cert, const RatFun& h) {
  if (h.is_zero()) throw DomainError("unit_rescale_theta: h is zero");
  PencilCert out = cert;
  out.theta = cert.theta + h.inverse() * ext_d(h);
  out.curvature = ext_d(out.theta);
  out.mu.reset();
  out.k.reset();
  return out;
}

}  // namespace lfk
