// Exterior algebra over the coordinate differentials of a VarSpace.
//
// Basis differentials are numbered like the variables: slots 0..n-1 are
// dz_1..dz_n, slots n..2n-1 are dzb_1..dzb_n (or dw_1..dw_n). A wedge
// monomial is a strictly increasing list of slots; coefficients are RatFun.
#pragma once

#include "lfk/ratfun.hpp"

#include <map>
#include <vector>

namespace lfk {

using WedgeIndex = std::vector<int>;

class DForm {
 public:
  using TermMap = std::map<WedgeIndex, RatFun>;

  DForm() = default;
  DForm(VarSpace space, int degree) : space_(space), degree_(degree) {}

  static DForm zero(VarSpace space, int degree) { return DForm(space, degree); }
  static DForm function(const RatFun& f) {
    DForm r(f.space(), 0);
    if (!f.is_zero()) r.terms_.emplace(WedgeIndex{}, f);
    return r;
  }
  /// The differential of coordinate slot v.
  static DForm basis(VarSpace space, int v) {
    DForm r(space, 1);
    r.terms_.emplace(WedgeIndex{v}, RatFun(Poly::one(space)));
    return r;
  }
  /// Builds c * d(slot_1) ^ ... ^ d(slot_p) for an arbitrary slot order.
  static DForm monomial(VarSpace space, WedgeIndex slots, const RatFun& c) {
    DForm r(space, static_cast<int>(slots.size()));
    int sign = sort_with_sign(slots);
    if (sign != 0 && !c.is_zero()) r.terms_.emplace(std::move(slots), sign < 0 ? -c : c);
    return r;
  }
  /// 1-form sum_k coeffs[k] d(slot k).
  static DForm one_form(VarSpace space, const std::vector<RatFun>& coeffs) {
    DForm r(space, 1);
    for (int v = 0; v < static_cast<int>(coeffs.size()); ++v)
      if (!coeffs[v].is_zero()) r.terms_.emplace(WedgeIndex{v}, coeffs[v]);
    return r;
  }

  const VarSpace& space() const { return space_; }
  int degree() const { return degree_; }
  const TermMap& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }

  /// Coefficient of a (sorted) wedge monomial; zero if absent.
  RatFun coeff(const WedgeIndex& idx) const {
    auto it = terms_.find(idx);
    return it == terms_.end() ? RatFun(space_) : it->second;
  }
  /// Coefficient of d(slot v) in a 1-form.
  RatFun coeff(int v) const { return coeff(WedgeIndex{v}); }
  /// Scalar value of a 0-form.
  RatFun as_function() const {
    if (degree_ != 0) throw DomainError("expected a function (0-form)");
    return coeff(WedgeIndex{});
  }

  void add_term(const WedgeIndex& idx, const RatFun& c) {
    if (c.is_zero()) return;
    auto [it, inserted] = terms_.try_emplace(idx, c);
    if (!inserted) {
      it->second += c;
      if (it->second.is_zero()) terms_.erase(it);
    }
  }

  DForm operator-() const {
    DForm r(space_, degree_);
    for (const auto& [k, c] : terms_) r.terms_.emplace(k, -c);
    return r;
  }
  DForm& operator+=(const DForm& o) {
    check_compatible(o);
    for (const auto& [k, c] : o.terms_) add_term(k, c);
    return *this;
  }
  DForm& operator-=(const DForm& o) {
    check_compatible(o);
    for (const auto& [k, c] : o.terms_) add_term(k, -c);
    return *this;
  }
  friend DForm operator+(DForm a, const DForm& b) { return a += b; }
  friend DForm operator-(DForm a, const DForm& b) { return a -= b; }

  friend DForm operator*(const RatFun& f, const DForm& a) {
    require_same_space(f.space(), a.space_);
    DForm r(a.space_, a.degree_);
    if (f.is_zero()) return r;
    for (const auto& [k, c] : a.terms_) r.terms_.emplace(k, f * c);
    return r;
  }
  friend DForm operator*(const DForm& a, const RatFun& f) { return f * a; }
  friend DForm operator*(const GaussRat& s, const DForm& a) {
    DForm r(a.space_, a.degree_);
    if (s.is_zero()) return r;
    for (const auto& [k, c] : a.terms_) r.terms_.emplace(k, c * s);
    return r;
  }

  friend bool operator==(const DForm& a, const DForm& b) {
    return a.space_ == b.space_ && a.degree_ == b.degree_ && a.terms_ == b.terms_;
  }

  /// Applies f to every coefficient (dropping zeros).
  template <class F>
  DForm map_coefficients(F&& f) const {
    DForm r(space_, degree_);
    for (const auto& [k, c] : terms_) r.add_term(k, f(c));
    return r;
  }

  /// Same form viewed in another flavor of the same n.
  DForm reflavored(Flavor f) const {
    DForm r(space_.with_flavor(f), degree_);
    for (const auto& [k, c] : terms_)
      r.terms_.emplace(k, c.map_parts([f](const Poly& p) { return p.reflavored(f); }));
    return r;
  }

  /// Sorts slots ascending; returns the permutation sign, or 0 on a repeat.
  static int sort_with_sign(WedgeIndex& s) {
    int sign = 1;
    for (std::size_t i = 1; i < s.size(); ++i)
      for (std::size_t j = i; j > 0 && s[j - 1] >= s[j]; --j) {
        if (s[j - 1] == s[j]) return 0;
        std::swap(s[j - 1], s[j]);
        sign = -sign;
      }
    return sign;
  }

  std::string str() const;

 private:
  void check_compatible(const DForm& o) const {
    require_same_space(space_, o.space_);
    if (degree_ != o.degree_ && !is_zero() && !o.is_zero())
      throw DomainError("cannot add forms of different degrees");
  }

  VarSpace space_{};
  int degree_ = 0;
  TermMap terms_;
};

inline std::string slot_differential_name(const VarSpace& s, int v) { return "d" + s.var_name(v); }

inline std::string DForm::str() const {
  if (terms_.empty()) return "0";
  std::string out;
  bool first = true;
  for (const auto& [k, c] : terms_) {
    if (!first) out += " + ";
    first = false;
    std::string wedge;
    for (std::size_t i = 0; i < k.size(); ++i) {
      if (i) wedge += "/\\";
      wedge += slot_differential_name(space_, k[i]);
    }
    if (k.empty())
      return c.str();  // a 0-form has a single term and prints as its function
    if (c.is_one())
      out += wedge;
    else
      out += "(" + c.str() + ")*" + wedge;
  }
  return out;
}

inline std::ostream& operator<<(std::ostream& os, const DForm& a) { return os << a.str(); }

// -------------------------------------------------------------------------
// Exterior operations

inline DForm wedge(const DForm& a, const DForm& b) {
  require_same_space(a.space(), b.space());
  DForm r(a.space(), a.degree() + b.degree());
  for (const auto& [ka, ca] : a.terms())
    for (const auto& [kb, cb] : b.terms()) {
      WedgeIndex k = ka;
      k.insert(k.end(), kb.begin(), kb.end());
      int sign = DForm::sort_with_sign(k);
      if (sign == 0) continue;
      RatFun c = ca * cb;
      r.add_term(k, sign < 0 ? -c : c);
    }
  return r;
}

inline DForm wedge(const DForm& a, const DForm& b, const DForm& c) { return wedge(wedge(a, b), c); }

namespace detail {

/// d restricted to the coordinate slots in [lo, hi).
inline DForm partial_d(const DForm& a, int lo, int hi) {
  DForm r(a.space(), a.degree() + 1);
  for (const auto& [k, c] : a.terms())
    for (int v = lo; v < hi; ++v) {
      if (std::find(k.begin(), k.end(), v) != k.end()) continue;
      RatFun dc = c.derivative(v);
      if (dc.is_zero()) continue;
      WedgeIndex idx;
      idx.reserve(k.size() + 1);
      int before = 0;
      for (int s : k)
        if (s < v) ++before;
      idx = k;
      idx.insert(idx.begin() + before, v);
      r.add_term(idx, before % 2 ? -dc : dc);
    }
  return r;
}

}  // namespace detail

/// Exterior derivative. In REAL_PAIRED flavor z and zb are treated as
/// independent (Wirtinger) coordinates, so d = del + delbar.
inline DForm ext_d(const DForm& a) { return detail::partial_d(a, 0, a.space().nvars()); }

inline DForm ext_d(const RatFun& f) { return ext_d(DForm::function(f)); }

/// Splits d into the part differentiating the z block and the part
/// differentiating the w block.
inline std::pair<DForm, DForm> split_d(const DForm& a) {
  if (a.space().flavor != Flavor::COMPLEXIFIED)
    throw SpaceError("split_d requires a complexified form");
  const int n = a.space().n;
  return {detail::partial_d(a, 0, n), detail::partial_d(a, n, 2 * n)};
}

class VField {
 public:
  VField(VarSpace space, std::vector<RatFun> components)
      : space_(space), components_(std::move(components)) {
    if (static_cast<int>(components_.size()) != space_.nvars())
      throw DomainError("vector field needs one component per variable");
  }
  /// Complex radial field sum_j z_j d/dz_j.
  static VField complex_radial(VarSpace space) {
    std::vector<RatFun> c(space.nvars(), RatFun(space));
    for (int v = 0; v < space.n; ++v) c[v] = RatFun(Poly::variable(space, v));
    return VField(space, std::move(c));
  }
  /// Real radial field, written in Wirtinger coordinates: sum z_j d/dz_j + zb_j d/dzb_j.
  static VField real_radial(VarSpace space) {
    std::vector<RatFun> c;
    for (int v = 0; v < space.nvars(); ++v) c.emplace_back(Poly::variable(space, v));
    return VField(space, std::move(c));
  }
  const VarSpace& space() const { return space_; }
  const RatFun& operator[](int v) const { return components_.at(v); }

 private:
  VarSpace space_;
  std::vector<RatFun> components_;
};

/// Interior product i_X a.
inline DForm contract(const VField& x, const DForm& a) {
  require_same_space(x.space(), a.space());
  if (a.degree() < 1) throw DomainError("cannot contract a function");
  DForm r(a.space(), a.degree() - 1);
  for (const auto& [k, c] : a.terms())
    for (std::size_t pos = 0; pos < k.size(); ++pos) {
      const RatFun& comp = x[k[pos]];
      if (comp.is_zero()) continue;
      WedgeIndex rest = k;
      rest.erase(rest.begin() + static_cast<long>(pos));
      RatFun t = comp * c;
      r.add_term(rest, pos % 2 ? -t : t);
    }
  return r;
}

/// Sub-sum of terms with p first-block and q second-block differentials.
inline DForm type_part(const DForm& a, int p, int q) {
  if (p < 0 || q < 0 || p + q != a.degree()) throw DomainError("type (p,q) inconsistent with form degree");
  const int n = a.space().n;
  DForm r(a.space(), a.degree());
  for (const auto& [k, c] : a.terms()) {
    int first = static_cast<int>(std::count_if(k.begin(), k.end(), [n](int s) { return s < n; }));
    if (first == p) r.add_term(k, c);
  }
  return r;
}

/// Exchanges first/second block slots, transforming each coefficient with f,
/// and reorders with the permutation sign.
template <class F>
DForm swap_slot_blocks(const DForm& a, F&& f) {
  const int n = a.space().n;
  DForm r(a.space(), a.degree());
  for (const auto& [k, c] : a.terms()) {
    WedgeIndex idx;
    for (int s : k) idx.push_back(s < n ? s + n : s - n);
    int sign = DForm::sort_with_sign(idx);
    RatFun nc = f(c);
    r.add_term(idx, sign < 0 ? -nc : nc);
  }
  return r;
}

/// Complex conjugate of a real-paired form.
inline DForm conj_form(const DForm& a) {
  if (a.space().flavor != Flavor::REAL_PAIRED) throw SpaceError("conj requires a real-paired form");
  return swap_slot_blocks(a, [](const RatFun& c) { return conj_ratfun(c); });
}

/// Writes a = E / q with E polynomial-coefficient and q the monic lcm of
/// the coefficient denominators.
inline std::pair<DForm, Poly> clear_denominators(const DForm& a) {
  Poly l = Poly::one(a.space());
  for (const auto& [k, c] : a.terms()) {
    if (c.is_polynomial()) continue;
    Poly g = poly_gcd(l, c.den());
    l = *exact_div(l * c.den(), g);
  }
  l = l.monic();
  DForm e = RatFun(l) * a;
  return {e, l};
}

/// Coefficients of a polynomial-coefficient form as polynomials.
inline std::vector<Poly> polynomial_coefficients(const DForm& a) {
  std::vector<Poly> out;
  for (const auto& [k, c] : a.terms()) {
    if (!c.is_polynomial()) throw DomainError("form has non-polynomial coefficients");
    out.push_back(c.num() * c.den().constant_term().inverse());
  }
  return out;
}

inline int max_coefficient_degree(const DForm& a) {
  int d = 0;
  for (const auto& [k, c] : a.terms()) d = std::max({d, c.num().total_degree(), c.den().total_degree()});
  return d;
}

}  // namespace lfk
