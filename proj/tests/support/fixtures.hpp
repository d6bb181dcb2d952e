// Short spellings for building test inputs from expression text.
#pragma once

#include "lfk/lfk.hpp"

#include <string_view>

namespace lfk::testing {

inline VarSpace real(int n) { return VarSpace{n, Flavor::REAL_PAIRED, 1}; }
inline VarSpace cplx(int n) { return VarSpace{n, Flavor::COMPLEXIFIED, 1}; }
/// Homogeneous coordinates z0..z(n-1).
inline VarSpace homog(int n) { return VarSpace{n, Flavor::REAL_PAIRED, 0}; }
/// Binary forms in u1, u2.
inline ParseContext binary() { return ParseContext{VarSpace{2, Flavor::REAL_PAIRED, 1}, true}; }

inline Poly P(std::string_view text, VarSpace s) { return parse_poly(text, s); }
inline RatFun F(std::string_view text, VarSpace s) { return parse_function(text, s); }
inline DForm W(std::string_view text, VarSpace s, int degree = 1) { return parse_form(text, s, degree); }
inline GaussRat Q(long num, long den = 1) { return GaussRat(mpq_class(num, den)); }

}  // namespace lfk::testing
