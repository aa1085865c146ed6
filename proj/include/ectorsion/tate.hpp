#pragma once

#include <optional>

#include "ectorsion/curve.hpp"
#include "ectorsion/intpoly.hpp"
#include "ectorsion/ratfunc.hpp"

namespace ectorsion {

/// Affine reparametrization alpha = r*beta + s of the family parameter.
struct MinimalParam {
    Rat r, s;
    bool identity() const { return r == 1 && sgn(s) == 0; }
};

/// One-parameter Tate normal form family
///   Y^2 + (1-c) XY - b Y = X^3 - b X^2
/// with a point of order n at (0, 0).
struct TateFamily {
    int n;
    RatFunc b, c;
    std::optional<MinimalParam> minimal_param;  // n in {4..9}
    int degree_expected;                        // 0 for n in {10, 12}
    Int seminorm_constant;                      // 0 for n in {10, 12}
};

/// The family data for n in {4,...,10,12}.
const TateFamily& tate_family(int n);

/// The family member at a concrete parameter value. Rejects bad n, parameter
/// poles, and singular members.
GeneralCurve tate_curve(int n, const Rat& alpha);

/// Short-form coefficients A_n(alpha), B_n(alpha) of the generic member,
/// derived symbolically through the same pipeline used for concrete curves.
/// n in {4,...,9}.
struct FamilyShortCoeffs {
    RatFunc A, B;
};
const FamilyShortCoeffs& family_short_coeffs(int n);

/// The final polynomial is linear in A^3 and B^2: F = S*A^3 + T*B^2.
struct FinalPolyPair {
    IntPoly S, T;
    IntPoly at(const Int& A, const Int& B) const;
};

/// Pre-substitution pair in alpha: A^3*B_n(alpha)^2 - B^2*A_n(alpha)^3 with
/// rational-function denominators cleared, nothing else removed.
const FinalPolyPair& final_poly_pair_raw(int n);

/// Normalized pair in the minimal parameter beta: the common polynomial/
/// integer factor of the raw pair is removed, the minimal-parameter
/// substitution applied, and denominators cleared to a jointly primitive
/// integer pair.
const FinalPolyPair& final_poly_pair(int n);

/// P_n(alpha) for a concrete curve (pre-substitution form).
IntPoly final_polynomial_raw(int n, const ShortCurve& c);

/// F_n(beta) for a concrete curve. n in {4,...,9}.
IntPoly final_polynomial(int n, const ShortCurve& c);

/// max{|A|^3, B^2}.
Int curve_height(const ShortCurve& c);

/// seminorm(F_n) <= c_n * max{|A|^3, B^2} with the per-family constant.
bool seminorm_bound_check(int n, const ShortCurve& c);

/// Sum over coefficients of |S_i| + |T_i| for the normalized pair: a bound
/// for seminorm(F_n)/N valid for every curve.
Int seminorm_symbolic_bound(int n);

}  // namespace ectorsion
