#pragma once

#include <optional>
#include <string>
#include <vector>

#include "ectorsion/numeric.hpp"

namespace ectorsion {

/// Thrown when a curve (or a family member) has vanishing discriminant.
struct SingularCurveError : std::domain_error {
    explicit SingularCurveError(const std::string& what) : std::domain_error(what) {}
};

/// Integral short Weierstrass model Y^2 = X^3 + A X + B.  Construction
/// enforces nonsingularity (4A^3 + 27B^2 != 0).
struct ShortCurve {
    Int A, B;
    ShortCurve(Int a, Int b);
};

/// 4A^3 + 27B^2.
Int discriminant(const ShortCurve& c);

/// Long Weierstrass model Y^2 + a1 XY + a3 Y = X^3 + a2 X^2 + a4 X + a6
/// with exact rational coefficients.
struct GeneralCurve {
    Rat a1, a2, a3, a4, a6;
};

/// Affine rational point or the point at infinity.
class RationalPoint {
  public:
    RationalPoint(Rat x, Rat y) : inf_(false), x_(std::move(x)), y_(std::move(y)) {}
    static RationalPoint infinity() { return RationalPoint(); }

    bool is_infinity() const { return inf_; }
    const Rat& x() const;
    const Rat& y() const;

    bool operator==(const RationalPoint& o) const;
    std::string str() const;

  private:
    RationalPoint() : inf_(true) {}
    bool inf_ = false;
    Rat x_, y_;
};

bool on_curve(const ShortCurve& c, const RationalPoint& p);
bool on_curve(const GeneralCurve& c, const RationalPoint& p);

RationalPoint negate(const RationalPoint& p);

/// Chord-tangent sum with the point at infinity as identity. Rejects points
/// not on the curve.
RationalPoint add(const ShortCurve& c, const RationalPoint& p, const RationalPoint& q);

/// k*P by double-and-add, k >= 0.
RationalPoint scalar_mul(const ShortCurve& c, const Int& k, const RationalPoint& p);

/// Smallest n in {1..12} with n*P = O, or nullopt (non-torsion per Mazur).
std::optional<int> point_order(const ShortCurve& c, const RationalPoint& p);

/// All rational roots of X^3 + A X + B, ascending. The count is 0, 1 or 3.
std::vector<Rat> two_torsion_x(const ShortCurve& c);

}  // namespace ectorsion
