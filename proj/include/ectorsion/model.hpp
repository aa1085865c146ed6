#pragma once

#include <optional>
#include <variant>
#include <vector>

#include "ectorsion/curve.hpp"

namespace ectorsion {

/// Change of variables from a long model to Y^2 = X^3 - 27c4 X - 54c6:
/// x' = 36x + 3*b2, y' = 108*(2y + a1*x + a3).
struct LongToShortStep {
    Rat a1, a3, b2;
    bool inverted = false;
};

/// u-scaling: (x, y) on (A, B) maps to (x/u^2, y/u^3) on (A/u^4, B/u^6).
struct ScaleStep {
    Rat u;
    bool inverted = false;
};

/// Invertible composition of model changes, applied left to right.
class ModelMap {
  public:
    ModelMap() = default;  // identity

    static ModelMap long_to_short(Rat a1, Rat a3, Rat b2);
    static ModelMap scale(Rat u);

    ModelMap then(const ModelMap& next) const;
    ModelMap inverse() const;
    RationalPoint apply(const RationalPoint& p) const;

    using Step = std::variant<LongToShortStep, ScaleStep>;
    const std::vector<Step>& steps() const { return steps_; }

  private:
    std::vector<Step> steps_;
};

inline RationalPoint apply_map(const ModelMap& m, const RationalPoint& p) { return m.apply(p); }

/// b- and c-invariant pipeline to the -27c4/-54c6 short form, generic over
/// the coefficient field (exact rationals or rational functions).
template <class K>
struct ShortCoeffs {
    K A, B, b2;
};

template <class K>
ShortCoeffs<K> short_form_coeffs(const K& a1, const K& a2, const K& a3, const K& a4, const K& a6) {
    K b2 = a1 * a1 + K(4) * a2;
    K b4 = K(2) * a4 + a1 * a3;
    K b6 = a3 * a3 + K(4) * a6;
    K c4 = b2 * b2 - K(24) * b4;
    K c6 = -(b2 * b2 * b2) + K(36) * b2 * b4 - K(216) * b6;
    return {K(-27) * c4, K(-54) * c6, b2};
}

struct ShortFormResult {
    Rat A, B;
    ModelMap map;  // points on the long model -> points on (A, B)
};

ShortFormResult to_short_form(const GeneralCurve& g);

struct IntegralModelResult {
    ShortCurve curve;
    ModelMap map;  // points on (A, B) -> points on the integral model
    Rat u;
};

/// Scale (A, B) by the largest u with A/u^4, B/u^6 both integral.
/// Rejects singular input.
IntegralModelResult to_integral_model(const Rat& A, const Rat& B);

/// Rational u with u^4 = A/C and u^6 = B/D, when one exists (u > 0 returned;
/// -u works equally). Vanishing coefficients follow the one-sided rules.
std::optional<Rat> find_scaling(const Rat& A, const Rat& B, const Rat& C, const Rat& D);

/// A^3/B^2 as a scaling invariant, with markers for the vanishing cases.
struct InvariantRatio {
    enum class Kind { finite, j_zero, j_inf };
    Kind kind;
    Rat value;  // meaningful only when finite

    bool operator==(const InvariantRatio& o) const {
        return kind == o.kind && (kind != Kind::finite || value == o.value);
    }
};

InvariantRatio invariant_ratio(const ShortCurve& c);

}  // namespace ectorsion
