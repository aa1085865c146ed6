#pragma once

#include <array>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "ectorsion/curve.hpp"
#include "ectorsion/model.hpp"

namespace ectorsion {

/// The fifteen torsion groups possible over Q.
struct MazurOrders {
    static constexpr std::array<int, 11> cyclic{1, 2, 3, 4, 5, 6, 7, 8, 9, 10, 12};
    static constexpr std::array<int, 4> product_second{2, 4, 6, 8};
    static bool allows_cyclic(int n);
    static bool allows_product(int second_factor);
};

/// Either C_n or C_2 x C_n (n the second factor, in {2, 4, 6, 8}).
struct TorsionStructure {
    bool product = false;
    int n = 1;

    int order() const { return product ? 2 * n : n; }
    bool mazur_allowed() const;
    std::string str() const;
    bool operator==(const TorsionStructure& o) const = default;
};

struct EngineTrace {
    uint64_t bound = 0;
    std::vector<uint64_t> primes;
    /// Per probed family order, the roots of the final polynomial examined.
    std::vector<std::pair<int, std::vector<Rat>>> roots_examined;
    /// Order-3 quartic roots rejected by the integrality or square test.
    std::vector<Rat> order3_rejected;
    Rat scaling_u{1};
    std::optional<Rat> family_alpha;
};

struct TorsionResult {
    TorsionStructure structure;
    int order = 1;
    std::vector<RationalPoint> generators;
    EngineTrace trace;
};

/// Rational point of order 3 via the division quartic
/// 3X^4 + 6AX^2 + 12BX - A^2, integral roots only.
std::optional<RationalPoint> point_of_order_3(const ShortCurve& c, EngineTrace* trace = nullptr);

/// Rational point of exact order n in {4,...,9} via the family final
/// polynomial, the u^4/u^6 test, and transport of (0, 0).
std::optional<RationalPoint> point_of_order_n(const ShortCurve& c, int n,
                                              EngineTrace* trace = nullptr);

/// Order 10 or 12 via the composite criteria (C2+C5, C4+C6).
std::optional<RationalPoint> point_of_composite_order(const ShortCurve& c, int n,
                                                      EngineTrace* trace = nullptr);

/// Full torsion subgroup computation (the main algorithm).
TorsionResult torsion_subgroup(const ShortCurve& c, int k_primes = 5);

/// Rational short model: integralized first, generators reported on the
/// input model.
TorsionResult torsion_subgroup(const Rat& A, const Rat& B, int k_primes = 5);

/// Long model: moved to an integral short model first, generators reported
/// on the input model.
TorsionResult torsion_subgroup(const GeneralCurve& g, int k_primes = 5);

}  // namespace ectorsion
