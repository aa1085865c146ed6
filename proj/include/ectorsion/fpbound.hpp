#pragma once

#include <cstdint>
#include <vector>

#include "ectorsion/curve.hpp"

namespace ectorsion {

/// Reduction of an integral short curve at an odd good prime (p > 2, p not
/// dividing the discriminant).
struct FpCurve {
    uint64_t p, a, b;
    FpCurve(uint64_t p, uint64_t a, uint64_t b);
    FpCurve(const ShortCurve& c, uint64_t p);
};

/// |E(F_p)| including the point at infinity, by quadratic-character
/// summation.
uint64_t count_points(const FpCurve& f);

/// Number of roots of X^3 + aX + b over F_p (0, 1, 2 or 3; 2 cannot occur at
/// a good prime).
int count_two_torsion(const FpCurve& f);

/// The k smallest odd primes not dividing the discriminant, ascending.
std::vector<uint64_t> good_primes(const ShortCurve& c, int k);

struct TorsionBoundDetail {
    uint64_t bound;
    int s;  // rational 2-torsion point count
    std::vector<uint64_t> primes;
    std::vector<uint64_t> counts;    // |E(F_p)| per prime
    std::vector<int> two_torsion;    // t per prime
    std::vector<uint64_t> adjusted;  // per-prime adjusted bound
};

/// Per-prime counts adjusted by the (s, t) rules, folded with gcd. The order
/// of the rational torsion subgroup divides the result.
TorsionBoundDetail torsion_bound_detail(const ShortCurve& c, int k);

uint64_t torsion_bound(const ShortCurve& c, int k);

}  // namespace ectorsion
