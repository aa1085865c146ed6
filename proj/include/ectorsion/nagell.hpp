#pragma once

#include "ectorsion/engine.hpp"

namespace ectorsion {

/// All m >= 1 with m^2 dividing |delta|, ascending. Requires the
/// factorization to finish within the budget.
std::vector<Int> square_divisors(const Int& delta, uint64_t rho_budget = kDefaultRhoBudget);

/// Classical Lutz-Nagell torsion computation: candidate points from the
/// square divisors of the discriminant, kept when a small multiple hits O.
/// Independent of the family-based engine; used as a cross-check oracle.
TorsionResult lutz_nagell_torsion(const ShortCurve& c, uint64_t rho_budget = kDefaultRhoBudget);

}  // namespace ectorsion
