#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace ectorsion {

/// Arbitrary-precision integer.
using Int = mpz_class;
/// Exact rational, always kept in canonical form (lowest terms, positive denominator).
using Rat = mpq_class;

/// Thrown when a probabilistic factorization gives up before completing.
struct FactorBudgetExceeded : std::runtime_error {
    explicit FactorBudgetExceeded(const std::string& what) : std::runtime_error(what) {}
};

/// Default Pollard-Brent iteration budget per factorize() call.
inline constexpr uint64_t kDefaultRhoBudget = 2'000'000;

/// Canonical rational from an integer pair. den must be nonzero.
Rat make_rat(const Int& num, const Int& den);

bool is_integer(const Rat& q);

/// Floor division a/b (b != 0).
Int floor_div(const Int& a, const Int& b);

Int gcd(const Int& a, const Int& b);
Int lcm(const Int& a, const Int& b);

/// a^e for small nonnegative e.
Int pow_ui(const Int& a, unsigned long e);
Rat pow_ui(const Rat& a, unsigned long e);

/// Exact k-th root when it exists (negative n allowed for odd k).
std::optional<Int> exact_kth_root(const Int& n, unsigned k);
std::optional<Rat> exact_kth_root(const Rat& q, unsigned k);

bool is_perfect_square(const Int& n);
std::optional<Int> exact_sqrt(const Int& n);

/// Truncated integer k-th root of |n|.
Int iroot(const Int& n, unsigned k);

bool is_probable_prime(const Int& n);

/// Multiplicity of q in n (n != 0); divides n down as a helper would.
unsigned valuation(Int n, const Int& q);

/// Primes below 100000, ascending.
const std::vector<uint32_t>& small_primes();

/// Smallest odd prime strictly greater than p.
uint64_t next_odd_prime(uint64_t p);

struct Factorization {
    std::vector<std::pair<Int, unsigned>> primes;  // ascending
    Int cofactor{1};                               // 1 when fully factored
    bool complete() const { return cofactor == 1; }
};

/// Factor n >= 1 by trial division plus Pollard-Brent rho. A partial result
/// (composite cofactor) is returned when the rho budget runs out.
Factorization factorize(const Int& n, uint64_t rho_budget = kDefaultRhoBudget);

/// All positive divisors, ascending. Requires a complete factorization.
std::vector<Int> divisors(const Factorization& f);

/// Rational reconstruction: the n/d with |n| <= nmax, 0 < d <= dmax and
/// n = a*d (mod m), when one exists. Reliable when m > 2*nmax*dmax.
std::optional<Rat> rational_reconstruct(const Int& a, const Int& m, const Int& nmax,
                                        const Int& dmax);

}  // namespace ectorsion
