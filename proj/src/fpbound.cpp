#include "ectorsion/fpbound.hpp"

#include <numeric>

namespace ectorsion {

namespace {

bool is_small_prime(uint64_t p) {
    if (p < 2) return false;
    for (uint64_t d = 2; d * d <= p; ++d)
        if (p % d == 0) return false;
    return true;
}

uint64_t reduce(const Int& v, uint64_t p) { return mpz_fdiv_ui(v.get_mpz_t(), p); }

}  // namespace

FpCurve::FpCurve(uint64_t p_, uint64_t a_, uint64_t b_) : p(p_), a(a_ % p_), b(b_ % p_) {
    if (p <= 2 || !is_small_prime(p))
        throw std::invalid_argument("FpCurve: p must be an odd prime");
    if (p >= (uint64_t(1) << 25))
        throw std::invalid_argument("FpCurve: p too large for table-based counting");
    uint64_t a3 = a * a % p * a % p;
    uint64_t disc = (4 * a3 % p + 27 * (b * b % p) % p) % p;
    if (disc == 0) throw std::invalid_argument("FpCurve: p divides the discriminant");
}

FpCurve::FpCurve(const ShortCurve& c, uint64_t p_)
    : FpCurve(p_, reduce(c.A, p_), reduce(c.B, p_)) {}

uint64_t count_points(const FpCurve& f) {
    const uint64_t p = f.p;
    // chi[v] = +1 for nonzero squares, -1 for nonsquares, 0 at v = 0
    std::vector<int8_t> chi(p, -1);
    chi[0] = 0;
    for (uint64_t t = 1; t < p; ++t) chi[t * t % p] = 1;
    int64_t sum = 0;
    for (uint64_t x = 0; x < p; ++x) {
        uint64_t v = ((x * x % p) * x % p + f.a * x % p + f.b) % p;
        sum += chi[v];
    }
    return p + 1 + sum;
}

int count_two_torsion(const FpCurve& f) {
    const uint64_t p = f.p;
    int roots = 0;
    for (uint64_t x = 0; x < p; ++x) {
        uint64_t v = ((x * x % p) * x % p + f.a * x % p + f.b) % p;
        if (v == 0) ++roots;
    }
    return roots;
}

std::vector<uint64_t> good_primes(const ShortCurve& c, int k) {
    if (k <= 0) throw std::invalid_argument("good_primes: k must be positive");
    std::vector<uint64_t> out;
    Int delta = abs(discriminant(c));
    uint64_t p = 2;
    while (static_cast<int>(out.size()) < k) {
        p = next_odd_prime(p);
        if (mpz_divisible_ui_p(delta.get_mpz_t(), p)) continue;
        out.push_back(p);
    }
    return out;
}

TorsionBoundDetail torsion_bound_detail(const ShortCurve& c, int k) {
    TorsionBoundDetail d;
    d.s = static_cast<int>(two_torsion_x(c).size());
    d.primes = good_primes(c, k);
    uint64_t g = 0;
    for (uint64_t p : d.primes) {
        FpCurve f(c, p);
        uint64_t m = count_points(f);
        int t = count_two_torsion(f);
        if (t < d.s)
            throw std::logic_error("torsion_bound: 2-torsion count dropped under reduction");
        uint64_t adj = m;
        if (t != d.s) {
            if ((d.s == 0 && t == 1) || (d.s == 1 && t == 3))
                adj = m / 2;
            else if (d.s == 0 && t == 3)
                adj = m / 4;
            else
                throw std::logic_error("torsion_bound: impossible (s, t) combination");
        }
        d.counts.push_back(m);
        d.two_torsion.push_back(t);
        d.adjusted.push_back(adj);
        g = std::gcd(g, adj);
    }
    d.bound = g;
    return d;
}

uint64_t torsion_bound(const ShortCurve& c, int k) { return torsion_bound_detail(c, k).bound; }

}  // namespace ectorsion
