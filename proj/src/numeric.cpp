#include "ectorsion/numeric.hpp"

#include <algorithm>

namespace ectorsion {

Rat make_rat(const Int& num, const Int& den) {
    if (sgn(den) == 0) throw std::invalid_argument("make_rat: zero denominator");
    Rat q(num, den);
    q.canonicalize();
    return q;
}

bool is_integer(const Rat& q) { return q.get_den() == 1; }

Int floor_div(const Int& a, const Int& b) {
    Int q;
    mpz_fdiv_q(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return q;
}

Int gcd(const Int& a, const Int& b) {
    Int g;
    mpz_gcd(g.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return g;
}

Int lcm(const Int& a, const Int& b) {
    Int l;
    mpz_lcm(l.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return l;
}

Int pow_ui(const Int& a, unsigned long e) {
    Int r;
    mpz_pow_ui(r.get_mpz_t(), a.get_mpz_t(), e);
    return r;
}

Rat pow_ui(const Rat& a, unsigned long e) {
    return make_rat(pow_ui(Int(a.get_num()), e), pow_ui(Int(a.get_den()), e));
}

std::optional<Int> exact_kth_root(const Int& n, unsigned k) {
    if (k == 0) throw std::invalid_argument("exact_kth_root: k == 0");
    if (sgn(n) < 0 && k % 2 == 0) return std::nullopt;
    Int r;
    int exact = mpz_root(r.get_mpz_t(), n.get_mpz_t(), k);
    if (!exact) return std::nullopt;
    return r;
}

std::optional<Rat> exact_kth_root(const Rat& q, unsigned k) {
    auto rn = exact_kth_root(Int(q.get_num()), k);
    if (!rn) return std::nullopt;
    auto rd = exact_kth_root(Int(q.get_den()), k);
    if (!rd) return std::nullopt;
    return make_rat(*rn, *rd);
}

bool is_perfect_square(const Int& n) {
    if (sgn(n) < 0) return false;
    return mpz_perfect_square_p(n.get_mpz_t()) != 0;
}

std::optional<Int> exact_sqrt(const Int& n) {
    if (!is_perfect_square(n)) return std::nullopt;
    Int r;
    mpz_sqrt(r.get_mpz_t(), n.get_mpz_t());
    return r;
}

Int iroot(const Int& n, unsigned k) {
    Int a = abs(n), r;
    mpz_root(r.get_mpz_t(), a.get_mpz_t(), k);
    return r;
}

bool is_probable_prime(const Int& n) { return mpz_probab_prime_p(n.get_mpz_t(), 40) != 0; }

unsigned valuation(Int n, const Int& q) {
    if (sgn(n) == 0) throw std::invalid_argument("valuation: n == 0");
    unsigned v = 0;
    Int r, t;
    for (;;) {
        mpz_fdiv_qr(t.get_mpz_t(), r.get_mpz_t(), n.get_mpz_t(), q.get_mpz_t());
        if (sgn(r) != 0) break;
        n = t;
        ++v;
    }
    return v;
}

const std::vector<uint32_t>& small_primes() {
    static const std::vector<uint32_t> primes = [] {
        constexpr uint32_t limit = 100000;
        std::vector<bool> composite(limit, false);
        std::vector<uint32_t> out;
        for (uint32_t i = 2; i < limit; ++i) {
            if (composite[i]) continue;
            out.push_back(i);
            for (uint64_t j = uint64_t(i) * i; j < limit; j += i) composite[j] = true;
        }
        return out;
    }();
    return primes;
}

uint64_t next_odd_prime(uint64_t p) {
    Int n(static_cast<unsigned long>(std::max<uint64_t>(p, 2)));
    Int q;
    mpz_nextprime(q.get_mpz_t(), n.get_mpz_t());
    return q.get_ui();
}

namespace {

// Pollard-Brent rho; returns a nontrivial factor of composite odd n, or 0 when
// the budget runs out.
Int pollard_brent(const Int& n, uint64_t& budget) {
    if (mpz_even_p(n.get_mpz_t())) return Int(2);
    for (unsigned long c = 1; c < 64; ++c) {
        Int y(2), x, ys, q(1), g(1);
        unsigned long r = 1;
        const unsigned long m = 128;
        while (g == 1) {
            x = y;
            for (unsigned long i = 0; i < r; ++i) {
                y = (y * y + c) % n;
                if (budget == 0) return Int(0);
                --budget;
            }
            unsigned long k = 0;
            while (k < r && g == 1) {
                ys = y;
                unsigned long chunk = std::min(m, r - k);
                for (unsigned long i = 0; i < chunk; ++i) {
                    y = (y * y + c) % n;
                    q = q * abs(Int(x - y)) % n;
                    if (budget == 0) return Int(0);
                    --budget;
                }
                g = gcd(q, n);
                k += m;
            }
            r *= 2;
        }
        if (g == n) {
            g = 1;
            while (g == 1) {
                ys = (ys * ys + c) % n;
                g = gcd(abs(Int(x - ys)), n);
                if (budget == 0) return Int(0);
                --budget;
            }
        }
        if (g != n) return g;
        // cycle degenerated for this c; retry with the next increment
    }
    return Int(0);
}

}  // namespace

Factorization factorize(const Int& n, uint64_t rho_budget) {
    if (sgn(n) <= 0) throw std::invalid_argument("factorize: n must be positive");
    Factorization out;
    Int rest = n;
    for (uint32_t p : small_primes()) {
        if (rest == 1) break;
        Int pp(p);
        if (pp * pp > rest) break;
        if (mpz_divisible_ui_p(rest.get_mpz_t(), p)) {
            unsigned v = 0;
            while (mpz_divisible_ui_p(rest.get_mpz_t(), p)) {
                mpz_divexact_ui(rest.get_mpz_t(), rest.get_mpz_t(), p);
                ++v;
            }
            out.primes.emplace_back(std::move(pp), v);
        }
    }
    std::vector<Int> pending;
    if (rest > 1) pending.push_back(rest);
    uint64_t budget = rho_budget;
    std::vector<std::pair<Int, unsigned>> big;
    while (!pending.empty()) {
        Int m = pending.back();
        pending.pop_back();
        if (is_probable_prime(m)) {
            bool merged = false;
            for (auto& [p, e] : big)
                if (p == m) {
                    ++e;
                    merged = true;
                    break;
                }
            if (!merged) big.emplace_back(m, 1);
            continue;
        }
        Int f = pollard_brent(m, budget);
        if (sgn(f) == 0) {
            out.cofactor *= m;
            continue;
        }
        pending.push_back(f);
        pending.push_back(m / f);
    }
    // split equal prime powers that arrived separately
    for (auto& [p, e] : big) {
        bool merged = false;
        for (auto& [q, v] : out.primes)
            if (q == p) {
                v += e;
                merged = true;
                break;
            }
        if (!merged) out.primes.emplace_back(p, e);
    }
    std::sort(out.primes.begin(), out.primes.end(),
              [](const auto& a, const auto& b) { return a.first < b.first; });
    return out;
}

std::vector<Int> divisors(const Factorization& f) {
    if (!f.complete()) throw FactorBudgetExceeded("divisors: incomplete factorization");
    std::vector<Int> out{Int(1)};
    for (const auto& [p, e] : f.primes) {
        const std::size_t base = out.size();
        Int pk(1);
        for (unsigned i = 1; i <= e; ++i) {
            pk *= p;
            for (std::size_t j = 0; j < base; ++j) out.push_back(out[j] * pk);
        }
    }
    std::sort(out.begin(), out.end());
    return out;
}

std::optional<Rat> rational_reconstruct(const Int& a, const Int& m, const Int& nmax,
                                        const Int& dmax) {
    Int r0 = m, r1 = ((a % m) + m) % m;
    Int t0(0), t1(1);
    while (r1 > nmax) {
        if (sgn(r1) == 0) return std::nullopt;
        Int q = r0 / r1;
        Int r2 = r0 - q * r1;
        Int t2 = t0 - q * t1;
        r0 = r1;
        r1 = r2;
        t0 = t1;
        t1 = t2;
    }
    Int num = r1, den = t1;
    if (sgn(den) < 0) {
        num = -num;
        den = -den;
    }
    if (sgn(den) == 0 || den > dmax) return std::nullopt;
    if (gcd(num, den) != 1) return std::nullopt;
    return make_rat(num, den);
}

}  // namespace ectorsion
