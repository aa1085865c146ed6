#include "ectorsion/intpoly.hpp"

#include <algorithm>
#include <set>
#include <sstream>

namespace ectorsion {

IntPoly::IntPoly(std::initializer_list<Int> ascending) : c_(ascending) { normalize(); }
IntPoly::IntPoly(std::vector<Int> ascending) : c_(std::move(ascending)) { normalize(); }

IntPoly IntPoly::constant(Int c) {
    IntPoly f;
    if (sgn(c) != 0) f.c_.push_back(std::move(c));
    return f;
}

IntPoly IntPoly::variable() { return IntPoly{Int(0), Int(1)}; }

void IntPoly::normalize() {
    while (!c_.empty() && sgn(c_.back()) == 0) c_.pop_back();
}

const Int& IntPoly::coeff(std::size_t i) const {
    static const Int zero(0);
    return i < c_.size() ? c_[i] : zero;
}

const Int& IntPoly::leading() const {
    if (c_.empty()) throw std::logic_error("leading coefficient of zero polynomial");
    return c_.back();
}

IntPoly IntPoly::operator-() const {
    IntPoly r = *this;
    for (auto& a : r.c_) a = -a;
    return r;
}

IntPoly& IntPoly::operator+=(const IntPoly& o) {
    if (o.c_.size() > c_.size()) c_.resize(o.c_.size(), Int(0));
    for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] += o.c_[i];
    normalize();
    return *this;
}

IntPoly& IntPoly::operator-=(const IntPoly& o) {
    if (o.c_.size() > c_.size()) c_.resize(o.c_.size(), Int(0));
    for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] -= o.c_[i];
    normalize();
    return *this;
}

IntPoly operator*(const IntPoly& a, const IntPoly& b) {
    if (a.is_zero() || b.is_zero()) return IntPoly();
    std::vector<Int> c(a.c_.size() + b.c_.size() - 1, Int(0));
    for (std::size_t i = 0; i < a.c_.size(); ++i)
        for (std::size_t j = 0; j < b.c_.size(); ++j) c[i + j] += a.c_[i] * b.c_[j];
    return IntPoly(std::move(c));
}

IntPoly operator*(const Int& k, const IntPoly& f) {
    if (sgn(k) == 0) return IntPoly();
    IntPoly r = f;
    for (auto& a : r.c_) a *= k;
    return r;
}

IntPoly IntPoly::derivative() const {
    if (c_.size() <= 1) return IntPoly();
    std::vector<Int> d(c_.size() - 1);
    for (std::size_t i = 1; i < c_.size(); ++i) d[i - 1] = Int(i) * c_[i];
    return IntPoly(std::move(d));
}

Int IntPoly::content() const {
    Int g(0);
    for (const auto& a : c_) g = gcd(g, a);
    return g;
}

IntPoly IntPoly::primitive_part() const {
    if (is_zero()) return IntPoly();
    Int g = content();
    IntPoly r = *this;
    for (auto& a : r.c_) a /= g;
    return r;
}

IntPoly IntPoly::pow(unsigned e) const {
    IntPoly r = IntPoly::constant(Int(1));
    for (unsigned i = 0; i < e; ++i) r = r * *this;
    return r;
}

Int IntPoly::eval(const Int& x) const {
    Int acc(0);
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * x + *it;
    return acc;
}

Rat IntPoly::eval(const Rat& x) const {
    Rat acc(0);
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * x + Rat(*it);
    return acc;
}

Int IntPoly::eval_scaled(const Int& num, const Int& den) const {
    if (is_zero()) return Int(0);
    Int acc = c_.back();
    Int dp(1);
    for (std::size_t i = c_.size() - 1; i-- > 0;) {
        dp *= den;
        acc = acc * num + c_[i] * dp;
    }
    return acc;
}

Int IntPoly::eval_mod(const Int& x, const Int& m) const {
    Int acc(0);
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = (acc * x + *it) % m;
    return ((acc % m) + m) % m;
}

std::pair<IntPoly, Int> IntPoly::compose_affine(const Rat& r, const Rat& s) const {
    std::vector<Rat> acc;  // result in Q[x], ascending
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) {
        // acc = acc*(r x + s) + a_i
        std::vector<Rat> next(acc.size() + 1, Rat(0));
        for (std::size_t i = 0; i < acc.size(); ++i) {
            next[i + 1] += acc[i] * r;
            next[i] += acc[i] * s;
        }
        if (next.empty()) next.emplace_back(0);
        next[0] += Rat(*it);
        acc = std::move(next);
    }
    Int den(1);
    for (const auto& q : acc) den = lcm(den, Int(q.get_den()));
    std::vector<Int> num(acc.size());
    for (std::size_t i = 0; i < acc.size(); ++i)
        num[i] = Int(acc[i].get_num()) * (den / Int(acc[i].get_den()));
    IntPoly p(std::move(num));
    Int g = gcd(p.content(), den);
    if (g > 1) {
        Int d2 = den / g;
        std::vector<Int> reduced(p.coeffs());
        for (auto& a : reduced) a /= g;
        return {IntPoly(std::move(reduced)), d2};
    }
    return {std::move(p), den};
}

std::string IntPoly::str(std::string_view var) const {
    if (is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (std::size_t i = c_.size(); i-- > 0;) {
        if (sgn(c_[i]) == 0) continue;
        Int a = c_[i];
        if (first) {
            if (sgn(a) < 0) os << "-";
        } else {
            os << (sgn(a) < 0 ? " - " : " + ");
        }
        Int mag = abs(a);
        if (i == 0 || mag != 1) os << mag.get_str();
        if (i > 0) {
            if (mag != 1) os << "*";
            os << var;
            if (i > 1) os << "^" << i;
        }
        first = false;
    }
    return os.str();
}

Int seminorm(const IntPoly& f) {
    Int s(0);
    for (const auto& a : f.coeffs()) s += abs(a);
    return s;
}

IntPoly substitute_affine(const IntPoly& f, const Rat& r, const Rat& s) {
    if (sgn(r) == 0) throw std::invalid_argument("substitute_affine: r must be nonzero");
    auto [p, den] = f.compose_affine(r, s);
    (void)den;
    IntPoly out = p.primitive_part();
    if (!out.is_zero() && !f.is_zero() && sgn(out.leading()) != sgn(f.leading()))
        out = -out;
    return out;
}

std::optional<IntPoly> divide_exact(const IntPoly& a, const IntPoly& b) {
    if (b.is_zero()) return std::nullopt;
    if (a.is_zero()) return IntPoly();
    if (a.degree() < b.degree()) return std::nullopt;
    std::vector<Int> rem(a.coeffs());
    std::vector<Int> q(a.degree() - b.degree() + 1, Int(0));
    const auto& bc = b.coeffs();
    for (std::size_t k = q.size(); k-- > 0;) {
        Int& top = rem[k + bc.size() - 1];
        if (sgn(top) == 0) continue;
        if (!mpz_divisible_p(top.get_mpz_t(), b.leading().get_mpz_t())) return std::nullopt;
        q[k] = top / b.leading();
        for (std::size_t i = 0; i < bc.size(); ++i) rem[k + i] -= q[k] * bc[i];
    }
    for (const auto& c : rem)
        if (sgn(c) != 0) return std::nullopt;
    return IntPoly(std::move(q));
}

namespace {

// fraction-free remainder of a by b: each step scales by lc(b) and cancels
// the top term, so the result is a Z[x] multiple of the rational remainder
IntPoly pseudo_rem(const IntPoly& a, const IntPoly& b) {
    std::vector<Int> r(a.coeffs());
    const auto& bc = b.coeffs();
    const Int& lb = b.leading();
    for (;;) {
        while (!r.empty() && sgn(r.back()) == 0) r.pop_back();
        int dr = static_cast<int>(r.size()) - 1;
        if (dr < b.degree()) break;
        Int t = r.back();
        for (auto& c : r) c *= lb;
        std::size_t shift = dr - b.degree();
        for (std::size_t i = 0; i < bc.size(); ++i) r[shift + i] -= t * bc[i];
    }
    return IntPoly(std::move(r));
}

}  // namespace

IntPoly poly_gcd(const IntPoly& a, const IntPoly& b) {
    if (a.is_zero() && b.is_zero()) return IntPoly();
    if (a.is_zero() || b.is_zero()) {
        IntPoly g = a.is_zero() ? b : a;
        if (sgn(g.leading()) < 0) g = -g;
        return g;
    }
    Int cont = gcd(a.content(), b.content());
    IntPoly f = a.primitive_part(), g = b.primitive_part();
    if (f.degree() < g.degree()) std::swap(f, g);
    while (!g.is_zero()) {
        IntPoly r = pseudo_rem(f, g).primitive_part();
        f = std::move(g);
        g = std::move(r);
    }
    if (sgn(f.leading()) < 0) f = -f;
    return cont * f;
}

IntPoly squarefree_part(const IntPoly& f) {
    if (f.is_zero()) throw std::invalid_argument("squarefree_part: zero polynomial");
    IntPoly p = f.primitive_part();
    if (p.degree() <= 1) return p;
    IntPoly g = poly_gcd(p, p.derivative());
    if (g.degree() == 0) return p;
    auto q = divide_exact(p, g.primitive_part());
    if (!q) throw std::logic_error("squarefree_part: inexact division");
    return q->primitive_part();
}

namespace {

// ---- mod-p helpers on machine words (p < 2^31) -----------------------------

using ModPoly = std::vector<uint64_t>;  // ascending, trimmed

void mp_trim(ModPoly& f) {
    while (!f.empty() && f.back() == 0) f.pop_back();
}

ModPoly mp_reduce(const IntPoly& f, uint64_t p) {
    ModPoly r(f.coeffs().size());
    for (std::size_t i = 0; i < r.size(); ++i)
        r[i] = mpz_fdiv_ui(f.coeffs()[i].get_mpz_t(), p);
    mp_trim(r);
    return r;
}

ModPoly mp_derivative(const ModPoly& f, uint64_t p) {
    if (f.size() <= 1) return {};
    ModPoly d(f.size() - 1);
    for (std::size_t i = 1; i < f.size(); ++i) d[i - 1] = (f[i] * (i % p)) % p;
    mp_trim(d);
    return d;
}

uint64_t mp_eval(const ModPoly& f, uint64_t x, uint64_t p) {
    uint64_t acc = 0;
    for (std::size_t i = f.size(); i-- > 0;) acc = (acc * x + f[i]) % p;
    return acc;
}

uint64_t mod_inverse(uint64_t a, uint64_t p) {
    int64_t t0 = 0, t1 = 1;
    int64_t r0 = static_cast<int64_t>(p), r1 = static_cast<int64_t>(a % p);
    while (r1 != 0) {
        int64_t q = r0 / r1;
        int64_t r2 = r0 - q * r1, t2 = t0 - q * t1;
        r0 = r1;
        r1 = r2;
        t0 = t1;
        t1 = t2;
    }
    int64_t t = t0 % static_cast<int64_t>(p);
    if (t < 0) t += p;
    return static_cast<uint64_t>(t);
}

ModPoly mp_rem(ModPoly a, const ModPoly& b, uint64_t p) {
    uint64_t inv = mod_inverse(b.back(), p);
    while (a.size() >= b.size()) {
        uint64_t t = (a.back() * inv) % p;
        std::size_t shift = a.size() - b.size();
        for (std::size_t i = 0; i < b.size(); ++i) {
            uint64_t sub = (t * b[i]) % p;
            a[shift + i] = (a[shift + i] + p - sub) % p;
        }
        mp_trim(a);
        if (a.empty()) break;
    }
    return a;
}

bool mp_squarefree(const ModPoly& f, uint64_t p) {
    ModPoly d = mp_derivative(f, p);
    if (d.empty()) return false;
    ModPoly a = f, b = d;
    while (!b.empty()) {
        ModPoly r = mp_rem(a, b, p);
        a = std::move(b);
        b = std::move(r);
    }
    return a.size() == 1;
}

// Newton lift of a simple root mod p up to modulus >= target; returns the
// residue and the final modulus.
std::pair<Int, Int> hensel_lift(const IntPoly& f, const IntPoly& fp, uint64_t root, uint64_t p,
                                const Int& target) {
    Int mod(static_cast<unsigned long>(p));
    Int r(static_cast<unsigned long>(root));
    while (mod < target) {
        mod = mod * mod;
        Int fr = f.eval_mod(r, mod);
        Int dfr = fp.eval_mod(r, mod);
        Int inv;
        if (mpz_invert(inv.get_mpz_t(), dfr.get_mpz_t(), mod.get_mpz_t()) == 0)
            throw std::logic_error("hensel_lift: derivative not invertible");
        r = ((r - fr * inv) % mod + mod) % mod;
    }
    return {r, mod};
}

std::optional<std::vector<Rat>> hensel_roots(const IntPoly& f, int max_failures) {
    const Int lc = abs(f.leading());
    const Int a0 = abs(f.coeff(0));
    int failures = 0;
    for (uint32_t p : small_primes()) {
        if (p == 2) continue;
        if (mpz_divisible_ui_p(lc.get_mpz_t(), p)) continue;
        ModPoly fp = mp_reduce(f, p);
        if (!mp_squarefree(fp, p)) {
            if (++failures >= max_failures) return std::nullopt;
            continue;
        }
        std::vector<uint64_t> residues;
        for (uint64_t x = 0; x < p; ++x)
            if (mp_eval(fp, x, p) == 0) residues.push_back(x);
        std::vector<Rat> roots;
        if (residues.empty()) return roots;
        Int target = 2 * a0 * lc + 1;
        IntPoly deriv = f.derivative();
        for (uint64_t r0 : residues) {
            auto [r, mod] = hensel_lift(f, deriv, r0, p, target);
            auto cand = rational_reconstruct(r, mod, a0, lc);
            if (!cand) continue;
            if (f.eval_scaled(Int(cand->get_num()), Int(cand->get_den())) == 0)
                roots.push_back(*cand);
        }
        return roots;
    }
    return std::nullopt;
}

// rational root theorem fallback: enumerate divisor pairs of the trailing and
// leading coefficients
std::vector<Rat> divisor_roots(const IntPoly& f) {
    auto fa = factorize(abs(f.coeff(0)));
    auto fl = factorize(abs(f.leading()));
    if (!fa.complete() || !fl.complete())
        throw FactorBudgetExceeded("rational_roots: coefficient factorization budget exceeded");
    std::vector<Rat> roots;
    for (const Int& n : divisors(fa)) {
        for (const Int& d : divisors(fl)) {
            if (gcd(n, d) != 1) continue;
            if (f.eval_scaled(n, d) == 0) roots.push_back(make_rat(n, d));
            if (f.eval_scaled(-n, d) == 0) roots.push_back(make_rat(-n, d));
        }
    }
    return roots;
}

}  // namespace

std::vector<Rat> rational_roots(const IntPoly& f) {
    if (f.is_zero()) throw std::invalid_argument("rational_roots: zero polynomial");
    std::set<Rat> found;
    std::vector<Int> c(f.coeffs());
    std::size_t shift = 0;
    while (shift < c.size() && sgn(c[shift]) == 0) ++shift;
    if (shift > 0) {
        found.insert(Rat(0));
        c.erase(c.begin(), c.begin() + shift);
    }
    IntPoly g = IntPoly(std::move(c)).primitive_part();
    if (g.degree() >= 1) {
        if (g.degree() == 1) {
            found.insert(make_rat(-g.coeff(0), g.coeff(1)));
        } else {
            auto viaHensel = hensel_roots(g, 25);
            if (!viaHensel) {
                IntPoly sf = squarefree_part(g);
                if (sf.degree() < g.degree()) viaHensel = hensel_roots(sf, 2000);
                if (!viaHensel) viaHensel = divisor_roots(g);
            }
            found.insert(viaHensel->begin(), viaHensel->end());
        }
    }
    return {found.begin(), found.end()};
}

}  // namespace ectorsion
