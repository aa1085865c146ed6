#include "ectorsion/model.hpp"

#include <algorithm>
#include <map>

namespace ectorsion {

ModelMap ModelMap::long_to_short(Rat a1, Rat a3, Rat b2) {
    ModelMap m;
    m.steps_.push_back(LongToShortStep{std::move(a1), std::move(a3), std::move(b2), false});
    return m;
}

ModelMap ModelMap::scale(Rat u) {
    if (sgn(u) == 0) throw std::invalid_argument("ModelMap::scale: u must be nonzero");
    ModelMap m;
    m.steps_.push_back(ScaleStep{std::move(u), false});
    return m;
}

ModelMap ModelMap::then(const ModelMap& next) const {
    ModelMap m = *this;
    m.steps_.insert(m.steps_.end(), next.steps_.begin(), next.steps_.end());
    return m;
}

ModelMap ModelMap::inverse() const {
    ModelMap m;
    for (auto it = steps_.rbegin(); it != steps_.rend(); ++it) {
        Step s = *it;
        std::visit([](auto& step) { step.inverted = !step.inverted; }, s);
        m.steps_.push_back(std::move(s));
    }
    return m;
}

namespace {

RationalPoint apply_step(const LongToShortStep& s, const RationalPoint& p) {
    const Rat &x = p.x(), &y = p.y();
    if (!s.inverted) {
        Rat xs = Rat(36) * x + Rat(3) * s.b2;
        Rat ys = Rat(108) * (Rat(2) * y + s.a1 * x + s.a3);
        return RationalPoint(std::move(xs), std::move(ys));
    }
    Rat xl = (x - Rat(3) * s.b2) / Rat(36);
    Rat yl = (y / Rat(108) - s.a1 * xl - s.a3) / Rat(2);
    return RationalPoint(std::move(xl), std::move(yl));
}

RationalPoint apply_step(const ScaleStep& s, const RationalPoint& p) {
    const Rat &x = p.x(), &y = p.y();
    Rat u2 = s.u * s.u;
    Rat u3 = u2 * s.u;
    if (!s.inverted) return RationalPoint(x / u2, y / u3);
    return RationalPoint(x * u2, y * u3);
}

}  // namespace

RationalPoint ModelMap::apply(const RationalPoint& p) const {
    RationalPoint q = p;
    for (const auto& step : steps_) {
        if (q.is_infinity()) return q;
        q = std::visit([&](const auto& s) { return apply_step(s, q); }, step);
    }
    return q;
}

ShortFormResult to_short_form(const GeneralCurve& g) {
    auto w = short_form_coeffs<Rat>(g.a1, g.a2, g.a3, g.a4, g.a6);
    return {w.A, w.B, ModelMap::long_to_short(g.a1, g.a3, w.b2)};
}

namespace {

// The exact power extraction for numerator primes is complete up to this
// size; beyond it a budget-limited factorization is attempted and, failing
// that, the (astronomically unlikely) residual 4th/6th powers stay in place.
const Int kExactNumeratorLimit = pow_ui(Int(10), 20);

void add_denominator_primes(const Rat& q, std::map<Int, int>& primes) {
    Int d(q.get_den());
    if (d == 1) return;
    auto f = factorize(d);
    if (!f.complete())
        throw FactorBudgetExceeded("to_integral_model: denominator factorization budget exceeded");
    for (const auto& [p, e] : f.primes) {
        (void)e;
        primes.emplace(p, 0);
    }
}

void add_numerator_primes(const Int& n, const Int& bound, std::map<Int, int>& primes) {
    if (sgn(n) == 0 || bound < 2) return;
    Int rest = abs(n);
    for (uint32_t p : small_primes()) {
        if (Int(p) > bound || rest == 1) break;
        if (mpz_divisible_ui_p(rest.get_mpz_t(), p)) {
            primes.emplace(Int(p), 0);
            while (mpz_divisible_ui_p(rest.get_mpz_t(), p))
                mpz_divexact_ui(rest.get_mpz_t(), rest.get_mpz_t(), p);
        }
    }
    if (rest > 1 && abs(n) >= kExactNumeratorLimit) {
        auto f = factorize(rest, kDefaultRhoBudget / 4);
        for (const auto& [p, e] : f.primes) {
            (void)e;
            if (p <= bound) primes.emplace(p, 0);
        }
        // an incomplete factorization here only costs minimality, not
        // integrality, so it is not an error
    }
}

int rat_valuation(const Rat& q, const Int& p) {
    if (sgn(q) == 0) throw std::logic_error("rat_valuation of zero");
    int v = 0;
    Int n(q.get_num());
    if (mpz_divisible_p(n.get_mpz_t(), p.get_mpz_t())) v = static_cast<int>(valuation(n, p));
    Int d(q.get_den());
    if (mpz_divisible_p(d.get_mpz_t(), p.get_mpz_t())) v -= static_cast<int>(valuation(d, p));
    return v;
}

}  // namespace

IntegralModelResult to_integral_model(const Rat& A, const Rat& B) {
    Rat disc = Rat(4) * A * A * A + Rat(27) * B * B;
    if (sgn(disc) == 0)
        throw SingularCurveError("to_integral_model: singular curve (4A^3 + 27B^2 = 0)");

    const bool hasA = sgn(A) != 0, hasB = sgn(B) != 0;
    std::map<Int, int> primes;  // candidate prime -> exponent of u
    if (hasA) add_denominator_primes(A, primes);
    if (hasB) add_denominator_primes(B, primes);

    // positive exponents require q^4 | num(A) and q^6 | num(B)
    Int boundA = hasA ? iroot(Int(A.get_num()), 4) : Int(0);
    Int boundB = hasB ? iroot(Int(B.get_num()), 6) : Int(0);
    if (hasA && hasB) {
        Int g = gcd(Int(A.get_num()), Int(B.get_num()));
        add_numerator_primes(g, std::min(boundA, boundB), primes);
    } else if (hasA) {
        add_numerator_primes(Int(A.get_num()), boundA, primes);
    } else {
        add_numerator_primes(Int(B.get_num()), boundB, primes);
    }

    Rat u(1);
    for (auto& [p, e] : primes) {
        Int lo(0);
        bool first = true;
        if (hasA) {
            lo = floor_div(Int(rat_valuation(A, p)), Int(4));
            first = false;
        }
        if (hasB) {
            Int eb = floor_div(Int(rat_valuation(B, p)), Int(6));
            lo = first ? eb : std::min(lo, eb);
        }
        e = static_cast<int>(lo.get_si());
        if (e > 0)
            u *= Rat(pow_ui(p, e));
        else if (e < 0)
            u /= Rat(pow_ui(p, -e));
    }

    Rat a2 = A / pow_ui(u, 4);
    Rat b2 = B / pow_ui(u, 6);
    if (!is_integer(a2) || !is_integer(b2))
        throw std::logic_error("to_integral_model: scaling failed to clear denominators");
    return {ShortCurve(Int(a2.get_num()), Int(b2.get_num())), ModelMap::scale(u), u};
}

std::optional<Rat> find_scaling(const Rat& A, const Rat& B, const Rat& C, const Rat& D) {
    const bool az = sgn(A) == 0, bz = sgn(B) == 0, cz = sgn(C) == 0, dz = sgn(D) == 0;
    if (az != cz || bz != dz) return std::nullopt;
    if (az && bz) return std::nullopt;  // excluded by nonsingularity anyway
    if (az) {
        // only u^6 = B/D applies
        return exact_kth_root(Rat(B / D), 6);
    }
    if (bz) {
        // only u^4 = A/C applies
        return exact_kth_root(Rat(A / C), 4);
    }
    Rat q4 = A / C;
    Rat q6 = B / D;
    Rat w = q6 / q4;  // forced value of u^2
    if (w * w != q4 || w * w * w != q6) return std::nullopt;
    return exact_kth_root(w, 2);
}

InvariantRatio invariant_ratio(const ShortCurve& c) {
    if (sgn(c.B) == 0) return {InvariantRatio::Kind::j_zero, Rat(0)};
    if (sgn(c.A) == 0) return {InvariantRatio::Kind::j_inf, Rat(0)};
    return {InvariantRatio::Kind::finite, make_rat(c.A * c.A * c.A, c.B * c.B)};
}

}  // namespace ectorsion
