#include "ectorsion/engine.hpp"

#include <algorithm>

#include "ectorsion/fpbound.hpp"
#include "ectorsion/intpoly.hpp"
#include "ectorsion/tate.hpp"

namespace ectorsion {

bool MazurOrders::allows_cyclic(int n) {
    return std::find(cyclic.begin(), cyclic.end(), n) != cyclic.end();
}

bool MazurOrders::allows_product(int second_factor) {
    return std::find(product_second.begin(), product_second.end(), second_factor) !=
           product_second.end();
}

bool TorsionStructure::mazur_allowed() const {
    return product ? MazurOrders::allows_product(n) : MazurOrders::allows_cyclic(n);
}

std::string TorsionStructure::str() const {
    return product ? "C2xC" + std::to_string(n) : "C" + std::to_string(n);
}

std::optional<RationalPoint> point_of_order_3(const ShortCurve& c, EngineTrace* trace) {
    // division quartic for order 3
    IntPoly quartic{-(c.A * c.A), 12 * c.B, 6 * c.A, Int(0), Int(3)};
    std::vector<Rat> roots = rational_roots(quartic);
    if (trace) trace->roots_examined.emplace_back(3, roots);
    for (const Rat& x : roots) {
        if (!is_integer(x)) {
            if (trace) trace->order3_rejected.push_back(x);
            continue;
        }
        Int x0(x.get_num());
        Int rhs = x0 * x0 * x0 + c.A * x0 + c.B;
        auto y0 = exact_sqrt(rhs);
        if (!y0) {
            if (trace) trace->order3_rejected.push_back(x);
            continue;
        }
        RationalPoint p{Rat(x0), Rat(*y0)};
        if (point_order(c, p) == 3) return p;
    }
    return std::nullopt;
}

std::optional<RationalPoint> point_of_order_n(const ShortCurve& c, int n, EngineTrace* trace) {
    if (n < 4 || n > 9) throw std::invalid_argument("point_of_order_n: n must be in {4,...,9}");
    IntPoly fn = final_polynomial(n, c);
    std::vector<Rat> roots = rational_roots(fn);
    if (trace) trace->roots_examined.emplace_back(n, roots);
    const TateFamily& fam = tate_family(n);
    const MinimalParam& mp = *fam.minimal_param;
    const FamilyShortCoeffs& fc = family_short_coeffs(n);
    for (const Rat& beta : roots) {
        Rat alpha = mp.r * beta + mp.s;
        auto an = fc.A.eval(alpha);
        auto bn = fc.B.eval(alpha);
        if (!an || !bn) continue;  // parameter pole
        Rat memberDisc = Rat(4) * *an * *an * *an + Rat(27) * *bn * *bn;
        if (sgn(memberDisc) == 0) continue;  // singular member
        auto u = find_scaling(Rat(c.A), Rat(c.B), *an, *bn);
        if (!u) continue;
        // transport (0,0): member long model -> member short model -> c
        RationalPoint p = RationalPoint::infinity();
        try {
            GeneralCurve member = tate_curve(n, alpha);
            auto sf = to_short_form(member);
            ModelMap toC = sf.map.then(ModelMap::scale(Rat(1) / *u));
            p = toC.apply(RationalPoint{Rat(0), Rat(0)});
        } catch (const std::exception&) {
            continue;  // degenerate member
        }
        if (!on_curve(c, p)) continue;
        if (point_order(c, p) == n) {
            if (trace) trace->family_alpha = alpha;
            return p;
        }
    }
    return std::nullopt;
}

namespace {

std::vector<RationalPoint> two_torsion_points(const ShortCurve& c) {
    std::vector<RationalPoint> out;
    for (const Rat& r : two_torsion_x(c)) out.emplace_back(r, Rat(0));
    return out;
}

std::optional<RationalPoint> order_six_point(const ShortCurve& c, EngineTrace* trace) {
    return point_of_order_n(c, 6, trace);
}

}  // namespace

std::optional<RationalPoint> point_of_composite_order(const ShortCurve& c, int n,
                                                      EngineTrace* trace) {
    if (n != 10 && n != 12)
        throw std::invalid_argument("point_of_composite_order: n must be 10 or 12");
    if (n == 10) {
        std::vector<RationalPoint> tt = two_torsion_points(c);
        if (tt.empty()) return std::nullopt;
        auto p5 = point_of_order_n(c, 5, trace);
        if (!p5) return std::nullopt;
        RationalPoint p = add(c, *p5, tt.front());
        if (point_order(c, p) != 10)
            throw std::logic_error("point_of_composite_order: C2 + C5 sum not of order 10");
        return p;
    }
    auto q4 = point_of_order_n(c, 4, trace);
    if (!q4) return std::nullopt;
    auto r6 = order_six_point(c, trace);
    if (!r6) return std::nullopt;
    for (int a = 0; a < 4; ++a) {
        RationalPoint pa = scalar_mul(c, Int(a), *q4);
        for (int b = 0; b < 6; ++b) {
            RationalPoint p = add(c, pa, scalar_mul(c, Int(b), *r6));
            if (point_order(c, p) == 12) return p;
        }
    }
    return std::nullopt;
}

namespace {

std::optional<RationalPoint> probe(const ShortCurve& c, int d, EngineTrace* trace) {
    if (d == 3) return point_of_order_3(c, trace);
    if (d >= 4 && d <= 9) return point_of_order_n(c, d, trace);
    return point_of_composite_order(c, d, trace);
}

// order-2 point with smallest x outside the cyclic group of gen
RationalPoint independent_two_torsion(const ShortCurve& c, const std::vector<RationalPoint>& tt,
                                      const RationalPoint& gen, int gen_order) {
    RationalPoint inside = scalar_mul(c, Int(gen_order / 2), gen);
    for (const RationalPoint& t : tt)
        if (!(t == inside)) return t;
    throw std::logic_error("independent_two_torsion: no independent point found");
}

void verify_result(const ShortCurve& c, const TorsionResult& r) {
    if (!r.structure.mazur_allowed())
        throw std::logic_error("torsion_subgroup: structure outside Mazur's list");
    for (const RationalPoint& g : r.generators)
        if (!on_curve(c, g)) throw std::logic_error("torsion_subgroup: generator off curve");
    if (!r.structure.product) {
        if (r.generators.size() != (r.order == 1 ? 0u : 1u))
            throw std::logic_error("torsion_subgroup: bad generator count");
        if (r.order > 1 && point_order(c, r.generators[0]) != r.order)
            throw std::logic_error("torsion_subgroup: generator order mismatch");
        return;
    }
    if (r.generators.size() != 2) throw std::logic_error("torsion_subgroup: bad generator count");
    if (point_order(c, r.generators[0]) != 2 ||
        point_order(c, r.generators[1]) != r.structure.n)
        throw std::logic_error("torsion_subgroup: generator order mismatch");
    // the two generators must span exactly `order` distinct points
    std::vector<RationalPoint> span;
    for (int a = 0; a < 2; ++a)
        for (int b = 0; b < r.structure.n; ++b) {
            RationalPoint p = add(c, scalar_mul(c, Int(a), r.generators[0]),
                                  scalar_mul(c, Int(b), r.generators[1]));
            for (const RationalPoint& q : span)
                if (q == p) throw std::logic_error("torsion_subgroup: generators not independent");
            span.push_back(p);
        }
    if (static_cast<int>(span.size()) != r.order)
        throw std::logic_error("torsion_subgroup: span size mismatch");
}

}  // namespace

TorsionResult torsion_subgroup(const ShortCurve& c, int k_primes) {
    TorsionResult res;
    std::vector<RationalPoint> tt = two_torsion_points(c);
    const int s = static_cast<int>(tt.size());

    TorsionBoundDetail bd = torsion_bound_detail(c, k_primes);
    res.trace.bound = bd.bound;
    res.trace.primes = bd.primes;
    const uint64_t m = bd.bound;

    if (s <= 1) {
        static constexpr std::array<int, 9> probes{12, 10, 9, 8, 7, 6, 5, 4, 3};
        for (int d : probes) {
            if (m % d != 0) continue;
            if (auto p = probe(c, d, &res.trace)) {
                res.structure = {false, d};
                res.order = d;
                res.generators = {*p};
                verify_result(c, res);
                return res;
            }
        }
        if (s == 1) {
            res.structure = {false, 2};
            res.order = 2;
            res.generators = {tt.front()};
        } else {
            res.structure = {false, 1};
            res.order = 1;
        }
        verify_result(c, res);
        return res;
    }

    // s == 3: C2 x C_d for the largest d in {8, 6, 4} dividing m/2
    const uint64_t half = m / 2;
    for (int d : {8, 6, 4}) {
        if (half % d != 0) continue;
        if (auto p = probe(c, d, &res.trace)) {
            res.structure = {true, d};
            res.order = 2 * d;
            res.generators = {independent_two_torsion(c, tt, *p, d), *p};
            verify_result(c, res);
            return res;
        }
    }
    res.structure = {true, 2};
    res.order = 4;
    res.generators = {tt[0], tt[1]};
    verify_result(c, res);
    return res;
}

TorsionResult torsion_subgroup(const Rat& A, const Rat& B, int k_primes) {
    IntegralModelResult im = to_integral_model(A, B);
    TorsionResult res = torsion_subgroup(im.curve, k_primes);
    res.trace.scaling_u = im.u;
    ModelMap back = im.map.inverse();
    for (RationalPoint& g : res.generators) g = back.apply(g);
    return res;
}

TorsionResult torsion_subgroup(const GeneralCurve& g, int k_primes) {
    ShortFormResult sf = to_short_form(g);
    IntegralModelResult im = to_integral_model(sf.A, sf.B);
    TorsionResult res = torsion_subgroup(im.curve, k_primes);
    res.trace.scaling_u = im.u;
    ModelMap back = sf.map.then(im.map).inverse();
    for (RationalPoint& p : res.generators) p = back.apply(p);
    return res;
}

}  // namespace ectorsion
