#include "ectorsion/nagell.hpp"

#include <algorithm>

#include "ectorsion/intpoly.hpp"

namespace ectorsion {

std::vector<Int> square_divisors(const Int& delta, uint64_t rho_budget) {
    if (sgn(delta) == 0) throw std::invalid_argument("square_divisors: delta must be nonzero");
    Factorization f = factorize(abs(delta), rho_budget);
    if (!f.complete())
        throw FactorBudgetExceeded("square_divisors: discriminant factorization budget exceeded");
    Factorization halved;
    for (const auto& [p, e] : f.primes)
        if (e >= 2) halved.primes.emplace_back(p, e / 2);
    return divisors(halved);
}

TorsionResult lutz_nagell_torsion(const ShortCurve& c, uint64_t rho_budget) {
    const Int delta = discriminant(c);

    std::vector<RationalPoint> points;  // finite torsion points, no duplicates
    auto consider = [&](const Rat& x, const Int& y) {
        RationalPoint p{x, Rat(y)};
        if (!on_curve(c, p)) return;
        if (!point_order(c, p)) return;
        if (std::find(points.begin(), points.end(), p) == points.end()) points.push_back(p);
    };

    for (const Rat& r : two_torsion_x(c)) consider(r, Int(0));
    for (const Int& m : square_divisors(delta, rho_budget)) {
        IntPoly shifted{c.B - m * m, c.A, Int(0), Int(1)};
        for (const Rat& x : rational_roots(shifted)) {
            if (!is_integer(x)) continue;
            consider(x, m);
            consider(x, -m);
        }
    }

    const int order = static_cast<int>(points.size()) + 1;
    int two_rank_points = 0;
    int max_order = 1;
    RationalPoint max_point = RationalPoint::infinity();
    for (const RationalPoint& p : points) {
        int n = *point_order(c, p);
        if (n == 2) ++two_rank_points;
        if (n > max_order) {
            max_order = n;
            max_point = p;
        }
    }

    TorsionResult res;
    res.order = order;
    if (two_rank_points == 3) {
        res.structure = {true, order / 2};
        RationalPoint inside = scalar_mul(c, Int(max_order / 2), max_point);
        for (const RationalPoint& p : points) {
            if (*point_order(c, p) != 2 || p == inside) continue;
            res.generators = {p, max_point};
            break;
        }
    } else {
        res.structure = {false, order};
        if (order > 1) res.generators = {max_point};
    }
    if (!res.structure.mazur_allowed())
        throw std::logic_error("lutz_nagell_torsion: census outside Mazur's list");
    if (max_order != (res.structure.product ? res.structure.n : res.order))
        throw std::logic_error("lutz_nagell_torsion: maximal order inconsistent with census");
    return res;
}

}  // namespace ectorsion
