#include "ectorsion/tate.hpp"

#include <array>
#include <map>

#include "ectorsion/model.hpp"

namespace ectorsion {

namespace {

std::map<int, TateFamily> build_families() {
    std::map<int, TateFamily> fam;
    const RatFunc x = RatFunc::variable();
    const RatFunc one(1);

    auto add = [&](int n, RatFunc b, RatFunc c, std::optional<MinimalParam> mp, int deg,
                   Int cn) {
        fam.emplace(n, TateFamily{n, std::move(b), std::move(c), mp, deg, std::move(cn)});
    };

    // b and c per family; minimal parameters alpha = r*beta + s
    add(4, x, RatFunc(0), MinimalParam{make_rat(1, 12), make_rat(-1, 12)}, 6, Int(56667));
    add(5, x, x, MinimalParam{Rat(1), Rat(0)}, 12, Int(898312));
    add(6, x + x * x, x, MinimalParam{make_rat(1, 3), make_rat(-1, 3)}, 12, Int(2220071));
    add(7, x * x * x - x * x, x * x - x, MinimalParam{Rat(1), Rat(0)}, 18, Int(110725743));
    {
        RatFunc b = (RatFunc(2) * x - one) * (x - one);
        add(8, b, b / x, MinimalParam{Rat(1), Rat(1)}, 24, Int(46702469380));
    }
    {
        RatFunc c = x * x * (x - one);
        RatFunc b = c * (x * (x - one) + one);
        add(9, b, c, MinimalParam{Rat(1), Rat(0)}, 36, Int(11353024920));
    }
    {
        RatFunc den = x - (x - one) * (x - one);
        RatFunc c = (RatFunc(2) * x * x * x - RatFunc(3) * x * x + x) / den;
        RatFunc b = c * x * x / den;
        add(10, b, c, std::nullopt, 0, Int(0));
    }
    {
        RatFunc dm1 = x - one;
        RatFunc c = (RatFunc(3) * x * x - RatFunc(3) * x + one) * (x - RatFunc(2) * x * x) /
                    (dm1 * dm1 * dm1);
        RatFunc b = c * (RatFunc(2) * x - RatFunc(2) * x * x - one) / dm1;
        add(12, b, c, std::nullopt, 0, Int(0));
    }
    return fam;
}

const std::map<int, TateFamily>& families() {
    static const std::map<int, TateFamily> fam = build_families();
    return fam;
}

struct FamilyCache {
    FamilyShortCoeffs shortCoeffs;
    FinalPolyPair raw;         // in alpha
    FinalPolyPair normalized;  // in beta
};

FamilyCache build_cache(int n) {
    const TateFamily& f = tate_family(n);
    RatFunc a1 = RatFunc(1) - f.c;
    RatFunc a2 = -f.b;
    RatFunc a3 = -f.b;
    auto w = short_form_coeffs<RatFunc>(a1, a2, a3, RatFunc(0), RatFunc(0));

    FamilyCache cache;
    cache.shortCoeffs = {w.A, w.B};

    // clear denominators of A^3*B_n^2 - B^2*A_n^3 over the least common one
    IntPoly bden2 = w.B.den() * w.B.den();
    IntPoly aden3 = w.A.den() * w.A.den() * w.A.den();
    IntPoly g = poly_gcd(bden2, aden3);
    IntPoly lcmDen = *divide_exact(bden2 * aden3, g);
    if (sgn(lcmDen.leading()) < 0) lcmDen = -lcmDen;
    cache.raw.S = w.B.num() * w.B.num() * *divide_exact(lcmDen, bden2);
    cache.raw.T = -(w.A.num() * w.A.num() * w.A.num()) * *divide_exact(lcmDen, aden3);

    // drop the common factor of the pair (integer content and any alpha-
    // polynomial factor: its roots are parameter values that are roots for
    // every curve, i.e. identically singular members)
    IntPoly common = poly_gcd(cache.raw.S, cache.raw.T);
    IntPoly s1 = *divide_exact(cache.raw.S, common);
    IntPoly t1 = *divide_exact(cache.raw.T, common);

    // minimal-parameter substitution, cleared to a jointly primitive pair
    const MinimalParam& mp = *f.minimal_param;
    auto [ps, ds] = s1.compose_affine(mp.r, mp.s);
    auto [pt, dt] = t1.compose_affine(mp.r, mp.s);
    Int d = lcm(ds, dt);
    IntPoly s2 = (d / ds) * ps;
    IntPoly t2 = (d / dt) * pt;
    Int c = gcd(s2.content(), t2.content());
    cache.normalized.S = *divide_exact(s2, IntPoly::constant(c));
    cache.normalized.T = *divide_exact(t2, IntPoly::constant(c));
    return cache;
}

const FamilyCache& family_cache(int n) {
    if (n < 4 || n > 9) throw std::invalid_argument("final polynomials exist for n = 4..9 only");
    static const std::array<FamilyCache, 6> caches = [] {
        std::array<FamilyCache, 6> cs;
        for (int k = 4; k <= 9; ++k) cs[k - 4] = build_cache(k);
        return cs;
    }();
    return caches[n - 4];
}

}  // namespace

const TateFamily& tate_family(int n) {
    auto it = families().find(n);
    if (it == families().end())
        throw std::invalid_argument("tate_family: n must be in {4,...,10,12}");
    return it->second;
}

GeneralCurve tate_curve(int n, const Rat& alpha) {
    const TateFamily& f = tate_family(n);
    auto b = f.b.eval(alpha);
    auto c = f.c.eval(alpha);
    if (!b || !c) throw std::invalid_argument("tate_curve: parameter hits a pole");
    GeneralCurve g{Rat(1) - *c, -*b, -*b, Rat(0), Rat(0)};
    auto w = short_form_coeffs<Rat>(g.a1, g.a2, g.a3, g.a4, g.a6);
    Rat disc = Rat(4) * w.A * w.A * w.A + Rat(27) * w.B * w.B;
    if (sgn(disc) == 0) throw SingularCurveError("tate_curve: singular family member");
    return g;
}

const FamilyShortCoeffs& family_short_coeffs(int n) { return family_cache(n).shortCoeffs; }

IntPoly FinalPolyPair::at(const Int& A, const Int& B) const {
    return (A * A * A) * S + (B * B) * T;
}

const FinalPolyPair& final_poly_pair_raw(int n) { return family_cache(n).raw; }
const FinalPolyPair& final_poly_pair(int n) { return family_cache(n).normalized; }

IntPoly final_polynomial_raw(int n, const ShortCurve& c) {
    return final_poly_pair_raw(n).at(c.A, c.B);
}

IntPoly final_polynomial(int n, const ShortCurve& c) { return final_poly_pair(n).at(c.A, c.B); }

Int curve_height(const ShortCurve& c) {
    Int a3 = abs(c.A * c.A * c.A);
    Int b2 = c.B * c.B;
    return std::max(a3, b2);
}

bool seminorm_bound_check(int n, const ShortCurve& c) {
    return seminorm(final_polynomial(n, c)) <= tate_family(n).seminorm_constant * curve_height(c);
}

Int seminorm_symbolic_bound(int n) {
    const FinalPolyPair& pair = final_poly_pair(n);
    Int total(0);
    int deg = std::max(pair.S.degree(), pair.T.degree());
    for (int i = 0; i <= deg; ++i) total += abs(pair.S.coeff(i)) + abs(pair.T.coeff(i));
    return total;
}

}  // namespace ectorsion
