#include "ectorsion/curve.hpp"

#include "ectorsion/intpoly.hpp"

namespace ectorsion {

ShortCurve::ShortCurve(Int a, Int b) : A(std::move(a)), B(std::move(b)) {
    if (sgn(4 * A * A * A + 27 * B * B) == 0)
        throw SingularCurveError("singular curve: discriminant 4A^3 + 27B^2 = 0");
}

Int discriminant(const ShortCurve& c) { return 4 * c.A * c.A * c.A + 27 * c.B * c.B; }

const Rat& RationalPoint::x() const {
    if (inf_) throw std::logic_error("x() of the point at infinity");
    return x_;
}

const Rat& RationalPoint::y() const {
    if (inf_) throw std::logic_error("y() of the point at infinity");
    return y_;
}

bool RationalPoint::operator==(const RationalPoint& o) const {
    if (inf_ || o.inf_) return inf_ == o.inf_;
    return x_ == o.x_ && y_ == o.y_;
}

std::string RationalPoint::str() const {
    if (inf_) return "O";
    return "(" + x_.get_str() + ", " + y_.get_str() + ")";
}

bool on_curve(const ShortCurve& c, const RationalPoint& p) {
    if (p.is_infinity()) return true;
    Rat lhs = p.y() * p.y();
    Rat rhs = p.x() * p.x() * p.x() + Rat(c.A) * p.x() + Rat(c.B);
    return lhs == rhs;
}

bool on_curve(const GeneralCurve& c, const RationalPoint& p) {
    if (p.is_infinity()) return true;
    const Rat &x = p.x(), &y = p.y();
    Rat lhs = y * y + c.a1 * x * y + c.a3 * y;
    Rat rhs = x * x * x + c.a2 * x * x + c.a4 * x + c.a6;
    return lhs == rhs;
}

RationalPoint negate(const RationalPoint& p) {
    if (p.is_infinity()) return p;
    return RationalPoint(p.x(), -p.y());
}

namespace {

RationalPoint add_unchecked(const ShortCurve& c, const RationalPoint& p, const RationalPoint& q) {
    if (p.is_infinity()) return q;
    if (q.is_infinity()) return p;
    const Rat &x1 = p.x(), &y1 = p.y(), &x2 = q.x(), &y2 = q.y();
    Rat lambda;
    if (x1 == x2) {
        if (y1 == -y2) return RationalPoint::infinity();
        lambda = (Rat(3) * x1 * x1 + Rat(c.A)) / (Rat(2) * y1);
    } else {
        lambda = (y2 - y1) / (x2 - x1);
    }
    Rat x3 = lambda * lambda - x1 - x2;
    Rat y3 = lambda * (x1 - x3) - y1;
    return RationalPoint(std::move(x3), std::move(y3));
}

void require_on_curve(const ShortCurve& c, const RationalPoint& p, const char* who) {
    if (!on_curve(c, p))
        throw std::invalid_argument(std::string(who) + ": point " + p.str() + " not on curve");
}

}  // namespace

RationalPoint add(const ShortCurve& c, const RationalPoint& p, const RationalPoint& q) {
    require_on_curve(c, p, "add");
    require_on_curve(c, q, "add");
    return add_unchecked(c, p, q);
}

RationalPoint scalar_mul(const ShortCurve& c, const Int& k, const RationalPoint& p) {
    if (sgn(k) < 0) throw std::invalid_argument("scalar_mul: k must be nonnegative");
    require_on_curve(c, p, "scalar_mul");
    RationalPoint acc = RationalPoint::infinity();
    RationalPoint base = p;
    Int n = k;
    while (sgn(n) != 0) {
        if (mpz_odd_p(n.get_mpz_t())) acc = add_unchecked(c, acc, base);
        n >>= 1;
        if (sgn(n) != 0) base = add_unchecked(c, base, base);
    }
    return acc;
}

std::optional<int> point_order(const ShortCurve& c, const RationalPoint& p) {
    require_on_curve(c, p, "point_order");
    if (p.is_infinity()) return 1;
    RationalPoint acc = p;
    for (int n = 2; n <= 12; ++n) {
        acc = add_unchecked(c, acc, p);
        if (acc.is_infinity()) return n;
    }
    return std::nullopt;
}

std::vector<Rat> two_torsion_x(const ShortCurve& c) {
    IntPoly cubic{c.B, c.A, Int(0), Int(1)};
    return rational_roots(cubic);
}

}  // namespace ectorsion
