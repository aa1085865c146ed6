#include "ectorsion/ratfunc.hpp"

namespace ectorsion {

RatFunc::RatFunc(const Rat& q)
    : num_(IntPoly::constant(Int(q.get_num()))), den_(IntPoly::constant(Int(q.get_den()))) {}

RatFunc::RatFunc(IntPoly num, IntPoly den) : num_(std::move(num)), den_(std::move(den)) {
    if (den_.is_zero()) throw std::invalid_argument("RatFunc: zero denominator");
    normalize();
}

void RatFunc::normalize() {
    if (num_.is_zero()) {
        den_ = IntPoly::constant(Int(1));
        return;
    }
    IntPoly g = poly_gcd(num_, den_);
    if (g.degree() > 0 || g.content() > 1) {
        num_ = *divide_exact(num_, g);
        den_ = *divide_exact(den_, g);
    }
    if (sgn(den_.leading()) < 0) {
        num_ = -num_;
        den_ = -den_;
    }
}

RatFunc RatFunc::operator-() const {
    RatFunc r = *this;
    r.num_ = -r.num_;
    return r;
}

RatFunc operator+(const RatFunc& a, const RatFunc& b) {
    return RatFunc(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
}

RatFunc operator-(const RatFunc& a, const RatFunc& b) {
    return RatFunc(a.num_ * b.den_ - b.num_ * a.den_, a.den_ * b.den_);
}

RatFunc operator*(const RatFunc& a, const RatFunc& b) {
    return RatFunc(a.num_ * b.num_, a.den_ * b.den_);
}

RatFunc operator/(const RatFunc& a, const RatFunc& b) {
    if (b.is_zero()) throw std::domain_error("RatFunc: division by zero");
    return RatFunc(a.num_ * b.den_, a.den_ * b.num_);
}

std::optional<Rat> RatFunc::eval(const Rat& x) const {
    Rat d = den_.eval(x);
    if (sgn(d) == 0) return std::nullopt;
    Rat n = num_.eval(x);
    Rat q = n / d;
    q.canonicalize();
    return q;
}

std::string RatFunc::str(std::string_view var) const {
    if (is_polynomial()) return num_.str(var);
    return "(" + num_.str(var) + ") / (" + den_.str(var) + ")";
}

}  // namespace ectorsion
