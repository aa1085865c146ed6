#pragma once

#include <optional>
#include <string>

#include "ectorsion/intpoly.hpp"

namespace ectorsion {

/// Rational function over Q, stored as a reduced pair of integer polynomials.
/// Canonical form: poly gcd(num, den) constant, gcd of the two integer
/// contents 1, leading coefficient of den positive. Zero is 0/1.
class RatFunc {
  public:
    RatFunc() : num_(), den_(IntPoly::constant(Int(1))) {}
    RatFunc(int c) : RatFunc(IntPoly::constant(Int(c))) {}
    explicit RatFunc(const Int& c) : RatFunc(IntPoly::constant(c)) {}
    explicit RatFunc(const Rat& q);
    explicit RatFunc(IntPoly num, IntPoly den = IntPoly::constant(Int(1)));

    static RatFunc variable() { return RatFunc(IntPoly::variable()); }

    const IntPoly& num() const { return num_; }
    const IntPoly& den() const { return den_; }
    bool is_zero() const { return num_.is_zero(); }
    bool is_polynomial() const { return den_ == IntPoly::constant(Int(1)); }

    RatFunc operator-() const;
    friend RatFunc operator+(const RatFunc& a, const RatFunc& b);
    friend RatFunc operator-(const RatFunc& a, const RatFunc& b);
    friend RatFunc operator*(const RatFunc& a, const RatFunc& b);
    friend RatFunc operator/(const RatFunc& a, const RatFunc& b);
    bool operator==(const RatFunc& o) const { return num_ == o.num_ && den_ == o.den_; }

    /// Value at x; nullopt at a pole.
    std::optional<Rat> eval(const Rat& x) const;

    std::string str(std::string_view var = "x") const;

  private:
    IntPoly num_, den_;
    void normalize();
};

}  // namespace ectorsion
