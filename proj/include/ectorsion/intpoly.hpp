#pragma once

#include <initializer_list>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "ectorsion/numeric.hpp"

namespace ectorsion {

/// Dense univariate polynomial over Z, coefficient index = degree.
/// The coefficient vector never ends in a zero; the zero polynomial is empty.
class IntPoly {
  public:
    IntPoly() = default;
    IntPoly(std::initializer_list<Int> ascending);
    explicit IntPoly(std::vector<Int> ascending);

    static IntPoly constant(Int c);
    static IntPoly variable();

    bool is_zero() const { return c_.empty(); }
    /// Degree; -1 for the zero polynomial.
    int degree() const { return static_cast<int>(c_.size()) - 1; }
    const Int& coeff(std::size_t i) const;
    const Int& leading() const;
    const std::vector<Int>& coeffs() const { return c_; }

    IntPoly operator-() const;
    IntPoly& operator+=(const IntPoly& o);
    IntPoly& operator-=(const IntPoly& o);
    friend IntPoly operator+(IntPoly a, const IntPoly& b) { return a += b; }
    friend IntPoly operator-(IntPoly a, const IntPoly& b) { return a -= b; }
    friend IntPoly operator*(const IntPoly& a, const IntPoly& b);
    friend IntPoly operator*(const Int& k, const IntPoly& f);
    friend IntPoly operator*(const IntPoly& f, const Int& k) { return k * f; }
    bool operator==(const IntPoly& o) const { return c_ == o.c_; }

    IntPoly derivative() const;
    /// gcd of |coefficients|; 0 for the zero polynomial.
    Int content() const;
    /// f / content(f); keeps the sign of the leading coefficient.
    IntPoly primitive_part() const;
    IntPoly pow(unsigned e) const;

    Int eval(const Int& x) const;
    Rat eval(const Rat& x) const;
    /// Homogeneous evaluation f(num/den) * den^degree, exact in Z.
    Int eval_scaled(const Int& num, const Int& den) const;
    /// Horner evaluation of f(x) mod m (m > 0).
    Int eval_mod(const Int& x, const Int& m) const;

    /// f(r*x + s) computed exactly over Q, returned as (P, d) with the value
    /// equal to P/d, d > 0 and gcd(content(P), d) == 1.
    std::pair<IntPoly, Int> compose_affine(const Rat& r, const Rat& s) const;

    std::string str(std::string_view var = "x") const;

  private:
    std::vector<Int> c_;
    void normalize();
};

/// Coefficient 1-norm: sum of |a_i|.
Int seminorm(const IntPoly& f);

/// Primitive integer polynomial proportional to f(r*x + s) in the new
/// variable, leading-coefficient sign matching f's. Requires r != 0.
IntPoly substitute_affine(const IntPoly& f, const Rat& r, const Rat& s);

/// The complete set of rational roots of f (f != 0), duplicates collapsed,
/// ascending. Every returned value satisfies f(p/q)*q^deg == 0 exactly.
std::vector<Rat> rational_roots(const IntPoly& f);

/// Quotient when b divides a exactly in Z[x]; nullopt otherwise.
std::optional<IntPoly> divide_exact(const IntPoly& a, const IntPoly& b);

/// gcd in Z[x] (content gcd times primitive-part gcd), positive leading
/// coefficient. gcd(f, 0) = |f| up to sign normalization.
IntPoly poly_gcd(const IntPoly& a, const IntPoly& b);

/// Product of the distinct irreducible factors of f; same root set as f.
IntPoly squarefree_part(const IntPoly& f);

}  // namespace ectorsion
