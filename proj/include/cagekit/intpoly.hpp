#pragma once

#include <initializer_list>
#include <optional>
#include <string>
#include <vector>

#include "cagekit/numeric.hpp"

namespace cagekit {

// Dense univariate polynomial over Z, coefficients stored lowest degree first.
// Canonical form: no trailing zero coefficient; the zero polynomial stores
// nothing and has degree -1.  All arithmetic is exact.
class IntPolynomial {
public:
    IntPolynomial() = default;
    explicit IntPolynomial(std::vector<Integer> coeffs);
    IntPolynomial(std::initializer_list<long> coeffs);

    static IntPolynomial zero() { return IntPolynomial(); }
    static IntPolynomial constant(Integer c);
    static IntPolynomial x();
    // c * x^deg
    static IntPolynomial monomial(Integer c, int deg);

    int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
    bool is_zero() const { return coeffs_.empty(); }
    const Integer& leading() const;
    // Coefficient of x^i; zero beyond the degree and for negative i.
    Integer coeff(int i) const;
    const std::vector<Integer>& coeffs() const { return coeffs_; }

    bool operator==(const IntPolynomial& o) const { return coeffs_ == o.coeffs_; }
    bool operator!=(const IntPolynomial& o) const { return !(*this == o); }

    IntPolynomial operator-() const;
    IntPolynomial operator+(const IntPolynomial& o) const;
    IntPolynomial operator-(const IntPolynomial& o) const;
    IntPolynomial operator*(const IntPolynomial& o) const;
    IntPolynomial operator*(const Integer& c) const;
    IntPolynomial& operator+=(const IntPolynomial& o) { return *this = *this + o; }
    IntPolynomial& operator-=(const IntPolynomial& o) { return *this = *this - o; }
    IntPolynomial& operator*=(const IntPolynomial& o) { return *this = *this * o; }

    IntPolynomial power(unsigned e) const;
    Integer evaluate(const Integer& t) const;
    // this(inner(x)), exact.
    IntPolynomial compose(const IntPolynomial& inner) const;
    IntPolynomial derivative() const;

    // gcd of all coefficients, >= 0 (zero polynomial has content 0).
    Integer content() const;
    // this / content; sign of the leading coefficient is preserved.
    IntPolynomial primitive_part() const;
    bool is_monic() const { return !is_zero() && leading() == 1; }

    // "x^3-12x-1" style, highest degree first; "0" for the zero polynomial.
    std::string pretty() const;
    // "[-1,-12,0,1]", lowest degree first.
    std::string coeff_list() const;
    // Inverse of coeff_list; throws std::invalid_argument on malformed input.
    static IntPolynomial parse_coeff_list(const std::string& text);

private:
    void normalize();
    std::vector<Integer> coeffs_;
};

inline IntPolynomial operator*(const Integer& c, const IntPolynomial& p) { return p * c; }

// Quotient or remainder of a division carried out over Q: an integer
// polynomial divided by a positive denominator, kept in lowest terms.
struct RationalPoly {
    IntPolynomial num;
    Integer den = 1;

    bool is_integral() const { return den == 1; }
};

struct DivisionResult {
    RationalPoly quotient;
    RationalPoly remainder;
};

// Division with remainder in Q[x]: a = q*b + r with deg r < deg b.
// Throws std::invalid_argument when b is the zero polynomial.
DivisionResult divrem(const IntPolynomial& a, const IntPolynomial& b);

// Exact division in Z[x]; nullopt when b does not divide a over Z.
std::optional<IntPolynomial> try_divide_exact(const IntPolynomial& a, const IntPolynomial& b);

// Primitive gcd in Z[x] (primitive polynomial, positive leading coefficient;
// gcd with the zero polynomial is the primitive part of the other argument).
IntPolynomial poly_gcd(const IntPolynomial& a, const IntPolynomial& b);

}  // namespace cagekit
