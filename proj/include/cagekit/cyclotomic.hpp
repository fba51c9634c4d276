#pragma once

#include <vector>

#include "cagekit/intpoly.hpp"

namespace cagekit {

// Throws std::invalid_argument on n = 0.
unsigned long euler_totient(unsigned long n);

// Positive divisors of n, ascending. n >= 1.
std::vector<unsigned long> divisors(unsigned long n);

// l-th cyclotomic polynomial, computed by exact division of x^l - 1 by the
// cyclotomic polynomials of the proper divisors of l.  l >= 1.
IntPolynomial cyclotomic(unsigned long l);

// Expand x^m * f(x + 1/x) as a polynomial in x (integral for deg f <= m).
IntPolynomial half_trace_expand(const IntPolynomial& f, unsigned long m);

// The degree-phi(l)/2 polynomial f_l with x^{phi(l)/2} f_l(x + 1/x) = Phi_l(x).
// Solved from the triangular coefficient system and verified by
// back-substitution (std::logic_error if the expansion does not match).
// Requires l >= 3.
IntPolynomial half_trace(unsigned long l);

// Product of the half-trace polynomials over the divisors l >= 3 of n;
// for even n the characteristic polynomial of the n-cycle factors as
// (x-2)(x+2) * this^2.  Monic of degree n/2 - 1 for even n.
IntPolynomial half_trace_product(unsigned long n);

// Characteristic polynomial of the adjacency matrix of the n-cycle (n >= 3):
// even n via the (x-2)(x+2)*R^2 product form, odd n via the exact
// brute-force determinant.
IntPolynomial cycle_charpoly(unsigned long n);

}  // namespace cagekit
