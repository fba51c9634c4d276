#pragma once

#include <optional>
#include <string>
#include <vector>

#include "cagekit/intpoly.hpp"

namespace cagekit {

enum class Verdict { Irreducible, Reducible };

// Self-checking certificate for irreducibility over Q.  Reducible verdicts
// carry a factor pair that multiplies back to the input exactly; irreducible
// verdicts carry either an Eisenstein prime or the name of the exhaustive
// method that ruled out all candidate factors.
struct IrreducibilityCertificate {
    IntPolynomial poly;
    Verdict verdict = Verdict::Irreducible;
    // Set when irreducibility is witnessed by the Eisenstein criterion.
    std::optional<Integer> eisenstein_prime;
    // "eisenstein", "degree-1", "rational-root-exhaustion", "modular-factorization"
    std::string method;
    // Set for Reducible: poly == factors[0] * factors[1].
    std::vector<IntPolynomial> factors;

    // Re-checks the witness against `poly` from scratch.
    bool reverify() const;
};

// Least prime p <= bound with: p divides every non-leading coefficient,
// p does not divide the leading coefficient, p^2 does not divide the
// constant term.  Requires a nonconstant polynomial.
std::optional<Integer> eisenstein_check(const IntPolynomial& p, unsigned long bound = 1000);

// All rational roots (exact, deduplicated, ascending).  Requires nonzero p.
std::vector<Rational> rational_roots(const IntPolynomial& p);

// Decides irreducibility over Q (content is ignored, degree >= 1 required):
// rational roots first (conclusive for degree <= 3), then Eisenstein, then a
// complete modular factorization with exact trial division of every lifted
// candidate factor.  The verdict is exact, never probabilistic.
IrreducibilityCertificate is_irreducible_over_Q(const IntPolynomial& p);

// Certificate for H_{d-1}(x) + shift, shift in {-2,-1,1,2}.  For odd k,
// shift = +-2 and d >= 4 the certificate is cross-checked to be Eisenstein
// at p = 2 (std::logic_error otherwise).  Requires k >= 3, d >= 3.
IrreducibilityCertificate shifted_dickson_certificate(long k, int d, int shift);

}  // namespace cagekit
