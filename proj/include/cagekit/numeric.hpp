#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <utility>
#include <vector>

namespace cagekit {

// Exact arbitrary-precision integers/rationals back every arithmetic path.
using Integer = mpz_class;
using Rational = mpq_class;

inline Integer int_gcd(const Integer& a, const Integer& b) {
    Integer r;
    mpz_gcd(r.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return r;
}

inline Integer int_lcm(const Integer& a, const Integer& b) {
    Integer r;
    mpz_lcm(r.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return r;
}

inline bool divides(const Integer& d, const Integer& a) {
    return mpz_divisible_p(a.get_mpz_t(), d.get_mpz_t()) != 0;
}

inline Integer int_pow(const Integer& base, unsigned long e) {
    Integer r;
    mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), e);
    return r;
}

inline Integer int_abs(const Integer& a) {
    Integer r;
    mpz_abs(r.get_mpz_t(), a.get_mpz_t());
    return r;
}

inline Integer isqrt(const Integer& a) {
    Integer r;
    mpz_sqrt(r.get_mpz_t(), a.get_mpz_t());
    return r;
}

// Trial-division factorization; remaining cofactors above the trial bound are
// kept only when they pass a strong primality test, otherwise this throws.
std::vector<std::pair<Integer, int>> factorize(const Integer& n);

// All positive divisors of |n|, ascending. n must be nonzero.
std::vector<Integer> positive_divisors(const Integer& n);

// Primes below `limit`, ascending.
const std::vector<uint64_t>& small_primes(uint64_t limit = 20000);

}  // namespace cagekit
