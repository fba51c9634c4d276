#include "cagekit/cyclotomic.hpp"

#include <algorithm>
#include <stdexcept>

#include "cagekit/intmatrix.hpp"

namespace cagekit {

unsigned long euler_totient(unsigned long n) {
    if (n == 0) throw std::invalid_argument("euler_totient: undefined at 0");
    unsigned long result = n;
    unsigned long m = n;
    for (unsigned long p = 2; p * p <= m; ++p) {
        if (m % p) continue;
        while (m % p == 0) m /= p;
        result -= result / p;
    }
    if (m > 1) result -= result / m;
    return result;
}

std::vector<unsigned long> divisors(unsigned long n) {
    if (n == 0) throw std::invalid_argument("divisors: undefined at 0");
    std::vector<unsigned long> small, large;
    for (unsigned long d = 1; d * d <= n; ++d) {
        if (n % d) continue;
        small.push_back(d);
        if (d != n / d) large.push_back(n / d);
    }
    small.insert(small.end(), large.rbegin(), large.rend());
    return small;
}

IntPolynomial cyclotomic(unsigned long l) {
    if (l == 0) throw std::invalid_argument("cyclotomic: undefined at 0");
    // x^l - 1
    std::vector<Integer> xs(l + 1, Integer(0));
    xs[0] = -1;
    xs[l] = 1;
    IntPolynomial rem(std::move(xs));
    for (unsigned long d : divisors(l)) {
        if (d == l) continue;
        auto q = try_divide_exact(rem, cyclotomic(d));
        if (!q) throw std::logic_error("cyclotomic: inexact division by a proper divisor");
        rem = *q;
    }
    return rem;
}

IntPolynomial half_trace_expand(const IntPolynomial& f, unsigned long m) {
    if (f.degree() > static_cast<int>(m))
        throw std::invalid_argument("half_trace_expand: deg f exceeds m");
    const IntPolynomial x2p1{1, 0, 1};
    IntPolynomial out;
    IntPolynomial pw = IntPolynomial::constant(1);
    for (int j = 0; j <= f.degree(); ++j) {
        if (f.coeff(j) != 0)
            out += IntPolynomial::monomial(f.coeff(j), static_cast<int>(m) - j) * pw;
        pw *= x2p1;
    }
    return out;
}

IntPolynomial half_trace(unsigned long l) {
    if (l < 3) throw std::invalid_argument("half_trace: requires l >= 3");
    const IntPolynomial phi = cyclotomic(l);
    const unsigned long deg = euler_totient(l);
    if (deg % 2 != 0 || phi.degree() != static_cast<int>(deg))
        throw std::logic_error("half_trace: unexpected cyclotomic degree");
    // Self-reciprocity underpins the substitution x + 1/x.
    for (unsigned long i = 0; i <= deg; ++i)
        if (phi.coeff(static_cast<int>(i)) != phi.coeff(static_cast<int>(deg - i)))
            throw std::logic_error("half_trace: cyclotomic polynomial is not self-reciprocal");
    const unsigned long m = deg / 2;
    // Coefficient of x^{m+s} in x^m f(x+1/x) is sum over j >= s, j = s (mod 2)
    // of C(j,(j+s)/2) a_j; solve descending, the diagonal entries are 1.
    std::vector<Integer> a(m + 1, Integer(0));
    for (long s = static_cast<long>(m); s >= 0; --s) {
        Integer acc = phi.coeff(static_cast<int>(m + s));
        for (long j = s + 2; j <= static_cast<long>(m); j += 2) {
            Integer binom;
            mpz_bin_uiui(binom.get_mpz_t(), static_cast<unsigned long>(j),
                         static_cast<unsigned long>((j + s) / 2));
            acc -= binom * a[static_cast<size_t>(j)];
        }
        a[static_cast<size_t>(s)] = acc;
    }
    IntPolynomial f(std::move(a));
    if (half_trace_expand(f, m) != phi)
        throw std::logic_error("half_trace: back-substitution check failed");
    return f;
}

IntPolynomial half_trace_product(unsigned long n) {
    IntPolynomial r = IntPolynomial::constant(1);
    for (unsigned long l : divisors(n))
        if (l >= 3) r *= half_trace(l);
    return r;
}

IntPolynomial cycle_charpoly(unsigned long n) {
    if (n < 3) throw std::invalid_argument("cycle_charpoly: requires n >= 3");
    if (n % 2 == 0) {
        IntPolynomial r = half_trace_product(n);
        if (r.degree() != static_cast<int>(n) / 2 - 1)
            throw std::logic_error("cycle_charpoly: half-trace product has wrong degree");
        return IntPolynomial{-4, 0, 1} * r * r;  // (x-2)(x+2) R^2
    }
    IntMatrix a(static_cast<int>(n));
    for (int i = 0; i < static_cast<int>(n); ++i) {
        int j = (i + 1) % static_cast<int>(n);
        a.at(i, j) = 1;
        a.at(j, i) = 1;
    }
    return charpoly(a);
}

}  // namespace cagekit
