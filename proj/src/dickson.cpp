#include "cagekit/dickson.hpp"

#include <stdexcept>

namespace cagekit {

IntPolynomial family_poly(PolyFamily fam, long k, int i) {
    if (k < 2) throw std::invalid_argument("family_poly: k must be at least 2");
    if (i < 0) throw std::invalid_argument("family_poly: negative indices are not represented");
    const IntPolynomial one = IntPolynomial::constant(1);
    const IntPolynomial x = IntPolynomial::x();
    IntPolynomial prev, cur;
    int start;
    switch (fam) {
        case PolyFamily::F:
            if (i == 0) return one;
            if (i == 1) return x;
            prev = x;
            cur = x * x - IntPolynomial::constant(k);
            start = 2;
            break;
        case PolyFamily::G:
            if (i == 0) return one;
            prev = one;
            cur = x + one;
            start = 1;
            break;
        case PolyFamily::H:
            if (i == 0) return one;
            prev = one;
            cur = x;
            start = 1;
            break;
        default:
            throw std::logic_error("unreachable");
    }
    const Integer km1(k - 1);
    for (int j = start; j < i; ++j) {
        IntPolynomial next = x * cur - prev * km1;
        prev = std::move(cur);
        cur = std::move(next);
    }
    return cur;
}

SingletonIdentityReport verify_singleton_identities(long k, int i_max) {
    SingletonIdentityReport rep;
    IntPolynomial f_sum;  // sum of F_0..F_i, maintained incrementally
    const IntPolynomial x_plus_k = IntPolynomial::x() + IntPolynomial::constant(k);
    for (int i = 0; i <= i_max; ++i) {
        f_sum += poly_F(k, i);
        if (poly_G(k, i) != f_sum) {
            rep.ok = false;
            rep.identity = "G_i = sum F_j";
            rep.index = i;
            return rep;
        }
        IntPolynomial lhs = poly_G(k, i + 1) + poly_G(k, i) * Integer(k - 1);
        if (lhs != x_plus_k * poly_H(k, i)) {
            rep.ok = false;
            rep.identity = "G_{i+1} + (k-1)G_i = (x+k)H_i";
            rep.index = i;
            return rep;
        }
    }
    return rep;
}

}  // namespace cagekit
