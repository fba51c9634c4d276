#include "cagekit/intmatrix.hpp"

#include <stdexcept>

namespace cagekit {

IntMatrix IntMatrix::identity(int n) {
    IntMatrix m(n);
    for (int i = 0; i < n; ++i) m.at(i, i) = 1;
    return m;
}

IntMatrix IntMatrix::ones(int n) {
    IntMatrix m(n);
    for (auto& v : m.a_) v = 1;
    return m;
}

bool IntMatrix::is_zero() const {
    for (const auto& v : a_)
        if (v != 0) return false;
    return true;
}

IntMatrix IntMatrix::operator+(const IntMatrix& o) const {
    if (n_ != o.n_) throw std::invalid_argument("matrix size mismatch");
    IntMatrix r = *this;
    for (size_t i = 0; i < a_.size(); ++i) r.a_[i] += o.a_[i];
    return r;
}

IntMatrix IntMatrix::operator-(const IntMatrix& o) const {
    if (n_ != o.n_) throw std::invalid_argument("matrix size mismatch");
    IntMatrix r = *this;
    for (size_t i = 0; i < a_.size(); ++i) r.a_[i] -= o.a_[i];
    return r;
}

IntMatrix IntMatrix::operator*(const IntMatrix& o) const {
    if (n_ != o.n_) throw std::invalid_argument("matrix size mismatch");
    IntMatrix r(n_);
    for (int i = 0; i < n_; ++i) {
        for (int k = 0; k < n_; ++k) {
            const Integer& aik = at(i, k);
            if (aik == 0) continue;
            for (int j = 0; j < n_; ++j) r.at(i, j) += aik * o.at(k, j);
        }
    }
    return r;
}

IntMatrix IntMatrix::operator*(const Integer& c) const {
    IntMatrix r = *this;
    for (auto& v : r.a_) v *= c;
    return r;
}

Integer IntMatrix::determinant() const {
    if (n_ == 0) return 1;
    IntMatrix m = *this;
    Integer prev = 1;
    int sign = 1;
    for (int k = 0; k + 1 < n_; ++k) {
        if (m.at(k, k) == 0) {
            int pivot = -1;
            for (int i = k + 1; i < n_; ++i)
                if (m.at(i, k) != 0) {
                    pivot = i;
                    break;
                }
            if (pivot < 0) return 0;
            for (int j = 0; j < n_; ++j) std::swap(m.at(k, j), m.at(pivot, j));
            sign = -sign;
        }
        for (int i = k + 1; i < n_; ++i) {
            for (int j = k + 1; j < n_; ++j) {
                Integer v = m.at(i, j) * m.at(k, k) - m.at(i, k) * m.at(k, j);
                // Bareiss: division by the previous pivot is exact.
                m.at(i, j) = v / prev;
            }
            m.at(i, k) = 0;
        }
        prev = m.at(k, k);
    }
    Integer det = m.at(n_ - 1, n_ - 1);
    return sign < 0 ? -det : det;
}

IntMatrix poly_at_matrix(const IntPolynomial& p, const IntMatrix& m) {
    IntMatrix acc(m.size());
    for (int i = p.degree(); i >= 0; --i) {
        acc = acc * m;
        Integer c = p.coeff(i);
        if (c != 0)
            for (int d = 0; d < m.size(); ++d) acc.at(d, d) += c;
    }
    return acc;
}

IntPolynomial charpoly(const IntMatrix& m) {
    int n = m.size();
    // Values of det(tI - M) at t = 0..n.
    std::vector<Integer> ys(static_cast<size_t>(n) + 1);
    for (int t = 0; t <= n; ++t) {
        IntMatrix shifted = m * Integer(-1);
        for (int i = 0; i < n; ++i) shifted.at(i, i) += t;
        ys[static_cast<size_t>(t)] = shifted.determinant();
    }
    // Lagrange interpolation at the integer nodes 0..n, exact over Q.
    // N(x) = prod (x - j); term_i = y_i * N/(x-i) / prod_{j!=i} (i-j).
    IntPolynomial big = IntPolynomial::constant(1);
    for (int j = 0; j <= n; ++j) big *= IntPolynomial{-j, 1};
    std::vector<Rational> acc(static_cast<size_t>(n) + 1, Rational(0));
    for (int i = 0; i <= n; ++i) {
        auto basis = try_divide_exact(big, IntPolynomial{-i, 1});
        if (!basis) throw std::logic_error("charpoly: node division failed");
        Integer denom = 1;
        for (int j = 0; j <= n; ++j)
            if (j != i) denom *= Integer(i - j);
        Rational scale = Rational(ys[static_cast<size_t>(i)]) / Rational(denom);
        for (int d = 0; d <= basis->degree(); ++d)
            acc[static_cast<size_t>(d)] += Rational(basis->coeff(d)) * scale;
    }
    std::vector<Integer> coeffs(acc.size());
    for (size_t i = 0; i < acc.size(); ++i) {
        if (acc[i].get_den() != 1)
            throw std::logic_error("charpoly: interpolation produced a non-integer coefficient");
        coeffs[i] = Integer(acc[i].get_num());
    }
    IntPolynomial result(std::move(coeffs));
    if (result.degree() != n || !result.is_monic())
        throw std::logic_error("charpoly: result is not monic of the right degree");
    return result;
}

}  // namespace cagekit
