#pragma once

#include <vector>

#include "cagekit/intpoly.hpp"
#include "cagekit/numeric.hpp"

namespace cagekit {

// Dense square matrix over Z with exact arithmetic.
class IntMatrix {
public:
    IntMatrix() = default;
    explicit IntMatrix(int n) : n_(n), a_(static_cast<size_t>(n) * n, Integer(0)) {}

    static IntMatrix identity(int n);
    static IntMatrix ones(int n);

    int size() const { return n_; }
    Integer& at(int i, int j) { return a_[static_cast<size_t>(i) * n_ + j]; }
    const Integer& at(int i, int j) const { return a_[static_cast<size_t>(i) * n_ + j]; }

    bool operator==(const IntMatrix& o) const { return n_ == o.n_ && a_ == o.a_; }
    bool operator!=(const IntMatrix& o) const { return !(*this == o); }
    bool is_zero() const;

    IntMatrix operator+(const IntMatrix& o) const;
    IntMatrix operator-(const IntMatrix& o) const;
    IntMatrix operator*(const IntMatrix& o) const;
    IntMatrix operator*(const Integer& c) const;

    // Exact determinant (Bareiss fraction-free elimination).
    Integer determinant() const;

private:
    int n_ = 0;
    std::vector<Integer> a_;
};

// p(M) by Horner's rule, exact.
inline IntMatrix operator*(const Integer& c, const IntMatrix& m) { return m * c; }

IntMatrix poly_at_matrix(const IntPolynomial& p, const IntMatrix& m);

// Characteristic polynomial det(xI - M), exact: determinant evaluations at
// x = 0..n interpolated over Q; the result is monic with integer
// coefficients (std::logic_error on any internal inconsistency).
IntPolynomial charpoly(const IntMatrix& m);

}  // namespace cagekit
