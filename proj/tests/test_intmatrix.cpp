#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "cagekit/intmatrix.hpp"

using namespace cagekit;

namespace {

IntMatrix from_rows(const std::vector<std::vector<long>>& rows) {
    IntMatrix m(static_cast<int>(rows.size()));
    for (int i = 0; i < m.size(); ++i)
        for (int j = 0; j < m.size(); ++j) m.at(i, j) = rows[static_cast<size_t>(i)][static_cast<size_t>(j)];
    return m;
}

}  // namespace

TEST_CASE("constructors and equality") {
    IntMatrix z(3);
    CHECK(z.is_zero());
    CHECK(IntMatrix::identity(3) != z);
    CHECK(IntMatrix::ones(2) == from_rows({{1, 1}, {1, 1}}));
    IntMatrix i3 = IntMatrix::identity(3);
    CHECK(i3 * i3 == i3);
}

TEST_CASE("arithmetic") {
    IntMatrix a = from_rows({{1, 2}, {3, 4}});
    IntMatrix b = from_rows({{0, 1}, {1, 0}});
    CHECK(a + b == from_rows({{1, 3}, {4, 4}}));
    CHECK(a - a == IntMatrix(2));
    CHECK(a * b == from_rows({{2, 1}, {4, 3}}));
    CHECK(b * a == from_rows({{3, 4}, {1, 2}}));
    CHECK(a * Integer(3) == from_rows({{3, 6}, {9, 12}}));
    CHECK(Integer(3) * a == a * Integer(3));
}

TEST_CASE("determinant") {
    CHECK(from_rows({{1, 2}, {3, 4}}).determinant() == -2);
    CHECK(IntMatrix::identity(5).determinant() == 1);
    CHECK(IntMatrix::ones(3).determinant() == 0);
    // Needs a row swap to proceed (zero pivot).
    CHECK(from_rows({{0, 1}, {1, 0}}).determinant() == -1);
    // Expansion along the middle row: -1 * det([[2,1],[1,1]]) = -1.
    CHECK(from_rows({{0, 2, 1}, {1, 0, 0}, {3, 1, 1}}).determinant() == -1);
    // Vandermonde 1,2,3: det = (2-1)(3-1)(3-2) = 2
    CHECK(from_rows({{1, 1, 1}, {1, 2, 4}, {1, 3, 9}}).determinant() == 2);
}

TEST_CASE("determinant is multiplicative on random matrices") {
    std::mt19937 rng(4242);
    std::uniform_int_distribution<long> dist(-5, 5);
    for (int trial = 0; trial < 30; ++trial) {
        IntMatrix a(4), b(4);
        for (int i = 0; i < 4; ++i)
            for (int j = 0; j < 4; ++j) {
                a.at(i, j) = dist(rng);
                b.at(i, j) = dist(rng);
            }
        CHECK((a * b).determinant() == a.determinant() * b.determinant());
    }
}

TEST_CASE("polynomial evaluation at a matrix") {
    // p = x^2 on the single-edge adjacency matrix gives the identity.
    IntMatrix edge = from_rows({{0, 1}, {1, 0}});
    CHECK(poly_at_matrix(IntPolynomial{0, 0, 1}, edge) == IntMatrix::identity(2));
    // Constant polynomial: c * I.
    CHECK(poly_at_matrix(IntPolynomial{7}, edge) == IntMatrix::identity(2) * Integer(7));
    CHECK(poly_at_matrix(IntPolynomial::zero(), edge).is_zero());
    // (x^2 - 1) at the edge matrix is zero: its eigenvalues are +-1.
    CHECK(poly_at_matrix(IntPolynomial{-1, 0, 1}, edge).is_zero());
}

TEST_CASE("poly_at_matrix is a ring homomorphism") {
    std::mt19937 rng(99);
    std::uniform_int_distribution<long> dist(-3, 3);
    IntMatrix m(3);
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) m.at(i, j) = dist(rng);
    for (int trial = 0; trial < 20; ++trial) {
        std::vector<Integer> pc(static_cast<size_t>(1 + trial % 8) + 1), qc(static_cast<size_t>(1 + (trial * 3) % 8) + 1);
        for (auto& c : pc) c = dist(rng);
        for (auto& c : qc) c = dist(rng);
        IntPolynomial p{std::vector<Integer>(pc)}, q{std::vector<Integer>(qc)};
        CHECK(poly_at_matrix(p * q, m) == poly_at_matrix(p, m) * poly_at_matrix(q, m));
        CHECK(poly_at_matrix(p + q, m) == poly_at_matrix(p, m) + poly_at_matrix(q, m));
    }
}

TEST_CASE("characteristic polynomial") {
    // Companion-style checks on small known matrices.
    CHECK(charpoly(IntMatrix::identity(3)) == IntPolynomial{-1, 3, -3, 1});  // (x-1)^3
    CHECK(charpoly(IntMatrix(4)) == IntPolynomial{0, 0, 0, 0, 1});           // x^4
    // J_3 has eigenvalues {3, 0, 0}: x^3 - 3x^2.
    CHECK(charpoly(IntMatrix::ones(3)) == IntPolynomial{0, 0, -3, 1});
    IntMatrix edge = from_rows({{0, 1}, {1, 0}});
    CHECK(charpoly(edge) == IntPolynomial{-1, 0, 1});
}

TEST_CASE("Cayley-Hamilton on random symmetric matrices") {
    std::mt19937 rng(31337);
    std::uniform_int_distribution<long> dist(-4, 4);
    for (int trial = 0; trial < 10; ++trial) {
        IntMatrix m(5);
        for (int i = 0; i < 5; ++i)
            for (int j = i; j < 5; ++j) {
                m.at(i, j) = dist(rng);
                m.at(j, i) = m.at(i, j);
            }
        CHECK(poly_at_matrix(charpoly(m), m).is_zero());
    }
}
