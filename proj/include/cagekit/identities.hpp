#pragma once

#include <optional>
#include <string>

#include "cagekit/analysis.hpp"
#include "cagekit/graph.hpp"
#include "cagekit/intmatrix.hpp"
#include "cagekit/intpoly.hpp"

namespace cagekit {

struct MatrixDiscrepancy {
    std::size_t row = 0, col = 0;
    Integer lhs, rhs;
};

struct IdentityReport {
    std::string id;
    bool applicable = false;
    std::string reason;  // set when not applicable
    bool holds = false;
    std::optional<MatrixDiscrepancy> first_discrepancy;
};

// All verifiers share one shape gate: connected host, regular of valency
// k >= 3, even girth 2d, diameter d (excess-free) or d+1.

// sum_{i<=d} A_i + E == J
IdentityReport verify_partition_identity(const Graph& g);

// F_d(A) == k*A_d - A*E
IdentityReport verify_path_identity(const Graph& g);

// k*J == (A + kI) * (H_{d-1}(A) + E)
IdentityReport verify_quotient_identity(const Graph& g);

// (x-k)(x+k) * prod_i (-1)^{l_i} chi(C_{l_i}, -H_{d-1}(x)); for a single
// spanning cycle also the product form (-H_{d-1}+2) * prod_{3<=l|n} f_l(-H_{d-1})^2.
struct AnnihilatorResult {
    IntPolynomial annihilator;
    std::optional<IntPolynomial> cyclic_form;
};
AnnihilatorResult build_annihilator(long k, long d, const ExcessProfile& profile);

// Checks M(A) * (nI - J) == 0 exactly, with M the annihilator above (for
// excess-free hosts M = (x-k)(x+k)*H_{d-1}, covering the tree eigenvalues).
IdentityReport annihilator_check(const Graph& g);

}  // namespace cagekit
