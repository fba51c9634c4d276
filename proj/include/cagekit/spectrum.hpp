#pragma once

#include <string>
#include <vector>

#include "cagekit/graph.hpp"

namespace cagekit {

struct SpectralPairing {
    double mu = 0;        // adjacency eigenvalue
    double h_of_mu = 0;   // H_{d-1}(mu)
    double lambda = 0;    // best-matching excess eigenvalue
    double residual = 0;  // |H_{d-1}(mu) + lambda|
};

struct SpectralReport {
    bool applicable = false;
    std::string reason;  // set when not applicable
    double tolerance = 0;
    std::vector<double> adjacency_eigenvalues;  // ascending
    std::vector<double> excess_eigenvalues;     // ascending
    std::vector<SpectralPairing> pairings;      // for mu outside {+k, -k}
    double max_residual = 0;
    bool ok = false;  // max_residual <= tolerance
    // Descriptive multiplicity tallies: how many paired mu give H(mu) close
    // to -2 / +2, against the cycle counts of the excess graph.
    long count_h_near_minus_two = 0;
    long count_h_near_two = 0;
    long c = -1;   // excess cycle count when 2-regular, else -1
    long c2 = -1;  // even-cycle count when 2-regular, else -1
};

// Floating-point check that every adjacency eigenvalue mu outside {+k, -k}
// pairs with an excess eigenvalue lambda so that H_{d-1}(mu) = -lambda, up to
// tol.  Exact verifiers are authoritative; this is a numeric cross-check.
// Throws std::invalid_argument for tol <= 0.
SpectralReport spectrum_crosscheck(const Graph& g, double tol);

}  // namespace cagekit
