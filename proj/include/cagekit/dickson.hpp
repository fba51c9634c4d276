#pragma once

#include <string>

#include "cagekit/intpoly.hpp"

namespace cagekit {

// Three related polynomial families in the valency parameter k, all obeying
// the recurrence P_{i+1} = x*P_i - (k-1)*P_{i-1} from their seeds:
//   F: F_0 = 1, F_1 = x, F_2 = x^2 - k      (recurrence applies from i >= 2)
//   G: G_0 = 1, G_1 = x + 1                 (recurrence applies from i >= 1)
//   H: H_0 = 1, H_1 = x                     (recurrence applies from i >= 1)
// Negative indices are rejected: the H_{-1}, H_{-2} seeds are never
// materialized.
enum class PolyFamily { F, G, H };

// Throws std::invalid_argument for k < 2 or i < 0.
IntPolynomial family_poly(PolyFamily fam, long k, int i);

inline IntPolynomial poly_F(long k, int i) { return family_poly(PolyFamily::F, k, i); }
inline IntPolynomial poly_G(long k, int i) { return family_poly(PolyFamily::G, k, i); }
inline IntPolynomial poly_H(long k, int i) { return family_poly(PolyFamily::H, k, i); }

struct SingletonIdentityReport {
    bool ok = true;
    // First (identity, index) that failed, when !ok.
    std::string identity;
    int index = -1;
};

// Exact check of the two family identities for all 0 <= i <= i_max:
//   G_i = sum_{j=0}^{i} F_j
//   G_{i+1} + (k-1) G_i = (x+k) H_i
SingletonIdentityReport verify_singleton_identities(long k, int i_max);

}  // namespace cagekit
