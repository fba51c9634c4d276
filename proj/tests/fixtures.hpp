#pragma once

// Frozen expected values computed with an independent computer-algebra system
// before the library was written.  Coefficient lists are lowest degree first.

#include <map>
#include <vector>

namespace fixtures {

// Characteristic polynomials of the n-cycle adjacency matrix.
inline const std::map<int, std::vector<long>> cycle_charpolys = {
    {3, {-2, -3, 0, 1}},
    {4, {0, 0, -4, 0, 1}},
    {5, {-2, 5, 0, -5, 0, 1}},
    {6, {-4, 0, 9, 0, -6, 0, 1}},
    {7, {-2, -7, 0, 14, 0, -7, 0, 1}},
    {8, {0, 0, -16, 0, 20, 0, -8, 0, 1}},
    {9, {-2, 9, 0, -30, 0, 27, 0, -9, 0, 1}},
    {10, {-4, 0, 25, 0, -50, 0, 35, 0, -10, 0, 1}},
};

// Half-trace companions f_l with x^{phi(l)/2} f_l(x + 1/x) = Phi_l(x).
inline const std::map<int, std::vector<long>> half_traces = {
    {3, {1, 1}},
    {4, {0, 1}},
    {5, {-1, 1, 1}},
    {6, {-1, 1}},
    {7, {-1, -2, 1, 1}},
    {8, {-2, 0, 1}},
    {9, {1, -3, 0, 1}},
    {10, {-1, -1, 1}},
    {12, {-3, 0, 1}},
    {15, {1, 4, -4, -1, 1}},
};

}  // namespace fixtures
