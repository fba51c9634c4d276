#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "cagekit/graph.hpp"
#include "cagekit/intmatrix.hpp"
#include "cagekit/numeric.hpp"

namespace cagekit {

// Lower bound on the order of a k-regular graph of girth g.
Integer moore_bound(long k, long g);

struct GraphProfile {
    std::size_t n = 0;
    std::optional<long> k;        // valency when regular
    std::optional<long> girth;    // absent for forests
    long diameter = 0;
    bool bipartite = false;
    std::vector<int> side;        // 0/1 per vertex when bipartite
    std::optional<Integer> moore; // M(k, girth) when regular with a cycle
    std::optional<Integer> excess;
    std::optional<long> d;        // girth/2 for even girth
    bool diameter_is_d_plus_1 = false;
};

// Requires a connected nonempty graph.
GraphProfile profile(const Graph& g);

IntMatrix adjacency_matrix(const Graph& g);

// Distance matrices A_0..A_d plus the remainder layer E of pairs at distance
// d+1.  Requires d+1 >= diameter so that every pair is classified.
struct DistanceDecomposition {
    long d = 0;
    std::vector<IntMatrix> layers;  // A_0 .. A_d
    IntMatrix excess;               // pairs at distance exactly d+1
    bool partition_holds = false;   // sum(layers) + excess == J
};
DistanceDecomposition distance_decomposition(const Graph& g, long d);

enum class ExcessShape { Empty, Cyclic, Bicyclic, Polycyclic, NotTwoRegular };

std::string to_string(ExcessShape s);

struct ExcessProfile {
    std::vector<long> cycle_lengths;  // sorted descending
    long c = 0;                       // number of cycles
    long c2 = 0;                      // number of even-length cycles
    std::vector<std::vector<std::size_t>> cycles;  // vertex walks
    bool host_bipartite = false;
    std::vector<bool> within_one_part;  // per cycle, when host is bipartite
    ExcessShape classification = ExcessShape::Empty;
    std::map<std::size_t, std::size_t> degree_histogram;  // when not 2-regular
};

struct ExcessOutcome {
    bool applicable = false;
    std::string reason;  // set when not applicable
    std::optional<ExcessProfile> profile;
};

// Builds the graph on pairs at distance floor(g/2)+1 and decomposes it into
// cycles.  Applicable when the host is regular of valency >= 3 with a girth
// and its diameter is floor(g/2) (empty excess) or floor(g/2)+1.
ExcessOutcome excess_graph(const Graph& g);

}  // namespace cagekit
