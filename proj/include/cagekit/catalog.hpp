#pragma once

#include <string>
#include <vector>

#include "cagekit/graph.hpp"

namespace cagekit {

// Named reference graphs plus parametric families.  Accepted names:
//   petersen, heawood, pappus, mcgee, robertson, tutte_coxeter,
//   cycle(n), complete(n), complete_bipartite(k)
// Throws std::invalid_argument on unknown names or bad parameters.
Graph builtin_graph(const std::string& name);

std::vector<std::string> builtin_graph_names();

// Cycle with LCF-style chords: vertices 0..n-1 in a Hamiltonian cycle,
// plus chord (i, i + jumps[i % jumps.size()] mod n) for each i.
Graph lcf_graph(std::size_t n, const std::vector<long>& jumps);

}  // namespace cagekit
