#include "cagekit/catalog.hpp"

#include <algorithm>
#include <array>
#include <cstdlib>
#include <map>
#include <stdexcept>

namespace cagekit {

namespace {

Graph make_cycle(std::size_t n) {
    if (n < 3) throw std::invalid_argument("cycle(n) requires n >= 3");
    Graph g(n);
    for (std::size_t i = 0; i < n; ++i) g.add_edge(i, (i + 1) % n);
    return g;
}

Graph make_complete(std::size_t n) {
    if (n < 1) throw std::invalid_argument("complete(n) requires n >= 1");
    Graph g(n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j) g.add_edge(i, j);
    return g;
}

Graph make_complete_bipartite(std::size_t k) {
    if (k < 1) throw std::invalid_argument("complete_bipartite(k) requires k >= 1");
    Graph g(2 * k);
    for (std::size_t i = 0; i < k; ++i)
        for (std::size_t j = 0; j < k; ++j) g.add_edge(i, k + j);
    return g;
}

// Kneser graph K(5,2): vertices are the 2-subsets of {0..4} in lexicographic
// order, adjacent when disjoint.
Graph make_petersen() {
    std::vector<std::pair<int, int>> subsets;
    for (int a = 0; a < 5; ++a)
        for (int b = a + 1; b < 5; ++b) subsets.emplace_back(a, b);
    Graph g(subsets.size());
    for (std::size_t i = 0; i < subsets.size(); ++i)
        for (std::size_t j = i + 1; j < subsets.size(); ++j) {
            auto [a, b] = subsets[i];
            auto [c, d] = subsets[j];
            if (a != c && a != d && b != c && b != d) g.add_edge(i, j);
        }
    return g;
}

// Point-line incidence graph of the Fano plane: points 0..6, lines
// {i, i+1, i+3} mod 7 as vertices 7..13.
Graph make_heawood() {
    Graph g(14);
    for (std::size_t i = 0; i < 7; ++i) {
        g.add_edge(i, 7 + i);
        g.add_edge((i + 1) % 7, 7 + i);
        g.add_edge((i + 3) % 7, 7 + i);
    }
    return g;
}

// Incidence graph of AG(2,3) with one parallel class (the vertical lines)
// removed: points (x,y) -> 3x+y, lines y = ax+b -> 9 + 3a+b.
Graph make_pappus() {
    Graph g(18);
    for (int a = 0; a < 3; ++a)
        for (int b = 0; b < 3; ++b)
            for (int x = 0; x < 3; ++x) {
                int y = (a * x + b) % 3;
                g.add_edge(static_cast<std::size_t>(3 * x + y),
                           static_cast<std::size_t>(9 + 3 * a + b));
            }
    return g;
}

Graph make_mcgee() { return lcf_graph(24, {12, 7, -7}); }

// The unique (4,5)-cage.  Vertices 0..18; edge list fixed from the standard
// construction (vertex 0 joined to 1..4, Moore-tree levels below, completion
// chords verified against girth and regularity).
Graph make_robertson() {
    static const std::array<std::pair<int, int>, 38> edges = {{
        {0, 1},   {0, 2},   {0, 3},   {0, 4},   {1, 5},   {1, 6},   {1, 7},
        {2, 8},   {2, 9},   {2, 10},  {3, 11},  {3, 12},  {3, 13},  {4, 14},
        {4, 15},  {4, 16},  {5, 8},   {5, 11},  {5, 14},  {6, 9},   {6, 12},
        {6, 15},  {7, 10},  {7, 13},  {7, 16},  {8, 12},  {8, 16},  {9, 13},
        {9, 17},  {10, 15}, {10, 18}, {11, 15}, {11, 17}, {12, 18}, {13, 14},
        {14, 18}, {16, 17}, {17, 18},
    }};
    Graph g(19);
    for (auto [u, v] : edges) g.add_edge(static_cast<std::size_t>(u), static_cast<std::size_t>(v));
    return g;
}

// Levi graph of the GQ(2,2) doily realized as pairs/matchings of a 6-set:
// "points" are the 15 2-subsets of {0..5}, "lines" the 15 perfect matchings
// of K6; a pair is incident with the matchings containing it.
Graph make_tutte_coxeter() {
    std::vector<std::pair<int, int>> pairs;
    for (int a = 0; a < 6; ++a)
        for (int b = a + 1; b < 6; ++b) pairs.emplace_back(a, b);
    auto pair_index = [&](int a, int b) {
        if (a > b) std::swap(a, b);
        for (std::size_t i = 0; i < pairs.size(); ++i)
            if (pairs[i] == std::make_pair(a, b)) return i;
        throw std::logic_error("pair lookup failed");
    };
    // Enumerate perfect matchings of K6 deterministically: 0 pairs with one of
    // the 5 others, then the least remaining vertex pairs with one of 3, rest forced.
    std::vector<std::array<std::size_t, 3>> matchings;
    for (int x = 1; x < 6; ++x) {
        std::vector<int> rest;
        for (int v = 1; v < 6; ++v)
            if (v != x) rest.push_back(v);
        for (std::size_t t = 1; t < rest.size(); ++t) {
            std::array<std::size_t, 3> m = {pair_index(0, x), pair_index(rest[0], rest[t]), 0};
            std::vector<int> last;
            for (std::size_t u = 1; u < rest.size(); ++u)
                if (u != t) last.push_back(rest[u]);
            m[2] = pair_index(last[0], last[1]);
            matchings.push_back(m);
        }
    }
    Graph g(30);
    for (std::size_t mi = 0; mi < matchings.size(); ++mi)
        for (std::size_t pi : matchings[mi]) g.add_edge(pi, 15 + mi);
    return g;
}

bool parse_parametric(const std::string& name, const std::string& stem, long& arg) {
    if (name.size() < stem.size() + 3) return false;
    if (name.compare(0, stem.size(), stem) != 0) return false;
    if (name[stem.size()] != '(' || name.back() != ')') return false;
    std::string inner = name.substr(stem.size() + 1, name.size() - stem.size() - 2);
    if (inner.empty()) return false;
    char* end = nullptr;
    long v = std::strtol(inner.c_str(), &end, 10);
    if (end == nullptr || *end != '\0') return false;
    arg = v;
    return true;
}

}  // namespace

Graph lcf_graph(std::size_t n, const std::vector<long>& jumps) {
    if (n < 3 || jumps.empty()) throw std::invalid_argument("lcf_graph: bad parameters");
    Graph g = make_cycle(n);
    long nn = static_cast<long>(n);
    for (std::size_t i = 0; i < n; ++i) {
        long j = (static_cast<long>(i) + jumps[i % jumps.size()]) % nn;
        if (j < 0) j += nn;
        g.add_edge(i, static_cast<std::size_t>(j));
    }
    return g;
}

Graph builtin_graph(const std::string& name) {
    if (name == "petersen") return make_petersen();
    if (name == "heawood") return make_heawood();
    if (name == "pappus") return make_pappus();
    if (name == "mcgee") return make_mcgee();
    if (name == "robertson") return make_robertson();
    if (name == "tutte_coxeter") return make_tutte_coxeter();
    long arg = 0;
    if (parse_parametric(name, "cycle", arg)) {
        if (arg < 3) throw std::invalid_argument("cycle(n) requires n >= 3");
        return make_cycle(static_cast<std::size_t>(arg));
    }
    if (parse_parametric(name, "complete_bipartite", arg)) {
        if (arg < 1) throw std::invalid_argument("complete_bipartite(k) requires k >= 1");
        return make_complete_bipartite(static_cast<std::size_t>(arg));
    }
    if (parse_parametric(name, "complete", arg)) {
        if (arg < 1) throw std::invalid_argument("complete(n) requires n >= 1");
        return make_complete(static_cast<std::size_t>(arg));
    }
    throw std::invalid_argument("unknown graph name: " + name);
}

std::vector<std::string> builtin_graph_names() {
    return {"petersen",  "heawood",     "pappus",      "mcgee",
            "robertson", "tutte_coxeter", "cycle(n)",  "complete(n)",
            "complete_bipartite(k)"};
}

}  // namespace cagekit
