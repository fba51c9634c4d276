#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <deque>
#include <limits>

#include "cagekit/catalog.hpp"
#include "cagekit/graph.hpp"

using namespace cagekit;

namespace {

// Independent girth oracle: shortest cycle through each root by BFS with
// parent edge exclusion.
long girth_oracle(const Graph& g) {
    const std::size_t n = g.vertex_count();
    long best = std::numeric_limits<long>::max();
    for (std::size_t root = 0; root < n; ++root) {
        std::vector<long> dist(n, -1);
        std::vector<std::size_t> par(n, n);
        std::deque<std::size_t> q{root};
        dist[root] = 0;
        while (!q.empty()) {
            std::size_t u = q.front();
            q.pop_front();
            for (std::size_t v : g.neighbors(u)) {
                if (dist[v] < 0) {
                    dist[v] = dist[u] + 1;
                    par[v] = u;
                    q.push_back(v);
                } else if (v != par[u]) {
                    best = std::min(best, dist[u] + dist[v] + 1);
                }
            }
        }
    }
    return best;
}

bool is_regular(const Graph& g, std::size_t k) {
    for (std::size_t v = 0; v < g.vertex_count(); ++v)
        if (g.degree(v) != k) return false;
    return true;
}

}  // namespace

TEST_CASE("graph edge bookkeeping") {
    Graph g(4);
    CHECK(g.vertex_count() == 4);
    CHECK(g.edge_count() == 0);
    g.add_edge(2, 0);
    g.add_edge(0, 2);  // idempotent
    CHECK(g.edge_count() == 1);
    CHECK(g.has_edge(0, 2));
    CHECK(g.has_edge(2, 0));
    CHECK_FALSE(g.has_edge(0, 1));
    g.add_edge(0, 1);
    g.add_edge(3, 0);
    CHECK(g.neighbors(0) == std::vector<std::size_t>{1, 2, 3});
    CHECK(g.degree(0) == 3);
    CHECK(g.degree(1) == 1);
    auto es = g.edges();
    CHECK(es == std::vector<std::pair<std::size_t, std::size_t>>{{0, 1}, {0, 2}, {0, 3}});
    CHECK_THROWS_AS(g.add_edge(1, 1), std::invalid_argument);
    CHECK_THROWS_AS(g.add_edge(0, 4), std::invalid_argument);
    CHECK_THROWS_AS(g.neighbors(4), std::invalid_argument);
    CHECK_FALSE(g.has_edge(0, 9));
    Graph h(4);
    h.add_edge(0, 1);
    h.add_edge(0, 3);
    CHECK_FALSE(g == h);
    h.add_edge(2, 0);
    CHECK(g == h);
}

TEST_CASE("graph6 known encodings") {
    // 4-cycle 0-1-3-2-0: bits (01)(02)(12)(03)(13)(23) = 110011 -> 'r'.
    Graph c4 = parse_graph6("Cr");
    CHECK(c4.vertex_count() == 4);
    CHECK(c4.edges() == std::vector<std::pair<std::size_t, std::size_t>>{
                            {0, 1}, {0, 2}, {1, 3}, {2, 3}});
    CHECK(write_graph6(c4) == "Cr");

    // single edge
    Graph k2 = parse_graph6("A_");
    CHECK(k2.vertex_count() == 2);
    CHECK(k2.has_edge(0, 1));
    CHECK(write_graph6(k2) == "A_");

    // isolated vertex and the empty graph
    CHECK(parse_graph6("@").vertex_count() == 1);
    CHECK(parse_graph6("?").vertex_count() == 0);
    CHECK(write_graph6(Graph(1)) == "@");

    // header and trailing newline are accepted
    Graph hdr = parse_graph6(">>graph6<<Cr\n");
    CHECK(hdr == c4);
}

TEST_CASE("graph6 round trips") {
    for (const char* name : {"petersen", "heawood", "pappus", "mcgee", "robertson",
                             "tutte_coxeter"}) {
        Graph g = builtin_graph(name);
        Graph back = parse_graph6(write_graph6(g));
        CHECK(back == g);
    }
    // 4-byte size form kicks in at n = 63
    Graph big = builtin_graph("cycle(63)");
    std::string enc = write_graph6(big);
    CHECK(enc.size() >= 4);
    CHECK(enc[0] == '~');
    CHECK(parse_graph6(enc) == big);
    // empty graph on 70 vertices: all-zero body, still reversible
    Graph empty70(70);
    CHECK(parse_graph6(write_graph6(empty70)) == empty70);
}

TEST_CASE("graph6 rejects malformed input") {
    CHECK_THROWS_AS(parse_graph6(""), Graph6Error);
    CHECK_THROWS_AS(parse_graph6("C"), Graph6Error);      // missing body
    CHECK_THROWS_AS(parse_graph6("Crr"), Graph6Error);    // extra body
    CHECK_THROWS_AS(parse_graph6("C."), Graph6Error);     // body byte < 63
    CHECK_THROWS_AS(parse_graph6("Ao"), Graph6Error);     // nonzero padding bits
    CHECK_THROWS_AS(parse_graph6("~?"), Graph6Error);     // truncated size field
    CHECK_THROWS_AS(parse_graph6("~~??"), Graph6Error);   // truncated 8-byte size
    CHECK_THROWS_AS(parse_graph6("\x07"), Graph6Error);   // size byte < 63
}

TEST_CASE("catalog graphs have the advertised parameters") {
    struct Expect {
        const char* name;
        std::size_t n, m, k;
        long girth;
    };
    const Expect table[] = {
        {"petersen", 10, 15, 3, 5},      {"heawood", 14, 21, 3, 6},
        {"pappus", 18, 27, 3, 6},        {"mcgee", 24, 36, 3, 7},
        {"robertson", 19, 38, 4, 5},     {"tutte_coxeter", 30, 45, 3, 8},
    };
    for (const auto& e : table) {
        CAPTURE(e.name);
        Graph g = builtin_graph(e.name);
        CHECK(g.vertex_count() == e.n);
        CHECK(g.edge_count() == e.m);
        CHECK(is_regular(g, e.k));
        CHECK(girth_oracle(g) == e.girth);
    }
}

TEST_CASE("parametric families") {
    Graph c5 = builtin_graph("cycle(5)");
    CHECK(c5.vertex_count() == 5);
    CHECK(c5.edge_count() == 5);
    CHECK(is_regular(c5, 2));
    CHECK(girth_oracle(c5) == 5);

    Graph k5 = builtin_graph("complete(5)");
    CHECK(k5.vertex_count() == 5);
    CHECK(k5.edge_count() == 10);
    CHECK(is_regular(k5, 4));
    CHECK(girth_oracle(k5) == 3);

    Graph k33 = builtin_graph("complete_bipartite(3)");
    CHECK(k33.vertex_count() == 6);
    CHECK(k33.edge_count() == 9);
    CHECK(is_regular(k33, 3));
    CHECK(girth_oracle(k33) == 4);
    for (std::size_t i = 0; i < 3; ++i)
        for (std::size_t j = 0; j < 3; ++j) {
            CHECK(k33.has_edge(i, 3 + j));
            if (i != j) {
                CHECK_FALSE(k33.has_edge(i, j));
                CHECK_FALSE(k33.has_edge(3 + i, 3 + j));
            }
        }

    CHECK_THROWS_AS(builtin_graph("cycle(2)"), std::invalid_argument);
    CHECK_THROWS_AS(builtin_graph("complete(0)"), std::invalid_argument);
    CHECK_THROWS_AS(builtin_graph("cycle(x)"), std::invalid_argument);
    CHECK_THROWS_AS(builtin_graph("cycle()"), std::invalid_argument);
    CHECK_THROWS_AS(builtin_graph("nonesuch"), std::invalid_argument);
    CHECK(builtin_graph_names().size() == 9);
}

TEST_CASE("lcf construction") {
    Graph g = lcf_graph(14, {5, -5});  // standard description of a (3,6) graph
    CHECK(g.vertex_count() == 14);
    CHECK(g.edge_count() == 21);
    CHECK(is_regular(g, 3));
    CHECK(girth_oracle(g) == 6);
    CHECK(builtin_graph("mcgee") == lcf_graph(24, {12, 7, -7}));
    CHECK_THROWS_AS(lcf_graph(2, {1}), std::invalid_argument);
    CHECK_THROWS_AS(lcf_graph(10, {}), std::invalid_argument);
}
