#include "cagekit/analysis.hpp"

#include <algorithm>
#include <deque>
#include <limits>
#include <stdexcept>

namespace cagekit {

Integer moore_bound(long k, long g) {
    if (k < 2 || g < 3) throw std::invalid_argument("moore_bound requires k >= 2, g >= 3");
    Integer km1 = k - 1;
    if (g % 2 == 0) {
        // 2 * (1 + (k-1) + ... + (k-1)^(g/2 - 1))
        Integer sum = 0, pow = 1;
        for (long i = 0; i < g / 2; ++i) {
            sum += pow;
            pow *= km1;
        }
        return 2 * sum;
    }
    // 1 + k * (1 + (k-1) + ... + (k-1)^((g-3)/2))
    Integer sum = 0, pow = 1;
    for (long i = 0; i <= (g - 3) / 2; ++i) {
        sum += pow;
        pow *= km1;
    }
    return 1 + k * sum;
}

namespace {

constexpr long kUnreached = -1;

std::vector<long> bfs_distances(const Graph& g, std::size_t root) {
    std::vector<long> dist(g.vertex_count(), kUnreached);
    std::deque<std::size_t> queue{root};
    dist[root] = 0;
    while (!queue.empty()) {
        std::size_t u = queue.front();
        queue.pop_front();
        for (std::size_t v : g.neighbors(u))
            if (dist[v] == kUnreached) {
                dist[v] = dist[u] + 1;
                queue.push_back(v);
            }
    }
    return dist;
}

// Shortest cycle through edges seen from `root`: BFS tracking the parent; a
// non-tree edge (u,v) with v != parent(u) closes a cycle of length
// dist[u] + dist[v] + 1.  The minimum over all roots is the girth.
long shortest_cycle_from(const Graph& g, std::size_t root) {
    std::vector<long> dist(g.vertex_count(), kUnreached);
    std::vector<long> parent(g.vertex_count(), kUnreached);
    std::deque<std::size_t> queue{root};
    dist[root] = 0;
    long best = std::numeric_limits<long>::max();
    while (!queue.empty()) {
        std::size_t u = queue.front();
        queue.pop_front();
        for (std::size_t v : g.neighbors(u)) {
            if (dist[v] == kUnreached) {
                dist[v] = dist[u] + 1;
                parent[v] = static_cast<long>(u);
                queue.push_back(v);
            } else if (static_cast<long>(v) != parent[u]) {
                best = std::min(best, dist[u] + dist[v] + 1);
            }
        }
    }
    return best;
}

}  // namespace

GraphProfile profile(const Graph& g) {
    std::size_t n = g.vertex_count();
    if (n == 0) throw std::invalid_argument("profile: empty graph");
    GraphProfile p;
    p.n = n;

    std::vector<long> d0 = bfs_distances(g, 0);
    if (std::find(d0.begin(), d0.end(), kUnreached) != d0.end())
        throw std::invalid_argument("profile: graph is disconnected");

    bool regular = true;
    for (std::size_t v = 1; v < n; ++v)
        if (g.degree(v) != g.degree(0)) regular = false;
    if (regular) p.k = static_cast<long>(g.degree(0));

    long diameter = 0;
    long girth = std::numeric_limits<long>::max();
    for (std::size_t v = 0; v < n; ++v) {
        std::vector<long> dist = bfs_distances(g, v);
        diameter = std::max(diameter, *std::max_element(dist.begin(), dist.end()));
        girth = std::min(girth, shortest_cycle_from(g, v));
    }
    p.diameter = diameter;
    if (girth != std::numeric_limits<long>::max()) p.girth = girth;

    // 2-coloring via the first BFS layers; verify every edge crosses.
    p.side.assign(n, 0);
    for (std::size_t v = 0; v < n; ++v) p.side[v] = static_cast<int>(d0[v] % 2);
    p.bipartite = true;
    for (auto [u, v] : g.edges())
        if (p.side[u] == p.side[v]) p.bipartite = false;
    if (!p.bipartite) p.side.clear();

    if (p.k && p.girth && *p.k >= 2) {
        p.moore = moore_bound(*p.k, *p.girth);
        p.excess = Integer(static_cast<unsigned long>(n)) - *p.moore;
    }
    if (p.girth && *p.girth % 2 == 0) {
        p.d = *p.girth / 2;
        p.diameter_is_d_plus_1 = (p.diameter == *p.d + 1);
    }
    return p;
}

IntMatrix adjacency_matrix(const Graph& g) {
    int n = static_cast<int>(g.vertex_count());
    IntMatrix a(n);
    for (auto [u, v] : g.edges()) {
        a.at(static_cast<int>(u), static_cast<int>(v)) = 1;
        a.at(static_cast<int>(v), static_cast<int>(u)) = 1;
    }
    return a;
}

DistanceDecomposition distance_decomposition(const Graph& g, long d) {
    if (d < 0) throw std::invalid_argument("distance_decomposition: d must be >= 0");
    std::size_t n = g.vertex_count();
    if (n == 0) throw std::invalid_argument("distance_decomposition: empty graph");
    int ni = static_cast<int>(n);
    DistanceDecomposition out;
    out.d = d;
    out.layers.assign(static_cast<std::size_t>(d) + 1, IntMatrix(ni));
    out.excess = IntMatrix(ni);
    for (std::size_t u = 0; u < n; ++u) {
        std::vector<long> dist = bfs_distances(g, u);
        for (std::size_t v = 0; v < n; ++v) {
            int iu = static_cast<int>(u), iv = static_cast<int>(v);
            if (dist[v] == kUnreached)
                throw std::invalid_argument("distance_decomposition: graph is disconnected");
            if (dist[v] <= d)
                out.layers[static_cast<std::size_t>(dist[v])].at(iu, iv) = 1;
            else if (dist[v] == d + 1)
                out.excess.at(iu, iv) = 1;
            else
                throw std::invalid_argument(
                    "distance_decomposition: a vertex pair lies beyond distance d+1");
        }
    }
    IntMatrix sum(ni);
    for (const auto& layer : out.layers) sum = sum + layer;
    sum = sum + out.excess;
    out.partition_holds = (sum == IntMatrix::ones(ni));
    return out;
}

std::string to_string(ExcessShape s) {
    switch (s) {
        case ExcessShape::Empty: return "EMPTY";
        case ExcessShape::Cyclic: return "CYCLIC";
        case ExcessShape::Bicyclic: return "BICYCLIC";
        case ExcessShape::Polycyclic: return "POLYCYCLIC";
        case ExcessShape::NotTwoRegular: return "NOT_2_REGULAR";
    }
    return "?";
}

ExcessOutcome excess_graph(const Graph& g) {
    ExcessOutcome out;
    GraphProfile p = profile(g);
    if (!p.k || *p.k < 3) {
        out.reason = "host is not regular of valency >= 3";
        return out;
    }
    if (!p.girth) {
        out.reason = "host has no cycle";
        return out;
    }
    long d = *p.girth / 2;  // for odd girth this is (g-1)/2
    if (p.diameter != d && p.diameter != d + 1) {
        out.reason = "diameter is not d or d+1 for d = floor(girth/2)";
        return out;
    }
    out.applicable = true;
    ExcessProfile prof;
    prof.host_bipartite = p.bipartite;

    if (p.diameter == d) {
        // Moore host: no pair at distance d+1, the excess graph is empty.
        prof.classification = ExcessShape::Empty;
        out.profile = std::move(prof);
        return out;
    }

    // Excess adjacency: pairs at distance exactly d+1.
    std::size_t n = g.vertex_count();
    std::vector<std::vector<std::size_t>> eadj(n);
    for (std::size_t u = 0; u < n; ++u) {
        std::vector<long> dist = bfs_distances(g, u);
        for (std::size_t v = 0; v < n; ++v)
            if (dist[v] == d + 1) eadj[u].push_back(v);
    }

    bool two_regular = true;
    for (std::size_t v = 0; v < n; ++v) {
        ++prof.degree_histogram[eadj[v].size()];
        if (eadj[v].size() != 2) two_regular = false;
    }
    if (!two_regular) {
        prof.classification = ExcessShape::NotTwoRegular;
        out.profile = std::move(prof);
        return out;
    }
    prof.degree_histogram.clear();

    // Deterministic cycle walk: start at the least unvisited vertex, always
    // step to the least-index unvisited neighbor.
    std::vector<bool> seen(n, false);
    for (std::size_t start = 0; start < n; ++start) {
        if (seen[start]) continue;
        std::vector<std::size_t> cycle;
        std::size_t cur = start;
        while (true) {
            seen[cur] = true;
            cycle.push_back(cur);
            std::size_t next = n;
            for (std::size_t w : eadj[cur])
                if (!seen[w]) {
                    next = w;
                    break;
                }
            if (next == n) break;
            cur = next;
        }
        if (cycle.size() < 3 || !std::count(eadj[cycle.back()].begin(), eadj[cycle.back()].end(), start))
            throw std::logic_error("excess_graph: walk did not close a cycle");
        prof.cycles.push_back(std::move(cycle));
    }
    for (const auto& cyc : prof.cycles) prof.cycle_lengths.push_back(static_cast<long>(cyc.size()));
    std::sort(prof.cycle_lengths.begin(), prof.cycle_lengths.end(), std::greater<long>());
    prof.c = static_cast<long>(prof.cycles.size());
    for (long l : prof.cycle_lengths)
        if (l % 2 == 0) ++prof.c2;
    if (prof.host_bipartite)
        for (const auto& cyc : prof.cycles) {
            bool same = true;
            for (std::size_t v : cyc)
                if (p.side[v] != p.side[cyc[0]]) same = false;
            prof.within_one_part.push_back(same);
        }
    prof.classification = prof.c == 1   ? ExcessShape::Cyclic
                          : prof.c == 2 ? ExcessShape::Bicyclic
                                        : ExcessShape::Polycyclic;
    out.profile = std::move(prof);
    return out;
}

}  // namespace cagekit
