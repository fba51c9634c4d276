#include "cagekit/graph.hpp"

#include <algorithm>

namespace cagekit {

std::size_t Graph::edge_count() const {
    std::size_t twice = 0;
    for (const auto& nb : adj_) twice += nb.size();
    return twice / 2;
}

void Graph::add_edge(std::size_t u, std::size_t v) {
    if (u >= adj_.size() || v >= adj_.size())
        throw std::invalid_argument("add_edge: vertex out of range");
    if (u == v) throw std::invalid_argument("add_edge: loops are not allowed");
    auto insert_sorted = [](std::vector<std::size_t>& nb, std::size_t w) {
        auto it = std::lower_bound(nb.begin(), nb.end(), w);
        if (it == nb.end() || *it != w) nb.insert(it, w);
    };
    insert_sorted(adj_[u], v);
    insert_sorted(adj_[v], u);
}

bool Graph::has_edge(std::size_t u, std::size_t v) const {
    if (u >= adj_.size() || v >= adj_.size()) return false;
    const auto& nb = adj_[u];
    return std::binary_search(nb.begin(), nb.end(), v);
}

const std::vector<std::size_t>& Graph::neighbors(std::size_t v) const {
    if (v >= adj_.size()) throw std::invalid_argument("neighbors: vertex out of range");
    return adj_[v];
}

std::vector<std::pair<std::size_t, std::size_t>> Graph::edges() const {
    std::vector<std::pair<std::size_t, std::size_t>> out;
    for (std::size_t u = 0; u < adj_.size(); ++u)
        for (std::size_t v : adj_[u])
            if (u < v) out.emplace_back(u, v);
    return out;
}

namespace {

// graph6 packs the upper triangle x(0,1), x(0,2), x(1,2), x(0,3), ... into
// 6-bit groups, each stored as an ASCII char with offset 63.

std::size_t decode_size(const std::string& s, std::size_t& pos) {
    if (pos >= s.size()) throw Graph6Error("graph6: empty input");
    unsigned char c = static_cast<unsigned char>(s[pos]);
    if (c == 126) {
        // 126 126 b b b b b b  (8-byte form, n >= 2^18) or 126 b b b (4-byte)
        if (pos + 1 < s.size() && static_cast<unsigned char>(s[pos + 1]) == 126) {
            if (pos + 8 > s.size()) throw Graph6Error("graph6: truncated size field");
            std::size_t n = 0;
            for (std::size_t i = pos + 2; i < pos + 8; ++i) {
                unsigned char b = static_cast<unsigned char>(s[i]);
                if (b < 63 || b > 126) throw Graph6Error("graph6: bad size byte");
                n = (n << 6) | static_cast<std::size_t>(b - 63);
            }
            pos += 8;
            return n;
        }
        if (pos + 4 > s.size()) throw Graph6Error("graph6: truncated size field");
        std::size_t n = 0;
        for (std::size_t i = pos + 1; i < pos + 4; ++i) {
            unsigned char b = static_cast<unsigned char>(s[i]);
            if (b < 63 || b > 126) throw Graph6Error("graph6: bad size byte");
            n = (n << 6) | static_cast<std::size_t>(b - 63);
        }
        pos += 4;
        return n;
    }
    if (c < 63 || c > 126) throw Graph6Error("graph6: bad size byte");
    ++pos;
    return static_cast<std::size_t>(c - 63);
}

void encode_size(std::string& out, std::size_t n) {
    if (n <= 62) {
        out.push_back(static_cast<char>(n + 63));
    } else if (n <= 258047) {
        out.push_back(126);
        out.push_back(static_cast<char>(((n >> 12) & 63) + 63));
        out.push_back(static_cast<char>(((n >> 6) & 63) + 63));
        out.push_back(static_cast<char>((n & 63) + 63));
    } else {
        out.push_back(126);
        out.push_back(126);
        for (int shift = 30; shift >= 0; shift -= 6)
            out.push_back(static_cast<char>(((n >> shift) & 63) + 63));
    }
}

}  // namespace

Graph parse_graph6(const std::string& text) {
    std::string s = text;
    const std::string header = ">>graph6<<";
    if (s.rfind(header, 0) == 0) s = s.substr(header.size());
    while (!s.empty() && (s.back() == '\n' || s.back() == '\r' || s.back() == ' '))
        s.pop_back();
    std::size_t pos = 0;
    std::size_t n = decode_size(s, pos);
    Graph g(n);
    std::size_t nbits = (n == 0) ? 0 : n * (n - 1) / 2;
    std::size_t nbytes = (nbits + 5) / 6;
    if (s.size() - pos != nbytes)
        throw Graph6Error("graph6: body length mismatch");
    std::size_t bit = 0;
    for (std::size_t v = 1; v < n; ++v) {
        for (std::size_t u = 0; u < v; ++u, ++bit) {
            unsigned char c = static_cast<unsigned char>(s[pos + bit / 6]);
            if (c < 63 || c > 126) throw Graph6Error("graph6: bad body byte");
            unsigned val = static_cast<unsigned>(c - 63);
            if ((val >> (5 - bit % 6)) & 1u) g.add_edge(u, v);
        }
    }
    // Padding bits must be zero.
    for (std::size_t b = nbits; b < nbytes * 6; ++b) {
        unsigned char c = static_cast<unsigned char>(s[pos + b / 6]);
        if ((static_cast<unsigned>(c - 63) >> (5 - b % 6)) & 1u)
            throw Graph6Error("graph6: nonzero padding");
    }
    return g;
}

std::string write_graph6(const Graph& g) {
    std::string out;
    std::size_t n = g.vertex_count();
    encode_size(out, n);
    std::size_t nbits = (n == 0) ? 0 : n * (n - 1) / 2;
    std::vector<unsigned char> body((nbits + 5) / 6, 0);
    std::size_t bit = 0;
    for (std::size_t v = 1; v < n; ++v)
        for (std::size_t u = 0; u < v; ++u, ++bit)
            if (g.has_edge(u, v)) body[bit / 6] |= static_cast<unsigned char>(1u << (5 - bit % 6));
    for (unsigned char b : body) out.push_back(static_cast<char>(b + 63));
    return out;
}

}  // namespace cagekit
