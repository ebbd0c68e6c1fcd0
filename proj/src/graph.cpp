#include "bk/graph.hpp"

#include <cassert>

namespace bk {

std::vector<int> vs_to_vector(VertexSet s) {
    std::vector<int> out;
    while (s) {
        int v = vs_first(s);
        out.push_back(v);
        s &= s - 1;
    }
    return out;
}

Graph::Graph(int n_) {
    if (n_ < 0 || n_ > kMaxVertices)
        throw std::invalid_argument("graph order must be between 0 and 64");
    n = n_;
    adj.assign(static_cast<size_t>(n), 0);
}

void Graph::check_vertex(int v) const {
    if (v < 0 || v >= n) throw std::out_of_range("vertex index out of range");
}

void Graph::add_edge(int u, int v) {
    check_vertex(u);
    check_vertex(v);
    if (u == v) throw std::invalid_argument("loops are not allowed");
    adj[u] |= vs_single(v);
    adj[v] |= vs_single(u);
    assert_invariants();
}

void Graph::remove_edge(int u, int v) {
    check_vertex(u);
    check_vertex(v);
    adj[u] &= ~vs_single(v);
    adj[v] &= ~vs_single(u);
    assert_invariants();
}

int Graph::max_degree() const {
    int d = 0;
    for (int v = 0; v < n; ++v) d = std::max(d, degree(v));
    return d;
}

int Graph::edge_count() const {
    int total = 0;
    for (int v = 0; v < n; ++v) total += degree(v);
    return total / 2;
}

void Graph::assert_invariants() const {
#ifndef NDEBUG
    for (int v = 0; v < n; ++v) {
        assert((adj[v] & ~vertex_mask()) == 0);
        assert(!vs_contains(adj[v], v));
        for (int w = v + 1; w < n; ++w)
            assert(vs_contains(adj[v], w) == vs_contains(adj[w], v));
    }
#endif
}

int Coloring::used_colors() const {
    std::uint64_t seen = 0;
    for (int c : color)
        if (c != kUncolored) seen |= std::uint64_t{1} << (c - 1);
    return __builtin_popcountll(seen);
}

bool Coloring::total() const {
    for (int c : color)
        if (c == kUncolored) return false;
    return true;
}

std::string to_graph6(const Graph& g) {
    if (g.n > 62)
        throw std::invalid_argument("graph6 short form only covers n <= 62");
    std::string out;
    out.push_back(static_cast<char>(g.n + 63));
    int nbits = g.n * (g.n - 1) / 2;
    int nbytes = (nbits + 5) / 6;
    std::vector<int> bytes(static_cast<size_t>(nbytes), 0);
    int idx = 0;
    for (int j = 1; j < g.n; ++j)
        for (int i = 0; i < j; ++i) {
            if (g.has_edge(i, j)) bytes[idx / 6] |= 1 << (5 - idx % 6);
            ++idx;
        }
    for (int b : bytes) out.push_back(static_cast<char>(b + 63));
    return out;
}

Graph from_graph6(const std::string& s) {
    if (s.empty()) throw std::invalid_argument("graph6: empty input");
    int h = static_cast<unsigned char>(s[0]);
    if (h == 126)
        throw std::invalid_argument("graph6: extended headers (n > 62) not supported");
    if (h < 63 || h > 125)
        throw std::invalid_argument("graph6: malformed header byte");
    int n = h - 63;
    int nbits = n * (n - 1) / 2;
    int nbytes = (nbits + 5) / 6;
    if (static_cast<int>(s.size()) < 1 + nbytes)
        throw std::invalid_argument("graph6: truncated body");
    if (static_cast<int>(s.size()) > 1 + nbytes)
        throw std::invalid_argument("graph6: trailing bytes after body");
    Graph g(n);
    for (int t = 0; t < nbytes; ++t) {
        int b = static_cast<unsigned char>(s[1 + t]);
        if (b < 63 || b > 126)
            throw std::invalid_argument("graph6: body byte out of range");
        int bits = b - 63;
        for (int p = 0; p < 6; ++p) {
            int idx = 6 * t + p;
            bool set = (bits >> (5 - p)) & 1;
            if (idx >= nbits) {
                if (set) throw std::invalid_argument("graph6: nonzero padding bits");
                continue;
            }
            if (set) {
                // invert idx = j(j-1)/2 + i
                int j = 1;
                while ((j + 1) * j / 2 <= idx) ++j;
                int i = idx - j * (j - 1) / 2;
                g.add_edge(i, j);
            }
        }
    }
    return g;
}

Graph induced_subgraph(const Graph& g, VertexSet s) {
    if ((s & ~g.vertex_mask()) != 0)
        throw std::invalid_argument("induced_subgraph: set is not a subset of V(G)");
    std::vector<int> verts = vs_to_vector(s);
    Graph h(static_cast<int>(verts.size()));
    for (size_t a = 0; a < verts.size(); ++a)
        for (size_t b = a + 1; b < verts.size(); ++b)
            if (g.has_edge(verts[a], verts[b]))
                h.add_edge(static_cast<int>(a), static_cast<int>(b));
    return h;
}

bool is_clique(const Graph& g, VertexSet s) {
    if ((s & ~g.vertex_mask()) != 0)
        throw std::invalid_argument("is_clique: set is not a subset of V(G)");
    for (VertexSet t = s; t;) {
        int v = vs_first(t);
        t &= t - 1;
        if ((g.adj[v] & s) != (s & ~vs_single(v))) return false;
    }
    return true;
}

bool is_stable(const Graph& g, VertexSet s) {
    if ((s & ~g.vertex_mask()) != 0)
        throw std::invalid_argument("is_stable: set is not a subset of V(G)");
    for (VertexSet t = s; t;) {
        int v = vs_first(t);
        t &= t - 1;
        if (g.adj[v] & s) return false;
    }
    return true;
}

bool is_proper(const Graph& g, const Coloring& c) {
    if (static_cast<int>(c.color.size()) != g.n) return false;
    for (int v = 0; v < g.n; ++v)
        if (c.color[v] < 1 || c.color[v] > c.k) return false;
    return is_partial_proper(g, c);
}

bool is_partial_proper(const Graph& g, const Coloring& c) {
    if (static_cast<int>(c.color.size()) != g.n) return false;
    for (int v = 0; v < g.n; ++v) {
        if (c.color[v] == kUncolored) continue;
        for (VertexSet t = g.adj[v] & g.vertex_mask(); t;) {
            int w = vs_first(t);
            t &= t - 1;
            if (w > v && c.color[w] == c.color[v]) return false;
        }
    }
    return true;
}

bool is_connected(const Graph& g) {
    if (g.n <= 1) return true;
    VertexSet seen = vs_single(0);
    VertexSet frontier = seen;
    while (frontier) {
        VertexSet next = 0;
        for (VertexSet t = frontier; t;) {
            int v = vs_first(t);
            t &= t - 1;
            next |= g.adj[v];
        }
        frontier = next & ~seen;
        seen |= next;
    }
    return seen == g.vertex_mask();
}

}  // namespace bk
