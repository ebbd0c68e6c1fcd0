// Core graph type: simple undirected graphs on at most 64 vertices, one
// adjacency bitmask word per vertex.  Everything downstream (recognizers,
// solvers, recoloring engine) works on word-level set operations.
#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace bk {

inline constexpr int kMaxVertices = 64;

// A set of vertices as a bitmask: bit v set <=> vertex v in the set.
using VertexSet = std::uint64_t;

inline bool vs_contains(VertexSet s, int v) { return (s >> v) & 1u; }
inline VertexSet vs_single(int v) { return std::uint64_t{1} << v; }
inline int vs_size(VertexSet s) { return __builtin_popcountll(s); }
inline int vs_first(VertexSet s) { return __builtin_ctzll(s); }  // pre: s != 0

// Ascending vertex list of a mask.
std::vector<int> vs_to_vector(VertexSet s);

struct Graph {
    int n = 0;
    std::vector<std::uint64_t> adj;  // adj[v] = neighbor mask of v

    Graph() = default;
    explicit Graph(int n_);

    void add_edge(int u, int v);       // rejects loops; idempotent
    void remove_edge(int u, int v);    // idempotent
    bool has_edge(int u, int v) const {
        return u != v && ((adj[u] >> v) & 1u);
    }
    std::uint64_t neighbors(int v) const { return adj[v]; }
    int degree(int v) const { return __builtin_popcountll(adj[v]); }
    int max_degree() const;
    int edge_count() const;
    VertexSet vertex_mask() const {
        return n == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << n) - 1;
    }
    void check_vertex(int v) const;
    // Adjacency rows stay symmetric and loop-free; cheap enough to assert
    // after mutations in debug builds.
    void assert_invariants() const;
};

// Vertex colors are 1..k; 0 means "not colored yet".
inline constexpr int kUncolored = 0;

struct Coloring {
    std::vector<int> color;  // indexed by vertex
    int k = 0;               // palette size

    Coloring() = default;
    Coloring(int n, int k_) : color(n, kUncolored), k(k_) {}
    int used_colors() const;  // distinct colors actually assigned
    bool total() const;       // every vertex colored
};

inline bool operator==(const Graph& a, const Graph& b) {
    return a.n == b.n && a.adj == b.adj;
}
inline bool operator==(const Coloring& a, const Coloring& b) {
    return a.k == b.k && a.color == b.color;
}

// graph6 codec (short form, n <= 62).  Header byte n+63, then
// ceil(n(n-1)/2 / 6) bytes of 63 + 6 data bits; pair (i,j), i<j, sits at bit
// index j(j-1)/2 + i, bits taken most-significant-first inside each byte.
std::string to_graph6(const Graph& g);
Graph from_graph6(const std::string& s);

// G[S] with vertices relabeled 0..|S|-1 in ascending original order.
Graph induced_subgraph(const Graph& g, VertexSet s);

bool is_clique(const Graph& g, VertexSet s);
bool is_stable(const Graph& g, VertexSet s);
// Total properness: every vertex colored 1..c.k and no monochromatic edge.
bool is_proper(const Graph& g, const Coloring& c);
// Partial properness: colored vertices never clash (uncolored ones ignored).
bool is_partial_proper(const Graph& g, const Coloring& c);

bool is_connected(const Graph& g);

}  // namespace bk
