// Induced-subgraph recognition: generic pattern search, hole finding, and the
// membership test for the hereditary class of (P6, apple, torch)-free graphs.
//
// apple = 5-cycle v1..v5 plus a pendant w adjacent to v1 only (6 vertices,
// 6 edges).  torch = 5-cycle plus w adjacent to v1 and v3, two apart on the
// cycle (6 vertices, 7 edges).  Both are stored 0-indexed: cycle 0-1-2-3-4-0,
// w = 5 attached at 0 (apple) or {0, 2} (torch).
#pragma once

#include <optional>
#include <vector>

#include "bk/graph.hpp"

namespace bk {

// A fixed pattern graph to search for, at most 7 vertices.
struct Pattern {
    Graph g;
    std::string name;
};

namespace pattern {
Pattern path(int k);   // P_k, vertices 0..k-1 in path order, k <= 7
Pattern cycle(int k);  // C_k, vertices in cycle order, 3 <= k <= 7
Pattern apple();
Pattern torch();
Pattern claw();        // K_{1,3}, center 0
Pattern custom(const Graph& g, const std::string& name);  // |V| <= 7
}  // namespace pattern

// An induced embedding as an ordered vertex tuple: witness[i] is the image of
// pattern vertex i.  nullopt = pattern-free.
using Witness = std::optional<std::vector<int>>;

// Backtracking over partial vertex maps, candidates tried in ascending order,
// so the returned witness is the lexicographically first embedding tuple.
Witness find_induced(const Graph& g, const Pattern& p);

enum class HoleParity { ANY, ODD };

// Chordless cycle of length >= min_len (>= 4); nullopt if none.  The witness
// lists the cycle in traversal order.
Witness find_hole(const Graph& g, HoleParity parity, int min_len = 4);

enum class C5Extension { NONE, APPLE, TORCH, OTHER };

// How one outside vertex w attaches to an induced 5-cycle (given in cycle
// order):  no edge, pendant (apple), two attachments at cycle-distance two
// (torch), or anything else.  Throws if the tuple is not an induced C5 or w
// overlaps it.
C5Extension classify_c5_extension(const Graph& g, const std::vector<int>& cycle, int w);

struct RecognitionReport {
    Witness p6;      // pattern order: path
    Witness apple;   // pattern order: cycle 0..4 then the pendant, attached at 0
    Witness torch;   // pattern order: cycle 0..4 then w adjacent to 0 and 2
    bool member() const { return !p6 && !apple && !torch; }
};

// Class membership with per-pattern witnesses.  Uses dedicated search kernels
// (anchored induced-path extension for P6; one pass over induced C5s plus
// classify_c5_extension for apple and torch), so witnesses are valid induced
// embeddings but not necessarily the lexicographically first ones.
RecognitionReport is_class_member(const Graph& g);

// Fast boolean-only variant used by samplers after an edge flip on {u, v}:
// any forbidden pattern created by the flip must contain both u and v, so the
// search is anchored there.
bool creates_forbidden_through(const Graph& g, int u, int v);

// N(v) covered by two cliques <=> complement of G[N(v)] bipartite.
bool is_bisimplicial(const Graph& g, int v);

}  // namespace bk
