// Kempe-chain machinery and the recoloring rules used to finish a partial
// coloring at one stuck vertex.
//
// Setting: u has degree k+1 in G, phi properly colors G - u with palette
// 1..k, and the neighbor colors split "k-1 singletons plus one color used
// twice".  After relabeling the doubled color to k, the neighbors are named
// u_1..u_{k-1} (phi(u_i) = i) and x, y (both colored k).  In the motivating
// case k = 8: a degree-9 vertex missing from an 8-coloring.  The rules try to
// free a color for u by local recolorings; each fires only when its
// precondition holds, and every success is a full proper k-coloring of G.
#pragma once

#include <optional>
#include <string>
#include <vector>

#include "bk/graph.hpp"
#include "bk/solvers.hpp"

namespace bk {

struct ColorProfile {
    int palette = 0;
    std::vector<int> count;           // count[c] = #neighbors colored c; index 0 unused
    std::vector<int> unique_witness;  // the single c-colored neighbor, or -1

    bool is_missing(int c) const { return count[c] == 0; }
    bool is_unique(int c) const { return count[c] == 1; }
    bool is_repeat(int c) const { return count[c] >= 2; }
    std::vector<int> missing() const;
    std::vector<int> unique() const;
    std::vector<int> repeat() const;
};

// Profile of v's neighborhood; every neighbor must be colored.
ColorProfile color_profile(const Graph& g, const Coloring& c, int v);
// Same, but vertex `skip` is left out (profiles inside a config live in G - u).
ColorProfile color_profile_excluding(const Graph& g, const Coloring& c, int v, int skip);

struct CriticalConfig {
    Graph g;
    int u = -1;
    Coloring phi;               // proper on G - u, phi.color[u] == kUncolored
    std::vector<int> labeled;   // labeled[i-1] = u_i, the neighbor colored i
    int x = -1, y = -1;         // the two neighbors sharing color k; x < y
    int relabeled_color = 0;    // original color that was swapped with k (k if none)

    int palette() const { return phi.k; }
    int ui(int i) const { return labeled[static_cast<size_t>(i - 1)]; }  // i in 1..k-1
    void validate() const;      // throws std::logic_error when invariants break
};

// Reads the configuration off (g, c, u): d(u) must equal c.k + 1 and c must
// properly color G - u (c's entry for u is ignored).  Returns nullopt when
// the neighbor colors do not form the "k-1 singletons + one doubled" shape.
// The doubled color is transposed with k across the whole coloring; ties for
// x take the lower vertex index.
std::optional<CriticalConfig> extract_config(const Graph& g, const Coloring& c, int u);

// Connected component of v in the subgraph induced by colors {i, j}.
VertexSet kempe_component(const Graph& g, const Coloring& c, int v, int i, int j);
// Exchange i and j on the component of v; properness-preserving involution.
Coloring kempe_swap(const Graph& g, const Coloring& c, int v, int i, int j);

// True iff u_i and u_j lie in one component of the {i, j}-colored subgraph of
// G - u.  Precondition: u_i and u_j non-adjacent (the question is vacuous
// otherwise) — throws std::invalid_argument.
bool exists_ij_path(const CriticalConfig& cfg, int i, int j);

struct RecolorStep {
    int vertex;
    int from;  // kUncolored when the vertex had no color
    int to;
};

inline bool operator==(const RecolorStep& a, const RecolorStep& b) {
    return a.vertex == b.vertex && a.from == b.from && a.to == b.to;
}

enum class RuleStatus { SUCCESS, NOT_APPLICABLE, FAILED };

struct RuleOutcome {
    RuleStatus status = RuleStatus::NOT_APPLICABLE;
    std::vector<RecolorStep> trace;  // applied in order, starting from phi
    Coloring coloring;               // full proper coloring of G on SUCCESS
};

// Applies trace to a copy of c and returns the result; used to check that
// emitted traces replay to the claimed coloring.
Coloring replay_trace(const Coloring& c, const std::vector<RecolorStep>& trace);

// Rule 1 — some u_i is short a color: its neighborhood in G - u misses a
// palette color r != i; recolor u_i to r and give u color i.
RuleOutcome rule_missing_color(const CriticalConfig& cfg);

// Rule 2 — a broken chain: non-adjacent u_i, u_j in different components of
// the {i, j}-subgraph; swap u_i's component, then give u color i.
RuleOutcome rule_kempe_chain(const CriticalConfig& cfg);

// Rule 3 — case analysis on the j-colored neighbors of u_i for a
// non-adjacent pair (u_i, u_j): a lone j-neighbor that can move away or trade
// places with u_i, or two j-neighbors cleared simultaneously.
RuleOutcome rule_neighbor_shuffle(const CriticalConfig& cfg);

// Rule 4 — moves through a vertex seen uniquely by both ends of a
// non-adjacent pair (a third u_m, or x/y), plus, when u_1..u_{k-1} form a
// clique, transforms that recolor one of x, y and re-enter the non-clique
// case on the rebuilt configuration (bounded depth).
RuleOutcome rule_md(const CriticalConfig& cfg);

enum class RuleId { R1, R2, R3, R4 };

struct RuleChainOutcome {
    RuleOutcome outcome;
    std::optional<RuleId> fired;  // which rule produced SUCCESS, if any
};

// R1 -> R2 -> R3 -> R4, first success wins.
RuleChainOutcome apply_rules(const CriticalConfig& cfg);

// Structural audit of the configuration against the conditions used by the
// clique/non-clique analysis: (i) every u_i non-adjacent to at most two other
// u_k, (ii) every u_i adjacent to x or y, and the sharper requirement that
// x, y together dominate at least five of u_1..u_{k-1}.
struct MdAudit {
    bool holds_i = false;
    bool holds_ii = false;
    int xy_cover = 0;  // |(N(x) cup N(y)) cap {u_1..u_{k-1}}|
    bool holds_strengthened = false;  // xy_cover >= 5
};

MdAudit audit_md(const CriticalConfig& cfg);

// Per-pair chain summary: adjacency, whether a chain joins u_i to u_j, and if
// so a shortest alternating path plus whether closing it through u yields an
// odd chordless cycle.
struct IjPathInfo {
    bool adjacent = false;
    bool exists = false;
    std::vector<int> path;  // u_i .. u_j when exists
    bool odd_hole = false;  // path + u induces an odd hole
};

std::vector<std::vector<IjPathInfo>> audit_ij_paths(const CriticalConfig& cfg);

// How one graph was finished by the constructive pipeline.
enum class BkPath { GREEDY, R1, R2, R3, R4, FALLBACK, OBSTRUCTION, GIVE_UP };

struct BkColorResult {
    enum class Kind { COLORING, OBSTRUCTION, GIVE_UP } kind = Kind::GIVE_UP;
    Coloring coloring;       // proper with max(Delta-1, omega) colors
    VertexSet obstruction = 0;  // clique of size >= Delta when kind == OBSTRUCTION
    std::string diagnostic;
    BkPath path = BkPath::GIVE_UP;
};

// Tries to color G with k = max(Delta - 1, omega) colors: a clique of size
// >= Delta is returned as the obstruction; otherwise G - u is colored
// greedily for a max-degree u, the stuck vertex is finished by rules
// R1..R4 when the configuration shape applies, and an exact solve is the
// fallback.  GIVE_UP only when the exact fallback times out or proves no
// k-coloring exists.
BkColorResult bk_color(const Graph& g, Budget budget = Budget::unlimited());

}  // namespace bk
