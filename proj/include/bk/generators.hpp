// Graph sources: exhaustive small-n enumeration (one representative per
// isomorphism class), named constructions used as fixtures, and a seeded
// rejection sampler that walks inside the (P6, apple, torch)-free class.
#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include "bk/graph.hpp"

namespace bk {

// Minimum upper-triangle adjacency bitstring over all vertex permutations.
// Two graphs on the same vertex count are isomorphic iff their codes agree.
// Requires n <= 8 (the n! scan is meant for desk-scale work only).
std::uint64_t canonical_code(const Graph& g);

// Order of the automorphism group, by the same n! scan; requires n <= 8.
long long automorphism_count(const Graph& g);

struct EnumerationStream {
    int n = 0;
    std::vector<Graph> graphs;  // deterministic order, pairwise non-isomorphic
};

// Every isomorphism class on n vertices exactly once, grown by orderly
// extension of the (n-1)-vertex stream.  n <= 7 unless allow_n8 opts into the
// (much slower) n = 8 run.
EnumerationStream enumerate_all(int n, bool allow_n8 = false);

namespace construct {

// Vertex order per constructor is part of the contract (tests index into it).
Graph empty(int n);
Graph complete(int n);
Graph path(int n);          // 0-1-...-(n-1)
Graph cycle(int n);         // 0-1-...-(n-1)-0, n >= 3
// Parts occupy consecutive index blocks in the order given; edges join
// distinct blocks.
Graph complete_multipartite(const std::vector<int>& parts);
Graph apple();              // C5 on 0..4 plus 5 ~ 0
Graph torch();              // C5 on 0..4 plus 5 ~ {0, 2}
Graph k9_plus_pendant();    // K9 on 0..8 plus 9 ~ 0
// G keeps its labels, H shifts up by g.n; join adds all cross edges.
Graph join(const Graph& g, const Graph& h);
Graph disjoint_union(const Graph& g, const Graph& h);

}  // namespace construct

struct SamplerConfig {
    int n = 12;
    int delta_lo = 0;               // target max-degree window, inclusive
    int delta_hi = kMaxVertices - 1;
    std::uint64_t seed = 0;         // fully determines the output
    long long max_proposals = 200000;
    long long burn_in = 0;          // proposals before the stop check arms
    long long stride = 1;           // stop check period after burn-in
    bool filter = true;             // keep every step inside the class
};

struct SampleResult {
    Graph g;
    bool target_met = false;        // max degree reached the window (and the
                                    // graph is a member when filtering)
    long long proposals_used = 0;
};

// Seeded edge-flip walk from the empty graph.  A flip is rejected when it
// would push a degree past delta_hi or (with the filter on) create an
// induced P6, apple, or torch; while the max degree is below the window,
// most removals are skipped so the graph grows.  Stops once the max degree
// reaches a seed-chosen target inside the window; runs out of proposals ->
// best effort with target_met = false.  The output is revalidated from
// scratch before it is returned.
SampleResult sample_class_member(const SamplerConfig& cfg);

struct CorpusEntry {
    int line = 0;        // 1-based line number in the source stream
    std::string text;    // graph6 token
};

// Newline-delimited graph6: blank lines and lines starting with '#' are
// skipped; surrounding whitespace (including CR) is trimmed.
std::vector<CorpusEntry> read_corpus_lines(std::istream& in);

}  // namespace bk
