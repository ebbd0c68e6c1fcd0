#include "bk/generators.hpp"

#include <algorithm>
#include <istream>
#include <limits>
#include <numeric>
#include <random>
#include <unordered_set>

#include "bk/recognizers.hpp"

namespace bk {

namespace {

// Upper-triangle bitstring of g under the vertex relabeling perm (image
// vertex i is perm[i]); pair (i, j), i < j, contributes one bit, most
// significant first in the same (j, i) order the graph6 codec uses.
std::uint64_t code_under(const Graph& g, const std::vector<int>& perm) {
    std::uint64_t code = 0;
    int n = g.n;
    for (int j = 1; j < n; ++j)
        for (int i = 0; i < j; ++i)
            code = (code << 1) | (g.has_edge(perm[i], perm[j]) ? 1u : 0u);
    return code;
}

}  // namespace

std::uint64_t canonical_code(const Graph& g) {
    if (g.n > 8) throw std::invalid_argument("canonical_code: capped at 8 vertices");
    if (g.n <= 1) return 0;
    std::vector<int> perm(static_cast<size_t>(g.n));
    std::iota(perm.begin(), perm.end(), 0);
    std::uint64_t best = std::numeric_limits<std::uint64_t>::max();
    do {
        best = std::min(best, code_under(g, perm));
    } while (std::next_permutation(perm.begin(), perm.end()));
    return best;
}

long long automorphism_count(const Graph& g) {
    if (g.n > 8) throw std::invalid_argument("automorphism_count: capped at 8 vertices");
    if (g.n <= 1) return 1;
    std::vector<int> perm(static_cast<size_t>(g.n));
    std::iota(perm.begin(), perm.end(), 0);
    std::uint64_t self = code_under(g, perm);
    long long count = 0;
    std::sort(perm.begin(), perm.end());
    do {
        if (code_under(g, perm) == self) ++count;
    } while (std::next_permutation(perm.begin(), perm.end()));
    return count;
}

EnumerationStream enumerate_all(int n, bool allow_n8) {
    if (n < 1) throw std::invalid_argument("enumerate_all: n must be positive");
    if (n > 8 || (n == 8 && !allow_n8))
        throw std::invalid_argument("enumerate_all: capped at 7 vertices (8 by explicit opt-in)");
    EnumerationStream stream;
    stream.n = 1;
    stream.graphs.push_back(Graph(1));
    for (int m = 2; m <= n; ++m) {
        EnumerationStream next;
        next.n = m;
        std::unordered_set<std::uint64_t> seen;
        for (const Graph& base : stream.graphs) {
            // attach vertex m-1 to every subset of the existing vertices;
            // every class on m vertices arises from deleting one vertex,
            // so extending all (m-1)-representatives reaches all of them
            for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << (m - 1)); ++mask) {
                Graph h(m);
                h.adj = base.adj;
                h.adj.push_back(0);
                for (std::uint64_t t = mask; t;) {
                    int v = vs_first(t);
                    t &= t - 1;
                    h.add_edge(v, m - 1);
                }
                if (seen.insert(canonical_code(h)).second) next.graphs.push_back(h);
            }
        }
        stream = std::move(next);
    }
    return stream;
}

namespace construct {

Graph empty(int n) {
    if (n < 0 || n > kMaxVertices) throw std::invalid_argument("empty: bad order");
    return Graph(n);
}

Graph complete(int n) {
    Graph g = empty(n);
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) g.add_edge(i, j);
    return g;
}

Graph path(int n) {
    Graph g = empty(n);
    for (int i = 0; i + 1 < n; ++i) g.add_edge(i, i + 1);
    return g;
}

Graph cycle(int n) {
    if (n < 3) throw std::invalid_argument("cycle: need at least 3 vertices");
    Graph g = empty(n);
    for (int i = 0; i < n; ++i) g.add_edge(i, (i + 1) % n);
    return g;
}

Graph complete_multipartite(const std::vector<int>& parts) {
    int n = 0;
    for (int p : parts) {
        if (p < 1) throw std::invalid_argument("complete_multipartite: empty part");
        n += p;
    }
    Graph g = empty(n);
    int a_start = 0;
    for (size_t a = 0; a < parts.size(); ++a) {
        int b_start = a_start + parts[a];
        for (size_t b = a + 1; b < parts.size(); ++b) {
            for (int i = 0; i < parts[a]; ++i)
                for (int j = 0; j < parts[b]; ++j) g.add_edge(a_start + i, b_start + j);
            b_start += parts[b];
        }
        a_start += parts[a];
    }
    return g;
}

Graph apple() {
    Graph g = cycle(5);
    Graph h(6);
    h.adj = g.adj;
    h.adj.push_back(0);
    h.add_edge(5, 0);
    return h;
}

Graph torch() {
    Graph h = apple();
    h.add_edge(5, 2);
    return h;
}

Graph k9_plus_pendant() {
    Graph g = complete(9);
    Graph h(10);
    h.adj = g.adj;
    h.adj.push_back(0);
    h.add_edge(9, 0);
    return h;
}

Graph join(const Graph& g, const Graph& h) {
    if (g.n + h.n > kMaxVertices) throw std::invalid_argument("join: too many vertices");
    Graph out(g.n + h.n);
    for (int v = 0; v < g.n; ++v) out.adj[v] = g.adj[v];
    for (int v = 0; v < h.n; ++v) out.adj[g.n + v] = h.adj[v] << g.n;
    for (int a = 0; a < g.n; ++a)
        for (int b = 0; b < h.n; ++b) out.add_edge(a, g.n + b);
    return out;
}

Graph disjoint_union(const Graph& g, const Graph& h) {
    if (g.n + h.n > kMaxVertices) throw std::invalid_argument("disjoint_union: too many vertices");
    Graph out(g.n + h.n);
    for (int v = 0; v < g.n; ++v) out.adj[v] = g.adj[v];
    for (int v = 0; v < h.n; ++v) out.adj[g.n + v] = h.adj[v] << g.n;
    out.assert_invariants();
    return out;
}

}  // namespace construct

namespace {

// Unbiased bounded draw with rejection; the sequence is a pure function of
// the engine state (std::uniform_int_distribution is not portable that way).
std::uint64_t draw(std::mt19937_64& rng, std::uint64_t bound) {
    std::uint64_t limit =
        std::numeric_limits<std::uint64_t>::max() -
        std::numeric_limits<std::uint64_t>::max() % bound;
    for (;;) {
        std::uint64_t v = rng();
        if (v < limit) return v % bound;
    }
}

}  // namespace

SampleResult sample_class_member(const SamplerConfig& cfg) {
    if (cfg.n < 1 || cfg.n > kMaxVertices)
        throw std::invalid_argument("sampler: vertex count out of range");
    if (cfg.delta_lo < 0 || cfg.delta_lo > cfg.delta_hi || cfg.delta_lo > cfg.n - 1)
        throw std::invalid_argument("sampler: infeasible degree window");
    if (cfg.max_proposals < 1 || cfg.stride < 1 || cfg.burn_in < 0)
        throw std::invalid_argument("sampler: bad proposal knobs");

    std::mt19937_64 rng(cfg.seed);
    int hi = std::min(cfg.delta_hi, cfg.n - 1);
    int want = cfg.delta_lo + static_cast<int>(draw(rng, static_cast<std::uint64_t>(
                                                            hi - cfg.delta_lo + 1)));
    Graph g(cfg.n);
    std::uint64_t pairs = static_cast<std::uint64_t>(cfg.n) * (cfg.n - 1) / 2;
    long long used = 0;
    int delta = 0;
    while (pairs > 0 && used < cfg.max_proposals) {
        ++used;
        std::uint64_t idx = draw(rng, pairs);
        int b = 1;
        while (static_cast<std::uint64_t>(b + 1) * b / 2 <= idx) ++b;
        int a = static_cast<int>(idx - static_cast<std::uint64_t>(b) * (b - 1) / 2);
        bool removal = g.has_edge(a, b);
        if (removal) {
            // while still below the window, mostly grow
            if (delta < cfg.delta_lo && draw(rng, 4) != 0) continue;
            g.remove_edge(a, b);
        } else {
            if (g.degree(a) >= hi || g.degree(b) >= hi) continue;
            g.add_edge(a, b);
        }
        if (cfg.filter && creates_forbidden_through(g, a, b)) {
            if (removal)
                g.add_edge(a, b);
            else
                g.remove_edge(a, b);
            continue;
        }
        delta = g.max_degree();
        if (used >= cfg.burn_in && (used - cfg.burn_in) % cfg.stride == 0 && delta >= want)
            break;
    }

    SampleResult res;
    res.g = g;
    res.proposals_used = used;
    bool member = true;
    if (cfg.filter) {
        member = is_class_member(g).member();
        if (!member)
            throw std::logic_error("sampler invariant broke: output left the class");
    }
    int d = g.max_degree();
    res.target_met = member && d >= cfg.delta_lo && d <= cfg.delta_hi;
    return res;
}

std::vector<CorpusEntry> read_corpus_lines(std::istream& in) {
    std::vector<CorpusEntry> out;
    std::string line;
    int no = 0;
    while (std::getline(in, line)) {
        ++no;
        size_t b = line.find_first_not_of(" \t\r\n");
        if (b == std::string::npos) continue;
        size_t e = line.find_last_not_of(" \t\r\n");
        std::string tok = line.substr(b, e - b + 1);
        if (tok[0] == '#') continue;
        out.push_back({no, tok});
    }
    return out;
}

}  // namespace bk
