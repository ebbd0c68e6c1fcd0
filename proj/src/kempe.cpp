#include "bk/kempe.hpp"

#include <algorithm>
#include <cassert>

namespace bk {

std::vector<int> ColorProfile::missing() const {
    std::vector<int> out;
    for (int c = 1; c <= palette; ++c)
        if (count[c] == 0) out.push_back(c);
    return out;
}

std::vector<int> ColorProfile::unique() const {
    std::vector<int> out;
    for (int c = 1; c <= palette; ++c)
        if (count[c] == 1) out.push_back(c);
    return out;
}

std::vector<int> ColorProfile::repeat() const {
    std::vector<int> out;
    for (int c = 1; c <= palette; ++c)
        if (count[c] >= 2) out.push_back(c);
    return out;
}

namespace {

ColorProfile profile_impl(const Graph& g, const Coloring& c, int v, int skip, bool strict) {
    g.check_vertex(v);
    if (c.k < 1) throw std::invalid_argument("color_profile: empty palette");
    ColorProfile p;
    p.palette = c.k;
    p.count.assign(static_cast<size_t>(c.k) + 1, 0);
    p.unique_witness.assign(static_cast<size_t>(c.k) + 1, -1);
    for (VertexSet t = g.adj[v]; t;) {
        int w = vs_first(t);
        t &= t - 1;
        if (w == skip) continue;
        int cw = c.color[w];
        if (cw == kUncolored) {
            if (strict) throw std::invalid_argument("color_profile: uncolored neighbor");
            continue;
        }
        if (cw < 1 || cw > c.k)
            throw std::invalid_argument("color_profile: neighbor color outside palette");
        if (++p.count[cw] == 1)
            p.unique_witness[cw] = w;
        else
            p.unique_witness[cw] = -1;
    }
    return p;
}

}  // namespace

ColorProfile color_profile(const Graph& g, const Coloring& c, int v) {
    return profile_impl(g, c, v, -1, true);
}

ColorProfile color_profile_excluding(const Graph& g, const Coloring& c, int v, int skip) {
    return profile_impl(g, c, v, skip, false);
}

void CriticalConfig::validate() const {
    int k = palette();
    auto fail = [](const char* msg) { throw std::logic_error(std::string("config: ") + msg); };
    if (u < 0 || u >= g.n) fail("u out of range");
    if (k < 2) fail("palette too small");
    if (g.degree(u) != k + 1) fail("u must have degree palette+1");
    if (static_cast<int>(phi.color.size()) != g.n) fail("coloring size mismatch");
    if (phi.color[u] != kUncolored) fail("u must be uncolored");
    for (int v = 0; v < g.n; ++v) {
        if (v == u) continue;
        if (phi.color[v] < 1 || phi.color[v] > k) fail("vertex outside palette");
        for (VertexSet t = g.adj[v]; t;) {
            int w = vs_first(t);
            t &= t - 1;
            if (w == u || w <= v) continue;
            if (phi.color[w] == phi.color[v]) fail("phi not proper on G - u");
        }
    }
    if (static_cast<int>(labeled.size()) != k - 1) fail("label count mismatch");
    VertexSet nbrs = 0;
    for (int i = 1; i < k; ++i) {
        int v = ui(i);
        if (!vs_contains(g.adj[u], v)) fail("labeled vertex not a neighbor of u");
        if (phi.color[v] != i) fail("labeled vertex color mismatch");
        nbrs |= vs_single(v);
    }
    if (x < 0 || y < 0 || x >= y) fail("x, y malformed");
    if (!vs_contains(g.adj[u], x) || !vs_contains(g.adj[u], y)) fail("x or y not a neighbor");
    if (phi.color[x] != k || phi.color[y] != k) fail("x, y must carry the last color");
    nbrs |= vs_single(x) | vs_single(y);
    if (nbrs != g.adj[u]) fail("labels do not cover N(u)");
}

std::optional<CriticalConfig> extract_config(const Graph& g, const Coloring& c, int u) {
    g.check_vertex(u);
    int k = c.k;
    if (k < 2) throw std::invalid_argument("extract_config: palette too small");
    if (static_cast<int>(c.color.size()) != g.n)
        throw std::invalid_argument("extract_config: coloring size mismatch");
    if (g.degree(u) != k + 1)
        throw std::invalid_argument("extract_config: u must have degree palette+1");
    for (int v = 0; v < g.n; ++v) {
        if (v == u) continue;
        if (c.color[v] < 1 || c.color[v] > k)
            throw std::invalid_argument("extract_config: vertex not colored within palette");
        for (VertexSet t = g.adj[v]; t;) {
            int w = vs_first(t);
            t &= t - 1;
            if (w == u || w <= v) continue;
            if (c.color[w] == c.color[v])
                throw std::invalid_argument("extract_config: coloring not proper on G - u");
        }
    }
    std::vector<int> cnt(static_cast<size_t>(k) + 1, 0);
    for (VertexSet t = g.adj[u]; t;) {
        int w = vs_first(t);
        t &= t - 1;
        ++cnt[c.color[w]];
    }
    int doubled = 0;
    for (int col = 1; col <= k; ++col) {
        if (cnt[col] == 2) {
            if (doubled) return std::nullopt;  // two doubled colors
            doubled = col;
        } else if (cnt[col] != 1) {
            return std::nullopt;  // missing or tripled color among the neighbors
        }
    }
    if (!doubled) return std::nullopt;

    CriticalConfig cfg;
    cfg.g = g;
    cfg.u = u;
    cfg.phi = c;
    cfg.phi.color[u] = kUncolored;
    cfg.relabeled_color = doubled;
    if (doubled != k) {
        for (int v = 0; v < g.n; ++v) {
            if (cfg.phi.color[v] == doubled)
                cfg.phi.color[v] = k;
            else if (cfg.phi.color[v] == k)
                cfg.phi.color[v] = doubled;
        }
    }
    cfg.labeled.assign(static_cast<size_t>(k) - 1, -1);
    for (VertexSet t = g.adj[u]; t;) {
        int w = vs_first(t);
        t &= t - 1;
        int col = cfg.phi.color[w];
        if (col == k) {
            if (cfg.x < 0)
                cfg.x = w;
            else
                cfg.y = w;
        } else {
            cfg.labeled[static_cast<size_t>(col) - 1] = w;
        }
    }
    if (cfg.x > cfg.y) std::swap(cfg.x, cfg.y);
    cfg.validate();
    return cfg;
}

VertexSet kempe_component(const Graph& g, const Coloring& c, int v, int i, int j) {
    g.check_vertex(v);
    if (i < 1 || i > c.k || j < 1 || j > c.k || i == j)
        throw std::invalid_argument("kempe_component: colors must be distinct palette colors");
    if (c.color[v] != i && c.color[v] != j)
        throw std::invalid_argument("kempe_component: v must carry one of the two colors");
    VertexSet in_colors = 0;
    for (int w = 0; w < g.n; ++w)
        if (c.color[w] == i || c.color[w] == j) in_colors |= vs_single(w);
    VertexSet comp = vs_single(v);
    VertexSet frontier = comp;
    while (frontier) {
        VertexSet next = 0;
        for (VertexSet t = frontier; t;) {
            int w = vs_first(t);
            t &= t - 1;
            next |= g.adj[w] & in_colors;
        }
        frontier = next & ~comp;
        comp |= frontier;
    }
    return comp;
}

Coloring kempe_swap(const Graph& g, const Coloring& c, int v, int i, int j) {
    VertexSet comp = kempe_component(g, c, v, i, j);
    Coloring out = c;
    for (VertexSet t = comp; t;) {
        int w = vs_first(t);
        t &= t - 1;
        out.color[w] = (out.color[w] == i) ? j : i;
    }
    assert(is_partial_proper(g, out));
    return out;
}

bool exists_ij_path(const CriticalConfig& cfg, int i, int j) {
    int k = cfg.palette();
    if (i < 1 || i >= k || j < 1 || j >= k || i == j)
        throw std::invalid_argument("exists_ij_path: indices must name distinct labeled vertices");
    int vi = cfg.ui(i), vj = cfg.ui(j);
    if (cfg.g.has_edge(vi, vj))
        throw std::invalid_argument("exists_ij_path: u_i and u_j are adjacent");
    VertexSet comp = kempe_component(cfg.g, cfg.phi, vi, i, j);
    return vs_contains(comp, vj);
}

Coloring replay_trace(const Coloring& c, const std::vector<RecolorStep>& trace) {
    Coloring out = c;
    for (const RecolorStep& s : trace) {
        if (s.vertex < 0 || s.vertex >= static_cast<int>(out.color.size()))
            throw std::invalid_argument("replay_trace: vertex out of range");
        if (out.color[s.vertex] != s.from)
            throw std::invalid_argument("replay_trace: step does not match current color");
        out.color[s.vertex] = s.to;
    }
    return out;
}

namespace {

// Neighbors of v in G - u carrying color c.
std::vector<int> colored_nbrs(const CriticalConfig& cfg, const Coloring& phi, int v, int c) {
    std::vector<int> out;
    for (VertexSet t = cfg.g.adj[v]; t;) {
        int w = vs_first(t);
        t &= t - 1;
        if (w != cfg.u && phi.color[w] == c) out.push_back(w);
    }
    return out;
}

// The only c-colored neighbor of v in G - u, or -1.
int unique_colored_nbr(const CriticalConfig& cfg, const Coloring& phi, int v, int c) {
    int found = -1;
    for (VertexSet t = cfg.g.adj[v]; t;) {
        int w = vs_first(t);
        t &= t - 1;
        if (w == cfg.u || phi.color[w] != c) continue;
        if (found >= 0) return -1;
        found = w;
    }
    return found;
}

// Smallest palette color other than phi(v) absent from N(v) in G - u; 0 if none.
int smallest_movable_color(const CriticalConfig& cfg, const Coloring& phi, int v) {
    int k = phi.k;
    std::uint64_t seen = 0;
    for (VertexSet t = cfg.g.adj[v]; t;) {
        int w = vs_first(t);
        t &= t - 1;
        if (w != cfg.u && phi.color[w] != kUncolored)
            seen |= std::uint64_t{1} << (phi.color[w] - 1);
    }
    for (int c = 1; c <= k; ++c)
        if (c != phi.color[v] && !((seen >> (c - 1)) & 1)) return c;
    return 0;
}

// Replays steps from cfg.phi, colors checked proper and total; the module
// never reports SUCCESS on anything less.
RuleOutcome finish(const CriticalConfig& cfg, std::vector<RecolorStep> steps) {
    RuleOutcome out;
    out.status = RuleStatus::SUCCESS;
    out.coloring = replay_trace(cfg.phi, steps);
    out.trace = std::move(steps);
    if (!is_proper(cfg.g, out.coloring))
        throw std::logic_error("recoloring rule produced an improper coloring");
    return out;
}

}  // namespace

RuleOutcome rule_missing_color(const CriticalConfig& cfg) {
    cfg.validate();
    int k = cfg.palette();
    for (int i = 1; i < k; ++i) {
        int v = cfg.ui(i);
        int r = smallest_movable_color(cfg, cfg.phi, v);
        if (r == 0) continue;
        return finish(cfg, {{v, i, r}, {cfg.u, kUncolored, i}});
    }
    return {};
}

RuleOutcome rule_kempe_chain(const CriticalConfig& cfg) {
    cfg.validate();
    int k = cfg.palette();
    for (int i = 1; i < k; ++i) {
        for (int j = i + 1; j < k; ++j) {
            int vi = cfg.ui(i), vj = cfg.ui(j);
            if (cfg.g.has_edge(vi, vj)) continue;
            VertexSet comp = kempe_component(cfg.g, cfg.phi, vi, i, j);
            if (vs_contains(comp, vj)) continue;
            std::vector<RecolorStep> steps;
            for (VertexSet t = comp; t;) {
                int w = vs_first(t);
                t &= t - 1;
                int cw = cfg.phi.color[w];
                steps.push_back({w, cw, cw == i ? j : i});
            }
            steps.push_back({cfg.u, kUncolored, i});
            return finish(cfg, std::move(steps));
        }
    }
    return {};
}

RuleOutcome rule_neighbor_shuffle(const CriticalConfig& cfg) {
    cfg.validate();
    int k = cfg.palette();
    for (int i = 1; i < k; ++i) {
        for (int j = 1; j < k; ++j) {
            if (j == i) continue;
            int vi = cfg.ui(i), vj = cfg.ui(j);
            if (cfg.g.has_edge(vi, vj)) continue;
            std::vector<int> jn = colored_nbrs(cfg, cfg.phi, vi, j);
            if (jn.size() == 1) {
                int v = jn[0];
                int r = smallest_movable_color(cfg, cfg.phi, v);
                if (r != 0) {
                    // the lone j-neighbor moves to a color its own
                    // neighborhood is missing
                    return finish(cfg, {{v, j, r}, {vi, i, j}, {cfg.u, kUncolored, i}});
                }
                if (unique_colored_nbr(cfg, cfg.phi, v, i) == vi) {
                    // v and u_i trade colors
                    return finish(cfg, {{v, j, i}, {vi, i, j}, {cfg.u, kUncolored, i}});
                }
            } else if (jn.size() == 2) {
                int v = jn[0], w = jn[1];
                bool v_uniq = unique_colored_nbr(cfg, cfg.phi, v, i) == vi;
                bool w_uniq = unique_colored_nbr(cfg, cfg.phi, w, i) == vi;
                if (v_uniq && w_uniq) {
                    // both j-neighbors fold onto color i as u_i leaves it
                    return finish(cfg, {{v, j, i}, {w, j, i}, {vi, i, j}, {cfg.u, kUncolored, i}});
                }
                int rv = smallest_movable_color(cfg, cfg.phi, v);
                int rw = smallest_movable_color(cfg, cfg.phi, w);
                if (rv != 0 && rw != 0) {
                    // both step aside to colors of their own
                    return finish(cfg,
                                  {{v, j, rv}, {w, j, rw}, {vi, i, j}, {cfg.u, kUncolored, i}});
                }
                if (rv != 0 && w_uniq) {
                    return finish(cfg,
                                  {{v, j, rv}, {w, j, i}, {vi, i, j}, {cfg.u, kUncolored, i}});
                }
                if (rw != 0 && v_uniq) {
                    return finish(cfg,
                                  {{w, j, rw}, {v, j, i}, {vi, i, j}, {cfg.u, kUncolored, i}});
                }
            }
        }
    }
    return {};
}

namespace {

RuleOutcome rule_md_impl(const CriticalConfig& cfg, int depth);

// Applies `steps` to the configuration's coloring, re-reads the configuration
// at u, and resumes the pair analysis there.  The re-read may transpose the
// new doubled color with k; the sub-trace is mapped back through that
// transposition so the composed trace replays against the original phi.
RuleOutcome try_transform(const CriticalConfig& cfg, std::vector<RecolorStep> steps, int depth) {
    Coloring phi2 = replay_trace(cfg.phi, steps);
    auto next = extract_config(cfg.g, phi2, cfg.u);
    if (!next) {
        RuleOutcome out;
        out.status = RuleStatus::FAILED;
        return out;
    }
    RuleOutcome sub = rule_md_impl(*next, depth - 1);
    if (sub.status != RuleStatus::SUCCESS) {
        RuleOutcome out;
        out.status = RuleStatus::FAILED;
        return out;
    }
    int k = cfg.palette();
    int swapped = next->relabeled_color;
    auto tau = [&](int c) {
        if (swapped == k || c == kUncolored) return c;
        if (c == swapped) return k;
        if (c == k) return swapped;
        return c;
    };
    for (const RecolorStep& s : sub.trace)
        steps.push_back({s.vertex, tau(s.from), tau(s.to)});
    RuleOutcome out;
    try {
        out = finish(cfg, std::move(steps));
    } catch (const std::invalid_argument&) {
        throw std::logic_error("transform trace failed to replay");
    }
    return out;
}

RuleOutcome rule_md_impl(const CriticalConfig& cfg, int depth) {
    if (depth <= 0) return {};
    int k = cfg.palette();
    bool clique = true;
    for (int a = 1; a < k && clique; ++a)
        for (int b = a + 1; b < k; ++b)
            if (!cfg.g.has_edge(cfg.ui(a), cfg.ui(b))) {
                clique = false;
                break;
            }

    if (!clique) {
        for (int a = 1; a < k; ++a) {
            for (int b = a + 1; b < k; ++b) {
                int va = cfg.ui(a), vb = cfg.ui(b);
                if (cfg.g.has_edge(va, vb)) continue;
                // a third labeled vertex seen uniquely from both sides
                for (int m = 1; m < k; ++m) {
                    if (m == a || m == b) continue;
                    int vm = cfg.ui(m);
                    if (unique_colored_nbr(cfg, cfg.phi, va, m) != vm) continue;
                    if (unique_colored_nbr(cfg, cfg.phi, vb, m) != vm) continue;
                    if (unique_colored_nbr(cfg, cfg.phi, vm, a) == va) {
                        return finish(cfg, {{va, a, m},
                                            {vb, b, m},
                                            {vm, m, a},
                                            {cfg.u, kUncolored, b}});
                    }
                    if (unique_colored_nbr(cfg, cfg.phi, vm, b) == vb) {
                        return finish(cfg, {{va, a, m},
                                            {vb, b, m},
                                            {vm, m, b},
                                            {cfg.u, kUncolored, a}});
                    }
                }
                // x or y as the commonly seen vertex
                for (int z : {cfg.x, cfg.y}) {
                    if (unique_colored_nbr(cfg, cfg.phi, va, k) != z) continue;
                    if (unique_colored_nbr(cfg, cfg.phi, vb, k) != z) continue;
                    int r = smallest_movable_color(cfg, cfg.phi, z);
                    if (r != 0) {
                        return finish(cfg, {{z, k, r}, {va, a, k}, {cfg.u, kUncolored, a}});
                    }
                    if (unique_colored_nbr(cfg, cfg.phi, z, a) == va) {
                        return finish(cfg, {{va, a, k},
                                            {vb, b, k},
                                            {z, k, a},
                                            {cfg.u, kUncolored, b}});
                    }
                    if (unique_colored_nbr(cfg, cfg.phi, z, b) == vb) {
                        return finish(cfg, {{va, a, k},
                                            {vb, b, k},
                                            {z, k, b},
                                            {cfg.u, kUncolored, a}});
                    }
                }
            }
        }
        return {};
    }

    // u_1..u_{k-1} form a clique: free up one of x, y and re-read the
    // configuration, or finish directly when x/y can absorb a labeled color.
    bool attempted = false;
    for (int z : {cfg.x, cfg.y}) {
        int r = smallest_movable_color(cfg, cfg.phi, z);
        if (r != 0) {
            attempted = true;
            RuleOutcome out = try_transform(cfg, {{z, k, r}}, depth);
            if (out.status == RuleStatus::SUCCESS) return out;
        }
        for (int a = 1; a < k; ++a) {
            int va = cfg.ui(a);
            if (cfg.g.has_edge(va, z)) continue;
            for (int i = 1; i < k; ++i) {
                if (i == a) continue;
                int vi = cfg.ui(i);
                if (unique_colored_nbr(cfg, cfg.phi, z, i) != vi) continue;
                if (unique_colored_nbr(cfg, cfg.phi, va, i) != vi) continue;
                if (unique_colored_nbr(cfg, cfg.phi, vi, k) == z) {
                    return finish(cfg, {{z, k, i},
                                        {va, a, i},
                                        {vi, i, k},
                                        {cfg.u, kUncolored, a}});
                }
                if (unique_colored_nbr(cfg, cfg.phi, vi, a) == va) {
                    attempted = true;
                    RuleOutcome out =
                        try_transform(cfg, {{z, k, i}, {va, a, i}, {vi, i, a}}, depth);
                    if (out.status == RuleStatus::SUCCESS) return out;
                }
            }
        }
    }
    RuleOutcome out;
    out.status = attempted ? RuleStatus::FAILED : RuleStatus::NOT_APPLICABLE;
    return out;
}

}  // namespace

RuleOutcome rule_md(const CriticalConfig& cfg) {
    cfg.validate();
    return rule_md_impl(cfg, 4);
}

RuleChainOutcome apply_rules(const CriticalConfig& cfg) {
    RuleChainOutcome chain;
    struct Entry {
        RuleId id;
        RuleOutcome (*fn)(const CriticalConfig&);
    };
    const Entry entries[] = {{RuleId::R1, rule_missing_color},
                             {RuleId::R2, rule_kempe_chain},
                             {RuleId::R3, rule_neighbor_shuffle},
                             {RuleId::R4, rule_md}};
    bool failed = false;
    for (const Entry& e : entries) {
        RuleOutcome out = e.fn(cfg);
        if (out.status == RuleStatus::SUCCESS) {
            chain.outcome = std::move(out);
            chain.fired = e.id;
            return chain;
        }
        if (out.status == RuleStatus::FAILED) failed = true;
    }
    chain.outcome.status = failed ? RuleStatus::FAILED : RuleStatus::NOT_APPLICABLE;
    return chain;
}

MdAudit audit_md(const CriticalConfig& cfg) {
    cfg.validate();
    int k = cfg.palette();
    MdAudit audit;
    audit.holds_i = true;
    audit.holds_ii = true;
    for (int i = 1; i < k; ++i) {
        int vi = cfg.ui(i);
        int nonadj = 0;
        for (int j = 1; j < k; ++j)
            if (j != i && !cfg.g.has_edge(vi, cfg.ui(j))) ++nonadj;
        if (nonadj > 2) audit.holds_i = false;
        bool covered = cfg.g.has_edge(vi, cfg.x) || cfg.g.has_edge(vi, cfg.y);
        if (!covered) audit.holds_ii = false;
        if (covered) ++audit.xy_cover;
    }
    audit.holds_strengthened = audit.xy_cover >= 5;
    return audit;
}

std::vector<std::vector<IjPathInfo>> audit_ij_paths(const CriticalConfig& cfg) {
    cfg.validate();
    int k = cfg.palette();
    std::vector<std::vector<IjPathInfo>> matrix(
        static_cast<size_t>(k - 1), std::vector<IjPathInfo>(static_cast<size_t>(k - 1)));
    for (int i = 1; i < k; ++i) {
        for (int j = i + 1; j < k; ++j) {
            IjPathInfo info;
            int vi = cfg.ui(i), vj = cfg.ui(j);
            if (cfg.g.has_edge(vi, vj)) {
                info.adjacent = true;
            } else {
                VertexSet comp = kempe_component(cfg.g, cfg.phi, vi, i, j);
                info.exists = vs_contains(comp, vj);
                if (info.exists) {
                    // BFS shortest route inside the two-colored subgraph; a
                    // shortest path there is chordless in G
                    std::vector<int> parent(static_cast<size_t>(cfg.g.n), -1);
                    std::vector<int> queue = {vi};
                    parent[static_cast<size_t>(vi)] = vi;
                    for (size_t head = 0; head < queue.size(); ++head) {
                        int v = queue[head];
                        if (v == vj) break;
                        for (VertexSet t = cfg.g.adj[v] & comp; t;) {
                            int w = vs_first(t);
                            t &= t - 1;
                            if (parent[static_cast<size_t>(w)] < 0) {
                                parent[static_cast<size_t>(w)] = v;
                                queue.push_back(w);
                            }
                        }
                    }
                    for (int v = vj; v != vi; v = parent[static_cast<size_t>(v)])
                        info.path.push_back(v);
                    info.path.push_back(vi);
                    std::reverse(info.path.begin(), info.path.end());
                    // closing through u: odd chordless cycle?
                    std::vector<int> cyc = info.path;
                    cyc.push_back(cfg.u);
                    int len = static_cast<int>(cyc.size());
                    bool ok = len >= 5 && len % 2 == 1;
                    for (int p = 0; p < len && ok; ++p)
                        for (int q = p + 1; q < len && ok; ++q) {
                            bool consecutive = (q - p == 1) || (p == 0 && q == len - 1);
                            if (cfg.g.has_edge(cyc[static_cast<size_t>(p)],
                                               cyc[static_cast<size_t>(q)]) != consecutive)
                                ok = false;
                        }
                    info.odd_hole = ok;
                }
            }
            matrix[static_cast<size_t>(i) - 1][static_cast<size_t>(j) - 1] = info;
            IjPathInfo mirrored = info;
            std::reverse(mirrored.path.begin(), mirrored.path.end());
            matrix[static_cast<size_t>(j) - 1][static_cast<size_t>(i) - 1] = mirrored;
        }
    }
    return matrix;
}

BkColorResult bk_color(const Graph& g, Budget budget) {
    BkColorResult res;
    if (g.n == 0) {
        res.kind = BkColorResult::Kind::COLORING;
        res.coloring = Coloring(0, 0);
        res.path = BkPath::GREEDY;
        return res;
    }
    int delta = g.max_degree();
    try {
        CliqueResult cl = clique_number(g, budget);
        if (cl.omega >= delta) {
            // a clique at least as large as the degree bound: the target
            // palette is omega and the bound is witnessed by the clique
            res.kind = BkColorResult::Kind::OBSTRUCTION;
            res.obstruction = cl.witness;
            res.path = BkPath::OBSTRUCTION;
            res.diagnostic = "clique of size " + std::to_string(cl.omega) +
                             " >= max degree " + std::to_string(delta);
            return res;
        }
        int k = delta - 1;  // omega <= delta - 1 here
        int u = 0;
        for (int v = 0; v < g.n; ++v)
            if (g.degree(v) == delta) {
                u = v;
                break;
            }
        auto phi = dsatur_greedy(g, k, vs_single(u));
        if (phi) {
            std::uint64_t seen = 0;
            for (VertexSet t = g.adj[u]; t;) {
                int w = vs_first(t);
                t &= t - 1;
                seen |= std::uint64_t{1} << (phi->color[w] - 1);
            }
            std::uint64_t open = ~seen & ((std::uint64_t{1} << k) - 1);
            if (open) {
                phi->color[u] = static_cast<int>(__builtin_ctzll(open)) + 1;
                if (!is_proper(g, *phi))
                    throw std::logic_error("greedy completion produced an improper coloring");
                res.kind = BkColorResult::Kind::COLORING;
                res.coloring = *phi;
                res.path = BkPath::GREEDY;
                return res;
            }
            if (g.degree(u) == k + 1) {
                if (auto cfg = extract_config(g, *phi, u)) {
                    RuleChainOutcome chain = apply_rules(*cfg);
                    if (chain.outcome.status == RuleStatus::SUCCESS) {
                        res.kind = BkColorResult::Kind::COLORING;
                        res.coloring = chain.outcome.coloring;
                        switch (*chain.fired) {
                            case RuleId::R1: res.path = BkPath::R1; break;
                            case RuleId::R2: res.path = BkPath::R2; break;
                            case RuleId::R3: res.path = BkPath::R3; break;
                            case RuleId::R4: res.path = BkPath::R4; break;
                        }
                        return res;
                    }
                }
            }
        }
        if (auto exact = is_k_colorable(g, k, budget)) {
            res.kind = BkColorResult::Kind::COLORING;
            res.coloring = *exact;
            res.path = BkPath::FALLBACK;
            return res;
        }
        res.kind = BkColorResult::Kind::GIVE_UP;
        res.path = BkPath::GIVE_UP;
        res.diagnostic = "exact search: no " + std::to_string(k) + "-coloring exists";
        return res;
    } catch (const timeout_error&) {
        res.kind = BkColorResult::Kind::GIVE_UP;
        res.path = BkPath::GIVE_UP;
        res.diagnostic = "budget exhausted";
        return res;
    }
}

}  // namespace bk
