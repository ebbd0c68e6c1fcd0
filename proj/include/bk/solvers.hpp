// Exact solvers: maximum clique (branch and bound with a greedy-coloring
// bound), k-colorability (backtracking with color symmetry breaking), and the
// chromatic number bracketed between the clique bound and a DSATUR upper
// bound.  All solvers take an optional wall-clock budget; running out raises
// timeout_error, which verify_bk converts into a TIMEOUT record.
#pragma once

#include <chrono>
#include <optional>
#include <string>

#include "bk/graph.hpp"

namespace bk {

struct timeout_error : std::runtime_error {
    timeout_error() : std::runtime_error("solver budget exhausted") {}
};

struct Budget {
    std::chrono::steady_clock::time_point deadline{};
    bool limited = false;

    static Budget unlimited() { return {}; }
    static Budget after_ms(long long ms) {
        Budget b;
        b.limited = true;
        b.deadline = std::chrono::steady_clock::now() + std::chrono::milliseconds(ms);
        return b;
    }
    bool expired() const {
        return limited && std::chrono::steady_clock::now() >= deadline;
    }
    void check() const {
        if (expired()) throw timeout_error{};
    }
};

// Default wall-clock budget for one verification record (milliseconds).
inline constexpr long long kDefaultBudgetMs = 10000;

struct CliqueResult {
    int omega = 0;
    VertexSet witness = 0;
};

CliqueResult clique_number(const Graph& g, Budget budget = Budget::unlimited());

// Proper k-coloring, or nullopt when none exists.
std::optional<Coloring> is_k_colorable(const Graph& g, int k,
                                       Budget budget = Budget::unlimited());

// Greedy DSATUR coloring.  With k_limit > 0 the palette is capped and nullopt
// is returned when the greedy run gets stuck; skip keeps those vertices
// uncolored (used to color G - u without relabeling).
std::optional<Coloring> dsatur_greedy(const Graph& g, int k_limit = 0, VertexSet skip = 0);

struct ChromaticResult {
    int chi = 0;
    Coloring coloring;  // proper, exactly chi colors
};

ChromaticResult chromatic_number(const Graph& g, Budget budget = Budget::unlimited());

// chi(G - v) < chi(G) for every vertex.
bool is_vertex_critical(const Graph& g, Budget budget = Budget::unlimited());

enum class SolveStatus { EXACT, TIMEOUT };

// One row of evidence for the bound chi <= max(Delta - 1, omega).
struct VerificationRecord {
    int n = 0, m = 0, delta = 0;
    int omega = -1;           // -1 = unknown (budget ran out first)
    int chi = -1;             // -1 = unknown
    int rhs = -1;             // max(delta - 1, omega)
    bool in_hypothesis = false;  // delta >= 9
    bool holds = false;       // chi <= rhs; meaningful only when status EXACT
    SolveStatus status = SolveStatus::EXACT;
    Coloring witness;         // the chi-coloring when EXACT
    long long millis = 0;
};

inline bool operator==(const VerificationRecord& a, const VerificationRecord& b) {
    return a.n == b.n && a.m == b.m && a.delta == b.delta && a.omega == b.omega &&
           a.chi == b.chi && a.rhs == b.rhs && a.in_hypothesis == b.in_hypothesis &&
           a.holds == b.holds && a.status == b.status && a.witness == b.witness &&
           a.millis == b.millis;
}

VerificationRecord verify_bk(const Graph& g, Budget budget = Budget::unlimited());

}  // namespace bk
