// Machine-readable reporting: verification records and recoloring traces as
// JSON (round-tripping exactly) or CSV rows, plus the sweep harness that
// drives sampler -> verify_bk -> bk_color over many seeded graphs.
#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include <json.hpp>

#include "bk/generators.hpp"
#include "bk/kempe.hpp"
#include "bk/solvers.hpp"

namespace bk {

using Json = nlohmann::json;

const char* status_name(SolveStatus s);                  // "exact" | "timeout"
SolveStatus status_from_name(const std::string& name);
const char* bk_path_name(BkPath p);                      // "greedy", "r1", ...
BkPath bk_path_from_name(const std::string& name);

// "true" / "false", or "na" when out of hypothesis or not solved exactly.
std::string holds_cell(const VerificationRecord& r);

Json record_to_json(const VerificationRecord& r);
VerificationRecord record_from_json(const Json& j);

// Fixed column order: n,m,delta,omega,chi,rhs,holds,status,millis.
std::string csv_header();
std::string record_to_csv(const VerificationRecord& r);

Json trace_to_json(const std::vector<RecolorStep>& trace);
std::vector<RecolorStep> trace_from_json(const Json& j);

struct SweepConfig {
    long long count = 100;
    int n_lo = 12, n_hi = 40;          // sampled graph order, inclusive
    int delta_lo = 9, delta_hi = 12;   // sampled max-degree window, inclusive
    std::uint64_t seed = 0;
    long long budget_ms = kDefaultBudgetMs;  // per graph and per solve; <= 0 means unlimited
    int jobs = 1;
    bool filter = true;                // off = control run outside the class
};

struct SweepRow {
    std::string g6;                    // the sampled graph
    bool member = false;
    bool target_met = true;            // sampler reached its degree window
    VerificationRecord record;
    BkPath path = BkPath::GIVE_UP;     // how bk_color finished this graph
};

struct SweepAggregate {
    long long tested = 0;
    long long holds = 0;       // exact, member, in hypothesis, bound holds
    long long violations = 0;  // exact, member, in hypothesis, bound broken
    long long timeouts = 0;
    long long out_of_hypothesis = 0;
    long long non_members = 0;
    std::vector<long long> path_counts;  // indexed by BkPath order
};

struct SweepReport {
    SweepConfig config;
    std::vector<SweepRow> rows;        // input order, independent of jobs
    SweepAggregate aggregate;
};

inline bool operator==(const SweepConfig& a, const SweepConfig& b) {
    return a.count == b.count && a.n_lo == b.n_lo && a.n_hi == b.n_hi &&
           a.delta_lo == b.delta_lo && a.delta_hi == b.delta_hi && a.seed == b.seed &&
           a.budget_ms == b.budget_ms && a.jobs == b.jobs && a.filter == b.filter;
}
inline bool operator==(const SweepRow& a, const SweepRow& b) {
    return a.g6 == b.g6 && a.member == b.member && a.target_met == b.target_met &&
           a.record == b.record && a.path == b.path;
}
inline bool operator==(const SweepAggregate& a, const SweepAggregate& b) {
    return a.tested == b.tested && a.holds == b.holds && a.violations == b.violations &&
           a.timeouts == b.timeouts && a.out_of_hypothesis == b.out_of_hypothesis &&
           a.non_members == b.non_members && a.path_counts == b.path_counts;
}
inline bool operator==(const SweepReport& a, const SweepReport& b) {
    return a.config == b.config && a.rows == b.rows && a.aggregate == b.aggregate;
}

// Runs the whole sweep: per row, a seed derived from (config seed, row index)
// drives the graph order draw and the sampler, so rows are reproducible and
// independent of scheduling; jobs > 1 distributes rows over worker threads.
SweepReport run_sweep(const SweepConfig& cfg);

Json sweep_report_to_json(const SweepReport& rep);
SweepReport sweep_report_from_json(const Json& j);
// Record rows only (fixed columns), one line per graph, plus header.
std::string sweep_report_to_csv(const SweepReport& rep);

}  // namespace bk
