#include "bk/report.hpp"

#include "bk/recognizers.hpp"

#include <atomic>
#include <limits>
#include <random>
#include <sstream>
#include <thread>

namespace bk {

const char* status_name(SolveStatus s) {
    return s == SolveStatus::EXACT ? "exact" : "timeout";
}

SolveStatus status_from_name(const std::string& name) {
    if (name == "exact") return SolveStatus::EXACT;
    if (name == "timeout") return SolveStatus::TIMEOUT;
    throw std::invalid_argument("unknown solve status: " + name);
}

const char* bk_path_name(BkPath p) {
    switch (p) {
        case BkPath::GREEDY: return "greedy";
        case BkPath::R1: return "r1";
        case BkPath::R2: return "r2";
        case BkPath::R3: return "r3";
        case BkPath::R4: return "r4";
        case BkPath::FALLBACK: return "fallback";
        case BkPath::OBSTRUCTION: return "obstruction";
        case BkPath::GIVE_UP: return "give_up";
    }
    throw std::logic_error("unhandled path value");
}

BkPath bk_path_from_name(const std::string& name) {
    for (int p = 0; p <= static_cast<int>(BkPath::GIVE_UP); ++p)
        if (name == bk_path_name(static_cast<BkPath>(p))) return static_cast<BkPath>(p);
    throw std::invalid_argument("unknown path name: " + name);
}

std::string holds_cell(const VerificationRecord& r) {
    if (!r.in_hypothesis || r.status != SolveStatus::EXACT) return "na";
    if (r.chi < 0 || r.rhs < 0) return "na";  // partial record: the comparison was never made
    return r.holds ? "true" : "false";
}

namespace {

Json coloring_to_json(const Coloring& c) {
    return Json{{"palette", c.k}, {"colors", c.color}};
}

Coloring coloring_from_json(const Json& j) {
    Coloring c;
    c.k = j.at("palette").get<int>();
    c.color = j.at("colors").get<std::vector<int>>();
    return c;
}

}  // namespace

Json record_to_json(const VerificationRecord& r) {
    return Json{{"n", r.n},
                {"m", r.m},
                {"delta", r.delta},
                {"omega", r.omega},
                {"chi", r.chi},
                {"rhs", r.rhs},
                {"in_hypothesis", r.in_hypothesis},
                {"holds", r.holds},
                {"status", status_name(r.status)},
                {"millis", r.millis},
                {"witness", coloring_to_json(r.witness)}};
}

VerificationRecord record_from_json(const Json& j) {
    VerificationRecord r;
    r.n = j.at("n").get<int>();
    r.m = j.at("m").get<int>();
    r.delta = j.at("delta").get<int>();
    r.omega = j.at("omega").get<int>();
    r.chi = j.at("chi").get<int>();
    r.rhs = j.at("rhs").get<int>();
    r.in_hypothesis = j.at("in_hypothesis").get<bool>();
    r.holds = j.at("holds").get<bool>();
    r.status = status_from_name(j.at("status").get<std::string>());
    r.millis = j.at("millis").get<long long>();
    r.witness = coloring_from_json(j.at("witness"));
    return r;
}

std::string csv_header() { return "n,m,delta,omega,chi,rhs,holds,status,millis"; }

std::string record_to_csv(const VerificationRecord& r) {
    std::ostringstream out;
    out << r.n << ',' << r.m << ',' << r.delta << ',' << r.omega << ',' << r.chi << ','
        << r.rhs << ',' << holds_cell(r) << ',' << status_name(r.status) << ',' << r.millis;
    return out.str();
}

Json trace_to_json(const std::vector<RecolorStep>& trace) {
    Json arr = Json::array();
    for (const RecolorStep& s : trace)
        arr.push_back(Json{{"vertex", s.vertex}, {"from", s.from}, {"to", s.to}});
    return arr;
}

std::vector<RecolorStep> trace_from_json(const Json& j) {
    std::vector<RecolorStep> out;
    for (const Json& e : j)
        out.push_back({e.at("vertex").get<int>(), e.at("from").get<int>(),
                       e.at("to").get<int>()});
    return out;
}

namespace {

std::uint64_t splitmix64(std::uint64_t z) {
    z += 0x9e3779b97f4a7c15ULL;
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
}

std::uint64_t draw64(std::mt19937_64& rng, std::uint64_t bound) {
    std::uint64_t limit =
        std::numeric_limits<std::uint64_t>::max() -
        std::numeric_limits<std::uint64_t>::max() % bound;
    for (;;) {
        std::uint64_t v = rng();
        if (v < limit) return v % bound;
    }
}

SweepRow sweep_row(const SweepConfig& cfg, long long index) {
    std::uint64_t seed_i =
        splitmix64(cfg.seed ^ ((static_cast<std::uint64_t>(index) + 1) *
                               0x9e3779b97f4a7c15ULL));
    std::mt19937_64 rng(seed_i);
    SamplerConfig sc;
    sc.n = cfg.n_lo + static_cast<int>(
                          draw64(rng, static_cast<std::uint64_t>(cfg.n_hi - cfg.n_lo) + 1));
    sc.delta_lo = cfg.delta_lo;
    sc.delta_hi = cfg.delta_hi;
    sc.seed = rng();
    sc.filter = cfg.filter;
    SampleResult sample = sample_class_member(sc);

    SweepRow row;
    row.g6 = to_graph6(sample.g);
    row.member = cfg.filter ? true : is_class_member(sample.g).member();
    row.target_met = sample.target_met;
    auto budget = [&] {
        return cfg.budget_ms > 0 ? Budget::after_ms(cfg.budget_ms) : Budget::unlimited();
    };
    row.record = verify_bk(sample.g, budget());
    row.path = bk_color(sample.g, budget()).path;
    return row;
}

}  // namespace

SweepReport run_sweep(const SweepConfig& cfg) {
    if (cfg.count < 0) throw std::invalid_argument("sweep: negative count");
    if (cfg.n_lo < 1 || cfg.n_lo > cfg.n_hi || cfg.n_hi > 62)
        throw std::invalid_argument("sweep: order range must sit inside 1..62");
    if (cfg.delta_lo < 0 || cfg.delta_lo > cfg.delta_hi)
        throw std::invalid_argument("sweep: bad degree window");
    if (cfg.delta_lo > cfg.n_lo - 1)
        throw std::invalid_argument("sweep: degree window infeasible at the smallest order");

    SweepReport rep;
    rep.config = cfg;
    rep.rows.resize(static_cast<size_t>(cfg.count));
    std::atomic<long long> next{0};
    auto work = [&] {
        for (;;) {
            long long i = next.fetch_add(1);
            if (i >= cfg.count) break;
            rep.rows[static_cast<size_t>(i)] = sweep_row(cfg, i);
        }
    };
    int jobs = std::max(1, cfg.jobs);
    if (jobs == 1 || cfg.count <= 1) {
        work();
    } else {
        std::vector<std::thread> pool;
        for (int t = 0; t < jobs; ++t) pool.emplace_back(work);
        for (std::thread& t : pool) t.join();
    }

    SweepAggregate& agg = rep.aggregate;
    agg.path_counts.assign(static_cast<size_t>(BkPath::GIVE_UP) + 1, 0);
    for (const SweepRow& row : rep.rows) {
        ++agg.tested;
        ++agg.path_counts[static_cast<size_t>(row.path)];
        if (row.record.status == SolveStatus::TIMEOUT) {
            ++agg.timeouts;
            continue;
        }
        if (!row.member) {
            ++agg.non_members;
            continue;
        }
        if (!row.record.in_hypothesis) {
            ++agg.out_of_hypothesis;
            continue;
        }
        if (row.record.holds)
            ++agg.holds;
        else
            ++agg.violations;
    }
    return rep;
}

namespace {

Json sweep_config_to_json(const SweepConfig& c) {
    return Json{{"count", c.count},     {"n_lo", c.n_lo},
                {"n_hi", c.n_hi},       {"delta_lo", c.delta_lo},
                {"delta_hi", c.delta_hi}, {"seed", c.seed},
                {"budget_ms", c.budget_ms}, {"jobs", c.jobs},
                {"filter", c.filter}};
}

SweepConfig sweep_config_from_json(const Json& j) {
    SweepConfig c;
    c.count = j.at("count").get<long long>();
    c.n_lo = j.at("n_lo").get<int>();
    c.n_hi = j.at("n_hi").get<int>();
    c.delta_lo = j.at("delta_lo").get<int>();
    c.delta_hi = j.at("delta_hi").get<int>();
    c.seed = j.at("seed").get<std::uint64_t>();
    c.budget_ms = j.at("budget_ms").get<long long>();
    c.jobs = j.at("jobs").get<int>();
    c.filter = j.at("filter").get<bool>();
    return c;
}

}  // namespace

Json sweep_report_to_json(const SweepReport& rep) {
    Json rows = Json::array();
    for (const SweepRow& row : rep.rows)
        rows.push_back(Json{{"graph6", row.g6},
                            {"member", row.member},
                            {"target_met", row.target_met},
                            {"record", record_to_json(row.record)},
                            {"path", bk_path_name(row.path)}});
    const SweepAggregate& a = rep.aggregate;
    Json agg{{"tested", a.tested},
             {"holds", a.holds},
             {"violations", a.violations},
             {"timeouts", a.timeouts},
             {"out_of_hypothesis", a.out_of_hypothesis},
             {"non_members", a.non_members},
             {"path_counts", a.path_counts}};
    return Json{{"config", sweep_config_to_json(rep.config)},
                {"rows", rows},
                {"aggregate", agg}};
}

SweepReport sweep_report_from_json(const Json& j) {
    SweepReport rep;
    rep.config = sweep_config_from_json(j.at("config"));
    for (const Json& e : j.at("rows")) {
        SweepRow row;
        row.g6 = e.at("graph6").get<std::string>();
        row.member = e.at("member").get<bool>();
        row.target_met = e.at("target_met").get<bool>();
        row.record = record_from_json(e.at("record"));
        row.path = bk_path_from_name(e.at("path").get<std::string>());
        rep.rows.push_back(std::move(row));
    }
    const Json& a = j.at("aggregate");
    rep.aggregate.tested = a.at("tested").get<long long>();
    rep.aggregate.holds = a.at("holds").get<long long>();
    rep.aggregate.violations = a.at("violations").get<long long>();
    rep.aggregate.timeouts = a.at("timeouts").get<long long>();
    rep.aggregate.out_of_hypothesis = a.at("out_of_hypothesis").get<long long>();
    rep.aggregate.non_members = a.at("non_members").get<long long>();
    rep.aggregate.path_counts = a.at("path_counts").get<std::vector<long long>>();
    return rep;
}

std::string sweep_report_to_csv(const SweepReport& rep) {
    std::ostringstream out;
    out << csv_header() << '\n';
    for (const SweepRow& row : rep.rows) out << record_to_csv(row.record) << '\n';
    return out.str();
}

}  // namespace bk
