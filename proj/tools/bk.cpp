// Command-line front end: pattern recognition, clique/chromatic records,
// bound verification, seeded sweeps, and configuration audits over graph6
// input (argument, file, or stdin).
//
// Exit codes: 0 clean, 1 bound violation found, 2 input error,
// 3 infeasible or timeout-dominated run.

#include <atomic>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>
#include <thread>

#include <CLI11.hpp>

#include "bk/generators.hpp"
#include "bk/kempe.hpp"
#include "bk/recognizers.hpp"
#include "bk/report.hpp"
#include "bk/solvers.hpp"

namespace {

constexpr int kExitClean = 0;
constexpr int kExitViolation = 1;
constexpr int kExitInput = 2;
constexpr int kExitInfeasible = 3;

struct InputError {
    std::string message;
};

// "-" = stdin; an existing file is read as a corpus; anything else is taken
// as one literal graph6 token (line 0).
std::vector<bk::CorpusEntry> load_tokens(const std::string& source) {
    if (source == "-") return bk::read_corpus_lines(std::cin);
    std::ifstream file(source);
    if (file.good()) return bk::read_corpus_lines(file);
    return {{0, source}};
}

std::vector<std::pair<bk::CorpusEntry, bk::Graph>> parse_tokens(const std::string& source) {
    std::vector<std::pair<bk::CorpusEntry, bk::Graph>> out;
    for (const bk::CorpusEntry& entry : load_tokens(source)) {
        try {
            out.emplace_back(entry, bk::from_graph6(entry.text));
        } catch (const std::exception& e) {
            std::ostringstream msg;
            if (entry.line > 0) msg << "line " << entry.line << ": ";
            msg << e.what();
            throw InputError{msg.str()};
        }
    }
    if (out.empty()) throw InputError{"no graphs in input"};
    return out;
}

long long default_budget_ms() {
    if (const char* env = std::getenv("BK_BUDGET_MS")) {
        try {
            return std::stoll(env);
        } catch (const std::exception&) {
            throw InputError{"BK_BUDGET_MS is not an integer"};
        }
    }
    return bk::kDefaultBudgetMs;
}

bk::Budget make_budget(long long ms) {
    return ms > 0 ? bk::Budget::after_ms(ms) : bk::Budget::unlimited();
}

// Runs fn(i) for i in [0, count) over `jobs` threads; results land by index.
template <typename Fn>
void for_each_indexed(long long count, int jobs, Fn fn) {
    if (jobs <= 1 || count <= 1) {
        for (long long i = 0; i < count; ++i) fn(i);
        return;
    }
    std::atomic<long long> next{0};
    auto work = [&] {
        for (;;) {
            long long i = next.fetch_add(1);
            if (i >= count) break;
            fn(i);
        }
    };
    std::vector<std::thread> pool;
    for (int t = 0; t < jobs; ++t) pool.emplace_back(work);
    for (std::thread& t : pool) t.join();
}

// ---- recognize --------------------------------------------------------------

struct PatternCheck {
    std::string name;
    std::function<bk::Witness(const bk::Graph&)> run;
};

PatternCheck make_check(const std::string& name) {
    using bk::Graph;
    using bk::Witness;
    auto induced = [](bk::Pattern p) {
        return [p](const Graph& g) { return bk::find_induced(g, p); };
    };
    if (name.size() == 2 && (name[0] == 'p' || name[0] == 'c') && isdigit(name[1])) {
        int k = name[1] - '0';
        if (name[0] == 'p' && k >= 1 && k <= 7) return {name, induced(bk::pattern::path(k))};
        if (name[0] == 'c' && k >= 3 && k <= 7) return {name, induced(bk::pattern::cycle(k))};
    }
    if (name == "apple") return {name, induced(bk::pattern::apple())};
    if (name == "torch") return {name, induced(bk::pattern::torch())};
    if (name == "claw") return {name, induced(bk::pattern::claw())};
    if (name == "hole")
        return {name, [](const Graph& g) { return bk::find_hole(g, bk::HoleParity::ANY); }};
    if (name == "oddhole")
        return {name, [](const Graph& g) { return bk::find_hole(g, bk::HoleParity::ODD); }};
    throw InputError{"unknown pattern: " + name +
                     " (use p1..p7, c3..c7, apple, torch, claw, hole, oddhole)"};
}

int run_recognize(const std::string& input, const std::string& patterns,
                  const std::string& format) {
    std::vector<PatternCheck> checks;
    std::stringstream ss(patterns);
    std::string name;
    while (std::getline(ss, name, ','))
        if (!name.empty()) checks.push_back(make_check(name));
    if (checks.empty()) throw InputError{"no patterns requested"};

    auto graphs = parse_tokens(input);
    bk::Json out = bk::Json::array();
    for (const auto& [entry, g] : graphs) {
        if (format == "json") {
            bk::Json row{{"graph6", entry.text}};
            bk::Json verdicts = bk::Json::object();
            for (const PatternCheck& c : checks) {
                bk::Witness w = c.run(g);
                verdicts[c.name] = w ? bk::Json(*w) : bk::Json(nullptr);
            }
            row["patterns"] = verdicts;
            out.push_back(row);
        } else {
            for (const PatternCheck& c : checks) {
                bk::Witness w = c.run(g);
                std::cout << entry.text << '\t' << c.name << '\t';
                if (!w) {
                    std::cout << "free";
                } else {
                    for (size_t i = 0; i < w->size(); ++i)
                        std::cout << (i ? " " : "") << (*w)[i];
                }
                std::cout << '\n';
            }
        }
    }
    if (format == "json") std::cout << out.dump(2) << '\n';
    return kExitClean;
}

// ---- omega / chi / verify ---------------------------------------------------

enum class RecordMode { OMEGA, CHI, VERIFY };

bk::VerificationRecord partial_record(const bk::Graph& g, RecordMode mode, long long budget_ms) {
    using namespace bk;
    if (mode == RecordMode::VERIFY) return verify_bk(g, make_budget(budget_ms));
    VerificationRecord r;
    r.n = g.n;
    r.m = g.edge_count();
    r.delta = g.max_degree();
    r.in_hypothesis = r.delta >= 9;
    auto started = std::chrono::steady_clock::now();
    try {
        if (mode == RecordMode::OMEGA) {
            r.omega = clique_number(g, make_budget(budget_ms)).omega;
            r.rhs = std::max(r.delta - 1, r.omega);
        } else {
            ChromaticResult cr = chromatic_number(g, make_budget(budget_ms));
            r.chi = cr.chi;
            r.witness = cr.coloring;
        }
        r.status = SolveStatus::EXACT;
    } catch (const timeout_error&) {
        r.status = SolveStatus::TIMEOUT;
    }
    r.millis = std::chrono::duration_cast<std::chrono::milliseconds>(
                   std::chrono::steady_clock::now() - started)
                   .count();
    return r;
}

int run_records(const std::string& input, RecordMode mode, long long budget_ms,
                const std::string& format, int jobs) {
    auto graphs = parse_tokens(input);
    std::vector<bk::VerificationRecord> records(graphs.size());
    for_each_indexed(static_cast<long long>(graphs.size()), jobs, [&](long long i) {
        records[static_cast<size_t>(i)] =
            partial_record(graphs[static_cast<size_t>(i)].second, mode, budget_ms);
    });
    if (format == "json") {
        bk::Json arr = bk::Json::array();
        for (const auto& r : records) arr.push_back(bk::record_to_json(r));
        std::cout << arr.dump(2) << '\n';
    } else {
        std::cout << bk::csv_header() << '\n';
        for (const auto& r : records) std::cout << bk::record_to_csv(r) << '\n';
    }
    bool violation = false;
    for (const auto& r : records)
        if (mode == RecordMode::VERIFY && r.status == bk::SolveStatus::EXACT &&
            r.in_hypothesis && !r.holds)
            violation = true;
    return violation ? kExitViolation : kExitClean;
}

// ---- sweep ------------------------------------------------------------------

std::pair<int, int> parse_range(const std::string& text) {
    size_t dots = text.find("..");
    try {
        if (dots == std::string::npos) {
            int v = std::stoi(text);
            return {v, v};
        }
        return {std::stoi(text.substr(0, dots)), std::stoi(text.substr(dots + 2))};
    } catch (const std::exception&) {
        throw InputError{"bad range (want A..B): " + text};
    }
}

int run_sweep_cmd(const bk::SweepConfig& cfg, const std::string& format) {
    bk::SweepReport rep;
    try {
        rep = bk::run_sweep(cfg);
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: infeasible sweep: " << e.what() << '\n';
        return kExitInfeasible;
    }
    if (format == "csv")
        std::cout << bk::sweep_report_to_csv(rep);
    else
        std::cout << bk::sweep_report_to_json(rep).dump(2) << '\n';
    if (rep.aggregate.violations > 0) return kExitViolation;
    if (rep.aggregate.tested > 0 &&
        rep.aggregate.timeouts * 10 > rep.aggregate.tested)
        return kExitInfeasible;
    return kExitClean;
}

// ---- audit ------------------------------------------------------------------

std::vector<int> parse_color_list(const std::string& text, int n) {
    std::vector<int> out;
    std::stringstream ss(text);
    std::string tok;
    while (std::getline(ss, tok, ',')) {
        try {
            out.push_back(std::stoi(tok));
        } catch (const std::exception&) {
            throw InputError{"bad color entry: " + tok};
        }
    }
    if (static_cast<int>(out.size()) != n)
        throw InputError{"coloring has " + std::to_string(out.size()) + " entries, graph has " +
                         std::to_string(n) + " vertices"};
    return out;
}

void print_profile_line(std::ostream& os, const std::string& label,
                        const bk::ColorProfile& prof) {
    auto list = [](const std::vector<int>& v) {
        std::string s;
        for (size_t i = 0; i < v.size(); ++i) s += (i ? "," : "") + std::to_string(v[i]);
        return s.empty() ? "-" : s;
    };
    os << label << " missing={" << list(prof.missing()) << "} unique={" << list(prof.unique())
       << "} repeat={" << list(prof.repeat()) << "}\n";
}

int run_audit(const std::string& input, int u, const std::string& phi_text, bool compute,
              long long budget_ms, const std::string& format) {
    auto graphs = parse_tokens(input);
    if (graphs.size() != 1) throw InputError{"audit expects exactly one graph"};
    const bk::Graph& g = graphs[0].second;
    if (u < 0 || u >= g.n) throw InputError{"vertex index out of range"};
    int k = g.degree(u) - 1;
    if (k < 2) throw InputError{"audited vertex needs degree at least 3"};

    bk::Coloring c(g.n, k);
    if (!phi_text.empty()) {
        c.color = parse_color_list(phi_text, g.n);
        c.color[static_cast<size_t>(u)] = bk::kUncolored;
    } else if (compute) {
        bk::Graph rest = bk::induced_subgraph(g, g.vertex_mask() & ~bk::vs_single(u));
        auto sub = bk::is_k_colorable(rest, k, make_budget(budget_ms));
        if (!sub) throw InputError{"G - u admits no " + std::to_string(k) + "-coloring"};
        int pos = 0;
        for (int v = 0; v < g.n; ++v)
            if (v != u) c.color[static_cast<size_t>(v)] = sub->color[static_cast<size_t>(pos++)];
    } else {
        throw InputError{"audit needs --phi COLORS or --color"};
    }

    std::optional<bk::CriticalConfig> cfg;
    try {
        cfg = bk::extract_config(g, c, u);
    } catch (const std::invalid_argument& e) {
        throw InputError{std::string("no valid configuration: ") + e.what()};
    }
    if (!cfg)
        throw InputError{
            "no valid configuration: neighbor colors are not k-1 singletons plus one pair"};

    auto chain = bk::apply_rules(*cfg);
    auto paths = bk::audit_ij_paths(*cfg);
    bk::MdAudit md = bk::audit_md(*cfg);

    if (format == "json") {
        bk::Json out;
        out["u"] = cfg->u;
        out["palette"] = cfg->palette();
        out["labeled"] = cfg->labeled;
        out["x"] = cfg->x;
        out["y"] = cfg->y;
        out["relabeled_color"] = cfg->relabeled_color;
        bk::Json profs = bk::Json::array();
        for (int i = 1; i < cfg->palette(); ++i) {
            bk::ColorProfile p =
                bk::color_profile_excluding(cfg->g, cfg->phi, cfg->ui(i), cfg->u);
            profs.push_back(bk::Json{{"vertex", cfg->ui(i)},
                                     {"missing", p.missing()},
                                     {"unique", p.unique()},
                                     {"repeat", p.repeat()}});
        }
        out["profiles"] = profs;
        bk::Json mat = bk::Json::array();
        for (int i = 1; i < cfg->palette(); ++i)
            for (int j = i + 1; j < cfg->palette(); ++j) {
                const bk::IjPathInfo& info = paths[i - 1][j - 1];
                mat.push_back(bk::Json{{"i", i},
                                       {"j", j},
                                       {"adjacent", info.adjacent},
                                       {"exists", info.exists},
                                       {"path", info.path},
                                       {"odd_hole", info.odd_hole}});
            }
        out["chains"] = mat;
        out["md"] = bk::Json{{"holds_i", md.holds_i},
                             {"holds_ii", md.holds_ii},
                             {"xy_cover", md.xy_cover},
                             {"strengthened", md.holds_strengthened}};
        auto rule_name = [](bk::RuleId id) {
            switch (id) {
                case bk::RuleId::R1: return "r1";
                case bk::RuleId::R2: return "r2";
                case bk::RuleId::R3: return "r3";
                case bk::RuleId::R4: return "r4";
            }
            return "?";
        };
        out["rule"] = chain.fired ? bk::Json(rule_name(*chain.fired)) : bk::Json(nullptr);
        out["rule_status"] = chain.outcome.status == bk::RuleStatus::SUCCESS
                                 ? "success"
                                 : (chain.outcome.status == bk::RuleStatus::FAILED
                                        ? "failed"
                                        : "not_applicable");
        out["trace"] = bk::trace_to_json(chain.outcome.trace);
        std::cout << out.dump(2) << '\n';
    } else {
        std::cout << "u=" << cfg->u << " palette=" << cfg->palette() << " x=" << cfg->x
                  << " y=" << cfg->y << " relabeled_color=" << cfg->relabeled_color << '\n';
        for (int i = 1; i < cfg->palette(); ++i) {
            bk::ColorProfile p =
                bk::color_profile_excluding(cfg->g, cfg->phi, cfg->ui(i), cfg->u);
            print_profile_line(std::cout, "u_" + std::to_string(i) + "=" +
                                              std::to_string(cfg->ui(i)),
                               p);
        }
        for (int i = 1; i < cfg->palette(); ++i)
            for (int j = i + 1; j < cfg->palette(); ++j) {
                const bk::IjPathInfo& info = paths[i - 1][j - 1];
                std::cout << "chain(" << i << "," << j << "): ";
                if (info.adjacent)
                    std::cout << "adjacent";
                else if (!info.exists)
                    std::cout << "broken";
                else
                    std::cout << "joined len=" << info.path.size()
                              << (info.odd_hole ? " odd-hole" : "");
                std::cout << '\n';
            }
        std::cout << "md: at-most-two-nonneighbors=" << (md.holds_i ? "yes" : "no")
                  << " xy-covers-all=" << (md.holds_ii ? "yes" : "no")
                  << " xy_cover=" << md.xy_cover
                  << " strengthened=" << (md.holds_strengthened ? "yes" : "no") << '\n';
        if (chain.fired) {
            std::cout << "rule: r" << static_cast<int>(*chain.fired) + 1 << " trace=";
            std::cout << bk::trace_to_json(chain.outcome.trace).dump() << '\n';
        } else {
            std::cout << "rule: "
                      << (chain.outcome.status == bk::RuleStatus::FAILED ? "failed"
                                                                         : "not applicable")
                      << '\n';
        }
    }
    return kExitClean;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Borodin-Kostochka bound toolkit: recognize the (P6, apple, torch)-free "
                 "class, compute clique/chromatic records, verify the bound, sweep sampled "
                 "graphs, and audit recoloring configurations"};
    app.require_subcommand(1);

    std::string input, format = "csv", patterns = "p6,apple,torch";
    long long budget_ms = -1;
    int jobs = 1;

    auto add_input = [&](CLI::App* sub) {
        sub->add_option("input", input, "graph6 string, file of graph6 lines, or - for stdin")
            ->required();
    };

    CLI::App* rec = app.add_subcommand("recognize", "pattern verdicts with witnesses");
    add_input(rec);
    rec->add_option("--patterns", patterns, "comma list: p1..p7, c3..c7, apple, torch, claw, "
                                            "hole, oddhole (default p6,apple,torch)");
    std::string rec_format = "text";
    rec->add_option("--format", rec_format, "text|json")
        ->check(CLI::IsMember({"text", "json"}));

    CLI::App* omega = app.add_subcommand("omega", "clique number records");
    CLI::App* chi = app.add_subcommand("chi", "chromatic number records");
    CLI::App* verify = app.add_subcommand("verify", "check chi <= max(Delta-1, omega)");
    for (CLI::App* sub : {omega, chi, verify}) {
        add_input(sub);
        sub->add_option("--budget-ms", budget_ms, "per-graph budget (default BK_BUDGET_MS or 10000)");
        sub->add_option("--format", format, "csv|json")->check(CLI::IsMember({"csv", "json"}));
        sub->add_option("--jobs", jobs, "worker threads")->check(CLI::PositiveNumber);
    }

    CLI::App* sweep = app.add_subcommand("sweep", "sample members and verify the bound");
    long long count = 100;
    std::string n_range = "12..40", delta_range = "9..12";
    std::uint64_t seed = 0;
    bool no_filter = false;
    std::string sweep_format = "json";
    sweep->add_option("--count", count, "graphs to sample");
    sweep->add_option("--n", n_range, "order range A..B (default 12..40)");
    sweep->add_option("--delta", delta_range, "max-degree window A..B (default 9..12)");
    sweep->add_option("--seed", seed, "sampler seed")->required();
    sweep->add_option("--budget-ms", budget_ms, "per-graph budget (default BK_BUDGET_MS or 10000)");
    sweep->add_option("--jobs", jobs, "worker threads")->check(CLI::PositiveNumber);
    sweep->add_flag("--no-filter", no_filter, "control run: skip the class membership filter");
    sweep->add_option("--format", sweep_format, "json|csv")
        ->check(CLI::IsMember({"json", "csv"}));

    CLI::App* audit = app.add_subcommand("audit", "profile one stuck-vertex configuration");
    int audit_u = -1;
    std::string phi_text;
    bool audit_color = false;
    std::string audit_format = "text";
    add_input(audit);
    audit->add_option("--u", audit_u, "the uncolored vertex")->required();
    audit->add_option("--phi", phi_text, "comma list of colors (entry for u ignored)");
    audit->add_flag("--color", audit_color, "compute a (deg(u)-1)-coloring of G - u");
    audit->add_option("--budget-ms", budget_ms, "coloring budget (default BK_BUDGET_MS or 10000)");
    audit->add_option("--format", audit_format, "text|json")
        ->check(CLI::IsMember({"text", "json"}));

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kExitInput;
    }

    try {
        if (budget_ms < 0) budget_ms = default_budget_ms();
        if (app.got_subcommand(rec)) return run_recognize(input, patterns, rec_format);
        if (app.got_subcommand(omega))
            return run_records(input, RecordMode::OMEGA, budget_ms, format, jobs);
        if (app.got_subcommand(chi))
            return run_records(input, RecordMode::CHI, budget_ms, format, jobs);
        if (app.got_subcommand(verify))
            return run_records(input, RecordMode::VERIFY, budget_ms, format, jobs);
        if (app.got_subcommand(sweep)) {
            auto [n_lo, n_hi] = parse_range(n_range);
            auto [d_lo, d_hi] = parse_range(delta_range);
            bk::SweepConfig cfg;
            cfg.count = count;
            cfg.n_lo = n_lo;
            cfg.n_hi = n_hi;
            cfg.delta_lo = d_lo;
            cfg.delta_hi = d_hi;
            cfg.seed = seed;
            cfg.budget_ms = budget_ms;
            cfg.jobs = jobs;
            cfg.filter = !no_filter;
            return run_sweep_cmd(cfg, sweep_format);
        }
        if (app.got_subcommand(audit))
            return run_audit(input, audit_u, phi_text, audit_color, budget_ms, audit_format);
    } catch (const InputError& e) {
        std::cerr << "error: " << e.message << '\n';
        return kExitInput;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitInput;
    }
    return kExitClean;
}
