// Command-line front end: bounds, solve, simulate, sweep, diagnose.

#include <CLI11.hpp>

#include <fstream>
#include <iostream>

#include "cubecop/bounds.hpp"
#include "cubecop/montecarlo.hpp"
#include "cubecop/solver.hpp"
#include "cubecop/transcript_io.hpp"

using namespace cubecop;

namespace {

void apply_switch_offset(CopStrategySpec& spec, int t) {
    if (t < 1) throw ConfigError("--t must be >= 1");
    spec.switch_offset = t;
}

int run_bounds(int n, bool json) {
    BoundReport r = make_bound_report(n);
    std::cout << (json ? r.json() + "\n" : r.text());
    return 0;
}

int run_solve(int n, std::optional<int> max_cops, std::optional<double> budget, bool no_canon) {
    SolveResult r = cop_number_exact(n, max_cops, budget, !no_canon);
    std::cout << "n=" << r.n << "\n";
    for (const auto& [c, win] : r.win_table) {
        std::cout << "C=" << c << "  cops_win="
                  << (win ? (*win ? "true" : "false") : "unknown") << "\n";
    }
    if (r.cop_number) {
        std::cout << "cop_number=" << *r.cop_number << "\n";
    } else {
        std::cout << "cop_number=unknown (scanned range exhausted"
                  << (r.budget_exhausted ? ", budget hit" : "") << ")\n";
    }
    std::cout << "nodes=" << r.stats.nodes << " memo_hits=" << r.stats.memo_hits << "\n";
    return r.budget_exhausted ? 3 : 0;
}

int run_simulate(const TrialConfig& cfg, const std::string& csv, const std::string& transcripts) {
    std::vector<std::string> lines;
    EstimateResult r =
        estimate_win_probability(cfg, transcripts.empty() ? nullptr : &lines);
    auto [lo, hi] = r.wilson95();
    std::cout << "n=" << r.n << " C=" << r.cop_count << " trials=" << r.trials
              << " wins=" << r.wins << " p_hat=" << r.p_hat() << " ci=[" << lo << "," << hi
              << "]\n";
    if (!csv.empty()) {
        std::ofstream out(csv);
        out << EstimateResult::csv_header() << "\n" << r.csv_row() << "\n";
    }
    if (!transcripts.empty()) {
        std::ofstream out(transcripts);
        for (const auto& t : lines) out << t;
    }
    return 0;
}

int run_sweep(const TrialConfig& base, int from, int to, int step, const std::string& csv) {
    SweepResult r = sweep_cop_counts(base, from, to, step);
    std::cout << EstimateResult::csv_header() << "\n";
    for (const auto& row : r.rows) std::cout << row.csv_row() << "\n";
    if (r.threshold_half)
        std::cout << "# threshold p>=0.5: C=" << *r.threshold_half << "\n";
    else
        std::cout << "# threshold p>=0.5: not reached in range\n";
    if (r.threshold_ninety_nine)
        std::cout << "# threshold p>=0.99: C=" << *r.threshold_ninety_nine << "\n";
    if (!csv.empty()) {
        std::ofstream out(csv);
        out << EstimateResult::csv_header() << "\n";
        for (const auto& row : r.rows) out << row.csv_row() << "\n";
    }
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Levelled cops-and-robber laboratory on the hypercube"};
    app.require_subcommand(1);

    int n = 0;
    bool json = false;
    auto* bounds_cmd = app.add_subcommand("bounds", "Exact bound formulas for a given n");
    bounds_cmd->add_option("--n", n, "ground-set size")->required();
    bounds_cmd->add_flag("--json", json, "emit structured record");

    std::optional<int> max_cops;
    std::optional<double> budget;
    bool no_canon = false;
    auto* solve_cmd = app.add_subcommand("solve", "Exact cop number for small n");
    solve_cmd->add_option("--n", n, "ground-set size")->required();
    solve_cmd->add_option("--max-cops", max_cops, "cap on the scanned cop range");
    solve_cmd->add_option("--budget-seconds", budget, "time budget");
    solve_cmd->add_flag("--no-canonicalization", no_canon, "disable symmetry reduction");

    TrialConfig cfg;
    std::string cop_str = "uniform", robber_str = "greedy", csv, transcripts;
    int t_offset = 0;
    auto add_common = [&](CLI::App* c, bool with_cops) {
        c->add_option("--n", cfg.n, "ground-set size")->required();
        if (with_cops) c->add_option("--cops", cfg.cop_count, "number of cops")->required();
        c->add_option("--trials", cfg.trials, "trial count")->required();
        c->add_option("--seed", cfg.seed, "master seed")->required();
        c->add_option("--cop", cop_str, "cop strategy");
        c->add_option("--robber", robber_str, "robber strategy");
        c->add_option("--t", t_offset, "paper strategy switch offset");
        c->add_option("--threads", cfg.threads, "worker threads (0 = auto)");
    };

    auto* sim_cmd = app.add_subcommand("simulate", "Monte Carlo win-probability estimate");
    add_common(sim_cmd, true);
    sim_cmd->add_option("--csv", csv, "write the estimate row as CSV");
    sim_cmd->add_option("--transcripts", transcripts, "write per-trial transcripts");

    int c_from = 0, c_to = 0, c_step = 1;
    auto* sweep_cmd = app.add_subcommand("sweep", "Win probability across a cop-count range");
    add_common(sweep_cmd, false);
    sweep_cmd->add_option("--from", c_from, "first cop count")->required();
    sweep_cmd->add_option("--to", c_to, "last cop count")->required();
    sweep_cmd->add_option("--step", c_step, "cop count step");
    sweep_cmd->add_option("--csv", csv, "write the table as CSV");

    auto* diag_cmd = app.add_subcommand("diagnose", "Bad-event and coverage diagnostics");
    add_common(diag_cmd, true);

    CLI11_PARSE(app, argc, argv);

    try {
        if (bounds_cmd->parsed()) return run_bounds(n, json);
        if (solve_cmd->parsed()) return run_solve(n, max_cops, budget, no_canon);

        cfg.cop = CopStrategySpec::parse(cop_str);
        cfg.robber = RobberStrategySpec::parse(robber_str);
        if (t_offset > 0) apply_switch_offset(cfg.cop, t_offset);
        if (sim_cmd->parsed()) return run_simulate(cfg, csv, transcripts);
        if (sweep_cmd->parsed()) return run_sweep(cfg, c_from, c_to, c_step, csv);
        if (diag_cmd->parsed()) {
            std::cout << diagnose(cfg).text();
            return 0;
        }
    } catch (const ConfigError& e) {
        std::cerr << "config error: " << e.what() << "\n";
        return 2;
    } catch (const BudgetExhausted& e) {
        std::cerr << "budget exhausted: " << e.what() << "\n";
        return 3;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 0;
}
