#include "cubecop/montecarlo.hpp"

#include <cmath>
#include <cstdio>
#include <sstream>
#include <thread>

#include "cubecop/bounds.hpp"
#include "cubecop/transcript_io.hpp"

namespace cubecop {

namespace {
constexpr uint64_t kCopSalt = 0x636f70736964655fULL;
constexpr uint64_t kRobberSalt = 0x726f626265727369ULL;
}  // namespace

void TrialConfig::validate() const {
    game().validate();
    if (trials < 1) throw ConfigError("trials must be >= 1");
}

std::pair<double, double> EstimateResult::wilson95() const {
    const double z = 1.959963984540054;
    const double T = double(trials);
    if (T == 0) return {0.0, 1.0};
    const double p = p_hat();
    const double z2 = z * z;
    const double denom = 1.0 + z2 / T;
    const double center = p + z2 / (2.0 * T);
    const double half = z * std::sqrt(p * (1.0 - p) / T + z2 / (4.0 * T * T));
    double lo = (center - half) / denom;
    double hi = (center + half) / denom;
    // One-sided at the boundaries: the degenerate endpoint is exact.
    if (wins == 0) lo = 0.0;
    if (wins == trials) hi = 1.0;
    return {lo, hi};
}

std::string EstimateResult::csv_header() {
    return "n,C,trials,wins,p_hat,ci_low,ci_high,seed";
}

std::string EstimateResult::csv_row() const {
    auto [lo, hi] = wilson95();
    char buf[160];
    std::snprintf(buf, sizeof buf, "%d,%d,%lld,%lld,%.6f,%.6f,%.6f,%llu", n, cop_count, trials,
                  wins, p_hat(), lo, hi, (unsigned long long)seed);
    return buf;
}

EstimateResult merge(EstimateResult a, const EstimateResult& b) {
    if (a.trials == 0) return b;
    if (b.trials == 0) return a;
    if (a.n != b.n || a.cop_count != b.cop_count || a.seed != b.seed ||
        a.bk_rounds != b.bk_rounds)
        throw ConfigError("merge: shards come from different runs");
    a.trials += b.trials;
    a.wins += b.wins;
    a.coverage_checked += b.coverage_checked;
    a.coverage_failures += b.coverage_failures;
    auto add = [](std::vector<long long>& x, const std::vector<long long>& y) {
        if (x.size() < y.size()) x.resize(y.size(), 0);
        for (size_t i = 0; i < y.size(); ++i) x[i] += y[i];
    };
    add(a.bk_events, b.bk_events);
    add(a.survivor_mid_sum, b.survivor_mid_sum);
    add(a.survivor_sum, b.survivor_sum);
    add(a.robber_evasion_sum, b.robber_evasion_sum);
    return a;
}

namespace {

EstimateResult run_block(const TrialConfig& cfg,
                         long long from,
                         long long to,
                         std::vector<std::string>* transcripts_out) {
    const GameConfig game = cfg.game();
    const int rounds = game.robber_rounds();

    auto cop = make_cop_strategy(cfg.cop, game);
    auto robber = make_lookahead_robber(cfg.robber, game, cop.get());

    PlayOptions opts;
    const bool chains = cfg.cop.kind == CopStrategySpec::Paper ||
                        cfg.cop.kind == CopStrategySpec::Chain;
    opts.track_bk = cfg.diagnostics && cop->uniform_rounds(game) > 0;
    opts.track_coverage = cfg.diagnostics && chains;

    EstimateResult r;
    r.n = cfg.n;
    r.cop_count = cfg.cop_count;
    r.seed = cfg.seed;
    r.bk_rounds = cfg.diagnostics ? cop->uniform_rounds(game) : 0;
    r.bk_events.assign(size_t(rounds), 0);
    r.survivor_mid_sum.assign(size_t(rounds), 0);
    r.survivor_sum.assign(size_t(rounds), 0);
    r.robber_evasion_sum.assign(size_t(rounds), 0);

    for (long long trial = from; trial < to; ++trial) {
        const uint64_t cop_seed =
            mix_seed(cfg.seed, kCopSalt, uint64_t(cfg.cop_count), uint64_t(trial));
        const uint64_t robber_seed = mix_seed(cfg.seed, kRobberSalt, uint64_t(trial));
        Transcript t = play_game(game, *cop, *robber, cop_seed, robber_seed, opts);
        r.trials += 1;
        if (t.outcome.winner == Outcome::CopsWin) r.wins += 1;
        for (const RoundRecord& rr : t.rounds) {
            const size_t k = size_t(rr.round - 1);
            r.survivor_mid_sum[k] += rr.survivors_mid;
            r.survivor_sum[k] += rr.survivors;
            r.robber_evasion_sum[k] += rr.robber_evasions;
        }
        bool coverage_seen = false;
        for (const DiagnosticEvent& d : t.diagnostics) {
            if (d.kind == DiagnosticEvent::BkExceeded) {
                r.bk_events[size_t(d.round - 1)] += 1;
            } else if (d.kind == DiagnosticEvent::UncoveredTarget) {
                coverage_seen = true;
                if (d.count > 0) r.coverage_failures += 1;
            }
        }
        if (coverage_seen) r.coverage_checked += 1;
        if (transcripts_out)
            (*transcripts_out)[size_t(trial - from)] = serialize_transcript(t);
    }
    return r;
}

}  // namespace

EstimateResult estimate_shard(const TrialConfig& cfg, long long trial_from, long long trial_to) {
    cfg.validate();
    return run_block(cfg, trial_from, trial_to, nullptr);
}

EstimateResult estimate_win_probability(const TrialConfig& cfg,
                                        std::vector<std::string>* transcripts_out) {
    cfg.validate();
    if (transcripts_out) {
        // Transcript capture runs the single-threaded path in trial order.
        transcripts_out->assign(size_t(cfg.trials), {});
        return run_block(cfg, 0, cfg.trials, transcripts_out);
    }
    unsigned workers = cfg.threads > 0 ? unsigned(cfg.threads)
                                       : std::max(1u, std::thread::hardware_concurrency());
    workers = std::min<unsigned>(workers, unsigned(std::max<long long>(1, cfg.trials / 64)));
    if (workers <= 1) return run_block(cfg, 0, cfg.trials, nullptr);

    std::vector<EstimateResult> parts(workers);
    std::vector<std::thread> threads;
    const long long per = (cfg.trials + workers - 1) / workers;
    for (unsigned w = 0; w < workers; ++w) {
        const long long from = per * w;
        const long long to = std::min<long long>(cfg.trials, from + per);
        if (from >= to) break;
        threads.emplace_back([&, w, from, to] { parts[w] = run_block(cfg, from, to, nullptr); });
    }
    for (auto& th : threads) th.join();
    EstimateResult out;
    for (const auto& p : parts) out = merge(std::move(out), p);
    return out;
}

SweepResult sweep_cop_counts(const TrialConfig& base, int c_from, int c_to, int step) {
    if (c_from > c_to) throw ConfigError("sweep: from > to");
    if (step < 1) throw ConfigError("sweep: step must be >= 1");
    SweepResult res;
    for (int c = c_from; c <= c_to; c += step) {
        TrialConfig cfg = base;
        cfg.cop_count = c;
        EstimateResult row = estimate_win_probability(cfg);
        if (!res.threshold_half && row.p_hat() >= 0.5) res.threshold_half = c;
        if (!res.threshold_ninety_nine && row.p_hat() >= 0.99) res.threshold_ninety_nine = c;
        res.rows.push_back(std::move(row));
    }
    return res;
}

DiagnoseReport diagnose(const TrialConfig& cfg) {
    if (cfg.cop.kind == CopStrategySpec::FullCover)
        throw ConfigError("diagnose: no randomness to diagnose in the cover strategy");
    TrialConfig c = cfg;
    c.diagnostics = true;
    DiagnoseReport rep;
    rep.estimate = estimate_win_probability(c);

    const int rounds = c.game().robber_rounds();
    for (int k = 1; k <= rounds; ++k) {
        const size_t i = size_t(k - 1);
        const long long nk_sum = rep.estimate.survivor_mid_sum[i];
        rep.mean_evaded_fraction.push_back(
            nk_sum ? double(rep.estimate.robber_evasion_sum[i]) / double(nk_sum) : 0.0);
        rep.expected_fraction.push_back(double(k) / double(cfg.n - k + 1));
        if (k <= rep.estimate.bk_rounds) {
            rep.bk_frequency.push_back(double(rep.estimate.bk_events[i]) /
                                       double(rep.estimate.trials));
            const double mean_nk = double(nk_sum) / double(rep.estimate.trials);
            rep.chernoff_reference.push_back(
                std::min(1.0, chernoff_bk_bound(cfg.n, k, (long long)mean_nk)));
        }
    }
    return rep;
}

std::string DiagnoseReport::text() const {
    std::ostringstream o;
    o << "n=" << estimate.n << " C=" << estimate.cop_count << " trials=" << estimate.trials
      << " p_hat=" << estimate.p_hat() << "\n";
    o << "round  mean_evaded  expected  ";
    o << "Bk_freq  chernoff_ref(clamped)\n";
    for (size_t i = 0; i < mean_evaded_fraction.size(); ++i) {
        char buf[160];
        if (i < bk_frequency.size()) {
            std::snprintf(buf, sizeof buf, "%5zu  %11.6f  %8.6f  %7.5f  %9.6f\n", i + 1,
                          mean_evaded_fraction[i], expected_fraction[i], bk_frequency[i],
                          chernoff_reference[i]);
        } else {
            std::snprintf(buf, sizeof buf, "%5zu  %11.6f  %8.6f        -          -\n", i + 1,
                          mean_evaded_fraction[i], expected_fraction[i]);
        }
        o << buf;
    }
    if (estimate.coverage_checked) {
        o << "chain coverage: " << (estimate.coverage_checked - estimate.coverage_failures)
          << "/" << estimate.coverage_checked << " trials covered the middle family\n";
    }
    return o.str();
}

}  // namespace cubecop
