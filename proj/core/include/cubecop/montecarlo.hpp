#pragma once

#include <optional>
#include <string>
#include <vector>

#include "cubecop/play.hpp"
#include "cubecop/strategy.hpp"

namespace cubecop {

struct TrialConfig {
    int n = 0;
    int cop_count = 0;
    CopStrategySpec cop;
    RobberStrategySpec robber;
    long long trials = 1;
    uint64_t seed = 0;
    int threads = 0;  // 0 = hardware concurrency
    bool diagnostics = false;

    GameConfig game() const { return GameConfig{n, cop_count}; }
    void validate() const;
};

// All aggregates are integer sums, so sharded runs merge to byte-identical
// results regardless of thread count or shard boundaries.
struct EstimateResult {
    int n = 0;
    int cop_count = 0;
    uint64_t seed = 0;
    long long trials = 0;
    long long wins = 0;

    int bk_rounds = 0;                       // rounds with uniform growth (B_k applies)
    std::vector<long long> bk_events;        // index k-1
    long long coverage_checked = 0;
    long long coverage_failures = 0;
    std::vector<long long> survivor_mid_sum;  // N_k summed over trials, index k-1
    std::vector<long long> survivor_sum;      // after the robber's move
    std::vector<long long> robber_evasion_sum;

    double p_hat() const { return trials ? double(wins) / double(trials) : 0.0; }
    std::pair<double, double> wilson95() const;
    std::string csv_row() const;

    static std::string csv_header();
};

EstimateResult merge(EstimateResult a, const EstimateResult& b);

EstimateResult estimate_win_probability(const TrialConfig& cfg,
                                        std::vector<std::string>* transcripts_out = nullptr);

// Shard [trial_from, trial_to) of the same logical run; merging all shards
// equals the unsharded estimate exactly.
EstimateResult estimate_shard(const TrialConfig& cfg, long long trial_from, long long trial_to);

struct SweepResult {
    std::vector<EstimateResult> rows;
    std::optional<int> threshold_half;        // least scanned C with p_hat >= 0.5
    std::optional<int> threshold_ninety_nine; // least scanned C with p_hat >= 0.99
};

// Common random numbers: robber-side seeds are shared across C, cop seeds are
// fresh per C.
SweepResult sweep_cop_counts(const TrialConfig& base, int c_from, int c_to, int step);

struct DiagnoseReport {
    EstimateResult estimate;
    std::vector<double> mean_evaded_fraction;  // pooled X_k / N_k per round
    std::vector<double> expected_fraction;     // k/(n-k+1)
    std::vector<double> bk_frequency;
    std::vector<double> chernoff_reference;    // clamped to 1
    std::string text() const;
};

DiagnoseReport diagnose(const TrialConfig& cfg);

}  // namespace cubecop
