#pragma once

#include <chrono>
#include <cstdint>
#include <map>
#include <optional>
#include <unordered_map>
#include <vector>

#include "cubecop/game.hpp"

namespace cubecop {

struct BudgetExhausted : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Fingerprint of (robber set, cop multiset) up to relabeling of the robber's
// remaining elements. Element frequencies across the cop multiset refine the
// candidate permutations before the residual group is searched exhaustively.
struct CanonicalKey {
    std::vector<uint64_t> words;  // [r, round, relabeled sorted cop masks...]
    bool operator==(const CanonicalKey&) const = default;
};

struct CanonicalKeyHash {
    size_t operator()(const CanonicalKey& k) const {
        uint64_t h = 1469598103934665603ULL;
        for (uint64_t w : k.words) {
            h ^= w;
            h *= 1099511628211ULL;
        }
        return size_t(h);
    }
};

CanonicalKey canonicalize(const GameState& state, int permutation_cap = 10);

struct SolveStats {
    uint64_t nodes = 0;
    uint64_t memo_hits = 0;
};

// Exact minimax value of the game from an arbitrary state: true iff the cops
// can force a capture. Memoized on CanonicalKey; a matching-based covering
// test resolves cop-to-move nodes where the surviving cops can be assigned
// one-to-one onto every middle set still below the robber.
struct SolveOptions {
    bool use_canonicalization = true;
    int permutation_cap = 10;
    size_t memo_limit = size_t(1) << 26;
    std::optional<std::chrono::steady_clock::time_point> deadline;
};

class GameValue {
public:
    using Options = SolveOptions;

    explicit GameValue(Options opts = {}) : opts_(opts) {}

    bool cops_win(const GameState& state);

    const SolveStats& stats() const { return stats_; }

private:
    bool value_cop_node(const GameState& state);
    bool value_robber_node(const GameState& state);
    bool covering_assignment_exists(const GameState& state) const;
    void check_budget() const;

    Options opts_;
    SolveStats stats_;
    std::unordered_map<CanonicalKey, bool, CanonicalKeyHash> memo_;
};

struct SolveResult {
    int n = 0;
    std::optional<int> cop_number;
    // C -> cops win; absent value means not solved within budget.
    std::map<int, std::optional<bool>> win_table;
    SolveStats stats;
    bool budget_exhausted = false;
};

bool cops_win_with(int n, int cop_count, const GameValue::Options& opts = {});

// Scans C upward from the ceiling of the survival lower bound, capped by the
// middle-level covering number (or max_cops when given).
SolveResult cop_number_exact(int n,
                             std::optional<int> max_cops = std::nullopt,
                             std::optional<double> budget_seconds = std::nullopt,
                             bool use_canonicalization = true);

}  // namespace cubecop
