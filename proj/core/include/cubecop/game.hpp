#pragma once

#include <array>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "cubecop/vertex_set.hpp"

namespace cubecop {

struct ConfigError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct GameError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Levelled pursuit on the n-cube: the robber walks down from the full set,
// the cops walk up from the empty set, capture can only happen at the middle
// level. Element numbering is 1..n, n <= 64.
struct GameConfig {
    int n = 0;
    int cop_count = 0;

    // Level where capture happens.
    int middle_level() const { return (n + 1) / 2; }
    // Rounds in which the robber moves; the cops' chain target level.
    int robber_rounds() const { return n / 2; }
    bool odd() const { return n % 2 != 0; }

    void validate() const {
        if (n < 1 || n > 64) throw ConfigError("n must be in [1, 64]");
        if (cop_count < 0) throw ConfigError("cop_count must be >= 0");
    }
};

enum class Phase { CopsToMove, RobberToMove, Strike, Finished };

struct Outcome {
    enum Winner { CopsWin, RobberWins };
    Winner winner;
    VertexSet final_robber;
    std::optional<int> capture_round;
};

// Full observable state at a half-move boundary. Immutable by convention:
// engine operations take a state by value and return the successor.
struct GameState {
    GameConfig cfg;
    int round = 1;
    Phase phase = Phase::CopsToMove;
    VertexSet robber;
    std::vector<VertexSet> cops;              // surviving cops only
    std::vector<std::vector<int>> committed;  // per-cop remaining chain, empty outside chain phase

    bool has_commitments() const { return !committed.empty(); }
};

// A cop half-move: one element per surviving cop, plus (once, at the phase
// switch) freshly drawn chain commitments to install.
struct CopMove {
    std::vector<int> elements;
    std::optional<std::vector<std::vector<int>>> new_commitments;
};

struct RoundRecord {
    int round = 0;
    std::vector<int> cop_choices;
    int evaded = 0;          // cops removed during this round (both half-moves)
    int robber_deletion = 0;
    int survivors = 0;       // after the robber's move
    int survivors_mid = 0;   // after the cop move, before the robber's (N_k)
    int robber_evasions = 0; // cops containing the deleted element (X_k realized)
};

struct DiagnosticEvent {
    enum Kind { BkExceeded, UncoveredTarget, Evasion };
    Kind kind;
    int round = 0;
    long long count = 0;      // evasion count / number of uncovered targets
    double fraction = 0.0;    // evaded fraction for BkExceeded
    double threshold = 0.0;   // (1+eps_k) k/(n-k+1) for BkExceeded
};

struct Transcript {
    GameConfig cfg;
    uint64_t cop_seed = 0;
    uint64_t robber_seed = 0;
    std::string cop_name;
    std::string robber_name;
    std::vector<RoundRecord> rounds;
    Outcome outcome{Outcome::RobberWins, VertexSet{}, std::nullopt};
    std::vector<DiagnosticEvent> diagnostics;
};

GameState new_game(const GameConfig& cfg);

// Cops climb one level; a cop stepping outside the robber's set self-eliminates.
// Returns the successor state and the number of cops evaded by the move.
// States are taken by value: pass std::move(state) on hot paths.
std::pair<GameState, int> apply_cop_moves(GameState state, const CopMove& move);

// Robber deletes an element; evaded cops are removed. Returns an Outcome when
// the move ends the game (round robber_rounds() for even n, or the robber's
// last move for odd n, which hands over to final_cop_strike).
std::pair<GameState, std::optional<Outcome>> apply_robber_move(GameState state, int element);

// Odd n only: the cops' extra move from level m to m+1. CopsWin iff a
// surviving cop sits below the robber.
Outcome final_cop_strike(const GameState& state);

// Number of surviving cops whose set contains the element.
int evasion_count(const GameState& state, int element);

// Per-element evasion counts in one pass over the cop multiset; index e-1.
std::array<int, 64> evasion_histogram(const std::vector<VertexSet>& cops);

}  // namespace cubecop
