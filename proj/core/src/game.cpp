#include "cubecop/game.hpp"

#include <algorithm>
#include <bit>
#include <cassert>

namespace cubecop {

GameState new_game(const GameConfig& cfg) {
    cfg.validate();
    GameState s;
    s.cfg = cfg;
    s.round = 1;
    s.robber = VertexSet::full(cfg.n);
    s.cops.assign(size_t(cfg.cop_count), VertexSet{});
    s.phase = cfg.robber_rounds() == 0 ? Phase::Strike : Phase::CopsToMove;
    return s;
}

static void drop_evaded(GameState& s, int& evaded) {
    size_t w = 0;
    for (size_t i = 0; i < s.cops.size(); ++i) {
        if (s.cops[i].subset_of(s.robber)) {
            if (w != i) {
                s.cops[w] = s.cops[i];
                if (s.has_commitments()) s.committed[w] = std::move(s.committed[i]);
            }
            ++w;
        } else {
            ++evaded;
        }
    }
    s.cops.resize(w);
    if (s.has_commitments()) s.committed.resize(w);
}

std::pair<GameState, int> apply_cop_moves(GameState state, const CopMove& move) {
    if (state.phase != Phase::CopsToMove)
        throw GameError("apply_cop_moves: not the cops' half-move");
    if (state.round > state.cfg.robber_rounds())
        throw GameError("apply_cop_moves: past the last regular round");
    if (move.elements.size() != state.cops.size())
        throw GameError("apply_cop_moves: one element per surviving cop required");

    GameState s = std::move(state);
    if (move.new_commitments) {
        if (move.new_commitments->size() != s.cops.size())
            throw GameError("apply_cop_moves: commitment count mismatch");
        s.committed = *move.new_commitments;
    }
    for (size_t i = 0; i < s.cops.size(); ++i) {
        int e = move.elements[i];
        if (e < 1 || e > s.cfg.n)
            throw GameError("apply_cop_moves: element out of range");
        if (s.cops[i].contains(e))
            throw GameError("apply_cop_moves: element already in cop's set");
        s.cops[i].add(e);
        if (s.has_commitments()) {
            auto& path = s.committed[i];
            if (!path.empty()) {
                assert(path.front() == e && "cop move must follow its commitment");
                path.erase(path.begin());
            }
        }
    }
    int evaded = 0;
    drop_evaded(s, evaded);
    s.phase = Phase::RobberToMove;
    return {std::move(s), evaded};
}

std::pair<GameState, std::optional<Outcome>> apply_robber_move(GameState state, int element) {
    if (state.phase != Phase::RobberToMove)
        throw GameError("apply_robber_move: not the robber's half-move");
    if (!state.robber.contains(element))
        throw GameError("apply_robber_move: element not in robber set");

    GameState s = std::move(state);
    s.robber.remove(element);
    const bool last = s.round == s.cfg.robber_rounds();

    if (last && !s.cfg.odd()) {
        // Even n: capture by the robber stepping onto an occupied middle set.
        for (const VertexSet& c : s.cops) {
            if (c == s.robber) {
                s.phase = Phase::Finished;
                return {std::move(s), Outcome{Outcome::CopsWin, s.robber, s.round}};
            }
        }
    }
    int evaded = 0;
    drop_evaded(s, evaded);
    if (last) {
        if (s.cfg.odd()) {
            s.round += 1;
            s.phase = Phase::Strike;
            return {std::move(s), std::nullopt};
        }
        s.phase = Phase::Finished;
        return {std::move(s), Outcome{Outcome::RobberWins, s.robber, std::nullopt}};
    }
    s.round += 1;
    s.phase = Phase::CopsToMove;
    return {std::move(s), std::nullopt};
}

Outcome final_cop_strike(const GameState& state) {
    if (!state.cfg.odd())
        throw GameError("final_cop_strike: only defined for odd n");
    if (state.phase != Phase::Strike)
        throw GameError("final_cop_strike: not at the strike round");
    for (const VertexSet& c : state.cops) {
        if (c.subset_of(state.robber))
            return Outcome{Outcome::CopsWin, state.robber, state.cfg.middle_level()};
    }
    return Outcome{Outcome::RobberWins, state.robber, std::nullopt};
}

std::array<int, 64> evasion_histogram(const std::vector<VertexSet>& cops) {
    std::array<int, 64> h{};
    for (const VertexSet& c : cops)
        for (uint64_t b = c.bits; b; b &= b - 1) ++h[size_t(std::countr_zero(b))];
    return h;
}

int evasion_count(const GameState& state, int element) {
    if (!state.robber.contains(element))
        throw GameError("evasion_count: element not in robber set");
    int count = 0;
    for (const VertexSet& c : state.cops)
        if (c.contains(element)) ++count;
    return count;
}

}  // namespace cubecop
