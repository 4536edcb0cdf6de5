#pragma once

#include "cubecop/game.hpp"
#include "cubecop/strategy.hpp"

namespace cubecop {

struct PlayOptions {
    bool track_bk = false;        // bad-event B_k diagnostics during uniform-growth rounds
    bool track_coverage = false;  // chain-target coverage of the middle family
    unsigned long long coverage_cap = 200000;  // skip coverage when the family is larger
};

// Drives one full play-through. Identical inputs and seeds give an identical
// Transcript. Illegal strategy output aborts with a GameError naming the
// offending strategy and round.
Transcript play_game(const GameConfig& cfg,
                     CopStrategy& cop,
                     RobberStrategy& robber,
                     uint64_t cop_seed,
                     uint64_t robber_seed,
                     const PlayOptions& opts = {});

}  // namespace cubecop
