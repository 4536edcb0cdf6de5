#pragma once

#include <iosfwd>
#include <string>

#include "cubecop/game.hpp"

namespace cubecop {

// Line-delimited transcript record, stable across versions:
//   # cubecop transcript v1
//   config n=4 cops=2 cop=uniform robber=greedy cop_seed=1 robber_seed=2
//   round 1 cops=1,2 evaded=0 del=3 survivors=2
//   ...
//   outcome winner=cops capture_round=2
std::string serialize_transcript(const Transcript& t);
Transcript parse_transcript(const std::string& text);

// Re-runs the recorded moves from the initial state.
Outcome replay_transcript(const Transcript& t);

}  // namespace cubecop
