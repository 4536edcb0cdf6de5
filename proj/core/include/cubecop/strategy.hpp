#pragma once

#include <memory>
#include <string>
#include <vector>

#include "cubecop/game.hpp"
#include "cubecop/rng.hpp"

namespace cubecop {

struct CopStrategySpec {
    enum Kind { Uniform, Chain, Paper, FullCover };
    Kind kind = Uniform;
    int switch_offset = 7;  // rounds before the middle at which Paper switches phases
    bool capped = false;    // FullCover only: allow fewer cops than the covering number

    std::string str() const;
    static CopStrategySpec parse(const std::string& text);
};

struct RobberStrategySpec {
    enum Kind { Greedy, Random, Lookahead };
    enum Model { Minimax, Known };
    Kind kind = Greedy;
    Model model = Minimax;   // Lookahead only
    int exhaustive_cap = 12;

    std::string str() const;
    static RobberStrategySpec parse(const std::string& text);
};

class CopStrategy {
public:
    virtual ~CopStrategy() = default;
    virtual std::string name() const = 0;
    virtual CopMove choose(const GameState& state, Rng& rng) = 0;
    virtual std::unique_ptr<CopStrategy> clone() const = 0;
    // True when choose() ignores the rng (cover, committed chains).
    virtual bool deterministic() const { return false; }
    // Rounds in which every cop grows uniformly at random (B_k diagnostics apply).
    virtual int uniform_rounds(const GameConfig&) const { return 0; }
};

class RobberStrategy {
public:
    virtual ~RobberStrategy() = default;
    virtual std::string name() const = 0;
    virtual int choose(const GameState& state, Rng& rng) = 0;
    virtual std::unique_ptr<RobberStrategy> clone() const = 0;
};

// Reference strategies ------------------------------------------------------

// Element of R contained in the most surviving cop sets; ties to the smallest
// element. On the final even-n move, among maximal evaders an unoccupied
// destination is preferred when one exists.
int greedy_robber_choice(const GameState& state);

// Each surviving cop independently gains a uniform element of R - S.
std::vector<int> uniform_cop_moves(const GameState& state, Rng& rng);

// One uniformly random maximal chain per cop from its set into the family of
// level-m subsets of the current robber set (m = robber_rounds()).
std::vector<std::vector<int>> make_chain_commitments(const GameState& state, Rng& rng);

// Next committed element per cop.
std::vector<int> chain_cop_moves(const GameState& state);

// Factories ----------------------------------------------------------------

std::unique_ptr<CopStrategy> make_cop_strategy(const CopStrategySpec& spec, const GameConfig& cfg);
std::unique_ptr<RobberStrategy> make_robber_strategy(const RobberStrategySpec& spec, const GameConfig& cfg);

// The lookahead robber needs the cop strategy it plays against for the Known
// model; pass null for Minimax.
std::unique_ptr<RobberStrategy> make_lookahead_robber(const RobberStrategySpec& spec,
                                                      const GameConfig& cfg,
                                                      const CopStrategy* opponent);

// The minimum cop budget full cover requires: C(n, floor(n/2)) targets.
unsigned long long full_cover_budget(const GameConfig& cfg);

}  // namespace cubecop
