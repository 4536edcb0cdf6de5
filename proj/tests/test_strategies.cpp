#include <doctest.h>

#include <map>
#include <set>

#include "cubecop/bounds.hpp"
#include "cubecop/play.hpp"
#include "cubecop/stats.hpp"

using namespace cubecop;

namespace {

GameState mid_state(GameConfig cfg, int round, VertexSet robber, std::vector<VertexSet> cops,
                    Phase phase = Phase::RobberToMove) {
    GameState s;
    s.cfg = cfg;
    s.round = round;
    s.phase = phase;
    s.robber = robber;
    s.cops = std::move(cops);
    return s;
}

}  // namespace

TEST_CASE("greedy deletes the most-covered element, smallest on ties") {
    GameState s = mid_state(GameConfig{4, 3}, 1, VertexSet::of({1, 2, 3, 4}),
                            {VertexSet::of({1}), VertexSet::of({1}), VertexSet::of({2})});
    CHECK(greedy_robber_choice(s) == 1);

    GameState tie = mid_state(GameConfig{3, 0}, 1, VertexSet::of({1, 2, 3}), {});
    CHECK(greedy_robber_choice(tie) == 1);
}

TEST_CASE("greedy final move picks an escaping deletion when one exists") {
    // Doubled cop on {1,2}: deleting 1 or 2 evades both; both destinations are
    // unoccupied, tie-break to 1.
    GameState s = mid_state(GameConfig{4, 2}, 2, VertexSet::of({1, 2, 3}),
                            {VertexSet::of({1, 2}), VertexSet::of({1, 2})});
    CHECK(greedy_robber_choice(s) == 1);
    auto [s2, o] = apply_robber_move(std::move(s), 1);
    REQUIRE(o);
    CHECK(o->winner == Outcome::RobberWins);

    // All destinations occupied: capture is forced, smallest element returned.
    GameState lost = mid_state(GameConfig{4, 3}, 2, VertexSet::of({1, 2, 3}),
                               {VertexSet::of({1, 2}), VertexSet::of({1, 3}),
                                VertexSet::of({2, 3})});
    CHECK(greedy_robber_choice(lost) == 1);
}

TEST_CASE("greedy floor holds over random play") {
    // survivors after round k <= floor(N_k (1 - k/(n-k+1))); telescoped:
    // final survivors <= C * survival_product(n, m).
    for (uint64_t seed = 0; seed < 20; ++seed) {
        const int n = 6 + int(seed % 7);
        GameConfig cfg{n, 60};
        auto cop = make_cop_strategy(CopStrategySpec::parse(seed % 2 ? "uniform" : "paper:t=3"), cfg);
        auto robber = make_robber_strategy(RobberStrategySpec::parse("greedy"), cfg);
        Transcript t = play_game(cfg, *cop, *robber, seed, seed + 1);
        const bool captured = t.outcome.winner == Outcome::CopsWin;
        for (const RoundRecord& r : t.rounds) {
            const int k = r.round;
            // A capture ends the round before evaded cops are filtered out.
            if (captured && k == cfg.middle_level()) continue;
            CHECK(r.survivors * (n - k + 1) <= r.survivors_mid * (n - 2 * k + 1));
        }
        if (!t.rounds.empty() && !captured) {
            Rational cap = Rational(cfg.cop_count) * survival_product(n, n / 2);
            CHECK(Rational(t.rounds.back().survivors) <= cap);
        }
    }
}

TEST_CASE("uniform_cop_moves draws from R - S") {
    GameState forced = mid_state(GameConfig{3, 1}, 3, VertexSet::of({1, 2, 3}),
                                 {VertexSet::of({1, 2})}, Phase::CopsToMove);
    Rng rng(7);
    auto moves = uniform_cop_moves(forced, rng);
    REQUIRE(moves.size() == 1);
    CHECK(moves[0] == 3);  // singleton support
}

TEST_CASE("uniform first move is uniform over the ground set") {
    GameState s = new_game(GameConfig{4, 1});
    std::vector<long long> counts(4, 0);
    Rng rng(123);
    const int trials = 100000;
    for (int i = 0; i < trials; ++i) {
        auto moves = uniform_cop_moves(s, rng);
        ++counts[size_t(moves[0] - 1)];
    }
    CHECK(chi_square_uniform_pvalue(counts) > 0.001);
}

TEST_CASE("chain commitment arithmetic at the switch") {
    // Even n with t=7: cop at level m-7, robber at level m+7, |R-S| = 14,
    // C(14,7) = 3432 reachable targets, 7! = 5040 chains per target.
    CHECK(binomial(14, 7) == 3432);
    GameConfig cfg{18, 1};  // m = 9, switch after round 2
    GameState s = mid_state(cfg, 3, VertexSet::of({1, 2, 3, 4, 5, 6, 7, 8, 9, 10, 11, 12, 13, 14, 15, 16}),
                            {VertexSet::of({15, 16})}, Phase::CopsToMove);
    Rng rng(5);
    auto paths = make_chain_commitments(s, rng);
    REQUIRE(paths.size() == 1);
    CHECK(paths[0].size() == 7);  // level 2 -> level 9
    std::set<int> uniq(paths[0].begin(), paths[0].end());
    CHECK(uniq.size() == 7);
    for (int e : paths[0]) {
        CHECK(s.robber.contains(e));
        CHECK(!s.cops[0].contains(e));
    }
}

TEST_CASE("chain commitments: t=1 degenerate has chains of length 1") {
    GameConfig cfg{4, 2};  // m=2; at round 2 each cop is at level 1, |R-S| = 2
    GameState s = mid_state(cfg, 2, VertexSet::of({1, 2, 3}),
                            {VertexSet::of({1}), VertexSet::of({3})}, Phase::CopsToMove);
    Rng rng(9);
    auto paths = make_chain_commitments(s, rng);
    REQUIRE(paths.size() == 2);
    CHECK(paths[0].size() == 1);
    CHECK(paths[1].size() == 1);
}

TEST_CASE("chain_cop_moves plays the committed path in order") {
    GameConfig cfg{6, 1};
    GameState s = new_game(cfg);
    auto [s1, e1] = apply_cop_moves(std::move(s),
                                    CopMove{{3}, std::vector<std::vector<int>>{{3, 5, 1}}});
    CHECK(s1.committed[0] == std::vector<int>{5, 1});
    auto [s2, o1] = apply_robber_move(std::move(s1), 2);
    REQUIRE(!o1);
    CHECK(chain_cop_moves(s2) == std::vector<int>{5});
    auto [s3, e2] = apply_cop_moves(std::move(s2), CopMove{{5}, std::nullopt});
    CHECK(s3.cops[0] == VertexSet::of({3, 5}));
    CHECK(s3.committed[0] == std::vector<int>{1});
}

TEST_CASE("paper strategy phase arithmetic") {
    CopStrategySpec spec = CopStrategySpec::parse("paper");  // t = 7
    auto s16 = make_cop_strategy(spec, GameConfig{16, 1});
    CHECK(s16->uniform_rounds(GameConfig{16, 1}) == 1);  // m=8: 1 uniform round
    auto s30 = make_cop_strategy(spec, GameConfig{30, 1});
    CHECK(s30->uniform_rounds(GameConfig{30, 1}) == 8);  // m=15
    auto s8 = make_cop_strategy(spec, GameConfig{8, 1});
    CHECK(s8->uniform_rounds(GameConfig{8, 1}) == 0);    // m=4 <= t: pure chain
    auto chain = make_cop_strategy(CopStrategySpec::parse("chain"), GameConfig{16, 1});
    CHECK(chain->uniform_rounds(GameConfig{16, 1}) == 0);
}

TEST_CASE("paper strategy installs commitments at the switch round") {
    GameConfig cfg{10, 8};
    auto cop = make_cop_strategy(CopStrategySpec::parse("paper:t=3"), cfg);
    auto robber = make_robber_strategy(RobberStrategySpec::parse("random"), cfg);
    Transcript t = play_game(cfg, *cop, *robber, 3, 4);
    CHECK(t.rounds.size() == 5);  // m = 5 robber rounds
}

TEST_CASE("chain-target uniformity for one cop at n=6") {
    // Pure chain from round 1: the cop's target should be uniform over the
    // C(6,3) = 20 level-3 sets.
    GameConfig cfg{6, 1};
    GameState s = new_game(cfg);
    std::map<uint64_t, long long> hits;
    Rng rng(2024);
    const int trials = 20000;
    for (int i = 0; i < trials; ++i) {
        auto paths = make_chain_commitments(s, rng);
        VertexSet target = s.cops[0];
        for (int e : paths[0]) target.add(e);
        CHECK(target.level() == 3);
        ++hits[target.bits];
    }
    REQUIRE(hits.size() == 20);
    std::vector<long long> counts;
    for (auto& [bits, c] : hits) counts.push_back(c);
    CHECK(chi_square_uniform_pvalue(counts) > 0.001);
}

TEST_CASE("full cover needs the covering budget") {
    CHECK(full_cover_budget(GameConfig{4, 0}) == 6);
    CHECK(full_cover_budget(GameConfig{5, 0}) == 10);  // level floor(5/2) = 2
    CHECK_THROWS_AS(make_cop_strategy(CopStrategySpec::parse("cover"), GameConfig{4, 5}),
                    ConfigError);
    CHECK_NOTHROW(make_cop_strategy(CopStrategySpec::parse("cover:capped"), GameConfig{4, 5}));
}

TEST_CASE("full cover wins every game with the covering budget") {
    for (int n : {2, 3, 4, 5, 6}) {
        GameConfig cfg{n, int(full_cover_budget(GameConfig{n, 0}))};
        for (const char* rname : {"greedy", "random"}) {
            auto cop = make_cop_strategy(CopStrategySpec::parse("cover"), cfg);
            auto robber = make_robber_strategy(RobberStrategySpec::parse(rname), cfg);
            for (uint64_t seed = 0; seed < 20; ++seed) {
                Transcript t = play_game(cfg, *cop, *robber, seed, seed * 31 + 1);
                CHECK(t.outcome.winner == Outcome::CopsWin);
            }
        }
    }
}

TEST_CASE("lookahead: forced loss returns smallest element") {
    GameConfig cfg{2, 2};
    auto cover = make_cop_strategy(CopStrategySpec::parse("cover"), cfg);
    GameState s = mid_state(cfg, 1, VertexSet::of({1, 2}),
                            {VertexSet::of({1}), VertexSet::of({2})});
    auto minimax = make_robber_strategy(RobberStrategySpec::parse("lookahead:minimax"), cfg);
    Rng rng(0);
    CHECK(minimax->choose(s, rng) == 1);
    auto known = make_lookahead_robber(RobberStrategySpec::parse("lookahead:known"), cfg,
                                       cover.get());
    CHECK(known->choose(s, rng) == 1);
}

TEST_CASE("lookahead minimax beats three cops at n=4") {
    GameConfig cfg{4, 3};
    for (const char* cname : {"uniform", "paper", "cover:capped"}) {
        auto cop = make_cop_strategy(CopStrategySpec::parse(cname), cfg);
        auto robber = make_robber_strategy(RobberStrategySpec::parse("lookahead:minimax"), cfg);
        for (uint64_t seed = 0; seed < 10; ++seed) {
            Transcript t = play_game(cfg, *cop, *robber, seed, 0);
            CHECK(t.outcome.winner == Outcome::RobberWins);
        }
    }
}

TEST_CASE("lookahead dominance over greedy against a known deterministic cop") {
    // Against a fixed deterministic opponent, lookahead:known escapes whenever
    // any robber line escapes; in particular whenever greedy does.
    for (int c = 1; c < 20; ++c) {
        GameConfig cfg{6, c};
        auto cop_a = make_cop_strategy(CopStrategySpec::parse("cover:capped"), cfg);
        auto cop_b = cop_a->clone();
        auto greedy = make_robber_strategy(RobberStrategySpec::parse("greedy"), cfg);
        auto look = make_lookahead_robber(RobberStrategySpec::parse("lookahead:known"), cfg,
                                          cop_b.get());
        Transcript tg = play_game(cfg, *cop_a, *greedy, 0, 0);
        Transcript tl = play_game(cfg, *cop_b, *look, 0, 0);
        if (tg.outcome.winner == Outcome::RobberWins)
            CHECK(tl.outcome.winner == Outcome::RobberWins);
    }
}

TEST_CASE("lookahead rejects oversized n and missing opponent models") {
    CHECK_THROWS_AS(make_robber_strategy(RobberStrategySpec::parse("lookahead"),
                                         GameConfig{14, 1}),
                    ConfigError);
    // Known model needs a deterministic opponent.
    GameConfig cfg{4, 2};
    auto uniform = make_cop_strategy(CopStrategySpec::parse("uniform"), cfg);
    CHECK_THROWS_AS(make_lookahead_robber(RobberStrategySpec::parse("lookahead:known"), cfg,
                                          uniform.get()),
                    ConfigError);
    CHECK_THROWS_AS(make_robber_strategy(RobberStrategySpec::parse("lookahead:known"),
                                         GameConfig{4, 2}),
                    ConfigError);
}

TEST_CASE("strategy specs round-trip through parse and str") {
    for (const char* s : {"uniform", "chain", "paper:t=7", "paper:t=3", "cover", "cover:capped"})
        CHECK(CopStrategySpec::parse(s).str() == s);
    CHECK(CopStrategySpec::parse("paper").str() == "paper:t=7");
    for (const char* s : {"greedy", "random", "lookahead:minimax", "lookahead:known"})
        CHECK(RobberStrategySpec::parse(s).str() == s);
    CHECK(RobberStrategySpec::parse("lookahead").str() == "lookahead:minimax");
    CHECK_THROWS_AS(CopStrategySpec::parse("nope"), ConfigError);
    CHECK_THROWS_AS(CopStrategySpec::parse("paper:t=0"), ConfigError);
    CHECK_THROWS_AS(RobberStrategySpec::parse(""), ConfigError);
}
