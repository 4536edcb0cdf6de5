#include <doctest.h>

#include "cubecop/play.hpp"
#include "cubecop/transcript_io.hpp"

using namespace cubecop;

TEST_CASE("new_game sets up the forced initial position") {
    GameState s = new_game(GameConfig{4, 2});
    CHECK(s.round == 1);
    CHECK(s.robber == VertexSet::of({1, 2, 3, 4}));
    REQUIRE(s.cops.size() == 2);
    CHECK(s.cops[0].empty());
    CHECK(s.cops[1].empty());

    GameState t = new_game(GameConfig{1, 1});
    CHECK(t.robber == VertexSet::of({1}));
    REQUIRE(t.cops.size() == 1);
    CHECK(t.phase == Phase::Strike);

    GameState u = new_game(GameConfig{5, 0});
    CHECK(u.cops.empty());
}

TEST_CASE("new_game rejects n=0") {
    CHECK_THROWS_AS(new_game(GameConfig{0, 1}), ConfigError);
}

TEST_CASE("apply_cop_moves grows each cop by its chosen element") {
    GameState s = new_game(GameConfig{4, 2});
    auto [s2, evaded] = apply_cop_moves(s, CopMove{{1, 2}, std::nullopt});
    CHECK(evaded == 0);
    CHECK(s2.cops[0] == VertexSet::of({1}));
    CHECK(s2.cops[1] == VertexSet::of({2}));
    CHECK(s2.phase == Phase::RobberToMove);
}

TEST_CASE("apply_cop_moves keeps multiset semantics") {
    GameState s = new_game(GameConfig{3, 3});
    auto [s2, evaded] = apply_cop_moves(s, CopMove{{1, 1, 2}, std::nullopt});
    CHECK(evaded == 0);
    CHECK(s2.cops[0] == VertexSet::of({1}));
    CHECK(s2.cops[1] == VertexSet::of({1}));
    CHECK(s2.cops[2] == VertexSet::of({2}));
}

TEST_CASE("apply_cop_moves rejects re-adding an element") {
    GameState s = new_game(GameConfig{4, 1});
    auto [s2, e1] = apply_cop_moves(s, CopMove{{1}, std::nullopt});
    auto [s3, o] = apply_robber_move(s2, 2);
    REQUIRE(!o);
    CHECK_THROWS_AS(apply_cop_moves(s3, CopMove{{1}, std::nullopt}), GameError);
    CHECK_THROWS_AS(apply_robber_move(s3, 3), GameError);  // wrong phase
}

TEST_CASE("robber deletion removes evaded cops immediately") {
    GameState s = new_game(GameConfig{6, 1});
    auto [s2, e] = apply_cop_moves(s, CopMove{{3}, std::nullopt});
    auto [s3, o] = apply_robber_move(s2, 3);
    REQUIRE(!o);
    CHECK(s3.robber == VertexSet::of({1, 2, 4, 5, 6}));
    CHECK(s3.cops.empty());
}

TEST_CASE("even n: robber forced onto a cop loses") {
    // n=4, round 2: robber {1,2,3}, cops on all three 2-subsets.
    GameState s;
    s.cfg = GameConfig{4, 3};
    s.round = 2;
    s.phase = Phase::RobberToMove;
    s.robber = VertexSet::of({1, 2, 3});
    s.cops = {VertexSet::of({1, 2}), VertexSet::of({1, 3}), VertexSet::of({2, 3})};
    for (int e : {1, 2, 3}) {
        auto [s2, o] = apply_robber_move(s, e);
        REQUIRE(o);
        CHECK(o->winner == Outcome::CopsWin);
        CHECK(o->capture_round == 2);
    }
}

TEST_CASE("even n: an unoccupied destination escapes") {
    GameState s;
    s.cfg = GameConfig{4, 2};
    s.round = 2;
    s.phase = Phase::RobberToMove;
    s.robber = VertexSet::of({1, 2, 3});
    s.cops = {VertexSet::of({1, 2}), VertexSet::of({1, 3})};
    auto [s2, o] = apply_robber_move(s, 1);  // reaches {2,3}
    REQUIRE(o);
    CHECK(o->winner == Outcome::RobberWins);
}

TEST_CASE("final_cop_strike decides odd games by containment") {
    GameState s;
    s.cfg = GameConfig{3, 1};
    s.round = 2;
    s.phase = Phase::Strike;
    s.robber = VertexSet::of({2, 3});
    s.cops = {VertexSet::of({2})};
    CHECK(final_cop_strike(s).winner == Outcome::CopsWin);
    CHECK(final_cop_strike(s).capture_round == 2);

    s.cops.clear();
    CHECK(final_cop_strike(s).winner == Outcome::RobberWins);

    GameState t;
    t.cfg = GameConfig{5, 2};
    t.round = 3;
    t.phase = Phase::Strike;
    t.robber = VertexSet::of({1, 2, 4});
    t.cops = {VertexSet::of({1, 2})};  // {3,5} was evaded and removed earlier
    CHECK(final_cop_strike(t).winner == Outcome::CopsWin);

    GameState even = new_game(GameConfig{4, 1});
    CHECK_THROWS_AS(final_cop_strike(even), GameError);
}

TEST_CASE("evasion_count counts cops containing the element") {
    GameState s;
    s.cfg = GameConfig{4, 3};
    s.round = 2;
    s.phase = Phase::RobberToMove;
    s.robber = VertexSet::of({1, 2, 3, 4});
    s.cops = {VertexSet::of({1}), VertexSet::of({1}), VertexSet::of({2})};
    CHECK(evasion_count(s, 1) == 2);
    CHECK(evasion_count(s, 3) == 0);
    CHECK_THROWS_AS(evasion_count(s, 5), GameError);

    s.cops = {VertexSet::of({1}), VertexSet::of({2}), VertexSet::of({3}), VertexSet::of({4})};
    CHECK(evasion_count(s, 3) == 1);
    s.cops.clear();
    CHECK(evasion_count(s, 2) == 0);
}

TEST_CASE("play_game: n=2 with both singletons covered is a cop win") {
    GameConfig cfg{2, 2};
    auto cop = make_cop_strategy(CopStrategySpec::parse("cover"), cfg);
    auto robber = make_robber_strategy(RobberStrategySpec::parse("greedy"), cfg);
    Transcript t = play_game(cfg, *cop, *robber, 1, 2);
    CHECK(t.outcome.winner == Outcome::CopsWin);
    CHECK(t.outcome.capture_round == 1);
}

TEST_CASE("play_game: one cop on n=2 loses to the greedy robber") {
    GameConfig cfg{2, 1};
    for (uint64_t seed = 0; seed < 16; ++seed) {
        auto cop = make_cop_strategy(CopStrategySpec::parse("uniform"), cfg);
        auto robber = make_robber_strategy(RobberStrategySpec::parse("greedy"), cfg);
        Transcript t = play_game(cfg, *cop, *robber, seed, seed + 100);
        CHECK(t.outcome.winner == Outcome::RobberWins);
    }
}

TEST_CASE("play_game: n=1 single cop captures at round 1") {
    GameConfig cfg{1, 1};
    auto cop = make_cop_strategy(CopStrategySpec::parse("uniform"), cfg);
    auto robber = make_robber_strategy(RobberStrategySpec::parse("greedy"), cfg);
    Transcript t = play_game(cfg, *cop, *robber, 1, 2);
    CHECK(t.outcome.winner == Outcome::CopsWin);
    CHECK(t.outcome.capture_round == 1);
}

TEST_CASE("zero cops: robber always wins") {
    for (int n : {1, 2, 3, 4, 7, 10}) {
        GameConfig cfg{n, 0};
        auto cop = make_cop_strategy(CopStrategySpec::parse("uniform"), cfg);
        auto robber = make_robber_strategy(RobberStrategySpec::parse("random"), cfg);
        Transcript t = play_game(cfg, *cop, *robber, 7, 8);
        CHECK(t.outcome.winner == Outcome::RobberWins);
    }
}

TEST_CASE("play_game is deterministic for fixed seeds") {
    GameConfig cfg{10, 40};
    auto cop = make_cop_strategy(CopStrategySpec::parse("paper:t=3"), cfg);
    auto robber = make_robber_strategy(RobberStrategySpec::parse("greedy"), cfg);
    Transcript a = play_game(cfg, *cop, *robber, 11, 22);
    Transcript b = play_game(cfg, *cop, *robber, 11, 22);
    CHECK(serialize_transcript(a) == serialize_transcript(b));
}

TEST_CASE("transcript invariants and replay over random games") {
    for (uint64_t seed = 0; seed < 30; ++seed) {
        const int n = 4 + int(seed % 9);
        GameConfig cfg{n, 12};
        auto cop = make_cop_strategy(CopStrategySpec::parse(seed % 2 ? "uniform" : "paper"), cfg);
        auto robber =
            make_robber_strategy(RobberStrategySpec::parse(seed % 3 ? "greedy" : "random"), cfg);
        Transcript t = play_game(cfg, *cop, *robber, seed, seed ^ 0xabcd);

        // Survivor counts never increase; capture only at the middle round.
        int prev = cfg.cop_count;
        for (const RoundRecord& r : t.rounds) {
            CHECK(r.survivors_mid <= prev);
            CHECK(r.survivors <= r.survivors_mid);
            prev = r.survivors;
        }
        if (t.outcome.winner == Outcome::CopsWin)
            CHECK(t.outcome.capture_round == cfg.middle_level());

        // Round-trip through the wire format, then replay.
        Transcript parsed = parse_transcript(serialize_transcript(t));
        CHECK(serialize_transcript(parsed) == serialize_transcript(t));
        Outcome replayed = replay_transcript(parsed);
        CHECK(replayed.winner == t.outcome.winner);
    }
}

TEST_CASE("illegal strategy moves abort with a diagnostic") {
    struct BadRobber final : RobberStrategy {
        std::string name() const override { return "bad"; }
        int choose(const GameState&, Rng&) override { return 99; }
        std::unique_ptr<RobberStrategy> clone() const override {
            return std::make_unique<BadRobber>(*this);
        }
    };
    GameConfig cfg{4, 1};
    auto cop = make_cop_strategy(CopStrategySpec::parse("uniform"), cfg);
    BadRobber bad;
    CHECK_THROWS_WITH_AS(play_game(cfg, *cop, bad, 1, 2), doctest::Contains("bad"), GameError);
}
