#include <benchmark/benchmark.h>

#include "cubecop/bounds.hpp"
#include "cubecop/montecarlo.hpp"
#include "cubecop/solver.hpp"

using namespace cubecop;

static void BM_PlayGameUniform(benchmark::State& state) {
    const int n = int(state.range(0));
    const int cops = int(state.range(1));
    GameConfig cfg{n, cops};
    auto cop = make_cop_strategy(CopStrategySpec::parse("uniform"), cfg);
    auto robber = make_robber_strategy(RobberStrategySpec::parse("greedy"), cfg);
    uint64_t seed = 0;
    for (auto _ : state) {
        Transcript t = play_game(cfg, *cop, *robber, seed, seed + 1);
        benchmark::DoNotOptimize(t.outcome);
        ++seed;
    }
}
BENCHMARK(BM_PlayGameUniform)->Args({10, 50})->Args({14, 200})->Args({20, 1000});

static void BM_PlayGamePaper(benchmark::State& state) {
    const int n = int(state.range(0));
    GameConfig cfg{n, int(state.range(1))};
    auto cop = make_cop_strategy(CopStrategySpec::parse("paper"), cfg);
    auto robber = make_robber_strategy(RobberStrategySpec::parse("greedy"), cfg);
    uint64_t seed = 0;
    for (auto _ : state) {
        Transcript t = play_game(cfg, *cop, *robber, seed, seed + 1);
        benchmark::DoNotOptimize(t.outcome);
        ++seed;
    }
}
BENCHMARK(BM_PlayGamePaper)->Args({16, 200})->Args({24, 1000});

static void BM_UniformMoves(benchmark::State& state) {
    GameConfig cfg{20, int(state.range(0))};
    GameState s = new_game(cfg);
    Rng rng(1);
    for (auto _ : state) {
        auto moves = uniform_cop_moves(s, rng);
        benchmark::DoNotOptimize(moves);
    }
}
BENCHMARK(BM_UniformMoves)->Arg(100)->Arg(1000);

static void BM_ChainCommitments(benchmark::State& state) {
    GameConfig cfg{int(state.range(0)), 100};
    GameState s = new_game(cfg);
    Rng rng(1);
    for (auto _ : state) {
        auto paths = make_chain_commitments(s, rng);
        benchmark::DoNotOptimize(paths);
    }
}
BENCHMARK(BM_ChainCommitments)->Arg(12)->Arg(20);

static void BM_SolveSmall(benchmark::State& state) {
    const int n = int(state.range(0));
    for (auto _ : state) {
        SolveResult r = cop_number_exact(n);
        benchmark::DoNotOptimize(r.cop_number);
    }
}
BENCHMARK(BM_SolveSmall)->Arg(3)->Arg(4)->Unit(benchmark::kMillisecond);

static void BM_Canonicalize(benchmark::State& state) {
    GameState s = new_game(GameConfig{8, 16});
    Rng rng(3);
    CopMove m{uniform_cop_moves(s, rng), {}};
    auto [s1, evaded] = apply_cop_moves(std::move(s), m);
    for (auto _ : state) {
        CanonicalKey k = canonicalize(s1);
        benchmark::DoNotOptimize(k);
    }
}
BENCHMARK(BM_Canonicalize);

static void BM_LowerBound(benchmark::State& state) {
    for (auto _ : state) {
        Rational r = lower_bound(int(state.range(0)));
        benchmark::DoNotOptimize(r);
    }
}
BENCHMARK(BM_LowerBound)->Arg(20)->Arg(60);

static void BM_Estimate(benchmark::State& state) {
    TrialConfig cfg;
    cfg.n = 10;
    cfg.cop_count = 50;
    cfg.cop = CopStrategySpec::parse("paper:t=3");
    cfg.robber = RobberStrategySpec::parse("greedy");
    cfg.trials = 1000;
    cfg.threads = 1;
    for (auto _ : state) {
        cfg.seed += 1;
        EstimateResult r = estimate_win_probability(cfg);
        benchmark::DoNotOptimize(r.wins);
    }
}
BENCHMARK(BM_Estimate)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
