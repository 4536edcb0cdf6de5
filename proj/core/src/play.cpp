#include "cubecop/play.hpp"

#include <algorithm>
#include <unordered_set>

namespace cubecop {

namespace {

// Exact integer test for B_k: evaded/N_k > (1+1/k^3) * k/(n-k+1),
// cross-multiplied to avoid float boundaries.
bool bk_exceeded(int n, int k, long long n_k, long long evaded) {
    __int128 lhs = (__int128)evaded * (n - k + 1) * ((long long)k * k * k);
    __int128 rhs = (__int128)k * n_k * ((long long)k * k * k + 1);
    return lhs > rhs;
}

void record_coverage(const GameState& before_move,
                     const std::vector<std::vector<int>>& paths,
                     const PlayOptions& opts,
                     Transcript& out) {
    const GameConfig& cfg = before_move.cfg;
    const int m = cfg.robber_rounds();
    const VertexSet r = before_move.robber;
    // |S| = C(|R|, m); bail out when enumerating it is unreasonable.
    unsigned long long family = 1;
    for (int i = 1; i <= m; ++i) {
        family = family * (unsigned long long)(r.level() - m + i) / (unsigned long long)i;
        if (family > opts.coverage_cap) return;
    }

    std::unordered_set<uint64_t> targets;
    for (size_t i = 0; i < before_move.cops.size(); ++i) {
        VertexSet t = before_move.cops[i];
        for (int e : paths[i]) t.add(e);
        targets.insert(t.bits);
    }

    // Enumerate level-m (even n) or level-(m+1) (odd n) subsets of R.
    auto elems = r.elements();
    const int pick = cfg.odd() ? m + 1 : m;
    long long uncovered = 0;
    std::vector<int> idx(size_t(pick), 0);
    for (int i = 0; i < pick; ++i) idx[size_t(i)] = i;
    for (;;) {
        VertexSet a;
        for (int i : idx) a.add(elems[size_t(i)]);
        if (cfg.odd()) {
            bool hit = false;
            for (int e : a.elements())
                if (targets.count(a.without(e).bits)) { hit = true; break; }
            if (!hit) ++uncovered;
        } else if (!targets.count(a.bits)) {
            ++uncovered;
        }
        // next combination
        int i = pick - 1;
        while (i >= 0 && idx[size_t(i)] == int(elems.size()) - pick + i) --i;
        if (i < 0) break;
        ++idx[size_t(i)];
        for (int j = i + 1; j < pick; ++j) idx[size_t(j)] = idx[size_t(j - 1)] + 1;
    }
    out.diagnostics.push_back(
        DiagnosticEvent{DiagnosticEvent::UncoveredTarget, before_move.round, uncovered, 0.0, 0.0});
}

}  // namespace

Transcript play_game(const GameConfig& cfg,
                     CopStrategy& cop,
                     RobberStrategy& robber,
                     uint64_t cop_seed,
                     uint64_t robber_seed,
                     const PlayOptions& opts) {
    cfg.validate();
    Transcript t;
    t.cfg = cfg;
    t.cop_seed = cop_seed;
    t.robber_seed = robber_seed;
    t.cop_name = cop.name();
    t.robber_name = robber.name();

    Rng cop_rng(cop_seed), robber_rng(robber_seed);
    GameState state = new_game(cfg);
    std::optional<Outcome> outcome;

    const int rounds = cfg.robber_rounds();
    for (int k = 1; k <= rounds && !outcome; ++k) {
        RoundRecord rec;
        rec.round = k;
        const int before = int(state.cops.size());

        CopMove move;
        try {
            move = cop.choose(state, cop_rng);
            if (opts.track_coverage && move.new_commitments && !state.has_commitments())
                record_coverage(state, *move.new_commitments, opts, t);
            auto [next, evaded_up] = apply_cop_moves(std::move(state), move);
            state = std::move(next);
            rec.evaded += evaded_up;
        } catch (const GameError& e) {
            throw GameError("cop strategy '" + cop.name() + "' illegal at round " +
                            std::to_string(k) + ": " + e.what());
        }
        rec.cop_choices = move.elements;
        rec.survivors_mid = int(state.cops.size());

        if (opts.track_bk && k <= cop.uniform_rounds(cfg) && !state.cops.empty()) {
            const std::array<int, 64> h = evasion_histogram(state.cops);
            int max_evade = 0;
            for (int e : state.robber.elements())
                max_evade = std::max(max_evade, h[size_t(e - 1)]);
            if (bk_exceeded(cfg.n, k, rec.survivors_mid, max_evade)) {
                double p = double(k) / double(cfg.n - k + 1);
                double eps = 1.0 / (double(k) * k * k);
                t.diagnostics.push_back(DiagnosticEvent{
                    DiagnosticEvent::BkExceeded, k, max_evade,
                    double(max_evade) / double(rec.survivors_mid), (1.0 + eps) * p});
            }
        }

        int deletion;
        try {
            deletion = robber.choose(state, robber_rng);
            rec.robber_evasions = evasion_count(state, deletion);
            auto [next, maybe_outcome] = apply_robber_move(std::move(state), deletion);
            state = std::move(next);
            outcome = maybe_outcome;
        } catch (const GameError& e) {
            throw GameError("robber strategy '" + robber.name() + "' illegal at round " +
                            std::to_string(k) + ": " + e.what());
        }
        rec.robber_deletion = deletion;
        rec.survivors = int(state.cops.size());
        rec.evaded = before - rec.survivors;
        t.rounds.push_back(std::move(rec));
    }

    if (!outcome) {
        if (cfg.odd()) {
            outcome = final_cop_strike(state);
        } else {
            // n with zero robber rounds cannot be even; guarded by validate().
            outcome = Outcome{Outcome::RobberWins, state.robber, std::nullopt};
        }
    }
    t.outcome = *outcome;
    return t;
}

}  // namespace cubecop
