#include "cubecop/solver.hpp"

#include <algorithm>
#include <cassert>

#include "cubecop/bounds.hpp"

namespace cubecop {

// ---------------------------------------------------------------- canonical form

CanonicalKey canonicalize(const GameState& state, int permutation_cap) {
    const auto elems = state.robber.elements();
    const int r = int(elems.size());
    if (r > permutation_cap)
        throw GameError("canonicalize: |R| exceeds the exhaustive permutation cap");

    // Refine by element frequency across the cop multiset, then take the
    // minimum relabeling over the residual permutation group.
    std::vector<int> freq(size_t(r), 0);
    for (const VertexSet& c : state.cops)
        for (int j = 0; j < r; ++j)
            if (c.contains(elems[size_t(j)])) ++freq[size_t(j)];

    std::vector<int> order(size_t(r), 0);
    for (int j = 0; j < r; ++j) order[size_t(j)] = j;
    std::stable_sort(order.begin(), order.end(),
                     [&](int a, int b) { return freq[size_t(a)] > freq[size_t(b)]; });

    // Blocks of equal frequency, in sorted order.
    std::vector<std::pair<size_t, size_t>> blocks;  // [begin, end) into order
    for (size_t b = 0; b < order.size();) {
        size_t e = b + 1;
        while (e < order.size() && freq[size_t(order[e])] == freq[size_t(order[b])]) ++e;
        blocks.emplace_back(b, e);
        b = e;
    }

    std::vector<uint64_t> best;
    std::vector<uint64_t> cur(state.cops.size());
    auto evaluate = [&]() {
        // order[i] holds the original position whose element maps to bit i.
        int newbit[64];
        for (int i = 0; i < r; ++i) newbit[order[size_t(i)]] = i;
        for (size_t c = 0; c < state.cops.size(); ++c) {
            uint64_t m = 0;
            for (int j = 0; j < r; ++j)
                if (state.cops[c].contains(elems[size_t(j)])) m |= 1ULL << newbit[j];
            cur[c] = m;
        }
        std::sort(cur.begin(), cur.end());
        if (best.empty() || cur < best) best = cur;
    };

    // Odometer over per-block permutations.
    auto recurse = [&](auto&& self, size_t bi) -> void {
        if (bi == blocks.size()) {
            evaluate();
            return;
        }
        auto [b, e] = blocks[bi];
        std::sort(order.begin() + long(b), order.begin() + long(e));
        do {
            self(self, bi + 1);
        } while (std::next_permutation(order.begin() + long(b), order.begin() + long(e)));
    };
    recurse(recurse, 0);

    CanonicalKey key;
    key.words.reserve(best.size() + 1);
    key.words.push_back(uint64_t(state.cfg.n) | (uint64_t(r) << 8) |
                        (uint64_t(state.round) << 16) | (uint64_t(state.phase) << 24));
    key.words.insert(key.words.end(), best.begin(), best.end());
    return key;
}

// ---------------------------------------------------------------- covering test

namespace {

// Kuhn's augmenting paths: can every target be matched to a distinct cop
// whose set it contains?
bool saturating_matching(const std::vector<uint64_t>& targets,
                         const std::vector<VertexSet>& cops) {
    const size_t nt = targets.size(), nc = cops.size();
    if (nc < nt) return false;
    std::vector<std::vector<int>> adj(nt);
    for (size_t a = 0; a < nt; ++a) {
        for (size_t c = 0; c < nc; ++c)
            if ((cops[c].bits & ~targets[a]) == 0) adj[a].push_back(int(c));
        if (adj[a].empty()) return false;
    }
    std::vector<int> match_cop(nc, -1);
    std::vector<char> seen(nc);
    auto augment = [&](auto&& self, int a) -> bool {
        for (int c : adj[size_t(a)]) {
            if (seen[size_t(c)]) continue;
            seen[size_t(c)] = 1;
            if (match_cop[size_t(c)] < 0 || self(self, match_cop[size_t(c)])) {
                match_cop[size_t(c)] = a;
                return true;
            }
        }
        return false;
    };
    for (size_t a = 0; a < nt; ++a) {
        std::fill(seen.begin(), seen.end(), 0);
        if (!augment(augment, int(a))) return false;
    }
    return true;
}

std::vector<uint64_t> level_subsets(VertexSet r, int k) {
    std::vector<uint64_t> out;
    auto elems = r.elements();
    if (k < 0 || k > int(elems.size())) return out;
    std::vector<int> idx(size_t(k), 0);
    for (int i = 0; i < k; ++i) idx[size_t(i)] = i;
    for (;;) {
        uint64_t m = 0;
        for (int i : idx) m |= 1ULL << (elems[size_t(i)] - 1);
        out.push_back(m);
        int i = k - 1;
        while (i >= 0 && idx[size_t(i)] == int(elems.size()) - k + i) --i;
        if (i < 0) break;
        ++idx[size_t(i)];
        for (int j = i + 1; j < k; ++j) idx[size_t(j)] = idx[size_t(j - 1)] + 1;
    }
    return out;
}

}  // namespace

bool GameValue::covering_assignment_exists(const GameState& state) const {
    const int m = state.cfg.robber_rounds();
    const int r = state.robber.level();
    if (m == 0) return !state.cops.empty();
    // |S| = C(r, m); only worth trying when the cops could cover it all.
    BigInt family = binomial(r, m);
    if (family > 5000 || BigInt(state.cops.size()) < family) return false;
    return saturating_matching(level_subsets(state.robber, m), state.cops);
}

void GameValue::check_budget() const {
    if (memo_.size() > opts_.memo_limit)
        throw BudgetExhausted("solver: transposition table limit reached");
    if (opts_.deadline && (stats_.nodes & 1023) == 0 &&
        std::chrono::steady_clock::now() > *opts_.deadline)
        throw BudgetExhausted("solver: time budget exhausted");
}

bool GameValue::cops_win(const GameState& state) {
    switch (state.phase) {
        case Phase::Strike:
            // Survivors are below the robber by invariant.
            return !state.cops.empty();
        case Phase::CopsToMove:
            return value_cop_node(state);
        case Phase::RobberToMove:
            return value_robber_node(state);
        case Phase::Finished:
            throw GameError("cops_win: game already finished");
    }
    return false;
}

bool GameValue::value_robber_node(const GameState& state) {
    ++stats_.nodes;
    check_budget();
    if (state.cops.empty()) return false;
    if (covering_assignment_exists(state)) return true;

    const int m = state.cfg.robber_rounds();
    const bool last = state.round == m;
    for (int e : state.robber.elements()) {
        VertexSet r2 = state.robber.without(e);
        bool win;
        if (last && !state.cfg.odd()) {
            win = std::find(state.cops.begin(), state.cops.end(), r2) != state.cops.end();
        } else {
            GameState next;
            next.cfg = state.cfg;
            next.robber = r2;
            for (const VertexSet& c : state.cops)
                if (c.subset_of(r2)) next.cops.push_back(c);
            if (last) {
                // Odd n: strike round.
                win = !next.cops.empty();
            } else {
                next.round = state.round + 1;
                next.phase = Phase::CopsToMove;
                win = value_cop_node(next);
            }
        }
        if (!win) return false;  // the robber takes the escaping deletion
    }
    return true;
}

bool GameValue::value_cop_node(const GameState& state) {
    ++stats_.nodes;
    check_budget();
    if (state.cops.empty()) return false;

    CanonicalKey key;
    if (opts_.use_canonicalization) {
        key = canonicalize(state, opts_.permutation_cap);
    } else {
        key.words.push_back(uint64_t(state.cfg.n) | (uint64_t(state.robber.level()) << 8) |
                            (uint64_t(state.round) << 16) | (uint64_t(state.phase) << 24));
        key.words.push_back(state.robber.bits);
        for (const VertexSet& c : state.cops) key.words.push_back(c.bits);
        std::sort(key.words.begin() + 2, key.words.end());
    }
    if (auto it = memo_.find(key); it != memo_.end()) {
        ++stats_.memo_hits;
        return it->second;
    }

    bool result;
    const int m = state.cfg.robber_rounds();
    if (covering_assignment_exists(state)) {
        result = true;
    } else if (state.round == m && !state.cfg.odd()) {
        // The last cop move must occupy every middle set below the robber;
        // that is exactly a saturating matching, which just failed.
        result = false;
    } else {
        // Group identical cops; joint moves are multisets of choices per group.
        std::vector<std::pair<VertexSet, int>> groups;
        {
            auto sorted = state.cops;
            std::sort(sorted.begin(), sorted.end());
            for (const VertexSet& c : sorted) {
                if (!groups.empty() && groups.back().first == c)
                    ++groups.back().second;
                else
                    groups.emplace_back(c, 1);
            }
        }
        GameState next;
        next.cfg = state.cfg;
        next.round = state.round;
        next.phase = Phase::RobberToMove;
        next.robber = state.robber;
        next.cops.reserve(state.cops.size());

        result = false;
        auto enumerate = [&](auto&& self, size_t gi) -> bool {
            if (gi == groups.size()) return value_robber_node(next);
            auto [s, count] = groups[gi];
            auto options = state.robber.minus(s).elements();
            // Nondecreasing option indices: one multiset per joint assignment.
            std::vector<int> pick(size_t(count), 0);
            for (;;) {
                size_t base = next.cops.size();
                for (int i = 0; i < count; ++i)
                    next.cops.push_back(s.with(options[size_t(pick[size_t(i)])]));
                bool won = self(self, gi + 1);
                next.cops.resize(base);
                if (won) return true;
                int i = count - 1;
                while (i >= 0 && pick[size_t(i)] == int(options.size()) - 1) --i;
                if (i < 0) return false;
                int v = ++pick[size_t(i)];
                for (int j = i + 1; j < count; ++j) pick[size_t(j)] = v;
            }
        };
        result = enumerate(enumerate, 0);
    }
    memo_.emplace(std::move(key), result);
    return result;
}

// ---------------------------------------------------------------- search drivers

bool cops_win_with(int n, int cop_count, const GameValue::Options& opts) {
    GameConfig cfg{n, cop_count};
    GameValue gv(opts);
    return gv.cops_win(new_game(cfg));
}

SolveResult cop_number_exact(int n,
                             std::optional<int> max_cops,
                             std::optional<double> budget_seconds,
                             bool use_canonicalization) {
    SolveResult res;
    res.n = n;
    GameValue::Options opts;
    opts.use_canonicalization = use_canonicalization;
    if (budget_seconds)
        opts.deadline = std::chrono::steady_clock::now() +
                        std::chrono::microseconds(int64_t(*budget_seconds * 1e6));

    long long lo = lower_bound_ceil(n);
    BigInt upper_big = trivial_upper_bound(n);
    long long hi = upper_big > 1000000 ? 1000000 : upper_big.convert_to<long long>();
    if (max_cops) hi = std::min<long long>(hi, *max_cops);

    for (long long c = lo; c <= hi; ++c) {
        try {
            GameValue gv(opts);
            bool win = gv.cops_win(new_game(GameConfig{n, int(c)}));
            res.stats.nodes += gv.stats().nodes;
            res.stats.memo_hits += gv.stats().memo_hits;
            res.win_table[int(c)] = win;
            if (win) {
                res.cop_number = int(c);
                break;
            }
        } catch (const BudgetExhausted&) {
            res.win_table[int(c)] = std::nullopt;
            res.budget_exhausted = true;
            break;
        }
    }
    return res;
}

}  // namespace cubecop
