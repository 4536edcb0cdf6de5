#include "cubecop/strategy.hpp"

#include <algorithm>
#include <cassert>
#include <unordered_map>

#include "cubecop/solver.hpp"

namespace cubecop {

// ---------------------------------------------------------------- primitives

int greedy_robber_choice(const GameState& state) {
    if (state.phase != Phase::RobberToMove)
        throw GameError("greedy_robber_choice: not the robber's half-move");
    const VertexSet r = state.robber;
    if (r.empty()) throw GameError("greedy_robber_choice: empty robber set");

    const std::array<int, 64> h = evasion_histogram(state.cops);
    int best = -1, best_count = -1;
    for (int e : r.elements()) {
        int c = h[size_t(e - 1)];
        if (c > best_count) {
            best_count = c;
            best = e;
        }
    }
    // Final even-n move: among maximal evaders, prefer an unoccupied middle set.
    const bool final_even = !state.cfg.odd() && state.round == state.cfg.robber_rounds();
    if (final_even) {
        for (int e : r.elements()) {
            if (h[size_t(e - 1)] != best_count) continue;
            VertexSet dest = r.without(e);
            bool occupied = false;
            for (const VertexSet& c : state.cops)
                if (c == dest) { occupied = true; break; }
            if (!occupied) return e;
        }
    }
    // Guarantee from the greedy analysis: best_count * (n-k+1) >= N_k * k.
    assert(best_count * (state.cfg.n - state.round + 1) >=
           int(state.cops.size()) * state.round);
    return best;
}

std::vector<int> uniform_cop_moves(const GameState& state, Rng& rng) {
    std::vector<int> out;
    out.reserve(state.cops.size());
    for (const VertexSet& s : state.cops) {
        VertexSet pool = state.robber.minus(s);
        assert(!pool.empty() && "R - S empty before the middle level");
        out.push_back(pool.nth_element(int(rng.below(uint32_t(pool.level())))));
    }
    return out;
}

std::vector<std::vector<int>> make_chain_commitments(const GameState& state, Rng& rng) {
    const int target_level = state.cfg.robber_rounds();
    std::vector<std::vector<int>> paths;
    paths.reserve(state.cops.size());
    for (const VertexSet& s : state.cops) {
        std::vector<int> pool = state.robber.minus(s).elements();
        const int need = target_level - s.level();
        assert(need >= 1 && need <= int(pool.size()) && "no reachable chain target");
        // Uniform random injection = uniform target plus uniform chain order.
        for (int j = 0; j < need; ++j) {
            std::swap(pool[size_t(j)],
                      pool[size_t(j) + rng.below(uint32_t(pool.size() - size_t(j)))]);
        }
        paths.emplace_back(pool.begin(), pool.begin() + need);
    }
    return paths;
}

std::vector<int> chain_cop_moves(const GameState& state) {
    if (!state.has_commitments())
        throw GameError("chain_cop_moves: no commitments installed");
    std::vector<int> out;
    out.reserve(state.cops.size());
    for (const auto& path : state.committed) {
        assert(!path.empty() && "commitment exhausted before the middle level");
        out.push_back(path.front());
    }
    return out;
}

unsigned long long full_cover_budget(const GameConfig& cfg) {
    const int k = cfg.robber_rounds();
    unsigned __int128 r = 1;
    for (int i = 1; i <= k; ++i) r = r * (unsigned)(cfg.n - k + i) / (unsigned)i;
    return (unsigned long long)r;
}

// ---------------------------------------------------------------- cop strategies

namespace {

class UniformCops final : public CopStrategy {
public:
    std::string name() const override { return "uniform"; }
    CopMove choose(const GameState& state, Rng& rng) override {
        return CopMove{uniform_cop_moves(state, rng), std::nullopt};
    }
    std::unique_ptr<CopStrategy> clone() const override {
        return std::make_unique<UniformCops>(*this);
    }
    int uniform_rounds(const GameConfig& cfg) const override { return cfg.robber_rounds(); }
};

// Uniform random growth for rounds k <= m - t, then one committed chain per cop.
class PaperCops final : public CopStrategy {
public:
    PaperCops(int switch_offset, bool pure_chain)
        : t_(switch_offset), pure_chain_(pure_chain) {}

    std::string name() const override {
        return pure_chain_ ? "chain" : "paper:t=" + std::to_string(t_);
    }

    CopMove choose(const GameState& state, Rng& rng) override {
        if (state.round <= uniform_rounds(state.cfg))
            return CopMove{uniform_cop_moves(state, rng), std::nullopt};
        if (!state.has_commitments()) {
            auto paths = make_chain_commitments(state, rng);
            std::vector<int> firsts;
            firsts.reserve(paths.size());
            for (const auto& p : paths) firsts.push_back(p.front());
            return CopMove{std::move(firsts), std::move(paths)};
        }
        return CopMove{chain_cop_moves(state), std::nullopt};
    }

    std::unique_ptr<CopStrategy> clone() const override {
        return std::make_unique<PaperCops>(*this);
    }

    int uniform_rounds(const GameConfig& cfg) const override {
        return pure_chain_ ? 0 : std::max(0, cfg.robber_rounds() - t_);
    }

private:
    int t_;
    bool pure_chain_;
};

// Routes distinct cops along fixed ascending chains to all middle-level sets.
class FullCover final : public CopStrategy {
public:
    FullCover(const GameConfig& cfg, bool capped) : capped_(capped) {
        const unsigned long long want = full_cover_budget(cfg);
        if (!capped && (unsigned long long)cfg.cop_count < want)
            throw ConfigError("cover: needs " + std::to_string(want) + " cops, have " +
                              std::to_string(cfg.cop_count));
        const unsigned long long materialize =
            std::min<unsigned long long>(want, (unsigned long long)cfg.cop_count);
        uint64_t mask = (1ULL << cfg.robber_rounds()) - 1;
        for (unsigned long long i = 0; i < materialize; ++i) {
            targets_.push_back(mask);
            mask = next_same_level(mask);
        }
    }

    std::string name() const override { return capped_ ? "cover:capped" : "cover"; }

    CopMove choose(const GameState& state, Rng&) override {
        if (!state.has_commitments()) {
            std::vector<std::vector<int>> paths;
            std::vector<int> firsts;
            for (size_t i = 0; i < state.cops.size(); ++i) {
                VertexSet t(targets_.empty() ? 0 : targets_[i % targets_.size()]);
                auto elems = t.minus(state.cops[i]).elements();
                paths.push_back(elems);
                firsts.push_back(elems.front());
            }
            return CopMove{std::move(firsts), std::move(paths)};
        }
        return CopMove{chain_cop_moves(state), std::nullopt};
    }

    std::unique_ptr<CopStrategy> clone() const override {
        return std::make_unique<FullCover>(*this);
    }
    bool deterministic() const override { return true; }

private:
    std::vector<uint64_t> targets_;
    bool capped_;
};

// ---------------------------------------------------------------- robber strategies

class GreedyRobber final : public RobberStrategy {
public:
    std::string name() const override { return "greedy"; }
    int choose(const GameState& state, Rng&) override { return greedy_robber_choice(state); }
    std::unique_ptr<RobberStrategy> clone() const override {
        return std::make_unique<GreedyRobber>(*this);
    }
};

class RandomRobber final : public RobberStrategy {
public:
    std::string name() const override { return "random"; }
    int choose(const GameState& state, Rng& rng) override {
        return state.robber.nth_element(int(rng.below(uint32_t(state.robber.level()))));
    }
    std::unique_ptr<RobberStrategy> clone() const override {
        return std::make_unique<RandomRobber>(*this);
    }
};

// Full-recursion robber. Minimax treats future cop replies as worst case;
// Known rolls the actual (deterministic) opponent strategy forward.
class LookaheadRobber final : public RobberStrategy {
public:
    LookaheadRobber(RobberStrategySpec spec, const GameConfig& cfg, const CopStrategy* opponent)
        : spec_(spec) {
        if (cfg.n > spec.exhaustive_cap)
            throw ConfigError("lookahead: n exceeds the exhaustive-search cap");
        if (spec.model == RobberStrategySpec::Known) {
            if (!opponent || !opponent->deterministic())
                throw ConfigError("lookahead:known requires a deterministic cop strategy");
            opponent_ = opponent->clone();
        }
    }
    LookaheadRobber(const LookaheadRobber& o) : spec_(o.spec_) {
        if (o.opponent_) opponent_ = o.opponent_->clone();
    }

    std::string name() const override {
        return spec_.model == RobberStrategySpec::Known ? "lookahead:known" : "lookahead:minimax";
    }

    int choose(const GameState& state, Rng&) override {
        int fallback = state.robber.min_element();
        for (int e : state.robber.elements()) {
            auto [next, outcome] = apply_robber_move(state, e);
            bool cops_win;
            if (outcome) {
                cops_win = outcome->winner == Outcome::CopsWin;
            } else if (next.phase == Phase::Strike) {
                cops_win = final_cop_strike(next).winner == Outcome::CopsWin;
            } else {
                cops_win = spec_.model == RobberStrategySpec::Known
                               ? known_cops_win(next)
                               : GameValue{}.cops_win(next);
            }
            if (!cops_win) return e;
        }
        return fallback;
    }

    std::unique_ptr<RobberStrategy> clone() const override {
        return std::make_unique<LookaheadRobber>(*this);
    }

private:
    bool known_cops_win(const GameState& state) {
        if (state.phase == Phase::Strike)
            return final_cop_strike(state).winner == Outcome::CopsWin;
        uint64_t h = 1469598103934665603ULL ^ (uint64_t(state.round) << 1) ^ state.robber.bits;
        for (const VertexSet& c : state.cops) {
            h ^= c.bits + 0x9e3779b97f4a7c15ULL;
            h *= 1099511628211ULL;
        }
        if (auto it = known_memo_.find(h); it != known_memo_.end()) return it->second;

        bool result;
        if (state.phase == Phase::CopsToMove) {
            Rng dummy(0);
            auto [next, evaded] = apply_cop_moves(state, opponent_->choose(state, dummy));
            (void)evaded;
            result = known_cops_win(next);
        } else {
            result = true;  // robber escapes if any deletion avoids capture
            for (int e : state.robber.elements()) {
                auto [next, outcome] = apply_robber_move(state, e);
                bool w = outcome ? outcome->winner == Outcome::CopsWin : known_cops_win(next);
                if (!w) { result = false; break; }
            }
        }
        known_memo_.emplace(h, result);
        return result;
    }

    RobberStrategySpec spec_;
    std::unique_ptr<CopStrategy> opponent_;
    std::unordered_map<uint64_t, bool> known_memo_;
};

}  // namespace

// ---------------------------------------------------------------- specs

std::string CopStrategySpec::str() const {
    switch (kind) {
        case Uniform: return "uniform";
        case Chain: return "chain";
        case Paper: return "paper:t=" + std::to_string(switch_offset);
        case FullCover: return capped ? "cover:capped" : "cover";
    }
    return "?";
}

CopStrategySpec CopStrategySpec::parse(const std::string& text) {
    CopStrategySpec s;
    if (text == "uniform") { s.kind = Uniform; return s; }
    if (text == "chain") { s.kind = Chain; return s; }
    if (text == "cover") { s.kind = FullCover; return s; }
    if (text == "cover:capped") { s.kind = FullCover; s.capped = true; return s; }
    if (text == "paper") { s.kind = Paper; return s; }
    if (text.rfind("paper:t=", 0) == 0) {
        s.kind = Paper;
        try {
            s.switch_offset = std::stoi(text.substr(8));
        } catch (const std::exception&) {
            throw ConfigError("bad cop strategy: " + text);
        }
        if (s.switch_offset < 1) throw ConfigError("paper: t must be >= 1");
        return s;
    }
    throw ConfigError("unknown cop strategy: " + text);
}

std::string RobberStrategySpec::str() const {
    switch (kind) {
        case Greedy: return "greedy";
        case Random: return "random";
        case Lookahead: return model == Known ? "lookahead:known" : "lookahead:minimax";
    }
    return "?";
}

RobberStrategySpec RobberStrategySpec::parse(const std::string& text) {
    RobberStrategySpec s;
    if (text == "greedy") { s.kind = Greedy; return s; }
    if (text == "random") { s.kind = Random; return s; }
    if (text == "lookahead" || text == "lookahead:minimax") {
        s.kind = Lookahead;
        s.model = Minimax;
        return s;
    }
    if (text == "lookahead:known") {
        s.kind = Lookahead;
        s.model = Known;
        return s;
    }
    throw ConfigError("unknown robber strategy: " + text);
}

std::unique_ptr<CopStrategy> make_cop_strategy(const CopStrategySpec& spec, const GameConfig& cfg) {
    switch (spec.kind) {
        case CopStrategySpec::Uniform: return std::make_unique<UniformCops>();
        case CopStrategySpec::Chain: return std::make_unique<PaperCops>(spec.switch_offset, true);
        case CopStrategySpec::Paper: return std::make_unique<PaperCops>(spec.switch_offset, false);
        case CopStrategySpec::FullCover: return std::make_unique<FullCover>(cfg, spec.capped);
    }
    throw ConfigError("bad cop strategy spec");
}

std::unique_ptr<RobberStrategy> make_robber_strategy(const RobberStrategySpec& spec,
                                                     const GameConfig& cfg) {
    return make_lookahead_robber(spec, cfg, nullptr);
}

std::unique_ptr<RobberStrategy> make_lookahead_robber(const RobberStrategySpec& spec,
                                                      const GameConfig& cfg,
                                                      const CopStrategy* opponent) {
    switch (spec.kind) {
        case RobberStrategySpec::Greedy: return std::make_unique<GreedyRobber>();
        case RobberStrategySpec::Random: return std::make_unique<RandomRobber>();
        case RobberStrategySpec::Lookahead:
            return std::make_unique<LookaheadRobber>(spec, cfg, opponent);
    }
    throw ConfigError("bad robber strategy spec");
}

}  // namespace cubecop
