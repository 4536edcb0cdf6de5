#include "cubecop/transcript_io.hpp"

#include <sstream>

namespace cubecop {

std::string serialize_transcript(const Transcript& t) {
    std::ostringstream out;
    out << "# cubecop transcript v1\n";
    out << "config n=" << t.cfg.n << " cops=" << t.cfg.cop_count << " cop=" << t.cop_name
        << " robber=" << t.robber_name << " cop_seed=" << t.cop_seed
        << " robber_seed=" << t.robber_seed << "\n";
    for (const RoundRecord& r : t.rounds) {
        out << "round " << r.round << " cops=";
        if (r.cop_choices.empty()) {
            out << "-";
        } else {
            for (size_t i = 0; i < r.cop_choices.size(); ++i)
                out << (i ? "," : "") << r.cop_choices[i];
        }
        out << " evaded=" << r.evaded << " del=" << r.robber_deletion
            << " survivors=" << r.survivors << "\n";
    }
    out << "outcome winner=" << (t.outcome.winner == Outcome::CopsWin ? "cops" : "robber")
        << " capture_round=";
    if (t.outcome.capture_round)
        out << *t.outcome.capture_round;
    else
        out << "-";
    out << "\n";
    return out.str();
}

namespace {

std::string field(const std::string& line, const std::string& key) {
    auto pos = line.find(key + "=");
    if (pos == std::string::npos)
        throw GameError("transcript: missing field '" + key + "' in: " + line);
    pos += key.size() + 1;
    auto end = line.find(' ', pos);
    return line.substr(pos, end == std::string::npos ? std::string::npos : end - pos);
}

}  // namespace

Transcript parse_transcript(const std::string& text) {
    std::istringstream in(text);
    std::string line;
    Transcript t;
    bool have_config = false;
    while (std::getline(in, line)) {
        if (line.empty() || line[0] == '#') continue;
        if (line.rfind("config ", 0) == 0) {
            t.cfg.n = std::stoi(field(line, "n"));
            t.cfg.cop_count = std::stoi(field(line, "cops"));
            t.cop_name = field(line, "cop");
            t.robber_name = field(line, "robber");
            t.cop_seed = std::stoull(field(line, "cop_seed"));
            t.robber_seed = std::stoull(field(line, "robber_seed"));
            have_config = true;
        } else if (line.rfind("round ", 0) == 0) {
            RoundRecord r;
            r.round = std::stoi(line.substr(6));
            std::string cops = field(line, "cops");
            if (cops != "-") {
                std::istringstream cs(cops);
                std::string tok;
                while (std::getline(cs, tok, ',')) r.cop_choices.push_back(std::stoi(tok));
            }
            r.evaded = std::stoi(field(line, "evaded"));
            r.robber_deletion = std::stoi(field(line, "del"));
            r.survivors = std::stoi(field(line, "survivors"));
            t.rounds.push_back(std::move(r));
        } else if (line.rfind("outcome ", 0) == 0) {
            t.outcome.winner =
                field(line, "winner") == "cops" ? Outcome::CopsWin : Outcome::RobberWins;
            std::string cr = field(line, "capture_round");
            if (cr != "-") t.outcome.capture_round = std::stoi(cr);
        } else {
            throw GameError("transcript: unrecognized line: " + line);
        }
    }
    if (!have_config) throw GameError("transcript: missing config line");
    return t;
}

Outcome replay_transcript(const Transcript& t) {
    GameState state = new_game(t.cfg);
    for (const RoundRecord& r : t.rounds) {
        auto [after_cops, evaded] = apply_cop_moves(state, CopMove{r.cop_choices, std::nullopt});
        (void)evaded;
        auto [after_robber, outcome] = apply_robber_move(after_cops, r.robber_deletion);
        state = std::move(after_robber);
        if (outcome) return *outcome;
    }
    if (state.phase == Phase::Strike) return final_cop_strike(state);
    return Outcome{Outcome::RobberWins, state.robber, std::nullopt};
}

}  // namespace cubecop
