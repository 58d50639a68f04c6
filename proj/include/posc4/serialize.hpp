#pragma once

#include <charconv>
#include <cstdint>
#include <string>

#include <json.hpp>

#include "posc4/analysis.hpp"
#include "posc4/engine.hpp"

namespace posc4 {

// Shortest round-trip decimal form; deterministic and readable in CSV/JSON.
inline std::string format_double(double x) {
    char buf[64];
    const auto res = std::to_chars(buf, buf + sizeof(buf), x);
    return std::string(buf, res.ptr);
}

// Transcript JSON. The schema is a file-format contract:
//   {params:{n,q,c,delta,alpha,beta,seed},
//    moves:[{round,player:"M"|"B",edge:[u,v]}...],
//    result:{winner,rounds,maker_moves,winning_c4:[a,b,c,d]|null,
//            phase_transition_round,x_size}}
inline nlohmann::json transcript_to_json(const Transcript& t) {
    nlohmann::json j;
    j["params"] = {
        {"n", t.params.n},     {"q", t.params.q},         {"c", t.params.c},
        {"delta", t.params.delta}, {"alpha", t.params.alpha}, {"beta", t.params.beta},
        {"seed", t.params.seed},
    };
    nlohmann::json moves = nlohmann::json::array();
    for (const auto& m : t.moves) {
        const Edge e = edge_endpoints(m.edge, t.params.n);
        moves.push_back({{"round", m.round},
                         {"player", m.player == Ownership::Maker ? "M" : "B"},
                         {"edge", {e.u, e.v}}});
    }
    j["moves"] = std::move(moves);
    nlohmann::json result;
    result["winner"] = to_string(t.result.winner);
    result["rounds"] = t.result.rounds;
    result["maker_moves"] = t.result.maker_moves;
    if (t.result.winning_c4) {
        const auto& c = *t.result.winning_c4;
        result["winning_c4"] = {c[0], c[1], c[2], c[3]};
    } else {
        result["winning_c4"] = nullptr;
    }
    if (t.result.phase_transition_round)
        result["phase_transition_round"] = *t.result.phase_transition_round;
    else
        result["phase_transition_round"] = nullptr;
    if (t.result.x_size_at_transition)
        result["x_size"] = *t.result.x_size_at_transition;
    else
        result["x_size"] = nullptr;
    j["result"] = std::move(result);
    return j;
}

inline Transcript transcript_from_json(const nlohmann::json& j) {
    Transcript t;
    const auto& p = j.at("params");
    t.params.n = p.at("n").get<std::uint32_t>();
    t.params.q = p.at("q").get<std::uint64_t>();
    t.params.c = p.at("c").get<double>();
    t.params.delta = p.at("delta").get<double>();
    t.params.alpha = p.at("alpha").get<double>();
    t.params.beta = p.at("beta").get<double>();
    t.params.seed = p.at("seed").get<std::uint64_t>();
    for (const auto& m : j.at("moves")) {
        MoveRecord rec;
        rec.round = m.at("round").get<std::uint32_t>();
        rec.player = m.at("player").get<std::string>() == "M" ? Ownership::Maker
                                                              : Ownership::Breaker;
        const auto& e = m.at("edge");
        rec.edge = edge_id(e.at(0).get<Vertex>(), e.at(1).get<Vertex>(), t.params.n);
        t.moves.push_back(rec);
    }
    const auto& r = j.at("result");
    const std::string w = r.at("winner").get<std::string>();
    if (w == "maker")
        t.result.winner = Winner::Maker;
    else if (w == "precondition-failure")
        t.result.winner = Winner::PreconditionFailure;
    else
        t.result.winner = Winner::BreakerByExhaustion;
    t.result.rounds = r.at("rounds").get<std::uint32_t>();
    t.result.maker_moves = r.at("maker_moves").get<std::uint32_t>();
    if (!r.at("winning_c4").is_null()) {
        const auto& c = r.at("winning_c4");
        t.result.winning_c4 = {c.at(0).get<Vertex>(), c.at(1).get<Vertex>(),
                               c.at(2).get<Vertex>(), c.at(3).get<Vertex>()};
    }
    if (!r.at("phase_transition_round").is_null())
        t.result.phase_transition_round = r.at("phase_transition_round").get<std::uint32_t>();
    if (!r.at("x_size").is_null())
        t.result.x_size_at_transition = r.at("x_size").get<std::uint32_t>();
    return t;
}

inline nlohmann::json lemma_check_json(const LemmaCheck& c) {
    return {{"lhs", c.lhs}, {"rhs", c.rhs}, {"pass", c.pass}};
}

// One JSON object per snapshot.
inline nlohmann::json lemma_report_to_json(const LemmaReport& r) {
    nlohmann::json j;
    j["n"] = r.n;
    j["b_size"] = r.b_size;
    j["x_size"] = r.x_size;
    j["x_target"] = r.x_target;
    j["d_size"] = r.d_size;
    j["dd_size"] = r.dd_size;
    j["di_size"] = r.di_size;
    j["da_size"] = r.da_size;
    j["contains_c4"] = r.m_contains_c4;
    j["maker_moves"] = r.maker_moves;
    j["canonical"] = r.canonical;
    j["lemma"] = {{"i", lemma_check_json(r.i)},   {"ii", lemma_check_json(r.ii)},
                  {"iii", lemma_check_json(r.iii)}, {"iv", lemma_check_json(r.iv)},
                  {"v", lemma_check_json(r.v)},   {"vi", lemma_check_json(r.vi)}};
    j["theorem2"] = {{"x_size", r.x_size},
                     {"x_target", r.x_target},
                     {"maker_moves", r.maker_moves},
                     {"move_bound", r.move_bound},
                     {"pass", r.theorem2_ok}};
    return j;
}

} // namespace posc4
