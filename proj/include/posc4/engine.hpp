#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "posc4/board.hpp"
#include "posc4/params.hpp"
#include "posc4/strategies.hpp"
#include "posc4/threats.hpp"

namespace posc4 {

enum class GameKind : std::uint8_t { C4Game, PartialMinDegree };

enum class Winner : std::uint8_t { Maker, BreakerByExhaustion, PreconditionFailure };

inline const char* to_string(Winner w) {
    switch (w) {
        case Winner::Maker: return "maker";
        case Winner::BreakerByExhaustion: return "breaker-by-exhaustion";
        case Winner::PreconditionFailure: return "precondition-failure";
    }
    return "?";
}

struct MoveRecord {
    std::uint32_t round;
    Ownership player;
    EdgeId edge;
};

struct GameResult {
    Winner winner = Winner::BreakerByExhaustion;
    std::uint32_t rounds = 0;
    std::uint32_t maker_moves = 0;
    std::optional<std::array<Vertex, 4>> winning_c4;
    std::optional<std::uint32_t> phase_transition_round;
    std::optional<std::uint32_t> x_size_at_transition;
    std::optional<std::uint32_t> maker_moves_at_transition;
    bool precondition_failure = false;
};

struct Transcript {
    GameParams params;
    GameKind kind = GameKind::C4Game;
    std::vector<MoveRecord> moves;
    GameResult result;
};

struct PlayOutcome {
    Transcript transcript;
    // Copy of the board the moment the d-degree strategy first stopped,
    // taken before the Maker move of that round. This is the snapshot all
    // lemma-level analysis runs on.
    std::optional<BoardState> transition_snapshot;
    std::optional<BoardState> final_board;
};

// Referee. Alternates one Maker claim against up to q Breaker claims. A C4
// game ends as soon as a Maker claim completes a 4-cycle or the board is
// exhausted; a partial-minimum-degree game ends when the d-degree strategy
// stops, Maker winning iff |X| >= ceil(beta n) at that moment.
//
// Identical (params, strategies, seed) produce bit-identical transcripts.
inline PlayOutcome play_game(const GameParams& params, MakerStrategy& maker,
                             BreakerStrategy& breaker, GameKind kind = GameKind::C4Game) {
    if (!params.force) {
        const auto violations = validate_params(params);
        if (!violations.empty()) {
            std::string msg = "invalid parameters:";
            for (const auto& v : violations) msg += " [" + v + "]";
            throw InvalidParameterError(msg);
        }
    }

    BoardState board(params.n);
    const std::uint32_t n = params.n;
    const std::uint32_t d_hat = params.d_hat();

    PlayOutcome out;
    Transcript& t = out.transcript;
    t.params = params;
    t.kind = kind;
    GameResult& result = t.result;

    std::uint32_t round = 0;
    std::uint32_t maker_moves = 0;
    std::uint64_t x_count = 0; // vertices with maker degree >= d_hat

    const auto claim_maker = [&](const Edge& e) {
        const std::array<std::uint32_t, 2> before{board.maker_degree(e.u), board.maker_degree(e.v)};
        board.claim(Ownership::Maker, e);
        ++maker_moves;
        t.moves.push_back({round, Ownership::Maker, edge_id(e, n)});
        for (int s = 0; s < 2; ++s) {
            const std::uint32_t deg = before[static_cast<std::size_t>(s)];
            if (deg < d_hat && deg + 1 >= d_hat) ++x_count;
        }
    };

    const auto record_transition = [&]() {
        out.transition_snapshot = board;
        result.phase_transition_round = round;
        result.maker_moves_at_transition = maker_moves;
        result.x_size_at_transition = static_cast<std::uint32_t>(x_count);
    };

    const auto breaker_turn = [&]() {
        const std::uint64_t budget = std::min<std::uint64_t>(params.q, board.unclaimed_count());
        if (budget == 0) return;
        auto moves = breaker.next_moves(board, budget);
        if (moves.size() > budget)
            throw StrategyFaultError("breaker returned " + std::to_string(moves.size()) +
                                     " edges, budget " + std::to_string(budget));
        for (const Edge& e : moves) {
            if (board.owner(edge_id(e, n)) != Ownership::Unclaimed)
                throw StrategyFaultError("breaker chose non-unclaimed edge {" +
                                         std::to_string(e.u) + "," + std::to_string(e.v) + "}");
            board.claim(Ownership::Breaker, e);
            t.moves.push_back({round, Ownership::Breaker, edge_id(e, n)});
        }
    };

    bool game_over = false;
    while (!game_over) {
        ++round;
        if (params.breaker_first) breaker_turn();

        if (board.unclaimed_count() == 0) {
            result.winner =
                maker.degenerate() ? Winner::PreconditionFailure : Winner::BreakerByExhaustion;
            break;
        }

        const MakerDecision decision = maker.next_move(board);
        if (decision.transitioned_now && !result.phase_transition_round) record_transition();

        if (!decision.move) {
            if (kind != GameKind::PartialMinDegree)
                throw StrategyFaultError("maker passed with unclaimed edges on the board");
            result.winner = (x_count >= params.x_target()) ? Winner::Maker
                                                           : Winner::BreakerByExhaustion;
            break;
        }

        const Edge e = *decision.move;
        if (board.owner(edge_id(e, n)) != Ownership::Unclaimed)
            throw StrategyFaultError("maker chose non-unclaimed edge {" + std::to_string(e.u) +
                                     "," + std::to_string(e.v) + "}, owner " +
                                     to_string(board.owner(edge_id(e, n))));

        if (kind == GameKind::C4Game && completes_c4(board, e)) {
            const auto witness = find_c4_witness(board, e);
            claim_maker(e);
            result.winner = Winner::Maker;
            result.winning_c4 = witness;
            break;
        }
        claim_maker(e);

        if (!params.breaker_first) breaker_turn();
        if (board.unclaimed_count() == 0) {
            result.winner =
                maker.degenerate() ? Winner::PreconditionFailure : Winner::BreakerByExhaustion;
            game_over = true;
        }
    }

    result.rounds = round;
    result.maker_moves = maker_moves;
    result.precondition_failure = maker.degenerate();
    out.final_board = std::move(board);
    return out;
}

inline PlayOutcome play_game(const GameParams& params, std::string_view maker_name,
                             std::string_view breaker_name) {
    auto maker = make_maker(maker_name, params);
    auto breaker = make_breaker(breaker_name, params);
    const GameKind kind = maker->name() == "ddegree" ? GameKind::PartialMinDegree
                                                     : GameKind::C4Game;
    return play_game(params, *maker, *breaker, kind);
}

// Rebuilds the board from a transcript, validating every claim.
inline BoardState replay_transcript_board(const Transcript& t) {
    BoardState board(t.params.n);
    for (const auto& rec : t.moves)
        board.claim(rec.player, edge_endpoints(rec.edge, t.params.n));
    return board;
}

// Board state at the canonical transition snapshot: every move strictly
// before the Maker move of the transition round. Works for both move orders,
// and for partial-minimum-degree transcripts (which have no Maker move in
// that round) it replays everything.
inline BoardState replay_to_transition(const Transcript& t) {
    if (!t.result.phase_transition_round)
        throw GameError("transcript lacks a transition marker");
    const std::uint32_t tr = *t.result.phase_transition_round;
    BoardState board(t.params.n);
    for (const auto& rec : t.moves) {
        if (rec.player == Ownership::Maker && rec.round == tr) break;
        board.claim(rec.player, edge_endpoints(rec.edge, t.params.n));
    }
    return board;
}

// Structural checks on a finished transcript: round structure respects the
// bias, claims are legal in order, and the reported result is consistent
// with the replayed board. Empty result means the transcript verifies.
inline std::vector<std::string> verify_transcript(const Transcript& t) {
    std::vector<std::string> issues;
    BoardState board(t.params.n);
    std::uint32_t maker_moves = 0;
    std::vector<std::uint32_t> maker_in_round, breaker_in_round;
    for (const auto& rec : t.moves) {
        if (rec.round == 0 || rec.round > t.result.rounds) {
            issues.push_back("move with round " + std::to_string(rec.round) + " out of range");
            continue;
        }
        if (maker_in_round.size() < rec.round) {
            maker_in_round.resize(rec.round, 0);
            breaker_in_round.resize(rec.round, 0);
        }
        try {
            board.claim(rec.player, edge_endpoints(rec.edge, t.params.n));
        } catch (const GameError& e) {
            issues.push_back(std::string("illegal replayed move: ") + e.what());
            continue;
        }
        if (rec.player == Ownership::Maker) {
            ++maker_moves;
            ++maker_in_round[rec.round - 1];
        } else {
            ++breaker_in_round[rec.round - 1];
        }
    }
    for (std::size_t r = 0; r < maker_in_round.size(); ++r) {
        if (maker_in_round[r] > 1)
            issues.push_back("round " + std::to_string(r + 1) + " has more than one maker move");
        if (breaker_in_round[r] > t.params.q)
            issues.push_back("round " + std::to_string(r + 1) + " exceeds breaker bias");
    }
    if (maker_moves != t.result.maker_moves)
        issues.push_back("maker move count mismatch");
    if (t.result.winner == Winner::Maker && t.kind == GameKind::C4Game) {
        if (!t.result.winning_c4) {
            issues.push_back("maker win without winning_c4");
        } else {
            const auto& c = *t.result.winning_c4;
            for (int i = 0; i < 4; ++i) {
                const Edge e = make_edge(c[static_cast<std::size_t>(i)],
                                         c[static_cast<std::size_t>((i + 1) % 4)]);
                if (board.owner(edge_id(e, t.params.n)) != Ownership::Maker)
                    issues.push_back("winning_c4 edge not owned by maker");
            }
        }
    }
    return issues;
}

} // namespace posc4
