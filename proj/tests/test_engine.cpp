#include <catch2/catch_amalgamated.hpp>

#include "posc4/engine.hpp"
#include "posc4/serialize.hpp"

using namespace posc4;

namespace {

GameParams forced(std::uint32_t n, std::uint64_t q, std::uint64_t seed = 7) {
    GameParams p;
    p.n = n;
    p.q = q;
    p.seed = seed;
    p.c = static_cast<double>(q) / std::pow(static_cast<double>(n), p.alpha);
    p.force = true;
    return p;
}

} // namespace

TEST_CASE("tiny boards finish within the edge budget") {
    const auto params = forced(4, 1);
    const auto outcome = play_game(params, "c4", "random");
    const auto& t = outcome.transcript;
    CHECK(t.moves.size() <= 6);
    CHECK(verify_transcript(t).empty());
}

TEST_CASE("a passive breaker loses to any maker") {
    auto params = forced(8, 1);
    const auto outcome = play_game(params, "c4", "pass");
    const auto& t = outcome.transcript;
    REQUIRE(t.result.winner == Winner::Maker);
    REQUIRE(t.result.winning_c4.has_value());
    CHECK(verify_transcript(t).empty());
    REQUIRE(outcome.final_board.has_value());
    CHECK(contains_c4(*outcome.final_board));

    // the reported cycle is Maker-owned
    const auto& c = *t.result.winning_c4;
    const BoardState board = replay_transcript_board(t);
    for (int i = 0; i < 4; ++i)
        CHECK(board.owner(edge_id(make_edge(c[i], c[(i + 1) % 4]), 8)) == Ownership::Maker);
}

TEST_CASE("identical inputs give bit-identical transcripts") {
    const auto params = forced(16, 2, 99);
    const auto a = play_game(params, "c4", "random");
    const auto b = play_game(params, "c4", "random");
    CHECK(transcript_to_json(a.transcript).dump() == transcript_to_json(b.transcript).dump());

    // replay reproduces the final ownership exactly
    const BoardState replayed = replay_transcript_board(a.transcript);
    REQUIRE(a.final_board.has_value());
    for (EdgeId id = 0; id < replayed.edge_count(); ++id)
        REQUIRE(replayed.owner(id) == a.final_board->owner(id));
}

TEST_CASE("round accounting respects the bias") {
    const auto params = forced(12, 3, 5);
    const auto outcome = play_game(params, "c4", "random");
    const auto& t = outcome.transcript;
    std::vector<std::uint32_t> breaker_per_round(t.result.rounds, 0);
    std::vector<std::uint32_t> maker_per_round(t.result.rounds, 0);
    for (const auto& m : t.moves) {
        REQUIRE(m.round >= 1);
        REQUIRE(m.round <= t.result.rounds);
        if (m.player == Ownership::Maker)
            ++maker_per_round[m.round - 1];
        else
            ++breaker_per_round[m.round - 1];
    }
    std::uint64_t breaker_total = 0;
    for (std::uint32_t r = 0; r < t.result.rounds; ++r) {
        CHECK(maker_per_round[r] <= 1);
        CHECK(breaker_per_round[r] <= params.q);
        breaker_total += breaker_per_round[r];
        CHECK(breaker_total <= params.q * static_cast<std::uint64_t>(r + 1));
    }
    CHECK(t.result.maker_moves <= t.result.rounds);
}

TEST_CASE("board exhaustion is a breaker win") {
    // q = 5 swallows the board after maker's first move: 1 + 5 = 6 edges
    const auto params = forced(4, 5);
    const auto outcome = play_game(params, "c4", "random");
    CHECK(outcome.transcript.result.winner == Winner::BreakerByExhaustion);
    REQUIRE(outcome.final_board.has_value());
    CHECK(outcome.final_board->unclaimed_count() == 0);
}

TEST_CASE("illegal strategy moves abort with a strategy fault") {
    struct Stubborn final : MakerStrategy {
        MakerDecision next_move(const BoardState& board) override {
            MakerDecision d;
            d.move = edge_endpoints(0, board.vertex_count());
            return d;
        }
        std::string_view name() const override { return "stubborn"; }
    };
    const auto params = forced(6, 1);
    Stubborn maker;
    auto breaker = make_breaker("pass", params);
    CHECK_THROWS_AS(play_game(params, maker, *breaker, GameKind::C4Game), StrategyFaultError);
}

TEST_CASE("invalid parameters are rejected unless forced") {
    GameParams bad;
    bad.n = 20;
    bad.q = 4;
    bad.c = 4.0 / std::pow(20.0, 2.0 / 3.0);
    CHECK_THROWS_AS(play_game(bad, "c4", "random"), InvalidParameterError);
    bad.force = true;
    CHECK_NOTHROW(play_game(bad, "c4", "random"));
}

TEST_CASE("partial minimum degree games run to the transition") {
    auto params = forced(50, 1, 3);
    const auto outcome = play_game(params, "ddegree", "random");
    const auto& t = outcome.transcript;
    REQUIRE(t.kind == GameKind::PartialMinDegree);
    REQUIRE(t.result.phase_transition_round.has_value());
    REQUIRE(outcome.transition_snapshot.has_value());

    // transition snapshot replays from the transcript marker
    const BoardState replayed = replay_to_transition(t);
    for (EdgeId id = 0; id < replayed.edge_count(); ++id)
        REQUIRE(replayed.owner(id) == outcome.transition_snapshot->owner(id));

    // the d-degree maker stops exactly when it claims its last edge, so the
    // snapshot counts
    CHECK(t.result.maker_moves_at_transition == t.result.maker_moves);

    // against a weak opponent at these sizes the partial degree target lands
    const auto x = t.result.x_size_at_transition;
    REQUIRE(x.has_value());
    if (*x >= params.x_target()) CHECK(t.result.winner == Winner::Maker);
}

TEST_CASE("breaker-first ordering is supported") {
    auto params = forced(10, 2, 11);
    params.breaker_first = true;
    const auto outcome = play_game(params, "c4", "random");
    const auto& t = outcome.transcript;
    CHECK(verify_transcript(t).empty());
    // in round 1 the breaker's records precede the maker's
    REQUIRE_FALSE(t.moves.empty());
    CHECK(t.moves.front().player == Ownership::Breaker);
}

TEST_CASE("transcripts round-trip through json") {
    const auto params = forced(10, 2, 13);
    const auto outcome = play_game(params, "c4", "deactivator");
    const auto j = transcript_to_json(outcome.transcript);
    const Transcript back = transcript_from_json(j);
    CHECK(transcript_to_json(back).dump() == j.dump());
    const BoardState a = replay_transcript_board(outcome.transcript);
    const BoardState b = replay_transcript_board(back);
    for (EdgeId id = 0; id < a.edge_count(); ++id) REQUIRE(a.owner(id) == b.owner(id));
}
