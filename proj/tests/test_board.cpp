#include <catch2/catch_amalgamated.hpp>

#include "posc4/board.hpp"
#include "posc4/rng.hpp"

using namespace posc4;

namespace {

// Independent enumeration oracle: all pairs of K_n in row-major order.
std::vector<Edge> enumerate_pairs(std::uint32_t n) {
    std::vector<Edge> out;
    for (Vertex u = 0; u + 1 < n; ++u)
        for (Vertex v = u + 1; v < n; ++v) out.push_back({u, v});
    return out;
}

} // namespace

TEST_CASE("edge ids follow the canonical pair enumeration") {
    CHECK(edge_id(0, 1, 4) == 0);
    CHECK(edge_id(1, 0, 4) == 0); // canonicalization symmetry
    CHECK(edge_id(2, 3, 4) == 5); // last pair of C(4,2)=6

    for (std::uint32_t n : {4u, 5u, 9u, 16u, 37u}) {
        const auto pairs = enumerate_pairs(n);
        REQUIRE(pairs.size() == edge_count(n));
        for (EdgeId id = 0; id < pairs.size(); ++id) {
            CHECK(edge_id(pairs[id].u, pairs[id].v, n) == id);
            CHECK(edge_endpoints(id, n) == pairs[id]);
        }
    }
}

TEST_CASE("edge id rejects invalid input") {
    CHECK_THROWS_AS(edge_id(2, 2, 6), InvalidEdgeError);
    CHECK_THROWS_AS(edge_id(0, 6, 6), InvalidEdgeError);
    CHECK_THROWS_AS(edge_endpoints(static_cast<EdgeId>(edge_count(4)), 4), InvalidEdgeError);
    CHECK(edge_endpoints(0, 4) == Edge{0, 1});
    CHECK(edge_endpoints(5, 4) == Edge{2, 3});
}

TEST_CASE("new boards start unclaimed") {
    const BoardState b4(4);
    CHECK(b4.edge_count() == 6);
    CHECK(b4.unclaimed_count() == 6);

    const BoardState b10(10);
    CHECK(b10.edge_count() == 45);
    for (Vertex v = 0; v < 10; ++v) CHECK(b10.maker_degree(v) == 0);

    CHECK_THROWS_AS(BoardState(3), InvalidParameterError);
}

TEST_CASE("claims update adjacency and degrees") {
    BoardState board(6);
    board.claim(Ownership::Maker, 0, 1);
    CHECK(board.maker_degree(0) == 1);
    CHECK(board.maker_degree(1) == 1);
    CHECK(board.maker_edge_count() == 1);

    board.claim(Ownership::Maker, 0, 2);
    CHECK(board.maker_adjacency(0).to_vector() == std::vector<std::uint32_t>{1, 2});

    board.claim(Ownership::Breaker, 3, 4);
    CHECK(board.breaker_degree(3) == 1);
    CHECK(board.maker_degree(3) == 0);
    CHECK(board.audit().empty());
}

TEST_CASE("claiming a claimed edge names the prior owner") {
    BoardState board(4);
    board.claim(Ownership::Breaker, 0, 1);
    try {
        board.claim(Ownership::Maker, 0, 1);
        FAIL("expected IllegalMoveError");
    } catch (const IllegalMoveError& e) {
        CHECK(std::string(e.what()).find("breaker") != std::string::npos);
    }
}

TEST_CASE("desk-scale boards construct within the memory contract") {
    // n = 10^4 is the documented ceiling: one byte per edge ownership plus
    // bitmask adjacency
    BoardState big(10000);
    CHECK(big.edge_count() == 49995000);
    big.claim(Ownership::Maker, 0, 9999);
    big.claim(Ownership::Breaker, 1, 2);
    CHECK(big.maker_degree(9999) == 1);
    CHECK(big.owner(edge_id(1, 2, 10000)) == Ownership::Breaker);
    CHECK(big.unclaimed_count() == 49995000 - 2);

    CHECK_THROWS_AS(BoardState(100000), InvalidParameterError); // beyond 32-bit edge ids
}

TEST_CASE("ownership transitions are permanent and audited") {
    RandomSource rng(12345);
    for (int rep = 0; rep < 20; ++rep) {
        const std::uint32_t n = 5 + static_cast<std::uint32_t>(rng.below(10));
        BoardState board(n);
        const std::uint64_t total = board.edge_count();
        const std::uint64_t claims = rng.below(total + 1);
        for (std::uint64_t k = 0; k < claims; ++k) {
            const EdgeId id = static_cast<EdgeId>(rng.below(total));
            if (board.owner(id) != Ownership::Unclaimed) continue;
            const auto player = rng.below(2) == 0 ? Ownership::Maker : Ownership::Breaker;
            board.claim(player, edge_endpoints(id, n));
        }
        CHECK(board.audit().empty());

        // replaying the claim log onto a fresh board reproduces ownership
        BoardState fresh(n);
        for (const auto& rec : board.claim_log())
            fresh.claim(rec.player, edge_endpoints(rec.edge, n));
        bool same = true;
        for (EdgeId id = 0; id < total; ++id)
            if (fresh.owner(id) != board.owner(id)) same = false;
        CHECK(same);
    }
}
