#include <catch2/catch_amalgamated.hpp>

#include <set>

#include "posc4/threats.hpp"
#include "posc4/verify.hpp"

using namespace posc4;

namespace {

GameParams params_for(std::uint32_t n, double delta, std::uint64_t q) {
    GameParams p;
    p.n = n;
    p.q = q;
    p.delta = delta;
    p.force = true;
    return p;
}

} // namespace

TEST_CASE("threat sets match the definition figure") {
    // deg_M(a1)=3, deg_M(a2)=2, disjoint neighborhoods: six threats
    BoardState board(7);
    board.claim(Ownership::Maker, 0, 2);
    board.claim(Ownership::Maker, 0, 3);
    board.claim(Ownership::Maker, 0, 4);
    board.claim(Ownership::Maker, 1, 5);
    board.claim(Ownership::Maker, 1, 6);
    const Edge a{0, 1};
    const auto threats = threats_of_oracle(board, a);
    CHECK(threats.size() == 6);
    CHECK(threat_count_fast(board, a) == 6);

    // B = empty: uncovered = total
    CHECK(uncovered_threat_count(board, a) == 6);

    // all six threats claimed by Breaker, as drawn
    for (const Edge& t : threats) board.claim(Ownership::Breaker, t);
    CHECK(uncovered_threat_count(board, a) == 0);
}

TEST_CASE("two of six threats covered leaves four uncovered") {
    BoardState board(7);
    board.claim(Ownership::Maker, 0, 2);
    board.claim(Ownership::Maker, 0, 3);
    board.claim(Ownership::Maker, 0, 4);
    board.claim(Ownership::Maker, 1, 5);
    board.claim(Ownership::Maker, 1, 6);
    board.claim(Ownership::Breaker, 2, 5);
    board.claim(Ownership::Breaker, 3, 6);
    CHECK(uncovered_threat_count(board, Edge{0, 1}) == 4);
}

TEST_CASE("empty maker graph induces no threats") {
    BoardState board(6);
    CHECK(threats_of_oracle(board, Edge{0, 1}).empty());
    CHECK(threat_count_fast(board, Edge{0, 1}) == 0);
}

TEST_CASE("overlapping neighborhoods deduplicate threats") {
    // N_M(0) = {2,3}, N_M(1) = {2,4}: threats {2,4},{2,3},{3,4}
    BoardState board(6);
    board.claim(Ownership::Maker, 0, 2);
    board.claim(Ownership::Maker, 0, 3);
    board.claim(Ownership::Maker, 1, 2);
    board.claim(Ownership::Maker, 1, 4);
    const auto threats = threats_of_oracle(board, Edge{0, 1});
    const std::set<Edge> expected{Edge{2, 4}, Edge{2, 3}, Edge{3, 4}};
    CHECK(threats == expected);
    CHECK(threat_count_fast(board, Edge{0, 1}) == 3); // 2*2 - 1 - 0 - 0
}

TEST_CASE("classification thresholds and precedence") {
    // n=8, delta=1: threshold 8^(2/3) - 1 = 3
    BoardState board(8);
    board.claim(Ownership::Maker, 0, 2);
    board.claim(Ownership::Maker, 0, 3);
    board.claim(Ownership::Maker, 1, 4);
    const auto p2 = params_for(8, 1.0, 2);
    CHECK(threat_count_fast(board, Edge{0, 1}) == 2);
    CHECK(classify(board, Edge{0, 1}, p2) == ThreatClass::NotDangerous);

    board.claim(Ownership::Maker, 1, 5); // now |T| = 4
    CHECK(threat_count_fast(board, Edge{0, 1}) == 4);
    CHECK(classify(board, Edge{0, 1}, p2) == ThreatClass::Active); // 4 uncovered > q=2

    board.claim(Ownership::Breaker, 2, 4);
    board.claim(Ownership::Breaker, 2, 5);
    CHECK(uncovered_threat_count(board, Edge{0, 1}) == 2);
    CHECK(classify(board, Edge{0, 1}, p2) == ThreatClass::IndirectlyDeactivated);

    board.claim(Ownership::Breaker, 0, 1);
    CHECK(classify(board, Edge{0, 1}, p2) == ThreatClass::DirectlyDeactivated);
}

TEST_CASE("the dangerous threshold keeps the 2/3 exponent whatever alpha is") {
    GameParams p = params_for(8, 1.0, 2);
    const double base = p.threat_threshold();
    p.alpha = 0.5;
    CHECK(p.threat_threshold() == base);
    p.alpha = 0.9;
    CHECK(p.threat_threshold() == base);
}

TEST_CASE("threat stats separate covered, unclaimed and maker-owned") {
    BoardState board(8);
    board.claim(Ownership::Maker, 0, 2);
    board.claim(Ownership::Maker, 0, 3);
    board.claim(Ownership::Maker, 1, 4);
    board.claim(Ownership::Maker, 1, 5);
    board.claim(Ownership::Maker, 2, 4);   // a threat owned by Maker
    board.claim(Ownership::Breaker, 2, 5); // a threat owned by Breaker
    const auto s = threat_stats(board, Edge{0, 1}, params_for(8, 1.0, 1));
    CHECK(s.total == 4);
    CHECK(s.covered == 1);
    CHECK(s.uncovered == 2);
    CHECK(s.covered + s.uncovered <= s.total);
}

TEST_CASE("dangerous partition agrees with per-edge classification") {
    const auto p = params_for(8, 1.0, 1);

    BoardState empty(8);
    const auto none = dangerous_partition(empty, p);
    CHECK(none.dangerous.empty());
    CHECK(none.directly_deactivated.empty());
    CHECK(none.indirectly_deactivated.empty());
    CHECK(none.active.empty());

    RandomSource rng(99);
    for (int rep = 0; rep < 25; ++rep) {
        const BoardState board = random_board(8, rng);
        const auto part = dangerous_partition(board, p);
        CHECK(part.dangerous.size() == part.directly_deactivated.size() +
                                           part.indirectly_deactivated.size() +
                                           part.active.size());
        std::set<EdgeId> dd(part.directly_deactivated.begin(), part.directly_deactivated.end());
        std::set<EdgeId> di(part.indirectly_deactivated.begin(),
                            part.indirectly_deactivated.end());
        std::set<EdgeId> da(part.active.begin(), part.active.end());
        for (EdgeId id = 0; id < board.edge_count(); ++id) {
            const auto cls = classify(board, edge_endpoints(id, 8), p);
            CHECK((cls == ThreatClass::DirectlyDeactivated) == (dd.count(id) > 0));
            CHECK((cls == ThreatClass::IndirectlyDeactivated) == (di.count(id) > 0));
            CHECK((cls == ThreatClass::Active) == (da.count(id) > 0));
        }
    }
}

TEST_CASE("completes_c4 detects exactly the closing edges") {
    BoardState path(6);
    path.claim(Ownership::Maker, 0, 1);
    path.claim(Ownership::Maker, 1, 2);
    path.claim(Ownership::Maker, 2, 3);
    CHECK(completes_c4(path, Edge{0, 3}));
    const auto witness = find_c4_witness(path, Edge{0, 3});
    REQUIRE(witness.has_value());
    CHECK(*witness == std::array<Vertex, 4>{0, 1, 2, 3});

    BoardState tri(6);
    tri.claim(Ownership::Maker, 0, 1);
    tri.claim(Ownership::Maker, 1, 2);
    CHECK_FALSE(completes_c4(tri, Edge{0, 2})); // triangle, not C4
}

TEST_CASE("completes_c4 agrees with the brute-force detector") {
    RandomSource rng(7);
    for (int rep = 0; rep < 40; ++rep) {
        const std::uint32_t n = 6 + static_cast<std::uint32_t>(rng.below(7));
        BoardState board = random_c4_free_board(n, rng, 3 * n);
        REQUIRE_FALSE(contains_c4(board));
        for (EdgeId id = 0; id < board.edge_count(); ++id) {
            if (board.owner(id) != Ownership::Unclaimed) continue;
            const Edge e = edge_endpoints(id, n);
            BoardState with = board;
            with.claim(Ownership::Maker, e);
            CHECK(completes_c4(board, e) == contains_c4(with));
            CHECK(contains_c4(with) == contains_c4_bruteforce(with));
        }
    }
}

TEST_CASE("contains_c4 on canonical graphs and random boards") {
    BoardState empty(6);
    CHECK_FALSE(contains_c4(empty));

    BoardState cyc(6);
    cyc.claim(Ownership::Maker, 0, 1);
    cyc.claim(Ownership::Maker, 1, 2);
    cyc.claim(Ownership::Maker, 2, 3);
    cyc.claim(Ownership::Maker, 0, 3);
    CHECK(contains_c4(cyc));

    RandomSource rng(21);
    for (int rep = 0; rep < 30; ++rep) {
        const std::uint32_t n = 6 + static_cast<std::uint32_t>(rng.below(7));
        const BoardState board = random_board(n, rng, 25, 25);
        CHECK(contains_c4(board) == contains_c4_bruteforce(board));
    }
}

TEST_CASE("threat symmetry holds exhaustively on small boards") {
    const auto res = suite_symmetry(10, 8, 1234);
    CHECK(res.pass);
    CHECK(res.violations == 0);
}

TEST_CASE("fast count equals the oracle everywhere") {
    const auto res = suite_oracle(6, 14, 60, 99);
    CHECK(res.pass);
    CHECK(res.checks > 0);
}

TEST_CASE("equal-degree edges on C4-free graphs hit d^2 or d^2-1") {
    const auto res = suite_lemma26(14, 40, 2024);
    CHECK(res.pass);
    CHECK(res.checks > 0);
}
