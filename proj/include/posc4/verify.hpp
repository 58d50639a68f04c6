#pragma once

#include <algorithm>
#include <cstdint>
#include <map>
#include <numeric>
#include <sstream>
#include <string>
#include <vector>

#include "posc4/analysis.hpp"
#include "posc4/board.hpp"
#include "posc4/engine.hpp"
#include "posc4/rng.hpp"
#include "posc4/threats.hpp"

namespace posc4 {

struct SuiteResult {
    std::string name;
    bool pass = false;
    std::uint64_t checks = 0;
    std::uint64_t violations = 0;
    std::string detail;
};

// Random three-valued ownership assignment; exercises threat machinery on
// boards that need not come from legal play order (ownership of threats is
// what matters, not history).
inline BoardState random_board(std::uint32_t n, RandomSource& rng, std::uint32_t maker_pct = 30,
                               std::uint32_t breaker_pct = 30) {
    BoardState board(n);
    const std::uint64_t total = board.edge_count();
    for (EdgeId id = 0; id < total; ++id) {
        const std::uint64_t roll = rng.below(100);
        if (roll < maker_pct)
            board.claim(Ownership::Maker, edge_endpoints(id, n));
        else if (roll < maker_pct + breaker_pct)
            board.claim(Ownership::Breaker, edge_endpoints(id, n));
    }
    return board;
}

// Grows a C4-free Maker graph by attempting random edges and skipping any
// that would close a 4-cycle.
inline BoardState random_c4_free_board(std::uint32_t n, RandomSource& rng,
                                       std::uint32_t attempts = 0) {
    BoardState board(n);
    const std::uint64_t total = board.edge_count();
    if (attempts == 0) attempts = static_cast<std::uint32_t>(2 * total);
    for (std::uint32_t i = 0; i < attempts; ++i) {
        const EdgeId id = static_cast<EdgeId>(rng.below(total));
        if (board.owner(id) != Ownership::Unclaimed) continue;
        const Edge e = edge_endpoints(id, n);
        if (completes_c4(board, e)) continue;
        board.claim(Ownership::Maker, e);
    }
    return board;
}

// Exhaustive 4-subset C4 detector; the independent oracle for contains_c4.
inline bool contains_c4_bruteforce(const BoardState& board) {
    const std::uint32_t n = board.vertex_count();
    const auto m = [&](Vertex a, Vertex b) {
        return board.owner(edge_id(a, b, n)) == Ownership::Maker;
    };
    for (Vertex a = 0; a + 3 < n; ++a)
        for (Vertex b = a + 1; b + 2 < n; ++b)
            for (Vertex c = b + 1; c + 1 < n; ++c)
                for (Vertex d = c + 1; d < n; ++d) {
                    // three distinct cyclic wirings of {a,b,c,d}
                    if (m(a, b) && m(b, c) && m(c, d) && m(d, a)) return true;
                    if (m(a, b) && m(b, d) && m(d, c) && m(c, a)) return true;
                    if (m(a, c) && m(c, b) && m(b, d) && m(d, a)) return true;
                }
    return false;
}

// Threat symmetry: e in T_a iff a in T_e, exhaustively over all edge pairs.
inline SuiteResult suite_symmetry(std::uint32_t n, std::uint32_t reps, std::uint64_t seed) {
    SuiteResult res;
    res.name = "symmetry";
    RandomSource rng(splitmix64(seed ^ fnv1a64("symmetry")));
    for (std::uint32_t rep = 0; rep < reps; ++rep) {
        const BoardState board = random_board(n, rng);
        const std::uint64_t total = board.edge_count();
        std::vector<std::set<Edge>> threats(total);
        for (EdgeId id = 0; id < total; ++id)
            threats[id] = threats_of_oracle(board, edge_endpoints(id, n));
        for (EdgeId a = 0; a < total; ++a) {
            const Edge ea = edge_endpoints(a, n);
            for (EdgeId e = 0; e < total; ++e) {
                const Edge ee = edge_endpoints(e, n);
                ++res.checks;
                const bool fwd = threats[a].count(ee) > 0;
                const bool bwd = threats[e].count(ea) > 0;
                if (fwd != bwd) ++res.violations;
            }
        }
    }
    res.pass = res.violations == 0;
    return res;
}

// Closed-form threat count against the literal enumeration oracle, on boards
// that include C4s in M and edges owned by either player.
inline SuiteResult suite_oracle(std::uint32_t n_min, std::uint32_t n_max, std::uint32_t boards,
                                std::uint64_t seed) {
    SuiteResult res;
    res.name = "oracle";
    RandomSource rng(splitmix64(seed ^ fnv1a64("oracle")));
    for (std::uint32_t b = 0; b < boards; ++b) {
        const std::uint32_t n =
            n_min + static_cast<std::uint32_t>(rng.below(n_max - n_min + 1));
        const BoardState board = random_board(n, rng);
        const std::uint64_t total = board.edge_count();
        for (EdgeId id = 0; id < total; ++id) {
            const Edge e = edge_endpoints(id, n);
            ++res.checks;
            if (threat_count_fast(board, e) != threats_of_oracle(board, e).size())
                ++res.violations;
        }
    }
    res.pass = res.violations == 0;
    return res;
}

// On C4-free Maker graphs, every edge outside M with equal endpoint degrees
// d >= 1 has |T_e| in {d^2-1, d^2}, hitting d^2-1 exactly when the
// neighborhoods intersect. Edges inside M are tallied separately: under the
// literal threat definition they land on d^2-1 or d^2-2, so the lemma's
// conclusion does not extend to them; the detail string reports the counts.
inline SuiteResult suite_lemma26(std::uint32_t n_max, std::uint32_t graphs, std::uint64_t seed) {
    SuiteResult res;
    res.name = "lemma26";
    RandomSource rng(splitmix64(seed ^ fnv1a64("lemma26")));
    std::uint64_t in_m_checked = 0, in_m_outside_range = 0;
    for (std::uint32_t g = 0; g < graphs; ++g) {
        const std::uint32_t n = 6 + static_cast<std::uint32_t>(rng.below(n_max - 6 + 1));
        const BoardState board = random_c4_free_board(n, rng);
        const std::uint64_t total = board.edge_count();
        for (EdgeId id = 0; id < total; ++id) {
            const Edge e = edge_endpoints(id, n);
            const std::uint64_t d = board.maker_degree(e.u);
            if (d == 0 || d != board.maker_degree(e.v)) continue;
            const std::uint64_t count = threat_count_fast(board, e);
            const bool intersects =
                board.maker_adjacency(e.u).intersection_count(board.maker_adjacency(e.v)) > 0;
            if (board.owner(id) == Ownership::Maker) {
                ++in_m_checked;
                if (count != d * d - 1 && count != d * d) ++in_m_outside_range;
                continue;
            }
            ++res.checks;
            const bool in_range = count == d * d || count == d * d - 1;
            const bool low_iff_intersects = (count == d * d - 1) == intersects;
            if (!in_range || !low_iff_intersects) ++res.violations;
        }
    }
    res.pass = res.violations == 0;
    std::ostringstream os;
    os << "edges in M with equal degrees: " << in_m_checked << ", outside {d^2-1,d^2}: "
       << in_m_outside_range;
    res.detail = os.str();
    return res;
}

struct Lemma27Aggregate {
    std::uint64_t games = 0;
    std::array<std::uint64_t, 6> passes{}; // per part (i)..(vi)
    std::uint64_t da_positive = 0;
    std::vector<LemmaReport> reports;
};

// Plays partial-minimum-degree games with the d-degree Maker and evaluates
// the lemma report at every canonical transition snapshot.
inline Lemma27Aggregate lemma27_games(const GameParams& base,
                                      const std::vector<std::string>& breakers,
                                      std::uint32_t reps) {
    Lemma27Aggregate agg;
    for (const auto& breaker : breakers) {
        for (std::uint32_t rep = 0; rep < reps; ++rep) {
            GameParams params = base;
            params.seed = splitmix64(base.seed ^ fnv1a64(breaker) ^ (rep + 1));
            const auto outcome = play_game(params, "ddegree", breaker);
            if (!outcome.transition_snapshot)
                throw GameError("partial-minimum-degree game ended without a transition");
            const auto report = lemma_report(
                *outcome.transition_snapshot, params,
                outcome.transcript.result.maker_moves_at_transition.value_or(0));
            ++agg.games;
            const LemmaCheck* checks[6] = {&report.i,  &report.ii, &report.iii,
                                           &report.iv, &report.v,  &report.vi};
            for (int k = 0; k < 6; ++k)
                if (checks[k]->pass) ++agg.passes[static_cast<std::size_t>(k)];
            if (report.da_size > 0) ++agg.da_positive;
            agg.reports.push_back(report);
        }
    }
    return agg;
}

// Hard gate on parts (i)-(iv); (v) and (vi) are reported as diagnostics.
inline SuiteResult suite_lemma27(const GameParams& base, const std::vector<std::string>& breakers,
                                 std::uint32_t reps) {
    SuiteResult res;
    res.name = "lemma27";
    const auto agg = lemma27_games(base, breakers, reps);
    res.checks = agg.games * 4;
    for (int k = 0; k < 4; ++k)
        res.violations += agg.games - agg.passes[static_cast<std::size_t>(k)];
    res.pass = res.violations == 0;
    std::ostringstream os;
    os << "games=" << agg.games;
    const char* names[6] = {"i", "ii", "iii", "iv", "v", "vi"};
    for (int k = 0; k < 6; ++k)
        os << " " << names[k] << "=" << agg.passes[static_cast<std::size_t>(k)] << "/"
           << agg.games;
    os << " da>0: " << agg.da_positive << "/" << agg.games;
    res.detail = os.str();
    return res;
}

// The partial-minimum-degree conclusion on the same games: |X| >= ceil(beta n)
// within the move bound, for every adversary.
inline SuiteResult suite_theorem2(const GameParams& base,
                                  const std::vector<std::string>& breakers, std::uint32_t reps) {
    SuiteResult res;
    res.name = "theorem2";
    for (const auto& breaker : breakers) {
        for (std::uint32_t rep = 0; rep < reps; ++rep) {
            GameParams params = base;
            params.seed = splitmix64(base.seed ^ fnv1a64(breaker) ^ (rep + 1));
            const auto outcome = play_game(params, "ddegree", breaker);
            const auto check = theorem2_check(outcome.transcript);
            ++res.checks;
            if (!check.pass) ++res.violations;
            if (outcome.transcript.result.x_size_at_transition &&
                *outcome.transcript.result.x_size_at_transition != check.x_size)
                ++res.violations; // stored transition size must match the replayed one
        }
    }
    res.pass = res.violations == 0;
    return res;
}

} // namespace posc4
