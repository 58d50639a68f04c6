#pragma once

#include <cmath>
#include <cstdint>
#include <vector>

#include "posc4/board.hpp"
#include "posc4/engine.hpp"
#include "posc4/params.hpp"
#include "posc4/threats.hpp"

namespace posc4 {

struct LemmaCheck {
    double lhs = 0.0;
    double rhs = 0.0;
    bool pass = false;
};

// The six lemma-level quantities evaluated on a frozen board. Parts (v) and
// (vi) are asymptotic claims; below the asymptotic regime they are reported,
// not asserted. Booleans are recomputed from the set sizes, never stored
// independently of them.
struct LemmaReport {
    std::uint32_t n = 0;
    std::uint64_t b_size = 0;
    std::uint64_t x_size = 0;
    std::uint64_t x_target = 0;
    std::uint64_t d_size = 0;
    std::uint64_t dd_size = 0;
    std::uint64_t di_size = 0;
    std::uint64_t da_size = 0;
    bool m_contains_c4 = false;
    std::uint64_t maker_moves = 0;
    bool canonical = false; // snapshot taken exactly when the d-degree strategy stopped

    LemmaCheck i;   // |B| <= (c delta / 2) n^2
    LemmaCheck ii;  // |D| >= C(ceil(beta n), 2)
    LemmaCheck iii; // D \ D_d subset of D_i u D_a (partition identity)
    LemmaCheck iv;  // |D \ D_d| >= C(ceil(beta n), 2) - (c delta / 2) n^2
    LemmaCheck v;   // |B| >= |D_i| (1 - c/delta^2 - n^(-2/3))
    LemmaCheck vi;  // |D_a| > 0

    bool theorem2_ok = false; // |X| >= ceil(beta n)
    std::uint64_t move_bound = 0;
};

inline LemmaReport lemma_report(const BoardState& board, const GameParams& params,
                                std::uint64_t maker_moves, bool canonical = true) {
    LemmaReport r;
    const std::uint32_t n = board.vertex_count();
    const double nn = static_cast<double>(n);
    r.n = n;
    r.maker_moves = maker_moves;
    r.canonical = canonical;
    r.b_size = board.breaker_edge_count();
    const std::uint32_t d_hat = params.d_hat();
    for (Vertex v = 0; v < n; ++v)
        if (board.maker_degree(v) >= d_hat) ++r.x_size;
    r.x_target = params.x_target();

    const auto part = dangerous_partition(board, params);
    r.d_size = part.dangerous.size();
    r.dd_size = part.directly_deactivated.size();
    r.di_size = part.indirectly_deactivated.size();
    r.da_size = part.active.size();
    r.m_contains_c4 = contains_c4(board);

    const double half_cd_n2 = (params.c * params.delta / 2.0) * nn * nn;
    const double pairs_target =
        0.5 * static_cast<double>(r.x_target) * (static_cast<double>(r.x_target) - 1.0);

    r.i = {static_cast<double>(r.b_size), half_cd_n2,
           static_cast<double>(r.b_size) <= half_cd_n2};
    r.ii = {static_cast<double>(r.d_size), pairs_target,
            static_cast<double>(r.d_size) >= pairs_target};
    r.iii = {static_cast<double>(r.d_size - r.dd_size),
             static_cast<double>(r.di_size + r.da_size),
             r.d_size - r.dd_size == r.di_size + r.da_size};
    r.iv = {static_cast<double>(r.d_size - r.dd_size), pairs_target - half_cd_n2,
            static_cast<double>(r.d_size - r.dd_size) >= pairs_target - half_cd_n2};
    const double cover_factor =
        1.0 - params.c / (params.delta * params.delta) - std::pow(nn, -2.0 / 3.0);
    r.v = {static_cast<double>(r.b_size), static_cast<double>(r.di_size) * cover_factor,
           static_cast<double>(r.b_size) >= static_cast<double>(r.di_size) * cover_factor};
    r.vi = {static_cast<double>(r.da_size), 0.0, r.da_size > 0};

    r.theorem2_ok = r.x_size >= r.x_target;
    r.move_bound = params.degree_phase_move_bound();
    return r;
}

struct Theorem2Result {
    bool pass = false;
    std::uint64_t x_size = 0;
    std::uint64_t x_target = 0;
    std::uint64_t maker_moves = 0;
    std::uint64_t move_bound = 0;
    // Maker-degree histogram at the transition, the witness on failure:
    // histogram[d] = number of vertices with maker degree d.
    std::vector<std::uint64_t> degree_histogram;
};

// Verifies the partial-minimum-degree conclusion on a transcript: at the
// moment the d-degree strategy stopped, |X| >= ceil(beta n) and Maker had
// spent at most ceil((delta/2) n^(2-alpha)) + n moves. Throws when the
// transcript never reached the transition.
inline Theorem2Result theorem2_check(const Transcript& t) {
    const BoardState board = replay_to_transition(t); // throws without a marker
    const GameParams& p = t.params;
    Theorem2Result r;
    const std::uint32_t d_hat = p.d_hat();
    std::uint32_t max_deg = 0;
    for (Vertex v = 0; v < p.n; ++v) max_deg = std::max(max_deg, board.maker_degree(v));
    r.degree_histogram.assign(max_deg + 1, 0);
    for (Vertex v = 0; v < p.n; ++v) {
        const std::uint32_t d = board.maker_degree(v);
        ++r.degree_histogram[d];
        if (d >= d_hat) ++r.x_size;
    }
    r.x_target = p.x_target();
    r.maker_moves = board.maker_edge_count();
    r.move_bound = p.degree_phase_move_bound();
    r.pass = r.x_size >= r.x_target && r.maker_moves <= r.move_bound;
    return r;
}

} // namespace posc4
