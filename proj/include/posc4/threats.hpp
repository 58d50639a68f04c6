#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <set>
#include <vector>

#include "posc4/board.hpp"
#include "posc4/params.hpp"

namespace posc4 {

enum class ThreatClass : std::uint8_t {
    NotDangerous,
    DirectlyDeactivated,
    IndirectlyDeactivated,
    Active,
};

inline const char* to_string(ThreatClass c) {
    switch (c) {
        case ThreatClass::NotDangerous: return "not-dangerous";
        case ThreatClass::DirectlyDeactivated: return "directly-deactivated";
        case ThreatClass::IndirectlyDeactivated: return "indirectly-deactivated";
        case ThreatClass::Active: return "active";
    }
    return "?";
}

// Per-edge threat data. `covered` counts threats owned by Breaker and
// `uncovered` counts unclaimed threats; threats already owned by Maker are
// included in `total` only, so covered + uncovered <= total.
struct ThreatStats {
    Edge edge;
    std::uint64_t total = 0;
    std::uint64_t covered = 0;
    std::uint64_t uncovered = 0;
    ThreatClass cls = ThreatClass::NotDangerous;
};

// Threats induced by edge a = {a1,a2}: every edge {b1,b2} with b1 a Maker
// neighbor of a1 and b2 a Maker neighbor of a2, excluding a itself.
// Ownership of the threat edges is irrelevant to membership. This is the
// literal double enumeration and serves as ground truth for the closed-form
// count below.
inline std::set<Edge> threats_of_oracle(const BoardState& board, const Edge& a) {
    const std::uint32_t n = board.vertex_count();
    (void)edge_id(a, n); // validate
    std::set<Edge> out;
    const auto nbr1 = board.maker_adjacency(a.u).to_vector();
    const auto nbr2 = board.maker_adjacency(a.v).to_vector();
    for (Vertex b1 : nbr1) {
        for (Vertex b2 : nbr2) {
            if (b1 == b2) continue;
            const Edge b = make_edge(b1, b2);
            if (b == a) continue;
            out.insert(b);
        }
    }
    return out;
}

// |T_a| via set sizes: with A = N_M(a1), B' = N_M(a2), k = |A ∩ B'|:
//   |T_a| = |A||B'| - k - C(k,2) - [a in M].
// The k term removes degenerate pairs b1 = b2, the C(k,2) term removes the
// double-counted pairs lying entirely inside the intersection, and the last
// term removes a itself, which arises exactly when a is Maker's. Validated
// against threats_of_oracle in the test suite; the oracle is authoritative.
inline std::uint64_t threat_count_fast(const BoardState& board, const Edge& a) {
    const std::uint32_t n = board.vertex_count();
    const EdgeId id = edge_id(a, n);
    const auto& adj_u = board.maker_adjacency(a.u);
    const auto& adj_v = board.maker_adjacency(a.v);
    const std::uint64_t du = board.maker_degree(a.u);
    const std::uint64_t dv = board.maker_degree(a.v);
    if (du == 0 || dv == 0) return 0;
    const std::uint64_t k = adj_u.intersection_count(adj_v);
    std::uint64_t count = du * dv - k - k * (k - 1) / 2;
    if (board.owner(id) == Ownership::Maker) --count;
    return count;
}

namespace detail {

// Enumerates the distinct threat pairs of `a` without materializing the set.
// A pair is formable in both orders exactly when both endpoints lie in the
// neighborhood intersection; those are emitted once (b1 < b2).
template <typename Fn>
inline void for_each_threat(const BoardState& board, const Edge& a, Fn&& fn) {
    const auto& adj_u = board.maker_adjacency(a.u);
    const auto& adj_v = board.maker_adjacency(a.v);
    adj_u.for_each([&](Vertex b1) {
        adj_v.for_each([&](Vertex b2) {
            if (b1 == b2) return;
            if (adj_v.test(b1) && adj_u.test(b2) && b1 > b2) return;
            if ((b1 == a.u && b2 == a.v) || (b1 == a.v && b2 == a.u)) return;
            fn(make_edge(b1, b2));
        });
    });
}

} // namespace detail

// |T_a \ B|: threats not owned by Breaker (unclaimed or Maker's own).
inline std::uint64_t uncovered_threat_count(const BoardState& board, const Edge& a) {
    const std::uint32_t n = board.vertex_count();
    (void)edge_id(a, n);
    std::uint64_t count = 0;
    detail::for_each_threat(board, a, [&](const Edge& b) {
        if (board.owner(edge_id(b, n)) != Ownership::Breaker) ++count;
    });
    return count;
}

inline ThreatStats threat_stats(const BoardState& board, const Edge& a, const GameParams& params) {
    const std::uint32_t n = board.vertex_count();
    const EdgeId id = edge_id(a, n);
    ThreatStats s;
    s.edge = a;
    s.total = threat_count_fast(board, a);
    detail::for_each_threat(board, a, [&](const Edge& b) {
        switch (board.owner(edge_id(b, n))) {
            case Ownership::Breaker: ++s.covered; break;
            case Ownership::Unclaimed: ++s.uncovered; break;
            case Ownership::Maker: break;
        }
    });
    const double threshold = params.threat_threshold();
    if (static_cast<double>(s.total) < threshold) {
        s.cls = ThreatClass::NotDangerous;
    } else if (board.owner(id) == Ownership::Breaker) {
        s.cls = ThreatClass::DirectlyDeactivated;
    } else if (s.total - s.covered <= params.q) {
        s.cls = ThreatClass::IndirectlyDeactivated;
    } else {
        s.cls = ThreatClass::Active;
    }
    return s;
}

// Classification per the dangerous-edge definition, with direct deactivation
// taking precedence over indirect when both conditions hold.
inline ThreatClass classify(const BoardState& board, const Edge& a, const GameParams& params) {
    const std::uint32_t n = board.vertex_count();
    const EdgeId id = edge_id(a, n);
    const std::uint64_t total = threat_count_fast(board, a);
    if (static_cast<double>(total) < params.threat_threshold()) return ThreatClass::NotDangerous;
    if (board.owner(id) == Ownership::Breaker) return ThreatClass::DirectlyDeactivated;
    if (uncovered_threat_count(board, a) <= params.q) return ThreatClass::IndirectlyDeactivated;
    return ThreatClass::Active;
}

struct DangerousPartition {
    std::vector<EdgeId> dangerous;             // D
    std::vector<EdgeId> directly_deactivated;  // D_d = D ∩ B
    std::vector<EdgeId> indirectly_deactivated; // D_i \ D_d under precedence
    std::vector<EdgeId> active;                // D_a
};

// Splits E into the dangerous sets. D = D_d ∪ D_i ∪ D_a disjointly under the
// precedence rule, consistent with classify edge by edge. The degree-product
// bound |T_e| <= deg(u)·deg(v) prunes edges that cannot reach the threshold.
inline DangerousPartition dangerous_partition(const BoardState& board, const GameParams& params) {
    const std::uint32_t n = board.vertex_count();
    const double threshold = params.threat_threshold();
    DangerousPartition out;
    for (Vertex u = 0; u + 1 < n; ++u) {
        const std::uint64_t du = board.maker_degree(u);
        if (du == 0 && threshold > 0.0) continue;
        for (Vertex v = u + 1; v < n; ++v) {
            const std::uint64_t dv = board.maker_degree(v);
            if (static_cast<double>(du * dv) < threshold) continue;
            const Edge e{u, v};
            const std::uint64_t total = threat_count_fast(board, e);
            if (static_cast<double>(total) < threshold) continue;
            const EdgeId id = edge_id(e, n);
            out.dangerous.push_back(id);
            if (board.owner(id) == Ownership::Breaker) {
                out.directly_deactivated.push_back(id);
            } else if (uncovered_threat_count(board, e) <= params.q) {
                out.indirectly_deactivated.push_back(id);
            } else {
                out.active.push_back(id);
            }
        }
    }
    return out;
}

// True iff Maker's graph plus e contains a C4 through e, i.e. iff there is a
// Maker path of length 3 between the endpoints of e.
inline bool completes_c4(const BoardState& board, const Edge& e) {
    const std::uint32_t n = board.vertex_count();
    (void)edge_id(e, n);
    const auto& adj_u = board.maker_adjacency(e.u);
    const auto& adj_v = board.maker_adjacency(e.v);
    bool found = false;
    adj_u.for_each([&](Vertex b1) {
        if (found || b1 == e.v) return;
        const auto& adj_b1 = board.maker_adjacency(b1);
        const std::size_t words = adj_b1.word_count();
        for (std::size_t w = 0; w < words && !found; ++w) {
            std::uint64_t bits = adj_b1.word(w) & adj_v.word(w);
            if (!bits) continue;
            // mask out e.u and b1 themselves
            if ((e.u >> 6) == w) bits &= ~(std::uint64_t{1} << (e.u & 63));
            if ((b1 >> 6) == w) bits &= ~(std::uint64_t{1} << (b1 & 63));
            if (bits) found = true;
        }
    });
    return found;
}

// The 4-cycle that claiming e would complete, as [e.u, b1, b2, e.v] with all
// four edges Maker's after the claim. Lowest (b1, b2) pair for determinism.
inline std::optional<std::array<Vertex, 4>> find_c4_witness(const BoardState& board, const Edge& e) {
    const std::uint32_t n = board.vertex_count();
    (void)edge_id(e, n);
    const auto& adj_u = board.maker_adjacency(e.u);
    const auto& adj_v = board.maker_adjacency(e.v);
    std::optional<std::array<Vertex, 4>> witness;
    adj_u.for_each([&](Vertex b1) {
        if (witness || b1 == e.v) return;
        const auto& adj_b1 = board.maker_adjacency(b1);
        std::optional<Vertex> b2;
        adj_b1.for_each([&](Vertex cand) {
            if (b2 || cand == e.u || cand == b1) return;
            if (adj_v.test(cand)) b2 = cand;
        });
        if (b2) witness = std::array<Vertex, 4>{e.u, b1, *b2, e.v};
    });
    return witness;
}

// True iff Maker's graph contains any 4-cycle: some vertex pair has at least
// two common Maker neighbors.
inline bool contains_c4(const BoardState& board) {
    const std::uint32_t n = board.vertex_count();
    for (Vertex u = 0; u + 1 < n; ++u) {
        if (board.maker_degree(u) < 2) continue;
        const auto& adj_u = board.maker_adjacency(u);
        for (Vertex v = u + 1; v < n; ++v) {
            if (board.maker_degree(v) < 2) continue;
            if (adj_u.intersection_count(board.maker_adjacency(v)) >= 2) return true;
        }
    }
    return false;
}

} // namespace posc4
