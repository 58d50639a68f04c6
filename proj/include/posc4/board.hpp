#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

#include "posc4/bitset.hpp"

namespace posc4 {

using Vertex = std::uint32_t;
using EdgeId = std::uint32_t;

class GameError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

class InvalidEdgeError : public GameError {
public:
    using GameError::GameError;
};

class IllegalMoveError : public GameError {
public:
    using GameError::GameError;
};

class InvalidParameterError : public GameError {
public:
    using GameError::GameError;
};

class StrategyFaultError : public GameError {
public:
    using GameError::GameError;
};

enum class Ownership : std::uint8_t { Unclaimed = 0, Maker = 1, Breaker = 2 };

inline const char* to_string(Ownership o) {
    switch (o) {
        case Ownership::Unclaimed: return "unclaimed";
        case Ownership::Maker: return "maker";
        case Ownership::Breaker: return "breaker";
    }
    return "?";
}

// Undirected edge of K_n in canonical order u < v.
struct Edge {
    Vertex u = 0;
    Vertex v = 0;

    friend bool operator==(const Edge&, const Edge&) = default;
    friend auto operator<=>(const Edge&, const Edge&) = default;
};

inline Edge make_edge(Vertex a, Vertex b) {
    if (a == b)
        throw InvalidEdgeError("edge endpoints must differ, got {" + std::to_string(a) + "," +
                               std::to_string(b) + "}");
    return a < b ? Edge{a, b} : Edge{b, a};
}

inline std::uint64_t edge_count(std::uint32_t n) {
    return static_cast<std::uint64_t>(n) * (n - 1) / 2;
}

// Row-major pair order: (0,1),(0,2),...,(0,n-1),(1,2),... This enumeration is
// part of the transcript file-format contract and must not change.
inline EdgeId edge_id(Vertex u, Vertex v, std::uint32_t n) {
    if (u == v || u >= n || v >= n)
        throw InvalidEdgeError("invalid edge {" + std::to_string(u) + "," + std::to_string(v) +
                               "} on K_" + std::to_string(n));
    if (u > v) std::swap(u, v);
    const std::uint64_t row_start =
        static_cast<std::uint64_t>(u) * n - static_cast<std::uint64_t>(u) * (u + 1) / 2;
    return static_cast<EdgeId>(row_start + (v - u - 1));
}

inline EdgeId edge_id(const Edge& e, std::uint32_t n) { return edge_id(e.u, e.v, n); }

inline Edge edge_endpoints(EdgeId id, std::uint32_t n) {
    if (id >= edge_count(n))
        throw InvalidEdgeError("edge id " + std::to_string(id) + " out of range for K_" +
                               std::to_string(n));
    // Largest u whose row starts at or before id.
    std::uint32_t lo = 0, hi = n - 1;
    const auto row_start = [n](std::uint64_t u) {
        return u * n - u * (u + 1) / 2;
    };
    while (lo + 1 < hi) {
        const std::uint32_t mid = lo + (hi - lo) / 2;
        if (row_start(mid) <= id)
            lo = mid;
        else
            hi = mid;
    }
    const Vertex u = (row_start(hi) <= id) ? hi : lo;
    const Vertex v = static_cast<Vertex>(id - row_start(u) + u + 1);
    return Edge{u, v};
}

struct ClaimRecord {
    Ownership player;
    EdgeId edge;
};

// Ownership of every edge of K_n plus incrementally maintained Maker
// adjacency and per-player degrees. One byte per edge; Maker adjacency is a
// per-vertex bitmask so threat counting reduces to word-parallel
// intersections. Single logical owner; copy freely for snapshots.
class BoardState {
public:
    explicit BoardState(std::uint32_t n)
        : n_(n) {
        if (n < 4)
            throw InvalidParameterError("board needs n >= 4, got n = " + std::to_string(n));
        if (n > 92681)
            throw InvalidParameterError("board too large for 32-bit edge ids: n = " +
                                        std::to_string(n));
        owner_.assign(posc4::edge_count(n), Ownership::Unclaimed);
        maker_adj_.assign(n, DynamicBitset(n));
        maker_deg_.assign(n, 0);
        breaker_deg_.assign(n, 0);
    }

    std::uint32_t vertex_count() const { return n_; }
    std::uint64_t edge_count() const { return owner_.size(); }

    Ownership owner(EdgeId id) const { return owner_[id]; }
    Ownership owner(const Edge& e) const { return owner_[edge_id(e, n_)]; }

    std::uint32_t maker_degree(Vertex v) const { return maker_deg_[v]; }
    std::uint32_t breaker_degree(Vertex v) const { return breaker_deg_[v]; }
    const DynamicBitset& maker_adjacency(Vertex v) const { return maker_adj_[v]; }

    std::uint64_t maker_edge_count() const { return maker_edges_; }
    std::uint64_t breaker_edge_count() const { return breaker_edges_; }
    std::uint64_t unclaimed_count() const { return edge_count() - maker_edges_ - breaker_edges_; }

    const std::vector<ClaimRecord>& claim_log() const { return claim_log_; }

    void claim(Ownership player, const Edge& e) {
        if (player == Ownership::Unclaimed)
            throw IllegalMoveError("claim requires a player, not unclaimed");
        const EdgeId id = edge_id(e, n_);
        if (owner_[id] != Ownership::Unclaimed)
            throw IllegalMoveError("edge {" + std::to_string(e.u) + "," + std::to_string(e.v) +
                                   "} already claimed by " + to_string(owner_[id]));
        owner_[id] = player;
        if (player == Ownership::Maker) {
            maker_adj_[e.u].set(e.v);
            maker_adj_[e.v].set(e.u);
            ++maker_deg_[e.u];
            ++maker_deg_[e.v];
            ++maker_edges_;
        } else {
            ++breaker_deg_[e.u];
            ++breaker_deg_[e.v];
            ++breaker_edges_;
        }
        claim_log_.push_back({player, id});
    }

    void claim(Ownership player, Vertex a, Vertex b) { claim(player, make_edge(a, b)); }

    // Recomputes adjacency, degrees and counters from the owner array and
    // reports every mismatch. Empty result means the incremental state is
    // consistent.
    std::vector<std::string> audit() const {
        std::vector<std::string> issues;
        std::vector<DynamicBitset> adj(n_, DynamicBitset(n_));
        std::vector<std::uint32_t> mdeg(n_, 0), bdeg(n_, 0);
        std::uint64_t me = 0, be = 0;
        for (EdgeId id = 0; id < owner_.size(); ++id) {
            if (owner_[id] == Ownership::Unclaimed) continue;
            const Edge e = edge_endpoints(id, n_);
            if (owner_[id] == Ownership::Maker) {
                adj[e.u].set(e.v);
                adj[e.v].set(e.u);
                ++mdeg[e.u];
                ++mdeg[e.v];
                ++me;
            } else {
                ++bdeg[e.u];
                ++bdeg[e.v];
                ++be;
            }
        }
        for (Vertex v = 0; v < n_; ++v) {
            if (adj[v] != maker_adj_[v])
                issues.push_back("maker adjacency mismatch at vertex " + std::to_string(v));
            if (mdeg[v] != maker_deg_[v])
                issues.push_back("maker degree mismatch at vertex " + std::to_string(v));
            if (bdeg[v] != breaker_deg_[v])
                issues.push_back("breaker degree mismatch at vertex " + std::to_string(v));
            if (maker_adj_[v].count() != maker_deg_[v])
                issues.push_back("maker_deg != |maker_adj| at vertex " + std::to_string(v));
        }
        if (me != maker_edges_) issues.push_back("maker edge counter mismatch");
        if (be != breaker_edges_) issues.push_back("breaker edge counter mismatch");
        std::uint64_t mdeg_sum = 0, bdeg_sum = 0;
        for (Vertex v = 0; v < n_; ++v) {
            mdeg_sum += maker_deg_[v];
            bdeg_sum += breaker_deg_[v];
        }
        if (mdeg_sum != 2 * maker_edges_) issues.push_back("sum of maker degrees != 2|M|");
        if (bdeg_sum != 2 * breaker_edges_) issues.push_back("sum of breaker degrees != 2|B|");
        return issues;
    }

private:
    std::uint32_t n_;
    std::vector<Ownership> owner_;
    std::vector<DynamicBitset> maker_adj_;
    std::vector<std::uint32_t> maker_deg_;
    std::vector<std::uint32_t> breaker_deg_;
    std::uint64_t maker_edges_ = 0;
    std::uint64_t breaker_edges_ = 0;
    std::vector<ClaimRecord> claim_log_;
};

inline BoardState new_board(std::uint32_t n) { return BoardState(n); }

} // namespace posc4
