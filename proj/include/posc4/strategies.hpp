#pragma once

#include <algorithm>
#include <memory>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "posc4/board.hpp"
#include "posc4/params.hpp"
#include "posc4/rng.hpp"
#include "posc4/threats.hpp"

namespace posc4 {

// Phases advance monotonically Degree -> Strike -> Finish within one game.
struct MakerPhase {
    enum class Kind : std::uint8_t { Degree, Strike, Finish };
    Kind kind = Kind::Degree;
    Edge edge{}; // strike/finish edge; meaningless in Degree
};

inline const char* to_string(MakerPhase::Kind k) {
    switch (k) {
        case MakerPhase::Kind::Degree: return "degree";
        case MakerPhase::Kind::Strike: return "strike";
        case MakerPhase::Kind::Finish: return "finish";
    }
    return "?";
}

// One Maker turn. `move` empty means the d-degree strategy stopped (normal
// outcome, signals the phase transition). When `transitioned_now` is set the
// board as seen by this call is the canonical transition snapshot; the engine
// copies it before applying the move.
struct MakerDecision {
    std::optional<Edge> move;
    bool transitioned_now = false;
};

// The d-degree move: an unclaimed edge whose both endpoints have Maker degree
// below d_hat, or nothing when no such edge exists. Lexicographic mode takes
// the lowest edge id; seeded mode draws uniformly over eligible edges
// (rejection sampling over low-degree vertex pairs, with an exact enumeration
// pass once rejection stalls, which also proves emptiness).
inline std::optional<Edge> find_degree_move(const BoardState& board, std::uint32_t d_hat,
                                            TieBreak tie_break, RandomSource& rng) {
    const std::uint32_t n = board.vertex_count();
    if (tie_break == TieBreak::Lexicographic) {
        for (Vertex u = 0; u + 1 < n; ++u) {
            if (board.maker_degree(u) >= d_hat) continue;
            const EdgeId row = edge_id(u, u + 1, n);
            for (Vertex v = u + 1; v < n; ++v) {
                if (board.maker_degree(v) >= d_hat) continue;
                if (board.owner(static_cast<EdgeId>(row + (v - u - 1))) == Ownership::Unclaimed)
                    return Edge{u, v};
            }
        }
        return std::nullopt;
    }

    std::vector<Vertex> low;
    low.reserve(n);
    for (Vertex v = 0; v < n; ++v)
        if (board.maker_degree(v) < d_hat) low.push_back(v);
    if (low.size() < 2) return std::nullopt;

    for (int tries = 0; tries < 64; ++tries) {
        const std::size_t i = static_cast<std::size_t>(rng.below(low.size()));
        std::size_t j = static_cast<std::size_t>(rng.below(low.size() - 1));
        if (j >= i) ++j;
        const Edge e = make_edge(low[i], low[j]);
        if (board.owner(edge_id(e, n)) == Ownership::Unclaimed) return e;
    }

    // Exact pass: count eligible edges, then index uniformly into them.
    std::uint64_t eligible = 0;
    for (std::size_t i = 0; i + 1 < low.size(); ++i)
        for (std::size_t j = i + 1; j < low.size(); ++j)
            if (board.owner(edge_id(low[i], low[j], n)) == Ownership::Unclaimed) ++eligible;
    if (eligible == 0) return std::nullopt;
    std::uint64_t pick = rng.below(eligible);
    for (std::size_t i = 0; i + 1 < low.size(); ++i)
        for (std::size_t j = i + 1; j < low.size(); ++j)
            if (board.owner(edge_id(low[i], low[j], n)) == Ownership::Unclaimed && pick-- == 0)
                return make_edge(low[i], low[j]);
    return std::nullopt; // unreachable
}

class MakerStrategy {
public:
    virtual ~MakerStrategy() = default;
    virtual MakerDecision next_move(const BoardState& board) = 0;
    virtual std::string_view name() const = 0;
    virtual MakerPhase phase() const { return {}; }
    // Set once the D_a = empty fallback degenerated into strikes Breaker can
    // fully cover; such games are theorem-precondition failures.
    virtual bool degenerate() const { return false; }
};

// Pure d-degree player for the partial minimum degree game. Stops (returns no
// move) once no eligible edge remains.
class DDegreeMaker final : public MakerStrategy {
public:
    explicit DDegreeMaker(const GameParams& params)
        : d_hat_(params.d_hat()), tie_break_(params.tie_break),
          rng_(stream_seed(params.seed, "maker")) {}

    MakerDecision next_move(const BoardState& board) override {
        auto move = find_degree_move(board, d_hat_, tie_break_, rng_);
        MakerDecision d;
        d.move = move;
        if (!move && !stopped_) {
            stopped_ = true;
            d.transitioned_now = true;
        }
        return d;
    }

    std::string_view name() const override { return "ddegree"; }

private:
    std::uint32_t d_hat_;
    TieBreak tie_break_;
    RandomSource rng_;
    bool stopped_ = false;
};

// Maker's C4 strategy: d-degree phase, then a strike on an active dangerous
// edge, then completion through one of its surviving threats. A completing
// claim is played immediately at any phase, ahead of the phase logic.
//
// Win detection is incremental: every Maker claim extends the set of edge ids
// that would close a Maker path of length 3. Entries are dropped permanently
// once Breaker owns them, so the scan is amortized against insertions.
class C4Maker final : public MakerStrategy {
public:
    explicit C4Maker(const GameParams& params)
        : params_(params), d_hat_(params.d_hat()),
          rng_(stream_seed(params.seed, "maker")) {}

    MakerDecision next_move(const BoardState& board) override {
        absorb_new_maker_edges(board);
        MakerDecision d;
        if (auto win = winning_move(board)) {
            phase_ = MakerPhase{MakerPhase::Kind::Finish, *win};
            d.move = win;
            return d;
        }
        switch (phase_.kind) {
            case MakerPhase::Kind::Degree: {
                if (auto e = find_degree_move(board, d_hat_, params_.tie_break, rng_)) {
                    d.move = e;
                    return d;
                }
                d.transitioned_now = true;
                const Edge strike = pick_strike(board);
                phase_ = MakerPhase{MakerPhase::Kind::Strike, strike};
                d.move = strike;
                return d;
            }
            case MakerPhase::Kind::Strike: {
                if (auto b = lowest_unclaimed_threat(board, phase_.edge)) {
                    phase_ = MakerPhase{MakerPhase::Kind::Finish, *b};
                    d.move = b;
                    return d;
                }
                // all threats of the strike edge got covered; strike again
                const Edge strike = pick_strike(board);
                phase_ = MakerPhase{MakerPhase::Kind::Strike, strike};
                d.move = strike;
                return d;
            }
            case MakerPhase::Kind::Finish: {
                // only reachable when the finish claim failed to end the game,
                // i.e. after a degenerate strike; keep striking
                degenerate_ = true;
                const Edge strike = pick_strike(board);
                phase_.edge = strike;
                d.move = strike;
                return d;
            }
        }
        return d; // unreachable
    }

    std::string_view name() const override { return "c4"; }
    MakerPhase phase() const override { return phase_; }
    bool degenerate() const override { return degenerate_; }

private:
    void absorb_new_maker_edges(const BoardState& board) {
        const auto& log = board.claim_log();
        const std::uint32_t n = board.vertex_count();
        for (; log_cursor_ < log.size(); ++log_cursor_) {
            const auto& rec = log[log_cursor_];
            if (rec.player != Ownership::Maker) continue;
            add_closures(board, edge_endpoints(rec.edge, n));
        }
    }

    // All pairs newly joined by a Maker path of length 3 through edge m.
    void add_closures(const BoardState& board, const Edge& m) {
        const std::uint32_t n = board.vertex_count();
        const auto& adj_u = board.maker_adjacency(m.u);
        const auto& adj_v = board.maker_adjacency(m.v);
        // m as the middle edge: a - m.u - m.v - b
        adj_u.for_each([&](Vertex a) {
            if (a == m.v) return;
            adj_v.for_each([&](Vertex b) {
                if (b == m.u || b == a) return;
                candidates_.insert(edge_id(a, b, n));
            });
        });
        // m as an end edge: p0 - p1 - x - y closes {p0, y}
        const auto end_paths = [&](Vertex x, Vertex y) {
            board.maker_adjacency(x).for_each([&](Vertex p1) {
                if (p1 == y) return;
                board.maker_adjacency(p1).for_each([&](Vertex p0) {
                    if (p0 == x || p0 == y) return;
                    candidates_.insert(edge_id(p0, y, n));
                });
            });
        };
        end_paths(m.u, m.v);
        end_paths(m.v, m.u);
    }

    std::optional<Edge> winning_move(const BoardState& board) {
        const std::uint32_t n = board.vertex_count();
        for (auto it = candidates_.begin(); it != candidates_.end();) {
            if (board.owner(*it) == Ownership::Unclaimed) return edge_endpoints(*it, n);
            it = candidates_.erase(it); // claimed edges never become playable
        }
        return std::nullopt;
    }

    std::optional<Edge> lowest_unclaimed_threat(const BoardState& board, const Edge& e) const {
        const std::uint32_t n = board.vertex_count();
        std::optional<EdgeId> best;
        detail::for_each_threat(board, e, [&](const Edge& b) {
            const EdgeId id = edge_id(b, n);
            if (board.owner(id) == Ownership::Unclaimed && (!best || id < *best)) best = id;
        });
        if (!best) return std::nullopt;
        return edge_endpoints(*best, n);
    }

    // Strike target: an unclaimed active dangerous edge with the most
    // uncovered threats, lowest edge id on ties. When D_a is empty (possible
    // at desk scale), fall back to the unclaimed edge maximizing the
    // uncovered threat count; if even that cannot out-threaten the bias, the
    // game is flagged as a theorem-precondition failure.
    Edge pick_strike(const BoardState& board) {
        const std::uint32_t n = board.vertex_count();
        const auto part = dangerous_partition(board, params_);
        std::optional<EdgeId> best;
        std::uint64_t best_uncovered = 0;
        for (EdgeId id : part.active) {
            if (board.owner(id) != Ownership::Unclaimed) continue;
            const std::uint64_t unc = uncovered_threat_count(board, edge_endpoints(id, n));
            if (!best || unc > best_uncovered) {
                best = id;
                best_uncovered = unc;
            }
        }
        if (best) return edge_endpoints(*best, n);

        // D_a empty: scan every unclaimed edge. The fast count upper-bounds
        // the uncovered count, which prunes most of the board.
        const std::uint64_t total_edges = board.edge_count();
        for (EdgeId id = 0; id < total_edges; ++id) {
            if (board.owner(id) != Ownership::Unclaimed) continue;
            const Edge e = edge_endpoints(id, n);
            if (best && threat_count_fast(board, e) <= best_uncovered) continue;
            const std::uint64_t unc = uncovered_threat_count(board, e);
            if (!best || unc > best_uncovered) {
                best = id;
                best_uncovered = unc;
            }
        }
        if (!best) throw StrategyFaultError("no unclaimed edge available for a strike");
        if (best_uncovered <= params_.q) degenerate_ = true;
        return edge_endpoints(*best, n);
    }

    GameParams params_;
    std::uint32_t d_hat_;
    RandomSource rng_;
    MakerPhase phase_{};
    std::set<EdgeId> candidates_;
    std::size_t log_cursor_ = 0;
    bool degenerate_ = false;
};

class BreakerStrategy {
public:
    virtual ~BreakerStrategy() = default;
    // Up to `budget` distinct unclaimed edges; budget is already capped by
    // the number of unclaimed edges.
    virtual std::vector<Edge> next_moves(const BoardState& board, std::uint64_t budget) = 0;
    virtual std::string_view name() const = 0;
};

// Claims uniformly random unclaimed edges. Baseline adversary.
class RandomBreaker final : public BreakerStrategy {
public:
    explicit RandomBreaker(const GameParams& params)
        : rng_(stream_seed(params.seed, "breaker")) {}

    std::vector<Edge> next_moves(const BoardState& board, std::uint64_t budget) override {
        const std::uint32_t n = board.vertex_count();
        const std::uint64_t total = board.edge_count();
        const std::uint64_t k = std::min(budget, board.unclaimed_count());
        std::vector<Edge> out;
        out.reserve(k);
        std::vector<EdgeId> picked;
        if (k > 0 && board.unclaimed_count() > std::max<std::uint64_t>(4 * k, 64)) {
            while (out.size() < k) {
                bool hit = false;
                for (int tries = 0; tries < 64 && !hit; ++tries) {
                    const EdgeId id = static_cast<EdgeId>(rng_.below(total));
                    if (board.owner(id) != Ownership::Unclaimed) continue;
                    if (std::find(picked.begin(), picked.end(), id) != picked.end()) continue;
                    picked.push_back(id);
                    out.push_back(edge_endpoints(id, n));
                    hit = true;
                }
                if (!hit) break; // dense board; finish below
            }
        }
        if (out.size() < k) {
            std::vector<EdgeId> pool;
            pool.reserve(board.unclaimed_count());
            for (EdgeId id = 0; id < total; ++id)
                if (board.owner(id) == Ownership::Unclaimed &&
                    std::find(picked.begin(), picked.end(), id) == picked.end())
                    pool.push_back(id);
            for (std::size_t i = 0; out.size() < k && i < pool.size(); ++i) {
                const std::size_t j = i + static_cast<std::size_t>(rng_.below(pool.size() - i));
                std::swap(pool[i], pool[j]);
                out.push_back(edge_endpoints(pool[i], n));
            }
        }
        return out;
    }

    std::string_view name() const override { return "random"; }

private:
    RandomSource rng_;
};

// Greedy direct deactivation: claims the unclaimed edges with the highest
// threat counts, ties by edge id. Exact, so each turn costs a pass over the
// pairs of Maker-touched vertices; fine at experiment sizes, quadratic at
// n in the thousands.
class DeactivatorBreaker final : public BreakerStrategy {
public:
    explicit DeactivatorBreaker(const GameParams& params) { (void)params; }

    std::vector<Edge> next_moves(const BoardState& board, std::uint64_t budget) override {
        const std::uint32_t n = board.vertex_count();
        std::vector<Vertex> touched;
        for (Vertex v = 0; v < n; ++v)
            if (board.maker_degree(v) > 0) touched.push_back(v);

        std::vector<std::pair<std::uint64_t, EdgeId>> cands;
        for (std::size_t i = 0; i + 1 < touched.size(); ++i) {
            for (std::size_t j = i + 1; j < touched.size(); ++j) {
                const Edge e = make_edge(touched[i], touched[j]);
                const EdgeId id = edge_id(e, n);
                if (board.owner(id) != Ownership::Unclaimed) continue;
                const std::uint64_t t = threat_count_fast(board, e);
                if (t > 0) cands.emplace_back(t, id);
            }
        }
        std::sort(cands.begin(), cands.end(), [](const auto& a, const auto& b) {
            if (a.first != b.first) return a.first > b.first;
            return a.second < b.second;
        });

        std::vector<Edge> out;
        std::vector<EdgeId> taken;
        for (const auto& [t, id] : cands) {
            if (out.size() >= budget) break;
            out.push_back(edge_endpoints(id, n));
            taken.push_back(id);
        }
        // Everything else unclaimed has zero threats; pad by ascending id.
        const std::uint64_t total = board.edge_count();
        for (EdgeId id = 0; out.size() < budget && id < total; ++id) {
            if (board.owner(id) != Ownership::Unclaimed) continue;
            if (std::find(taken.begin(), taken.end(), id) != taken.end()) continue;
            out.push_back(edge_endpoints(id, n));
        }
        return out;
    }

    std::string_view name() const override { return "deactivator"; }
};

// Starves the degree phase: claims unclaimed edges whose both endpoints still
// have Maker degree below d_hat, ascending by edge id, then spends leftover
// budget on the lowest-id unclaimed edges. Both scans ride monotone cursors:
// every skip reason (claimed, endpoint at the cap) is permanent.
class DegreeAttackBreaker final : public BreakerStrategy {
public:
    explicit DegreeAttackBreaker(const GameParams& params) : d_hat_(params.d_hat()) {}

    std::vector<Edge> next_moves(const BoardState& board, std::uint64_t budget) override {
        const std::uint32_t n = board.vertex_count();
        const std::uint64_t total = board.edge_count();
        std::vector<Edge> out;
        std::vector<EdgeId> taken;
        while (out.size() < budget && low_cursor_ < total) {
            const EdgeId id = static_cast<EdgeId>(low_cursor_);
            if (board.owner(id) != Ownership::Unclaimed) {
                ++low_cursor_;
                continue;
            }
            const Edge e = edge_endpoints(id, n);
            if (board.maker_degree(e.u) >= d_hat_ || board.maker_degree(e.v) >= d_hat_) {
                ++low_cursor_;
                continue;
            }
            out.push_back(e);
            taken.push_back(id);
            ++low_cursor_;
        }
        while (out.size() < budget && any_cursor_ < total) {
            const EdgeId id = static_cast<EdgeId>(any_cursor_);
            ++any_cursor_;
            if (board.owner(id) != Ownership::Unclaimed) continue;
            if (std::find(taken.begin(), taken.end(), id) != taken.end()) continue;
            out.push_back(edge_endpoints(id, n));
        }
        return out;
    }

    std::string_view name() const override { return "degree-attack"; }

private:
    std::uint32_t d_hat_;
    std::uint64_t low_cursor_ = 0;
    std::uint64_t any_cursor_ = 0;
};

// Claims nothing. Test opponent.
class PassBreaker final : public BreakerStrategy {
public:
    std::vector<Edge> next_moves(const BoardState&, std::uint64_t) override { return {}; }
    std::string_view name() const override { return "pass"; }
};

// Strategy identifiers accept both the bare name and the role-prefixed form
// (maker:c4, breaker:random).
inline std::string_view strip_role_prefix(std::string_view name, std::string_view role) {
    if (name.substr(0, role.size()) == role) name.remove_prefix(role.size());
    return name;
}

inline std::unique_ptr<MakerStrategy> make_maker(std::string_view name, const GameParams& params) {
    name = strip_role_prefix(name, "maker:");
    if (name == "c4") return std::make_unique<C4Maker>(params);
    if (name == "ddegree") return std::make_unique<DDegreeMaker>(params);
    throw InvalidParameterError("unknown maker strategy: " + std::string(name));
}

inline std::unique_ptr<BreakerStrategy> make_breaker(std::string_view name,
                                                     const GameParams& params) {
    name = strip_role_prefix(name, "breaker:");
    if (name == "random") return std::make_unique<RandomBreaker>(params);
    if (name == "deactivator") return std::make_unique<DeactivatorBreaker>(params);
    if (name == "degree-attack") return std::make_unique<DegreeAttackBreaker>(params);
    if (name == "pass") return std::make_unique<PassBreaker>();
    throw InvalidParameterError("unknown breaker strategy: " + std::string(name));
}

} // namespace posc4
