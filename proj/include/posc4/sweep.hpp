#pragma once

#include <atomic>
#include <cstdint>
#include <optional>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include <json.hpp>

#include "posc4/analysis.hpp"
#include "posc4/engine.hpp"
#include "posc4/serialize.hpp"

namespace posc4 {

struct SweepSpec {
    std::vector<std::uint32_t> ns;
    std::vector<double> cs;          // bias grid as coefficients; exclusive with qs
    std::vector<std::uint64_t> qs;   // bias grid as literal biases
    double delta = 1.1;
    double beta = 0.7;
    double alpha = 2.0 / 3.0;
    std::string maker = "c4";
    std::vector<std::string> breakers = {"random"};
    std::uint32_t reps = 1;
    std::uint64_t base_seed = 0;
    std::uint32_t jobs = 1;
    bool force = false;
    TieBreak tie_break = TieBreak::SeededRandom;
    bool breaker_first = false;
};

struct SweepRow {
    std::uint32_t n = 0;
    double c = 0.0;
    std::uint64_t q = 0;
    std::uint64_t seed = 0;
    std::string breaker;
    std::string winner;
    std::uint32_t rounds = 0;
    std::uint32_t maker_moves = 0;
    std::optional<std::uint32_t> x_size_at_transition;
    std::optional<std::uint64_t> da_size_at_transition;
    std::optional<std::array<bool, 6>> lemma;
    std::string note; // violation or error detail; JSON output only
};

namespace detail {

struct SweepCell {
    std::uint32_t n;
    std::optional<double> c;
    std::optional<std::uint64_t> q;
    std::string breaker;
    std::uint32_t rep;
};

// Canonical cell key hashed into the per-cell seed, so parallel and serial
// runs agree move for move.
inline std::string cell_key(const SweepSpec& spec, const SweepCell& cell) {
    std::ostringstream os;
    os << "n=" << cell.n << ";bias=";
    if (cell.c)
        os << "c" << format_double(*cell.c);
    else
        os << "q" << *cell.q;
    os << ";delta=" << format_double(spec.delta) << ";beta=" << format_double(spec.beta)
       << ";alpha=" << format_double(spec.alpha)
       << ";maker=" << strip_role_prefix(spec.maker, "maker:")
       << ";breaker=" << cell.breaker << ";rep=" << cell.rep;
    return os.str();
}

inline SweepRow run_cell(const SweepSpec& spec, const SweepCell& cell) {
    SweepRow row;
    row.n = cell.n;
    row.breaker = cell.breaker;
    row.seed = spec.base_seed ^ fnv1a64(cell_key(spec, cell));
    GameParams params;
    try {
        params = make_params(cell.n, cell.c, cell.q, spec.delta, spec.beta, spec.alpha, row.seed);
    } catch (const GameError& e) {
        row.winner = "error";
        row.note = e.what();
        return row;
    }
    params.tie_break = spec.tie_break;
    params.breaker_first = spec.breaker_first;
    params.force = spec.force;
    row.c = params.c;
    row.q = params.q;

    const auto violations = validate_params(params);
    if (!violations.empty() && !spec.force) {
        row.winner = "skipped";
        std::string joined;
        for (const auto& v : violations) joined += (joined.empty() ? "" : "; ") + v;
        row.note = joined;
        return row;
    }

    try {
        const auto outcome = play_game(params, spec.maker, cell.breaker);
        const auto& result = outcome.transcript.result;
        row.winner = to_string(result.winner);
        row.rounds = result.rounds;
        row.maker_moves = result.maker_moves;
        row.x_size_at_transition = result.x_size_at_transition;
        if (outcome.transition_snapshot) {
            const auto report =
                lemma_report(*outcome.transition_snapshot, params,
                             result.maker_moves_at_transition.value_or(result.maker_moves));
            row.da_size_at_transition = report.da_size;
            row.lemma = {report.i.pass, report.ii.pass,  report.iii.pass,
                         report.iv.pass, report.v.pass, report.vi.pass};
        }
    } catch (const GameError& e) {
        row.winner = "error";
        row.note = e.what();
    }
    return row;
}

} // namespace detail

// Runs every cell of the grid (n x bias x breaker x rep) on a bounded worker
// pool. Rows come back in grid order whatever the parallelism, so output is
// byte-identical across --jobs settings.
inline std::vector<SweepRow> run_sweep(const SweepSpec& spec) {
    std::vector<detail::SweepCell> cells;
    std::vector<std::string> breakers;
    breakers.reserve(spec.breakers.size());
    for (const auto& b : spec.breakers)
        breakers.emplace_back(strip_role_prefix(b, "breaker:"));
    const std::size_t bias_count = spec.cs.empty() ? spec.qs.size() : spec.cs.size();
    for (std::uint32_t n : spec.ns) {
        for (std::size_t bi = 0; bi < bias_count; ++bi) {
            for (const auto& breaker : breakers) {
                for (std::uint32_t rep = 0; rep < spec.reps; ++rep) {
                    detail::SweepCell cell;
                    cell.n = n;
                    if (spec.cs.empty())
                        cell.q = spec.qs[bi];
                    else
                        cell.c = spec.cs[bi];
                    cell.breaker = breaker;
                    cell.rep = rep;
                    cells.push_back(std::move(cell));
                }
            }
        }
    }

    std::vector<SweepRow> rows(cells.size());
    const std::uint32_t jobs = std::max<std::uint32_t>(1, spec.jobs);
    if (jobs == 1 || cells.size() <= 1) {
        for (std::size_t i = 0; i < cells.size(); ++i) rows[i] = detail::run_cell(spec, cells[i]);
        return rows;
    }
    std::atomic<std::size_t> next{0};
    std::vector<std::thread> workers;
    const std::uint32_t count = std::min<std::uint32_t>(jobs, static_cast<std::uint32_t>(cells.size()));
    workers.reserve(count);
    for (std::uint32_t w = 0; w < count; ++w) {
        workers.emplace_back([&] {
            for (;;) {
                const std::size_t i = next.fetch_add(1);
                if (i >= cells.size()) return;
                rows[i] = detail::run_cell(spec, cells[i]);
            }
        });
    }
    for (auto& w : workers) w.join();
    return rows;
}

inline std::string sweep_csv_header() {
    return "n,c,q,seed,breaker,winner,rounds,maker_moves,x_size_at_transition,"
           "d_a_size_at_transition,lemma_i,lemma_ii,lemma_iii,lemma_iv,lemma_v,lemma_vi";
}

inline std::string sweep_row_csv(const SweepRow& r) {
    std::ostringstream os;
    os << r.n << ',' << format_double(r.c) << ',' << r.q << ',' << r.seed << ',' << r.breaker
       << ',' << r.winner << ',' << r.rounds << ',' << r.maker_moves << ',';
    if (r.x_size_at_transition) os << *r.x_size_at_transition;
    os << ',';
    if (r.da_size_at_transition) os << *r.da_size_at_transition;
    for (int k = 0; k < 6; ++k) {
        os << ',';
        if (r.lemma) os << ((*r.lemma)[static_cast<std::size_t>(k)] ? 1 : 0);
    }
    return os.str();
}

inline nlohmann::json sweep_row_json(const SweepRow& r) {
    nlohmann::json j;
    j["n"] = r.n;
    j["c"] = r.c;
    j["q"] = r.q;
    j["seed"] = r.seed;
    j["breaker"] = r.breaker;
    j["winner"] = r.winner;
    j["rounds"] = r.rounds;
    j["maker_moves"] = r.maker_moves;
    j["x_size_at_transition"] =
        r.x_size_at_transition ? nlohmann::json(*r.x_size_at_transition) : nlohmann::json(nullptr);
    j["d_a_size_at_transition"] = r.da_size_at_transition
                                      ? nlohmann::json(*r.da_size_at_transition)
                                      : nlohmann::json(nullptr);
    if (r.lemma) {
        j["lemma"] = {{"i", (*r.lemma)[0]},  {"ii", (*r.lemma)[1]}, {"iii", (*r.lemma)[2]},
                      {"iv", (*r.lemma)[3]}, {"v", (*r.lemma)[4]},  {"vi", (*r.lemma)[5]}};
    } else {
        j["lemma"] = nullptr;
    }
    if (!r.note.empty()) j["note"] = r.note;
    return j;
}

} // namespace posc4
