#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "posc4/analysis.hpp"
#include "posc4/engine.hpp"
#include "posc4/serialize.hpp"
#include "posc4/sweep.hpp"
#include "posc4/verify.hpp"

namespace {

using namespace posc4;

struct OutputTarget {
    std::string path;

    void write(const std::string& content) const {
        if (path.empty()) {
            std::cout << content;
            return;
        }
        std::ofstream out(path, std::ios::binary);
        if (!out) throw GameError("cannot open output file: " + path);
        out << content;
    }
};

TieBreak parse_tie_break(const std::string& s) {
    if (s == "lexico") return TieBreak::Lexicographic;
    if (s == "random") return TieBreak::SeededRandom;
    throw InvalidParameterError("unknown tie-break mode: " + s);
}

std::string play_text_summary(const PlayOutcome& outcome, const GameParams& params,
                              const std::string& maker, const std::string& breaker) {
    const auto& t = outcome.transcript;
    std::ostringstream os;
    os << "game: " << maker << " vs " << breaker << " on K_" << params.n << " (q=" << params.q
       << ", c=" << format_double(params.c) << ", delta=" << format_double(params.delta)
       << ", beta=" << format_double(params.beta) << ", seed=" << params.seed << ")\n";
    os << "winner: " << to_string(t.result.winner) << "\n";
    os << "rounds: " << t.result.rounds << ", maker moves: " << t.result.maker_moves << "\n";
    if (t.result.phase_transition_round) {
        os << "phase transition: round " << *t.result.phase_transition_round
           << ", |X| = " << *t.result.x_size_at_transition << " (target "
           << params.x_target() << ")\n";
    } else {
        os << "phase transition: not reached\n";
    }
    if (t.result.winning_c4) {
        const auto& c = *t.result.winning_c4;
        os << "winning C4: " << c[0] << "-" << c[1] << "-" << c[2] << "-" << c[3] << "\n";
    }
    if (t.result.precondition_failure)
        os << "note: degenerate strike loop, theorem preconditions failed\n";
    if (outcome.transition_snapshot) {
        const auto report = lemma_report(*outcome.transition_snapshot, params,
                                         t.result.maker_moves_at_transition.value_or(0));
        os << "transition snapshot: |B|=" << report.b_size << " |D|=" << report.d_size
           << " |D_d|=" << report.dd_size << " |D_i|=" << report.di_size
           << " |D_a|=" << report.da_size << "\n";
    }
    return os.str();
}

int cmd_play(const std::string& format, const OutputTarget& out, GameParams params,
             const std::string& maker, const std::string& breaker) {
    const auto violations = validate_params(params);
    if (!violations.empty() && !params.force) {
        std::cerr << "invalid parameters:\n";
        for (const auto& v : violations) std::cerr << "  " << v << "\n";
        std::cerr << "use --force to play anyway\n";
        return 2;
    }
    const auto outcome = play_game(params, maker, breaker);

    if (format == "json") {
        out.write(transcript_to_json(outcome.transcript).dump(2) + "\n");
    } else if (format == "csv") {
        SweepRow row;
        row.n = params.n;
        row.c = params.c;
        row.q = params.q;
        row.seed = params.seed;
        row.breaker = std::string(strip_role_prefix(breaker, "breaker:"));
        row.winner = to_string(outcome.transcript.result.winner);
        row.rounds = outcome.transcript.result.rounds;
        row.maker_moves = outcome.transcript.result.maker_moves;
        row.x_size_at_transition = outcome.transcript.result.x_size_at_transition;
        if (outcome.transition_snapshot) {
            const auto report =
                lemma_report(*outcome.transition_snapshot, params,
                             outcome.transcript.result.maker_moves_at_transition.value_or(0));
            row.da_size_at_transition = report.da_size;
            row.lemma = {report.i.pass, report.ii.pass,  report.iii.pass,
                         report.iv.pass, report.v.pass, report.vi.pass};
        }
        out.write(sweep_csv_header() + "\n" + sweep_row_csv(row) + "\n");
    } else {
        out.write(play_text_summary(outcome, params, maker, breaker));
    }
    return outcome.transcript.result.winner == Winner::Maker ? 0 : 1;
}

int cmd_sweep(const SweepSpec& spec, const std::string& format, const OutputTarget& out) {
    const auto rows = run_sweep(spec);
    std::ostringstream os;
    if (format == "json") {
        for (const auto& r : rows) os << sweep_row_json(r).dump() << "\n";
    } else {
        os << sweep_csv_header() << "\n";
        for (const auto& r : rows) os << sweep_row_csv(r) << "\n";
    }
    out.write(os.str());
    return 0;
}

int cmd_verify(const std::string& suite, std::uint32_t n, std::uint32_t reps, std::uint64_t seed,
               double c, double delta, double beta, double alpha,
               const std::vector<std::string>& breakers, const OutputTarget& out) {
    SuiteResult res;
    std::string extra;
    if (suite == "symmetry") {
        res = suite_symmetry(n == 0 ? 12 : n, reps == 0 ? 100 : reps, seed);
    } else if (suite == "oracle") {
        res = suite_oracle(6, n == 0 ? 20 : n, reps == 0 ? 500 : reps, seed);
    } else if (suite == "lemma26") {
        res = suite_lemma26(n == 0 ? 16 : n, reps == 0 ? 200 : reps, seed);
    } else if (suite == "lemma27" || suite == "theorem2") {
        GameParams base = make_params(n == 0 ? 100 : n, c, std::nullopt, delta, beta, alpha, seed);
        const auto& bs = breakers;
        if (suite == "lemma27")
            res = suite_lemma27(base, bs, reps == 0 ? 20 : reps);
        else
            res = suite_theorem2(base, bs, reps == 0 ? 20 : reps);
    } else {
        std::cerr << "unknown suite: " << suite
                  << " (expected symmetry|oracle|lemma26|lemma27|theorem2)\n";
        return 2;
    }
    std::ostringstream os;
    os << res.name << ": " << (res.pass ? "PASS" : "FAIL") << " (checks=" << res.checks
       << ", violations=" << res.violations << ")";
    if (!res.detail.empty()) os << " " << res.detail;
    os << "\n" << extra;
    out.write(os.str());
    return res.pass ? 0 : 1;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Biased Maker-Breaker C4 game engine on K_n"};
    app.require_subcommand(1);

    std::string format = "text";
    std::string out_path;

    // play
    auto* play = app.add_subcommand("play", "Play one game");
    std::uint32_t n = 0;
    std::optional<double> c;
    std::optional<std::uint64_t> q;
    double delta = 1.1, beta = 0.7, alpha = 2.0 / 3.0;
    std::string maker = "c4", breaker = "random", tie_break = "random";
    std::uint64_t seed = 0;
    bool force = false, breaker_first = false;
    play->add_option("--n", n, "board size")->required();
    play->add_option("--c", c, "bias coefficient, q = floor(c n^alpha)");
    play->add_option("--q", q, "literal bias, overrides --c");
    play->add_option("--delta", delta, "degree coefficient");
    play->add_option("--beta", beta, "target fraction");
    play->add_option("--alpha", alpha, "bias exponent");
    play->add_option("--maker", maker, "maker strategy: c4|ddegree");
    play->add_option("--breaker", breaker, "breaker strategy: random|deactivator|degree-attack");
    play->add_option("--seed", seed, "RNG seed");
    play->add_option("--tie-break", tie_break, "degree-move tie-break: lexico|random");
    play->add_flag("--breaker-first", breaker_first, "breaker moves first in each round");
    play->add_flag("--force", force, "play despite parameter violations");
    play->add_option("--format", format, "output format: text|json|csv");
    play->add_option("--out", out_path, "output file (default stdout)");

    // sweep
    auto* sweep = app.add_subcommand("sweep", "Run a parameter sweep");
    std::vector<std::uint32_t> ns;
    std::vector<double> cs;
    std::vector<std::uint64_t> qs;
    std::vector<std::string> breakers = {"random"};
    std::uint32_t reps = 1;
    std::uint32_t jobs = 0;
    double s_delta = 1.1, s_beta = 0.7, s_alpha = 2.0 / 3.0;
    std::string s_maker = "c4", s_tie_break = "random";
    std::uint64_t base_seed = 0;
    bool s_force = false, s_breaker_first = false;
    sweep->add_option("--n", ns, "board sizes")->required()->delimiter(',');
    sweep->add_option("--c", cs, "bias coefficients")->delimiter(',');
    sweep->add_option("--q", qs, "literal biases")->delimiter(',');
    sweep->add_option("--delta", s_delta, "degree coefficient");
    sweep->add_option("--beta", s_beta, "target fraction");
    sweep->add_option("--alpha", s_alpha, "bias exponent");
    sweep->add_option("--maker", s_maker, "maker strategy");
    sweep->add_option("--breaker", breakers, "breaker strategies")->delimiter(',');
    sweep->add_option("--reps", reps, "repetitions per cell");
    sweep->add_option("--seed", base_seed, "base seed");
    sweep->add_option("--jobs", jobs, "worker threads (default POSC4_JOBS or 1)");
    sweep->add_option("--tie-break", s_tie_break, "degree-move tie-break");
    sweep->add_flag("--breaker-first", s_breaker_first, "breaker moves first");
    sweep->add_flag("--force", s_force, "run invalid cells too");
    sweep->add_option("--format", format, "output format: csv|json|text");
    sweep->add_option("--out", out_path, "output file (default stdout)");

    // verify
    auto* verify = app.add_subcommand("verify", "Run a property suite");
    std::string suite;
    std::uint32_t v_n = 0, v_reps = 0;
    std::uint64_t v_seed = 0;
    double v_c = 0.05, v_delta = 1.1, v_beta = 0.7, v_alpha = 2.0 / 3.0;
    std::vector<std::string> v_breakers = {"random", "deactivator", "degree-attack"};
    verify->add_option("suite", suite, "symmetry|oracle|lemma26|lemma27|theorem2")->required();
    verify->add_option("--n", v_n, "size parameter (suite-specific default)");
    verify->add_option("--reps", v_reps, "repetitions (suite-specific default)");
    verify->add_option("--seed", v_seed, "seed");
    verify->add_option("--c", v_c, "bias coefficient (lemma27/theorem2)");
    verify->add_option("--delta", v_delta, "degree coefficient");
    verify->add_option("--beta", v_beta, "target fraction");
    verify->add_option("--alpha", v_alpha, "bias exponent");
    verify->add_option("--breaker", v_breakers, "breaker strategies")->delimiter(',');
    verify->add_option("--format", format, "output format");
    verify->add_option("--out", out_path, "output file (default stdout)");

    CLI11_PARSE(app, argc, argv);

    try {
        const OutputTarget out{out_path};
        if (play->parsed()) {
            GameParams params = make_params(n, c, q, delta, beta, alpha, seed);
            params.tie_break = parse_tie_break(tie_break);
            params.breaker_first = breaker_first;
            params.force = force;
            return cmd_play(format, out, params, maker, breaker);
        }
        if (sweep->parsed()) {
            if (cs.empty() && qs.empty()) {
                std::cerr << "sweep needs --c or --q\n";
                return 2;
            }
            SweepSpec spec;
            spec.ns = ns;
            spec.cs = cs;
            spec.qs = qs;
            spec.delta = s_delta;
            spec.beta = s_beta;
            spec.alpha = s_alpha;
            spec.maker = s_maker;
            spec.breakers = breakers;
            spec.reps = reps;
            spec.base_seed = base_seed;
            spec.force = s_force;
            spec.tie_break = parse_tie_break(s_tie_break);
            spec.breaker_first = s_breaker_first;
            if (jobs == 0) {
                if (const char* env = std::getenv("POSC4_JOBS"))
                    jobs = static_cast<std::uint32_t>(std::strtoul(env, nullptr, 10));
                if (jobs == 0) jobs = 1;
            }
            spec.jobs = jobs;
            return cmd_sweep(spec, format == "text" ? "csv" : format, out);
        }
        if (verify->parsed())
            return cmd_verify(suite, v_n, v_reps, v_seed, v_c, v_delta, v_beta, v_alpha,
                              v_breakers, out);
    } catch (const GameError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "unexpected error: " << e.what() << "\n";
        return 2;
    }
    return 2;
}
