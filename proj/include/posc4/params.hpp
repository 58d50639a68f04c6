#pragma once

#include <cmath>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "posc4/board.hpp"

namespace posc4 {

enum class TieBreak : std::uint8_t { Lexicographic, SeededRandom };

inline const char* to_string(TieBreak t) {
    return t == TieBreak::Lexicographic ? "lexico" : "random";
}

// Game parameters (n, q, c, delta, alpha, beta). q may be given literally or
// derived as floor(c * n^alpha); c always carries the effective coefficient
// q / n^alpha when q was given literally, so diagnostics stay comparable.
//
// All real thresholds are evaluated in double precision, with floor/ceil
// applied only where an integer is consumed.
struct GameParams {
    std::uint32_t n = 0;
    std::uint64_t q = 0;
    double c = 0.0;
    double delta = 1.1;
    double alpha = 2.0 / 3.0;
    double beta = 0.7;
    std::uint64_t seed = 0;
    bool q_was_derived = true;
    TieBreak tie_break = TieBreak::SeededRandom;
    bool breaker_first = false;
    bool force = false;

    // Working integer degree cap d_hat = ceil(delta * n^(1-alpha)).
    std::uint32_t d_hat() const {
        return static_cast<std::uint32_t>(
            std::ceil(delta * std::pow(static_cast<double>(n), 1.0 - alpha)));
    }

    // Dangerous-edge threshold delta^2 * n^(2/3) - 1. The exponent is the C4
    // instantiation and stays 2/3 even when alpha is varied for the partial
    // minimum degree machinery.
    double threat_threshold() const {
        return delta * delta * std::pow(static_cast<double>(n), 2.0 / 3.0) - 1.0;
    }

    // |X| target: ceil(beta * n).
    std::uint64_t x_target() const {
        return static_cast<std::uint64_t>(std::ceil(beta * static_cast<double>(n)));
    }

    // Move bound asserted on the degree phase: ceil((delta/2) n^(2-alpha)) + n.
    // The +n absorbs the rounding slack between the real-valued target degree
    // and the integer cap d_hat.
    std::uint64_t degree_phase_move_bound() const {
        return static_cast<std::uint64_t>(std::ceil(
                   (delta / 2.0) * std::pow(static_cast<double>(n), 2.0 - alpha))) +
               n;
    }
};

// Derives q from c when no literal q is supplied.
inline GameParams make_params(std::uint32_t n, std::optional<double> c, std::optional<std::uint64_t> q,
                              double delta = 1.1, double beta = 0.7, double alpha = 2.0 / 3.0,
                              std::uint64_t seed = 0) {
    GameParams p;
    p.n = n;
    p.delta = delta;
    p.beta = beta;
    p.alpha = alpha;
    p.seed = seed;
    const double n_alpha = std::pow(static_cast<double>(n), alpha);
    if (q.has_value()) {
        p.q = *q;
        p.c = static_cast<double>(*q) / n_alpha;
        p.q_was_derived = false;
    } else if (c.has_value()) {
        p.c = *c;
        p.q = static_cast<std::uint64_t>(std::floor(*c * n_alpha));
        p.q_was_derived = true;
    } else {
        throw InvalidParameterError("either c or q must be supplied");
    }
    return p;
}

// Smallest n >= 4 for which the large-n inequality backing the partial
// minimum degree analysis holds:
//   (c*delta/2) n^2 < ((1-beta)^2/2) n^2 - ((1-beta) n + delta (1-beta) n^(2-alpha)) / 2.
// The left-over term is eventually dominated, and the normalized gap is
// monotone after its single sign change, so doubling + binary search finds
// the exact threshold.
inline std::uint64_t min_valid_n(double c, double delta, double beta, double alpha) {
    if (!(c * delta < (1.0 - beta) * (1.0 - beta)))
        throw InvalidParameterError("no valid n: c*delta >= (1-beta)^2");
    const auto holds = [&](std::uint64_t n) {
        const double nn = static_cast<double>(n);
        const double lhs = (c * delta / 2.0) * nn * nn;
        const double rhs = ((1.0 - beta) * (1.0 - beta) / 2.0) * nn * nn -
                           0.5 * ((1.0 - beta) * nn + delta * (1.0 - beta) * std::pow(nn, 2.0 - alpha));
        return lhs < rhs;
    };
    std::uint64_t lo = 4, hi = 4;
    while (!holds(hi)) {
        lo = hi + 1;
        hi *= 2;
        if (hi > (std::uint64_t{1} << 62))
            throw InvalidParameterError("no valid n below 2^62");
    }
    while (lo < hi) {
        const std::uint64_t mid = lo + (hi - lo) / 2;
        if (holds(mid))
            hi = mid;
        else
            lo = mid + 1;
    }
    return lo < 4 ? 4 : lo;
}

// Checks the parameter regime of the C4 game. Violations are data, not
// exceptions; an empty list means the regime is valid.
inline std::vector<std::string> validate_params(const GameParams& p) {
    std::vector<std::string> v;
    if (p.n < 4) v.push_back("n >= 4 violated (n = " + std::to_string(p.n) + ")");
    if (p.q < 1) v.push_back("q >= 1 violated (q = " + std::to_string(p.q) + ")");
    if (!(p.alpha > 0.0 && p.alpha < 1.0)) v.push_back("alpha in (0,1) violated");
    if (!(p.delta > 1.0)) v.push_back("delta > 1 violated");
    const double cd = p.c * p.delta;
    if (!(cd < 0.16)) v.push_back("c*delta < 0.16 violated (c*delta = " + std::to_string(cd) + ")");
    if (!(p.beta > 0.6))
        v.push_back("beta > 0.6 violated (beta = " + std::to_string(p.beta) + ")");
    if (cd >= 0.0 && cd < 1.0) {
        const double upper = 1.0 - std::sqrt(cd);
        if (!(p.beta < upper))
            v.push_back("beta < 1 - sqrt(c*delta) violated (bound = " + std::to_string(upper) + ")");
    }
    const double q_bound = ((1.0 - p.beta) * (1.0 - p.beta) / p.delta) *
                           std::pow(static_cast<double>(p.n), p.alpha);
    if (!(static_cast<double>(p.q) < q_bound))
        v.push_back("q < ((1-beta)^2/delta) n^alpha violated (bound = " + std::to_string(q_bound) +
                    ")");
    if (cd < (1.0 - p.beta) * (1.0 - p.beta)) {
        const std::uint64_t n_min = min_valid_n(p.c, p.delta, p.beta, p.alpha);
        if (p.n < n_min)
            v.push_back("n >= min_valid_n violated (min_valid_n = " + std::to_string(n_min) + ")");
    }
    return v;
}

} // namespace posc4
