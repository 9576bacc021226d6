#pragma once

// Unimodality and log-concavity of integer sequences, and the sweep of the
// rank-unimodality conjecture over the Dyck lattices D_1 .. D_{n_max}.

#include <cstddef>
#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "ecodyck/chains.hpp"
#include "ecodyck/int_poly.hpp"

namespace ecodyck {

struct SeqReport {
    bool unimodal = true;
    /// (d, a): seq[d] > seq[d+1] is the first strict descent and
    /// seq[a] < seq[a+1] the first strict ascent after it.
    std::optional<std::pair<std::size_t, std::size_t>> first_violation;
    /// The plateau of the maximum starting at its first occurrence.
    std::size_t argmax_lo = 0;
    std::size_t argmax_hi = 0;
    bool log_concave = true;
    /// First interior i with seq[i]^2 < seq[i-1] * seq[i+1].
    std::optional<std::size_t> first_lc_violation;
    bool has_internal_zero = false;
};

/// Throws std::invalid_argument on an empty sequence.
SeqReport analyze(std::span<const BigInt> seq);
SeqReport analyze(const IntPoly& coefficients);

struct SignProfile {
    bool is_single_signchange = false;
    /// Largest k with s_0..s_k all <= 0, present when the rest is >= 0.
    std::optional<std::size_t> kbar;
};

SignProfile s_sign_profile(const IntPoly& s);
/// Profile of s_n = diff_shifted(r_n). n >= 1.
SignProfile s_sign_profile(std::size_t n);

enum class Execution { serial, parallel };

struct SweepRow {
    std::size_t n = 0;
    IntPoly rank_poly;
    SeqReport report;
    SignProfile sign;
    BigInt catalan;  // row sum, as a consistency column
};

/// Rank polynomials for n = 1..n_max with their verdicts, in n order. The
/// fast route builds all rows from one sequence of L iterations and
/// analyzes them concurrently; the oracle route enumerates every D_n.
std::vector<SweepRow> conjecture_sweep(std::size_t n_max, Route route = Route::fast,
                                       const EnumerationGuard& guard = {},
                                       Execution exec = Execution::parallel);

bool all_unimodal(const std::vector<SweepRow>& rows);

} // namespace ecodyck
