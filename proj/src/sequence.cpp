#include "ecodyck/sequence.hpp"

#include <stdexcept>

#include <omp.h>

namespace ecodyck {

SeqReport analyze(std::span<const BigInt> seq)
{
    if (seq.empty()) throw std::invalid_argument("analyze requires a nonempty sequence");
    SeqReport r;

    std::optional<std::size_t> descent;
    for (std::size_t i = 0; i + 1 < seq.size(); ++i) {
        if (!descent && seq[i] > seq[i + 1]) descent = i;
        else if (descent && seq[i] < seq[i + 1]) {
            r.unimodal = false;
            r.first_violation = std::pair{*descent, i};
            break;
        }
    }

    std::size_t lo = 0;
    for (std::size_t i = 1; i < seq.size(); ++i)
        if (seq[i] > seq[lo]) lo = i;
    std::size_t hi = lo;
    while (hi + 1 < seq.size() && seq[hi + 1] == seq[lo]) ++hi;
    r.argmax_lo = lo;
    r.argmax_hi = hi;

    for (std::size_t i = 1; i + 1 < seq.size(); ++i) {
        if (seq[i] * seq[i] < seq[i - 1] * seq[i + 1]) {
            r.log_concave = false;
            r.first_lc_violation = i;
            break;
        }
    }

    bool seen_nonzero = false, pending_zero = false;
    for (const auto& v : seq) {
        if (sgn(v) == 0) {
            if (seen_nonzero) pending_zero = true;
        } else {
            if (pending_zero) r.has_internal_zero = true;
            seen_nonzero = true;
        }
    }
    return r;
}

SeqReport analyze(const IntPoly& coefficients) { return analyze(std::span<const BigInt>(coefficients.coeffs())); }

SignProfile s_sign_profile(const IntPoly& s)
{
    const auto& c = s.coeffs();
    SignProfile prof;
    std::size_t prefix = 0;  // length of the nonpositive prefix
    while (prefix < c.size() && sgn(c[prefix]) <= 0) ++prefix;
    for (std::size_t k = prefix; k < c.size(); ++k)
        if (sgn(c[k]) < 0) return prof;
    prof.is_single_signchange = true;
    if (prefix > 0) prof.kbar = prefix - 1;
    return prof;
}

SignProfile s_sign_profile(std::size_t n) { return s_sign_profile(diff_shifted(rank_poly(n, Route::fast))); }

namespace {

SweepRow analyze_row(std::size_t n, IntPoly r)
{
    SweepRow row;
    row.n = n;
    row.report = analyze(r);
    row.sign = s_sign_profile(diff_shifted(r));
    row.catalan = coeff_sum(r);
    row.rank_poly = std::move(r);
    return row;
}

} // namespace

std::vector<SweepRow> conjecture_sweep(std::size_t n_max, Route route, const EnumerationGuard& guard,
                                       Execution exec)
{
    if (n_max < 1) throw std::invalid_argument("the sweep needs n_max >= 1");
    std::vector<IntPoly> polys;
    if (route == Route::fast) {
        polys = rank_polys_fast(n_max);
    } else {
        guard.require(catalan(n_max), "oracle sweep up to D_" + std::to_string(n_max));
        polys.resize(n_max);
        for (std::size_t n = 1; n <= n_max; ++n) polys[n - 1] = rank_poly(n, Route::oracle, guard);
    }

    std::vector<SweepRow> rows(n_max);
    const auto count = static_cast<std::ptrdiff_t>(n_max);
    if (exec == Execution::parallel) {
#pragma omp parallel for schedule(dynamic)
        for (std::ptrdiff_t i = 0; i < count; ++i)
            rows[i] = analyze_row(static_cast<std::size_t>(i) + 1, std::move(polys[i]));
    } else {
        for (std::ptrdiff_t i = 0; i < count; ++i)
            rows[i] = analyze_row(static_cast<std::size_t>(i) + 1, std::move(polys[i]));
    }
    return rows;
}

bool all_unimodal(const std::vector<SweepRow>& rows)
{
    for (const auto& r : rows)
        if (!r.report.unimodal) return false;
    return true;
}

} // namespace ecodyck
