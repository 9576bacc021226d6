#include "ecodyck/chains.hpp"

#include <stdexcept>
#include <string>

#include "ecodyck/rule_operator.hpp"

namespace ecodyck {

namespace {

void require_n(std::size_t n, std::size_t min, const char* what)
{
    if (n < min) throw std::invalid_argument(std::string(what) + " requires n >= " + std::to_string(min));
}

std::vector<IntPoly> shifted_columns(const std::vector<IntPoly>& p)
{
    std::vector<IntPoly> a;
    a.reserve(p.size());
    for (std::size_t k = 0; k < p.size(); ++k) a.push_back(mul_monomial(p[k], k + 1));
    return a;
}

IntPoly poly_from_counts(const std::vector<std::uint64_t>& hist)
{
    std::vector<BigInt> c;
    c.reserve(hist.size());
    for (auto v : hist) c.emplace_back(static_cast<unsigned long>(v));
    return IntPoly(std::move(c));
}

} // namespace

std::vector<DyckPath> SaturatedChain::members() const { return eco_sons(eco_parent(min_path)); }

std::vector<SaturatedChain> decompose(std::size_t n, const EnumerationGuard& guard)
{
    require_n(n, 2, "the ECO decomposition");
    guard.require(catalan(n), "decomposing D_" + std::to_string(n));
    std::vector<SaturatedChain> chains;
    for (const auto& parent : enumerate(n - 1, guard)) {
        // the rank-minimal son appends a peak at height 0
        std::vector<Step> s(parent.steps().begin(), parent.steps().end());
        s.push_back(Step::up);
        s.push_back(Step::down);
        chains.push_back({DyckPath(std::move(s)), last_descent_length(parent) + 1, rank(parent)});
    }
    return chains;
}

ChainMatrix::ChainMatrix(std::size_t n, MatrixForm form) : n_(n), form_(form)
{
    require_n(n, 2, "a chain matrix");
    const std::size_t rows = 1 + (form == MatrixForm::start_rank ? choose2(n - 1) : choose2(n));
    entries_.assign(rows, std::vector<BigInt>(n - 1));
}

IntPoly ChainMatrix::column(std::size_t k) const
{
    if (k >= cols()) throw std::out_of_range("chain matrix column " + std::to_string(k));
    std::vector<BigInt> c;
    c.reserve(rows());
    for (const auto& row : entries_) c.push_back(row[k]);
    return IntPoly(std::move(c));
}

BigInt ChainMatrix::total() const
{
    BigInt s = 0;
    for (const auto& row : entries_)
        for (const auto& v : row) s += v;
    return s;
}

ChainPolynomials::ChainPolynomials(std::size_t n, std::vector<IntPoly> p, std::vector<IntPoly> a)
    : n_(n), p_(std::move(p)), a_(std::move(a))
{
    p_.resize(n - 1);
    a_.resize(n - 1);
}

ChainPolynomials ChainPolynomials::from_decomposition(std::size_t n, const EnumerationGuard& guard)
{
    ChainMatrix pm(n, MatrixForm::start_rank), am(n, MatrixForm::end_rank);
    for (const auto& c : decompose(n, guard)) {
        pm.at(c.start_rank, c.cardinality - 2) += 1;
        am.at(c.end_rank(), c.cardinality - 2) += 1;
    }
    std::vector<IntPoly> p, a;
    for (std::size_t k = 0; k + 2 <= n; ++k) {
        p.push_back(pm.column(k));
        a.push_back(am.column(k));
    }
    return ChainPolynomials(n, std::move(p), std::move(a));
}

ChainPolynomials ChainPolynomials::from_recurrence(std::size_t n)
{
    require_n(n, 2, "the chain polynomials");
    std::vector<IntPoly> p = p_bipoly(n).slices();
    p.resize(n - 1);
    auto a = shifted_columns(p);
    return ChainPolynomials(n, std::move(p), std::move(a));
}

ChainPolynomials ChainPolynomials::compute(std::size_t n, Route route, const EnumerationGuard& guard)
{
    return route == Route::fast ? from_recurrence(n) : from_decomposition(n, guard);
}

const IntPoly& ChainPolynomials::p(std::size_t k) const
{
    if (k >= p_.size()) throw std::out_of_range("P_" + std::to_string(n_) + "^(" + std::to_string(k) + ") does not exist");
    return p_[k];
}

const IntPoly& ChainPolynomials::a(std::size_t k) const
{
    if (k >= a_.size()) throw std::out_of_range("A_" + std::to_string(n_) + "^(" + std::to_string(k) + ") does not exist");
    return a_[k];
}

IntPoly ChainPolynomials::p_or_zero(std::ptrdiff_t k) const
{
    if (k < 0 || static_cast<std::size_t>(k) >= p_.size()) return {};
    return p_[static_cast<std::size_t>(k)];
}

IntPoly ChainPolynomials::p_total() const
{
    IntPoly s;
    for (const auto& c : p_) s += c;
    return s;
}

IntPoly ChainPolynomials::a_total() const
{
    IntPoly s;
    for (const auto& c : a_) s += c;
    return s;
}

namespace {

ChainMatrix matrix_from_columns(std::size_t n, MatrixForm form, const std::vector<IntPoly>& cols)
{
    ChainMatrix m(n, form);
    for (std::size_t k = 0; k < cols.size(); ++k) {
        const auto& c = cols[k].coeffs();
        if (c.size() > m.rows()) throw std::logic_error("chain polynomial exceeds the matrix row range");
        for (std::size_t j = 0; j < c.size(); ++j) m.at(j, k) = c[j];
    }
    return m;
}

} // namespace

ChainMatrix ChainPolynomials::p_matrix() const { return matrix_from_columns(n_, MatrixForm::start_rank, p_); }
ChainMatrix ChainPolynomials::a_matrix() const { return matrix_from_columns(n_, MatrixForm::end_rank, a_); }

ChainMatrix p_matrix(std::size_t n, Route route, const EnumerationGuard& guard)
{
    return ChainPolynomials::compute(n, route, guard).p_matrix();
}

ChainMatrix a_matrix(std::size_t n, Route route, const EnumerationGuard& guard)
{
    return ChainPolynomials::compute(n, route, guard).a_matrix();
}

IntPoly p_poly(std::size_t n, std::size_t k, Route route, const EnumerationGuard& guard)
{
    return ChainPolynomials::compute(n, route, guard).p(k);
}

IntPoly a_poly(std::size_t n, std::size_t k, Route route, const EnumerationGuard& guard)
{
    return ChainPolynomials::compute(n, route, guard).a(k);
}

IntPoly p_total(std::size_t n, Route route, const EnumerationGuard& guard)
{
    return ChainPolynomials::compute(n, route, guard).p_total();
}

IntPoly a_total(std::size_t n, Route route, const EnumerationGuard& guard)
{
    return ChainPolynomials::compute(n, route, guard).a_total();
}

IntPoly rank_poly(std::size_t n, Route route, const EnumerationGuard& guard)
{
    require_n(n, 1, "rank_poly");
    if (route == Route::fast) return p_bipoly(n + 1).sum_slices();
    return poly_from_counts(rank_histogram(n, guard));
}

std::vector<IntPoly> rank_polys_fast(std::size_t n_max)
{
    require_n(n_max, 1, "rank_polys_fast");
    const auto seq = p_bipoly_sequence(n_max + 1);
    std::vector<IntPoly> out;
    out.reserve(n_max);
    for (std::size_t n = 1; n <= n_max; ++n) out.push_back(seq[n - 1].sum_slices());
    return out;
}

IntPoly s_poly(const ChainPolynomials& c) { return mul_monomial(c.a_total(), 1) - c.p_total(); }

IntPoly s_poly(std::size_t n, Route route, const EnumerationGuard& guard)
{
    return s_poly(ChainPolynomials::compute(n, route, guard));
}

bool check_difference_identity(std::size_t n, Route route, const EnumerationGuard& guard)
{
    return s_poly(n, route, guard) == diff_shifted(rank_poly(n, route, guard));
}

bool check_end_rank_shift(std::size_t n, Route route, const EnumerationGuard& guard)
{
    const auto c = ChainPolynomials::compute(n, route, guard);
    for (std::size_t k = 0; k + 2 <= n; ++k)
        if (c.a(k) != mul_monomial(c.p(k), k + 1)) return false;
    return true;
}

bool check_s_expansion(std::size_t n, Route route, const EnumerationGuard& guard)
{
    const auto c = ChainPolynomials::compute(n, route, guard);
    IntPoly rhs;
    for (std::size_t k = 0; k + 2 <= n; ++k) rhs += mul_monomial(c.p(k), k + 2) - c.p(k);
    return s_poly(c) == rhs;
}

bool check_qballot(std::size_t n, Route route, const EnumerationGuard& guard)
{
    require_n(n, 3, "the q-ballot recurrence");
    const auto cur = ChainPolynomials::compute(n, route, guard);
    const auto prev = ChainPolynomials::compute(n - 1, route, guard);
    for (std::size_t k = 0; k + 2 <= n; ++k) {
        IntPoly sum;
        for (std::size_t i = (k == 0 ? 0 : k - 1); i + 3 <= n; ++i) sum += prev.p(i);
        if (cur.p(k) != mul_monomial(sum, k)) return false;
    }
    return true;
}

bool check_qballot_corollary(std::size_t n, Route route, const EnumerationGuard& guard)
{
    require_n(n, 3, "the q-ballot difference form");
    const auto cur = ChainPolynomials::compute(n, route, guard);
    const auto prev = ChainPolynomials::compute(n - 1, route, guard);
    for (std::size_t k = 1; k + 2 <= n; ++k) {
        const IntPoly inner = cur.p(k - 1) - mul_monomial(prev.p_or_zero(static_cast<std::ptrdiff_t>(k) - 2), k - 1);
        if (cur.p(k) != mul_monomial(inner, 1)) return false;
    }
    return true;
}

bool check_operator_slices(std::size_t n, const EnumerationGuard& guard)
{
    const auto c = ChainPolynomials::from_decomposition(n, guard);
    const BiPoly op = p_bipoly(n);
    if (op.t_degree() != static_cast<std::ptrdiff_t>(n) - 2) return false;
    for (std::size_t k = 0; k + 2 <= n; ++k)
        if (op.slice(k) != c.p(k)) return false;
    return true;
}

SymmetryReport symmetry_report(std::size_t n, const EnumerationGuard& guard)
{
    SymmetryReport rep;
    const std::size_t target = choose2(n);
    for (auto& c : decompose(n, guard)) {
        if (c.start_rank + c.end_rank() != target) {
            rep.symmetric = false;
            rep.counterexample = std::move(c);
            break;
        }
    }
    return rep;
}

} // namespace ecodyck
