#pragma once

// The ECO decomposition of the Dyck lattice D_n into saturated chains, one
// chain per parent path in D_{n-1}, and the chain-count matrices and
// polynomials built from it.
//
// Every quantity is available through two routes. The oracle route counts
// explicit chains (exponential in n). The fast route iterates the rule
// operator L (polynomial in n). The identity checks run on either route.

#include <cstddef>
#include <optional>
#include <vector>

#include "ecodyck/dyck_path.hpp"
#include "ecodyck/int_poly.hpp"

namespace ecodyck {

enum class Route { fast, oracle };

struct SaturatedChain {
    DyckPath min_path;
    std::size_t cardinality = 0;
    std::size_t start_rank = 0;

    std::size_t end_rank() const noexcept { return start_rank + cardinality - 1; }
    /// Chain elements by increasing rank, rebuilt from the parent.
    std::vector<DyckPath> members() const;
};

/// Chains of D_n (n >= 2) in the enumeration order of their parents.
std::vector<SaturatedChain> decompose(std::size_t n, const EnumerationGuard& guard = {});

enum class MatrixForm { start_rank, end_rank };

/// Chain counts by rank (rows) and cardinality class k = cardinality - 2
/// (columns). The start-rank form has 1 + C(n-1, 2) rows, the end-rank form
/// 1 + C(n, 2). Trailing zero rows are kept.
class ChainMatrix {
public:
    ChainMatrix(std::size_t n, MatrixForm form);

    std::size_t n() const noexcept { return n_; }
    MatrixForm form() const noexcept { return form_; }
    std::size_t rows() const noexcept { return entries_.size(); }
    std::size_t cols() const noexcept { return n_ - 1; }

    const BigInt& at(std::size_t rank, std::size_t k) const { return entries_.at(rank).at(k); }
    BigInt& at(std::size_t rank, std::size_t k) { return entries_.at(rank).at(k); }
    const std::vector<std::vector<BigInt>>& entries() const noexcept { return entries_; }

    IntPoly column(std::size_t k) const;
    BigInt total() const;

    friend bool operator==(const ChainMatrix&, const ChainMatrix&) = default;

private:
    std::size_t n_;
    MatrixForm form_;
    std::vector<std::vector<BigInt>> entries_;
};

/// Column polynomials P_n^(k) and A_n^(k) for one n.
class ChainPolynomials {
public:
    static ChainPolynomials from_decomposition(std::size_t n, const EnumerationGuard& guard = {});
    /// P from L^{n-2}(1); A from the shift A^(k) = x^{k+1} P^(k).
    static ChainPolynomials from_recurrence(std::size_t n);
    static ChainPolynomials compute(std::size_t n, Route route, const EnumerationGuard& guard = {});

    std::size_t n() const noexcept { return n_; }

    /// Throws std::out_of_range unless 0 <= k <= n-2.
    const IntPoly& p(std::size_t k) const;
    const IntPoly& a(std::size_t k) const;
    /// Zero outside 0..n-2.
    IntPoly p_or_zero(std::ptrdiff_t k) const;

    IntPoly p_total() const;
    IntPoly a_total() const;

    ChainMatrix p_matrix() const;
    ChainMatrix a_matrix() const;

private:
    ChainPolynomials(std::size_t n, std::vector<IntPoly> p, std::vector<IntPoly> a);

    std::size_t n_;
    std::vector<IntPoly> p_;
    std::vector<IntPoly> a_;
};

ChainMatrix p_matrix(std::size_t n, Route route = Route::oracle, const EnumerationGuard& guard = {});
ChainMatrix a_matrix(std::size_t n, Route route = Route::oracle, const EnumerationGuard& guard = {});

IntPoly p_poly(std::size_t n, std::size_t k, Route route = Route::fast, const EnumerationGuard& guard = {});
IntPoly a_poly(std::size_t n, std::size_t k, Route route = Route::fast, const EnumerationGuard& guard = {});
IntPoly p_total(std::size_t n, Route route = Route::fast, const EnumerationGuard& guard = {});
IntPoly a_total(std::size_t n, Route route = Route::fast, const EnumerationGuard& guard = {});

/// Rank generating polynomial r_n(x) of D_n. The fast route reads it off the
/// chains of D_{n+1} (one chain per path of D_n, same rank); the oracle route
/// counts enumerated paths.
IntPoly rank_poly(std::size_t n, Route route = Route::fast, const EnumerationGuard& guard = {});

/// Rank polynomials r_1 .. r_{n_max} from one sequence of L iterations.
std::vector<IntPoly> rank_polys_fast(std::size_t n_max);

/// x A_n(x) - P_n(x)
IntPoly s_poly(std::size_t n, Route route = Route::fast, const EnumerationGuard& guard = {});
IntPoly s_poly(const ChainPolynomials& c);

// Identity checks. Each returns true when the identity holds exactly at n.
// With Route::oracle every side is built from explicit chains and paths.

/// x A_n - P_n equals diff_shifted(r_n).
bool check_difference_identity(std::size_t n, Route route, const EnumerationGuard& guard = {});
/// A_n^(k) == x^{k+1} P_n^(k) for all k. Only informative on the oracle route.
bool check_end_rank_shift(std::size_t n, Route route, const EnumerationGuard& guard = {});
/// s_n == sum_k (x^{k+2} - 1) P_n^(k).
bool check_s_expansion(std::size_t n, Route route, const EnumerationGuard& guard = {});
/// P_n^(k) == x^k (P_{n-1}^(k-1) + ... + P_{n-1}^(n-3)), the sum starting
/// at index 0 when k = 0. n >= 3.
bool check_qballot(std::size_t n, Route route = Route::oracle, const EnumerationGuard& guard = {});
/// P_n^(k) == x (P_n^(k-1) - x^{k-1} P_{n-1}^(k-2)) for k >= 1, with
/// P^(-1) = 0. n >= 3.
bool check_qballot_corollary(std::size_t n, Route route = Route::oracle, const EnumerationGuard& guard = {});
/// Slices of L^{n-2}(1) equal the decomposition's column polynomials.
bool check_operator_slices(std::size_t n, const EnumerationGuard& guard = {});

struct SymmetryReport {
    bool symmetric = true;
    std::optional<SaturatedChain> counterexample;  // first chain with start + end != C(n, 2)
};

SymmetryReport symmetry_report(std::size_t n, const EnumerationGuard& guard = {});

} // namespace ecodyck
