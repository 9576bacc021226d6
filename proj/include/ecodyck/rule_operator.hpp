#pragma once

// The rule operator L on Z[x][t],
//
//     L(x^a t^b) = x^a * (1 + x t + x^2 t^2 + ... + x^{b+1} t^{b+1}),
//
// its iterates P_n(x, t) = L^{n-2}(1), and the two-labelled succession rule
//
//     (0_0),   (a_b) -> (a_0) ((a+1)_1) ... ((a+b+1)_{b+1})
//
// whose level-l label distribution is the coefficient table of P_{l+2}.

#include <compare>
#include <cstddef>
#include <map>
#include <string>
#include <vector>

#include "ecodyck/dyck_path.hpp"
#include "ecodyck/int_poly.hpp"

namespace ecodyck {

/// Applies L slice-wise: output slice 0 is the sum of all input slices and
/// output slice k >= 1 is x^k times the sum of input slices k-1, k, ....
/// The suffix sums over t run independently for every x-coefficient, and
/// those columns are split across OpenMP threads.
BiPoly apply_L(const BiPoly& p);

/// Monomial-by-monomial application of the defining formula. Serial, kept
/// as the reference for apply_L.
BiPoly apply_L_reference(const BiPoly& p);

/// L^{n-2}(1), n >= 2. Slice k is the column polynomial P_n^(k)(x).
BiPoly p_bipoly(std::size_t n);

/// P_2, P_3, ..., P_{n_max} in one pass (index i holds P_{i+2}).
std::vector<BiPoly> p_bipoly_sequence(std::size_t n_max);

/// L(x^alpha * p) == x^alpha * L(p).
bool check_module_homomorphism(const BiPoly& p, std::size_t alpha);

struct TwoLabel {
    std::size_t alpha = 0;  // label value, x-exponent
    std::size_t beta = 0;   // subscript, t-exponent

    friend auto operator<=>(const TwoLabel&, const TwoLabel&) = default;
    std::string str() const { return std::to_string(alpha) + "_" + std::to_string(beta); }
};

/// Sons of one node under the two-labelled rule.
std::vector<TwoLabel> omega_sons(TwoLabel label);

struct LabelDistribution {
    std::size_t level = 0;
    std::map<TwoLabel, BigInt> counts;  // positive counts only

    BigInt count(TwoLabel label) const;
    BigInt total() const;
    friend bool operator==(const LabelDistribution&, const LabelDistribution&) = default;
};

/// Label counts at one level, read off p_bipoly(level + 2).
LabelDistribution omega_level(std::size_t level);
LabelDistribution distribution_from(const BiPoly& p, std::size_t level);

/// Levels 0..max_level from a single sequence of L iterations.
std::vector<LabelDistribution> omega_levels(std::size_t max_level);

/// Column layout of the ECO matrix table for levels 0..max_level: labels
/// a_b ordered by a, then b, with b ranging over the subscripts that can
/// ever carry the value a (b(b+1)/2 <= a).
std::vector<TwoLabel> eco_matrix_columns(std::size_t max_level);

/// Largest label value present at a level; C(level+1, 2).
constexpr std::size_t max_label_value(std::size_t level) noexcept { return choose2(level + 1); }

/// Checks count(k_i, l) == sum_{j >= max(i-1, 0)} count((k-i)_j, l-1) for
/// every label of levels 1..max_level (and the empty labels beyond them).
bool check_column_recursion(std::size_t max_level);
bool check_column_recursion(const std::vector<LabelDistribution>& levels);

struct TreeNode {
    TwoLabel label;
    std::size_t parent = 0;  // index in the previous level; 0 for the root
};
using TreeLevel = std::vector<TreeNode>;

/// Explicit generating tree, levels 0..max_level. Oracle and display only.
std::vector<TreeLevel> tree_expand(std::size_t max_level, const EnumerationGuard& guard = {});

/// Label counts of an explicit tree level.
LabelDistribution tally(const TreeLevel& nodes, std::size_t level);

} // namespace ecodyck
