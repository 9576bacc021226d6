#include "ecodyck/rule_operator.hpp"

#include <algorithm>
#include <set>

#include <omp.h>

namespace ecodyck {

BiPoly apply_L(const BiPoly& p)
{
    if (p.is_zero()) return {};
    const auto& in = p.slices();
    const std::size_t m = in.size() - 1;

    // reach[k] = longest slice among k..m
    std::vector<std::size_t> reach(m + 1);
    reach[m] = in[m].size();
    for (std::size_t k = m; k-- > 0;) reach[k] = std::max(reach[k + 1], in[k].size());

    std::vector<std::vector<BigInt>> out(m + 2);
    out[0].resize(reach[0]);
    for (std::size_t k = 0; k <= m; ++k) out[k + 1].resize(reach[k] + k + 1);

    const auto width = static_cast<std::ptrdiff_t>(reach[0]);
#pragma omp parallel for schedule(static)
    for (std::ptrdiff_t jj = 0; jj < width; ++jj) {
        const auto j = static_cast<std::size_t>(jj);
        const BigInt* below = nullptr;  // suffix sum over slices > k
        for (std::size_t k = m + 1; k-- > 0;) {
            if (j >= reach[k]) continue;
            BigInt& dst = out[k + 1][j + k + 1];
            const bool has = j < in[k].size();
            if (below && has) mpz_add(dst.get_mpz_t(), below->get_mpz_t(), in[k].coeffs()[j].get_mpz_t());
            else if (below) dst = *below;
            else if (has) dst = in[k].coeffs()[j];
            below = &dst;
        }
        out[0][j] = *below;
    }

    std::vector<IntPoly> slices;
    slices.reserve(out.size());
    for (auto& c : out) slices.emplace_back(std::move(c));
    return BiPoly(std::move(slices));
}

BiPoly apply_L_reference(const BiPoly& p)
{
    const std::ptrdiff_t xdeg = p.x_degree();
    if (xdeg < 0) return {};
    const std::size_t m = p.slices().size() - 1;
    std::vector<std::vector<BigInt>> out(m + 2, std::vector<BigInt>(static_cast<std::size_t>(xdeg) + m + 2));
    for (std::size_t beta = 0; beta <= m; ++beta) {
        const auto& c = p.slices()[beta].coeffs();
        for (std::size_t alpha = 0; alpha < c.size(); ++alpha) {
            if (sgn(c[alpha]) == 0) continue;
            for (std::size_t i = 0; i <= beta + 1; ++i) out[i][alpha + i] += c[alpha];
        }
    }
    std::vector<IntPoly> slices;
    for (auto& c : out) slices.emplace_back(std::move(c));
    return BiPoly(std::move(slices));
}

BiPoly p_bipoly(std::size_t n)
{
    if (n < 2) throw std::invalid_argument("P_n(x,t) is defined for n >= 2");
    BiPoly p = BiPoly::one();
    for (std::size_t i = 2; i < n; ++i) p = apply_L(p);
    return p;
}

std::vector<BiPoly> p_bipoly_sequence(std::size_t n_max)
{
    if (n_max < 2) throw std::invalid_argument("P_n(x,t) is defined for n >= 2");
    std::vector<BiPoly> seq;
    seq.reserve(n_max - 1);
    seq.push_back(BiPoly::one());
    for (std::size_t n = 3; n <= n_max; ++n) seq.push_back(apply_L(seq.back()));
    return seq;
}

bool check_module_homomorphism(const BiPoly& p, std::size_t alpha)
{
    return apply_L(p.shifted(alpha)) == apply_L(p).shifted(alpha);
}

std::vector<TwoLabel> omega_sons(TwoLabel label)
{
    std::vector<TwoLabel> sons;
    sons.reserve(label.beta + 2);
    for (std::size_t i = 0; i <= label.beta + 1; ++i) sons.push_back({label.alpha + i, i});
    return sons;
}

BigInt LabelDistribution::count(TwoLabel label) const
{
    auto it = counts.find(label);
    return it == counts.end() ? BigInt(0) : it->second;
}

BigInt LabelDistribution::total() const
{
    BigInt s = 0;
    for (const auto& [_, c] : counts) s += c;
    return s;
}

LabelDistribution distribution_from(const BiPoly& p, std::size_t level)
{
    LabelDistribution d;
    d.level = level;
    for (std::size_t beta = 0; beta < p.slices().size(); ++beta) {
        const auto& c = p.slices()[beta].coeffs();
        for (std::size_t alpha = 0; alpha < c.size(); ++alpha)
            if (sgn(c[alpha]) != 0) d.counts.emplace(TwoLabel{alpha, beta}, c[alpha]);
    }
    return d;
}

LabelDistribution omega_level(std::size_t level) { return distribution_from(p_bipoly(level + 2), level); }

std::vector<LabelDistribution> omega_levels(std::size_t max_level)
{
    const auto seq = p_bipoly_sequence(max_level + 2);
    std::vector<LabelDistribution> out;
    out.reserve(seq.size());
    for (std::size_t l = 0; l < seq.size(); ++l) out.push_back(distribution_from(seq[l], l));
    return out;
}

std::vector<TwoLabel> eco_matrix_columns(std::size_t max_level)
{
    std::vector<TwoLabel> cols;
    const std::size_t top = max_label_value(max_level);
    for (std::size_t a = 0; a <= top; ++a)
        for (std::size_t b = 0; b * (b + 1) / 2 <= a; ++b) cols.push_back({a, b});
    return cols;
}

bool check_column_recursion(const std::vector<LabelDistribution>& levels)
{
    for (std::size_t l = 1; l < levels.size(); ++l) {
        const auto& prev = levels[l - 1];
        const auto& cur = levels[l];
        std::set<TwoLabel> candidates;
        for (const auto& [lab, _] : cur.counts) candidates.insert(lab);
        for (const auto& [lab, _] : prev.counts)
            for (std::size_t i = 0; i <= lab.beta + 1; ++i) candidates.insert({lab.alpha + i, i});

        for (const TwoLabel lab : candidates) {
            BigInt expected = 0;
            if (lab.alpha >= lab.beta) {
                const std::size_t base = lab.alpha - lab.beta;
                const std::size_t from = lab.beta == 0 ? 0 : lab.beta - 1;
                for (auto it = prev.counts.lower_bound({base, from});
                     it != prev.counts.end() && it->first.alpha == base; ++it)
                    expected += it->second;
            }
            if (cur.count(lab) != expected) return false;
        }
    }
    return true;
}

bool check_column_recursion(std::size_t max_level)
{
    if (max_level < 1) throw std::invalid_argument("column recursion needs at least two levels");
    return check_column_recursion(omega_levels(max_level));
}

std::vector<TreeLevel> tree_expand(std::size_t max_level, const EnumerationGuard& guard)
{
    guard.require(catalan(max_level + 1), "expanding the generating tree to level " + std::to_string(max_level));
    std::vector<TreeLevel> levels;
    levels.push_back({TreeNode{{0, 0}, 0}});
    for (std::size_t l = 1; l <= max_level; ++l) {
        TreeLevel next;
        const auto& prev = levels.back();
        for (std::size_t i = 0; i < prev.size(); ++i)
            for (TwoLabel son : omega_sons(prev[i].label)) next.push_back({son, i});
        levels.push_back(std::move(next));
    }
    return levels;
}

LabelDistribution tally(const TreeLevel& nodes, std::size_t level)
{
    LabelDistribution d;
    d.level = level;
    for (const auto& node : nodes) d.counts[node.label] += 1;
    return d;
}

} // namespace ecodyck
