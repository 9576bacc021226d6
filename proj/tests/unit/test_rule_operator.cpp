#include <doctest.h>

#include <random>

#include "ecodyck/chains.hpp"
#include "ecodyck/rule_operator.hpp"
#include "oracles.hpp"

using namespace ecodyck;

namespace {

BiPoly random_bipoly(std::mt19937& rng)
{
    std::uniform_int_distribution<long> c(-6, 6);
    std::uniform_int_distribution<int> len(0, 5);
    std::vector<IntPoly> slices(static_cast<std::size_t>(len(rng)));
    for (auto& s : slices) {
        std::vector<BigInt> v(static_cast<std::size_t>(len(rng)));
        for (auto& x : v) x = c(rng);
        s = IntPoly(std::move(v));
    }
    return BiPoly(std::move(slices));
}

LabelDistribution dist(std::size_t level, std::initializer_list<std::tuple<std::size_t, std::size_t, long>> items)
{
    LabelDistribution d;
    d.level = level;
    for (auto [a, b, c] : items) d.counts[{a, b}] = c;
    return d;
}

} // namespace

TEST_CASE("operator on small inputs")
{
    const auto l1 = apply_L(BiPoly::one());
    CHECK(l1 == BiPoly({IntPoly::from_ints({1}), IntPoly::from_ints({0, 1})}));
    const auto l2 = apply_L(l1);
    CHECK(l2 == BiPoly({IntPoly::from_ints({1, 1}), IntPoly::from_ints({0, 1, 1}), IntPoly::from_ints({0, 0, 0, 1})}));
    CHECK(l2 == p_bipoly(4));
    CHECK(apply_L(BiPoly{}).is_zero());
}

TEST_CASE("parallel operator matches the reference")
{
    std::mt19937 rng(11);
    for (int trial = 0; trial < 200; ++trial) {
        const auto p = random_bipoly(rng);
        REQUIRE(apply_L(p) == apply_L_reference(p));
    }
    BiPoly p = BiPoly::one();
    for (int i = 0; i < 14; ++i) {
        REQUIRE(apply_L(p) == apply_L_reference(p));
        p = apply_L(p);
    }
}

TEST_CASE("linearity and module property")
{
    std::mt19937 rng(5);
    for (int trial = 0; trial < 200; ++trial) {
        const auto p = random_bipoly(rng), q = random_bipoly(rng);
        REQUIRE(apply_L(p + q) == apply_L(p) + apply_L(q));
        const auto alpha = static_cast<std::size_t>(trial % 6);
        REQUIRE(check_module_homomorphism(p, alpha));
        REQUIRE(apply_L(p.shifted(alpha)) == apply_L(p).shifted(alpha));
    }
}

TEST_CASE("iterates")
{
    CHECK(p_bipoly(2) == BiPoly::one());
    CHECK(p_bipoly(5).slices() == std::vector<IntPoly>{IntPoly::from_ints({1, 2, 1, 1}),
                                                        IntPoly::from_ints({0, 1, 2, 1, 1}),
                                                        IntPoly::from_ints({0, 0, 0, 1, 1, 1}),
                                                        IntPoly::from_ints({0, 0, 0, 0, 0, 0, 1})});
    CHECK(p_bipoly(9).eval(1, 1) == oracle::catalan_convolution(8)[8]);
    CHECK_THROWS(p_bipoly(1));

    const auto seq = p_bipoly_sequence(14);
    REQUIRE(seq.size() == 13);
    for (std::size_t n = 2; n <= 14; ++n) {
        REQUIRE(seq[n - 2] == p_bipoly(n));
        REQUIRE(seq[n - 2].t_degree() == static_cast<std::ptrdiff_t>(n - 2));
        REQUIRE(seq[n - 2].x_degree() == static_cast<std::ptrdiff_t>(choose2(n - 1)));
    }
    for (std::size_t n = 2; n <= 10; ++n) {
        const auto c = ChainPolynomials::from_decomposition(n);
        for (std::size_t k = 0; k + 2 <= n; ++k) REQUIRE(seq[n - 2].slice(k) == c.p(k));
    }
}

TEST_CASE("two-labelled rule")
{
    CHECK(omega_sons({0, 0}) == std::vector<TwoLabel>{{0, 0}, {1, 1}});
    CHECK(omega_sons({1, 1}) == std::vector<TwoLabel>{{1, 0}, {2, 1}, {3, 2}});
    CHECK(TwoLabel{6, 3}.str() == "6_3");

    CHECK(omega_level(0) == dist(0, {{0, 0, 1}}));
    CHECK(omega_level(3) == dist(3, {{0, 0, 1},
                                     {1, 0, 2},
                                     {1, 1, 1},
                                     {2, 0, 1},
                                     {2, 1, 2},
                                     {3, 0, 1},
                                     {3, 1, 1},
                                     {3, 2, 1},
                                     {4, 1, 1},
                                     {4, 2, 1},
                                     {5, 2, 1},
                                     {6, 3, 1}}));
    const auto levels = omega_levels(12);
    const auto cat = oracle::catalan_convolution(13);
    for (std::size_t l = 0; l <= 12; ++l) {
        REQUIRE(levels[l] == omega_level(l));
        REQUIRE(levels[l].total() == cat[l + 1]);
        REQUIRE(levels[l].count({0, 0}) == 1);
        for (const auto& [label, c] : levels[l].counts) {
            REQUIRE(label.beta * (label.beta + 1) / 2 <= label.alpha);
            REQUIRE(label.alpha <= max_label_value(l));
            REQUIRE(c > 0);
        }
    }
}

TEST_CASE("table layout")
{
    const auto cols = eco_matrix_columns(7);
    std::vector<std::string> first;
    for (std::size_t i = 0; i < 15; ++i) first.push_back(cols[i].str());
    CHECK(first == std::vector<std::string>{"0_0", "1_0", "1_1", "2_0", "2_1", "3_0", "3_1", "3_2", "4_0", "4_1",
                                            "4_2", "5_0", "5_1", "5_2", "6_0"});
    CHECK(cols.back().alpha == max_label_value(7));
    CHECK(max_label_value(3) == 6);
}

TEST_CASE("explicit generating tree")
{
    const auto tree = tree_expand(6);
    REQUIRE(tree.size() == 7);
    const std::vector<std::size_t> sizes = {1, 2, 5, 14, 42, 132, 429};
    for (std::size_t l = 0; l <= 6; ++l) {
        REQUIRE(tree[l].size() == sizes[l]);
        REQUIRE(tally(tree[l], l) == omega_level(l));
    }
    CHECK(tree[1][0].label == TwoLabel{0, 0});
    CHECK(tree[1][1].label == TwoLabel{1, 1});
    std::vector<std::pair<std::string, std::size_t>> level2;
    for (const auto& node : tree[2]) level2.push_back({node.label.str(), node.parent});
    CHECK(level2 == std::vector<std::pair<std::string, std::size_t>>{
                        {"0_0", 0}, {"1_1", 0}, {"1_0", 1}, {"2_1", 1}, {"3_2", 1}});
    CHECK_THROWS_AS(tree_expand(12, EnumerationGuard{1000}), GuardExceeded);
}

TEST_CASE("column recursion")
{
    CHECK(check_column_recursion(10));
    auto levels = omega_levels(5);
    levels[4].counts[{4, 1}] += 1;
    CHECK_FALSE(check_column_recursion(levels));
}
