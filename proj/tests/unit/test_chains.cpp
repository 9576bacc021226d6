#include <doctest.h>

#include <algorithm>
#include <map>
#include <set>

#include "ecodyck/chains.hpp"
#include "oracles.hpp"

using namespace ecodyck;

namespace {

IntPoly poly_of(const std::vector<mpz_class>& v) { return IntPoly(std::vector<BigInt>(v.begin(), v.end())); }

// Chain counts by (start rank, k) from brute-force words: a word belongs to
// the chain of the word obtained by deleting its last UD.
std::map<std::pair<std::size_t, std::size_t>, long> brute_chain_counts(std::size_t n)
{
    std::map<std::string, std::pair<std::size_t, std::size_t>> by_parent;  // min rank, size
    for (const auto& w : oracle::dyck_words(n)) {
        const auto u = w.rfind('U');
        const std::string parent = w.substr(0, u) + w.substr(u + 2);
        auto [it, fresh] = by_parent.try_emplace(parent, oracle::rank(w), 0);
        it->second.first = std::min(it->second.first, oracle::rank(w));
        ++it->second.second;
    }
    std::map<std::pair<std::size_t, std::size_t>, long> counts;
    for (const auto& [parent, info] : by_parent) ++counts[{info.first, info.second - 2}];
    return counts;
}

} // namespace

TEST_CASE("decomposition of small lattices")
{
    const auto d2 = decompose(2);
    REQUIRE(d2.size() == 1);
    CHECK(d2[0].cardinality == 2);
    CHECK(d2[0].start_rank == 0);

    std::multiset<std::pair<std::size_t, std::size_t>> got;
    for (const auto& c : decompose(4)) got.insert({c.start_rank, c.cardinality});
    CHECK(got == std::multiset<std::pair<std::size_t, std::size_t>>{{0, 2}, {1, 2}, {1, 3}, {2, 3}, {3, 4}});

    std::vector<std::string> covered;
    for (const auto& c : decompose(6))
        for (const auto& m : c.members()) covered.push_back(m.str());
    CHECK(covered.size() == 132);
    std::sort(covered.begin(), covered.end());
    CHECK(covered == oracle::dyck_words(6));
    CHECK_THROWS(decompose(1));
}

TEST_CASE("chains are saturated and partition the lattice")
{
    for (std::size_t n = 2; n <= 8; ++n) {
        std::set<std::string> seen;
        BigInt total = 0;
        for (const auto& c : decompose(n)) {
            const auto members = c.members();
            REQUIRE(members.size() == c.cardinality);
            REQUIRE(members.front() == c.min_path);
            for (std::size_t i = 0; i < members.size(); ++i) {
                REQUIRE(rank(members[i]) == c.start_rank + i);
                if (i) REQUIRE(leq(members[i - 1], members[i]));
                REQUIRE(seen.insert(members[i].str()).second);
            }
            const std::string tail = "U" + std::string(c.cardinality - 1, 'D') + "UD";
            const auto word = c.min_path.str();
            REQUIRE(word.size() >= tail.size());
            REQUIRE(word.compare(word.size() - tail.size(), tail.size(), tail) == 0);
            total += c.cardinality;
        }
        REQUIRE(total == catalan(n));
        REQUIRE(seen.size() == catalan(n));
    }
}

TEST_CASE("chain matrices")
{
    const auto p5 = p_matrix(5);
    const std::vector<std::vector<BigInt>> expect5 = {to_big({1, 0, 0, 0}), to_big({2, 1, 0, 0}), to_big({1, 2, 0, 0}),
                                                     to_big({1, 1, 1, 0}), to_big({0, 1, 1, 0}), to_big({0, 0, 1, 0}),
                                                     to_big({0, 0, 0, 1})};
    CHECK(p5.entries() == expect5);
    CHECK(p_matrix(3).entries() == std::vector<std::vector<BigInt>>{to_big({1, 0}), to_big({0, 1})});
    CHECK(p_matrix(2).entries() == std::vector<std::vector<BigInt>>{to_big({1})});
    CHECK(p_matrix(4).entries() ==
          std::vector<std::vector<BigInt>>{to_big({1, 0, 0}), to_big({1, 1, 0}), to_big({0, 1, 0}), to_big({0, 0, 1})});

    const auto a5 = a_matrix(5);
    CHECK(a5.rows() == 11);
    for (std::size_t k = 0; k < 4; ++k) {
        CHECK(coeff_sum(a5.column(k)) == coeff_sum(p5.column(k)));
    }
    CHECK(coeff_sum(a5.column(0)) == 5);
    CHECK(coeff_sum(a5.column(1)) == 5);
    CHECK(coeff_sum(a5.column(2)) == 3);
    CHECK(coeff_sum(a5.column(3)) == 1);

    for (std::size_t n = 2; n <= 9; ++n) {
        REQUIRE(p_matrix(n, Route::oracle) == p_matrix(n, Route::fast));
        REQUIRE(a_matrix(n, Route::oracle) == a_matrix(n, Route::fast));
        REQUIRE(p_matrix(n).rows() == 1 + choose2(n - 1));
        REQUIRE(a_matrix(n).rows() == 1 + choose2(n));
        const auto brute = brute_chain_counts(n);
        const auto m = p_matrix(n);
        for (std::size_t r = 0; r < m.rows(); ++r)
            for (std::size_t k = 0; k < m.cols(); ++k) {
                auto it = brute.find({r, k});
                REQUIRE(m.at(r, k) == (it == brute.end() ? 0 : it->second));
            }
    }
}

TEST_CASE("column polynomials")
{
    CHECK(p_poly(5, 1) == IntPoly::from_ints({0, 1, 2, 1, 1}));
    CHECK(p_total(5) == IntPoly::from_ints({1, 3, 3, 3, 2, 1, 1}));
    CHECK(p_poly(4, 2, Route::oracle) == IntPoly::from_ints({0, 0, 0, 1}));
    CHECK_THROWS_AS(ChainPolynomials::from_recurrence(5).p(4), std::out_of_range);
    CHECK(ChainPolynomials::from_recurrence(5).p_or_zero(-1).is_zero());
    CHECK(ChainPolynomials::from_recurrence(5).p_or_zero(9).is_zero());

    for (std::size_t n = 2; n <= 10; ++n) {
        const auto c = ChainPolynomials::compute(n, Route::oracle);
        BigInt weighted = 0;
        for (std::size_t k = 0; k + 2 <= n; ++k) {
            REQUIRE(c.a(k) == mul_monomial(c.p(k), k + 1));
            weighted += BigInt(static_cast<unsigned long>(k + 2)) * coeff_sum(c.p(k));
        }
        REQUIRE(coeff_sum(c.p_total()) == catalan(n - 1));
        REQUIRE(weighted == catalan(n));
        if (n >= 2) REQUIRE(c.p_total() == rank_poly(n - 1, Route::oracle));
    }
}

TEST_CASE("rank polynomials")
{
    CHECK(rank_poly(1) == IntPoly::one());
    CHECK(rank_poly(5) == IntPoly::from_ints({1, 4, 6, 7, 7, 5, 5, 3, 2, 1, 1}));
    CHECK(rank_poly(7) == IntPoly::from_ints({1, 6, 15, 25, 35, 40, 43, 44, 40, 37, 32, 28, 22, 18, 13, 11, 7, 5, 3,
                                              2, 1, 1}));
    const auto fast = rank_polys_fast(12);
    for (std::size_t n = 1; n <= 12; ++n) {
        REQUIRE(fast[n - 1] == rank_poly(n, Route::fast));
        REQUIRE(fast[n - 1] == rank_poly(n, Route::oracle));
        if (n <= 8) REQUIRE(fast[n - 1] == poly_of(oracle::rank_counts(n)));
    }
}

TEST_CASE("difference polynomial")
{
    const auto s5 = IntPoly::from_ints({-1, -3, -2, -1, 0, 2, 0, 2, 1, 1, 0, 1});
    CHECK(s_poly(5, Route::fast) == s5);
    CHECK(s_poly(5, Route::oracle) == s5);
    CHECK(s_poly(5) == diff_shifted(poly_of(oracle::rank_counts(5))));
    for (std::size_t n = 2; n <= 20; ++n) REQUIRE(coeff_sum(s_poly(n)) == 0);
}

TEST_CASE("identities on explicit chains")
{
    for (std::size_t n = 2; n <= 10; ++n) {
        CAPTURE(n);
        REQUIRE(check_difference_identity(n, Route::oracle));
        REQUIRE(check_end_rank_shift(n, Route::oracle));
        REQUIRE(check_s_expansion(n, Route::oracle));
        REQUIRE(check_operator_slices(n));
        if (n >= 3) {
            REQUIRE(check_qballot(n, Route::oracle));
            REQUIRE(check_qballot_corollary(n, Route::oracle));
        }
    }
    for (std::size_t n = 3; n <= 40; ++n) {
        CAPTURE(n);
        REQUIRE(check_difference_identity(n, Route::fast));
        REQUIRE(check_s_expansion(n, Route::fast));
        REQUIRE(check_qballot(n, Route::fast));
        REQUIRE(check_qballot_corollary(n, Route::fast));
    }
}

TEST_CASE("q-ballot worked cases")
{
    const auto p4 = ChainPolynomials::compute(4, Route::oracle);
    const auto p5 = ChainPolynomials::compute(5, Route::oracle);
    CHECK(mul_monomial(p4.p(0) + p4.p(1) + p4.p(2), 1) == p5.p(1));
    CHECK(mul_monomial(ChainPolynomials::compute(3, Route::oracle).p(1), 2) == p4.p(2));
    CHECK(mul_monomial(p5.p(1) - mul_monomial(p4.p(0), 1), 1) == p5.p(2));
    CHECK(p5.p(2) == IntPoly::from_ints({0, 0, 0, 1, 1, 1}));
    CHECK(mul_monomial(p4.p(0), 1) == p4.p(1));
}

TEST_CASE("symmetry")
{
    CHECK(symmetry_report(2).symmetric);
    const auto r4 = symmetry_report(4);
    CHECK_FALSE(r4.symmetric);
    REQUIRE(r4.counterexample);
    CHECK(r4.counterexample->start_rank + r4.counterexample->end_rank() != choose2(4));
    CHECK_FALSE(symmetry_report(5).symmetric);
}

TEST_CASE("guard")
{
    CHECK_THROWS_AS(decompose(9, EnumerationGuard{100}), GuardExceeded);
    CHECK_THROWS_AS(p_matrix(9, Route::oracle, EnumerationGuard{100}), GuardExceeded);
    CHECK_NOTHROW(p_matrix(30, Route::fast, EnumerationGuard{100}));
}
