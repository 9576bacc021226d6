#include <doctest.h>

#include <random>
#include <sstream>

#include "ecodyck/int_poly.hpp"
#include "oracles.hpp"

using namespace ecodyck;

TEST_CASE("addition normalizes")
{
    const auto p = IntPoly::from_ints({1, 1}) + IntPoly::from_ints({0, 1, 1});
    CHECK(p == IntPoly::from_ints({1, 2, 1}));
    for (long v : {-3, -1, 0, 2, 5})
        CHECK(eval_int(p, v) == eval_int(IntPoly::from_ints({1, 1}), v) + eval_int(IntPoly::from_ints({0, 1, 1}), v));

    CHECK(IntPoly::from_ints({3, 0, 4}) + IntPoly{} == IntPoly::from_ints({3, 0, 4}));
    const auto zero = IntPoly::from_ints({1}) + IntPoly::from_ints({-1});
    CHECK(zero.is_zero());
    CHECK(zero.coeffs().empty());
    CHECK(zero.degree() == -1);

    CHECK(IntPoly::from_ints({1, 2, 0, 0}).size() == 2);
    CHECK((IntPoly::from_ints({1, 2, 3}) - IntPoly::from_ints({0, 0, 3})) == IntPoly::from_ints({1, 2}));
}

TEST_CASE("monomial shift")
{
    CHECK(mul_monomial(IntPoly::from_ints({1, 1}), 2) == IntPoly::from_ints({0, 0, 1, 1}));
    CHECK(mul_monomial(IntPoly::from_ints({1, 2, 1, 1}), 1) == IntPoly::from_ints({0, 1, 2, 1, 1}));
    CHECK(mul_monomial(IntPoly{}, 5).is_zero());
}

TEST_CASE("evaluation")
{
    CHECK(eval_int(IntPoly::from_ints({1, 3, 3, 3, 2, 1, 1}), 1) == 14);
    CHECK(eval_int(IntPoly{}, 7) == 0);
    CHECK(eval_int(IntPoly::from_ints({1, 2, 1, 1}), 1) == 5);
    CHECK(eval_int(IntPoly::from_ints({1, 1}), -1) == 0);
    CHECK(coeff_sum(IntPoly::from_ints({4, -2, 7})) == 9);
}

TEST_CASE("shifted difference")
{
    CHECK(diff_shifted(IntPoly::from_ints({1, 2, 1, 1})) == IntPoly::from_ints({-1, -1, 1, 0, 1}));
    CHECK(diff_shifted(IntPoly::from_ints({1})) == IntPoly::from_ints({-1, 1}));
    CHECK(diff_shifted(IntPoly::from_ints({1, 4, 6, 7, 7, 5, 5, 3, 2, 1, 1})) ==
          IntPoly::from_ints({-1, -3, -2, -1, 0, 2, 0, 2, 1, 1, 0, 1}));
    CHECK(diff_shifted(IntPoly{}).is_zero());
}

TEST_CASE("ring axioms at sample points")
{
    std::mt19937 rng(7);
    std::uniform_int_distribution<long> c(-9, 9);
    std::uniform_int_distribution<int> len(0, 6);
    auto random_poly = [&] {
        std::vector<BigInt> v(static_cast<std::size_t>(len(rng)));
        for (auto& x : v) x = c(rng);
        return IntPoly(std::move(v));
    };
    for (int trial = 0; trial < 300; ++trial) {
        const auto p = random_poly(), q = random_poly();
        const auto s = p + q;
        CHECK((s.is_zero() || sgn(s.coeffs().back()) != 0));
        const std::size_t e = static_cast<std::size_t>(trial % 5);
        for (long v = -2; v <= 2; ++v) {
            REQUIRE(eval_int(s, v) == eval_int(p, v) + eval_int(q, v));
            BigInt ve;
            mpz_pow_ui(ve.get_mpz_t(), BigInt(v).get_mpz_t(), e);
            REQUIRE(eval_int(mul_monomial(p, e), v) == ve * eval_int(p, v));
        }
        CHECK(coeff_sum(diff_shifted(p)) == 0);
        CHECK(p - p == IntPoly{});
    }
}

TEST_CASE("coefficients beyond 64 bits")
{
    const BigInt big("123456789012345678901234567890");
    const auto p = IntPoly::monomial(big, 3);
    CHECK(p.coeff(3) == big);
    CHECK(p.coeff(10) == 0);
    CHECK(eval_int(p + p, 1) == 2 * big);
    std::ostringstream os;
    os << p;
    CHECK(os.str() == "(0,0,0,123456789012345678901234567890)");
}

TEST_CASE("catalan numbers")
{
    const auto c = oracle::catalan_convolution(100);
    for (unsigned long n = 0; n <= 100; ++n) REQUIRE(catalan(n) == c[n]);
    CHECK(catalan(36) > BigInt("9223372036854775807"));
    CHECK(catalan(37) > BigInt("18446744073709551615"));
}

TEST_CASE("bivariate polynomials")
{
    const BiPoly p({IntPoly::from_ints({1, 1}), IntPoly::from_ints({0, 2}), IntPoly{}});
    CHECK(p.t_degree() == 1);
    CHECK(p.x_degree() == 1);
    CHECK(p.coeff(1, 1) == 2);
    CHECK(p.coeff(5, 5) == 0);
    CHECK(p.sum_slices() == IntPoly::from_ints({1, 3}));
    CHECK(p.eval(2, 3) == 3 + 2 * 2 * 3);
    CHECK(p.slice(7).is_zero());
    CHECK(p.shifted(2).slice(1) == IntPoly::from_ints({0, 0, 0, 2}));
    CHECK((p + p).coeff(0, 0) == 2);
    CHECK(BiPoly({IntPoly{}, IntPoly{}}).is_zero());
}
