#pragma once

// Dense polynomials with arbitrary-precision integer coefficients.
//
// IntPoly is univariate in x, stored lowest degree first. BiPoly is a
// polynomial in x and t, stored as one IntPoly per power of t. Both keep a
// normalized form: no trailing zero coefficient (resp. zero slice), and the
// zero polynomial is the empty sequence.

#include <cstddef>
#include <initializer_list>
#include <iosfwd>
#include <span>
#include <string>
#include <vector>

#include <gmpxx.h>

namespace ecodyck {

using BigInt = mpz_class;

/// Converts a list of machine integers to big integers (test and fixture helper).
std::vector<BigInt> to_big(std::initializer_list<long> values);

class IntPoly {
public:
    IntPoly() = default;
    explicit IntPoly(std::vector<BigInt> coeffs);

    static IntPoly from_ints(std::initializer_list<long> coeffs);
    static IntPoly monomial(BigInt coeff, std::size_t exponent);
    static IntPoly one() { return monomial(1, 0); }

    const std::vector<BigInt>& coeffs() const noexcept { return coeffs_; }
    bool is_zero() const noexcept { return coeffs_.empty(); }
    /// -1 for the zero polynomial.
    std::ptrdiff_t degree() const noexcept { return static_cast<std::ptrdiff_t>(coeffs_.size()) - 1; }
    std::size_t size() const noexcept { return coeffs_.size(); }

    /// Coefficient of x^i; zero outside the stored range.
    BigInt coeff(std::size_t i) const;

    IntPoly& operator+=(const IntPoly& rhs);
    IntPoly& operator-=(const IntPoly& rhs);

    friend IntPoly operator+(IntPoly lhs, const IntPoly& rhs) { return lhs += rhs; }
    friend IntPoly operator-(IntPoly lhs, const IntPoly& rhs) { return lhs -= rhs; }
    friend IntPoly operator-(const IntPoly& p);
    friend bool operator==(const IntPoly& a, const IntPoly& b) { return a.coeffs_ == b.coeffs_; }

    std::string to_string() const;

private:
    void normalize();

    std::vector<BigInt> coeffs_;
};

std::ostream& operator<<(std::ostream& os, const IntPoly& p);

IntPoly add(const IntPoly& p, const IntPoly& q);

/// x^e * p
IntPoly mul_monomial(const IntPoly& p, std::size_t e);

/// Horner evaluation in exact arithmetic.
BigInt eval_int(const IntPoly& p, const BigInt& v);

/// s_k = r_{k-1} - r_k with r_{-1} = 0. The result has degree deg(r) + 1
/// for nonzero r and its coefficient sum is always zero.
IntPoly diff_shifted(const IntPoly& r);

/// Sum of coefficients, i.e. eval_int(p, 1).
BigInt coeff_sum(const IntPoly& p);

class BiPoly {
public:
    BiPoly() = default;
    explicit BiPoly(std::vector<IntPoly> slices);

    static BiPoly one() { return BiPoly({IntPoly::one()}); }

    const std::vector<IntPoly>& slices() const noexcept { return slices_; }
    /// Coefficient polynomial of t^k; zero outside the stored range.
    const IntPoly& slice(std::size_t k) const;
    std::ptrdiff_t t_degree() const noexcept { return static_cast<std::ptrdiff_t>(slices_.size()) - 1; }
    bool is_zero() const noexcept { return slices_.empty(); }

    /// Largest x-degree over all slices, -1 for zero.
    std::ptrdiff_t x_degree() const noexcept;

    /// Coefficient of x^alpha t^beta.
    BigInt coeff(std::size_t alpha, std::size_t beta) const;

    /// Setting t = 1.
    IntPoly sum_slices() const;
    BigInt eval(const BigInt& x, const BigInt& t) const;

    BiPoly& operator+=(const BiPoly& rhs);
    friend BiPoly operator+(BiPoly lhs, const BiPoly& rhs) { return lhs += rhs; }
    friend bool operator==(const BiPoly& a, const BiPoly& b) { return a.slices_ == b.slices_; }

    /// x^e * p, slice-wise.
    BiPoly shifted(std::size_t e) const;

private:
    void normalize();

    std::vector<IntPoly> slices_;
};

std::ostream& operator<<(std::ostream& os, const BiPoly& p);

// Catalan number C_n from the closed binomial form.
BigInt catalan(unsigned long n);

// Binomial coefficient C(n, 2) as a plain size.
constexpr std::size_t choose2(std::size_t n) noexcept { return n < 2 ? 0 : n * (n - 1) / 2; }

} // namespace ecodyck
