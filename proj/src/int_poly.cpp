#include "ecodyck/int_poly.hpp"

#include <algorithm>
#include <ostream>
#include <sstream>

namespace ecodyck {

std::vector<BigInt> to_big(std::initializer_list<long> values)
{
    std::vector<BigInt> out;
    out.reserve(values.size());
    for (long v : values) out.emplace_back(v);
    return out;
}

IntPoly::IntPoly(std::vector<BigInt> coeffs) : coeffs_(std::move(coeffs)) { normalize(); }

IntPoly IntPoly::from_ints(std::initializer_list<long> coeffs) { return IntPoly(to_big(coeffs)); }

IntPoly IntPoly::monomial(BigInt coeff, std::size_t exponent)
{
    std::vector<BigInt> c(exponent + 1);
    c[exponent] = std::move(coeff);
    return IntPoly(std::move(c));
}

BigInt IntPoly::coeff(std::size_t i) const { return i < coeffs_.size() ? coeffs_[i] : BigInt(0); }

void IntPoly::normalize()
{
    while (!coeffs_.empty() && sgn(coeffs_.back()) == 0) coeffs_.pop_back();
}

IntPoly& IntPoly::operator+=(const IntPoly& rhs)
{
    if (rhs.coeffs_.size() > coeffs_.size()) coeffs_.resize(rhs.coeffs_.size());
    for (std::size_t i = 0; i < rhs.coeffs_.size(); ++i) coeffs_[i] += rhs.coeffs_[i];
    normalize();
    return *this;
}

IntPoly& IntPoly::operator-=(const IntPoly& rhs)
{
    if (rhs.coeffs_.size() > coeffs_.size()) coeffs_.resize(rhs.coeffs_.size());
    for (std::size_t i = 0; i < rhs.coeffs_.size(); ++i) coeffs_[i] -= rhs.coeffs_[i];
    normalize();
    return *this;
}

IntPoly operator-(const IntPoly& p)
{
    std::vector<BigInt> c = p.coeffs_;
    for (auto& v : c) v = -v;
    return IntPoly(std::move(c));
}

std::string IntPoly::to_string() const
{
    std::ostringstream os;
    os << *this;
    return os.str();
}

std::ostream& operator<<(std::ostream& os, const IntPoly& p)
{
    os << '(';
    for (std::size_t i = 0; i < p.coeffs().size(); ++i) {
        if (i) os << ',';
        os << p.coeffs()[i];
    }
    return os << ')';
}

IntPoly add(const IntPoly& p, const IntPoly& q) { return p + q; }

IntPoly mul_monomial(const IntPoly& p, std::size_t e)
{
    if (p.is_zero()) return {};
    std::vector<BigInt> c(e + p.size());
    std::copy(p.coeffs().begin(), p.coeffs().end(), c.begin() + static_cast<std::ptrdiff_t>(e));
    return IntPoly(std::move(c));
}

BigInt eval_int(const IntPoly& p, const BigInt& v)
{
    BigInt acc = 0;
    for (auto it = p.coeffs().rbegin(); it != p.coeffs().rend(); ++it) {
        acc *= v;
        acc += *it;
    }
    return acc;
}

IntPoly diff_shifted(const IntPoly& r)
{
    if (r.is_zero()) return {};
    const auto& rc = r.coeffs();
    std::vector<BigInt> s(rc.size() + 1);
    for (std::size_t k = 0; k < s.size(); ++k) {
        if (k > 0) s[k] += rc[k - 1];
        if (k < rc.size()) s[k] -= rc[k];
    }
    return IntPoly(std::move(s));
}

BigInt coeff_sum(const IntPoly& p)
{
    BigInt acc = 0;
    for (const auto& c : p.coeffs()) acc += c;
    return acc;
}

// ---------------------------------------------------------------------------

BiPoly::BiPoly(std::vector<IntPoly> slices) : slices_(std::move(slices)) { normalize(); }

void BiPoly::normalize()
{
    while (!slices_.empty() && slices_.back().is_zero()) slices_.pop_back();
}

const IntPoly& BiPoly::slice(std::size_t k) const
{
    static const IntPoly zero;
    return k < slices_.size() ? slices_[k] : zero;
}

std::ptrdiff_t BiPoly::x_degree() const noexcept
{
    std::ptrdiff_t d = -1;
    for (const auto& s : slices_) d = std::max(d, s.degree());
    return d;
}

BigInt BiPoly::coeff(std::size_t alpha, std::size_t beta) const { return slice(beta).coeff(alpha); }

IntPoly BiPoly::sum_slices() const
{
    IntPoly acc;
    for (const auto& s : slices_) acc += s;
    return acc;
}

BigInt BiPoly::eval(const BigInt& x, const BigInt& t) const
{
    BigInt acc = 0;
    for (auto it = slices_.rbegin(); it != slices_.rend(); ++it) {
        acc *= t;
        acc += eval_int(*it, x);
    }
    return acc;
}

BiPoly& BiPoly::operator+=(const BiPoly& rhs)
{
    if (rhs.slices_.size() > slices_.size()) slices_.resize(rhs.slices_.size());
    for (std::size_t k = 0; k < rhs.slices_.size(); ++k) slices_[k] += rhs.slices_[k];
    normalize();
    return *this;
}

BiPoly BiPoly::shifted(std::size_t e) const
{
    std::vector<IntPoly> out;
    out.reserve(slices_.size());
    for (const auto& s : slices_) out.push_back(mul_monomial(s, e));
    return BiPoly(std::move(out));
}

std::ostream& operator<<(std::ostream& os, const BiPoly& p)
{
    os << '[';
    for (std::size_t k = 0; k < p.slices().size(); ++k) {
        if (k) os << "; ";
        os << p.slices()[k];
    }
    return os << ']';
}

BigInt catalan(unsigned long n)
{
    BigInt b;
    mpz_bin_uiui(b.get_mpz_t(), 2 * n, n);
    return b / (n + 1);
}

} // namespace ecodyck
