#pragma once

#include <chroma/error.hpp>

#include <boost/multiprecision/cpp_int.hpp>

#include <initializer_list>
#include <string>
#include <vector>

namespace chroma {

using BigInt = boost::multiprecision::cpp_int;
using BigRational = boost::multiprecision::cpp_rational;

auto to_string(const BigInt & value) -> std::string;
auto parse_bigint(const std::string & text) -> BigInt;

/// Dense polynomial with exact integer coefficients; coeffs()[i] multiplies t^i.
/// Trailing zero coefficients are always trimmed, so the zero polynomial has
/// no coefficients and degree -1.
class IntPolynomial {
public:
    IntPolynomial() = default;
    explicit IntPolynomial(std::vector<BigInt> coeffs);
    IntPolynomial(std::initializer_list<long long> coeffs);

    static auto constant(const BigInt & c) -> IntPolynomial;
    static auto monomial(const BigInt & c, int degree) -> IntPolynomial;
    /// t - root
    static auto linear_root(const BigInt & root) -> IntPolynomial;

    auto degree() const -> int { return static_cast<int>(_coeffs.size()) - 1; }
    auto is_zero() const -> bool { return _coeffs.empty(); }
    auto is_monic() const -> bool { return ! _coeffs.empty() && _coeffs.back() == 1; }
    auto coeffs() const -> const std::vector<BigInt> & { return _coeffs; }
    auto coeff(int i) const -> BigInt;
    auto leading() const -> BigInt { return _coeffs.empty() ? BigInt{0} : _coeffs.back(); }
    /// True when the nonzero coefficients of a chromatic-type polynomial
    /// alternate in sign, starting positive at the leading term.
    auto alternating() const -> bool;

    auto evaluate(const BigInt & t) const -> BigInt;
    auto evaluate(const BigRational & t) const -> BigRational;

    /// p(t + c)
    auto shifted(const BigInt & c) const -> IntPolynomial;

    /// Exact quotient by (t + 1). Throws Errc::internal on a nonzero remainder.
    auto divide_by_t_plus_one() const -> IntPolynomial;

    auto pow(int e) const -> IntPolynomial;

    auto operator+=(const IntPolynomial & o) -> IntPolynomial &;
    auto operator-=(const IntPolynomial & o) -> IntPolynomial &;
    auto operator*=(const IntPolynomial & o) -> IntPolynomial &;

    friend auto operator+(IntPolynomial a, const IntPolynomial & b) -> IntPolynomial { return a += b; }
    friend auto operator-(IntPolynomial a, const IntPolynomial & b) -> IntPolynomial { return a -= b; }
    friend auto operator*(const IntPolynomial & a, const IntPolynomial & b) -> IntPolynomial;
    friend auto operator*(const IntPolynomial & a, const BigInt & c) -> IntPolynomial;
    friend auto operator-(const IntPolynomial & a) -> IntPolynomial;

    auto operator==(const IntPolynomial & o) const -> bool { return _coeffs == o._coeffs; }

    /// Human-readable form such as "y^3 - 3y^2 + 5y - 4".
    auto to_string(char var) const -> std::string;

private:
    void trim();

    std::vector<BigInt> _coeffs;
};

/// Q(y) = P(y + 1)
auto shift_to_q(const IntPolynomial & p) -> IntPolynomial;
/// P(x) = Q(x - 1)
auto shift_to_p(const IntPolynomial & q) -> IntPolynomial;

} // namespace chroma
