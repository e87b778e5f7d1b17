#include <chroma/polynomial.hpp>

#include <sstream>

namespace chroma {

auto to_string(const BigInt & value) -> std::string
{
    return value.str();
}

auto parse_bigint(const std::string & text) -> BigInt
{
    std::size_t start = (! text.empty() && (text[0] == '-' || text[0] == '+')) ? 1 : 0;
    if (text.size() == start)
        throw Error(Errc::parse_error, "empty integer literal");
    for (std::size_t i = start; i < text.size(); ++i)
        if (text[i] < '0' || text[i] > '9')
            throw Error(Errc::parse_error, "invalid integer literal '" + text + "'");
    return BigInt(text);
}

IntPolynomial::IntPolynomial(std::vector<BigInt> coeffs) :
    _coeffs(std::move(coeffs))
{
    trim();
}

IntPolynomial::IntPolynomial(std::initializer_list<long long> coeffs)
{
    for (auto c : coeffs)
        _coeffs.emplace_back(c);
    trim();
}

void IntPolynomial::trim()
{
    while (! _coeffs.empty() && _coeffs.back() == 0)
        _coeffs.pop_back();
}

auto IntPolynomial::constant(const BigInt & c) -> IntPolynomial
{
    return IntPolynomial(std::vector<BigInt>{c});
}

auto IntPolynomial::monomial(const BigInt & c, int degree) -> IntPolynomial
{
    std::vector<BigInt> v(degree + 1);
    v[degree] = c;
    return IntPolynomial(std::move(v));
}

auto IntPolynomial::linear_root(const BigInt & root) -> IntPolynomial
{
    return IntPolynomial(std::vector<BigInt>{-root, BigInt{1}});
}

auto IntPolynomial::coeff(int i) const -> BigInt
{
    return (i >= 0 && i < static_cast<int>(_coeffs.size())) ? _coeffs[i] : BigInt{0};
}

auto IntPolynomial::alternating() const -> bool
{
    for (int i = 0; i <= degree(); ++i) {
        if (_coeffs[i] == 0)
            continue;
        bool positive = _coeffs[i] > 0;
        if (positive != ((degree() - i) % 2 == 0))
            return false;
    }
    return true;
}

auto IntPolynomial::evaluate(const BigInt & t) const -> BigInt
{
    BigInt acc = 0;
    for (auto it = _coeffs.rbegin(); it != _coeffs.rend(); ++it)
        acc = acc * t + *it;
    return acc;
}

auto IntPolynomial::evaluate(const BigRational & t) const -> BigRational
{
    BigRational acc = 0;
    for (auto it = _coeffs.rbegin(); it != _coeffs.rend(); ++it)
        acc = acc * t + BigRational(*it);
    return acc;
}

auto IntPolynomial::shifted(const BigInt & c) const -> IntPolynomial
{
    // Horner in the shifted variable: acc <- acc * (t + c) + a_i.
    std::vector<BigInt> acc;
    for (auto it = _coeffs.rbegin(); it != _coeffs.rend(); ++it) {
        std::vector<BigInt> next(acc.size() + 1);
        for (std::size_t i = 0; i < acc.size(); ++i) {
            next[i + 1] += acc[i];
            next[i] += acc[i] * c;
        }
        next[0] += *it;
        acc = std::move(next);
    }
    return IntPolynomial(std::move(acc));
}

auto IntPolynomial::divide_by_t_plus_one() const -> IntPolynomial
{
    if (is_zero())
        return {};
    // Synthetic division by the root -1.
    int d = degree();
    std::vector<BigInt> q(d);
    BigInt carry = 0;
    for (int i = d; i >= 1; --i) {
        carry = _coeffs[i] - carry;
        q[i - 1] = carry;
    }
    BigInt remainder = _coeffs[0] - carry;
    if (remainder != 0)
        throw Error(Errc::internal, "division by (t + 1) left remainder " + remainder.str());
    return IntPolynomial(std::move(q));
}

auto IntPolynomial::pow(int e) const -> IntPolynomial
{
    IntPolynomial result = constant(1), base = *this;
    for (; e > 0; e >>= 1) {
        if (e & 1)
            result *= base;
        if (e > 1)
            base *= base;
    }
    return result;
}

auto IntPolynomial::operator+=(const IntPolynomial & o) -> IntPolynomial &
{
    if (o._coeffs.size() > _coeffs.size())
        _coeffs.resize(o._coeffs.size());
    for (std::size_t i = 0; i < o._coeffs.size(); ++i)
        _coeffs[i] += o._coeffs[i];
    trim();
    return *this;
}

auto IntPolynomial::operator-=(const IntPolynomial & o) -> IntPolynomial &
{
    if (o._coeffs.size() > _coeffs.size())
        _coeffs.resize(o._coeffs.size());
    for (std::size_t i = 0; i < o._coeffs.size(); ++i)
        _coeffs[i] -= o._coeffs[i];
    trim();
    return *this;
}

auto IntPolynomial::operator*=(const IntPolynomial & o) -> IntPolynomial &
{
    *this = *this * o;
    return *this;
}

auto operator*(const IntPolynomial & a, const IntPolynomial & b) -> IntPolynomial
{
    if (a.is_zero() || b.is_zero())
        return {};
    std::vector<BigInt> r(a._coeffs.size() + b._coeffs.size() - 1);
    for (std::size_t i = 0; i < a._coeffs.size(); ++i) {
        if (a._coeffs[i] == 0)
            continue;
        for (std::size_t j = 0; j < b._coeffs.size(); ++j)
            r[i + j] += a._coeffs[i] * b._coeffs[j];
    }
    return IntPolynomial(std::move(r));
}

auto operator*(const IntPolynomial & a, const BigInt & c) -> IntPolynomial
{
    std::vector<BigInt> r = a._coeffs;
    for (auto & x : r)
        x *= c;
    return IntPolynomial(std::move(r));
}

auto operator-(const IntPolynomial & a) -> IntPolynomial
{
    return a * BigInt{-1};
}

auto IntPolynomial::to_string(char var) const -> std::string
{
    if (is_zero())
        return "0";
    std::ostringstream out;
    bool first = true;
    for (int i = degree(); i >= 0; --i) {
        const BigInt & c = _coeffs[i];
        if (c == 0)
            continue;
        BigInt mag = c < 0 ? BigInt(-c) : c;
        if (first)
            out << (c < 0 ? "-" : "");
        else
            out << (c < 0 ? " - " : " + ");
        first = false;
        if (mag != 1 || i == 0)
            out << mag;
        if (i >= 1)
            out << var;
        if (i >= 2)
            out << '^' << i;
    }
    return out.str();
}

auto shift_to_q(const IntPolynomial & p) -> IntPolynomial
{
    return p.shifted(1);
}

auto shift_to_p(const IntPolynomial & q) -> IntPolynomial
{
    return q.shifted(-1);
}

} // namespace chroma
