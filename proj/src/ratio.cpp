#include "binomgap/ratio.hpp"

#include <charconv>
#include <numeric>
#include <stdexcept>

namespace binomgap {

namespace {

std::int64_t checked_mul(std::int64_t a, std::int64_t b)
{
    std::int64_t out = 0;
    if (__builtin_mul_overflow(a, b, &out))
        throw std::overflow_error("Ratio: 64-bit overflow");
    return out;
}

std::int64_t checked_add(std::int64_t a, std::int64_t b)
{
    std::int64_t out = 0;
    if (__builtin_add_overflow(a, b, &out))
        throw std::overflow_error("Ratio: 64-bit overflow");
    return out;
}

std::int64_t parse_int(std::string_view s, std::string_view whole)
{
    std::int64_t v = 0;
    auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
    if (ec != std::errc{} || ptr != s.data() + s.size() || s.empty())
        throw std::invalid_argument("not a rational number: '" + std::string(whole) + "'");
    return v;
}

}  // namespace

Ratio::Ratio(std::int64_t num, std::int64_t den)
{
    if (den == 0)
        throw std::invalid_argument("Ratio: zero denominator");
    if (den < 0) {
        num = -num;
        den = -den;
    }
    const std::int64_t g = std::gcd(num, den);
    num_ = num / g;
    den_ = den / g;
}

Ratio Ratio::parse(std::string_view text)
{
    if (auto slash = text.find('/'); slash != std::string_view::npos)
        return Ratio(parse_int(text.substr(0, slash), text), parse_int(text.substr(slash + 1), text));

    auto dot = text.find('.');
    if (dot == std::string_view::npos)
        return Ratio(parse_int(text, text));

    std::string_view ip = text.substr(0, dot);
    std::string_view fp = text.substr(dot + 1);
    bool negative = !ip.empty() && ip.front() == '-';
    if (negative || (!ip.empty() && ip.front() == '+'))
        ip.remove_prefix(1);
    if (fp.empty() && ip.empty())
        throw std::invalid_argument("not a rational number: '" + std::string(text) + "'");
    if (fp.size() > 17)
        throw std::invalid_argument("too many decimal places: '" + std::string(text) + "'");

    std::int64_t den = 1;
    for (std::size_t i = 0; i < fp.size(); ++i)
        den *= 10;
    std::int64_t whole = ip.empty() ? 0 : parse_int(ip, text);
    std::int64_t frac = fp.empty() ? 0 : parse_int(fp, text);
    if (whole < 0 || frac < 0)
        throw std::invalid_argument("not a rational number: '" + std::string(text) + "'");
    std::int64_t num = checked_add(checked_mul(whole, den), frac);
    return Ratio(negative ? -num : num, den);
}

std::string Ratio::str() const
{
    if (den_ == 1)
        return std::to_string(num_);
    return std::to_string(num_) + "/" + std::to_string(den_);
}

std::strong_ordering operator<=>(const Ratio& a, const Ratio& b)
{
    __int128 lhs = static_cast<__int128>(a.num_) * b.den_;
    __int128 rhs = static_cast<__int128>(b.num_) * a.den_;
    return lhs <=> rhs;
}

Ratio operator+(const Ratio& a, const Ratio& b)
{
    return Ratio(checked_add(checked_mul(a.num_, b.den_), checked_mul(b.num_, a.den_)),
                 checked_mul(a.den_, b.den_));
}

Ratio operator-(const Ratio& a, const Ratio& b)
{
    return a + Ratio(-b.num_, b.den_);
}

Ratio operator*(const Ratio& a, const Ratio& b)
{
    return Ratio(checked_mul(a.num_, b.num_), checked_mul(a.den_, b.den_));
}

Ratio operator/(const Ratio& a, const Ratio& b)
{
    if (b.num_ == 0)
        throw std::domain_error("Ratio: division by zero");
    return Ratio(checked_mul(a.num_, b.den_), checked_mul(a.den_, b.num_));
}

}  // namespace binomgap
