#pragma once

#include <compare>
#include <cstdint>
#include <string>
#include <string_view>

namespace binomgap {

// Exact positive-denominator fraction on 64-bit integers.  Used for the
// thresholds that must be compared without rounding (eta, mu_p, s, delta).
class Ratio {
public:
    constexpr Ratio() = default;
    Ratio(std::int64_t num, std::int64_t den = 1);

    // Accepts "3", "-2", "1/4" and exact decimals such as "0.25"; no exponents.
    static Ratio parse(std::string_view text);

    std::int64_t num() const { return num_; }
    std::int64_t den() const { return den_; }
    double value() const { return static_cast<double>(num_) / static_cast<double>(den_); }
    std::string str() const;

    friend bool operator==(const Ratio&, const Ratio&) = default;
    friend std::strong_ordering operator<=>(const Ratio& a, const Ratio& b);

    friend Ratio operator+(const Ratio& a, const Ratio& b);
    friend Ratio operator-(const Ratio& a, const Ratio& b);
    friend Ratio operator*(const Ratio& a, const Ratio& b);
    friend Ratio operator/(const Ratio& a, const Ratio& b);

private:
    std::int64_t num_ = 0;
    std::int64_t den_ = 1;
};

}  // namespace binomgap
