#include "binomgap/valuation.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

namespace binomgap {

namespace {

void require_base(Natural p)
{
    if (p < 2)
        throw std::invalid_argument("base must be a prime >= 2, got " + std::to_string(p));
}

void require_block(Natural k)
{
    if (k == 0)
        throw std::invalid_argument("block length k must be >= 1");
}

Natural checked_add(Natural a, Natural b)
{
    Natural out = 0;
    if (__builtin_add_overflow(a, b, &out))
        throw std::overflow_error("natural overflow");
    return out;
}

}  // namespace

DigitExpansion::DigitExpansion(Natural base, std::vector<Natural> digits)
    : base_(base), digits_(std::move(digits))
{
    require_base(base_);
    for (Natural d : digits_)
        if (d >= base_)
            throw std::invalid_argument("digit out of range for base " + std::to_string(base_));
    if (!digits_.empty() && digits_.back() == 0)
        throw std::invalid_argument("digit expansion has a trailing zero");
}

Natural DigitExpansion::value() const
{
    Natural v = 0;
    for (auto it = digits_.rbegin(); it != digits_.rend(); ++it) {
        if (__builtin_mul_overflow(v, base_, &v))
            throw std::overflow_error("digit expansion exceeds 64 bits");
        v = checked_add(v, *it);
    }
    return v;
}

Natural checked_pow(Natural p, unsigned e)
{
    Natural out = 1;
    for (unsigned i = 0; i < e; ++i)
        if (__builtin_mul_overflow(out, p, &out))
            throw std::overflow_error("p^e exceeds 64 bits");
    return out;
}

DigitExpansion digits(Natural n, Natural p)
{
    if (!is_prime(p))
        throw std::invalid_argument("digits: base " + std::to_string(p) + " is not prime");
    std::vector<Natural> out;
    for (; n > 0; n /= p)
        out.push_back(n % p);
    return DigitExpansion(p, std::move(out));
}

unsigned nu_int(Natural n, Natural p)
{
    require_base(p);
    if (n == 0)
        throw std::domain_error("nu_int: valuation of 0 is undefined");
    unsigned e = 0;
    for (; n % p == 0; n /= p)
        ++e;
    return e;
}

Natural nu_factorial(Natural n, Natural p)
{
    require_base(p);
    // Legendre: sum of floor(n / p^j).
    Natural total = 0;
    for (n /= p; n > 0; n /= p)
        total += n;
    return total;
}

Natural nu_binomial(Natural n, Natural r, Natural p)
{
    if (r > n)
        throw std::invalid_argument("nu_binomial: r > n");
    return nu_factorial(n, p) - nu_factorial(r, p) - nu_factorial(n - r, p);
}

unsigned kappa(Natural m, Natural p)
{
    require_base(p);
    unsigned carries = 0;
    Natural carry = 0;
    // Once the digits run out a pending carry cannot produce another one.
    for (; m > 0; m /= p) {
        carry = (2 * (m % p) + carry >= p) ? 1 : 0;
        carries += static_cast<unsigned>(carry);
    }
    return carries;
}

unsigned v_max(Natural m, Natural k, Natural p)
{
    require_block(k);
    unsigned best = 0;
    for (Natural i = 1; i <= k; ++i)
        best = std::max(best, nu_int(checked_add(m, i), p));
    return best;
}

Natural w_sum(Natural m, Natural k, Natural p)
{
    require_block(k);
    Natural total = 0;
    for (Natural i = 1; i <= k; ++i)
        total += nu_int(checked_add(m, i), p);
    return total;
}

unsigned big_digit_count(Natural m, Natural p, unsigned L)
{
    require_base(p);
    const Natural threshold = (p + 1) / 2;
    unsigned count = 0;
    for (unsigned j = 0; j < L && m > 0; ++j, m /= p)
        if (m % p >= threshold)
            ++count;
    return count;
}

unsigned truncated_carry_count(Natural m, Natural p, unsigned L)
{
    require_base(p);
    unsigned carries = 0;
    Natural carry = 0;
    for (unsigned j = 0; j < L; ++j, m /= p) {
        carry = (2 * (m % p) + carry >= p) ? 1 : 0;
        carries += static_cast<unsigned>(carry);
    }
    return carries;
}

Natural digit_sum(Natural m, Natural p)
{
    require_base(p);
    Natural total = 0;
    for (; m > 0; m /= p)
        total += m % p;
    return total;
}

ValuationProfile valuation_profile(Natural m, Natural k, Natural p)
{
    ValuationProfile out;
    out.p = p;
    out.kappa = kappa(m, p);
    out.nu_k_factorial = nu_factorial(k, p);
    if (k > 0) {
        out.v_max = v_max(m, k, p);
        out.w_sum = w_sum(m, k, p);
    }
    out.nu_binom_mk = nu_binomial(checked_add(m, k), k, p);
    return out;
}

}  // namespace binomgap
