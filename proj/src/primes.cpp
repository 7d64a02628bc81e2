#include "binomgap/primes.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace binomgap {

namespace {

Natural isqrt(Natural n)
{
    auto r = static_cast<Natural>(std::sqrt(static_cast<long double>(n)));
    while (r * r > n)
        --r;
    while ((r + 1) * (r + 1) <= n)
        ++r;
    return r;
}

// Plain sieve for the base primes of the segmented pass.
std::vector<Natural> simple_sieve(Natural limit)
{
    std::vector<Natural> out;
    if (limit < 2)
        return out;
    std::vector<bool> composite(limit + 1, false);
    for (Natural i = 2; i <= limit; ++i) {
        if (composite[i])
            continue;
        out.push_back(i);
        for (Natural j = i * i; j <= limit; j += i)
            composite[j] = true;
    }
    return out;
}

// Sieves [lo, hi] with the given base primes (which must cover sqrt(hi)).
void sieve_segment(Natural lo, Natural hi, const std::vector<Natural>& base,
                   std::vector<char>& mark, std::vector<Natural>& out)
{
    mark.assign(hi - lo + 1, 1);
    for (Natural p : base) {
        if (p * p > hi)
            break;
        Natural start = std::max(p * p, (lo + p - 1) / p * p);
        for (Natural j = start; j <= hi; j += p)
            mark[j - lo] = 0;
    }
    for (Natural n = std::max<Natural>(lo, 2); n <= hi; ++n)
        if (mark[n - lo])
            out.push_back(n);
}

const std::vector<Natural>& small_primes()
{
    static const std::vector<Natural> table = simple_sieve(1u << 16);
    return table;
}

}  // namespace

std::vector<Natural> primes_up_to(Natural limit, std::size_t segment_size)
{
    if (segment_size == 0)
        throw std::invalid_argument("primes_up_to: segment size must be positive");
    std::vector<Natural> out;
    if (limit < 2)
        return out;
    const auto base = simple_sieve(isqrt(limit));
    std::vector<char> mark;
    for (Natural lo = 0; lo <= limit; lo += segment_size) {
        Natural hi = std::min<Natural>(limit, lo + segment_size - 1);
        sieve_segment(lo, hi, base, mark, out);
        if (hi == limit)
            break;
    }
    return out;
}

std::vector<Natural> primes_in(Natural lo, Natural hi)
{
    std::vector<Natural> out;
    if (hi <= lo || hi < 2)
        return out;
    const auto base = simple_sieve(isqrt(hi));
    std::vector<char> mark;
    sieve_segment(lo + 1, hi, base, mark, out);
    return out;
}

bool is_prime(Natural n)
{
    if (n < 2)
        return false;
    for (Natural d = 2; d * d <= n; d += (d == 2 ? 1 : 2))
        if (n % d == 0)
            return false;
    return true;
}

std::vector<Natural> prime_divisors(Natural n)
{
    if (n == 0)
        throw std::invalid_argument("prime_divisors: n must be positive");
    std::vector<Natural> out;
    for (Natural p : small_primes()) {
        if (p * p > n)
            break;
        if (n % p == 0) {
            out.push_back(p);
            do
                n /= p;
            while (n % p == 0);
        }
    }
    // Beyond the table, continue with odd trial divisors.
    for (Natural d = small_primes().back() + 2; d * d <= n; d += 2) {
        if (n % d == 0) {
            out.push_back(d);
            do
                n /= d;
            while (n % d == 0);
        }
    }
    if (n > 1)
        out.push_back(n);
    return out;
}

}  // namespace binomgap
