#pragma once

#include <cstdint>
#include <vector>

namespace binomgap {

using Natural = std::uint64_t;

// All primes <= limit, ascending, by a segmented sieve of Eratosthenes.
std::vector<Natural> primes_up_to(Natural limit, std::size_t segment_size = 1u << 15);

// Primes in the half-open window (lo, hi].
std::vector<Natural> primes_in(Natural lo, Natural hi);

// Deterministic trial division; intended for validating small bases.
bool is_prime(Natural n);

// Distinct prime divisors of n (n >= 1), ascending.
std::vector<Natural> prime_divisors(Natural n);

}  // namespace binomgap
