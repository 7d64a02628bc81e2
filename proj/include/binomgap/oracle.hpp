#pragma once

// Exact big-integer reference values.  These never call into the digit or
// Legendre fast paths, so tests can use them as an independent check.

#include "binomgap/primes.hpp"

#include <gmpxx.h>

namespace binomgap::oracle {

mpz_class factorial(Natural n);
mpz_class binomial(Natural n, Natural r);

// Product (m+1)(m+2)...(m+k).
mpz_class block_product(Natural m, Natural k);

// nu_p of a positive big integer.
unsigned nu(const mpz_class& n, Natural p);

}  // namespace binomgap::oracle
