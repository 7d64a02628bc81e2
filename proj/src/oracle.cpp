#include "binomgap/oracle.hpp"

#include <stdexcept>

namespace binomgap::oracle {

mpz_class factorial(Natural n)
{
    mpz_class out;
    mpz_fac_ui(out.get_mpz_t(), n);
    return out;
}

mpz_class binomial(Natural n, Natural r)
{
    if (r > n)
        throw std::invalid_argument("oracle::binomial: r > n");
    mpz_class out;
    mpz_bin_uiui(out.get_mpz_t(), n, r);
    return out;
}

mpz_class block_product(Natural m, Natural k)
{
    mpz_class out = 1;
    for (Natural i = 1; i <= k; ++i) {
        mpz_class term;
        mpz_set_ui(term.get_mpz_t(), static_cast<unsigned long>(m + i));
        out *= term;
    }
    return out;
}

unsigned nu(const mpz_class& n, Natural p)
{
    if (n == 0)
        throw std::domain_error("oracle::nu: valuation of 0 is undefined");
    mpz_class rest;
    mpz_class prime;
    mpz_set_ui(prime.get_mpz_t(), static_cast<unsigned long>(p));
    return static_cast<unsigned>(mpz_remove(rest.get_mpz_t(), n.get_mpz_t(), prime.get_mpz_t()));
}

}  // namespace binomgap::oracle
