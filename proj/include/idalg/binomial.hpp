#ifndef IDALG_BINOMIAL_HPP
#define IDALG_BINOMIAL_HPP

#include <gmpxx.h>

#include <cstdint>

namespace idalg {

// Exact C(n, k) as a big integer; 0 when k > n or either is negative.
inline mpz_class binomial(std::int64_t n, std::int64_t k) {
    if (k < 0 || n < 0 || k > n) return mpz_class(0);
    mpz_class r;
    mpz_bin_uiui(r.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
    return r;
}

} // namespace idalg

#endif
