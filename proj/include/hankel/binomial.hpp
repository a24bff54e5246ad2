#pragma once

#include <cstddef>

#include "hankel/rational.hpp"

namespace hankel {

// C(n, k) with the convention C(n, k) = 0 for k < 0 or k > n, which lets
// the transform sums run without index guards.
inline BigInt binom(long n, long k) {
    if (k < 0 || k > n)
        return BigInt(0);
    BigInt r;
    mpz_bin_uiui(r.get_mpz_t(), static_cast<unsigned long>(n),
                 static_cast<unsigned long>(k));
    return r;
}

inline BigInt factorial(std::size_t n) {
    BigInt r;
    mpz_fac_ui(r.get_mpz_t(), static_cast<unsigned long>(n));
    return r;
}

} // namespace hankel
