#pragma once

#include <cstddef>

#include "hankel/binomial.hpp"
#include "hankel/rational.hpp"
#include "hankel/sequence.hpp"

namespace hankel {

// C_n = (2n)! / (n! (n+1)!), as an integer-valued Rat.
inline Rat catalan(std::size_t n) {
    BigInt c = binom(2 * static_cast<long>(n), static_cast<long>(n));
    mpz_divexact_ui(c.get_mpz_t(), c.get_mpz_t(),
                    static_cast<unsigned long>(n + 1));
    return Rat(c);
}

// c_n = beta^n C_n.
inline Rat scaled_catalan(const Rat& beta, std::size_t n) {
    return pow(beta, static_cast<long>(n)) * catalan(n);
}

inline Seq catalan_prefix(std::size_t len) {
    Seq s;
    s.values.reserve(len);
    for (std::size_t n = 0; n < len; ++n)
        s.values.push_back(catalan(n));
    s.label = "catalan";
    return s;
}

inline Seq scaled_catalan_prefix(const Rat& beta, std::size_t len) {
    Seq s;
    s.values.reserve(len);
    Rat bp = 1;
    for (std::size_t n = 0; n < len; ++n) {
        s.values.push_back(bp * catalan(n));
        bp *= beta;
    }
    s.label = "catalan*" + beta.str() + "^n";
    return s;
}

} // namespace hankel
