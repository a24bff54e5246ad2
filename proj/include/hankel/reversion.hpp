#pragma once

#include <cstddef>
#include <stdexcept>

#include "hankel/binomial.hpp"
#include "hankel/catalan.hpp"
#include "hankel/errors.hpp"
#include "hankel/power_series.hpp"
#include "hankel/rational.hpp"
#include "hankel/sequence.hpp"

namespace hankel {

// The (alpha, beta) parameter pair of Q(x) = x / (1 + alpha x + beta x^2).
// alpha = 0, beta = 0 and alpha^2 = 4 beta are all legal.
struct Params {
    Rat alpha;
    Rat beta;

    friend bool operator==(const Params& a, const Params& b) {
        return a.alpha == b.alpha && a.beta == b.beta;
    }
    std::string str() const {
        return "(" + alpha.str() + "," + beta.str() + ")";
    }
};

// Q(x) = x / (1 + alpha x + beta x^2) expanded to the given order.
inline PowerSeries q_series(const Params& p, std::size_t order) {
    PowerSeries q = PowerSeries::zero(order);
    if (order < 2)
        return q;
    PowerSeries denom(std::vector<Rat>{Rat(1), p.alpha, p.beta});
    PowerSeries inv = ps_reciprocal(denom, order - 1);
    for (std::size_t n = 1; n < order; ++n)
        q[n] = inv[n - 1];
    return q;
}

// n-th coefficient of the reversion of Q, in closed form:
//   u_n = sum_{k=0}^{floor((n-1)/2)} C(n-1, 2k) C_k alpha^{n-2k-1} beta^k,
// with u_0 = 0 (empty sum).
inline Rat u_direct(const Params& p, std::size_t n) {
    if (n == 0)
        return Rat(0);
    Rat total = 0;
    const long m = static_cast<long>(n) - 1;
    for (long k = 0; 2 * k <= m; ++k) {
        const Rat term = Rat(binom(m, 2 * k)) *
                         catalan(static_cast<std::size_t>(k)) *
                         pow(p.alpha, m - 2 * k) * pow(p.beta, k);
        total += term;
    }
    return total;
}

// Prefix (u_0, ..., u_{len-1}) of the reversion of Q. Computed by series
// reversion and cross-checked term by term against the direct sum; the two
// routes must agree exactly.
inline Seq u_sequence(const Params& p, std::size_t len) {
    if (len < 1)
        throw InvalidParams("u_sequence: len must be >= 1");
    const std::size_t order = len < 2 ? 2 : len;
    const PowerSeries g = revert_series(q_series(p, order), order);
    Seq out;
    out.values.reserve(len);
    for (std::size_t n = 0; n < len; ++n) {
        const Rat direct = u_direct(p, n);
        if (g[n] != direct)
            throw std::logic_error("u_sequence: reversion and direct sum "
                                   "disagree at n=" + std::to_string(n));
        out.values.push_back(direct);
    }
    out.label = "u" + p.str();
    return out;
}

} // namespace hankel
