#pragma once

#include <cstddef>

#include "hankel/rational.hpp"
#include "hankel/reversion.hpp"

namespace hankel {

// Lucas sequence of the first kind for x^2 - alpha x + beta:
//   U_0 = 0, U_1 = 1, U_m = alpha U_{m-1} - beta U_{m-2}.
//
// U_m is a polynomial in (alpha, beta) and equals
// ((alpha+s)^m - (alpha-s)^m) / (2^m s) with s^2 = alpha^2 - 4 beta
// wherever s != 0, together with the analytic continuation at s = 0; the
// radical never appears here, which is what keeps alpha^2 = 4 beta exact.
inline Rat lucas_u(const Params& p, std::size_t m) {
    if (m == 0)
        return Rat(0);
    Rat prev = 0, cur = 1;
    for (std::size_t i = 1; i < m; ++i) {
        Rat next = p.alpha * cur - p.beta * prev;
        prev = cur;
        cur = next;
    }
    return cur;
}

} // namespace hankel
