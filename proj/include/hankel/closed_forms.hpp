#pragma once

#include <cstddef>
#include <utility>

#include "hankel/binomial.hpp"
#include "hankel/catalan.hpp"
#include "hankel/errors.hpp"
#include "hankel/hankel_det.hpp"
#include "hankel/lucas.hpp"
#include "hankel/matrix.hpp"
#include "hankel/rational.hpp"
#include "hankel/reversion.hpp"
#include "hankel/sequence.hpp"
#include "hankel/transforms.hpp"

namespace hankel {

// Closed forms for the Hankel transforms of the reversion u of
// Q(x) = x/(1 + alpha x + beta x^2) and of its shifts u* (by one) and
// u** (by two), plus the chi-shifted and offset-list determinant
// evaluations they reduce to. Everything is polynomial in (alpha, beta)
// through the Lucas kernel; each evaluator is pinned to the brute-force
// determinant by the test suites.

// Hankel transform of u*: h*_n = beta^{n(n+1)/2}.
inline Rat hstar_closed(const Params& p, std::size_t n) {
    return pow(p.beta, static_cast<long>(n * (n + 1) / 2));
}

// Hankel transform of u**: h**_n = beta^{n(n+1)/2} U_{n+2}.
inline Rat hstarstar_closed(const Params& p, std::size_t n) {
    return hstar_closed(p, n) * lucas_u(p, n + 2);
}

// The same expression under the rival normalization that divides the
// radical form by 2^{n+1} instead of 2^{n+2}, which doubles every value:
// its 1x1 case gives 2 alpha where the determinant is u_2 = alpha. Kept as
// a negative control; never use this for real evaluation.
inline Rat hstarstar_closed_literal(const Params& p, std::size_t n) {
    return Rat(2) * hstarstar_closed(p, n);
}

// Hankel transform of u itself: h_n = -beta^{n(n-1)/2} U_n; h_0 = 0
// because u_0 = 0.
inline Rat h_closed(const Params& p, std::size_t n) {
    if (n == 0)
        return Rat(0);
    return -pow(p.beta, static_cast<long>(n * (n - 1) / 2)) * lucas_u(p, n);
}

// det [alpha^2 C_{i+j} - beta C_{i+j+1}]_{0<=i,j<=n} = U_{2n+3}.
// Equivalently the solution of x_m = (alpha^2 - 2 beta) x_{m-1}
// - beta^2 x_{m-2} with x_0 = alpha^2 - beta, x_1 = alpha^4
// - 3 alpha^2 beta + beta^2.
inline Rat hhat_closed(const Params& p, std::size_t n) {
    return lucas_u(p, 2 * n + 3);
}

// det [alpha^2 C_{i+j+1} - beta C_{i+j+2}]_{0<=i,j<=n}, the exact
// polynomial quotient U_{2n+4} / alpha. Evaluated through the second-order
// recurrence x_m = (alpha^2 - 2 beta) x_{m-1} - beta^2 x_{m-2} with
// x_0 = alpha^2 - 2 beta and x_1 = alpha^4 - 4 alpha^2 beta + 3 beta^2,
// which keeps alpha = 0 a perfectly ordinary input.
inline Rat hcheck_closed(const Params& p, std::size_t n) {
    const Rat a2 = p.alpha * p.alpha;
    Rat prev = a2 - Rat(2) * p.beta;
    if (n == 0)
        return prev;
    Rat cur = a2 * a2 - Rat(4) * a2 * p.beta + Rat(3) * p.beta * p.beta;
    const Rat coeff = a2 - Rat(2) * p.beta;
    const Rat b2 = p.beta * p.beta;
    for (std::size_t m = 2; m <= n; ++m) {
        Rat next = coeff * cur - b2 * prev;
        prev = cur;
        cur = next;
    }
    return cur;
}

namespace detail {

// The two factors of the offset-determinant product formula, split out so
// the chi-shifted closed forms below can be cross-checked against them.
inline Rat offset_difference_product(const OffsetList& rows) {
    const std::size_t k = rows.size();
    BigInt prod(1);
    for (std::size_t i = 0; i < k; ++i)
        for (std::size_t j = i + 1; j < k; ++j)
            prod *= BigInt(static_cast<long>(rows[j]) -
                           static_cast<long>(rows[i]));
    return Rat(prod);
}

inline Rat offset_factorial_product(const OffsetList& rows) {
    const std::size_t k = rows.size();
    Rat ratio = 1;
    for (std::size_t i = 0; i < k; ++i) {
        const Rat num = Rat(factorial(i + k)) * Rat(factorial(2 * rows[i]));
        const Rat den = Rat(factorial(2 * i)) * Rat(factorial(rows[i])) *
                        Rat(factorial(rows[i] + k));
        ratio *= num / den;
    }
    return ratio;
}

// Offsets i + chi(i >= l) + extra of the chi-shifted determinants, viewed
// as an offset list (row-indexed chi transposes the matrix, same value).
inline OffsetList chi_offsets(std::size_t k, std::size_t l, int extra) {
    OffsetList rows;
    rows.reserve(k);
    for (std::size_t i = 0; i < k; ++i)
        rows.push_back(i + (i >= l ? 1 : 0) +
                       static_cast<std::size_t>(extra));
    return rows;
}

} // namespace detail

// Krattenthaler's product formula for Catalan-entry determinants with
// arbitrary non-negative row offsets:
//   det [C_{rows_i + j}]_{0<=i,j<k}
//     = prod_{i<j} (rows_j - rows_i)
//       * prod_i (i+k)! (2 rows_i)! / ((2i)! rows_i! (rows_i + k)!).
// Repeated offsets make the first product vanish, matching the singular
// matrix.
inline Rat krattenthaler_det(const OffsetList& rows) {
    return detail::offset_difference_product(rows) *
           detail::offset_factorial_product(rows);
}

namespace detail {
inline void check_chi_args(std::size_t k, std::size_t l, int extra) {
    if (k == 0 || l >= k)
        throw IndexOutOfRange("chi-shifted determinant: need 0 <= l <= k-1");
    if (extra != 0 && extra != 1)
        throw IndexOutOfRange("chi-shifted determinant: extra must be 0 or 1");
}
} // namespace detail

// Brute-force value of det [s_{i+j+chi(j>=l)+extra}]_{0<=i,j<k} where
// chi(true) = 1. The statement indexes chi on the column; putting it on the
// row transposes the matrix and leaves the determinant unchanged.
inline Rat chi_shifted_det(const Seq& s, std::size_t k, std::size_t l,
                           int extra) {
    detail::check_chi_args(k, l, extra);
    // largest entry index: (k-1) + (k-1) + 1 + extra
    s.need(2 * k + static_cast<std::size_t>(extra));
    return det_exact(SquareMatrix::from(k, [&](std::size_t i, std::size_t j) {
        return s[i + j + (j >= l ? 1 : 0) + static_cast<std::size_t>(extra)];
    }));
}

// Closed form of the same determinant for s_n = beta^n C_n:
//   extra = 1:  beta^{k^2 + k - l} C(l+k+1, 2l+1)
//   extra = 0:  beta^{k^2 - l}     C(l+k, 2l).
inline Rat chi_shifted_closed(const Rat& beta, std::size_t k, std::size_t l,
                              int extra) {
    detail::check_chi_args(k, l, extra);
    if (extra == 1)
        return pow(beta, static_cast<long>(k * k + k - l)) *
               Rat(binom(static_cast<long>(l + k + 1),
                         static_cast<long>(2 * l + 1)));
    return pow(beta, static_cast<long>(k * k - l)) *
           Rat(binom(static_cast<long>(l + k), static_cast<long>(2 * l)));
}

// Hankel determinant of the alpha-aerated sequence, evaluated two ways:
// `first` is the brute (n+1) x (n+1) determinant of aerate_alpha(c, alpha),
// `second` its block factorization
//   n = 2k-1:  det[a^2 c_{i+j} - c_{i+j+1}]_{k x k} det[c_{i+j+1}]_{k x k}
//   n = 2k  :  a det[a^2 c_{i+j+1} - c_{i+j+2}]_{k x k}
//                det[c_{i+j}]_{(k+1) x (k+1)}.
// Both sides are polynomial in alpha (the column operations behind the
// factorization divide by alpha, the identity itself does not), so
// alpha = 0 is a legitimate test point. Callers assert first == second.
inline std::pair<Rat, Rat> aerate_alpha_split(const Seq& c, const Rat& alpha,
                                              std::size_t n) {
    c.need(n + 1);
    const Seq a = aerate_alpha(c, alpha);
    const Rat left = det_exact(hankel_matrix(a, n));

    Rat right;
    if (n % 2 == 1) {
        const std::size_t k = (n + 1) / 2;
        const Rat a2 = alpha * alpha;
        const Rat f1 = det_exact(
            SquareMatrix::from(k, [&](std::size_t i, std::size_t j) {
                return a2 * c[i + j] - c[i + j + 1];
            }));
        const Rat f2 = det_exact(
            SquareMatrix::from(k, [&](std::size_t i, std::size_t j) {
                return c[i + j + 1];
            }));
        right = f1 * f2;
    } else {
        const std::size_t k = n / 2;
        const Rat a2 = alpha * alpha;
        const Rat f1 = det_exact(
            SquareMatrix::from(k, [&](std::size_t i, std::size_t j) {
                return a2 * c[i + j + 1] - c[i + j + 2];
            }));
        const Rat f2 = det_exact(
            SquareMatrix::from(k + 1, [&](std::size_t i, std::size_t j) {
                return c[i + j];
            }));
        right = alpha * f1 * f2;
    }
    return {left, right};
}

// Odd-index Hankel entry of u as an explicit double sum:
//   h_{2k-1} = beta^{(k-1)(2k-1)}
//              sum_h alpha^{2h} beta^{k-1-h}
//                sum_{l=h}^{k-1} (-1)^{k+l} C_{l-h} C(l+k, 2l+1).
inline Rat h_sum_odd(const Params& p, std::size_t k) {
    if (k < 1)
        throw IndexOutOfRange("h_sum_odd: k must be >= 1");
    Rat total = 0;
    for (std::size_t h = 0; h < k; ++h) {
        Rat inner = 0;
        for (std::size_t l = h; l < k; ++l) {
            Rat term = catalan(l - h) * Rat(binom(static_cast<long>(l + k),
                                                  static_cast<long>(2 * l + 1)));
            if ((k + l) % 2 == 1)
                term = -term;
            inner += term;
        }
        total += pow(p.alpha, static_cast<long>(2 * h)) *
                 pow(p.beta, static_cast<long>(k - 1 - h)) * inner;
    }
    return pow(p.beta, static_cast<long>((k - 1) * (2 * k - 1))) * total;
}

// Even-index companion:
//   h_{2k} = beta^{k(2k-1)}
//            sum_h alpha^{2h+1} beta^{k-1-h}
//              sum_{l=h+1}^{k} (-1)^{k+l-1} C_{l-1-h} C(l+k, 2l).
// k = 0 gives the empty sum, consistent with h_0 = 0.
inline Rat h_sum_even(const Params& p, std::size_t k) {
    Rat total = 0;
    for (std::size_t h = 0; h < k; ++h) {
        Rat inner = 0;
        for (std::size_t l = h + 1; l <= k; ++l) {
            Rat term = catalan(l - 1 - h) *
                       Rat(binom(static_cast<long>(l + k),
                                 static_cast<long>(2 * l)));
            if ((k + l) % 2 == 0)
                term = -term;
            inner += term;
        }
        total += pow(p.alpha, static_cast<long>(2 * h + 1)) *
                 pow(p.beta, static_cast<long>(k - 1 - h)) * inner;
    }
    return pow(p.beta, static_cast<long>(k * (2 * k - 1))) * total;
}

// z_n = beta^{-C(n,2)} h_n straight from the double sums, parity-split with
// the even-case summation index lowered by one. Satisfies
// z_{n+2} = alpha z_{n+1} - beta z_n and equals -U_n.
inline Rat z_eval(const Params& p, std::size_t n) {
    if (n % 2 == 1) {
        const std::size_t k = (n + 1) / 2;
        Rat total = 0;
        for (std::size_t h = 0; h < k; ++h) {
            Rat inner = 0;
            for (std::size_t l = h; l < k; ++l) {
                Rat term = catalan(l - h) *
                           Rat(binom(static_cast<long>(l + k),
                                     static_cast<long>(2 * l + 1)));
                if ((k + l) % 2 == 1)
                    term = -term;
                inner += term;
            }
            total += pow(p.alpha, static_cast<long>(2 * h)) *
                     pow(p.beta, static_cast<long>(k - 1 - h)) * inner;
        }
        return total;
    }
    const std::size_t k = n / 2;
    Rat total = 0;
    for (std::size_t h = 0; h < k; ++h) {
        Rat inner = 0;
        for (std::size_t l = h; l < k; ++l) {
            Rat term = catalan(l - h) *
                       Rat(binom(static_cast<long>(l + k + 1),
                                 static_cast<long>(2 * l + 2)));
            if ((k + l) % 2 == 1)
                term = -term;
            inner += term;
        }
        total += pow(p.alpha, static_cast<long>(2 * h + 1)) *
                 pow(p.beta, static_cast<long>(k - 1 - h)) * inner;
    }
    return total;
}

} // namespace hankel
