#pragma once

// Test-only oracles, deliberately independent of the library's evaluation
// paths: cofactor-expansion determinants, convolution Catalan numbers, and
// a fixed-point series inverter with its own multiply.

#include <cstddef>
#include <vector>

#include "hankel/matrix.hpp"
#include "hankel/power_series.hpp"
#include "hankel/rational.hpp"
#include "hankel/reversion.hpp"
#include "hankel/sequence.hpp"

namespace oracle {

using hankel::PowerSeries;
using hankel::Rat;
using hankel::SquareMatrix;

// Determinant by cofactor expansion along the first row; fine up to 6x6.
inline Rat cofactor_det(const SquareMatrix& m) {
    const std::size_t n = m.dim();
    if (n == 0)
        return Rat(1);
    if (n == 1)
        return m(0, 0);
    Rat total = 0;
    for (std::size_t c = 0; c < n; ++c) {
        if (m(0, c).is_zero())
            continue;
        SquareMatrix minor(n - 1);
        for (std::size_t i = 1; i < n; ++i) {
            std::size_t jj = 0;
            for (std::size_t j = 0; j < n; ++j) {
                if (j == c)
                    continue;
                minor(i - 1, jj++) = m(i, j);
            }
        }
        const Rat term = m(0, c) * cofactor_det(minor);
        total += (c % 2 == 0) ? term : -term;
    }
    return total;
}

// Catalan numbers by the convolution recurrence
// C_{n+1} = sum_{k=0}^{n} C_k C_{n-k}.
inline std::vector<Rat> catalan_by_convolution(std::size_t count) {
    std::vector<Rat> c;
    c.reserve(count);
    if (count == 0)
        return c;
    c.push_back(Rat(1));
    for (std::size_t n = 1; n < count; ++n) {
        Rat acc = 0;
        for (std::size_t k = 0; k < n; ++k)
            acc += c[k] * c[n - 1 - k];
        c.push_back(acc);
    }
    return c;
}

inline std::vector<Rat> mul_trunc(const std::vector<Rat>& a,
                                  const std::vector<Rat>& b,
                                  std::size_t order) {
    std::vector<Rat> out(order, Rat(0));
    for (std::size_t i = 0; i < a.size() && i < order; ++i)
        for (std::size_t j = 0; j < b.size() && i + j < order; ++j)
            out[i + j] += a[i] * b[j];
    return out;
}

// Compositional inverse by fixed-point iteration: with f = f_1 x + f_2 x^2
// + ..., the inverse y satisfies y = (x - f_2 y^2 - f_3 y^3 - ...) / f_1.
// Each sweep fixes one more coefficient, so `order` sweeps converge.
inline PowerSeries revert_fixed_point(const PowerSeries& f,
                                      std::size_t order) {
    std::vector<Rat> y(order, Rat(0));
    for (std::size_t sweep = 0; sweep < order; ++sweep) {
        std::vector<Rat> acc(order, Rat(0));
        if (order > 1)
            acc[1] = Rat(1);
        std::vector<Rat> ypow = y; // y^k, starting at k = 1
        for (std::size_t kk = 2; kk < f.order() && kk < order; ++kk) {
            ypow = mul_trunc(ypow, y, order);
            for (std::size_t i = 0; i < order; ++i)
                acc[i] -= f[kk] * ypow[i];
        }
        for (std::size_t i = 0; i < order; ++i)
            acc[i] /= f[1];
        y = acc;
    }
    return PowerSeries(std::move(y));
}

inline hankel::Seq seq_of(std::initializer_list<long> xs) {
    hankel::Seq s;
    for (long x : xs)
        s.values.push_back(Rat(x));
    return s;
}

inline hankel::Seq seq_of(std::initializer_list<Rat> xs) {
    hankel::Seq s;
    s.values.assign(xs.begin(), xs.end());
    return s;
}

// Shared small parameter grid with the degenerate points alpha = 0,
// beta = 1, beta = -1 and alpha^2 = 4 beta.
inline std::vector<hankel::Params> small_grid() {
    using hankel::Params;
    using hankel::Rat;
    return {
        Params{Rat(2), Rat(1)},        // alpha^2 = 4 beta
        Params{Rat(1), Rat(-1)},       // Fibonacci point
        Params{Rat(3), Rat(2)},        // distinct integer roots
        Params{Rat(0), Rat(1)},        // aerated-Catalan point
        Params{Rat(2), Rat(2)},
        Params{Rat(1, 2), Rat(1, 3)},  // non-integer rationals
        Params{Rat(-3), Rat(2)},
        Params{Rat(5), Rat(6)},
    };
}

} // namespace oracle
