#pragma once

#include <cstddef>
#include <vector>

#include "hankel/errors.hpp"
#include "hankel/rational.hpp"

namespace hankel {

// Truncated power series: coeffs[n] is the coefficient of x^n, and the
// truncation order is exactly coeffs.size(). All arithmetic truncates
// consistently at the requested order.
struct PowerSeries {
    std::vector<Rat> coeffs;

    PowerSeries() = default;
    explicit PowerSeries(std::vector<Rat> c) : coeffs(std::move(c)) {}
    static PowerSeries zero(std::size_t order) {
        return PowerSeries(std::vector<Rat>(order, Rat(0)));
    }

    std::size_t order() const { return coeffs.size(); }
    const Rat& operator[](std::size_t i) const { return coeffs[i]; }
    Rat& operator[](std::size_t i) { return coeffs[i]; }
};

inline PowerSeries ps_mul(const PowerSeries& a, const PowerSeries& b,
                          std::size_t order) {
    PowerSeries out = PowerSeries::zero(order);
    for (std::size_t i = 0; i < a.order() && i < order; ++i) {
        if (a[i].is_zero())
            continue;
        for (std::size_t j = 0; j < b.order() && i + j < order; ++j)
            out[i + j] += a[i] * b[j];
    }
    return out;
}

// 1 / d as a power series; requires d[0] != 0.
inline PowerSeries ps_reciprocal(const PowerSeries& d, std::size_t order) {
    if (d.order() == 0 || d[0].is_zero())
        throw std::domain_error("ps_reciprocal: zero constant term");
    PowerSeries r = PowerSeries::zero(order);
    if (order == 0)
        return r;
    r[0] = Rat(1) / d[0];
    for (std::size_t n = 1; n < order; ++n) {
        Rat acc = 0;
        for (std::size_t k = 1; k <= n && k < d.order(); ++k)
            acc += d[k] * r[n - k];
        r[n] = -acc / d[0];
    }
    return r;
}

// f(g(x)) truncated; requires g[0] = 0 so composition is well defined on
// truncated series. Horner evaluation from the top coefficient down.
inline PowerSeries ps_compose(const PowerSeries& f, const PowerSeries& g,
                              std::size_t order) {
    if (g.order() > 0 && !g[0].is_zero())
        throw std::domain_error("ps_compose: inner series has g(0) != 0");
    PowerSeries out = PowerSeries::zero(order);
    for (std::size_t k = f.order(); k-- > 0;) {
        out = ps_mul(out, g, order);
        if (order > 0)
            out[0] += f[k];
    }
    return out;
}

// Compositional inverse of f, with f[0] = 0 and f[1] != 0: returns g with
// g(f(x)) = x + O(x^order) (and hence f(g(x)) = x + O(x^order)).
//
// Solved order by order: maintaining the truncated powers f^k, the
// coefficient of x^n in sum_k g_k f^k must vanish for n >= 2, and
// [x^n] f^n = f_1^n, so each g_n is determined by a triangular step.
inline PowerSeries revert_series(const PowerSeries& f, std::size_t order) {
    if (order > f.order())
        throw InsufficientPrefix("revert_series: order exceeds input order");
    if (f.order() == 0 || !f[0].is_zero())
        throw NotRevertible("revert_series: constant term is not zero");
    if (f.order() < 2 || f[1].is_zero())
        throw NotRevertible("revert_series: linear coefficient is zero");

    PowerSeries g = PowerSeries::zero(order);
    if (order < 2)
        return g;
    g[1] = Rat(1) / f[1];

    // powers[k] = f^{k+1} truncated to `order`
    std::vector<PowerSeries> powers;
    powers.reserve(order - 1);
    powers.push_back(f);
    if (powers.back().order() > order)
        powers.back().coeffs.resize(order);
    for (std::size_t k = 2; k < order; ++k)
        powers.push_back(ps_mul(powers.back(), f, order));

    Rat f1_pow = g[1]; // 1 / f_1^n, maintained incrementally
    for (std::size_t n = 2; n < order; ++n) {
        Rat acc = 0;
        for (std::size_t k = 1; k < n; ++k)
            acc += g[k] * powers[k - 1][n];
        f1_pow /= f[1];
        g[n] = -acc * f1_pow;
    }
    return g;
}

} // namespace hankel
