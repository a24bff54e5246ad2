#pragma once

#include <cstddef>

#include "hankel/binomial.hpp"
#include "hankel/errors.hpp"
#include "hankel/hankel_det.hpp"
#include "hankel/matrix.hpp"
#include "hankel/rational.hpp"
#include "hankel/sequence.hpp"

namespace hankel {

// Falling alpha-binomial transform: b_n = sum_k C(n,k) alpha^{n-k} s_k.
// Leaves the Hankel transform invariant; alpha = 0 is the identity.
inline Seq binomial_transform(const Seq& s, const Rat& alpha) {
    Seq b;
    b.values.reserve(s.size());
    for (std::size_t n = 0; n < s.size(); ++n) {
        Rat acc = 0;
        Rat ap = 1; // alpha^{n-k}, built from k = n downward
        for (std::size_t k = n + 1; k-- > 0;) {
            acc += Rat(binom(static_cast<long>(n), static_cast<long>(k))) *
                   ap * s[k];
            ap *= alpha;
        }
        b.values.push_back(acc);
    }
    b.label = s.label.empty() ? "" : "B(" + s.label + ";" + alpha.str() + ")";
    return b;
}

// Leading m x m section of the lower-triangular matrix
// [C(n,k) alpha^{n-k}]; entries above the diagonal are 0.
inline SquareMatrix binomial_matrix_section(const Rat& alpha, std::size_t m) {
    return SquareMatrix::from(m, [&alpha](std::size_t n, std::size_t k) {
        if (k > n)
            return Rat(0);
        return Rat(binom(static_cast<long>(n), static_cast<long>(k))) *
               pow(alpha, static_cast<long>(n - k));
    });
}

// Aerating transform (s_0, 0, s_1, 0, ..., s_{len-1}): output length
// 2 len - 1, ending on the last data term rather than a structural zero.
inline Seq aerate(const Seq& s) {
    Seq p;
    if (s.empty())
        return p;
    p.values.assign(2 * s.size() - 1, Rat(0));
    for (std::size_t k = 0; k < s.size(); ++k)
        p.values[2 * k] = s[k];
    p.label = s.label.empty() ? "" : "aerate(" + s.label + ")";
    return p;
}

// alpha-aerating transform (alpha s_0, s_1, alpha s_1, s_2, alpha s_2, ...),
// i.e. a_n = alpha p_n + p_{n+1} for p the aerated sequence. Output length
// 2 len - 1, ending on alpha s_{len-1}.
inline Seq aerate_alpha(const Seq& s, const Rat& alpha) {
    s.need(1);
    Seq a;
    a.values.assign(2 * s.size() - 1, Rat(0));
    for (std::size_t k = 0; k < s.size(); ++k) {
        a.values[2 * k] = alpha * s[k];
        if (k > 0)
            a.values[2 * k - 1] = s[k];
    }
    a.label = s.label.empty()
        ? "" : "aerate(" + s.label + ";" + alpha.str() + ")";
    return a;
}

// (r^n s_n); scales the Hankel transform by r^{n(n+1)}.
inline Seq scale_pointwise(const Seq& s, const Rat& r) {
    Seq out;
    out.values.reserve(s.size());
    Rat rp = 1; // r^n, with 0^0 = 1
    for (std::size_t n = 0; n < s.size(); ++n) {
        out.values.push_back(rp * s[n]);
        rp *= r;
    }
    out.label = s.label.empty() ? "" : s.label + "*" + r.str() + "^n";
    return out;
}

// Checks the conjugation identity H_b = B H_a B^T on leading m x m
// sections, where b is the falling alpha-binomial transform of a and B is
// the alpha-binomial matrix section. Valid sectionwise precisely because B
// is lower triangular, so the product at (i,j), i,j < m, only touches
// a_{k+l} with k,l < m.
inline bool conjugate_identity_check(const Seq& a, const Rat& alpha,
                                     std::size_t m) {
    if (m == 0)
        return true;
    a.need(2 * m - 1);
    const SquareMatrix b = binomial_matrix_section(alpha, m);
    for (std::size_t i = 0; i < m; ++i)
        for (std::size_t j = i + 1; j < m; ++j)
            if (!b(i, j).is_zero())
                return false; // cannot happen; guards the sectionwise claim
    const Seq bt = binomial_transform(a, alpha);
    const SquareMatrix ha =
        SquareMatrix::from(m, [&](std::size_t i, std::size_t j) {
            return a[i + j];
        });
    const SquareMatrix hb =
        SquareMatrix::from(m, [&](std::size_t i, std::size_t j) {
            return bt[i + j];
        });
    return b * ha * b.transposed() == hb;
}

} // namespace hankel
