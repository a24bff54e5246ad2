#pragma once

#include <cstddef>
#include <vector>

#include "hankel/errors.hpp"
#include "hankel/matrix.hpp"
#include "hankel/rational.hpp"
#include "hankel/sequence.hpp"

namespace hankel {

// Row-offset list (a_0, ..., a_{k-1}) for Hankel-like determinants; all
// entries must be non-negative, which std::size_t enforces.
using OffsetList = std::vector<std::size_t>;

// The (n+1) x (n+1) matrix [s_{i+j}]; needs 2n+1 known terms.
inline SquareMatrix hankel_matrix(const Seq& s, std::size_t n) {
    s.need(2 * n + 1);
    return SquareMatrix::from(n + 1, [&s](std::size_t i, std::size_t j) {
        return s[i + j];
    });
}

// h_n = det [s_{i+j}]_{0<=i,j<=n} for every n the prefix supports:
// the output has m+1 terms where m is the largest index with 2m+1 <= |s|.
inline Seq hankel_transform(const Seq& s) {
    Seq h;
    if (s.empty())
        return h;
    const std::size_t m = (s.size() - 1) / 2;
    h.values.reserve(m + 1);
    for (std::size_t n = 0; n <= m; ++n)
        h.values.push_back(det_exact(hankel_matrix(s, n)));
    h.label = s.label.empty() ? "hankel" : "hankel(" + s.label + ")";
    return h;
}

// det [s_{rows_i + j}]_{0<=i,j<k} with k = rows.size(); the uniform-offset
// case rows = (t, t+1, ..., t+k-1) recovers shifted Hankel determinants.
inline Rat hankel_like_det(const Seq& s, const OffsetList& rows) {
    const std::size_t k = rows.size();
    if (k == 0)
        return Rat(1);
    std::size_t max_off = 0;
    for (std::size_t r : rows)
        max_off = r > max_off ? r : max_off;
    s.need(max_off + k);
    return det_exact(SquareMatrix::from(k, [&](std::size_t i, std::size_t j) {
        return s[rows[i] + j];
    }));
}

// Determinant of the leading (n+1) x (n+1) section of the bordered matrix
//
//     [ 0   p^T ]
//     [ p   H_a ]
//
// with first row/column p and Hankel interior [a_{i+j}].
inline Rat bordered_hankel_det(const Seq& p, const Seq& a, std::size_t n) {
    if (n == 0)
        return Rat(0); // the 1x1 corner
    p.need(n);
    a.need(2 * n - 1);
    return det_exact(
        SquareMatrix::from(n + 1, [&](std::size_t i, std::size_t j) {
            if (i == 0 && j == 0)
                return Rat(0);
            if (i == 0)
                return p[j - 1];
            if (j == 0)
                return p[i - 1];
            return a[i + j - 2];
        }));
}

} // namespace hankel
