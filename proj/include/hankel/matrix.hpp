#pragma once

#include <cstddef>
#include <utility>
#include <vector>

#include "hankel/rational.hpp"

namespace hankel {

// Dense square matrix of exact rationals. Dimension 0 is legal and has
// determinant 1 (empty-product convention).
class SquareMatrix {
public:
    SquareMatrix() : n_(0) {}
    explicit SquareMatrix(std::size_t n) : n_(n), e_(n * n, Rat(0)) {}

    template <typename F>
    static SquareMatrix from(std::size_t n, F&& entry) {
        SquareMatrix m(n);
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j)
                m(i, j) = entry(i, j);
        return m;
    }

    static SquareMatrix identity(std::size_t n) {
        return from(n, [](std::size_t i, std::size_t j) {
            return Rat(i == j ? 1 : 0);
        });
    }

    std::size_t dim() const { return n_; }
    const Rat& operator()(std::size_t i, std::size_t j) const {
        return e_[i * n_ + j];
    }
    Rat& operator()(std::size_t i, std::size_t j) { return e_[i * n_ + j]; }

    SquareMatrix transposed() const {
        return from(n_, [this](std::size_t i, std::size_t j) {
            return (*this)(j, i);
        });
    }

    friend SquareMatrix operator*(const SquareMatrix& a,
                                  const SquareMatrix& b) {
        SquareMatrix out(a.n_);
        for (std::size_t i = 0; i < a.n_; ++i)
            for (std::size_t k = 0; k < a.n_; ++k) {
                const Rat& aik = a(i, k);
                if (aik.is_zero())
                    continue;
                for (std::size_t j = 0; j < a.n_; ++j)
                    out(i, j) += aik * b(k, j);
            }
        return out;
    }

    friend bool operator==(const SquareMatrix& a, const SquareMatrix& b) {
        return a.n_ == b.n_ && a.e_ == b.e_;
    }

private:
    std::size_t n_;
    std::vector<Rat> e_;
};

// Exact determinant by Bareiss fraction-free elimination. Each row is first
// scaled by the lcm of its denominators (the cleared factor is tracked and
// divided back out), so the elimination runs entirely over integers and
// every interior division is exact. Pivoting scans downward for the first
// nonzero entry; if a column has none the determinant is 0.
inline Rat det_exact(const SquareMatrix& m) {
    const std::size_t n = m.dim();
    if (n == 0)
        return Rat(1);

    std::vector<BigInt> a(n * n);
    BigInt cleared(1);
    for (std::size_t i = 0; i < n; ++i) {
        BigInt l(1);
        for (std::size_t j = 0; j < n; ++j)
            mpz_lcm(l.get_mpz_t(), l.get_mpz_t(),
                    m(i, j).denominator().get_mpz_t());
        for (std::size_t j = 0; j < n; ++j) {
            BigInt scale;
            mpz_divexact(scale.get_mpz_t(), l.get_mpz_t(),
                         m(i, j).denominator().get_mpz_t());
            a[i * n + j] = m(i, j).numerator() * scale;
        }
        cleared *= l;
    }

    int sign = 1;
    BigInt prev(1);
    for (std::size_t k = 0; k + 1 < n; ++k) {
        std::size_t pivot = k;
        while (pivot < n && a[pivot * n + k] == 0)
            ++pivot;
        if (pivot == n)
            return Rat(0);
        if (pivot != k) {
            for (std::size_t j = k; j < n; ++j)
                std::swap(a[k * n + j], a[pivot * n + j]);
            sign = -sign;
        }
        for (std::size_t i = k + 1; i < n; ++i) {
            for (std::size_t j = k + 1; j < n; ++j) {
                BigInt t = a[k * n + k] * a[i * n + j] -
                           a[i * n + k] * a[k * n + j];
                mpz_divexact(a[i * n + j].get_mpz_t(), t.get_mpz_t(),
                             prev.get_mpz_t());
            }
            a[i * n + k] = 0;
        }
        prev = a[k * n + k];
    }

    BigInt det_int = a[n * n - 1];
    if (sign < 0)
        det_int = -det_int;
    return Rat(det_int, cleared);
}

} // namespace hankel
