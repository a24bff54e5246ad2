#pragma once

#include <cstddef>
#include <optional>
#include <utility>
#include <vector>

#include "hankel/errors.hpp"
#include "hankel/rational.hpp"
#include "hankel/reversion.hpp"

namespace hankel {

// Three-term recurrence coefficient data for a family of monic orthogonal
// polynomials: alpha_seq holds alpha_0, alpha_1, ...; beta_seq holds
// beta_1, beta_2, ... (so beta_seq[i] is beta_{i+1}); mu0 is the first
// moment (beta_0 once normalized). mu0 may be unset after seeding — the
// Chebyshev seeds carry a transcendental beta_0 that cancels later in the
// chain, so the chain sets it rationally when it becomes known.
//
// The polynomials themselves are never constructed; everything here works
// at coefficient level.
struct ThreeTerm {
    std::vector<Rat> alpha_seq;
    std::vector<Rat> beta_seq;
    std::optional<Rat> mu0;

    // beta_n for n >= 1
    const Rat& beta_at(std::size_t n) const {
        if (n == 0 || n > beta_seq.size())
            throw InsufficientCoeffs("beta_" + std::to_string(n) +
                                     " is not materialized");
        return beta_seq[n - 1];
    }
    const Rat& alpha_at(std::size_t n) const {
        if (n >= alpha_seq.size())
            throw InsufficientCoeffs("alpha_" + std::to_string(n) +
                                     " is not materialized");
        return alpha_seq[n];
    }
    const Rat& moment0() const {
        if (!mu0)
            throw UnsetMoment("first moment is unset");
        return *mu0;
    }
};

// Auxiliary sequence of the linear-multiplier transformation:
//   r_0 = c - alpha_0,  r_n = c - alpha_n - beta_n / r_{n-1}.
struct RSeq {
    std::vector<Rat> values;
    Rat c;
};

// h_n = mu0^{n+1} beta_1^n beta_2^{n-1} ... beta_n: converts recurrence
// coefficients into Hankel determinants.
inline Rat heilermann(const ThreeTerm& t, std::size_t n) {
    Rat h = pow(t.moment0(), static_cast<long>(n + 1));
    for (std::size_t i = 1; i <= n; ++i)
        h *= pow(t.beta_at(i), static_cast<long>(n + 1 - i));
    return h;
}

inline RSeq r_sequence(const ThreeTerm& t, const Rat& c, std::size_t len) {
    RSeq r;
    r.c = c;
    r.values.reserve(len);
    for (std::size_t n = 0; n < len; ++n) {
        if (n == 0) {
            r.values.push_back(c - t.alpha_at(0));
            continue;
        }
        if (r.values.back().is_zero())
            throw DivisionByZeroR("r_" + std::to_string(n - 1) +
                                  " = 0: shifted Hankel minor vanishes");
        r.values.push_back(c - t.alpha_at(n) - t.beta_at(n) / r.values.back());
    }
    return r;
}

// Weight scaling w -> C w: coefficient streams unchanged, first moment
// multiplied by C when it is set.
inline ThreeTerm scale_weight(const ThreeTerm& t, const Rat& C) {
    if (C.is_zero())
        throw InvalidScale("scale_weight: C must be nonzero");
    ThreeTerm out = t;
    if (out.mu0)
        out.mu0 = *out.mu0 * C;
    return out;
}

// Supplies the first moment directly; the explicit path for chains whose
// seed left it unset.
inline ThreeTerm with_mu0(const ThreeTerm& t, const Rat& mu0) {
    ThreeTerm out = t;
    out.mu0 = mu0;
    return out;
}

// Affine change of variable w -> w(a x + b), restricted to a > 0:
//   alpha_n -> (alpha_n - b) / a,  beta_n -> beta_n / a^2 (n >= 1),
//   mu0 -> mu0 / a when set.
inline ThreeTerm affine_weight(const ThreeTerm& t, const Rat& a,
                               const Rat& b) {
    if (a.sign() <= 0)
        throw InvalidScale("affine_weight: requires a > 0");
    ThreeTerm out;
    out.alpha_seq.reserve(t.alpha_seq.size());
    for (const Rat& an : t.alpha_seq)
        out.alpha_seq.push_back((an - b) / a);
    out.beta_seq.reserve(t.beta_seq.size());
    for (const Rat& bn : t.beta_seq)
        out.beta_seq.push_back(bn / (a * a));
    if (t.mu0)
        out.mu0 = *t.mu0 / a;
    return out;
}

// Linear multiplier transformation w -> (x - c) w at coefficient level:
//   beta~_n = beta_n r_n / r_{n-1},  alpha~_n = alpha_{n+1} + r_{n+1} - r_n,
// with the transformed first moment supplied by the caller (it is an
// integral, outside rational arithmetic; every use in this library knows
// it in closed form). One usable coefficient index is lost.
inline ThreeTerm linear_multiplier(const ThreeTerm& t, const Rat& c,
                                   const Rat& new_mu0) {
    const std::size_t r_len =
        t.alpha_seq.size() < t.beta_seq.size() + 1 ? t.alpha_seq.size()
                                                   : t.beta_seq.size() + 1;
    const RSeq r = r_sequence(t, c, r_len);
    ThreeTerm out;
    out.mu0 = new_mu0;
    if (r_len == 0)
        return out;
    out.alpha_seq.reserve(r_len - 1);
    out.beta_seq.reserve(r_len - 1);
    for (std::size_t n = 0; n + 1 < r_len; ++n)
        out.alpha_seq.push_back(t.alpha_at(n + 1) + r.values[n + 1] -
                                r.values[n]);
    // r_sequence already rejected zero divisors r_0 .. r_{r_len-2}
    for (std::size_t n = 1; n < r_len; ++n)
        out.beta_seq.push_back(t.beta_at(n) * r.values[n] / r.values[n - 1]);
    return out;
}

enum class ChebyshevKind { fourth, second };

// Monic Chebyshev three-term coefficients with `len` materialized entries
// of each stream and mu0 left unset:
//   fourth kind: alpha_0 = -1/2, alpha_n = 0 (n >= 1), beta_n = 1/4
//   second kind: alpha_n = 0, beta_n = 1/4.
inline ThreeTerm chebyshev_seed(ChebyshevKind kind, std::size_t len) {
    ThreeTerm t;
    t.alpha_seq.assign(len, Rat(0));
    if (kind == ChebyshevKind::fourth && len > 0)
        t.alpha_seq[0] = Rat(-1, 2);
    t.beta_seq.assign(len, Rat(1, 4));
    return t;
}

enum class PipelineVariant { plain, shifted };

// Heilermann evaluation of the two linear-combination Catalan determinants
// through the weight-transformation chain
//   seed -> affine(1/2, -1) -> set mu0 = -beta -> (x - alpha^2/beta)
// where the seed is the fourth-kind Chebyshev family for
//   plain:   det [alpha^2 C_{i+j}   - beta C_{i+j+1}]  (mu0' = alpha^2 - beta)
// and the second-kind family for
//   shifted: det [alpha^2 C_{i+j+1} - beta C_{i+j+2}]  (mu0' = alpha^2 - 2 beta).
//
// Requires beta != 0 and a nonvanishing r-sequence up to n; a zero r_m
// signals a vanishing shifted Hankel minor and surfaces as DivisionByZeroR.
inline Rat heilermann_pipeline(const Params& p, PipelineVariant variant,
                               std::size_t n) {
    if (p.beta.is_zero())
        throw InvalidParams("heilermann_pipeline: beta must be nonzero");
    // len = n+1 materializes exactly r_0..r_n downstream, so only the
    // divisions heilermann(., n) genuinely needs can fail.
    const ThreeTerm seed = chebyshev_seed(variant == PipelineVariant::plain
                                              ? ChebyshevKind::fourth
                                              : ChebyshevKind::second,
                                          n + 1);
    const ThreeTerm stretched = affine_weight(seed, Rat(1, 2), Rat(-1));
    const ThreeTerm scaled = with_mu0(stretched, -p.beta);
    const Rat c = p.alpha * p.alpha / p.beta;
    const Rat mu0 = variant == PipelineVariant::plain
                        ? p.alpha * p.alpha - p.beta
                        : p.alpha * p.alpha - Rat(2) * p.beta;
    const ThreeTerm chain = linear_multiplier(scaled, c, mu0);
    return heilermann(chain, n);
}

} // namespace hankel
