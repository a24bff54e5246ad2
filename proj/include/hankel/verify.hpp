#pragma once

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <string>
#include <utility>
#include <vector>

#include "hankel/catalan.hpp"
#include "hankel/closed_forms.hpp"
#include "hankel/corpus.hpp"
#include "hankel/errors.hpp"
#include "hankel/hankel_det.hpp"
#include "hankel/lucas.hpp"
#include "hankel/orthopoly.hpp"
#include "hankel/rational.hpp"
#include "hankel/reversion.hpp"
#include "hankel/sequence.hpp"
#include "hankel/transforms.hpp"

namespace hankel {

// Identity verification over parameter grids. Every identity id names one
// closed-form statement; each check compares an independently computed
// determinant (or transform) against the closed form, exactly. The
// identities are polynomial in (alpha, beta), so a grid with more distinct
// alpha values than the alpha-degree and more distinct beta values than the
// beta-degree proves the identity for that index range outright; the
// default grid is sized that way (see default_grid).

struct VerifyFailure {
    std::string where;
    std::string index;
    std::string expected;
    std::string actual;
};

struct VerifyReport {
    std::string identity_id;
    std::size_t points_tested = 0;
    std::vector<VerifyFailure> failures;
    bool pass() const { return failures.empty(); }
};

struct VerifyConfig {
    std::vector<Params> grid;
    std::size_t n_max = 6;
    std::uint64_t seed = 42;
    std::vector<std::string> only; // empty means all identities
    bool force = false;            // lifts the n_max <= 8 cost guard
    bool thm22_literal = false;    // assert the doubled variant instead
};

namespace detail {

class Checker {
public:
    explicit Checker(VerifyReport& rep) : rep_(rep) {}

    void expect(const std::string& where, const std::string& index,
                const Rat& expected, const Rat& actual) {
        ++rep_.points_tested;
        if (expected != actual)
            rep_.failures.push_back(
                {where, index, expected.str(), actual.str()});
    }

    void expect_true(const std::string& where, const std::string& index,
                     bool ok) {
        ++rep_.points_tested;
        if (!ok)
            rep_.failures.push_back({where, index, "true", "false"});
    }

    void record_error(const std::string& where, const std::string& index,
                      const std::string& what) {
        ++rep_.points_tested;
        rep_.failures.push_back({where, index, "(no exception)", what});
    }

private:
    VerifyReport& rep_;
};

// Runs `body` for one grid point; library errors become per-point failure
// records instead of aborting the whole suite.
template <typename F>
void guarded(Checker& chk, const std::string& where, F&& body) {
    try {
        body();
    } catch (const Error& e) {
        chk.record_error(where, "-", e.what());
    }
}

inline std::vector<Rat> unique_betas(const std::vector<Params>& grid) {
    std::vector<Rat> betas;
    for (const Params& p : grid)
        if (std::find(betas.begin(), betas.end(), p.beta) == betas.end())
            betas.push_back(p.beta);
    return betas;
}

inline std::vector<Rat> corpus_alphas() {
    return {Rat(-2), Rat(-1), Rat(0), Rat(1), Rat(3), Rat(1, 2)};
}

// --- identity bodies ------------------------------------------------------

// H(u*)_n = beta^{C(n+1,2)}. Degrees at index n: alpha (n+1)^2, beta
// (n+1)^2 / 2.
inline void check_thm21(const VerifyConfig& cfg, VerifyReport& rep) {
    Checker chk(rep);
    for (const Params& p : cfg.grid)
        guarded(chk, p.str(), [&] {
            const Seq ustar = shift(u_sequence(p, 2 * cfg.n_max + 2), 1);
            const Seq h = hankel_transform(ustar);
            for (std::size_t n = 0; n <= cfg.n_max; ++n)
                chk.expect(p.str(), "n=" + std::to_string(n), h[n],
                           hstar_closed(p, n));
        });
}

// H(u**)_n = beta^{C(n+1,2)} U_{n+2}; with the literal flag the doubled
// transcription is asserted instead, which fails already at n = 0.
inline void check_thm22(const VerifyConfig& cfg, VerifyReport& rep) {
    Checker chk(rep);
    for (const Params& p : cfg.grid)
        guarded(chk, p.str(), [&] {
            const Seq ustar2 = shift(u_sequence(p, 2 * cfg.n_max + 3), 2);
            const Seq h = hankel_transform(ustar2);
            for (std::size_t n = 0; n <= cfg.n_max; ++n) {
                const Rat closed = cfg.thm22_literal
                                       ? hstarstar_closed_literal(p, n)
                                       : hstarstar_closed(p, n);
                chk.expect(p.str(), "n=" + std::to_string(n), h[n], closed);
            }
        });
}

// H(u)_n = -beta^{C(n,2)} U_n.
inline void check_thm23(const VerifyConfig& cfg, VerifyReport& rep) {
    Checker chk(rep);
    for (const Params& p : cfg.grid)
        guarded(chk, p.str(), [&] {
            const Seq h = hankel_transform(u_sequence(p, 2 * cfg.n_max + 1));
            for (std::size_t n = 0; n <= cfg.n_max; ++n)
                chk.expect(p.str(), "n=" + std::to_string(n), h[n],
                           h_closed(p, n));
        });
}

// Aerating product law H(aerate(s))_n = H(s)_{n/2} H(shift(s,1))_{(n-1)/2}
// with the empty-determinant convention at n = 0. Exact per sequence, no
// (alpha, beta) grid involved; checked on Catalan and the seeded corpus.
inline void check_thm41(const VerifyConfig& cfg, VerifyReport& rep) {
    Checker chk(rep);
    std::vector<Seq> pool = random_corpus(cfg.seed, 25, 2 * cfg.n_max + 5);
    pool.push_back(catalan_prefix(2 * cfg.n_max + 5));
    for (const Seq& s : pool)
        guarded(chk, s.label, [&] {
            const Seq g = hankel_transform(aerate(s));
            const Seq h = hankel_transform(s);
            const Seq hs = hankel_transform(shift(s, 1));
            for (std::size_t n = 0; n <= cfg.n_max; ++n) {
                const Rat rhs =
                    n == 0 ? h[0] : h[n / 2] * hs[(n - 1) / 2];
                chk.expect(s.label, "n=" + std::to_string(n), g[n], rhs);
            }
        });
}

// H(r^n s_n)_n = r^{n(n+1)} H(s)_n, including r = 0 under 0^0 = 1.
inline void check_prop42(const VerifyConfig& cfg, VerifyReport& rep) {
    Checker chk(rep);
    const std::vector<Rat> rs = {Rat(2), Rat(-1), Rat(1, 2), Rat(3), Rat(0)};
    for (const Seq& s : random_corpus(cfg.seed, 25, 2 * cfg.n_max + 1))
        guarded(chk, s.label, [&] {
            const Seq h = hankel_transform(s);
            for (const Rat& r : rs) {
                const Seq hr = hankel_transform(scale_pointwise(s, r));
                for (std::size_t n = 0; n <= cfg.n_max; ++n)
                    chk.expect(s.label + ",r=" + r.str(),
                               "n=" + std::to_string(n),
                               pow(r, static_cast<long>(n * (n + 1))) * h[n],
                               hr[n]);
            }
        });
}

// Hankel invariance under the falling alpha-binomial transform.
inline void check_lem31(const VerifyConfig& cfg, VerifyReport& rep) {
    Checker chk(rep);
    for (const Seq& s : random_corpus(cfg.seed, 25, 2 * cfg.n_max + 1))
        guarded(chk, s.label, [&] {
            const Seq h = hankel_transform(s);
            for (const Rat& a : corpus_alphas()) {
                const Seq hb = hankel_transform(binomial_transform(s, a));
                for (std::size_t n = 0; n <= cfg.n_max; ++n)
                    chk.expect(s.label + ",alpha=" + a.str(),
                               "n=" + std::to_string(n), h[n], hb[n]);
            }
        });
}

// H_b = B H_a B^T on leading sections.
inline void check_lem32(const VerifyConfig& cfg, VerifyReport& rep) {
    Checker chk(rep);
    const std::size_t m = cfg.n_max < 6 ? cfg.n_max : 6;
    for (const Seq& s : random_corpus(cfg.seed, 25, 2 * cfg.n_max + 5))
        guarded(chk, s.label, [&] {
            for (const Rat& a : corpus_alphas())
                chk.expect_true(s.label + ",alpha=" + a.str(),
                                "m=" + std::to_string(m),
                                conjugate_identity_check(s, a, m));
        });
}

// det [a^2 C_{i+j} - b C_{i+j+1}]_{0..n} = U_{2n+3} = Heilermann pipeline.
// Degrees at index n: alpha 2n+2, beta n+1. The pipeline route applies
// only where the r-sequence exists (all intermediate minors nonzero); where
// it signals DivisionByZeroR the route is skipped, the other two still
// being asserted.
inline void check_thm53a(const VerifyConfig& cfg, VerifyReport& rep) {
    Checker chk(rep);
    for (const Params& p : cfg.grid)
        guarded(chk, p.str(), [&] {
            Seq lin;
            for (std::size_t m = 0; m <= 2 * cfg.n_max + 1; ++m)
                lin.values.push_back(p.alpha * p.alpha * catalan(m) -
                                     p.beta * catalan(m + 1));
            const Seq h = hankel_transform(lin);
            for (std::size_t n = 0; n <= cfg.n_max; ++n) {
                chk.expect(p.str(), "n=" + std::to_string(n), h[n],
                           hhat_closed(p, n));
                try {
                    const Rat viaweights = heilermann_pipeline(
                        p, PipelineVariant::plain, n);
                    chk.expect(p.str(), "pipeline,n=" + std::to_string(n),
                               h[n], viaweights);
                } catch (const DivisionByZeroR&) {
                } catch (const InvalidParams&) {
                }
            }
        });
}

// Shifted companion det [a^2 C_{i+j+1} - b C_{i+j+2}]_{0..n}; closed form
// via the (alpha^2 - 2 beta, beta^2) recurrence, third route via the
// second-kind pipeline where defined.
inline void check_thm53b(const VerifyConfig& cfg, VerifyReport& rep) {
    Checker chk(rep);
    for (const Params& p : cfg.grid)
        guarded(chk, p.str(), [&] {
            Seq lin;
            for (std::size_t m = 0; m <= 2 * cfg.n_max + 1; ++m)
                lin.values.push_back(p.alpha * p.alpha * catalan(m + 1) -
                                     p.beta * catalan(m + 2));
            const Seq h = hankel_transform(lin);
            for (std::size_t n = 0; n <= cfg.n_max; ++n) {
                chk.expect(p.str(), "n=" + std::to_string(n), h[n],
                           hcheck_closed(p, n));
                try {
                    const Rat viaweights = heilermann_pipeline(
                        p, PipelineVariant::shifted, n);
                    chk.expect(p.str(), "pipeline,n=" + std::to_string(n),
                               h[n], viaweights);
                } catch (const DivisionByZeroR&) {
                } catch (const InvalidParams&) {
                }
            }
        });
}

// Block factorization of the alpha-aerated Hankel determinant, both
// parities, on scaled-Catalan at each grid point plus the corpus.
inline void check_thm61(const VerifyConfig& cfg, VerifyReport& rep) {
    Checker chk(rep);
    for (const Params& p : cfg.grid)
        guarded(chk, p.str(), [&] {
            const Seq c = scaled_catalan_prefix(p.beta, cfg.n_max + 1);
            for (std::size_t n = 0; n <= cfg.n_max; ++n) {
                const auto [lhs, rhs] = aerate_alpha_split(c, p.alpha, n);
                chk.expect(p.str(), "n=" + std::to_string(n), lhs, rhs);
            }
        });
    for (const Seq& s : random_corpus(cfg.seed, 25, cfg.n_max + 1))
        guarded(chk, s.label, [&] {
            for (const Rat& a : corpus_alphas())
                for (std::size_t n = 0; n <= cfg.n_max; ++n) {
                    const auto [lhs, rhs] = aerate_alpha_split(s, a, n);
                    chk.expect(s.label + ",alpha=" + a.str(),
                               "n=" + std::to_string(n), lhs, rhs);
                }
        });
}

// Krattenthaler's offset-determinant product formula: every strictly
// increasing offset list with k <= 4, offsets <= 7, one repeated-offset
// singular case and two unsorted lists. Integer-exact, no grid.
inline void increasing_offset_lists(std::size_t k, std::size_t max_offset,
                                    std::size_t from, OffsetList& cur,
                                    std::vector<OffsetList>& out) {
    if (cur.size() == k) {
        out.push_back(cur);
        return;
    }
    for (std::size_t v = from; v <= max_offset; ++v) {
        cur.push_back(v);
        increasing_offset_lists(k, max_offset, v + 1, cur, out);
        cur.pop_back();
    }
}

inline void check_thm71(const VerifyConfig& cfg, VerifyReport& rep) {
    (void)cfg;
    Checker chk(rep);
    const Seq cat = catalan_prefix(12);
    std::vector<OffsetList> lists;
    for (std::size_t k = 0; k <= 4; ++k) {
        OffsetList cur;
        increasing_offset_lists(k, 7, 0, cur, lists);
    }
    lists.push_back({1, 1});
    lists.push_back({3, 1, 0});
    lists.push_back({5, 2, 2});
    for (const OffsetList& rows : lists) {
        std::string name = "rows=(";
        for (std::size_t i = 0; i < rows.size(); ++i)
            name += (i ? "," : "") + std::to_string(rows[i]);
        name += ")";
        chk.expect(name, "k=" + std::to_string(rows.size()),
                   hankel_like_det(cat, rows), krattenthaler_det(rows));
    }
}

// chi-shifted scaled-Catalan determinants vs their closed products, over
// every distinct beta in the grid, k <= 6, all l. beta-degree is
// k^2 + k <= 42, so the default grid's 44 distinct beta values prove the
// statement for this range.
inline void check_chi(const VerifyConfig& cfg, VerifyReport& rep, int extra) {
    Checker chk(rep);
    for (const Rat& beta : unique_betas(cfg.grid)) {
        const Seq c = scaled_catalan_prefix(beta, 14);
        for (std::size_t k = 1; k <= 6; ++k)
            for (std::size_t l = 0; l < k; ++l)
                chk.expect("beta=" + beta.str(),
                           "k=" + std::to_string(k) +
                               ",l=" + std::to_string(l),
                           chi_shifted_det(c, k, l, extra),
                           chi_shifted_closed(beta, k, l, extra));
    }
}

inline void check_lem72(const VerifyConfig& cfg, VerifyReport& rep) {
    check_chi(cfg, rep, 1);
}

inline void check_lem73(const VerifyConfig& cfg, VerifyReport& rep) {
    check_chi(cfg, rep, 0);
}

// Odd/even double sums against the closed Hankel entries of u.
inline void check_eq24(const VerifyConfig& cfg, VerifyReport& rep) {
    Checker chk(rep);
    for (const Params& p : cfg.grid)
        for (std::size_t k = 1; 2 * k - 1 <= cfg.n_max + 1; ++k)
            chk.expect(p.str(), "k=" + std::to_string(k),
                       h_closed(p, 2 * k - 1), h_sum_odd(p, k));
}

inline void check_eq28(const VerifyConfig& cfg, VerifyReport& rep) {
    Checker chk(rep);
    for (const Params& p : cfg.grid)
        for (std::size_t k = 0; 2 * k <= cfg.n_max + 1; ++k)
            chk.expect(p.str(), "k=" + std::to_string(k),
                       h_closed(p, 2 * k), h_sum_even(p, k));
}

// z_n from the sums equals -U_n and satisfies the three-term recurrence
// z_{n+2} = alpha z_{n+1} - beta z_n.
inline void check_eq30(const VerifyConfig& cfg, VerifyReport& rep) {
    Checker chk(rep);
    for (const Params& p : cfg.grid) {
        std::vector<Rat> z;
        for (std::size_t n = 0; n <= cfg.n_max + 2; ++n) {
            z.push_back(z_eval(p, n));
            chk.expect(p.str(), "n=" + std::to_string(n), -lucas_u(p, n),
                       z.back());
        }
        for (std::size_t n = 0; n <= cfg.n_max; ++n)
            chk.expect(p.str(), "recurrence,n=" + std::to_string(n),
                       p.alpha * z[n + 1] - p.beta * z[n], z[n + 2]);
    }
}

// Bordered-matrix route to H(u): det of the bordered aerated section
// equals the closed Hankel entry.
inline void check_eq20(const VerifyConfig& cfg, VerifyReport& rep) {
    Checker chk(rep);
    for (const Params& p : cfg.grid)
        guarded(chk, p.str(), [&] {
            const Seq c = scaled_catalan_prefix(p.beta, cfg.n_max + 2);
            const Seq aer = aerate(c);
            const Seq aa = aerate_alpha(c, p.alpha);
            for (std::size_t n = 0; n <= cfg.n_max; ++n)
                chk.expect(p.str(), "n=" + std::to_string(n),
                           h_closed(p, n), bordered_hankel_det(aer, aa, n));
        });
}

} // namespace detail

inline const std::vector<std::pair<
    std::string, void (*)(const VerifyConfig&, VerifyReport&)>>&
identity_registry() {
    static const std::vector<
        std::pair<std::string, void (*)(const VerifyConfig&, VerifyReport&)>>
        reg = {
            {"eq20", &detail::check_eq20},   {"eq24", &detail::check_eq24},
            {"eq28", &detail::check_eq28},   {"eq30", &detail::check_eq30},
            {"lem31", &detail::check_lem31}, {"lem32", &detail::check_lem32},
            {"lem72", &detail::check_lem72}, {"lem73", &detail::check_lem73},
            {"prop42", &detail::check_prop42},
            {"thm21", &detail::check_thm21}, {"thm22", &detail::check_thm22},
            {"thm23", &detail::check_thm23}, {"thm41", &detail::check_thm41},
            {"thm53a", &detail::check_thm53a},
            {"thm53b", &detail::check_thm53b},
            {"thm61", &detail::check_thm61}, {"thm71", &detail::check_thm71},
        };
    return reg;
}

// Product grid sized from the documented degree bounds at n_max: the
// largest alpha-degree among the determinant identities is (n_max+1)^2 and
// the largest beta-degree is max((n_max+1)^2 / 2, 42), the 42 coming from
// the chi-shifted family at k = 6. Always contains the degenerate points
// alpha = 0, beta = 1, beta = -1, alpha^2 = 4 beta (at (2,1)), plus
// (1/2, 1/3), (3, 2) and (2, 2).
inline std::vector<Params> default_grid(std::size_t n_max) {
    const std::size_t deg_a = (n_max + 1) * (n_max + 1);
    std::size_t deg_b = deg_a / 2 + 2;
    if (deg_b < 42)
        deg_b = 42;

    std::vector<Rat> alphas = {Rat(0)};
    for (std::size_t i = 1; 2 * (i - 1) <= deg_a; ++i) {
        alphas.push_back(Rat(static_cast<long>(i)));
        alphas.push_back(Rat(-static_cast<long>(i)));
    }
    alphas.push_back(Rat(1, 2));

    std::vector<Rat> betas;
    for (std::size_t i = 1; 2 * (i - 1) <= deg_b; ++i) {
        betas.push_back(Rat(static_cast<long>(i)));
        betas.push_back(Rat(-static_cast<long>(i)));
    }
    betas.push_back(Rat(1, 3));
    betas.push_back(Rat(1, 2));
    betas.push_back(Rat(-1, 2));
    betas.push_back(Rat(2, 3));

    std::vector<Params> grid;
    grid.reserve(alphas.size() * betas.size());
    for (const Rat& a : alphas)
        for (const Rat& b : betas)
            grid.push_back(Params{a, b});
    return grid;
}

inline std::vector<VerifyReport> run_verify(const VerifyConfig& cfg) {
    if (cfg.grid.empty())
        throw ConfigError("verify: grid must be nonempty");
    if (cfg.n_max > 8 && !cfg.force)
        throw ConfigError("verify: n_max > 8 needs --force (determinant "
                          "cost guard)");
    for (const std::string& id : cfg.only) {
        bool known = false;
        for (const auto& [name, fn] : identity_registry())
            known = known || name == id;
        if (!known)
            throw ConfigError("verify: unknown identity id '" + id + "'");
    }

    std::vector<VerifyReport> reports;
    for (const auto& [name, fn] : identity_registry()) {
        if (!cfg.only.empty() &&
            std::find(cfg.only.begin(), cfg.only.end(), name) ==
                cfg.only.end())
            continue;
        VerifyReport rep;
        rep.identity_id = name;
        fn(cfg, rep);
        reports.push_back(std::move(rep));
    }
    return reports;
}

// Deterministic plain-text rendering; at most 20 failure lines per
// identity.
inline std::string format_reports(const std::vector<VerifyReport>& reports) {
    std::string out;
    for (const VerifyReport& rep : reports) {
        out += rep.identity_id + ": " + (rep.pass() ? "PASS" : "FAIL") +
               " points=" + std::to_string(rep.points_tested);
        if (!rep.pass())
            out += " failures=" + std::to_string(rep.failures.size());
        out += "\n";
        const std::size_t shown =
            rep.failures.size() < 20 ? rep.failures.size() : 20;
        for (std::size_t i = 0; i < shown; ++i) {
            const VerifyFailure& f = rep.failures[i];
            out += "  at " + f.where + " " + f.index + ": expected " +
                   f.expected + ", got " + f.actual + "\n";
        }
        if (rep.failures.size() > shown)
            out += "  ... " + std::to_string(rep.failures.size() - shown) +
                   " more\n";
    }
    return out;
}

inline bool all_pass(const std::vector<VerifyReport>& reports) {
    for (const VerifyReport& rep : reports)
        if (!rep.pass())
            return false;
    return true;
}

} // namespace hankel
