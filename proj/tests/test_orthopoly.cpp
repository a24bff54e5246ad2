#include <catch2/catch_amalgamated.hpp>

#include "hankel/catalan.hpp"
#include "hankel/closed_forms.hpp"
#include "hankel/hankel_det.hpp"
#include "hankel/lucas.hpp"
#include "hankel/matrix.hpp"
#include "hankel/orthopoly.hpp"
#include "hankel/rational.hpp"

#include "support.hpp"

using namespace hankel;

namespace {

// the coefficient set reached by: Chebyshev seed -> affine(1/2,-1)
// -> mu0 = -beta -> (x - alpha^2/beta)
ThreeTerm chain_for(const Params& p, ChebyshevKind kind, std::size_t len,
                    const Rat& new_mu0) {
    const ThreeTerm seed = chebyshev_seed(kind, len);
    const ThreeTerm aff = affine_weight(seed, Rat(1, 2), Rat(-1));
    return linear_multiplier(with_mu0(aff, -p.beta),
                             p.alpha * p.alpha / p.beta, new_mu0);
}

Seq linear_combo(const Params& p, std::size_t shift_by, std::size_t len) {
    Seq s;
    for (std::size_t m = 0; m < len; ++m)
        s.values.push_back(p.alpha * p.alpha * catalan(m + shift_by) -
                           p.beta * catalan(m + shift_by + 1));
    return s;
}

} // namespace

TEST_CASE("heilermann product") {
    ThreeTerm ones;
    ones.mu0 = Rat(1);
    ones.beta_seq.assign(7, Rat(1));
    CHECK(heilermann(ones, 7) == Rat(1));

    ThreeTerm t;
    t.mu0 = Rat(2);
    t.beta_seq = {Rat(3)};
    CHECK(heilermann(t, 1) == Rat(12)); // 2^2 * 3
    CHECK(heilermann(t, 0) == Rat(2));

    ThreeTerm unset;
    unset.beta_seq = {Rat(3)};
    CHECK_THROWS_AS(heilermann(unset, 0), UnsetMoment);
    CHECK_THROWS_AS(heilermann(t, 2), InsufficientCoeffs);
}

TEST_CASE("scale_weight and with_mu0") {
    ThreeTerm t;
    t.alpha_seq = {Rat(1), Rat(2)};
    t.beta_seq = {Rat(5)};
    t.mu0 = Rat(4);
    const ThreeTerm half = scale_weight(t, Rat(1, 2));
    CHECK(half.mu0 == Rat(2));
    CHECK(half.alpha_seq == t.alpha_seq);
    CHECK(half.beta_seq == t.beta_seq);
    const ThreeTerm same = scale_weight(t, Rat(1));
    CHECK(same.mu0 == Rat(4));
    CHECK_THROWS_AS(scale_weight(t, Rat(0)), InvalidScale);

    ThreeTerm unset;
    unset.alpha_seq = {Rat(1)};
    const ThreeTerm scaled_unset = scale_weight(unset, Rat(-3));
    CHECK_FALSE(scaled_unset.mu0.has_value());
    CHECK(with_mu0(scaled_unset, Rat(7)).mu0 == Rat(7));
}

TEST_CASE("affine_weight") {
    const ThreeTerm fourth = chebyshev_seed(ChebyshevKind::fourth, 4);
    const ThreeTerm t = affine_weight(fourth, Rat(1, 2), Rat(-1));
    CHECK(t.alpha_seq ==
          std::vector<Rat>{Rat(1), Rat(2), Rat(2), Rat(2)});
    CHECK(t.beta_seq == std::vector<Rat>{Rat(1), Rat(1), Rat(1), Rat(1)});
    CHECK_FALSE(t.mu0.has_value());

    const ThreeTerm second = chebyshev_seed(ChebyshevKind::second, 3);
    const ThreeTerm t2 = affine_weight(second, Rat(1, 2), Rat(-1));
    CHECK(t2.alpha_seq == std::vector<Rat>{Rat(2), Rat(2), Rat(2)});
    CHECK(t2.beta_seq == std::vector<Rat>{Rat(1), Rat(1), Rat(1)});

    ThreeTerm with_moment = with_mu0(fourth, Rat(6));
    CHECK(affine_weight(with_moment, Rat(3), Rat(0)).mu0 == Rat(2));
    CHECK(same_values(Seq{affine_weight(with_moment, Rat(1), Rat(0)).alpha_seq},
                      Seq{with_moment.alpha_seq}));
    CHECK_THROWS_AS(affine_weight(fourth, Rat(0), Rat(1)), InvalidScale);
    CHECK_THROWS_AS(affine_weight(fourth, Rat(-2), Rat(1)), InvalidScale);
}

TEST_CASE("chebyshev_seed") {
    const ThreeTerm fourth = chebyshev_seed(ChebyshevKind::fourth, 3);
    CHECK(fourth.alpha_seq == std::vector<Rat>{Rat(-1, 2), Rat(0), Rat(0)});
    CHECK(fourth.beta_seq ==
          std::vector<Rat>{Rat(1, 4), Rat(1, 4), Rat(1, 4)});
    CHECK_FALSE(fourth.mu0.has_value());
    const ThreeTerm second = chebyshev_seed(ChebyshevKind::second, 2);
    CHECK(second.alpha_seq == std::vector<Rat>{Rat(0), Rat(0)});
    CHECK(second.beta_seq == std::vector<Rat>{Rat(1, 4), Rat(1, 4)});
}

TEST_CASE("r_sequence on the (2,1) chain") {
    const ThreeTerm aff = affine_weight(
        chebyshev_seed(ChebyshevKind::fourth, 4), Rat(1, 2), Rat(-1));
    const RSeq r = r_sequence(aff, Rat(4), 3);
    CHECK(r.values == std::vector<Rat>{Rat(3), Rat(5, 3), Rat(7, 5)});
}

TEST_CASE("r_sequence with all beta = 0 and the Fibonacci chain") {
    ThreeTerm t;
    t.alpha_seq = {Rat(1), Rat(4), Rat(9)};
    t.beta_seq = {Rat(0), Rat(0)};
    const RSeq r = r_sequence(t, Rat(10), 3);
    CHECK(r.values == std::vector<Rat>{Rat(9), Rat(6), Rat(1)});

    const ThreeTerm aff = affine_weight(
        chebyshev_seed(ChebyshevKind::fourth, 3), Rat(1, 2), Rat(-1));
    const RSeq rf = r_sequence(aff, Rat(-1), 2); // c = alpha^2/beta at (1,-1)
    CHECK(rf.values == std::vector<Rat>{Rat(-2), Rat(-5, 2)});
}

TEST_CASE("r_sequence signals a vanishing minor") {
    ThreeTerm t;
    t.alpha_seq = {Rat(4), Rat(0), Rat(0)};
    t.beta_seq = {Rat(1), Rat(1)};
    // r_0 = 0, so r_1 would divide by zero
    CHECK_THROWS_AS(r_sequence(t, Rat(4), 2), DivisionByZeroR);
    CHECK(r_sequence(t, Rat(4), 1).values == std::vector<Rat>{Rat(0)});
}

TEST_CASE("linear_multiplier on the (2,1) chain") {
    const Params p{Rat(2), Rat(1)};
    const ThreeTerm hat = chain_for(p, ChebyshevKind::fourth, 3,
                                    p.alpha * p.alpha - p.beta);
    REQUIRE(hat.mu0 == Rat(3));
    REQUIRE(hat.beta_seq.size() >= 2);
    CHECK(hat.beta_seq[0] == Rat(5, 9));   // beta_1 r_1 / r_0
    CHECK(hat.beta_seq[1] == Rat(21, 25)); // r_2 / r_1 = (7/5)/(5/3)
    CHECK(heilermann(hat, 1) == Rat(5));
    CHECK(heilermann(hat, 2) == Rat(7));
    // alpha~_n = alpha_{n+1} + r_{n+1} - r_n
    CHECK(hat.alpha_seq[0] == Rat(2) + Rat(5, 3) - Rat(3));
}

TEST_CASE("heilermann ratio law equals beta * r_{n+1}") {
    for (const Params& p : {Params{Rat(2), Rat(1)}, Params{Rat(1), Rat(-1)},
                            Params{Rat(3), Rat(2)}}) {
        const std::size_t levels = 5;
        const ThreeTerm chain = chain_for(p, ChebyshevKind::fourth,
                                          levels + 1,
                                          p.alpha * p.alpha - p.beta);
        const ThreeTerm aff = affine_weight(
            chebyshev_seed(ChebyshevKind::fourth, levels + 2), Rat(1, 2),
            Rat(-1));
        const RSeq r =
            r_sequence(aff, p.alpha * p.alpha / p.beta, levels + 2);
        for (std::size_t n = 0; n + 1 <= levels; ++n)
            REQUIRE(heilermann(chain, n + 1) / heilermann(chain, n) ==
                    p.beta * r.values[n + 1]);
    }
}

TEST_CASE("r-sequence restatement of the chain recurrence") {
    // r_n r_{n-1} = (alpha^2/beta - 2) r_{n-1} - 1 along the chain
    for (const Params& p : {Params{Rat(2), Rat(1)}, Params{Rat(1), Rat(-1)},
                            Params{Rat(1, 2), Rat(1, 3)}}) {
        const ThreeTerm aff = affine_weight(
            chebyshev_seed(ChebyshevKind::fourth, 8), Rat(1, 2), Rat(-1));
        const Rat c = p.alpha * p.alpha / p.beta;
        const RSeq r = r_sequence(aff, c, 8);
        for (std::size_t n = 1; n < 8; ++n)
            REQUIRE(r.values[n] * r.values[n - 1] ==
                    (c - Rat(2)) * r.values[n - 1] - Rat(1));
    }
}

TEST_CASE("pipeline values at the named points") {
    const Params p21{Rat(2), Rat(1)};
    CHECK(heilermann_pipeline(p21, PipelineVariant::plain, 0) == Rat(3));
    CHECK(heilermann_pipeline(p21, PipelineVariant::plain, 1) == Rat(5));
    CHECK(heilermann_pipeline(p21, PipelineVariant::plain, 2) == Rat(7));

    const Params fib{Rat(1), Rat(-1)};
    CHECK(heilermann_pipeline(fib, PipelineVariant::plain, 0) == Rat(2));
    CHECK(heilermann_pipeline(fib, PipelineVariant::plain, 1) == Rat(5));
    CHECK(heilermann_pipeline(fib, PipelineVariant::plain, 2) == Rat(13));

    // the shifted chain reproduces the shifted determinants
    for (std::size_t n = 0; n <= 2; ++n) {
        const Rat via = heilermann_pipeline(p21, PipelineVariant::shifted, n);
        REQUIRE(via == det_exact(hankel_matrix(linear_combo(p21, 1, 7), n)));
    }
    CHECK(heilermann_pipeline(p21, PipelineVariant::shifted, 0) == Rat(2));
    CHECK(heilermann_pipeline(p21, PipelineVariant::shifted, 1) == Rat(3));
    CHECK(heilermann_pipeline(p21, PipelineVariant::shifted, 2) == Rat(4));
}

TEST_CASE("pipeline error cases") {
    CHECK_THROWS_AS(
        heilermann_pipeline(Params{Rat(1), Rat(0)}, PipelineVariant::plain, 1),
        InvalidParams);
    // alpha^2 = beta makes r_0 vanish for the plain chain
    CHECK_THROWS_AS(
        heilermann_pipeline(Params{Rat(1), Rat(1)}, PipelineVariant::plain, 1),
        DivisionByZeroR);
    // alpha^2 = 2 beta: the shifted family's first minor is itself 0; the
    // value at n = 0 is still fine, deeper levels are undefined
    CHECK(heilermann_pipeline(Params{Rat(2), Rat(2)},
                              PipelineVariant::shifted, 0) == Rat(0));
    CHECK_THROWS_AS(heilermann_pipeline(Params{Rat(2), Rat(2)},
                                        PipelineVariant::shifted, 1),
                    DivisionByZeroR);
}

TEST_CASE("pipeline agrees with determinants across the grid") {
    for (const Params& p : oracle::small_grid())
        for (std::size_t n = 0; n <= 6; ++n) {
            try {
                const Rat plain =
                    heilermann_pipeline(p, PipelineVariant::plain, n);
                REQUIRE(plain == lucas_u(p, 2 * n + 3));
                REQUIRE(plain ==
                        det_exact(hankel_matrix(linear_combo(p, 0, 15), n)));
            } catch (const DivisionByZeroR&) {
            }
            try {
                const Rat shifted =
                    heilermann_pipeline(p, PipelineVariant::shifted, n);
                REQUIRE(shifted == hcheck_closed(p, n));
                REQUIRE(shifted ==
                        det_exact(hankel_matrix(linear_combo(p, 1, 15), n)));
            } catch (const DivisionByZeroR&) {
            }
        }
}

TEST_CASE("pipeline outputs satisfy the chain recurrence") {
    for (const Params& p : oracle::small_grid()) {
        std::vector<Rat> hs;
        try {
            for (std::size_t n = 0; n <= 6; ++n)
                hs.push_back(
                    heilermann_pipeline(p, PipelineVariant::plain, n));
        } catch (const DivisionByZeroR&) {
            continue; // chain undefined at this point
        }
        const Rat coeff = p.alpha * p.alpha - Rat(2) * p.beta;
        for (std::size_t n = 2; n <= 6; ++n)
            REQUIRE(hs[n] ==
                    coeff * hs[n - 1] - p.beta * p.beta * hs[n - 2]);
    }
}
