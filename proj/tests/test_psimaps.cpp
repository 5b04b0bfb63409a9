#include <doctest.h>

#include "helpers.hpp"
#include "qsh/psimaps.hpp"

using namespace qsh;
using namespace qsh::testing;

TEST_CASE("compositions") {
    CHECK(compositions(1) == std::vector<Composition>{{1}});
    CHECK(compositions(3) == std::vector<Composition>{{1, 1, 1}, {1, 2}, {2, 1}, {3}});
    CHECK(compositions(6).size() == 32);
    CHECK_THROWS(compositions(0));
}

TEST_CASE("contract") {
    const auto mzv = mzv_alpha();
    CHECK(contract(mzv, {2, 1}, mzv_word({1, 1, 1})) == mzv_word({2, 1}));
    CHECK(contract(mzv, {1, 1, 1}, mzv_word({3, 1, 2})) == mzv_word({3, 1, 2}));
    CHECK(contract(mzv, {3}, mzv_word({1, 2, 3})) == mzv_word({6}));
    CHECK_THROWS(contract(mzv, {2, 2}, mzv_word({1, 1, 1})));
}

TEST_CASE("psi with named series") {
    const auto mzv = mzv_alpha();
    const LinComb w = lc(mzv, mzv_word({3, 1, 2}));
    CHECK(psi(SeriesPrefix::identity(3), w) == w);

    // f = t^2 keeps only the all-2 composition
    SeriesPrefix t2 = SeriesPrefix::from_coeffs({Rat(0), Rat(1)});
    CHECK(psi(t2, lc(mzv, mzv_word({1, 1}))) == lc(mzv, mzv_word({2})));

    CHECK(psi(SeriesPrefix::neg(2), lc(mzv, mzv_word({1, 2}))) == lc(mzv, mzv_word({1, 2})));
    CHECK(psi(SeriesPrefix::neg(1), lc(mzv, mzv_word({1}))) ==
          lc(mzv, mzv_word({1})).scaled(Poly(-1)));

    CHECK_THROWS_AS(psi(SeriesPrefix::identity(2), w), std::invalid_argument);
}

TEST_CASE("sigma_r worked examples") {
    const auto mzv = mzv_alpha();
    const Poly r = Poly::indet();

    LinComb expect = lc(mzv, mzv_word({1, 1})) + lc(mzv, mzv_word({2})).scaled(r);
    CHECK(sigma_r_map(lc(mzv, mzv_word({1, 1}))) == expect);

    LinComb expect2 = lc(mzv, mzv_word({3, 1, 1})) +
                      (lc(mzv, mzv_word({4, 1})) + lc(mzv, mzv_word({3, 2}))).scaled(r) +
                      lc(mzv, mzv_word({5})).scaled(r * r);
    CHECK(sigma_r_map(lc(mzv, mzv_word({3, 1, 1}))) == expect2);

    CHECK(sigma_map(lc(mzv, mzv_word({1, 1}))) ==
          lc(mzv, mzv_word({1, 1})) + lc(mzv, mzv_word({2})));
}

TEST_CASE("T and R maps") {
    const auto mzv = mzv_alpha();
    CHECK(t_map(lc(mzv, mzv_word({1}))) == lc(mzv, mzv_word({1})).scaled(Poly(-1)));
    CHECK(r_map(lc(mzv, mzv_word({1, 2, 3}))) == lc(mzv, mzv_word({3, 2, 1})));
    CHECK(t_map(r_map(lc(mzv, mzv_word({1, 2})))) == lc(mzv, mzv_word({2, 1})));
}

TEST_CASE("exp and log maps") {
    const auto mzv = mzv_alpha();
    CHECK(exp_map(lc(mzv, mzv_word({1, 1}))) ==
          lc(mzv, mzv_word({1, 1})) + lc(mzv, mzv_word({2})).scaled(Poly(Rat(1, 2))));

    std::mt19937 rng(3);
    for (int rep = 0; rep < 10; ++rep) {
        const LinComb w = lc(mzv_alpha(), random_word_up_to(rng, mzv_alpha(), 5));
        CHECK(log_map(exp_map(w)) == w);
    }

    // exp is an isomorphism (shuffle) -> (quasi-shuffle)
    for (int rep = 0; rep < 10; ++rep) {
        const LinComb u = lc(mzv_alpha(), random_word_up_to(rng, mzv_alpha(), 3));
        const LinComb v = lc(mzv_alpha(), random_word_up_to(rng, mzv_alpha(), 3));
        CHECK(exp_map(shuffle_product(u, v)) == qsh_product(exp_map(u), exp_map(v)));
    }
}

TEST_CASE("series composition examples") {
    // t/(1-t) ∘ t/(1+t) = t
    auto composed = series_compose(SeriesPrefix::sigma(6), SeriesPrefix::sigma_inv(6));
    CHECK(composed.c == SeriesPrefix::identity(6).c);

    // log(1-t) ∘ (e^{-t}-1): coefficients of t/(1-t)
    SeriesPrefix log_neg = SeriesPrefix::from_polys([] {
        std::vector<Poly> c;
        for (int i = 1; i <= 6; ++i) c.push_back(Poly(Rat(-1, i)));
        return c;
    }());
    SeriesPrefix exp_neg = SeriesPrefix::from_polys([] {
        std::vector<Poly> c;
        Rat f(1);
        for (int i = 1; i <= 6; ++i) {
            f /= Rat(i);
            c.push_back(Poly(i % 2 == 0 ? f : -f));
        }
        return c;
    }());
    CHECK(series_compose(exp_neg, log_neg).c == SeriesPrefix::sigma(6).c);

    CHECK(series_compose(SeriesPrefix::identity(4), SeriesPrefix::identity(4)).c ==
          SeriesPrefix::identity(4).c);
}

TEST_CASE("psi composition theorem on random series") {
    std::mt19937 rng(17);
    std::uniform_int_distribution<long> d(-4, 4);
    auto rnd_series = [&] {
        std::vector<Rat> c;
        for (int i = 0; i < 5; ++i) {
            long den = 0;
            while (den == 0) den = d(rng);
            c.push_back(Rat(d(rng), den));
        }
        return SeriesPrefix::from_coeffs(std::move(c));
    };
    for (const auto& alpha : {mzv_alpha(), euler_alpha(2), free_alpha()}) {
        for (int rep = 0; rep < 35; ++rep) {
            const SeriesPrefix f = rnd_series(), g = rnd_series();
            const LinComb w = lc(alpha, random_word_up_to(rng, alpha, 5));
            CHECK(psi(f, psi(g, w)) == psi(series_compose(f, g), w));
        }
    }
}

TEST_CASE("sigma identities") {
    std::mt19937 rng(29);
    const std::vector<Rat> samples{Rat(1), Rat(-1), Rat(1, 2), Rat(-1, 2), Rat(2)};
    for (const auto& alpha : {mzv_alpha(), euler_alpha(2), free_alpha()}) {
        for (int rep = 0; rep < 12; ++rep) {
            const LinComb w = lc(alpha, random_word_up_to(rng, alpha, 4));

            // sigma^r sigma^s = sigma^{r+s} at rational sample points
            for (const Rat& rv : samples)
                for (const Rat& sv : samples)
                    CHECK(sigma_pow_map(sigma_pow_map(w, Poly(sv)), Poly(rv)) ==
                          sigma_pow_map(w, Poly(rv + sv)));

            // T sigma T = sigma^{-1}; involutions
            CHECK(t_map(sigma_map(t_map(w))) == sigma_inv_map(w));
            CHECK(sigma_map(t_map(sigma_map(t_map(w)))) == w);
            CHECK(t_map(sigma_map(t_map(sigma_map(w)))) == w);

            // R commutes with psi
            const SeriesPrefix f = SeriesPrefix::exp(4);
            CHECK(r_map(psi(f, w)) == psi(f, r_map(w)));
        }

        // sigma = exp T log T, words up to length 5
        for (int rep = 0; rep < 10; ++rep) {
            const LinComb w = lc(alpha, random_word_up_to(rng, alpha, 5));
            CHECK(exp_map(t_map(log_map(t_map(w)))) == sigma_map(w));
        }

        // sigma(aw) = a sigma(w) + a◇sigma(w)
        for (int rep = 0; rep < 10; ++rep) {
            const Letter a = random_letter(rng, alpha);
            const LinComb w = lc(alpha, random_word_up_to(rng, alpha, 3, 1));
            const LinComb sw = sigma_map(w);
            CHECK(sigma_map(prepend(a, w)) == prepend(a, sw) + diamond_extend(a, sw));
        }
    }
}

TEST_CASE("interpolated product agrees with its conjugation definition") {
    std::mt19937 rng(31);
    for (const auto& alpha : {mzv_alpha(), euler_alpha(2), free_alpha()}) {
        for (int rep = 0; rep < 15; ++rep) {
            const LinComb u = lc(alpha, random_word_up_to(rng, alpha, 3));
            const LinComb v = lc(alpha, random_word_up_to(rng, alpha, 2));
            const Poly r = Poly::indet();
            const LinComb via_def =
                sigma_pow_map(qsh_product(sigma_pow_map(u, r), sigma_pow_map(v, r)), -r);
            CHECK(interp_product(u, v) == via_def);
        }
    }
}

TEST_CASE("T is an isomorphism onto the 1-r interpolation") {
    // T(u ⋄_r v) = T(u) ⋄_{1-r} T(v)
    std::mt19937 rng(43);
    const Poly one_minus_r = Poly(1) - Poly::indet();
    for (const auto& alpha : {mzv_alpha(), free_alpha()}) {
        for (int rep = 0; rep < 12; ++rep) {
            const LinComb u = lc(alpha, random_word_up_to(rng, alpha, 3));
            const LinComb v = lc(alpha, random_word_up_to(rng, alpha, 3));
            const LinComb lhs = t_map(interp_product(u, v));
            const LinComb conj = interp_product(t_map(u), t_map(v));
            LinComb rhs(alpha);
            for (const auto& [w, c] : conj.terms()) rhs.add_term(w, c.compose(one_minus_r));
            CHECK(lhs == rhs);
        }
    }
}

TEST_CASE("geometric series identity") {
    const auto mzv = mzv_alpha();
    const int N = 3;
    std::vector<SeriesPrefix> series{SeriesPrefix::sigma(2 * N), SeriesPrefix::exp(2 * N),
                                     SeriesPrefix::log(2 * N)};
    for (const auto& z : {lc(mzv, mzv_word({1})), lc(mzv, mzv_word({2}))})
        for (const auto& f : series) CHECK(geom_lhs(f, z, N) == geom_rhs(f, z, N));

    // f = t: both sides are the plain geometric series
    const LinComb z = lc(mzv, mzv_word({2}));
    auto both = geom_lhs(SeriesPrefix::identity(N), z, N);
    CHECK(both.coeff[2] == lc(mzv, mzv_word({2, 2})));
    CHECK(both == geom_rhs(SeriesPrefix::identity(N), z, N));

    CHECK_THROWS(geom_lhs(SeriesPrefix::identity(10), lc(mzv, mzv_word({1, 2})), 2));
}

TEST_CASE("interpolated geometric corollary") {
    // sigma^r(1/(1-λz)) * 1/(1+rλz) = 1/(1-(1-r)λz) through λ^3, symbolic r.
    // The second factor carries (-r)^n: applying the zeta character turns it
    // into Z(-rλ), matching the repeated-value ratio Z((1-r)λ)/Z(-rλ).
    const auto mzv = mzv_alpha();
    const int N = 3;
    const Poly r = Poly::indet();

    for (const auto& z : {lc(mzv, mzv_word({1})), lc(mzv, mzv_word({2}))}) {
        TruncatedGF lhs_a(mzv, N), lhs_b(mzv, N), rhs(mzv, N);
        LinComb zn = LinComb::unit(mzv);
        for (int n = 0; n <= N; ++n) {
            lhs_a.coeff[n] = sigma_r_map(zn);
            lhs_b.coeff[n] = zn.scaled((-r).pow(n));
            rhs.coeff[n] = zn.scaled((Poly(1) - r).pow(n));
            zn = concat_product(zn, z);
        }
        CHECK(gf_mul(lhs_a, lhs_b, [](const LinComb& a, const LinComb& b) {
                  return qsh_product(a, b);
              }) == rhs);
    }
}
