#include <doctest.h>

#include "helpers.hpp"
#include "qsh/render.hpp"

using namespace qsh;
using namespace qsh::testing;

TEST_CASE("alphabet parsing") {
    CHECK(parse_alphabet("mzv") == Alphabet::mzv());
    CHECK(parse_alphabet("euler:2") == Alphabet::euler(2));
    CHECK(parse_alphabet("free:g1,g2") == Alphabet::free_multiset({"g1", "g2"}));
    CHECK_THROWS_AS(parse_alphabet("blah"), ParseError);
    CHECK_THROWS_AS(parse_alphabet("euler:x"), ParseError);
}

TEST_CASE("command-line word grammar") {
    const auto mzv = mzv_alpha();
    CHECK(parse_word("3,1,2", mzv) == mzv_word({3, 1, 2}));
    CHECK(parse_word("e", mzv) == Word{});
    CHECK(parse_word("", mzv) == Word{});
    CHECK_THROWS_AS(parse_word("0,1", mzv), ParseError);
    CHECK_THROWS_AS(parse_word("2,,3", mzv), ParseError);
    CHECK_THROWS_AS(parse_word("x", mzv), ParseError);

    const auto e2 = euler_alpha(2);
    CHECK(parse_word("-1,2,-3", e2) ==
          Word{euler_letter(1, 1, 2), euler_letter(2, 0, 2), euler_letter(3, 1, 2)});
    CHECK(parse_word("1:1,2:0", e2) == Word{euler_letter(1, 1, 2), euler_letter(2, 0, 2)});
    CHECK_THROWS_AS(parse_word("2:5", e2), ParseError);
    CHECK_THROWS_AS(parse_word("-2", euler_alpha(3)), ParseError);

    const auto fr = free_alpha();
    CHECK(parse_word("[g1][g1 g2]", fr) == Word{free_letter({0}), free_letter({0, 1})});
    CHECK_THROWS_AS(parse_word("[gX]", fr), ParseError);
    CHECK_THROWS_AS(parse_word("[g1", fr), ParseError);
}

TEST_CASE("index parsing and rendering") {
    CHECK(parse_index("3,1,2") == make_index({3, 1, 2}));
    CHECK(parse_index("-1,2,-3", 2) == make_signed_index({-1, 2, -3}));
    CHECK(render_index_text(make_signed_index({-1, 2, -3}), 2) == "-1,2,-3");
    CHECK(render_index_text(make_index({3, 1, 2})) == "3,1,2");
}

TEST_CASE("worked rendering examples") {
    const auto mzv = mzv_alpha();
    const LinComb x = qsh_product(lc(mzv, mzv_word({1})), lc(mzv, mzv_word({2})));
    CHECK(render_lincomb_text(x) == "z1z2 + z2z1 + z3");
    CHECK(render_lincomb_text(LinComb::zero(mzv)) == "0");
    CHECK(render_lincomb_text(LinComb::unit(mzv)) == "1");
    const LinComb star = star_product(lc(mzv, mzv_word({1})), lc(mzv, mzv_word({1})));
    CHECK(render_lincomb_text(star) == "2z1z1 - z2");
    const LinComb interp = interp_product(lc(mzv, mzv_word({1})), lc(mzv, mzv_word({2})));
    CHECK(render_lincomb_text(interp) == "z1z2 + z2z1 + (1 - 2r)z3");
}

TEST_CASE("text round-trip on random linear combinations") {
    std::mt19937 rng(97);
    std::uniform_int_distribution<long> d(-5, 5);
    for (const auto& alpha : {mzv_alpha(), euler_alpha(2), euler_alpha(3), free_alpha()}) {
        for (int rep = 0; rep < 60; ++rep) {
            LinComb x(alpha);
            const int terms = static_cast<int>(rng() % 5);
            for (int t = 0; t < terms; ++t) {
                std::vector<Rat> coeffs;
                const int deg = static_cast<int>(rng() % 3);
                for (int i = 0; i <= deg; ++i) {
                    long den = 0;
                    while (den == 0) den = d(rng);
                    coeffs.push_back(Rat(d(rng), den));
                }
                x.add_term(random_word_up_to(rng, alpha, 3), Poly::from_coeffs(coeffs));
            }
            CHECK(parse_lincomb_text(render_lincomb_text(x), alpha) == x);
        }
    }
}

TEST_CASE("json shapes") {
    const auto mzv = mzv_alpha();
    const LinComb interp = interp_product(lc(mzv, mzv_word({1})), lc(mzv, mzv_word({2})));
    const auto j = lincomb_json(interp);
    CHECK(j["alphabet"] == "mzv");
    CHECK(j["terms"].size() == 3);
    CHECK(j["terms"][0]["word"] == nlohmann::json::array({1, 2}));
    const auto pj = poly_json(Poly(1) - Poly(2) * Poly::indet());
    CHECK(pj["var"] == "r");
    CHECK(pj["coeffs"] == nlohmann::json::array({"1", "-2"}));

    const auto empty = lincomb_json(LinComb::zero(mzv));
    CHECK(empty["terms"].empty());

    EvalResult v{{0.5, 0.0}, 1e-7, 1000};
    const auto ej = eval_json(v);
    CHECK(ej["value"] == 0.5);
    CHECK(ej["N"] == 1000);
}

TEST_CASE("kappa polynomial text") {
    const Poly p = airy_zeta_poly(4);
    CHECK(p.str() == "-1/3kappa + kappa^4");
    CHECK(poly_json(p)["var"] == "kappa");
}
