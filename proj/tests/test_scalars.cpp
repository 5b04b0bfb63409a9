#include <doctest.h>

#include <random>

#include "qsh/poly.hpp"
#include "qsh/rat.hpp"

using namespace qsh;

TEST_CASE("rational arithmetic examples") {
    CHECK(Rat(1, 2) + Rat(1, 3) == Rat(5, 6));
    CHECK(Rat(2, 4) * Rat(0) == Rat(0));
    CHECK(Rat(2, 4) == Rat(1, 2));
    CHECK(Rat(1) / Rat(3) == Rat(1, 3));
    CHECK_THROWS_AS(Rat(1) / Rat(0), std::domain_error);
    CHECK_THROWS_AS(Rat(1, 0), std::domain_error);
}

TEST_CASE("rational canonical form and parsing") {
    CHECK(Rat(-4, -6) == Rat(2, 3));
    CHECK(Rat(4, -6).str() == "-2/3");
    CHECK(Rat(0, 7).str() == "0");
    CHECK(Rat::parse("5/6") == Rat(5, 6));
    CHECK(Rat::parse("-7") == Rat(-7));
    CHECK(Rat::parse("-3/9") == Rat(-1, 3));
    CHECK_THROWS(Rat::parse("x"));
    CHECK_THROWS(Rat::parse("1/0"));
}

TEST_CASE("rational ring axioms on random samples") {
    std::mt19937 rng(7);
    std::uniform_int_distribution<long> d(-20, 20);
    auto rnd = [&] {
        long den = 0;
        while (den == 0) den = d(rng);
        return Rat(d(rng), den);
    };
    for (int i = 0; i < 200; ++i) {
        const Rat a = rnd(), b = rnd(), c = rnd();
        CHECK((a + b) + c == a + (b + c));
        CHECK((a * b) * c == a * (b * c));
        CHECK(a * (b + c) == a * b + a * c);
        CHECK(a + Rat(0) == a);
        CHECK(a * Rat(1) == a);
        CHECK(a - a == Rat(0));
    }
}

static Poly one_minus_2r() { return Poly(1) - Poly(2) * Poly::indet(); }

TEST_CASE("polynomial arithmetic examples") {
    const Poly p = one_minus_2r();
    CHECK(p * p == Poly::from_coeffs({Rat(1), Rat(-4), Rat(4)}));
    CHECK(Poly::indet() + Poly(0) == Poly::indet());
    CHECK((Poly(1) - Poly::indet()) - (-Poly::indet()) == Poly(1));
}

TEST_CASE("polynomial evaluation examples") {
    CHECK(one_minus_2r().eval(Rat(1, 2)) == Rat(0));
    CHECK(one_minus_2r().eval(Rat(0)) == Rat(1));
    const Poly r = Poly::indet();
    const Poly p3 = (Poly(1) - r).pow(3) - (-r).pow(3);
    CHECK(p3.eval(Rat(1, 2)) == Rat(1, 4));
}

TEST_CASE("mixed indeterminates rejected") {
    const Poly r = Poly::indet(Indet::r);
    const Poly k = Poly::indet(Indet::kappa);
    CHECK_THROWS_AS(r + k, std::invalid_argument);
    CHECK_THROWS_AS(r * k, std::invalid_argument);
}

TEST_CASE("polynomial canonical form") {
    CHECK(Poly::from_coeffs({Rat(1), Rat(0), Rat(0)}).degree() == 0);
    CHECK(Poly(0).is_zero());
    CHECK(Poly(0).degree() == -1);
    CHECK(Poly::from_coeffs({Rat(0), Rat(0)}) == Poly(0));
}

TEST_CASE("evaluation is a ring homomorphism on random samples") {
    std::mt19937 rng(11);
    std::uniform_int_distribution<long> d(-6, 6);
    auto rnd_poly = [&] {
        std::vector<Rat> c;
        const int deg = static_cast<int>(rng() % 4);
        for (int i = 0; i <= deg; ++i) c.push_back(Rat(d(rng)));
        return Poly::from_coeffs(std::move(c));
    };
    for (int i = 0; i < 100; ++i) {
        const Poly p = rnd_poly(), q = rnd_poly();
        long den = 0;
        while (den == 0) den = d(rng);
        const Rat x(d(rng), den);
        CHECK((p * q).eval(x) == p.eval(x) * q.eval(x));
        CHECK((p + q).eval(x) == p.eval(x) + q.eval(x));
    }
}

TEST_CASE("polynomial composition") {
    const Poly r = Poly::indet();
    const Poly p = (Poly(1) - Poly(2) * r) * (Poly(1) - Poly(2) * r) + r;
    const Poly swapped = p.compose(Poly(1) - r);  // r -> 1-r
    for (long num = -3; num <= 3; ++num) {
        const Rat x(num, 2);
        CHECK(swapped.eval(x) == p.eval(Rat(1) - x));
    }
}

TEST_CASE("polynomial text form") {
    CHECK(one_minus_2r().str() == "1 - 2r");
    CHECK((one_minus_2r() * one_minus_2r()).str() == "1 - 4r + 4r^2");
    CHECK(Poly(0).str() == "0");
    CHECK((-Poly::indet(Indet::kappa)).str() == "-kappa");
}
