#include <doctest.h>

#include <random>

#include "helpers.hpp"
#include "qsh/mzv.hpp"

using namespace qsh;
using namespace qsh::testing;

TEST_CASE("x-y encoding") {
    CHECK(to_xy(mzv_word({3, 1, 2})) == "xxyyxy");
    CHECK(to_xy(mzv_word({2})) == "xy");
    CHECK(from_xy("xxyyxy") == mzv_word({3, 1, 2}));
    CHECK_THROWS(from_xy("xyx"));
    CHECK_THROWS(from_xy("xza"));

    std::mt19937 rng(71);
    for (int rep = 0; rep < 30; ++rep) {
        const Word w = random_word_up_to(rng, mzv_alpha(), 5);
        CHECK(from_xy(to_xy(w)) == w);
    }
}

TEST_CASE("duality") {
    CHECK(tau(mzv_word({3, 1, 2})) == mzv_word({2, 3, 1}));
    CHECK(tau(mzv_word({2})) == mzv_word({2}));
    CHECK(tau(mzv_word({3})) == mzv_word({2, 1}));
    CHECK_THROWS(tau(mzv_word({1, 2})));

    // involution on admissible words
    std::mt19937 rng(73);
    for (int rep = 0; rep < 50; ++rep) {
        Word w = random_word_up_to(rng, mzv_alpha(), 4);
        if (!w.empty() && w.front().weight == 1) w.front() = mzv_letter(2);
        if (to_xy(w).size() > 10) continue;
        CHECK(tau(tau(w)) == w);
    }
}

TEST_CASE("cyclic sum") {
    const auto mzv = mzv_alpha();
    CHECK(cyclic_sum(mzv, mzv_word({2})) == lc(mzv, mzv_word({3})));
    CHECK(cyclic_sum(mzv, mzv_word({2, 1})) ==
          lc(mzv, mzv_word({3, 1})) + lc(mzv, mzv_word({2, 2})));
    CHECK(cyclic_sum(mzv, mzv_word({1, 1})) == lc(mzv, mzv_word({2, 1})).scaled(Poly(2)));
    CHECK_THROWS(cyclic_sum(mzv, Word{}));
}

TEST_CASE("two-one words") {
    auto [left1, right1] = two_one_pair({1});
    CHECK(left1 == mzv_word({2, 1}));
    CHECK(right1 == mzv_word({3}));

    auto [left2, right2] = two_one_pair({2});
    CHECK(left2 == mzv_word({2, 2, 1}));
    CHECK(right2 == mzv_word({5}));

    auto [left3, right3] = two_one_pair({1, 0});
    CHECK(left3 == mzv_word({2, 1, 1}));
    CHECK(right3 == mzv_word({3, 1}));

    CHECK_THROWS(two_one_pair({0, 1}));
    CHECK_THROWS(two_one_pair({}));

    std::mt19937 rng(79);
    for (int rep = 0; rep < 30; ++rep) {
        std::vector<long> j{1 + static_cast<long>(rng() % 3)};
        const int l = 1 + static_cast<int>(rng() % 3);
        for (int i = 1; i < l; ++i) j.push_back(static_cast<long>(rng() % 3));
        auto [left, right] = two_one_pair(j);
        long jsum = 0;
        for (long v : j) jsum += v;
        CHECK(admissible(word_to_index(left)));
        CHECK(word_weight(left) == 2 * jsum + l);
        CHECK(word_weight(right) == word_weight(left));
    }
}

TEST_CASE("sum theorem index enumeration") {
    CHECK(sum_theorem_indices(3, 2) == std::vector<Index>{make_index({2, 1})});

    const auto weight6 = sum_theorem_indices(6, 3);
    const std::vector<Index> expect{make_index({4, 1, 1}), make_index({3, 2, 1}),
                                    make_index({3, 1, 2}), make_index({2, 3, 1}),
                                    make_index({2, 2, 2}), make_index({2, 1, 3})};
    CHECK(weight6.size() == 6);
    for (const auto& idx : expect)
        CHECK(std::find(weight6.begin(), weight6.end(), idx) != weight6.end());

    for (int n = 2; n <= 10; ++n) {
        size_t total = 0;
        for (int l = 1; l <= n - 1; ++l) {
            const auto indices = sum_theorem_indices(n, l);
            CHECK(indices.size() ==
                  static_cast<size_t>(Rat::binomial(n - 2, l - 1).to_double()));
            total += indices.size();
        }
        CHECK(total == (1u << (n - 2)));
    }
    CHECK_THROWS(sum_theorem_indices(3, 3));
}

TEST_CASE("interpolated sum theorem coefficient") {
    CHECK(interp_sum_rhs(3, 2) == Poly::from_coeffs({Rat(1), Rat(1)}));
    for (int n = 2; n <= 10; ++n)
        for (int l = 1; l <= n - 1; ++l) {
            const Poly rhs = interp_sum_rhs(n, l);
            CHECK(rhs.eval(Rat(0)) == Rat(1));
            CHECK(rhs.eval(Rat(1)) == Rat::binomial(n - 1, l - 1));
        }
}

TEST_CASE("totally odd sum theorem combinatorics") {
    const auto odd53 = totally_odd_indices(5, 3);
    CHECK(odd53 == std::vector<Index>{make_index({3, 1, 1})});
    CHECK(totally_odd_rhs(5, 3) == Rat(1, 2));

    for (int n = 3; n <= 12; ++n)
        for (int l = 1; l < n; ++l) {
            if ((n - l) % 2 != 0) continue;
            CHECK(totally_odd_rhs(n, l) == totally_odd_rhs_alt(n, l));
            CHECK(totally_odd_indices(n, l).size() ==
                  static_cast<size_t>(Rat::binomial((n + l) / 2 - 2, l - 1).to_double()));
        }
    CHECK_THROWS(totally_odd_indices(6, 3));
}

TEST_CASE("signed index addition") {
    CHECK(signed_index_add(-1, 2) == -3);
    CHECK(signed_index_add(-1, -2) == 3);
    CHECK(signed_index_add(2, 3) == 5);
    CHECK(signed_index_add(1, -2) == -3);
    CHECK_THROWS(signed_index_add(0, 1));
}

TEST_CASE("index words and admissibility") {
    const auto e2 = euler_alpha(2);
    const Index idx = make_signed_index({-1, 2, -3});
    const Word w = index_to_word(e2, idx);
    CHECK(w == Word{euler_letter(1, 1, 2), euler_letter(2, 0, 2), euler_letter(3, 1, 2)});
    CHECK(word_to_index(w) == idx);
    CHECK(admissible(idx));
    CHECK(!admissible(make_index({1, 2})));
    CHECK(admissible(make_index({2, 1})));

    // signed addition agrees with the euler diamond
    std::mt19937 rng(83);
    for (int rep = 0; rep < 40; ++rep) {
        const long a = (rng() % 2 ? 1 : -1) * (1 + static_cast<long>(rng() % 4));
        const long b = (rng() % 2 ? 1 : -1) * (1 + static_cast<long>(rng() % 4));
        const long c = signed_index_add(a, b);
        const Letter la = euler_letter(std::abs(a), a < 0 ? 1 : 0, 2);
        const Letter lb = euler_letter(std::abs(b), b < 0 ? 1 : 0, 2);
        const Letter lc_ = euler_letter(std::abs(c), c < 0 ? 1 : 0, 2);
        CHECK(diamond(e2, la, lb) == lc_);
    }
}
