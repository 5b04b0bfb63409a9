#include <doctest.h>

#include "helpers.hpp"
#include "qsh/symsum.hpp"

using namespace qsh;
using namespace qsh::testing;

TEST_CASE("set partition enumeration") {
    CHECK(set_partitions(1).size() == 1);
    CHECK(set_partitions(3).size() == 5);
    CHECK(set_partitions(4).size() == 15);
    CHECK(set_partitions(6).size() == 203);
    CHECK_THROWS(set_partitions(0));
    CHECK_THROWS(set_partitions(11));

    for (const auto& p : set_partitions(4)) {
        // blocks ordered by smallest element, disjoint, covering
        std::vector<int> seen;
        int prev_min = 0;
        for (const auto& b : p.blocks) {
            CHECK(!b.empty());
            CHECK(b.front() > prev_min);
            prev_min = b.front();
            seen.insert(seen.end(), b.begin(), b.end());
        }
        std::sort(seen.begin(), seen.end());
        CHECK(seen == std::vector<int>{1, 2, 3, 4});
    }
}

TEST_CASE("integer partition data") {
    CHECK(int_partitions(6).size() == 11);
    CHECK(int_partitions(8).size() == 22);

    IntPartition two_two{{2, 2}};
    CHECK(two_two.z() == Rat(8));       // 2! * 2^2
    CHECK(two_two.eps() == Rat(1));     // (-1)^{4-2}
    IntPartition three_one{{3, 1}};
    CHECK(three_one.z() == Rat(3));
    CHECK(three_one.eps() == Rat(1));
    IntPartition ones{{1, 1, 1}};
    CHECK(ones.z() == Rat(6));
    CHECK(ones.eps() == Rat(1));
    IntPartition single{{4}};
    CHECK(single.eps() == Rat(-1));
    CHECK(single.z() == Rat(4));
}

TEST_CASE("p_a worked values") {
    CHECK(p_a(1) == Poly(1));
    CHECK(p_a(2) == Poly(1) - Poly(2) * Poly::indet());
    CHECK(p_a(3).eval(Rat(1, 2)) == Rat(1, 4));
    CHECK(p_a(2).eval(Rat(1, 2)) == Rat(0));
    CHECK(p_a(4).eval(Rat(1, 2)) == Rat(0));
    CHECK(p_a(5).eval(Rat(1, 2)) == Rat(1, 16));
    CHECK(p_a(3).eval(Rat(0)) == Rat(1));
    CHECK(p_a(3).eval(Rat(1)) == Rat(1));
    CHECK(p_a(4).eval(Rat(1)) == Rat(-1));
    CHECK_THROWS(p_a(0));

    // recursion used in the inductive proof: (1-2r)p_{k-1} - (r^2-r)p_{k-2} = p_k
    const Poly r = Poly::indet();
    for (int k = 3; k <= 9; ++k)
        CHECK((Poly(1) - Poly(2) * r) * p_a(k - 1) - (r * r - r) * p_a(k - 2) == p_a(k));
}

TEST_CASE("c_r coefficient") {
    CHECK(c_r_coeff(SetPartition{{{1}, {2}}}) == Poly(1));
    CHECK(c_r_coeff(SetPartition{{{1, 2}}}) == -(Poly(1) - Poly(2) * Poly::indet()));
    CHECK(c_r_coeff(SetPartition{{{1, 2, 3}}}).eval(Rat(0)) == Rat(2));
    CHECK(c_r_coeff(SetPartition{{{1, 2, 3}}}).eval(Rat(1)) == Rat(2));
    CHECK(c_r_coeff(SetPartition{{{1, 2}, {3, 4}}}).eval(Rat(0)) == Rat(1));
}

TEST_CASE("symmetric sum theorem, exact symbolic") {
    const auto fr = free_alpha();
    for (int n = 1; n <= 5; ++n) {
        std::vector<Letter> letters;
        for (int i = 0; i < n; ++i) letters.push_back(free_letter({i % 3}));
        auto [lhs, rhs] = symmetric_sum_sides(fr, letters);
        CHECK(lhs == rhs);
    }

    const auto mzv = mzv_alpha();
    // repeated weights included
    auto [lhs1, rhs1] = symmetric_sum_sides(mzv, {mzv_letter(2), mzv_letter(2), mzv_letter(3)});
    CHECK(lhs1 == rhs1);
    auto [lhs2, rhs2] = symmetric_sum_sides(
        mzv, {mzv_letter(1), mzv_letter(2), mzv_letter(1), mzv_letter(3)});
    CHECK(lhs2 == rhs2);

    const auto e2 = euler_alpha(2);
    auto [lhs3, rhs3] = symmetric_sum_sides(
        e2, {euler_letter(1, 1, 2), euler_letter(2, 0, 2), euler_letter(3, 1, 2)});
    CHECK(lhs3 == rhs3);
}

TEST_CASE("symmetric sum n=2 closed form") {
    // LHS u1u2+u2u1, RHS u1⋄u2 - (1-2r) u1◇u2
    const auto mzv = mzv_alpha();
    auto [lhs, rhs] = symmetric_sum_sides(mzv, {mzv_letter(2), mzv_letter(3)});
    LinComb expect = interp_product(lc(mzv, mzv_word({2})), lc(mzv, mzv_word({3}))) -
                     lc(mzv, mzv_word({5})).scaled(Poly(1) - Poly(2) * Poly::indet());
    CHECK(lhs == expect);
    CHECK(rhs == expect);
}

TEST_CASE("repeated power corollary, exact symbolic") {
    const auto mzv = mzv_alpha();
    for (int n = 1; n <= 6; ++n) {
        auto [lhs, rhs] = repeated_power_sides(mzv, mzv_letter(2), n);
        CHECK(lhs == rhs);
    }
    const auto fr = free_alpha();
    for (int n = 1; n <= 6; ++n) {
        auto [lhs, rhs] = repeated_power_sides(fr, free_letter({0}), n);
        CHECK(lhs == rhs);
    }
    const auto e2 = euler_alpha(2);
    for (int n = 1; n <= 5; ++n) {
        auto [lhs, rhs] = repeated_power_sides(e2, euler_letter(1, 1, 2), n);
        CHECK(lhs == rhs);
    }
}

TEST_CASE("repeated power small cases") {
    const auto mzv = mzv_alpha();
    // n=1: u = p_1(r) u
    auto [lhs1, rhs1] = repeated_power_sides(mzv, mzv_letter(3), 1);
    CHECK(rhs1 == lc(mzv, mzv_word({3})));

    // n=2: u² = (u⋄u)/2 - ((1-2r)/2) u^{◇2}
    auto [lhs2, rhs2] = repeated_power_sides(mzv, mzv_letter(3), 2);
    LinComb expect = interp_product(lc(mzv, mzv_word({3})), lc(mzv, mzv_word({3})))
                         .scaled(Poly(Rat(1, 2)));
    expect -= lc(mzv, mzv_word({6})).scaled((Poly(1) - Poly(2) * Poly::indet()) * Poly(Rat(1, 2)));
    CHECK(rhs2 == expect);
    CHECK(lhs2 == lc(mzv, mzv_word({3, 3})));

    // r=1/2 drops even partitions via p_2(1/2)=0: rhs at r=1/2 has no diamond-square term
    const LinComb rhs_half = rhs2.specialize_r(Rat(1, 2));
    CHECK(rhs_half.coeff(mzv_word({6})) == Poly(0));
}

TEST_CASE("repeated-power side is the all-equal symmetric sum divided by n!") {
    const auto mzv = mzv_alpha();
    const auto fr = free_alpha();
    for (int n = 2; n <= 5; ++n) {
        for (const auto& [alpha, letter] :
             std::vector<std::pair<Alphabet, Letter>>{{mzv, mzv_letter(2)},
                                                      {fr, free_letter({1})}}) {
            const std::vector<Letter> equal(static_cast<size_t>(n), letter);
            auto [sym_lhs, sym_rhs] = symmetric_sum_sides(alpha, equal);
            auto [rep_lhs, rep_rhs] = repeated_power_sides(alpha, letter, n);
            CHECK(sym_rhs == rep_rhs.scaled(Poly(Rat::factorial(n))));
            CHECK(sym_lhs == rep_lhs.scaled(Poly(Rat::factorial(n))));
        }
    }
}

TEST_CASE("set partition counting consistency with integer partitions") {
    // number of set partitions matching an integer partition shape
    for (int n = 1; n <= 7; ++n) {
        std::map<std::vector<int>, long> shape_counts;
        for (const auto& B : set_partitions(n)) {
            std::vector<int> shape;
            for (const auto& b : B.blocks) shape.push_back(static_cast<int>(b.size()));
            std::sort(shape.begin(), shape.end(), std::greater<int>());
            shape_counts[shape]++;
        }
        for (const auto& lambda : int_partitions(n)) {
            Rat expect = Rat::factorial(n);
            Rat denom(1);
            for (int part : lambda.parts) denom *= Rat::factorial(part);
            int max_part = lambda.parts.empty() ? 0 : lambda.parts.front();
            for (int i = 1; i <= max_part; ++i) denom *= Rat::factorial(lambda.multiplicity(i));
            expect /= denom;
            CHECK(Rat(shape_counts[lambda.parts]) == expect);
        }
    }
}
