#pragma once

#include "qsh/lincomb.hpp"

namespace qsh {

/// Exponent sequence of a zeta-type value. Colors are 0 for plain MZVs and
/// 0..N-1 for level-N values; level-2 entries render as barred/negative.
struct IndexEntry {
    long weight = 0;
    int color = 0;
    auto operator<=>(const IndexEntry&) const = default;
};

struct Index {
    std::vector<IndexEntry> entries;

    int depth() const { return static_cast<int>(entries.size()); }
    long weight() const {
        long n = 0;
        for (const auto& e : entries) n += e.weight;
        return n;
    }
    auto operator<=>(const Index&) const = default;
};

Index make_index(std::initializer_list<long> weights);
/// Signed entries for level 2: -3 means weight 3, color 1.
Index make_signed_index(std::initializer_list<long> entries);

Word index_to_word(const Alphabet& alpha, const Index& idx);
Index word_to_index(const Word& w);

/// Convergence: first entry is not (1, color 0).
bool admissible(const Index& idx);

/// x-y encoding: z_i = x^{i-1} y. Result is a string over {'x','y'}.
std::string to_xy(const Word& w);
/// Inverse; the input must end in 'y'.
Word from_xy(const std::string& u);

/// Duality: reverse the x-y word and exchange x and y. Input must be
/// admissible so the image decodes again.
Word tau(const Word& w);

/// Cyclic sum C(w): one term per cyclic rotation, with the lead exponent
/// bumped; words counted with multiplicity.
LinComb cyclic_sum(const Alphabet& alpha, const Word& w);

/// (star-side word, half-side word) of the two-one formula for the exponent
/// sequence j = (j_1,...,j_l), j_1 >= 1:
///   left  = (xy)^{j_1} y (xy)^{j_2} y ... (xy)^{j_l} y
///   right = x^{2 j_1} y ... x^{2 j_l} y
std::pair<Word, Word> two_one_pair(const std::vector<long>& j);

/// All admissible indices of weight n and depth l, lexicographic.
std::vector<Index> sum_theorem_indices(int n, int l);

/// Σ_{k=0}^{l-1} r^k C(n-l-1+k, k): the ζ(n)-coefficient of the interpolated
/// sum theorem.
Poly interp_sum_rhs(int n, int l);

/// Totally odd sum theorem: indices with all entries odd, first > 1, and the
/// two printed closed forms of the ζ(n)-coefficient.
std::vector<Index> totally_odd_indices(int n, int l);
Rat totally_odd_rhs(int n, int l);
Rat totally_odd_rhs_alt(int n, int l);

/// Bar arithmetic on nonzero signed integers: a + b̄ = (a+b)‾, b̄ + ā = a + b.
long signed_index_add(long a, long b);

}  // namespace qsh
