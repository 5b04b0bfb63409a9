#pragma once

#include <compare>
#include <string>
#include <vector>

#include "qsh/rat.hpp"

namespace qsh {

enum class AlphabetKind { mzv, euler, free_multiset };

/// Letter set with its diamond product. Three variants:
///   mzv            letters z_i, i >= 1, with z_i ◇ z_j = z_{i+j}
///   euler(N)       letters z_{m,j}, m >= 1, 0 <= j < N, colors add mod N
///   free_multiset  letters are nonempty multisets of generators, ◇ = union
struct Alphabet {
    AlphabetKind kind = AlphabetKind::mzv;
    int level = 1;
    std::vector<std::string> generators;

    static Alphabet mzv() { return Alphabet{AlphabetKind::mzv, 1, {}}; }
    static Alphabet euler(int n);
    static Alphabet free_multiset(std::vector<std::string> gens);

    bool operator==(const Alphabet&) const = default;
    std::string describe() const;
};

/// One letter; the interpretation of the fields depends on the alphabet.
/// Generator multisets are kept sorted, colors reduced mod the level.
struct Letter {
    long weight = 0;
    int color = 0;
    std::vector<int> gens;

    auto operator<=>(const Letter&) const = default;
};

using Word = std::vector<Letter>;

Letter mzv_letter(long i);
Letter euler_letter(long m, int j, int level);
Letter free_letter(std::vector<int> gens);

void check_letter(const Alphabet& a, const Letter& l);

Letter diamond(const Alphabet& a, const Letter& x, const Letter& y);

long word_weight(const Word& w);

}  // namespace qsh
