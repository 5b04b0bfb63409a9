#pragma once

#include <random>

#include "qsh/lincomb.hpp"
#include "qsh/products.hpp"

// Shared test utilities: random word generators over the three alphabets and
// an independent quasi-shuffle oracle that never touches the recursion in
// src/products.cpp.

namespace qsh::testing {

inline Alphabet mzv_alpha() { return Alphabet::mzv(); }
inline Alphabet euler_alpha(int level = 2) { return Alphabet::euler(level); }
inline Alphabet free_alpha() { return Alphabet::free_multiset({"g1", "g2", "g3"}); }

inline Letter random_letter(std::mt19937& rng, const Alphabet& alpha) {
    std::uniform_int_distribution<int> small(1, 3);
    switch (alpha.kind) {
        case AlphabetKind::mzv:
            return mzv_letter(small(rng));
        case AlphabetKind::euler:
            return euler_letter(small(rng), std::uniform_int_distribution<int>(0, alpha.level - 1)(rng),
                                alpha.level);
        case AlphabetKind::free_multiset: {
            std::uniform_int_distribution<int> gen(0, static_cast<int>(alpha.generators.size()) - 1);
            std::vector<int> gens;
            const int count = std::uniform_int_distribution<int>(1, 2)(rng);
            for (int i = 0; i < count; ++i) gens.push_back(gen(rng));
            return free_letter(std::move(gens));
        }
    }
    throw std::logic_error("unreachable");
}

inline Word random_word(std::mt19937& rng, const Alphabet& alpha, int len) {
    Word w;
    w.reserve(static_cast<size_t>(len));
    for (int i = 0; i < len; ++i) w.push_back(random_letter(rng, alpha));
    return w;
}

inline Word random_word_up_to(std::mt19937& rng, const Alphabet& alpha, int max_len,
                              int min_len = 0) {
    return random_word(rng, alpha, std::uniform_int_distribution<int>(min_len, max_len)(rng));
}

// Quasi-shuffle of two bare words by direct enumeration: pick position sets
// A, B ⊆ {1..s} with |A| = ℓ(u), |B| = ℓ(v), A ∪ B full, fill positions in
// order and diamond where the sets overlap. disjoint = true drops the
// overlaps and gives the plain shuffle.
inline LinComb brute_quasi_shuffle(const Alphabet& alpha, const Word& u, const Word& v,
                                   bool disjoint = false) {
    const int p = static_cast<int>(u.size());
    const int q = static_cast<int>(v.size());
    LinComb out(alpha);
    for (int s = std::max(p, q); s <= p + q; ++s) {
        if (disjoint && s != p + q) continue;
        for (unsigned maska = 0; maska < (1u << s); ++maska) {
            if (std::popcount(maska) != p) continue;
            for (unsigned maskb = 0; maskb < (1u << s); ++maskb) {
                if (std::popcount(maskb) != q) continue;
                if ((maska | maskb) != (1u << s) - 1) continue;
                if (disjoint && (maska & maskb) != 0) continue;
                Word w;
                w.reserve(static_cast<size_t>(s));
                int ia = 0, ib = 0;
                for (int t = 0; t < s; ++t) {
                    const bool in_a = maska & (1u << t);
                    const bool in_b = maskb & (1u << t);
                    if (in_a && in_b)
                        w.push_back(diamond(alpha, u[static_cast<size_t>(ia++)],
                                            v[static_cast<size_t>(ib++)]));
                    else if (in_a)
                        w.push_back(u[static_cast<size_t>(ia++)]);
                    else
                        w.push_back(v[static_cast<size_t>(ib++)]);
                }
                out.add_term(std::move(w), Poly(1));
            }
        }
    }
    return out;
}

inline LinComb lc(const Alphabet& alpha, const Word& w) { return LinComb::from_word(alpha, w); }

inline Word mzv_word(std::initializer_list<long> weights) {
    Word w;
    for (long i : weights) w.push_back(mzv_letter(i));
    return w;
}

}  // namespace qsh::testing
