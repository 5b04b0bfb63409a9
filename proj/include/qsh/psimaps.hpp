#pragma once

#include <functional>

#include "qsh/products.hpp"

namespace qsh {

using Composition = std::vector<int>;

/// All 2^{n-1} compositions of n, lexicographic.
std::vector<Composition> compositions(int n);

/// I[w]: diamond consecutive blocks of w; parts of I must sum to ℓ(w).
Word contract(const Alphabet& alpha, const Composition& I, const Word& w);

/// First D coefficients of a series f = c_1 t + ... + c_D t^D ∈ t·k[[t]],
/// coefficients polynomial in r.
struct SeriesPrefix {
    std::vector<Poly> c;  // c[i] is the coefficient of t^{i+1}

    int depth() const { return static_cast<int>(c.size()); }
    Poly coeff(int i) const {  // 1-based
        if (i < 1 || i > depth()) throw std::out_of_range("series coefficient out of range");
        return c[i - 1];
    }

    static SeriesPrefix identity(int d);                  // t
    static SeriesPrefix neg(int d);                       // -t
    static SeriesPrefix sigma(int d);                     // t/(1-t):   c_i = 1
    static SeriesPrefix sigma_inv(int d);                 // t/(1+t):   c_i = (-1)^{i-1}
    static SeriesPrefix sigma_r(int d);                   // t/(1-rt):  c_i = r^{i-1}, symbolic
    static SeriesPrefix sigma_pow(const Poly& s, int d);  // c_i = s^{i-1}
    static SeriesPrefix exp(int d);                       // e^t - 1:   c_i = 1/i!
    static SeriesPrefix log(int d);                       // log(1+t):  c_i = (-1)^{i-1}/i
    static SeriesPrefix from_coeffs(std::vector<Rat> coeffs);
    static SeriesPrefix from_polys(std::vector<Poly> coeffs);
};

/// Ψ_f(w) = Σ_{I ∈ C(ℓ(w))} c_{i_1}···c_{i_m} I[w], extended linearly; Ψ_f(1) = 1.
LinComb psi(const SeriesPrefix& f, const LinComb& x);

/// Σ^s for an arbitrary coefficient-ring element s (series t/(1-st)).
LinComb sigma_pow_map(const LinComb& x, const Poly& s);
/// Σ^r with symbolic r.
LinComb sigma_r_map(const LinComb& x);
LinComb sigma_map(const LinComb& x);      // Σ  (r = 1)
LinComb sigma_inv_map(const LinComb& x);  // Σ^{-1}

LinComb t_map(const LinComb& x);  // w ↦ (-1)^{ℓ(w)} w
LinComb r_map(const LinComb& x);  // reverses words
LinComb exp_map(const LinComb& x);
LinComb log_map(const LinComb& x);

/// Coefficients of f∘g up to the common depth (g has no constant term).
SeriesPrefix series_compose(const SeriesPrefix& f, const SeriesPrefix& g);

/// Formal series in λ with LinComb coefficients, truncated at λ^order.
struct TruncatedGF {
    Alphabet alphabet;
    std::vector<LinComb> coeff;  // index = power of λ, size order+1

    explicit TruncatedGF(Alphabet a, int order)
        : alphabet(a), coeff(static_cast<size_t>(order) + 1, LinComb(a)) {}
    int order() const { return static_cast<int>(coeff.size()) - 1; }

    bool operator==(const TruncatedGF& o) const {
        return alphabet == o.alphabet && coeff == o.coeff;
    }
};

using BilinearProduct = std::function<LinComb(const LinComb&, const LinComb&)>;

TruncatedGF gf_mul(const TruncatedGF& a, const TruncatedGF& b, const BilinearProduct& prod);
/// 1/(1-g) = Σ g^m for g with zero constant coefficient.
TruncatedGF gf_geometric(const TruncatedGF& g, const BilinearProduct& prod);

/// Both sides of Ψ_f(1/(1-λz)) = 1/(1-f_◇(λz)) through λ^N, for z in the
/// letter span (every word of z has length 1).
TruncatedGF geom_lhs(const SeriesPrefix& f, const LinComb& z, int N);
TruncatedGF geom_rhs(const SeriesPrefix& f, const LinComb& z, int N);

}  // namespace qsh
