#pragma once

#include <complex>

#include "qsh/mzv.hpp"

namespace qsh {

enum class EvalKind { zeta, tvalue, euler };

struct EvalConfig {
    long long terms = 1'000'000;
    EvalKind kind = EvalKind::zeta;
    int level = 1;  // euler only

    void validate() const;
};

/// Numeric value with truncation metadata. Values are real for zeta/t/level-2
/// kinds; higher euler levels are complex.
struct EvalResult {
    std::complex<double> value{0.0, 0.0};
    double tail = 0.0;
    long long terms = 0;

    double real() const { return value.real(); }
};

/// Ordered zeros of a function G, |a_n| strictly increasing, no zero entries.
struct ZeroStream {
    std::vector<double> zeros;

    static ZeroStream multiples(double step, long long n);        // a_i = i*step
    static ZeroStream half_offset(double step, long long n);      // a_i = (i-1/2)*step
    static ZeroStream from_file(const std::string& path);

    void validate() const;
};

struct RepeatedFamily {
    enum class Tag { zeta2, zeta4, t2, t4, bessel2, bessel4 };
    Tag tag = Tag::zeta2;
    Rat nu = Rat(0);  // bessel order, nu > -1

    static RepeatedFamily parse(const std::string& name, const Rat& nu = Rat(0));
};

/// Strict nested sum Σ_{n_1 > ... > n_k >= 1} Π φ(n_j) n_j^{-i_j} with the
/// kind-dependent base φ. Runs a downward DP over m <= terms; for the zeta,
/// t and level-2 euler kinds the boundary at m = terms is completed with the
/// asymptotic tail expansion, for higher levels it is plain truncation.
EvalResult strict_sum_eval(const Index& idx, const EvalConfig& cfg);

/// ζ^r = ζ∘Σ^r: expands Σ^r of the index word with r specialized and
/// evaluates each strict term.
EvalResult interp_eval(const Index& idx, const Rat& r, const EvalConfig& cfg);

/// Termwise strict evaluation of a linear combination with constant
/// coefficients; the empty word contributes its coefficient.
EvalResult eval_lincomb(const LinComb& x, const EvalConfig& cfg);

/// Closed forms for ζ({2}_n), ζ({4}_n), t({2}_n), t({4}_n), ζ_{J_ν}({2}_n),
/// ζ_{J_ν}({4}_n); rational factor exact, π powers in binary64.
EvalResult repeated_closed_form(const RepeatedFamily& fam, int n);

/// First M+1 coefficients (λ^0..λ^M) of Z((1-r)λ)/Z(-rλ) for the family's
/// Z(λ) = Σ ζ({m}_n) λ^n, by exact rational series division; equals
/// ζ^r({m}_n) at λ^n.
std::vector<double> interp_repeated_ratio(const RepeatedFamily& fam, const Rat& r, int M);

/// ζ_Ai(k) as an exact polynomial in κ = |Ai'(0)/Ai(0)|, degree k, monic.
Poly airy_zeta_poly(int k);

/// ζ_Ai({m}_n) for even m, via the partition form of the power-sum identity.
Poly airy_repeated_poly(int m, int n);

/// Display-only numeric value of κ.
double kappa_numeric();

/// Strict nested sum on the reciprocal zeros of G; plain truncation.
EvalResult zerostream_eval(const Index& idx, const ZeroStream& zeros, long long terms);

}  // namespace qsh
