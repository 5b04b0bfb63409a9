#include "qsh/zeval.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <numbers>

#include "qsh/psimaps.hpp"
#include "qsh/symsum.hpp"

namespace qsh {

void EvalConfig::validate() const {
    if (terms < 10) throw std::invalid_argument("truncation must be at least 10");
    if (kind == EvalKind::euler && level < 1)
        throw std::invalid_argument("euler level must be >= 1");
}

namespace {

constexpr int kSeriesOrder = 12;

double ipow_inv(double inv_m, long e) {
    double v = 1.0;
    for (long j = 0; j < e; ++j) v *= inv_m;
    return v;
}

double binom_d(int n, int k) {
    if (k < 0 || k > n) return 0.0;
    double v = 1.0;
    for (int j = 1; j <= k; ++j) v = v * (n - k + j) / j;
    return v;
}

// binomial series coefficient of (m+1)^{-t} = Σ_v C(-t,v) m^{-t-v}
double neg_binom(int t, int v) {
    double b = binom_d(t + v - 1, v);
    return (v % 2 == 0) ? b : -b;
}

// Asymptotic expansion Σ_t c[t] m^{-t}, t = 0..kSeriesOrder.
using Series = std::vector<double>;

Series zero_series() { return Series(kSeriesOrder + 1, 0.0); }

// S(1/(m+1)) re-expanded around 1/m.
Series shift(const Series& s) {
    Series out = zero_series();
    for (int t = 0; t <= kSeriesOrder; ++t) {
        if (s[t] == 0.0) continue;
        for (int v = 0; t + v <= kSeriesOrder; ++v) out[t + v] += s[t] * neg_binom(t, v);
    }
    return out;
}

Series shift_down(const Series& s, long e) {
    Series out = zero_series();
    for (int t = 0; t + e <= kSeriesOrder; ++t) out[t + e] = s[t];
    return out;
}

double eval_series(const Series& s, double m) {
    double inv = 1.0 / m;
    double acc = 0.0;
    double p = 1.0;
    for (int t = 0; t <= kSeriesOrder; ++t) {
        acc += s[t] * p;
        p *= inv;
    }
    return acc;
}

// W(m) - W(m+1) = f(m+1) with W(∞) = 0, f given as a series in the summed
// variable; f must start at power 2.
Series solve_plain(const Series& f) {
    Series fhat = shift(f);
    if (fhat[0] != 0.0 || fhat[1] != 0.0)
        throw std::logic_error("divergent summand in the tail expansion");
    Series g = zero_series();
    for (int p = 2; p <= kSeriesOrder; ++p) {
        double acc = fhat[p];
        for (int t = 1; t < p - 1; ++t) acc += g[t] * neg_binom(t, p - t);
        g[p - 1] = acc / (p - 1);
    }
    return g;
}

// Oscillating part: W(m) = (-1)^m h(1/m) with summand (-1)^n φ(n), φ starting
// at power 1.
Series solve_osc(const Series& phi) {
    Series phat = shift(phi);
    if (phat[0] != 0.0)
        throw std::logic_error("divergent oscillating summand in the tail expansion");
    Series h = zero_series();
    for (int p = 1; p <= kSeriesOrder; ++p) {
        double acc = phat[p];
        for (int t = 1; t < p; ++t) acc += h[t] * neg_binom(t, p - t);
        h[p] = -acc / 2.0;
    }
    return h;
}

struct TailExpansion {
    Series plain = zero_series();
    Series osc = zero_series();
};

enum class LevelPhase { one, alternating, odd_only };

// Per-level summand phase for the real-valued kinds.
LevelPhase phase_for(EvalKind kind, int color) {
    if (kind == EvalKind::tvalue) return LevelPhase::odd_only;
    if (kind == EvalKind::euler && color != 0) return LevelPhase::alternating;
    return LevelPhase::one;
}

// Real kernel: zeta, t, euler level <= 2, boundary completed from the
// asymptotic expansions.
EvalResult real_kernel(const Index& idx, const EvalConfig& cfg) {
    const int k = idx.depth();
    const long long N = cfg.terms;

    // asymptotic expansion per level, inner W_0 = 1
    std::vector<TailExpansion> expansions(static_cast<size_t>(k) + 1);
    expansions[0].plain[0] = 1.0;
    for (int j = 1; j <= k; ++j) {
        const auto& e = idx.entries[static_cast<size_t>(j - 1)];
        Series fp = shift_down(expansions[j - 1].plain, e.weight);
        Series fo = shift_down(expansions[j - 1].osc, e.weight);
        switch (phase_for(cfg.kind, e.color)) {
            case LevelPhase::one: break;
            case LevelPhase::alternating: std::swap(fp, fo); break;
            case LevelPhase::odd_only: {
                Series p = fp, o = fo;
                for (int t = 0; t <= kSeriesOrder; ++t) {
                    fp[t] = 0.5 * (p[t] - o[t]);
                    fo[t] = -fp[t];
                }
                break;
            }
        }
        expansions[j].plain = solve_plain(fp);
        expansions[j].osc = solve_osc(fo);
    }

    std::vector<double> w(static_cast<size_t>(k) + 1, 0.0);
    w[0] = 1.0;
    const double sign_n = (N % 2 == 0) ? 1.0 : -1.0;
    for (int j = 1; j <= k; ++j)
        w[j] = eval_series(expansions[j].plain, static_cast<double>(N)) +
               sign_n * eval_series(expansions[j].osc, static_cast<double>(N));

    for (long long m = N; m >= 1; --m) {
        const double inv_m = 1.0 / static_cast<double>(m);
        for (int j = k; j >= 1; --j) {
            const auto& e = idx.entries[static_cast<size_t>(j - 1)];
            double phi;
            switch (phase_for(cfg.kind, e.color)) {
                case LevelPhase::one: phi = 1.0; break;
                case LevelPhase::alternating: phi = (m % 2 == 0) ? 1.0 : -1.0; break;
                case LevelPhase::odd_only: phi = (m % 2 == 1) ? 1.0 : 0.0; break;
            }
            if (phi != 0.0) w[j] += phi * ipow_inv(inv_m, e.weight) * w[j - 1];
        }
    }

    // switch-point residual estimate from the last retained series terms
    double residual = 0.0;
    const double invN = 1.0 / static_cast<double>(N);
    for (int j = 1; j <= k; ++j)
        residual += (std::abs(expansions[j].plain[kSeriesOrder]) +
                     std::abs(expansions[j].osc[kSeriesOrder])) *
                    ipow_inv(invN, kSeriesOrder);
    return EvalResult{{w[static_cast<size_t>(k)], 0.0}, residual + 1e-15, N};
}

// Plain-truncation kernel for euler level >= 3 (complex phases).
EvalResult complex_kernel(const Index& idx, const EvalConfig& cfg) {
    const int k = idx.depth();
    const long long N = cfg.terms;
    const int L = cfg.level;
    std::vector<std::complex<double>> phase(static_cast<size_t>(L));
    for (int c = 0; c < L; ++c) {
        const double angle = 2.0 * std::numbers::pi * c / L;
        phase[static_cast<size_t>(c)] = {std::cos(angle), std::sin(angle)};
    }
    std::vector<std::complex<double>> w(static_cast<size_t>(k) + 1, 0.0);
    w[0] = 1.0;
    for (long long m = N; m >= 1; --m) {
        const double inv_m = 1.0 / static_cast<double>(m);
        for (int j = k; j >= 1; --j) {
            const auto& e = idx.entries[static_cast<size_t>(j - 1)];
            const auto eps = phase[static_cast<size_t>((e.color * (m % L)) % L)];
            w[j] += eps * ipow_inv(inv_m, e.weight) * w[j - 1];
        }
    }

    const auto& first = idx.entries.front();
    double tail;
    if (first.weight > 1) {
        tail = std::pow(1.0 + std::log(static_cast<double>(N)), k - 1) /
               ((first.weight - 1) * std::pow(static_cast<double>(N), first.weight - 1));
    } else {
        tail = std::pow(1.0 + std::log(static_cast<double>(N)), k - 1) / static_cast<double>(N);
    }
    return EvalResult{w[static_cast<size_t>(k)], tail, N};
}

void check_index_for_kind(const Index& idx, const EvalConfig& cfg) {
    if (idx.entries.empty()) throw std::invalid_argument("empty index");
    const int level = cfg.kind == EvalKind::euler ? cfg.level : 1;
    for (const auto& e : idx.entries) {
        if (e.weight < 1) throw std::invalid_argument("index weights must be >= 1");
        if (e.color < 0 || e.color >= level)
            throw std::invalid_argument("index color out of range for the evaluation kind");
    }
    if (!admissible(idx))
        throw std::invalid_argument("index is not admissible (leading entry 1 diverges)");
}

}  // namespace

EvalResult strict_sum_eval(const Index& idx, const EvalConfig& cfg) {
    cfg.validate();
    check_index_for_kind(idx, cfg);
    if (cfg.kind == EvalKind::euler && cfg.level >= 3) return complex_kernel(idx, cfg);
    return real_kernel(idx, cfg);
}

EvalResult interp_eval(const Index& idx, const Rat& r, const EvalConfig& cfg) {
    cfg.validate();
    check_index_for_kind(idx, cfg);
    const Alphabet alpha =
        cfg.kind == EvalKind::euler ? Alphabet::euler(cfg.level) : Alphabet::mzv();
    const LinComb expanded =
        sigma_r_map(LinComb::from_word(alpha, index_to_word(alpha, idx))).specialize_r(r);
    return eval_lincomb(expanded, cfg);
}

EvalResult eval_lincomb(const LinComb& x, const EvalConfig& cfg) {
    EvalResult out;
    out.terms = cfg.terms;
    for (const auto& [w, c] : x.terms()) {
        if (!c.is_constant())
            throw std::invalid_argument("numeric evaluation needs specialized coefficients");
        const double q = c.constant_term().to_double();
        if (w.empty()) {
            out.value += q;
            continue;
        }
        const EvalResult term = strict_sum_eval(word_to_index(w), cfg);
        out.value += q * term.value;
        out.tail += std::abs(q) * term.tail;
    }
    return out;
}

ZeroStream ZeroStream::multiples(double step, long long n) {
    ZeroStream zs;
    zs.zeros.reserve(static_cast<size_t>(n));
    for (long long i = 1; i <= n; ++i) zs.zeros.push_back(step * static_cast<double>(i));
    return zs;
}

ZeroStream ZeroStream::half_offset(double step, long long n) {
    ZeroStream zs;
    zs.zeros.reserve(static_cast<size_t>(n));
    for (long long i = 1; i <= n; ++i)
        zs.zeros.push_back(step * (static_cast<double>(i) - 0.5));
    return zs;
}

ZeroStream ZeroStream::from_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open zeros file: " + path);
    ZeroStream zs;
    std::string line;
    while (std::getline(in, line)) {
        const auto hash = line.find('#');
        if (hash != std::string::npos) line.erase(hash);
        const auto begin = line.find_first_not_of(" \t\r");
        if (begin == std::string::npos) continue;
        const auto end = line.find_last_not_of(" \t\r");
        zs.zeros.push_back(std::stod(line.substr(begin, end - begin + 1)));
    }
    return zs;
}

void ZeroStream::validate() const {
    double prev = 0.0;
    for (size_t i = 0; i < zeros.size(); ++i) {
        if (zeros[i] == 0.0) throw std::invalid_argument("zero stream contains a zero entry");
        const double mag = std::abs(zeros[i]);
        if (i > 0 && mag <= prev)
            throw std::invalid_argument("zero stream magnitudes must increase");
        prev = mag;
    }
}

RepeatedFamily RepeatedFamily::parse(const std::string& name, const Rat& nu) {
    RepeatedFamily fam;
    fam.nu = nu;
    if (name == "zeta2") fam.tag = Tag::zeta2;
    else if (name == "zeta4") fam.tag = Tag::zeta4;
    else if (name == "t2") fam.tag = Tag::t2;
    else if (name == "t4") fam.tag = Tag::t4;
    else if (name == "bessel2") fam.tag = Tag::bessel2;
    else if (name == "bessel4") fam.tag = Tag::bessel4;
    else throw std::invalid_argument("unknown repeated family: " + name);
    return fam;
}

namespace {

// Exact rational coefficient q_n with Z(λ) = Σ q_n (π^s λ)^n; returns the
// π exponent s per λ power through `pi_power`.
Rat family_coeff(const RepeatedFamily& fam, int n, int& pi_power) {
    using Tag = RepeatedFamily::Tag;
    switch (fam.tag) {
        case Tag::zeta2:
            pi_power = 2;
            return Rat(1) / Rat::factorial(2 * n + 1);
        case Tag::zeta4:
            pi_power = 4;
            return Rat(2).pow(2 * n + 1) / Rat::factorial(4 * n + 2);
        case Tag::t2:
            pi_power = 2;
            return Rat(1) / (Rat(2).pow(2 * n) * Rat::factorial(2 * n));
        case Tag::t4:
            pi_power = 4;
            return Rat(1) / (Rat(2).pow(2 * n) * Rat::factorial(4 * n));
        case Tag::bessel2: {
            pi_power = 0;
            if (!(Rat(-1) < fam.nu)) throw std::invalid_argument("bessel order must exceed -1");
            Rat denom = Rat(2).pow(2 * n) * Rat::factorial(n);
            for (int i = 1; i <= n; ++i) denom *= fam.nu + Rat(i);
            return denom.inv();
        }
        case Tag::bessel4: {
            pi_power = 0;
            if (!(Rat(-1) < fam.nu)) throw std::invalid_argument("bessel order must exceed -1");
            Rat denom = Rat(2).pow(4 * n) * Rat::factorial(n);
            for (int i = 1; i <= 2 * n; ++i) denom *= fam.nu + Rat(i);
            for (int i = 1; i <= n; ++i) denom *= fam.nu + Rat(i);
            return denom.inv();
        }
    }
    throw std::logic_error("unreachable");
}

}  // namespace

EvalResult repeated_closed_form(const RepeatedFamily& fam, int n) {
    if (n < 0) throw std::invalid_argument("repetition count must be >= 0");
    int pi_power = 0;
    const Rat q = family_coeff(fam, n, pi_power);
    const double value = q.to_double() * std::pow(std::numbers::pi, pi_power * n);
    return EvalResult{{value, 0.0}, 0.0, 0};
}

std::vector<double> interp_repeated_ratio(const RepeatedFamily& fam, const Rat& r, int M) {
    if (M < 0 || M > 8) throw std::invalid_argument("ratio order must be 0..8");
    int pi_power = 0;
    std::vector<Rat> q;
    for (int n = 0; n <= M; ++n) q.push_back(family_coeff(fam, n, pi_power));

    const Rat one_minus_r = Rat(1) - r;
    const Rat neg_r = -r;
    std::vector<Rat> num, den;
    for (int n = 0; n <= M; ++n) {
        num.push_back(q[static_cast<size_t>(n)] * one_minus_r.pow(n));
        den.push_back(q[static_cast<size_t>(n)] * neg_r.pow(n));
    }
    // series division, den[0] = 1
    std::vector<Rat> c(static_cast<size_t>(M) + 1, Rat(0));
    for (int n = 0; n <= M; ++n) {
        Rat acc = num[static_cast<size_t>(n)];
        for (int j = 1; j <= n; ++j) acc -= den[static_cast<size_t>(j)] * c[static_cast<size_t>(n - j)];
        c[static_cast<size_t>(n)] = acc;
    }
    std::vector<double> out;
    out.reserve(c.size());
    const double scale = std::pow(std::numbers::pi, pi_power);
    double s = 1.0;
    for (int n = 0; n <= M; ++n) {
        out.push_back(c[static_cast<size_t>(n)].to_double() * s);
        s *= scale;
    }
    return out;
}

namespace {

// Polynomial in (z, f) with f' = z - f², used for derivatives of log Ai.
using ZFPoly = std::map<std::pair<int, int>, Rat>;

void zf_add(ZFPoly& p, int dz, int df, const Rat& c) {
    if (c.is_zero()) return;
    auto key = std::make_pair(dz, df);
    auto it = p.find(key);
    if (it == p.end()) {
        p.emplace(key, c);
    } else {
        it->second += c;
        if (it->second.is_zero()) p.erase(it);
    }
}

ZFPoly zf_derivative(const ZFPoly& p) {
    ZFPoly out;
    for (const auto& [mono, c] : p) {
        const auto [dz, df] = mono;
        if (dz > 0) zf_add(out, dz - 1, df, c * Rat(dz));
        if (df > 0) {
            // ∂f term times f' = z - f²
            zf_add(out, dz + 1, df - 1, c * Rat(df));
            zf_add(out, dz, df + 1, -c * Rat(df));
        }
    }
    return out;
}

}  // namespace

Poly airy_zeta_poly(int k) {
    if (k < 2) throw std::invalid_argument("airy zeta values start at k = 2");
    ZFPoly g;  // g_1 = f
    zf_add(g, 0, 1, Rat(1));
    for (int j = 2; j <= k; ++j) g = zf_derivative(g);
    // evaluate at z = 0, f = -κ; ζ_Ai(k) = -g_k(0)/(k-1)!
    std::vector<Rat> coeffs(static_cast<size_t>(k) + 1, Rat(0));
    const Rat scale = -Rat::factorial(k - 1).inv();
    for (const auto& [mono, c] : g) {
        const auto [dz, df] = mono;
        if (dz != 0) continue;
        Rat v = c * scale;
        if (df % 2 == 1) v = -v;  // (-κ)^df
        coeffs[static_cast<size_t>(df)] += v;
    }
    return Poly::from_coeffs(std::move(coeffs), Indet::kappa);
}

Poly airy_repeated_poly(int m, int n) {
    if (m < 2 || m % 2 != 0) throw std::invalid_argument("repeated airy values need even m >= 2");
    if (n < 0) throw std::invalid_argument("repetition count must be >= 0");
    if (n == 0) return Poly(1, Indet::kappa);
    Poly out(0, Indet::kappa);
    for (const auto& lambda : int_partitions(n)) {
        Poly term(lambda.eps() / lambda.z(), Indet::kappa);
        for (int part : lambda.parts) term *= airy_zeta_poly(m * part);
        out += term;
    }
    return out;
}

double kappa_numeric() { return 0.729011; }

EvalResult zerostream_eval(const Index& idx, const ZeroStream& zeros, long long terms) {
    if (idx.entries.empty()) throw std::invalid_argument("empty index");
    for (const auto& e : idx.entries) {
        if (e.color != 0)
            throw std::invalid_argument("zero-stream evaluation takes plain indices");
        if (e.weight < 1) throw std::invalid_argument("index weights must be >= 1");
    }
    if (idx.entries.front().weight < 2)
        throw std::invalid_argument("zero-stream evaluation needs a leading exponent >= 2");
    if (terms > static_cast<long long>(zeros.zeros.size()))
        throw std::invalid_argument("zero stream shorter than the requested truncation");
    zeros.validate();

    const int k = idx.depth();
    std::vector<double> w(static_cast<size_t>(k) + 1, 0.0);
    w[0] = 1.0;
    for (long long m = terms; m >= 1; --m) {
        const double inv_a = 1.0 / zeros.zeros[static_cast<size_t>(m - 1)];
        for (int j = k; j >= 1; --j) {
            const auto& e = idx.entries[static_cast<size_t>(j - 1)];
            w[j] += ipow_inv(inv_a, e.weight) * w[j - 1];
        }
    }

    const double aN = std::abs(zeros.zeros[static_cast<size_t>(terms - 1)]);
    const long i1 = idx.entries.front().weight;
    const double tail = std::pow(1.0 + std::log(static_cast<double>(terms)), k - 1) *
                        static_cast<double>(terms) / ((i1 - 1) * std::pow(aN, i1));
    return EvalResult{{w[static_cast<size_t>(k)], 0.0}, tail, terms};
}

}  // namespace qsh
