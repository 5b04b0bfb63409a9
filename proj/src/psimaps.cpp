#include "qsh/psimaps.hpp"

#include <algorithm>

namespace qsh {

std::vector<Composition> compositions(int n) {
    if (n < 1) throw std::invalid_argument("compositions need n >= 1");
    std::vector<Composition> out;
    Composition cur;
    // first part ascending gives lexicographic order
    std::function<void(int)> rec = [&](int rest) {
        if (rest == 0) {
            out.push_back(cur);
            return;
        }
        for (int part = 1; part <= rest; ++part) {
            cur.push_back(part);
            rec(rest - part);
            cur.pop_back();
        }
    };
    rec(n);
    return out;
}

Word contract(const Alphabet& alpha, const Composition& I, const Word& w) {
    int total = 0;
    for (int part : I) {
        if (part < 1) throw std::invalid_argument("composition parts must be positive");
        total += part;
    }
    if (total != static_cast<int>(w.size()))
        throw std::invalid_argument("composition does not sum to the word length");
    Word out;
    out.reserve(I.size());
    size_t pos = 0;
    for (int part : I) {
        Letter block = w[pos++];
        for (int j = 1; j < part; ++j) block = diamond(alpha, block, w[pos++]);
        out.push_back(std::move(block));
    }
    return out;
}

SeriesPrefix SeriesPrefix::identity(int d) {
    SeriesPrefix f;
    f.c.assign(static_cast<size_t>(d), Poly(0));
    if (d >= 1) f.c[0] = Poly(1);
    return f;
}

SeriesPrefix SeriesPrefix::neg(int d) {
    SeriesPrefix f;
    f.c.assign(static_cast<size_t>(d), Poly(0));
    if (d >= 1) f.c[0] = Poly(-1);
    return f;
}

SeriesPrefix SeriesPrefix::sigma(int d) { return sigma_pow(Poly(1), d); }

SeriesPrefix SeriesPrefix::sigma_inv(int d) { return sigma_pow(Poly(-1), d); }

SeriesPrefix SeriesPrefix::sigma_r(int d) { return sigma_pow(Poly::indet(Indet::r), d); }

SeriesPrefix SeriesPrefix::sigma_pow(const Poly& s, int d) {
    SeriesPrefix f;
    f.c.reserve(static_cast<size_t>(d));
    Poly power(1, s.var());
    for (int i = 1; i <= d; ++i) {
        f.c.push_back(power);
        power *= s;
    }
    return f;
}

SeriesPrefix SeriesPrefix::exp(int d) {
    SeriesPrefix f;
    Rat inv_fact(1);
    for (int i = 1; i <= d; ++i) {
        inv_fact /= Rat(i);
        f.c.push_back(Poly(inv_fact));
    }
    return f;
}

SeriesPrefix SeriesPrefix::log(int d) {
    SeriesPrefix f;
    for (int i = 1; i <= d; ++i) {
        Rat c(1, i);
        if (i % 2 == 0) c = -c;
        f.c.push_back(Poly(c));
    }
    return f;
}

SeriesPrefix SeriesPrefix::from_coeffs(std::vector<Rat> coeffs) {
    SeriesPrefix f;
    f.c.reserve(coeffs.size());
    for (auto& q : coeffs) f.c.push_back(Poly(q));
    return f;
}

SeriesPrefix SeriesPrefix::from_polys(std::vector<Poly> coeffs) {
    SeriesPrefix f;
    f.c = std::move(coeffs);
    return f;
}

LinComb psi(const SeriesPrefix& f, const LinComb& x) {
    if (f.depth() < x.max_word_len())
        throw std::invalid_argument("series depth " + std::to_string(f.depth()) +
                                    " is less than the longest word " +
                                    std::to_string(x.max_word_len()));
    LinComb out(x.alphabet());
    for (const auto& [w, coeff] : x.terms()) {
        if (w.empty()) {
            out.add_term(w, coeff);
            continue;
        }
        for (const auto& I : compositions(static_cast<int>(w.size()))) {
            Poly factor = coeff;
            for (int part : I) factor *= f.coeff(part);
            if (factor.is_zero()) continue;
            out.add_term(contract(x.alphabet(), I, w), factor);
        }
    }
    return out;
}

LinComb sigma_pow_map(const LinComb& x, const Poly& s) {
    return psi(SeriesPrefix::sigma_pow(s, x.max_word_len()), x);
}

LinComb sigma_r_map(const LinComb& x) { return sigma_pow_map(x, Poly::indet(Indet::r)); }
LinComb sigma_map(const LinComb& x) { return sigma_pow_map(x, Poly(1)); }
LinComb sigma_inv_map(const LinComb& x) { return sigma_pow_map(x, Poly(-1)); }

LinComb t_map(const LinComb& x) {
    LinComb out(x.alphabet());
    for (const auto& [w, c] : x.terms())
        out.add_term(w, w.size() % 2 == 0 ? c : -c);
    return out;
}

LinComb r_map(const LinComb& x) {
    LinComb out(x.alphabet());
    for (const auto& [w, c] : x.terms()) {
        Word rev(w.rbegin(), w.rend());
        out.add_term(std::move(rev), c);
    }
    return out;
}

LinComb exp_map(const LinComb& x) { return psi(SeriesPrefix::exp(x.max_word_len()), x); }
LinComb log_map(const LinComb& x) { return psi(SeriesPrefix::log(x.max_word_len()), x); }

SeriesPrefix series_compose(const SeriesPrefix& f, const SeriesPrefix& g) {
    const int d = std::min(f.depth(), g.depth());
    // powers of g, truncated at degree d
    std::vector<std::vector<Poly>> gpow;  // gpow[k][j] = coeff of t^{j+1} in g^{k+1}
    std::vector<Poly> g1(g.c.begin(), g.c.begin() + d);
    gpow.push_back(g1);
    for (int k = 2; k <= d; ++k) {
        std::vector<Poly> next(static_cast<size_t>(d), Poly(0));
        const auto& prev = gpow.back();
        for (int i = 1; i <= d; ++i) {
            if (prev[i - 1].is_zero()) continue;
            for (int j = 1; i + j <= d; ++j) next[i + j - 1] += prev[i - 1] * g1[j - 1];
        }
        gpow.push_back(std::move(next));
    }
    std::vector<Poly> comp(static_cast<size_t>(d), Poly(0));
    for (int k = 1; k <= d; ++k) {
        if (f.c[k - 1].is_zero()) continue;
        for (int j = 1; j <= d; ++j) comp[j - 1] += f.c[k - 1] * gpow[k - 1][j - 1];
    }
    return SeriesPrefix::from_polys(std::move(comp));
}

TruncatedGF gf_mul(const TruncatedGF& a, const TruncatedGF& b, const BilinearProduct& prod) {
    if (!(a.alphabet == b.alphabet)) throw std::invalid_argument("alphabet mismatch");
    const int n = std::min(a.order(), b.order());
    TruncatedGF out(a.alphabet, n);
    for (int i = 0; i <= n; ++i)
        for (int j = 0; i + j <= n; ++j) {
            if (a.coeff[i].is_zero() || b.coeff[j].is_zero()) continue;
            out.coeff[i + j] += prod(a.coeff[i], b.coeff[j]);
        }
    return out;
}

TruncatedGF gf_geometric(const TruncatedGF& g, const BilinearProduct& prod) {
    if (!g.coeff[0].is_zero())
        throw std::invalid_argument("geometric series needs zero constant term");
    const int n = g.order();
    TruncatedGF out(g.alphabet, n);
    out.coeff[0] = LinComb::unit(g.alphabet);
    TruncatedGF power = out;  // g^0
    for (int m = 1; m <= n; ++m) {
        power = gf_mul(power, g, prod);
        for (int i = 0; i <= n; ++i) out.coeff[i] += power.coeff[i];
    }
    return out;
}

namespace {

void check_letter_span(const LinComb& z) {
    for (const auto& [w, c] : z.terms())
        if (w.size() != 1)
            throw std::invalid_argument("geometric-series identity needs an element of the letter span");
}

// k-fold diamond power of a letter-span element, expanded multilinearly.
LinComb diamond_power(const LinComb& z, int k) {
    LinComb acc = z;
    for (int j = 2; j <= k; ++j) {
        LinComb next(z.alphabet());
        for (const auto& [zw, zc] : z.terms())
            for (const auto& [aw, ac] : acc.terms())
                next.add_term(Word{diamond(z.alphabet(), zw[0], aw[0])}, zc * ac);
        acc = std::move(next);
    }
    return acc;
}

}  // namespace

TruncatedGF geom_lhs(const SeriesPrefix& f, const LinComb& z, int N) {
    check_letter_span(z);
    if (f.depth() < N)
        throw std::invalid_argument("series depth too small for the requested order");
    TruncatedGF out(z.alphabet(), N);
    out.coeff[0] = LinComb::unit(z.alphabet());
    LinComb zn = LinComb::unit(z.alphabet());
    for (int n = 1; n <= N; ++n) {
        zn = concat_product(zn, z);
        out.coeff[n] = psi(f, zn);
    }
    return out;
}

TruncatedGF geom_rhs(const SeriesPrefix& f, const LinComb& z, int N) {
    check_letter_span(z);
    if (f.depth() < N)
        throw std::invalid_argument("series depth too small for the requested order");
    TruncatedGF fz(z.alphabet(), N);
    for (int k = 1; k <= N; ++k) fz.coeff[k] = diamond_power(z, k).scaled(f.coeff(k));
    return gf_geometric(fz, concat_product);
}

}  // namespace qsh
