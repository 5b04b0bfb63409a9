#include "qsh/verify.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <numbers>
#include <random>
#include <sstream>

#include "qsh/render.hpp"
#include "qsh/symsum.hpp"

namespace qsh {

namespace {

constexpr double kPi = std::numbers::pi;

class Checker {
public:
    Checker(SuiteReport& report, const VerifyOptions& opts) : report_(report), opts_(opts) {}

    void exact(const std::string& name, bool ok, const std::string& detail = "") {
        ++report_.cases_run;
        if (!ok) {
            report_.exact_failure = true;
            report_.failures.push_back({name, false, detail});
        }
    }

    void exact_eq(const std::string& name, const LinComb& lhs, const LinComb& rhs) {
        exact(name, lhs == rhs,
              "lhs = " + render_lincomb_text(lhs) + " ; rhs = " + render_lincomb_text(rhs));
    }

    void numeric(const std::string& name, double lhs, double rhs, double tol) {
        ++report_.cases_run;
        if (!(std::abs(lhs - rhs) <= tol)) {
            report_.numeric_failure = true;
            std::ostringstream detail;
            detail.precision(12);
            detail << "lhs = " << lhs << " ; rhs = " << rhs << " ; |diff| = "
                   << std::abs(lhs - rhs) << " > " << tol;
            report_.failures.push_back({name, true, detail.str()});
        }
    }

    const VerifyOptions& opts() const { return opts_; }

private:
    SuiteReport& report_;
    const VerifyOptions& opts_;
};

std::vector<Alphabet> all_alphabets() {
    return {Alphabet::mzv(), Alphabet::euler(2), Alphabet::free_multiset({"g1", "g2", "g3"})};
}

Letter rand_letter(std::mt19937& rng, const Alphabet& alpha) {
    std::uniform_int_distribution<int> small(1, 3);
    switch (alpha.kind) {
        case AlphabetKind::mzv: return mzv_letter(small(rng));
        case AlphabetKind::euler:
            return euler_letter(small(rng),
                                std::uniform_int_distribution<int>(0, alpha.level - 1)(rng),
                                alpha.level);
        case AlphabetKind::free_multiset:
            return free_letter({std::uniform_int_distribution<int>(
                0, static_cast<int>(alpha.generators.size()) - 1)(rng)});
    }
    throw std::logic_error("unreachable");
}

Word rand_word(std::mt19937& rng, const Alphabet& alpha, int min_len, int max_len) {
    const int len = std::uniform_int_distribution<int>(min_len, max_len)(rng);
    Word w;
    for (int i = 0; i < len; ++i) w.push_back(rand_letter(rng, alpha));
    return w;
}

std::vector<Word> words_over_z1z2(int max_len) {
    std::vector<Word> out{Word{}};
    size_t begin = 0;
    for (int len = 1; len <= max_len; ++len) {
        const size_t end = out.size();
        for (size_t i = begin; i < end; ++i)
            for (long wgt = 1; wgt <= 2; ++wgt) {
                Word next = out[i];
                next.push_back(mzv_letter(wgt));
                out.push_back(std::move(next));
            }
        begin = end;
    }
    return out;
}

// all mzv words of exact weight n
void words_of_weight(int n, Word& cur, std::vector<Word>& out) {
    if (n == 0) {
        out.push_back(cur);
        return;
    }
    for (int first = 1; first <= n; ++first) {
        cur.push_back(mzv_letter(first));
        words_of_weight(n - first, cur, out);
        cur.pop_back();
    }
}

LinComb antipode_by_recursion(const Alphabet& alpha, const Word& w, ProductKind kind) {
    if (w.empty()) return LinComb::unit(alpha);
    LinComb acc = LinComb::from_word(alpha, w).scaled(Poly(-1));
    for (size_t j = 1; j < w.size(); ++j) {
        acc -= product(kind, antipode_by_recursion(alpha, Word(w.begin(), w.begin() + j), kind),
                       LinComb::from_word(alpha, Word(w.begin() + j, w.end())));
    }
    return acc;
}

double zeta_of(const Index& idx, const VerifyOptions& opts) {
    return strict_sum_eval(idx, EvalConfig{opts.terms, EvalKind::zeta, 1}).real();
}

double interp_zeta(const Index& idx, const Rat& r, const VerifyOptions& opts) {
    return interp_eval(idx, r, EvalConfig{opts.terms, EvalKind::zeta, 1}).real();
}

void suite_lemma1(Checker& chk) {
    std::mt19937 rng(chk.opts().seed);
    const auto alphabets = all_alphabets();
    // identities of the bare lemma and its interpolated version
    for (int rep = 0; rep < 200; ++rep) {
        const Alphabet& alpha = alphabets[static_cast<size_t>(rep) % alphabets.size()];
        const Letter a = rand_letter(rng, alpha);
        const Letter b = rand_letter(rng, alpha);
        const Word v = rand_word(rng, alpha, 1, 3);
        const Word w = rand_word(rng, alpha, 1, 3);
        const LinComb cv = LinComb::from_word(alpha, v);
        const LinComb cw = LinComb::from_word(alpha, w);
        const LinComb av = diamond_extend(a, cv);
        const LinComb bw = diamond_extend(b, cw);
        for (auto kind : {ProductKind::quasi_shuffle, ProductKind::interp}) {
            auto mul = [&](const LinComb& x, const LinComb& y) { return product(kind, x, y); };
            const std::string tag =
                std::string(kind == ProductKind::interp ? "interp" : "qsh") + " sample " +
                std::to_string(rep);
            chk.exact("lemma eq1 " + tag,
                      diamond_extend(a, mul(cv, LinComb::from_letter(alpha, b))) + prepend(b, av) ==
                          mul(av, LinComb::from_letter(alpha, b)) +
                              diamond_extend(a, prepend(b, cv)));
            chk.exact("lemma eq2 " + tag,
                      mul(av, bw) == diamond_extend(a, mul(cv, bw)) +
                                         diamond_extend(b, mul(av, cw)) -
                                         diamond_extend(a, diamond_extend(b, mul(cv, cw))));
            chk.exact("lemma eq3 " + tag,
                      prepend(a, mul(cv, bw)) + diamond_extend(a, mul(cv, prepend(b, cw))) +
                              prepend(b, mul(av, cw)) +
                              diamond_extend(b, mul(prepend(a, cv), cw)) ==
                          mul(prepend(a, cv), bw) + mul(av, prepend(b, cw)) +
                              prepend(diamond(alpha, a, b), mul(cv, cw)).scaled(Poly(2)));
        }
    }
    // commutativity / associativity
    for (const auto& alpha : alphabets) {
        for (int rep = 0; rep < 10; ++rep) {
            const LinComb u = LinComb::from_word(alpha, rand_word(rng, alpha, 0, 4));
            const LinComb v = LinComb::from_word(alpha, rand_word(rng, alpha, 0, 4));
            const LinComb w = LinComb::from_word(alpha, rand_word(rng, alpha, 0, 3));
            for (auto kind : {ProductKind::shuffle, ProductKind::quasi_shuffle, ProductKind::star,
                              ProductKind::interp}) {
                chk.exact("commutativity " + alpha.describe(),
                          product(kind, u, v) == product(kind, v, u));
                if (u.max_word_len() <= 3 && v.max_word_len() <= 3)
                    chk.exact("associativity " + alpha.describe(),
                              product(kind, product(kind, u, v), w) ==
                                  product(kind, u, product(kind, v, w)));
            }
        }
    }
    // specializations of the interpolated product
    for (const auto& alpha : alphabets) {
        for (int rep = 0; rep < 10; ++rep) {
            const LinComb u = LinComb::from_word(alpha, rand_word(rng, alpha, 0, 3));
            const LinComb v = LinComb::from_word(alpha, rand_word(rng, alpha, 0, 3));
            const LinComb interp = interp_product(u, v);
            chk.exact("interp at r=0 is qsh", interp.specialize_r(Rat(0)) == qsh_product(u, v));
            chk.exact("interp at r=1 is star", interp.specialize_r(Rat(1)) == star_product(u, v));
        }
    }
    // r = 1/2: diamond-extended term carries -1/4
    {
        const Alphabet mzv = Alphabet::mzv();
        const Word u{mzv_letter(1), mzv_letter(1)};
        const Word v{mzv_letter(2), mzv_letter(1)};
        const Word u_tail{mzv_letter(1)};
        const Word v_tail{mzv_letter(1)};
        auto half = [&](const Word& x, const Word& y) {
            return interp_product(LinComb::from_word(mzv, x), LinComb::from_word(mzv, y))
                .specialize_r(Rat(1, 2));
        };
        const LinComb rebuilt = prepend(mzv_letter(1), half(u_tail, v)) +
                                prepend(mzv_letter(2), half(u, v_tail)) +
                                diamond_extend(mzv_letter(3), half(u_tail, v_tail))
                                    .scaled(Poly(Rat(-1, 4)));
        chk.exact_eq("half recursion coefficient -1/4", half(u, v), rebuilt);
    }
}

void suite_psi_compose(Checker& chk) {
    std::mt19937 rng(chk.opts().seed + 1);
    const auto alphabets = all_alphabets();
    std::uniform_int_distribution<long> d(-4, 4);
    auto rnd_series = [&] {
        std::vector<Rat> c;
        for (int i = 0; i < 5; ++i) {
            long den = 0;
            while (den == 0) den = d(rng);
            c.push_back(Rat(d(rng), den));
        }
        return SeriesPrefix::from_coeffs(std::move(c));
    };
    for (int rep = 0; rep < 100; ++rep) {
        const Alphabet& alpha = alphabets[static_cast<size_t>(rep) % alphabets.size()];
        const SeriesPrefix f = rnd_series(), g = rnd_series();
        const LinComb w = LinComb::from_word(alpha, rand_word(rng, alpha, 0, 5));
        chk.exact("psi composition sample " + std::to_string(rep),
                  psi(f, psi(g, w)) == psi(series_compose(f, g), w));
    }
    chk.exact("sigma and sigma-inv compose to the identity",
              series_compose(SeriesPrefix::sigma(6), SeriesPrefix::sigma_inv(6)).c ==
                  SeriesPrefix::identity(6).c);

    // geometric series identity and its interpolated corollary
    const Alphabet mzv = Alphabet::mzv();
    const int N = 3;
    for (long zw = 1; zw <= 2; ++zw) {
        const LinComb z = LinComb::from_letter(mzv, mzv_letter(zw));
        for (const auto& f : {SeriesPrefix::sigma(2 * N), SeriesPrefix::exp(2 * N),
                              SeriesPrefix::log(2 * N)})
            chk.exact("geometric identity z" + std::to_string(zw),
                      geom_lhs(f, z, N) == geom_rhs(f, z, N));

        const Poly r = Poly::indet();
        TruncatedGF lhs_a(mzv, N), lhs_b(mzv, N), rhs(mzv, N);
        LinComb zn = LinComb::unit(mzv);
        for (int n = 0; n <= N; ++n) {
            lhs_a.coeff[static_cast<size_t>(n)] = sigma_r_map(zn);
            lhs_b.coeff[static_cast<size_t>(n)] = zn.scaled((-r).pow(n));
            rhs.coeff[static_cast<size_t>(n)] = zn.scaled((Poly(1) - r).pow(n));
            zn = concat_product(zn, z);
        }
        chk.exact("interpolated geometric corollary z" + std::to_string(zw),
                  gf_mul(lhs_a, lhs_b,
                         [](const LinComb& a, const LinComb& b) { return qsh_product(a, b); }) ==
                      rhs);
    }
}

void suite_sigma_identities(Checker& chk) {
    std::mt19937 rng(chk.opts().seed + 2);
    const std::vector<Rat> samples{Rat(1), Rat(-1), Rat(1, 2), Rat(-1, 2), Rat(2)};
    for (const auto& alpha : all_alphabets()) {
        for (int rep = 0; rep < 10; ++rep) {
            const LinComb w = LinComb::from_word(alpha, rand_word(rng, alpha, 0, 4));
            for (const Rat& rv : samples)
                for (const Rat& sv : samples)
                    chk.exact("sigma power addition",
                              sigma_pow_map(sigma_pow_map(w, Poly(sv)), Poly(rv)) ==
                                  sigma_pow_map(w, Poly(rv + sv)));
            chk.exact("T sigma T = sigma inverse", t_map(sigma_map(t_map(w))) == sigma_inv_map(w));
            chk.exact("sigma T involution", sigma_map(t_map(sigma_map(t_map(w)))) == w);
            chk.exact("T sigma involution", t_map(sigma_map(t_map(sigma_map(w)))) == w);
            chk.exact("R commutes with psi",
                      r_map(psi(SeriesPrefix::exp(4), w)) == psi(SeriesPrefix::exp(4), r_map(w)));
        }
        for (int rep = 0; rep < 8; ++rep) {
            const LinComb w = LinComb::from_word(alpha, rand_word(rng, alpha, 0, 5));
            chk.exact("sigma = exp T log T", exp_map(t_map(log_map(t_map(w)))) == sigma_map(w));
        }
        for (int rep = 0; rep < 8; ++rep) {
            const Letter a = rand_letter(rng, alpha);
            const LinComb w = LinComb::from_word(alpha, rand_word(rng, alpha, 1, 3));
            const LinComb sw = sigma_map(w);
            chk.exact("sigma letter recursion",
                      sigma_map(prepend(a, w)) == prepend(a, sw) + diamond_extend(a, sw));
        }
        for (int rep = 0; rep < 8; ++rep) {
            const LinComb u = LinComb::from_word(alpha, rand_word(rng, alpha, 0, 3));
            const LinComb v = LinComb::from_word(alpha, rand_word(rng, alpha, 0, 3));
            chk.exact("exp is an isomorphism",
                      exp_map(shuffle_product(u, v)) == qsh_product(exp_map(u), exp_map(v)));
        }
    }
}

void suite_interp_def(Checker& chk) {
    std::mt19937 rng(chk.opts().seed + 3);
    const Poly r = Poly::indet();
    for (const auto& alpha : all_alphabets()) {
        for (int rep = 0; rep < 20; ++rep) {
            const Word uw = rand_word(rng, alpha, 0, 3);
            const Word vw = rand_word(rng, alpha, 0, 5 - static_cast<int>(uw.size()));
            const LinComb u = LinComb::from_word(alpha, uw);
            const LinComb v = LinComb::from_word(alpha, vw);
            chk.exact("interp equals its conjugation definition",
                      interp_product(u, v) ==
                          sigma_pow_map(qsh_product(sigma_pow_map(u, r), sigma_pow_map(v, r)), -r));
        }
        // T : (kA, ⋄_r) -> (kA, ⋄_{1-r})
        const Poly one_minus_r = Poly(1) - r;
        for (int rep = 0; rep < 10; ++rep) {
            const LinComb u = LinComb::from_word(alpha, rand_word(rng, alpha, 0, 3));
            const LinComb v = LinComb::from_word(alpha, rand_word(rng, alpha, 0, 3));
            const LinComb conj = interp_product(t_map(u), t_map(v));
            LinComb substituted(alpha);
            for (const auto& [w, c] : conj.terms()) substituted.add_term(w, c.compose(one_minus_r));
            chk.exact("T maps interp r to interp 1-r", t_map(interp_product(u, v)) == substituted);
        }
    }
}

void suite_hopf(Checker& chk) {
    const Alphabet mzv = Alphabet::mzv();
    const auto words = words_over_z1z2(4);
    for (const auto& w : words) {
        for (auto kind : {ProductKind::quasi_shuffle, ProductKind::interp}) {
            const std::string tag = render_word_text(mzv, w);
            chk.exact("antipode axiom left " + tag, hopf_axiom_check(w, mzv, kind, true));
            chk.exact("antipode axiom right " + tag, hopf_axiom_check(w, mzv, kind, false));
        }
        chk.exact_eq("antipode closed form vs recursion (qsh) " + render_word_text(mzv, w),
                     antipode(LinComb::from_word(mzv, w), Poly(0)),
                     antipode_by_recursion(mzv, w, ProductKind::quasi_shuffle));
        chk.exact_eq("antipode closed form vs recursion (interp) " + render_word_text(mzv, w),
                     antipode(LinComb::from_word(mzv, w)),
                     antipode_by_recursion(mzv, w, ProductKind::interp));
    }
    for (const auto& u : words)
        for (const auto& v : words) {
            if (u.size() + v.size() > 5) continue;
            for (auto kind : {ProductKind::quasi_shuffle, ProductKind::interp})
                chk.exact("coproduct multiplicativity " + render_word_text(mzv, u) + " , " +
                              render_word_text(mzv, v),
                          coproduct_multiplicativity_check(u, v, mzv, kind));
        }
    // coassociativity
    for (const auto& w : words) {
        std::map<std::tuple<Word, Word, Word>, Poly> left, right;
        const TensorComb outer = coproduct(LinComb::from_word(mzv, w));
        for (const auto& [p, c] : outer.terms()) {
            const TensorComb fst = coproduct(LinComb::from_word(mzv, p.first));
            for (const auto& [q, d] : fst.terms())
                left[std::make_tuple(q.first, q.second, p.second)] += c * d;
            const TensorComb snd = coproduct(LinComb::from_word(mzv, p.second));
            for (const auto& [q, d] : snd.terms())
                right[std::make_tuple(p.first, q.first, q.second)] += c * d;
        }
        for (auto it = left.begin(); it != left.end();)
            it = it->second.is_zero() ? left.erase(it) : std::next(it);
        for (auto it = right.begin(); it != right.end();)
            it = it->second.is_zero() ? right.erase(it) : std::next(it);
        chk.exact("coassociativity " + render_word_text(mzv, w), left == right);
    }
    // sigma^r is a Hopf isomorphism; antipode is multiplicative
    std::mt19937 rng(chk.opts().seed + 4);
    for (const auto& alpha : all_alphabets()) {
        for (int rep = 0; rep < 8; ++rep) {
            const LinComb u = LinComb::from_word(alpha, rand_word(rng, alpha, 0, 3));
            const LinComb v = LinComb::from_word(alpha, rand_word(rng, alpha, 0, 3));
            chk.exact("sigma^r algebra isomorphism",
                      sigma_r_map(interp_product(u, v)) ==
                          qsh_product(sigma_r_map(u), sigma_r_map(v)));
            chk.exact("antipode multiplicative",
                      antipode(interp_product(u, v)) == interp_product(antipode(u), antipode(v)));

            const LinComb w = LinComb::from_word(alpha, rand_word(rng, alpha, 0, 3));
            const TensorComb split = coproduct(w);
            TensorComb mapped(alpha);
            for (const auto& [p, c] : split.terms()) {
                const LinComb L = sigma_r_map(LinComb::from_word(alpha, p.first)).scaled(c);
                const LinComb R = sigma_r_map(LinComb::from_word(alpha, p.second));
                for (const auto& [lw, lcf] : L.terms())
                    for (const auto& [rw, rcf] : R.terms()) mapped.add_term(lw, rw, lcf * rcf);
            }
            chk.exact("sigma^r coalgebra map", mapped == coproduct(sigma_r_map(w)));
        }
    }
}

void suite_symsum(Checker& chk) {
    const Alphabet fr = Alphabet::free_multiset({"g1", "g2", "g3", "g4", "g5"});
    const Alphabet mzv = Alphabet::mzv();
    for (int n = 1; n <= 5; ++n) {
        std::vector<Letter> distinct;
        for (int i = 0; i < n; ++i) distinct.push_back(free_letter({i % 5}));
        auto [lhs, rhs] = symmetric_sum_sides(fr, distinct);
        chk.exact("symmetric sum distinct letters n=" + std::to_string(n), lhs == rhs);
    }
    {
        auto [lhs, rhs] =
            symmetric_sum_sides(mzv, {mzv_letter(2), mzv_letter(2), mzv_letter(3)});
        chk.exact("symmetric sum repeated mzv letters n=3", lhs == rhs);
        auto [lhs2, rhs2] = symmetric_sum_sides(
            mzv, {mzv_letter(1), mzv_letter(2), mzv_letter(1), mzv_letter(3), mzv_letter(2)});
        chk.exact("symmetric sum repeated mzv letters n=5", lhs2 == rhs2);
    }
    for (int n = 1; n <= 6; ++n) {
        auto [lhs, rhs] = repeated_power_sides(mzv, mzv_letter(2), n);
        chk.exact("repeated power mzv n=" + std::to_string(n), lhs == rhs);
        auto [lhs2, rhs2] = repeated_power_sides(fr, free_letter({0}), n);
        chk.exact("repeated power free n=" + std::to_string(n), lhs2 == rhs2);
    }
    // specialization chain at r = 0 and r = 1 against explicit c(B) products
    for (int n = 2; n <= 4; ++n) {
        std::vector<Letter> letters;
        for (int i = 0; i < n; ++i) letters.push_back(mzv_letter(i + 2));
        auto [lhs, rhs] = symmetric_sum_sides(mzv, letters);
        for (const Rat& rv : {Rat(0), Rat(1)}) {
            LinComb direct(mzv);
            for (const auto& B : set_partitions(n)) {
                LinComb prod = LinComb::unit(mzv);
                for (const auto& block : B.blocks) {
                    Letter acc = letters[static_cast<size_t>(block.front() - 1)];
                    for (size_t i = 1; i < block.size(); ++i)
                        acc = diamond(mzv, acc, letters[static_cast<size_t>(block[i] - 1)]);
                    const LinComb single = LinComb::from_letter(mzv, acc);
                    prod = rv.is_zero() ? qsh_product(prod, single) : star_product(prod, single);
                }
                Rat coeff(1);
                for (const auto& block : B.blocks)
                    coeff *= Rat::factorial(static_cast<long>(block.size()) - 1);
                if (rv.is_zero() && (n - B.blocks.size()) % 2 == 1) coeff = -coeff;
                direct += prod.scaled(Poly(coeff));
            }
            chk.exact("specialization chain n=" + std::to_string(n) + " r=" + rv.str(),
                      rhs.specialize_r(rv) == direct);
        }
    }
    // the all-equal symmetric sum collapses onto the repeated-power identity
    for (int n = 2; n <= 5; ++n) {
        const std::vector<Letter> equal(static_cast<size_t>(n), mzv_letter(2));
        auto [sym_lhs, sym_rhs] = symmetric_sum_sides(mzv, equal);
        auto [rep_lhs, rep_rhs] = repeated_power_sides(mzv, mzv_letter(2), n);
        chk.exact("all-equal collapse n=" + std::to_string(n),
                  sym_rhs == rep_rhs.scaled(Poly(Rat::factorial(n))) &&
                      sym_lhs == rep_lhs.scaled(Poly(Rat::factorial(n))));
    }

    // numeric instance: ζ(2,3)+ζ(3,2) = ζ(2)ζ(3) - ζ(5)
    const auto& opts = chk.opts();
    EvalConfig cfg{opts.terms, EvalKind::zeta, 1};
    {
        const SymsumReport rep = zeta_symsum_report({2, 3}, Rat(0), cfg);
        chk.numeric("symmetric sum report (2,3) r=0", rep.lhs, rep.rhs, opts.tol);
        const double direct = zeta_of(make_index({2}), opts) * zeta_of(make_index({3}), opts) -
                              zeta_of(make_index({5}), opts);
        chk.numeric("symmetric sum report (2,3) closed form", rep.rhs, direct, opts.tol);
    }
    // repeated keys reproduce the partition identities at r = 0, 1, 1/2
    for (int n = 2; n <= 3; ++n) {
        const std::vector<long> keys(static_cast<size_t>(n), 2);
        for (const Rat& rv : {Rat(0), Rat(1), Rat(1, 2)}) {
            Index rep_idx;
            for (int i = 0; i < n; ++i) rep_idx.entries.push_back({2, 0});
            const double lhs = interp_zeta(rep_idx, rv, opts);
            double rhs = 0.0;
            for (const auto& lambda : int_partitions(n)) {
                bool all_odd = true;
                for (int part : lambda.parts) all_odd = all_odd && part % 2 == 1;
                double term = 0.0;
                if (rv == Rat(0)) {
                    term = (lambda.eps() / lambda.z()).to_double();
                } else if (rv == Rat(1)) {
                    term = lambda.z().inv().to_double();
                } else {
                    if (!all_odd) continue;
                    term = (Rat(2).pow(n - lambda.len()) * lambda.z()).inv().to_double();
                }
                for (int part : lambda.parts) term *= zeta_of(make_index({2L * part}), opts);
                rhs += term;
            }
            chk.numeric("repeated partition identity n=" + std::to_string(n) + " r=" + rv.str(),
                        lhs, rhs, opts.tol);
        }
    }
}

void suite_mzv_numeric(Checker& chk) {
    const auto& opts = chk.opts();
    const EvalConfig zeta_cfg{opts.terms, EvalKind::zeta, 1};
    const EvalConfig t_cfg{opts.terms, EvalKind::tvalue, 1};

    // repeated-argument closed forms
    for (int n = 1; n <= 3; ++n) {
        Index idx;
        for (int i = 0; i < n; ++i) idx.entries.push_back({2, 0});
        chk.numeric("zeta({2}_" + std::to_string(n) + ")",
                    strict_sum_eval(idx, zeta_cfg).real(),
                    repeated_closed_form(RepeatedFamily::parse("zeta2"), n).real(), opts.tol);
    }
    for (int n = 1; n <= 2; ++n) {
        Index idx;
        for (int i = 0; i < n; ++i) idx.entries.push_back({4, 0});
        chk.numeric("zeta({4}_" + std::to_string(n) + ")",
                    strict_sum_eval(idx, zeta_cfg).real(),
                    repeated_closed_form(RepeatedFamily::parse("zeta4"), n).real(), opts.tol);
        Index idx2;
        for (int i = 0; i < n; ++i) idx2.entries.push_back({2, 0});
        chk.numeric("t({2}_" + std::to_string(n) + ")", strict_sum_eval(idx2, t_cfg).real(),
                    repeated_closed_form(RepeatedFamily::parse("t2"), n).real(), opts.tol);
        Index idx4;
        for (int i = 0; i < n; ++i) idx4.entries.push_back({4, 0});
        chk.numeric("t({4}_" + std::to_string(n) + ")", strict_sum_eval(idx4, t_cfg).real(),
                    repeated_closed_form(RepeatedFamily::parse("t4"), n).real(), opts.tol);
    }

    // sum theorem, weight 6 depth 3
    {
        double sum = 0.0;
        for (const auto& idx : sum_theorem_indices(6, 3)) sum += zeta_of(idx, opts);
        chk.numeric("sum theorem weight 6 depth 3", sum, zeta_of(make_index({6}), opts), opts.tol);
    }
    // interpolated sum theorem
    for (const auto& [n, l] : std::vector<std::pair<int, int>>{{3, 2}, {4, 2}, {5, 3}}) {
        for (const Rat& rv : {Rat(0), Rat(1), Rat(1, 2), Rat(1, 3)}) {
            double lhs = 0.0;
            for (const auto& idx : sum_theorem_indices(n, l)) lhs += interp_zeta(idx, rv, opts);
            const double rhs = interp_sum_rhs(n, l).eval(rv).to_double() *
                               zeta_of(make_index({n}), opts);
            chk.numeric("interpolated sum theorem n=" + std::to_string(n) +
                            " l=" + std::to_string(l) + " r=" + rv.str(),
                        lhs, rhs, opts.tol);
        }
    }

    // duality
    const Alphabet mzv = Alphabet::mzv();
    chk.numeric("duality zeta(3,1,2) = zeta(2,3,1)", zeta_of(make_index({3, 1, 2}), opts),
                zeta_of(make_index({2, 3, 1}), opts), opts.tol);
    for (int n = 2; n <= 6; ++n)
        for (int l = 1; l <= n - 1; ++l)
            for (const auto& idx : sum_theorem_indices(n, l)) {
                const Word w = index_to_word(mzv, idx);
                chk.numeric("duality weight " + std::to_string(n) + " " +
                                render_index_text(idx),
                            zeta_of(idx, opts), zeta_of(word_to_index(tau(w)), opts), opts.tol);
            }

    // cyclic sum theorem over all nonempty words of weight <= 4, with the
    // admissible and z1-leading populations reported separately
    for (int weight = 1; weight <= 4; ++weight) {
        std::vector<Word> all_words;
        Word cur;
        words_of_weight(weight, cur, all_words);
        for (const auto& w : all_words) {
            const int n = weight + 1;
            double lhs = 0.0;
            const LinComb cw = cyclic_sum(mzv, w);
            for (const auto& [term, coeff] : cw.terms())
                lhs += coeff.constant_term().to_double() *
                       interp_zeta(word_to_index(tau(term)), Rat(1), opts);
            const bool qs0 = admissible(word_to_index(w));
            chk.numeric(std::string("cyclic sum ") + (qs0 ? "qs0" : "non-qs0") + " w=" +
                            render_word_text(mzv, w),
                        lhs, (n - 1) * zeta_of(make_index({n}), opts), opts.tol);
        }
    }

    // two-one instances
    for (const auto& j : std::vector<std::vector<long>>{{1}, {2}, {1, 0}}) {
        auto [star_side, half_side] = two_one_pair(j);
        const double lhs = interp_zeta(word_to_index(star_side), Rat(1), opts);
        const double rhs = std::ldexp(1.0, static_cast<int>(j.size())) *
                           interp_zeta(word_to_index(half_side), Rat(1, 2), opts);
        chk.numeric("two-one j=" + std::to_string(j.front()) + " depth " +
                        std::to_string(j.size()),
                    lhs, rhs, opts.tol);
    }

    // totally odd sum theorem
    {
        double lhs = 0.0;
        for (const auto& idx : totally_odd_indices(5, 3))
            lhs += interp_zeta(idx, Rat(1, 2), opts);
        chk.numeric("totally odd (5,3)", lhs,
                    totally_odd_rhs(5, 3).to_double() * zeta_of(make_index({5}), opts), opts.tol);
        bool agree = true;
        for (int n = 3; n <= 12; ++n)
            for (int l = 1; l < n; ++l) {
                if ((n - l) % 2 != 0) continue;
                agree = agree && totally_odd_rhs(n, l) == totally_odd_rhs_alt(n, l);
            }
        chk.exact("totally odd closed forms agree through n=12", agree);
    }

    // stuffle consistency
    for (const auto& [a, b] : std::vector<std::pair<Index, Index>>{
             {make_index({2}), make_index({2})},
             {make_index({2}), make_index({3})},
             {make_index({2, 1}), make_index({2})}}) {
        const LinComb prod = qsh_product(LinComb::from_word(mzv, index_to_word(mzv, a)),
                                         LinComb::from_word(mzv, index_to_word(mzv, b)));
        chk.numeric("stuffle " + render_index_text(a) + " x " + render_index_text(b),
                    eval_lincomb(prod.specialize_r(Rat(0)), zeta_cfg).value.real(),
                    zeta_of(a, opts) * zeta_of(b, opts), opts.tol);
    }

    // monotone truncation
    for (const auto& idx : {make_index({2}), make_index({2, 1}), make_index({3, 1, 2})}) {
        const EvalConfig small_cfg{std::max<long long>(opts.terms / 10, 100), EvalKind::zeta, 1};
        const EvalResult small = strict_sum_eval(idx, small_cfg);
        const EvalResult big = strict_sum_eval(idx, zeta_cfg);
        chk.exact("monotone truncation " + render_index_text(idx),
                  std::abs(small.real() - big.real()) <= small.tail,
                  "moved by " + std::to_string(std::abs(small.real() - big.real())) +
                      " vs tail " + std::to_string(small.tail));
    }
}

void suite_exotic(Checker& chk) {
    const auto& opts = chk.opts();

    // airy symbolic values
    const Poly kappa = Poly::indet(Indet::kappa);
    chk.exact("airy zeta(2) = kappa^2", airy_zeta_poly(2) == kappa * kappa);
    chk.exact("airy zeta(4) = kappa^4 - kappa/3",
              airy_zeta_poly(4) == kappa.pow(4) - kappa * Poly(Rat(1, 3), Indet::kappa));
    for (int k = 2; k <= 10; ++k) {
        const Poly p = airy_zeta_poly(k);
        chk.exact("airy zeta(" + std::to_string(k) + ") monic of degree k",
                  p.degree() == k && p.leading_coeff() == Rat(1));
    }
    const std::vector<Poly> airy_repeated{
        kappa * kappa, kappa * Poly(Rat(1, 6), Indet::kappa), Poly(Rat(1, 60), Indet::kappa),
        kappa * kappa * Poly(Rat(1, 336), Indet::kappa),
        kappa * Poly(Rat(1, 6480), Indet::kappa)};
    for (int n = 1; n <= 5; ++n)
        chk.exact("airy repeated {2}_" + std::to_string(n),
                  airy_repeated_poly(2, n) == airy_repeated[static_cast<size_t>(n - 1)]);
    for (int n = 1; n <= 8; ++n) {
        const Poly p = airy_repeated_poly(2, n);
        const int residue = n % 3;
        const int expected_degree = residue == 0 ? 0 : (residue == 1 ? 2 : 1);
        chk.exact("airy repeated degree pattern n=" + std::to_string(n),
                  p.degree() == expected_degree);
    }

    // zero-stream evaluations
    const long long n_zeros = opts.terms;
    const ZeroStream pi_zeros = ZeroStream::multiples(kPi, n_zeros);
    const ZeroStream half_zeros = ZeroStream::half_offset(kPi, n_zeros);
    const double zg2 = zerostream_eval(make_index({2}), pi_zeros, n_zeros).real();
    chk.numeric("pi-multiple zeros reproduce zeta(2)", kPi * kPi * zg2,
                zeta_of(make_index({2}), opts), opts.zeros_tol);
    const double tg2 = zerostream_eval(make_index({2}), half_zeros, n_zeros).real();
    chk.numeric("half-offset zeros reproduce t(2)", (kPi / 2) * (kPi / 2) * tg2,
                strict_sum_eval(make_index({2}), EvalConfig{opts.terms, EvalKind::tvalue, 1})
                    .real(),
                opts.zeros_tol);
    chk.numeric("bessel closed form at nu=1/2 vs zeros",
                repeated_closed_form(RepeatedFamily::parse("bessel2", Rat(1, 2)), 1).real(), zg2,
                opts.zeros_tol);
    chk.numeric("bessel2 implies repin1 at n=1",
                std::pow(kPi, 2) *
                    repeated_closed_form(RepeatedFamily::parse("bessel2", Rat(1, 2)), 1).real(),
                repeated_closed_form(RepeatedFamily::parse("zeta2"), 1).real(), opts.tol);
    chk.numeric("bessel4 implies repin2 at n=1",
                std::pow(kPi, 4) *
                    repeated_closed_form(RepeatedFamily::parse("bessel4", Rat(1, 2)), 1).real(),
                repeated_closed_form(RepeatedFamily::parse("zeta4"), 1).real(), opts.tol);

    // three routes to zeta-half(2,2)
    const double route1 = interp_zeta(make_index({2, 2}), Rat(1, 2), opts);
    double route2 = 0.0;  // partition identity with odd parts
    for (const auto& lambda : int_partitions(2)) {
        bool all_odd = true;
        for (int part : lambda.parts) all_odd = all_odd && part % 2 == 1;
        if (!all_odd) continue;
        double term = (Rat(2).pow(2 - lambda.len()) * lambda.z()).inv().to_double();
        for (int part : lambda.parts) term *= zeta_of(make_index({2L * part}), opts);
        route2 += term;
    }
    const double route3 =
        interp_repeated_ratio(RepeatedFamily::parse("zeta2"), Rat(1, 2), 2)[2];
    chk.numeric("zeta-half(2,2) route1 vs route2", route1, route2, opts.tol);
    chk.numeric("zeta-half(2,2) route1 vs route3", route1, route3, opts.tol);
    chk.numeric("zeta-half(2,2) = pi^4/72", route1, std::pow(kPi, 4) / 72, opts.tol);

    // ratio families agree with direct interpolated evaluation
    for (const auto& rv : {Rat(0), Rat(1), Rat(1, 3)}) {
        const auto coeffs = interp_repeated_ratio(RepeatedFamily::parse("zeta2"), rv, 3);
        for (int n = 1; n <= 3; ++n) {
            Index idx;
            for (int i = 0; i < n; ++i) idx.entries.push_back({2, 0});
            chk.numeric("ratio zeta2 r=" + rv.str() + " n=" + std::to_string(n),
                        coeffs[static_cast<size_t>(n)], interp_zeta(idx, rv, opts), opts.tol);
        }
    }
}

void suite_alternating(Checker& chk) {
    const auto& opts = chk.opts();
    const EvalConfig cfg{opts.terms, EvalKind::euler, 2};
    const Alphabet e2 = Alphabet::euler(2);

    chk.numeric("zeta(1bar) = -log 2", strict_sum_eval(make_signed_index({-1}), cfg).real(),
                -std::numbers::ln2, opts.tol);
    const double l2 = std::numbers::ln2;
    chk.numeric("zeta(1bar,1bar) = (log^2 2 - pi^2/6)/2",
                strict_sum_eval(make_signed_index({-1, -1}), cfg).real(),
                (l2 * l2 - kPi * kPi / 6) / 2, opts.tol);
    for (long k = 2; k <= 4; ++k)
        chk.numeric("zeta(" + std::to_string(k) + "bar) = (2^{1-k}-1) zeta(k)",
                    strict_sum_eval(make_signed_index({-k}), cfg).real(),
                    (std::pow(2.0, 1.0 - static_cast<double>(k)) - 1.0) *
                        zeta_of(make_index({k}), opts),
                    opts.tol);

    // symbolic sigma^r expansion of (1bar, 2, 3bar)
    {
        const Word w = index_to_word(e2, make_signed_index({-1, 2, -3}));
        const LinComb expansion = sigma_r_map(LinComb::from_word(e2, w));
        const Poly r = Poly::indet();
        LinComb expect(e2);
        expect.add_term(index_to_word(e2, make_signed_index({-1, 2, -3})), Poly(1));
        expect.add_term(index_to_word(e2, make_signed_index({-3, -3})), r);
        expect.add_term(index_to_word(e2, make_signed_index({-1, -5})), r);
        expect.add_term(index_to_word(e2, make_signed_index({6})), r * r);
        chk.exact_eq("sigma^r expansion of (1bar,2,3bar)", expansion, expect);
    }

    // alternating symmetric-sum reports
    for (const Rat& rv : {Rat(0), Rat(1, 2)}) {
        const SymsumReport rep = zeta_symsum_report({-1, 2, -3}, rv, cfg);
        chk.numeric("alternating symmetric sum (1bar,2,3bar) r=" + rv.str(), rep.lhs, rep.rhs,
                    opts.tol);
    }

    // level-2 stuffle
    {
        const LinComb prod =
            qsh_product(LinComb::from_word(e2, index_to_word(e2, make_signed_index({-1}))),
                        LinComb::from_word(e2, index_to_word(e2, make_signed_index({-2}))));
        chk.numeric("alternating stuffle (1bar)x(2bar)",
                    eval_lincomb(prod.specialize_r(Rat(0)), cfg).value.real(),
                    strict_sum_eval(make_signed_index({-1}), cfg).real() *
                        strict_sum_eval(make_signed_index({-2}), cfg).real(),
                    opts.tol);
    }
}

using SuiteFn = void (*)(Checker&);

const std::vector<std::pair<std::string, SuiteFn>>& suite_table() {
    static const std::vector<std::pair<std::string, SuiteFn>> table{
        {"lemma1", [](Checker& c) { suite_lemma1(c); }},
        {"psi-compose", [](Checker& c) { suite_psi_compose(c); }},
        {"sigma-identities", [](Checker& c) { suite_sigma_identities(c); }},
        {"interp-def", [](Checker& c) { suite_interp_def(c); }},
        {"hopf", [](Checker& c) { suite_hopf(c); }},
        {"symsum", [](Checker& c) { suite_symsum(c); }},
        {"mzv-numeric", [](Checker& c) { suite_mzv_numeric(c); }},
        {"exotic", [](Checker& c) { suite_exotic(c); }},
        {"alternating", [](Checker& c) { suite_alternating(c); }},
    };
    return table;
}

}  // namespace

const std::vector<std::string>& suite_names() {
    static const std::vector<std::string> names = [] {
        std::vector<std::string> out;
        for (const auto& [name, fn] : suite_table()) out.push_back(name);
        out.push_back("all");
        return out;
    }();
    return names;
}

std::vector<SuiteReport> run_suites(const std::string& name, const VerifyOptions& opts) {
    std::vector<SuiteReport> reports;
    for (const auto& [suite, fn] : suite_table()) {
        if (name != "all" && name != suite) continue;
        SuiteReport report;
        report.suite = suite;
        Checker chk(report, opts);
        const auto start = std::chrono::steady_clock::now();
        fn(chk);
        report.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start)
                             .count();
        reports.push_back(std::move(report));
    }
    if (reports.empty()) throw std::invalid_argument("unknown suite: " + name);
    return reports;
}

int report_exit_code(const std::vector<SuiteReport>& reports) {
    bool numeric = false;
    for (const auto& r : reports) {
        if (r.exact_failure) return 1;
        numeric = numeric || r.numeric_failure;
    }
    return numeric ? 3 : 0;
}

}  // namespace qsh
