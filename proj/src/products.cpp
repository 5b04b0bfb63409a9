#include "qsh/products.hpp"

namespace qsh {

ProductKind product_kind_from_name(const std::string& name) {
    if (name == "sh" || name == "shuffle") return ProductKind::shuffle;
    if (name == "qsh" || name == "quasi-shuffle") return ProductKind::quasi_shuffle;
    if (name == "star") return ProductKind::star;
    if (name == "interp") return ProductKind::interp;
    throw std::invalid_argument("unknown product: " + name);
}

LinComb prepend(const Letter& a, const LinComb& x) {
    LinComb out(x.alphabet());
    for (const auto& [w, c] : x.terms()) {
        Word pw;
        pw.reserve(w.size() + 1);
        pw.push_back(a);
        pw.insert(pw.end(), w.begin(), w.end());
        out.add_term(std::move(pw), c);
    }
    return out;
}

LinComb diamond_extend(const Letter& a, const LinComb& x) {
    LinComb out(x.alphabet());
    for (const auto& [w, c] : x.terms()) {
        if (w.empty())
            throw std::invalid_argument("diamond_extend hit an empty word");
        Word dw = w;
        dw.front() = diamond(x.alphabet(), a, w.front());
        out.add_term(std::move(dw), c);
    }
    return out;
}

namespace {

// w * v on bare words via the defining recursion; with_diamond = false gives
// the shuffle.
LinComb word_qsh(const Alphabet& alpha, const Word& u, const Word& v, bool with_diamond) {
    if (u.empty()) return LinComb::from_word(alpha, v);
    if (v.empty()) return LinComb::from_word(alpha, u);
    const Letter& a = u.front();
    const Letter& b = v.front();
    Word u_tail(u.begin() + 1, u.end());
    Word v_tail(v.begin() + 1, v.end());

    LinComb out = prepend(a, word_qsh(alpha, u_tail, v, with_diamond));
    out += prepend(b, word_qsh(alpha, u, v_tail, with_diamond));
    if (with_diamond)
        out += prepend(diamond(alpha, a, b), word_qsh(alpha, u_tail, v_tail, with_diamond));
    return out;
}

LinComb word_interp(const Alphabet& alpha, const Word& u, const Word& v) {
    if (u.empty()) return LinComb::from_word(alpha, v);
    if (v.empty()) return LinComb::from_word(alpha, u);

    const Poly r = Poly::indet(Indet::r);
    const Poly one_minus_2r = Poly(1) - Poly(2) * r;
    const Letter& a = u.front();
    const Letter& b = v.front();
    const Letter ab = diamond(alpha, a, b);

    if (u.size() == 1 && v.size() == 1) {
        LinComb out(alpha);
        out.add_term(Word{a, b}, Poly(1));
        out.add_term(Word{b, a}, Poly(1));
        out.add_term(Word{ab}, one_minus_2r);
        return out;
    }

    Word u_tail(u.begin() + 1, u.end());
    Word v_tail(v.begin() + 1, v.end());

    LinComb inner = word_interp(alpha, u_tail, v_tail);  // v ⋄ w, words all nonempty
    LinComb out = prepend(a, word_interp(alpha, u_tail, v));
    out += prepend(b, word_interp(alpha, u, v_tail));
    out += prepend(ab, inner).scaled(one_minus_2r);
    out += diamond_extend(ab, inner).scaled(r * r - r);
    return out;
}

template <typename WordProduct>
LinComb bilinear(const LinComb& u, const LinComb& v, WordProduct&& wp) {
    u.check_same_alphabet(v);
    LinComb out(u.alphabet());
    for (const auto& [uw, uc] : u.terms())
        for (const auto& [vw, vc] : v.terms()) {
            LinComb part = wp(u.alphabet(), uw, vw);
            out += part.scaled(uc * vc);
        }
    return out;
}

}  // namespace

LinComb qsh_product(const LinComb& u, const LinComb& v) {
    return bilinear(u, v, [](const Alphabet& a, const Word& x, const Word& y) {
        return word_qsh(a, x, y, true);
    });
}

LinComb shuffle_product(const LinComb& u, const LinComb& v) {
    return bilinear(u, v, [](const Alphabet& a, const Word& x, const Word& y) {
        return word_qsh(a, x, y, false);
    });
}

LinComb interp_product(const LinComb& u, const LinComb& v) {
    return bilinear(u, v, [](const Alphabet& a, const Word& x, const Word& y) {
        return word_interp(a, x, y);
    });
}

LinComb star_product(const LinComb& u, const LinComb& v) {
    return interp_product(u, v).specialize_r(Rat(1));
}

LinComb concat_product(const LinComb& u, const LinComb& v) {
    u.check_same_alphabet(v);
    LinComb out(u.alphabet());
    for (const auto& [uw, uc] : u.terms())
        for (const auto& [vw, vc] : v.terms()) {
            Word w = uw;
            w.insert(w.end(), vw.begin(), vw.end());
            out.add_term(std::move(w), uc * vc);
        }
    return out;
}

LinComb product(ProductKind kind, const LinComb& u, const LinComb& v) {
    switch (kind) {
        case ProductKind::shuffle: return shuffle_product(u, v);
        case ProductKind::quasi_shuffle: return qsh_product(u, v);
        case ProductKind::star: return star_product(u, v);
        case ProductKind::interp: return interp_product(u, v);
    }
    throw std::logic_error("unreachable");
}

}  // namespace qsh
