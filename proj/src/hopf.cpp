#include "qsh/hopf.hpp"

namespace qsh {

TensorComb coproduct(const LinComb& x) {
    TensorComb out(x.alphabet());
    for (const auto& [w, c] : x.terms())
        for (size_t j = 0; j <= w.size(); ++j)
            out.add_term(Word(w.begin(), w.begin() + j), Word(w.begin() + j, w.end()), c);
    return out;
}

Poly counit(const LinComb& x) { return x.coeff(Word{}); }

LinComb antipode(const LinComb& x, const Poly& r_param) {
    const Poly exponent = Poly(1) - Poly(2) * r_param;
    return sigma_pow_map(t_map(r_map(x)), exponent);
}

TensorComb tensor_product(ProductKind kind, const TensorComb& a, const TensorComb& b) {
    TensorComb out(a.alphabet());
    for (const auto& [pa, ca] : a.terms())
        for (const auto& [pb, cb] : b.terms()) {
            LinComb left = product(kind, LinComb::from_word(a.alphabet(), pa.first),
                                   LinComb::from_word(a.alphabet(), pb.first));
            LinComb right = product(kind, LinComb::from_word(a.alphabet(), pa.second),
                                    LinComb::from_word(a.alphabet(), pb.second));
            const Poly factor = ca * cb;
            for (const auto& [lw, lc] : left.terms())
                for (const auto& [rw, rc] : right.terms())
                    out.add_term(lw, rw, factor * lc * rc);
        }
    return out;
}

bool hopf_axiom_check(const Word& w, const Alphabet& alpha, ProductKind kind,
                      bool antipode_on_left) {
    Poly r_param = Poly::indet(Indet::r);
    if (kind == ProductKind::quasi_shuffle) r_param = Poly(0);
    if (kind == ProductKind::star) r_param = Poly(1);
    if (kind == ProductKind::shuffle)
        throw std::invalid_argument("antipode axiom check covers qsh/star/interp products");

    const LinComb x = LinComb::from_word(alpha, w);
    const TensorComb split = coproduct(x);
    LinComb acc(alpha);
    for (const auto& [pair, c] : split.terms()) {
        LinComb left = LinComb::from_word(alpha, pair.first);
        LinComb right = LinComb::from_word(alpha, pair.second);
        if (antipode_on_left)
            left = antipode(left, r_param);
        else
            right = antipode(right, r_param);
        acc += product(kind, left, right).scaled(c);
    }
    LinComb expected(alpha);
    expected.add_term(Word{}, counit(x));
    return acc == expected;
}

bool coproduct_multiplicativity_check(const Word& u, const Word& v, const Alphabet& alpha,
                                      ProductKind kind) {
    const LinComb cu = LinComb::from_word(alpha, u);
    const LinComb cv = LinComb::from_word(alpha, v);
    const TensorComb lhs = coproduct(product(kind, cu, cv));
    const TensorComb rhs = tensor_product(kind, coproduct(cu), coproduct(cv));
    return lhs == rhs;
}

}  // namespace qsh
