#pragma once

#include "qsh/psimaps.hpp"

namespace qsh {

/// Formal sum of word⊗word pairs with Poly coefficients.
class TensorComb {
public:
    explicit TensorComb(Alphabet a) : alphabet_(std::move(a)) {}

    const Alphabet& alphabet() const { return alphabet_; }
    const std::map<std::pair<Word, Word>, Poly>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }

    void add_term(Word left, Word right, Poly c) {
        if (c.is_zero()) return;
        auto key = std::make_pair(std::move(left), std::move(right));
        auto it = terms_.find(key);
        if (it == terms_.end()) {
            terms_.emplace(std::move(key), std::move(c));
        } else {
            it->second += c;
            if (it->second.is_zero()) terms_.erase(it);
        }
    }

    TensorComb& operator+=(const TensorComb& o) {
        for (const auto& [p, c] : o.terms_) add_term(p.first, p.second, c);
        return *this;
    }

    friend bool operator==(const TensorComb& a, const TensorComb& b) {
        return a.alphabet_ == b.alphabet_ && a.terms_ == b.terms_;
    }

private:
    Alphabet alphabet_;
    std::map<std::pair<Word, Word>, Poly> terms_;
};

/// Deconcatenation: Δ(a_1…a_n) = Σ_j a_1…a_j ⊗ a_{j+1}…a_n.
TensorComb coproduct(const LinComb& x);

/// Coefficient of the empty word.
Poly counit(const LinComb& x);

/// Antipode Σ^{1-2r} T R at a symbolic or specialized interpolation parameter.
LinComb antipode(const LinComb& x, const Poly& r_param = Poly::indet(Indet::r));

/// Componentwise product of tensors: (a⊗b)(c⊗d) = (a•c)⊗(b•d).
TensorComb tensor_product(ProductKind kind, const TensorComb& a, const TensorComb& b);

/// Convolution antipode axiom m∘(S⊗id)∘Δ(w) = ε(w)·1 (or the id⊗S side).
/// The interp kind runs with symbolic r.
bool hopf_axiom_check(const Word& w, const Alphabet& alpha, ProductKind kind,
                      bool antipode_on_left = true);

/// Δ(u•v) = Δ(u)•Δ(v), exact, symbolic r for the interp kind.
bool coproduct_multiplicativity_check(const Word& u, const Word& v, const Alphabet& alpha,
                                      ProductKind kind);

}  // namespace qsh
