#pragma once

#include <map>
#include <stdexcept>

#include "qsh/poly.hpp"
#include "qsh/words.hpp"

namespace qsh {

/// Finite formal sum of words with Poly coefficients in the indeterminate r.
/// No explicit zero terms; words iterate in lexicographic letter order, so
/// rendering and hashing are deterministic.
class LinComb {
public:
    explicit LinComb(Alphabet a) : alphabet_(std::move(a)) {}

    static LinComb zero(Alphabet a) { return LinComb(std::move(a)); }
    static LinComb unit(Alphabet a) {
        LinComb x(std::move(a));
        x.add_term(Word{}, Poly(1));
        return x;
    }
    static LinComb from_word(Alphabet a, Word w, Poly coeff = Poly(1)) {
        LinComb x(std::move(a));
        for (const auto& l : w) check_letter(x.alphabet_, l);
        x.add_term(std::move(w), std::move(coeff));
        return x;
    }
    static LinComb from_letter(Alphabet a, Letter l, Poly coeff = Poly(1)) {
        return from_word(std::move(a), Word{std::move(l)}, std::move(coeff));
    }

    const Alphabet& alphabet() const { return alphabet_; }
    const std::map<Word, Poly>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    size_t size() const { return terms_.size(); }

    int max_word_len() const {
        size_t m = 0;
        for (const auto& [w, c] : terms_) m = std::max(m, w.size());
        return static_cast<int>(m);
    }

    Poly coeff(const Word& w) const {
        auto it = terms_.find(w);
        return it == terms_.end() ? Poly(0) : it->second;
    }

    void add_term(Word w, Poly c) {
        if (c.is_zero()) return;
        auto it = terms_.find(w);
        if (it == terms_.end()) {
            terms_.emplace(std::move(w), std::move(c));
        } else {
            it->second += c;
            if (it->second.is_zero()) terms_.erase(it);
        }
    }

    LinComb& operator+=(const LinComb& o) {
        check_same_alphabet(o);
        for (const auto& [w, c] : o.terms_) add_term(w, c);
        return *this;
    }
    LinComb& operator-=(const LinComb& o) {
        check_same_alphabet(o);
        for (const auto& [w, c] : o.terms_) add_term(w, -c);
        return *this;
    }
    friend LinComb operator+(LinComb a, const LinComb& b) { return a += b; }
    friend LinComb operator-(LinComb a, const LinComb& b) { return a -= b; }

    LinComb scaled(const Poly& f) const {
        LinComb out(alphabet_);
        if (f.is_zero()) return out;
        for (const auto& [w, c] : terms_) out.add_term(w, c * f);
        return out;
    }

    /// Specialize the interpolation parameter r to a rational; coefficients
    /// stay Poly values but become constants.
    LinComb specialize_r(const Rat& x) const {
        LinComb out(alphabet_);
        for (const auto& [w, c] : terms_) out.add_term(w, Poly(c.eval(x)));
        return out;
    }

    friend bool operator==(const LinComb& a, const LinComb& b) {
        return a.alphabet_ == b.alphabet_ && a.terms_ == b.terms_;
    }
    friend bool operator!=(const LinComb& a, const LinComb& b) { return !(a == b); }

    void check_same_alphabet(const LinComb& o) const {
        if (!(alphabet_ == o.alphabet_))
            throw std::invalid_argument("alphabet mismatch: " + alphabet_.describe() + " vs " +
                                        o.alphabet_.describe());
    }

private:
    Alphabet alphabet_;
    std::map<Word, Poly> terms_;
};

}  // namespace qsh
