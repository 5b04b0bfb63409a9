#pragma once

#include <string>
#include <vector>

#include "qsh/rat.hpp"

namespace qsh {

enum class Indet { r, kappa };

std::string indet_name(Indet v);

/// Univariate polynomial over Rat in a tagged indeterminate ("r" or "kappa").
/// Stored lowest degree first with no trailing zero coefficient; the zero
/// polynomial has an empty coefficient list. Arithmetic between different
/// indeterminates is rejected.
class Poly {
public:
    Poly() : var_(Indet::r) {}
    Poly(const Rat& constant, Indet v = Indet::r) : var_(v) {
        if (!constant.is_zero()) c_.push_back(constant);
    }
    Poly(long constant, Indet v = Indet::r) : Poly(Rat(constant), v) {}

    static Poly indet(Indet v = Indet::r) { return from_coeffs({Rat(0), Rat(1)}, v); }
    static Poly from_coeffs(std::vector<Rat> coeffs, Indet v = Indet::r);

    Indet var() const { return var_; }
    const std::vector<Rat>& coeffs() const { return c_; }
    bool is_zero() const { return c_.empty(); }
    bool is_constant() const { return c_.size() <= 1; }
    /// Degree of the zero polynomial is -1.
    int degree() const { return static_cast<int>(c_.size()) - 1; }
    Rat coeff(int k) const {
        return (k >= 0 && k < static_cast<int>(c_.size())) ? c_[k] : Rat(0);
    }
    Rat constant_term() const { return coeff(0); }
    Rat leading_coeff() const { return c_.empty() ? Rat(0) : c_.back(); }

    Poly operator-() const;
    Poly& operator+=(const Poly& o);
    Poly& operator-=(const Poly& o);
    friend Poly operator+(Poly a, const Poly& b) { return a += b; }
    friend Poly operator-(Poly a, const Poly& b) { return a -= b; }
    friend Poly operator*(const Poly& a, const Poly& b);
    Poly& operator*=(const Poly& o) { return *this = *this * o; }

    friend bool operator==(const Poly& a, const Poly& b) {
        return a.var_ == b.var_ && a.c_ == b.c_;
    }
    friend bool operator!=(const Poly& a, const Poly& b) { return !(a == b); }

    /// Exact Horner evaluation.
    Rat eval(const Rat& x) const;
    /// p(q): substitute q for the indeterminate; result uses q's tag.
    Poly compose(const Poly& q) const;
    Poly pow(long e) const;

    /// Canonical text form, e.g. "1 - 2r + r^2" or "-1/3".
    std::string str() const;

private:
    void trim();
    static void check_same_var(const Poly& a, const Poly& b);

    Indet var_;
    std::vector<Rat> c_;
};

}  // namespace qsh
