#include "qsh/poly.hpp"

#include <sstream>

namespace qsh {

std::string indet_name(Indet v) { return v == Indet::r ? "r" : "kappa"; }

Poly Poly::from_coeffs(std::vector<Rat> coeffs, Indet v) {
    Poly p;
    p.var_ = v;
    p.c_ = std::move(coeffs);
    p.trim();
    return p;
}

void Poly::trim() {
    while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
}

void Poly::check_same_var(const Poly& a, const Poly& b) {
    if (a.var_ != b.var_)
        throw std::invalid_argument("mixed indeterminates: " + indet_name(a.var_) + " vs " +
                                    indet_name(b.var_));
}

Poly Poly::operator-() const {
    Poly p = *this;
    for (auto& c : p.c_) c = -c;
    return p;
}

Poly& Poly::operator+=(const Poly& o) {
    check_same_var(*this, o);
    if (o.c_.size() > c_.size()) c_.resize(o.c_.size(), Rat(0));
    for (size_t i = 0; i < o.c_.size(); ++i) c_[i] += o.c_[i];
    trim();
    return *this;
}

Poly& Poly::operator-=(const Poly& o) {
    check_same_var(*this, o);
    if (o.c_.size() > c_.size()) c_.resize(o.c_.size(), Rat(0));
    for (size_t i = 0; i < o.c_.size(); ++i) c_[i] -= o.c_[i];
    trim();
    return *this;
}

Poly operator*(const Poly& a, const Poly& b) {
    Poly::check_same_var(a, b);
    if (a.is_zero() || b.is_zero()) return Poly(0, a.var_);
    std::vector<Rat> prod(a.c_.size() + b.c_.size() - 1, Rat(0));
    for (size_t i = 0; i < a.c_.size(); ++i)
        for (size_t j = 0; j < b.c_.size(); ++j) prod[i + j] += a.c_[i] * b.c_[j];
    return Poly::from_coeffs(std::move(prod), a.var_);
}

Rat Poly::eval(const Rat& x) const {
    Rat acc(0);
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * x + *it;
    return acc;
}

Poly Poly::compose(const Poly& q) const {
    Poly acc(0, q.var());
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * q + Poly(*it, q.var());
    return acc;
}

Poly Poly::pow(long e) const {
    if (e < 0) throw std::invalid_argument("negative polynomial power");
    Poly result(1, var_);
    Poly base = *this;
    while (e > 0) {
        if (e & 1) result *= base;
        base *= base;
        e >>= 1;
    }
    return result;
}

std::string Poly::str() const {
    if (is_zero()) return "0";
    std::ostringstream out;
    const std::string v = indet_name(var_);
    bool first = true;
    for (size_t i = 0; i < c_.size(); ++i) {
        if (c_[i].is_zero()) continue;
        Rat a = c_[i];
        if (first) {
            if (a.sign() < 0) {
                out << "-";
                a = -a;
            }
        } else {
            out << (a.sign() < 0 ? " - " : " + ");
            if (a.sign() < 0) a = -a;
        }
        if (i == 0) {
            out << a.str();
        } else {
            if (!a.is_one()) out << a.str();
            out << v;
            if (i > 1) out << "^" << i;
        }
        first = false;
    }
    return out.str();
}

}  // namespace qsh
