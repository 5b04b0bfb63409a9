#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <stdexcept>
#include <string>

namespace qsh {

/// Exact rational number, always reduced, denominator > 0. Canonical zero is 0/1.
class Rat {
public:
    Rat() : q_(0) {}
    Rat(long n) : q_(n) {}
    Rat(long num, long den) {
        if (den == 0) throw std::domain_error("rational with zero denominator");
        q_ = mpq_class(num, den);
        q_.canonicalize();
    }
    explicit Rat(mpq_class q) : q_(std::move(q)) { q_.canonicalize(); }

    /// Accepts "p" or "p/q", optionally signed.
    static Rat parse(const std::string& text);

    bool is_zero() const { return sgn(q_) == 0; }
    bool is_one() const { return q_ == 1; }
    int sign() const { return sgn(q_); }
    bool is_integer() const { return q_.get_den() == 1; }

    std::string num_str() const { return q_.get_num().get_str(); }
    std::string den_str() const { return q_.get_den().get_str(); }
    /// "p" when the denominator is 1, otherwise "p/q".
    std::string str() const;

    double to_double() const { return q_.get_d(); }

    Rat operator-() const { return Rat(mpq_class(-q_)); }
    Rat& operator+=(const Rat& o) { q_ += o.q_; return *this; }
    Rat& operator-=(const Rat& o) { q_ -= o.q_; return *this; }
    Rat& operator*=(const Rat& o) { q_ *= o.q_; return *this; }
    Rat& operator/=(const Rat& o) {
        if (o.is_zero()) throw std::domain_error("rational division by zero");
        q_ /= o.q_;
        return *this;
    }

    friend Rat operator+(Rat a, const Rat& b) { return a += b; }
    friend Rat operator-(Rat a, const Rat& b) { return a -= b; }
    friend Rat operator*(Rat a, const Rat& b) { return a *= b; }
    friend Rat operator/(Rat a, const Rat& b) { return a /= b; }

    friend bool operator==(const Rat& a, const Rat& b) { return a.q_ == b.q_; }
    friend bool operator!=(const Rat& a, const Rat& b) { return a.q_ != b.q_; }
    friend bool operator<(const Rat& a, const Rat& b) { return a.q_ < b.q_; }

    Rat inv() const {
        if (is_zero()) throw std::domain_error("inverse of zero");
        return Rat(mpq_class(1) / q_);
    }
    Rat pow(long e) const;

    static Rat factorial(long n);
    static Rat binomial(long n, long k);

private:
    mpq_class q_;
};

}  // namespace qsh
