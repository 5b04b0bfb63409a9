#include "qsh/rat.hpp"

namespace qsh {

Rat Rat::parse(const std::string& text) {
    if (text.empty()) throw std::invalid_argument("empty rational literal");
    auto slash = text.find('/');
    try {
        if (slash == std::string::npos) {
            mpq_class q{mpz_class(text)};
            return Rat(std::move(q));
        }
        mpz_class num(text.substr(0, slash));
        mpz_class den(text.substr(slash + 1));
        if (den == 0) throw std::domain_error("rational with zero denominator");
        mpq_class q(num, den);
        q.canonicalize();
        return Rat(std::move(q));
    } catch (const std::invalid_argument&) {
        throw std::invalid_argument("malformed rational literal: " + text);
    }
}

std::string Rat::str() const {
    if (q_.get_den() == 1) return q_.get_num().get_str();
    return q_.get_num().get_str() + "/" + q_.get_den().get_str();
}

Rat Rat::pow(long e) const {
    if (e < 0) return inv().pow(-e);
    Rat result(1);
    Rat base = *this;
    while (e > 0) {
        if (e & 1) result *= base;
        base *= base;
        e >>= 1;
    }
    return result;
}

Rat Rat::factorial(long n) {
    if (n < 0) throw std::invalid_argument("factorial of negative integer");
    mpz_class f;
    mpz_fac_ui(f.get_mpz_t(), static_cast<unsigned long>(n));
    return Rat(mpq_class(f));
}

Rat Rat::binomial(long n, long k) {
    if (k < 0 || k > n) return Rat(0);
    mpz_class b;
    mpz_bin_uiui(b.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
    return Rat(mpq_class(b));
}

}  // namespace qsh
