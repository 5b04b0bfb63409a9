#include "qsh/mzv.hpp"

#include <cstdlib>
#include <functional>
#include <stdexcept>

namespace qsh {

Index make_index(std::initializer_list<long> weights) {
    Index idx;
    for (long w : weights) idx.entries.push_back({w, 0});
    return idx;
}

Index make_signed_index(std::initializer_list<long> entries) {
    Index idx;
    for (long e : entries) {
        if (e == 0) throw std::invalid_argument("index entries must be nonzero");
        idx.entries.push_back({e > 0 ? e : -e, e > 0 ? 0 : 1});
    }
    return idx;
}

Word index_to_word(const Alphabet& alpha, const Index& idx) {
    Word w;
    w.reserve(idx.entries.size());
    for (const auto& e : idx.entries) {
        Letter l = alpha.kind == AlphabetKind::euler ? euler_letter(e.weight, e.color, alpha.level)
                                                     : mzv_letter(e.weight);
        check_letter(alpha, l);
        w.push_back(std::move(l));
    }
    return w;
}

Index word_to_index(const Word& w) {
    Index idx;
    for (const auto& l : w) {
        if (!l.gens.empty())
            throw std::invalid_argument("free-multiset words have no index form");
        idx.entries.push_back({l.weight, l.color});
    }
    return idx;
}

bool admissible(const Index& idx) {
    if (idx.entries.empty()) return false;
    const auto& first = idx.entries.front();
    return !(first.weight == 1 && first.color == 0);
}

std::string to_xy(const Word& w) {
    std::string s;
    for (const auto& l : w) {
        if (l.weight < 1 || !l.gens.empty() || l.color != 0)
            throw std::invalid_argument("x-y encoding is defined for plain mzv words");
        s.append(static_cast<size_t>(l.weight - 1), 'x');
        s.push_back('y');
    }
    return s;
}

Word from_xy(const std::string& u) {
    if (!u.empty() && u.back() != 'y')
        throw std::invalid_argument("x-y word must end in y");
    Word w;
    long run = 0;
    for (char ch : u) {
        if (ch == 'x') {
            ++run;
        } else if (ch == 'y') {
            w.push_back(mzv_letter(run + 1));
            run = 0;
        } else {
            throw std::invalid_argument("x-y word may only contain 'x' and 'y'");
        }
    }
    return w;
}

Word tau(const Word& w) {
    if (!w.empty() && !admissible(word_to_index(w)))
        throw std::invalid_argument("duality needs an admissible word");
    std::string s = to_xy(w);
    std::string t(s.rbegin(), s.rend());
    for (char& ch : t) ch = (ch == 'x') ? 'y' : 'x';
    return from_xy(t);
}

LinComb cyclic_sum(const Alphabet& alpha, const Word& w) {
    if (w.empty()) throw std::invalid_argument("cyclic sum of the empty word");
    if (alpha.kind != AlphabetKind::mzv)
        throw std::invalid_argument("cyclic sum is defined on the mzv alphabet");
    const size_t k = w.size();
    LinComb out(alpha);
    for (size_t j = 0; j < k; ++j) {
        Word term;
        term.reserve(k);
        term.push_back(mzv_letter(w[j].weight + 1));
        for (size_t s = 1; s < k; ++s) term.push_back(w[(j + s) % k]);
        out.add_term(std::move(term), Poly(1));
    }
    return out;
}

std::pair<Word, Word> two_one_pair(const std::vector<long>& j) {
    if (j.empty() || j.front() < 1)
        throw std::invalid_argument("two-one sequence needs j_1 >= 1");
    for (long v : j)
        if (v < 0) throw std::invalid_argument("two-one entries must be nonnegative");
    Word star_side, half_side;
    for (long v : j) {
        for (long s = 0; s < v; ++s) star_side.push_back(mzv_letter(2));
        star_side.push_back(mzv_letter(1));
        half_side.push_back(mzv_letter(2 * v + 1));
    }
    return {star_side, half_side};
}

std::vector<Index> sum_theorem_indices(int n, int l) {
    if (n < 2 || l < 1 || l > n - 1)
        throw std::invalid_argument("sum theorem needs n >= 2 and 1 <= l <= n-1");
    std::vector<Index> out;
    Index cur;
    std::function<void(int, int)> rec = [&](int rest, int parts) {
        if (parts == 1) {
            cur.entries.push_back({static_cast<long>(rest), 0});
            out.push_back(cur);
            cur.entries.pop_back();
            return;
        }
        for (int first = (cur.entries.empty() ? 2 : 1); first <= rest - (parts - 1); ++first) {
            cur.entries.push_back({static_cast<long>(first), 0});
            rec(rest - first, parts - 1);
            cur.entries.pop_back();
        }
    };
    if (l == 1) {
        out.push_back(make_index({n}));
        return out;
    }
    rec(n, l);
    return out;
}

Poly interp_sum_rhs(int n, int l) {
    if (n < 2 || l < 1 || l > n - 1)
        throw std::invalid_argument("sum theorem needs n >= 2 and 1 <= l <= n-1");
    std::vector<Rat> coeffs;
    for (int k = 0; k <= l - 1; ++k) coeffs.push_back(Rat::binomial(n - l - 1 + k, k));
    return Poly::from_coeffs(std::move(coeffs));
}

static void check_totally_odd_args(int n, int l) {
    if (n <= 2 || l <= 0 || l >= n || (n - l) % 2 != 0)
        throw std::invalid_argument("totally odd sum theorem needs n > 2, 0 < l < n, same parity");
}

std::vector<Index> totally_odd_indices(int n, int l) {
    check_totally_odd_args(n, l);
    std::vector<Index> out;
    Index cur;
    std::function<void(int, int)> rec = [&](int rest, int parts) {
        if (parts == 0) {
            if (rest == 0) out.push_back(cur);
            return;
        }
        const bool first = cur.entries.empty();
        for (int a = first ? 3 : 1; a <= rest - (parts - 1); a += 2) {
            cur.entries.push_back({static_cast<long>(a), 0});
            rec(rest - a, parts - 1);
            cur.entries.pop_back();
        }
    };
    rec(n, l);
    return out;
}

Rat totally_odd_rhs(int n, int l) {
    check_totally_odd_args(n, l);
    return Rat(n - 1, n - l) * Rat::binomial((n + l) / 2 - 2, l - 1) / Rat(2).pow(l - 1);
}

Rat totally_odd_rhs_alt(int n, int l) {
    check_totally_odd_args(n, l);
    return Rat(n - 1, (n + l) / 2 - 1) * Rat::binomial((n + l) / 2 - 1, l - 1) / Rat(2).pow(l);
}

long signed_index_add(long a, long b) {
    if (a == 0 || b == 0) throw std::invalid_argument("signed index entries must be nonzero");
    const long sum = std::abs(a) + std::abs(b);
    const bool barred = (a < 0) != (b < 0);
    return barred ? -sum : sum;
}

}  // namespace qsh
