#include "qsh/symsum.hpp"

#include <algorithm>
#include <functional>
#include <numeric>

namespace qsh {

std::vector<SetPartition> set_partitions(int n) {
    if (n < 1 || n > 10) throw std::invalid_argument("set partitions supported for 1 <= n <= 10");
    // restricted growth strings; blocks come out ordered by smallest element
    std::vector<SetPartition> out;
    std::vector<int> assign(static_cast<size_t>(n), 0);
    std::function<void(int, int)> rec = [&](int i, int max_used) {
        if (i == n) {
            SetPartition p;
            p.blocks.resize(static_cast<size_t>(max_used));
            for (int j = 0; j < n; ++j)
                p.blocks[static_cast<size_t>(assign[static_cast<size_t>(j)])].push_back(j + 1);
            out.push_back(std::move(p));
            return;
        }
        for (int b = 0; b <= max_used; ++b) {
            assign[static_cast<size_t>(i)] = b;
            rec(i + 1, std::max(max_used, b + 1));
        }
    };
    rec(0, 0);
    return out;
}

Rat IntPartition::z() const {
    Rat v(1);
    for (int i = 1; i <= (parts.empty() ? 0 : parts.front()); ++i) {
        const int m = multiplicity(i);
        if (m > 0) v *= Rat::factorial(m) * Rat(i).pow(m);
    }
    return v;
}

std::vector<IntPartition> int_partitions(int n) {
    if (n < 0) throw std::invalid_argument("partitions of a negative integer");
    std::vector<IntPartition> out;
    IntPartition cur;
    std::function<void(int, int)> rec = [&](int rest, int max_part) {
        if (rest == 0) {
            out.push_back(cur);
            return;
        }
        for (int p = std::min(rest, max_part); p >= 1; --p) {
            cur.parts.push_back(p);
            rec(rest - p, p);
            cur.parts.pop_back();
        }
    };
    rec(n, n);
    return out;
}

Poly p_a(int a) {
    if (a < 1) throw std::invalid_argument("p_a needs a >= 1");
    const Poly r = Poly::indet(Indet::r);
    const Poly one_minus_r = Poly(1) - r;
    return one_minus_r.pow(a) - (-r).pow(a);
}

Poly c_r_coeff(const SetPartition& B) {
    const int n = B.size();
    const int l = static_cast<int>(B.blocks.size());
    Poly out((n - l) % 2 == 0 ? Rat(1) : Rat(-1));
    for (const auto& block : B.blocks) {
        const int card = static_cast<int>(block.size());
        out *= Poly(Rat::factorial(card - 1)) * p_a(card);
    }
    return out;
}

namespace {

Letter diamond_block(const Alphabet& alpha, const std::vector<Letter>& letters,
                     const std::vector<int>& block) {
    Letter acc = letters[static_cast<size_t>(block.front() - 1)];
    for (size_t i = 1; i < block.size(); ++i)
        acc = diamond(alpha, acc, letters[static_cast<size_t>(block[i] - 1)]);
    return acc;
}

}  // namespace

std::pair<LinComb, LinComb> symmetric_sum_sides(const Alphabet& alpha,
                                                const std::vector<Letter>& letters) {
    const int n = static_cast<int>(letters.size());
    if (n < 1 || n > 7) throw std::invalid_argument("symmetric sum supported for 1 <= n <= 7");
    for (const auto& l : letters) check_letter(alpha, l);

    LinComb lhs(alpha);
    std::vector<int> perm(static_cast<size_t>(n));
    std::iota(perm.begin(), perm.end(), 0);
    do {
        Word w;
        w.reserve(static_cast<size_t>(n));
        for (int i : perm) w.push_back(letters[static_cast<size_t>(i)]);
        lhs.add_term(std::move(w), Poly(1));
    } while (std::next_permutation(perm.begin(), perm.end()));

    LinComb rhs(alpha);
    for (const auto& B : set_partitions(n)) {
        LinComb prod = LinComb::unit(alpha);
        for (const auto& block : B.blocks)
            prod = interp_product(prod, LinComb::from_letter(alpha, diamond_block(alpha, letters, block)));
        rhs += prod.scaled(c_r_coeff(B));
    }
    return {std::move(lhs), std::move(rhs)};
}

std::pair<LinComb, LinComb> repeated_power_sides(const Alphabet& alpha, const Letter& u, int n) {
    if (n < 1 || n > 8) throw std::invalid_argument("repeated power supported for 1 <= n <= 8");
    check_letter(alpha, u);

    LinComb lhs = LinComb::from_word(alpha, Word(static_cast<size_t>(n), u));

    LinComb rhs(alpha);
    for (const auto& lambda : int_partitions(n)) {
        Poly coeff(lambda.eps() / lambda.z());
        LinComb prod = LinComb::unit(alpha);
        for (int part : lambda.parts) {
            coeff *= p_a(part);
            Letter power = u;
            for (int j = 1; j < part; ++j) power = diamond(alpha, power, u);
            prod = interp_product(prod, LinComb::from_letter(alpha, power));
        }
        rhs += prod.scaled(coeff);
    }
    return {std::move(lhs), std::move(rhs)};
}

SymsumReport zeta_symsum_report(const std::vector<long>& keys, const Rat& r,
                                const EvalConfig& cfg) {
    const int n = static_cast<int>(keys.size());
    if (n < 1 || n > 6) throw std::invalid_argument("numeric symmetric sum supported for n <= 6");
    const bool signed_entries = std::any_of(keys.begin(), keys.end(), [](long k) { return k < 0; });

    EvalConfig local = cfg;
    if (signed_entries) {
        local.kind = EvalKind::euler;
        local.level = 2;
    }
    for (long k : keys) {
        if (k == 0) throw std::invalid_argument("index entries must be nonzero");
        if (!signed_entries && k < 2)
            throw std::invalid_argument("plain symmetric sums need all keys >= 2");
    }

    auto entry_of = [](long k) {
        return IndexEntry{k > 0 ? k : -k, k > 0 ? 0 : 1};
    };

    SymsumReport report;
    report.terms = local.terms;

    std::vector<int> perm(static_cast<size_t>(n));
    std::iota(perm.begin(), perm.end(), 0);
    do {
        Index idx;
        for (int i : perm) idx.entries.push_back(entry_of(keys[static_cast<size_t>(i)]));
        const EvalResult v = interp_eval(idx, r, local);
        report.lhs += v.value.real();
        report.tail += v.tail;
    } while (std::next_permutation(perm.begin(), perm.end()));

    for (const auto& B : set_partitions(n)) {
        double prod = c_r_coeff(B).eval(r).to_double();
        for (const auto& block : B.blocks) {
            long acc = keys[static_cast<size_t>(block.front() - 1)];
            for (size_t i = 1; i < block.size(); ++i)
                acc = signed_index_add(acc, keys[static_cast<size_t>(block[i] - 1)]);
            Index single;
            single.entries.push_back(entry_of(acc));
            const EvalResult v = strict_sum_eval(single, local);
            prod *= v.value.real();
            report.tail += std::abs(prod) * v.tail;  // crude propagation
        }
        report.rhs += prod;
    }
    report.diff = std::abs(report.lhs - report.rhs);
    return report;
}

}  // namespace qsh
