#pragma once

#include "qsh/products.hpp"
#include "qsh/zeval.hpp"

namespace qsh {

/// Partition of {1,...,n} into disjoint nonempty blocks, ordered by smallest
/// element.
struct SetPartition {
    std::vector<std::vector<int>> blocks;

    int size() const {
        int n = 0;
        for (const auto& b : blocks) n += static_cast<int>(b.size());
        return n;
    }
};

/// All set partitions of {1,...,n}; count = Bell(n). Requires 1 <= n <= 10.
std::vector<SetPartition> set_partitions(int n);

/// Integer partition λ ⊢ n, parts nonincreasing.
struct IntPartition {
    std::vector<int> parts;

    int n() const {
        int s = 0;
        for (int p : parts) s += p;
        return s;
    }
    int len() const { return static_cast<int>(parts.size()); }
    int multiplicity(int i) const {
        return static_cast<int>(std::count(parts.begin(), parts.end(), i));
    }
    /// ε_λ = (-1)^{n - ℓ(λ)}
    Rat eps() const { return (n() - len()) % 2 == 0 ? Rat(1) : Rat(-1); }
    /// z_λ = Π m_i(λ)! i^{m_i(λ)}
    Rat z() const;
};

std::vector<IntPartition> int_partitions(int n);

/// p_a(r) = (1-r)^a - (-r)^a
Poly p_a(int a);

/// c_r(B) = (-1)^{n-l} Π (card B_m - 1)! p_{card B_m}(r)
Poly c_r_coeff(const SetPartition& B);

/// Theorem of the symmetric sums, both sides with symbolic r:
///   LHS = Σ_{σ} u_{σ(1)}...u_{σ(n)}
///   RHS = Σ_{B ∈ Π_n} c_r(B) · ⋄-product of the diamonded blocks
std::pair<LinComb, LinComb> symmetric_sum_sides(const Alphabet& alpha,
                                                const std::vector<Letter>& letters);

/// Repeated-letter corollary: u^n versus Σ_{λ⊢n} (ε_λ/z_λ) Π p_{λ_j}(r) ·
/// ⋄-product of the diamond powers u^{◇λ_j}.
std::pair<LinComb, LinComb> repeated_power_sides(const Alphabet& alpha, const Letter& u, int n);

struct SymsumReport {
    double lhs = 0.0;
    double rhs = 0.0;
    double diff = 0.0;
    double tail = 0.0;
    long long terms = 0;
};

/// Numeric check of the symmetric sum identity for ζ^r (or the level-2
/// alternating variant when any key is negative/barred).
SymsumReport zeta_symsum_report(const std::vector<long>& keys, const Rat& r,
                                const EvalConfig& cfg);

}  // namespace qsh
