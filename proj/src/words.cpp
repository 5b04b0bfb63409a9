#include "qsh/words.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

namespace qsh {

Alphabet Alphabet::euler(int n) {
    if (n < 1) throw std::invalid_argument("euler alphabet level must be >= 1");
    return Alphabet{AlphabetKind::euler, n, {}};
}

Alphabet Alphabet::free_multiset(std::vector<std::string> gens) {
    if (gens.empty()) throw std::invalid_argument("free alphabet needs at least one generator");
    std::set<std::string> seen(gens.begin(), gens.end());
    if (seen.size() != gens.size())
        throw std::invalid_argument("free alphabet generators must be distinct");
    return Alphabet{AlphabetKind::free_multiset, 1, std::move(gens)};
}

std::string Alphabet::describe() const {
    switch (kind) {
        case AlphabetKind::mzv: return "mzv";
        case AlphabetKind::euler: return "euler:" + std::to_string(level);
        case AlphabetKind::free_multiset: {
            std::string s = "free:";
            for (size_t i = 0; i < generators.size(); ++i) {
                if (i) s += ",";
                s += generators[i];
            }
            return s;
        }
    }
    return "?";
}

Letter mzv_letter(long i) {
    if (i < 1) throw std::invalid_argument("mzv letter weight must be >= 1");
    return Letter{i, 0, {}};
}

Letter euler_letter(long m, int j, int level) {
    if (m < 1) throw std::invalid_argument("euler letter weight must be >= 1");
    if (level < 1) throw std::invalid_argument("euler level must be >= 1");
    int c = j % level;
    if (c < 0) c += level;
    return Letter{m, c, {}};
}

Letter free_letter(std::vector<int> gens) {
    if (gens.empty()) throw std::invalid_argument("free letter must be a nonempty multiset");
    std::sort(gens.begin(), gens.end());
    return Letter{0, 0, std::move(gens)};
}

void check_letter(const Alphabet& a, const Letter& l) {
    switch (a.kind) {
        case AlphabetKind::mzv:
            if (l.weight < 1 || l.color != 0 || !l.gens.empty())
                throw std::invalid_argument("letter is not an mzv letter");
            break;
        case AlphabetKind::euler:
            if (l.weight < 1 || l.color < 0 || l.color >= a.level || !l.gens.empty())
                throw std::invalid_argument("letter is not an euler letter for this level");
            break;
        case AlphabetKind::free_multiset:
            if (l.weight != 0 || l.color != 0 || l.gens.empty())
                throw std::invalid_argument("letter is not a free-multiset letter");
            for (int g : l.gens)
                if (g < 0 || g >= static_cast<int>(a.generators.size()))
                    throw std::invalid_argument("free letter uses an unknown generator");
            if (!std::is_sorted(l.gens.begin(), l.gens.end()))
                throw std::invalid_argument("free letter multiset must be sorted");
            break;
    }
}

Letter diamond(const Alphabet& a, const Letter& x, const Letter& y) {
    switch (a.kind) {
        case AlphabetKind::mzv:
            return Letter{x.weight + y.weight, 0, {}};
        case AlphabetKind::euler:
            return Letter{x.weight + y.weight, (x.color + y.color) % a.level, {}};
        case AlphabetKind::free_multiset: {
            std::vector<int> merged;
            merged.reserve(x.gens.size() + y.gens.size());
            std::merge(x.gens.begin(), x.gens.end(), y.gens.begin(), y.gens.end(),
                       std::back_inserter(merged));
            return Letter{0, 0, std::move(merged)};
        }
    }
    throw std::logic_error("unreachable");
}

long word_weight(const Word& w) {
    long total = 0;
    for (const auto& l : w) total += l.weight;
    return total;
}

}  // namespace qsh
