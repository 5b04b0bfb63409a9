#include "qsh/render.hpp"

#include <sstream>

namespace qsh {

namespace {

std::vector<std::string> split(const std::string& text, char sep) {
    std::vector<std::string> parts;
    std::string cur;
    for (char c : text) {
        if (c == sep) {
            parts.push_back(cur);
            cur.clear();
        } else {
            cur.push_back(c);
        }
    }
    parts.push_back(cur);
    return parts;
}

}  // namespace

Alphabet parse_alphabet(const std::string& text) {
    if (text == "mzv") return Alphabet::mzv();
    if (text.rfind("euler:", 0) == 0) {
        try {
            return Alphabet::euler(std::stoi(text.substr(6)));
        } catch (const std::invalid_argument&) {
            throw ParseError("malformed euler level", 6);
        }
    }
    if (text.rfind("free:", 0) == 0) {
        auto gens = split(text.substr(5), ',');
        return Alphabet::free_multiset(std::move(gens));
    }
    throw ParseError("unknown alphabet: " + text, 0);
}

namespace {

long parse_long(const std::string& text, size_t pos) {
    try {
        size_t used = 0;
        const long v = std::stol(text, &used);
        if (used != text.size()) throw std::invalid_argument("trailing");
        return v;
    } catch (const std::exception&) {
        throw ParseError("malformed integer '" + text + "'", pos);
    }
}

Letter parse_free_letter(const std::string& body, const Alphabet& alpha, size_t pos) {
    std::vector<int> gens;
    for (const auto& name : split(body, ' ')) {
        if (name.empty()) continue;
        const auto it = std::find(alpha.generators.begin(), alpha.generators.end(), name);
        if (it == alpha.generators.end())
            throw ParseError("unknown generator '" + name + "'", pos);
        gens.push_back(static_cast<int>(it - alpha.generators.begin()));
    }
    if (gens.empty()) throw ParseError("empty multiset letter", pos);
    return free_letter(std::move(gens));
}

}  // namespace

Word parse_word(const std::string& text, const Alphabet& alpha) {
    if (text.empty() || text == "e") return Word{};

    Word w;
    if (alpha.kind == AlphabetKind::free_multiset) {
        size_t pos = 0;
        while (pos < text.size()) {
            if (text[pos] != '[') throw ParseError("expected '['", pos);
            const size_t close = text.find(']', pos);
            if (close == std::string::npos) throw ParseError("unclosed '['", pos);
            w.push_back(parse_free_letter(text.substr(pos + 1, close - pos - 1), alpha, pos));
            pos = close + 1;
        }
        return w;
    }

    size_t pos = 0;
    for (const auto& entry : split(text, ',')) {
        if (entry.empty()) throw ParseError("empty index entry", pos);
        if (alpha.kind == AlphabetKind::mzv) {
            const long weight = parse_long(entry, pos);
            if (weight < 1) throw ParseError("letter weight must be >= 1", pos);
            w.push_back(mzv_letter(weight));
        } else {
            const auto colon = entry.find(':');
            long weight;
            long color = 0;
            if (colon != std::string::npos) {
                weight = parse_long(entry.substr(0, colon), pos);
                color = parse_long(entry.substr(colon + 1), pos + colon + 1);
                if (color < 0 || color >= alpha.level)
                    throw ParseError("color out of range", pos + colon + 1);
            } else {
                weight = parse_long(entry, pos);
                if (weight < 0) {
                    if (alpha.level != 2)
                        throw ParseError("signed shorthand needs level 2", pos);
                    weight = -weight;
                    color = 1;
                }
            }
            if (weight < 1) throw ParseError("letter weight must be >= 1", pos);
            w.push_back(euler_letter(weight, static_cast<int>(color), alpha.level));
        }
        pos += entry.size() + 1;
    }
    return w;
}

Index parse_index(const std::string& text, int level) {
    const Alphabet alpha = level > 1 ? Alphabet::euler(level) : Alphabet::mzv();
    return word_to_index(parse_word(text, alpha));
}

std::string render_word_text(const Alphabet& alpha, const Word& w) {
    if (w.empty()) return "1";
    std::ostringstream out;
    for (const auto& l : w) {
        switch (alpha.kind) {
            case AlphabetKind::mzv: out << "z" << l.weight; break;
            case AlphabetKind::euler: out << "z" << l.weight << ":" << l.color; break;
            case AlphabetKind::free_multiset: {
                out << "[";
                for (size_t i = 0; i < l.gens.size(); ++i) {
                    if (i) out << " ";
                    out << alpha.generators[static_cast<size_t>(l.gens[i])];
                }
                out << "]";
                break;
            }
        }
    }
    return out.str();
}

std::string render_lincomb_text(const LinComb& x) {
    if (x.is_zero()) return "0";
    std::ostringstream out;
    bool first = true;
    for (const auto& [w, c] : x.terms()) {
        bool negative = false;
        std::string coeff_text;
        if (c.is_constant()) {
            Rat q = c.constant_term();
            if (q.sign() < 0) {
                negative = true;
                q = -q;
            }
            if (!q.is_one() || w.empty()) coeff_text = q.str();
        } else {
            coeff_text = "(" + c.str() + ")";
        }
        if (first) {
            if (negative) out << "-";
            first = false;
        } else {
            out << (negative ? " - " : " + ");
        }
        out << coeff_text;
        if (!w.empty()) out << render_word_text(x.alphabet(), w);
    }
    return out.str();
}

namespace {

// recursive-descent pieces for parse_lincomb_text
struct Cursor {
    const std::string& text;
    size_t pos = 0;

    bool done() const { return pos >= text.size(); }
    char peek() const { return text[pos]; }
    bool consume(char c) {
        if (!done() && text[pos] == c) {
            ++pos;
            return true;
        }
        return false;
    }
    void skip_spaces() {
        while (!done() && text[pos] == ' ') ++pos;
    }
};

Rat parse_rat_at(Cursor& cur) {
    const size_t start = cur.pos;
    if (!cur.done() && (cur.peek() == '-' || cur.peek() == '+')) ++cur.pos;
    while (!cur.done() && std::isdigit(static_cast<unsigned char>(cur.peek()))) ++cur.pos;
    if (cur.pos == start || (cur.pos == start + 1 && !std::isdigit(static_cast<unsigned char>(cur.text[start]))))
        throw ParseError("expected a number", start);
    size_t end = cur.pos;
    if (!cur.done() && cur.peek() == '/') {
        ++cur.pos;
        const size_t den_start = cur.pos;
        while (!cur.done() && std::isdigit(static_cast<unsigned char>(cur.peek()))) ++cur.pos;
        if (cur.pos == den_start) throw ParseError("expected a denominator", den_start);
        end = cur.pos;
    }
    return Rat::parse(cur.text.substr(start, end - start));
}

// "1 - 2r + 4r^2" body (no surrounding parens); indeterminate name v.
Poly parse_poly_body(Cursor& cur, const std::string& v, Indet var) {
    Poly out(0, var);
    bool first = true;
    while (true) {
        cur.skip_spaces();
        int sign = 1;
        if (!first) {
            if (cur.consume('+')) {
                sign = 1;
            } else if (cur.consume('-')) {
                sign = -1;
            } else {
                break;
            }
            cur.skip_spaces();
        } else if (cur.consume('-')) {
            sign = -1;
            cur.skip_spaces();
        }
        Rat coeff(1);
        const bool has_number = !cur.done() && std::isdigit(static_cast<unsigned char>(cur.peek()));
        if (has_number) coeff = parse_rat_at(cur);
        if (sign < 0) coeff = -coeff;
        long exponent = 0;
        if (!cur.done() && cur.text.compare(cur.pos, v.size(), v) == 0) {
            cur.pos += v.size();
            exponent = 1;
            if (cur.consume('^')) {
                const size_t estart = cur.pos;
                while (!cur.done() && std::isdigit(static_cast<unsigned char>(cur.peek()))) ++cur.pos;
                exponent = parse_long(cur.text.substr(estart, cur.pos - estart), estart);
            }
        } else if (!has_number) {
            throw ParseError("expected a polynomial term", cur.pos);
        }
        std::vector<Rat> mono(static_cast<size_t>(exponent) + 1, Rat(0));
        mono.back() = coeff;
        out += Poly::from_coeffs(std::move(mono), var);
        first = false;
    }
    return out;
}

Word parse_word_at(Cursor& cur, const Alphabet& alpha) {
    Word w;
    while (!cur.done()) {
        if (alpha.kind != AlphabetKind::free_multiset && cur.peek() == 'z') {
            ++cur.pos;
            const size_t start = cur.pos;
            while (!cur.done() && std::isdigit(static_cast<unsigned char>(cur.peek()))) ++cur.pos;
            if (cur.pos == start) throw ParseError("expected a letter weight", start);
            const long weight = parse_long(cur.text.substr(start, cur.pos - start), start);
            int color = 0;
            if (alpha.kind == AlphabetKind::euler) {
                if (!cur.consume(':')) throw ParseError("euler letter needs ':color'", cur.pos);
                const size_t cstart = cur.pos;
                while (!cur.done() && std::isdigit(static_cast<unsigned char>(cur.peek()))) ++cur.pos;
                color = static_cast<int>(parse_long(cur.text.substr(cstart, cur.pos - cstart), cstart));
            }
            w.push_back(alpha.kind == AlphabetKind::euler ? euler_letter(weight, color, alpha.level)
                                                          : mzv_letter(weight));
        } else if (alpha.kind == AlphabetKind::free_multiset && cur.peek() == '[') {
            const size_t close = cur.text.find(']', cur.pos);
            if (close == std::string::npos) throw ParseError("unclosed '['", cur.pos);
            w.push_back(parse_free_letter(cur.text.substr(cur.pos + 1, close - cur.pos - 1), alpha,
                                          cur.pos));
            cur.pos = close + 1;
        } else {
            break;
        }
    }
    return w;
}

}  // namespace

LinComb parse_lincomb_text(const std::string& text, const Alphabet& alpha) {
    LinComb out(alpha);
    Cursor cur{text};
    cur.skip_spaces();
    if (text == "0") return out;
    bool first = true;
    while (!cur.done()) {
        cur.skip_spaces();
        int sign = 1;
        if (!first) {
            if (cur.consume('+')) sign = 1;
            else if (cur.consume('-')) sign = -1;
            else throw ParseError("expected '+' or '-'", cur.pos);
            cur.skip_spaces();
        } else if (cur.consume('-')) {
            sign = -1;
        }
        Poly coeff(1);
        if (!cur.done() && cur.peek() == '(') {
            ++cur.pos;
            coeff = parse_poly_body(cur, indet_name(Indet::r), Indet::r);
            if (!cur.consume(')')) throw ParseError("unclosed '('", cur.pos);
        } else if (!cur.done() && std::isdigit(static_cast<unsigned char>(cur.peek()))) {
            coeff = Poly(parse_rat_at(cur));
        }
        if (sign < 0) coeff = -coeff;
        Word w = parse_word_at(cur, alpha);
        out.add_term(std::move(w), coeff);
        first = false;
        cur.skip_spaces();
    }
    return out;
}

std::string render_index_text(const Index& idx, int level) {
    std::ostringstream out;
    for (size_t i = 0; i < idx.entries.size(); ++i) {
        if (i) out << ",";
        const auto& e = idx.entries[i];
        if (level == 2 && e.color == 1)
            out << -e.weight;
        else if (e.color != 0)
            out << e.weight << ":" << e.color;
        else
            out << e.weight;
    }
    return out.str();
}

std::string render_tensor_text(const TensorComb& t) {
    if (t.is_zero()) return "0";
    std::ostringstream out;
    bool first = true;
    for (const auto& [p, c] : t.terms()) {
        if (!first) out << " + ";
        first = false;
        if (c.is_constant()) {
            if (!c.constant_term().is_one()) out << c.constant_term().str();
        } else {
            out << "(" << c.str() << ")";
        }
        out << render_word_text(t.alphabet(), p.first) << "(x)"
            << render_word_text(t.alphabet(), p.second);
    }
    return out.str();
}

nlohmann::json poly_json(const Poly& p) {
    nlohmann::json coeffs = nlohmann::json::array();
    for (const auto& c : p.coeffs()) coeffs.push_back(c.str());
    return {{"var", indet_name(p.var())}, {"coeffs", coeffs}};
}

nlohmann::json word_json(const Alphabet& alpha, const Word& w) {
    nlohmann::json out = nlohmann::json::array();
    for (const auto& l : w) {
        switch (alpha.kind) {
            case AlphabetKind::mzv: out.push_back(l.weight); break;
            case AlphabetKind::euler:
                out.push_back(std::to_string(l.weight) + ":" + std::to_string(l.color));
                break;
            case AlphabetKind::free_multiset: {
                nlohmann::json gens = nlohmann::json::array();
                for (int g : l.gens) gens.push_back(alpha.generators[static_cast<size_t>(g)]);
                out.push_back(gens);
                break;
            }
        }
    }
    return out;
}

nlohmann::json lincomb_json(const LinComb& x) {
    nlohmann::json terms = nlohmann::json::array();
    for (const auto& [w, c] : x.terms())
        terms.push_back({{"word", word_json(x.alphabet(), w)}, {"coeff", {{"poly", poly_json(c)}}}});
    return {{"alphabet", x.alphabet().describe()}, {"terms", terms}};
}

nlohmann::json tensor_json(const TensorComb& t) {
    nlohmann::json terms = nlohmann::json::array();
    for (const auto& [p, c] : t.terms())
        terms.push_back({{"left", word_json(t.alphabet(), p.first)},
                         {"right", word_json(t.alphabet(), p.second)},
                         {"coeff", {{"poly", poly_json(c)}}}});
    return {{"alphabet", t.alphabet().describe()}, {"terms", terms}};
}

nlohmann::json eval_json(const EvalResult& v) {
    nlohmann::json out{{"value", v.value.real()}, {"tail", v.tail}, {"N", v.terms}};
    if (v.value.imag() != 0.0) out["imag"] = v.value.imag();
    return out;
}

}  // namespace qsh
