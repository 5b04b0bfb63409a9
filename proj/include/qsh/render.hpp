#pragma once

#include <json.hpp>

#include "qsh/hopf.hpp"
#include "qsh/zeval.hpp"

namespace qsh {

struct ParseError : std::runtime_error {
    size_t position;
    ParseError(const std::string& what, size_t pos)
        : std::runtime_error(what + " (at position " + std::to_string(pos) + ")"),
          position(pos) {}
};

/// "mzv", "euler:N", "free:g1,g2,..."
Alphabet parse_alphabet(const std::string& text);

/// Command-line word grammar:
///   mzv    "3,1,2"          -> z3 z1 z2
///   euler  "m:j" entries, with level-2 shorthand "-m" = "m:1"
///   free   "[g1][g1 g2]"
/// "e" or the empty string denote the empty word.
Word parse_word(const std::string& text, const Alphabet& alpha);

/// Index entries for eval commands; negative entries carry color 1 (level 2).
Index parse_index(const std::string& text, int level = 1);

/// Canonical text forms; parse_lincomb_text inverts render_lincomb_text.
std::string render_word_text(const Alphabet& alpha, const Word& w);
std::string render_lincomb_text(const LinComb& x);
LinComb parse_lincomb_text(const std::string& text, const Alphabet& alpha);

std::string render_index_text(const Index& idx, int level = 1);
std::string render_tensor_text(const TensorComb& t);

nlohmann::json poly_json(const Poly& p);
nlohmann::json word_json(const Alphabet& alpha, const Word& w);
nlohmann::json lincomb_json(const LinComb& x);
nlohmann::json tensor_json(const TensorComb& t);
nlohmann::json eval_json(const EvalResult& v);

}  // namespace qsh
