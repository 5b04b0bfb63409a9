#pragma once

#include "qsh/lincomb.hpp"

namespace qsh {

enum class ProductKind { shuffle, quasi_shuffle, star, interp };

ProductKind product_kind_from_name(const std::string& name);

/// Diamond a letter into the leading letter of every word: a ◇ (cv) = (a◇c)v,
/// extended linearly. Every word in x must be nonempty.
LinComb diamond_extend(const Letter& a, const LinComb& x);

/// Quasi-shuffle: (aw)*(bv) = a(w*bv) + b(aw*v) + (a◇b)(w*v), unit 1.
LinComb qsh_product(const LinComb& u, const LinComb& v);

/// Shuffle: the same recursion with the diamond term dropped.
LinComb shuffle_product(const LinComb& u, const LinComb& v);

/// Interpolated product with symbolic r:
///   a ⋄ b   = ab + ba + (1-2r) a◇b
///   av ⋄ bw = a(v⋄bw) + b(av⋄w) + (1-2r)(a◇b)(v⋄w) + (r²-r) a◇b◇(v⋄w)
/// where the last term diamonds a◇b into the leading letters.
LinComb interp_product(const LinComb& u, const LinComb& v);

/// Star product = interpolated product at r = 1.
LinComb star_product(const LinComb& u, const LinComb& v);

/// Concatenation product, bilinear.
LinComb concat_product(const LinComb& u, const LinComb& v);

LinComb product(ProductKind kind, const LinComb& u, const LinComb& v);

/// Word prefixed with a letter, as a LinComb transformer.
LinComb prepend(const Letter& a, const LinComb& x);

}  // namespace qsh
