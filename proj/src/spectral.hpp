#pragma once

#include <span>
#include <vector>

#include "words.hpp"

namespace circdet {

enum class Alphabet { Binary01, BinaryPM1 };

// a_j = b_j over {0,1}, a_j = 2 b_j - 1 over {+-1}
inline int mapped_symbol(Alphabet a, int bit) {
    return a == Alphabet::Binary01 ? bit : 2 * bit - 1;
}

// Circulant matrix description: circ(a_0, ..., a_{n-1}) without
// materializing the n x n entries.
struct CirculantSpec {
    Alphabet alphabet;
    Word word;
};

namespace spectral {

enum class PolyClass { Littlewood, Newman, Other };

struct AssociatedPolynomial {
    std::vector<int> coeffs;  // (a_0, ..., a_{n-1}) after alphabet mapping
    PolyClass cls;
};

AssociatedPolynomial associated_polynomial(const CirculantSpec& spec);

// First row of the Gram circulant A^T A: g[t] = sum_j a_j a_{(j+t) mod n}
std::vector<int> gram_first_row(const CirculantSpec& spec);

// First row of (2A - J)^T (2A - J) for a {0,1} word w, i.e. the Gram row
// of the {+-1}-mapped word.
std::vector<int> signed_gram_first_row(const Word& w);

// (n, -1, -1, ..., -1)?
bool is_flat_correlation(std::span<const int> g);

}  // namespace spectral
}  // namespace circdet
