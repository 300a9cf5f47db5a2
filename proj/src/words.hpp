#pragma once

#include <compare>
#include <cstdint>
#include <optional>
#include <random>
#include <string>
#include <string_view>

#include <gmpxx.h>

namespace circdet {

// First row of a binary circulant, as a fixed-length word b0...b{n-1}.
//
// Packed MSB-first into a single 64-bit value: b0 occupies the most
// significant of the n used bits. With that packing, numeric order on
// the packed value coincides with lexicographic order on symbols
// (0 < 1, leftmost symbol most significant), and the packed value is
// exactly the decimal encoding N = sum 2^{n-1-j} b_j.
class Word {
public:
    Word() = default;
    Word(int n, std::uint64_t packed);

    static Word zeros(int n) { return Word(n, 0); }
    static Word ones(int n);
    static Word from_string(std::string_view s);

    int size() const { return n_; }
    int get(int j) const { return static_cast<int>((bits_ >> (n_ - 1 - j)) & 1u); }
    void set(int j, int v);

    std::uint64_t packed() const { return bits_; }
    std::string str() const;

    // c_j = b_{(j+r) mod n}
    Word rotated_left(int r) const;

    bool operator==(const Word& o) const = default;
    std::strong_ordering operator<=>(const Word& o) const;

private:
    int n_ = 0;
    std::uint64_t bits_ = 0;
};

namespace words {

// Booth-style least-rotation test, simplified: only decides whether the
// word is already minimal among its rotations. O(n).
bool is_necklace(const Word& w);

struct Successor {
    Word word;
    int changed_from;  // smallest index where word differs from the input
};

// Duval/FKM successor: the next necklace of the same length in
// lexicographic order, or nullopt for 1...1. Input must be a necklace.
std::optional<Successor> next_necklace(const Word& w);

// K(n) = (1/n) sum_{d|n} 2^{n/d} phi(d)
mpz_class necklace_count(int n);

unsigned long euler_phi(unsigned long m);

// Uniform over all necklaces of length n except 0...0 and 1...1
// (those two are pinned by the partitioner). Rejection sampling with
// first symbol fixed to 0 and last to 1.
Word random_necklace(int n, std::mt19937_64& rng);

mpz_class word_to_decimal(const Word& w);
Word decimal_to_word(const mpz_class& N, int n);

}  // namespace words
}  // namespace circdet
