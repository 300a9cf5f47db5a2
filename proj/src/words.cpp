#include "words.hpp"

#include <bit>
#include <stdexcept>

namespace circdet {

namespace {

std::uint64_t length_mask(int n) {
    return n == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << n) - 1;
}

}  // namespace

Word::Word(int n, std::uint64_t packed) : n_(n), bits_(packed) {
    if (n < 1 || n > 64)
        throw std::invalid_argument("Word: length must be in [1, 64]");
    if (packed & ~length_mask(n))
        throw std::invalid_argument("Word: packed value out of range for length");
}

Word Word::ones(int n) { return Word(n, length_mask(n)); }

Word Word::from_string(std::string_view s) {
    Word w(static_cast<int>(s.size()), 0);
    for (size_t j = 0; j < s.size(); ++j) {
        if (s[j] != '0' && s[j] != '1')
            throw std::invalid_argument("Word: symbols must be 0 or 1");
        w.set(static_cast<int>(j), s[j] - '0');
    }
    return w;
}

void Word::set(int j, int v) {
    std::uint64_t m = std::uint64_t{1} << (n_ - 1 - j);
    bits_ = v ? (bits_ | m) : (bits_ & ~m);
}

std::string Word::str() const {
    std::string s(static_cast<size_t>(n_), '0');
    for (int j = 0; j < n_; ++j) s[static_cast<size_t>(j)] += static_cast<char>(get(j));
    return s;
}

Word Word::rotated_left(int r) const {
    r = ((r % n_) + n_) % n_;
    Word out(n_, 0);
    for (int j = 0; j < n_; ++j) out.set(j, get((j + r) % n_));
    return out;
}

std::strong_ordering Word::operator<=>(const Word& o) const {
    if (n_ != o.n_)
        throw std::invalid_argument("Word: comparing words of different lengths");
    return bits_ <=> o.bits_;
}

namespace words {

bool is_necklace(const Word& w) {
    // p tracks the period of the longest Lyndon-prefix structure; w is a
    // necklace iff n is a multiple of the final p.
    const int n = w.size();
    int p = 1;
    for (int i = 1; i < n; ++i) {
        int a = w.get(i - p);
        int b = w.get(i);
        if (b < a) return false;
        if (b > a) p = i + 1;
    }
    return n % p == 0;
}

std::optional<Successor> next_necklace(const Word& w) {
    if (!is_necklace(w))
        throw std::invalid_argument("next_necklace: input is not a necklace");
    const int n = w.size();
    if (w == Word::ones(n)) return std::nullopt;

    // FKM step: set the last 0 to 1, extend periodically, repeat until the
    // period divides n.
    Word cur = w;
    for (;;) {
        int i = n - 1;
        while (cur.get(i) == 1) --i;
        const int p = i + 1;
        cur.set(i, 1);
        for (int j = p; j < n; ++j) cur.set(j, cur.get(j - p));
        if (n % p == 0) break;
    }
    const std::uint64_t diff = cur.packed() ^ w.packed();
    const int changed_from = n - 1 - (63 - std::countl_zero(diff));
    return Successor{cur, changed_from};
}

unsigned long euler_phi(unsigned long m) {
    if (m == 0) throw std::invalid_argument("euler_phi: m must be positive");
    unsigned long result = m;
    for (unsigned long q = 2; q * q <= m; ++q) {
        if (m % q == 0) {
            while (m % q == 0) m /= q;
            result -= result / q;
        }
    }
    if (m > 1) result -= result / m;
    return result;
}

mpz_class necklace_count(int n) {
    if (n < 1) throw std::invalid_argument("necklace_count: n must be positive");
    mpz_class sum = 0;
    for (int d = 1; d <= n; ++d) {
        if (n % d != 0) continue;
        mpz_class term;
        mpz_ui_pow_ui(term.get_mpz_t(), 2, static_cast<unsigned long>(n / d));
        sum += term * euler_phi(static_cast<unsigned long>(d));
    }
    return sum / n;
}

Word random_necklace(int n, std::mt19937_64& rng) {
    if (n < 2) throw std::invalid_argument("random_necklace: n must be >= 2");
    if (n == 2) return Word(2, 1);  // 01
    const std::uint64_t interior_mask = (std::uint64_t{1} << (n - 2)) - 1;
    for (;;) {
        // leading 0 and trailing 1 fixed; interior uniform
        const std::uint64_t bits = ((rng() & interior_mask) << 1) | 1u;
        Word w(n, bits);
        if (is_necklace(w)) return w;
    }
}

mpz_class word_to_decimal(const Word& w) {
    mpz_class N;
    const std::uint64_t v = w.packed();
    mpz_import(N.get_mpz_t(), 1, 1, sizeof v, 0, 0, &v);
    return N;
}

Word decimal_to_word(const mpz_class& N, int n) {
    if (N < 0 || mpz_sizeinbase(N.get_mpz_t(), 2) > static_cast<size_t>(n))
        throw std::invalid_argument("decimal_to_word: value out of range for length");
    std::uint64_t packed = 0;
    mpz_export(&packed, nullptr, 1, sizeof(std::uint64_t), 0, 0, N.get_mpz_t());
    return Word(n, packed);
}

}  // namespace words
}  // namespace circdet
