#pragma once

#include <cstdint>
#include <random>
#include <span>
#include <vector>

#include <gmpxx.h>

#include "spectral.hpp"
#include "words.hpp"

namespace circdet::modfield {

// Smallest prime p with p = 1 (mod n) and p >= 2U+1. Miller-Rabin with
// the deterministic base set below 2^64, 64 fixed-seed random bases above.
mpz_class select_prime(int n, const mpz_class& U);

bool is_prime(const mpz_class& p);

// omega = a^{(p-1)/n} for random a, retried until the multiplicative
// order is exactly n (checked via omega^{n/q} != 1 for prime q | n).
mpz_class find_root_of_unity(const mpz_class& p, int n, std::mt19937_64& rng);

// Prime field setup shared read-only by all workers. Residues of
// determinants lift exactly because p >= 2U+1.
class FieldContext {
public:
    FieldContext(int n, mpz_class U, std::mt19937_64& rng);

    int order() const { return n_; }
    const mpz_class& prime() const { return p_; }
    const mpz_class& root() const { return omega_; }
    const mpz_class& bound() const { return bound_; }

    // omega^{(j*k) mod n}
    const mpz_class& power(int j, int k) const {
        return pow_[static_cast<size_t>((static_cast<long>(j) * k) % n_)];
    }

    // p < 2^63: residue arithmetic runs on machine words
    bool machine_word() const { return fits64_; }
    std::uint64_t prime64() const { return p64_; }
    std::uint64_t power64(int m) const { return pow64_[static_cast<size_t>(m)]; }

private:
    int n_;
    mpz_class p_;
    mpz_class omega_;
    mpz_class bound_;
    std::vector<mpz_class> pow_;  // omega^m, 0 <= m < n
    bool fits64_;
    std::uint64_t p64_ = 0;
    std::vector<std::uint64_t> pow64_;
};

// Eigenvalue residue vector lambda_j = sum_k a_k omega^{jk} (mod p) for
// the current word, maintained incrementally. Worker-local.
class EigenState {
public:
    EigenState(const CirculantSpec& spec, const FieldContext& ctx);

    struct Change {
        int index;
        int old_symbol;  // word bit, not the mapped value
        int new_symbol;
    };

    void update(std::span<const Change> changes);

    mpz_class det_residue() const;
    mpz_class lambda(int j) const;
    const Word& word() const { return word_; }
    Alphabet alphabet() const { return alphabet_; }

private:
    const FieldContext* ctx_;
    Alphabet alphabet_;
    Word word_;
    std::vector<mpz_class> lambda_;
    std::vector<std::uint64_t> lambda64_;
};

// r -> r or r - p, whichever has absolute value <= (p-1)/2. A lifted
// value with |d| > U indicates a bound or arithmetic bug and throws.
mpz_class lift_residue(const mpz_class& r, const mpz_class& p, const mpz_class& U);

}  // namespace circdet::modfield
