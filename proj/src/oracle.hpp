#pragma once

#include <vector>

#include <gmpxx.h>

#include "spectral.hpp"
#include "words.hpp"

namespace circdet::oracle {

// Dense exact-rational matrix, oracle scale only (n <= 32).
class DenseMatrix {
public:
    explicit DenseMatrix(int n) : n_(n), e_(static_cast<size_t>(n) * n) {}

    static DenseMatrix identity(int n);
    static DenseMatrix circulant(const CirculantSpec& spec);
    // As circulant(), but the whole stripe (k - j) mod n == position holds x.
    static DenseMatrix circulant_with_stripe(const CirculantSpec& spec, int position,
                                             const mpq_class& x);

    int order() const { return n_; }
    mpq_class& at(int j, int k) { return e_[static_cast<size_t>(j) * n_ + k]; }
    const mpq_class& at(int j, int k) const { return e_[static_cast<size_t>(j) * n_ + k]; }

private:
    int n_;
    std::vector<mpq_class> e_;
};

// Fraction-free (Bareiss) elimination; integer inputs stay integer
// throughout. Independent of the modular pipeline.
mpq_class bareiss_det(DenseMatrix M);

struct ExhaustiveResult {
    mpz_class max_abs_det;
    Word lex_least_word;
    mpz_class candidates;  // 2^n, all words visited
};

// Ground truth over ALL 2^n words, not just necklaces. n <= 14.
ExhaustiveResult exhaustive_max(int n, Alphabet alphabet);

// Exact polynomial, index = degree, trailing zeros trimmed.
class IntPolynomial {
public:
    IntPolynomial() = default;
    explicit IntPolynomial(std::vector<mpq_class> coeffs);

    int degree() const { return static_cast<int>(c_.size()) - 1; }  // -1 for zero poly
    const mpq_class& coeff(int d) const { return c_[static_cast<size_t>(d)]; }
    const std::vector<mpq_class>& coeffs() const { return c_; }
    bool operator==(const IntPolynomial&) const = default;

private:
    std::vector<mpq_class> c_;
};

// det of the circulant with stripe `position` replaced by an indeterminate,
// via evaluation at x = 0..n and exact Lagrange interpolation. Rejects
// non-integer coefficients.
IntPolynomial det_polynomial_in_entry(const CirculantSpec& spec, int position);

mpq_class poly_eval(const IntPolynomial& f, const mpq_class& x);
IntPolynomial poly_derivative(const IntPolynomial& f);

}  // namespace circdet::oracle
