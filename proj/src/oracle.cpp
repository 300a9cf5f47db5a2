#include "oracle.hpp"

#include <stdexcept>
#include <utility>

namespace circdet::oracle {

DenseMatrix DenseMatrix::identity(int n) {
    DenseMatrix m(n);
    for (int j = 0; j < n; ++j) m.at(j, j) = 1;
    return m;
}

DenseMatrix DenseMatrix::circulant(const CirculantSpec& spec) {
    const int n = spec.word.size();
    DenseMatrix m(n);
    for (int j = 0; j < n; ++j)
        for (int k = 0; k < n; ++k)
            m.at(j, k) = mapped_symbol(spec.alphabet, spec.word.get(((k - j) % n + n) % n));
    return m;
}

DenseMatrix DenseMatrix::circulant_with_stripe(const CirculantSpec& spec, int position,
                                               const mpq_class& x) {
    if (position < 0 || position >= spec.word.size())
        throw std::invalid_argument("circulant_with_stripe: position out of range");
    const int n = spec.word.size();
    DenseMatrix m = circulant(spec);
    for (int j = 0; j < n; ++j) m.at(j, (j + position) % n) = x;
    return m;
}

mpq_class bareiss_det(DenseMatrix M) {
    const int n = M.order();
    if (n > 32) throw std::invalid_argument("bareiss_det: oracle scale is n <= 32");
    int sign = 1;
    mpq_class prev = 1;
    for (int k = 0; k < n - 1; ++k) {
        if (M.at(k, k) == 0) {
            int swap_row = -1;
            for (int i = k + 1; i < n; ++i)
                if (M.at(i, k) != 0) {
                    swap_row = i;
                    break;
                }
            if (swap_row < 0) return 0;
            for (int j = k; j < n; ++j) std::swap(M.at(k, j), M.at(swap_row, j));
            sign = -sign;
        }
        for (int i = k + 1; i < n; ++i)
            for (int j = k + 1; j < n; ++j)
                M.at(i, j) = (M.at(i, j) * M.at(k, k) - M.at(i, k) * M.at(k, j)) / prev;
        prev = M.at(k, k);
    }
    return sign * M.at(n - 1, n - 1);
}

ExhaustiveResult exhaustive_max(int n, Alphabet alphabet) {
    if (n < 1 || n > 14) throw std::invalid_argument("exhaustive_max: need 1 <= n <= 14");
    ExhaustiveResult res{0, Word::zeros(n), 0};
    const std::uint64_t total = std::uint64_t{1} << n;
    for (std::uint64_t bits = 0; bits < total; ++bits) {
        const Word w(n, bits);
        const mpq_class d = bareiss_det(DenseMatrix::circulant({alphabet, w}));
        mpz_class a = abs(d.get_num());
        if (a > res.max_abs_det) {
            res.max_abs_det = a;
            res.lex_least_word = w;  // bits ascend in lex order
        }
    }
    res.candidates = mpz_class(1) << n;
    return res;
}

IntPolynomial::IntPolynomial(std::vector<mpq_class> coeffs) : c_(std::move(coeffs)) {
    while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

IntPolynomial det_polynomial_in_entry(const CirculantSpec& spec, int position) {
    const int n = spec.word.size();
    if (n > 32) throw std::invalid_argument("det_polynomial_in_entry: oracle scale is n <= 32");

    // Newton divided differences over the integer nodes 0..n, then
    // expansion to the monomial basis.
    std::vector<mpq_class> dd(static_cast<size_t>(n) + 1);
    for (int i = 0; i <= n; ++i)
        dd[static_cast<size_t>(i)] =
            bareiss_det(DenseMatrix::circulant_with_stripe(spec, position, mpq_class(i)));
    for (int level = 1; level <= n; ++level)
        for (int i = n; i >= level; --i)
            dd[static_cast<size_t>(i)] =
                (dd[static_cast<size_t>(i)] - dd[static_cast<size_t>(i - 1)]) / level;

    std::vector<mpq_class> coeffs(static_cast<size_t>(n) + 1, mpq_class(0));
    // f = dd[n]; f = f*(x - node) + dd[node] going down
    coeffs[0] = dd[static_cast<size_t>(n)];
    int deg = 0;
    for (int node = n - 1; node >= 0; --node) {
        for (int d = deg; d >= 0; --d) {
            coeffs[static_cast<size_t>(d + 1)] += coeffs[static_cast<size_t>(d)];
            coeffs[static_cast<size_t>(d)] *= -node;
        }
        ++deg;
        coeffs[0] += dd[static_cast<size_t>(node)];
    }
    for (const mpq_class& c : coeffs)
        if (c.get_den() != 1)
            throw std::runtime_error("det_polynomial_in_entry: non-integer coefficient");
    return IntPolynomial(std::move(coeffs));
}

mpq_class poly_eval(const IntPolynomial& f, const mpq_class& x) {
    mpq_class acc = 0;
    for (int d = f.degree(); d >= 0; --d) acc = acc * x + f.coeff(d);
    return acc;
}

IntPolynomial poly_derivative(const IntPolynomial& f) {
    std::vector<mpq_class> c;
    for (int d = 1; d <= f.degree(); ++d) c.push_back(d * f.coeff(d));
    return IntPolynomial(std::move(c));
}

}  // namespace circdet::oracle
