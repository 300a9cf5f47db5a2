#include "bounds.hpp"

#include <stdexcept>

namespace circdet::bounds {

namespace {

mpz_class pow_ui(unsigned long base, unsigned long exp) {
    mpz_class r;
    mpz_ui_pow_ui(r.get_mpz_t(), base, exp);  // 0^0 = 1 per GMP
    return r;
}

}  // namespace

mpz_class integer_sqrt(const mpz_class& x) {
    if (x < 0) throw std::invalid_argument("integer_sqrt: negative input");
    mpz_class r;
    mpz_sqrt(r.get_mpz_t(), x.get_mpz_t());
    if (r * r > x || (r + 1) * (r + 1) <= x)
        throw std::logic_error("integer_sqrt: postcondition failed");
    return r;
}

mpz_class hbe_floor_scaled(int n, int shift) {
    if (n < 1) throw std::invalid_argument("hbe_floor_scaled: n must be positive");
    const auto un = static_cast<unsigned long>(n);
    mpz_class v;
    if (n % 4 == 0) {
        v = pow_ui(un, un / 2);
    } else if (n % 4 == 2) {
        v = 2 * (n - 1) * pow_ui(un - 2, (un - 2) / 2);
    } else {
        v = integer_sqrt((2 * mpz_class(n) - 1) * pow_ui(un - 1, un - 1));
    }
    return v >> shift;
}

mpz_class u01_bound(int n) { return hbe_floor_scaled(n + 1, n); }

mpz_class upm1_bound(int n) {
    return hbe_floor_scaled(n, n - 1) << (n - 1);
}

std::string ratio4(const mpz_class& num, const mpz_class& den) {
    if (den <= 0) throw std::invalid_argument("ratio4: denominator must be positive");
    const bool neg = num < 0;
    const mpz_class a = abs(num);
    mpz_class q = (2 * a * 10000 + den) / (2 * den);
    mpz_class whole = q / 10000, frac = q % 10000;
    std::string f = frac.get_str();
    f.insert(0, 4 - f.size(), '0');
    return (neg ? "-" : "") + whole.get_str() + "." + f;
}

}  // namespace circdet::bounds
