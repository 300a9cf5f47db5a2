#include "conjectures.hpp"

#include <cmath>
#include <stdexcept>

namespace circdet::conjectures {

namespace {

bool is_prime_small(long n) {
    if (n < 2) return false;
    for (long q = 2; q * q <= n; ++q)
        if (n % q == 0) return false;
    return true;
}

std::uint64_t powmod_u64(std::uint64_t base, std::uint64_t exp, std::uint64_t mod) {
    unsigned __int128 acc = 1, b = base % mod;
    while (exp) {
        if (exp & 1) acc = acc * b % mod;
        b = b * b % mod;
        exp >>= 1;
    }
    return static_cast<std::uint64_t>(acc);
}

}  // namespace

std::set<CoreClass> circulant_core_classes(int n) {
    if (n < 1) throw std::invalid_argument("circulant_core_classes: n must be positive");
    std::set<CoreClass> out;
    if (n % 4 == 3 && is_prime_small(n)) out.insert(CoreClass::PrimeP3Mod4);
    for (long p = 2; p * (p + 2) <= n; ++p)
        if (p * (p + 2) == n && is_prime_small(p) && is_prime_small(p + 2))
            out.insert(CoreClass::TwinPrimeProduct);
    if ((static_cast<unsigned>(n) & static_cast<unsigned>(n + 1)) == 0)  // n = 2^k - 1
        out.insert(CoreClass::MersenneForm);
    if (is_prime_small(n) && n > 27) {
        const long r = std::lround(std::sqrt((n - 27) / 4.0));
        if (r >= 1 && 4 * r * r + 27 == n) out.insert(CoreClass::HallPrime);
    }
    return out;
}

ConjectureAReport conjecture_a_status(int n, const mpz_class& D, const mpz_class& U) {
    ConjectureAReport rep;
    rep.n = n;
    rep.bound_attained = (D == U);
    rep.classes = circulant_core_classes(n);
    const bool constructive =
        rep.classes.contains(CoreClass::PrimeP3Mod4) ||
        rep.classes.contains(CoreClass::TwinPrimeProduct) ||
        rep.classes.contains(CoreClass::MersenneForm);
    rep.consistent = rep.bound_attained == (n <= 4 || constructive);
    return rep;
}

int legendre_symbol(long j, long n) {
    if (n < 3 || n % 2 == 0 || !is_prime_small(n))
        throw std::invalid_argument("legendre_symbol: n must be an odd prime");
    const long r = ((j % n) + n) % n;
    if (r == 0) return 0;
    const std::uint64_t e = powmod_u64(static_cast<std::uint64_t>(r),
                                       static_cast<std::uint64_t>(n - 1) / 2,
                                       static_cast<std::uint64_t>(n));
    return e == 1 ? 1 : -1;
}

mpq_class ura_det_closed(int n, const mpq_class& x) {
    if (n < 5 || n % 4 != 1 || !is_prime_small(n))
        throw std::invalid_argument("ura_det_closed: n must be a prime = 1 (mod 4)");
    const int k = (n - 1) / 4;
    mpq_class quad = x * x - x - k;
    mpq_class pw = 1;
    for (int i = 0; i < 2 * k; ++i) pw *= quad;
    return (x + 2 * k) * pw;
}

CirculantSpec ura_spec(int n) {
    if (n < 5 || n % 4 != 1 || !is_prime_small(n))
        throw std::invalid_argument("ura_spec: n must be a prime = 1 (mod 4)");
    Word w = Word::zeros(n);
    for (int j = 1; j < n; ++j) w.set(j, (1 + legendre_symbol(j, n)) / 2);
    return {Alphabet::Binary01, w};
}

UraLocalMax ura_local_max(int k) {
    if (k < 1) throw std::invalid_argument("ura_local_max: k must be positive");
    const double kk = k;
    const double xk = (std::sqrt(1 + 4 * kk * kk) + 1 - 2 * kk) / 2;
    auto det = [kk, k](double x) {
        return (x + 2 * kk) * std::pow(x * x - x - kk, 2 * k);
    };
    // logarithmic derivative of (x+2k)(x^2-x-k)^{2k} must vanish at x_k
    const double logdiff =
        1.0 / (xk + 2 * kk) + 2 * kk * (2 * xk - 1) / (xk * xk - xk - kk);
    if (std::fabs(logdiff) > 1e-10 * (1 + 2 * kk))
        throw std::logic_error("ura_local_max: stationarity check failed");
    UraLocalMax out;
    out.x_k = xk;
    out.det_at_xk = det(xk);
    out.det_at_half = det(0.5);
    // log space: the direct ratio overflows to inf/inf for large k
    auto log_det = [kk, k](double x) {
        return std::log(x + 2 * kk) + 2 * k * std::log(std::fabs(x * x - x - kk));
    };
    out.gain = std::exp(log_det(xk) - log_det(0.5));
    return out;
}

std::vector<PerturbationFinding> perturbation_scan(int n, Alphabet alphabet,
                                                   std::span<const Word> maximizers) {
    if (maximizers.empty()) return {};
    if (n > 32) throw std::invalid_argument("perturbation_scan: oracle scale is n <= 32");

    const mpq_class Dq =
        abs(oracle::bareiss_det(oracle::DenseMatrix::circulant({alphabet, maximizers[0]})));
    const mpz_class D = Dq.get_num();

    const int lo = alphabet == Alphabet::Binary01 ? 0 : -1;  // interval endpoints
    const int hi = 1;

    std::vector<PerturbationFinding> findings;
    for (const Word& base : maximizers) {
        for (int r = 0; r < n; ++r) {
            const Word w = base.rotated_left(r);
            const auto f = oracle::det_polynomial_in_entry({alphabet, w}, 0);
            const int v0 = mapped_symbol(alphabet, w.get(0));
            const mpq_class value = oracle::poly_eval(f, v0);
            const mpq_class deriv = oracle::poly_eval(oracle::poly_derivative(f), v0);
            const int sgn = mpq_sgn(value.get_mpq_t());
            // direction into the interior: +1 from the lower endpoint, -1 from the upper
            const int dir = v0 == lo ? 1 : -1;
            const mpq_class into_interior = sgn * dir * deriv;

            // dyadic grid scan of the open interval, catches the
            // zero-derivative (even polynomial) cases too
            std::optional<std::pair<mpq_class, mpq_class>> witness;
            for (int i = 64 * lo + 1; i < 64 * hi; ++i) {
                mpq_class x(i, 64);
                x.canonicalize();
                mpq_class ax = abs(oracle::poly_eval(f, x));
                if (ax > D && (!witness || ax > witness->second))
                    witness = {x, ax};
            }

            if (into_interior > 0 || witness) {
                PerturbationFinding fd;
                fd.n = n;
                fd.alphabet = alphabet;
                fd.base_word = base;
                fd.rotation = r;
                fd.det_at_extreme = value.get_num();
                fd.derivative_into_interior = into_interior.get_num();
                fd.interior_witness = std::move(witness);
                fd.poly = f;
                findings.push_back(std::move(fd));
            }
        }
    }
    return findings;
}

}  // namespace circdet::conjectures
