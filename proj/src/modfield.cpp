#include "modfield.hpp"

#include <stdexcept>

namespace circdet::modfield {

namespace {

bool miller_rabin_witness(const mpz_class& p, const mpz_class& base,
                          const mpz_class& d, unsigned long s) {
    mpz_class x;
    mpz_powm(x.get_mpz_t(), base.get_mpz_t(), d.get_mpz_t(), p.get_mpz_t());
    if (x == 1 || x == p - 1) return false;
    for (unsigned long i = 1; i < s; ++i) {
        x = (x * x) % p;
        if (x == p - 1) return false;
    }
    return true;  // composite witness found
}

std::vector<unsigned long> distinct_prime_factors(unsigned long n) {
    std::vector<unsigned long> out;
    for (unsigned long q = 2; q * q <= n; ++q) {
        if (n % q == 0) {
            out.push_back(q);
            while (n % q == 0) n /= q;
        }
    }
    if (n > 1) out.push_back(n);
    return out;
}

mpz_class random_below(const mpz_class& bound, std::mt19937_64& rng) {
    if (bound < 1) throw std::invalid_argument("random_below: bound must be positive");
    // bound has few hundred bits at most; rejection over whole 64-bit chunks
    const size_t bits = mpz_sizeinbase(bound.get_mpz_t(), 2);
    const size_t chunks = (bits + 63) / 64;
    for (;;) {
        mpz_class x = 0;
        for (size_t i = 0; i < chunks; ++i) {
            const std::uint64_t c = rng();
            x <<= 64;
            mpz_class chunk;
            mpz_import(chunk.get_mpz_t(), 1, 1, sizeof c, 0, 0, &c);
            x |= chunk;
        }
        x >>= (chunks * 64 - bits);
        if (x < bound) return x;
    }
}

std::uint64_t mulmod64(std::uint64_t a, std::uint64_t b, std::uint64_t p) {
    return static_cast<std::uint64_t>((static_cast<unsigned __int128>(a) * b) % p);
}

}  // namespace

bool is_prime(const mpz_class& p) {
    if (p < 2) return false;
    for (unsigned long q : {2ul, 3ul, 5ul, 7ul, 11ul, 13ul, 17ul, 19ul, 23ul, 29ul, 31ul, 37ul}) {
        if (p == q) return true;
        if (p % q == 0) return false;
    }
    mpz_class d = p - 1;
    unsigned long s = 0;
    while (mpz_even_p(d.get_mpz_t())) {
        d >>= 1;
        ++s;
    }
    if (mpz_sizeinbase(p.get_mpz_t(), 2) <= 64) {
        // deterministic for p < 2^64
        for (unsigned long b : {2ul, 3ul, 5ul, 7ul, 11ul, 13ul, 17ul, 19ul, 23ul, 29ul, 31ul, 37ul})
            if (miller_rabin_witness(p, b, d, s)) return false;
        return true;
    }
    std::mt19937_64 rng(0x9e3779b97f4a7c15ull);  // fixed policy
    for (int round = 0; round < 64; ++round) {
        const mpz_class base = 2 + random_below(p - 3, rng);
        if (miller_rabin_witness(p, base, d, s)) return false;
    }
    return true;
}

mpz_class select_prime(int n, const mpz_class& U) {
    if (n < 1 || U < 1) throw std::invalid_argument("select_prime: need n >= 1, U >= 1");
    mpz_class p = 2 * U + 1;
    const mpz_class rem = p % n;
    p += ((1 - rem) % n + n) % n;
    while (!is_prime(p)) p += n;
    return p;
}

mpz_class find_root_of_unity(const mpz_class& p, int n, std::mt19937_64& rng) {
    if (n < 1 || p < 2 || (p - 1) % n != 0)
        throw std::invalid_argument("find_root_of_unity: need p = 1 (mod n)");
    if (n == 1) return 1;
    const mpz_class exp = (p - 1) / n;
    const auto factors = distinct_prime_factors(static_cast<unsigned long>(n));
    for (;;) {
        // p = 3 only admits a = 2 (and forces n = 2, omega = 2)
        const mpz_class a = p == 3 ? mpz_class(2) : 2 + random_below(p - 3, rng);
        mpz_class omega;
        mpz_powm(omega.get_mpz_t(), a.get_mpz_t(), exp.get_mpz_t(), p.get_mpz_t());
        bool full_order = true;
        for (unsigned long q : factors) {
            const mpz_class e = mpz_class(n) / q;
            mpz_class t;
            mpz_powm(t.get_mpz_t(), omega.get_mpz_t(), e.get_mpz_t(), p.get_mpz_t());
            if (t == 1) {
                full_order = false;
                break;
            }
        }
        if (full_order) return omega;
    }
}

FieldContext::FieldContext(int n, mpz_class U, std::mt19937_64& rng)
    : n_(n), bound_(std::move(U)) {
    p_ = select_prime(n, bound_);
    omega_ = find_root_of_unity(p_, n, rng);
    pow_.resize(static_cast<size_t>(n));
    pow_[0] = 1;
    for (int m = 1; m < n; ++m) pow_[static_cast<size_t>(m)] = (pow_[static_cast<size_t>(m - 1)] * omega_) % p_;
    fits64_ = mpz_sizeinbase(p_.get_mpz_t(), 2) <= 63;
    if (fits64_) {
        p64_ = mpz_get_ui(p_.get_mpz_t());
        pow64_.resize(static_cast<size_t>(n));
        for (int m = 0; m < n; ++m) pow64_[static_cast<size_t>(m)] = mpz_get_ui(pow_[static_cast<size_t>(m)].get_mpz_t());
    }
}

EigenState::EigenState(const CirculantSpec& spec, const FieldContext& ctx)
    : ctx_(&ctx), alphabet_(spec.alphabet), word_(spec.word) {
    const int n = ctx.order();
    if (spec.word.size() != n)
        throw std::invalid_argument("EigenState: word length does not match context order");
    if (ctx.machine_word()) {
        const std::uint64_t p = ctx.prime64();
        lambda64_.assign(static_cast<size_t>(n), 0);
        for (int j = 0; j < n; ++j) {
            std::uint64_t acc = 0;
            for (int k = 0; k < n; ++k) {
                const int a = mapped_symbol(alphabet_, word_.get(k));
                if (a == 0) continue;
                const std::uint64_t w = ctx.power64((static_cast<long>(j) * k) % n);
                acc = a > 0 ? (acc + w) % p : (acc + p - w) % p;
            }
            lambda64_[static_cast<size_t>(j)] = acc;
        }
    } else {
        lambda_.assign(static_cast<size_t>(n), mpz_class(0));
        for (int j = 0; j < n; ++j) {
            mpz_class acc = 0;
            for (int k = 0; k < n; ++k) {
                const int a = mapped_symbol(alphabet_, word_.get(k));
                if (a == 0) continue;
                acc += a > 0 ? ctx.power(j, k) : mpz_class(ctx.prime() - ctx.power(j, k));
            }
            lambda_[static_cast<size_t>(j)] = acc % ctx.prime();
        }
    }
}

void EigenState::update(std::span<const Change> changes) {
    const int n = ctx_->order();
    for (const Change& c : changes) {
        if (c.index < 0 || c.index >= n)
            throw std::invalid_argument("eigen_update: index out of range");
        if (word_.get(c.index) != c.old_symbol)
            throw std::invalid_argument("eigen_update: old symbol does not match stored word");
        const int delta = mapped_symbol(alphabet_, c.new_symbol) - mapped_symbol(alphabet_, c.old_symbol);
        word_.set(c.index, c.new_symbol);
        if (delta == 0) continue;
        if (ctx_->machine_word()) {
            const std::uint64_t p = ctx_->prime64();
            const int mag = delta < 0 ? -delta : delta;
            for (int j = 0; j < n; ++j) {
                std::uint64_t w = ctx_->power64((static_cast<long>(j) * c.index) % n);
                if (mag == 2) w = (w + w) % p;
                std::uint64_t& l = lambda64_[static_cast<size_t>(j)];
                l = delta > 0 ? (l + w) % p : (l + p - w) % p;
            }
        } else {
            const mpz_class& p = ctx_->prime();
            for (int j = 0; j < n; ++j) {
                mpz_class w = ctx_->power(j, c.index);
                if (delta == 2 || delta == -2) w = (w + w) % p;
                mpz_class& l = lambda_[static_cast<size_t>(j)];
                l = delta > 0 ? mpz_class((l + w) % p) : mpz_class((l + p - w) % p);
            }
        }
    }
}

mpz_class EigenState::det_residue() const {
    const int n = ctx_->order();
    if (ctx_->machine_word()) {
        const std::uint64_t p = ctx_->prime64();
        std::uint64_t prod = 1 % p;
        for (int j = 0; j < n; ++j) prod = mulmod64(prod, lambda64_[static_cast<size_t>(j)], p);
        return mpz_class(static_cast<unsigned long>(prod));
    }
    mpz_class prod = 1;
    for (int j = 0; j < n; ++j) prod = (prod * lambda_[static_cast<size_t>(j)]) % ctx_->prime();
    return prod;
}

mpz_class EigenState::lambda(int j) const {
    if (ctx_->machine_word())
        return mpz_class(static_cast<unsigned long>(lambda64_[static_cast<size_t>(j)]));
    return lambda_[static_cast<size_t>(j)];
}

mpz_class lift_residue(const mpz_class& r, const mpz_class& p, const mpz_class& U) {
    if (r < 0 || r >= p) throw std::invalid_argument("lift_residue: residue out of range");
    mpz_class d = r;
    if (2 * r > p - 1) d -= p;
    if (abs(d) > U)
        throw std::runtime_error("lift_residue: lifted value exceeds the determinant bound");
    return d;
}

}  // namespace circdet::modfield
