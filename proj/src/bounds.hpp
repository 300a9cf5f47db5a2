#pragma once

#include <string>

#include <gmpxx.h>

namespace circdet::bounds {

// floor(sqrt(x)), with the postcondition r^2 <= x < (r+1)^2 checked.
mpz_class integer_sqrt(const mpz_class& x);

// floor(H_BE(n) / 2^shift), where H_BE combines the Hadamard bound
// (n = 0 mod 4), the Ehlich/Wojtas bound (n = 2 mod 4) and the
// Barba-Ehlich-Wojtas bound (odd n). 0^0 := 1 so n = 2 gives 2.
mpz_class hbe_floor_scaled(int n, int shift);

// U_01(n) = floor(H_BE(n+1) / 2^n)
mpz_class u01_bound(int n);

// U_pm1(n) = 2^{n-1} floor(H_BE(n) / 2^{n-1})
mpz_class upm1_bound(int n);

// num/den rounded half-away-from-zero to 4 decimal places, "d.dddd"
std::string ratio4(const mpz_class& num, const mpz_class& den);

}  // namespace circdet::bounds
