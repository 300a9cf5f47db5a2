#pragma once

#include <optional>
#include <set>
#include <span>
#include <utility>
#include <vector>

#include <gmpxx.h>

#include "oracle.hpp"
#include "spectral.hpp"
#include "words.hpp"

namespace circdet::conjectures {

// The four circulant-core constructions; HallPrime is a subset of
// PrimeP3Mod4 but comes from a different construction.
enum class CoreClass { PrimeP3Mod4, TwinPrimeProduct, MersenneForm, HallPrime };

std::set<CoreClass> circulant_core_classes(int n);

struct ConjectureAReport {
    int n;
    bool bound_attained;  // D = U
    std::set<CoreClass> classes;
    // D = U exactly when n <= 4 or one of cases (1)-(3) applies
    bool consistent;
};

ConjectureAReport conjecture_a_status(int n, const mpz_class& D, const mpz_class& U);

// Euler's criterion; n must be an odd prime.
int legendre_symbol(long j, long n);

// det A_n(x) = (x + 2k)(x^2 - x - k)^{2k} for prime n = 4k + 1
mpq_class ura_det_closed(int n, const mpq_class& x);

// circ(x, (1+chi(1))/2, ..., (1+chi(n-1))/2): the {0,1} word with a
// placeholder 0 at the varied position 0.
CirculantSpec ura_spec(int n);

struct UraLocalMax {
    double x_k;
    double det_at_xk;
    double det_at_half;
    double gain;  // det_at_xk / det_at_half
};

UraLocalMax ura_local_max(int k);

struct PerturbationFinding {
    int n;
    Alphabet alphabet;
    Word base_word;  // the maximizer whose rotation produced the finding
    int rotation;
    mpz_class det_at_extreme;               // signed det at the endpoint value
    mpz_class derivative_into_interior;     // d|det|/d(eps) moving off the endpoint
    // Grid point (x, |det(x)|) with |det(x)| > D(n), when one exists.
    std::optional<std::pair<mpq_class, mpq_class>> interior_witness;
    oracle::IntPolynomial poly;
};

// For every rotation of every maximizer, vary the position-0 stripe and
// flag first-order |det| increases into the interior, plus grid
// witnesses x = i/64 for the degenerate (zero-derivative) cases.
// Not exhaustive over non-maximizing words, matching the source analysis.
std::vector<PerturbationFinding> perturbation_scan(int n, Alphabet alphabet,
                                                   std::span<const Word> maximizers);

}  // namespace circdet::conjectures
