#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include <gmpxx.h>

#include "spectral.hpp"

namespace circdet::reference {

struct TableRow {
    int n;
    Alphabet alphabet;
    mpz_class max_value;  // raw for {0,1}; scaled by 2^{n-1} for {+-1}
    std::string ratio;
    mpz_class lex_least_decimal;
};

// Parses the resource format and verifies the checksum line.
std::vector<TableRow> parse_tables(std::string_view text);

// The embedded transcription: {0,1} rows for n <= 53, {+-1} rows for n <= 52.
const std::vector<TableRow>& tables();

std::optional<TableRow> table_lookup(int n, Alphabet alphabet);

// Signed determinant of the single circulant given by a word decimal,
// through the modular pipeline (no search).
mpz_class eval_word_det(int n, Alphabet alphabet, const mpz_class& decimal);

struct RowCheck {
    int n;
    Alphabet alphabet;
    bool pass;
    std::string mode;  // "search" or "word"
    std::string detail;
};

// Compares engine output (or, above the per-n budget, a single-word
// re-evaluation) against the table rows. Lex-least words are also
// spot-checked against the dense-matrix oracle when n <= 14.
std::vector<RowCheck> verify_range(int lo, int hi, Alphabet alphabet, int workers,
                                   double budget_seconds, bool words_only = false);

}  // namespace circdet::reference
