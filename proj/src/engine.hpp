#pragma once

#include <optional>
#include <random>
#include <span>
#include <string>
#include <vector>

#include <gmpxx.h>

#include "modfield.hpp"
#include "spectral.hpp"
#include "words.hpp"

namespace circdet::engine {

// Worker slice of the enumeration order: necklaces in [start, end),
// no end = run through 1...1 inclusive.
struct Segment {
    Word start;
    std::optional<Word> end;
};

struct SearchResult {
    int n = 0;
    Alphabet alphabet = Alphabet::Binary01;
    mpz_class max_abs_det;
    Word lex_least_word;
    mpz_class upper_bound;
    std::string ratio;
    mpz_class candidates_examined;
    mpz_class prime;
    std::vector<Word> maximizers;  // all maximizing necklaces, when retained
};

struct PartialResult {
    int n = 0;
    Alphabet alphabet = Alphabet::Binary01;
    mpz_class upper_bound;
    Segment segment;
    std::optional<mpz_class> max_abs_det;  // empty segment -> nullopt
    std::optional<Word> lex_least_word;
    mpz_class candidates;
    std::vector<Word> maximizers;
};

// Randomized quantile partitioning: sort T sampled necklaces, cut at the
// P-quantiles, pin the first segment to 0...0 and let the last run out.
std::vector<Segment> sample_partition(int n, int P, std::uint64_t T, std::mt19937_64& rng);

PartialResult search_segment(const Segment& seg, Alphabet alphabet,
                             const modfield::FieldContext& ctx,
                             bool keep_all_maximizers = false);

SearchResult merge_results(std::span<const PartialResult> parts);

struct SearchConfig {
    int workers = 1;
    std::optional<std::uint64_t> sample_size;  // default 4000 * workers
    std::optional<double> epsilon;             // alternative: T = 2 P ln P / eps^2
    std::uint64_t seed = 1;
    bool keep_all_maximizers = false;
    std::string checkpoint_path;  // empty = no checkpointing
};

SearchResult search(int n, Alphabet alphabet, const SearchConfig& config = {});

}  // namespace circdet::engine
