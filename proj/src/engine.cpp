#include "engine.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <fstream>
#include <mutex>
#include <stdexcept>
#include <thread>

#include "bounds.hpp"

namespace circdet::engine {

namespace {

mpz_class upper_bound_for(int n, Alphabet alphabet) {
    return alphabet == Alphabet::Binary01 ? bounds::u01_bound(n) : bounds::upm1_bound(n);
}

std::string alphabet_tag(Alphabet a) { return a == Alphabet::Binary01 ? "01" : "pm1"; }

void append_checkpoint(const std::string& path, std::mutex& mu, const PartialResult& part) {
    if (path.empty()) return;
    std::lock_guard lock(mu);
    std::ofstream out(path, std::ios::app);
    out << part.n << ',' << alphabet_tag(part.alphabet) << ','
        << words::word_to_decimal(part.segment.start).get_str() << ','
        << (part.segment.end ? words::word_to_decimal(*part.segment.end).get_str() : "") << ','
        << (part.max_abs_det ? part.max_abs_det->get_str() : "") << ','
        << (part.lex_least_word ? words::word_to_decimal(*part.lex_least_word).get_str() : "")
        << ',' << part.candidates.get_str() << '\n';
}

}  // namespace

std::vector<Segment> sample_partition(int n, int P, std::uint64_t T, std::mt19937_64& rng) {
    if (P < 1 || T < static_cast<std::uint64_t>(P))
        throw std::invalid_argument("sample_partition: need P >= 1 and T >= P");
    if (n < 2) throw std::invalid_argument("sample_partition: need n >= 2");

    std::vector<Word> sample;
    sample.reserve(T);
    for (std::uint64_t i = 0; i < T; ++i) sample.push_back(words::random_necklace(n, rng));
    std::sort(sample.begin(), sample.end());

    // Boundary q is the (qT/P)-th sample; equal boundaries give empty
    // segments, which keeps the count at exactly P.
    std::vector<Segment> segments;
    segments.reserve(static_cast<size_t>(P));
    Word start = Word::zeros(n);
    for (int q = 1; q < P; ++q) {
        Word boundary = sample[static_cast<size_t>(T) * q / P];
        if (boundary < start) boundary = start;
        segments.push_back({start, boundary});
        start = boundary;
    }
    segments.push_back({start, std::nullopt});
    return segments;
}

PartialResult search_segment(const Segment& seg, Alphabet alphabet,
                             const modfield::FieldContext& ctx, bool keep_all_maximizers) {
    PartialResult part;
    part.n = ctx.order();
    part.alphabet = alphabet;
    part.upper_bound = ctx.bound();
    part.segment = seg;
    part.candidates = 0;
    if (seg.end && !(seg.start < *seg.end)) return part;  // empty slice

    modfield::EigenState state({alphabet, seg.start}, ctx);
    std::vector<modfield::EigenState::Change> changes;
    for (;;) {
        const mpz_class d =
            modfield::lift_residue(state.det_residue(), ctx.prime(), ctx.bound());
        const mpz_class a = abs(d);
        ++part.candidates;
        if (!part.max_abs_det || a > *part.max_abs_det) {
            part.max_abs_det = a;
            part.lex_least_word = state.word();  // enumeration ascends
            if (keep_all_maximizers) part.maximizers = {state.word()};
        } else if (keep_all_maximizers && a == *part.max_abs_det) {
            part.maximizers.push_back(state.word());
        }

        const auto succ = words::next_necklace(state.word());
        if (!succ) break;
        if (seg.end && !(succ->word < *seg.end)) break;

        changes.clear();
        std::uint64_t diff = state.word().packed() ^ succ->word.packed();
        const int n = ctx.order();
        while (diff) {
            const int bit = std::countr_zero(diff);
            const int idx = n - 1 - bit;
            changes.push_back({idx, state.word().get(idx), succ->word.get(idx)});
            diff &= diff - 1;
        }
        state.update(changes);
    }
    return part;
}

SearchResult merge_results(std::span<const PartialResult> parts) {
    if (parts.empty()) throw std::invalid_argument("merge_results: no parts");
    SearchResult res;
    res.n = parts[0].n;
    res.alphabet = parts[0].alphabet;
    res.upper_bound = parts[0].upper_bound;
    res.candidates_examined = 0;
    std::optional<mpz_class> best;
    for (const PartialResult& p : parts) {
        if (p.n != res.n || p.alphabet != res.alphabet || p.upper_bound != res.upper_bound)
            throw std::invalid_argument("merge_results: mismatched parts");
        res.candidates_examined += p.candidates;
        if (!p.max_abs_det) continue;
        if (!best || *p.max_abs_det > *best ||
            (*p.max_abs_det == *best && *p.lex_least_word < res.lex_least_word)) {
            if (!best || *p.max_abs_det > *best) res.maximizers.clear();
            best = p.max_abs_det;
            res.lex_least_word = *p.lex_least_word;
        }
        if (*p.max_abs_det == *best) {
            res.maximizers.insert(res.maximizers.end(), p.maximizers.begin(), p.maximizers.end());
        }
    }
    if (!best) throw std::invalid_argument("merge_results: all parts empty");
    res.max_abs_det = *best;
    std::sort(res.maximizers.begin(), res.maximizers.end());
    if (res.candidates_examined != words::necklace_count(res.n))
        throw std::runtime_error("merge_results: candidate count does not equal K(n)");
    res.ratio = bounds::ratio4(res.max_abs_det, res.upper_bound);
    return res;
}

SearchResult search(int n, Alphabet alphabet, const SearchConfig& config) {
    if (n < 1 || n > 64) throw std::invalid_argument("search: need 1 <= n <= 64");
    const int P = config.workers;
    if (P < 1) throw std::invalid_argument("search: need workers >= 1");

    std::mt19937_64 rng(config.seed);
    modfield::FieldContext ctx(n, upper_bound_for(n, alphabet), rng);

    std::vector<Segment> segments;
    if (P == 1 || n < 2) {
        segments.push_back({Word::zeros(n), std::nullopt});
    } else {
        std::uint64_t T;
        if (config.sample_size) {
            T = *config.sample_size;
        } else if (config.epsilon) {
            T = static_cast<std::uint64_t>(
                std::ceil(2.0 * P * std::log(static_cast<double>(P)) /
                          (*config.epsilon * *config.epsilon)));
            T = std::max<std::uint64_t>(T, static_cast<std::uint64_t>(P));
        } else {
            T = 4000ull * static_cast<std::uint64_t>(P);
        }
        segments = sample_partition(n, P, T, rng);
    }

    std::vector<PartialResult> parts(segments.size());
    std::mutex checkpoint_mu;
    auto run = [&](size_t q) {
        parts[q] = search_segment(segments[q], alphabet, ctx, config.keep_all_maximizers);
        append_checkpoint(config.checkpoint_path, checkpoint_mu, parts[q]);
    };
    if (segments.size() == 1) {
        run(0);
    } else {
        std::vector<std::thread> workers;
        workers.reserve(segments.size());
        for (size_t q = 0; q < segments.size(); ++q) workers.emplace_back(run, q);
        for (auto& t : workers) t.join();
    }

    SearchResult res = merge_results(parts);
    res.prime = ctx.prime();
    if (!config.keep_all_maximizers) res.maximizers.clear();
    return res;
}

}  // namespace circdet::engine
