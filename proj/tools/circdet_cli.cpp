// circdet command-line frontend. Talks to the core only through the
// shared-library C API.
#include <cstdio>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "circdet.h"

using nlohmann::json;

namespace {

int report(cd_status st) {
    if (st != CD_OK) std::fprintf(stderr, "circdet: %s\n", cd_last_error());
    return static_cast<int>(st);
}

int print_and_free(cd_status st, char* out) {
    if (out) {
        std::printf("%s\n", out);
        cd_string_free(out);
    }
    return report(st);
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Maximal determinants of binary circulant matrices"};
    app.require_subcommand(1);

    int order = 0, workers = 1, from = 1, to = 0;
    std::string alphabet = "01";
    unsigned long long sample_size = 0, seed = 1;
    std::string output_path, checkpoint_path;
    double budget = 600.0;
    bool words_only = false, keep_maximizers = false;

    auto* search = app.add_subcommand("search", "Exhaustive necklace search for one order");
    search->add_option("--order", order, "Circulant order n")->required();
    search->add_option("--alphabet", alphabet, "01 or pm1");
    search->add_option("--workers", workers, "Parallel workers");
    search->add_option("--sample-size", sample_size, "Partitioner sample size T");
    search->add_option("--seed", seed, "Partitioner rng seed");
    search->add_option("--output", output_path, "Append the JSON record to this file");
    search->add_option("--checkpoint", checkpoint_path, "Per-segment checkpoint file");
    search->add_flag("--keep-maximizers", keep_maximizers, "Report all maximizing necklaces");

    auto* verify = app.add_subcommand("verify", "Check results against the reference tables");
    verify->add_option("--from", from, "First order");
    verify->add_option("--to", to, "Last order");
    verify->add_option("--alphabet", alphabet, "01 or pm1");
    verify->add_option("--workers", workers, "Parallel workers");
    verify->add_option("--budget-seconds", budget, "Per-order full-search budget");
    verify->add_flag("--words-only", words_only, "Single-word checks only, all rows");

    auto* conj = app.add_subcommand("conjectures", "Conjecture analyses");
    conj->require_subcommand(1);
    auto* conj_a = conj->add_subcommand("a", "Circulant-core classification");
    conj_a->add_option("--from", from, "First order");
    conj_a->add_option("--to", to, "Last order")->required();
    auto* conj_b = conj->add_subcommand("b", "Interior perturbation scan");
    conj_b->add_option("--order", order, "Circulant order n")->required();
    conj_b->add_option("--alphabet", alphabet, "01 or pm1");
    auto* conj_ura = conj->add_subcommand("ura", "Quadratic-residue circulant analysis");
    conj_ura->add_option("--order", order, "Prime order = 1 (mod 4)")->required();

    auto* bounds_cmd = app.add_subcommand("bounds", "Determinant upper bounds");
    bounds_cmd->add_option("--order", order, "Order n")->required();
    bounds_cmd->add_option("--alphabet", alphabet, "01 or pm1");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int rc = app.exit(e);
        return rc == 0 ? 0 : static_cast<int>(CD_EINVAL);
    }

    if (search->parsed()) {
        cd_search_options opts{};
        opts.order = order;
        opts.alphabet = alphabet.c_str();
        opts.workers = workers;
        opts.sample_size = sample_size;
        opts.seed = seed;
        opts.checkpoint_path = checkpoint_path.empty() ? nullptr : checkpoint_path.c_str();
        opts.keep_maximizers = keep_maximizers ? 1 : 0;
        char* out = nullptr;
        const cd_status st = cd_search(&opts, &out);
        if (st == CD_OK && !output_path.empty()) {
            if (FILE* f = std::fopen(output_path.c_str(), "a")) {
                std::fprintf(f, "%s\n", out);
                std::fclose(f);
            }
        }
        return print_and_free(st, out);
    }

    if (verify->parsed()) {
        if (to == 0) to = from;
        char* out = nullptr;
        std::string alpha = words_only && !verify->count("--alphabet") ? "" : alphabet;
        if (words_only && alpha.empty()) {
            // --words-only with no alphabet: run both tables
            bool all_ok = true;
            for (const char* a : {"01", "pm1"}) {
                const int hi = std::string_view(a) == "01" ? 53 : 52;
                char* part = nullptr;
                const cd_status st = cd_verify(1, hi, a, workers, budget, 1, &part);
                if (part) {
                    for (const auto& row : json::parse(part))
                        std::printf("%s n=%2d %s %s\n", row["pass"].get<bool>() ? "PASS" : "FAIL",
                                    row["n"].get<int>(), a,
                                    row["detail"].get<std::string>().c_str());
                    cd_string_free(part);
                }
                if (st != CD_OK) all_ok = false;
            }
            return all_ok ? 0 : static_cast<int>(CD_EVERIFY);
        }
        const cd_status st = cd_verify(from, to, alphabet.c_str(), workers, budget,
                                       words_only ? 1 : 0, &out);
        if (out) {
            for (const auto& row : json::parse(out))
                std::printf("%s n=%2d %s [%s] %s\n", row["pass"].get<bool>() ? "PASS" : "FAIL",
                            row["n"].get<int>(), alphabet.c_str(),
                            row["mode"].get<std::string>().c_str(),
                            row["detail"].get<std::string>().c_str());
            cd_string_free(out);
        }
        return report(st);
    }

    if (conj_a->parsed()) {
        char* out = nullptr;
        const cd_status st = cd_conjecture_a(from, to, &out);
        return print_and_free(st, out);
    }
    if (conj_b->parsed()) {
        char* out = nullptr;
        const cd_status st = cd_conjecture_b(order, alphabet.c_str(), &out);
        return print_and_free(st, out);
    }
    if (conj_ura->parsed()) {
        char* out = nullptr;
        const cd_status st = cd_ura_report(order, &out);
        return print_and_free(st, out);
    }
    if (bounds_cmd->parsed()) {
        char* out = nullptr;
        const cd_status st = cd_bounds(order, alphabet.c_str(), &out);
        return print_and_free(st, out);
    }
    return static_cast<int>(CD_EINVAL);
}
