#include "circdet.h"

#include <chrono>
#include <cstring>
#include <exception>
#include <string>

#include <json.hpp>

#include "bounds.hpp"
#include "conjectures.hpp"
#include "engine.hpp"
#include "modfield.hpp"
#include "oracle.hpp"
#include "reference.hpp"
#include "spectral.hpp"
#include "words.hpp"

using nlohmann::json;
using namespace circdet;

namespace {

thread_local std::string g_last_error;

char* dup_string(const std::string& s) {
    char* out = new char[s.size() + 1];
    std::memcpy(out, s.c_str(), s.size() + 1);
    return out;
}

cd_status fail(cd_status code, const std::string& msg) {
    g_last_error = msg;
    return code;
}

Alphabet parse_alphabet(const char* tag) {
    if (tag && std::string_view(tag) == "01") return Alphabet::Binary01;
    if (tag && std::string_view(tag) == "pm1") return Alphabet::BinaryPM1;
    throw std::invalid_argument("alphabet must be \"01\" or \"pm1\"");
}

std::string alphabet_tag(Alphabet a) { return a == Alphabet::Binary01 ? "01" : "pm1"; }

// +/- glyphs for {+-1} rows, plain bits otherwise
std::string word_display(Alphabet a, const Word& w) {
    if (a == Alphabet::Binary01) return w.str();
    std::string s = w.str();
    for (char& c : s) c = c == '1' ? '+' : '-';
    return s;
}

template <class Fn>
cd_status guarded(Fn&& fn) {
    try {
        return fn();
    } catch (const std::invalid_argument& e) {
        return fail(CD_EINVAL, e.what());
    } catch (const std::exception& e) {
        return fail(CD_EINTERNAL, e.what());
    }
}

}  // namespace

extern "C" {

struct cd_context {
    Alphabet alphabet;
    modfield::FieldContext field;
};

const char* cd_last_error(void) { return g_last_error.c_str(); }

void cd_string_free(char* s) { delete[] s; }

cd_status cd_context_new(int order, const char* alphabet, cd_context** out) {
    return guarded([&]() -> cd_status {
        if (!out) throw std::invalid_argument("null output pointer");
        const Alphabet a = parse_alphabet(alphabet);
        const mpz_class U = a == Alphabet::Binary01 ? bounds::u01_bound(order)
                                                    : bounds::upm1_bound(order);
        std::mt19937_64 rng(1);
        *out = new cd_context{a, modfield::FieldContext(order, U, rng)};
        return CD_OK;
    });
}

void cd_context_free(cd_context* ctx) { delete ctx; }

cd_status cd_context_eval_word(cd_context* ctx, const char* decimal, char** det_out) {
    return guarded([&]() -> cd_status {
        if (!ctx || !decimal || !det_out) throw std::invalid_argument("null argument");
        const Word w = words::decimal_to_word(mpz_class(decimal), ctx->field.order());
        modfield::EigenState state({ctx->alphabet, w}, ctx->field);
        const mpz_class d =
            modfield::lift_residue(state.det_residue(), ctx->field.prime(), ctx->field.bound());
        *det_out = dup_string(d.get_str());
        return CD_OK;
    });
}

cd_status cd_context_prime(cd_context* ctx, char** decimal_out) {
    return guarded([&]() -> cd_status {
        if (!ctx || !decimal_out) throw std::invalid_argument("null argument");
        *decimal_out = dup_string(ctx->field.prime().get_str());
        return CD_OK;
    });
}

cd_status cd_search(const cd_search_options* opts, char** json_out) {
    return guarded([&]() -> cd_status {
        if (!opts || !json_out) throw std::invalid_argument("null argument");
        const Alphabet a = parse_alphabet(opts->alphabet);
        engine::SearchConfig cfg;
        cfg.workers = opts->workers > 0 ? opts->workers : 1;
        if (opts->sample_size) cfg.sample_size = opts->sample_size;
        cfg.seed = opts->seed;
        cfg.keep_all_maximizers = opts->keep_maximizers != 0;
        if (opts->checkpoint_path) cfg.checkpoint_path = opts->checkpoint_path;

        const auto t0 = std::chrono::steady_clock::now();
        const engine::SearchResult res = engine::search(opts->order, a, cfg);
        const double elapsed =
            std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();

        json rec{{"n", res.n},
                 {"alphabet", alphabet_tag(a)},
                 {"max_abs_det", res.max_abs_det.get_str()},
                 {"upper_bound", res.upper_bound.get_str()},
                 {"ratio", res.ratio},
                 {"lex_least_decimal", words::word_to_decimal(res.lex_least_word).get_str()},
                 {"lex_least_word", word_display(a, res.lex_least_word)},
                 {"candidates", res.candidates_examined.get_str()},
                 {"elapsed_seconds", elapsed},
                 {"prime_used", res.prime.get_str()},
                 {"seed", opts->seed}};
        if (a == Alphabet::BinaryPM1)
            rec["scaled_det"] = mpz_class(res.max_abs_det >> (res.n - 1)).get_str();
        if (cfg.keep_all_maximizers) {
            json list = json::array();
            for (const Word& w : res.maximizers)
                list.push_back(words::word_to_decimal(w).get_str());
            rec["maximizers"] = list;
        }
        *json_out = dup_string(rec.dump());
        return CD_OK;
    });
}

cd_status cd_verify(int from, int to, const char* alphabet, int workers,
                    double budget_seconds, int words_only, char** json_out) {
    return guarded([&]() -> cd_status {
        if (!json_out) throw std::invalid_argument("null argument");
        const Alphabet a = parse_alphabet(alphabet);
        const auto checks = reference::verify_range(from, to, a, workers > 0 ? workers : 1,
                                                    budget_seconds, words_only != 0);
        json list = json::array();
        bool all_pass = true;
        for (const auto& c : checks) {
            all_pass = all_pass && c.pass;
            list.push_back({{"n", c.n},
                            {"alphabet", alphabet_tag(c.alphabet)},
                            {"pass", c.pass},
                            {"mode", c.mode},
                            {"detail", c.detail}});
        }
        *json_out = dup_string(list.dump());
        return all_pass ? CD_OK : fail(CD_EVERIFY, "one or more table rows failed");
    });
}

cd_status cd_table_lookup(int order, const char* alphabet, char** json_out) {
    return guarded([&]() -> cd_status {
        if (!json_out) throw std::invalid_argument("null argument");
        const Alphabet a = parse_alphabet(alphabet);
        const auto row = reference::table_lookup(order, a);
        if (!row) {
            *json_out = dup_string("null");
            return CD_OK;
        }
        json rec{{"n", row->n},
                 {"alphabet", alphabet_tag(a)},
                 {"value", row->max_value.get_str()},
                 {"ratio", row->ratio},
                 {"decimal", row->lex_least_decimal.get_str()}};
        *json_out = dup_string(rec.dump());
        return CD_OK;
    });
}

cd_status cd_bounds(int order, const char* alphabet, char** json_out) {
    return guarded([&]() -> cd_status {
        if (!json_out) throw std::invalid_argument("null argument");
        const Alphabet a = parse_alphabet(alphabet);
        const mpz_class U = a == Alphabet::Binary01 ? bounds::u01_bound(order)
                                                    : bounds::upm1_bound(order);
        json rec{{"n", order},
                 {"alphabet", alphabet_tag(a)},
                 {"upper_bound", U.get_str()},
                 {"hbe_floor", bounds::hbe_floor_scaled(order, 0).get_str()}};
        *json_out = dup_string(rec.dump());
        return CD_OK;
    });
}

cd_status cd_conjecture_a(int from, int to, char** json_out) {
    return guarded([&]() -> cd_status {
        if (!json_out) throw std::invalid_argument("null argument");
        json list = json::array();
        bool all_consistent = true;
        for (int n = from; n <= to; ++n) {
            const auto row = reference::table_lookup(n, Alphabet::Binary01);
            if (!row) throw std::invalid_argument("order outside table range");
            const auto rep =
                conjectures::conjecture_a_status(n, row->max_value, bounds::u01_bound(n));
            all_consistent = all_consistent && rep.consistent;
            json classes = json::array();
            for (const auto c : rep.classes) {
                switch (c) {
                    case conjectures::CoreClass::PrimeP3Mod4: classes.push_back("prime_3_mod_4"); break;
                    case conjectures::CoreClass::TwinPrimeProduct: classes.push_back("twin_prime_product"); break;
                    case conjectures::CoreClass::MersenneForm: classes.push_back("mersenne_form"); break;
                    case conjectures::CoreClass::HallPrime: classes.push_back("hall_prime"); break;
                }
            }
            list.push_back({{"n", n},
                            {"bound_attained", rep.bound_attained},
                            {"classes", classes},
                            {"consistent", rep.consistent}});
        }
        *json_out = dup_string(list.dump());
        return all_consistent ? CD_OK
                              : fail(CD_EINTERNAL, "classification inconsistent with data");
    });
}

cd_status cd_conjecture_b(int order, const char* alphabet, char** json_out) {
    return guarded([&]() -> cd_status {
        if (!json_out) throw std::invalid_argument("null argument");
        const Alphabet a = parse_alphabet(alphabet);
        if (order > 32) throw std::invalid_argument("perturbation scan is limited to order <= 32");
        engine::SearchConfig cfg;
        cfg.keep_all_maximizers = true;
        const engine::SearchResult res = engine::search(order, a, cfg);
        const auto findings = conjectures::perturbation_scan(order, a, res.maximizers);
        json list = json::array();
        for (const auto& f : findings) {
            json rec{{"n", f.n},
                     {"alphabet", alphabet_tag(a)},
                     {"base_decimal", words::word_to_decimal(f.base_word).get_str()},
                     {"rotation", f.rotation},
                     {"det_at_extreme", f.det_at_extreme.get_str()},
                     {"derivative_into_interior", f.derivative_into_interior.get_str()}};
            if (f.interior_witness) {
                rec["witness_x"] = f.interior_witness->first.get_str();
                rec["witness_abs_det"] = f.interior_witness->second.get_str();
            }
            list.push_back(rec);
        }
        json rep{{"n", order},
                 {"alphabet", alphabet_tag(a)},
                 {"max_abs_det", res.max_abs_det.get_str()},
                 {"exhaustive", false},  // only maximizer rotations are scanned
                 {"findings", list}};
        *json_out = dup_string(rep.dump());
        return CD_OK;
    });
}

cd_status cd_ura_report(int order, char** json_out) {
    return guarded([&]() -> cd_status {
        if (!json_out) throw std::invalid_argument("null argument");
        const int k = (order - 1) / 4;
        const CirculantSpec spec = conjectures::ura_spec(order);

        // closed form vs dense-oracle interpolation: equality at n+2 points
        // pins polynomials of degree <= n
        const auto interpolated = oracle::det_polynomial_in_entry(spec, 0);
        bool closed_form_matches = true;
        for (int x = -1; x <= order && closed_form_matches; ++x)
            closed_form_matches =
                oracle::poly_eval(interpolated, x) == conjectures::ura_det_closed(order, x);
        if (!closed_form_matches)
            throw std::runtime_error("closed-form determinant cross-check failed");

        const auto lm = conjectures::ura_local_max(k);
        const auto row = reference::table_lookup(order, Alphabet::Binary01);
        json rec{{"n", order},
                 {"k", k},
                 {"closed_form_matches", true},
                 {"det_at_0", conjectures::ura_det_closed(order, 0).get_str()},
                 {"det_at_1", conjectures::ura_det_closed(order, 1).get_str()},
                 {"det_at_half", conjectures::ura_det_closed(order, mpq_class(1, 2)).get_str()},
                 {"upper_bound", bounds::u01_bound(order).get_str()},
                 {"x_k", lm.x_k},
                 {"det_at_x_k", lm.det_at_xk},
                 {"det_at_half_float", lm.det_at_half},
                 {"gain", lm.gain}};
        if (row) rec["max_abs_det"] = row->max_value.get_str();
        *json_out = dup_string(rec.dump());
        return CD_OK;
    });
}

}  // extern "C"
