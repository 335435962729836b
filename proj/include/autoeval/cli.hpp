// Copyright 2026 the autoeval authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// Command-line surface: verification sweeps (all evaluators against Horner),
// benchmark grids emitted as CSV, and the Reed-Solomon syndrome demo.
//
// Seeding contract: all randomness derives from SplitMix64. The --seed value
// fully determines every sampled polynomial and evaluation point; each degree
// n runs on an independent stream seeded by a fixed mix of (seed, n), so
// results do not depend on AUTOEVAL_THREADS. Output is byte-identical across
// runs for fixed seed and flags (wall_ns stays 0 unless --wall is given).

#pragma once

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cstdlib>
#include <exception>
#include <fstream>
#include <mutex>
#include <optional>
#include <ostream>
#include <sstream>
#include <string>
#include <thread>
#include <utility>
#include <vector>

#include "CLI11.hpp"

#include "autoeval/cost_model.hpp"
#include "autoeval/evaluators.hpp"
#include "autoeval/field.hpp"
#include "autoeval/numeric.hpp"
#include "autoeval/poly.hpp"
#include "autoeval/rs_syndrome.hpp"
#include "autoeval/sampling.hpp"

namespace autoeval::cli {

namespace detail {

inline u64 mix_seed(u64 seed, u64 n) {
    SplitMix64 g(seed ^ 0x9e3779b97f4a7c15ull * (n + 1));
    return g.next();
}

struct MethodSpec {
    bool best = false;
    cost::Method m = cost::Method::horner;
    std::string name;
};

inline std::vector<std::string> split_csv(const std::string& text) {
    std::vector<std::string> parts;
    std::string cur;
    std::istringstream is(text);
    while (std::getline(is, cur, ',')) {
        if (!cur.empty()) parts.push_back(cur);
    }
    return parts;
}

inline std::vector<u64> parse_degrees(const std::string& text) {
    std::vector<u64> out;
    for (const std::string& tok : split_csv(text)) {
        std::size_t used = 0;
        u64 v = std::stoull(tok, &used);
        if (used != tok.size()) throw std::invalid_argument("bad degree: " + tok);
        out.push_back(v);
    }
    if (out.empty()) throw std::invalid_argument("empty degree list");
    return out;
}

inline std::vector<MethodSpec> default_methods(u32 s) {
    std::vector<MethodSpec> out;
    if (s == 1) {
        out.push_back({false, cost::Method::direct, "direct"});
        out.push_back({false, cost::Method::horner, "horner"});
        out.push_back({false, cost::Method::m1, "m1"});
        out.push_back({false, cost::Method::m2, "m2"});
    } else {
        out.push_back({false, cost::Method::direct, "direct"});
        out.push_back({false, cost::Method::horner, "horner"});
        out.push_back({false, cost::Method::ext_basis, "ext_basis"});
        out.push_back({false, cost::Method::ext_m2, "ext_m2"});
    }
    out.push_back({true, cost::Method::horner, "best"});
    return out;
}

inline std::vector<MethodSpec> parse_methods(const std::string& text, u32 s) {
    if (text.empty()) return default_methods(s);
    std::vector<MethodSpec> out;
    for (const std::string& tok : split_csv(text)) {
        if (tok == "best") {
            out.push_back({true, cost::Method::horner, "best"});
            continue;
        }
        std::optional<cost::Method> parsed = cost::parse_method(tok);
        if (!parsed) throw std::invalid_argument("unknown method: " + tok);
        cost::Method m = *parsed;
        if ((m == cost::Method::m1 || m == cost::Method::m2) && s != 1) {
            throw std::invalid_argument("method " + tok + " needs prime-field coefficients (--subfield 1)");
        }
        if ((m == cost::Method::ext_basis || m == cost::Method::ext_m2) && s < 2) {
            throw std::invalid_argument("method " + tok + " needs --subfield >= 2");
        }
        out.push_back({false, m, tok});
    }
    return out;
}

struct RunOutcome {
    FieldElement value;
    OpCounter counts;
    u32 L = 0;
    u64 predicted = 0;
    u64 measured = 0;  // charged where the method squares, plain otherwise
};

inline RunOutcome run_method(const MethodSpec& ms, const DensePoly& P, const FieldElement& alpha) {
    const FieldContext& F = P.context();
    u32 p = F.p();
    u32 s = P.coeff_field_s();
    u64 n = P.degree() < 0 ? 0 : static_cast<u64>(P.degree());
    RunOutcome out{F.zero(), OpCounter{}, 0, 0, 0};
    if (ms.best) {
        BestResult r = eval_best(P, alpha);
        out.value = r.value;
        out.counts = r.counts;
        out.L = r.plan.L;
        out.predicted = r.plan.predicted_mul;
        out.measured = measured_mul(r.plan.method, r.counts);
        return out;
    }
    auto finish = [&](EvalResult r, u32 L) {
        out.value = r.value;
        out.counts = r.counts;
        out.L = L;
        out.predicted = cost::predicted(ms.m, p, s, n, L);
        out.measured = measured_mul(ms.m, r.counts);
    };
    switch (ms.m) {
        case cost::Method::direct:
            finish(eval_direct(P, alpha), 0);
            break;
        case cost::Method::horner:
            finish(eval_horner(P, alpha), 0);
            break;
        case cost::Method::m1: {
            u32 L = n == 0 ? 1 : cost::lopt(cost::Method::m1, p, 1, n).L;
            finish(eval_m1(P, alpha, L), L);
            break;
        }
        case cost::Method::m2: {
            u32 L = n == 0 ? 1 : cost::lopt(cost::Method::m2, p, 1, n).L;
            finish(eval_m2(P, alpha, L), L);
            break;
        }
        case cost::Method::ext_basis:
            finish(eval_ext_basis(P, alpha), 0);
            break;
        case cost::Method::ext_m2: {
            u32 L = n == 0 ? 1 : cost::lopt(cost::Method::ext_m2, p, s, n).L;
            finish(eval_ext_m2(P, alpha, L), L);
            break;
        }
    }
    return out;
}

inline u32 thread_budget(std::size_t cells) {
    u32 threads = 1;
    if (const char* env = std::getenv("AUTOEVAL_THREADS")) {
        char* end = nullptr;
        long v = std::strtol(env, &end, 10);
        if (end && *end == '\0' && v > 0) threads = static_cast<u32>(std::min<long>(v, 64));
    }
    return static_cast<u32>(std::min<std::size_t>(threads, cells == 0 ? 1 : cells));
}

// Runs fn(i) for i in [0, cells), honoring AUTOEVAL_THREADS. Results must be
// written to pre-sized per-cell slots; the first exception wins.
template <typename Fn>
inline void parallel_cells(std::size_t cells, Fn fn) {
    u32 threads = thread_budget(cells);
    if (threads <= 1) {
        for (std::size_t i = 0; i < cells; ++i) fn(i);
        return;
    }
    std::atomic<std::size_t> next{0};
    std::vector<std::thread> pool;
    std::exception_ptr first_error;
    std::mutex mu;
    for (u32 t = 0; t < threads; ++t) {
        pool.emplace_back([&] {
            for (;;) {
                std::size_t i = next.fetch_add(1);
                if (i >= cells) return;
                try {
                    fn(i);
                } catch (...) {
                    std::lock_guard<std::mutex> lock(mu);
                    if (!first_error) first_error = std::current_exception();
                    return;
                }
            }
        });
    }
    for (std::thread& th : pool) th.join();
    if (first_error) std::rethrow_exception(first_error);
}

}  // namespace detail

inline int cmd_verify(const std::string& spec, const std::string& degrees_csv,
                      const std::string& methods_csv, u64 trials, u64 seed, u32 subfield,
                      std::ostream& out, std::ostream& err) {
    FieldContext F = FieldContext::from_spec(spec);
    if (subfield == 0) subfield = 1;
    if (F.m() % subfield != 0) {
        err << "error: --subfield " << subfield << " does not divide m=" << F.m() << "\n";
        return 2;
    }
    std::vector<u64> degrees = detail::parse_degrees(degrees_csv);
    std::vector<detail::MethodSpec> methods = detail::parse_methods(methods_csv, subfield);
    if (trials == 0) {
        out << "warning: 0 trials requested, vacuous pass\n";
        return 0;
    }

    struct Failure {
        std::string method;
        u32 L;
        u64 n;
        u64 trial;
        DensePoly poly;
        FieldElement alpha;
    };
    std::vector<u64> passes(methods.size(), 0);
    u64 total = 0;
    std::optional<Failure> failure;

    for (u64 n : degrees) {
        SplitMix64 rng(detail::mix_seed(seed, n));
        for (u64 t = 0; t < trials; ++t) {
            DensePoly P = sample_poly(F, rng, static_cast<i64>(n), subfield);
            FieldElement alpha = sample_element(F, rng);
            FieldElement expect = eval_horner(P, alpha).value;
            ++total;
            for (std::size_t mi = 0; mi < methods.size(); ++mi) {
                detail::RunOutcome r = detail::run_method(methods[mi], P, alpha);
                if (r.value == expect) {
                    ++passes[mi];
                } else if (!failure) {
                    failure = Failure{methods[mi].name, r.L, n, t, P, alpha};
                }
            }
        }
    }

    for (std::size_t mi = 0; mi < methods.size(); ++mi) {
        out << "method " << methods[mi].name << ": " << passes[mi] << "/" << total << " passed\n";
    }
    if (failure) {
        err << "first failure: method=" << failure->method << " L=" << failure->L
            << " degree=" << failure->n << " trial=" << failure->trial << "\n";
        err << "alpha=" << failure->alpha.to_string() << "\n";
        err << "polynomial:\n";
        write_poly(err, failure->poly);
        return 1;
    }
    out << "all methods agree with Horner\n";
    return 0;
}

namespace detail {

inline int bench_core(const FieldContext& F, const DensePoly* fixed_poly,
                      const std::string& degrees_csv, const std::string& methods_csv, u64 seed,
                      u32 subfield, bool wall, const std::string& out_path, std::ostream& out,
                      std::ostream& err) {
    if (subfield == 0) subfield = 1;
    if (F.m() % subfield != 0) {
        err << "error: --subfield " << subfield << " does not divide m=" << F.m() << "\n";
        return 2;
    }
    std::vector<u64> degrees;
    if (fixed_poly) {
        degrees.push_back(fixed_poly->degree() < 0 ? 0 : static_cast<u64>(fixed_poly->degree()));
    } else {
        degrees = detail::parse_degrees(degrees_csv);
    }
    std::vector<detail::MethodSpec> methods = detail::parse_methods(methods_csv, subfield);

    struct Row {
        u64 n = 0;
        std::size_t mi = 0;
        u32 L = 0;
        u64 predicted = 0, measured_mul = 0, measured_add = 0, horner_mul = 0, wall_ns = 0;
    };
    std::vector<std::vector<Row>> cells(degrees.size());

    detail::parallel_cells(degrees.size(), [&](std::size_t di) {
        u64 n = degrees[di];
        SplitMix64 rng(detail::mix_seed(seed, n));
        DensePoly P = fixed_poly ? *fixed_poly
                                 : sample_worstcase_poly(F, rng, static_cast<i64>(n), subfield);
        // Evaluation point outside {0, 1} whenever the field allows it.
        FieldElement alpha =
            F.order_minus_1() <= 1 ? F.one() : F.from_index(2 + rng.below(F.order_minus_1() - 1));
        u64 horner_mul = eval_horner(P, alpha).counts.mul;
        for (std::size_t mi = 0; mi < methods.size(); ++mi) {
            detail::RunOutcome r = detail::run_method(methods[mi], P, alpha);
            Row row;
            row.n = n;
            row.mi = mi;
            row.L = r.L;
            row.predicted = r.predicted;
            row.measured_mul = r.measured;
            row.measured_add = r.counts.add;
            row.horner_mul = horner_mul;
            if (wall) {
                u64 best = ~0ull;
                for (int rep = 0; rep < 3; ++rep) {
                    auto t0 = std::chrono::steady_clock::now();
                    detail::RunOutcome again = detail::run_method(methods[mi], P, alpha);
                    auto t1 = std::chrono::steady_clock::now();
                    if (again.value != r.value) throw std::logic_error("non-deterministic evaluation");
                    u64 ns = static_cast<u64>(
                        std::chrono::duration_cast<std::chrono::nanoseconds>(t1 - t0).count());
                    best = std::min(best, ns);
                }
                row.wall_ns = best;
            }
            cells[di].push_back(row);
        }
    });

    std::vector<Row> rows;
    for (const auto& cell : cells) rows.insert(rows.end(), cell.begin(), cell.end());
    std::sort(rows.begin(), rows.end(), [](const Row& a, const Row& b) {
        return a.n != b.n ? a.n < b.n : a.mi < b.mi;
    });

    std::ostringstream csv;
    csv << "p,s,m,n,method,L,predicted_mul,measured_mul,measured_add,horner_mul,wall_ns\n";
    bool over = false;
    for (const Row& r : rows) {
        csv << F.p() << "," << subfield << "," << F.m() << "," << r.n << "," << methods[r.mi].name
            << "," << r.L << "," << r.predicted << "," << r.measured_mul << "," << r.measured_add
            << "," << r.horner_mul << "," << r.wall_ns << "\n";
        if (r.measured_mul > r.predicted) {
            err << "error: measured " << r.measured_mul << " exceeds predicted " << r.predicted
                << " for n=" << r.n << " method=" << methods[r.mi].name << "\n";
            over = true;
        }
    }
    if (!out_path.empty()) {
        std::ofstream os(out_path);
        if (!os) {
            err << "error: cannot open output file " << out_path << "\n";
            return 2;
        }
        os << csv.str();
        out << "wrote " << rows.size() << " rows to " << out_path << "\n";
    } else {
        out << csv.str();
    }
    return over ? 1 : 0;
}

}  // namespace detail

inline int cmd_bench(const std::string& spec, const std::string& degrees_csv,
                     const std::string& methods_csv, u64 seed, u32 subfield, bool wall,
                     const std::string& out_path, const std::string& poly_path, std::ostream& out,
                     std::ostream& err) {
    if (!poly_path.empty()) {
        std::ifstream pin(poly_path);
        if (!pin) {
            err << "error: cannot open polynomial file " << poly_path << "\n";
            return 2;
        }
        PolyFile pf = read_poly(pin);
        return detail::bench_core(*pf.ctx, &pf.poly, degrees_csv, methods_csv, seed,
                                  pf.poly.coeff_field_s(), wall, out_path, out, err);
    }
    FieldContext F = FieldContext::from_spec(spec);
    return detail::bench_core(F, nullptr, degrees_csv, methods_csv, seed, subfield, wall, out_path,
                              out, err);
}

inline int cmd_rs(const std::string& demo, u64 words, u64 seed, const std::string& out_path,
                  const std::string& word_path, const std::string& synd_path, std::ostream& out,
                  std::ostream& err) {
    if (words < 1) {
        err << "error: --words must be at least 1\n";
        return 2;
    }
    RSContext rs;
    DensePoly g = build_generator(rs);
    HornerSyndromePipeline pipeline(rs);
    SplitMix64 rng(seed);

    u64 auto_mul = 0, auto_add = 0, horner_mul = 0, horner_add = 0;
    bool ok = true;
    for (u64 w = 0; w < words; ++w) {
        ReceivedWord word = demo == "worstcase" ? worst_case_word(rs)
                            : demo == "codeword" ? random_codeword(rs, g, rng)
                                                 : random_word(rs, rng);
        SyndromeSet a = syndromes_automorphic(rs, word);
        SyndromeSet h = pipeline.run(word);
        for (u32 j = 0; j < 32; ++j) {
            if (a.syndromes[j] != h.syndromes[j]) {
                err << "pipelines disagree on word " << w << " syndrome S" << (j + 1) << "\n";
                ok = false;
            }
        }
        if (demo == "codeword") {
            for (u32 j = 0; j < 32; ++j) {
                if (!a.syndromes[j].is_zero()) {
                    err << "nonzero syndrome S" << (j + 1) << " on codeword " << w << "\n";
                    ok = false;
                }
            }
        }
        if (demo == "worstcase") {
            for (u32 j = 0; j < 32; ++j) {
                if (a.per_syndrome_mul[j] != 91) {
                    err << "syndrome S" << (j + 1) << " cost " << a.per_syndrome_mul[j]
                        << " != 91\n";
                    ok = false;
                }
            }
            if (h.eval_mul != 8128) {
                err << "Horner worst-case eval cost " << h.eval_mul << " != 8128\n";
                ok = false;
            }
        }
        auto_mul += a.eval_mul;
        auto_add += a.eval_add;
        horner_mul += h.eval_mul;
        horner_add += h.eval_add;
        if (w == 0 && !word_path.empty()) {
            std::ofstream os(word_path);
            if (!os) {
                err << "error: cannot open word file " << word_path << "\n";
                return 2;
            }
            write_word(os, word);
        }
        if (w == 0 && !synd_path.empty()) {
            std::ofstream os(synd_path);
            if (!os) {
                err << "error: cannot open syndrome file " << synd_path << "\n";
                return 2;
            }
            write_syndromes(os, a);
        }
    }

    std::ostringstream csv;
    csv << "stage,muls,adds\n";
    csv << "alpha_table," << rs.alpha_table_mul() << ",0\n";
    csv << "product_table," << rs.product_table_mul() << ",0\n";
    csv << "automorphic_syndromes," << auto_mul << "," << auto_add << "\n";
    csv << "horner_powers," << pipeline.chain_mul() << ",0\n";
    csv << "horner_syndromes," << horner_mul << "," << horner_add << "\n";
    out << csv.str();
    if (!out_path.empty()) {
        std::ofstream os(out_path);
        if (!os) {
            err << "error: cannot open output file " << out_path << "\n";
            return 2;
        }
        os << csv.str();
    }

    u64 auto_total = rs.precompute_mul() + auto_mul;
    u64 horner_total = pipeline.chain_mul() + horner_mul;
    out << "measured total multiplications (" << words << " word" << (words == 1 ? "" : "s")
        << "): " << auto_total << " vs " << horner_total << "\n";
    AmortizedCost am = amortized_cost(words);
    out << "amortized model: automorphic 3823+2912*K = " << am.automorphic
        << ", horner 31+8128*K = " << am.horner << "\n";
    return ok ? 0 : 1;
}

inline int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
    CLI::App app{
        "autoeval: finite-field polynomial evaluation with Frobenius-automorphism methods.\n"
        "Randomness: SplitMix64 streams fully determined by --seed (per degree n the\n"
        "stream is reseeded from a fixed mix of seed and n, independent of\n"
        "AUTOEVAL_THREADS). Fixed seed and flags give byte-identical output; the\n"
        "wall_ns column stays 0 unless --wall is set."};
    app.require_subcommand(1);

    std::string field_spec = "p=2,m=8";
    std::string degrees = "10,100,1000";
    std::string methods;
    u64 trials = 20;
    u64 seed = 1;
    u32 subfield = 0;
    std::string out_path;

    CLI::App* verify = app.add_subcommand("verify", "check every evaluator against Horner");
    verify->add_option("--field", field_spec, "field spec, e.g. p=2,m=8[,mod=...]");
    verify->add_option("--degrees", degrees, "comma-separated degree list");
    verify->add_option("--methods", methods, "comma-separated method list (default: all applicable)");
    verify->add_option("--trials", trials, "random instances per degree");
    verify->add_option("--seed", seed, "RNG seed");
    verify->add_option("--subfield", subfield, "coefficient subfield degree s (default 1)");

    bool wall = false;
    std::string poly_path;
    CLI::App* bench = app.add_subcommand("bench", "emit a cost grid as CSV");
    bench->add_option("--field", field_spec, "field spec, e.g. p=2,m=8[,mod=...]");
    bench->add_option("--degrees", degrees, "comma-separated degree list");
    bench->add_option("--methods", methods, "comma-separated method list (default: all applicable)");
    bench->add_option("--seed", seed, "RNG seed");
    bench->add_option("--subfield", subfield, "coefficient subfield degree s (default 1)");
    bench->add_option("--out", out_path, "write CSV here instead of stdout");
    bench->add_option("--poly", poly_path, "bench one polynomial file instead of sampling");
    bench->add_flag("--wall", wall, "fill wall_ns (breaks byte-reproducibility)");

    std::string demo = "random";
    u64 rs_words = 1;
    std::string word_path, synd_path;
    CLI::App* rs = app.add_subcommand("rs", "Reed-Solomon syndrome case study over GF(2^8)");
    rs->add_option("demo", demo, "one of random|worstcase|codeword")
        ->check(CLI::IsMember({"random", "worstcase", "codeword"}));
    rs->add_option("--words", rs_words, "number of received words");
    rs->add_option("--seed", seed, "RNG seed");
    rs->add_option("--out", out_path, "write the stage-cost CSV here as well");
    rs->add_option("--word", word_path, "write the first received word to this file");
    rs->add_option("--syndromes", synd_path, "write the first word's syndromes to this file");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int rc = app.exit(e, out, err);
        return rc == 0 ? 0 : 2;
    }

    try {
        if (verify->parsed()) {
            return cmd_verify(field_spec, degrees, methods, trials, seed, subfield, out, err);
        }
        if (bench->parsed()) {
            return cmd_bench(field_spec, degrees, methods, seed, subfield, wall, out_path,
                             poly_path, out, err);
        }
        return cmd_rs(demo, rs_words, seed, out_path, word_path, synd_path, out, err);
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    }
}

}  // namespace autoeval::cli
