// Command-line front end for the latin library: validation, parity reports,
// autotopy groups, bounds, enumeration, censuses, sampling and the built-in
// verification suites.

#include <CLI11.hpp>

#include <chrono>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <thread>

#include "latin/autotopy.hpp"
#include "latin/census.hpp"
#include "latin/json_io.hpp"
#include "latin/parity.hpp"
#include "latin/verify.hpp"

namespace {

// exit codes: 1 usage, 2 I/O, 3 validation, 4 internal assertion
constexpr int kExitIo = 2;
constexpr int kExitValidation = 3;
constexpr int kExitInternal = 4;

struct io_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

latin::LatinSquare load_square(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw io_error("cannot open " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return latin::parse_square(buf.str());
}

int default_threads() {
    if (const char* env = std::getenv("LATIN_THREADS")) {
        const int v = std::atoi(env);
        if (v >= 1) return v;
    }
    const unsigned hc = std::thread::hardware_concurrency();
    return hc ? static_cast<int>(hc) : 1;
}

latin::AutotopyGroup run_algo(const latin::LatinSquare& sq, const std::string& algo) {
    if (algo == "brute") return latin::autotopy_bruteforce(sq);
    if (algo == "cycle") return latin::autotopy_cycle(sq);
    return latin::autotopy_pruned(sq);
}

void print_census_text(const latin::ParityCensus& c, bool merge, latin::RoundMode mode) {
    std::cout << "n=" << c.n << " total=" << c.total
              << " mode=" << (c.mode == latin::ParityCensus::Mode::exact ? "exact" : "sampled");
    if (c.mode == latin::ParityCensus::Mode::sampled)
        std::cout << " seed=" << c.seed << " steps=" << c.steps;
    std::cout << "\nclass observed expected ratio\n";
    for (const auto& row : latin::table_report(c, merge, mode))
        std::cout << row.label << ' ' << row.observed << ' ' << row.expected << ' ' << row.ratio << '\n';
}

int print_checks(const std::vector<latin::verify::CheckResult>& checks) {
    bool all = true;
    for (const auto& c : checks) {
        std::cout << (c.pass ? "PASS" : "FAIL") << ' ' << c.name << ": " << c.detail << '\n';
        all = all && c.pass;
    }
    return all ? 0 : kExitValidation;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Latin squares: parities, autotopy groups and censuses"};
    app.require_subcommand(1);
    int threads = default_threads();
    app.add_option("--threads", threads, "parallelism degree")->check(CLI::PositiveNumber);

    std::string file, algo = "cycle", format = "text", out_dir, suite;
    bool sets = false, diagnostics = false, timing = false, tally = false, merge = false;
    int order = 0, count = 1, max_n = 21;
    long long samples = -1, steps = 0;
    std::uint64_t seed = 0;

    auto* c_validate = app.add_subcommand("validate", "check that FILE holds a Latin square");
    c_validate->add_option("file", file)->required();

    auto* c_parity = app.add_subcommand("parity", "parity type (and sets) of the square in FILE");
    c_parity->add_option("file", file)->required();
    c_parity->add_flag("--sets", sets, "also print the parity sets I and J");

    auto* c_autotopy = app.add_subcommand("autotopy", "autotopy group of the square in FILE");
    c_autotopy->add_option("file", file)->required();
    c_autotopy->add_option("--algo", algo)->check(CLI::IsMember({"brute", "cycle", "pruned"}));
    c_autotopy->add_flag("--diagnostics", diagnostics, "print candidate and check counters");
    c_autotopy->add_flag("--time", timing, "print wall-clock time");
    c_autotopy->add_option("--format", format)->check(CLI::IsMember({"text", "json"}));

    auto* c_bounds = app.add_subcommand("bounds", "upper bounds on the autotopy group order");
    c_bounds->add_option("file", file)->required();

    auto* c_enum = app.add_subcommand("enumerate", "all reduced squares of order N");
    c_enum->add_option("n", order)->required()->check(CLI::Range(1, 7));
    c_enum->add_flag("--tally", tally, "print the parity census instead of the squares");
    c_enum->add_option("--out", out_dir, "write one file per square into DIR");

    auto* c_census = app.add_subcommand("census", "parity census of order N (exact, or sampled with --samples)");
    c_census->add_option("n", order)->required()->check(CLI::PositiveNumber);
    c_census->add_option("--samples", samples, "sample size (omit for exact enumeration)");
    c_census->add_option("--seed", seed);
    c_census->add_option("--steps", steps, "proper-state moves per sample (default 10n^3)");
    c_census->add_flag("--merge-symmetric", merge, "fold (k,m) and (m,k) into one row");
    c_census->add_option("--format", format)->check(CLI::IsMember({"text", "csv", "json"}));

    auto* c_sample = app.add_subcommand("sample", "random squares of order N (Jacobson-Matthews)");
    c_sample->add_option("n", order)->required()->check(CLI::Range(2, 1000));
    c_sample->add_option("--seed", seed);
    c_sample->add_option("--count", count)->check(CLI::PositiveNumber);
    c_sample->add_option("--steps", steps, "proper-state moves per sample (default 10n^3)");

    auto* c_ident = app.add_subcommand("identities", "verify the alternating binomial identities");
    c_ident->add_option("--max", max_n)->check(CLI::Range(3, 61));

    auto* c_verify = app.add_subcommand("verify", "run a built-in verification suite");
    c_verify->add_option("suite", suite)
        ->required()
        ->check(CLI::IsMember({"table1", "examples", "theorem1", "eq1", "all"}));

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return e.get_exit_code() == 0 ? 0 : 1;
    }

    try {
        if (*c_validate) {
            const latin::LatinSquare sq = load_square(file);
            std::cout << "valid Latin square of order " << sq.order()
                      << (latin::is_reduced(sq) ? " (reduced)" : " (not reduced)") << '\n';
        } else if (*c_parity) {
            const latin::LatinSquare sq = load_square(file);
            if (format == "json") {
                std::cout << latin::parity_json(sq).dump(2) << '\n';
            } else {
                const latin::ParityType pt = latin::parity_type(sq);
                std::cout << "k=" << pt.k << " m=" << pt.m << " parity=" << latin::square_parity(sq) << '\n';
                if (sets) {
                    const latin::ParitySet ps = latin::parity_set(sq);
                    std::cout << "I = {";
                    for (std::size_t i = 0; i < ps.rows.size(); ++i) std::cout << (i ? "," : "") << ps.rows[i];
                    std::cout << "}\nJ = {";
                    for (std::size_t i = 0; i < ps.cols.size(); ++i) std::cout << (i ? "," : "") << ps.cols[i];
                    std::cout << "}\n";
                }
            }
        } else if (*c_autotopy) {
            const latin::LatinSquare sq = load_square(file);
            const auto t0 = std::chrono::steady_clock::now();
            const latin::AutotopyGroup g = run_algo(sq, algo);
            const auto t1 = std::chrono::steady_clock::now();
            if (format == "json") {
                std::cout << latin::to_json(g).dump(2) << '\n';
            } else {
                std::cout << "order " << g.order() << " (" << g.source << ")\n";
                if (diagnostics)
                    std::cout << "candidates " << g.diag.candidates_considered << ", checks "
                              << g.diag.checks_performed << '\n';
            }
            if (timing)
                std::cout << "time "
                          << std::chrono::duration_cast<std::chrono::microseconds>(t1 - t0).count() / 1000.0
                          << " ms\n";
        } else if (*c_bounds) {
            const latin::LatinSquare sq = load_square(file);
            const int n = sq.order();
            const latin::ParityType pt = latin::parity_type(sq);
            const latin::LatinSquare red = latin::reduce(sq).square;
            const bool col_prod = latin::has_column_product(red);
            const bool row_prod = latin::has_row_product(red);
            long long lambda_prod = 1;
            for (int l : latin::build_profile(red).multiplicities) lambda_prod *= latin::factorial(l);
            std::cout << "parity type (" << pt.k << "," << pt.m << ")\n"
                      << "parity bound n*n!/max(C(n,k),C(n,m)) = "
                      << n * latin::factorial(n) / std::max(latin::binomial(n, pt.k), latin::binomial(n, pt.m))
                      << '\n'
                      << "refined row-set bound n!/C(n,k) = " << latin::factorial(n) / latin::binomial(n, pt.k)
                      << (col_prod ? " (not applicable: column product exists)" : " (applicable)") << '\n'
                      << "refined column-set bound n!/C(n,m) = "
                      << latin::factorial(n) / latin::binomial(n, pt.m)
                      << (row_prod ? " (not applicable: row product exists)" : " (applicable)") << '\n'
                      << "cycle bound n^2*prod(lambda!) = " << static_cast<long long>(n) * n * lambda_prod
                      << '\n'
                      << "refined cycle bound n*prod(lambda!) = " << n * lambda_prod
                      << (col_prod ? " (not applicable: column product exists)" : " (applicable)") << '\n'
                      << "bound_parity = " << latin::bound_parity(sq) << '\n'
                      << "bound_cycle = " << latin::bound_cycle(sq) << '\n';
        } else if (*c_enum) {
            if (tally) {
                print_census_text(latin::exact_census(order, threads), merge, latin::RoundMode::half_up);
            } else if (!out_dir.empty()) {
                std::filesystem::create_directories(out_dir);
                long long i = 0;
                latin::enumerate_reduced(order, [&](const latin::LatinSquare& sq) {
                    char name[32];
                    std::snprintf(name, sizeof name, "square_%08lld.txt", i++);
                    std::ofstream out(std::filesystem::path(out_dir) / name);
                    if (!out) throw io_error("cannot write into " + out_dir);
                    out << latin::emit_square(sq);
                });
                std::cout << i << " squares written to " << out_dir << '\n';
            } else {
                latin::enumerate_reduced(order, [&](const latin::LatinSquare& sq) {
                    std::cout << latin::emit_square(sq) << '\n';
                });
            }
        } else if (*c_census) {
            latin::ParityCensus c = (samples >= 0)
                                        ? latin::sample_census(order, samples, seed, steps, threads)
                                        : latin::exact_census(order, threads);
            const latin::RoundMode mode = latin::RoundMode::half_up;
            if (format == "csv")
                std::cout << latin::census_csv(c, merge, mode);
            else if (format == "json")
                std::cout << latin::to_json(c, merge, mode).dump(2) << '\n';
            else
                print_census_text(c, merge, mode);
        } else if (*c_sample) {
            if (steps <= 0) steps = latin::jm_default_steps(order);
            for (int i = 0; i < count; ++i) {
                std::mt19937_64 rng(
                    latin::detail::splitmix64(seed + static_cast<std::uint64_t>(i)));
                std::cout << latin::emit_square(latin::jm_sample(order, steps, rng));
                if (i + 1 < count) std::cout << '\n';
            }
        } else if (*c_ident) {
            if (max_n % 2 == 0) --max_n;
            bool all = true;
            for (const auto& c : latin::identity_checks(max_n)) {
                std::cout << "n=" << c.n << ": weighted " << c.weighted_sum << " = " << c.weighted_rhs
                          << ", alternating " << c.alternating_sum << " = " << c.alternating_rhs
                          << ", double sum " << c.double_sum << (c.ok ? " ok" : " MISMATCH") << '\n';
                all = all && c.ok;
            }
            if (!all) return kExitValidation;
        } else if (*c_verify) {
            std::vector<latin::verify::CheckResult> checks;
            if (suite == "table1")
                checks = {latin::verify::criterion_table1(threads)};
            else if (suite == "examples")
                checks = {latin::verify::criterion_worked_orders(), latin::verify::criterion_diagnostics(),
                          latin::verify::criterion_bounds()};
            else if (suite == "theorem1")
                checks = {latin::verify::criterion_theorem1()};
            else if (suite == "eq1")
                checks = {latin::verify::criterion_eq1()};
            else
                checks = latin::verify::run_all(threads);
            return print_checks(checks);
        }
    } catch (const io_error& e) {
        std::cerr << "I/O error: " << e.what() << '\n';
        return kExitIo;
    } catch (const latin::internal_error& e) {
        std::cerr << "internal error: " << e.what() << '\n';
        return kExitInternal;
    } catch (const latin::validation_error& e) {
        std::cerr << "validation error: " << e.what() << '\n';
        return kExitValidation;
    }
    return 0;
}
