// Command-line front end: basis listing, matrix export, determinant
// queries, identity verification, kernel and singular-parameter reports,
// and the brute-vs-closed benchmark.
//
// Exit codes: 0 success, 1 verification failure, 2 usage/configuration
// error.

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "CLI11.hpp"

#include "qalg/bench.hpp"
#include "qalg/io.hpp"
#include "qalg/quon.hpp"
#include "qalg/representation.hpp"
#include "qalg/spectra.hpp"
#include "qalg/twisted.hpp"
#include "qalg/verify.hpp"

using namespace qalg;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitVerificationFailure = 1;
constexpr int kExitUsage = 2;

struct QSource {
    std::string file;        // nonempty: read from JSON file
    std::optional<std::uint64_t> random_seed;
    bool ones = false;
    bool zeros = false;
};

struct Options {
    std::vector<int> set_labels;
    QSource qsource;
    std::string field = "rational";
    std::uint64_t prime = kDefaultPrime;
    std::string format = "csv";
    std::string output;

    std::string op;
    int level = 0;
    std::vector<int> ab;
    std::string method = "both";

    std::string suite = "all";
    int n = 3;
    int seeds = 5;
    std::uint64_t seed = 1;
    bool inject_failure = false;

    int bench_n = 6;
    int trials = 1;
    double budget_seconds = 600.0;
};

std::uint64_t default_prime_from_env() {
    if (const char* env = std::getenv("QALG_PRIME")) {
        try {
            return std::stoull(env);
        } catch (const std::exception&) {
            throw ConfigError("QALG_PRIME is not a valid integer");
        }
    }
    return kDefaultPrime;
}

void emit(const Options& opts, const std::string& text) {
    if (opts.output.empty()) {
        std::cout << text;
        return;
    }
    std::ofstream out(opts.output);
    if (!out) throw ConfigError("cannot write to '" + opts.output + "'");
    out << text;
}

template <class F>
QSpec<F> build_qspec(const Options& opts, const MultisetQ& Q, const F& field) {
    const auto support = Q.support();
    if (!opts.qsource.file.empty()) {
        auto data = read_q_file(opts.qsource.file);
        return to_qspec(data, field);
    }
    if (opts.qsource.random_seed) return qspec_random(support, field, *opts.qsource.random_seed);
    if (opts.qsource.ones) return qspec_ones(std::span<const int>(support), field);
    if (opts.qsource.zeros) return qspec_zeros(std::span<const int>(support), field);
    throw ConfigError("a q-parameter source is required (--q FILE, --q-random SEED, --q-ones or --q-zeros)");
}

MultisetQ require_set(const Options& opts) {
    if (opts.set_labels.empty()) throw ConfigError("--set is required and must be nonempty");
    return MultisetQ(opts.set_labels);
}

template <class F>
Matrix<typename F::Elem> build_matrix(const std::string& op, const Options& opts, const WeightBasis& basis,
                                      const QSpec<F>& q, const F& field) {
    const int n = basis.word_length();
    auto need_ab = [&](bool strict_less, bool a_above_one) {
        if (opts.ab.size() != 2) throw ConfigError("--ab a,b is required for op " + op);
        const int a = opts.ab[0], b = opts.ab[1];
        if (a < 1 || b > n || a > b || (strict_less && a == b) || (a_above_one && a <= 1))
            throw ConfigError("indices --ab " + std::to_string(a) + "," + std::to_string(b) +
                              " out of range for op " + op);
        return std::pair<int, int>{a, b};
    };
    if (op == "AQ") return a_matrix(basis, q, field);
    if (op == "BQ") return multidegree_matrix(basis.multiset(), q, field);
    if (op == "B" || op == "C" || op == "D") {
        if (opts.level < 1) throw ConfigError("--level is required for op " + op);
        if (op == "B") return b_level_matrix(opts.level, basis, q, field);
        auto [c, d] = cd_matrices(opts.level, basis, q, field);
        return op == "C" ? c : d;
    }
    if (op == "T") {
        auto [a, b] = need_ab(false, false);
        return t_matrix(b, a, basis, q, field);
    }
    if (op == "IT") {
        auto [a, b] = need_ab(true, false);
        return mat_sub(identity_matrix(basis.dimension(), field), t_matrix(b, a, basis, q, field), field);
    }
    if (op == "ITT") {
        auto [a, b] = need_ab(false, true);
        auto tprev = t_matrix(a, a - 1, basis, q, field);
        auto m = mat_mul(mat_mul(tprev, tprev, field), t_matrix(b, a, basis, q, field), field);
        return mat_sub(identity_matrix(basis.dimension(), field), m, field);
    }
    throw ConfigError("unknown matrix op '" + op + "'");
}

std::optional<FactoredDeterminant> closed_form_for(const std::string& op, const Options& opts, const MultisetQ& Q) {
    const int n = Q.size();
    if (op == "AQ") return closed_form_determinant(ClosedFormKind::theorem_i, Q);
    if (op == "BQ") return closed_form_determinant(ClosedFormKind::theorem_ii, Q, 0, 0, 1);
    if (op == "B") {
        if (opts.level < 1 || opts.level > n) throw ConfigError("--level is required for op B");
        return closed_form_determinant(ClosedFormKind::theorem_ii, Q, 0, 0, n - opts.level + 1);
    }
    if (op == "IT") {
        if (opts.ab.size() != 2) throw ConfigError("--ab a,b is required for op IT");
        return closed_form_determinant(ClosedFormKind::lemma_i, Q, opts.ab[1], opts.ab[0]);
    }
    if (op == "ITT") {
        if (opts.ab.size() != 2) throw ConfigError("--ab a,b is required for op ITT");
        return closed_form_determinant(ClosedFormKind::lemma_ii, Q, opts.ab[1], opts.ab[0]);
    }
    return std::nullopt;  // C, D, T: brute force only
}

template <class F>
int run_matrix(const Options& opts, const F& field) {
    MultisetQ Q = require_set(opts);
    WeightBasis basis(Q);
    auto q = build_qspec(opts, Q, field);
    auto m = build_matrix(opts.op, opts, basis, q, field);
    auto table = to_matrix_table(m, basis.words(), field);
    if (opts.format == "json")
        emit(opts, matrix_json(table, opts.op, field.describe()) + "\n");
    else
        emit(opts, matrix_csv(table));
    return kExitOk;
}

template <class F>
int run_det(const Options& opts, const F& field) {
    MultisetQ Q = require_set(opts);
    WeightBasis basis(Q);
    auto q = build_qspec(opts, Q, field);

    std::optional<std::string> brute_value;
    std::optional<std::string> closed_value;
    if (opts.method == "brute" || opts.method == "both") {
        auto value = determinant(build_matrix(opts.op, opts, basis, q, field), field);
        if (opts.inject_failure) value = field.add(value, field.one());
        brute_value = field.to_string(value);
        std::cout << "brute  = " << *brute_value << "\n";
    }
    if (opts.method == "closed" || opts.method == "both") {
        auto closed = closed_form_for(opts.op, opts, Q);
        if (!closed) throw ConfigError("no closed form for op '" + opts.op + "'; use --method brute");
        closed_value = field.to_string(closed->evaluate(q, field));
        std::cout << "closed = " << *closed_value << "  [" << closed->str() << "]\n";
    }
    if (brute_value && closed_value) {
        const bool equal = *brute_value == *closed_value;
        std::cout << (equal ? "EQUAL" : "UNEQUAL") << "\n";
        return equal ? kExitOk : kExitVerificationFailure;
    }
    return kExitOk;
}

template <class F>
int run_kernel(const Options& opts, const F& field) {
    MultisetQ Q = require_set(opts);
    auto q = build_qspec(opts, Q, field);
    auto kernel = constants_basis(Q, q, field);
    std::cout << "kernel dimension: " << kernel.size() << "\n";
    int index = 0;
    for (const auto& v : kernel) {
        std::cout << "v" << index++ << " =";
        bool first = true;
        for (const auto& [word, c] : v) {
            std::cout << (first ? " " : " + ") << "(" << field.to_string(c) << ") e[" << word_to_string(word) << "]";
            first = false;
        }
        std::cout << "\n";
    }
    return kExitOk;
}

template <class F>
int run_scan(const Options& opts, const F& field) {
    MultisetQ Q = require_set(opts);
    auto q = build_qspec(opts, Q, field);
    auto report = singular_scan(Q, q, field);
    if (report.hits.empty()) {
        std::cout << "no singular subsets (sigma_T != 1 for every T)\n";
    } else {
        for (const auto& hit : report.hits) {
            std::cout << "sigma_T = 1 for T = {";
            for (std::size_t i = 0; i < hit.subset.size(); ++i)
                std::cout << (i ? "," : "") << hit.subset[i];
            std::cout << "}; predicted vanishing-order contribution " << hit.predicted_exponent << "\n";
        }
    }
    std::cout << "det B_Q " << (report.det_is_zero ? "= 0" : "!= 0") << "\n";
    std::cout << "kernel dimension: " << report.kernel_dimension << "\n";
    return kExitOk;
}

void enforce_schwartz_zippel_prime(std::uint64_t prime, int n) {
    // Confidence over F_p is only quoted when p dominates (n!)^2; refuse
    // undersized primes rather than printing a vacuous confidence line.
    long double nf = 1;
    for (int i = 2; i <= n; ++i) nf *= i;
    if (static_cast<long double>(prime) <= nf * nf)
        throw ConfigError("prime " + std::to_string(prime) + " is too small for n = " + std::to_string(n) +
                          "; need p > (n!)^2 for the randomized identity check");
}

int run_verify(const Options& opts) {
    const bool do_algebra = opts.suite == "algebra" || opts.suite == "all";
    const bool do_representation = opts.suite == "representation" || opts.suite == "all";
    const bool do_determinants = opts.suite == "determinants" || opts.suite == "all";
    if (!do_algebra && !do_representation && !do_determinants)
        throw ConfigError("unknown suite '" + opts.suite + "' (expected algebra|representation|determinants|all)");

    PrimeField fp(opts.prime);
    std::vector<std::pair<std::string, CheckResult>> rows;
    if (do_algebra)
        for (auto& r : verify_algebra(opts.n, opts.inject_failure)) rows.emplace_back("algebra", std::move(r));
    if (do_representation)
        for (auto& r : verify_representation(opts.n, fp, opts.seed, 200, opts.inject_failure))
            rows.emplace_back("representation", std::move(r));
    if (do_determinants) {
        enforce_schwartz_zippel_prime(opts.prime, opts.n);
        for (auto& r : verify_determinants(opts.n, fp, opts.seeds, opts.seed, true, opts.inject_failure))
            rows.emplace_back("determinants", std::move(r));
    }

    bool ok = true;
    for (const auto& [suite, r] : rows) {
        std::printf("[%s] %-15s %s%s%s\n", r.passed ? "PASS" : "FAIL", suite.c_str(), r.name.c_str(),
                    r.detail.empty() ? "" : " -- ", r.detail.c_str());
        ok = ok && r.passed;
    }
    if (do_determinants)
        std::printf("note: determinant checks are randomized identity tests over F_%llu (%d seeds)\n",
                    static_cast<unsigned long long>(opts.prime), opts.seeds);
    return ok ? kExitOk : kExitVerificationFailure;
}

int run_bench(const Options& opts) {
    PrimeField fp(opts.prime);
    std::printf("%3s %8s %12s %14s %12s %14s  %s\n", "n", "dim", "closed[s]", "closed mults", "brute[s]",
                "brute mults", "status");
    bool all_equal = true;
    for (int n = 2; n <= opts.bench_n; ++n) {
        for (int t = 0; t < opts.trials; ++t) {
            auto row = bench_determinant(n, fp, opts.seed + static_cast<std::uint64_t>(t), opts.budget_seconds);
            std::string status;
            if (!row.brute_completed)
                status = row.note;
            else if (row.values_equal)
                status = "EQUAL";
            else {
                status = "UNEQUAL";
                all_equal = false;
            }
            std::printf("%3d %8d %12.6f %14llu %12.6f %14llu  %s\n", row.n, row.dimension, row.closed_seconds,
                        static_cast<unsigned long long>(row.closed_mults), row.brute_seconds,
                        static_cast<unsigned long long>(row.brute_mults), status.c_str());
        }
    }
    return all_equal ? kExitOk : kExitVerificationFailure;
}

int dispatch(const std::string& command, const Options& opts) {
    const bool prime = opts.field == "prime";
    if (!prime && opts.field != "rational")
        throw ConfigError("unknown field '" + opts.field + "' (expected rational|prime)");

    if (command == "basis") {
        MultisetQ Q = require_set(opts);
        std::string out;
        for (const Word& w : multiset_words(Q)) out += word_to_string(w) + "\n";
        emit(opts, out);
        return kExitOk;
    }
    if (command == "matrix") return prime ? run_matrix(opts, PrimeField(opts.prime)) : run_matrix(opts, RationalField{});
    if (command == "det") {
        if (prime && opts.qsource.random_seed && opts.method == "both")
            enforce_schwartz_zippel_prime(opts.prime, static_cast<int>(opts.set_labels.size()));
        return prime ? run_det(opts, PrimeField(opts.prime)) : run_det(opts, RationalField{});
    }
    if (command == "kernel") return prime ? run_kernel(opts, PrimeField(opts.prime)) : run_kernel(opts, RationalField{});
    if (command == "scan") return prime ? run_scan(opts, PrimeField(opts.prime)) : run_scan(opts, RationalField{});
    if (command == "verify") return run_verify(opts);
    if (command == "bench") return run_bench(opts);
    throw ConfigError("unknown command '" + command + "'");
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact twisted-group-algebra computations on weight subspaces"};
    app.require_subcommand(1);

    Options opts;
    try {
        opts.prime = default_prime_from_env();
    } catch (const ConfigError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    }

    auto add_common = [&](CLI::App* sub, bool needs_q) {
        sub->add_option("--set", opts.set_labels, "multiset of generator labels, e.g. --set 1,2,3")->delimiter(',');
        sub->add_option("--field", opts.field, "scalar field: rational|prime (default rational)");
        sub->add_option("--prime", opts.prime, "modulus for the prime field (env QALG_PRIME overrides the default)");
        if (needs_q) {
            auto* qf = sub->add_option("--q", opts.qsource.file, "q-parameter JSON file");
            auto* qr = sub->add_option("--q-random", opts.qsource.random_seed, "seeded random q-parameters");
            auto* q1 = sub->add_flag("--q-ones", opts.qsource.ones, "all q_{ij} = 1");
            auto* q0 = sub->add_flag("--q-zeros", opts.qsource.zeros, "all q_{ij} = 0");
            qf->excludes(qr)->excludes(q1)->excludes(q0);
            qr->excludes(q1)->excludes(q0);
            q1->excludes(q0);
        }
    };

    auto* basis = app.add_subcommand("basis", "print the ordered basis words of the weight space");
    add_common(basis, false);
    basis->add_option("--output", opts.output, "write to a file instead of stdout");

    auto* matrix = app.add_subcommand("matrix", "emit an operator matrix");
    add_common(matrix, true);
    matrix->add_option("--op", opts.op, "one of AQ|BQ|B|C|D|T")->required();
    matrix->add_option("--level", opts.level, "level for B/C/D");
    matrix->add_option("--ab", opts.ab, "cycle indices a,b for T")->delimiter(',');
    matrix->add_option("--format", opts.format, "csv|json (default csv)");
    matrix->add_option("--output", opts.output, "write to a file instead of stdout");

    auto* det = app.add_subcommand("det", "determinant by brute force, closed form, or both");
    add_common(det, true);
    det->add_option("--op", opts.op, "one of AQ|BQ|B|C|D|T|IT|ITT")->required();
    det->add_option("--level", opts.level, "level for B/C/D");
    det->add_option("--ab", opts.ab, "cycle indices a,b for T/IT/ITT")->delimiter(',');
    det->add_option("--method", opts.method, "brute|closed|both (default both)");
    auto* det_inject = det->add_flag("--inject-failure", opts.inject_failure, "perturb the brute value (testing hook)");
    det_inject->group("");  // hidden

    auto* verify = app.add_subcommand("verify", "run the identity suites");
    verify->add_option("--suite", opts.suite, "algebra|representation|determinants|all (default all)");
    verify->add_option("--n", opts.n, "group degree (default 3)");
    verify->add_option("--seeds", opts.seeds, "random parameter sets for determinant checks (default 5)");
    verify->add_option("--seed", opts.seed, "base random seed (default 1)");
    verify->add_option("--prime", opts.prime, "modulus for the prime field");
    auto* verify_inject =
        verify->add_flag("--inject-failure", opts.inject_failure, "corrupt one comparison (testing hook)");
    verify_inject->group("");  // hidden

    auto* kernel = app.add_subcommand("kernel", "kernel of the multidegree matrix (space of constants)");
    add_common(kernel, true);

    auto* scan = app.add_subcommand("scan", "singular-parameter report");
    add_common(scan, true);

    auto* bench = app.add_subcommand("bench", "brute vs closed-form determinant timings");
    bench->add_option("--n", opts.bench_n, "largest group degree (default 6)");
    bench->add_option("--trials", opts.trials, "trials per size (default 1)");
    bench->add_option("--budget", opts.budget_seconds, "brute-force time budget in seconds (default 600)");
    bench->add_option("--seed", opts.seed, "base random seed");
    bench->add_option("--prime", opts.prime, "modulus for the prime field");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) return app.exit(e);  // --help
        app.exit(e);
        return kExitUsage;
    }

    try {
        return dispatch(app.get_subcommands().front()->get_name(), opts);
    } catch (const ConfigError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const DimensionError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return kExitUsage;
    }
}
