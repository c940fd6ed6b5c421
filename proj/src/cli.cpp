#include "lcsx/cli.hpp"

#include <chrono>
#include <cmath>
#include <cstdint>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "lcsx/approx.hpp"
#include "lcsx/gen.hpp"
#include "lcsx/io.hpp"
#include "lcsx/oracle.hpp"

namespace lcsx::cli {
namespace {

constexpr int exit_ok = 0;
constexpr int exit_operational = 1;  // I/O, parse, budget, bad arguments
constexpr int exit_validation = 2;   // witness invalid or bound violated

using clock = std::chrono::steady_clock;

double elapsed_ms(clock::time_point t0) {
    return std::chrono::duration<double, std::milli>(clock::now() - t0).count();
}

std::vector<std::string> tokens_of(const subsequence_witness& w,
                                   const std::vector<std::string>& vocabulary) {
    std::vector<std::string> out;
    out.reserve(w.size());
    for (symbol_id s : w.symbols) out.push_back(vocabulary.at(s));
    return out;
}

alds_variant alds_from_name(const std::string& name) {
    return name == "triggered" ? alds_variant::triggered_recompute
                               : alds_variant::exact_recompute;
}

void ensure_budget(std::size_t len_x, std::size_t len_y, std::uint64_t budget) {
    if (static_cast<std::uint64_t>(len_x) * len_y > budget)
        throw budget_exceeded_error("exact LCS needs " + std::to_string(len_x) + " x " +
                                    std::to_string(len_y) + " cells, budget is " +
                                    std::to_string(budget));
}

struct pair_options {
    std::string file_x, file_y;
    std::string format = "tokens";
    std::string report = "-";
    std::uint64_t budget = default_cell_budget;
};

void add_pair_options(CLI::App* cmd, pair_options& opt, bool with_budget) {
    cmd->add_option("file_x", opt.file_x, "first input sequence")->required();
    cmd->add_option("file_y", opt.file_y, "second input sequence")->required();
    cmd->add_option("--format", opt.format, "input encoding")
        ->check(CLI::IsMember({"tokens", "u32"}))
        ->capture_default_str();
    cmd->add_option("--report", opt.report, "write the JSON run record here ('-' = stdout)")
        ->capture_default_str();
    if (with_budget)
        cmd->add_option("--budget", opt.budget, "cell budget for exact LCS computations")
            ->capture_default_str();
}

run_record base_record(const pair_options& opt, const loaded_pair& pair) {
    run_record rec;
    rec.file_x = opt.file_x;
    rec.file_y = opt.file_y;
    rec.digest_x = file_digest(opt.file_x);
    rec.digest_y = file_digest(opt.file_y);
    rec.len_x = pair.x.size();
    rec.len_y = pair.y.size();
    rec.n = rec.len_x + rec.len_y;
    rec.bound_4n45 = ratio_bound_4n45(rec.n);
    rec.bound_n34log = ratio_bound_n34log(rec.n);
    return rec;
}

void fill_ratio(run_record& rec) {
    if (rec.exact_len && rec.output_len >= 1)
        rec.ratio = static_cast<double>(*rec.exact_len) / static_cast<double>(rec.output_len);
}

// ---------------------------------------------------------------- gen ----

struct gen_options {
    std::string kind = "uniform";
    std::size_t n_x = 0, n_y = 0;
    std::size_t alphabet = 16;
    std::size_t planted_len = 0;
    std::uint64_t seed = 1;
    std::string format = "tokens";
    std::string out_x, out_y;
};

int do_gen(const gen_options& opt) {
    instance_spec spec;
    spec.kind = kind_from_name(opt.kind);
    spec.n_x = opt.n_x;
    spec.n_y = opt.n_y;
    spec.alphabet = opt.alphabet;
    spec.planted_len = opt.planted_len;
    spec.seed = opt.seed;
    instance inst = generate(spec);

    if (format_from_name(opt.format) == token_format::u32) {
        write_u32_file(opt.out_x, inst.x);
        write_u32_file(opt.out_y, inst.y);
    } else {
        auto as_tokens = [](const std::vector<std::uint32_t>& v) {
            std::vector<std::string> t;
            t.reserve(v.size());
            for (auto u : v) t.push_back(std::to_string(u));
            return t;
        };
        write_tokens_file(opt.out_x, as_tokens(inst.x));
        write_tokens_file(opt.out_y, as_tokens(inst.y));
    }

    nlohmann::ordered_json j;
    j["kind"] = opt.kind;
    j["n_x"] = inst.x.size();
    j["n_y"] = inst.y.size();
    j["alphabet"] = opt.alphabet;
    j["planted_len"] = opt.planted_len;
    j["seed"] = opt.seed;
    j["format"] = opt.format;
    j["file_x"] = opt.out_x;
    j["file_y"] = opt.out_y;
    j["digest_x"] = file_digest(opt.out_x);
    j["digest_y"] = file_digest(opt.out_y);
    j["lcs_lower_bound"] = inst.lcs_lower_bound;
    std::cout << j.dump() << "\n";
    return exit_ok;
}

// ------------------------------------------------- approx / exact ----

struct approx_options : pair_options {
    std::string algorithm = "better";
    std::string alds = "exact";
    bool with_exact = false;
};

int do_approx(const approx_options& opt) {
    loaded_pair pair = load_pair(opt.file_x, opt.file_y, format_from_name(opt.format));
    run_record rec = base_record(opt, pair);
    rec.algorithm = opt.algorithm;
    rec.alds = opt.alds;

    auto t0 = clock::now();
    approx_report report = opt.algorithm == "v1"
                               ? approx_lcs_v1(pair.x, pair.y, alds_from_name(opt.alds))
                               : better_approx_lcs(pair.x, pair.y, alds_from_name(opt.alds));
    rec.wall_ms = elapsed_ms(t0);
    rec.output_len = report.output.size();
    rec.passes = std::move(report.passes);
    rec.witness = std::move(report.output);
    rec.witness_tokens = tokens_of(rec.witness, pair.vocabulary);

    if (opt.with_exact) {
        ensure_budget(pair.x.size(), pair.y.size(), opt.budget);
        rec.exact_len = lcs_exact_length(pair.x, pair.y);
        fill_ratio(rec);
    }

    if (!validate_witness(rec.witness, pair.x, pair.y)) {
        std::cerr << "validation failure: emitted witness does not certify a common "
                     "subsequence\n";
        return exit_validation;
    }
    write_run_record(opt.report, rec);
    return exit_ok;
}

struct exact_options : pair_options {
    std::string traceback = "auto";
};

int do_exact(const exact_options& opt) {
    loaded_pair pair = load_pair(opt.file_x, opt.file_y, format_from_name(opt.format));
    run_record rec = base_record(opt, pair);
    rec.algorithm = "exact";
    rec.alds = "";

    traceback_mode mode = traceback_mode::automatic;
    if (opt.traceback == "full") mode = traceback_mode::full_table;
    if (opt.traceback == "linear") mode = traceback_mode::linear_space;

    auto t0 = clock::now();
    oracle_result res = lcs_exact(pair.x, pair.y, opt.budget, mode);
    rec.wall_ms = elapsed_ms(t0);
    rec.output_len = res.length;
    rec.exact_len = res.length;
    rec.witness = std::move(res.witness);
    rec.witness_tokens = tokens_of(rec.witness, pair.vocabulary);
    fill_ratio(rec);

    if (!validate_witness(rec.witness, pair.x, pair.y)) {
        std::cerr << "validation failure: exact witness does not certify a common "
                     "subsequence\n";
        return exit_validation;
    }
    write_run_record(opt.report, rec);
    return exit_ok;
}

// ------------------------------------------------------------ compare ----

int do_compare(const approx_options& opt) {
    loaded_pair pair = load_pair(opt.file_x, opt.file_y, format_from_name(opt.format));
    run_record rec = base_record(opt, pair);
    rec.algorithm = opt.algorithm;
    rec.alds = opt.alds;

    auto t0 = clock::now();
    approx_report report = opt.algorithm == "v1"
                               ? approx_lcs_v1(pair.x, pair.y, alds_from_name(opt.alds))
                               : better_approx_lcs(pair.x, pair.y, alds_from_name(opt.alds));
    rec.wall_ms = elapsed_ms(t0);
    rec.output_len = report.output.size();
    rec.passes = std::move(report.passes);
    rec.witness = std::move(report.output);
    rec.witness_tokens = tokens_of(rec.witness, pair.vocabulary);

    ensure_budget(pair.x.size(), pair.y.size(), opt.budget);
    rec.exact_len = lcs_exact_length(pair.x, pair.y);
    fill_ratio(rec);
    write_run_record(opt.report, rec);

    if (!validate_witness(rec.witness, pair.x, pair.y)) {
        std::cerr << "validation failure: witness does not certify a common subsequence\n";
        return exit_validation;
    }
    if (*rec.exact_len < rec.output_len) {
        std::cerr << "validation failure: claimed output exceeds the exact LCS length\n";
        return exit_validation;
    }
    // Multiplicative form so an empty output against a nonempty LCS fails too.
    if (static_cast<double>(*rec.exact_len) >
        rec.bound_4n45 * static_cast<double>(rec.output_len)) {
        std::cerr << "validation failure: approximation ratio exceeds 4 n^{4/5}\n";
        return exit_validation;
    }
    return exit_ok;
}

// -------------------------------------------------------------- bench ----

struct bench_options {
    std::string kind = "uniform";
    std::string algorithm = "better";
    std::string alds = "exact";
    std::size_t n_min = 1024;
    std::size_t n_max = 1048576;
    std::size_t reps = 1;
    std::size_t alphabet = 0;  // 0 = pick per n
    std::size_t planted_len = 0;
    std::uint64_t seed = 1;
    std::string out = "-";
};

int do_bench(const bench_options& opt) {
    if (opt.n_min < 2 || opt.n_min > opt.n_max)
        throw std::invalid_argument("bench needs 2 <= n-min <= n-max");

    std::ofstream file;
    if (opt.out != "-" && !opt.out.empty()) {
        file.open(opt.out);
        if (!file) throw io_error("cannot open " + opt.out);
    }
    std::ostream& os = file.is_open() ? file : std::cout;

    os << "kind,algorithm,alds,n,len_x,len_y,alphabet,rep,output_len,passes,iterations,"
          "wall_ms,us_per_n,us_per_nlogn\n";
    for (std::size_t n = opt.n_min; n <= opt.n_max; n *= 2) {
        std::size_t half = n / 2;
        instance_spec spec;
        spec.kind = kind_from_name(opt.kind);
        spec.n_x = half;
        spec.n_y = n - half;
        spec.alphabet = opt.alphabet
                            ? opt.alphabet
                            : std::max<std::size_t>(2, static_cast<std::size_t>(
                                                           std::ceil(std::sqrt(double(half)))));
        spec.planted_len =
            opt.planted_len
                ? opt.planted_len
                : static_cast<std::size_t>(std::ceil(std::pow(double(half), 0.8)));
        for (std::size_t rep = 0; rep < opt.reps; ++rep) {
            spec.seed = opt.seed + rep;
            instance inst = generate(spec);
            sequence x = fresh_sequence(inst.x);
            sequence y = fresh_sequence(inst.y);

            auto t0 = clock::now();
            approx_report report =
                opt.algorithm == "v1" ? approx_lcs_v1(x, y, alds_from_name(opt.alds))
                                      : better_approx_lcs(x, y, alds_from_name(opt.alds));
            double ms = elapsed_ms(t0);

            double us = ms * 1000.0;
            double dn = static_cast<double>(n);
            os << opt.kind << ',' << opt.algorithm << ',' << opt.alds << ',' << n << ','
               << x.size() << ',' << y.size() << ',' << spec.alphabet << ',' << rep << ','
               << report.output.size() << ',' << report.passes.size() << ','
               << report.total_iterations() << ',' << ms << ',' << us / dn << ','
               << us / (dn * std::log2(dn)) << '\n';
        }
        if (n > opt.n_max / 2) break;  // avoid overflow on n *= 2
    }
    os.flush();
    if (file.is_open() && !file) throw io_error("write failed: " + opt.out);
    return exit_ok;
}

}  // namespace

int run(int argc, const char* const* argv) {
    CLI::App app{"near-linear-time longest common subsequence approximation"};
    app.require_subcommand(1);

    gen_options g;
    auto* gen = app.add_subcommand("gen", "generate a reproducible instance pair");
    gen->add_option("--kind", g.kind, "uniform | planted | adversarial_decreasing | block_repeat")
        ->check(CLI::IsMember({"uniform", "planted", "adversarial_decreasing", "block_repeat"}))
        ->capture_default_str();
    gen->add_option("--nx", g.n_x, "length of x")->required();
    gen->add_option("--ny", g.n_y, "length of y")->required();
    gen->add_option("--alphabet", g.alphabet, "alphabet size")->capture_default_str();
    gen->add_option("--planted-len", g.planted_len, "planted common subsequence length")
        ->capture_default_str();
    gen->add_option("--seed", g.seed, "deterministic seed")->capture_default_str();
    gen->add_option("--format", g.format, "output encoding")
        ->check(CLI::IsMember({"tokens", "u32"}))
        ->capture_default_str();
    gen->add_option("--out-x", g.out_x, "path for x")->required();
    gen->add_option("--out-y", g.out_y, "path for y")->required();

    approx_options a;
    auto* approx = app.add_subcommand("approx", "run the approximation on a file pair");
    add_pair_options(approx, a, /*with_budget=*/true);
    approx->add_option("--algorithm", a.algorithm, "v1 = single pass, better = frequency sweep")
        ->check(CLI::IsMember({"v1", "better"}))
        ->capture_default_str();
    approx->add_option("--alds", a.alds, "approximate-LDS engine variant")
        ->check(CLI::IsMember({"exact", "triggered"}))
        ->capture_default_str();
    approx->add_flag("--exact", a.with_exact, "also compute the exact length for the ratio");

    exact_options e;
    auto* exact = app.add_subcommand("exact", "exact LCS with a certified witness");
    add_pair_options(exact, e, /*with_budget=*/true);
    exact->add_option("--traceback", e.traceback, "auto | full | linear")
        ->check(CLI::IsMember({"auto", "full", "linear"}))
        ->capture_default_str();

    approx_options c;
    auto* compare = app.add_subcommand("compare", "approx vs exact; fails on any violated check");
    add_pair_options(compare, c, /*with_budget=*/true);
    compare->add_option("--algorithm", c.algorithm, "v1 | better")
        ->check(CLI::IsMember({"v1", "better"}))
        ->capture_default_str();
    compare->add_option("--alds", c.alds, "approximate-LDS engine variant")
        ->check(CLI::IsMember({"exact", "triggered"}))
        ->capture_default_str();

    bench_options b;
    auto* bench = app.add_subcommand("bench", "doubling sweep, CSV timing table");
    bench->add_option("--kind", b.kind, "instance family")
        ->check(CLI::IsMember({"uniform", "planted", "adversarial_decreasing", "block_repeat"}))
        ->capture_default_str();
    bench->add_option("--algorithm", b.algorithm, "v1 | better")
        ->check(CLI::IsMember({"v1", "better"}))
        ->capture_default_str();
    bench->add_option("--alds", b.alds, "approximate-LDS engine variant")
        ->check(CLI::IsMember({"exact", "triggered"}))
        ->capture_default_str();
    bench->add_option("--n-min", b.n_min, "smallest total n = |x| + |y|")->capture_default_str();
    bench->add_option("--n-max", b.n_max, "largest total n")->capture_default_str();
    bench->add_option("--reps", b.reps, "instances per size")->capture_default_str();
    bench->add_option("--alphabet", b.alphabet, "alphabet size (0 = ceil(sqrt(n/2)))")
        ->capture_default_str();
    bench->add_option("--planted-len", b.planted_len, "planted length (0 = ceil((n/2)^0.8))")
        ->capture_default_str();
    bench->add_option("--seed", b.seed, "base seed; rep r uses seed + r")->capture_default_str();
    bench->add_option("--out", b.out, "CSV path ('-' = stdout)")->capture_default_str();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& err) {
        int code = app.exit(err);
        return code == 0 ? exit_ok : exit_operational;
    }

    try {
        if (gen->parsed()) return do_gen(g);
        if (approx->parsed()) return do_approx(a);
        if (exact->parsed()) return do_exact(e);
        if (compare->parsed()) return do_compare(c);
        if (bench->parsed()) return do_bench(b);
    } catch (const std::exception& err) {
        std::cerr << "error: " << err.what() << "\n";
        return exit_operational;
    }
    return exit_operational;
}

int run(const std::vector<std::string>& args) {
    std::vector<const char*> argv;
    argv.reserve(args.size());
    for (const auto& s : args) argv.push_back(s.c_str());
    return run(static_cast<int>(argv.size()), argv.data());
}

}  // namespace lcsx::cli
