#include "cyclefactor/cli.hpp"

#include <chrono>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <sstream>
#include <thread>

#include <CLI11.hpp>

#include "cyclefactor/constructions.hpp"
#include "cyclefactor/errors.hpp"
#include "cyclefactor/json_io.hpp"

namespace cyclefactor {

int default_thread_count() {
    if (const char* env = std::getenv("CYCLEFACTOR_THREADS")) {
        char* end = nullptr;
        long value = std::strtol(env, &end, 10);
        if (end != env && *end == '\0' && value > 0 && value <= 1024) return static_cast<int>(value);
    }
    return std::max(1U, std::thread::hardware_concurrency());
}

namespace {

struct GenArgs {
    std::string family;
    int d = -1, n = -1, m = -1, k = -1, copies = 1;
    std::string out;
};

struct ExpectArgs {
    std::string graph;
    bool edge_usage = false, histogram = false, undirected = false;
    std::string convention = "strict";
    std::string format = "json";
};

struct VerifyArgs {
    std::string graph;
    int d = 0;
    std::string provenance;
};

struct SuiteArgs {
    std::string name;
    int n_max = -1, d_max = -1, n = 6, d = 3;
    bool with_d7 = false;
};

struct SearchArgs {
    SearchConfig config;
    std::string out;
};

struct ReportArgs {
    bool paper = false, with_d7 = false;
    std::string format = "json";
};

void emit_json(std::ostream& out, const Json& j) { out << j.dump(2) << '\n' << std::flush; }

std::string decimal(const BigRational& x) {
    std::ostringstream s;
    s << std::setprecision(12) << to_double(x);
    return s.str();
}

void write_text(const std::string& path, const std::string& text, std::ostream& out) {
    if (path.empty()) {
        out << text << std::flush;
        return;
    }
    std::ofstream file(path, std::ios::binary);
    if (!file) throw PreconditionError("cannot write '" + path + "'");
    file << text;
}

DiGraph repeat(const DiGraph& g, int copies) {
    if (copies < 1) throw PreconditionError("--copies must be >= 1");
    std::vector<DiGraph> parts(copies, g);
    return disjoint_union(parts);
}

int need(int value, const char* flag, const std::string& family) {
    if (value < 0) throw PreconditionError("family '" + family + "' needs " + flag);
    return value;
}

int run_gen(const GenArgs& a, std::ostream& out) {
    const std::string& f = a.family;
    DiGraph g;
    if (f == "complete") {
        g = repeat(complete_looped(need(a.m >= 0 ? a.m : a.d, "--m", f)), a.copies);
    } else if (f == "gn") {
        g = repeat(looped_bidirected_cycle(need(a.n, "--n", f)), a.copies);
    } else if (f == "xd") {
        g = repeat(build_xd(need(a.d, "--d", f)).graph, a.copies);
    } else if (f == "gkd") {
        g = repeat(build_gkd(need(a.k, "--k", f), need(a.d, "--d", f)), a.copies);
    } else if (f == "cycle") {
        g = as_symmetric_digraph(copies(cycle_graph(need(a.n, "--n", f)), a.copies));
    } else if (f == "clique") {
        g = as_symmetric_digraph(copies(clique(need(a.m, "--m", f)), a.copies));
    } else if (f == "k222") {
        g = as_symmetric_digraph(copies(complete_multipartite({2, 2, 2}), a.copies));
    } else if (f == "splice") {
        g = as_symmetric_digraph(copies(undirected_three_block_splice(need(a.m, "--m", f)), a.copies));
    } else {
        throw PreconditionError("unknown family '" + f + "'");
    }
    write_text(a.out, to_text(g), out);
    return kExitOk;
}

int run_expect(const ExpectArgs& a, int threads, std::ostream& out) {
    const DiGraph g = read_graph_file(a.graph);
    if (a.undirected) {
        const UGraph u = as_undirected(g);
        const bool permissive = a.convention == "permissive";
        const FactorStats stats = two_factor_stats(u, permissive);
        if (stats.count == 0) throw NoCycleFactorError();
        if (a.format == "table") {
            out << "n " << u.order() << "  convention " << a.convention << "  N " << stats.count << "  T "
                << stats.cycle_sum << "  E " << to_fraction_string(stats.expectation()) << " ("
                << decimal(stats.expectation()) << ")\n";
            return kExitOk;
        }
        emit_json(out, two_factor_json(u, stats, permissive, a.histogram));
        return kExitOk;
    }
    EnumerateOptions options;
    options.threads = threads;
    const FactorStats stats = cycle_factor_stats(g, {}, a.edge_usage, options);
    if (stats.count == 0) throw NoCycleFactorError();
    if (a.format == "table") {
        out << "n " << g.order() << "  d " << regular_degree(g) << "  N " << stats.count << "  T " << stats.cycle_sum
            << "  E " << to_fraction_string(stats.expectation()) << " (" << decimal(stats.expectation()) << ")\n";
        if (a.histogram)
            for (const auto& [c, k] : stats.histogram) out << "  cycles " << c << ": " << k << '\n';
        return kExitOk;
    }
    emit_json(out, expect_json(g, stats, a.histogram, a.edge_usage));
    return kExitOk;
}

int run_verify(const VerifyArgs& a, int threads, std::ostream& out) {
    EnumerateOptions options;
    options.threads = threads;
    const DiGraph g = read_graph_file(a.graph);
    emit_json(out, certificate_json(certify(g, a.d, a.provenance.empty() ? a.graph : a.provenance, options)));
    return kExitOk;
}

void print_rows(std::ostream& out, const std::vector<PatternRowStats>& rows) {
    out << std::left << std::setw(12) << "pattern" << std::setw(28) << "count" << "mean\n";
    for (const auto& r : rows)
        out << std::setw(12) << pattern_row_label(r.row) << std::setw(28) << r.count.str() << to_fraction_string(r.mean)
            << " (" << decimal(r.mean) << ")\n";
}

int run_formula(int d, const std::string& format, std::ostream& out) {
    const XdClosedForm form = xd_closed_form(d);
    if (format == "table") {
        out << "d " << d << "\nN " << form.count << "\nT " << form.cycle_sum << "\nE c "
            << to_fraction_string(form.expectation()) << " (" << decimal(form.expectation()) << ")\n2H_d "
            << to_fraction_string(2 * harmonic(d)) << "\nexcess " << to_fraction_string(form.excess) << " ("
            << decimal(form.excess) << ")\n";
        return kExitOk;
    }
    emit_json(out, formula_json(form));
    return kExitOk;
}

int run_table1(int d, const std::string& format, std::ostream& out) {
    const auto rows = table1_rows(d);
    if (format == "table") {
        print_rows(out, rows);
        return kExitOk;
    }
    emit_json(out, table1_json(d, rows));
    return kExitOk;
}

int run_suite(const SuiteArgs& a, int threads, std::ostream& out) {
    Json j;
    bool pass = true;
    if (a.name == "d2") {
        const auto report = d2_theorem_suite(a.n_max < 0 ? 6 : a.n_max);
        j = d2_suite_json(report);
        pass = report.passed();
    } else if (a.name == "xd-cross") {
        const int limit = a.with_d7 ? 7 : 6;
        EnumerateOptions options;
        options.threads = threads;
        const auto report = xd_cross_validation(a.d_max < 0 ? limit : a.d_max, limit, options);
        j = xd_cross_json(report);
        pass = report.passed();
    } else if (a.name == "gn-class") {
        const auto report = gn_class_suite(4, a.n_max < 0 ? 12 : a.n_max);
        j = gn_class_json(report);
        pass = report.passed();
    } else if (a.name == "regular-max") {
        j = regular_max_json(exhaustive_regular_max(a.n, a.d));
    } else {
        throw PreconditionError("unknown suite '" + a.name + "'");
    }
    emit_json(out, j);
    return pass ? kExitOk : kExitInconsistent;
}

void write_leaderboard(const std::string& path, const std::vector<SearchRecord>& board) {
    // Rewritten whole each iteration through a rename so an interrupted run
    // leaves the last complete leaderboard behind.
    const std::string tmp = path + ".tmp";
    {
        std::ofstream file(tmp, std::ios::binary | std::ios::trunc);
        if (!file) throw PreconditionError("cannot write '" + path + "'");
        for (const auto& r : board) file << search_record_json(r).dump() << '\n';
    }
    std::filesystem::rename(tmp, path);
}

int run_search_cmd(SearchArgs a, int threads, std::ostream& out) {
    a.config.threads = threads;
    validate(a.config);
    SearchProgress progress;
    if (!a.out.empty()) {
        progress = [&](int, const std::vector<SearchRecord>& board) { write_leaderboard(a.out, board); };
        write_leaderboard(a.out, {});
    }
    const auto board = run_search(a.config, progress);
    if (a.out.empty()) {
        for (const auto& r : board) out << search_record_json(r).dump() << '\n';
        out << std::flush;
    } else {
        write_leaderboard(a.out, board);
        Json summary;
        summary["records"] = board.size();
        summary["out"] = a.out;
        if (!board.empty()) {
            put_rational(summary, "best_excess", board.front().certificate.excess);
            summary["best_verdict"] = verdict_name(board.front().certificate.verdict);
        }
        emit_json(out, summary);
    }
    return kExitOk;
}

struct Check {
    std::string name;
    bool pass = false;
    std::string detail;
};

std::vector<Check> reproduction_checks(bool with_d7, int threads) {
    std::vector<Check> checks;
    EnumerateOptions options;
    options.threads = threads;
    auto guarded = [&](const std::string& name, auto&& body) {
        try {
            auto [ok, detail] = body();
            checks.push_back({name, ok, detail});
        } catch (const std::exception& e) {
            checks.push_back({name, false, e.what()});
        }
    };

    guarded("G6 expected cycle count is 4", [&] {
        const FactorStats s = cycle_factor_stats(looped_bidirected_cycle(6), {}, false, options);
        const std::map<int, BigInt> hist{{1, 2}, {3, 2}, {4, 9}, {5, 6}, {6, 1}};
        const bool ok = s.count == 20 && s.histogram == hist && s.expectation() == 4 &&
                        s.expectation() - 2 * harmonic(3) == BigRational(1, 3);
        return std::pair{ok, "N=" + s.count.str() + " E=" + to_fraction_string(s.expectation())};
    });

    const int d_max = with_d7 ? 7 : 6;
    const XdCrossReport cross = xd_cross_validation(d_max, d_max, options);
    for (const auto& e : cross.entries) {
        checks.push_back({"X_" + std::to_string(e.d) + " enumeration matches closed form", e.matches,
                          e.matches ? "N=" + e.enumerated_count.str() + " E=" + to_fraction_string(e.enumerated_expectation)
                                    : e.first_mismatch});
    }

    guarded("excess positive for 3 <= d <= 500 and d^2 excess near 6", [&] {
        bool ok = f_positivity(500);
        for (int d = 3; d <= 500 && ok; ++d) ok = xd_excess_closed_form(d) > 0;
        const BigRational probe = asymptotic_excess_probe(500);
        ok = ok && probe > BigRational(58, 10) && probe < BigRational(62, 10);
        return std::pair{ok, "d^2 excess at 500 = " + decimal(probe)};
    });

    auto undirected = [&](const std::string& name, const UGraph& g, bool permissive, const BigRational& want) {
        guarded(name, [&] {
            const BigRational e = two_factor_stats(g, permissive).expectation();
            return std::pair{e == want, "E=" + to_fraction_string(e)};
        });
    };
    undirected("C6 with single edges as 2-cycles gives 7/3", cycle_graph(6), true, BigRational(7, 3));
    undirected("2K3 gives 2", copies(clique(3), 2), false, BigRational(2));
    undirected("K222 strict gives 6/5", complete_multipartite({2, 2, 2}), false, BigRational(6, 5));
    undirected("K5 strict gives 1", clique(5), false, BigRational(1));
    guarded("6K5 and 5K222 both give 6 by additivity", [&] {
        const BigRational k5 = 6 * two_factor_stats(clique(5), false).expectation();
        const BigRational k222 = 5 * two_factor_stats(complete_multipartite({2, 2, 2}), false).expectation();
        return std::pair{k5 == 6 && k222 == 6, "6K5=" + to_fraction_string(k5) + " 5K222=" + to_fraction_string(k222)};
    });
    return checks;
}

int run_report(const ReportArgs& a, int threads, std::ostream& out) {
    if (!a.paper) throw PreconditionError("report needs --paper");
    const auto checks = reproduction_checks(a.with_d7, threads);
    const bool pass = std::all_of(checks.begin(), checks.end(), [](const Check& c) { return c.pass; });
    if (a.format == "table") {
        for (const auto& c : checks) out << (c.pass ? "PASS  " : "FAIL  ") << c.name << "  [" << c.detail << "]\n";
        out << (pass ? "all checks passed\n" : "some checks FAILED\n") << std::flush;
    } else {
        Json j;
        j["report"] = "reproduction";
        j["pass"] = pass;
        Json list = Json::array();
        for (const auto& c : checks) list.push_back({{"name", c.name}, {"pass", c.pass}, {"detail", c.detail}});
        j["checks"] = std::move(list);
        emit_json(out, j);
    }
    return pass ? kExitOk : kExitInconsistent;
}

}  // namespace

int dispatch(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Exact cycle-factor statistics for regular digraphs"};
    app.require_subcommand(1);
    app.fallthrough();
    int threads = default_thread_count();
    app.add_option("--threads", threads, "Worker threads (default: CYCLEFACTOR_THREADS or hardware)")
        ->check(CLI::Range(1, 1024));
    const std::vector<std::string> formats{"json", "table"};

    GenArgs gen;
    auto* gen_cmd = app.add_subcommand("gen", "Write a graph family in the text graph format");
    gen_cmd->add_option("--family", gen.family, "complete | gn | xd | gkd | cycle | clique | k222 | splice")
        ->required()
        ->check(CLI::IsMember({"complete", "gn", "xd", "gkd", "cycle", "clique", "k222", "splice"}));
    gen_cmd->add_option("--d", gen.d, "Degree (xd, gkd; complete when --m is absent)");
    gen_cmd->add_option("--n", gen.n, "Order (gn, cycle)");
    gen_cmd->add_option("--m", gen.m, "Block size (complete, clique, splice)");
    gen_cmd->add_option("--k", gen.k, "Number of d-blocks (gkd)");
    gen_cmd->add_option("--copies", gen.copies, "Disjoint copies")->check(CLI::PositiveNumber);
    gen_cmd->add_option("--out", gen.out, "Output file (default stdout)");

    ExpectArgs expect;
    auto* expect_cmd = app.add_subcommand("expect", "Exact cycle-factor statistics of a graph file");
    expect_cmd->add_option("--graph", expect.graph, "Graph file")->required();
    expect_cmd->add_flag("--edge-usage", expect.edge_usage, "Per-arc factor counts");
    expect_cmd->add_flag("--histogram", expect.histogram, "Histogram of cycle counts");
    expect_cmd->add_flag("--undirected", expect.undirected, "Treat a symmetric loopless graph as undirected 2-factors");
    expect_cmd->add_option("--convention", expect.convention, "strict | permissive (undirected only)")
        ->check(CLI::IsMember({"strict", "permissive"}));
    expect_cmd->add_option("--format", expect.format)->check(CLI::IsMember(formats));

    VerifyArgs verify;
    auto* verify_cmd = app.add_subcommand("verify", "Certificate against the clique benchmark");
    verify_cmd->add_option("--graph", verify.graph, "Graph file")->required();
    verify_cmd->add_option("--d", verify.d, "Degree")->required()->check(CLI::PositiveNumber);
    verify_cmd->add_option("--provenance", verify.provenance, "Free-text origin");

    int formula_d = 0;
    std::string formula_format = "json";
    auto* formula_cmd = app.add_subcommand("formula", "Closed-form N, T and excess of X_d");
    formula_cmd->add_option("--d", formula_d, "Degree >= 3")->required()->check(CLI::Range(3, 100000));
    formula_cmd->add_option("--format", formula_format)->check(CLI::IsMember(formats));

    int table_d = 0;
    std::string table_format = "json";
    auto* table_cmd = app.add_subcommand("table1", "Crossing-pattern table of X_d");
    table_cmd->add_option("--d", table_d, "Degree >= 3")->required()->check(CLI::Range(3, 100000));
    table_cmd->add_option("--format", table_format)->check(CLI::IsMember(formats));

    SuiteArgs suite;
    auto* suite_cmd = app.add_subcommand("suite", "Exhaustive verification suites");
    suite_cmd->add_option("--name", suite.name, "d2 | xd-cross | gn-class | regular-max")
        ->required()
        ->check(CLI::IsMember({"d2", "xd-cross", "gn-class", "regular-max"}));
    suite_cmd->add_option("--n-max", suite.n_max, "Largest order (d2, gn-class)");
    suite_cmd->add_option("--d-max", suite.d_max, "Largest degree (xd-cross)");
    suite_cmd->add_flag("--with-d7", suite.with_d7, "Allow d = 7 in xd-cross");
    suite_cmd->add_option("--n", suite.n, "Order (regular-max)");
    suite_cmd->add_option("--d", suite.d, "Degree (regular-max)");

    SearchArgs search;
    auto* search_cmd = app.add_subcommand("search", "Beam search for regular digraphs with positive excess");
    search_cmd->add_option("--n", search.config.n, "Order")->required();
    search_cmd->add_option("--d", search.config.d, "Degree")->required();
    search_cmd->add_option("--seed", search.config.seed, "RNG seed")->capture_default_str();
    search_cmd->add_option("--pop", search.config.population, "Beam width")->capture_default_str();
    search_cmd->add_option("--iters", search.config.iterations, "Iterations")->capture_default_str();
    search_cmd->add_option("--moves", search.config.moves_per_step, "Swaps per mutation")->capture_default_str();
    search_cmd->add_option("--restart-after", search.config.restart_after, "Stagnation threshold")
        ->capture_default_str();
    search_cmd->add_option("--out", search.out, "JSON-lines leaderboard (default stdout)");

    ReportArgs report;
    auto* report_cmd = app.add_subcommand("report", "Reproduce the published values");
    report_cmd->add_flag("--paper", report.paper, "Run every reproduction check");
    report_cmd->add_flag("--with-d7", report.with_d7, "Include X_7 (slower)");
    report_cmd->add_option("--format", report.format)->check(CLI::IsMember(formats));

    std::vector<const char*> argv;
    for (const auto& a : args) argv.push_back(a.c_str());
    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return kExitOk;
    } catch (const CLI::CallForAllHelp&) {
        out << app.help("", CLI::AppFormatMode::All);
        return kExitOk;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << '\n';
        return kExitPrecondition;
    }

    try {
        if (*gen_cmd) return run_gen(gen, out);
        if (*expect_cmd) return run_expect(expect, threads, out);
        if (*verify_cmd) return run_verify(verify, threads, out);
        if (*formula_cmd) return run_formula(formula_d, formula_format, out);
        if (*table_cmd) return run_table1(table_d, table_format, out);
        if (*suite_cmd) return run_suite(suite, threads, out);
        if (*search_cmd) return run_search_cmd(search, threads, out);
        if (*report_cmd) return run_report(report, threads, out);
    } catch (const PreconditionError& e) {
        err << "error: " << e.what() << '\n';
        return kExitPrecondition;
    } catch (const GenerationError& e) {
        err << "error: " << e.what() << '\n';
        return kExitPrecondition;
    } catch (const ConsistencyError& e) {
        err << "internal consistency failure: " << e.what() << '\n';
        return kExitInconsistent;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << '\n';
        return 1;
    }
    return kExitPrecondition;
}

}  // namespace cyclefactor
