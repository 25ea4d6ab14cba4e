// Acceptance gate: one line per criterion, non-zero exit if any fails.
// Usage: acceptance [--with-d7]

#include <chrono>
#include <cstring>
#include <functional>
#include <iomanip>
#include <iostream>
#include <sstream>

#include "cyclefactor/cli.hpp"
#include "cyclefactor/constructions.hpp"
#include "cyclefactor/enumerate.hpp"
#include "cyclefactor/exact_math.hpp"
#include "cyclefactor/json_io.hpp"
#include "cyclefactor/verify.hpp"
#include "support.hpp"

using namespace cyclefactor;

namespace {

struct Outcome {
    bool pass = true;
    std::string note;

    void require(bool ok, const std::string& what) {
        if (!ok && pass) {
            pass = false;
            note = what;
        }
    }
};

int failures = 0;

void criterion(int id, const std::string& name, double limit_seconds, const std::function<void(Outcome&)>& body) {
    Outcome out;
    const auto start = std::chrono::steady_clock::now();
    try {
        body(out);
    } catch (const std::exception& e) {
        out.pass = false;
        out.note = std::string("exception: ") + e.what();
    }
    const double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (seconds >= limit_seconds) out.require(false, "over the time limit");
    if (!out.pass) ++failures;
    std::ostringstream line;
    line << (out.pass ? "PASS" : "FAIL") << "  [" << std::setw(2) << id << "] " << name << "  (" << std::fixed
         << std::setprecision(2) << seconds << " s, limit " << limit_seconds << " s)";
    if (!out.note.empty()) line << "  " << out.note;
    std::cout << line.str() << std::endl;
}

std::string cli(std::vector<std::string> args, int& code) {
    args.insert(args.begin(), "cyclefactor");
    std::ostringstream out, err;
    code = dispatch(args, out, err);
    return out.str();
}

std::vector<Json> json_lines(const std::string& text) {
    std::vector<Json> out;
    std::istringstream in(text);
    std::string line;
    while (std::getline(in, line))
        if (!line.empty()) out.push_back(Json::parse(line));
    return out;
}

void check_xd(Outcome& out, int d) {
    const FactorStats stats = cycle_factor_stats(build_xd(d).graph);
    const XdClosedForm closed = xd_closed_form(d);
    const BigInt f2 = factorial(d - 2);
    const std::string tag = "d=" + std::to_string(d) + ": ";
    out.require(stats.count == closed.count, tag + "N differs from closed form");
    out.require(stats.count == f2 * f2 * xd_count_polynomial(d), tag + "N differs from the count polynomial");
    out.require(stats.cycle_sum == closed.cycle_sum, tag + "T differs from closed form");
    out.require(stats.expectation() == 2 * harmonic(d) + xd_excess_closed_form(d), tag + "expectation differs");
    const CrossingClassification cls = classify_crossing_patterns(d);
    out.require(cls.totals == stats, tag + "classification totals differ from enumeration");
    out.require(cls.rows == table1_rows(d), tag + "crossing-pattern rows differ from the table");
}

}  // namespace

int main(int argc, char** argv) {
    bool with_d7 = false;
    for (int i = 1; i < argc; ++i) {
        if (std::strcmp(argv[i], "--with-d7") == 0) {
            with_d7 = true;
        } else {
            std::cerr << "usage: acceptance [--with-d7]\n";
            return 2;
        }
    }

    criterion(1, "G_6 reproduction", 1, [](Outcome& out) {
        const FactorStats s = cycle_factor_stats(looped_bidirected_cycle(6));
        const std::map<int, BigInt> hist{{1, 2}, {3, 2}, {4, 9}, {5, 6}, {6, 1}};
        out.require(s.count == 20, "N != 20");
        out.require(s.histogram == hist, "histogram differs");
        out.require(s.expectation() == 4, "E c != 4");
        out.require(2 * harmonic(3) == BigRational(11, 3), "benchmark != 11/3");
        out.require(s.expectation() - 2 * harmonic(3) == BigRational(1, 3), "excess != 1/3");
    });

    criterion(2, "X_d cross-validation, d = 3..6", 5, [](Outcome& out) {
        for (int d = 3; d <= 6; ++d) check_xd(out, d);
    });
    if (with_d7) criterion(2, "X_d cross-validation, d = 7", 120, [](Outcome& out) { check_xd(out, 7); });

    criterion(3, "excess positivity and asymptotics", 1, [](Outcome& out) {
        for (int d = 3; d <= 500; ++d) {
            out.require(xd_excess_closed_form(d) > 0, "excess <= 0 at d=" + std::to_string(d));
            out.require(excess_cubic(d) > 0, "f <= 0 at d=" + std::to_string(d));
            out.require(excess_cubic_derivative(d) > 0, "f' <= 0 at d=" + std::to_string(d));
        }
        out.require(f_positivity(500), "f_positivity(500) is false");
        const BigRational probe = asymptotic_excess_probe(500);
        out.require(probe > BigRational(58, 10) && probe < BigRational(62, 10),
                    "d^2 excess at 500 is " + to_fraction_string(probe));
    });

    criterion(4, "padding with copies of K_d", 10, [](Outcome& out) {
        for (auto [k, d] : {std::pair{3, 3}, {4, 3}, {3, 4}}) {
            const BigRational e = cycle_factor_stats(build_gkd(k, d)).expectation();
            const std::string tag = "(k,d)=(" + std::to_string(k) + "," + std::to_string(d) + "): ";
            out.require(e == 2 * harmonic(d) + xd_excess_closed_form(d) + (k - 2) * harmonic(d), tag + "value differs");
            out.require(e > k * harmonic(d), tag + "does not exceed k H_d");
        }
    });

    criterion(5, "degree-2 statements over all 2-regular digraphs, n <= 6", 60, [](Outcome& out) {
        const D2SuiteReport r = d2_theorem_suite(6);
        out.require(r.orders.size() == 5, "orders 2..6 not all covered");
        std::uint64_t graphs = 0;
        for (const auto& o : r.orders) graphs += o.graphs;
        out.require(r.orders.back().graphs == 67950, "wrong number of labelled graphs at n=6");
        out.require(r.passed(), std::to_string(r.violators.size()) + " violators, first: " +
                                    (r.violators.empty() ? "" : r.violators.front().reason));
        out.note = out.pass ? std::to_string(graphs) + " graphs, zero violators" : out.note;
    });

    criterion(6, "G_n cycle-factor classification, 4 <= n <= 12", 30, [](Outcome& out) {
        for (int n = 4; n <= 12; ++n)
            out.require(gn_classification_check(n), "classification fails at n=" + std::to_string(n));
        out.require(cycle_matching_counts(6) == std::vector<BigInt>{1, 6, 9, 2}, "matchings of C_6 differ");
    });

    criterion(7, "forced partial permutations on K_n, n <= 6", 120, [](Outcome& out) {
        std::uint64_t checked = 0;
        for (int n = 1; n <= 6; ++n) {
            const DiGraph k = complete_looped(n);
            std::vector<int> assign(n, -1);
            std::vector<char> taken(n, 0);
            auto rec = [&](auto&& self, int v) -> void {
                if (v == n) {
                    ArcConstraints c;
                    for (int u = 0; u < n; ++u)
                        if (assign[u] >= 0) c.required.push_back({u, assign[u]});
                    int q = 0;
                    for (int s = 0; s < n; ++s) {
                        // s lies on a closed prescribed cycle iff following assign returns to s;
                        // count each cycle at its smallest vertex.
                        int w = assign[s], smallest = s;
                        while (w >= 0 && w != s) {
                            smallest = std::min(smallest, w);
                            w = assign[w];
                        }
                        if (w == s && smallest == s) ++q;
                    }
                    const int r = static_cast<int>(c.required.size());
                    const FactorStats st = cycle_factor_stats(k, c);
                    const BigInt count = oracle::factorial(n - r);
                    out.require(st.count == count, "count differs");
                    out.require(BigRational(st.cycle_sum) == BigRational(count) * (oracle::harmonic(n - r) + q),
                                "cycle sum differs");
                    ++checked;
                    return;
                }
                self(self, v + 1);
                for (int w = 0; w < n; ++w) {
                    if (taken[w]) continue;
                    assign[v] = w;
                    taken[w] = 1;
                    self(self, v + 1);
                    taken[w] = 0;
                    assign[v] = -1;
                }
            };
            rec(rec, 0);
        }
        // Partial permutations of n points: sum over r of C(n,r)^2 r!.
        std::uint64_t expected = 0;
        for (int n = 1; n <= 6; ++n) {
            std::uint64_t binom = 1;
            for (int r = 0; r <= n; ++r) {
                expected += binom * binom * static_cast<std::uint64_t>(oracle::factorial(r));
                binom = binom * (n - r) / (r + 1);
            }
        }
        out.require(checked == expected, "wrong number of partial permutations");
        out.require(expected == 15125, "partial permutation total changed");
        if (out.pass) out.note = std::to_string(checked) + " partial permutations";
    });

    criterion(8, "undirected 2-factor values", 10, [](Outcome& out) {
        auto e = [](const UGraph& g, bool permissive) { return two_factor_stats(g, permissive).expectation(); };
        out.require(e(cycle_graph(6), true) == BigRational(7, 3), "C_6 permissive != 7/3");
        out.require(e(copies(clique(3), 2), false) == 2, "2K_3 != 2");
        const FactorStats k222 = two_factor_stats(complete_multipartite({2, 2, 2}), false);
        out.require(k222.count == 20 && k222.histogram == std::map<int, BigInt>{{1, 16}, {2, 4}},
                    "K_222 factors are not 16 Hamiltonian + 4 two-triangle");
        out.require(k222.expectation() == BigRational(6, 5), "K_222 != 6/5");
        out.require(e(clique(5), false) == 1, "K_5 != 1");
        out.require(6 * e(clique(5), false) == 6 && 5 * k222.expectation() == 6, "additivity values differ from 6");
        out.require(e(copies(clique(5), 6), false) == 6, "6K_5 enumerated != 6");
    });

    criterion(9, "count equals the permanent of the double cover", 60, [](Outcome& out) {
        std::mt19937 rng(20240611);
        for (int i = 0; i < 50; ++i) {
            const int n = 1 + i % 7;
            const DiGraph g = oracle::random_digraph(n, 0.3 + 0.1 * (i % 5), rng);
            out.require(cycle_factor_stats(g).count == oracle::permanent(double_cover(g).biadjacency()),
                        "mismatch on corpus graph " + std::to_string(i));
        }
    });

    criterion(10, "search rediscovers positive excess at (6,3) and none at (4,2)", 120, [](Outcome& out) {
        int code = 0;
        const std::string first = cli({"search", "--n", "6", "--d", "3"}, code);
        out.require(code == 0, "search --n 6 --d 3 failed");
        const auto board = json_lines(first);
        out.require(!board.empty(), "empty leaderboard");
        if (!board.empty()) {
            const BigRational head = parse_fraction(board.front()["certificate"]["excess"].get<std::string>());
            out.require(head >= BigRational(1, 3), "head excess " + to_fraction_string(head) + " < 1/3");
            out.note = "head excess " + to_fraction_string(head);
        }
        out.require(cli({"search", "--n", "6", "--d", "3"}, code) == first, "second run differs");
        const std::string two = cli({"search", "--n", "4", "--d", "2"}, code);
        out.require(code == 0, "search --n 4 --d 2 failed");
        for (const auto& r : json_lines(two))
            out.require(parse_fraction(r["certificate"]["excess"].get<std::string>()) <= 0,
                        "positive excess at (4,2)");
    });

    std::cout << (failures == 0 ? "all criteria passed" : std::to_string(failures) + " criteria failed") << std::endl;
    return failures == 0 ? 0 : 1;
}
