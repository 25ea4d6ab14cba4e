#include "cyclefactor/verify.hpp"

#include <algorithm>
#include <bit>
#include <set>

#include "cyclefactor/constructions.hpp"
#include "cyclefactor/errors.hpp"
#include "cyclefactor/exact_math.hpp"

namespace cyclefactor {

std::string verdict_name(Verdict v) {
    switch (v) {
        case Verdict::BeatsBenchmark: return "beats_benchmark";
        case Verdict::Ties: return "ties";
        case Verdict::Below: return "below";
    }
    return "?";
}

Verdict verdict_for(const BigRational& excess) {
    if (excess > 0) return Verdict::BeatsBenchmark;
    if (excess < 0) return Verdict::Below;
    return Verdict::Ties;
}

Certificate certify(const DiGraph& g, int d, std::string provenance, const EnumerateOptions& options) {
    if (d < 1) throw PreconditionError("degree must be positive");
    if (!is_d_regular(g, d)) throw PreconditionError("graph is not " + std::to_string(d) + "-regular");
    if (g.order() == 0 || g.order() % d != 0)
        throw PreconditionError("d = " + std::to_string(d) + " does not divide n = " + std::to_string(g.order()));
    const FactorStats stats = cycle_factor_stats(g, {}, false, options);

    Certificate cert;
    cert.graph_text = to_text(g);
    cert.n = g.order();
    cert.d = d;
    cert.count = stats.count;
    cert.cycle_sum = stats.cycle_sum;
    cert.expectation = stats.expectation();
    cert.benchmark = BigRational(g.order() / d) * harmonic(d);
    cert.excess = cert.expectation - cert.benchmark;
    cert.verdict = verdict_for(cert.excess);
    cert.provenance = std::move(provenance);
    return cert;
}

bool recheck(const Certificate& cert, const EnumerateOptions& options) {
    Certificate fresh;
    try {
        fresh = certify(parse_graph_text(cert.graph_text), cert.d, cert.provenance, options);
    } catch (const PreconditionError&) {
        return false;
    }
    return fresh.n == cert.n && fresh.count == cert.count && fresh.cycle_sum == cert.cycle_sum &&
           fresh.expectation == cert.expectation && fresh.benchmark == cert.benchmark && fresh.excess == cert.excess &&
           fresh.verdict == cert.verdict;
}

namespace {

class RegularGenerator {
public:
    RegularGenerator(int n, int d, const std::function<void(const DiGraph&)>& visit)
        : n_(n), d_(d), visit_(visit), in_degree_(n, 0), out_(n, 0) {}

    std::uint64_t run() {
        place(0);
        return visited_;
    }

private:
    void place(int v) {
        if (v == n_) {
            std::vector<Arc> arcs;
            for (int u = 0; u < n_; ++u)
                for (std::uint64_t m = out_[u]; m; m &= m - 1) arcs.push_back({u, std::countr_zero(m)});
            visit_(DiGraph(n_, arcs));
            ++visited_;
            return;
        }
        // Vertices after v supply the remaining in-degree; a head needing more
        // than that cannot be completed.
        const int tails_left = n_ - v;
        std::uint64_t open = 0;
        int forced = 0;
        for (int w = 0; w < n_; ++w) {
            const int deficit = d_ - in_degree_[w];
            if (deficit > tails_left) return;
            if (deficit == tails_left) ++forced;
            if (deficit > 0) open |= std::uint64_t{1} << w;
        }
        if (forced > d_) return;
        choose(v, open, 0, d_);
    }

    // Picks `need` more heads for v from `pool` (ascending, so each subset once).
    void choose(int v, std::uint64_t pool, std::uint64_t picked, int need) {
        if (need == 0) {
            out_[v] = picked;
            for (std::uint64_t m = picked; m; m &= m - 1) ++in_degree_[std::countr_zero(m)];
            place(v + 1);
            for (std::uint64_t m = picked; m; m &= m - 1) --in_degree_[std::countr_zero(m)];
            return;
        }
        if (std::popcount(pool) < need) return;
        for (std::uint64_t m = pool; m; m &= m - 1) {
            const int w = std::countr_zero(m);
            const std::uint64_t rest = m & (m - 1);
            choose(v, rest, picked | (std::uint64_t{1} << w), need - 1);
        }
    }

    int n_, d_;
    const std::function<void(const DiGraph&)>& visit_;
    std::vector<int> in_degree_;
    std::vector<std::uint64_t> out_;
    std::uint64_t visited_ = 0;
};

}  // namespace

std::uint64_t for_each_regular_digraph(int n, int d, const std::function<void(const DiGraph&)>& visit) {
    if (n < 0 || n > 16) throw PreconditionError("regular digraph generation limited to n <= 16");
    if (d < 0 || d > n) throw PreconditionError("need 0 <= d <= n");
    return RegularGenerator(n, d, visit).run();
}

bool is_union_of_looped_k2(const DiGraph& g) {
    for (int v = 0; v < g.order(); ++v) {
        if (g.out_degree(v) != 2 || g.in_degree(v) != 2 || !g.has_loop(v)) return false;
        auto out = g.out_neighbors(v);
        const Vertex partner = out[0] == v ? out[1] : out[0];
        if (!g.has_arc(partner, v)) return false;
    }
    return true;
}

D2SuiteReport d2_theorem_suite(int n_max, int limit) {
    if (n_max > limit) throw PreconditionError("d2 suite limited to n <= " + std::to_string(limit));
    D2SuiteReport report;
    for (int n = 2; n <= n_max; ++n) {
        D2OrderReport order;
        order.n = n;
        std::set<std::uint64_t> classes;
        const BigRational three_quarters_n(3 * n, 4);
        std::vector<bool> maximizer_is_union;

        for_each_regular_digraph(n, 2, [&](const DiGraph& g) {
            ++order.graphs;
            classes.insert(fingerprint(g));
            const FactorStats s = cycle_factor_stats(g, {}, true);
            auto violate = [&](std::string why) { report.violators.push_back({to_text(g), std::move(why)}); };
            if (s.count == 0) {
                violate("2-regular digraph without a cycle-factor");
                return;
            }
            const int loops = g.loop_count();
            for (const auto& [arc, used] : s.edge_usage.value()) {
                if (2 * used != s.count)
                    violate("arc " + std::to_string(arc.tail) + "->" + std::to_string(arc.head) + " has marginal " +
                            to_fraction_string(BigRational(used, s.count)));
            }
            if (2 * s.fix_sum != s.count * loops) violate("E fix differs from loops/2");
            const BigRational e = s.expectation();
            if (e > BigRational(n, 2) + BigRational(loops, 4)) violate("E c exceeds n/2 + loops/4");
            const bool union_k2 = is_union_of_looped_k2(g);
            if ((e == three_quarters_n) != union_k2)
                violate(union_k2 ? "union of K2° misses 3n/4" : "E c = 3n/4 on a graph that is not a union of K2°");

            if (order.graphs == 1 || e > order.max_expectation) {
                order.max_expectation = e;
                maximizer_is_union.clear();
            }
            if (e == order.max_expectation) maximizer_is_union.push_back(union_k2);
        });

        order.fingerprint_classes = classes.size();
        order.maximizers = maximizer_is_union.size();
        order.maximizers_all_k2_unions =
            std::all_of(maximizer_is_union.begin(), maximizer_is_union.end(), [](bool b) { return b; });
        report.orders.push_back(order);
    }
    return report;
}

bool XdCrossReport::passed() const {
    return std::all_of(entries.begin(), entries.end(), [](const XdCrossCheck& e) { return e.matches; });
}

XdCrossReport xd_cross_validation(int d_max, int limit, const EnumerateOptions& options) {
    if (d_max > limit) throw PreconditionError("X_d cross-validation limited to d <= " + std::to_string(limit));
    XdCrossReport report;
    for (int d = 3; d <= d_max; ++d) {
        XdCrossCheck check;
        check.d = d;
        const FactorStats stats = cycle_factor_stats(build_xd(d).graph, {}, false, options);
        const XdClosedForm closed = xd_closed_form(d);
        check.enumerated_count = stats.count;
        check.closed_count = closed.count;
        check.enumerated_sum = stats.cycle_sum;
        check.closed_sum = closed.cycle_sum;
        check.enumerated_expectation = stats.expectation();
        check.closed_expectation = 2 * harmonic(d) + closed.excess;

        if (check.enumerated_count != check.closed_count) {
            check.first_mismatch = "N: enumerated " + stats.count.str() + ", closed form " + closed.count.str();
        } else if (check.enumerated_sum != check.closed_sum) {
            check.first_mismatch = "T: enumerated " + stats.cycle_sum.str() + ", closed form " + closed.cycle_sum.str();
        } else if (check.enumerated_expectation != check.closed_expectation) {
            check.first_mismatch = "expectation: enumerated " + to_fraction_string(check.enumerated_expectation) +
                                   ", closed form " + to_fraction_string(check.closed_expectation);
        } else {
            const CrossingClassification cls = classify_crossing_patterns(d, limit);
            for (std::size_t i = 0; i < closed.rows.size() && check.first_mismatch.empty(); ++i) {
                const auto& got = cls.rows[i];
                const auto& want = closed.rows[i];
                if (got.count != want.count || got.mean != want.mean)
                    check.first_mismatch = "row " + pattern_row_label(want.row) + ": enumerated (" + got.count.str() +
                                           ", " + to_fraction_string(got.mean) + "), closed form (" +
                                           want.count.str() + ", " + to_fraction_string(want.mean) + ")";
            }
        }
        check.matches = check.first_mismatch.empty();
        report.entries.push_back(std::move(check));
    }
    return report;
}

bool GnClassReport::passed() const {
    return std::all_of(entries.begin(), entries.end(), [](const GnClassification& e) { return e.matches; });
}

GnClassReport gn_class_suite(int n_min, int n_max) {
    GnClassReport report;
    for (int n = n_min; n <= n_max; ++n) report.entries.push_back(gn_classification(n));
    return report;
}

RegularMaxReport exhaustive_regular_max(int n, int d) {
    if (n > 6) throw PreconditionError("exhaustive maximum limited to n <= 6");
    if (d < 1 || n % d != 0) throw PreconditionError("need d >= 1 dividing n");
    RegularMaxReport report;
    report.n = n;
    report.d = d;
    report.benchmark = BigRational(n / d) * harmonic(d);
    report.graphs = for_each_regular_digraph(n, d, [&](const DiGraph& g) {
        const FactorStats s = cycle_factor_stats(g);
        if (s.count == 0) return;
        const BigRational e = s.expectation();
        if (report.argmax_text.empty() || e > report.max_expectation) {
            report.max_expectation = e;
            report.argmax_text = to_text(g);
        }
    });
    return report;
}

}  // namespace cyclefactor
