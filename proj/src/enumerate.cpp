#include "cyclefactor/enumerate.hpp"

#include <algorithm>
#include <array>
#include <bit>
#include <thread>

#include "cyclefactor/constructions.hpp"
#include "cyclefactor/errors.hpp"

namespace cyclefactor {

BigRational FactorStats::expectation() const {
    if (count == 0) throw NoCycleFactorError();
    return BigRational(cycle_sum, count);
}

FactorStats& FactorStats::operator+=(const FactorStats& other) {
    count += other.count;
    cycle_sum += other.cycle_sum;
    fix_sum += other.fix_sum;
    for (const auto& [k, v] : other.histogram) histogram[k] += v;
    if (other.edge_usage) {
        if (!edge_usage) edge_usage.emplace();
        for (const auto& [a, v] : other.edge_usage.value()) (*edge_usage)[a] += v;
    }
    return *this;
}

namespace {

// Per-vertex candidate heads after applying constraints.
struct Plan {
    int n = 0;
    std::vector<std::uint64_t> allowed;
};

Plan make_plan(const DiGraph& g, const ArcConstraints& c, int max_order) {
    const int n = g.order();
    if (n > std::min(max_order, DiGraph::kMaskLimit))
        throw PreconditionError("enumeration limited to " + std::to_string(std::min(max_order, DiGraph::kMaskLimit)) +
                                " vertices, graph has " + std::to_string(n));
    auto check = [n](Arc a) {
        if (a.tail < 0 || a.tail >= n || a.head < 0 || a.head >= n)
            throw PreconditionError("constraint arc " + std::to_string(a.tail) + "->" + std::to_string(a.head) +
                                    " out of range");
    };
    std::vector<int> req_head(n, -1);
    std::vector<char> head_taken(n, 0);
    for (Arc a : c.required) {
        check(a);
        if (req_head[a.tail] != -1 || head_taken[a.head])
            throw PreconditionError("required arcs do not form a partial permutation");
        req_head[a.tail] = a.head;
        head_taken[a.head] = 1;
    }
    Plan plan{n, std::vector<std::uint64_t>(n)};
    std::uint64_t reserved = 0;
    for (Arc a : c.required) reserved |= std::uint64_t{1} << a.head;
    for (int v = 0; v < n; ++v) plan.allowed[v] = g.out_mask(v);
    for (Arc a : c.forbidden) {
        check(a);
        if (req_head[a.tail] == a.head) throw PreconditionError("an arc is both required and forbidden");
        plan.allowed[a.tail] &= ~(std::uint64_t{1} << a.head);
    }
    for (int v = 0; v < n; ++v) {
        if (req_head[v] >= 0) {
            plan.allowed[v] &= std::uint64_t{1} << req_head[v];
        } else {
            plan.allowed[v] &= ~reserved;
        }
    }
    return plan;
}

// Depth-first assignment of sigma(0), sigma(1), ... Open paths are tracked by
// their endpoints: other_end[x] is the opposite end of the path x terminates.
// Closing a path onto its own start adds a cycle; joining two paths does not.
template <class Leaf>
class Walker {
public:
    Walker(const Plan& plan, Leaf& leaf) : plan_(plan), leaf_(leaf), sigma_(plan.n), other_end_(plan.n) {
        for (int v = 0; v < plan.n; ++v) other_end_[v] = v;
    }

    void run_all() { step(0, 0, 0, 0); }

    // Explores only the subtrees where sigma(0) is one of `first_heads`.
    void run_first(std::span<const Vertex> first_heads) {
        if (plan_.n == 0) {
            step(0, 0, 0, 0);
            return;
        }
        for (Vertex w : first_heads) branch(0, w, 0, 0, 0);
    }

private:
    void step(int v, std::uint64_t used, int cycles, int loops) {
        if (v == plan_.n) {
            leaf_(std::span<const Vertex>(sigma_), cycles, loops);
            return;
        }
        std::uint64_t candidates = plan_.allowed[v] & ~used;
        while (candidates) {
            Vertex w = std::countr_zero(candidates);
            candidates &= candidates - 1;
            branch(v, w, used, cycles, loops);
        }
    }

    void branch(int v, Vertex w, std::uint64_t used, int cycles, int loops) {
        sigma_[v] = w;
        const std::uint64_t now_used = used | (std::uint64_t{1} << w);
        const int now_loops = loops + (w == v ? 1 : 0);
        const Vertex start = other_end_[v];
        if (start == w) {
            step(v + 1, now_used, cycles + 1, now_loops);
            return;
        }
        const Vertex end = other_end_[w];
        other_end_[start] = end;
        other_end_[end] = start;
        step(v + 1, now_used, cycles, now_loops);
        other_end_[start] = v;
        other_end_[end] = w;
    }

    const Plan& plan_;
    Leaf& leaf_;
    std::vector<Vertex> sigma_;
    std::vector<Vertex> other_end_;
};

// Fixed-width tallies; a thread cannot visit 2^64 leaves.
struct Tally {
    explicit Tally(int n, bool usage) : n(n), histogram(n + 1, 0) {
        if (usage) edge_usage.assign(static_cast<std::size_t>(n) * n, 0);
    }

    void operator()(std::span<const Vertex> sigma, int cycles, int loops) {
        ++count;
        cycle_sum += static_cast<std::uint64_t>(cycles);
        fix_sum += static_cast<std::uint64_t>(loops);
        ++histogram[cycles];
        if (!edge_usage.empty())
            for (int v = 0; v < n; ++v) ++edge_usage[static_cast<std::size_t>(v) * n + sigma[v]];
    }

    int n;
    std::uint64_t count = 0, cycle_sum = 0, fix_sum = 0;
    std::vector<std::uint64_t> histogram;
    std::vector<std::uint64_t> edge_usage;
};

FactorStats to_stats(const Tally& t, const DiGraph& g, bool want_edge_usage) {
    FactorStats s;
    s.count = t.count;
    s.cycle_sum = t.cycle_sum;
    s.fix_sum = t.fix_sum;
    for (int k = 0; k <= t.n; ++k)
        if (t.histogram[k] != 0) s.histogram[k] = t.histogram[k];
    if (want_edge_usage) {
        s.edge_usage.emplace();
        for (Arc a : g.arcs()) (*s.edge_usage)[a] = t.edge_usage[static_cast<std::size_t>(a.tail) * t.n + a.head];
    }
    return s;
}

}  // namespace

FactorStats cycle_factor_stats(const DiGraph& g, const ArcConstraints& constraints, bool want_edge_usage,
                               const EnumerateOptions& options) {
    const Plan plan = make_plan(g, constraints, options.max_order);
    const int n = plan.n;

    std::vector<Vertex> first;
    if (n > 0)
        for (std::uint64_t m = plan.allowed[0]; m; m &= m - 1) first.push_back(std::countr_zero(m));

    const int threads = std::max(1, std::min<int>(options.threads, static_cast<int>(first.size())));
    std::vector<Tally> tallies(threads, Tally(n, want_edge_usage));

    // Split at the first vertex's branching; thread t takes every threads-th head.
    auto work = [&](int t) {
        std::vector<Vertex> mine;
        for (std::size_t i = t; i < first.size(); i += threads) mine.push_back(first[i]);
        Walker<Tally> walker(plan, tallies[t]);
        walker.run_first(mine);
    };
    if (threads == 1) {
        work(0);
    } else {
        std::vector<std::jthread> pool;
        for (int t = 0; t < threads; ++t) pool.emplace_back(work, t);
    }

    FactorStats total = to_stats(tallies[0], g, want_edge_usage);
    for (int t = 1; t < threads; ++t) total += to_stats(tallies[t], g, want_edge_usage);
    return total;
}

BigRational expected_cycles(const DiGraph& g, const EnumerateOptions& options) {
    return cycle_factor_stats(g, {}, false, options).expectation();
}

void for_each_cycle_factor(const DiGraph& g, const ArcConstraints& constraints, const FactorVisitor& visit,
                           int max_order) {
    const Plan plan = make_plan(g, constraints, max_order);
    auto leaf = [&](std::span<const Vertex> sigma, int cycles, int) { visit(sigma, cycles); };
    Walker<decltype(leaf)> walker(plan, leaf);
    walker.run_all();
}

std::string crossing_pattern_name(CrossingPattern p) {
    switch (p) {
        case CrossingPattern::Empty: return "\xE2\x88\x85";
        case CrossingPattern::U1U2: return "u1u2";
        case CrossingPattern::V1V2: return "v1v2";
        case CrossingPattern::U1V2: return "u1v2";
        case CrossingPattern::V1U2: return "v1u2";
        case CrossingPattern::U1V1U2V2: return "u1v1u2v2";
    }
    return "?";
}

PatternRow row_of(CrossingPattern p) {
    switch (p) {
        case CrossingPattern::Empty: return PatternRow::Empty;
        case CrossingPattern::U1V2:
        case CrossingPattern::V1U2: return PatternRow::BoundaryTwoCycle;
        case CrossingPattern::U1V1U2V2: return PatternRow::FourEdge;
        case CrossingPattern::U1U2:
        case CrossingPattern::V1V2: return PatternRow::PathSplice;
    }
    return PatternRow::Empty;
}

CrossingClassification classify_crossing_patterns(int d, int max_d) {
    if (d < 3) throw PreconditionError("X_d needs d >= 3");
    if (d > max_d)
        throw PreconditionError("crossing classification limited to d <= " + std::to_string(max_d));
    const XdGraph xd = build_xd(d);
    const XdLabeling& lab = xd.labeling;

    // Bit i set when crossing arc i of (u1, v1, u2, v2) is used.
    constexpr unsigned kU1 = 1, kV1 = 2, kU2 = 4, kV2 = 8;
    std::array<std::uint64_t, 16> count{}, cycles{};
    std::uint64_t fixed = 0;
    std::array<std::array<std::uint64_t, 64>, 16> histogram{};
    for_each_cycle_factor(xd.graph, {}, [&](std::span<const Vertex> sigma, int c) {
        unsigned mask = 0;
        if (sigma[lab.u1.tail] == lab.u1.head) mask |= kU1;
        if (sigma[lab.v1.tail] == lab.v1.head) mask |= kV1;
        if (sigma[lab.u2.tail] == lab.u2.head) mask |= kU2;
        if (sigma[lab.v2.tail] == lab.v2.head) mask |= kV2;
        ++count[mask];
        cycles[mask] += static_cast<std::uint64_t>(c);
        for (int v = 0; v < static_cast<int>(sigma.size()); ++v) fixed += sigma[v] == v;
        ++histogram[mask][c];
    });

    const std::array<std::pair<CrossingPattern, unsigned>, 6> balanced{{
        {CrossingPattern::Empty, 0},
        {CrossingPattern::U1U2, kU1 | kU2},
        {CrossingPattern::V1V2, kV1 | kV2},
        {CrossingPattern::U1V2, kU1 | kV2},
        {CrossingPattern::V1U2, kV1 | kU2},
        {CrossingPattern::U1V1U2V2, kU1 | kV1 | kU2 | kV2},
    }};
    for (unsigned mask = 0; mask < 16; ++mask) {
        bool listed = std::any_of(balanced.begin(), balanced.end(), [mask](auto& b) { return b.second == mask; });
        if (!listed && count[mask] != 0)
            throw ConsistencyError("X_" + std::to_string(d) + ": unbalanced crossing pattern (mask " +
                                   std::to_string(mask) + ") used by " + std::to_string(count[mask]) + " factors");
    }

    CrossingClassification out;
    out.d = d;
    for (auto [pattern, mask] : balanced) out.patterns.push_back({pattern, count[mask], cycles[mask]});
    for (PatternRow row : kPatternRows) {
        BigInt n = 0, t = 0;
        for (const auto& b : out.patterns) {
            if (row_of(b.pattern) != row) continue;
            n += b.count;
            t += b.cycle_sum;
        }
        out.rows.push_back({row, n, n == 0 ? BigRational(0) : BigRational(t, n)});
    }
    out.totals.fix_sum = fixed;
    for (unsigned mask = 0; mask < 16; ++mask) {
        out.totals.count += count[mask];
        out.totals.cycle_sum += cycles[mask];
        for (int c = 0; c < 64; ++c)
            if (histogram[mask][c]) out.totals.histogram[c] += histogram[mask][c];
    }
    return out;
}

GnClassification gn_classification(int n, int max_n) {
    if (n < 4 || n > max_n)
        throw PreconditionError("G_n classification needs 4 <= n <= " + std::to_string(max_n));
    const DiGraph g = looped_bidirected_cycle(n);

    std::vector<std::vector<Vertex>> observed;
    for_each_cycle_factor(g, {}, [&](std::span<const Vertex> sigma, int) { observed.emplace_back(sigma.begin(), sigma.end()); });

    std::vector<std::vector<Vertex>> expected;
    std::vector<Vertex> forward(n), backward(n);
    for (int i = 0; i < n; ++i) {
        forward[i] = (i + 1) % n;
        backward[i] = (i + n - 1) % n;
    }
    expected.push_back(forward);
    expected.push_back(backward);

    GnClassification out;
    out.n = n;
    out.matchings_by_size.assign(n / 2 + 1, 0);
    // Edge i of C_n is {i, i+1 mod n}; every subset of pairwise disjoint edges.
    for (std::uint32_t subset = 0; subset < (std::uint32_t{1} << n); ++subset) {
        std::uint64_t covered = 0;
        bool disjoint = true;
        std::vector<Vertex> sigma(n);
        for (int i = 0; i < n; ++i) sigma[i] = i;
        for (int i = 0; i < n && disjoint; ++i) {
            if (!((subset >> i) & 1U)) continue;
            int a = i, b = (i + 1) % n;
            std::uint64_t pair = (std::uint64_t{1} << a) | (std::uint64_t{1} << b);
            if (covered & pair) disjoint = false;
            covered |= pair;
            sigma[a] = b;
            sigma[b] = a;
        }
        if (!disjoint) continue;
        ++out.matchings_by_size[std::popcount(subset)];
        expected.push_back(std::move(sigma));
    }

    std::sort(observed.begin(), observed.end());
    std::sort(expected.begin(), expected.end());
    const bool distinct = std::adjacent_find(expected.begin(), expected.end()) == expected.end();
    out.factor_count = observed.size();
    out.matches = distinct && observed == expected;
    return out;
}

bool gn_classification_check(int n, int max_n) { return gn_classification(n, max_n).matches; }

std::vector<BigInt> cycle_matching_counts(int n) {
    if (n < 3) throw PreconditionError("cycle matchings need n >= 3");
    // path[m][r]: matchings of size r in the path on m vertices.
    std::vector<std::vector<BigInt>> path(n + 1, std::vector<BigInt>(n / 2 + 1, 0));
    path[0][0] = 1;
    path[1][0] = 1;
    for (int m = 2; m <= n; ++m)
        for (int r = 0; r <= n / 2; ++r) path[m][r] = path[m - 1][r] + (r > 0 ? path[m - 2][r - 1] : BigInt(0));
    // Either the closing edge {n-1, 0} is unused (path on n vertices), or it is
    // used and the rest is a path on n-2 vertices.
    std::vector<BigInt> out(n / 2 + 1, 0);
    for (int r = 0; r <= n / 2; ++r) out[r] = path[n][r] + (r > 0 ? path[n - 2][r - 1] : BigInt(0));
    return out;
}

}  // namespace cyclefactor
