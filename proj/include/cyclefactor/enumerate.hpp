#pragma once

#include <functional>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "cyclefactor/digraph.hpp"
#include "cyclefactor/exact_math.hpp"
#include "cyclefactor/rational.hpp"

namespace cyclefactor {

// Exact statistics over a set of cycle-factors (or undirected 2-factors).
struct FactorStats {
    BigInt count;                          // N
    BigInt cycle_sum;                      // T = sum of c(sigma)
    BigInt fix_sum;                        // sum of fix(sigma)
    std::map<int, BigInt> histogram;       // c(sigma) -> number of factors
    std::optional<std::map<Arc, BigInt>> edge_usage;

    // T / N; throws NoCycleFactorError when N = 0.
    BigRational expectation() const;

    // Field-wise sum; associative and commutative.
    FactorStats& operator+=(const FactorStats& other);

    friend bool operator==(const FactorStats&, const FactorStats&) = default;
};

// Arcs forced into / excluded from every enumerated factor.
struct ArcConstraints {
    std::vector<Arc> required;
    std::vector<Arc> forbidden;
};

struct EnumerateOptions {
    int threads = 1;
    int max_order = DiGraph::kMaskLimit;  // never above the mask limit
};

// Brute-force enumeration of all cycle-factors of g compatible with the
// constraints. Required arcs that are not arcs of g give an empty result.
// Throws PreconditionError for malformed constraints or g larger than
// options.max_order.
FactorStats cycle_factor_stats(const DiGraph& g, const ArcConstraints& constraints = {},
                               bool want_edge_usage = false, const EnumerateOptions& options = {});

// E c(sigma) for a uniform cycle-factor; NoCycleFactorError if there is none.
BigRational expected_cycles(const DiGraph& g, const EnumerateOptions& options = {});

// Calls visit(sigma, c(sigma)) for every cycle-factor, in lexicographic order
// of sigma. Single-threaded.
using FactorVisitor = std::function<void(std::span<const Vertex> sigma, int cycles)>;
void for_each_cycle_factor(const DiGraph& g, const ArcConstraints& constraints, const FactorVisitor& visit,
                           int max_order = DiGraph::kMaskLimit);

// The six balanced subsets of {u1, v1, u2, v2} that a cycle-factor of X_d can use.
enum class CrossingPattern { Empty, U1U2, V1V2, U1V2, V1U2, U1V1U2V2 };

std::string crossing_pattern_name(CrossingPattern p);
PatternRow row_of(CrossingPattern p);

struct PatternBucket {
    CrossingPattern pattern{};
    BigInt count;
    BigInt cycle_sum;
};

struct CrossingClassification {
    int d = 0;
    std::vector<PatternBucket> patterns;  // the six patterns, in enum order
    std::vector<PatternRowStats> rows;    // grouped like table1_rows
    FactorStats totals;
};

// Enumerates C(X_d) and buckets every factor by the crossing arcs it uses.
// ConsistencyError if an unbalanced pattern ever occurs. d <= max_d.
CrossingClassification classify_crossing_patterns(int d, int max_d = 7);

struct GnClassification {
    int n = 0;
    bool matches = false;
    BigInt factor_count;
    std::vector<BigInt> matchings_by_size;  // brute-force side
};

// Compares C(G_n°) with {forward, backward Hamilton cycle} ∪ {products of the
// transpositions of a matching of C_n}. 4 <= n <= max_n.
GnClassification gn_classification(int n, int max_n = 16);
bool gn_classification_check(int n, int max_n = 16);

// Matchings of C_n by size r = 0..floor(n/2), by dynamic programming. n >= 3.
std::vector<BigInt> cycle_matching_counts(int n);

// Spanning subgraphs of an undirected graph in which every component is a
// cycle of length >= 3, or (when allow_edge_as_2cycle) a single edge. Each
// component counts as one cycle.
FactorStats two_factor_stats(const UGraph& g, bool allow_edge_as_2cycle, int max_order = 64);

}  // namespace cyclefactor
