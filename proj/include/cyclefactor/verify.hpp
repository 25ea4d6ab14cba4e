#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "cyclefactor/digraph.hpp"
#include "cyclefactor/enumerate.hpp"
#include "cyclefactor/rational.hpp"

namespace cyclefactor {

enum class Verdict { BeatsBenchmark, Ties, Below };

std::string verdict_name(Verdict v);  // "beats_benchmark", "ties", "below"

// Comparison of a d-regular digraph against the clique benchmark (n/d) H_d.
struct Certificate {
    std::string graph_text;
    int n = 0;
    int d = 0;
    BigInt count;
    BigInt cycle_sum;
    BigRational expectation;
    BigRational benchmark;
    BigRational excess;
    Verdict verdict = Verdict::Ties;
    std::string provenance;
};

Verdict verdict_for(const BigRational& excess);

// Throws PreconditionError if g is not d-regular or d does not divide n, and
// NoCycleFactorError if g has no cycle-factor.
Certificate certify(const DiGraph& g, int d, std::string provenance = {}, const EnumerateOptions& options = {});

// Rebuilds the certificate from its embedded graph and compares every field.
// An embedded graph that no longer certifies (bad text, wrong degree) gives false.
bool recheck(const Certificate& cert, const EnumerateOptions& options = {});

// Calls visit(g) for every labelled d-regular digraph on n vertices (loops
// allowed), by choosing out-neighbour d-subsets vertex by vertex under
// running in-degree caps. Returns the number visited.
std::uint64_t for_each_regular_digraph(int n, int d, const std::function<void(const DiGraph&)>& visit);

// Every vertex has a loop and exactly one other out-neighbour, which points back.
bool is_union_of_looped_k2(const DiGraph& g);

struct D2OrderReport {
    int n = 0;
    std::uint64_t graphs = 0;          // labelled 2-regular digraphs checked
    std::uint64_t fingerprint_classes = 0;
    BigRational max_expectation;
    std::uint64_t maximizers = 0;      // labelled graphs attaining the maximum
    bool maximizers_all_k2_unions = true;
};

struct Violation {
    std::string graph_text;
    std::string reason;
};

struct D2SuiteReport {
    std::vector<D2OrderReport> orders;
    std::vector<Violation> violators;
    bool passed() const { return violators.empty(); }
};

// Exhaustive check of the degree-2 statements on every 2-regular digraph with
// n <= n_max: arc marginals 1/2, E fix = loops/2, E c <= n/2 + loops/4, and
// E c = 3n/4 exactly for disjoint unions of K_2°.
D2SuiteReport d2_theorem_suite(int n_max, int limit = 6);

struct XdCrossCheck {
    int d = 0;
    BigInt enumerated_count, closed_count;
    BigInt enumerated_sum, closed_sum;
    BigRational enumerated_expectation, closed_expectation;
    bool matches = false;
    std::string first_mismatch;  // empty when matches
};

struct XdCrossReport {
    std::vector<XdCrossCheck> entries;
    bool passed() const;
};

// For 3 <= d <= d_max, compares enumeration of X_d (totals and per crossing
// pattern) with the closed forms.
XdCrossReport xd_cross_validation(int d_max, int limit = 7, const EnumerateOptions& options = {});

struct GnClassReport {
    std::vector<GnClassification> entries;
    bool passed() const;
};

GnClassReport gn_class_suite(int n_min, int n_max);

// Best E c over all labelled d-regular digraphs on n vertices.
struct RegularMaxReport {
    int n = 0, d = 0;
    std::uint64_t graphs = 0;
    BigRational max_expectation;
    BigRational benchmark;
    std::string argmax_text;  // first maximiser in enumeration order
};

RegularMaxReport exhaustive_regular_max(int n, int d);

}  // namespace cyclefactor
