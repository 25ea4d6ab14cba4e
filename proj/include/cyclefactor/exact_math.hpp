#pragma once

#include <array>
#include <string>
#include <utility>
#include <vector>

#include "cyclefactor/rational.hpp"

namespace cyclefactor {

// H_m = 1 + 1/2 + ... + 1/m, with H_0 = 0.
BigRational harmonic(int m);

// Number of permutations of n points containing a fixed partial permutation
// with r arcs: (n - r)!.
BigInt partial_perm_count(int n, int r);

// Total cycle count over those completions when the prescribed arcs close q
// cycles: (n - r)! (H_{n-r} + q). Requires 0 <= q <= r <= n.
BigRational partial_perm_cycle_sum(int n, int r, int q);

// Completions of one d-block of X_d that avoid both missing opposite arcs,
// and their cycle sum. d >= 2 (d = 2 uses 0! = 1, H_0 = 0).
struct BlockCounts {
    BigInt n0;
    BigRational s0;
};
BlockCounts n0_s0(int d);

// Crossing patterns grouped as in the classification of X_d's cycle-factors.
enum class PatternRow { Empty, BoundaryTwoCycle, FourEdge, PathSplice };

inline constexpr std::array<PatternRow, 4> kPatternRows{PatternRow::Empty, PatternRow::BoundaryTwoCycle,
                                                       PatternRow::FourEdge, PatternRow::PathSplice};

// "∅", "u1v2,v1u2", "u1v1u2v2", "u1u2,v1v2"
std::string pattern_row_label(PatternRow row);

struct PatternRowStats {
    PatternRow row{};
    BigInt count;
    BigRational mean;

    friend bool operator==(const PatternRowStats&, const PatternRowStats&) = default;
};

std::vector<PatternRowStats> table1_rows(int d);

struct XdClosedForm {
    int d = 0;
    BigInt count;       // N
    BigInt cycle_sum;   // T
    BigRational excess; // E c - 2 H_d
    std::vector<PatternRowStats> rows;

    BigRational expectation() const { return BigRational(cycle_sum, count); }
};

// Evaluates N and the excess from their closed forms and T from the row table,
// then checks the two routes agree exactly (ConsistencyError otherwise).
XdClosedForm xd_closed_form(int d);

// N / ((d-2)!)^2 = d^4 - 6d^3 + 19d^2 - 30d + 20.
BigInt xd_count_polynomial(int d);
// 2(d-2)(3d^3 - 14d^2 + 25d - 10) / (d(d-1)(d^4 - 6d^3 + 19d^2 - 30d + 20)).
BigRational xd_excess_closed_form(int d);

BigInt excess_cubic(int d);            // f(d) = 3d^3 - 14d^2 + 25d - 10
BigInt excess_cubic_derivative(int d); // f'(d) = 9d^2 - 28d + 25

// f(d) > 0 and f'(d) > 0 for every integer 3 <= d <= d_max.
bool f_positivity(int d_max);

// d^2 * excess(d); tends to 6.
BigRational asymptotic_excess_probe(int d);

}  // namespace cyclefactor
