#include "cyclefactor/exact_math.hpp"

#include "cyclefactor/errors.hpp"

namespace cyclefactor {

BigRational harmonic(int m) {
    if (m < 0) throw PreconditionError("harmonic number of a negative index");
    BigRational h = 0;
    for (int j = 1; j <= m; ++j) h += BigRational(1, j);
    return h;
}

BigInt partial_perm_count(int n, int r) {
    if (r < 0 || r > n) throw PreconditionError("partial permutation needs 0 <= r <= n");
    return factorial(n - r);
}

BigRational partial_perm_cycle_sum(int n, int r, int q) {
    if (r < 0 || r > n) throw PreconditionError("partial permutation needs 0 <= r <= n");
    if (q < 0 || q > r) throw PreconditionError("prescribed cycles need 0 <= q <= r");
    return BigRational(factorial(n - r)) * (harmonic(n - r) + q);
}

BlockCounts n0_s0(int d) {
    if (d < 2) throw PreconditionError("block counts need d >= 2");
    // Inclusion-exclusion over the two forbidden opposite arcs; forcing both
    // prescribes a 2-cycle (q = 1).
    BlockCounts out;
    out.n0 = partial_perm_count(d, 0) - 2 * partial_perm_count(d, 1) + partial_perm_count(d, 2);
    out.s0 = partial_perm_cycle_sum(d, 0, 0) - 2 * partial_perm_cycle_sum(d, 1, 0) + partial_perm_cycle_sum(d, 2, 1);
    return out;
}

std::string pattern_row_label(PatternRow row) {
    switch (row) {
        case PatternRow::Empty: return "\xE2\x88\x85";
        case PatternRow::BoundaryTwoCycle: return "u1v2,v1u2";
        case PatternRow::FourEdge: return "u1v1u2v2";
        case PatternRow::PathSplice: return "u1u2,v1v2";
    }
    return "?";
}

std::vector<PatternRowStats> table1_rows(int d) {
    if (d < 3) throw PreconditionError("crossing-pattern table needs d >= 3");
    const BlockCounts block = n0_s0(d);
    const BigInt f1 = factorial(d - 1);
    const BigInt f2 = factorial(d - 2);
    const BigInt splice = f2 * (d - 2);
    const BigRational h1 = harmonic(d - 1);
    const BigRational h2 = harmonic(d - 2);

    return {
        {PatternRow::Empty, block.n0 * block.n0, 2 * block.s0 / BigRational(block.n0)},
        {PatternRow::BoundaryTwoCycle, 2 * f1 * f1, 2 * h1 + 1},
        {PatternRow::FourEdge, f2 * f2, 2 * h2 + 2},
        {PatternRow::PathSplice, 2 * splice * splice, 2 * h2 - 1},
    };
}

BigInt xd_count_polynomial(int d) {
    BigInt x = d;
    return x * x * x * x - 6 * x * x * x + 19 * x * x - 30 * x + 20;
}

BigInt excess_cubic(int d) {
    BigInt x = d;
    return 3 * x * x * x - 14 * x * x + 25 * x - 10;
}

BigInt excess_cubic_derivative(int d) {
    BigInt x = d;
    return 9 * x * x - 28 * x + 25;
}

BigRational xd_excess_closed_form(int d) {
    if (d < 3) throw PreconditionError("X_d needs d >= 3");
    BigInt x = d;
    return BigRational(2 * (x - 2) * excess_cubic(d), x * (x - 1) * xd_count_polynomial(d));
}

XdClosedForm xd_closed_form(int d) {
    if (d < 3) throw PreconditionError("X_d needs d >= 3");
    XdClosedForm out;
    out.d = d;
    out.rows = table1_rows(d);

    const BigInt f2 = factorial(d - 2);
    out.count = f2 * f2 * xd_count_polynomial(d);
    out.excess = xd_excess_closed_form(d);

    BigInt row_count = 0;
    BigRational row_sum = 0;
    for (const auto& row : out.rows) {
        row_count += row.count;
        row_sum += row.mean * BigRational(row.count);
    }
    if (row_count != out.count)
        throw ConsistencyError("X_" + std::to_string(d) + ": row counts sum to " + row_count.str() +
                               ", closed form gives " + out.count.str());
    if (denominator_of(row_sum) != 1)
        throw ConsistencyError("X_" + std::to_string(d) + ": cycle sum " + to_fraction_string(row_sum) + " is not an integer");
    out.cycle_sum = numerator_of(row_sum);
    if (BigRational(out.cycle_sum, out.count) - 2 * harmonic(d) != out.excess)
        throw ConsistencyError("X_" + std::to_string(d) + ": T/N - 2H_d disagrees with the closed-form excess");
    return out;
}

bool f_positivity(int d_max) {
    if (d_max < 3) throw PreconditionError("f_positivity needs d_max >= 3");
    for (int d = 3; d <= d_max; ++d)
        if (excess_cubic(d) <= 0 || excess_cubic_derivative(d) <= 0) return false;
    return true;
}

BigRational asymptotic_excess_probe(int d) {
    return BigRational(BigInt(d) * d) * xd_excess_closed_form(d);
}

}  // namespace cyclefactor
