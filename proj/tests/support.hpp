#pragma once

// Independent reference implementations used as test oracles. Nothing here
// calls into the enumeration engine.

#include <algorithm>
#include <bit>
#include <cstdint>
#include <map>
#include <numeric>
#include <random>
#include <set>
#include <utility>
#include <vector>

#include "cyclefactor/digraph.hpp"
#include "cyclefactor/rational.hpp"

namespace oracle {

using cyclefactor::Arc;
using cyclefactor::BigInt;
using cyclefactor::BigRational;
using cyclefactor::DiGraph;
using cyclefactor::UGraph;

inline int count_cycles(const std::vector<int>& sigma) {
    std::vector<char> seen(sigma.size(), 0);
    int cycles = 0;
    for (std::size_t s = 0; s < sigma.size(); ++s) {
        if (seen[s]) continue;
        ++cycles;
        for (std::size_t v = s; !seen[v]; v = sigma[v]) seen[v] = 1;
    }
    return cycles;
}

struct Naive {
    BigInt count, cycle_sum, fix_sum;
    std::map<int, BigInt> histogram;
    std::map<Arc, BigInt> usage;
    std::vector<std::vector<int>> factors;  // lexicographic
};

// Walks all n! permutations.
template <class Keep>
Naive naive_factors(const DiGraph& g, Keep keep) {
    Naive out;
    const int n = g.order();
    std::vector<int> sigma(n);
    std::iota(sigma.begin(), sigma.end(), 0);
    do {
        bool ok = true;
        for (int v = 0; v < n && ok; ++v) ok = g.has_arc(v, sigma[v]);
        if (!ok || !keep(sigma)) continue;
        const int c = count_cycles(sigma);
        out.count += 1;
        out.cycle_sum += c;
        for (int v = 0; v < n; ++v) {
            if (sigma[v] == v) out.fix_sum += 1;
            out.usage[{v, sigma[v]}] += 1;
        }
        out.histogram[c] += 1;
        out.factors.push_back(sigma);
    } while (std::next_permutation(sigma.begin(), sigma.end()));
    return out;
}

inline Naive naive_factors(const DiGraph& g) {
    return naive_factors(g, [](const std::vector<int>&) { return true; });
}

// Permanent by expansion along the first row.
inline BigInt permanent(const std::vector<std::vector<int>>& a) {
    const int n = static_cast<int>(a.size());
    std::vector<char> used(n, 0);
    auto rec = [&](auto&& self, int row) -> BigInt {
        if (row == n) return 1;
        BigInt total = 0;
        for (int c = 0; c < n; ++c) {
            if (used[c] || !a[row][c]) continue;
            used[c] = 1;
            total += self(self, row + 1);
            used[c] = 0;
        }
        return total;
    };
    return rec(rec, 0);
}

// Each ordered pair (including loops) is an arc with probability p.
inline DiGraph random_digraph(int n, double p, std::mt19937& rng) {
    std::bernoulli_distribution coin(p);
    std::vector<Arc> arcs;
    for (int u = 0; u < n; ++u)
        for (int v = 0; v < n; ++v)
            if (coin(rng)) arcs.push_back({u, v});
    return DiGraph(n, arcs);
}

// Same as random_digraph but every vertex keeps its loop, so a factor exists.
inline DiGraph random_looped_digraph(int n, double p, std::mt19937& rng) {
    std::bernoulli_distribution coin(p);
    std::vector<Arc> arcs;
    for (int u = 0; u < n; ++u)
        for (int v = 0; v < n; ++v)
            if (u == v || coin(rng)) arcs.push_back({u, v});
    return DiGraph(n, arcs);
}

inline UGraph random_ugraph(int n, double p, std::mt19937& rng) {
    std::bernoulli_distribution coin(p);
    std::vector<std::pair<int, int>> edges;
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v)
            if (coin(rng)) edges.push_back({u, v});
    return UGraph(n, edges);
}

inline std::vector<int> random_perm(int n, std::mt19937& rng) {
    std::vector<int> p(n);
    std::iota(p.begin(), p.end(), 0);
    std::shuffle(p.begin(), p.end(), rng);
    return p;
}

// Undirected 2-factor statistics over edge subsets. Strict: every component a
// cycle. Permissive: components may also be single edges.
struct NaiveTwoFactor {
    BigInt count, cycle_sum;
    std::map<int, BigInt> histogram;
};

inline NaiveTwoFactor naive_two_factors(const UGraph& g, bool permissive) {
    const auto edges = g.edges();
    const int n = g.order();
    const int m = static_cast<int>(edges.size());
    NaiveTwoFactor out;
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << m); ++mask) {
        std::vector<int> deg(n, 0);
        std::vector<int> parent(n);
        std::iota(parent.begin(), parent.end(), 0);
        auto find = [&](int x) {
            while (parent[x] != x) x = parent[x] = parent[parent[x]];
            return x;
        };
        for (int e = 0; e < m; ++e) {
            if (!(mask >> e & 1)) continue;
            auto [u, v] = edges[e];
            ++deg[u];
            ++deg[v];
            parent[find(u)] = find(v);
        }
        bool ok = true;
        for (int v = 0; v < n && ok; ++v) ok = deg[v] == 2 || (permissive && deg[v] == 1);
        if (!ok) continue;
        // A component with a degree-1 vertex is a path; only a lone edge is allowed.
        std::map<int, int> size, ends;
        for (int v = 0; v < n; ++v) {
            ++size[find(v)];
            if (deg[v] == 1) ++ends[find(v)];
        }
        for (auto [root, e] : ends) ok = ok && size[root] == 2;
        if (!ok) continue;
        const int c = static_cast<int>(size.size());
        out.count += 1;
        out.cycle_sum += c;
        out.histogram[c] += 1;
    }
    return out;
}

// Number of 0/1 n x n matrices with every row and column summing to d, i.e.
// labelled d-regular digraphs with loops allowed. Memoised on the sorted
// multiset of remaining column capacities.
inline BigInt count_regular_matrices(int n, int d) {
    std::map<std::pair<int, std::vector<int>>, BigInt> memo;
    auto rec = [&](auto&& self, int rows, std::vector<int> caps) -> BigInt {
        std::sort(caps.begin(), caps.end());
        if (rows == 0) return std::all_of(caps.begin(), caps.end(), [](int c) { return c == 0; }) ? 1 : 0;
        auto key = std::make_pair(rows, caps);
        if (auto it = memo.find(key); it != memo.end()) return it->second;
        BigInt total = 0;
        for (std::uint32_t mask = 0; mask < (1U << n); ++mask) {
            if (std::popcount(mask) != d) continue;
            std::vector<int> next = caps;
            bool ok = true;
            for (int j = 0; j < n && ok; ++j)
                if (mask >> j & 1) ok = --next[j] >= 0;
            if (ok) total += self(self, rows - 1, next);
        }
        memo.emplace(key, total);
        return total;
    };
    return rec(rec, n, std::vector<int>(n, d));
}

inline BigRational harmonic(int m) {
    BigRational h = 0;
    for (int j = m; j >= 1; --j) h += BigRational(1, j);
    return h;
}

inline BigInt factorial(int m) {
    BigInt f = 1;
    for (int j = 2; j <= m; ++j) f *= j;
    return f;
}

}  // namespace oracle
