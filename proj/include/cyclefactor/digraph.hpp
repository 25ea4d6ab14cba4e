#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace cyclefactor {

using Vertex = int;

struct Arc {
    Vertex tail = 0;
    Vertex head = 0;

    bool is_loop() const { return tail == head; }
    friend auto operator<=>(const Arc&, const Arc&) = default;
};

// Finite digraph on vertices 0..n-1. Loops and 2-cycles are allowed, parallel
// arcs are not. Immutable once built.
class DiGraph {
public:
    // Largest order for which per-vertex bitmasks are kept.
    static constexpr int kMaskLimit = 64;

    DiGraph() = default;

    // Throws PreconditionError on out-of-range endpoints or repeated arcs.
    DiGraph(int n, std::span<const Arc> arcs);
    DiGraph(int n, std::initializer_list<Arc> arcs)
        : DiGraph(n, std::span<const Arc>(arcs.begin(), arcs.size())) {}

    int order() const { return n_; }
    std::size_t arc_count() const { return arc_count_; }

    // Sorted ascending.
    std::span<const Vertex> out_neighbors(Vertex v) const { return out_[v]; }
    std::span<const Vertex> in_neighbors(Vertex v) const { return in_[v]; }

    int out_degree(Vertex v) const { return static_cast<int>(out_[v].size()); }
    int in_degree(Vertex v) const { return static_cast<int>(in_[v].size()); }

    bool has_arc(Vertex u, Vertex v) const;
    bool has_loop(Vertex v) const { return has_arc(v, v); }
    int loop_count() const;

    bool has_masks() const { return n_ <= kMaskLimit; }
    // Valid only when has_masks().
    std::uint64_t out_mask(Vertex v) const { return out_mask_[v]; }

    // Arcs in (tail, head) lexicographic order.
    std::vector<Arc> arcs() const;

    friend bool operator==(const DiGraph& a, const DiGraph& b) { return a.n_ == b.n_ && a.out_ == b.out_; }

private:
    int n_ = 0;
    std::size_t arc_count_ = 0;
    std::vector<std::vector<Vertex>> out_;
    std::vector<std::vector<Vertex>> in_;
    std::vector<std::uint64_t> out_mask_;
};

// Simple loopless undirected graph.
class UGraph {
public:
    UGraph() = default;
    // Edges are unordered pairs; throws on loops, repeats, or bad endpoints.
    UGraph(int n, std::span<const std::pair<Vertex, Vertex>> edges);

    int order() const { return n_; }
    std::size_t edge_count() const { return edge_count_; }
    std::span<const Vertex> neighbors(Vertex v) const { return adj_[v]; }
    int degree(Vertex v) const { return static_cast<int>(adj_[v].size()); }
    bool adjacent(Vertex u, Vertex v) const;

    // Each edge once as (u, v) with u < v, lexicographic.
    std::vector<std::pair<Vertex, Vertex>> edges() const;

    friend bool operator==(const UGraph& a, const UGraph& b) { return a.n_ == b.n_ && a.adj_ == b.adj_; }

private:
    int n_ = 0;
    std::size_t edge_count_ = 0;
    std::vector<std::vector<Vertex>> adj_;
};

struct BipartiteGraph {
    int n_left = 0;
    int n_right = 0;
    std::vector<std::pair<Vertex, Vertex>> edges;  // (left, right), sorted, unique

    bool is_regular(int d) const;
    // Row-major n_left x n_right 0/1 matrix.
    std::vector<std::vector<int>> biadjacency() const;
};

bool is_d_regular(const DiGraph& g, int d);
bool is_d_regular(const UGraph& g, int d);

// Block-diagonal union; the i-th part is shifted by the total order of parts before it.
DiGraph disjoint_union(std::span<const DiGraph> parts);
UGraph disjoint_union(std::span<const UGraph> parts);

BipartiteGraph double_cover(const DiGraph& g);

// Symmetric digraph with each undirected edge as two opposite arcs.
DiGraph as_symmetric_digraph(const UGraph& g);
// Inverse of as_symmetric_digraph; throws PreconditionError if g has loops or
// an arc without its reverse.
UGraph as_undirected(const DiGraph& g);

// Relabels so that vertex v becomes perm[v].
DiGraph relabel(const DiGraph& g, std::span<const Vertex> perm);

// Isomorphism-invariant hash from iterated neighbourhood refinement.
// Different values prove non-isomorphism; equal values prove nothing.
std::uint64_t fingerprint(const DiGraph& g);

inline constexpr std::uint64_t kEmptyFingerprint = 0x9e3779b97f4a7c15ULL;

// Text format:
//   n d_hint
//   0: w1 w2 ...
//   ...
// d_hint is the common degree when the graph is regular, -1 otherwise.
std::string to_text(const DiGraph& g);
// Throws GraphFormatError. A non-negative d_hint must match the graph.
DiGraph parse_graph_text(std::string_view text);
DiGraph read_graph_file(const std::string& path);

// Common in/out degree if regular, -1 otherwise (and for n = 0).
int regular_degree(const DiGraph& g);

}  // namespace cyclefactor
