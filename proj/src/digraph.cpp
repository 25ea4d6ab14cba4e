#include "cyclefactor/digraph.hpp"

#include <algorithm>
#include <numeric>

#include "cyclefactor/errors.hpp"

namespace cyclefactor {

namespace {

std::uint64_t mix64(std::uint64_t x) {
    x += 0x9e3779b97f4a7c15ULL;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
    return x ^ (x >> 31);
}

std::uint64_t combine(std::uint64_t seed, std::uint64_t value) {
    return mix64(seed ^ (mix64(value) + 0x632be59bd9b4e019ULL + (seed << 6) + (seed >> 2)));
}

std::uint64_t hash_sequence(std::uint64_t seed, const std::vector<std::uint64_t>& values) {
    std::uint64_t h = combine(seed, values.size());
    for (auto v : values) h = combine(h, v);
    return h;
}

void check_vertex(int n, Vertex v) {
    if (v < 0 || v >= n)
        throw PreconditionError("vertex " + std::to_string(v) + " out of range for order " + std::to_string(n));
}

}  // namespace

DiGraph::DiGraph(int n, std::span<const Arc> arcs) : n_(n), out_(n), in_(n) {
    if (n < 0) throw PreconditionError("negative vertex count");
    for (const Arc& a : arcs) {
        check_vertex(n, a.tail);
        check_vertex(n, a.head);
        out_[a.tail].push_back(a.head);
        in_[a.head].push_back(a.tail);
    }
    for (int v = 0; v < n; ++v) {
        std::sort(out_[v].begin(), out_[v].end());
        std::sort(in_[v].begin(), in_[v].end());
        if (std::adjacent_find(out_[v].begin(), out_[v].end()) != out_[v].end())
            throw PreconditionError("parallel arc at vertex " + std::to_string(v));
    }
    arc_count_ = arcs.size();
    if (n <= kMaskLimit) {
        out_mask_.assign(n, 0);
        for (int v = 0; v < n; ++v)
            for (Vertex w : out_[v]) out_mask_[v] |= std::uint64_t{1} << w;
    }
}

bool DiGraph::has_arc(Vertex u, Vertex v) const {
    if (u < 0 || u >= n_ || v < 0 || v >= n_) return false;
    if (has_masks()) return (out_mask_[u] >> v) & 1U;
    return std::binary_search(out_[u].begin(), out_[u].end(), v);
}

int DiGraph::loop_count() const {
    int loops = 0;
    for (int v = 0; v < n_; ++v) loops += has_loop(v) ? 1 : 0;
    return loops;
}

std::vector<Arc> DiGraph::arcs() const {
    std::vector<Arc> result;
    result.reserve(arc_count_);
    for (int u = 0; u < n_; ++u)
        for (Vertex v : out_[u]) result.push_back({u, v});
    return result;
}

UGraph::UGraph(int n, std::span<const std::pair<Vertex, Vertex>> edges) : n_(n), adj_(n) {
    if (n < 0) throw PreconditionError("negative vertex count");
    for (auto [u, v] : edges) {
        check_vertex(n, u);
        check_vertex(n, v);
        if (u == v) throw PreconditionError("undirected graphs are loopless");
        adj_[u].push_back(v);
        adj_[v].push_back(u);
    }
    for (auto& nb : adj_) {
        std::sort(nb.begin(), nb.end());
        if (std::adjacent_find(nb.begin(), nb.end()) != nb.end()) throw PreconditionError("repeated edge");
    }
    edge_count_ = edges.size();
}

bool UGraph::adjacent(Vertex u, Vertex v) const {
    if (u < 0 || u >= n_ || v < 0 || v >= n_) return false;
    return std::binary_search(adj_[u].begin(), adj_[u].end(), v);
}

std::vector<std::pair<Vertex, Vertex>> UGraph::edges() const {
    std::vector<std::pair<Vertex, Vertex>> result;
    for (int u = 0; u < n_; ++u)
        for (Vertex v : adj_[u])
            if (u < v) result.emplace_back(u, v);
    return result;
}

bool BipartiteGraph::is_regular(int d) const {
    std::vector<int> left(n_left, 0), right(n_right, 0);
    for (auto [l, r] : edges) {
        ++left[l];
        ++right[r];
    }
    auto all_d = [d](const std::vector<int>& deg) {
        return std::all_of(deg.begin(), deg.end(), [d](int x) { return x == d; });
    };
    return all_d(left) && all_d(right);
}

std::vector<std::vector<int>> BipartiteGraph::biadjacency() const {
    std::vector<std::vector<int>> m(n_left, std::vector<int>(n_right, 0));
    for (auto [l, r] : edges) m[l][r] = 1;
    return m;
}

bool is_d_regular(const DiGraph& g, int d) {
    for (int v = 0; v < g.order(); ++v)
        if (g.out_degree(v) != d || g.in_degree(v) != d) return false;
    return true;
}

bool is_d_regular(const UGraph& g, int d) {
    for (int v = 0; v < g.order(); ++v)
        if (g.degree(v) != d) return false;
    return true;
}

int regular_degree(const DiGraph& g) {
    if (g.order() == 0) return -1;
    int d = g.out_degree(0);
    return is_d_regular(g, d) ? d : -1;
}

DiGraph disjoint_union(std::span<const DiGraph> parts) {
    std::vector<Arc> arcs;
    int offset = 0;
    for (const DiGraph& part : parts) {
        for (Arc a : part.arcs()) arcs.push_back({a.tail + offset, a.head + offset});
        offset += part.order();
    }
    return DiGraph(offset, arcs);
}

UGraph disjoint_union(std::span<const UGraph> parts) {
    std::vector<std::pair<Vertex, Vertex>> edges;
    int offset = 0;
    for (const UGraph& part : parts) {
        for (auto [u, v] : part.edges()) edges.emplace_back(u + offset, v + offset);
        offset += part.order();
    }
    return UGraph(offset, edges);
}

BipartiteGraph double_cover(const DiGraph& g) {
    BipartiteGraph b;
    b.n_left = b.n_right = g.order();
    for (Arc a : g.arcs()) b.edges.emplace_back(a.tail, a.head);
    return b;
}

DiGraph as_symmetric_digraph(const UGraph& g) {
    std::vector<Arc> arcs;
    for (auto [u, v] : g.edges()) {
        arcs.push_back({u, v});
        arcs.push_back({v, u});
    }
    return DiGraph(g.order(), arcs);
}

UGraph as_undirected(const DiGraph& g) {
    std::vector<std::pair<Vertex, Vertex>> edges;
    for (Arc a : g.arcs()) {
        if (a.is_loop()) throw PreconditionError("undirected graphs are loopless; vertex " + std::to_string(a.tail) + " has a loop");
        if (!g.has_arc(a.head, a.tail))
            throw PreconditionError("arc " + std::to_string(a.tail) + "->" + std::to_string(a.head) + " has no reverse");
        if (a.tail < a.head) edges.emplace_back(a.tail, a.head);
    }
    return UGraph(g.order(), edges);
}

DiGraph relabel(const DiGraph& g, std::span<const Vertex> perm) {
    if (static_cast<int>(perm.size()) != g.order()) throw PreconditionError("relabeling has wrong length");
    std::vector<char> seen(g.order(), 0);
    for (Vertex v : perm) {
        check_vertex(g.order(), v);
        if (seen[v]++) throw PreconditionError("relabeling is not a permutation");
    }
    std::vector<Arc> arcs;
    for (Arc a : g.arcs()) arcs.push_back({perm[a.tail], perm[a.head]});
    return DiGraph(g.order(), arcs);
}

std::uint64_t fingerprint(const DiGraph& g) {
    const int n = g.order();
    if (n == 0) return kEmptyFingerprint;

    auto induced_arcs = [&](std::span<const Vertex> nb, Vertex v) {
        std::vector<Vertex> closed(nb.begin(), nb.end());
        closed.push_back(v);
        std::sort(closed.begin(), closed.end());
        closed.erase(std::unique(closed.begin(), closed.end()), closed.end());
        std::uint64_t count = 0;
        for (Vertex a : closed)
            for (Vertex b : closed) count += g.has_arc(a, b) ? 1 : 0;
        return count;
    };

    // Local signature: degrees, loop, mutual pairs, and arc density of the
    // closed out- and in-neighbourhoods. The density term separates regular
    // graphs that plain colour refinement cannot (e.g. C6 vs 2K3 shapes).
    std::vector<std::uint64_t> colour(n);
    for (int v = 0; v < n; ++v) {
        std::uint64_t mutual = 0;
        for (Vertex w : g.out_neighbors(v))
            if (w != v && g.has_arc(w, v)) ++mutual;
        std::vector<std::uint64_t> sig{static_cast<std::uint64_t>(g.out_degree(v)),
                                       static_cast<std::uint64_t>(g.in_degree(v)),
                                       g.has_loop(v) ? 1ULL : 0ULL,
                                       mutual,
                                       induced_arcs(g.out_neighbors(v), v),
                                       induced_arcs(g.in_neighbors(v), v)};
        colour[v] = hash_sequence(0x5851f42d4c957f2dULL, sig);
    }

    std::vector<std::uint64_t> next(n), outs, ins;
    for (int round = 0; round < n; ++round) {
        for (int v = 0; v < n; ++v) {
            outs.clear();
            ins.clear();
            for (Vertex w : g.out_neighbors(v)) outs.push_back(colour[w]);
            for (Vertex u : g.in_neighbors(v)) ins.push_back(colour[u]);
            std::sort(outs.begin(), outs.end());
            std::sort(ins.begin(), ins.end());
            next[v] = combine(hash_sequence(colour[v], outs), hash_sequence(0x14057b7ef767814fULL, ins));
        }
        colour.swap(next);
    }

    std::sort(colour.begin(), colour.end());
    std::uint64_t h = combine(static_cast<std::uint64_t>(n), g.arc_count());
    return hash_sequence(h, colour);
}

}  // namespace cyclefactor
