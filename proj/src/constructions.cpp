#include "cyclefactor/constructions.hpp"

#include "cyclefactor/errors.hpp"

namespace cyclefactor {

DiGraph complete_looped(int m) {
    if (m < 1) throw PreconditionError("complete looped digraph needs m >= 1");
    std::vector<Arc> arcs;
    for (int u = 0; u < m; ++u)
        for (int v = 0; v < m; ++v) arcs.push_back({u, v});
    return DiGraph(m, arcs);
}

DiGraph looped_bidirected_cycle(int n) {
    if (n < 4) throw PreconditionError("looped bidirected cycle needs n >= 4 (smaller n gives parallel arcs)");
    std::vector<Arc> arcs;
    for (int i = 0; i < n; ++i) {
        arcs.push_back({i, i});
        arcs.push_back({i, (i + 1) % n});
        arcs.push_back({i, (i + n - 1) % n});
    }
    return DiGraph(n, arcs);
}

std::string_view class_name(XdClass c) {
    switch (c) {
        case XdClass::A1: return "A1";
        case XdClass::B1: return "B1";
        case XdClass::C1: return "C1";
        case XdClass::A2: return "A2";
        case XdClass::B2: return "B2";
        case XdClass::C2: return "C2";
    }
    return "?";
}

bool XdLabeling::in_d1(Vertex v) const {
    XdClass c = class_of[v];
    return c == XdClass::B1 || c == XdClass::C1 || c == XdClass::A2;
}

XdGraph build_xd(int d) {
    if (d < 3) throw PreconditionError("X_d needs d >= 3");
    const int n = 2 * d;
    const std::array<int, 6> sizes{1, 1, d - 2, 1, 1, d - 2};
    std::array<std::vector<Vertex>, 6> members;
    XdLabeling lab;
    lab.d = d;
    lab.class_of.resize(n);
    Vertex next = 0;
    for (int c = 0; c < 6; ++c) {
        for (int i = 0; i < sizes[c]; ++i) {
            members[c].push_back(next);
            lab.class_of[next] = static_cast<XdClass>(c);
            ++next;
        }
    }

    std::vector<Arc> arcs;
    for (int c = 0; c < 6; ++c) {
        for (int k : {(c + 5) % 6, c, (c + 1) % 6})
            for (Vertex u : members[c])
                for (Vertex v : members[k]) arcs.push_back({u, v});
    }

    lab.a1 = members[0][0];
    lab.b1 = members[1][0];
    lab.a2 = members[3][0];
    lab.b2 = members[4][0];
    lab.u1 = {lab.b1, lab.a1};
    lab.v1 = {lab.a2, lab.b2};
    lab.u2 = {lab.b2, lab.a2};
    lab.v2 = {lab.a1, lab.b1};
    return {DiGraph(n, arcs), std::move(lab)};
}

DiGraph build_gkd(int k, int d) {
    if (k < 2) throw PreconditionError("G_{k,d} needs k >= 2");
    std::vector<DiGraph> parts;
    parts.push_back(build_xd(d).graph);
    for (int i = 0; i < k - 2; ++i) parts.push_back(complete_looped(d));
    return disjoint_union(parts);
}

UGraph cycle_graph(int n) {
    if (n < 3) throw PreconditionError("cycle needs n >= 3");
    std::vector<std::pair<Vertex, Vertex>> edges;
    for (int i = 0; i < n; ++i) edges.emplace_back(i, (i + 1) % n);
    return UGraph(n, edges);
}

UGraph clique(int m) {
    if (m < 1) throw PreconditionError("clique needs m >= 1");
    std::vector<std::pair<Vertex, Vertex>> edges;
    for (int u = 0; u < m; ++u)
        for (int v = u + 1; v < m; ++v) edges.emplace_back(u, v);
    return UGraph(m, edges);
}

UGraph complete_multipartite(const std::vector<int>& part_sizes) {
    std::vector<int> part;
    for (std::size_t p = 0; p < part_sizes.size(); ++p) {
        if (part_sizes[p] < 1) throw PreconditionError("multipartite parts must be non-empty");
        part.insert(part.end(), part_sizes[p], static_cast<int>(p));
    }
    const int n = static_cast<int>(part.size());
    std::vector<std::pair<Vertex, Vertex>> edges;
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v)
            if (part[u] != part[v]) edges.emplace_back(u, v);
    return UGraph(n, edges);
}

UGraph copies(const UGraph& g, int count) {
    if (count < 1) throw PreconditionError("copies needs count >= 1");
    std::vector<UGraph> parts(count, g);
    return disjoint_union(parts);
}

UGraph undirected_family(std::string_view name, const std::map<std::string, int>& params) {
    auto param = [&](const std::string& key) {
        auto it = params.find(key);
        if (it == params.end())
            throw PreconditionError("family '" + std::string(name) + "' needs parameter '" + key + "'");
        return it->second;
    };
    UGraph base;
    if (name == "cycle") {
        base = cycle_graph(param("n"));
    } else if (name == "clique") {
        base = clique(param("m"));
    } else if (name == "k222") {
        base = complete_multipartite({2, 2, 2});
    } else {
        throw PreconditionError("unknown undirected family '" + std::string(name) + "'");
    }
    auto it = params.find("copies");
    return it == params.end() ? base : copies(base, it->second);
}

UGraph undirected_three_block_splice(int m) {
    if (m < 4) throw PreconditionError("three-block splice needs m >= 4");
    std::vector<std::pair<Vertex, Vertex>> edges;
    for (int block = 0; block < 3; ++block) {
        const int base = block * m;
        for (int u = 0; u < m; ++u)
            for (int v = u + 1; v < m; ++v)
                if (!(u == 0 && v == 1)) edges.emplace_back(base + u, base + v);
    }
    for (int block = 0; block < 3; ++block) {
        Vertex b = block * m + 1;
        Vertex a_next = ((block + 1) % 3) * m;
        edges.emplace_back(b, a_next);
    }
    return UGraph(3 * m, edges);
}

}  // namespace cyclefactor
