#pragma once

#include <array>
#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "cyclefactor/digraph.hpp"

namespace cyclefactor {

// K_m°: every ordered pair including loops. m >= 1.
DiGraph complete_looped(int m);

// G_n° on Z_n: i -> i, i -> i+1, i -> i-1. n >= 4.
DiGraph looped_bidirected_cycle(int n);

enum class XdClass { A1, B1, C1, A2, B2, C2 };

std::string_view class_name(XdClass c);

// Vertex classes of X_d together with its four crossing arcs between
// D1 = B1 ∪ C1 ∪ A2 and D2 = B2 ∪ C2 ∪ A1.
struct XdLabeling {
    int d = 0;
    std::vector<XdClass> class_of;
    Vertex a1 = 0, b1 = 0, a2 = 0, b2 = 0;
    Arc u1, v1, u2, v2;  // B1->A1, A2->B2, B2->A2, A1->B1

    std::array<Arc, 4> crossing_arcs() const { return {u1, v1, u2, v2}; }
    bool in_d1(Vertex v) const;
};

struct XdGraph {
    DiGraph graph;
    XdLabeling labeling;
};

// Six classes of sizes 1,1,d-2,1,1,d-2 laid out as A1, B1, C1, A2, B2, C2, so
// that X_3 coincides with G_6° vertex for vertex. d >= 3.
XdGraph build_xd(int d);

// X_d followed by k-2 copies of K_d°. k >= 2, d >= 3.
DiGraph build_gkd(int k, int d);

UGraph cycle_graph(int n);                           // C_n, n >= 3
UGraph clique(int m);                                // K_m, m >= 1
UGraph complete_multipartite(const std::vector<int>& part_sizes);
UGraph copies(const UGraph& g, int count);           // count >= 1

// Named families: "cycle" (n), "clique" (m), "k222"; "copies" repeats the
// result. Throws PreconditionError on an unknown name or missing parameter.
UGraph undirected_family(std::string_view name, const std::map<std::string, int>& params);

// Three K_m blocks; block i loses the edge {a_i, b_i} between its two lowest
// vertices, then b_1-a_2, b_2-a_3, b_3-a_1 are added. (m-1)-regular. m >= 4.
UGraph undirected_three_block_splice(int m);

}  // namespace cyclefactor
