#include <bit>
#include <cstdint>

#include "cyclefactor/enumerate.hpp"
#include "cyclefactor/errors.hpp"

namespace cyclefactor {

namespace {

// Covers vertices lowest-first. The lowest uncovered vertex v is the minimum
// of the component it lands in, and a cycle through v is taken in the
// orientation where its second vertex is below its last one, so each factor
// is reached exactly once.
class TwoFactorWalker {
public:
    TwoFactorWalker(const UGraph& g, bool edges_allowed)
        : g_(g), edges_allowed_(edges_allowed), adj_(g.order(), 0), histogram_(g.order() + 1, 0) {
        for (int v = 0; v < g.order(); ++v)
            for (Vertex w : g.neighbors(v)) adj_[v] |= std::uint64_t{1} << w;
        full_ = g.order() == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << g.order()) - 1;
    }

    void run() { cover(0, 0); }

    FactorStats stats() const {
        FactorStats s;
        for (int k = 0; k <= g_.order(); ++k) {
            if (histogram_[k] == 0) continue;
            s.histogram[k] = histogram_[k];
            s.count += histogram_[k];
            s.cycle_sum += BigInt(histogram_[k]) * k;
        }
        return s;
    }

private:
    void cover(std::uint64_t covered, int components) {
        if (covered == full_) {
            ++histogram_[components];
            return;
        }
        const Vertex v = std::countr_zero(~covered);
        const std::uint64_t free_nbrs = adj_[v] & ~covered;
        if (edges_allowed_) {
            for (std::uint64_t m = free_nbrs; m; m &= m - 1) {
                Vertex u = std::countr_zero(m);
                cover(covered | bit(v) | bit(u), components + 1);
            }
        }
        for (std::uint64_t m = free_nbrs; m; m &= m - 1) {
            Vertex second = std::countr_zero(m);
            extend(v, second, second, covered | bit(v) | bit(second), 2, components);
        }
    }

    // Path start -> ... -> tail with `length` vertices; `in_path` includes it.
    void extend(Vertex start, Vertex second, Vertex tail, std::uint64_t in_path, int length, int components) {
        if (length >= 3 && (adj_[tail] & bit(start)) && second < tail) cover(in_path, components + 1);
        for (std::uint64_t m = adj_[tail] & ~in_path; m; m &= m - 1) {
            Vertex next = std::countr_zero(m);
            extend(start, second, next, in_path | bit(next), length + 1, components);
        }
    }

    static std::uint64_t bit(Vertex v) { return std::uint64_t{1} << v; }

    const UGraph& g_;
    bool edges_allowed_;
    std::vector<std::uint64_t> adj_;
    std::uint64_t full_ = 0;
    std::vector<std::uint64_t> histogram_;
};

}  // namespace

FactorStats two_factor_stats(const UGraph& g, bool allow_edge_as_2cycle, int max_order) {
    if (g.order() > std::min(max_order, 64))
        throw PreconditionError("2-factor enumeration limited to " + std::to_string(std::min(max_order, 64)) + " vertices");
    TwoFactorWalker walker(g, allow_edge_as_2cycle);
    walker.run();
    return walker.stats();
}

}  // namespace cyclefactor
