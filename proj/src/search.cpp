#include "cyclefactor/search.hpp"

#include <algorithm>
#include <cstdio>
#include <numeric>
#include <thread>
#include <unordered_map>

#include "cyclefactor/errors.hpp"

namespace cyclefactor {

std::uint64_t splitmix64(std::uint64_t& state) {
    std::uint64_t z = (state += 0x9e3779b97f4a7c15ULL);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
}

Rng Rng::stream(std::uint64_t seed, std::uint64_t a, std::uint64_t b) {
    std::uint64_t state = seed;
    std::uint64_t key = splitmix64(state);
    state ^= a * 0xd1b54a32d192ed03ULL;
    key ^= splitmix64(state);
    state ^= b * 0xabc98388fb8fac03ULL;
    key ^= splitmix64(state);
    return Rng(key);
}

std::uint64_t Rng::below(std::uint64_t bound) {
    // Reject the top partial block so every residue is equally likely.
    const std::uint64_t limit = ~std::uint64_t{0} - (~std::uint64_t{0} % bound);
    std::uint64_t x;
    do {
        x = next();
    } while (x >= limit);
    return x % bound;
}

DiGraph random_regular_digraph(int n, int d, Rng& rng, int max_attempts) {
    if (d < 1 || d > n) throw PreconditionError("random regular digraph needs 1 <= d <= n");
    if (2 * d > n) {
        // Dense layers collide too often; sample the sparse complement instead.
        std::vector<char> present(static_cast<std::size_t>(n) * n, 0);
        if (d < n)
            for (Arc a : random_regular_digraph(n, n - d, rng, max_attempts).arcs())
                present[static_cast<std::size_t>(a.tail) * n + a.head] = 1;
        std::vector<Arc> arcs;
        for (int u = 0; u < n; ++u)
            for (int v = 0; v < n; ++v)
                if (!present[static_cast<std::size_t>(u) * n + v]) arcs.push_back({u, v});
        return DiGraph(n, arcs);
    }
    constexpr int kRedraws = 100;
    std::vector<Vertex> perm(n);
    for (int attempt = 0; attempt < max_attempts; ++attempt) {
        std::vector<char> used(static_cast<std::size_t>(n) * n, 0);
        bool complete = true;
        for (int layer = 0; layer < d && complete; ++layer) {
            bool placed = false;
            for (int redraw = 0; redraw < kRedraws && !placed; ++redraw) {
                std::iota(perm.begin(), perm.end(), 0);
                for (int i = n - 1; i > 0; --i) std::swap(perm[i], perm[rng.below(static_cast<std::uint64_t>(i) + 1)]);
                placed = true;
                for (int v = 0; v < n && placed; ++v) placed = !used[static_cast<std::size_t>(v) * n + perm[v]];
            }
            if (!placed) {
                complete = false;
                break;
            }
            for (int v = 0; v < n; ++v) used[static_cast<std::size_t>(v) * n + perm[v]] = 1;
        }
        if (!complete) continue;
        std::vector<Arc> arcs;
        for (int u = 0; u < n; ++u)
            for (int v = 0; v < n; ++v)
                if (used[static_cast<std::size_t>(u) * n + v]) arcs.push_back({u, v});
        return DiGraph(n, arcs);
    }
    throw GenerationError("no " + std::to_string(d) + "-regular digraph on " + std::to_string(n) + " vertices after " +
                          std::to_string(max_attempts) + " attempts");
}

std::optional<DiGraph> apply_swap(const DiGraph& g, Arc first, Arc second) {
    const auto [u, v] = first;
    const auto [x, y] = second;
    if (u == x || v == y) return std::nullopt;
    if (!g.has_arc(u, v) || !g.has_arc(x, y) || g.has_arc(u, y) || g.has_arc(x, v)) return std::nullopt;
    std::vector<Arc> arcs;
    arcs.reserve(g.arc_count());
    for (Arc a : g.arcs()) {
        if (a == first) {
            arcs.push_back({u, y});
        } else if (a == second) {
            arcs.push_back({x, v});
        } else {
            arcs.push_back(a);
        }
    }
    return DiGraph(g.order(), arcs);
}

DiGraph swap_move(const DiGraph& g, Rng& rng, int max_draws) {
    const auto arcs = g.arcs();
    if (arcs.size() < 2) return g;
    for (int draw = 0; draw < max_draws; ++draw) {
        const Arc a = arcs[rng.below(arcs.size())];
        const Arc b = arcs[rng.below(arcs.size())];
        if (auto swapped = apply_swap(g, a, b)) return *std::move(swapped);
    }
    return g;
}

void validate(const SearchConfig& c) {
    if (c.d < 2) throw PreconditionError("search needs d >= 2");
    if (c.n < c.d) throw PreconditionError("search needs d <= n");
    if (c.n % c.d != 0) throw PreconditionError("search needs d | n");
    if (c.n > DiGraph::kMaskLimit) throw PreconditionError("search limited to n <= 64");
    if (c.population < 1) throw PreconditionError("population must be >= 1");
    if (c.iterations < 0) throw PreconditionError("iterations must be >= 0");
    if (c.moves_per_step < 1) throw PreconditionError("moves per step must be >= 1");
    if (c.restart_after < 1) throw PreconditionError("restart threshold must be >= 1");
}

std::string fingerprint_hex(std::uint64_t fp) {
    char buf[17];
    std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(fp));
    return buf;
}

namespace {

struct Candidate {
    DiGraph graph;
    std::string text;
    std::uint64_t fp = 0;
    int iteration = 0;
    std::string lineage;
    std::optional<Certificate> cert;  // nullopt scores as -infinity
};

// Best first: higher excess, then lower fingerprint. Unscored sort last.
bool ranks_before(const Candidate& a, const Candidate& b) {
    if (a.cert.has_value() != b.cert.has_value()) return a.cert.has_value();
    if (a.cert && a.cert->excess != b.cert->excess) return a.cert->excess > b.cert->excess;
    return a.fp < b.fp;
}

class BeamSearch {
public:
    explicit BeamSearch(const SearchConfig& config) : config_(config) {}

    std::vector<SearchRecord> run(const SearchProgress& progress) {
        std::vector<Candidate> fresh;
        for (int slot = 0; slot < config_.population; ++slot)
            if (auto c = random_candidate(0, slot)) fresh.push_back(std::move(*c));
        score(fresh);
        beam_ = select(std::move(fresh));

        std::optional<BigRational> best = best_excess();
        int stagnant = 0;
        for (int it = 1; it <= config_.iterations; ++it) {
            std::vector<Candidate> children;
            const bool restart = stagnant >= config_.restart_after;
            const std::size_t keep = restart ? (beam_.size() + 1) / 2 : beam_.size();
            for (std::size_t slot = 0; slot < beam_.size(); ++slot) {
                Rng rng = Rng::stream(config_.seed, static_cast<std::uint64_t>(it), slot);
                DiGraph g = beam_[slot].graph;
                for (int m = 0; m < config_.moves_per_step; ++m) g = swap_move(g, rng);
                children.push_back(make_candidate(std::move(g), it, fingerprint_hex(beam_[slot].fp)));
            }
            if (restart) {
                // Stagnant lineages in the lower half are replaced by fresh samples.
                beam_.resize(keep);
                for (int slot = static_cast<int>(keep); slot < config_.population; ++slot)
                    if (auto c = random_candidate(it, config_.population + slot)) children.push_back(std::move(*c));
                stagnant = 0;
            }
            score(children);
            std::vector<Candidate> pool = std::move(beam_);
            for (auto& c : children) pool.push_back(std::move(c));
            beam_ = select(std::move(pool));

            std::optional<BigRational> now = best_excess();
            if (now && (!best || *now > *best)) {
                best = now;
                stagnant = 0;
            } else if (!restart) {
                ++stagnant;
            }
            if (progress) progress(it, leaderboard());
        }
        return leaderboard();
    }

private:
    Candidate make_candidate(DiGraph g, int iteration, std::string lineage) {
        Candidate c;
        c.text = to_text(g);
        c.fp = fingerprint(g);
        c.graph = std::move(g);
        c.iteration = iteration;
        c.lineage = std::move(lineage);
        return c;
    }

    std::optional<Candidate> random_candidate(int iteration, int slot) {
        Rng rng = Rng::stream(config_.seed ^ 0x7261'6e64'6f6dULL, static_cast<std::uint64_t>(iteration),
                              static_cast<std::uint64_t>(slot));
        try {
            return make_candidate(random_regular_digraph(config_.n, config_.d, rng), iteration, "random");
        } catch (const GenerationError&) {
            return std::nullopt;
        }
    }

    void score(std::vector<Candidate>& batch) {
        std::vector<std::size_t> todo;
        for (std::size_t i = 0; i < batch.size(); ++i) {
            auto hit = cache_.find(batch[i].text);
            if (hit != cache_.end()) {
                if (hit->second) batch[i].cert = with_provenance(*hit->second, batch[i]);
            } else {
                todo.push_back(i);
            }
        }
        auto evaluate = [&](std::size_t i) {
            try {
                batch[i].cert = certify(batch[i].graph, config_.d, provenance(batch[i]));
            } catch (const NoCycleFactorError&) {
                batch[i].cert.reset();
            }
        };
        const int threads = std::max(1, std::min<int>(config_.threads, static_cast<int>(todo.size())));
        if (threads == 1) {
            for (std::size_t i : todo) evaluate(i);
        } else {
            std::vector<std::jthread> pool;
            for (int t = 0; t < threads; ++t)
                pool.emplace_back([&, t] {
                    for (std::size_t k = t; k < todo.size(); k += threads) evaluate(todo[k]);
                });
        }
        for (std::size_t i : todo) cache_.emplace(batch[i].text, batch[i].cert);
    }

    std::string provenance(const Candidate& c) const {
        return "search n=" + std::to_string(config_.n) + " d=" + std::to_string(config_.d) +
               " seed=" + std::to_string(config_.seed) + " iteration=" + std::to_string(c.iteration);
    }

    Certificate with_provenance(Certificate cert, const Candidate& c) const {
        cert.provenance = provenance(c);
        return cert;
    }

    // Sort, keep the first representative of each fingerprint, truncate.
    std::vector<Candidate> select(std::vector<Candidate> pool) const {
        std::stable_sort(pool.begin(), pool.end(), ranks_before);
        std::vector<Candidate> out;
        for (auto& c : pool) {
            if (static_cast<int>(out.size()) == config_.population) break;
            if (!c.cert) continue;
            bool seen = std::any_of(out.begin(), out.end(), [&](const Candidate& o) { return o.fp == c.fp; });
            if (!seen) out.push_back(std::move(c));
        }
        return out;
    }

    std::optional<BigRational> best_excess() const {
        if (beam_.empty()) return std::nullopt;
        return beam_.front().cert->excess;
    }

    std::vector<SearchRecord> leaderboard() const {
        std::vector<SearchRecord> out;
        for (const auto& c : beam_) out.push_back({*c.cert, c.iteration, c.fp, c.lineage});
        return out;
    }

    SearchConfig config_;
    std::vector<Candidate> beam_;
    std::unordered_map<std::string, std::optional<Certificate>> cache_;
};

}  // namespace

std::vector<SearchRecord> run_search(const SearchConfig& config, const SearchProgress& progress) {
    validate(config);
    return BeamSearch(config).run(progress);
}

}  // namespace cyclefactor
