#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <random>
#include <stdexcept>
#include <string>
#include <vector>

#include "cyclefactor/digraph.hpp"
#include "cyclefactor/verify.hpp"

namespace cyclefactor {

// Search randomness: std::mt19937_64 (bit-exact across standard libraries)
// seeded through SplitMix64, with integer draws done here rather than through
// std::uniform_int_distribution, whose output is implementation-defined.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : engine_(seed) {}

    // Independent stream for (seed, a, b); equal inputs give equal streams.
    static Rng stream(std::uint64_t seed, std::uint64_t a, std::uint64_t b = 0);

    std::uint64_t next() { return engine_(); }
    // Uniform on [0, bound); bound > 0.
    std::uint64_t below(std::uint64_t bound);

private:
    std::mt19937_64 engine_;
};

std::uint64_t splitmix64(std::uint64_t& state);

class GenerationError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Union of d uniformly random permutations, each redrawn when it would repeat
// an existing arc; the whole attempt restarts when a redraw cap is hit. For
// 2d > n the complement is sampled this way and inverted.
// Requires 1 <= d <= n. Throws GenerationError when max_attempts restarts fail.
DiGraph random_regular_digraph(int n, int d, Rng& rng, int max_attempts = 10000);

// Rewires u->v, x->y into u->y, x->v. Requires u != x, v != y and the new arcs
// absent; returns nullopt otherwise.
std::optional<DiGraph> apply_swap(const DiGraph& g, Arc first, Arc second);

// One random degree-preserving 2-swap; g itself if no valid pair turns up in
// max_draws draws (e.g. K_d°).
DiGraph swap_move(const DiGraph& g, Rng& rng, int max_draws = 64);

struct SearchConfig {
    int n = 6;
    int d = 3;
    std::uint64_t seed = 1;
    int population = 32;
    int iterations = 200;
    int moves_per_step = 1;
    int restart_after = 25;
    int threads = 1;
};

// Throws PreconditionError unless d >= 2, d <= n, d | n, population >= 1,
// iterations >= 0, moves_per_step >= 1, restart_after >= 1.
void validate(const SearchConfig& config);

struct SearchRecord {
    Certificate certificate;
    int iteration = 0;
    std::uint64_t fingerprint = 0;
    std::string lineage;  // parent fingerprint (hex) or "random"
};

std::string fingerprint_hex(std::uint64_t fp);

// Called after every iteration with the current leaderboard.
using SearchProgress = std::function<void(int iteration, const std::vector<SearchRecord>& leaderboard)>;

// Beam search over d-regular digraphs on n vertices ranked by certified
// excess. Returns the final leaderboard, best first; identical configs give
// identical leaderboards.
std::vector<SearchRecord> run_search(const SearchConfig& config, const SearchProgress& progress = {});

}  // namespace cyclefactor
