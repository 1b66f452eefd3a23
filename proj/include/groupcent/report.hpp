/*
 * report.hpp
 *
 * Algorithm configuration and the result record every solver returns.
 */

#pragma once

#include <chrono>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "groupcent/centrality.hpp"

namespace groupcent {

struct AlgoConfig {
    Vertex k = 1;
    double eps = 0.01;
    unsigned p = 1;
    unsigned trials = 100;
    std::uint64_t seed = 0;
    /// 0 selects std::thread::hardware_concurrency().
    unsigned workers = 0;
    /// Forces a single worker so every counter is reproducible bit for bit.
    bool deterministic = false;
    /// Bound-based traversal pruning; off gives the exact-evaluation variants.
    bool pruning = true;
    std::uint64_t exhaustive_budget = 5'000'000;

    /// Throws InputError on k < 1, eps <= 0 or trials < 1.
    void validate() const;
    unsigned effective_workers() const;
};

struct SwapRecord {
    Vertex removed;
    Vertex added;
    friend bool operator==(const SwapRecord &, const SwapRecord &) = default;
};

struct RunReport {
    std::string algorithm;
    Group group; // sorted
    ObjectiveKind objective = ObjectiveKind::harmonic;
    double objective_value = 0.0;
    std::optional<std::uint64_t> raw_farness;
    std::uint64_t iterations = 0;
    std::uint64_t swaps_committed = 0;
    std::uint64_t candidates_evaluated = 0;
    std::uint64_t traversals_pruned = 0;
    double wall_time_ms = 0.0;
    /// How the local searches were seeded ("greedy", "given"); empty otherwise.
    std::string init;
    std::vector<SwapRecord> swaps;
    /// Greedy only: best marginal gain of each round, in order.
    std::vector<double> step_gains;
    AlgoConfig config;
};

/// Steady-clock timer for RunReport::wall_time_ms.
class Stopwatch {
public:
    Stopwatch() : start_(std::chrono::steady_clock::now()) {}
    double elapsed_ms() const {
        return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start_)
            .count();
    }

private:
    std::chrono::steady_clock::time_point start_;
};

} // namespace groupcent
