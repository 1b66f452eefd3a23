/*
 * oracles.hpp
 *
 * Ground truth and baselines: exhaustive enumeration of all k-subsets,
 * best-of-N random groups, and a 0/1 program for group-harmonic
 * maximization that can be written as an LP file and checked without a
 * solver.
 */

#pragma once

#include <filesystem>
#include <iosfwd>
#include <span>
#include <string>
#include <vector>

#include "groupcent/report.hpp"

namespace groupcent {

/// C(n, r), saturating at UINT64_MAX.
std::uint64_t binomial(std::uint64_t n, std::uint64_t r);

/**
 * Optimum over all k-subsets in lexicographic order; the first optimum wins
 * ties. Harmonic values within 1e-12 (relative) of the incumbent count as
 * ties, farness is compared exactly. Throws BudgetExceededError when C(n, k)
 * exceeds cfg.exhaustive_budget and DisconnectedError for closeness on a
 * graph that is not (strongly) connected.
 */
RunReport exhaustive_best(const Graph &g, const AlgoConfig &cfg, ObjectiveKind objective);

/// Best of cfg.trials uniform k-subsets drawn from a generator seeded with
/// cfg.seed. Trial t depends only on the seed and t, so more trials never
/// give a worse result.
RunReport best_random(const Graph &g, const AlgoConfig &cfg, ObjectiveKind objective);

/**
 * y_j = 1 when j is in the group; x_ij = 1 when i is served by member j,
 * earning 1 / dist(j, i). Constraints: every i is a member or served once,
 * exactly k members, and x_ij <= y_j. Variables exist only for finite
 * distances.
 */
struct IlpModel {
    struct Assignment {
        Vertex i;
        Vertex j;
        double coefficient;
    };
    Vertex n = 0;
    Vertex k = 0;
    std::vector<Assignment> x; // sorted by (i, j)
    /// Vertices that no other vertex reaches; the model needs them in S.
    std::vector<Vertex> uncovered;

    std::size_t num_variables() const { return n + x.size(); }
    std::size_t num_constraints() const { return n + 1 + x.size(); }
};

IlpModel build_ilp_harmonic(const Graph &g, Vertex k);

/// CPLEX-style LP text: Maximize / Subject To / Binary / End.
void write_lp(const IlpModel &model, std::ostream &out);
void export_ilp_harmonic(const Graph &g, Vertex k, const std::filesystem::path &path);

/// Objective of the 0/1 point induced by S (each non-member served by its
/// nearest member, ties to the smaller id) after checking every constraint.
/// Throws InputError when |S| != k or some non-member cannot be served.
double evaluate_assignment(const IlpModel &model, std::span<const Vertex> group);

} // namespace groupcent
