/*
 * kernels.hpp
 *
 * Data-parallel inner loops over per-vertex distance arrays. Each kernel has
 * a scalar reference implementation and, on x86-64, an AVX2 variant. The
 * variant is picked once at startup from CPUID; GROUPCENT_SIMD=scalar in the
 * environment (or force_isa) pins the reference path.
 *
 * Distances in the AVX2 path are converted to double through the 2^52 bias
 * trick, so finite distances must stay below 2^52. Blocks holding a larger
 * finite value fall back to the scalar loop.
 */

#pragma once

#include <cstdint>
#include <optional>
#include <span>

#include "groupcent/types.hpp"

namespace groupcent::kernels {

enum class Isa { scalar, avx2 };

const char *isa_name(Isa isa);
bool isa_supported(Isa isa);
Isa active_isa();
/// Throws InputError when the ISA is not supported on this CPU/build.
void force_isa(Isa isa);

struct FarnessSum {
    std::uint64_t sum = 0;       // over finite entries
    std::uint64_t unreached = 0; // entries equal to kUnreachable
};

/// Sum of 1/d over entries with 0 < d < kUnreachable.
double harmonic_sum(std::span<const Distance> dist);

FarnessSum farness_sum(std::span<const Distance> dist);

/// Sum of (second[x] - first[x]) over x with rep[x] == u; nullopt when one
/// of those entries has second[x] == kUnreachable.
std::optional<std::uint64_t> removal_delta(std::span<const Vertex> rep,
                                           std::span<const Distance> first,
                                           std::span<const Distance> second, Vertex u);

/// out[x] = rep[x] == u ? second[x] : first[x]
void distances_without(std::span<const Vertex> rep, std::span<const Distance> first,
                       std::span<const Distance> second, Vertex u, std::span<Distance> out);

/// acc[x] = min(acc[x], row[x])
void min_into(std::span<Distance> acc, std::span<const Distance> row);

namespace scalar {
double harmonic_sum(std::span<const Distance> dist);
FarnessSum farness_sum(std::span<const Distance> dist);
std::optional<std::uint64_t> removal_delta(std::span<const Vertex> rep,
                                           std::span<const Distance> first,
                                           std::span<const Distance> second, Vertex u);
void distances_without(std::span<const Vertex> rep, std::span<const Distance> first,
                       std::span<const Distance> second, Vertex u, std::span<Distance> out);
void min_into(std::span<Distance> acc, std::span<const Distance> row);
} // namespace scalar

#if defined(GROUPCENT_HAVE_AVX2)
namespace avx2 {
double harmonic_sum(std::span<const Distance> dist);
FarnessSum farness_sum(std::span<const Distance> dist);
std::optional<std::uint64_t> removal_delta(std::span<const Vertex> rep,
                                           std::span<const Distance> first,
                                           std::span<const Distance> second, Vertex u);
void distances_without(std::span<const Vertex> rep, std::span<const Distance> first,
                       std::span<const Distance> second, Vertex u, std::span<Distance> out);
void min_into(std::span<Distance> acc, std::span<const Distance> row);
} // namespace avx2
#endif

} // namespace groupcent::kernels
