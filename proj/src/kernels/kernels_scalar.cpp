/*
 * kernels_scalar.cpp
 *
 * Reference implementations. The AVX2 variants are tested against these.
 */

#include <algorithm>

#include "groupcent/kernels.hpp"

namespace groupcent::kernels::scalar {

double harmonic_sum(std::span<const Distance> dist) {
    double sum = 0.0;
    for (Distance d : dist)
        if (d != 0 && d != kUnreachable)
            sum += 1.0 / static_cast<double>(d);
    return sum;
}

FarnessSum farness_sum(std::span<const Distance> dist) {
    FarnessSum out;
    for (Distance d : dist) {
        if (d == kUnreachable)
            ++out.unreached;
        else
            out.sum += d;
    }
    return out;
}

std::optional<std::uint64_t> removal_delta(std::span<const Vertex> rep,
                                           std::span<const Distance> first,
                                           std::span<const Distance> second, Vertex u) {
    std::uint64_t sum = 0;
    bool disconnects = false;
    for (std::size_t x = 0; x < rep.size(); ++x) {
        if (rep[x] != u)
            continue;
        if (second[x] == kUnreachable)
            disconnects = true;
        else
            sum += second[x] - first[x];
    }
    if (disconnects)
        return std::nullopt;
    return sum;
}

void distances_without(std::span<const Vertex> rep, std::span<const Distance> first,
                       std::span<const Distance> second, Vertex u, std::span<Distance> out) {
    for (std::size_t x = 0; x < rep.size(); ++x)
        out[x] = rep[x] == u ? second[x] : first[x];
}

void min_into(std::span<Distance> acc, std::span<const Distance> row) {
    for (std::size_t x = 0; x < acc.size(); ++x)
        acc[x] = std::min(acc[x], row[x]);
}

} // namespace groupcent::kernels::scalar
