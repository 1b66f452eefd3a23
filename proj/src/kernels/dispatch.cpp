/*
 * dispatch.cpp
 */

#include <atomic>
#include <cstdlib>
#include <cstring>

#include "groupcent/kernels.hpp"

namespace groupcent::kernels {

namespace {

Isa detect() {
    if (const char *env = std::getenv("GROUPCENT_SIMD"); env && std::strcmp(env, "scalar") == 0)
        return Isa::scalar;
    return isa_supported(Isa::avx2) ? Isa::avx2 : Isa::scalar;
}

std::atomic<Isa> &current() {
    static std::atomic<Isa> isa{detect()};
    return isa;
}

} // namespace

const char *isa_name(Isa isa) {
    switch (isa) {
    case Isa::scalar:
        return "scalar";
    case Isa::avx2:
        return "avx2";
    }
    return "unknown";
}

bool isa_supported(Isa isa) {
    switch (isa) {
    case Isa::scalar:
        return true;
    case Isa::avx2:
#if defined(GROUPCENT_HAVE_AVX2)
        return __builtin_cpu_supports("avx2");
#else
        return false;
#endif
    }
    return false;
}

Isa active_isa() { return current().load(std::memory_order_relaxed); }

void force_isa(Isa isa) {
    if (!isa_supported(isa))
        throw InputError(std::string("instruction set not available: ") + isa_name(isa));
    current().store(isa, std::memory_order_relaxed);
}

#if defined(GROUPCENT_HAVE_AVX2)
#define GROUPCENT_DISPATCH(fn, ...)                                                            \
    (active_isa() == Isa::avx2 ? avx2::fn(__VA_ARGS__) : scalar::fn(__VA_ARGS__))
#else
#define GROUPCENT_DISPATCH(fn, ...) scalar::fn(__VA_ARGS__)
#endif

double harmonic_sum(std::span<const Distance> dist) {
    return GROUPCENT_DISPATCH(harmonic_sum, dist);
}

FarnessSum farness_sum(std::span<const Distance> dist) {
    return GROUPCENT_DISPATCH(farness_sum, dist);
}

std::optional<std::uint64_t> removal_delta(std::span<const Vertex> rep,
                                           std::span<const Distance> first,
                                           std::span<const Distance> second, Vertex u) {
    return GROUPCENT_DISPATCH(removal_delta, rep, first, second, u);
}

void distances_without(std::span<const Vertex> rep, std::span<const Distance> first,
                       std::span<const Distance> second, Vertex u, std::span<Distance> out) {
    GROUPCENT_DISPATCH(distances_without, rep, first, second, u, out);
}

void min_into(std::span<Distance> acc, std::span<const Distance> row) {
    GROUPCENT_DISPATCH(min_into, acc, row);
}

} // namespace groupcent::kernels
