/*
 * kernels_avx2.cpp
 *
 * AVX2 variants; this file is compiled with -mavx2 and only called after a
 * CPUID check. Lanes hold one 64-bit distance each.
 */

#include <immintrin.h>

#include "groupcent/kernels.hpp"

namespace groupcent::kernels::avx2 {

namespace {

constexpr std::size_t kLanes = 4;

inline __m256i load(const Distance *p) {
    return _mm256_loadu_si256(reinterpret_cast<const __m256i *>(p));
}

inline __m256i load_rep(const Vertex *p) {
    return _mm256_cvtepu32_epi64(_mm_loadu_si128(reinterpret_cast<const __m128i *>(p)));
}

inline double hsum(__m256d v) {
    __m128d lo = _mm256_castpd256_pd128(v);
    __m128d hi = _mm256_extractf128_pd(v, 1);
    lo = _mm_add_pd(lo, hi);
    __m128d shuf = _mm_unpackhi_pd(lo, lo);
    return _mm_cvtsd_f64(_mm_add_sd(lo, shuf));
}

inline std::uint64_t hsum(__m256i v) {
    alignas(32) std::uint64_t lanes[kLanes];
    _mm256_store_si256(reinterpret_cast<__m256i *>(lanes), v);
    return lanes[0] + lanes[1] + lanes[2] + lanes[3];
}

} // namespace

double harmonic_sum(std::span<const Distance> dist) {
    const std::size_t n = dist.size();
    const __m256i zero = _mm256_setzero_si256();
    const __m256i sentinel = _mm256_set1_epi64x(-1);
    const __m256i bias = _mm256_set1_epi64x(0x4330000000000000LL);
    const __m256d bias_d = _mm256_set1_pd(4503599627370496.0); // 2^52
    const __m256d one = _mm256_set1_pd(1.0);

    __m256d acc = _mm256_setzero_pd();
    double tail = 0.0;
    std::size_t i = 0;
    for (; i + kLanes <= n; i += kLanes) {
        const __m256i d = load(dist.data() + i);
        const __m256i skip = _mm256_or_si256(_mm256_cmpeq_epi64(d, zero),
                                             _mm256_cmpeq_epi64(d, sentinel));
        const __m256i small = _mm256_cmpeq_epi64(_mm256_srli_epi64(d, 52), zero);
        // any finite lane >= 2^52 cannot use the bias conversion
        if (_mm256_movemask_pd(_mm256_castsi256_pd(_mm256_andnot_si256(
                _mm256_or_si256(skip, small), sentinel))) != 0) {
            tail += scalar::harmonic_sum(dist.subspan(i, kLanes));
            continue;
        }
        const __m256d as_double =
            _mm256_sub_pd(_mm256_castsi256_pd(_mm256_or_si256(d, bias)), bias_d);
        const __m256d recip = _mm256_div_pd(one, as_double);
        acc = _mm256_add_pd(acc, _mm256_andnot_pd(_mm256_castsi256_pd(skip), recip));
    }
    double sum = hsum(acc) + tail;
    for (; i < n; ++i)
        if (dist[i] != 0 && dist[i] != kUnreachable)
            sum += 1.0 / static_cast<double>(dist[i]);
    return sum;
}

FarnessSum farness_sum(std::span<const Distance> dist) {
    const std::size_t n = dist.size();
    const __m256i sentinel = _mm256_set1_epi64x(-1);
    __m256i sum = _mm256_setzero_si256();
    __m256i unreached = _mm256_setzero_si256();
    std::size_t i = 0;
    for (; i + kLanes <= n; i += kLanes) {
        const __m256i d = load(dist.data() + i);
        const __m256i missing = _mm256_cmpeq_epi64(d, sentinel);
        sum = _mm256_add_epi64(sum, _mm256_andnot_si256(missing, d));
        unreached = _mm256_sub_epi64(unreached, missing); // missing lanes are -1
    }
    FarnessSum out{hsum(sum), hsum(unreached)};
    for (; i < n; ++i) {
        if (dist[i] == kUnreachable)
            ++out.unreached;
        else
            out.sum += dist[i];
    }
    return out;
}

std::optional<std::uint64_t> removal_delta(std::span<const Vertex> rep,
                                           std::span<const Distance> first,
                                           std::span<const Distance> second, Vertex u) {
    const std::size_t n = rep.size();
    const __m256i target = _mm256_set1_epi64x(static_cast<long long>(u));
    const __m256i sentinel = _mm256_set1_epi64x(-1);
    __m256i sum = _mm256_setzero_si256();
    __m256i broken = _mm256_setzero_si256();
    std::size_t i = 0;
    for (; i + kLanes <= n; i += kLanes) {
        const __m256i sel = _mm256_cmpeq_epi64(load_rep(rep.data() + i), target);
        const __m256i d1 = load(first.data() + i);
        const __m256i d2 = load(second.data() + i);
        broken = _mm256_or_si256(broken, _mm256_and_si256(sel, _mm256_cmpeq_epi64(d2, sentinel)));
        sum = _mm256_add_epi64(sum, _mm256_and_si256(sel, _mm256_sub_epi64(d2, d1)));
    }
    if (!_mm256_testz_si256(broken, broken))
        return std::nullopt;
    std::uint64_t total = hsum(sum);
    for (; i < n; ++i) {
        if (rep[i] != u)
            continue;
        if (second[i] == kUnreachable)
            return std::nullopt;
        total += second[i] - first[i];
    }
    return total;
}

void distances_without(std::span<const Vertex> rep, std::span<const Distance> first,
                       std::span<const Distance> second, Vertex u, std::span<Distance> out) {
    const std::size_t n = rep.size();
    const __m256i target = _mm256_set1_epi64x(static_cast<long long>(u));
    std::size_t i = 0;
    for (; i + kLanes <= n; i += kLanes) {
        const __m256i sel = _mm256_cmpeq_epi64(load_rep(rep.data() + i), target);
        const __m256i merged =
            _mm256_blendv_epi8(load(first.data() + i), load(second.data() + i), sel);
        _mm256_storeu_si256(reinterpret_cast<__m256i *>(out.data() + i), merged);
    }
    for (; i < n; ++i)
        out[i] = rep[i] == u ? second[i] : first[i];
}

void min_into(std::span<Distance> acc, std::span<const Distance> row) {
    const std::size_t n = acc.size();
    const __m256i flip = _mm256_set1_epi64x(static_cast<long long>(0x8000000000000000ULL));
    std::size_t i = 0;
    for (; i + kLanes <= n; i += kLanes) {
        const __m256i a = load(acc.data() + i);
        const __m256i b = load(row.data() + i);
        // unsigned a > b via signed compare on sign-flipped values
        const __m256i a_gt_b =
            _mm256_cmpgt_epi64(_mm256_xor_si256(a, flip), _mm256_xor_si256(b, flip));
        _mm256_storeu_si256(reinterpret_cast<__m256i *>(acc.data() + i),
                            _mm256_blendv_epi8(a, b, a_gt_b));
    }
    for (; i < n; ++i)
        acc[i] = row[i] < acc[i] ? row[i] : acc[i];
}

} // namespace groupcent::kernels::avx2
