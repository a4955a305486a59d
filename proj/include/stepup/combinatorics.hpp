#pragma once

#include <cstdint>
#include <random>
#include <span>
#include <type_traits>
#include <vector>

namespace stepup {

using Vertex = std::uint64_t;

// C(n, k); throws on overflow of 64 bits.
std::uint64_t binomial(std::uint64_t n, std::uint64_t k);

// Colex rank of a strictly increasing k-subset: sum_i C(c_i, i+1).
std::uint64_t colex_rank(std::span<const Vertex> subset);

// Inverse of colex_rank for k-subsets of [0, v).
std::vector<Vertex> colex_unrank(std::uint64_t rank, int k, std::uint64_t v);

// Advances `idx` (strictly increasing indices into [0, n)) to the next
// k-combination in lexicographic order. Returns false after the last one.
bool next_combination(std::span<std::uint32_t> idx, std::uint32_t n);

// Calls fn(span<const uint32_t>) for every k-subset of [0, n) in
// lexicographic order. fn may return false to stop early.
template <typename Fn>
void for_each_combination(std::uint32_t n, int k, Fn&& fn)
{
    if (k < 0 || static_cast<std::uint32_t>(k) > n) {
        return;
    }
    std::vector<std::uint32_t> idx(static_cast<std::size_t>(k));
    for (int i = 0; i < k; ++i) {
        idx[static_cast<std::size_t>(i)] = static_cast<std::uint32_t>(i);
    }
    do {
        if constexpr (std::is_same_v<decltype(fn(std::span<const std::uint32_t>(idx))), bool>) {
            if (!fn(std::span<const std::uint32_t>(idx))) {
                return;
            }
        } else {
            fn(std::span<const std::uint32_t>(idx));
        }
    } while (next_combination(idx, n));
}

// Uniform integer in [0, bound) from a 64-bit Mersenne twister. Unlike
// std::uniform_int_distribution the mapping is fixed, so seeded runs give
// identical output on every standard library.
std::uint64_t uniform_below(std::mt19937_64& rng, std::uint64_t bound);

// Sorted sample of `count` distinct values from [0, bound).
std::vector<Vertex> sample_sorted(std::mt19937_64& rng, std::uint64_t bound, std::size_t count);

// Number of worker threads: STEPUP_WORKERS if set, else hardware concurrency.
unsigned worker_count();

} // namespace stepup
