#include "stepup/combinatorics.hpp"

#include <algorithm>
#include <cstdlib>
#include <string>
#include <thread>
#include <unordered_set>

#include "stepup/error.hpp"

namespace stepup {

std::uint64_t binomial(std::uint64_t n, std::uint64_t k)
{
    if (k > n) {
        return 0;
    }
    k = std::min(k, n - k);
    unsigned __int128 acc = 1;
    for (std::uint64_t i = 1; i <= k; ++i) {
        acc = acc * (n - k + i) / i;
        if (acc > UINT64_MAX) {
            throw Error("binomial overflow: C(" + std::to_string(n) + ", " + std::to_string(k) + ")");
        }
    }
    return static_cast<std::uint64_t>(acc);
}

std::uint64_t colex_rank(std::span<const Vertex> subset)
{
    std::uint64_t rank = 0;
    for (std::size_t i = 0; i < subset.size(); ++i) {
        if (i > 0 && subset[i] <= subset[i - 1]) {
            throw InputError("colex_rank: subset is not strictly increasing");
        }
        rank += binomial(subset[i], i + 1);
    }
    return rank;
}

std::vector<Vertex> colex_unrank(std::uint64_t rank, int k, std::uint64_t v)
{
    if (k < 0 || static_cast<std::uint64_t>(k) > v) {
        throw InputError("colex_unrank: k out of range");
    }
    if (rank >= binomial(v, static_cast<std::uint64_t>(k))) {
        throw InputError("colex_unrank: index " + std::to_string(rank) + " out of range");
    }
    std::vector<Vertex> out(static_cast<std::size_t>(k));
    std::uint64_t hi = v;
    for (int i = k; i >= 1; --i) {
        // Largest c < hi with C(c, i) <= rank.
        std::uint64_t lo = static_cast<std::uint64_t>(i - 1);
        std::uint64_t top = hi - 1;
        while (lo < top) {
            const std::uint64_t mid = lo + (top - lo + 1) / 2;
            if (binomial(mid, static_cast<std::uint64_t>(i)) <= rank) {
                lo = mid;
            } else {
                top = mid - 1;
            }
        }
        out[static_cast<std::size_t>(i - 1)] = lo;
        rank -= binomial(lo, static_cast<std::uint64_t>(i));
        hi = lo;
    }
    return out;
}

bool next_combination(std::span<std::uint32_t> idx, std::uint32_t n)
{
    const std::size_t k = idx.size();
    if (k == 0) {
        return false;
    }
    std::size_t i = k;
    while (i > 0) {
        --i;
        if (idx[i] < n - k + i) {
            ++idx[i];
            for (std::size_t j = i + 1; j < k; ++j) {
                idx[j] = idx[j - 1] + 1;
            }
            return true;
        }
    }
    return false;
}

std::uint64_t uniform_below(std::mt19937_64& rng, std::uint64_t bound)
{
    if (bound == 0) {
        throw Error("uniform_below: empty range");
    }
    const std::uint64_t limit = UINT64_MAX - UINT64_MAX % bound;
    std::uint64_t x = rng();
    while (x >= limit) {
        x = rng();
    }
    return x % bound;
}

std::vector<Vertex> sample_sorted(std::mt19937_64& rng, std::uint64_t bound, std::size_t count)
{
    if (count > bound) {
        throw InputError("sample_sorted: cannot draw " + std::to_string(count) + " distinct values below "
                         + std::to_string(bound));
    }
    std::vector<Vertex> out;
    out.reserve(count);
    if (count * 2 > bound) {
        // Dense: selection sampling keeps the draw count bounded.
        std::uint64_t needed = count;
        for (std::uint64_t x = 0; x < bound && needed > 0; ++x) {
            if (uniform_below(rng, bound - x) < needed) {
                out.push_back(x);
                --needed;
            }
        }
        return out;
    }
    std::unordered_set<Vertex> seen;
    while (out.size() < count) {
        const Vertex x = uniform_below(rng, bound);
        if (seen.insert(x).second) {
            out.push_back(x);
        }
    }
    std::sort(out.begin(), out.end());
    return out;
}

unsigned worker_count()
{
    if (const char* env = std::getenv("STEPUP_WORKERS")) {
        const int n = std::atoi(env);
        if (n > 0) {
            return static_cast<unsigned>(n);
        }
    }
    return std::max(1u, std::thread::hardware_concurrency());
}

} // namespace stepup
