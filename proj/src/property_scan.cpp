#include "stepup/property_scan.hpp"

#include <random>

#include "stepup/combinatorics.hpp"
#include "stepup/error.hpp"
#include "stepup/parallel.hpp"

namespace stepup {

void PropertyScanResult::merge(const PropertyScanResult& later)
{
    tuples += later.tuples;
    checks += later.checks;
    counterexamples += later.counterexamples;
    if (!failed && later.failed) {
        failed = later.failed;
        witness = later.witness;
    }
}

namespace {

void check_all(std::span<const Property> which, std::span<const Vertex> tuple, PropertyScanResult& out)
{
    ++out.tuples;
    for (const Property p : which) {
        if (tuple.size() < property_min_arity(p)) {
            continue;
        }
        ++out.checks;
        const auto v = check_property(tuple, p);
        if (!v.holds) {
            ++out.counterexamples;
            if (!out.failed) {
                out.failed = p;
                out.witness = v.witness;
            }
        }
    }
}

} // namespace

PropertyScanResult scan_properties(std::span<const Property> which, std::span<const Vertex> ground, std::size_t arity)
{
    if (arity < 2) {
        throw InputError("arity: property scans need tuples of at least 2 vertices");
    }
    const auto n = static_cast<std::uint32_t>(ground.size());
    std::vector<PropertyScanResult> partial(n);
    parallel_tasks(n, [&](std::size_t first) {
        PropertyScanResult local;
        std::vector<Vertex> tuple(arity);
        tuple[0] = ground[first];
        const auto rest = static_cast<std::uint32_t>(n - first - 1);
        for_each_combination(rest, static_cast<int>(arity - 1), [&](std::span<const std::uint32_t> idx) {
            for (std::size_t i = 0; i + 1 < arity; ++i) {
                tuple[i + 1] = ground[first + 1 + idx[i]];
            }
            check_all(which, tuple, local);
        });
        partial[first] = std::move(local);
    });
    PropertyScanResult out;
    for (const auto& p : partial) {
        out.merge(p);
    }
    return out;
}

PropertyScanResult sample_properties(std::span<const Property> which, int width, std::size_t min_arity,
                                     std::size_t max_arity, std::uint64_t seed, std::uint64_t count)
{
    if (width < 1 || width > 63) {
        throw InputError("width must be in 1..63");
    }
    if (min_arity < 2 || max_arity < min_arity) {
        throw InputError("arity: bad sample range");
    }
    const std::uint64_t ground = std::uint64_t{1} << width;
    if (max_arity > ground) {
        throw InputError("arity: tuples longer than the ground set");
    }
    std::mt19937_64 rng(seed);
    PropertyScanResult out;
    for (std::uint64_t i = 0; i < count; ++i) {
        const auto r = min_arity + uniform_below(rng, max_arity - min_arity + 1);
        const auto tuple = sample_sorted(rng, ground, r);
        check_all(which, tuple, out);
    }
    return out;
}

} // namespace stepup
