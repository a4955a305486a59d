#include "stepup/coloring.hpp"

#include <algorithm>
#include <array>

#include "stepup/clique.hpp"
#include "stepup/delta.hpp"
#include "stepup/error.hpp"
#include "stepup/parallel.hpp"

namespace stepup {

namespace {

constexpr std::uint64_t max_scan_subsets = std::uint64_t{1} << 36;

class LiftedColoringOracle final : public EdgeOracle {
public:
    explicit LiftedColoringOracle(std::shared_ptr<const TwoColoring> phi)
        : phi_(std::move(phi))
    {
    }

    bool contains(std::span<const Vertex> e) const override
    {
        std::array<BitIndex, 3> d{};
        delta_sequence(e, d);
        if (d[0] < d[1] && d[1] < d[2]) {
            const std::array<Vertex, 3> s{Vertex(d[0]), Vertex(d[1]), Vertex(d[2])};
            return phi_->color(s) == Color::red;
        }
        if (d[0] > d[1] && d[1] > d[2]) {
            const std::array<Vertex, 3> s{Vertex(d[2]), Vertex(d[1]), Vertex(d[0])};
            return phi_->color(s) == Color::red;
        }
        return false;
    }

    std::string describe() const override { return "lift k=4 N=" + std::to_string(phi_->ground_size()); }

private:
    std::shared_ptr<const TwoColoring> phi_;
};

std::vector<std::vector<std::uint32_t>> inner_subsets(int p, int k)
{
    std::vector<std::vector<std::uint32_t>> out;
    for_each_combination(static_cast<std::uint32_t>(p), k, [&](std::span<const std::uint32_t> idx) {
        out.emplace_back(idx.begin(), idx.end());
    });
    return out;
}

std::uint64_t count_red(const TwoColoring& chi, std::span<const Vertex> subset,
                        const std::vector<std::vector<std::uint32_t>>& inner, std::vector<Vertex>& buf)
{
    std::uint64_t red = 0;
    for (const auto& idx : inner) {
        for (std::size_t i = 0; i < idx.size(); ++i) {
            buf[i] = subset[idx[i]];
        }
        if (chi.color(buf) == Color::red) {
            ++red;
        }
    }
    return red;
}

} // namespace

const char* to_string(Color c)
{
    return c == Color::red ? "red" : "blue";
}

Color parse_color(const std::string& text)
{
    if (text == "red") {
        return Color::red;
    }
    if (text == "blue") {
        return Color::blue;
    }
    throw InputError("unknown color '" + text + "' (expected red or blue)");
}

TwoColoring::TwoColoring(Hypergraph red, std::shared_ptr<const TwoColoring> base)
    : red_(std::move(red))
    , base_(std::move(base))
{
}

TwoColoring TwoColoring::from_red(int k, std::uint64_t ground_size, const std::vector<std::vector<Vertex>>& red)
{
    return TwoColoring(Hypergraph::from_edges(k, ground_size, red));
}

TwoColoring TwoColoring::constant(Color c, int k, std::uint64_t ground_size)
{
    return TwoColoring(c == Color::red ? Hypergraph::complete(k, ground_size) : Hypergraph::empty(k, ground_size));
}

TwoColoring lift_coloring(const TwoColoring& phi)
{
    if (phi.uniformity() != 3) {
        throw InputError("base uniformity: lift_coloring needs a 3-uniform coloring, got "
                         + std::to_string(phi.uniformity()));
    }
    if (phi.ground_size() > 63) {
        throw InputError("lift_coloring: base ground set must have at most 63 vertices");
    }
    auto base = std::make_shared<const TwoColoring>(phi);
    const std::uint64_t ground = std::uint64_t{1} << phi.ground_size();
    Hypergraph red(4, ground, std::make_shared<const LiftedColoringOracle>(base));
    return TwoColoring(std::move(red), base);
}

Certificate verify_base_phi(const TwoColoring& phi, int n)
{
    if (phi.uniformity() != 3) {
        throw InputError("base uniformity: verify_base_phi needs a 3-uniform coloring");
    }
    Certificate cert;
    cert.task = "verify-base-phi";
    cert.property = "at most 2 red triples per 4-set and no blue K_" + std::to_string(n) + "^(3)";
    cert.construction = {{"rule", "explicit"},
                         {"uniformity", 3},
                         {"ground_size", phi.ground_size()},
                         {"clique_bound", n}};
    const auto v = phi.ground_size();
    if (v > exact_scope_limit) {
        throw InputError("verify_base_phi: ground set limited to 64 vertices");
    }
    const auto inner = inner_subsets(4, 3);
    std::vector<Vertex> buf(3);
    std::vector<Vertex> four(4);
    std::uint64_t worst = 0;
    std::vector<Vertex> offending;
    for_each_combination(static_cast<std::uint32_t>(v), 4, [&](std::span<const std::uint32_t> idx) {
        std::copy(idx.begin(), idx.end(), four.begin());
        const auto red = count_red(phi, four, inner, buf);
        worst = std::max(worst, red);
        if (red > 2) {
            offending = four;
            return false;
        }
        return true;
    });
    cert.details["max_red_triples_per_4set"] = worst;
    if (!offending.empty()) {
        cert.pass = false;
        cert.witness = offending;
        cert.details["failure"] = "4-set with more than 2 red triples";
        return cert;
    }

    std::optional<std::vector<Vertex>> blue;
    if (n <= 0) {
        blue = std::vector<Vertex>{};
    } else if (static_cast<std::uint64_t>(n) > v) {
        blue = std::nullopt;
    } else if (n < 3) {
        blue = std::vector<Vertex>(static_cast<std::size_t>(n));
        for (int i = 0; i < n; ++i) {
            (*blue)[static_cast<std::size_t>(i)] = static_cast<Vertex>(i);
        }
    } else {
        blue = find_clique(phi.graph(Color::blue), n);
    }
    if (blue) {
        cert.pass = false;
        cert.witness = *blue;
        cert.details["failure"] = "blue clique of size " + std::to_string(n);
        return cert;
    }
    cert.pass = true;
    return cert;
}

RedCount max_red_in_p_sets(const TwoColoring& chi, int p, const Scope& scope)
{
    const int k = chi.uniformity();
    if (p < k) {
        throw InputError("max_red_in_p_sets: p must be at least the uniformity");
    }
    const auto inner = inner_subsets(p, k);
    RedCount result;

    if (scope.kind == Scope::Kind::sample) {
        if (static_cast<std::uint64_t>(p) > chi.ground_size()) {
            throw InputError("scope: p exceeds the ground set");
        }
        std::mt19937_64 rng(scope.seed);
        std::vector<Vertex> buf(static_cast<std::size_t>(k));
        for (std::uint64_t i = 0; i < scope.count; ++i) {
            const auto subset = sample_sorted(rng, chi.ground_size(), static_cast<std::size_t>(p));
            const auto red = count_red(chi, subset, inner, buf);
            if (result.witness.empty() || red > result.max_red) {
                result.max_red = red;
                result.witness = subset;
            }
            ++result.subsets_scanned;
        }
        return result;
    }

    const auto verts = scope.vertices(chi.ground_size());
    const auto n = static_cast<std::uint32_t>(verts.size());
    if (static_cast<std::uint32_t>(p) > n) {
        throw InputError("scope: p = " + std::to_string(p) + " exceeds the " + std::to_string(n) + " scoped vertices");
    }
    if (binomial(n, static_cast<std::uint64_t>(p)) > max_scan_subsets) {
        throw InputError("scope: too many subsets for exhaustive scan; use a window or a sample");
    }

    // One task per first vertex; merging in task order keeps the
    // lexicographically first witness among the maxima.
    std::vector<RedCount> partial(n);
    parallel_tasks(n, [&](std::size_t first) {
        RedCount local;
        const std::uint32_t rest = n - static_cast<std::uint32_t>(first) - 1;
        std::vector<Vertex> subset(static_cast<std::size_t>(p));
        std::vector<Vertex> buf(static_cast<std::size_t>(k));
        subset[0] = verts[first];
        bool have = false;
        for_each_combination(rest, p - 1, [&](std::span<const std::uint32_t> idx) {
            for (int i = 0; i < p - 1; ++i) {
                subset[static_cast<std::size_t>(i + 1)] = verts[first + 1 + idx[static_cast<std::size_t>(i)]];
            }
            const auto red = count_red(chi, subset, inner, buf);
            if (!have || red > local.max_red) {
                local.max_red = red;
                local.witness = subset;
                have = true;
            }
            ++local.subsets_scanned;
        });
        partial[first] = std::move(local);
    });
    for (auto& part : partial) {
        result.subsets_scanned += part.subsets_scanned;
        if (!part.witness.empty() && (result.witness.empty() || part.max_red > result.max_red)) {
            result.max_red = part.max_red;
            result.witness = std::move(part.witness);
        }
    }
    return result;
}

MonoClique max_mono_clique(const TwoColoring& chi, Color c, const Scope& scope,
                           const std::function<void(std::span<const Vertex>)>& on_improve)
{
    const auto verts = scope.vertices(chi.ground_size());
    MonoClique out;
    out.witness = max_clique(chi.graph(c), verts, on_improve);
    out.size = out.witness.size();
    return out;
}

} // namespace stepup
