// Acceptance suite: one PASS/FAIL line per criterion, exit status 1 if any
// criterion fails. Thresholds and time limits are pinned below.

#include <chrono>
#include <cstdio>
#include <filesystem>
#include <functional>
#include <sstream>
#include <string>

#include "oracles.hpp"
#include "stepup/base_search.hpp"
#include "stepup/cli.hpp"
#include "stepup/clique.hpp"
#include "stepup/coloring.hpp"
#include "stepup/delta.hpp"
#include "stepup/er_lift.hpp"
#include "stepup/error.hpp"
#include "stepup/io.hpp"
#include "stepup/property_scan.hpp"

using namespace stepup;

namespace {

// Time limits in seconds.
constexpr double limit_properties = 60;
constexpr double limit_bookkeeping = 5;
constexpr double limit_red_density = 120;
constexpr double limit_transfer = 120;
constexpr double limit_clique_free = 600;
constexpr double limit_claims = 180;
constexpr double limit_x = 60;
constexpr double limit_partition = 60;
constexpr double limit_oracles = 120;

// Exact targets.
constexpr std::uint64_t min_windowed_tuples = 10'000'000;
constexpr std::uint64_t bookkeeping_samples = 100'000;
constexpr std::uint64_t max_red_allowed = 3;
constexpr int x_successes_required = 1000;
constexpr int x_attempt_cap = 20000;
constexpr int oracle_instances = 200;

struct Outcome {
    bool pass = true;
    std::string detail;
};

class Suite {
public:
    void run(int id, const std::string& title, double limit, const std::function<Outcome()>& body)
    {
        const auto start = std::chrono::steady_clock::now();
        Outcome o;
        try {
            o = body();
        } catch (const std::exception& e) {
            o = {false, std::string("exception: ") + e.what()};
        }
        const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        std::string detail = o.detail;
        if (limit > 0 && secs >= limit) {
            o.pass = false;
            detail += "; over the time limit";
        }
        char timing[64];
        if (limit > 0) {
            std::snprintf(timing, sizeof timing, "%.2f s, limit %.0f s", secs, limit);
        } else {
            std::snprintf(timing, sizeof timing, "%.2f s", secs);
        }
        std::printf("%s criterion %d: %s [%s] (%s)\n", o.pass ? "PASS" : "FAIL", id, title.c_str(), detail.c_str(),
                    timing);
        std::fflush(stdout);
        failures_ += o.pass ? 0 : 1;
    }

    int failures() const { return failures_; }

private:
    int failures_ = 0;
};

std::string num(std::uint64_t v)
{
    return std::to_string(v);
}

const std::vector<Property> all_properties{Property::A, Property::B, Property::C, Property::D, Property::G};

std::vector<Vertex> window(Vertex lo, Vertex width)
{
    std::vector<Vertex> out(width);
    for (Vertex i = 0; i < width; ++i) {
        out[i] = lo + i;
    }
    return out;
}

Outcome properties()
{
    PropertyScanResult total;
    std::uint64_t windowed = 0;
    // Every triple of [0, 2^10).
    const auto triples = scan_properties(all_properties, window(0, 1024), 3);
    total.merge(triples);
    windowed += triples.tuples;
    // 4-tuples in width-64 windows at stride 32, so every power-of-two
    // boundary below 2^10 sits inside some window.
    std::uint64_t quads = 0;
    for (Vertex lo = 0; lo + 64 <= 1024; lo += 32) {
        const auto r = scan_properties(all_properties, window(lo, 64), 4);
        total.merge(r);
        quads += r.tuples;
    }
    windowed += quads;
    // All tuples for small widths: arities 3..5 on [0, 64), every arity on [0, 16).
    std::uint64_t small = 0;
    for (std::size_t r = 3; r <= 5; ++r) {
        const auto s = scan_properties(all_properties, window(0, 64), r);
        total.merge(s);
        small += s.tuples;
    }
    for (std::size_t r = 3; r <= 16; ++r) {
        const auto s = scan_properties(all_properties, window(0, 16), r);
        total.merge(s);
        small += s.tuples;
    }
    Outcome o;
    o.pass = total.counterexamples == 0 && windowed >= min_windowed_tuples;
    o.detail = num(triples.tuples) + " triples + " + num(quads) + " windowed 4-tuples of [0,1024), " + num(small)
               + " tuples for N <= 6, " + num(total.counterexamples) + " counterexamples";
    return o;
}

Outcome bookkeeping()
{
    std::mt19937_64 rng(2024);
    std::uint64_t wrong = 0;
    for (std::uint64_t i = 0; i < bookkeeping_samples; ++i) {
        const int width = 4 + static_cast<int>(uniform_below(rng, 9));
        const std::size_t r = 4 + uniform_below(rng, 5);
        const auto t = sample_sorted(rng, std::uint64_t{1} << width, r);
        const DeltaProfile p(t, width);
        const auto [m, n] = oracle::extrema(oracle::deltas(t));
        if (p.extrema() + p.monotone() != static_cast<int>(r) - 3 || p.extrema() != m || p.monotone() != n) {
            ++wrong;
        }
    }
    return {wrong == 0, num(bookkeeping_samples) + " random tuples, arity 4-8, N 4-12, " + num(wrong) + " mismatches"};
}

// Shared by criteria 3 and 4.
struct LiftedColoring {
    std::optional<TwoColoring> phi;
    std::optional<TwoColoring> chi;
};

LiftedColoring& lifted_coloring()
{
    static LiftedColoring lc;
    return lc;
}

Outcome red_density()
{
    SearchOptions opts;
    opts.seed = 1;
    opts.allow_exhaustive = false;
    const auto found = search_base_coloring(6, 4, opts);
    if (!found.phi) {
        return {false, "no phi found on N = 6 (best score " + num(found.best_score) + ")"};
    }
    const auto base_cert = verify_base_phi(*found.phi, 4);
    if (!base_cert.pass) {
        return {false, "searched phi fails verify_base_phi"};
    }
    auto& lc = lifted_coloring();
    lc.phi = *found.phi;
    lc.chi = lift_coloring(*found.phi);
    const auto red = max_red_in_p_sets(*lc.chi, 5);
    Outcome o;
    o.pass = red.max_red <= max_red_allowed && red.subsets_scanned == binomial(64, 5);
    o.detail = "phi by " + found.method + ", " + num(red.subsets_scanned) + " 5-subsets of 64, max red "
               + num(red.max_red) + " (allowed " + num(max_red_allowed) + ")";
    return o;
}

Outcome transfer()
{
    const auto& lc = lifted_coloring();
    if (!lc.chi) {
        return {false, "criterion 3 produced no coloring"};
    }
    const TwoColoring& phi = *lc.phi;
    const TwoColoring& chi = *lc.chi;

    std::vector<std::vector<Vertex>> cliques;
    max_mono_clique(chi, Color::blue, Scope::full(), [&](std::span<const Vertex> c) {
        cliques.emplace_back(c.begin(), c.end());
    });
    // Random-order greedy maximal blue cliques widen the sample.
    std::mt19937_64 rng(9);
    for (int i = 0; i < 300; ++i) {
        auto order = oracle::range(64);
        for (std::size_t j = order.size(); j > 1; --j) {
            std::swap(order[j - 1], order[uniform_below(rng, j)]);
        }
        std::vector<Vertex> members;
        for (const Vertex v : order) {
            bool blue = true;
            for (const auto& t : oracle::subsets(members, 3)) {
                std::vector<Vertex> q = t;
                q.insert(std::upper_bound(q.begin(), q.end(), v), v);
                if (chi.color(q) != Color::blue) {
                    blue = false;
                    break;
                }
            }
            if (blue) {
                members.insert(std::upper_bound(members.begin(), members.end(), v), v);
            }
        }
        cliques.push_back(members);
    }

    std::uint64_t checked = 0;
    std::uint64_t violations = 0;
    std::uint64_t monotone_quads = 0;
    std::uint64_t delta_triples = 0;
    std::size_t largest = 0;
    for (const auto& b : cliques) {
        if (b.size() < 4) {
            continue;
        }
        ++checked;
        largest = std::max(largest, b.size());
        if (!oracle::is_clique(chi.graph(Color::blue), b)) {
            ++violations;
            continue;
        }
        int n = 1;
        while (std::size_t{1} << (2 * (n + 1)) <= b.size()) {
            ++n;
        }
        const auto ext = extract_monotone(b, n);
        for (std::size_t l = 0; l < ext.deltas.size(); ++l) {
            if (!std::binary_search(b.begin(), b.end(), ext.witness[l])
                || oracle::delta(ext.witness[l], ext.witness[l + 1]) != ext.deltas[l]) {
                ++violations;
            }
        }
        if (!is_strictly_monotone(ext.deltas)) {
            ++violations;
        }
        std::vector<Vertex> delta_set(ext.deltas.begin(), ext.deltas.end());
        std::sort(delta_set.begin(), delta_set.end());
        for (const auto& t : oracle::subsets(delta_set, 3)) {
            ++delta_triples;
            violations += phi.color(t) == Color::blue ? 0 : 1;
        }
        // Property E on every monotone-delta 4-subset of the clique.
        for (const auto& q : oracle::subsets(b, 4)) {
            const auto d = oracle::deltas(q);
            const bool up = d[0] < d[1] && d[1] < d[2];
            const bool down = d[0] > d[1] && d[1] > d[2];
            if (!up && !down) {
                continue;
            }
            ++monotone_quads;
            std::vector<Vertex> set{static_cast<Vertex>(d[0]), static_cast<Vertex>(d[1]), static_cast<Vertex>(d[2])};
            std::sort(set.begin(), set.end());
            violations += phi.color(set) == Color::blue ? 0 : 1;
        }
    }
    Outcome o;
    o.pass = violations == 0 && checked > 0;
    o.detail = num(checked) + " blue cliques (largest " + num(largest) + "), " + num(monotone_quads)
               + " monotone 4-subsets and " + num(delta_triples) + " extracted delta triples transferred, "
               + num(violations) + " violations";
    return o;
}

Outcome clique_free()
{
    std::string detail;
    bool pass = true;
    for (const int N : {5, 6}) {
        SearchOptions opts;
        opts.seed = 1;
        const auto base = search_base_hypergraph(N, 5, opts);
        const bool base_free = !find_clique(base.graph, 6).has_value() && !oracle::find_clique(base.graph, 6);
        const auto lifted = lift_hypergraph(LiftRule(5, base.graph));
        const auto k7 = find_clique(lifted, 7);
        pass = pass && base_free && !k7;
        detail += (detail.empty() ? "" : "; ") + std::string("N = ") + std::to_string(N) + ": base "
                  + (base_free ? "K6-free" : "HAS K6") + " with " + num(base.graph.edges().size())
                  + " edges and alpha_5 " + num(base.alpha) + ", lift on " + num(lifted.ground_size()) + " vertices "
                  + (k7 ? "HAS K7" : "K7-free");
    }
    return {pass, detail};
}

Outcome claims()
{
    bool pass = true;
    std::string detail;
    struct Job {
        Claim which;
        int k;
    };
    for (const auto& job : {Job{Claim::mono, 7}, Job{Claim::mono2, 7}, Job{Claim::four, 7}, Job{Claim::four, 8}}) {
        const auto s = scan_claims(job.which, job.k, 8);
        pass = pass && s.fails == 0 && s.holds > 0;
        detail += (detail.empty() ? "" : "; ") + std::string(to_string(job.which))
                  + (job.which == Claim::four ? " k=" + std::to_string(job.k) : "") + ": " + num(s.holds)
                  + " applicable, " + num(s.fails) + " failures";
    }
    return {pass, "every realizable delta pattern below 2^8: " + detail};
}

Outcome x_construction()
{
    std::mt19937_64 rng(77);
    constexpr int width = 10;
    constexpr std::size_t set_size = 200;
    bool pass = true;
    std::string detail;
    struct Job {
        XKind kind;
        XParams params;
    };
    for (const auto& job : {Job{XKind::k5, {7, width}}, Job{XKind::k6, {}}, Job{XKind::general, {7, 2}}}) {
        const int k = x_uniformity(job.kind, job.params);
        int built = 0;
        int misses = 0;
        int bad = 0;
        int attempts = 0;
        while (built < x_successes_required && attempts < x_attempt_cap) {
            ++attempts;
            const auto a = sample_sorted(rng, std::uint64_t{1} << width, set_size);
            XConstruction x;
            try {
                x = build_x(job.kind, a, job.params);
            } catch (const InputError&) {
                ++misses;
                continue;
            }
            ++built;
            const auto base = oracle::random_hypergraph(k - 1, width, 0.5, rng);
            const auto lifted = lift_hypergraph(LiftRule(k, base));
            bool ok = x.vertices.size() == static_cast<std::size_t>(k + 1);
            for (const auto& e : oracle::subsets(x.vertices, k)) {
                ok = ok && lifted.contains(e) && std::binary_search(a.begin(), a.end(), e.front());
            }
            bad += ok ? 0 : 1;
        }
        pass = pass && bad == 0 && built >= x_successes_required;
        detail += (detail.empty() ? "" : "; ") + std::string("k=") + std::to_string(k) + ": " + std::to_string(built)
                  + " built, " + std::to_string(bad) + " non-cliques, " + std::to_string(misses)
                  + " precondition misses";
    }
    return {pass, detail};
}

Outcome partition()
{
    bool pass = true;
    std::string detail;
    for (int k = 5; k <= 7; ++k) {
        const auto s = scan_partition(k, 10);
        pass = pass && s.gaps == 0 && s.overlaps == 0 && s.member_mismatches == 0;
        detail += (detail.empty() ? "" : "; ") + std::string("k=") + std::to_string(k) + ": " + num(s.cases)
                  + " cases, " + num(s.gaps) + " gaps, " + num(s.overlaps) + " overlaps, "
                  + num(s.member_mismatches) + " rule mismatches";
    }
    return {pass, detail};
}

Outcome oracles()
{
    std::mt19937_64 rng(4242);
    std::uint64_t comparisons = 0;
    std::uint64_t mismatches = 0;
    auto expect = [&](bool same) {
        ++comparisons;
        mismatches += same ? 0 : 1;
    };
    for (int i = 0; i < oracle_instances; ++i) {
        const int k = 2 + static_cast<int>(uniform_below(rng, 3));
        const Vertex v = static_cast<Vertex>(k + 2) + uniform_below(rng, static_cast<std::uint64_t>(11 - k));
        const double density = 0.3 + 0.6 * static_cast<double>(uniform_below(rng, 1000)) / 1000.0;
        const auto h = oracle::random_hypergraph(k, v, density, rng);
        for (int t = k; t <= static_cast<int>(v); ++t) {
            expect(find_clique(h, t) == oracle::find_clique(h, t));
        }
        for (int s = k; s <= k + 1; ++s) {
            expect(alpha_s(h, s).size == oracle::alpha(h, s));
        }
        const TwoColoring chi(h);
        for (int p = k; p <= std::min<int>(k + 2, static_cast<int>(v)); ++p) {
            expect(max_red_in_p_sets(chi, p).max_red == oracle::max_red(chi, p));
        }
        expect(max_mono_clique(chi, Color::red).size == oracle::max_clique(h));
        expect(max_mono_clique(chi, Color::blue).size == oracle::max_clique(h.complement()));
    }
    return {mismatches == 0, std::to_string(oracle_instances) + " instances with v <= 12, " + num(comparisons)
                                 + " comparisons, " + num(mismatches) + " mismatches"};
}

struct CliRun {
    int code = 0;
    std::string out;
    std::string err;
    bool operator==(const CliRun&) const = default;
};

CliRun cli(const std::vector<std::string>& args, const std::string& input = "")
{
    std::istringstream in(input);
    std::ostringstream out;
    std::ostringstream err;
    CliRun r;
    r.code = run_cli(args, in, out, err);
    r.out = out.str();
    r.err = err.str();
    return r;
}

Outcome reproducibility()
{
    const std::string base = "hypergraph 4 6\n0 1 2 3\n0 1 2 4\n1 2 3 5\n";
    const std::vector<std::pair<std::vector<std::string>, std::string>> runs{
        {{"--seed", "11", "search-phi", "6", "4"}, ""},
        {{"--seed", "11", "search-base", "6", "5", "--budget", "500"}, ""},
        {{"lift-er", "5", "-"}, base},
        {{"--seed", "5", "verify", "claims", "--claim", "four", "--scope", "sample:3:20000", "--width", "16"}, ""},
        {{"verify", "properties", "--N", "6", "--arity", "3,4"}, ""},
        {{"--seed", "3", "build-x", "--kind", "k6", "--random", "200", "--width", "10"}, ""},
        {{"verify", "alpha", "-", "--s", "5", "--restarts", "4"}, "lift 5 7\nhypergraph 4 7\n0 1 2 3\n"},
    };
    int identical = 0;
    std::string detail;
    for (const auto& [args, input] : runs) {
        const auto first = cli(args, input);
        const auto second = cli(args, input);
        if (first == second && first.code != exit_usage) {
            ++identical;
        } else {
            detail += " differs: " + args[args.size() > 2 ? 2 : 0];
        }
    }
    // The same object piped and read from a file.
    const auto lifted = cli({"lift-er", "5", "-"}, base).out;
    const auto path = std::filesystem::temp_directory_path() / "stepup_acceptance_lift.txt";
    write_file(path.string(), lifted);
    const std::vector<std::string> tail{"--t", "7", "--scope", "window:0:32"};
    auto piped_args = std::vector<std::string>{"verify", "clique-free", "-"};
    auto file_args = std::vector<std::string>{"verify", "clique-free", path.string()};
    piped_args.insert(piped_args.end(), tail.begin(), tail.end());
    file_args.insert(file_args.end(), tail.begin(), tail.end());
    const bool same_source = cli(piped_args, lifted) == cli(file_args);
    std::filesystem::remove(path);
    const bool pass = identical == static_cast<int>(runs.size()) && same_source;
    return {pass, std::to_string(identical) + "/" + std::to_string(runs.size())
                      + " commands byte-identical across two runs, piped vs file "
                      + (same_source ? "identical" : "DIFFERENT") + detail};
}

} // namespace

int main()
{
    Suite suite;
    suite.run(1, "properties A-D, G", limit_properties, properties);
    suite.run(2, "m + n = r - 3", limit_bookkeeping, bookkeeping);
    suite.run(3, "lifted coloring has at most 3 red 4-sets per 5-set", limit_red_density, red_density);
    suite.run(4, "blue cliques transfer to blue delta sets", limit_transfer, transfer);
    suite.run(5, "5-uniform lifts are K7-free", limit_clique_free, clique_free);
    suite.run(6, "clique lemmas on delta patterns", limit_claims, claims);
    suite.run(7, "X constructions are cliques", limit_x, x_construction);
    suite.run(8, "lift clauses partition delta patterns", limit_partition, partition);
    suite.run(9, "exact search matches brute force", limit_oracles, oracles);
    suite.run(10, "byte-identical certificates", 0, reproducibility);
    std::printf("%d of 10 criteria failed\n", suite.failures());
    return suite.failures() == 0 ? 0 : 1;
}
