#include "stepup/cli.hpp"

#include <bit>
#include <chrono>
#include <iostream>
#include <random>

#include "CLI11.hpp"

#include "stepup/base_search.hpp"
#include "stepup/certificate.hpp"
#include "stepup/clique.hpp"
#include "stepup/coloring.hpp"
#include "stepup/delta.hpp"
#include "stepup/er_lift.hpp"
#include "stepup/error.hpp"
#include "stepup/io.hpp"
#include "stepup/property_scan.hpp"

namespace stepup {

namespace {

struct Streams {
    std::istream& in;
    std::ostream& out;
    std::ostream& err;
};

struct Options {
    std::uint64_t seed = 1;
    bool timed = false;
    std::string out_path;
    std::string log_path;
    std::string input = "-";

    // search
    int ground = 0;
    int bound = 0;
    std::uint64_t budget = 20000;
    int restarts = 8;

    // lifts and verifiers
    int k = 0;
    int p = 5;
    std::uint64_t max_red = 3;
    int n = 0;
    int t = 0;
    int s = 0;
    std::optional<std::uint64_t> alpha_max;
    std::string color = "blue";
    std::string scope = "full";
    std::string claim = "all";
    int claim_k = 7;
    int value_bound = 8;
    int width = 8;
    std::vector<Vertex> tuple;
    std::vector<std::string> which{"A", "B", "C", "D", "G"};
    std::vector<std::size_t> arities{3, 4};

    // build-x
    std::string kind = "general";
    int x_k = 7;
    // 0: the lift's base width, an upper bound on alpha_5 of the base.
    int x_t = 0;
    std::size_t random_size = 0;
    std::string lift_path;
};

using Clock = std::chrono::steady_clock;

int emit_verdict(const Streams& io, Certificate& cert, const Options& opt, Clock::time_point start)
{
    if (opt.timed) {
        cert.wall_time_ms = std::chrono::duration<double, std::milli>(Clock::now() - start).count();
    }
    io.out << cert.dump();
    return cert.pass ? exit_pass : exit_property_fail;
}

// Producers: object to --out (certificate to stdout) or to stdout
// (certificate to stderr).
int emit_product(const Streams& io, const std::string& text, Certificate& cert, const Options& opt,
                 Clock::time_point start)
{
    if (opt.timed) {
        cert.wall_time_ms = std::chrono::duration<double, std::milli>(Clock::now() - start).count();
    }
    if (!opt.out_path.empty()) {
        write_file(opt.out_path, text);
        io.out << cert.dump();
    } else {
        io.out << text;
        io.err << cert.dump();
    }
    return cert.pass ? exit_pass : exit_property_fail;
}

void write_log(const std::string& path, const std::vector<SearchLogEntry>& log)
{
    if (path.empty()) {
        return;
    }
    std::string text;
    for (const auto& entry : log) {
        text += entry.to_json().dump() + "\n";
    }
    write_file(path, text);
}

SearchOptions search_options(const Options& opt)
{
    SearchOptions s;
    s.seed = opt.seed;
    s.budget = opt.budget;
    s.restarts = opt.restarts;
    return s;
}

int cmd_search_phi(const Streams& io, const Options& opt)
{
    const auto start = Clock::now();
    auto result = search_base_coloring(opt.ground, opt.bound, search_options(opt));
    write_log(opt.log_path, result.log);
    Json construction = {{"rule", "search"},
                         {"object", "coloring"},
                         {"uniformity", 3},
                         {"ground_size", opt.ground},
                         {"clique_bound", opt.bound},
                         {"seed", opt.seed},
                         {"budget", opt.budget},
                         {"restarts", opt.restarts}};
    if (!result.phi) {
        Certificate cert;
        cert.task = "search-phi";
        cert.property = "at most 2 red triples per 4-set and no blue K_" + std::to_string(opt.bound) + "^(3)";
        cert.construction = construction;
        cert.pass = false;
        cert.details = {{"status", "budget exhausted"}, {"best_score", result.best_score}};
        if (opt.timed) {
            cert.wall_time_ms = std::chrono::duration<double, std::milli>(Clock::now() - start).count();
        }
        io.out << cert.dump();
        return exit_property_fail;
    }
    const auto text = format_coloring(*result.phi);
    auto cert = verify_base_phi(*result.phi, opt.bound);
    cert.task = "search-phi";
    construction["digest"] = digest(text);
    cert.construction = construction;
    cert.details["status"] = "feasible witness";
    cert.details["method"] = result.method;
    return emit_product(io, text, cert, opt, start);
}

int cmd_search_base(const Streams& io, const Options& opt)
{
    const auto start = Clock::now();
    auto result = search_base_hypergraph(opt.ground, opt.k, search_options(opt));
    write_log(opt.log_path, result.log);
    const auto text = format_hypergraph(result.graph);
    Certificate cert;
    cert.task = "search-base";
    cert.property = "K_" + std::to_string(opt.k + 1) + "^(" + std::to_string(opt.k - 1) + ")-free; alpha_"
                    + std::to_string(opt.k) + " reported";
    cert.construction = {{"rule", "search"},
                         {"object", "hypergraph"},
                         {"uniformity", opt.k - 1},
                         {"ground_size", opt.ground},
                         {"lift_target", opt.k},
                         {"seed", opt.seed},
                         {"budget", opt.budget},
                         {"restarts", opt.restarts},
                         {"digest", digest(text)}};
    cert.pass = true;
    cert.details = {{"status", "feasible witness"},
                    {"alpha", result.alpha},
                    {"edges", result.graph.explicit_edges()->edge_count()}};
    return emit_product(io, text, cert, opt, start);
}

LoadedObject load_explicit(const Streams& io, const std::string& path)
{
    auto obj = load_object(path, io.in);
    if (obj.descriptor.value("rule", "") != "explicit") {
        throw InputError("expected an explicit base object, got a lift");
    }
    return obj;
}

int cmd_lift_coloring(const Streams& io, const Options& opt)
{
    const auto start = Clock::now();
    const auto base = load_explicit(io, opt.input);
    if (base.kind != ObjectKind::coloring || base.coloring->uniformity() != 3) {
        throw InputError("base uniformity: lift-coloring needs a 3-uniform coloring");
    }
    const auto text = format_lift(4, base.text);
    const auto lifted = parse_object_text(text);
    Certificate cert;
    cert.task = "lift-coloring";
    cert.property = "lift constructed";
    cert.construction = lifted.descriptor;
    cert.pass = true;
    return emit_product(io, text, cert, opt, start);
}

int cmd_lift_er(const Streams& io, const Options& opt)
{
    const auto start = Clock::now();
    const auto base = load_explicit(io, opt.input);
    if (opt.k < 5) {
        throw InputError("lift-er needs k >= 5");
    }
    if (base.kind != ObjectKind::hypergraph || base.graph->uniformity() != opt.k - 1) {
        throw InputError("base uniformity: lift-er " + std::to_string(opt.k) + " needs a "
                         + std::to_string(opt.k - 1) + "-graph");
    }
    const auto text = format_lift(opt.k, base.text);
    const auto lifted = parse_object_text(text);
    Certificate cert;
    cert.task = "lift-er";
    cert.property = "lift constructed";
    cert.construction = lifted.descriptor;
    cert.pass = true;
    return emit_product(io, text, cert, opt, start);
}

const TwoColoring& need_coloring(const LoadedObject& obj)
{
    if (!obj.coloring) {
        throw InputError("expected a coloring or a k=4 lift");
    }
    return *obj.coloring;
}

const Hypergraph& need_graph(const LoadedObject& obj)
{
    if (!obj.graph) {
        throw InputError("expected a hypergraph or a k>=5 lift");
    }
    return *obj.graph;
}

Certificate base_certificate(const std::string& task, const LoadedObject* obj, const Scope& scope)
{
    Certificate cert;
    cert.task = task;
    cert.scope = scope;
    if (obj != nullptr) {
        cert.construction = obj->descriptor;
    }
    return cert;
}

int cmd_red_density(const Streams& io, const Options& opt)
{
    const auto start = Clock::now();
    const auto obj = load_object(opt.input, io.in);
    const auto& chi = need_coloring(obj);
    const auto scope = Scope::parse(opt.scope);
    auto cert = base_certificate("verify-red-density", &obj, scope);
    cert.property = "at most " + std::to_string(opt.max_red) + " red " + std::to_string(chi.uniformity())
                    + "-subsets in every " + std::to_string(opt.p) + "-subset";
    const auto r = max_red_in_p_sets(chi, opt.p, scope);
    cert.pass = r.max_red <= opt.max_red;
    cert.witness = {{"subset", r.witness}, {"red", r.max_red}};
    cert.details = {{"p", opt.p}, {"max_red", r.max_red}, {"subsets_scanned", r.subsets_scanned}};
    return emit_verdict(io, cert, opt, start);
}

int cmd_blue_clique(const Streams& io, const Options& opt)
{
    const auto start = Clock::now();
    const auto obj = load_object(opt.input, io.in);
    const auto& chi = need_coloring(obj);
    const auto scope = Scope::parse(opt.scope);
    if (scope.kind == Scope::Kind::sample) {
        throw InputError("scope: clique search needs a full or window scope");
    }
    const Color color = parse_color(opt.color);
    auto cert = base_certificate("verify-blue-clique", &obj, scope);
    const auto verts = scope.vertices(chi.ground_size());
    if (opt.n > 0) {
        cert.property = "no " + opt.color + " K_" + std::to_string(opt.n) + "^(" + std::to_string(chi.uniformity())
                        + ")";
        const auto found = find_clique(chi.graph(color), opt.n, verts);
        cert.pass = !found.has_value();
        if (found) {
            cert.witness = *found;
        }
        cert.details = {{"color", opt.color}, {"n", opt.n}};
    } else {
        cert.property = "largest " + opt.color + " clique";
        const auto best = max_mono_clique(chi, color, scope);
        cert.pass = true;
        cert.witness = best.witness;
        cert.details = {{"color", opt.color}, {"size", best.size}};
    }
    return emit_verdict(io, cert, opt, start);
}

int cmd_clique_free(const Streams& io, const Options& opt)
{
    const auto start = Clock::now();
    const auto obj = load_object(opt.input, io.in);
    const auto& h = need_graph(obj);
    const auto scope = Scope::parse(opt.scope);
    if (scope.kind == Scope::Kind::sample) {
        throw InputError("scope: clique search needs a full or window scope");
    }
    auto cert = base_certificate("verify-clique-free", &obj, scope);
    cert.property = "no K_" + std::to_string(opt.t) + "^(" + std::to_string(h.uniformity()) + ")";
    const auto verts = scope.vertices(h.ground_size());
    const auto found = find_clique(h, opt.t, verts);
    cert.pass = !found.has_value();
    if (found) {
        cert.witness = *found;
    }
    cert.details = {{"t", opt.t}, {"vertices_searched", verts.size()}};
    return emit_verdict(io, cert, opt, start);
}

int cmd_alpha(const Streams& io, const Options& opt)
{
    const auto start = Clock::now();
    const auto obj = load_object(opt.input, io.in);
    const auto& h = need_graph(obj);
    AlphaOptions ao;
    ao.seed = opt.seed;
    ao.restarts = opt.restarts;
    const auto r = alpha_s(h, opt.s, ao);
    const auto scope = r.mode == AlphaMode::exact ? Scope::full()
                                                  : Scope::sample(opt.seed, static_cast<std::uint64_t>(opt.restarts));
    auto cert = base_certificate("verify-alpha", &obj, scope);
    cert.property = "alpha_" + std::to_string(opt.s)
                    + (opt.alpha_max ? " <= " + std::to_string(*opt.alpha_max) : std::string(" reported"));
    cert.pass = !opt.alpha_max || r.size <= *opt.alpha_max;
    cert.witness = r.witness;
    cert.details = {{"s", opt.s}, {"alpha", r.size}, {"mode", to_string(r.mode)}};
    if (r.mode == AlphaMode::heuristic) {
        cert.details["lower_bound_only"] = true;
    }
    return emit_verdict(io, cert, opt, start);
}

int cmd_base_phi(const Streams& io, const Options& opt)
{
    const auto start = Clock::now();
    const auto obj = load_object(opt.input, io.in);
    const auto& phi = need_coloring(obj);
    auto cert = verify_base_phi(phi, opt.n);
    cert.construction = obj.descriptor;
    return emit_verdict(io, cert, opt, start);
}

int cmd_claims(const Streams& io, const Options& opt)
{
    const auto start = Clock::now();
    const auto scope = Scope::parse(opt.scope);
    auto cert = base_certificate("verify-claims", nullptr, scope);
    cert.construction = {{"rule", "delta-patterns"}, {"k", opt.claim_k}};

    if (!opt.tuple.empty()) {
        const Claim c = parse_claim(opt.claim);
        const auto v = claim_check(c, opt.tuple, opt.claim_k);
        cert.property = std::string("claim ") + to_string(c);
        cert.scope = Scope::full();
        cert.pass = v.outcome != ClaimOutcome::fails;
        cert.witness = v.witness;
        cert.details = {{"outcome", to_string(v.outcome)}, {"detail", v.detail}};
        return emit_verdict(io, cert, opt, start);
    }

    std::vector<Claim> claims;
    if (opt.claim == "all") {
        claims = {Claim::mono2, Claim::mono, Claim::four};
    } else {
        claims = {parse_claim(opt.claim)};
    }
    cert.property = "claims hold on every applicable tuple";
    cert.pass = true;
    if (scope.kind == Scope::Kind::window) {
        throw InputError("scope: claims take full (all delta patterns below --bound) or sample");
    }
    if (scope.kind == Scope::Kind::full) {
        cert.construction["value_bound"] = opt.value_bound;
    } else {
        cert.construction["width"] = opt.width;
    }
    for (const Claim c : claims) {
        const auto scan = scope.kind == Scope::Kind::full
                              ? scan_claims(c, opt.claim_k, static_cast<BitIndex>(opt.value_bound))
                              : sample_claims(c, opt.claim_k, opt.width, scope.seed, scope.count);
        cert.details[to_string(c)] = {
            {"holds", scan.holds}, {"fails", scan.fails}, {"not_applicable", scan.not_applicable}};
        if (scan.fails > 0 && cert.pass) {
            cert.pass = false;
            cert.witness = {{"claim", to_string(c)}, {"tuple", scan.first_failure}, {"detail", scan.failure_detail}};
        }
    }
    return emit_verdict(io, cert, opt, start);
}

int cmd_properties(const Streams& io, const Options& opt)
{
    const auto start = Clock::now();
    const auto scope = Scope::parse(opt.scope);
    std::vector<Property> props;
    for (const auto& w : opt.which) {
        props.push_back(parse_property(w));
    }
    if (opt.arities.empty()) {
        throw InputError("--arity needs at least one value");
    }
    if (opt.width < 1 || opt.width > 24) {
        throw InputError("--N must be in 1..24");
    }
    auto cert = base_certificate("verify-properties", nullptr, scope);
    cert.construction = {{"rule", "delta"}, {"width", opt.width}};
    std::string names;
    for (const auto& w : opt.which) {
        names += (names.empty() ? "" : ",") + w;
    }
    cert.property = "properties " + names;
    PropertyScanResult total;
    if (scope.kind == Scope::Kind::sample) {
        const auto [lo, hi] = std::minmax_element(opt.arities.begin(), opt.arities.end());
        total = sample_properties(props, opt.width, *lo, *hi, scope.seed, scope.count);
        cert.details["arity_range"] = {*lo, *hi};
    } else {
        const auto ground = scope.vertices(std::uint64_t{1} << opt.width);
        Json per_arity = Json::object();
        for (const auto r : opt.arities) {
            const auto part = scan_properties(props, ground, r);
            per_arity[std::to_string(r)] = {{"tuples", part.tuples}, {"checks", part.checks}};
            total.merge(part);
        }
        cert.details["arities"] = per_arity;
    }
    cert.details["tuples"] = total.tuples;
    cert.details["checks"] = total.checks;
    cert.details["counterexamples"] = total.counterexamples;
    cert.pass = total.counterexamples == 0;
    if (total.failed) {
        cert.witness = {{"property", to_string(*total.failed)}, {"tuple", total.witness}};
    }
    return emit_verdict(io, cert, opt, start);
}

int cmd_partition(const Streams& io, const Options& opt)
{
    const auto start = Clock::now();
    const int bound = opt.value_bound > 0 ? opt.value_bound : opt.k;
    auto cert = base_certificate("verify-partition", nullptr, Scope::full());
    cert.construction = {{"rule", "lift"}, {"uniformity", opt.k}, {"value_bound", bound}};
    cert.property = "lift clauses are mutually exclusive and exhaustive";
    const auto scan = scan_partition(opt.k, static_cast<BitIndex>(bound));
    cert.pass = scan.gaps == 0 && scan.overlaps == 0 && scan.member_mismatches == 0;
    if (!cert.pass) {
        cert.witness = scan.first_bad;
    }
    cert.details = {{"cases", scan.cases},
                    {"gaps", scan.gaps},
                    {"overlaps", scan.overlaps},
                    {"member_mismatches", scan.member_mismatches}};
    return emit_verdict(io, cert, opt, start);
}

int bits_needed(Vertex v)
{
    return v == 0 ? 1 : 64 - __builtin_clzll(v);
}

int cmd_build_x(const Streams& io, const Options& opt)
{
    const auto start = Clock::now();
    const XKind kind = parse_xkind(opt.kind);
    XParams params;
    params.k = opt.x_k;
    params.t = opt.x_t;
    const int k = x_uniformity(kind, params);

    std::vector<Vertex> tuple = opt.tuple;
    Json source;
    if (opt.random_size > 0) {
        if (!tuple.empty()) {
            throw InputError("pass either --tuple or --random");
        }
        if (opt.width < 1 || opt.width > 63) {
            throw InputError("--width must be in 1..63");
        }
        std::mt19937_64 rng(opt.seed);
        tuple = sample_sorted(rng, std::uint64_t{1} << opt.width, opt.random_size);
        source = {{"random", opt.random_size}, {"width", opt.width}, {"seed", opt.seed}};
    } else if (tuple.empty()) {
        throw InputError("build-x needs --tuple or --random");
    } else {
        source = {{"tuple", tuple}};
    }

    std::optional<LoadedObject> lift_obj;
    std::optional<Hypergraph> lift;
    if (!opt.lift_path.empty()) {
        lift_obj = load_object(opt.lift_path, io.in);
        lift = need_graph(*lift_obj);
        if (lift->uniformity() != k) {
            throw InputError("lift uniformity " + std::to_string(lift->uniformity()) + " does not match k="
                             + std::to_string(k));
        }
    } else {
        Vertex top = 0;
        for (const Vertex v : tuple) {
            top = std::max(top, v);
        }
        const int width = opt.random_size > 0 ? opt.width : bits_needed(top);
        lift = lift_hypergraph(LiftRule(k, Hypergraph::empty(k - 1, static_cast<std::uint64_t>(width))));
    }

    if (params.t == 0) {
        params.t = std::max(1, static_cast<int>(std::bit_width(lift->ground_size()) - 1));
    }
    const auto x = build_x(kind, tuple, params);
    auto cert = base_certificate("build-x", lift_obj ? &*lift_obj : nullptr, Scope::full());
    if (!lift_obj) {
        cert.construction = {{"rule", "lift"}, {"uniformity", k}, {"base", "empty"}};
    }
    cert.construction["x_kind"] = to_string(kind);
    cert.construction["source"] = source;
    cert.property = "every " + std::to_string(k) + "-subset of X is an edge of the lift";
    for (const Vertex v : x.vertices) {
        if (v >= lift->ground_size()) {
            throw InputError("vertex " + std::to_string(v) + " outside the lift's ground set");
        }
    }
    std::uint64_t checked = 0;
    std::vector<Vertex> bad;
    std::vector<Vertex> e(static_cast<std::size_t>(k));
    for_each_combination(static_cast<std::uint32_t>(x.vertices.size()), k, [&](std::span<const std::uint32_t> idx) {
        for (int i = 0; i < k; ++i) {
            e[static_cast<std::size_t>(i)] = x.vertices[idx[static_cast<std::size_t>(i)]];
        }
        ++checked;
        if (!lift->contains(e)) {
            bad = e;
            return false;
        }
        return true;
    });
    cert.pass = bad.empty();
    cert.witness = {{"x", x.vertices}};
    if (!bad.empty()) {
        cert.witness["non_edge"] = bad;
    }
    cert.details = {{"shape", x.shape}, {"anchors", x.anchors}, {"subsets_checked", checked}};
    return emit_verdict(io, cert, opt, start);
}

} // namespace

int run_cli(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err)
{
    const Streams io{in, out, err};
    Options opt;
    CLI::App app{"Stepping-up constructions: search, lift, verify, certify.", "stepup"};
    app.require_subcommand(1);
    app.fallthrough();
    app.add_option("--seed", opt.seed, "Seed for every random choice")->capture_default_str();
    app.add_flag("--time", opt.timed, "Record wall time in the certificate");

    auto* phi = app.add_subcommand("search-phi", "Search a 3-uniform base coloring");
    phi->add_option("N", opt.ground, "Ground size")->required();
    phi->add_option("n", opt.bound, "Blue clique bound")->required();
    auto* base = app.add_subcommand("search-base", "Search a K_{k+1}-free (k-1)-graph with small alpha_k");
    base->add_option("N", opt.ground, "Ground size")->required();
    base->add_option("k", opt.k, "Lift target uniformity")->required();
    for (auto* sub : {phi, base}) {
        sub->add_option("--budget", opt.budget, "Local-search steps per restart")->capture_default_str();
        sub->add_option("--restarts", opt.restarts, "Independent restarts")->capture_default_str();
        sub->add_option("--out", opt.out_path, "Write the object here; certificate goes to stdout");
        sub->add_option("--log", opt.log_path, "Search log (JSON lines)");
    }

    auto* lift_col = app.add_subcommand("lift-coloring", "Lift a 3-uniform coloring to 4-tuples of [0, 2^N)");
    lift_col->add_option("phi", opt.input, "Base coloring file ('-' for stdin)")->capture_default_str();
    lift_col->add_option("--out", opt.out_path, "Write the lift here; certificate goes to stdout");
    auto* lift_er = app.add_subcommand("lift-er", "Erdos-Rogers lift of a (k-1)-graph");
    lift_er->add_option("k", opt.k, "Lift uniformity (>= 5)")->required();
    lift_er->add_option("base", opt.input, "Base hypergraph file ('-' for stdin)")->capture_default_str();
    lift_er->add_option("--out", opt.out_path, "Write the lift here; certificate goes to stdout");

    auto* verify = app.add_subcommand("verify", "Run a verifier and print its certificate");
    verify->require_subcommand(1);
    verify->fallthrough();
    auto add_input = [&](CLI::App* sub) {
        sub->add_option("input", opt.input, "Object file ('-' for stdin)")->capture_default_str();
    };
    auto add_scope = [&](CLI::App* sub) {
        sub->add_option("--scope", opt.scope, "full | window:LO:HI | sample:SEED:COUNT")->capture_default_str();
    };
    auto* red = verify->add_subcommand("red-density", "Max red k-subsets inside p-subsets");
    add_input(red);
    add_scope(red);
    red->add_option("--p", opt.p, "Subset size")->capture_default_str();
    red->add_option("--max-red", opt.max_red, "Pass bound")->capture_default_str();
    auto* blue = verify->add_subcommand("blue-clique", "Monochromatic clique search");
    add_input(blue);
    add_scope(blue);
    blue->add_option("--n", opt.n, "Fail if a clique of this size exists (default: report the largest)");
    blue->add_option("--color", opt.color, "red | blue")->capture_default_str();
    auto* cf = verify->add_subcommand("clique-free", "No K_t in a hypergraph");
    add_input(cf);
    add_scope(cf);
    cf->add_option("--t", opt.t, "Clique size")->required();
    auto* alpha = verify->add_subcommand("alpha", "alpha_s of a hypergraph");
    add_input(alpha);
    alpha->add_option("--s", opt.s, "Forbidden clique size")->required();
    alpha->add_option("--max", opt.alpha_max, "Fail if alpha_s exceeds this");
    alpha->add_option("--restarts", opt.restarts, "Heuristic restarts above 64 vertices")->capture_default_str();
    auto* bphi = verify->add_subcommand("base-phi", "Base coloring requirements");
    add_input(bphi);
    bphi->add_option("--n", opt.n, "Blue clique bound")->required();
    auto* claims = verify->add_subcommand("claims", "Clique lemmas on delta patterns");
    add_scope(claims);
    claims->add_option("--claim", opt.claim, "mono | mono2 | four | all")->capture_default_str();
    claims->add_option("--k", opt.claim_k, "Uniformity for claim four")->capture_default_str();
    claims->add_option("--bound", opt.value_bound, "Delta values below this (full scope)")->capture_default_str();
    claims->add_option("--width", opt.width, "Vertex bits (sample scope)")->capture_default_str();
    claims->add_option("--tuple", opt.tuple, "Check a single tuple")->delimiter(',');
    auto* props = verify->add_subcommand("properties", "Properties A-D, G over tuples of [0, 2^N)");
    add_scope(props);
    props->add_option("--N", opt.width, "Vertex bits")->capture_default_str();
    props->add_option("--which", opt.which, "Properties to check")->delimiter(',')->capture_default_str();
    props->add_option("--arity", opt.arities, "Tuple sizes")->delimiter(',')->capture_default_str();
    auto* part = verify->add_subcommand("partition", "Lift clauses partition all delta patterns");
    part->add_option("--k", opt.k, "Lift uniformity")->required();
    opt.value_bound = 0;
    part->add_option("--bound", opt.value_bound, "Delta values below this (default k)");

    auto* bx = app.add_subcommand("build-x", "Build a clique X in a lift from a long tuple");
    bx->add_option("--kind", opt.kind, "k5 | k6 | general")->capture_default_str();
    bx->add_option("--k", opt.x_k, "Uniformity for general")->capture_default_str();
    bx->add_option("--t", opt.x_t, "Extremum budget for k5 (uses 4t extrema; default: base width)");
    bx->add_option("--tuple", opt.tuple, "Source tuple")->delimiter(',');
    bx->add_option("--random", opt.random_size, "Draw a random source tuple of this size");
    bx->add_option("--width", opt.width, "Vertex bits for --random")->capture_default_str();
    bx->add_option("--lift", opt.lift_path, "Lift to check X against (default: empty base)");

    std::vector<std::string> argv_store{"stepup"};
    argv_store.insert(argv_store.end(), args.begin(), args.end());
    std::vector<char*> argv;
    for (auto& a : argv_store) {
        argv.push_back(a.data());
    }
    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? exit_pass : exit_usage;
    }

    // "claims" reuses value_bound with its own default.
    if (claims->parsed() && claims->count("--bound") == 0) {
        opt.value_bound = 8;
    }

    try {
        if (phi->parsed()) {
            return cmd_search_phi(io, opt);
        }
        if (base->parsed()) {
            return cmd_search_base(io, opt);
        }
        if (lift_col->parsed()) {
            return cmd_lift_coloring(io, opt);
        }
        if (lift_er->parsed()) {
            return cmd_lift_er(io, opt);
        }
        if (bx->parsed()) {
            return cmd_build_x(io, opt);
        }
        if (red->parsed()) {
            return cmd_red_density(io, opt);
        }
        if (blue->parsed()) {
            return cmd_blue_clique(io, opt);
        }
        if (cf->parsed()) {
            return cmd_clique_free(io, opt);
        }
        if (alpha->parsed()) {
            return cmd_alpha(io, opt);
        }
        if (bphi->parsed()) {
            return cmd_base_phi(io, opt);
        }
        if (claims->parsed()) {
            return cmd_claims(io, opt);
        }
        if (props->parsed()) {
            return cmd_properties(io, opt);
        }
        if (part->parsed()) {
            return cmd_partition(io, opt);
        }
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return exit_usage;
    }
    err << app.help();
    return exit_usage;
}

} // namespace stepup
