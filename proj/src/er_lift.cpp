#include "stepup/er_lift.hpp"

#include <algorithm>
#include <array>
#include <random>

#include "stepup/error.hpp"

namespace stepup {

namespace {

constexpr std::size_t max_arity = 32;

unsigned flag(LiftClause c)
{
    return 1U << static_cast<unsigned>(c);
}

void check_tuple(const LiftRule& rule, std::span<const Vertex> e, int arity)
{
    if (static_cast<int>(e.size()) != arity) {
        throw InputError("arity: expected " + std::to_string(arity) + " vertices, got " + std::to_string(e.size()));
    }
    for (std::size_t i = 1; i < e.size(); ++i) {
        if (e[i] <= e[i - 1]) {
            throw InputError("not a sorted set");
        }
    }
    if (e.back() >= rule.ground_size()) {
        throw InputError("vertex " + std::to_string(e.back()) + " outside [0, 2^" + std::to_string(rule.base_width())
                         + ")");
    }
}

bool base_contains_delta_set(const Hypergraph& base, std::span<const BitIndex> d)
{
    std::array<Vertex, max_arity> s{};
    for (std::size_t i = 0; i < d.size(); ++i) {
        s[i] = static_cast<Vertex>(d[i]);
    }
    std::sort(s.begin(), s.begin() + static_cast<std::ptrdiff_t>(d.size()));
    return base.contains(std::span<const Vertex>(s.data(), d.size()));
}

} // namespace

const char* to_string(LiftClause c)
{
    switch (c) {
    case LiftClause::I:
        return "I";
    case LiftClause::I_not:
        return "I-";
    case LiftClause::II:
        return "II";
    case LiftClause::III:
        return "III";
    case LiftClause::IV:
        return "IV";
    case LiftClause::V:
        return "V";
    case LiftClause::VI:
        return "VI";
    case LiftClause::other:
        return "other";
    }
    return "?";
}

unsigned lift_clauses(int k, std::span<const BitIndex> d, bool base_has_delta_set)
{
    if (static_cast<int>(d.size()) != k - 1) {
        throw InputError("lift_clauses: expected " + std::to_string(k - 1) + " deltas");
    }
    const int m = count_extrema(d).extrema;
    const bool d1_lt_d2 = d[0] < d[1];
    const bool d1_gt_d2 = d[0] > d[1];
    unsigned out = 0;
    if (m == 0 && base_has_delta_set) {
        out |= flag(LiftClause::I);
    }
    if (m == 0 && !base_has_delta_set) {
        out |= flag(LiftClause::I_not);
    }
    if (k == 5) {
        if (m == 2) {
            out |= flag(LiftClause::II);
        }
        if (m == 1) {
            out |= flag(LiftClause::other);
        }
    } else if (k == 6) {
        if ((m == 2 || m == 3) && d1_lt_d2) {
            out |= flag(LiftClause::II);
        }
        if (m == 3 && d1_gt_d2 && (d[0] > d[2] || d[2] < d[4])) {
            out |= flag(LiftClause::III);
        }
        if (m == 1) {
            out |= flag(LiftClause::IV);
        }
        if (m == 2 && d1_gt_d2) {
            out |= flag(LiftClause::V);
        }
        if (m == 3 && d1_gt_d2 && d[0] < d[2] && d[2] > d[4]) {
            out |= flag(LiftClause::VI);
        }
    } else if (k >= 7) {
        if (m == k - 3) {
            out |= flag(LiftClause::II);
        }
        if (m == k - 4 && d1_lt_d2) {
            out |= flag(LiftClause::III);
        }
        if (m == k - 4 && d1_gt_d2) {
            out |= flag(LiftClause::IV);
        }
        if (m >= 1 && m <= k - 5) {
            out |= flag(LiftClause::V);
        }
    } else {
        throw InputError("lift uniformity must be at least 5");
    }
    return out;
}

bool clause_is_member(int k, LiftClause c)
{
    switch (c) {
    case LiftClause::I:
    case LiftClause::II:
        return true;
    case LiftClause::III:
        return k >= 6;
    default:
        return false;
    }
}

LiftRule::LiftRule(int k, Hypergraph base)
    : k_(k)
    , base_(std::move(base))
{
    if (k < 5) {
        throw InputError("lift uniformity must be at least 5, got " + std::to_string(k));
    }
    if (static_cast<std::size_t>(k) > max_arity) {
        throw InputError("lift uniformity too large");
    }
    if (base_.uniformity() != k - 1) {
        throw InputError("base uniformity: lift to k=" + std::to_string(k) + " needs a "
                         + std::to_string(k - 1) + "-graph, got uniformity " + std::to_string(base_.uniformity()));
    }
    if (base_.ground_size() > 63) {
        throw InputError("lift base must have at most 63 vertices");
    }
}

bool LiftRule::member(std::span<const Vertex> e) const
{
    std::array<BitIndex, max_arity> buf{};
    const std::span<BitIndex> d(buf.data(), e.size() - 1);
    delta_sequence(e, d);
    const int m = count_extrema(d).extrema;
    if (m == 0) {
        return base_contains_delta_set(base_, d);
    }
    if (k_ == 5) {
        return m == 2;
    }
    if (k_ == 6) {
        if (d[0] < d[1]) {
            return m == 2 || m == 3;
        }
        return m == 3 && (d[0] > d[2] || d[2] < d[4]);
    }
    return m == k_ - 3 || (m == k_ - 4 && d[0] < d[1]);
}

LiftClause LiftRule::clause(std::span<const Vertex> e) const
{
    std::array<BitIndex, max_arity> buf{};
    const std::span<BitIndex> d(buf.data(), e.size() - 1);
    delta_sequence(e, d);
    const bool edge = count_extrema(d).extrema == 0 && base_contains_delta_set(base_, d);
    const unsigned mask = lift_clauses(k_, d, edge);
    if (__builtin_popcount(mask) != 1) {
        throw Error("lift clauses overlap or leave a gap");
    }
    return static_cast<LiftClause>(__builtin_ctz(mask));
}

bool member_k5(const LiftRule& rule, std::span<const Vertex> e)
{
    if (rule.k() != 5) {
        throw InputError("member_k5 needs a k=5 rule");
    }
    check_tuple(rule, e, 5);
    return rule.member(e);
}

bool member_k6(const LiftRule& rule, std::span<const Vertex> e)
{
    if (rule.k() != 6) {
        throw InputError("member_k6 needs a k=6 rule");
    }
    check_tuple(rule, e, 6);
    return rule.member(e);
}

bool member_general(const LiftRule& rule, std::span<const Vertex> e)
{
    if (rule.k() < 7) {
        throw InputError("use dedicated rule for k=" + std::to_string(rule.k()));
    }
    check_tuple(rule, e, rule.k());
    return rule.member(e);
}

namespace {

class LiftOracle final : public EdgeOracle {
public:
    explicit LiftOracle(LiftRule rule)
        : rule_(std::move(rule))
    {
    }

    bool contains(std::span<const Vertex> e) const override { return rule_.member(e); }

    std::string describe() const override
    {
        return "lift k=" + std::to_string(rule_.k()) + " N=" + std::to_string(rule_.base_width());
    }

private:
    LiftRule rule_;
};

} // namespace

Hypergraph lift_hypergraph(const LiftRule& rule)
{
    return Hypergraph(rule.k(), rule.ground_size(), std::make_shared<const LiftOracle>(rule));
}

const char* to_string(Claim c)
{
    switch (c) {
    case Claim::mono:
        return "mono";
    case Claim::four:
        return "four";
    case Claim::mono2:
        return "mono2";
    }
    return "?";
}

const char* to_string(ClaimOutcome o)
{
    switch (o) {
    case ClaimOutcome::holds:
        return "holds";
    case ClaimOutcome::fails:
        return "fails";
    case ClaimOutcome::not_applicable:
        return "not_applicable";
    }
    return "?";
}

Claim parse_claim(const std::string& text)
{
    if (text == "mono") {
        return Claim::mono;
    }
    if (text == "four") {
        return Claim::four;
    }
    if (text == "mono2") {
        return Claim::mono2;
    }
    throw InputError("unknown claim '" + text + "' (expected mono, four or mono2)");
}

namespace {

ClaimVerdict verdict(bool ok, std::string detail, std::vector<Vertex> witness)
{
    return {ok ? ClaimOutcome::holds : ClaimOutcome::fails, std::move(detail), std::move(witness)};
}

ClaimVerdict check_mono(const DeltaProfile& f)
{
    const auto& d = f.deltas();
    if (f.size() != 6 || f.extrema() != 3 || f.label(1) != Position::local_max) {
        return {ClaimOutcome::not_applicable, "needs a 6-tuple with m = 3 and delta_2 a local maximum", {}};
    }
    const auto drop3 = f.without({2});
    const auto drop4 = f.without({3});
    if (drop3.monotone() != 1 || drop4.monotone() != 1) {
        return verdict(false, "removing a_3 or a_4 does not leave exactly one local monotone", f.vertices());
    }
    // In f minus a_3 the deltas read (d1, d2, d4, d5).
    if (drop3.deltas()[1] != d[1] || drop3.deltas()[2] != d[3]) {
        return verdict(false, "delta sequence of f minus a_3 is not (d1, d2, d4, d5)", drop3.vertices());
    }
    if (drop3.label(1) == Position::local_monotone) {
        return verdict(true, "delta_2 is a local monotone", drop3.vertices());
    }
    if (drop3.label(2) == Position::local_monotone) {
        return verdict(true, "delta_4 is a local monotone", drop3.vertices());
    }
    return verdict(false, "neither delta_2 nor delta_4 is a local monotone", drop3.vertices());
}

ClaimVerdict check_mono2(const DeltaProfile& f)
{
    if (f.size() != 5) {
        return {ClaimOutcome::not_applicable, "needs a 5-tuple", {}};
    }
    const auto& d = f.deltas();
    const auto drop3 = f.without({2});
    if (d[0] < d[1] && d[1] > d[2] && d[2] < d[3] && d[1] < d[3]) {
        const bool ok = drop3.deltas()[1] == d[1] && drop3.label(1) == Position::local_monotone;
        return verdict(ok, "delta_2 local monotone of f minus a_3", drop3.vertices());
    }
    if (d[0] > d[1] && d[1] < d[2] && d[2] > d[3] && d[0] > d[2]) {
        const bool ok = drop3.deltas()[1] == d[2] && drop3.label(1) == Position::local_monotone;
        return verdict(ok, "delta_3 local monotone of f minus a_3", drop3.vertices());
    }
    return {ClaimOutcome::not_applicable, "delta pattern outside both cases", {}};
}

ClaimVerdict check_four(const DeltaProfile& a, int k)
{
    if (k < 7) {
        throw InputError("claim four needs k >= 7");
    }
    if (static_cast<int>(a.size()) != k + 2) {
        return {ClaimOutcome::not_applicable, "needs a (k+2)-tuple", {}};
    }
    if (a.extrema() == 0) {
        return {ClaimOutcome::not_applicable, "delta sequence is monotone", {}};
    }
    const auto& d = a.deltas();
    const auto& verts = a.vertices();
    const std::size_t r = verts.size();
    for (std::size_t l = 0; l + 4 <= d.size(); ++l) {
        const bool inc = d[l] < d[l + 1] && d[l + 1] < d[l + 2] && d[l + 2] < d[l + 3];
        const bool dec = d[l] > d[l + 1] && d[l + 1] > d[l + 2] && d[l + 2] > d[l + 3];
        if (!inc && !dec) {
            continue;
        }
        // Some 6-vertex window then holds an extremum and two monotones;
        // a k-subset keeping that window has 1 <= m <= k-5.
        for (std::size_t p = 0; p + 6 <= r; ++p) {
            for (std::size_t x = 0; x < r; ++x) {
                for (std::size_t y = x + 1; y < r; ++y) {
                    if ((x >= p && x < p + 6) || (y >= p && y < p + 6)) {
                        continue;
                    }
                    const auto e = a.without({x, y});
                    if (e.extrema() >= 1 && e.extrema() <= k - 5) {
                        return verdict(true, "run of four monotone deltas; non-edge (V) inside", e.vertices());
                    }
                }
            }
        }
        return verdict(false, "run of four monotone deltas without a (V) non-edge", verts);
    }
    return verdict(true, "no run of four consecutive monotone deltas", verts);
}

} // namespace

ClaimVerdict claim_check(Claim which, std::span<const Vertex> tuple, int k)
{
    const DeltaProfile profile(std::vector<Vertex>(tuple.begin(), tuple.end()));
    switch (which) {
    case Claim::mono:
        return check_mono(profile);
    case Claim::mono2:
        return check_mono2(profile);
    case Claim::four:
        return check_four(profile, k);
    }
    return {};
}

std::size_t claim_arity(Claim which, int k)
{
    switch (which) {
    case Claim::mono:
        return 6;
    case Claim::mono2:
        return 5;
    case Claim::four:
        return static_cast<std::size_t>(k + 2);
    }
    return 0;
}

namespace {

void tally(ClaimScan& scan, const ClaimVerdict& v, std::span<const Vertex> tuple)
{
    switch (v.outcome) {
    case ClaimOutcome::holds:
        ++scan.holds;
        break;
    case ClaimOutcome::not_applicable:
        ++scan.not_applicable;
        break;
    case ClaimOutcome::fails:
        if (scan.fails++ == 0) {
            scan.first_failure.assign(tuple.begin(), tuple.end());
            scan.failure_detail = v.detail;
        }
        break;
    }
}

} // namespace

ClaimScan scan_claims(Claim which, int k, BitIndex bound)
{
    if (which == Claim::four && k < 7) {
        throw InputError("claim four needs k >= 7");
    }
    if (bound < 1 || bound > 63) {
        throw InputError("claim scan bound must be in 1..63");
    }
    ClaimScan scan;
    for_each_realizable_sequence(claim_arity(which, k) - 1, bound, [&](std::span<const BitIndex> d) {
        const auto tuple = realize(d);
        tally(scan, claim_check(which, tuple, k), tuple);
    });
    return scan;
}

ClaimScan sample_claims(Claim which, int k, int width, std::uint64_t seed, std::uint64_t count)
{
    if (which == Claim::four && k < 7) {
        throw InputError("claim four needs k >= 7");
    }
    if (width < 1 || width > 63) {
        throw InputError("width must be in 1..63");
    }
    const auto r = claim_arity(which, k);
    const std::uint64_t ground = std::uint64_t{1} << width;
    if (r > ground) {
        throw InputError("arity: tuples longer than the ground set");
    }
    std::mt19937_64 rng(seed);
    ClaimScan scan;
    for (std::uint64_t i = 0; i < count; ++i) {
        const auto tuple = sample_sorted(rng, ground, r);
        tally(scan, claim_check(which, tuple, k), tuple);
    }
    return scan;
}

PartitionScan scan_partition(int k, BitIndex bound)
{
    if (k < 5) {
        throw InputError("lift uniformity must be at least 5");
    }
    if (bound < 1 || bound > 20) {
        throw InputError("partition scan bound must be in 1..20");
    }
    const auto width = static_cast<std::uint64_t>(bound);
    const LiftRule with_edge(k, Hypergraph::complete(k - 1, width));
    const LiftRule without_edge(k, Hypergraph::empty(k - 1, width));
    PartitionScan scan;
    for_each_realizable_sequence(static_cast<std::size_t>(k - 1), bound, [&](std::span<const BitIndex> d) {
        const auto tuple = realize(d);
        for (const bool edge : {false, true}) {
            ++scan.cases;
            const unsigned mask = lift_clauses(k, d, edge);
            const int hits = __builtin_popcount(mask);
            bool bad = false;
            if (hits == 0) {
                ++scan.gaps;
                bad = true;
            } else if (hits > 1) {
                ++scan.overlaps;
                bad = true;
            } else {
                const auto c = static_cast<LiftClause>(__builtin_ctz(mask));
                const auto& rule = edge ? with_edge : without_edge;
                if (rule.member(tuple) != clause_is_member(k, c)) {
                    ++scan.member_mismatches;
                    bad = true;
                }
            }
            if (bad && scan.first_bad.empty()) {
                scan.first_bad.assign(d.begin(), d.end());
            }
        }
    });
    return scan;
}

const char* to_string(XKind k)
{
    switch (k) {
    case XKind::k5:
        return "k5";
    case XKind::k6:
        return "k6";
    case XKind::general:
        return "general";
    }
    return "?";
}

XKind parse_xkind(const std::string& text)
{
    if (text == "k5") {
        return XKind::k5;
    }
    if (text == "k6") {
        return XKind::k6;
    }
    if (text == "general") {
        return XKind::general;
    }
    throw InputError("unknown construction kind '" + text + "' (expected k5, k6 or general)");
}

int x_uniformity(XKind kind, const XParams& params)
{
    switch (kind) {
    case XKind::k5:
        return 5;
    case XKind::k6:
        return 6;
    case XKind::general:
        return params.k;
    }
    return 0;
}

namespace {

[[noreturn]] void insufficient(std::size_t found, std::size_t needed, const std::string& what)
{
    throw InputError("insufficient extrema: found " + std::to_string(found) + " " + what + ", need "
                     + std::to_string(needed));
}

XConstruction build_k5(const DeltaProfile& a, int t)
{
    if (t < 1) {
        throw InputError("build_x k5: t must be positive");
    }
    const auto ext = a.extremum_positions();
    const auto need = static_cast<std::size_t>(4 * t);
    if (ext.size() < need) {
        insufficient(ext.size(), need, "local extrema");
    }
    const auto& d = a.deltas();
    std::vector<std::size_t> maxima;
    for (std::size_t i = 0; i < need; ++i) {
        if (a.label(ext[i]) == Position::local_max) {
            maxima.push_back(ext[i]);
        }
    }
    maxima.resize(std::min<std::size_t>(maxima.size(), static_cast<std::size_t>(2 * t)));
    for (std::size_t l = 1; l + 1 < maxima.size(); ++l) {
        const std::size_t prev = maxima[l - 1];
        const std::size_t cur = maxima[l];
        const std::size_t next = maxima[l + 1];
        if (!(d[prev] < d[cur] && d[cur] > d[next])) {
            continue;
        }
        // The unique local minimum between consecutive maxima.
        const auto min_between = [&](std::size_t lo, std::size_t hi) {
            const auto it = std::find_if(ext.begin(), ext.end(), [&](std::size_t p) { return p > lo && p < hi; });
            return *it;
        };
        const std::size_t ip = min_between(prev, cur);
        const std::size_t iq = min_between(cur, next);
        const auto& v = a.vertices();
        XConstruction x;
        x.vertices = {v[prev], v[ip], v[ip + 1], v[iq], v[iq + 1], v[next + 1]};
        x.shape = "peak";
        x.anchors = {prev, ip, cur, iq, next};
        return x;
    }
    throw InputError("insufficient extrema: no peak among the first " + std::to_string(maxima.size())
                     + " local maxima (found " + std::to_string(ext.size()) + " local extrema)");
}

XConstruction build_general(const DeltaProfile& a, int k)
{
    if (k < 7) {
        throw InputError("build_x general needs k >= 7");
    }
    const auto ext = a.extremum_positions();
    const auto need = static_cast<std::size_t>(k + 2);
    if (ext.size() < need) {
        insufficient(ext.size(), need, "local extrema");
    }
    const auto& v = a.vertices();
    XConstruction x;
    x.shape = "alternating";
    for (std::size_t i = 0; i < need && x.vertices.size() < static_cast<std::size_t>(k + 1); ++i) {
        if (a.label(ext[i]) != Position::local_min) {
            continue;
        }
        x.anchors.push_back(ext[i]);
        x.vertices.push_back(v[ext[i]]);
        if (x.vertices.size() < static_cast<std::size_t>(k + 1)) {
            x.vertices.push_back(v[ext[i] + 1]);
        }
    }
    if (x.vertices.size() < static_cast<std::size_t>(k + 1)) {
        insufficient(x.anchors.size(), static_cast<std::size_t>((k + 2) / 2), "local minima");
    }
    return x;
}

XConstruction build_k6(const DeltaProfile& a)
{
    const auto ext = a.extremum_positions();
    if (ext.size() < 8) {
        insufficient(ext.size(), 8, "local extrema");
    }
    const auto& d = a.deltas();
    std::vector<std::size_t> maxima;
    for (const std::size_t p : ext) {
        if (a.label(p) == Position::local_max && maxima.size() < 4) {
            maxima.push_back(p);
        }
    }
    for (std::size_t i = 0; i + 2 < maxima.size(); ++i) {
        const std::size_t k1 = maxima[i];
        const std::size_t k2 = maxima[i + 1];
        const std::size_t k3 = maxima[i + 2];
        const bool monotone = (d[k1] < d[k2] && d[k2] < d[k3]) || (d[k1] > d[k2] && d[k2] > d[k3]);
        const bool valley = d[k1] > d[k2] && d[k2] < d[k3];
        if (!monotone && !valley) {
            continue;
        }
        const auto closest_min_left = [&](std::size_t pos) {
            std::size_t best = 0;
            for (const std::size_t p : ext) {
                if (p < pos && a.label(p) == Position::local_min) {
                    best = p;
                }
            }
            return best;
        };
        const std::size_t l2 = closest_min_left(k2);
        const std::size_t l3 = closest_min_left(k3);
        const auto& v = a.vertices();
        XConstruction x;
        x.vertices = {v[k1 - 1], v[k1], v[l2], v[l2 + 1], v[l3], v[l3 + 1], v[k3 + 1]};
        x.shape = monotone ? "monotone" : "valley";
        x.anchors = {k1, l2, k2, l3, k3};
        return x;
    }
    throw Error("build_x k6: no monotone or valley-shaped triple among four consecutive local maxima");
}

} // namespace

XConstruction build_x(XKind kind, std::span<const Vertex> tuple, const XParams& params)
{
    const DeltaProfile profile(std::vector<Vertex>(tuple.begin(), tuple.end()));
    switch (kind) {
    case XKind::k5:
        return build_k5(profile, params.t);
    case XKind::k6:
        return build_k6(profile);
    case XKind::general:
        return build_general(profile, params.k);
    }
    throw InputError("unknown construction kind");
}

} // namespace stepup
