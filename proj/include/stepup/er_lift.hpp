#pragma once

// Stepped-up Erdos-Rogers hypergraphs. A (k-1)-graph H' on [0, N) lifts to
// a k-graph H on [0, 2^N) whose membership depends on the delta sequence of
// a k-tuple: monotone tuples inherit H' on their delta set, the rest are
// decided by m(e) (number of local extrema) and a few delta comparisons.
//
//   k = 5:  member iff (I) m = 0 and delta-set in H', or (II) m = 2.
//   k = 6:  (I) m = 0 and delta-set in H'; (II) m in {2,3}, d1 < d2;
//           (III) m = 3, d1 > d2, (d1 > d3 or d3 < d5).
//           Non-members: (IV) m = 1; (V) m = 2, d1 > d2;
//           (VI) m = 3, d1 > d2, d1 < d3 > d5.
//   k >= 7: (I) m = 0 and delta-set in H'; (II) m = k-3;
//           (III) m = k-4, d1 < d2.
//           Non-members: (IV) m = k-4, d1 > d2; (V) 1 <= m <= k-5.
//
// Monotone tuples whose delta set is not in H' are non-members as well;
// they are reported as clause "I-" below, and k = 5 tuples with m = 1 as
// clause "other", so every tuple falls in exactly one clause.

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "stepup/delta.hpp"
#include "stepup/hypergraph.hpp"

namespace stepup {

enum class LiftClause : std::uint8_t { I, I_not, II, III, IV, V, VI, other };

const char* to_string(LiftClause c);

// Bitmask over LiftClause: bit c set when clause c's defining condition
// holds for the given delta sequence of a k-tuple. Each clause is evaluated
// independently from its literal definition.
unsigned lift_clauses(int k, std::span<const BitIndex> deltas, bool base_has_delta_set);

// Whether a clause makes the tuple a member of the lift.
bool clause_is_member(int k, LiftClause c);

class LiftRule {
public:
    // base must have uniformity k-1 and at most 63 vertices; k >= 5.
    LiftRule(int k, Hypergraph base);

    int k() const { return k_; }
    const Hypergraph& base() const { return base_; }
    int base_width() const { return static_cast<int>(base_.ground_size()); }
    std::uint64_t ground_size() const { return std::uint64_t{1} << base_.ground_size(); }

    // Unchecked membership of a sorted k-tuple of [0, 2^N).
    bool member(std::span<const Vertex> e) const;

    // The single clause this tuple falls in.
    LiftClause clause(std::span<const Vertex> e) const;

private:
    int k_;
    Hypergraph base_;
};

// Checked rule-specific entry points. Throw InputError on arity mismatch,
// unsorted tuples or vertices outside [0, 2^N).
bool member_k5(const LiftRule& rule, std::span<const Vertex> e);
bool member_k6(const LiftRule& rule, std::span<const Vertex> e);
// Throws InputError("use dedicated rule") for k < 7.
bool member_general(const LiftRule& rule, std::span<const Vertex> e);

// The lifted k-graph on [0, 2^N), rule-backed.
Hypergraph lift_hypergraph(const LiftRule& rule);

enum class Claim { mono, four, mono2 };
enum class ClaimOutcome { holds, fails, not_applicable };

const char* to_string(Claim c);
const char* to_string(ClaimOutcome o);
Claim parse_claim(const std::string& text);

struct ClaimVerdict {
    ClaimOutcome outcome = ClaimOutcome::not_applicable;
    std::string detail;
    // For holds/fails: the sub-tuple the conclusion was read from.
    std::vector<Vertex> witness;
};

// Evaluates a lemma on a concrete sorted tuple.
//   mono:  6-tuple, m = 3, delta_2 a local maximum. Conclusion: removing a_3
//          or a_4 leaves exactly one local monotone, and in f minus a_3 the
//          position of delta_2 or of delta_4 is a local monotone.
//   mono2: 5-tuple with d1 < d2 > d3 < d4, d2 < d4 (then d2 is a local
//          monotone of f minus a_3), or d1 > d2 < d3 > d4, d1 > d3 (then
//          d3 is).
//   four:  (k+2)-tuple, k >= 7, nonmonotone deltas. Conclusion: either no
//          four consecutive deltas are monotone, or some k-subset containing
//          six consecutive vertices of the tuple has 1 <= m <= k-5,
//          i.e. the tuple cannot span a clique of the lift.
ClaimVerdict claim_check(Claim which, std::span<const Vertex> tuple, int k = 7);

// Tuple length a claim is stated for.
std::size_t claim_arity(Claim which, int k);

struct ClaimScan {
    std::uint64_t holds = 0;
    std::uint64_t fails = 0;
    std::uint64_t not_applicable = 0;
    // First failing tuple in enumeration order.
    std::vector<Vertex> first_failure;
    std::string failure_detail;
};

// Claims depend on the tuple only through its delta sequence, so running
// them on one realization of every realizable sequence with values in
// [0, bound) covers every tuple of [0, 2^bound).
ClaimScan scan_claims(Claim which, int k, BitIndex bound);
// `count` uniform tuples of [0, 2^width) of the claim's arity.
ClaimScan sample_claims(Claim which, int k, int width, std::uint64_t seed, std::uint64_t count);

struct PartitionScan {
    // Delta sequences times the two base-edge cases.
    std::uint64_t cases = 0;
    std::uint64_t gaps = 0;
    std::uint64_t overlaps = 0;
    // Cases where LiftRule::member disagrees with the clause's verdict.
    std::uint64_t member_mismatches = 0;
    std::vector<BitIndex> first_bad;
};

// Every realizable delta sequence of length k-1 with values in [0, bound),
// with the delta set both inside and outside the base: each case must fall
// in exactly one clause, and the rule must agree with that clause.
PartitionScan scan_partition(int k, BitIndex bound);

enum class XKind { k5, k6, general };

const char* to_string(XKind k);
XKind parse_xkind(const std::string& text);

struct XParams {
    int k = 7; // uniformity for XKind::general
    int t = 2; // alpha bound for XKind::k5 (uses the first 4t extrema)
};

struct XConstruction {
    std::vector<Vertex> vertices;
    // k6: "monotone" or "valley" (shape of the three maxima used);
    // k5: "peak"; general: "alternating".
    std::string shape;
    // 0-based delta positions the construction was anchored on.
    std::vector<std::size_t> anchors;
};

// Clique witnesses from a long independent-looking tuple:
//   k5: the 6-set around the first peak among the first 2t local maxima
//       (needs >= 4t extrema);
//   general: the first k+1 endpoints of local-minimum pairs among the first
//       k+2 extrema;
//   k6: the 7-set from three consecutive local maxima that are monotone or
//       valley-shaped, with their preceding local minima (needs >= 8 extrema).
// Throws InputError naming the extrema count when the tuple has too few.
XConstruction build_x(XKind kind, std::span<const Vertex> tuple, const XParams& params = {});

// Uniformity of the hypergraph X is a clique in.
int x_uniformity(XKind kind, const XParams& params);

} // namespace stepup
