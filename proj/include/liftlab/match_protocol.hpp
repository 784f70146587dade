#pragma once

#include <optional>
#include <vector>

#include "liftlab/combi.hpp"
#include "liftlab/protocol.hpp"

namespace liftlab {

// Matching-polytope protocol, realized directly as an explicit nonnegative
// factorization of slack_match(g). Message paths come in four blocks:
//
//   e:{u,v}          Alice was given an edge constraint; Bob answers chi_M(e)
//   v:u              vertex constraint; Bob answers 1 - |M ∩ delta(u)|
//   stop:k:j         Alice stops against X_j in T_k and claims (|U|-1)/2
//                    (stop:0:0 carries the empty matching)
//   pair:k:j:u:u'    Alice announced u, Bob answered u' = M(u); u' == u is
//                    the sentinel for "u unmatched"
//
// Bob points to the least-index compatible set of T_k. Alice picks
// Z in {X_j, X_j^c} as the side with the smaller intersection with U and
// stops when that side misses U entirely; otherwise she draws u uniformly
// from Z ∩ U and claims (|U|-1)/2 - |Z ∩ U| when u' lands in U \ {u},
// and (|U|-1)/2 otherwise.

// The chosen side Z, or nullopt when Alice stops (U inside X or disjoint
// from it). |U| must be odd, so the two sides always differ in size.
std::optional<SubsetMask> select_Z(const SubsetMask& u, const SubsetMask& x);

// Average claim conditional on Bob pointing to the compatible set x;
// equals the slack (|U|-1)/2 - |M ∩ E(U)| for every compatible x.
Rational conditional_match_expectation(const Graph& g, const SubsetMask& u, const Matching& m,
                                       const SubsetMask& x);

// tks[k-1] must cover all size-k matchings of g for k = 1..floor(n/2);
// a violated cover throws with the uncovered matching named. The returned
// product equals slack_match(g) exactly on all row blocks.
Factorization match_factorization(const Graph& g, const std::vector<std::vector<SubsetMask>>& tks);

// Greedy T_k families for k = 1..floor(n/2) (via cover::build_Tk).
std::vector<std::vector<SubsetMask>> build_all_tks(int n);

struct MatchWidthReport {
    std::size_t width = 0;  // |Gamma| after dropping all-zero paths
    Rational bound;         // n^3 ln(n) 1.5^n, ln under-approximated
    bool within = false;
};

MatchWidthReport match_width_report(const Graph& g,
                                    const std::vector<std::vector<SubsetMask>>& tks);

}  // namespace liftlab
