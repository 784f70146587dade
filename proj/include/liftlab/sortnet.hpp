#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include "liftlab/combi.hpp"
#include "liftlab/rational.hpp"

namespace liftlab {

struct Comparator {
    int i = 0, j = 0;  // 1 <= i < j <= n
    auto operator<=>(const Comparator&) const = default;
};

struct ComparatorSeq {
    int n = 0;
    std::vector<Comparator> comps;

    std::size_t size() const { return comps.size(); }
    void validate() const;  // throws std::invalid_argument
};

enum class Direction { Forward, Reverse };

// Applies the comparators in list order. A forward comparator (i,j) leaves
// min(x_i, x_j) at position i and the max at j; reverse does the opposite.
std::vector<Rational> apply_network(const ComparatorSeq& seq, std::vector<Rational> x,
                                    Direction dir);

// Same on a 0/1 vector encoded as a SubsetMask (bit i-1 = coordinate i).
std::uint32_t apply_network_mask(const ComparatorSeq& seq, std::uint32_t mask, Direction dir);

// Full validity test by the 0-1 principle: all 2^n indicator vectors must
// land on the sorted target (top |J| positions forward, bottom |J| reverse).
// n <= 24.
bool is_sorting_network(const ComparatorSeq& seq, Direction dir);

// Forward and reverse validity always agree, and the complement identity
// sigma^-(J^c) = (sigma^+(J))^c holds for every J. Returns true when both
// facts check out on seq (they must, for any sequence). n <= 20.
bool duality_check(const ComparatorSeq& seq);

// Per-comparator slack decrement delta_{i,j}(sigma, J). Evaluates both the
// definitional form sigma(J) - sigma+_{i,j}(sigma)(sigma-_{i,j}(J)) and the
// closed form 1_{j in J, i not in J}(sigma(j)-sigma(i))_+ +
// 1_{i in J, j not in J}(sigma(i)-sigma(j))_+, and throws std::logic_error
// if they ever disagree.
Rational delta(int i, int j, const Perm& sigma, const SubsetMask& big_j);

// Alice's trace: the subset sequence J_0..J_q under the reverse operator,
// with colors eps(l) = 1_{j_l in J_l, i_l not in J_l} - 1_{i_l in J_l, j_l not in J_l}.
struct JTrace {
    std::vector<SubsetMask> sets;  // J_0 .. J_q
    std::vector<int> colors;       // eps(0) .. eps(q-1), values in {-1,0,+1}
    int count_minus = 0, count_zero = 0, count_plus = 0;
};
JTrace trace(const ComparatorSeq& seq, const SubsetMask& j0);

// Bob's trace: permutations sigma_0..sigma_q under the forward operator and
// the values w_l = sigma_l(j_l) - sigma_l(i_l).
struct SigmaTrace {
    std::vector<Perm> perms;
    std::vector<int> w;
};
SigmaTrace trace_sigma(const ComparatorSeq& seq, const Perm& sigma);

enum class NetworkKind { Quadratic, OddEvenTransposition, Batcher };

// quadratic: ((1,n),(1,n-1),...,(1,2),(2,n),...,(n-1,n)), q = n(n-1)/2.
// The other two are standard constructions; all three return valid forward
// sorting networks.
ComparatorSeq generate(NetworkKind kind, int n);

// Closed-form position of comparator (i,j) inside the quadratic sequence;
// cross-checked against the generated list (mismatch would be a bug here).
std::size_t quadratic_position(int n, int i, int j);

enum class MinimalityMode { OneRemoval, Exhaustive };

struct MinimalityResult {
    bool minimal = false;
    // When not minimal: indices (into comps) of a proper subsequence that
    // still sorts.
    std::vector<std::size_t> redundant_subset;
};

// OneRemoval tests every single deletion (a necessary condition only:
// deletions are not monotone). Exhaustive tests all proper subsequences
// and is the ground truth; it requires q <= 22.
MinimalityResult minimality(const ComparatorSeq& seq, MinimalityMode mode);

// Text format: first line "n q", then q lines "i j".
ComparatorSeq network_from_text(std::istream& in);
std::string network_to_text(const ComparatorSeq& seq);

}  // namespace liftlab
