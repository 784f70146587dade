#pragma once

#include <string>
#include <utility>
#include <vector>

#include "liftlab/protocol.hpp"
#include "liftlab/sortnet.hpp"

namespace liftlab {

// Nonnegative factorization of the permutahedron slack matrix from a
// sorting network: A_{J,(l,e)} = 1 when Alice's color at step l equals e,
// B_{(l,e),sigma} = (e * w_l(sigma))_+. The q columns with color 0 carry
// identically zero B rows and are dropped, leaving exactly 2q paths.
struct PermFactorization {
    ComparatorSeq seq;
    RatMatrix a;  // rows: proper nonempty J; cols: "(l,+)", "(l,-)"
    RatMatrix b;  // rows: same path labels; cols: permutations

    std::size_t width() const { return a.n_cols(); }
};

PermFactorization perm_factorization(const ComparatorSeq& seq);

// The A matrix alone (rows: proper nonempty J, cols: the 2q colored paths);
// cheap even where the full B would be large.
RatMatrix perm_factor_a(const ComparatorSeq& seq);

std::string path_col_label(std::size_t l, int eps);  // "(3,+)", "(3,0)", "(3,-)"

// The one-round protocol: Alice sends (l, eps(l,J)) for uniform l, Bob
// claims (q * eps * w_l(sigma))_+. Its expectation matrix is slack_perm(n)
// and its width is at most 2q.
MarkovianProtocol one_round_protocol(const ComparatorSeq& seq);

// Goemans extension Q_n in ambient dimension n(q+1): points (y_0,...,y_q)
// with y_q = x_id, coordinate agreement off each comparator's pair,
// pair-sum conservation, and the 2q inequalities <y_{k+1} +- y_k, theta_k> >= 0.
struct GoemansSystem {
    ComparatorSeq seq;

    std::size_t ambient_dim() const { return (std::size_t)seq.n * (seq.size() + 1); }
    std::size_t inequality_count() const { return 2 * seq.size(); }
    std::size_t equality_count() const { return seq.n + seq.size() * (seq.n - 1); }

    bool is_feasible(const std::vector<Rational>& w) const;  // exact
};

GoemansSystem goemans_build(const ComparatorSeq& seq);

// w_sigma = (x^(0),...,x^(q)) with x^(0) = x_sigma pushed through the
// forward network; always feasible and projecting onto x_sigma.
std::vector<Rational> lift_sigma(const ComparatorSeq& seq, const Perm& sigma);

// Membership in Perm(n) by Edmonds' description: the equality on [n] plus
// all 2^n - 2 subset inequalities, checked exactly. n <= 12.
bool edmonds_membership(const std::vector<Rational>& x);

// Compression onto Goemans' n+2q coordinates and back: computes
// w~ = (y_0, a_1, b_1, ..., a_q, b_q), reconstructs via the z-recursion,
// and checks the reconstruction equals w and the compressed constraints
// hold. w must be feasible for Q_n (throws otherwise).
bool tilde_roundtrip(const ComparatorSeq& seq, const std::vector<Rational>& w);

// m_k(y) = min_{|J|=k} y(J) = sum of the k smallest coordinates.
Rational mk_value(const std::vector<Rational>& y, int k);

// Along a vertex lift, every m_k is non-increasing from block to block.
bool mk_monotone_along_lift(const ComparatorSeq& seq, const Perm& sigma);

struct FoolingSet {
    std::vector<std::pair<std::string, std::string>> pairs;  // (row, col) labels
};

// Positive at every pair, and no two pairs with both cross entries
// positive; a verified fooling set of size s certifies rk_+(M) >= s.
bool fooling_verify(const RatMatrix& m, const FoolingSet& f);

// The size-2q fooling set for the quadratic network's A matrix:
// J_{i,j,+} = [j] \ {i}; J_{i,j,-} = [i-1] ∪ {j+1} for j < n, [i] for j = n.
FoolingSet quadratic_fooling_set(int n);

}  // namespace liftlab
