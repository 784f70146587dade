#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "liftlab/matrix.hpp"
#include "liftlab/rng.hpp"
#include "liftlab/slack.hpp"

namespace liftlab {

enum class Party { A, B };

inline Party other(Party p) { return p == Party::A ? Party::B : Party::A; }

// Sparse probability distribution over node labels; only positive entries
// are stored and they must sum to exactly 1.
using Dist = std::map<std::string, Rational>;

struct LayeredBP {
    std::vector<std::vector<std::string>> layers;  // V_1 .. V_k
    int rounds() const { return (int)layers.size(); }
};

// A randomized two-party protocol carried by a layered branching program.
// The source and sink of the BP are implicit; message paths are tuples over
// V_1 x ... x V_k. Each round's message distribution depends only on the
// sender's input and the previously received node, and the final claim is a
// deterministic nonnegative value per (claimer input, final node).
//
// All four speaker/claimer orientations are supported; consistency requires
// claimer == first_speaker exactly when the round count is even.
struct MarkovianProtocol {
    LayeredBP bp;
    std::vector<std::string> x_domain;  // Alice's inputs (rows of the target)
    std::vector<std::string> y_domain;  // Bob's inputs (columns)
    Party first_speaker = Party::A;
    Party claimer = Party::B;

    // first speaker's input -> distribution over V_1
    std::map<std::string, Dist> init;
    // kernels[j] moves V_{j+1} -> V_{j+2} (0-based j), owned by the speaker
    // of round j+2; key = (owner's input, source node).
    std::vector<std::map<std::pair<std::string, std::string>, Dist>> kernels;
    // (claimer's input, node of V_k) -> output value >= 0
    std::map<std::pair<std::string, std::string>, Rational> output;

    Party speaker_of_round(int round) const {  // 1-based round
        return (round % 2 == 1) ? first_speaker : other(first_speaker);
    }
    Party kernel_owner(std::size_t j) const { return speaker_of_round((int)j + 2); }
    const std::vector<std::string>& inputs_of(Party p) const {
        return p == Party::A ? x_domain : y_domain;
    }

    // Structural checks: layer/kernel arity, speaker/claimer parity, every
    // stored distribution sums to exactly 1 with positive entries on known
    // nodes, outputs nonnegative. Throws std::invalid_argument.
    void validate() const;
};

// Exact average output for inputs (x, y): the sum over all paths of
// init * kernels * output. A distribution missing under positive reach
// probability makes the protocol ill-formed and throws.
Rational exact_expectation(const MarkovianProtocol& p, const std::string& x,
                           const std::string& y);

// Average output conditional on the exchanged messages starting with
// `prefix` (nonempty, prefix[i] in V_{i+1}). By the Markov property this
// depends only on prefix.back(); the test suite checks that against the
// full path-sum definition.
Rational conditional_expectation(const MarkovianProtocol& p, const std::string& x,
                                 const std::string& y,
                                 const std::vector<std::string>& prefix);

struct CorrectnessReport {
    bool correct = false;
    std::string x, y;  // first counterexample cell when !correct
    Rational got, want;
};

// Exhaustively compares exact_expectation against every entry of S.
// Domains must equal the slack matrix labels.
CorrectnessReport check_correct(const MarkovianProtocol& p, const SlackMatrix& s);

struct GammaResult {
    std::vector<std::string> paths;  // labels of the surviving message paths
    std::size_t width = 0;           // |Gamma(pi)|
};

// Gamma(pi): paths with positive Alice-side weight for some x and positive
// Bob-side weight for some y. width = |Gamma|.
GammaResult gamma_width(const MarkovianProtocol& p);

// Nonnegative factorization restricted to Gamma: A has rows x_domain and
// one column per path, B the mirror. For a correct protocol, A*B equals
// the target matrix exactly.
struct Factorization {
    RatMatrix a;
    RatMatrix b;
    std::vector<std::string> gamma;

    std::size_t width() const { return gamma.size(); }
};

// Splits each path product into the two parties' factors (initial
// distribution and kernels go to their owning speaker, the output to the
// claimer) and drops paths outside Gamma.
Factorization compile_factorization(const MarkovianProtocol& p);

// Converse compiler: from nonnegative A (m x r) and B (r x N), builds a
// one-round protocol whose expectation matrix is exactly A*B. A is scaled
// so its largest row sum is 1; the leftover mass goes to a sink node with
// output 0. Width <= r.
MarkovianProtocol factorization_to_protocol(const RatMatrix& a, const RatMatrix& b);

struct SimResult {
    Rational mean;          // exact rational average of the sampled outputs
    Rational mean_sq;       // average of squared outputs (for variance)
    long long count_nonneg = 0;
};

// Monte Carlo sampling of the protocol with the SplitMix64 generator;
// trial t uses the stream SplitMix64::for_trial(seed, t), so results are
// byte-reproducible for a fixed seed.
SimResult simulate(const MarkovianProtocol& p, const std::string& x, const std::string& y,
                   long long trials, std::uint64_t seed);

}  // namespace liftlab
