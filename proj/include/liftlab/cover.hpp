#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "liftlab/combi.hpp"
#include "liftlab/rational.hpp"

namespace liftlab {

// Hypergraph as a labeled 0/1 incidence grid, incidence[v][e] = 1 when
// vertex v lies in edge e. Simplicity (no repeated rows or columns) is a
// checkable property rather than a construction invariant: the matching
// compatibility hypergraphs H_k legitimately repeat rows when n = 2k.
struct Hypergraph {
    std::vector<std::string> vertex_labels;
    std::vector<std::string> edge_labels;
    std::vector<std::vector<bool>> incidence;

    std::size_t n_vertices() const { return vertex_labels.size(); }
    std::size_t n_edges() const { return edge_labels.size(); }

    void validate() const;  // shape + duplicate-free labels
    bool is_simple() const;
    int degree(std::size_t v) const;
    int max_degree() const;
};

// Trace of the greedy vertex-cover run: picked vertices in order and the
// number of newly covered edges at each step.
struct CoverResult {
    std::vector<std::size_t> picked;
    std::vector<int> degrees;  // d_j, non-increasing
    std::size_t size = 0;
};

// Greedy cover: repeatedly pick the vertex covering the most uncovered
// edges, lowest index on ties. An empty edge is uncoverable and throws.
CoverResult greedy_cover(const Hypergraph& h);

// Verifies that t is a feasible fractional cover (sum_v t_v A_{v,e} >= 1
// for every edge, t >= 0) and returns its cost; throws on infeasibility.
Rational frac_cover_cost(const Hypergraph& h, const std::vector<Rational>& t);

// The harmonic guarantee |T| <= H(max degree) * frac_cover_cost. The cost
// must come from a verified feasible fractional cover (see above), which
// upper-bounds the optimum tau*.
bool harmonic_check(const Hypergraph& h, const CoverResult& cover,
                    const Rational& frac_cover_cost);

// H_k: vertices are the k-subsets X of [n], edges the size-k matchings of
// K_n, X incident to M when every edge of M crosses (X, X^c).
Hypergraph matching_compat_hypergraph(int n, int k);

// Greedy cover of H_k as subset masks. Postconditions checked here: every
// size-k matching of K_n is compatible with some returned set, and
// |T_k| <= (1 + k ln n) 2^-k C(n,k) with a rational upper bound on ln n.
std::vector<SubsetMask> build_Tk(int n, int k);

struct NuTau {
    int nu = 0;   // maximum matching size
    int tau = 0;  // minimum vertex-cover size
};

// Exhaustive nu and tau for tiny instances (<= 20 vertices and edges);
// checks the weak-duality inequality nu <= tau before returning.
NuTau brute_nu_tau(const Hypergraph& h);

}  // namespace liftlab
