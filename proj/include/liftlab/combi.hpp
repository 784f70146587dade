#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace liftlab {

// Everything here is 1-based: vertices and coordinates live in 1..n, and a
// SubsetMask maps element i to bit i-1. Enumeration orders are frozen and
// documented below; they define label order in every slack matrix.

// Permutation in one-line notation: word[i-1] = sigma(i), values 1..n.
struct Perm {
    std::vector<int> word;

    int n() const { return (int)word.size(); }
    int apply(int i) const { return word[i - 1]; }  // sigma(i)
    static Perm identity(int n);
    bool is_valid() const;

    // "213" for n <= 9, space-separated "2 1 3" beyond.
    std::string label() const;

    bool operator==(const Perm& o) const { return word == o.word; }
};

struct SubsetMask {
    int n = 0;
    std::uint32_t bits = 0;

    bool contains(int i) const { return (bits >> (i - 1)) & 1u; }
    int size() const { return __builtin_popcount(bits); }
    bool empty() const { return bits == 0; }
    std::vector<int> elements() const;
    SubsetMask complement() const { return {n, (std::uint32_t)((1u << n) - 1) ^ bits}; }

    static SubsetMask of(int n, const std::vector<int>& elems);

    // "{1,3,4}", "{}" for the empty set.
    std::string label() const;

    bool operator==(const SubsetMask& o) const { return n == o.n && bits == o.bits; }
};

struct Edge {
    int u = 0, v = 0;  // u < v

    std::string label() const;  // "{1,2}"
    bool touches(int x) const { return u == x || v == x; }
    auto operator<=>(const Edge&) const = default;
};

struct Graph {
    int n = 0;
    std::vector<Edge> edges;  // sorted, no loops, no duplicates

    static Graph complete(int n);
    void validate() const;  // throws std::invalid_argument on malformed input
    bool has_edge(int u, int v) const;
    bool is_connected() const;
};

// A set of pairwise vertex-disjoint edges; the empty matching is a valid value.
struct Matching {
    std::vector<Edge> edges;  // sorted

    int size() const { return (int)edges.size(); }
    std::string label() const;  // "{{1,2},{3,4}}", "{}" when empty
    bool covers(int v) const;
    // Matched partner of u, or nullopt when u is unmatched.
    std::optional<int> partner(int u) const;

    bool operator==(const Matching& o) const { return edges == o.edges; }
};

struct SpanningTree {
    int n = 0;
    std::vector<Edge> edges;  // sorted, size n-1, spanning and acyclic

    std::string label() const;  // same format as Matching
};

// --- Enumerations (orders are part of the contract) ---

// All n! permutations in lexicographic order of the word. n <= 10.
std::vector<Perm> all_perms(int n);

enum class SubsetFilter { ProperNonEmpty, OddAtLeast3, FixedSize };

// Subsets ordered by (popcount, then mask ascending). For FixedSize pass k.
std::vector<SubsetMask> subsets(int n, SubsetFilter filter, int k = -1);

// All matchings of g (including the empty one when size == -1), ordered by
// (size, then lexicographic edge list). size >= 0 restricts to that size.
std::vector<Matching> matchings(const Graph& g, int size = -1);

// All spanning trees, ordered lexicographically by edge list.
std::vector<SpanningTree> spanning_trees(const Graph& g);

// --- Tree and matching queries ---

// Each tree edge directed as (tail, head) with the head strictly closer to
// root; result in tree edge-list order. Every vertex except root has exactly
// one outgoing edge.
std::vector<std::pair<int, int>> orient_toward(const SpanningTree& t, int root);

int tree_distance(const SpanningTree& t, int u, int v);

}  // namespace liftlab
