#include "liftlab/combi.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <queue>
#include <stdexcept>

namespace liftlab {

namespace {

void check_vertex(int v, int n, const char* who) {
    if (v < 1 || v > n)
        throw std::invalid_argument(std::string(who) + ": vertex " + std::to_string(v) +
                                    " out of range 1.." + std::to_string(n));
}

}  // namespace

Perm Perm::identity(int n) {
    Perm p;
    p.word.resize(n);
    std::iota(p.word.begin(), p.word.end(), 1);
    return p;
}

bool Perm::is_valid() const {
    std::vector<bool> seen(word.size(), false);
    for (int v : word) {
        if (v < 1 || v > (int)word.size() || seen[v - 1]) return false;
        seen[v - 1] = true;
    }
    return true;
}

std::string Perm::label() const {
    std::string s;
    for (std::size_t i = 0; i < word.size(); ++i) {
        if (i && word.size() > 9) s += ' ';
        s += std::to_string(word[i]);
    }
    return s;
}

std::vector<int> SubsetMask::elements() const {
    std::vector<int> out;
    for (int i = 1; i <= n; ++i)
        if (contains(i)) out.push_back(i);
    return out;
}

SubsetMask SubsetMask::of(int n, const std::vector<int>& elems) {
    SubsetMask m{n, 0};
    for (int e : elems) {
        check_vertex(e, n, "SubsetMask");
        m.bits |= 1u << (e - 1);
    }
    return m;
}

std::string SubsetMask::label() const {
    std::string s = "{";
    bool first = true;
    for (int i = 1; i <= n; ++i) {
        if (!contains(i)) continue;
        if (!first) s += ',';
        s += std::to_string(i);
        first = false;
    }
    return s + "}";
}

std::string Edge::label() const {
    return "{" + std::to_string(u) + "," + std::to_string(v) + "}";
}

Graph Graph::complete(int n) {
    Graph g;
    g.n = n;
    for (int u = 1; u <= n; ++u)
        for (int v = u + 1; v <= n; ++v) g.edges.push_back({u, v});
    return g;
}

void Graph::validate() const {
    if (n < 1) throw std::invalid_argument("Graph: need at least one vertex");
    for (std::size_t i = 0; i < edges.size(); ++i) {
        const Edge& e = edges[i];
        check_vertex(e.u, n, "Graph");
        check_vertex(e.v, n, "Graph");
        if (e.u >= e.v) throw std::invalid_argument("Graph: edge must satisfy u < v");
        if (i > 0 && !(edges[i - 1] < e))
            throw std::invalid_argument("Graph: edges must be sorted and duplicate-free");
    }
}

bool Graph::has_edge(int u, int v) const {
    if (u > v) std::swap(u, v);
    return std::binary_search(edges.begin(), edges.end(), Edge{u, v});
}

bool Graph::is_connected() const {
    if (n == 0) return false;
    std::vector<bool> seen(n + 1, false);
    std::queue<int> q;
    q.push(1);
    seen[1] = true;
    int reached = 1;
    while (!q.empty()) {
        int u = q.front();
        q.pop();
        for (const Edge& e : edges) {
            int w = e.u == u ? e.v : (e.v == u ? e.u : 0);
            if (w && !seen[w]) {
                seen[w] = true;
                ++reached;
                q.push(w);
            }
        }
    }
    return reached == n;
}

std::string Matching::label() const {
    if (edges.empty()) return "{}";
    std::string s = "{";
    for (std::size_t i = 0; i < edges.size(); ++i) {
        if (i) s += ',';
        s += edges[i].label();
    }
    return s + "}";
}

bool Matching::covers(int v) const {
    for (const Edge& e : edges)
        if (e.touches(v)) return true;
    return false;
}

std::optional<int> Matching::partner(int u) const {
    if (u < 1) throw std::invalid_argument("Matching::partner: vertex out of range");
    for (const Edge& e : edges) {
        if (e.u == u) return e.v;
        if (e.v == u) return e.u;
    }
    return std::nullopt;
}

std::string SpanningTree::label() const {
    Matching m;
    m.edges = edges;
    return m.label();
}

std::vector<Perm> all_perms(int n) {
    if (n < 1 || n > 10)
        throw std::invalid_argument("all_perms: n must be in 1..10, got " + std::to_string(n));
    std::vector<Perm> out;
    Perm p = Perm::identity(n);
    do {
        out.push_back(p);
    } while (std::next_permutation(p.word.begin(), p.word.end()));
    return out;
}

std::vector<SubsetMask> subsets(int n, SubsetFilter filter, int k) {
    if (n < 1 || n > 31) throw std::invalid_argument("subsets: n must be in 1..31");
    if (filter == SubsetFilter::FixedSize && (k < 0 || k > n))
        throw std::invalid_argument("subsets: bad fixed size k");
    std::vector<SubsetMask> out;
    std::uint32_t full = (n == 31) ? 0x7fffffffu : ((1u << n) - 1);
    for (std::uint32_t m = 0; m <= full; ++m) {
        int pc = __builtin_popcount(m);
        bool take = false;
        switch (filter) {
            case SubsetFilter::ProperNonEmpty: take = (m != 0 && m != full); break;
            case SubsetFilter::OddAtLeast3: take = (pc >= 3 && pc % 2 == 1); break;
            case SubsetFilter::FixedSize: take = (pc == k); break;
        }
        if (take) out.push_back({n, m});
    }
    std::stable_sort(out.begin(), out.end(), [](const SubsetMask& a, const SubsetMask& b) {
        if (a.size() != b.size()) return a.size() < b.size();
        return a.bits < b.bits;
    });
    return out;
}

namespace {

void enumerate_matchings(const Graph& g, std::size_t from, std::uint32_t used, Matching& cur,
                         std::vector<Matching>& out) {
    out.push_back(cur);
    for (std::size_t i = from; i < g.edges.size(); ++i) {
        const Edge& e = g.edges[i];
        std::uint32_t mask = (1u << (e.u - 1)) | (1u << (e.v - 1));
        if (used & mask) continue;
        cur.edges.push_back(e);
        enumerate_matchings(g, i + 1, used | mask, cur, out);
        cur.edges.pop_back();
    }
}

}  // namespace

std::vector<Matching> matchings(const Graph& g, int size) {
    g.validate();
    std::vector<Matching> all;
    Matching cur;
    enumerate_matchings(g, 0, 0, cur, all);
    std::stable_sort(all.begin(), all.end(), [](const Matching& a, const Matching& b) {
        if (a.size() != b.size()) return a.size() < b.size();
        return a.edges < b.edges;
    });
    if (size < 0) return all;
    std::vector<Matching> out;
    for (auto& m : all)
        if (m.size() == size) out.push_back(std::move(m));
    return out;
}

namespace {

// Union-find cycle check for a candidate edge set.
struct Dsu {
    std::vector<int> p;
    explicit Dsu(int n) : p(n + 1) { std::iota(p.begin(), p.end(), 0); }
    int find(int x) { return p[x] == x ? x : p[x] = find(p[x]); }
    bool unite(int a, int b) {
        a = find(a);
        b = find(b);
        if (a == b) return false;
        p[a] = b;
        return true;
    }
};

}  // namespace

std::vector<SpanningTree> spanning_trees(const Graph& g) {
    g.validate();
    std::vector<SpanningTree> out;
    if (g.n < 1 || (int)g.edges.size() < g.n - 1) return out;
    int need = g.n - 1;
    std::vector<std::size_t> pick;
    // Lexicographic subset enumeration of edge indices.
    std::vector<std::size_t> stack;
    std::function<void(std::size_t)> rec = [&](std::size_t from) {
        if ((int)stack.size() == need) {
            Dsu d(g.n);
            bool ok = true;
            for (std::size_t idx : stack)
                if (!d.unite(g.edges[idx].u, g.edges[idx].v)) {
                    ok = false;
                    break;
                }
            if (ok) {
                SpanningTree t;
                t.n = g.n;
                for (std::size_t idx : stack) t.edges.push_back(g.edges[idx]);
                out.push_back(std::move(t));
            }
            return;
        }
        for (std::size_t i = from; i < g.edges.size(); ++i) {
            if (g.edges.size() - i < (std::size_t)(need - (int)stack.size())) break;
            stack.push_back(i);
            rec(i + 1);
            stack.pop_back();
        }
    };
    rec(0);
    return out;  // already lexicographic: edge lists picked in increasing index order
}

namespace {

std::vector<std::vector<int>> tree_adjacency(const SpanningTree& t) {
    std::vector<std::vector<int>> adj(t.n + 1);
    for (const Edge& e : t.edges) {
        adj[e.u].push_back(e.v);
        adj[e.v].push_back(e.u);
    }
    return adj;
}

std::vector<int> tree_distances_from(const SpanningTree& t, int src) {
    check_vertex(src, t.n, "tree query");
    auto adj = tree_adjacency(t);
    std::vector<int> dist(t.n + 1, -1);
    std::queue<int> q;
    dist[src] = 0;
    q.push(src);
    while (!q.empty()) {
        int u = q.front();
        q.pop();
        for (int w : adj[u])
            if (dist[w] < 0) {
                dist[w] = dist[u] + 1;
                q.push(w);
            }
    }
    return dist;
}

}  // namespace

std::vector<std::pair<int, int>> orient_toward(const SpanningTree& t, int root) {
    auto dist = tree_distances_from(t, root);
    std::vector<std::pair<int, int>> out;
    out.reserve(t.edges.size());
    for (const Edge& e : t.edges) {
        if (dist[e.u] < 0 || dist[e.v] < 0)
            throw std::invalid_argument("orient_toward: edge set does not span the tree");
        if (dist[e.u] > dist[e.v])
            out.emplace_back(e.u, e.v);
        else
            out.emplace_back(e.v, e.u);
    }
    return out;
}

int tree_distance(const SpanningTree& t, int u, int v) {
    check_vertex(v, t.n, "tree query");
    auto dist = tree_distances_from(t, u);
    if (dist[v] < 0) throw std::invalid_argument("tree_distance: vertices not connected");
    return dist[v];
}

}  // namespace liftlab
