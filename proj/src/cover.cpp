#include "liftlab/cover.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

#include "liftlab/approx.hpp"

namespace liftlab {

void Hypergraph::validate() const {
    if (incidence.size() != n_vertices())
        throw std::invalid_argument("Hypergraph: incidence row count mismatch");
    for (const auto& row : incidence)
        if (row.size() != n_edges())
            throw std::invalid_argument("Hypergraph: incidence column count mismatch");
    std::set<std::string> vs(vertex_labels.begin(), vertex_labels.end());
    std::set<std::string> es(edge_labels.begin(), edge_labels.end());
    if (vs.size() != n_vertices() || es.size() != n_edges())
        throw std::invalid_argument("Hypergraph: duplicate labels");
}

bool Hypergraph::is_simple() const {
    for (std::size_t a = 0; a < n_vertices(); ++a)
        for (std::size_t b = a + 1; b < n_vertices(); ++b)
            if (incidence[a] == incidence[b]) return false;
    for (std::size_t a = 0; a < n_edges(); ++a)
        for (std::size_t b = a + 1; b < n_edges(); ++b) {
            bool same = true;
            for (std::size_t v = 0; v < n_vertices() && same; ++v)
                same = incidence[v][a] == incidence[v][b];
            if (same) return false;
        }
    return true;
}

int Hypergraph::degree(std::size_t v) const {
    int d = 0;
    for (bool b : incidence[v]) d += b;
    return d;
}

int Hypergraph::max_degree() const {
    int d = 0;
    for (std::size_t v = 0; v < n_vertices(); ++v) d = std::max(d, degree(v));
    return d;
}

CoverResult greedy_cover(const Hypergraph& h) {
    h.validate();
    for (std::size_t e = 0; e < h.n_edges(); ++e) {
        bool nonempty = false;
        for (std::size_t v = 0; v < h.n_vertices() && !nonempty; ++v) nonempty = h.incidence[v][e];
        if (!nonempty)
            throw std::invalid_argument("greedy_cover: edge '" + h.edge_labels[e] +
                                        "' is empty and cannot be covered");
    }

    std::vector<bool> covered(h.n_edges(), false);
    std::size_t remaining = h.n_edges();
    CoverResult res;
    while (remaining > 0) {
        std::size_t best = 0;
        int best_deg = -1;
        for (std::size_t v = 0; v < h.n_vertices(); ++v) {
            int d = 0;
            for (std::size_t e = 0; e < h.n_edges(); ++e)
                if (!covered[e] && h.incidence[v][e]) ++d;
            if (d > best_deg) {  // strict: ties keep the lowest index
                best_deg = d;
                best = v;
            }
        }
        res.picked.push_back(best);
        res.degrees.push_back(best_deg);
        for (std::size_t e = 0; e < h.n_edges(); ++e)
            if (!covered[e] && h.incidence[best][e]) {
                covered[e] = true;
                --remaining;
            }
    }
    res.size = res.picked.size();
    return res;
}

Rational frac_cover_cost(const Hypergraph& h, const std::vector<Rational>& t) {
    h.validate();
    if (t.size() != h.n_vertices())
        throw std::invalid_argument("frac_cover_cost: weight vector size mismatch");
    for (const auto& w : t)
        if (w.is_negative())
            throw std::invalid_argument("frac_cover_cost: negative weight");
    for (std::size_t e = 0; e < h.n_edges(); ++e) {
        Rational s = 0;
        for (std::size_t v = 0; v < h.n_vertices(); ++v)
            if (h.incidence[v][e]) s += t[v];
        if (s < Rational(1))
            throw std::invalid_argument("frac_cover_cost: infeasible at edge '" +
                                        h.edge_labels[e] + "' (weight " + s.str() + ")");
    }
    Rational cost = 0;
    for (const auto& w : t) cost += w;
    return cost;
}

bool harmonic_check(const Hypergraph& h, const CoverResult& cover,
                    const Rational& frac_cover_cost) {
    Rational bound = harmonic_number((unsigned)h.max_degree()) * frac_cover_cost;
    return Rational((long)cover.size) <= bound;
}

Hypergraph matching_compat_hypergraph(int n, int k) {
    if (k < 1 || k > n / 2)
        throw std::invalid_argument("matching_compat_hypergraph: need 1 <= k <= n/2");
    if (n > 12) throw std::invalid_argument("matching_compat_hypergraph: n <= 12 at desk scale");
    auto xs = subsets(n, SubsetFilter::FixedSize, k);
    auto ms = matchings(Graph::complete(n), k);

    Hypergraph h;
    for (const auto& x : xs) h.vertex_labels.push_back(x.label());
    for (const auto& m : ms) h.edge_labels.push_back(m.label());
    h.incidence.assign(xs.size(), std::vector<bool>(ms.size(), false));
    for (std::size_t xi = 0; xi < xs.size(); ++xi) {
        for (std::size_t mi = 0; mi < ms.size(); ++mi) {
            bool compat = true;
            for (const Edge& e : ms[mi].edges)
                if (xs[xi].contains(e.u) == xs[xi].contains(e.v)) {
                    compat = false;
                    break;
                }
            h.incidence[xi][mi] = compat;
        }
    }
    return h;
}

std::vector<SubsetMask> build_Tk(int n, int k) {
    Hypergraph h = matching_compat_hypergraph(n, k);
    auto xs = subsets(n, SubsetFilter::FixedSize, k);
    CoverResult cov = greedy_cover(h);

    std::vector<SubsetMask> tk;
    for (std::size_t v : cov.picked) tk.push_back(xs[v]);

    // Every size-k matching must be compatible with some picked set.
    auto ms = matchings(Graph::complete(n), k);
    for (std::size_t mi = 0; mi < ms.size(); ++mi) {
        bool hit = false;
        for (std::size_t v : cov.picked)
            if (h.incidence[v][mi]) {
                hit = true;
                break;
            }
        if (!hit)
            throw std::logic_error("build_Tk: matching " + ms[mi].label() + " left uncovered");
    }

    // |T_k| <= (1 + k ln n) 2^-k C(n,k), with ln n over-approximated so the
    // checked bound is implied by the exact one.
    Rational ln_up = ln_upper_bound((unsigned)n, Rational(1, 1000000));
    Rational bound = (Rational(1) + Rational(k) * ln_up) * Rational::pow2(-k) *
                     binomial((unsigned)n, (unsigned)k);
    if (Rational((long)tk.size()) > bound)
        throw std::logic_error("build_Tk: greedy cover exceeds the harmonic bound");
    return tk;
}

NuTau brute_nu_tau(const Hypergraph& h) {
    h.validate();
    if (h.n_vertices() > 20 || h.n_edges() > 20)
        throw std::invalid_argument("brute_nu_tau: instance too large for exhaustive search");

    std::size_t ne = h.n_edges(), nv = h.n_vertices();
    NuTau out;

    // nu: largest edge subset with no vertex covered twice.
    for (std::uint32_t m = 0; m < (1u << ne); ++m) {
        int size = __builtin_popcount(m);
        if (size <= out.nu) continue;
        bool ok = true;
        for (std::size_t v = 0; v < nv && ok; ++v) {
            int hits = 0;
            for (std::size_t e = 0; e < ne; ++e)
                if ((m >> e) & 1u) hits += h.incidence[v][e];
            ok = hits <= 1;
        }
        if (ok) out.nu = size;
    }

    // tau: smallest vertex subset meeting every edge.
    out.tau = (int)nv + 1;
    for (std::uint32_t m = 0; m < (1u << nv); ++m) {
        int size = __builtin_popcount(m);
        if (size >= out.tau) continue;
        bool ok = true;
        for (std::size_t e = 0; e < ne && ok; ++e) {
            bool hit = false;
            for (std::size_t v = 0; v < nv && !hit; ++v)
                if ((m >> v) & 1u) hit = h.incidence[v][e];
            ok = hit;
        }
        if (ok) out.tau = size;
    }
    if (out.tau > (int)nv)
        throw std::invalid_argument("brute_nu_tau: some edge is empty, no cover exists");

    if (out.nu > out.tau) throw std::logic_error("brute_nu_tau: weak duality violated");
    return out;
}

}  // namespace liftlab
