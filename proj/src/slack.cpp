#include "liftlab/slack.hpp"

#include <algorithm>
#include <stdexcept>

namespace liftlab {

namespace {

// Edges of g with both endpoints in U.
std::vector<Edge> induced_edges(const Graph& g, const SubsetMask& u) {
    std::vector<Edge> out;
    for (const Edge& e : g.edges)
        if (u.contains(e.u) && u.contains(e.v)) out.push_back(e);
    return out;
}

int count_in(const std::vector<Edge>& matching_edges, const std::vector<Edge>& pool) {
    int c = 0;
    for (const Edge& e : matching_edges)
        if (std::binary_search(pool.begin(), pool.end(), e)) ++c;
    return c;
}

}  // namespace

std::string vertex_row_label(int v) { return std::to_string(v); }

SlackMatrix slack_perm(int n) {
    if (n < 2 || n > 8)
        throw std::invalid_argument("slack_perm: n must be in 2..8, got " + std::to_string(n));
    auto rows = subsets(n, SubsetFilter::ProperNonEmpty);
    auto cols = all_perms(n);

    std::vector<std::string> row_labels, col_labels;
    for (const auto& j : rows) row_labels.push_back(j.label());
    for (const auto& s : cols) col_labels.push_back(s.label());

    RatMatrix m = RatMatrix::build(row_labels, col_labels, [&](std::size_t r, std::size_t c) {
        const SubsetMask& j = rows[r];
        const Perm& sigma = cols[c];
        long sum = 0;
        for (int e : j.elements()) sum += sigma.apply(e);
        long k = j.size();
        return Rational(sum - k * (k + 1) / 2);
    });
    return {std::move(m), PolytopeKind::Perm, n,
            std::vector<RowKind>(rows.size(), RowKind::SubsetU)};
}

SlackMatrix slack_spt(const Graph& g, bool with_nonneg_rows) {
    g.validate();
    if (!g.is_connected()) throw std::invalid_argument("slack_spt: graph must be connected");
    auto trees = spanning_trees(g);

    std::vector<SubsetMask> urows;
    for (const auto& u : subsets(g.n, SubsetFilter::ProperNonEmpty))
        if (u.size() >= 2 && !induced_edges(g, u).empty()) urows.push_back(u);

    std::vector<std::string> row_labels;
    std::vector<RowKind> kinds;
    if (with_nonneg_rows) {
        // "e:" prefix keeps edge rows distinct from 2-element subset rows
        for (const Edge& e : g.edges) {
            row_labels.push_back("e:" + e.label());
            kinds.push_back(RowKind::Edge);
        }
    }
    for (const auto& u : urows) {
        row_labels.push_back(u.label());
        kinds.push_back(RowKind::SubsetU);
    }
    std::vector<std::string> col_labels;
    for (const auto& t : trees) col_labels.push_back(t.label());

    std::size_t edge_rows = with_nonneg_rows ? g.edges.size() : 0;
    RatMatrix m = RatMatrix::build(row_labels, col_labels, [&](std::size_t r, std::size_t c) {
        const SpanningTree& t = trees[c];
        if (r < edge_rows) {
            const Edge& e = g.edges[r];
            return Rational(std::binary_search(t.edges.begin(), t.edges.end(), e) ? 1 : 0);
        }
        const SubsetMask& u = urows[r - edge_rows];
        auto eu = induced_edges(g, u);
        return Rational(u.size() - 1 - count_in(t.edges, eu));
    });
    return {std::move(m), PolytopeKind::SpT, g.n, std::move(kinds)};
}

SlackMatrix slack_match(const Graph& g) {
    g.validate();
    auto cols = matchings(g);

    std::vector<SubsetMask> oddsets;
    for (const auto& u : subsets(g.n, SubsetFilter::OddAtLeast3))
        if (!induced_edges(g, u).empty()) oddsets.push_back(u);

    std::vector<std::string> row_labels;
    std::vector<RowKind> kinds;
    for (const Edge& e : g.edges) {
        row_labels.push_back(e.label());
        kinds.push_back(RowKind::Edge);
    }
    for (int v = 1; v <= g.n; ++v) {
        row_labels.push_back(vertex_row_label(v));
        kinds.push_back(RowKind::Vertex);
    }
    for (const auto& u : oddsets) {
        row_labels.push_back(u.label());
        kinds.push_back(RowKind::OddSet);
    }
    std::vector<std::string> col_labels;
    for (const auto& m : cols) col_labels.push_back(m.label());

    std::size_t ne = g.edges.size(), nv = g.n;
    RatMatrix m = RatMatrix::build(row_labels, col_labels, [&](std::size_t r, std::size_t c) {
        const Matching& mm = cols[c];
        if (r < ne) {
            const Edge& e = g.edges[r];
            return Rational(std::binary_search(mm.edges.begin(), mm.edges.end(), e) ? 1 : 0);
        }
        if (r < ne + nv) {
            int v = (int)(r - ne) + 1;
            return Rational(mm.covers(v) ? 0 : 1);
        }
        const SubsetMask& u = oddsets[r - ne - nv];
        auto eu = induced_edges(g, u);
        return Rational(u.size() - 1, 2) - Rational(count_in(mm.edges, eu));
    });
    return {std::move(m), PolytopeKind::Match, g.n, std::move(kinds)};
}

std::vector<int> birkhoff_project(const Perm& sigma) {
    if (!sigma.is_valid()) throw std::invalid_argument("birkhoff_project: invalid permutation");
    int n = sigma.n();
    // (M_sigma)_{i,j} = 1 iff j = sigma(i); multiply by (1,...,n)^T.
    std::vector<int> out(n);
    for (int i = 1; i <= n; ++i) {
        int acc = 0;
        for (int j = 1; j <= n; ++j)
            if (j == sigma.apply(i)) acc += j;
        out[i - 1] = acc;
    }
    for (int i = 1; i <= n; ++i)
        if (out[i - 1] != sigma.apply(i))
            throw std::logic_error("birkhoff_project: projection does not match x_sigma");
    return out;
}

}  // namespace liftlab
