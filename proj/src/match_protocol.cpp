#include "liftlab/match_protocol.hpp"

#include <algorithm>
#include <stdexcept>

#include "liftlab/approx.hpp"
#include "liftlab/cover.hpp"
#include "liftlab/slack.hpp"

namespace liftlab {

std::optional<SubsetMask> select_Z(const SubsetMask& u, const SubsetMask& x) {
    if (u.size() % 2 == 0) throw std::invalid_argument("select_Z: |U| must be odd");
    SubsetMask inside{u.n, u.bits & x.bits};
    int a = inside.size();
    if (a == 0 || a == u.size()) return std::nullopt;  // Alice stops
    return a <= (u.size() - 1) / 2 ? x : x.complement();
}

namespace {

// Alice's claim upon hearing u': (|U|-1)/2 - |Z ∩ U| when u' lands in
// U \ {u}, and (|U|-1)/2 otherwise (u' == u means u was unmatched).
Rational claim(const SubsetMask& u_set, int zu_size, int u, int uprime) {
    Rational base(u_set.size() - 1, 2);
    if (uprime != u && u_set.contains(uprime)) return base - Rational(zu_size);
    return base;
}

int sentinel_partner(const Matching& m, int u) {
    auto p = m.partner(u);
    return p ? *p : u;
}

}  // namespace

Rational conditional_match_expectation(const Graph& g, const SubsetMask& u, const Matching& m,
                                       const SubsetMask& x) {
    for (const Edge& e : m.edges) {
        if (!g.has_edge(e.u, e.v))
            throw std::invalid_argument("conditional_match_expectation: matching edge not in g");
        if (x.contains(e.u) == x.contains(e.v))
            throw std::invalid_argument("conditional_match_expectation: x not compatible with m");
    }
    auto z = select_Z(u, x);
    if (!z) return Rational(u.size() - 1, 2);
    SubsetMask zu{u.n, z->bits & u.bits};
    Rational acc = 0;
    for (int v : zu.elements()) acc += claim(u, zu.size(), v, sentinel_partner(m, v));
    return acc / Rational(zu.size());
}

std::vector<std::vector<SubsetMask>> build_all_tks(int n) {
    std::vector<std::vector<SubsetMask>> tks;
    for (int k = 1; k <= n / 2; ++k) tks.push_back(build_Tk(n, k));
    return tks;
}

Factorization match_factorization(const Graph& g,
                                  const std::vector<std::vector<SubsetMask>>& tks) {
    g.validate();
    int n = g.n;
    if ((int)tks.size() < n / 2)
        throw std::invalid_argument("match_factorization: need T_k for every k <= n/2");

    SlackMatrix s = slack_match(g);
    auto cols = matchings(g);

    // Least-index compatible set per matching; verifies the cover property.
    auto compatible = [](const SubsetMask& x, const Matching& m) {
        for (const Edge& e : m.edges)
            if (x.contains(e.u) == x.contains(e.v)) return false;
        return true;
    };
    std::vector<int> least_j(cols.size(), -1);  // 0-based index into tks[k-1]
    for (std::size_t mi = 0; mi < cols.size(); ++mi) {
        int k = cols[mi].size();
        if (k == 0) continue;
        for (std::size_t j = 0; j < tks[k - 1].size(); ++j)
            if (compatible(tks[k - 1][j], cols[mi])) {
                least_j[mi] = (int)j;
                break;
            }
        if (least_j[mi] < 0)
            throw std::invalid_argument("match_factorization: matching " + cols[mi].label() +
                                        " is compatible with no set of T_" + std::to_string(k));
    }

    // Odd-set rows, rebuilt in the same canonical order slack_match uses.
    auto has_induced_edge = [&](const SubsetMask& u) {
        for (const Edge& e : g.edges)
            if (u.contains(e.u) && u.contains(e.v)) return true;
        return false;
    };
    std::vector<SubsetMask> oddsets;
    std::vector<std::size_t> oddset_rows;
    for (const auto& u : subsets(n, SubsetFilter::OddAtLeast3))
        if (has_induced_edge(u)) oddsets.push_back(u);
    for (std::size_t r = 0; r < s.row_kinds.size(); ++r)
        if (s.row_kinds[r] == RowKind::OddSet) oddset_rows.push_back(r);
    if (oddset_rows.size() != oddsets.size())
        throw std::logic_error("match_factorization: odd-set row mismatch");
    for (std::size_t i = 0; i < oddsets.size(); ++i)
        if (s.matrix.row_labels()[oddset_rows[i]] != oddsets[i].label())
            throw std::logic_error("match_factorization: odd-set row order mismatch");

    struct PathSpec {
        std::string label;
        int kind;  // 0=edge, 1=vertex, 2=stop, 3=pair
        std::size_t edge_index = 0;
        int vertex = 0;
        int k = 0, j = 0;  // j is 0-based into tks[k-1]; stop:0:0 uses k=0
        int u = 0, uprime = 0;
    };
    std::vector<PathSpec> paths;
    for (std::size_t ei = 0; ei < g.edges.size(); ++ei)
        paths.push_back({"e:" + g.edges[ei].label(), 0, ei, 0, 0, 0, 0, 0});
    for (int v = 1; v <= n; ++v)
        paths.push_back({"v:" + std::to_string(v), 1, 0, v, 0, 0, 0, 0});
    paths.push_back({"stop:0:0", 2, 0, 0, 0, 0, 0, 0});
    for (int k = 1; k <= n / 2; ++k) {
        for (std::size_t j = 0; j < tks[k - 1].size(); ++j) {
            paths.push_back({"stop:" + std::to_string(k) + ":" + std::to_string(j + 1), 2, 0, 0,
                             k, (int)j, 0, 0});
            for (int u = 1; u <= n; ++u)
                for (int up = 1; up <= n; ++up) {
                    if (up != u && !g.has_edge(u, up)) continue;  // Bob can never send it
                    paths.push_back({"pair:" + std::to_string(k) + ":" + std::to_string(j + 1) +
                                         ":" + std::to_string(u) + ":" + std::to_string(up),
                                     3, 0, 0, k, (int)j, u, up});
                }
        }
    }

    // Alice-side entry for slack row r and path gamma.
    auto a_entry = [&](std::size_t r, const PathSpec& ps) -> Rational {
        RowKind kind = s.row_kinds[r];
        if (ps.kind == 0) return kind == RowKind::Edge && r == ps.edge_index ? 1 : 0;
        if (ps.kind == 1)
            return kind == RowKind::Vertex &&
                           s.matrix.row_labels()[r] == vertex_row_label(ps.vertex)
                       ? 1
                       : 0;
        if (kind != RowKind::OddSet) return 0;
        std::size_t oi = std::lower_bound(oddset_rows.begin(), oddset_rows.end(), r) -
                         oddset_rows.begin();
        const SubsetMask& u_set = oddsets[oi];
        if (ps.kind == 2) {
            if (ps.k == 0) return Rational(u_set.size() - 1, 2);
            return select_Z(u_set, tks[ps.k - 1][ps.j]) ? Rational(0)
                                                        : Rational(u_set.size() - 1, 2);
        }
        auto z = select_Z(u_set, tks[ps.k - 1][ps.j]);
        if (!z) return 0;
        SubsetMask zu{n, z->bits & u_set.bits};
        if (!zu.contains(ps.u)) return 0;
        return claim(u_set, zu.size(), ps.u, ps.uprime) / Rational(zu.size());
    };

    // Bob-side entry for path gamma and matching column.
    auto b_entry = [&](const PathSpec& ps, std::size_t mi) -> Rational {
        const Matching& m = cols[mi];
        switch (ps.kind) {
            case 0: {
                const Edge& e = g.edges[ps.edge_index];
                return std::binary_search(m.edges.begin(), m.edges.end(), e) ? 1 : 0;
            }
            case 1:
                return m.covers(ps.vertex) ? 0 : 1;
            case 2:
                if (ps.k == 0) return m.size() == 0 ? 1 : 0;
                return m.size() == ps.k && least_j[mi] == ps.j ? 1 : 0;
            default:
                if (m.size() != ps.k || least_j[mi] != ps.j) return 0;
                return sentinel_partner(m, ps.u) == ps.uprime ? 1 : 0;
        }
    };

    // Assemble, then drop paths whose A column or B row is all-zero.
    std::vector<std::vector<Rational>> a_cols, b_rows;
    std::vector<std::string> gamma;
    for (const PathSpec& ps : paths) {
        std::vector<Rational> ac(s.matrix.n_rows()), br(cols.size());
        bool a_pos = false, b_pos = false;
        for (std::size_t r = 0; r < s.matrix.n_rows(); ++r) {
            ac[r] = a_entry(r, ps);
            if (ac[r].is_negative())
                throw std::logic_error("match_factorization: negative A entry");
            a_pos = a_pos || !ac[r].is_zero();
        }
        if (!a_pos) continue;
        for (std::size_t mi = 0; mi < cols.size(); ++mi) {
            br[mi] = b_entry(ps, mi);
            b_pos = b_pos || !br[mi].is_zero();
        }
        if (!b_pos) continue;
        gamma.push_back(ps.label);
        a_cols.push_back(std::move(ac));
        b_rows.push_back(std::move(br));
    }

    RatMatrix a(s.matrix.row_labels(), gamma);
    RatMatrix b(gamma, s.matrix.col_labels());
    for (std::size_t gidx = 0; gidx < gamma.size(); ++gidx) {
        for (std::size_t r = 0; r < a.n_rows(); ++r) a.set(r, gidx, a_cols[gidx][r]);
        for (std::size_t c = 0; c < b.n_cols(); ++c) b.set(gidx, c, b_rows[gidx][c]);
    }
    return {std::move(a), std::move(b), std::move(gamma)};
}

MatchWidthReport match_width_report(const Graph& g,
                                    const std::vector<std::vector<SubsetMask>>& tks) {
    Factorization f = match_factorization(g, tks);
    int n = g.n;
    // Under-approximate ln(n) so that `within` implies the true bound.
    Rational ln_low = ln_lower_bound((unsigned)n, Rational(1, 1000000));
    Rational pw = 1;
    for (int i = 0; i < n; ++i) pw *= Rational(3, 2);
    Rational bound = Rational((long)n * n * n) * ln_low * pw;
    MatchWidthReport rep;
    rep.width = f.width();
    rep.bound = bound;
    rep.within = Rational((long)rep.width) <= bound;
    return rep;
}

}  // namespace liftlab
