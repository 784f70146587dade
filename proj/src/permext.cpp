#include "liftlab/permext.hpp"

#include <algorithm>
#include <stdexcept>

namespace liftlab {

std::string path_col_label(std::size_t l, int eps) {
    const char* e = eps > 0 ? "+" : (eps < 0 ? "-" : "0");
    return "(" + std::to_string(l) + "," + e + ")";
}

RatMatrix perm_factor_a(const ComparatorSeq& seq) {
    if (!is_sorting_network(seq, Direction::Forward))
        throw std::invalid_argument("perm_factor_a: not a sorting network");
    int n = seq.n;
    std::size_t q = seq.size();
    auto rows = subsets(n, SubsetFilter::ProperNonEmpty);
    std::vector<std::string> row_labels, col_labels;
    for (const auto& j : rows) row_labels.push_back(j.label());
    for (std::size_t l = 0; l < q; ++l) {
        col_labels.push_back(path_col_label(l, +1));
        col_labels.push_back(path_col_label(l, -1));
    }
    RatMatrix a(row_labels, col_labels);
    for (std::size_t r = 0; r < rows.size(); ++r) {
        JTrace t = trace(seq, rows[r]);
        for (std::size_t l = 0; l < q; ++l) {
            if (t.colors[l] == 1) a.set(r, 2 * l, 1);
            if (t.colors[l] == -1) a.set(r, 2 * l + 1, 1);
        }
    }
    return a;
}

PermFactorization perm_factorization(const ComparatorSeq& seq) {
    RatMatrix a = perm_factor_a(seq);
    std::size_t q = seq.size();
    auto sigmas = all_perms(seq.n);
    std::vector<std::string> sigma_labels;
    for (const auto& s : sigmas) sigma_labels.push_back(s.label());

    RatMatrix b(a.col_labels(), sigma_labels);
    for (std::size_t c = 0; c < sigmas.size(); ++c) {
        SigmaTrace t = trace_sigma(seq, sigmas[c]);
        for (std::size_t l = 0; l < q; ++l) {
            b.set(2 * l, c, Rational(std::max(0, t.w[l])));
            b.set(2 * l + 1, c, Rational(std::max(0, -t.w[l])));
        }
    }
    return {seq, std::move(a), std::move(b)};
}

MarkovianProtocol one_round_protocol(const ComparatorSeq& seq) {
    if (!is_sorting_network(seq, Direction::Forward))
        throw std::invalid_argument("one_round_protocol: not a sorting network");
    int n = seq.n;
    std::size_t q = seq.size();
    SlackMatrix s = slack_perm(n);
    auto rows = subsets(n, SubsetFilter::ProperNonEmpty);
    auto sigmas = all_perms(n);

    MarkovianProtocol p;
    p.first_speaker = Party::A;
    p.claimer = Party::B;
    p.x_domain = s.matrix.row_labels();
    p.y_domain = s.matrix.col_labels();

    std::vector<std::string> v1;
    for (std::size_t l = 0; l < q; ++l)
        for (int eps : {+1, 0, -1}) v1.push_back(path_col_label(l, eps));
    p.bp.layers = {v1};

    Rational inv_q(1, (long)q);
    for (const auto& j : rows) {
        JTrace t = trace(seq, j);
        Dist d;
        for (std::size_t l = 0; l < q; ++l) d[path_col_label(l, t.colors[l])] = inv_q;
        p.init[j.label()] = std::move(d);
    }
    for (const auto& sigma : sigmas) {
        SigmaTrace t = trace_sigma(seq, sigma);
        for (std::size_t l = 0; l < q; ++l) {
            p.output[{sigma.label(), path_col_label(l, +1)}] =
                Rational((long)q * std::max(0, t.w[l]));
            p.output[{sigma.label(), path_col_label(l, 0)}] = 0;
            p.output[{sigma.label(), path_col_label(l, -1)}] =
                Rational((long)q * std::max(0, -t.w[l]));
        }
    }
    p.validate();
    return p;
}

GoemansSystem goemans_build(const ComparatorSeq& seq) {
    if (!is_sorting_network(seq, Direction::Forward))
        throw std::invalid_argument("goemans_build: not a sorting network");
    return {seq};
}

bool GoemansSystem::is_feasible(const std::vector<Rational>& w) const {
    int n = seq.n;
    std::size_t q = seq.size();
    if (w.size() != ambient_dim())
        throw std::invalid_argument("GoemansSystem: point has wrong dimension");
    auto block = [&](std::size_t k, int coord) -> const Rational& {  // coord 1-based
        return w[k * n + coord - 1];
    };
    // y_q = x_id
    for (int c = 1; c <= n; ++c)
        if (block(q, c) != Rational(c)) return false;
    for (std::size_t k = 0; k < q; ++k) {
        int i = seq.comps[k].i, j = seq.comps[k].j;
        for (int c = 1; c <= n; ++c)
            if (c != i && c != j && block(k + 1, c) != block(k, c)) return false;
        if (block(k + 1, i) + block(k + 1, j) != block(k, i) + block(k, j)) return false;
        Rational next_gap = block(k + 1, j) - block(k + 1, i);
        Rational cur_gap = block(k, j) - block(k, i);
        if (next_gap - cur_gap < Rational(0)) return false;  // <y_{k+1} - y_k, theta> >= 0
        if (next_gap + cur_gap < Rational(0)) return false;  // <y_{k+1} + y_k, theta> >= 0
    }
    return true;
}

std::vector<Rational> lift_sigma(const ComparatorSeq& seq, const Perm& sigma) {
    if (sigma.n() != seq.n) throw std::invalid_argument("lift_sigma: size mismatch");
    std::vector<Rational> cur;
    for (int i = 1; i <= seq.n; ++i) cur.push_back(Rational(sigma.apply(i)));
    std::vector<Rational> out = cur;
    for (const Comparator& c : seq.comps) {
        if (cur[c.i - 1] > cur[c.j - 1]) std::swap(cur[c.i - 1], cur[c.j - 1]);
        out.insert(out.end(), cur.begin(), cur.end());
    }
    return out;
}

bool edmonds_membership(const std::vector<Rational>& x) {
    int n = (int)x.size();
    if (n < 1 || n > 12) throw std::invalid_argument("edmonds_membership: need 1 <= n <= 12");
    Rational total = 0;
    for (const auto& v : x) total += v;
    if (total != Rational((long)n * (n + 1) / 2)) return false;
    std::uint32_t full = (1u << n) - 1;
    for (std::uint32_t m = 1; m < full; ++m) {
        Rational s = 0;
        int k = __builtin_popcount(m);
        for (int i = 0; i < n; ++i)
            if ((m >> i) & 1u) s += x[i];
        if (s < Rational((long)k * (k + 1) / 2)) return false;
    }
    return true;
}

bool tilde_roundtrip(const ComparatorSeq& seq, const std::vector<Rational>& w) {
    GoemansSystem sys{seq};
    if (!sys.is_feasible(w))
        throw std::invalid_argument("tilde_roundtrip: point is not feasible for Q_n");
    int n = seq.n;
    std::size_t q = seq.size();

    // Compress: keep y_0, then only the two moving coordinates per step.
    std::vector<Rational> tilde(w.begin(), w.begin() + n);
    for (std::size_t k = 1; k <= q; ++k) {
        int i = seq.comps[k - 1].i, j = seq.comps[k - 1].j;
        tilde.push_back(w[k * (std::size_t)n + i - 1]);  // a_k
        tilde.push_back(w[k * (std::size_t)n + j - 1]);  // b_k
    }

    // Reconstruct via the z recursion and check the compressed constraints.
    std::vector<Rational> z(tilde.begin(), tilde.begin() + n);
    std::vector<Rational> rebuilt = z;
    for (std::size_t k = 1; k <= q; ++k) {
        int i = seq.comps[k - 1].i, j = seq.comps[k - 1].j;
        const Rational& a_k = tilde[n + 2 * (k - 1)];
        const Rational& b_k = tilde[n + 2 * (k - 1) + 1];
        Rational alpha = z[i - 1], beta = z[j - 1];
        if (a_k + b_k != alpha + beta) return false;
        if (b_k < alpha || b_k < beta) return false;  // b_k >= max(alpha, beta)
        z[i - 1] = a_k;
        z[j - 1] = b_k;
        rebuilt.insert(rebuilt.end(), z.begin(), z.end());
    }
    for (int c = 1; c <= n; ++c)
        if (z[c - 1] != Rational(c)) return false;  // z_q = x_id
    return rebuilt == w;
}

Rational mk_value(const std::vector<Rational>& y, int k) {
    if (k < 1 || k > (int)y.size()) throw std::invalid_argument("mk_value: bad k");
    std::vector<Rational> s = y;
    std::sort(s.begin(), s.end());
    Rational acc = 0;
    for (int i = 0; i < k; ++i) acc += s[i];
    return acc;
}

bool mk_monotone_along_lift(const ComparatorSeq& seq, const Perm& sigma) {
    std::vector<Rational> w = lift_sigma(seq, sigma);
    int n = seq.n;
    std::size_t q = seq.size();
    for (int k = 1; k <= n; ++k) {
        Rational prev;
        for (std::size_t b = 0; b <= q; ++b) {
            std::vector<Rational> y(w.begin() + b * n, w.begin() + (b + 1) * n);
            Rational cur = mk_value(y, k);
            if (b > 0 && cur > prev) return false;
            prev = cur;
        }
    }
    return true;
}

bool fooling_verify(const RatMatrix& m, const FoolingSet& f) {
    for (const auto& [r, c] : f.pairs)
        if (!(m.at(r, c) > Rational(0))) return false;
    for (std::size_t i = 0; i < f.pairs.size(); ++i)
        for (std::size_t j = i + 1; j < f.pairs.size(); ++j) {
            bool ij = m.at(f.pairs[i].first, f.pairs[j].second) > Rational(0);
            bool ji = m.at(f.pairs[j].first, f.pairs[i].second) > Rational(0);
            if (ij && ji) return false;
        }
    return true;
}

FoolingSet quadratic_fooling_set(int n) {
    ComparatorSeq seq = generate(NetworkKind::Quadratic, n);
    FoolingSet f;
    std::vector<std::pair<std::string, std::string>> minus_pairs;
    for (std::size_t l = 0; l < seq.size(); ++l) {
        int i = seq.comps[l].i, j = seq.comps[l].j;
        if (quadratic_position(n, i, j) != l)
            throw std::logic_error("quadratic_fooling_set: position formula mismatch");
        std::vector<int> plus_elems;
        for (int e = 1; e <= j; ++e)
            if (e != i) plus_elems.push_back(e);
        f.pairs.emplace_back(SubsetMask::of(n, plus_elems).label(), path_col_label(l, +1));

        std::vector<int> minus_elems;
        if (j < n) {
            for (int e = 1; e <= i - 1; ++e) minus_elems.push_back(e);
            minus_elems.push_back(j + 1);
        } else {
            for (int e = 1; e <= i; ++e) minus_elems.push_back(e);
        }
        minus_pairs.emplace_back(SubsetMask::of(n, minus_elems).label(), path_col_label(l, -1));
    }
    f.pairs.insert(f.pairs.end(), minus_pairs.begin(), minus_pairs.end());
    return f;
}

}  // namespace liftlab
