#include "liftlab/sortnet.hpp"

#include <algorithm>
#include <istream>
#include <sstream>
#include <stdexcept>

namespace liftlab {

void ComparatorSeq::validate() const {
    if (n < 1) throw std::invalid_argument("ComparatorSeq: need n >= 1");
    for (const Comparator& c : comps)
        if (c.i < 1 || c.i >= c.j || c.j > n)
            throw std::invalid_argument("ComparatorSeq: comparator (" + std::to_string(c.i) +
                                        "," + std::to_string(c.j) + ") out of range for n=" +
                                        std::to_string(n));
}

std::vector<Rational> apply_network(const ComparatorSeq& seq, std::vector<Rational> x,
                                    Direction dir) {
    seq.validate();
    if ((int)x.size() != seq.n)
        throw std::invalid_argument("apply_network: vector length " + std::to_string(x.size()) +
                                    " does not match n=" + std::to_string(seq.n));
    for (const Comparator& c : seq.comps) {
        Rational& a = x[c.i - 1];
        Rational& b = x[c.j - 1];
        bool swap = dir == Direction::Forward ? (a > b) : (a < b);
        if (swap) std::swap(a, b);
    }
    return x;
}

std::uint32_t apply_network_mask(const ComparatorSeq& seq, std::uint32_t mask, Direction dir) {
    for (const Comparator& c : seq.comps) {
        std::uint32_t bi = (mask >> (c.i - 1)) & 1u;
        std::uint32_t bj = (mask >> (c.j - 1)) & 1u;
        std::uint32_t lo = bi & bj, hi = bi | bj;  // min, max
        std::uint32_t at_i = dir == Direction::Forward ? lo : hi;
        std::uint32_t at_j = dir == Direction::Forward ? hi : lo;
        mask &= ~((1u << (c.i - 1)) | (1u << (c.j - 1)));
        mask |= (at_i << (c.i - 1)) | (at_j << (c.j - 1));
    }
    return mask;
}

bool is_sorting_network(const ComparatorSeq& seq, Direction dir) {
    seq.validate();
    if (seq.n > 24) throw std::invalid_argument("is_sorting_network: n <= 24");
    int n = seq.n;
    std::uint64_t total = 1ull << n;
    for (std::uint64_t m = 0; m < total; ++m) {
        auto mask = (std::uint32_t)m;
        int k = __builtin_popcount(mask);
        // Forward target: ones on the top k positions; reverse: bottom k.
        std::uint32_t target = dir == Direction::Forward
                                   ? (k == 0 ? 0u : (((1u << k) - 1) << (n - k)))
                                   : (k == 0 ? 0u : ((1u << k) - 1));
        if (apply_network_mask(seq, mask, dir) != target) return false;
    }
    return true;
}

bool duality_check(const ComparatorSeq& seq) {
    seq.validate();
    if (seq.n > 20) throw std::invalid_argument("duality_check: n <= 20");
    bool fwd = is_sorting_network(seq, Direction::Forward);
    bool rev = is_sorting_network(seq, Direction::Reverse);
    if (fwd != rev) return false;
    std::uint32_t full = (1u << seq.n) - 1;
    for (std::uint32_t m = 0; m <= full; ++m) {
        std::uint32_t lhs = apply_network_mask(seq, m ^ full, Direction::Reverse);
        std::uint32_t rhs = apply_network_mask(seq, m, Direction::Forward) ^ full;
        if (lhs != rhs) return false;
    }
    return true;
}

namespace {

// sigma+_{i,j} on a permutation: swap the words at positions i,j when out
// of order (so that sigma(i) < sigma(j) afterwards).
Perm forward_step(const Perm& sigma, int i, int j) {
    Perm out = sigma;
    if (out.word[i - 1] > out.word[j - 1]) std::swap(out.word[i - 1], out.word[j - 1]);
    return out;
}

// sigma-_{i,j} on a subset: move the element indicator so the 1 sits at i
// (swap exactly when j in J, i not in J).
SubsetMask reverse_step(const SubsetMask& j_set, int i, int j) {
    SubsetMask out = j_set;
    if (j_set.contains(j) && !j_set.contains(i)) {
        out.bits &= ~(1u << (j - 1));
        out.bits |= 1u << (i - 1);
    }
    return out;
}

long subset_weight(const Perm& sigma, const SubsetMask& j_set) {
    long s = 0;
    for (int e : j_set.elements()) s += sigma.apply(e);
    return s;
}

}  // namespace

Rational delta(int i, int j, const Perm& sigma, const SubsetMask& big_j) {
    int n = big_j.n;
    if (!(1 <= i && i < j && j <= n)) throw std::invalid_argument("delta: need 1 <= i < j <= n");
    if (sigma.n() != n) throw std::invalid_argument("delta: sigma/J size mismatch");

    long definitional =
        subset_weight(sigma, big_j) - subset_weight(forward_step(sigma, i, j),
                                                    reverse_step(big_j, i, j));

    long closed = 0;
    bool i_in = big_j.contains(i), j_in = big_j.contains(j);
    if (j_in && !i_in) closed = std::max(0, sigma.apply(j) - sigma.apply(i));
    if (i_in && !j_in) closed = std::max(0, sigma.apply(i) - sigma.apply(j));

    if (definitional != closed)
        throw std::logic_error("delta: definitional and closed forms disagree");
    return Rational(definitional);
}

JTrace trace(const ComparatorSeq& seq, const SubsetMask& j0) {
    seq.validate();
    if (j0.n != seq.n) throw std::invalid_argument("trace: subset size mismatch");
    JTrace t;
    t.sets.push_back(j0);
    for (const Comparator& c : seq.comps) {
        const SubsetMask& cur = t.sets.back();
        int eps = 0;
        if (cur.contains(c.j) && !cur.contains(c.i)) eps = 1;
        if (cur.contains(c.i) && !cur.contains(c.j)) eps = -1;
        t.colors.push_back(eps);
        (eps == 0 ? t.count_zero : (eps == 1 ? t.count_plus : t.count_minus))++;
        t.sets.push_back(reverse_step(cur, c.i, c.j));
    }
    return t;
}

SigmaTrace trace_sigma(const ComparatorSeq& seq, const Perm& sigma) {
    seq.validate();
    if (sigma.n() != seq.n) throw std::invalid_argument("trace_sigma: permutation size mismatch");
    SigmaTrace t;
    t.perms.push_back(sigma);
    for (const Comparator& c : seq.comps) {
        const Perm& cur = t.perms.back();
        t.w.push_back(cur.apply(c.j) - cur.apply(c.i));
        t.perms.push_back(forward_step(cur, c.i, c.j));
    }
    return t;
}

ComparatorSeq generate(NetworkKind kind, int n) {
    if (n < 2) throw std::invalid_argument("generate: need n >= 2");
    ComparatorSeq seq;
    seq.n = n;
    switch (kind) {
        case NetworkKind::Quadratic:
            for (int i = 1; i <= n - 1; ++i)
                for (int j = n; j >= i + 1; --j) seq.comps.push_back({i, j});
            break;
        case NetworkKind::OddEvenTransposition:
            for (int round = 0; round < n; ++round)
                for (int i = (round % 2 == 0) ? 1 : 2; i + 1 <= n; i += 2)
                    seq.comps.push_back({i, i + 1});
            break;
        case NetworkKind::Batcher:
            // Iterative odd-even mergesort, valid for any n (not just powers
            // of two); indices below are 0-based until pushed.
            for (int p = 1; p < n; p <<= 1)
                for (int k = p; k >= 1; k >>= 1)
                    for (int j = k % p; j + k < n; j += 2 * k)
                        for (int i = 0; i < k && i + j + k < n; ++i)
                            if ((i + j) / (2 * p) == (i + j + k) / (2 * p))
                                seq.comps.push_back({i + j + 1, i + j + k + 1});
            break;
    }
    return seq;
}

std::size_t quadratic_position(int n, int i, int j) {
    if (!(1 <= i && i < j && j <= n)) throw std::invalid_argument("quadratic_position: bad pair");
    // l(i,j) = i(n-i) + i(i+1)/2 - j
    long l = (long)i * (n - i) + (long)i * (i + 1) / 2 - j;
    return (std::size_t)l;
}

namespace {

ComparatorSeq subsequence(const ComparatorSeq& seq, const std::vector<std::size_t>& keep) {
    ComparatorSeq out;
    out.n = seq.n;
    for (std::size_t idx : keep) out.comps.push_back(seq.comps[idx]);
    return out;
}

}  // namespace

MinimalityResult minimality(const ComparatorSeq& seq, MinimalityMode mode) {
    seq.validate();
    if (!is_sorting_network(seq, Direction::Forward))
        throw std::invalid_argument("minimality: sequence is not a sorting network");
    std::size_t q = seq.size();

    if (mode == MinimalityMode::OneRemoval) {
        for (std::size_t d = 0; d < q; ++d) {
            std::vector<std::size_t> keep;
            for (std::size_t i = 0; i < q; ++i)
                if (i != d) keep.push_back(i);
            if (is_sorting_network(subsequence(seq, keep), Direction::Forward))
                return {false, keep};
        }
        return {true, {}};
    }

    if (q > 22) throw std::invalid_argument("minimality: exhaustive mode requires q <= 22");
    std::uint32_t full = (q == 0) ? 0 : ((q == 32) ? ~0u : ((1u << q) - 1));
    for (std::uint32_t m = 0; m < full; ++m) {
        std::vector<std::size_t> keep;
        for (std::size_t i = 0; i < q; ++i)
            if ((m >> i) & 1u) keep.push_back(i);
        if (is_sorting_network(subsequence(seq, keep), Direction::Forward))
            return {false, keep};
    }
    return {true, {}};
}

ComparatorSeq network_from_text(std::istream& in) {
    ComparatorSeq seq;
    std::size_t q = 0;
    if (!(in >> seq.n >> q)) throw std::invalid_argument("network file: bad header line");
    for (std::size_t l = 0; l < q; ++l) {
        Comparator c;
        if (!(in >> c.i >> c.j))
            throw std::invalid_argument("network file: expected " + std::to_string(q) +
                                        " comparator lines");
        seq.comps.push_back(c);
    }
    seq.validate();
    return seq;
}

std::string network_to_text(const ComparatorSeq& seq) {
    std::ostringstream os;
    os << seq.n << " " << seq.size() << "\n";
    for (const Comparator& c : seq.comps) os << c.i << " " << c.j << "\n";
    return os.str();
}

}  // namespace liftlab
