#include "liftlab/protocol.hpp"

#include <algorithm>
#include <functional>
#include <set>
#include <stdexcept>

namespace liftlab {

namespace {

void check_dist(const Dist& d, const std::set<std::string>& nodes, const std::string& where) {
    Rational sum = 0;
    for (const auto& [node, prob] : d) {
        if (!nodes.count(node))
            throw std::invalid_argument("protocol: " + where + " refers to unknown node '" +
                                        node + "'");
        if (prob <= Rational(0))
            throw std::invalid_argument("protocol: " + where +
                                        " stores a non-positive probability");
        sum += prob;
    }
    if (sum != Rational(1))
        throw std::invalid_argument("protocol: " + where + " sums to " + sum.str() +
                                    ", expected 1");
}

std::string path_label(const std::vector<std::string>& nodes) {
    if (nodes.size() == 1) return nodes.front();
    std::string s = "(";
    for (std::size_t i = 0; i < nodes.size(); ++i) {
        if (i) s += ',';
        s += nodes[i];
    }
    return s + ")";
}

// Deterministic exact sampling: node v is selected when the uniform draw
// u/2^64 falls below the running cumulative probability.
const std::string& sample_node(const Dist& d, SplitMix64& rng) {
    std::uint64_t u = rng.next();
    Rational acc = 0;
    const std::string* last = nullptr;
    for (const auto& [node, prob] : d) {
        acc += prob;
        last = &node;
        const mpz_class& num = acc.num();
        const mpz_class& den = acc.den();
        if (num.fits_ulong_p() && den.fits_ulong_p() && sizeof(unsigned long) == 8) {
            unsigned __int128 lhs = (unsigned __int128)u * den.get_ui();
            unsigned __int128 rhs = (unsigned __int128)num.get_ui() << 64;
            if (lhs < rhs) return node;
        } else {
            mpz_class lhs = den * u;
            mpz_class rhs = num;
            rhs <<= 64;
            if (lhs < rhs) return node;
        }
    }
    if (!last) throw std::logic_error("sample_node: empty distribution");
    return *last;
}

}  // namespace

void MarkovianProtocol::validate() const {
    int k = bp.rounds();
    if (k < 1) throw std::invalid_argument("protocol: need at least one layer");
    for (const auto& layer : bp.layers)
        if (layer.empty()) throw std::invalid_argument("protocol: empty layer");
    if ((int)kernels.size() != k - 1)
        throw std::invalid_argument("protocol: expected " + std::to_string(k - 1) + " kernels");
    bool even = k % 2 == 0;
    if ((claimer == first_speaker) != even)
        throw std::invalid_argument(
            "protocol: claimer inconsistent with first speaker and round parity");
    if (x_domain.empty() || y_domain.empty())
        throw std::invalid_argument("protocol: empty input domain");

    std::vector<std::set<std::string>> layer_nodes;
    for (const auto& layer : bp.layers) {
        std::set<std::string> s(layer.begin(), layer.end());
        if (s.size() != layer.size())
            throw std::invalid_argument("protocol: duplicate node label in a layer");
        layer_nodes.push_back(std::move(s));
    }

    const auto& first_inputs = inputs_of(first_speaker);
    for (const auto& z : first_inputs) {
        auto it = init.find(z);
        if (it == init.end())
            throw std::invalid_argument("protocol: no initial distribution for input '" + z +
                                        "'");
        check_dist(it->second, layer_nodes[0], "initial distribution of '" + z + "'");
    }

    for (std::size_t j = 0; j < kernels.size(); ++j) {
        for (const auto& [key, dist] : kernels[j]) {
            if (!layer_nodes[j].count(key.second))
                throw std::invalid_argument("protocol: kernel " + std::to_string(j) +
                                            " keyed on unknown source node '" + key.second +
                                            "'");
            check_dist(dist, layer_nodes[j + 1],
                       "kernel " + std::to_string(j) + " at ('" + key.first + "','" +
                           key.second + "')");
        }
    }

    for (const auto& [key, value] : output) {
        if (!layer_nodes.back().count(key.second))
            throw std::invalid_argument("protocol: output keyed on unknown final node '" +
                                        key.second + "'");
        if (value.is_negative())
            throw std::invalid_argument("protocol: negative output at ('" + key.first + "','" +
                                        key.second + "')");
    }
}

namespace {

// Forward DP from a starting distribution over layer `from`; returns the
// expected output. Throws when a positively reached node has no transition
// or no output entry.
Rational expectation_from(const MarkovianProtocol& p, const std::string& x,
                          const std::string& y, Dist cur, std::size_t from) {
    for (std::size_t j = from; j < p.kernels.size(); ++j) {
        const std::string& z = p.kernel_owner(j) == Party::A ? x : y;
        Dist next;
        for (const auto& [node, prob] : cur) {
            if (prob.is_zero()) continue;
            auto it = p.kernels[j].find({z, node});
            if (it == p.kernels[j].end())
                throw std::runtime_error("protocol ill-formed: missing kernel " +
                                         std::to_string(j) + " distribution at ('" + z + "','" +
                                         node + "')");
            for (const auto& [to, q] : it->second) next[to] += prob * q;
        }
        cur = std::move(next);
    }
    const std::string& zc = p.claimer == Party::A ? x : y;
    Rational acc = 0;
    for (const auto& [node, prob] : cur) {
        if (prob.is_zero()) continue;
        auto it = p.output.find({zc, node});
        if (it == p.output.end())
            throw std::runtime_error("protocol ill-formed: missing output at ('" + zc + "','" +
                                     node + "')");
        acc += prob * it->second;
    }
    return acc;
}

}  // namespace

Rational exact_expectation(const MarkovianProtocol& p, const std::string& x,
                           const std::string& y) {
    const std::string& zf = p.first_speaker == Party::A ? x : y;
    auto it = p.init.find(zf);
    if (it == p.init.end())
        throw std::runtime_error("protocol ill-formed: no initial distribution for '" + zf +
                                 "'");
    return expectation_from(p, x, y, it->second, 0);
}

Rational conditional_expectation(const MarkovianProtocol& p, const std::string& x,
                                 const std::string& y,
                                 const std::vector<std::string>& prefix) {
    if (prefix.empty() || (int)prefix.size() > p.bp.rounds())
        throw std::invalid_argument("conditional_expectation: bad prefix length");
    Dist point{{prefix.back(), Rational(1)}};
    return expectation_from(p, x, y, std::move(point), prefix.size() - 1);
}

CorrectnessReport check_correct(const MarkovianProtocol& p, const SlackMatrix& s) {
    p.validate();
    if (p.x_domain != s.matrix.row_labels() || p.y_domain != s.matrix.col_labels())
        throw std::invalid_argument("check_correct: protocol domains do not match slack labels");
    CorrectnessReport rep;
    for (std::size_t r = 0; r < s.matrix.n_rows(); ++r) {
        for (std::size_t c = 0; c < s.matrix.n_cols(); ++c) {
            Rational got = exact_expectation(p, p.x_domain[r], p.y_domain[c]);
            const Rational& want = s.matrix.at(r, c);
            if (got != want) {
                rep.correct = false;
                rep.x = p.x_domain[r];
                rep.y = p.y_domain[c];
                rep.got = got;
                rep.want = want;
                return rep;
            }
        }
    }
    rep.correct = true;
    return rep;
}

namespace {

constexpr std::size_t kMaxPaths = 1u << 22;

// Per-path side products: for each path gamma, Alice's factors as a
// function of x and Bob's factors as a function of y.
struct PathSides {
    std::vector<std::string> labels;
    std::vector<std::vector<Rational>> a_side;  // [path][x index]
    std::vector<std::vector<Rational>> b_side;  // [path][y index]
};

Rational factor_or_zero(const std::map<std::pair<std::string, std::string>, Dist>& kernel,
                        const std::string& z, const std::string& from,
                        const std::string& to) {
    auto it = kernel.find({z, from});
    if (it == kernel.end()) return 0;
    auto jt = it->second.find(to);
    return jt == it->second.end() ? Rational(0) : jt->second;
}

PathSides path_sides(const MarkovianProtocol& p) {
    p.validate();
    std::size_t total = 1;
    for (const auto& layer : p.bp.layers) {
        total *= layer.size();
        if (total > kMaxPaths)
            throw std::invalid_argument("protocol: too many message paths to enumerate");
    }

    PathSides out;
    std::vector<std::string> nodes;
    std::function<void()> rec = [&]() {
        std::size_t depth = nodes.size();
        if ((int)depth == p.bp.rounds()) {
            std::vector<Rational> a(p.x_domain.size(), Rational(1));
            std::vector<Rational> b(p.y_domain.size(), Rational(1));
            auto apply = [&](Party owner, auto&& factor_fn) {
                if (owner == Party::A) {
                    for (std::size_t i = 0; i < p.x_domain.size(); ++i) {
                        if (a[i].is_zero()) continue;
                        a[i] *= factor_fn(p.x_domain[i]);
                    }
                } else {
                    for (std::size_t i = 0; i < p.y_domain.size(); ++i) {
                        if (b[i].is_zero()) continue;
                        b[i] *= factor_fn(p.y_domain[i]);
                    }
                }
            };
            apply(p.first_speaker, [&](const std::string& z) -> Rational {
                auto it = p.init.find(z);
                if (it == p.init.end()) return 0;
                auto jt = it->second.find(nodes[0]);
                return jt == it->second.end() ? Rational(0) : jt->second;
            });
            for (std::size_t j = 0; j < p.kernels.size(); ++j)
                apply(p.kernel_owner(j), [&](const std::string& z) {
                    return factor_or_zero(p.kernels[j], z, nodes[j], nodes[j + 1]);
                });
            apply(p.claimer, [&](const std::string& z) -> Rational {
                auto it = p.output.find({z, nodes.back()});
                return it == p.output.end() ? Rational(0) : it->second;
            });
            bool a_pos = std::any_of(a.begin(), a.end(),
                                     [](const Rational& r) { return !r.is_zero(); });
            bool b_pos = std::any_of(b.begin(), b.end(),
                                     [](const Rational& r) { return !r.is_zero(); });
            if (a_pos && b_pos) {
                out.labels.push_back(path_label(nodes));
                out.a_side.push_back(std::move(a));
                out.b_side.push_back(std::move(b));
            }
            return;
        }
        for (const auto& node : p.bp.layers[depth]) {
            nodes.push_back(node);
            rec();
            nodes.pop_back();
        }
    };
    rec();
    return out;
}

}  // namespace

GammaResult gamma_width(const MarkovianProtocol& p) {
    PathSides sides = path_sides(p);
    return {std::move(sides.labels), sides.a_side.size()};
}

Factorization compile_factorization(const MarkovianProtocol& p) {
    PathSides sides = path_sides(p);
    RatMatrix a(p.x_domain, sides.labels);
    RatMatrix b(sides.labels, p.y_domain);
    for (std::size_t g = 0; g < sides.labels.size(); ++g) {
        for (std::size_t i = 0; i < p.x_domain.size(); ++i) a.set(i, g, sides.a_side[g][i]);
        for (std::size_t j = 0; j < p.y_domain.size(); ++j) b.set(g, j, sides.b_side[g][j]);
    }
    return {std::move(a), std::move(b), std::move(sides.labels)};
}

MarkovianProtocol factorization_to_protocol(const RatMatrix& a, const RatMatrix& b) {
    if (!a.all_nonnegative() || !b.all_nonnegative())
        throw std::invalid_argument("factorization_to_protocol: negative entry");
    if (a.n_cols() != b.n_rows())
        throw std::invalid_argument("factorization_to_protocol: inner dimensions disagree");

    Rational max_row_sum = 0;
    std::vector<Rational> row_sums(a.n_rows(), Rational(0));
    for (std::size_t r = 0; r < a.n_rows(); ++r) {
        for (std::size_t k = 0; k < a.n_cols(); ++k) row_sums[r] += a.at(r, k);
        max_row_sum = max(max_row_sum, row_sums[r]);
    }
    // lambda scales A so the largest row sum is exactly 1; a zero A keeps
    // everything on the sink.
    Rational lambda = max_row_sum.is_zero() ? Rational(1) : Rational(1) / max_row_sum;

    std::string sink = "\xE2\x8A\xA5";  // U+22A5
    while (a.has_col(sink)) sink += "'";

    MarkovianProtocol p;
    p.first_speaker = Party::A;
    p.claimer = Party::B;
    p.x_domain = a.row_labels();
    p.y_domain = b.col_labels();
    std::vector<std::string> layer = a.col_labels();
    layer.push_back(sink);
    p.bp.layers = {layer};

    for (std::size_t r = 0; r < a.n_rows(); ++r) {
        Dist d;
        for (std::size_t k = 0; k < a.n_cols(); ++k) {
            Rational v = lambda * a.at(r, k);
            if (!v.is_zero()) d[a.col_labels()[k]] = v;
        }
        Rational rem = Rational(1) - lambda * row_sums[r];
        if (!rem.is_zero()) d[sink] = rem;
        p.init[a.row_labels()[r]] = std::move(d);
    }
    for (std::size_t c = 0; c < b.n_cols(); ++c) {
        const std::string& y = b.col_labels()[c];
        for (std::size_t k = 0; k < b.n_rows(); ++k)
            p.output[{y, a.col_labels()[k]}] = b.at(k, c) / lambda;
        p.output[{y, sink}] = 0;
    }
    p.validate();
    return p;
}

SimResult simulate(const MarkovianProtocol& p, const std::string& x, const std::string& y,
                   long long trials, std::uint64_t seed) {
    if (trials < 1) throw std::invalid_argument("simulate: trials must be >= 1");
    p.validate();
    const std::string& zf = p.first_speaker == Party::A ? x : y;
    const std::string& zc = p.claimer == Party::A ? x : y;
    auto init_it = p.init.find(zf);
    if (init_it == p.init.end())
        throw std::runtime_error("protocol ill-formed: no initial distribution for '" + zf +
                                 "'");

    Rational sum = 0, sum_sq = 0;
    long long nonneg = 0;
    for (long long t = 0; t < trials; ++t) {
        SplitMix64 rng = SplitMix64::for_trial(seed, (std::uint64_t)t);
        std::string node = sample_node(init_it->second, rng);
        for (std::size_t j = 0; j < p.kernels.size(); ++j) {
            const std::string& z = p.kernel_owner(j) == Party::A ? x : y;
            auto it = p.kernels[j].find({z, node});
            if (it == p.kernels[j].end())
                throw std::runtime_error("protocol ill-formed: missing kernel distribution at ('" +
                                         z + "','" + node + "')");
            node = sample_node(it->second, rng);
        }
        auto ot = p.output.find({zc, node});
        if (ot == p.output.end())
            throw std::runtime_error("protocol ill-formed: missing output at ('" + zc + "','" +
                                     node + "')");
        const Rational& w = ot->second;
        if (!w.is_negative()) ++nonneg;
        sum += w;
        sum_sq += w * w;
    }
    Rational n((long)trials);
    return {sum / n, sum_sq / n, nonneg};
}

}  // namespace liftlab
