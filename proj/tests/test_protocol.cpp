#include <doctest.h>

#include <stdexcept>

#include "liftlab/protocol.hpp"
#include "liftlab/rng.hpp"
#include "liftlab/spt_protocol.hpp"

using namespace liftlab;

namespace {

// Two-input one-round protocol whose output is a constant c.
MarkovianProtocol constant_protocol(const Rational& c) {
    MarkovianProtocol p;
    p.first_speaker = Party::A;
    p.claimer = Party::B;
    p.x_domain = {"x0", "x1"};
    p.y_domain = {"y0", "y1"};
    p.bp.layers = {{"a", "b"}};
    for (const auto& x : p.x_domain) p.init[x] = {{"a", Rational(1, 2)}, {"b", Rational(1, 2)}};
    for (const auto& y : p.y_domain) {
        p.output[{y, "a"}] = c;
        p.output[{y, "b"}] = c;
    }
    return p;
}

RatMatrix oracle_product(const RatMatrix& a, const RatMatrix& b) {
    RatMatrix p(a.row_labels(), b.col_labels());
    for (std::size_t r = 0; r < a.n_rows(); ++r)
        for (std::size_t c = 0; c < b.n_cols(); ++c) {
            Rational acc = 0;
            for (std::size_t k = 0; k < a.n_cols(); ++k) acc += a.at(r, k) * b.at(k, c);
            p.set(r, c, acc);
        }
    return p;
}

std::vector<std::string> labels(const std::string& prefix, std::size_t count) {
    std::vector<std::string> out;
    for (std::size_t i = 0; i < count; ++i) out.push_back(prefix + std::to_string(i));
    return out;
}

RatMatrix random_nonneg(SplitMix64& rng, const std::string& rp, std::size_t rows,
                        const std::string& cp, std::size_t cols) {
    RatMatrix m(labels(rp, rows), labels(cp, cols));
    for (std::size_t r = 0; r < rows; ++r)
        for (std::size_t c = 0; c < cols; ++c)
            m.set(r, c, Rational((long)rng.next_below(7), (long)rng.next_below(5) + 1));
    return m;
}

}  // namespace

TEST_CASE("expectation of a constant protocol is the constant") {
    MarkovianProtocol p = constant_protocol(Rational(7, 3));
    p.validate();
    for (const auto& x : p.x_domain)
        for (const auto& y : p.y_domain)
            CHECK(exact_expectation(p, x, y) == Rational(7, 3));
}

TEST_CASE("protocol validation catches malformed inputs") {
    MarkovianProtocol p = constant_protocol(Rational(1));
    p.init["x0"] = {{"a", Rational(1, 3)}};  // does not sum to 1
    CHECK_THROWS_AS(p.validate(), std::invalid_argument);

    MarkovianProtocol q = constant_protocol(Rational(1));
    q.claimer = Party::A;  // one round, first speaker cannot claim
    CHECK_THROWS_AS(q.validate(), std::invalid_argument);

    MarkovianProtocol r = constant_protocol(Rational(1));
    r.output[{"y0", "a"}] = Rational(-1);
    CHECK_THROWS_AS(r.validate(), std::invalid_argument);

    MarkovianProtocol s = constant_protocol(Rational(1));
    s.init["x0"] = {{"zzz", Rational(1)}};  // unknown node
    CHECK_THROWS_AS(s.validate(), std::invalid_argument);
}

TEST_CASE("missing distribution under positive reach is an explicit error") {
    MarkovianProtocol p = constant_protocol(Rational(1));
    p.output.erase({"y0", "a"});
    CHECK_THROWS_AS(exact_expectation(p, "x0", "y0"), std::runtime_error);
    CHECK(exact_expectation(p, "x0", "y1") == Rational(1));
}

TEST_CASE("factorization_to_protocol: identity times swap") {
    RatMatrix a(labels("r", 2), labels("k", 2));
    a.set(0, 0, 1);
    a.set(1, 1, 1);
    RatMatrix b(labels("k", 2), labels("c", 2));
    b.set(0, 1, 1);
    b.set(1, 0, 1);
    MarkovianProtocol p = factorization_to_protocol(a, b);
    CHECK(exact_expectation(p, "r0", "c0") == Rational(0));
    CHECK(exact_expectation(p, "r0", "c1") == Rational(1));
    CHECK(exact_expectation(p, "r1", "c0") == Rational(1));
    CHECK(exact_expectation(p, "r1", "c1") == Rational(0));
    CHECK(gamma_width(p).width == 2);
}

TEST_CASE("factorization_to_protocol: rank one all-ones") {
    RatMatrix a(labels("r", 3), {"k0"});
    for (int r = 0; r < 3; ++r) a.set(r, 0, 1);
    RatMatrix b({"k0"}, labels("c", 4));
    for (int c = 0; c < 4; ++c) b.set(0, c, 1);
    MarkovianProtocol p = factorization_to_protocol(a, b);
    CHECK(gamma_width(p).width == 1);
    for (const auto& x : p.x_domain)
        for (const auto& y : p.y_domain)
            CHECK(exact_expectation(p, x, y) == Rational(1));
}

TEST_CASE("factorization_to_protocol of a zero matrix") {
    RatMatrix a(labels("r", 2), labels("k", 2));  // all zero
    RatMatrix b(labels("k", 2), labels("c", 2));
    b.set(0, 0, 5);
    MarkovianProtocol p = factorization_to_protocol(a, b);
    for (const auto& x : p.x_domain)
        for (const auto& y : p.y_domain)
            CHECK(exact_expectation(p, x, y) == Rational(0));
    CHECK(gamma_width(p).width == 0);
}

TEST_CASE("factorization_to_protocol rejects negative entries") {
    RatMatrix a({"r"}, {"k"});
    a.set(0, 0, Rational(-1));
    RatMatrix b({"k"}, {"c"});
    CHECK_THROWS_AS(factorization_to_protocol(a, b), std::invalid_argument);
}

TEST_CASE("factorization_to_protocol reproduces a random product exactly") {
    SplitMix64 rng(42);
    RatMatrix a = random_nonneg(rng, "r", 4, "k", 3);
    RatMatrix b = random_nonneg(rng, "k", 3, "c", 5);
    RatMatrix want = oracle_product(a, b);
    MarkovianProtocol p = factorization_to_protocol(a, b);
    for (std::size_t r = 0; r < 4; ++r)
        for (std::size_t c = 0; c < 5; ++c)
            CHECK(exact_expectation(p, a.row_labels()[r], b.col_labels()[c]) == want.at(r, c));
}

TEST_CASE("round trip: compile after convert equals the original product") {
    SplitMix64 rng(2024);
    for (int t = 0; t < 10; ++t) {
        std::size_t m = rng.next_below(5) + 1, k = rng.next_below(4) + 1,
                    n = rng.next_below(5) + 1;
        RatMatrix a = random_nonneg(rng, "r", m, "k", k);
        RatMatrix b = random_nonneg(rng, "k", k, "c", n);
        Factorization f = compile_factorization(factorization_to_protocol(a, b));
        CHECK(f.width() <= k);
        CHECK(mat_mul_eq(f.a, f.b, oracle_product(a, b)).equal);
    }
}

TEST_CASE("bob-first orientation: expectations and compiled split") {
    // One-round protocol with Bob speaking and Alice claiming: Bob sends k
    // with probability mu*B_{k,y}, Alice claims A_{x,k}/mu. The expectation
    // is (A*B)_{x,y}, and compiling must put Alice's factors (the outputs)
    // into the row matrix even though she never sends a message.
    SplitMix64 rng(31337);
    RatMatrix a = random_nonneg(rng, "r", 3, "k", 3);
    RatMatrix b = random_nonneg(rng, "k", 3, "c", 4);
    RatMatrix want = oracle_product(a, b);

    Rational max_col_sum = 0;
    for (std::size_t c = 0; c < b.n_cols(); ++c) {
        Rational s = 0;
        for (std::size_t k = 0; k < b.n_rows(); ++k) s += b.at(k, c);
        max_col_sum = max(max_col_sum, s);
    }
    REQUIRE(!max_col_sum.is_zero());
    Rational mu = Rational(1) / max_col_sum;

    MarkovianProtocol p;
    p.first_speaker = Party::B;
    p.claimer = Party::A;  // one round: the receiver claims
    p.x_domain = a.row_labels();
    p.y_domain = b.col_labels();
    std::vector<std::string> layer = b.row_labels();
    layer.push_back("sink");
    p.bp.layers = {layer};
    for (std::size_t c = 0; c < b.n_cols(); ++c) {
        Dist d;
        Rational colsum = 0;
        for (std::size_t k = 0; k < b.n_rows(); ++k) {
            Rational v = mu * b.at(k, c);
            colsum += v;
            if (!v.is_zero()) d[b.row_labels()[k]] = v;
        }
        if (colsum != Rational(1)) d["sink"] = Rational(1) - colsum;
        p.init[b.col_labels()[c]] = std::move(d);
    }
    for (std::size_t r = 0; r < a.n_rows(); ++r) {
        for (std::size_t k = 0; k < a.n_cols(); ++k)
            p.output[{a.row_labels()[r], a.col_labels()[k]}] = a.at(r, k) / mu;
        p.output[{a.row_labels()[r], "sink"}] = 0;
    }
    p.validate();

    for (std::size_t r = 0; r < a.n_rows(); ++r)
        for (std::size_t c = 0; c < b.n_cols(); ++c)
            CHECK(exact_expectation(p, a.row_labels()[r], b.col_labels()[c]) ==
                  want.at(r, c));

    Factorization f = compile_factorization(p);
    CHECK(f.width() <= b.n_rows());
    CHECK(mat_mul_eq(f.a, f.b, want).equal);
    // Alice's side carries the outputs: her matrix rows are the x labels
    CHECK(f.a.row_labels() == a.row_labels());
    CHECK(f.b.col_labels() == b.col_labels());
}

TEST_CASE("gamma width of degenerate protocols") {
    // single node, positive output: width 1
    MarkovianProtocol p;
    p.first_speaker = Party::A;
    p.claimer = Party::B;
    p.x_domain = {"x"};
    p.y_domain = {"y"};
    p.bp.layers = {{"u"}};
    p.init["x"] = {{"u", Rational(1)}};
    p.output[{"y", "u"}] = Rational(5);
    CHECK(gamma_width(p).width == 1);

    // all outputs zero: width 0 and an all-zero compiled product
    p.output[{"y", "u"}] = Rational(0);
    CHECK(gamma_width(p).width == 0);
    Factorization f = compile_factorization(p);
    CHECK(f.width() == 0);
}

TEST_CASE("markov property: prefix conditionals equal last-node conditionals") {
    // three-round protocol, A speaks rounds 1 and 3, B claims
    MarkovianProtocol p;
    p.first_speaker = Party::A;
    p.claimer = Party::B;
    p.x_domain = {"x0", "x1"};
    p.y_domain = {"y0", "y1"};
    p.bp.layers = {{"a0", "a1"}, {"b0", "b1"}, {"c0", "c1"}};
    p.kernels.resize(2);
    p.init["x0"] = {{"a0", Rational(1, 4)}, {"a1", Rational(3, 4)}};
    p.init["x1"] = {{"a0", Rational(2, 3)}, {"a1", Rational(1, 3)}};
    for (const auto& y : p.y_domain)
        for (const auto& u : {"a0", "a1"}) {
            Rational w = y == std::string("y0") ? Rational(1, 5) : Rational(1, 2);
            if (u == std::string("a1")) w = Rational(1) - w;
            p.kernels[0][{y, u}] = {{"b0", w}, {"b1", Rational(1) - w}};
        }
    for (const auto& x : p.x_domain)
        for (const auto& u : {"b0", "b1"}) {
            Rational w = x == std::string("x0") ? Rational(2, 7) : Rational(5, 7);
            if (u == std::string("b1")) w = Rational(1) - w;
            p.kernels[1][{x, u}] = {{"c0", w}, {"c1", Rational(1) - w}};
        }
    for (const auto& y : p.y_domain) {
        p.output[{y, "c0"}] = y == std::string("y0") ? Rational(3) : Rational(1, 3);
        p.output[{y, "c1"}] = Rational(2);
    }
    p.validate();

    // brute-force conditional: E[w * 1_prefix] / P(prefix) over all full paths
    auto brute = [&](const std::string& x, const std::string& y,
                     const std::vector<std::string>& prefix) {
        Rational num = 0, den = 0;
        for (const auto& u1 : p.bp.layers[0])
            for (const auto& u2 : p.bp.layers[1])
                for (const auto& u3 : p.bp.layers[2]) {
                    std::vector<std::string> path{u1, u2, u3};
                    bool matches = true;
                    for (std::size_t i = 0; i < prefix.size(); ++i)
                        matches = matches && path[i] == prefix[i];
                    Rational prob = p.init.at(x).count(u1) ? p.init.at(x).at(u1) : Rational(0);
                    auto k0 = p.kernels[0].at({y, u1});
                    prob *= k0.count(u2) ? k0.at(u2) : Rational(0);
                    auto k1 = p.kernels[1].at({x, u2});
                    prob *= k1.count(u3) ? k1.at(u3) : Rational(0);
                    if (!matches) continue;
                    num += prob * p.output.at({y, u3});
                    den += prob;
                }
        return num / den;
    };

    for (const auto& x : p.x_domain)
        for (const auto& y : p.y_domain) {
            for (const auto& u1 : p.bp.layers[0])
                CHECK(brute(x, y, {u1}) == conditional_expectation(p, x, y, {u1}));
            for (const auto& u1 : p.bp.layers[0])
                for (const auto& u2 : p.bp.layers[1]) {
                    CHECK(brute(x, y, {u1, u2}) == conditional_expectation(p, x, y, {u1, u2}));
                    // the prefix beyond the last node is irrelevant
                    CHECK(conditional_expectation(p, x, y, {u1, u2}) ==
                          conditional_expectation(p, x, y, {"a0", u2}));
                }
        }
}

TEST_CASE("check_correct flags a broken protocol with a counterexample") {
    Graph k3 = Graph::complete(3);
    MarkovianProtocol p = build_spt_protocol(k3);
    SlackMatrix s = slack_spt(k3);
    CHECK(check_correct(p, s).correct);

    // zero out all outputs: any cell with positive slack is a counterexample
    for (auto& [key, v] : p.output) v = Rational(0);
    auto rep = check_correct(p, s);
    CHECK(!rep.correct);
    CHECK(rep.got == Rational(0));
    CHECK(rep.want > Rational(0));

    SlackMatrix wrong = slack_perm(3);
    CHECK_THROWS_AS(check_correct(p, wrong), std::invalid_argument);
}

TEST_CASE("simulate: constant protocol, determinism, trials guard") {
    MarkovianProtocol p = constant_protocol(Rational(7, 3));
    SimResult r1 = simulate(p, "x0", "y1", 500, 99);
    CHECK(r1.mean == Rational(7, 3));
    CHECK(r1.count_nonneg == 500);
    SimResult r2 = simulate(p, "x0", "y1", 500, 99);
    CHECK(r1.mean == r2.mean);  // same seed, same bytes
    CHECK_THROWS_AS(simulate(p, "x0", "y0", 0, 1), std::invalid_argument);
}

TEST_CASE("simulate: spanning-tree cell mean is near the exact expectation") {
    Graph k3 = Graph::complete(3);
    MarkovianProtocol p = build_spt_protocol(k3);
    std::string x = "{1,3}", y = "{{1,2},{2,3}}";
    Rational exact = exact_expectation(p, x, y);
    CHECK(exact == Rational(1));
    long long trials = 100000;
    SimResult r = simulate(p, x, y, trials, 20240808);
    CHECK(r.count_nonneg == trials);
    // |mean - exact|^2 <= 16 * vhat / N, all exact arithmetic
    Rational n((long)trials);
    Rational vhat = (r.mean_sq - r.mean * r.mean) * n / (n - Rational(1));
    Rational diff = r.mean - exact;
    CHECK(diff * diff <= Rational(16) * vhat / n);
}
