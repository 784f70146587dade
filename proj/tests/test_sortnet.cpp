#include <doctest.h>

#include <stdexcept>

#include <map>
#include <sstream>

#include "liftlab/rng.hpp"
#include "liftlab/slack.hpp"
#include "liftlab/sortnet.hpp"

using namespace liftlab;

namespace {

std::vector<Rational> rat_vec(const std::vector<long>& xs) {
    std::vector<Rational> out;
    for (long x : xs) out.push_back(Rational(x));
    return out;
}

// Brute-force validity oracle: apply the network to every x_sigma and check
// the result is fully sorted (Prop-13-(ii) style, independent of the 0/1
// mask path used by is_sorting_network).
bool sorts_all_permutations(const ComparatorSeq& seq, Direction dir) {
    for (const auto& sigma : all_perms(seq.n)) {
        std::vector<Rational> x;
        for (int i = 1; i <= seq.n; ++i) x.push_back(Rational(sigma.apply(i)));
        std::vector<Rational> y = apply_network(seq, x, dir);
        for (int i = 1; i < seq.n; ++i) {
            bool ok = dir == Direction::Forward ? (y[i - 1] <= y[i]) : (y[i - 1] >= y[i]);
            if (!ok) return false;
        }
    }
    return true;
}

ComparatorSeq random_seq(SplitMix64& rng, int n, int max_len) {
    ComparatorSeq seq;
    seq.n = n;
    int len = (int)rng.next_below(max_len + 1);
    for (int l = 0; l < len; ++l) {
        int i = 1 + (int)rng.next_below(n);
        int j = 1 + (int)rng.next_below(n);
        if (i == j) continue;
        if (i > j) std::swap(i, j);
        seq.comps.push_back({i, j});
    }
    return seq;
}

}  // namespace

TEST_CASE("apply_network: forward sorts, reverse anti-sorts") {
    ComparatorSeq q3 = generate(NetworkKind::Quadratic, 3);
    CHECK(apply_network(q3, rat_vec({3, 2, 1}), Direction::Forward) == rat_vec({1, 2, 3}));
    CHECK(apply_network(q3, rat_vec({1, 2, 3}), Direction::Forward) == rat_vec({1, 2, 3}));
    // reverse network on chi_{3}: the one must travel to position 1
    CHECK(apply_network(q3, rat_vec({0, 0, 1}), Direction::Reverse) == rat_vec({1, 0, 0}));
    CHECK_THROWS_AS(apply_network(q3, rat_vec({1, 2}), Direction::Forward),
                    std::invalid_argument);
}

TEST_CASE("apply_network preserves the multiset of coordinates") {
    SplitMix64 rng(31);
    for (int t = 0; t < 50; ++t) {
        ComparatorSeq seq = random_seq(rng, 5, 12);
        std::vector<Rational> x;
        for (int i = 0; i < 5; ++i)
            x.push_back(Rational((long)rng.next_below(9) - 4, (long)rng.next_below(3) + 1));
        for (Direction dir : {Direction::Forward, Direction::Reverse}) {
            std::vector<Rational> y = apply_network(seq, x, dir);
            std::map<std::string, int> mx, my;
            for (const auto& v : x) mx[v.str()]++;
            for (const auto& v : y) my[v.str()]++;
            CHECK(mx == my);
        }
    }
}

TEST_CASE("is_sorting_network on edge cases") {
    CHECK(is_sorting_network(generate(NetworkKind::Quadratic, 3), Direction::Forward));
    ComparatorSeq empty2{2, {}};
    CHECK(!is_sorting_network(empty2, Direction::Forward));
    ComparatorSeq empty1{1, {}};
    CHECK(is_sorting_network(empty1, Direction::Forward));
    ComparatorSeq single{2, {{1, 2}}};
    CHECK(is_sorting_network(single, Direction::Forward));
    CHECK(is_sorting_network(single, Direction::Reverse));
}

TEST_CASE("0/1 validity agrees with the all-permutations oracle") {
    for (int n = 2; n <= 5; ++n)
        for (NetworkKind kind :
             {NetworkKind::Quadratic, NetworkKind::OddEvenTransposition, NetworkKind::Batcher})
            for (Direction dir : {Direction::Forward, Direction::Reverse}) {
                ComparatorSeq seq = generate(kind, n);
                CHECK(is_sorting_network(seq, dir) == sorts_all_permutations(seq, dir));
            }
    SplitMix64 rng(1311);
    for (int t = 0; t < 60; ++t) {
        int n = 2 + (int)rng.next_below(4);
        ComparatorSeq seq = random_seq(rng, n, 2 * n);
        for (Direction dir : {Direction::Forward, Direction::Reverse})
            CHECK(is_sorting_network(seq, dir) == sorts_all_permutations(seq, dir));
    }
}

TEST_CASE("duality: validity coincides and complements commute") {
    CHECK(duality_check(generate(NetworkKind::Quadratic, 4)));
    ComparatorSeq single{2, {{1, 2}}};
    CHECK(duality_check(single));  // both directions sort
    SplitMix64 rng(99);
    for (int t = 0; t < 40; ++t) {
        ComparatorSeq seq = random_seq(rng, 2 + (int)rng.next_below(4), 10);
        CHECK(duality_check(seq));  // holds whether or not seq sorts
    }
}

TEST_CASE("delta: spec cells and exhaustive two-form agreement") {
    // n=3, (i,j)=(1,2), J={2}, sigma=id: sigma(J)=2, after the step the set
    // is {1} and the permutation unchanged, so delta = 2 - 1 = 1
    CHECK(delta(1, 2, Perm::identity(3), SubsetMask::of(3, {2})) == Rational(1));
    CHECK(delta(1, 2, Perm::identity(3), SubsetMask::of(3, {1, 2})) == Rational(0));
    CHECK(delta(1, 2, Perm::identity(3), SubsetMask::of(3, {3})) == Rational(0));
    CHECK_THROWS_AS(delta(2, 2, Perm::identity(3), SubsetMask::of(3, {1})),
                    std::invalid_argument);

    // the definitional and closed forms are asserted equal inside delta();
    // run every (i, j, J, sigma) at n <= 4 so a disagreement would throw
    for (int n = 2; n <= 4; ++n)
        for (const auto& sigma : all_perms(n))
            for (std::uint32_t m = 0; m < (1u << n); ++m)
                for (int i = 1; i <= n; ++i)
                    for (int j = i + 1; j <= n; ++j)
                        CHECK_NOTHROW(delta(i, j, sigma, SubsetMask{n, m}));
}

TEST_CASE("traces: spec examples") {
    ComparatorSeq q3 = generate(NetworkKind::Quadratic, 3);
    JTrace t = trace(q3, SubsetMask::of(3, {3}));
    CHECK(t.colors == std::vector<int>{1, -1, 0});
    CHECK(t.sets.back() == SubsetMask::of(3, {1}));
    CHECK(t.count_plus == 1);
    CHECK(t.count_minus == 1);
    CHECK(t.count_zero == 1);

    // a bottom prefix set is already reverse-sorted: the trace never moves it
    JTrace fixed = trace(q3, SubsetMask::of(3, {1, 2}));
    CHECK(fixed.sets.back() == fixed.sets.front());

    SigmaTrace st = trace_sigma(q3, Perm::identity(3));
    for (std::size_t l = 0; l < q3.size(); ++l) {
        CHECK(st.w[l] == q3.comps[l].j - q3.comps[l].i);
        CHECK(st.w[l] > 0);
    }
    CHECK(st.perms.back() == Perm::identity(3));
}

TEST_CASE("telescoping: the delta sum along a network equals the slack") {
    for (int n : {3, 4}) {
        SlackMatrix s = slack_perm(n);
        for (NetworkKind kind :
             {NetworkKind::Quadratic, NetworkKind::OddEvenTransposition,
              NetworkKind::Batcher}) {
            ComparatorSeq seq = generate(kind, n);
            for (const auto& j0 : subsets(n, SubsetFilter::ProperNonEmpty)) {
                JTrace jt = trace(seq, j0);
                for (const auto& sigma : all_perms(n)) {
                    SigmaTrace st = trace_sigma(seq, sigma);
                    Rational sum = 0;
                    for (std::size_t l = 0; l < seq.size(); ++l)
                        sum += delta(seq.comps[l].i, seq.comps[l].j, st.perms[l], jt.sets[l]);
                    CHECK(sum == s.matrix.at(j0.label(), sigma.label()));
                }
            }
        }
    }
}

TEST_CASE("generators") {
    ComparatorSeq q3 = generate(NetworkKind::Quadratic, 3);
    CHECK(q3.comps == std::vector<Comparator>{{1, 3}, {1, 2}, {2, 3}});
    for (int n = 2; n <= 8; ++n) {
        CHECK(generate(NetworkKind::Quadratic, n).size() == (std::size_t)(n * (n - 1) / 2));
        for (NetworkKind kind :
             {NetworkKind::Quadratic, NetworkKind::OddEvenTransposition, NetworkKind::Batcher})
            CHECK(is_sorting_network(generate(kind, n), Direction::Forward));
    }
    CHECK(generate(NetworkKind::Batcher, 4).size() == 5);
    CHECK_THROWS_AS(generate(NetworkKind::Quadratic, 1), std::invalid_argument);

    // position formula matches the generated order
    for (int n : {3, 5, 8}) {
        ComparatorSeq q = generate(NetworkKind::Quadratic, n);
        for (std::size_t l = 0; l < q.size(); ++l)
            CHECK(quadratic_position(n, q.comps[l].i, q.comps[l].j) == l);
    }
}

TEST_CASE("minimality") {
    CHECK(minimality(generate(NetworkKind::Quadratic, 4), MinimalityMode::OneRemoval).minimal);
    CHECK(minimality(ComparatorSeq{2, {{1, 2}}}, MinimalityMode::OneRemoval).minimal);
    CHECK(minimality(ComparatorSeq{2, {{1, 2}}}, MinimalityMode::Exhaustive).minimal);

    // duplicating a comparator creates a removable one
    ComparatorSeq padded = generate(NetworkKind::Quadratic, 3);
    padded.comps.push_back({2, 3});
    auto r = minimality(padded, MinimalityMode::OneRemoval);
    CHECK(!r.minimal);
    CHECK(r.redundant_subset.size() == padded.size() - 1);
    auto rx = minimality(padded, MinimalityMode::Exhaustive);
    CHECK(!rx.minimal);

    CHECK(minimality(generate(NetworkKind::Quadratic, 4), MinimalityMode::Exhaustive).minimal);
    CHECK_THROWS_AS(minimality(ComparatorSeq{2, {}}, MinimalityMode::OneRemoval),
                    std::invalid_argument);
}

TEST_CASE("the witness subset breaks every single deletion of the quadratic net") {
    for (int n = 3; n <= 6; ++n) {
        ComparatorSeq q = generate(NetworkKind::Quadratic, n);
        for (std::size_t d = 0; d < q.size(); ++d) {
            int i = q.comps[d].i, j = q.comps[d].j;
            // J = [i-1] ∪ {j}
            std::vector<int> elems;
            for (int e = 1; e < i; ++e) elems.push_back(e);
            elems.push_back(j);
            SubsetMask witness = SubsetMask::of(n, elems);
            ComparatorSeq del{n, {}};
            for (std::size_t l = 0; l < q.size(); ++l)
                if (l != d) del.comps.push_back(q.comps[l]);
            // the deleted network no longer reverse-sorts the witness
            std::uint32_t got = apply_network_mask(del, witness.bits, Direction::Reverse);
            std::uint32_t want = (1u << witness.size()) - 1;
            CHECK(got != want);
        }
    }
}

TEST_CASE("network text format round trips") {
    ComparatorSeq q = generate(NetworkKind::Batcher, 5);
    std::string text = network_to_text(q);
    std::istringstream in(text);
    ComparatorSeq back = network_from_text(in);
    CHECK(back.n == q.n);
    CHECK(back.comps == q.comps);
    std::istringstream bad("3 2\n1 2\n");
    CHECK_THROWS_AS(network_from_text(bad), std::invalid_argument);
    std::istringstream bad2("3 1\n3 1\n");
    CHECK_THROWS_AS(network_from_text(bad2), std::invalid_argument);
}
