#include <doctest.h>

#include <stdexcept>

#include "liftlab/slack.hpp"

using namespace liftlab;

TEST_CASE("slack_perm values at n=3") {
    SlackMatrix s = slack_perm(3);
    CHECK(s.matrix.n_rows() == 6);
    CHECK(s.matrix.n_cols() == 6);
    // direct evaluation of the Edmonds slack
    CHECK(s.matrix.at("{3}", "123") == Rational(2));
    CHECK(s.matrix.at("{1,2}", "123") == Rational(0));  // tight prefix set at identity
    CHECK(s.matrix.at("{1}", "123") == Rational(0));
    CHECK(s.matrix.at("{1}", "321") == Rational(2));
}

TEST_CASE("slack_perm n=2 full matrix") {
    SlackMatrix s = slack_perm(2);
    CHECK(s.matrix.row_labels() == std::vector<std::string>{"{1}", "{2}"});
    CHECK(s.matrix.col_labels() == std::vector<std::string>{"12", "21"});
    CHECK(s.matrix.at(0, 0) == Rational(0));
    CHECK(s.matrix.at(0, 1) == Rational(1));
    CHECK(s.matrix.at(1, 0) == Rational(1));
    CHECK(s.matrix.at(1, 1) == Rational(0));
}

TEST_CASE("slack_perm range guard") {
    CHECK_THROWS_AS(slack_perm(1), std::invalid_argument);
    CHECK_THROWS_AS(slack_perm(9), std::invalid_argument);
}

TEST_CASE("slack matrices are entrywise nonnegative") {
    for (int n = 2; n <= 5; ++n) CHECK(slack_perm(n).matrix.all_nonnegative());
    CHECK(slack_spt(Graph::complete(4)).matrix.all_nonnegative());
    CHECK(slack_match(Graph::complete(5)).matrix.all_nonnegative());
}

TEST_CASE("every facet row of a complete-graph slack matrix has a tight vertex") {
    for (const SlackMatrix& s :
         {slack_perm(4), slack_spt(Graph::complete(4)), slack_match(Graph::complete(4))}) {
        for (std::size_t r = 0; r < s.matrix.n_rows(); ++r) {
            bool has_zero = false;
            for (std::size_t c = 0; c < s.matrix.n_cols() && !has_zero; ++c)
                has_zero = s.matrix.at(r, c).is_zero();
            CHECK(has_zero);
        }
    }
}

TEST_CASE("slack_perm column sums do not depend on sigma") {
    // oracle: compute the column sum for every sigma and compare
    for (int n : {3, 4}) {
        SlackMatrix s = slack_perm(n);
        Rational first;
        for (std::size_t c = 0; c < s.matrix.n_cols(); ++c) {
            Rational sum = 0;
            for (std::size_t r = 0; r < s.matrix.n_rows(); ++r) sum += s.matrix.at(r, c);
            if (c == 0)
                first = sum;
            else
                CHECK(sum == first);
        }
    }
}

TEST_CASE("slack_spt on K3") {
    SlackMatrix s = slack_spt(Graph::complete(3));
    // spanning trees of K3 in lex edge order: {12,13}, {12,23}, {13,23}
    CHECK(s.matrix.n_cols() == 3);
    CHECK(s.matrix.at("{1,2}", "{{1,2},{2,3}}") == Rational(0));
    CHECK(s.matrix.at("{1,3}", "{{1,2},{2,3}}") == Rational(1));
}

TEST_CASE("slack_spt is zero when T restricted to U spans U") {
    Graph k4 = Graph::complete(4);
    SlackMatrix s = slack_spt(k4);
    auto trees = spanning_trees(k4);
    for (const auto& t : trees) {
        for (const auto& u : subsets(4, SubsetFilter::ProperNonEmpty)) {
            if (u.size() < 2) continue;
            // count tree edges inside U and check connectivity of (U, T∩E(U))
            std::vector<Edge> inside;
            for (const Edge& e : t.edges)
                if (u.contains(e.u) && u.contains(e.v)) inside.push_back(e);
            if ((int)inside.size() == u.size() - 1) {
                // T∩E(U) spans U (it is a forest with |U|-1 edges), slack must be 0
                CHECK(s.matrix.at(u.label(), t.label()) == Rational(0));
            }
        }
    }
}

TEST_CASE("slack_spt row set and the nonnegativity flag") {
    Graph path{4, {{1, 2}, {2, 3}, {3, 4}}};
    SlackMatrix s = slack_spt(path);
    // U = {1,3} has no induced edge in the path graph: not a row
    CHECK(!s.matrix.has_row("{1,3}"));
    CHECK(s.matrix.has_row("{1,2}"));

    SlackMatrix se = slack_spt(path, true);
    CHECK(se.row_kinds.front() == RowKind::Edge);
    CHECK(se.matrix.at("e:{1,2}", "{{1,2},{2,3},{3,4}}") == Rational(1));  // chi_T(e)

    Graph disc{4, {{1, 2}, {3, 4}}};
    CHECK_THROWS_AS(slack_spt(disc), std::invalid_argument);
}

TEST_CASE("slack_match on K4") {
    SlackMatrix s = slack_match(Graph::complete(4));
    CHECK(s.matrix.n_cols() == 10);  // empty + 6 edges + 3 perfect
    CHECK(s.matrix.at("{1,2,3}", "{{1,4}}") == Rational(1));
    CHECK(s.matrix.at("{1,2,3}", "{{1,2}}") == Rational(0));
    CHECK(s.matrix.at("{1,2}", "{{1,2}}") == Rational(1));  // edge row, chi_M(e)
    CHECK(s.matrix.at("{1,2}", "{{1,3}}") == Rational(0));
    // vertex rows: 1 - |M ∩ delta(v)|
    CHECK(s.matrix.at("3", "{{1,2}}") == Rational(1));
    CHECK(s.matrix.at("1", "{{1,2}}") == Rational(0));
    // odd set against the empty matching: (|U|-1)/2
    CHECK(s.matrix.at("{1,2,3}", "{}") == Rational(1));
    // row blocks in order
    CHECK(s.row_kinds.front() == RowKind::Edge);
    CHECK(s.row_kinds.back() == RowKind::OddSet);
}

TEST_CASE("birkhoff projection recovers x_sigma") {
    CHECK(birkhoff_project(Perm{{1, 2, 3}}) == std::vector<int>{1, 2, 3});
    CHECK(birkhoff_project(Perm{{2, 1, 3}}) == std::vector<int>{2, 1, 3});
    CHECK(birkhoff_project(Perm{{3, 1, 2}}) == std::vector<int>{3, 1, 2});
    for (const auto& p : all_perms(4)) {
        std::vector<int> want;
        for (int i = 1; i <= 4; ++i) want.push_back(p.apply(i));
        CHECK(birkhoff_project(p) == want);
    }
    CHECK_THROWS_AS(birkhoff_project(Perm{{1, 1}}), std::invalid_argument);
}
