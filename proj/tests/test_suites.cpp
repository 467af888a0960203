#include "support.hpp"
#include "taut/suites.hpp"

using namespace taut;

TEST_CASE("rank over the rationals") {
    CHECK(matrix_rank({}) == 0);
    CHECK(matrix_rank({{1, 2}, {2, 4}}) == 1);
    CHECK(matrix_rank({{0, 1}, {1, 0}, {1, 1}}) == 2);
    CHECK(matrix_rank({{Rational(1, 2), 1, 0}, {0, Rational(1, 3), 1}, {Rational(1, 2), Rational(4, 3), 1}}) == 2);
}

TEST_CASE("labeled sums count distinct marking distributions") {
    CHECK(labeled_sum({0, 0}, {{0, 1}}, {2, 2}).size() == 3);
    CHECK(labeled_sum({0, 0}, {{0, 1}}, {2, 3}).size() == 10);
    CHECK_THROWS(labeled_sum({0, 0}, {{0, 1}}, {1, 3}));
    CHECK(labeled_sum({1, 0}, {{0, 1}}, {0, 3}).size() == 1);
    for (const auto& [k, e] : labeled_sum({0, 0}, {{0, 1}}, {2, 2}).terms) CHECK(e.coeff == 1);
}

TEST_CASE("make_graph numbers edge halves before legs") {
    StableGraph g = make_graph({{1, 0}, {{0, 1}}, {{1, 1}, {1, 2}}});
    CHECK(g.vertex == std::vector<int>{0, 1, 1, 1});
    CHECK(g.partner[0] == 1);
    CHECK(g.leg(1) == 2);
    CHECK(g.leg(2) == 3);
}

TEST_CASE("Getzler relation is symmetric with seven shapes") {
    TautClass r = getzler_relation();
    CHECK(is_symmetric(r));
    CHECK(r.ambient == standard_ambient(1, 4));
    CHECK(r.degree() == 2);
}

TEST_CASE("test classes for three points have complementary degree") {
    auto tests = three_point_test_classes();
    REQUIRE(tests.size() == 7);
    for (const auto& [name, c] : tests) CHECK(c.degree() == 3);
    for (const TautClass& b : beta_classes()) {
        CHECK(b.degree() == 3);
        CHECK(is_symmetric(b));
    }
}

TEST_CASE("suite names and lookup") {
    CHECK(suite_names().size() == 6);
    for (const auto& n : suite_names()) CHECK_FALSE(suite_groups(n).empty());
    CHECK_THROWS(run_suite("genus7"));
}

TEST_CASE("small suites pass and serialize deterministically") {
    for (const std::string name : {"matrix", "lambda2", "genus1"}) {
        CAPTURE(name);
        SuiteReport a = run_suite(name), b = run_suite(name);
        CHECK(a.passed());
        CHECK(a.failures() == 0);
        for (auto* r : {&a, &b}) {
            r->seconds = 0;
            for (auto& c : r->checks) c.seconds = 0;
        }
        CHECK(suite_to_json(a).dump() == suite_to_json(b).dump());
        for (const auto& c : a.checks) {
            CHECK_FALSE(c.expected.empty());
            CHECK_FALSE(to_string(c.source).empty());
        }
        CHECK(suite_to_text(a).find("checks passed") != std::string::npos);
    }
}

TEST_CASE("a timeout marks a check as failed") {
    SuiteOptions opt;
    opt.timeout_per_check = 1e-12;
    SuiteReport r = run_suite("matrix", opt);
    CHECK_FALSE(r.passed());
    CHECK(r.checks.front().verdict.find("timeout") == 0);
}
