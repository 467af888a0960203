#include "doctest.h"
#include "taut/integrate.hpp"
#include "taut/strata.hpp"

using namespace taut;

namespace {

// Two genus-0 vertices A, B; `edges` A-B edges, loops at each, legs with markings in a_legs on A.
Stratum two_vertex(int edges, int loops_a, int loops_b, const std::vector<int>& a_legs, const std::vector<int>& b_legs) {
    StableGraph g;
    int a = g.add_vertex(0), b = g.add_vertex(0);
    for (int m : a_legs) g.add_leg(a, m);
    for (int m : b_legs) g.add_leg(b, m);
    for (int i = 0; i < edges; ++i) g.add_edge(a, b);
    for (int i = 0; i < loops_a; ++i) g.add_edge(a, a);
    for (int i = 0; i < loops_b; ++i) g.add_edge(b, b);
    return Stratum::bare(g);
}

struct Shape {
    int edges, loops_a, loops_b, legs_a;
};

// Sum over the distinct ways of distributing markings 1,2,3.
TautClass beta(const Shape& s) {
    TautClass r(standard_ambient(2, 3));
    for (int mask = 0; mask < 8; ++mask) {
        std::vector<int> a, b;
        for (int i = 0; i < 3; ++i) ((mask >> i) & 1 ? a : b).push_back(i + 1);
        if (static_cast<int>(a.size()) != s.legs_a) continue;
        r += single(two_vertex(s.edges, s.loops_a, s.loops_b, a, b));
    }
    return r;
}

Rational pair(const TautClass& x, const TautClass& y) { return integrate(multiply(x, y)); }

}  // namespace

TEST_CASE("self-intersection of a boundary divisor on M_{0,5}") {
    StableGraph g;
    int a = g.add_vertex(0), b = g.add_vertex(0);
    g.add_leg(a, 1);
    g.add_leg(a, 2);
    g.add_leg(b, 3);
    g.add_leg(b, 4);
    g.add_leg(b, 5);
    g.add_edge(a, b);
    TautClass d = single(Stratum::bare(g));
    CHECK(pair(d, d) == -1);
    CHECK(pair(single(psi_monomial(0, {1, 0, 0, 0, 0})), d) == 0);
    CHECK(pair(single(psi_monomial(0, {0, 0, 1, 0, 0})), d) == 1);
}

TEST_CASE("products of psi and kappa on the trivial graph") {
    TautClass p1 = single(psi_monomial(2, {1, 0})), p2 = single(psi_monomial(2, {0, 1}));
    TautClass prod = multiply(p1, p2);
    CHECK(prod.syntactically_equal(single(psi_monomial(2, {1, 1}))));
    TautClass k1 = single(kappa_monomial(2, 0, {1}));
    TautClass k2 = single(kappa_monomial(2, 0, {0, 1}));
    CHECK(integrate(multiply(k1, multiply(k1, k1))) == psi_kappa_integral(2, {}, {1, 1, 1}));
    CHECK(integrate(multiply(k1, k2)) == Rational(1, 240));
}

TEST_CASE("intersection matrix of nine genus-zero boundary strata on M_{2,3}") {
    std::vector<Shape> shapes{{1, 2, 0, 0}, {1, 1, 1, 0}, {2, 1, 0, 0}, {3, 0, 0, 0}, {1, 2, 0, 1},
                              {2, 1, 0, 1}, {1, 1, 1, 1}, {3, 0, 0, 1}, {2, 0, 1, 1}};
    StableGraph dg;
    int a = dg.add_vertex(1), b = dg.add_vertex(1);
    dg.add_leg(b, 1);
    dg.add_leg(b, 2);
    dg.add_leg(b, 3);
    dg.add_edge(a, b);
    TautClass delta = single(Stratum::bare(dg));
    TautClass psi11 = single(psi_monomial(2, {2, 0, 0}));
    std::vector<TautClass> rows{
        single(psi_monomial(2, {3, 0, 0})),     single(psi_monomial(2, {2, 1, 0})),
        single(psi_monomial(2, {1, 1, 1})),     single(kappa_monomial(2, 3, {0, 0, 1})),
        single(kappa_monomial(2, 3, {1, 1})),   multiply(single(psi_monomial(2, {1, 0, 0})), single(kappa_monomial(2, 3, {0, 1}))),
        multiply(psi11, delta)};
    std::vector<std::vector<int>> expected{{0, 1, 0, 1, 1, 0, 0, 0, 2},   {0, 3, 0, 3, 0, 1, 1, 1, 3},
                                           {0, 6, 0, 6, 0, 0, 6, 6, 0},   {0, 1, 0, 1, 3, 0, 0, 0, 3},
                                           {1, 9, 1, 9, 27, 3, 3, 3, 27}, {1, 4, 0, 4, 4, 2, 1, 1, 8},
                                           {0, -2, 1, 0, 2, 0, 2, 0, 2}};
    for (std::size_t i = 0; i < rows.size(); ++i)
        for (std::size_t j = 0; j < shapes.size(); ++j) {
            CAPTURE(i);
            CAPTURE(j);
            CHECK(pair(rows[i], beta(shapes[j])) == expected[i][j]);
        }
    // Linear relations among the nine classes hold numerically.
    for (const auto& r : rows) {
        std::vector<Rational> v;
        for (const auto& s : shapes) v.push_back(pair(r, beta(s)));
        CHECK(v[1] - v[3] + v[6] - v[7] == 0);
        CHECK(v[0] + v[1] + 2 * v[2] + v[4] / 3 + v[6] / 3 - 4 * v[7] / 3 - 2 * v[8] / 3 == 0);
    }
}

TEST_CASE("product is commutative and associative") {
    TautClass d = single(two_vertex(1, 1, 0, {}, {1, 2}));
    TautClass p = single(psi_monomial(1, {1, 0}));
    StableGraph sg;
    int a = sg.add_vertex(1), b = sg.add_vertex(0);
    sg.add_leg(b, 1);
    sg.add_leg(b, 2);
    sg.add_edge(a, b);
    TautClass s = single(Stratum::bare(sg));
    (void)d;
    CHECK(multiply(p, s).syntactically_equal(multiply(s, p)));
    CHECK(integrate(multiply(multiply(p, s), s)) == integrate(multiply(p, multiply(s, s))));
}

TEST_CASE("pushforward and pullback along the forgetful map") {
    TautClass a = single(psi_monomial(1, {1}));
    TautClass pa = pullback_forget(a, 2);
    CHECK(integrate(pa) == 0);
    TautClass psi2 = single(psi_monomial(1, {0, 1}));
    CHECK(integrate(multiply(pa, psi2)) == Rational(1) * integrate(a));
    TautClass k = single(kappa_monomial(1, 1, {1}));
    TautClass psi_sq = single(psi_monomial(1, {0, 2}));
    CHECK(pushforward_forget(psi_sq, 2).syntactically_equal(k));
    TautClass two = single(psi_monomial(2, {1, 1}));
    TautClass back = pullback_forget(pushforward_forget(multiply(pullback_forget(single(psi_monomial(2, {1})), 2), two), 2), 2);
    CHECK(back.size() > 0);
}
