#include "support.hpp"
#include "taut/drcycle.hpp"
#include "taut/integrate.hpp"
#include "taut/pairing.hpp"

using namespace taut;

namespace {

MultiPoly var(int nvars, int i) { return MultiPoly::variable(nvars, i - 1, 1); }

// a_1..a_{n-1} free and a_n = -(a_1+...+a_{n-1}).
std::vector<MultiPoly> balanced(int n) {
    std::vector<MultiPoly> m;
    MultiPoly last(n - 1, 1);
    for (int i = 1; i < n; ++i) {
        m.push_back(var(n - 1, i));
        last -= var(n - 1, i);
    }
    m.push_back(last);
    return m;
}

MultiPoly a_pow(int k, const Rational& c) { return MultiPoly::monomial({static_cast<uint8_t>(k)}, c, 1); }

}  // namespace

TEST_CASE("DR in genus one with two markings") {
    std::vector<MultiPoly> m{var(1, 1), -var(1, 1)};
    PolyTautClass dr = hain_dr(1, m);
    CHECK(dr.ct);
    CHECK(pair(times_lambda_top(dr), single(psi_monomial(1, {0, 0}))) == a_pow(2, Rational(1, 24)));
}

TEST_CASE("lambda_g DR_g(a,-a) psi_1^{g-1} integrates to a^{2g}/(24^g g!)") {
    std::vector<MultiPoly> m{var(1, 1), -var(1, 1)};
    for (int g = 1; g <= 2; ++g) {
        PolyTautClass x = times_lambda_top(hain_dr(g, m));
        std::vector<int> e{g - 1, 0};
        Rational expect = Rational(1) / factorial(g);
        for (int i = 0; i < g; ++i) expect /= 24;
        CHECK(pair(x, single(psi_monomial(g, e))) == a_pow(2 * g, expect));
    }
}

TEST_CASE("lambda_2 times the forgotten DR in genus two") {
    std::vector<MultiPoly> m{var(1, 1), -var(1, 1)};
    PolyTautClass x = times_lambda_top(dr_forget_tilde(2, m, 2));
    StableGraph irr;
    int v = irr.add_vertex(1);
    irr.add_leg(v, 1);
    irr.add_edge(v, v);
    CHECK(pair(x, single(psi_monomial(2, {1}))) == a_pow(4, Rational(1, 1152)));
    CHECK(pair(x, single(Stratum::bare(irr))).is_zero());
    CHECK(pair(x, boundary_divisor(2, 1, 1, {1})) == a_pow(4, Rational(1, 576)));
}

TEST_CASE("DR is homogeneous of degree 2g and vanishes at zero") {
    for (int g = 1; g <= 2; ++g)
        for (int n = 2; n <= 4; ++n) {
            PolyTautClass dr = hain_dr(g, balanced(n));
            for (const auto& [k, e] : dr.terms) CHECK(e.coeff.homogeneous_degree() == 2 * g);
            CHECK(dr.degree() == g);
            std::vector<MultiPoly> zero(n, MultiPoly(1, 1));
            CHECK(hain_dr(g, zero).is_zero());
        }
    std::vector<MultiPoly> one{MultiPoly::constant(1, 0, 1), MultiPoly::constant(1, 0, 1), MultiPoly::constant(1, 0, 1)};
    CHECK(hain_dr(0, one).syntactically_equal(to_poly(single(psi_monomial(0, {0, 0, 0})), 1, 1)));
}

TEST_CASE("DR is equivariant under relabeling of markings") {
    auto m = balanced(3);
    PolyTautClass dr = hain_dr(2, m);
    std::vector<MultiPoly> swapped{m[1], m[0], m[2]};
    PolyTautClass lhs = relabel(hain_dr(2, swapped), {{1, 2}, {2, 1}});
    CHECK(lhs.syntactically_equal(dr));
    PolyTautClass shifted = hain_dr(2, {5, 7, 9}, m);
    CHECK(relabel(shifted, {{5, 1}, {7, 2}, {9, 3}}).syntactically_equal(dr));
}

TEST_CASE("substituting integers commutes with the generic computation") {
    auto m = balanced(3);
    PolyTautClass generic = hain_dr(1, m);
    std::vector<MultiPoly> point{MultiPoly::constant(1, 2, 1), MultiPoly::constant(1, -5, 1)};
    PolyTautClass specialized = substitute(generic, point);
    std::vector<MultiPoly> direct{MultiPoly::constant(1, 2, 1), MultiPoly::constant(1, -5, 1), MultiPoly::constant(1, 3, 1)};
    CHECK(specialized.syntactically_equal(hain_dr(1, direct)));
}

TEST_CASE("psi times DR agrees with the splitting formula after lambda_g") {
    for (int g = 1; g <= 2; ++g)
        for (int n = 2; n <= 3; ++n) {
            auto m = balanced(n);
            PolyTautClass dr = hain_dr(g, m);
            Ambient amb = dr.ambient;
            for (int s = 1; s <= n; ++s) {
                std::vector<int> e(n, 0);
                e[s - 1] = 1;
                PolyTautClass direct = multiply(dr, to_poly(single(psi_monomial(g, e)), n - 1, 1)).scaled(m[s - 1]);
                PolyTautClass split = dr_times_psi_ct(g, m, s);
                PolyTautClass lx = times_lambda_top(direct), ly = times_lambda_top(split);
                for (const Stratum& t : decorated_strata(amb, amb.dimension() - g - g - 1)) {
                    CAPTURE(g);
                    CAPTURE(n);
                    CAPTURE(describe(t));
                    CHECK(pair(lx, single(t)) == pair(ly, single(t)));
                }
            }
        }
}

TEST_CASE("boundary times DR splits into vertex DR cycles") {
    for (int g = 1; g <= 2; ++g) {
        int n = 3;
        auto m = balanced(n);
        PolyTautClass dr = hain_dr(g, m);
        Ambient amb = dr.ambient;
        for (int h = 0; h <= g; ++h)
            for (std::vector<int> I : std::vector<std::vector<int>>{{1}, {1, 2}, {1, 2, 3}, {3}, {}}) {
                TautClass d = boundary_divisor(g, n, h, I);
                if (d.is_zero()) continue;
                PolyTautClass direct = multiply(dr, to_poly(d, n - 1, 1));
                PolyTautClass split = dr_times_boundary(g, m, h, I);
                PolyTautClass lx = times_lambda_top(direct), ly = times_lambda_top(split);
                for (const Stratum& t : decorated_strata(amb, amb.dimension() - 2 * g - 1)) {
                    CAPTURE(describe(t));
                    CHECK(pair(lx, single(t)) == pair(ly, single(t)));
                }
            }
    }
}

TEST_CASE("DR rejects unbalanced input") {
    CHECK_THROWS(hain_dr(1, {var(1, 1), var(1, 1)}));
    CHECK_THROWS(dr_times_psi_ct(1, {MultiPoly(1, 1), MultiPoly(1, 1)}, 1));
}
