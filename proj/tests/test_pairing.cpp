#include <algorithm>
#include <functional>

#include "doctest.h"
#include "taut/integrate.hpp"
#include "taut/pairing.hpp"

using namespace taut;

namespace {

struct Shape {
    std::vector<int> genus;
    std::vector<std::pair<int, int>> edges;
    std::vector<int> legs;  // number of markings per vertex
};

// Sum of xi_* over the distinct labelings of the shape by markings 1..n.
TautClass labeled_sum(const Shape& s, int n) {
    int g = 0;
    for (int x : s.genus) g += x;
    g += static_cast<int>(s.edges.size()) - static_cast<int>(s.genus.size()) + 1;
    TautClass out(standard_ambient(g, n));
    std::map<std::string, Stratum> seen;
    std::vector<int> where(n, 0);
    std::function<void(int)> rec = [&](int i) {
        if (i == n) {
            std::vector<int> cnt(s.genus.size(), 0);
            for (int w : where) ++cnt[w];
            if (cnt != s.legs) return;
            StableGraph gr;
            for (int x : s.genus) gr.add_vertex(x);
            for (int m = 0; m < n; ++m) gr.add_leg(where[m], m + 1);
            for (auto [a, b] : s.edges) gr.add_edge(a, b);
            CanonicalStratum c = canonical_form(Stratum::bare(gr));
            seen.emplace(c.key, c.stratum);
            return;
        }
        for (std::size_t v = 0; v < s.genus.size(); ++v) {
            where[i] = static_cast<int>(v);
            rec(i + 1);
        }
    };
    rec(0);
    for (auto& [k, st] : seen) out += single(st);
    return out;
}

TautClass relation_on_m14() {
    std::vector<std::pair<int, int>> chain{{0, 1}, {1, 2}};
    TautClass r = labeled_sum({{0, 1, 0}, chain, {2, 0, 2}}, 4);
    r += labeled_sum({{1, 0, 0}, chain, {1, 1, 2}}, 4).scaled(Rational(-1, 3));
    r += labeled_sum({{1, 0, 0}, chain, {0, 2, 2}}, 4).scaled(Rational(-1, 6));
    r += labeled_sum({{1, 0, 0}, chain, {0, 1, 3}}, 4).scaled(Rational(1, 2));
    r += labeled_sum({{0, 0}, {{0, 1}, {0, 0}}, {1, 3}}, 4).scaled(Rational(1, 24));
    r += labeled_sum({{0, 0}, {{0, 1}, {0, 0}}, {0, 4}}, 4).scaled(Rational(1, 24));
    r += labeled_sum({{0, 0}, {{0, 1}, {0, 1}}, {2, 2}}, 4).scaled(Rational(-1, 12));
    return r;
}

}  // namespace

TEST_CASE("lambda strata forms pair like the flagged top lambda") {
    for (auto [g, n] : std::vector<std::pair<int, int>>{{1, 1}, {1, 2}, {1, 3}, {2, 0}, {2, 1}}) {
        TautClass a = lambda_class(g, n), b = lambda_top(g, n);
        Ambient amb = a.ambient;
        for (const Stratum& s : decorated_strata(amb, amb.dimension() - g)) {
            TautClass t = single(s);
            CAPTURE(describe(s));
            CHECK(pair(a, t) == pair(b, t));
        }
    }
    CHECK(integrate(lambda_class(1, 1)) == Rational(1, 24));
}

TEST_CASE("psi on M_{0,4} equals a boundary point by pairing") {
    StableGraph g;
    int a = g.add_vertex(0), b = g.add_vertex(0);
    g.add_leg(a, 1);
    g.add_leg(a, 2);
    g.add_leg(b, 3);
    g.add_leg(b, 4);
    g.add_edge(a, b);
    PairingReport r = equal_by_pairing(single(psi_monomial(0, {1, 0, 0, 0})), single(Stratum::bare(g)));
    CHECK(r.equal);
    CHECK_FALSE(r.syntactic);
    PairingReport bad = equal_by_pairing(single(psi_monomial(0, {1, 0, 0, 0})), single(Stratum::bare(g)).scaled(2));
    CHECK_FALSE(bad.equal);
}

TEST_CASE("the four-point genus-one relation pairs to zero") {
    TautClass rel = relation_on_m14();
    CHECK(is_symmetric(rel));
    std::vector<Stratum> span = decorated_strata(rel.ambient, 2);
    for (const Stratum& s : span) {
        CAPTURE(describe(s));
        CHECK(pair(rel, single(s)) == 0);
    }
    PairingReport orb = equal_by_pairing(rel, TautClass(rel.ambient), {SpanningSet::orbits});
    CHECK(orb.equal);
    CHECK(orbit_representatives(span).size() < span.size());
}

TEST_CASE("serial and parallel pairing agree") {
    TautClass x = single(psi_monomial(1, {1, 1, 0}));
    std::vector<TautClass> tests;
    for (const Stratum& s : decorated_strata(x.ambient, 1)) tests.push_back(single(s));
    clear_pairing_cache();
    auto serial = pair_all(x, tests, false);
    clear_pairing_cache();
    auto parallel = pair_all(x, tests, true);
    CHECK(serial == parallel);
}

TEST_CASE("genus-one topological recursion") {
    // psi_1 = lambda_1 + boundary with a genus-0 side holding markings 1 and 2, on M_{1,2}.
    StableGraph g;
    int a = g.add_vertex(1), b = g.add_vertex(0);
    g.add_leg(b, 1);
    g.add_leg(b, 2);
    g.add_edge(a, b);
    TautClass rhs = lambda_class(1, 2) + single(Stratum::bare(g));
    CHECK(equal_by_pairing(single(psi_monomial(1, {1, 0})), rhs).equal);
}

TEST_CASE("pairing rejects mismatched input") {
    CHECK_THROWS(equal_by_pairing(single(psi_monomial(1, {1})), single(psi_monomial(1, {1, 0}))));
    CHECK_THROWS(equal_by_pairing(single(psi_monomial(1, {1, 0})), single(psi_monomial(1, {1, 1}))));
    CHECK_THROWS(lambda_class(3, 1));
}
