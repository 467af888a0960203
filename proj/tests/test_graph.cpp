#include "doctest.h"
#include "taut/enumerate.hpp"
#include "taut/graph.hpp"

#include <array>
#include <numeric>
#include <random>

using namespace taut;

namespace {

// Same graph with vertices and half-edges renumbered at random.
StableGraph shuffle(const StableGraph& g, std::mt19937& rng) {
    std::vector<int> pv(g.num_vertices()), ph(g.num_half_edges());
    std::iota(pv.begin(), pv.end(), 0);
    std::iota(ph.begin(), ph.end(), 0);
    std::shuffle(pv.begin(), pv.end(), rng);
    std::shuffle(ph.begin(), ph.end(), rng);
    StableGraph r;
    r.genus.assign(g.num_vertices(), 0);
    for (int v = 0; v < g.num_vertices(); ++v) r.genus[pv[v]] = g.genus[v];
    r.vertex.assign(g.num_half_edges(), 0);
    r.partner.assign(g.num_half_edges(), -1);
    r.label.assign(g.num_half_edges(), -1);
    for (int h = 0; h < g.num_half_edges(); ++h) {
        r.vertex[ph[h]] = pv[g.vertex[h]];
        r.partner[ph[h]] = g.partner[h] < 0 ? -1 : ph[g.partner[h]];
        r.label[ph[h]] = g.label[h];
    }
    return r;
}

std::vector<StableGraph> sample_graphs() {
    std::vector<StableGraph> all;
    for (auto [g, n, e] : std::vector<std::array<int, 3>>{{0, 5, 2}, {0, 6, 3}, {1, 3, 2}, {1, 2, 3}, {2, 0, 3},
                                                          {2, 2, 2}, {2, 3, 3}, {3, 0, 3}, {2, 1, 4}}) {
        std::vector<int> m;
        for (int i = 1; i <= n; ++i) m.push_back(i);
        for (auto& x : enumerate_graphs(g, m, e)) all.push_back(x);
    }
    std::vector<StableGraph> pick;
    std::size_t step = std::max<std::size_t>(1, all.size() / 50);
    for (std::size_t i = 0; i < all.size() && pick.size() < 50; i += step) pick.push_back(all[i]);
    return pick;
}

}  // namespace

TEST_CASE("canonical form is invariant under relabeling") {
    std::mt19937 rng(7);
    auto graphs = sample_graphs();
    REQUIRE(graphs.size() == 50);
    for (const auto& g : graphs) {
        Canonical c = canonicalize(g);
        long aut = brute_force_automorphisms(g);
        CHECK(c.automorphisms == aut);
        for (int t = 0; t < 100; ++t) {
            StableGraph s = shuffle(g, rng);
            Canonical d = canonicalize(s);
            CHECK(d.code == c.code);
            CHECK(d.automorphisms == aut);
            CHECK(isomorphic(s, g));
        }
    }
}

TEST_CASE("distinct classes have distinct keys") {
    std::vector<int> m{1, 2};
    for (int e = 0; e <= 4; ++e) {
        auto gs = enumerate_graphs(2, m, e);
        for (std::size_t i = 0; i < gs.size(); ++i)
            for (std::size_t j = i + 1; j < gs.size(); ++j) CHECK(!isomorphic(gs[i], gs[j]));
    }
}

TEST_CASE("boundary strata counts") {
    auto count = [](int g, std::vector<int> m) {
        std::size_t c = 0;
        for (int e = 0; e <= 3 * g - 3 + static_cast<int>(m.size()); ++e) c += enumerate_graphs(g, m, e).size();
        return c;
    };
    CHECK(count(2, {}) == 7);
    CHECK(count(1, {1, 2}) == 5);
    CHECK(count(0, {1, 2, 3, 4, 5}) == 26);
    CHECK(count(1, {1}) == 2);
    CHECK(enumerate_graphs(2, {1}, 1).size() == 2);
    CHECK(enumerate_graphs(0, {1, 2, 3, 4, 5, 6}, 1).size() == 25);
}

TEST_CASE("validation reports failures") {
    StableGraph g;
    int v = g.add_vertex(0);
    g.add_leg(v, 1);
    g.add_leg(v, 2);
    CHECK(!validate(g).empty());
    g.add_leg(v, 3);
    CHECK(validate(g).empty());
    g.add_leg(v, 3);
    CHECK(!validate(g).empty());
}

TEST_CASE("edge contraction") {
    StableGraph g;
    int a = g.add_vertex(1), b = g.add_vertex(0);
    g.add_leg(b, 1);
    g.add_leg(b, 2);
    auto [h, p] = g.add_edge(a, b);
    auto [l, lp] = g.add_edge(b, b);
    (void)p;
    (void)lp;
    Contraction c = contract_edges(g, {h});
    CHECK(c.graph.num_vertices() == 1);
    CHECK(c.graph.genus[0] == 1);
    Contraction d = contract_edges(g, {h, l});
    CHECK(d.graph.genus[0] == 2);
    CHECK(d.graph.num_edges() == 0);
}
