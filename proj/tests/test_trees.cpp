#include <functional>
#include <set>

#include "support.hpp"
#include "taut/enumerate.hpp"
#include "taut/trees.hpp"

using namespace taut;

namespace {

// Leg values with a_0 = 0 and a_n = -(a_1+...+a_{n-1}).
std::map<int, MultiPoly> balanced_with_zero(int n) {
    std::map<int, MultiPoly> m;
    MultiPoly last(n - 1, 1);
    for (int i = 1; i < n; ++i) {
        m[i] = MultiPoly::variable(n - 1, i - 1, 1);
        last -= m[i];
    }
    m[n] = last;
    m[0] = MultiPoly(n - 1, 1);
    return m;
}

struct BruteTree {
    std::vector<int> parent, genus, extra;
    std::vector<std::vector<int>> marks;
};

// Complete, stable and admissible trees straight from the definitions, keyed canonically.
std::set<std::string> brute_force_B_keys(int g, const std::vector<int>& d, int max_vertices) {
    int n = static_cast<int>(d.size());
    std::set<std::string> keys;
    for (int V = 1; V <= max_vertices; ++V) {
        BruteTree t;
        t.parent.assign(V, -1);
        t.genus.assign(V, 0);
        t.extra.assign(V, 0);
        t.marks.assign(V, {});
        std::vector<int> level(V, 1);
        auto check_and_record = [&]() {
            int D = *std::max_element(level.begin(), level.end());
            std::vector<std::vector<int>> children(V);
            for (int v = 1; v < V; ++v) children[t.parent[v]].push_back(v);
            auto q_child = [&](int c) { return t.extra[c] - 1; };
            for (int v = 0; v < V; ++v) {
                int val = static_cast<int>(children[v].size() + t.marks[v].size()) + (v ? 1 : 0);
                if (2 * t.genus[v] - 2 + val + t.extra[v] <= 0) return;
                if (t.genus[v] == 0) {
                    std::vector<int> qs;
                    for (int c : children[v]) qs.push_back(q_child(c));
                    for (int m : t.marks[v]) qs.push_back(d[m - 1]);
                    if (qs.size() == 1 && t.extra[v] != qs[0] + 1) return;
                    if (qs.size() == 2 && t.extra[v] != qs[0] + qs[1]) return;
                }
            }
            for (int k = 1; k <= D; ++k) {
                bool ok = false;
                for (int v = 0; v < V; ++v) {
                    if (level[v] != k) continue;
                    int em = static_cast<int>(children[v].size() + t.marks[v].size());
                    if (2 * t.genus[v] - 2 + em + (v ? 1 : 0) > 0) ok = true;
                }
                if (!ok) return;
            }
            for (int k = 1; k < D; ++k) {
                int qs = 0, gs = 0;
                for (int v = 0; v < V; ++v) {
                    if (level[v] <= k) gs += t.genus[v];
                    if (level[v] == k)
                        for (int c : children[v]) qs += q_child(c);
                }
                if (qs > 2 * gs - 2) return;
            }
            StableGraph gr;
            for (int v = 0; v < V; ++v) gr.add_vertex(t.genus[v]);
            std::vector<int> q;
            std::vector<int> child_half(V, -1);
            for (int v = 1; v < V; ++v) child_half[v] = gr.add_edge(t.parent[v], v).first;
            for (int v = 0; v < V; ++v)
                for (int m : t.marks[v]) gr.add_leg(v, m);
            std::vector<int> ht(gr.num_half_edges(), 0);
            for (int v = 1; v < V; ++v) ht[child_half[v]] = q_child(v) + 1;
            for (int h = 0; h < gr.num_half_edges(); ++h)
                if (gr.partner[h] < 0) ht[h] = d[gr.label[h] - 1] + 1;
            std::vector<std::vector<int>> vt(V);
            for (int v = 0; v < V; ++v) vt[v] = {level[v], t.extra[v]};
            keys.insert(code_key(canonicalize(gr, vt, ht).code));
        };
        std::function<void(int)> extras = [&](int v) {
            if (v == V) {
                check_and_record();
                return;
            }
            for (int e = 1; e <= std::max(1, 2 * g - 1); ++e) {
                t.extra[v] = e;
                extras(v + 1);
            }
        };
        auto shape_ok = [&]() {
            int D = *std::max_element(level.begin(), level.end());
            std::vector<bool> has_child(V, false), reaches(V, false);
            for (int v = 1; v < V; ++v) has_child[t.parent[v]] = true;
            for (int v = 0; v < V; ++v) {
                if (!has_child[v] && level[v] != D) return false;
                if (level[v] == D && t.marks[v].empty()) return false;
                if (!t.marks[v].empty() && level[v] != D) return false;
            }
            return true;
        };
        std::function<void(int)> marks = [&](int m) {
            if (m > n) {
                if (shape_ok()) extras(1);
                return;
            }
            for (int v = 0; v < V; ++v) {
                t.marks[v].push_back(m);
                marks(m + 1);
                t.marks[v].pop_back();
            }
        };
        std::function<void(int, int)> genera = [&](int v, int left) {
            if (v == V - 1) {
                t.genus[v] = left;
                marks(1);
                return;
            }
            for (int x = 0; x <= left; ++x) {
                t.genus[v] = x;
                genera(v + 1, left - x);
            }
        };
        std::function<void(int)> parents = [&](int v) {
            if (v == V) {
                genera(0, g);
                return;
            }
            for (int p = 0; p < v; ++p) {
                t.parent[v] = p;
                level[v] = level[p] + 1;
                parents(v + 1);
            }
        };
        parents(1);
    }
    return keys;
}

}  // namespace

TEST_CASE("flow conserves multiplicity at every vertex") {
    for (int g = 0; g <= 1; ++g)
        for (int n = 2; n <= 4; ++n)
            for (int m = 1; m <= 3; ++m) {
                if (g == 0 && n < 3) continue;
                auto values = standard_leg_values(n);
                for (const StableGraph& t : enumerate_stable_trees(g, n, m, true)) {
                    auto a = flow(t, values);
                    for (int h = 0; h < t.num_half_edges(); ++h) {
                        if (t.partner[h] >= 0) CHECK(a[h] == -a[t.partner[h]]);
                        else CHECK(a[h] == values.at(t.label[h]));
                    }
                    for (const auto& hs : t.half_edges_by_vertex()) {
                        MultiPoly s(n, 1);
                        for (int h : hs) s += a[h];
                        CHECK(s.is_zero());
                    }
                }
            }
}

TEST_CASE("rooted view of a tree") {
    StableGraph t;
    int a = t.add_vertex(0), b = t.add_vertex(1), c = t.add_vertex(0);
    t.add_leg(a, 0);
    t.add_leg(a, 1);
    t.add_edge(a, b);
    t.add_edge(b, c);
    t.add_leg(c, 2);
    t.add_leg(c, 3);
    for (int root = 0; root < 3; ++root) {
        RootedView rv = root_tree(t, root);
        CHECK(rv.descendants[root].size() == 3);
        CHECK(rv.parent_half[root] == -1);
        int children = 0;
        for (const auto& ch : rv.children_half) children += static_cast<int>(ch.size());
        CHECK(children == 2);
    }
    RootedView rv = root_tree(t, a);
    CHECK(rv.level == std::vector<int>{1, 2, 3});
    CHECK(rv.r == std::vector<int>{1, 2, 1});
}

TEST_CASE("tree coefficient of a two-vertex tree") {
    StableGraph t;
    int root = t.add_vertex(0), child = t.add_vertex(1);
    t.add_leg(root, 0);
    t.add_leg(root, 1);
    t.add_edge(root, child);
    t.add_leg(child, 2);
    auto values = standard_leg_values(2);
    // r(root) = 1, r(child) = 2, so the factor is (1/3)(2/2) and the edge carries a_2.
    CHECK(coeff_a(t, flow(t, values)) == MultiPoly::variable(2, 1, 1) * Rational(1, 3));
}

TEST_CASE("inserted-vertex coefficients cancel when a_0 vanishes") {
    for (int g = 0; g <= 2; ++g)
        for (int n = 1; n <= 4; ++n)
            for (int m = 1; m <= 3; ++m) {
                if (2 * g - 2 + n <= 0 || n < 2) continue;
                auto values = balanced_with_zero(n);
                for (const StableGraph& t : enumerate_stable_trees(g, n, m)) {
                    PhiMaps phi = phi_maps(t);
                    CHECK(phi.legs.size() == static_cast<std::size_t>(t.num_legs()));
                    CHECK(phi.edges.size() == static_cast<std::size_t>(t.num_vertices() - 1));
                    MultiPoly total(n - 1, 1);
                    for (const auto& s : phi.legs) total += coeff_a(s, flow(s, values));
                    for (const auto& s : phi.edges) total += coeff_a(s, flow(s, values));
                    CHECK(total.is_zero());
                }
            }
}

TEST_CASE("complete trees match a brute-force generator") {
    std::vector<std::pair<int, std::vector<int>>> cases{{0, {1, 0, 0}}, {1, {1}},    {1, {2}},    {1, {1, 1}},
                                                        {1, {2, 1}},    {2, {3}},    {2, {4}},    {2, {2, 1}},
                                                        {2, {1, 1}},    {2, {2, 2}}, {2, {3, 1}}, {2, {0, 2}},
                                                        {1, {1, 1, 1}}, {2, {1, 1, 1}}};
    for (const auto& [g, d] : cases) {
        CAPTURE(g);
        CAPTURE(d.size());
        std::set<std::string> mine;
        for (const CompleteTree& t : enumerate_B_trees(g, d)) {
            CHECK(complete_tree_violations(t).empty());
            CHECK(is_admissible(t));
            mine.insert(t.key());
        }
        int vmax = 2 * g + static_cast<int>(d.size()) + 1;
        CHECK(mine == brute_force_B_keys(g, d, vmax));
    }
}
