#include "taut/trees.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <set>
#include <stdexcept>

namespace taut {

RootedView root_tree(const StableGraph& tree, int root) {
    if (!tree.is_tree()) throw std::invalid_argument("graph is not a tree");
    int nv = tree.num_vertices();
    RootedView rv;
    rv.root = root;
    rv.parent_half.assign(nv, -1);
    rv.children_half.assign(nv, {});
    rv.level.assign(nv, 0);
    rv.descendants.assign(nv, {});
    rv.r.assign(nv, 0);
    auto hev = tree.half_edges_by_vertex();
    std::vector<int> order{root};
    rv.level[root] = 1;
    for (std::size_t i = 0; i < order.size(); ++i) {
        int v = order[i];
        for (int h : hev[v]) {
            int p = tree.partner[h];
            if (p < 0 || h == rv.parent_half[v]) continue;
            int w = tree.vertex[p];
            rv.children_half[v].push_back(h);
            rv.parent_half[w] = p;
            rv.level[w] = rv.level[v] + 1;
            order.push_back(w);
        }
    }
    for (auto it = order.rbegin(); it != order.rend(); ++it) {
        int v = *it;
        rv.descendants[v].push_back(v);
        for (int h : rv.children_half[v]) {
            int w = tree.vertex[tree.partner[h]];
            rv.descendants[v].insert(rv.descendants[v].end(), rv.descendants[w].begin(), rv.descendants[w].end());
        }
        rv.r[v] = 2 * tree.genus[v] - 2 + static_cast<int>(hev[v].size());
    }
    return rv;
}

std::vector<MultiPoly> flow(const StableGraph& tree, const std::map<int, MultiPoly>& leg_values) {
    if (leg_values.empty()) throw std::invalid_argument("no leg values");
    const MultiPoly& any = leg_values.begin()->second;
    MultiPoly total(any.nvars(), any.offset());
    for (const auto& [m, v] : leg_values) total += v;
    if (!total.is_zero()) throw std::invalid_argument("nonzero total flux");
    RootedView rv = root_tree(tree, 0);
    int nh = tree.num_half_edges();
    std::vector<MultiPoly> a(nh, MultiPoly(any.nvars(), any.offset()));
    for (int h = 0; h < nh; ++h)
        if (tree.partner[h] < 0) {
            auto it = leg_values.find(tree.label[h]);
            if (it == leg_values.end()) throw std::invalid_argument("missing leg value");
            a[h] = it->second;
        }
    for (int w = 0; w < tree.num_vertices(); ++w) {
        int p = rv.parent_half[w];
        if (p < 0) continue;
        MultiPoly below(any.nvars(), any.offset());
        std::set<int> desc(rv.descendants[w].begin(), rv.descendants[w].end());
        for (int h = 0; h < nh; ++h)
            if (tree.partner[h] < 0 && desc.count(tree.vertex[h])) below += a[h];
        a[tree.partner[p]] = below;
        a[p] = -below;
    }
    return a;
}

MultiPoly coeff_a(const StableGraph& tree, const std::vector<MultiPoly>& flow_values) {
    int h0 = tree.leg(0);
    if (h0 < 0) throw std::invalid_argument("tree has no leg 0");
    RootedView rv = root_tree(tree, tree.vertex[h0]);
    const MultiPoly& any = flow_values.at(h0);
    MultiPoly c = MultiPoly::constant(any.nvars(), 1, any.offset());
    Rational factor = 1;
    for (int v = 0; v < tree.num_vertices(); ++v) {
        for (int h : rv.children_half[v]) c = c * flow_values[h];
        int s = 0;
        for (int w : rv.descendants[v]) s += rv.r[w];
        factor *= Rational(rv.r[v], s);
    }
    factor.canonicalize();
    return c * factor;
}

std::map<int, MultiPoly> standard_leg_values(int n) {
    std::map<int, MultiPoly> m;
    MultiPoly sum(n, 1);
    for (int i = 0; i < n; ++i) {
        m[i + 1] = MultiPoly::variable(n, i, 1);
        sum += m[i + 1];
    }
    m[0] = -sum;
    return m;
}

PhiMaps phi_maps(const StableGraph& tree) {
    PhiMaps out;
    for (int h = 0; h < tree.num_half_edges(); ++h) {
        if (tree.partner[h] >= 0) continue;
        StableGraph t = tree;
        int v = t.vertex[h];
        int w = t.add_vertex(0);
        t.vertex[h] = w;
        t.add_leg(w, 0);
        t.add_edge(v, w);
        out.legs.push_back(std::move(t));
    }
    for (auto [h, p] : tree.edges()) {
        StableGraph t = tree;
        int x = t.add_vertex(0);
        int h1 = t.add_half_edge(x), p1 = t.add_half_edge(x);
        t.partner[h] = h1;
        t.partner[h1] = h;
        t.partner[p] = p1;
        t.partner[p1] = p;
        t.add_leg(x, 0);
        out.edges.push_back(std::move(t));
    }
    return out;
}

std::vector<int> CompleteTree::em_half_edges(int v) const {
    std::vector<int> r;
    for (int h = 0; h < tree.num_half_edges(); ++h)
        if (tree.vertex[h] == v && q[h] >= 0) r.push_back(h);
    return r;
}

bool CompleteTree::strongly_stable(int v) const {
    int n = static_cast<int>(em_half_edges(v).size()) + (v == root ? 0 : 1);
    return 2 * tree.genus[v] - 2 + n > 0;
}

std::string CompleteTree::key() const {
    std::vector<std::vector<int>> vt(tree.num_vertices());
    for (int v = 0; v < tree.num_vertices(); ++v) vt[v] = {level[v], extra[v]};
    std::vector<int> ht(tree.num_half_edges());
    for (int h = 0; h < tree.num_half_edges(); ++h) ht[h] = q[h] + 1;
    return code_key(canonicalize(tree, vt, ht).code);
}

std::vector<std::string> complete_tree_violations(const CompleteTree& t) {
    std::vector<std::string> out;
    const StableGraph& g = t.tree;
    if (!g.is_tree()) return {"not a tree"};
    RootedView rv = root_tree(g, t.root);
    int nv = g.num_vertices();
    int D = *std::max_element(rv.level.begin(), rv.level.end());
    if (D != t.depth) out.push_back("depth mismatch");
    for (int v = 0; v < nv; ++v) {
        if (rv.level[v] != t.level[v]) out.push_back("level mismatch at vertex " + std::to_string(v));
        bool deep = false;
        for (int w : rv.descendants[v])
            if (rv.level[w] == D) deep = true;
        if (!deep) out.push_back("vertex " + std::to_string(v) + " has no deepest descendant");
        int marks = 0;
        for (int h : g.half_edges_at(v))
            if (g.partner[h] < 0) ++marks;
        if (marks > 0 && rv.level[v] != D) out.push_back("marking above the deepest level");
        if (rv.level[v] == D && marks == 0) out.push_back("deepest vertex without marking");
        if (v == t.root && t.extra[v] != 0) out.push_back("extra legs at the root");
        if (v != t.root && t.extra[v] < 1) out.push_back("non-root vertex without extra legs");
        if (v != t.root) {
            int ph = g.partner[rv.parent_half[v]];
            if (t.q[ph] + 1 != t.extra[v]) out.push_back("power function inconsistent with extra legs");
        }
        if (2 * g.genus[v] - 2 + g.valence(v) + t.extra[v] <= 0) out.push_back("unstable vertex");
    }
    for (int h = 0; h < g.num_half_edges(); ++h) {
        bool em = g.partner[h] < 0 || rv.parent_half[g.vertex[h]] != h;
        if (em != (t.q[h] >= 0)) out.push_back("power function domain mismatch");
    }
    for (int k = 1; k <= D; ++k) {
        bool witness = false;
        for (int v = 0; v < nv; ++v)
            if (rv.level[v] == k && t.strongly_stable(v)) witness = true;
        if (!witness) out.push_back("level " + std::to_string(k) + " has no strongly stable vertex");
    }
    for (int v = 0; v < nv; ++v) {
        if (g.genus[v] != 0) continue;
        auto em = t.em_half_edges(v);
        if (em.size() == 1 && t.extra[v] != t.q[em[0]] + 1) out.push_back("genus-0 one-half-edge condition");
        if (em.size() == 2 && t.extra[v] != t.q[em[0]] + t.q[em[1]]) out.push_back("genus-0 two-half-edge condition");
    }
    return out;
}

bool is_admissible(const CompleteTree& t) {
    RootedView rv = root_tree(t.tree, t.root);
    for (int k = 1; k < t.depth; ++k) {
        int qs = 0, gs = 0;
        for (int v = 0; v < t.tree.num_vertices(); ++v) {
            if (rv.level[v] <= k) gs += t.tree.genus[v];
            if (rv.level[v] == k)
                for (int h : rv.children_half[v]) qs += t.q[h];
        }
        if (qs > 2 * gs - 2) return false;
    }
    return true;
}

namespace {

void set_partitions(const std::vector<int>& items, const std::function<void(const std::vector<std::vector<int>>&)>& f) {
    std::vector<std::vector<int>> blocks;
    std::function<void(std::size_t)> rec = [&](std::size_t i) {
        if (i == items.size()) {
            f(blocks);
            return;
        }
        for (std::size_t b = 0; b < blocks.size(); ++b) {
            blocks[b].push_back(items[i]);
            rec(i + 1);
            blocks[b].pop_back();
        }
        blocks.push_back({items[i]});
        rec(i + 1);
        blocks.pop_back();
    };
    rec(0);
}

void compositions(int total, int parts, const std::function<void(const std::vector<int>&)>& f) {
    std::vector<int> c(parts, 0);
    std::function<void(int, int)> rec = [&](int i, int left) {
        if (i == parts - 1) {
            c[i] = left;
            f(c);
            return;
        }
        for (int x = 0; x <= left; ++x) {
            c[i] = x;
            rec(i + 1, left - x);
        }
    };
    if (parts == 0) {
        if (total == 0) f(c);
        return;
    }
    rec(0, total);
}

struct Shape {
    std::vector<int> genus, parent, level;
    std::vector<std::vector<int>> markings;
};

struct Slot {
    int parent;
    std::vector<int> block;
    int budget;
};

struct BTreeGenerator {
    int g;
    std::vector<int> d;
    int D;
    std::vector<CompleteTree> out;

    void finish_shape(const Shape& s) {
        CompleteTree t;
        int nv = static_cast<int>(s.genus.size());
        std::vector<int> parent_edge_half(nv, -1);  // half-edge at the parent, in H^e_+
        for (int v = 0; v < nv; ++v) t.tree.add_vertex(s.genus[v]);
        for (int v = 0; v < nv; ++v) {
            if (s.parent[v] < 0) continue;
            auto [hp, hc] = t.tree.add_edge(s.parent[v], v);
            (void)hc;
            parent_edge_half[v] = hp;
        }
        for (int v = 0; v < nv; ++v)
            for (int m : s.markings[v]) t.tree.add_leg(v, m);
        t.root = 0;
        t.level = s.level;
        t.depth = D;
        t.q.assign(t.tree.num_half_edges(), -1);
        for (int h = 0; h < t.tree.num_half_edges(); ++h)
            if (t.tree.partner[h] < 0) t.q[h] = d[t.tree.label[h] - 1];
        t.extra.assign(nv, 0);
        std::vector<int> cum(D + 1, 0);
        for (int v = 0; v < nv; ++v) cum[s.level[v]] += s.genus[v];
        for (int k = 1; k <= D; ++k) cum[k] += cum[k - 1];
        std::vector<std::vector<int>> by_level(D + 1);
        for (int v = 0; v < nv; ++v)
            if (parent_edge_half[v] >= 0) by_level[s.level[s.parent[v]]].push_back(v);
        std::function<void(int, std::size_t, int)> rec = [&](int k, std::size_t i, int left) {
            if (k == D) {
                if (complete_tree_violations(t).empty()) out.push_back(t);
                return;
            }
            if (i == by_level[k].size()) {
                int nb = 2 * cum[k + 1] - 2;
                rec(k + 1, 0, nb);
                return;
            }
            int v = by_level[k][i];
            for (int x = 0; x <= left; ++x) {
                t.q[parent_edge_half[v]] = x;
                t.extra[v] = x + 1;
                rec(k, i + 1, left - x);
            }
            t.q[parent_edge_half[v]] = -1;
            t.extra[v] = 0;
        };
        if (D == 1) {
            if (complete_tree_violations(t).empty()) out.push_back(t);
            return;
        }
        rec(1, 0, 2 * cum[1] - 2);
    }

    static bool strongly_stable_shape(int genus, int branches, bool root) {
        return 2 * genus - 2 + branches + (root ? 0 : 1) > 0;
    }

    void level(int k, const std::vector<Slot>& slots, Shape& s, int cum_genus) {
        // Choose genus and children for each slot of level k, then recurse.
        std::vector<Slot> next;
        bool witness = false;
        std::function<void(std::size_t)> rec = [&](std::size_t i) {
            if (i == slots.size()) {
                if (!witness) return;
                int cg = cum_genus;
                for (std::size_t j = 0; j < slots.size(); ++j) cg += s.genus[s.genus.size() - slots.size() + j];
                if (k == D) {
                    finish_shape(s);
                    return;
                }
                if (2 * cg - 2 < 0) return;
                std::vector<Slot> nx = next;
                level(k + 1, nx, s, cg);
                return;
            }
            const Slot& sl = slots[i];
            int vid = static_cast<int>(s.genus.size() - slots.size() + i);
            bool root = sl.parent < 0;
            if (k == D) {
                s.genus[vid] = sl.budget;
                s.markings[vid] = sl.block;
                bool saved = witness;
                if (strongly_stable_shape(sl.budget, static_cast<int>(sl.block.size()), root)) witness = true;
                rec(i + 1);
                witness = saved;
                s.markings[vid].clear();
                return;
            }
            for (int gv = 0; gv <= sl.budget; ++gv) {
                s.genus[vid] = gv;
                set_partitions(sl.block, [&](const std::vector<std::vector<int>>& blocks) {
                    int r = static_cast<int>(blocks.size());
                    compositions(sl.budget - gv, r, [&](const std::vector<int>& gs) {
                        std::size_t mark = next.size();
                        for (int j = 0; j < r; ++j) next.push_back({vid, blocks[j], gs[j]});
                        bool saved = witness;
                        if (strongly_stable_shape(gv, r, root)) witness = true;
                        rec(i + 1);
                        witness = saved;
                        next.resize(mark);
                    });
                });
            }
        };
        // Allocate vertices for this level.
        for (const Slot& sl : slots) {
            s.genus.push_back(0);
            s.parent.push_back(sl.parent);
            s.level.push_back(k);
            s.markings.push_back({});
        }
        rec(0);
        for (std::size_t j = 0; j < slots.size(); ++j) {
            s.genus.pop_back();
            s.parent.pop_back();
            s.level.pop_back();
            s.markings.pop_back();
        }
    }
};

}  // namespace

std::vector<CompleteTree> enumerate_B_trees(int g, const std::vector<int>& d) {
    int n = static_cast<int>(d.size());
    if (n == 0) throw std::invalid_argument("B-class needs at least one marking");
    for (int x : d)
        if (x < 0) throw std::invalid_argument("negative degree");
    std::vector<int> marks(n);
    std::iota(marks.begin(), marks.end(), 1);
    std::vector<CompleteTree> all;
    std::set<std::string> seen;
    for (int D = 1; D <= g + n; ++D) {
        BTreeGenerator gen{g, d, D, {}};
        Shape s;
        gen.level(1, {Slot{-1, marks, g}}, s, 0);
        for (auto& t : gen.out) {
            if (!is_admissible(t)) continue;
            if (seen.insert(t.key()).second) all.push_back(std::move(t));
        }
    }
    return all;
}

}  // namespace taut
