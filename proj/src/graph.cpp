#include "taut/graph.hpp"

#include <algorithm>
#include <array>
#include <functional>
#include <map>
#include <numeric>
#include <set>
#include <sstream>
#include <stdexcept>

namespace taut {

int StableGraph::add_vertex(int g) {
    genus.push_back(g);
    return num_vertices() - 1;
}

int StableGraph::add_half_edge(int v) {
    vertex.push_back(v);
    partner.push_back(-1);
    label.push_back(-1);
    return num_half_edges() - 1;
}

int StableGraph::add_leg(int v, int marking) {
    int h = add_half_edge(v);
    label[h] = marking;
    return h;
}

std::pair<int, int> StableGraph::add_edge(int v1, int v2) {
    int h1 = add_half_edge(v1);
    int h2 = add_half_edge(v2);
    partner[h1] = h2;
    partner[h2] = h1;
    return {h1, h2};
}

int StableGraph::num_edges() const {
    int c = 0;
    for (int p : partner)
        if (p >= 0) ++c;
    return c / 2;
}

int StableGraph::num_legs() const {
    int c = 0;
    for (int l : label)
        if (l >= 0) ++c;
    return c;
}

int StableGraph::total_genus() const {
    return std::accumulate(genus.begin(), genus.end(), 0) + b1();
}

int StableGraph::valence(int v) const {
    return static_cast<int>(std::count(vertex.begin(), vertex.end(), v));
}

std::vector<int> StableGraph::half_edges_at(int v) const {
    std::vector<int> r;
    for (int h = 0; h < num_half_edges(); ++h)
        if (vertex[h] == v) r.push_back(h);
    return r;
}

std::vector<std::vector<int>> StableGraph::half_edges_by_vertex() const {
    std::vector<std::vector<int>> r(num_vertices());
    for (int h = 0; h < num_half_edges(); ++h) r[vertex[h]].push_back(h);
    return r;
}

std::vector<std::pair<int, int>> StableGraph::edges() const {
    std::vector<std::pair<int, int>> r;
    for (int h = 0; h < num_half_edges(); ++h)
        if (partner[h] > h) r.emplace_back(h, partner[h]);
    return r;
}

std::vector<int> StableGraph::markings() const {
    std::vector<int> r;
    for (int l : label)
        if (l >= 0) r.push_back(l);
    std::sort(r.begin(), r.end());
    return r;
}

int StableGraph::leg(int marking) const {
    for (int h = 0; h < num_half_edges(); ++h)
        if (label[h] == marking) return h;
    return -1;
}

int StableGraph::dimension() const { return 3 * total_genus() - 3 + num_legs(); }

StableGraph trivial_graph(int g, const std::vector<int>& markings) {
    StableGraph G;
    G.add_vertex(g);
    for (int m : markings) G.add_leg(0, m);
    return G;
}

std::vector<Violation> validate(const StableGraph& g) {
    std::vector<Violation> out;
    int nv = g.num_vertices(), nh = g.num_half_edges();
    if (nv == 0) {
        out.push_back({"nonempty", "graph has no vertices"});
        return out;
    }
    if (static_cast<int>(g.partner.size()) != nh || static_cast<int>(g.label.size()) != nh) {
        out.push_back({"shape", "half-edge arrays have inconsistent lengths"});
        return out;
    }
    for (int v = 0; v < nv; ++v)
        if (g.genus[v] < 0) out.push_back({"genus", "vertex " + std::to_string(v) + " has negative genus"});
    std::set<int> seen;
    for (int h = 0; h < nh; ++h) {
        if (g.vertex[h] < 0 || g.vertex[h] >= nv) {
            out.push_back({"attachment", "half-edge " + std::to_string(h) + " attached to no vertex"});
            return out;
        }
        int p = g.partner[h];
        if (p >= 0) {
            if (p >= nh || g.partner[p] != h || p == h)
                out.push_back({"involution", "half-edge " + std::to_string(h) + " has inconsistent partner"});
            if (g.label[h] >= 0)
                out.push_back({"involution", "half-edge " + std::to_string(h) + " is both edge and leg"});
        } else {
            if (g.label[h] < 0)
                out.push_back({"legs", "half-edge " + std::to_string(h) + " is unpaired without marking"});
            else if (!seen.insert(g.label[h]).second)
                out.push_back({"legs", "marking " + std::to_string(g.label[h]) + " repeated"});
        }
    }
    if (!out.empty()) return out;
    for (int v = 0; v < nv; ++v) {
        int n = g.valence(v);
        if (2 * g.genus[v] - 2 + n <= 0)
            out.push_back({"stability", "vertex " + std::to_string(v) + " (g=" + std::to_string(g.genus[v]) +
                                            ", n=" + std::to_string(n) + ") is unstable"});
    }
    std::vector<int> comp(nv);
    std::iota(comp.begin(), comp.end(), 0);
    std::function<int(int)> find = [&](int x) { return comp[x] == x ? x : comp[x] = find(comp[x]); };
    for (auto [h, p] : g.edges()) comp[find(g.vertex[h])] = find(g.vertex[p]);
    for (int v = 0; v < nv; ++v)
        if (find(v) != find(0)) {
            out.push_back({"connected", "vertex " + std::to_string(v) + " is disconnected"});
            break;
        }
    return out;
}

namespace {

using Sig = std::vector<int>;

std::vector<int> rank_signatures(const std::vector<Sig>& sigs) {
    std::vector<Sig> sorted = sigs;
    std::sort(sorted.begin(), sorted.end());
    sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());
    std::vector<int> r(sigs.size());
    for (std::size_t i = 0; i < sigs.size(); ++i)
        r[i] = static_cast<int>(std::lower_bound(sorted.begin(), sorted.end(), sigs[i]) - sorted.begin());
    return r;
}

int count_colors(const std::vector<int>& c) {
    return c.empty() ? 0 : *std::max_element(c.begin(), c.end()) + 1;
}

struct Canonizer {
    const StableGraph& g;
    const std::vector<std::vector<int>>& vtags;
    const std::vector<int>& htags;
    std::vector<std::vector<int>> hev;  // half-edges by vertex
    std::vector<int> best_code;
    std::vector<int> best_pos;
    long best_count = 0;

    Canonizer(const StableGraph& gr, const std::vector<std::vector<int>>& vt, const std::vector<int>& ht)
        : g(gr), vtags(vt), htags(ht), hev(gr.half_edges_by_vertex()) {}

    std::vector<int> initial_colors() const {
        int nv = g.num_vertices();
        std::vector<Sig> sigs(nv);
        for (int v = 0; v < nv; ++v) {
            Sig& s = sigs[v];
            s.push_back(g.genus[v]);
            s.push_back(static_cast<int>(vtags[v].size()));
            s.insert(s.end(), vtags[v].begin(), vtags[v].end());
            std::vector<std::pair<int, int>> legs, loops;
            int deg = 0;
            for (int h : hev[v]) {
                int p = g.partner[h];
                if (p < 0) legs.emplace_back(g.label[h], htags[h]);
                else if (g.vertex[p] == v) {
                    if (h < p) loops.emplace_back(std::min(htags[h], htags[p]), std::max(htags[h], htags[p]));
                } else ++deg;
            }
            std::sort(legs.begin(), legs.end());
            std::sort(loops.begin(), loops.end());
            s.push_back(static_cast<int>(legs.size()));
            for (auto [a, b] : legs) s.insert(s.end(), {a, b});
            s.push_back(static_cast<int>(loops.size()));
            for (auto [a, b] : loops) s.insert(s.end(), {a, b});
            s.push_back(deg);
        }
        return rank_signatures(sigs);
    }

    void refine(std::vector<int>& colors) const {
        int nv = g.num_vertices();
        int k = count_colors(colors);
        while (true) {
            std::vector<Sig> sigs(nv);
            for (int v = 0; v < nv; ++v) {
                std::vector<std::array<int, 3>> nb;
                for (int h : hev[v]) {
                    int p = g.partner[h];
                    if (p < 0 || g.vertex[p] == v) continue;
                    nb.push_back({colors[g.vertex[p]], htags[h], htags[p]});
                }
                std::sort(nb.begin(), nb.end());
                Sig& s = sigs[v];
                s.push_back(colors[v]);
                for (auto& t : nb) s.insert(s.end(), t.begin(), t.end());
            }
            colors = rank_signatures(sigs);
            int k2 = count_colors(colors);
            if (k2 == k) return;
            k = k2;
        }
    }

    std::vector<std::array<int, 4>> edge_tuples(const std::vector<int>& pos) const {
        std::vector<std::array<int, 4>> et;
        for (auto [h, p] : g.edges()) {
            std::array<int, 2> a{pos[g.vertex[h]], htags[h]}, b{pos[g.vertex[p]], htags[p]};
            if (b < a) std::swap(a, b);
            et.push_back({a[0], a[1], b[0], b[1]});
        }
        std::sort(et.begin(), et.end());
        return et;
    }

    std::vector<int> leaf_code(const std::vector<int>& pos) const {
        int nv = g.num_vertices();
        std::vector<int> order(nv);
        for (int v = 0; v < nv; ++v) order[pos[v]] = v;
        std::vector<int> code{nv, g.num_legs(), g.num_edges()};
        for (int v : order) {
            code.push_back(g.genus[v]);
            code.push_back(static_cast<int>(vtags[v].size()));
            code.insert(code.end(), vtags[v].begin(), vtags[v].end());
            std::vector<std::pair<int, int>> legs;
            for (int h : hev[v])
                if (g.partner[h] < 0) legs.emplace_back(g.label[h], htags[h]);
            std::sort(legs.begin(), legs.end());
            code.push_back(static_cast<int>(legs.size()));
            for (auto [a, b] : legs) code.insert(code.end(), {a, b});
        }
        for (auto& t : edge_tuples(pos)) code.insert(code.end(), t.begin(), t.end());
        return code;
    }

    void search(std::vector<int> colors) {
        refine(colors);
        int nv = g.num_vertices();
        if (count_colors(colors) == nv) {
            std::vector<int> code = leaf_code(colors);
            if (best_count == 0 || code < best_code) {
                best_code = std::move(code);
                best_pos = colors;
                best_count = 1;
            } else if (code == best_code) {
                ++best_count;
            }
            return;
        }
        std::vector<int> size(nv, 0);
        for (int c : colors) ++size[c];
        int cell = 0;
        while (size[cell] < 2) ++cell;
        for (int v = 0; v < nv; ++v) {
            if (colors[v] != cell) continue;
            std::vector<Sig> sigs(nv);
            for (int u = 0; u < nv; ++u) sigs[u] = {colors[u], (colors[u] == cell && u != v) ? 1 : 0};
            search(rank_signatures(sigs));
        }
    }
};

}  // namespace

Canonical canonicalize(const StableGraph& g, const std::vector<std::vector<int>>& vertex_tags,
                       const std::vector<int>& half_tags) {
    Canonizer cz(g, vertex_tags, half_tags);
    cz.search(cz.initial_colors());
    Canonical out;
    out.code = cz.best_code;
    const std::vector<int>& pos = cz.best_pos;
    int nv = g.num_vertices(), nh = g.num_half_edges();
    out.vertex_map = pos;
    out.half_map.assign(nh, -1);
    StableGraph& c = out.graph;
    std::vector<int> order(nv);
    for (int v = 0; v < nv; ++v) order[pos[v]] = v;
    for (int v : order) c.add_vertex(g.genus[v]);
    std::vector<int> legs;
    for (int h = 0; h < nh; ++h)
        if (g.partner[h] < 0) legs.push_back(h);
    std::sort(legs.begin(), legs.end(), [&](int a, int b) { return g.label[a] < g.label[b]; });
    for (int h : legs) out.half_map[h] = c.add_leg(pos[g.vertex[h]], g.label[h]);
    std::vector<std::pair<std::array<int, 4>, std::pair<int, int>>> es;
    for (auto [h, p] : g.edges()) {
        std::array<int, 2> a{pos[g.vertex[h]], half_tags[h]}, b{pos[g.vertex[p]], half_tags[p]};
        int ha = h, hb = p;
        if (b < a) {
            std::swap(a, b);
            std::swap(ha, hb);
        }
        es.push_back({{a[0], a[1], b[0], b[1]}, {ha, hb}});
    }
    std::stable_sort(es.begin(), es.end(), [](const auto& x, const auto& y) { return x.first < y.first; });
    long edge_factor = 1;
    for (std::size_t i = 0; i < es.size();) {
        std::size_t j = i;
        while (j < es.size() && es[j].first == es[i].first) ++j;
        long k = static_cast<long>(j - i);
        for (long t = 2; t <= k; ++t) edge_factor *= t;
        const auto& t = es[i].first;
        if (t[0] == t[2] && t[1] == t[3]) edge_factor <<= k;
        i = j;
    }
    for (auto& [t, hp] : es) {
        auto [n1, n2] = c.add_edge(t[0], t[2]);
        out.half_map[hp.first] = n1;
        out.half_map[hp.second] = n2;
    }
    out.automorphisms = cz.best_count * edge_factor;
    return out;
}

Canonical canonicalize(const StableGraph& g) {
    std::vector<std::vector<int>> vt(g.num_vertices());
    std::vector<int> ht(g.num_half_edges(), 0);
    return canonicalize(g, vt, ht);
}

std::string code_key(const std::vector<int>& code) {
    std::string s;
    s.reserve(code.size() * 3);
    for (std::size_t i = 0; i < code.size(); ++i) {
        if (i) s += ',';
        s += std::to_string(code[i]);
    }
    return s;
}

std::string graph_key(const StableGraph& g) { return code_key(canonicalize(g).code); }

long brute_force_automorphisms(const StableGraph& g) {
    int nv = g.num_vertices(), nh = g.num_half_edges();
    std::vector<int> vperm(nv);
    std::iota(vperm.begin(), vperm.end(), 0);
    long count = 0;
    do {
        bool ok = true;
        for (int v = 0; v < nv && ok; ++v)
            if (g.genus[vperm[v]] != g.genus[v]) ok = false;
        if (!ok) continue;
        // Extend to half-edges: legs fixed; try all bijections of non-leg half-edges.
        std::vector<int> inner;
        for (int h = 0; h < nh; ++h)
            if (g.partner[h] >= 0) inner.push_back(h);
        for (int h = 0; h < nh && ok; ++h)
            if (g.partner[h] < 0 && vperm[g.vertex[h]] != g.vertex[h]) ok = false;
        if (!ok) continue;
        std::vector<int> img = inner;
        do {
            std::vector<int> hm(nh, -1);
            for (int h = 0; h < nh; ++h)
                if (g.partner[h] < 0) hm[h] = h;
            for (std::size_t i = 0; i < inner.size(); ++i) hm[inner[i]] = img[i];
            bool good = true;
            for (int h : inner) {
                if (g.vertex[hm[h]] != vperm[g.vertex[h]] || hm[g.partner[h]] != g.partner[hm[h]]) {
                    good = false;
                    break;
                }
            }
            if (good) ++count;
        } while (std::next_permutation(img.begin(), img.end()));
    } while (std::next_permutation(vperm.begin(), vperm.end()));
    return count;
}

namespace {

struct IsoSearch {
    const StableGraph& a;
    const StableGraph& b;
    bool first_only;
    int nv;
    std::vector<std::vector<int>> ha, hb;
    std::vector<std::vector<int>> ma, mb;  // edge multiplicities
    std::vector<std::vector<int>> la, lb;  // sorted leg labels per vertex
    std::vector<int> order;
    std::vector<int> vmap, used;
    std::vector<GraphIso> out;

    IsoSearch(const StableGraph& A, const StableGraph& B, bool fo)
        : a(A), b(B), first_only(fo), nv(A.num_vertices()) {
        ha = a.half_edges_by_vertex();
        hb = b.half_edges_by_vertex();
        auto mult = [&](const StableGraph& g) {
            std::vector<std::vector<int>> m(nv, std::vector<int>(nv, 0));
            for (auto [h, p] : g.edges()) {
                int u = g.vertex[h], v = g.vertex[p];
                m[u][v]++;
                if (u != v) m[v][u]++;
            }
            return m;
        };
        ma = mult(a);
        mb = mult(b);
        auto legs = [&](const StableGraph& g, const std::vector<std::vector<int>>& hv) {
            std::vector<std::vector<int>> l(nv);
            for (int v = 0; v < nv; ++v) {
                for (int h : hv[v])
                    if (g.partner[h] < 0) l[v].push_back(g.label[h]);
                std::sort(l[v].begin(), l[v].end());
            }
            return l;
        };
        la = legs(a, ha);
        lb = legs(b, hb);
        // Vertices with legs first, then breadth-first.
        std::vector<int> seen(nv, 0);
        std::vector<int> start;
        for (int v = 0; v < nv; ++v)
            if (!la[v].empty()) start.push_back(v);
        if (start.empty() && nv) start.push_back(0);
        for (int s : start) {
            if (seen[s]) continue;
            seen[s] = 1;
            order.push_back(s);
            for (std::size_t i = order.size() - 1; i < order.size(); ++i)
                for (int w = 0; w < nv; ++w)
                    if (!seen[w] && ma[order[i]][w]) {
                        seen[w] = 1;
                        order.push_back(w);
                    }
        }
        for (int v = 0; v < nv; ++v)
            if (!seen[v]) order.push_back(v);
        vmap.assign(nv, -1);
        used.assign(nv, 0);
    }

    bool compatible(int u, int x) const {
        if (a.genus[u] != b.genus[x] || ha[u].size() != hb[x].size() || la[u] != lb[x] || ma[u][u] != mb[x][x])
            return false;
        for (int w = 0; w < nv; ++w)
            if (vmap[w] >= 0 && ma[u][w] != mb[x][vmap[w]]) return false;
        return true;
    }

    void emit_half_maps() {
        // Group edges of a by (endpoint pair), and match to b's edges between image vertices.
        std::map<std::pair<int, int>, std::vector<std::pair<int, int>>> ga, gb;
        for (auto [h, p] : a.edges()) {
            int u = a.vertex[h], v = a.vertex[p];
            if (u > v) {
                std::swap(u, v);
                std::swap(h, p);
            }
            ga[{u, v}].push_back({h, p});
        }
        for (auto [h, p] : b.edges()) {
            int u = b.vertex[h], v = b.vertex[p];
            if (u > v) {
                std::swap(u, v);
                std::swap(h, p);
            }
            gb[{u, v}].push_back({h, p});
        }
        std::vector<int> base(a.num_half_edges(), -1);
        for (int h = 0; h < a.num_half_edges(); ++h)
            if (a.partner[h] < 0) base[h] = b.leg(a.label[h]);
        struct Group {
            std::vector<std::pair<int, int>> ea, eb;
            bool loop;
            bool flip;  // b-endpoint order reversed relative to a
        };
        std::vector<Group> groups;
        for (auto& [key, ea] : ga) {
            int x = vmap[key.first], y = vmap[key.second];
            bool flip = x > y;
            auto& eb = gb[{std::min(x, y), std::max(x, y)}];
            groups.push_back({ea, eb, key.first == key.second, flip});
        }
        std::vector<int> hm = base;
        std::function<void(std::size_t)> rec = [&](std::size_t gi) {
            if (first_only && !out.empty()) return;
            if (gi == groups.size()) {
                out.push_back({vmap, hm});
                return;
            }
            const Group& G = groups[gi];
            std::size_t k = G.ea.size();
            std::vector<int> perm(k);
            std::iota(perm.begin(), perm.end(), 0);
            do {
                long orient_count = G.loop ? (1L << k) : 1;
                for (long mask = 0; mask < orient_count; ++mask) {
                    for (std::size_t i = 0; i < k; ++i) {
                        auto [h, p] = G.ea[i];
                        auto [x, y] = G.eb[perm[i]];
                        bool swap = G.loop ? ((mask >> i) & 1) : G.flip;
                        if (swap) std::swap(x, y);
                        hm[h] = x;
                        hm[p] = y;
                    }
                    rec(gi + 1);
                    if (first_only && !out.empty()) return;
                }
            } while (std::next_permutation(perm.begin(), perm.end()));
        };
        rec(0);
    }

    void run(std::size_t i) {
        if (first_only && !out.empty()) return;
        if (i == order.size()) {
            emit_half_maps();
            return;
        }
        int u = order[i];
        for (int x = 0; x < nv; ++x) {
            if (used[x] || !compatible(u, x)) continue;
            vmap[u] = x;
            used[x] = 1;
            run(i + 1);
            vmap[u] = -1;
            used[x] = 0;
            if (first_only && !out.empty()) return;
        }
    }
};

}  // namespace

std::vector<GraphIso> isomorphisms(const StableGraph& a, const StableGraph& b, bool first_only) {
    if (a.num_vertices() != b.num_vertices() || a.num_half_edges() != b.num_half_edges() ||
        a.num_edges() != b.num_edges() || a.markings() != b.markings())
        return {};
    std::vector<int> ga = a.genus, gb = b.genus;
    std::sort(ga.begin(), ga.end());
    std::sort(gb.begin(), gb.end());
    if (ga != gb) return {};
    IsoSearch s(a, b, first_only);
    s.run(0);
    return std::move(s.out);
}

bool isomorphic(const StableGraph& a, const StableGraph& b) { return !isomorphisms(a, b, true).empty(); }

Contraction contract_edges(const StableGraph& g, const std::vector<int>& edge_half_edges) {
    int nv = g.num_vertices(), nh = g.num_half_edges();
    std::vector<char> dead(nh, 0);
    std::vector<int> comp(nv);
    std::iota(comp.begin(), comp.end(), 0);
    std::function<int(int)> find = [&](int x) { return comp[x] == x ? x : comp[x] = find(comp[x]); };
    std::vector<int> extra_genus(nv, 0);
    for (int h : edge_half_edges) {
        int p = g.partner[h];
        if (p < 0) throw std::invalid_argument("contracting a leg");
        if (dead[h]) continue;
        dead[h] = dead[p] = 1;
        int x = find(g.vertex[h]), y = find(g.vertex[p]);
        if (x == y) extra_genus[x] += 1;
        else {
            comp[y] = x;
            extra_genus[x] += extra_genus[y];
        }
    }
    Contraction c;
    std::vector<int> root_id(nv, -1);
    c.vertex_image.assign(nv, -1);
    for (int v = 0; v < nv; ++v) {
        int r = find(v);
        if (root_id[r] < 0) root_id[r] = c.graph.add_vertex(0);
        c.vertex_image[v] = root_id[r];
    }
    for (int v = 0; v < nv; ++v) c.graph.genus[c.vertex_image[v]] += g.genus[v];
    for (int v = 0; v < nv; ++v)
        if (find(v) == v) c.graph.genus[root_id[v]] += extra_genus[v];
    c.half_image.assign(nh, -1);
    for (int h = 0; h < nh; ++h) {
        if (dead[h]) continue;
        c.half_image[h] = c.graph.add_half_edge(c.vertex_image[g.vertex[h]]);
        c.graph.label[c.half_image[h]] = g.label[h];
    }
    for (int h = 0; h < nh; ++h)
        if (!dead[h] && g.partner[h] >= 0) c.graph.partner[c.half_image[h]] = c.half_image[g.partner[h]];
    return c;
}

StableGraph relabel_markings(const StableGraph& g, const std::vector<std::pair<int, int>>& renaming) {
    StableGraph r = g;
    std::map<int, int> m(renaming.begin(), renaming.end());
    for (int& l : r.label)
        if (l >= 0) {
            auto it = m.find(l);
            if (it != m.end()) l = it->second;
        }
    return r;
}

}  // namespace taut
