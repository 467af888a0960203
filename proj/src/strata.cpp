#include "taut/strata.hpp"

#include <numeric>
#include <sstream>

#include "taut/enumerate.hpp"
#include "taut/integrate.hpp"
#include "taut/memo.hpp"

namespace taut {

Stratum Stratum::bare(StableGraph g) {
    Stratum s;
    s.kappa.assign(g.num_vertices(), {});
    s.psi.assign(g.num_half_edges(), 0);
    s.lambda.assign(g.num_vertices(), 0);
    s.graph = std::move(g);
    return s;
}

int Stratum::vertex_degree(int v) const {
    int d = 0;
    for (int h = 0; h < graph.num_half_edges(); ++h)
        if (graph.vertex[h] == v) d += psi[h];
    for (std::size_t i = 0; i < kappa[v].size(); ++i) d += static_cast<int>(i + 1) * kappa[v][i];
    if (lambda[v]) d += graph.genus[v];
    return d;
}

int Stratum::degree() const {
    int d = graph.num_edges();
    for (int v = 0; v < graph.num_vertices(); ++v) d += vertex_degree(v);
    return d;
}

bool Stratum::exceeds_dimension() const {
    std::vector<int> deg(graph.num_vertices(), 0), val(graph.num_vertices(), 0);
    for (int h = 0; h < graph.num_half_edges(); ++h) {
        deg[graph.vertex[h]] += psi[h];
        val[graph.vertex[h]] += 1;
    }
    for (int v = 0; v < graph.num_vertices(); ++v) {
        int d = deg[v];
        for (std::size_t i = 0; i < kappa[v].size(); ++i) d += static_cast<int>(i + 1) * kappa[v][i];
        if (lambda[v]) d += graph.genus[v];
        if (d > 3 * graph.genus[v] - 3 + val[v]) return true;
    }
    return false;
}

void Stratum::trim() {
    for (auto& k : kappa)
        while (!k.empty() && k.back() == 0) k.pop_back();
    for (int v = 0; v < graph.num_vertices(); ++v)
        if (graph.genus[v] == 0) lambda[v] = 0;
}

std::vector<int> Stratum::psi_at(int v) const {
    std::vector<int> r;
    for (int h = 0; h < graph.num_half_edges(); ++h)
        if (graph.vertex[h] == v) r.push_back(psi[h]);
    return r;
}

bool Stratum::lambda_saturated() const {
    if (!graph.is_tree()) return false;
    for (int v = 0; v < graph.num_vertices(); ++v)
        if (graph.genus[v] > 0 && !lambda[v]) return false;
    return true;
}

CanonicalStratum canonical_form(const Stratum& s) {
    Stratum t = s;
    t.trim();
    std::vector<std::vector<int>> vt(t.graph.num_vertices());
    for (int v = 0; v < t.graph.num_vertices(); ++v) {
        vt[v].push_back(t.lambda[v]);
        vt[v].insert(vt[v].end(), t.kappa[v].begin(), t.kappa[v].end());
    }
    Canonical c = canonicalize(t.graph, vt, t.psi);
    CanonicalStratum out;
    out.stratum = Stratum::bare(c.graph);
    for (int v = 0; v < t.graph.num_vertices(); ++v) {
        out.stratum.kappa[c.vertex_map[v]] = t.kappa[v];
        out.stratum.lambda[c.vertex_map[v]] = t.lambda[v];
    }
    for (int h = 0; h < t.graph.num_half_edges(); ++h) out.stratum.psi[c.half_map[h]] = t.psi[h];
    out.key = code_key(c.code);
    out.automorphisms = c.automorphisms;
    return out;
}

Ambient standard_ambient(int g, int n) {
    Ambient a{g, {}};
    for (int i = 1; i <= n; ++i) a.markings.push_back(i);
    return a;
}

Ambient ambient_of(const Stratum& s) { return Ambient{s.graph.total_genus(), s.graph.markings()}; }

namespace {

// A generic (A,B)-structure on Gamma: maps from A and B onto contractions of Gamma.
struct ProductEntry {
    StableGraph gamma;
    Rational weight;
    std::vector<int> a_half, b_half;
    std::vector<std::vector<int>> a_vert, b_vert;
    std::vector<std::pair<int, int>> common;
};

using Skeleton = std::vector<ProductEntry>;

Memo<std::string, std::shared_ptr<const Skeleton>>& skeleton_memo() {
    static Memo<std::string, std::shared_ptr<const Skeleton>> m;
    return m;
}

void for_each_composition(int total, int parts, const std::function<void(const std::vector<int>&)>& f) {
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

void for_each_subset(int n, int k, const std::function<void(const std::vector<int>&)>& f) {
    std::vector<int> s;
    std::function<void(int)> rec = [&](int i) {
        if (static_cast<int>(s.size()) == k) {
            f(s);
            return;
        }
        if (n - i < k - static_cast<int>(s.size())) return;
        s.push_back(i);
        rec(i + 1);
        s.pop_back();
        rec(i + 1);
    };
    rec(0);
}

// B is degenerated by at most |E(A)| new edges; A and B are canonical bare graphs.
Skeleton compute_skeleton(const StableGraph& A, const StableGraph& B) {
    Skeleton out;
    int eA = A.num_edges(), eB = B.num_edges();
    int nvB = B.num_vertices(), nhB = B.num_half_edges();
    auto hevB = B.half_edges_by_vertex();
    auto edgesB = B.edges();
    std::vector<int> genusA = A.genus;
    std::sort(genusA.begin(), genusA.end());
    for (int k = 0; k <= eA; ++k) {
        int nS = eB + k - eA;
        if (nS < 0 || nS > eB) continue;
        for_each_composition(k, nvB, [&](const std::vector<int>& ks) {
            std::vector<std::shared_ptr<const std::vector<LabeledDegeneration>>> choices(nvB);
            for (int w = 0; w < nvB; ++w) {
                choices[w] = cached_degenerations(B.genus[w], static_cast<int>(hevB[w].size()), ks[w], false);
                if (choices[w]->empty()) return;
            }
            std::vector<int> pick(nvB, 0);
            while (true) {
                StableGraph G;
                std::vector<std::vector<int>> b_vert(nvB);
                G.vertex.assign(nhB, -1);
                G.partner = B.partner;
                G.label = B.label;
                long aut = 1;
                for (int w = 0; w < nvB; ++w) {
                    const LabeledDegeneration& ld = (*choices[w])[pick[w]];
                    aut *= ld.automorphisms;
                    const StableGraph& D = ld.graph;
                    int off = G.num_vertices();
                    for (int u = 0; u < D.num_vertices(); ++u) {
                        G.genus.push_back(D.genus[u]);
                        b_vert[w].push_back(off + u);
                    }
                    for (int h = 0; h < D.num_half_edges(); ++h)
                        if (D.partner[h] < 0) G.vertex[hevB[w][D.label[h]]] = off + D.vertex[h];
                    for (auto [h, p] : D.edges()) G.add_edge(off + D.vertex[h], off + D.vertex[p]);
                }
                std::vector<int> gg = G.genus;
                std::sort(gg.begin(), gg.end());
                for_each_subset(eB, nS, [&](const std::vector<int>& S) {
                    if (G.num_vertices() - nS > A.num_vertices()) return;
                    std::vector<int> contract;
                    std::vector<char> inS(eB, 0);
                    for (int i : S) {
                        contract.push_back(edgesB[i].first);
                        inS[i] = 1;
                    }
                    Contraction c = contract_edges(G, contract);
                    if (c.graph.num_vertices() != A.num_vertices()) return;
                    auto isos = isomorphisms(A, c.graph);
                    if (isos.empty()) return;
                    std::vector<int> inv_half(c.graph.num_half_edges(), -1);
                    for (int h = 0; h < G.num_half_edges(); ++h)
                        if (c.half_image[h] >= 0) inv_half[c.half_image[h]] = h;
                    std::vector<std::pair<int, int>> common;
                    for (int i = 0; i < eB; ++i)
                        if (!inS[i]) common.push_back(edgesB[i]);
                    for (const GraphIso& iso : isos) {
                        ProductEntry e;
                        e.gamma = G;
                        e.weight = Rational(1, aut);
                        e.b_half.resize(nhB);
                        std::iota(e.b_half.begin(), e.b_half.end(), 0);
                        e.b_vert = b_vert;
                        e.a_half.resize(A.num_half_edges());
                        for (int h = 0; h < A.num_half_edges(); ++h) e.a_half[h] = inv_half[iso.half_map[h]];
                        e.a_vert.assign(A.num_vertices(), {});
                        for (int u = 0; u < G.num_vertices(); ++u)
                            for (int v = 0; v < A.num_vertices(); ++v)
                                if (iso.vertex_map[v] == c.vertex_image[u]) e.a_vert[v].push_back(u);
                        e.common = common;
                        out.push_back(std::move(e));
                    }
                });
                int w = 0;
                while (w < nvB && ++pick[w] == static_cast<int>(choices[w]->size())) pick[w++] = 0;
                if (w == nvB) break;
            }
        });
    }
    return out;
}

std::shared_ptr<const Skeleton> skeleton(const StableGraph& A, const StableGraph& B, const std::string& key) {
    if (auto v = skeleton_memo().find(key)) return *v;
    auto s = std::make_shared<const Skeleton>(compute_skeleton(A, B));
    skeleton_memo().insert(key, s);
    return s;
}

// Moves the decorations of s onto the canonical bare graph.
Stratum transport(const Stratum& s, const Canonical& c) {
    Stratum t = Stratum::bare(c.graph);
    for (int v = 0; v < s.graph.num_vertices(); ++v) {
        t.kappa[c.vertex_map[v]] = s.kappa[v];
        t.lambda[c.vertex_map[v]] = s.lambda[v];
    }
    for (int h = 0; h < s.graph.num_half_edges(); ++h) t.psi[c.half_map[h]] = s.psi[h];
    return t;
}

struct Partial {
    std::vector<std::vector<int>> kappa;
    Rational coeff;
};

// Distributes the kappa monomial of a source vertex among the target vertices (sum over targets per factor).
void distribute_kappa(std::vector<Partial>& parts, const std::vector<int>& kexp, const std::vector<int>& targets) {
    for (std::size_t i = 0; i < kexp.size(); ++i) {
        int x = kexp[i];
        if (x == 0) continue;
        std::vector<Partial> next;
        int t = static_cast<int>(targets.size());
        for (const Partial& p : parts) {
            for_each_composition(x, t, [&](const std::vector<int>& ys) {
                Partial q = p;
                Rational c = factorial(x);
                for (int j = 0; j < t; ++j) {
                    c /= factorial(ys[j]);
                    auto& kv = q.kappa[targets[j]];
                    if (kv.size() <= i) kv.resize(i + 1, 0);
                    kv[i] += ys[j];
                }
                q.coeff *= c;
                next.push_back(std::move(q));
            });
        }
        parts = std::move(next);
    }
}

std::vector<Term> product_from_skeleton(const Stratum& X, const Stratum& Y, const Skeleton& sk) {
    std::vector<Term> out;
    for (const ProductEntry& e : sk) {
        const StableGraph& G = e.gamma;
        int nv = G.num_vertices(), nh = G.num_half_edges();
        Stratum base = Stratum::bare(G);
        for (int h = 0; h < X.graph.num_half_edges(); ++h) base.psi[e.a_half[h]] += X.psi[h];
        for (int h = 0; h < Y.graph.num_half_edges(); ++h) base.psi[e.b_half[h]] += Y.psi[h];
        bool zero = false;
        auto apply_lambda = [&](const Stratum& S, const std::vector<std::vector<int>>& vmap) {
            for (int v = 0; v < S.graph.num_vertices() && !zero; ++v) {
                if (!S.lambda[v] || S.graph.genus[v] == 0) continue;
                int gs = 0;
                for (int w : vmap[v]) gs += G.genus[w];
                if (gs != S.graph.genus[v]) {
                    zero = true;
                    return;
                }
                for (int w : vmap[v]) {
                    if (G.genus[w] == 0) continue;
                    if (base.lambda[w]) {
                        zero = true;
                        return;
                    }
                    base.lambda[w] = 1;
                }
            }
        };
        apply_lambda(X, e.a_vert);
        apply_lambda(Y, e.b_vert);
        if (zero) continue;
        std::vector<Partial> parts{Partial{std::vector<std::vector<int>>(nv), e.weight}};
        for (int v = 0; v < X.graph.num_vertices(); ++v) distribute_kappa(parts, X.kappa[v], e.a_vert[v]);
        for (int v = 0; v < Y.graph.num_vertices(); ++v) distribute_kappa(parts, Y.kappa[v], e.b_vert[v]);
        int c = static_cast<int>(e.common.size());
        for (const Partial& p : parts) {
            Stratum s = base;
            s.kappa = p.kappa;
            if (s.exceeds_dimension()) continue;
            Rational sign = (c % 2) ? -1 : 1;
            for (long mask = 0; mask < (1L << c); ++mask) {
                Stratum t = s;
                for (int i = 0; i < c; ++i) {
                    auto [h, hp] = e.common[i];
                    t.psi[((mask >> i) & 1) ? hp : h] += 1;
                }
                if (t.exceeds_dimension()) continue;
                out.emplace_back(std::move(t), sign * p.coeff);
            }
        }
        (void)nh;
    }
    return out;
}

}  // namespace

std::vector<Term> product_terms(const Stratum& x, const Stratum& y) {
    if (ambient_of(x) != ambient_of(y)) throw std::invalid_argument("ambient mismatch");
    if ((x.lambda_saturated() && !y.graph.is_tree()) || (y.lambda_saturated() && !x.graph.is_tree())) return {};
    Canonical cx = canonicalize(x.graph), cy = canonicalize(y.graph);
    Stratum X = transport(x, cx), Y = transport(y, cy);
    // Degenerate the graph with more edges.
    bool swap = X.graph.num_edges() > Y.graph.num_edges() ||
                (X.graph.num_edges() == Y.graph.num_edges() && cx.code > cy.code);
    const Stratum& SA = swap ? Y : X;
    const Stratum& SB = swap ? X : Y;
    const std::vector<int>& codeA = swap ? cy.code : cx.code;
    const std::vector<int>& codeB = swap ? cx.code : cy.code;
    std::string key = code_key(codeA) + "|" + code_key(codeB);
    auto sk = skeleton(SA.graph, SB.graph, key);
    return product_from_skeleton(SA, SB, *sk);
}

namespace {

// Removes the marked vertices and half-edges, renumbering the rest.
Stratum remove_elements(const Stratum& s, const std::vector<char>& dead_v, const std::vector<char>& dead_h) {
    const StableGraph& g = s.graph;
    std::vector<int> vnew(g.num_vertices(), -1), hnew(g.num_half_edges(), -1);
    Stratum t;
    for (int v = 0; v < g.num_vertices(); ++v) {
        if (dead_v[v]) continue;
        vnew[v] = t.graph.add_vertex(g.genus[v]);
        t.kappa.push_back(s.kappa[v]);
        t.lambda.push_back(s.lambda[v]);
    }
    for (int h = 0; h < g.num_half_edges(); ++h) {
        if (dead_h[h]) continue;
        hnew[h] = t.graph.add_half_edge(vnew[g.vertex[h]]);
        t.graph.label[hnew[h]] = g.label[h];
        t.psi.push_back(s.psi[h]);
    }
    for (int h = 0; h < g.num_half_edges(); ++h)
        if (!dead_h[h] && g.partner[h] >= 0) t.graph.partner[hnew[h]] = dead_h[g.partner[h]] ? -1 : hnew[g.partner[h]];
    return t;
}

Rational binomial(int n, int k) {
    Integer b;
    mpz_bin_uiui(b.get_mpz_t(), n, k);
    return Rational(b);
}

}  // namespace

std::vector<Term> pushforward_terms(const Stratum& s, int marking) {
    const StableGraph& g = s.graph;
    int hl = g.leg(marking);
    if (hl < 0) throw std::invalid_argument("marking not present");
    int v = g.vertex[hl];
    int gv = g.genus[v], nv = g.valence(v);
    std::vector<int> others;
    for (int h = 0; h < g.num_half_edges(); ++h)
        if (g.vertex[h] == v && h != hl) others.push_back(h);
    std::vector<Term> out;
    std::vector<char> dead_v(g.num_vertices(), 0), dead_h(g.num_half_edges(), 0);
    if (2 * gv - 2 + nv - 1 > 0) {
        dead_h[hl] = 1;
        Stratum base = remove_elements(s, dead_v, dead_h);
        int vnew = 0;
        for (int u = 0; u < v; ++u) vnew += 1;
        std::vector<int> hmap;
        for (int h = 0, c = 0; h < g.num_half_edges(); ++h) hmap.push_back(dead_h[h] ? -1 : c++);
        const std::vector<int>& kx = s.kappa[v];
        int y = s.psi[hl];
        // Choose s_i of the x_i copies of kappa_{i+1} to turn into psi_l^{i+1}.
        std::vector<int> take(kx.size(), 0);
        std::function<void(std::size_t, Rational, int)> rec = [&](std::size_t i, Rational c, int e) {
            if (i == kx.size()) {
                Stratum t = base;
                std::vector<int> kk(kx.size());
                for (std::size_t j = 0; j < kx.size(); ++j) kk[j] = kx[j] - take[j];
                t.kappa[vnew] = kk;
                if (e >= 2) {
                    if (t.kappa[vnew].size() < static_cast<std::size_t>(e - 1)) t.kappa[vnew].resize(e - 1, 0);
                    t.kappa[vnew][e - 2] += 1;
                    out.emplace_back(std::move(t), c);
                } else if (e == 1) {
                    out.emplace_back(std::move(t), c * (2 * gv - 2 + nv - 1));
                } else {
                    for (int h : others) {
                        if (s.psi[h] == 0) continue;
                        Stratum u = t;
                        u.psi[hmap[h]] -= 1;
                        out.emplace_back(std::move(u), c);
                    }
                }
                return;
            }
            for (int t = 0; t <= kx[i]; ++t) {
                take[i] = t;
                rec(i + 1, c * binomial(kx[i], t), e + t * static_cast<int>(i + 1));
            }
            take[i] = 0;
        };
        rec(0, 1, y);
        return out;
    }
    // Genus-0 vertex with three half-edges: contract it.
    if (g.num_vertices() == 1) throw std::invalid_argument("forgetting the leg leaves an unstable space");
    for (int h = 0; h < g.num_half_edges(); ++h)
        if (g.vertex[h] == v && s.psi[h] != 0) return {};
    for (int k : s.kappa[v])
        if (k != 0) return {};
    int h1 = others[0], h2 = others[1];
    int p1 = g.partner[h1], p2 = g.partner[h2];
    dead_v[v] = 1;
    dead_h[hl] = dead_h[h1] = dead_h[h2] = 1;
    Stratum t = s;
    if (p1 >= 0 && p2 >= 0) {
        t.graph.partner[p1] = p2;
        t.graph.partner[p2] = p1;
    } else if (p1 >= 0) {
        t.graph.partner[p1] = -1;
        t.graph.label[p1] = g.label[h2];
    } else if (p2 >= 0) {
        t.graph.partner[p2] = -1;
        t.graph.label[p2] = g.label[h1];
    } else {
        throw std::invalid_argument("forgetting the leg leaves an unstable space");
    }
    out.emplace_back(remove_elements(t, dead_v, dead_h), 1);
    return out;
}

std::vector<Term> pullback_terms(const Stratum& s, int marking) {
    const StableGraph& g = s.graph;
    if (g.leg(marking) >= 0) throw std::invalid_argument("marking already present");
    std::vector<Term> out;
    for (int v = 0; v < g.num_vertices(); ++v) {
        const std::vector<int>& kx = s.kappa[v];
        std::vector<int> take(kx.size(), 0);
        std::function<void(std::size_t, Rational, int)> rec = [&](std::size_t i, Rational c, int e) {
            if (i == kx.size()) {
                Stratum t = s;
                int h = t.graph.add_leg(v, marking);
                t.psi.push_back(e);
                for (std::size_t j = 0; j < kx.size(); ++j) t.kappa[v][j] = kx[j] - take[j];
                out.emplace_back(std::move(t), c);
                return;
            }
            for (int t = 0; t <= kx[i]; ++t) {
                take[i] = t;
                Rational c2 = c * binomial(kx[i], t);
                if (t % 2) c2 = -c2;
                rec(i + 1, c2, e + t * static_cast<int>(i + 1));
            }
            take[i] = 0;
        };
        rec(0, 1, 0);
        for (int h = 0; h < g.num_half_edges(); ++h) {
            if (g.vertex[h] != v || s.psi[h] == 0) continue;
            Stratum t = s;
            int u = t.graph.add_vertex(0);
            t.kappa.push_back({});
            t.lambda.push_back(0);
            t.graph.vertex[h] = u;
            auto [hs, hu] = t.graph.add_edge(v, u);
            t.psi.push_back(s.psi[h] - 1);
            t.psi.push_back(0);
            t.psi[h] = 0;
            t.graph.add_leg(u, marking);
            t.psi.push_back(0);
            (void)hs;
            (void)hu;
            out.emplace_back(std::move(t), -1);
        }
    }
    return out;
}

Stratum graft(const StableGraph& outer, const std::vector<Stratum>& pieces) {
    int nh = outer.num_half_edges();
    Stratum t;
    t.graph.vertex.assign(nh, -1);
    t.graph.partner = outer.partner;
    t.graph.label = outer.label;
    t.psi.assign(nh, 0);
    for (int v = 0; v < outer.num_vertices(); ++v) {
        const Stratum& p = pieces[v];
        int off = t.graph.num_vertices();
        for (int u = 0; u < p.graph.num_vertices(); ++u) {
            t.graph.add_vertex(p.graph.genus[u]);
            t.kappa.push_back(p.kappa[u]);
            t.lambda.push_back(p.lambda[u]);
        }
        for (int h = 0; h < p.graph.num_half_edges(); ++h) {
            if (p.graph.partner[h] >= 0) continue;
            int oh = p.graph.label[h];
            if (oh < 0 || oh >= nh || outer.vertex[oh] != v) throw std::invalid_argument("piece markings do not match");
            t.graph.vertex[oh] = off + p.graph.vertex[h];
            t.psi[oh] = p.psi[h];
        }
        for (auto [h, q] : p.graph.edges()) {
            auto [a, b] = t.graph.add_edge(off + p.graph.vertex[h], off + p.graph.vertex[q]);
            t.psi.push_back(p.psi[h]);
            t.psi.push_back(p.psi[q]);
            (void)a;
            (void)b;
        }
    }
    return t;
}

Rational integrate_stratum(const Stratum& s) {
    if (s.degree() != s.graph.dimension()) return 0;
    Rational r = 1;
    auto hev = s.graph.half_edges_by_vertex();
    for (int v = 0; v < s.graph.num_vertices(); ++v) {
        std::vector<int> ps;
        for (int h : hev[v]) ps.push_back(s.psi[h]);
        r *= vertex_integral(s.graph.genus[v], ps, s.kappa[v], s.lambda[v] != 0);
        if (r == 0) return 0;
    }
    return r;
}

Rational pair_strata(const Stratum& x, const Stratum& y) {
    if (x.degree() + y.degree() != x.graph.dimension()) return 0;
    Rational total = 0;
    for (const auto& [s, w] : product_terms(x, y)) total += w * integrate_stratum(s);
    return total;
}

void clear_product_cache() { skeleton_memo().clear(); }
std::size_t product_cache_size() { return skeleton_memo().size(); }

Stratum psi_monomial(int g, const std::vector<int>& exps) {
    std::vector<int> m;
    for (std::size_t i = 0; i < exps.size(); ++i) m.push_back(static_cast<int>(i) + 1);
    Stratum s = Stratum::bare(trivial_graph(g, m));
    for (std::size_t i = 0; i < exps.size(); ++i) s.psi[i] = exps[i];
    return s;
}

Stratum kappa_monomial(int g, int n, const std::vector<int>& kappa_exps) {
    std::vector<int> m;
    for (int i = 1; i <= n; ++i) m.push_back(i);
    Stratum s = Stratum::bare(trivial_graph(g, m));
    s.kappa[0] = kappa_exps;
    return s;
}

std::string describe(const Stratum& s) {
    std::ostringstream os;
    const StableGraph& g = s.graph;
    auto hev = g.half_edges_by_vertex();
    for (int v = 0; v < g.num_vertices(); ++v) {
        if (v) os << " ";
        os << "[g" << g.genus[v];
        if (s.lambda[v]) os << " L";
        for (std::size_t i = 0; i < s.kappa[v].size(); ++i)
            if (s.kappa[v][i]) os << " k" << i + 1 << "^" << s.kappa[v][i];
        for (int h : hev[v]) {
            if (g.partner[h] < 0) os << " m" << g.label[h];
            else os << " e" << std::min(h, g.partner[h]);
            if (s.psi[h]) os << "^" << s.psi[h];
        }
        os << "]";
    }
    return os.str();
}

}  // namespace taut
