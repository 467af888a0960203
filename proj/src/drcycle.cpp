#include "taut/drcycle.hpp"

#include <memory>
#include <numeric>

#include "taut/memo.hpp"
#include "taut/trees.hpp"

namespace taut {

namespace {

Memo<std::pair<int, int>, std::shared_ptr<const PolyTautClass>>& generic_memo() {
    static Memo<std::pair<int, int>, std::shared_ptr<const PolyTautClass>> m;
    return m;
}

StableGraph two_vertex_tree(int g1, const std::vector<int>& I, int g2, const std::vector<int>& J) {
    StableGraph t;
    int a = t.add_vertex(g1), b = t.add_vertex(g2);
    for (int i : I) t.add_leg(a, i);
    for (int j : J) t.add_leg(b, j);
    t.add_edge(a, b);
    return t;
}

bool stable_side(int g, int legs) { return 2 * g - 2 + legs + 1 > 0; }

// DR_g(b_1..b_k) on markings 1..k with b_i the variables of a k-variable ring.
PolyTautClass generic_dr(int g, int k) {
    Ambient amb = standard_ambient(g, k);
    PolyTautClass theta(amb, true);
    std::vector<MultiPoly> b;
    for (int i = 0; i < k; ++i) b.push_back(MultiPoly::variable(k, i));
    for (int i = 0; i < k; ++i) {
        Stratum s = Stratum::bare(trivial_graph(g, amb.markings));
        s.psi[s.graph.leg(i + 1)] = 1;
        theta.add(s, b[i] * b[i] * Rational(1, 2));
    }
    for (long mask = 0; mask < (1L << k); ++mask) {
        std::vector<int> I, J;
        MultiPoly bI(k);
        for (int i = 0; i < k; ++i) {
            if ((mask >> i) & 1) {
                I.push_back(i + 1);
                bI += b[i];
            } else {
                J.push_back(i + 1);
            }
        }
        MultiPoly sq = bI * bI;
        for (int h = 0; h < g; ++h) {
            if (h == 0 && I.size() < 2) continue;
            if (!stable_side(h, static_cast<int>(I.size())) || !stable_side(g - h, static_cast<int>(J.size()))) continue;
            StableGraph t = two_vertex_tree(h, I, g - h, J);
            Rational w = Rational(h == 0 ? -1 : -1, h == 0 ? 2 : 4) / canonicalize(t).automorphisms;
            theta.add(Stratum::bare(t), sq * w);
        }
    }
    PolyTautClass r(amb, true);
    r.add(Stratum::bare(trivial_graph(g, amb.markings)), MultiPoly::constant(k, 1));
    for (int i = 0; i < g; ++i) r = multiply(r, theta);
    return r.scaled(Rational(1) / factorial(g));
}

std::shared_ptr<const PolyTautClass> cached_generic_dr(int g, int k) {
    auto key = std::make_pair(g, k);
    if (auto v = generic_memo().find(key)) return *v;
    auto p = std::make_shared<const PolyTautClass>(generic_dr(g, k));
    generic_memo().insert(key, p);
    return p;
}

MultiPoly sum_of(const std::vector<MultiPoly>& v) {
    MultiPoly s = MultiPoly(v[0].nvars(), v[0].offset());
    for (const auto& x : v) s += x;
    return s;
}

}  // namespace

PolyTautClass substitute(const PolyTautClass& x, const std::vector<MultiPoly>& images) {
    PolyTautClass out(x.ambient, x.ct);
    for (const auto& [k, e] : x.terms) {
        MultiPoly c = e.coeff.substitute(images);
        if (!c.is_zero()) out.add_canonical(k, {e.stratum, c, e.automorphisms});
    }
    return out;
}

TautClass coefficient_class(const PolyTautClass& x, const Exponents& exps) {
    TautClass out(x.ambient, x.ct);
    for (const auto& [k, e] : x.terms) {
        Rational c = coefficient_of(e.coeff, exps);
        if (c != 0) out.add_canonical(k, {e.stratum, c, e.automorphisms});
    }
    return out;
}

PolyTautClass to_poly(const TautClass& x, int nvars, int offset) {
    PolyTautClass out(x.ambient, x.ct);
    for (const auto& [k, e] : x.terms) out.add_canonical(k, {e.stratum, MultiPoly::constant(nvars, e.coeff, offset), e.automorphisms});
    return out;
}

PolyTautClass hain_dr(int g, const std::vector<int>& markings, const std::vector<MultiPoly>& mults) {
    if (markings.size() != mults.size() || mults.empty()) throw std::invalid_argument("one multiplicity per marking required");
    if (!sum_of(mults).is_zero()) throw std::invalid_argument("nonzero total flux");
    int k = static_cast<int>(markings.size());
    PolyTautClass sub = substitute(*cached_generic_dr(g, k), mults);
    std::vector<std::pair<int, int>> ren;
    for (int i = 0; i < k; ++i) ren.emplace_back(i + 1, markings[i]);
    // Two-step renaming avoids collisions between old and new labels.
    int shift = 1 + *std::max_element(markings.begin(), markings.end()) + k;
    std::vector<std::pair<int, int>> first, second;
    for (auto [a, b] : ren) {
        first.emplace_back(a, a + shift);
        second.emplace_back(a + shift, b);
    }
    return relabel(relabel(sub, first), second);
}

PolyTautClass hain_dr(int g, const std::vector<MultiPoly>& mults) {
    std::vector<int> m(mults.size());
    std::iota(m.begin(), m.end(), 1);
    return hain_dr(g, m, mults);
}

PolyTautClass dr_forget_tilde(int g, const std::vector<MultiPoly>& mults, int marking) {
    return pushforward_forget(hain_dr(g, mults), marking);
}

PolyTautClass dr_on_tree(const StableGraph& tree, const std::map<int, MultiPoly>& leg_values) {
    if (!tree.is_tree()) throw std::invalid_argument("graph is not a tree");
    std::vector<MultiPoly> a = flow(tree, leg_values);
    std::vector<PolyTautClass> pieces;
    for (int v = 0; v < tree.num_vertices(); ++v) {
        std::vector<int> hs = tree.half_edges_at(v);
        std::vector<MultiPoly> m;
        for (int h : hs) m.push_back(a[h]);
        pieces.push_back(hain_dr(tree.genus[v], hs, m));
    }
    return glue_push(tree, pieces, Ambient{tree.total_genus(), tree.markings()});
}

PolyTautClass dr_times_psi_ct(int g, const std::vector<MultiPoly>& mults, int s) {
    int n = static_cast<int>(mults.size());
    if (s < 1 || s > n || mults[s - 1].is_zero()) throw std::invalid_argument("psi slot needs a nonzero multiplicity");
    std::map<int, MultiPoly> legs;
    for (int i = 0; i < n; ++i) legs.emplace(i + 1, mults[i]);
    PolyTautClass out(standard_ambient(g, n), true);
    Rational r = 2 * g - 2 + n;
    for (long mask = 1; mask < (1L << n) - 1; ++mask) {
        std::vector<int> I, J;
        MultiPoly aI(mults[0].nvars(), mults[0].offset());
        for (int i = 0; i < n; ++i) {
            if ((mask >> i) & 1) {
                I.push_back(i + 1);
                aI += mults[i];
            } else {
                J.push_back(i + 1);
            }
        }
        if (aI.is_zero()) continue;
        bool s_in_I = (mask >> (s - 1)) & 1;
        for (int g1 = 0; g1 <= g; ++g1) {
            int g2 = g - g1;
            int nI = static_cast<int>(I.size()), nJ = static_cast<int>(J.size());
            if (!stable_side(g1, nI) || !stable_side(g2, nJ)) continue;
            Rational rho = s_in_I ? Rational(2 * g2 - 2 + nJ + 1) : Rational(-(2 * g1 - 2 + nI + 1));
            PolyTautClass t = dr_on_tree(two_vertex_tree(g1, I, g2, J), legs);
            out += t.scaled(aI * (rho / r / 2));
        }
    }
    return out;
}

PolyTautClass dr_times_boundary(int g, const std::vector<MultiPoly>& mults, int h, const std::vector<int>& I) {
    int n = static_cast<int>(mults.size());
    std::vector<int> J;
    for (int i = 1; i <= n; ++i)
        if (std::find(I.begin(), I.end(), i) == I.end()) J.push_back(i);
    PolyTautClass out(standard_ambient(g, n), true);
    int nI = static_cast<int>(I.size()), nJ = static_cast<int>(J.size());
    if (h < 0 || h > g || !stable_side(h, nI) || !stable_side(g - h, nJ)) return out;
    std::map<int, MultiPoly> legs;
    for (int i = 0; i < n; ++i) legs.emplace(i + 1, mults[i]);
    return dr_on_tree(two_vertex_tree(h, I, g - h, J), legs);
}

TautClass boundary_divisor(int g, int n, int h, const std::vector<int>& I) {
    std::vector<int> J;
    for (int i = 1; i <= n; ++i)
        if (std::find(I.begin(), I.end(), i) == I.end()) J.push_back(i);
    int nI = static_cast<int>(I.size()), nJ = static_cast<int>(J.size());
    if (h < 0 || h > g || !stable_side(h, nI) || !stable_side(g - h, nJ)) return TautClass(standard_ambient(g, n));
    StableGraph t = two_vertex_tree(h, I, g - h, J);
    return single(Stratum::bare(t), Rational(1, canonicalize(t).automorphisms));
}

void clear_dr_cache() { generic_memo().clear(); }

}  // namespace taut
