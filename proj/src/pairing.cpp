#include "taut/pairing.hpp"

#include <numeric>
#include <set>

#include "taut/enumerate.hpp"
#include "taut/memo.hpp"

namespace taut {

namespace {

Memo<std::string, Rational>& pair_memo() {
    static Memo<std::string, Rational> m;
    return m;
}

// Ways to write d as a sum of parts listed as kappa exponent vectors.
void kappa_partitions(int d, int max_part, std::vector<int>& cur, std::vector<std::vector<int>>& out) {
    if (d == 0) {
        out.push_back(cur);
        return;
    }
    for (int p = std::min(d, max_part); p >= 1; --p) {
        if (static_cast<int>(cur.size()) < p) cur.resize(p, 0);
        cur[p - 1] += 1;
        kappa_partitions(d - p, p, cur, out);
        cur[p - 1] -= 1;
    }
}

}  // namespace

Rational pair_canonical(const std::string& kx, const Stratum& x, const std::string& ky, const Stratum& y) {
    if (x.degree() + y.degree() != x.graph.dimension()) return 0;
    std::string key = kx < ky ? kx + "#" + ky : ky + "#" + kx;
    if (auto v = pair_memo().find(key)) return *v;
    Rational r = pair_strata(x, y);
    pair_memo().insert(key, r);
    return r;
}

Rational pair(const TautClass& x, const TautClass& y) {
    if (x.ambient != y.ambient) throw std::invalid_argument("ambient mismatch");
    Rational total = 0;
    for (const auto& [kx, ex] : x.terms)
        for (const auto& [ky, ey] : y.terms) {
            Rational v = pair_canonical(kx, ex.stratum, ky, ey.stratum);
            if (v != 0) total += ex.coeff * ey.coeff * v;
        }
    return total;
}

MultiPoly pair(const PolyTautClass& x, const TautClass& y) {
    if (x.ambient != y.ambient) throw std::invalid_argument("ambient mismatch");
    MultiPoly total;
    bool init = false;
    for (const auto& [kx, ex] : x.terms) {
        if (!init) {
            total = MultiPoly(ex.coeff.nvars(), ex.coeff.offset());
            init = true;
        }
        for (const auto& [ky, ey] : y.terms) {
            Rational v = pair_canonical(kx, ex.stratum, ky, ey.stratum);
            if (v != 0) total += ex.coeff * (ey.coeff * v);
        }
    }
    return total;
}

TautClass lambda_class(int g, int n) {
    if (g < 1 || g > 2) throw std::invalid_argument("lambda strata form needs g in {1,2}");
    TautClass base;
    if (g == 1) {
        if (n < 1) throw std::invalid_argument("M_{1,0} is unstable");
        StableGraph loop;
        int v = loop.add_vertex(0);
        loop.add_leg(v, 1);
        loop.add_edge(v, v);
        base = single(Stratum::bare(loop), Rational(1, 24));
    } else {
        StableGraph two;
        int v = two.add_vertex(0);
        two.add_edge(v, v);
        two.add_edge(v, v);
        StableGraph edge;
        int a = edge.add_vertex(1), b = edge.add_vertex(0);
        edge.add_edge(a, b);
        edge.add_edge(b, b);
        base = single(Stratum::bare(two), Rational(1, 960)) + single(Stratum::bare(edge), Rational(1, 240));
    }
    for (int m = base.ambient.n() + 1; m <= n; ++m) base = pullback_forget(base, m);
    return base;
}

TautClass lambda_top(int g, int n) {
    std::vector<int> m(n);
    std::iota(m.begin(), m.end(), 1);
    Stratum s = Stratum::bare(trivial_graph(g, m));
    s.lambda[0] = 1;
    return single(s);
}

std::vector<Stratum> decorated_strata(const Ambient& a, int degree) {
    std::map<std::string, Stratum> found;
    for (int e = 0; e <= degree; ++e) {
        for (const StableGraph& g : enumerate_graphs(a.g, a.markings, e)) {
            int nv = g.num_vertices();
            auto hev = g.half_edges_by_vertex();
            std::vector<int> cap(nv);
            for (int v = 0; v < nv; ++v) cap[v] = g.vertex_dimension(v);
            Stratum s = Stratum::bare(g);
            // Per vertex: a kappa monomial and psi powers on its half-edges.
            std::function<void(int, int)> at_vertex;
            std::function<void(int, int, std::size_t, int)> psi_rec = [&](int v, int left, std::size_t i, int rest) {
                if (i == hev[v].size()) {
                    if (left == 0) at_vertex(v + 1, rest);
                    return;
                }
                for (int x = 0; x <= left; ++x) {
                    s.psi[hev[v][i]] = x;
                    psi_rec(v, left - x, i + 1, rest);
                }
                s.psi[hev[v][i]] = 0;
            };
            at_vertex = [&](int v, int rest) {
                if (v == nv) {
                    if (rest != 0) return;
                    CanonicalStratum c = canonical_form(s);
                    found.emplace(c.key, c.stratum);
                    return;
                }
                for (int dv = 0; dv <= std::min(rest, cap[v]); ++dv)
                    for (int kd = 0; kd <= dv; ++kd) {
                        std::vector<std::vector<int>> ks;
                        std::vector<int> cur;
                        kappa_partitions(kd, kd, cur, ks);
                        for (auto& k : ks) {
                            while (!k.empty() && k.back() == 0) k.pop_back();
                            s.kappa[v] = k;
                            psi_rec(v, dv - kd, 0, rest - dv);
                        }
                        s.kappa[v].clear();
                    }
            };
            at_vertex(0, degree - e);
        }
    }
    std::vector<Stratum> out;
    for (auto& [k, s] : found) out.push_back(s);
    return out;
}

namespace {

std::vector<std::vector<std::pair<int, int>>> marking_permutations(const std::vector<int>& m) {
    std::vector<int> p = m;
    std::vector<std::vector<std::pair<int, int>>> out;
    do {
        std::vector<std::pair<int, int>> r;
        for (std::size_t i = 0; i < m.size(); ++i) r.emplace_back(m[i], p[i]);
        out.push_back(r);
    } while (std::next_permutation(p.begin(), p.end()));
    return out;
}

}  // namespace

std::vector<Stratum> orbit_representatives(const std::vector<Stratum>& strata) {
    if (strata.empty()) return {};
    auto perms = marking_permutations(strata[0].graph.markings());
    std::map<std::string, Stratum> reps;
    for (const Stratum& s : strata) {
        std::string best;
        for (const auto& p : perms) {
            Stratum t = s;
            t.graph = relabel_markings(s.graph, p);
            std::string k = canonical_form(t).key;
            if (best.empty() || k < best) best = k;
        }
        reps.emplace(best, s);
    }
    std::vector<Stratum> out;
    for (auto& [k, s] : reps) out.push_back(s);
    return out;
}

bool is_symmetric(const TautClass& x) {
    const auto& m = x.ambient.markings;
    for (std::size_t i = 0; i + 1 < m.size(); ++i) {
        TautClass y = relabel(x, {{m[i], m[i + 1]}, {m[i + 1], m[i]}});
        if (!y.syntactically_equal(x)) return false;
    }
    return true;
}

std::string PairingReport::verdict() const {
    if (!equal) return "pairing inequality with witness";
    if (syntactic) return "syntactic equality";
    return "pairing equality";
}

std::vector<Rational> pair_all(const TautClass& x, const std::vector<TautClass>& tests, bool parallel) {
    std::vector<Rational> out(tests.size());
    long n = static_cast<long>(tests.size());
    if (parallel) {
#pragma omp parallel for schedule(dynamic)
        for (long i = 0; i < n; ++i) out[i] = pair(x, tests[i]);
    } else {
        for (long i = 0; i < n; ++i) out[i] = pair(x, tests[i]);
    }
    return out;
}

PairingReport equal_by_pairing(const TautClass& x, const TautClass& y, const PairingOptions& opt) {
    if (x.ambient != y.ambient) throw std::invalid_argument("ambient mismatch");
    auto dx = x.degree(), dy = y.degree();
    if ((dx && dy && *dx != *dy) || (!x.is_zero() && !dx) || (!y.is_zero() && !dy))
        throw std::invalid_argument("degree mismatch");
    PairingReport rep;
    if (x.ct || y.ct) rep.assumptions.push_back("classes known modulo strata off compact type");
    if (x.syntactically_equal(y)) {
        rep.syntactic = true;
        return rep;
    }
    int d = dx ? *dx : *dy;
    std::vector<Stratum> span = decorated_strata(x.ambient, x.ambient.dimension() - d);
    if (opt.spanning == SpanningSet::orbits) {
        if (!is_symmetric(x) || !is_symmetric(y)) throw std::invalid_argument("orbit spanning set needs symmetric classes");
        span = orbit_representatives(span);
        rep.assumptions.push_back("symmetric classes paired against orbit representatives");
    }
    if (opt.limit && span.size() > opt.limit) {
        span.resize(opt.limit);
        rep.assumptions.push_back("spanning set truncated to " + std::to_string(opt.limit) + " classes");
    }
    rep.assumptions.push_back("equality in cohomology requires the tested classes to span the dual of R^" +
                              std::to_string(d) + "; otherwise equality holds at pairing level");
    std::vector<TautClass> tests;
    for (const Stratum& s : span) tests.push_back(single(s));
    std::vector<Rational> px = pair_all(x, tests, opt.parallel), py = pair_all(y, tests, opt.parallel);
    for (std::size_t i = 0; i < span.size(); ++i) {
        PairingEntry e{tests[i].terms.begin()->first, describe(span[i]), px[i], py[i]};
        if (px[i] != py[i]) rep.equal = false;
        rep.entries.push_back(std::move(e));
    }
    return rep;
}

void clear_pairing_cache() { pair_memo().clear(); }

}  // namespace taut
