#include "taut/abclasses.hpp"

#include <functional>
#include <numeric>
#include <stdexcept>

#include "taut/drcycle.hpp"
#include "taut/enumerate.hpp"

namespace taut {

int AClassSpec::total() const { return std::accumulate(d.begin(), d.end(), 0); }

void AClassSpec::validate() const {
    if (g < 0) throw std::invalid_argument("negative genus");
    if (d.empty()) throw std::invalid_argument("A-class needs at least one marking");
    for (int x : d)
        if (x < 0) throw std::invalid_argument("negative degree");
    if (2 * g - 2 + n() <= 0) throw std::invalid_argument("unstable (g,n)");
    if (total() < 2 * g - 1) throw std::invalid_argument("A-class needs sum d >= 2g-1");
    if (g > 2) throw std::invalid_argument("lambda_g multiplication needs g <= 2");
}

void BClassSpec::validate() const {
    if (g < 0) throw std::invalid_argument("negative genus");
    if (d.empty()) throw std::invalid_argument("B-class needs at least one marking");
    for (int x : d)
        if (x < 0) throw std::invalid_argument("negative degree");
    if (2 * g - 2 + n() <= 0) throw std::invalid_argument("unstable (g,n)");
}

PolyTautClass a_tilde(int g, int m, int n, bool parallel) {
    if (2 * g - 2 + n <= 0) throw std::invalid_argument("unstable (g,n)");
    if (m < 1) throw std::invalid_argument("m must be positive");
    if (g > 2) throw std::invalid_argument("lambda_g multiplication needs g <= 2");
    std::vector<int> legs(n + 1);
    std::iota(legs.begin(), legs.end(), 0);
    Ambient big{g, legs};
    std::map<int, MultiPoly> values = standard_leg_values(n);
    std::vector<StableGraph> trees = enumerate_stable_trees(g, n, m, true);
    std::vector<PolyTautClass> parts(trees.size(), PolyTautClass(big, true));
    long nt = static_cast<long>(trees.size());
    auto build = [&](long i) {
        const StableGraph& t = trees[i];
        MultiPoly c = coeff_a(t, flow(t, values));
        if (c.is_zero()) return;
        parts[i] = times_lambda_top(dr_on_tree(t, values)).scaled(c);
    };
    if (parallel) {
#pragma omp parallel for schedule(dynamic)
        for (long i = 0; i < nt; ++i) build(i);
    } else {
        for (long i = 0; i < nt; ++i) build(i);
    }
    PolyTautClass sum(big, true);
    for (const auto& p : parts) sum += p;
    return pushforward_forget(sum, 0);
}

ATildeQuotient divide_a_tilde(int g, int m, int n, bool parallel) {
    PolyTautClass at = a_tilde(g, m, n, parallel);
    MultiPoly sum(n, 1);
    for (int i = 0; i < n; ++i) sum += MultiPoly::variable(n, i, 1);
    ATildeQuotient out{PolyTautClass(at.ambient, true), PolyTautClass(at.ambient, true), true};
    for (const auto& [k, e] : at.terms) {
        DivisionResult r = exact_divide_linear(e.coeff, sum);
        if (!r.quotient.is_zero()) out.quotient.add_canonical(k, {e.stratum, r.quotient, e.automorphisms});
        if (!r.remainder.is_zero()) out.remainder.add_canonical(k, {e.stratum, r.remainder, e.automorphisms});
    }
    if (auto deg = out.remainder.degree(); deg && !out.remainder.is_zero()) {
        for (const Stratum& s : decorated_strata(at.ambient, at.ambient.dimension() - *deg))
            if (!pair(out.remainder, single(s)).is_zero()) {
                out.remainder_pairs_to_zero = false;
                break;
            }
    } else if (!out.remainder.is_zero()) {
        out.remainder_pairs_to_zero = false;
    }
    return out;
}

TautClass a_class(const AClassSpec& spec, bool parallel) {
    spec.validate();
    int n = spec.n(), deg = spec.total();
    ATildeQuotient q = divide_a_tilde(spec.g, spec.m(), n, parallel);
    // Divisibility holds for the class; a representative may leave a remainder that pairs to zero.
    if (!q.remainder_pairs_to_zero) throw std::runtime_error("A-class division left a nonzero remainder");
    for (const auto& [k, e] : q.quotient.terms)
        if (e.coeff.homogeneous_degree() != deg) throw std::runtime_error("A-class quotient is not homogeneous of degree sum d");
    Exponents ex(spec.d.begin(), spec.d.end());
    return coefficient_class(q.quotient, ex);
}

TautClass stabilized_tree_class(const CompleteTree& t) {
    const StableGraph& g = t.tree;
    std::vector<int> contract;
    for (int v = 0; v < g.num_vertices(); ++v) {
        if (v == t.root || t.strongly_stable(v)) continue;
        for (int h : g.half_edges_at(v))
            if (g.partner[h] >= 0 && t.q[h] < 0) contract.push_back(h);
    }
    Contraction c = contract_edges(g, contract);
    const StableGraph& st = c.graph;
    std::vector<int> q(st.num_half_edges(), -1);
    for (int h = 0; h < g.num_half_edges(); ++h)
        if (c.half_image[h] >= 0) q[c.half_image[h]] = t.q[h];
    std::vector<int> extra(st.num_vertices(), 0);
    for (int v = 0; v < g.num_vertices(); ++v)
        if (v == t.root || t.strongly_stable(v)) extra[c.vertex_image[v]] = t.extra[v];
    Ambient amb{st.total_genus(), st.markings()};
    std::vector<std::pair<Stratum, Rational>> partial{{Stratum::bare(st), Rational(1)}};
    for (int v = 0; v < st.num_vertices(); ++v) {
        std::vector<int> hp;
        int qs = 0;
        for (int h : st.half_edges_at(v))
            if (q[h] >= 0) {
                hp.push_back(h);
                qs += q[h];
            }
        int target = qs - extra[v];
        if (target < 0) return TautClass(amb);
        std::vector<std::pair<Stratum, Rational>> next;
        for (const auto& [base, coeff] : partial) {
            Stratum s = base;
            std::function<void(std::size_t, int, Rational)> rec = [&](std::size_t i, int left, Rational denom) {
                if (i == hp.size()) {
                    if (left == 0) next.emplace_back(s, coeff * factorial(extra[v]) / denom);
                    return;
                }
                int h = hp[i];
                for (int p = 0; p <= std::min(q[h], left); ++p) {
                    s.psi[h] = p;
                    rec(i + 1, left - p, denom * factorial(q[h] - p));
                }
                s.psi[h] = 0;
            };
            rec(0, target, Rational(1));
        }
        partial = std::move(next);
    }
    TautClass out(amb);
    for (const auto& [st_term, coeff] : partial) out.add(st_term, coeff);
    return out;
}

TautClass b_class(const BClassSpec& spec) {
    spec.validate();
    TautClass out(standard_ambient(spec.g, spec.n()));
    for (const CompleteTree& t : enumerate_B_trees(spec.g, spec.d)) {
        Rational sign = (t.depth % 2 == 1) ? 1 : -1;
        out += stabilized_tree_class(t).scaled(sign);
    }
    return out;
}

TautClass b_chain(int g, int d) {
    if (g < 1) throw std::invalid_argument("chain formula needs g >= 1");
    if (d < 2 * g - 1) throw std::invalid_argument("chain formula needs d >= 2g-1");
    TautClass out(standard_ambient(g, 1));
    std::vector<int> gs, ds;
    std::function<void(int)> genus_rec;
    auto emit = [&]() {
        int k = static_cast<int>(gs.size());
        StableGraph c;
        for (int x : gs) c.add_vertex(x);
        std::vector<int> toward(k);
        for (int i = 0; i + 1 < k; ++i) toward[i] = c.add_edge(i, i + 1).first;
        toward[k - 1] = c.add_leg(k - 1, 1);
        Stratum s = Stratum::bare(c);
        for (int i = 0; i < k; ++i) s.psi[toward[i]] = ds[i];
        out.add(s, Rational(k % 2 == 1 ? 1 : -1));
    };
    std::function<void(int, int, int)> degree_rec = [&](int i, int dsum, int gsum) {
        int k = static_cast<int>(gs.size());
        if (i == k - 1) {
            int last = d - (k - 1) - dsum;
            if (last < 0) return;
            ds[i] = last;
            emit();
            return;
        }
        int gl = gsum + gs[i];
        // Partial sums up to level i+1 respect the admissibility bound.
        for (int x = 0; dsum + x + i <= 2 * gl - 2; ++x) {
            ds[i] = x;
            degree_rec(i + 1, dsum + x, gl);
        }
    };
    genus_rec = [&](int left) {
        if (left == 0) {
            ds.assign(gs.size(), 0);
            degree_rec(0, 0, 0);
            return;
        }
        for (int x = 1; x <= left; ++x) {
            gs.push_back(x);
            genus_rec(left - x);
            gs.pop_back();
        }
    };
    genus_rec(g);
    return out;
}

TautClass build_class(Side side, int g, const std::vector<int>& d) {
    if (side == Side::A) return a_class({g, d});
    return b_class({g, d});
}

PairingReport check_string(Side side, int g, const std::vector<int>& d, const PairingOptions& opt) {
    int n = static_cast<int>(d.size()), total = std::accumulate(d.begin(), d.end(), 0);
    if (total < 2 * g - 1) throw std::invalid_argument("string check needs sum d >= 2g-1");
    std::vector<int> d0 = d;
    d0.push_back(0);
    TautClass lhs = build_class(side, g, d0);
    TautClass rhs = pullback_forget(build_class(side, g, d), n + 1);
    if (total >= 2 * g) {
        for (int i = 0; i < n; ++i) {
            if (d[i] < 1) continue;
            std::vector<int> di = d;
            di[i] -= 1;
            TautClass pulled = pullback_forget(build_class(side, g, di), n + 1);
            rhs += multiply(boundary_divisor(g, n + 1, 0, {i + 1, n + 1}), pulled);
        }
    }
    return equal_by_pairing(lhs, rhs, opt);
}

PairingReport check_dilaton(Side side, int g, const std::vector<int>& d, const PairingOptions& opt) {
    int n = static_cast<int>(d.size()), total = std::accumulate(d.begin(), d.end(), 0);
    if (total < 2 * g - 2) throw std::invalid_argument("dilaton check needs sum d >= 2g-2");
    std::vector<int> d1 = d;
    d1.push_back(1);
    TautClass lhs = pushforward_forget(build_class(side, g, d1), n + 1);
    TautClass rhs(standard_ambient(g, n));
    if (total > 2 * g - 2) rhs = build_class(side, g, d).scaled(Rational(2 * g - 2 + n));
    return equal_by_pairing(lhs, rhs, opt);
}

}  // namespace taut
