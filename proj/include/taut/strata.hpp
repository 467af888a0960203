#ifndef TAUT_STRATA_HPP
#define TAUT_STRATA_HPP

#include <algorithm>
#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "taut/exactmath.hpp"
#include "taut/graph.hpp"

namespace taut {

// xi_Gamma* of a kappa/psi monomial; a set lambda flag on v multiplies the vertex factor by lambda_{g(v)}.
struct Stratum {
    StableGraph graph;
    std::vector<std::vector<int>> kappa;  // kappa[v][i]: exponent of kappa_{i+1}
    std::vector<int> psi;                 // per half-edge
    std::vector<uint8_t> lambda;          // per vertex

    static Stratum bare(StableGraph g);
    int degree() const;
    int vertex_degree(int v) const;
    bool exceeds_dimension() const;
    void trim();
    std::vector<int> psi_at(int v) const;
    // True if the graph is a tree and every vertex of positive genus carries lambda.
    bool lambda_saturated() const;
};

struct CanonicalStratum {
    Stratum stratum;
    std::string key;
    long automorphisms = 1;
};

CanonicalStratum canonical_form(const Stratum& s);

struct Ambient {
    int g = 0;
    std::vector<int> markings;
    int n() const { return static_cast<int>(markings.size()); }
    int dimension() const { return 3 * g - 3 + n(); }
    bool operator==(const Ambient& o) const { return g == o.g && markings == o.markings; }
    bool operator!=(const Ambient& o) const { return !(*this == o); }
};

Ambient standard_ambient(int g, int n);
Ambient ambient_of(const Stratum& s);

using Term = std::pair<Stratum, Rational>;

std::vector<Term> product_terms(const Stratum& x, const Stratum& y);
std::vector<Term> pushforward_terms(const Stratum& s, int marking);
std::vector<Term> pullback_terms(const Stratum& s, int marking);
// pieces[v] lives on the space of vertex v; its markings are the half-edge ids of outer at v.
Stratum graft(const StableGraph& outer, const std::vector<Stratum>& pieces);
Rational integrate_stratum(const Stratum& s);
Rational pair_strata(const Stratum& x, const Stratum& y);

void clear_product_cache();
std::size_t product_cache_size();

inline bool coeff_is_zero(const Rational& r) { return r == 0; }
inline bool coeff_is_zero(const MultiPoly& p) { return p.is_zero(); }
inline Rational coeff_mul(const Rational& a, const Rational& b) { return a * b; }
inline MultiPoly coeff_mul(const MultiPoly& a, const Rational& b) { return a * b; }
inline MultiPoly coeff_mul(const Rational& a, const MultiPoly& b) { return b * a; }
inline MultiPoly coeff_mul(const MultiPoly& a, const MultiPoly& b) { return a * b; }
inline Rational coeff_neg(const Rational& a) { return -a; }
inline MultiPoly coeff_neg(const MultiPoly& a) { return -a; }

// Linear combination of canonical strata on a fixed ambient space.
template <class C>
class Combination {
public:
    struct Entry {
        Stratum stratum;
        C coeff;
        long automorphisms = 1;
    };

    Ambient ambient;
    bool ct = false;
    std::map<std::string, Entry> terms;

    Combination() = default;
    explicit Combination(Ambient a, bool ct_flag = false) : ambient(std::move(a)), ct(ct_flag) {}

    void add(const Stratum& s, const C& c) {
        if (coeff_is_zero(c)) return;
        if (ambient_of(s) != ambient) throw std::invalid_argument("ambient mismatch");
        Stratum t = s;
        t.trim();
        if (t.exceeds_dimension()) return;
        if (ct && !t.graph.is_tree()) return;
        CanonicalStratum cs = canonical_form(t);
        add_canonical(cs.key, Entry{std::move(cs.stratum), c, cs.automorphisms});
    }

    void add_canonical(const std::string& key, const Entry& e) {
        auto it = terms.find(key);
        if (it == terms.end()) {
            terms.emplace(key, e);
            return;
        }
        it->second.coeff = it->second.coeff + e.coeff;
        if (coeff_is_zero(it->second.coeff)) terms.erase(it);
    }

    Combination& operator+=(const Combination& o) {
        check(o);
        ct = ct || o.ct;
        for (const auto& [k, e] : o.terms) add_canonical(k, e);
        if (ct) drop_non_tree();
        return *this;
    }
    Combination& operator-=(const Combination& o) {
        check(o);
        ct = ct || o.ct;
        for (const auto& [k, e] : o.terms) add_canonical(k, Entry{e.stratum, coeff_neg(e.coeff), e.automorphisms});
        if (ct) drop_non_tree();
        return *this;
    }
    friend Combination operator+(Combination a, const Combination& b) { return a += b; }
    friend Combination operator-(Combination a, const Combination& b) { return a -= b; }

    template <class S>
    Combination scaled(const S& s) const {
        Combination r(ambient, ct);
        for (const auto& [k, e] : terms) {
            C c = coeff_mul(e.coeff, s);
            if (!coeff_is_zero(c)) r.terms.emplace(k, Entry{e.stratum, c, e.automorphisms});
        }
        return r;
    }

    bool is_zero() const { return terms.empty(); }
    std::size_t size() const { return terms.size(); }
    std::optional<int> degree() const {
        std::optional<int> d;
        for (const auto& [k, e] : terms) {
            int x = e.stratum.degree();
            if (d && *d != x) return std::nullopt;
            d = x;
        }
        return d;
    }
    // Same strata with identical coefficients.
    bool syntactically_equal(const Combination& o) const {
        if (ambient != o.ambient || terms.size() != o.terms.size()) return false;
        for (const auto& [k, e] : terms) {
            auto it = o.terms.find(k);
            if (it == o.terms.end() || !(it->second.coeff == e.coeff)) return false;
        }
        return true;
    }

    void drop_non_tree() {
        for (auto it = terms.begin(); it != terms.end();)
            it = it->second.stratum.graph.is_tree() ? std::next(it) : terms.erase(it);
    }

private:
    void check(const Combination& o) const {
        if (ambient != o.ambient) throw std::invalid_argument("ambient mismatch");
    }
};

using TautClass = Combination<Rational>;
using PolyTautClass = Combination<MultiPoly>;

template <class C>
Combination<C> single_term(const Stratum& s, const C& c, bool ct = false) {
    Combination<C> r(ambient_of(s), ct);
    r.add(s, c);
    return r;
}

inline TautClass single(const Stratum& s, const Rational& c = 1) { return single_term<Rational>(s, c); }

template <class C>
Combination<C> normalize(const Combination<C>& x) {
    Combination<C> r(x.ambient, x.ct);
    for (const auto& [k, e] : x.terms) r.add(e.stratum, e.coeff);
    return r;
}

template <class C1, class C2>
auto multiply(const Combination<C1>& x, const Combination<C2>& y) {
    using R = decltype(coeff_mul(std::declval<C1>(), std::declval<C2>()));
    if (x.ambient != y.ambient) throw std::invalid_argument("ambient mismatch");
    Combination<R> out(x.ambient, x.ct || y.ct);
    for (const auto& [kx, ex] : x.terms)
        for (const auto& [ky, ey] : y.terms) {
            R c = coeff_mul(ex.coeff, ey.coeff);
            for (const auto& [s, w] : product_terms(ex.stratum, ey.stratum)) out.add(s, coeff_mul(c, w));
        }
    return out;
}

template <class C>
Combination<C> pushforward_forget(const Combination<C>& x, int marking) {
    Ambient a = x.ambient;
    auto it = std::find(a.markings.begin(), a.markings.end(), marking);
    if (it == a.markings.end()) throw std::invalid_argument("marking not present");
    a.markings.erase(it);
    if (2 * a.g - 2 + a.n() <= 0) throw std::invalid_argument("target space unstable");
    Combination<C> out(a, x.ct);
    for (const auto& [k, e] : x.terms)
        for (const auto& [s, w] : pushforward_terms(e.stratum, marking)) out.add(s, coeff_mul(e.coeff, w));
    return out;
}

template <class C>
Combination<C> pullback_forget(const Combination<C>& x, int marking) {
    Ambient a = x.ambient;
    if (std::find(a.markings.begin(), a.markings.end(), marking) != a.markings.end())
        throw std::invalid_argument("marking already present");
    a.markings.push_back(marking);
    std::sort(a.markings.begin(), a.markings.end());
    Combination<C> out(a, x.ct);
    for (const auto& [k, e] : x.terms)
        for (const auto& [s, w] : pullback_terms(e.stratum, marking)) out.add(s, coeff_mul(e.coeff, w));
    return out;
}

// Top-degree integral; terms of other degrees contribute 0.
template <class C>
C integrate(const Combination<C>& x, const C& zero) {
    C total = zero;
    for (const auto& [k, e] : x.terms) {
        Rational v = integrate_stratum(e.stratum);
        if (v != 0) total = total + coeff_mul(e.coeff, v);
    }
    return total;
}

inline Rational integrate(const TautClass& x) { return integrate<Rational>(x, Rational(0)); }

// vertex_classes[v] lives on (g(v), half-edge ids of tree at v).
template <class C>
Combination<C> glue_push(const StableGraph& outer, const std::vector<Combination<C>>& vertex_classes, const Ambient& target) {
    int nv = outer.num_vertices();
    if (static_cast<int>(vertex_classes.size()) != nv) throw std::invalid_argument("one class per vertex required");
    for (int v = 0; v < nv; ++v) {
        Ambient a{outer.genus[v], outer.half_edges_at(v)};
        if (vertex_classes[v].ambient != a) throw std::invalid_argument("vertex-space mismatch");
    }
    bool ct = false;
    for (const auto& c : vertex_classes) ct = ct || c.ct;
    Combination<C> out(target, ct);
    std::vector<const typename Combination<C>::Entry*> pick(nv);
    std::function<void(int)> rec = [&](int v) {
        if (v == nv) {
            std::vector<Stratum> pieces;
            C c = pick[0]->coeff;
            for (int w = 0; w < nv; ++w) {
                pieces.push_back(pick[w]->stratum);
                if (w) c = coeff_mul(c, pick[w]->coeff);
            }
            out.add(graft(outer, pieces), c);
            return;
        }
        for (const auto& [k, e] : vertex_classes[v].terms) {
            pick[v] = &e;
            rec(v + 1);
        }
    };
    if (nv > 0) rec(0);
    return out;
}

// Relabels markings of every term.
template <class C>
Combination<C> relabel(const Combination<C>& x, const std::vector<std::pair<int, int>>& renaming) {
    Ambient a = x.ambient;
    std::map<int, int> m(renaming.begin(), renaming.end());
    for (int& l : a.markings)
        if (m.count(l)) l = m[l];
    std::sort(a.markings.begin(), a.markings.end());
    Combination<C> out(a, x.ct);
    for (const auto& [k, e] : x.terms) {
        Stratum s = e.stratum;
        s.graph = relabel_markings(s.graph, renaming);
        out.add(s, e.coeff);
    }
    return out;
}

// Convenience constructors on M_{g,n} with markings 1..n.
Stratum psi_monomial(int g, const std::vector<int>& exps);
Stratum kappa_monomial(int g, int n, const std::vector<int>& kappa_exps);

std::string describe(const Stratum& s);

}  // namespace taut

#endif
