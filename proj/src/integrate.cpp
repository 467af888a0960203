#include "taut/integrate.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <mutex>
#include <numeric>
#include <shared_mutex>
#include <stdexcept>

#include "taut/memo.hpp"

namespace taut {

namespace {

using Key = std::vector<int>;

Memo<Key, Rational>& wk_memo() {
    static Memo<Key, Rational> m;
    return m;
}

Memo<Key, Rational>& pk_memo() {
    static Memo<Key, Rational> m;
    return m;
}

Rational wk_sorted(int g, std::vector<int> d);

Rational wk_compute(int g, const std::vector<int>& d) {
    int n = static_cast<int>(d.size());
    if (g < 0 || 2 * g - 2 + n <= 0) return 0;
    int s = std::accumulate(d.begin(), d.end(), 0);
    if (s != 3 * g - 3 + n) return 0;
    for (int x : d)
        if (x < 0) return 0;
    if (g == 0 && n == 3) return 1;
    if (g == 1 && n == 1) return Rational(1, 24);
    // d is sorted descending.
    if (d.back() == 0) {
        std::vector<int> rest(d.begin(), d.end() - 1);
        Rational r = 0;
        for (std::size_t j = 0; j < rest.size(); ++j) {
            if (rest[j] == 0) continue;
            std::vector<int> e = rest;
            e[j] -= 1;
            r += wk_sorted(g, e);
        }
        return r;
    }
    if (d.back() == 1) {
        std::vector<int> rest(d.begin(), d.end() - 1);
        return Rational(2 * g - 2 + n - 1) * wk_sorted(g, rest);
    }
    int k = d[0] - 1;
    std::vector<int> S(d.begin() + 1, d.end());
    Rational total = 0;
    for (std::size_t j = 0; j < S.size(); ++j) {
        std::vector<int> e = S;
        int dj = e[j];
        e[j] = k + dj;
        total += double_factorial(2 * k + 2 * dj + 1) / double_factorial(2 * dj - 1) * wk_sorted(g, e);
    }
    for (int r = 0; r <= k - 1; ++r) {
        int sidx = k - 1 - r;
        Rational c = double_factorial(2 * r + 1) * double_factorial(2 * sidx + 1) / 2;
        std::vector<int> e = S;
        e.push_back(r);
        e.push_back(sidx);
        total += c * wk_sorted(g - 1, e);
        int m = static_cast<int>(S.size());
        for (long mask = 0; mask < (1L << m); ++mask) {
            std::vector<int> I{r}, J{sidx};
            for (int i = 0; i < m; ++i) ((mask >> i) & 1 ? I : J).push_back(S[i]);
            for (int g1 = 0; g1 <= g; ++g1) {
                Rational a = wk_sorted(g1, I);
                if (a == 0) continue;
                total += c * a * wk_sorted(g - g1, J);
            }
        }
    }
    return total / double_factorial(2 * k + 3);
}

Rational wk_sorted(int g, std::vector<int> d) {
    std::sort(d.begin(), d.end(), std::greater<int>());
    Key key = d;
    key.push_back(g);
    if (auto v = wk_memo().find(key)) return *v;
    Rational r = wk_compute(g, d);
    wk_memo().insert(key, r);
    return r;
}

}  // namespace

Rational wk_integral(int g, const std::vector<int>& psi_exps) { return wk_sorted(g, psi_exps); }

Rational psi_kappa_integral(int g, const std::vector<int>& psi_exps, const std::vector<int>& kappa_list) {
    if (kappa_list.empty()) return wk_integral(g, psi_exps);
    int n = static_cast<int>(psi_exps.size());
    if (2 * g - 2 + n <= 0) return 0;
    int deg = std::accumulate(psi_exps.begin(), psi_exps.end(), 0) +
              std::accumulate(kappa_list.begin(), kappa_list.end(), 0);
    if (deg != 3 * g - 3 + n) return 0;
    std::vector<int> ps = psi_exps, ks = kappa_list;
    std::sort(ps.begin(), ps.end(), std::greater<int>());
    std::sort(ks.begin(), ks.end(), std::greater<int>());
    Key key{g, static_cast<int>(ps.size())};
    key.insert(key.end(), ps.begin(), ps.end());
    key.insert(key.end(), ks.begin(), ks.end());
    if (auto v = pk_memo().find(key)) return *v;
    int b = ks.back();
    std::vector<int> rest(ks.begin(), ks.end() - 1);
    int m = static_cast<int>(rest.size());
    Rational total = 0;
    for (long mask = 0; mask < (1L << m); ++mask) {
        int extra = b + 1;
        std::vector<int> kept;
        int sign = 1;
        for (int i = 0; i < m; ++i) {
            if ((mask >> i) & 1) {
                extra += rest[i];
                sign = -sign;
            } else {
                kept.push_back(rest[i]);
            }
        }
        std::vector<int> p2 = ps;
        p2.push_back(extra);
        total += sign * psi_kappa_integral(g, p2, kept);
    }
    pk_memo().insert(key, total);
    return total;
}

std::vector<int> kappa_list_from_exponents(const std::vector<int>& kappa_exps) {
    std::vector<int> r;
    for (std::size_t i = 0; i < kappa_exps.size(); ++i)
        for (int k = 0; k < kappa_exps[i]; ++k) r.push_back(static_cast<int>(i) + 1);
    return r;
}

namespace {

// Splits a kappa multiset between two vertices; f receives (list1, list2, multiplicity).
void split_kappa(const std::vector<int>& kappa_exps,
                 const std::function<void(const std::vector<int>&, const std::vector<int>&, const Rational&)>& f) {
    std::size_t m = kappa_exps.size();
    std::vector<int> take(m, 0);
    std::function<void(std::size_t, Rational)> rec = [&](std::size_t i, Rational c) {
        if (i == m) {
            std::vector<int> a(m), b(m);
            for (std::size_t j = 0; j < m; ++j) {
                a[j] = take[j];
                b[j] = kappa_exps[j] - take[j];
            }
            f(kappa_list_from_exponents(a), kappa_list_from_exponents(b), c);
            return;
        }
        for (int t = 0; t <= kappa_exps[i]; ++t) {
            take[i] = t;
            Integer bin;
            mpz_bin_uiui(bin.get_mpz_t(), kappa_exps[i], t);
            rec(i + 1, c * Rational(bin));
        }
    };
    rec(0, 1);
}

}  // namespace

Rational vertex_integral(int g, const std::vector<int>& psi_exps, const std::vector<int>& kappa_exps, bool lambda) {
    int n = static_cast<int>(psi_exps.size());
    if (2 * g - 2 + n <= 0) throw std::invalid_argument("unstable vertex");
    std::vector<int> kl = kappa_list_from_exponents(kappa_exps);
    if (!lambda || g == 0) return psi_kappa_integral(g, psi_exps, kl);
    int deg = std::accumulate(psi_exps.begin(), psi_exps.end(), 0) + std::accumulate(kl.begin(), kl.end(), 0) + g;
    if (deg != 3 * g - 3 + n) return 0;
    if (g == 1) {
        std::vector<int> p = psi_exps;
        p.insert(p.end(), {0, 0});
        return Rational(1, 24) * psi_kappa_integral(0, p, kl);
    }
    if (g == 2) {
        std::vector<int> p = psi_exps;
        p.insert(p.end(), {0, 0, 0, 0});
        Rational total = Rational(1, 960) * psi_kappa_integral(0, p, kl);
        Rational loop_on_edge = 0;
        for (long mask = 0; mask < (1L << n); ++mask) {
            std::vector<int> p1{0}, p2{0, 0, 0};
            for (int i = 0; i < n; ++i) ((mask >> i) & 1 ? p1 : p2).push_back(psi_exps[i]);
            split_kappa(kappa_exps, [&](const std::vector<int>& k1, const std::vector<int>& k2, const Rational& c) {
                Rational a = psi_kappa_integral(1, p1, k1);
                if (a == 0) return;
                loop_on_edge += c * a * psi_kappa_integral(0, p2, k2);
            });
        }
        return total + Rational(1, 240) * loop_on_edge;
    }
    throw std::invalid_argument("lambda_g integrals need g <= 2");
}

void clear_integral_cache() {
    wk_memo().clear();
    pk_memo().clear();
}

std::size_t integral_cache_size() { return wk_memo().size() + pk_memo().size(); }

}  // namespace taut
