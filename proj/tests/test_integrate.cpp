#include "doctest.h"
#include "taut/integrate.hpp"

#include <numeric>

using namespace taut;

namespace {

Rational multinomial(const std::vector<int>& a) {
    int s = std::accumulate(a.begin(), a.end(), 0);
    Rational r = factorial(s);
    for (int x : a) r /= factorial(x);
    return r;
}

// Genus-0 integrals are multinomial coefficients.
Rational genus0_oracle(const std::vector<int>& a) {
    int n = static_cast<int>(a.size());
    if (std::accumulate(a.begin(), a.end(), 0) != n - 3) return 0;
    return multinomial(a);
}

// int lambda_g psi^a over M_{g,n} = binom(2g-3+n; a) b_g.
Rational lambda_oracle(int g, const std::vector<int>& a) {
    int n = static_cast<int>(a.size());
    if (std::accumulate(a.begin(), a.end(), 0) != 2 * g - 3 + n) return 0;
    Rational b = g == 1 ? Rational(1, 24) : Rational(7, 5760);
    return multinomial(a) * b;
}

}  // namespace

TEST_CASE("psi integrals: known values") {
    CHECK(wk_integral(0, {0, 0, 0}) == 1);
    CHECK(wk_integral(1, {1}) == Rational(1, 24));
    CHECK(wk_integral(2, {4}) == Rational(1, 1152));
    CHECK(wk_integral(2, {3, 2}) == Rational(29, 5760));
    CHECK(wk_integral(3, {7}) == Rational(1, 82944));
    CHECK(wk_integral(1, {1, 1}) == Rational(1, 24));
    CHECK(wk_integral(2, {2, 3}) == Rational(29, 5760));
    CHECK(wk_integral(2, {3}) == 0);
}

TEST_CASE("psi integrals: genus zero") {
    for (int n = 3; n <= 7; ++n) {
        std::vector<int> a(n, 0);
        std::function<void(int, int)> rec = [&](int i, int left) {
            if (i == n) {
                CHECK(wk_integral(0, a) == genus0_oracle(a));
                return;
            }
            for (int x = 0; x <= left; ++x) {
                a[i] = x;
                rec(i + 1, left - x);
            }
            a[i] = 0;
        };
        rec(0, n - 3);
    }
}

TEST_CASE("psi integrals: string and dilaton") {
    for (int g = 1; g <= 3; ++g)
        for (int n = 1; n <= 3; ++n) {
            std::vector<int> a(n, 0);
            std::function<void(int, int)> rec = [&](int i, int left) {
                if (i == n - 1) {
                    a[i] = left;
                    std::vector<int> d = a;
                    d.push_back(1);
                    CHECK(wk_integral(g, d) == Rational(2 * g - 2 + n) * wk_integral(g, a));
                    std::vector<int> up = a;
                    up[0] += 1;
                    Rational str = 0;
                    for (int j = 0; j < n; ++j) {
                        if (up[j] == 0) continue;
                        std::vector<int> b = up;
                        b[j] -= 1;
                        str += wk_integral(g, b);
                    }
                    up.push_back(0);
                    CHECK(wk_integral(g, up) == str);
                    return;
                }
                for (int x = 0; x <= left; ++x) {
                    a[i] = x;
                    rec(i + 1, left - x);
                }
            };
            rec(0, 3 * g - 3 + n);
        }
}

TEST_CASE("kappa integrals") {
    CHECK(psi_kappa_integral(1, {0}, {1}) == Rational(1, 24));
    CHECK(psi_kappa_integral(0, {0, 0, 0, 0}, {1}) == 1);
    CHECK(psi_kappa_integral(0, {0, 0, 0, 0, 0}, {1, 1}) == 5);
    CHECK(psi_kappa_integral(0, {0, 0, 0, 0, 0}, {2}) == 1);
    // kappa_1 on M_{0,n} pushes to psi: int kappa_1 psi^a = int_{n+1} psi^a psi_{n+1}^2.
    CHECK(psi_kappa_integral(0, {1, 0, 0, 0, 0}, {1}) == wk_integral(0, {1, 0, 0, 0, 0, 2}));
    CHECK(psi_kappa_integral(2, {}, {3}) == Rational(1, 1152));
    CHECK(psi_kappa_integral(2, {}, {1, 2}) == Rational(29, 5760) - Rational(1, 1152));
}

TEST_CASE("lambda_g integrals against the closed form") {
    for (int g = 1; g <= 2; ++g)
        for (int n = 1; n <= 4; ++n) {
            std::vector<int> a(n, 0);
            int top = 2 * g - 3 + n;
            if (top < 0) continue;
            std::function<void(int, int)> rec = [&](int i, int left) {
                if (i == n - 1) {
                    a[i] = left;
                    CHECK(vertex_integral(g, a, {}, true) == lambda_oracle(g, a));
                    return;
                }
                for (int x = 0; x <= left; ++x) {
                    a[i] = x;
                    rec(i + 1, left - x);
                }
            };
            rec(0, top);
        }
    CHECK(vertex_integral(2, {}, {1}, true) == lambda_oracle(2, {2}));
    CHECK(vertex_integral(1, {0}, {}, true) == Rational(1, 24));
    CHECK_THROWS(vertex_integral(3, {}, {0, 0, 1}, true));
}
