#include "taut/suites.hpp"

#include <omp.h>

#include <algorithm>
#include <chrono>
#include <functional>
#include <map>
#include <numeric>
#include <random>
#include <sstream>
#include <stdexcept>

#include "taut/abclasses.hpp"
#include "taut/drcycle.hpp"
#include "taut/enumerate.hpp"
#include "taut/integrate.hpp"
#include "taut/trees.hpp"

namespace taut {

namespace {

using Clock = std::chrono::steady_clock;

std::string join(const std::vector<int>& v) {
    std::string s = "(";
    for (std::size_t i = 0; i < v.size(); ++i) s += (i ? "," : "") + std::to_string(v[i]);
    return s + ")";
}

std::string join(const std::vector<Rational>& v) {
    std::string s = "(";
    for (std::size_t i = 0; i < v.size(); ++i) s += (i ? ", " : "") + to_string(v[i]);
    return s + ")";
}

Json class_inputs(int g, const std::vector<int>& d) {
    Json j;
    j["g"] = g;
    j["d"] = d;
    return j;
}

void add_keys(CheckRecord& r, const TautClass& x) {
    for (const auto& [k, e] : x.terms) r.class_keys.push_back(k);
}

// Runs one check, timing it and turning exceptions into failed records.
CheckRecord run_check(const std::string& id, Json inputs, const SuiteOptions& opt,
                      const std::function<void(CheckRecord&)>& body) {
    CheckRecord r;
    r.id = id;
    r.inputs = std::move(inputs);
    auto t0 = Clock::now();
    try {
        body(r);
    } catch (const std::exception& e) {
        r.passed = false;
        r.verdict = std::string("error: ") + e.what();
    }
    r.seconds = std::chrono::duration<double>(Clock::now() - t0).count();
    if (opt.timeout_per_check > 0 && r.seconds > opt.timeout_per_check) {
        r.passed = false;
        r.verdict = "timeout after " + std::to_string(r.seconds) + " s";
    }
    std::sort(r.class_keys.begin(), r.class_keys.end());
    r.class_keys.erase(std::unique(r.class_keys.begin(), r.class_keys.end()), r.class_keys.end());
    return r;
}

void fill_values(CheckRecord& r, const std::vector<Rational>& expected, const std::vector<Rational>& computed,
                 Source source) {
    r.expected = join(expected);
    r.computed = join(computed);
    r.source = source;
    r.passed = expected == computed;
    r.verdict = r.passed ? "value match" : "value mismatch";
    for (std::size_t i = 0; i < expected.size() && i < computed.size(); ++i)
        if (expected[i] != computed[i])
            r.witness.push_back({{"index", i}, {"expected", to_string(expected[i])}, {"computed", to_string(computed[i])}});
}

CheckRecord value_check(const std::string& id, Json inputs, const std::vector<Rational>& expected, Source source,
                        const SuiteOptions& opt, const std::function<std::vector<Rational>(CheckRecord&)>& compute) {
    return run_check(id, std::move(inputs), opt, [&](CheckRecord& r) { fill_values(r, expected, compute(r), source); });
}

void fill_report(CheckRecord& r, const PairingReport& rep) {
    r.passed = rep.equal;
    r.verdict = rep.verdict();
    r.computed = rep.verdict() + " over " + std::to_string(rep.entries.size()) + " test classes";
    r.assumptions.insert(r.assumptions.end(), rep.assumptions.begin(), rep.assumptions.end());
    for (const auto& e : rep.entries)
        if (e.x != e.y)
            r.witness.push_back({{"key", e.key},
                                 {"class", e.description},
                                 {"x", to_string(e.x)},
                                 {"y", to_string(e.y)},
                                 {"difference", to_string(e.x - e.y)}});
}

// Syntactic comparison first, pairing comparison when the representatives differ.
CheckRecord equality_check(const std::string& id, Json inputs, Source source, const SuiteOptions& opt,
                           const PairingOptions& popt, const std::function<std::pair<TautClass, TautClass>()>& build) {
    return run_check(id, std::move(inputs), opt, [&](CheckRecord& r) {
        auto [x, y] = build();
        add_keys(r, x);
        add_keys(r, y);
        r.expected = "equal classes";
        r.source = source;
        r.assumptions.push_back("pairing-level equality");
        fill_report(r, equal_by_pairing(x, y, popt));
    });
}

CheckRecord syntactic_check(const std::string& id, Json inputs, Source source, const SuiteOptions& opt,
                            const std::function<std::pair<TautClass, TautClass>()>& build) {
    return run_check(id, std::move(inputs), opt, [&](CheckRecord& r) {
        auto [x, y] = build();
        add_keys(r, x);
        add_keys(r, y);
        r.expected = "identical canonical terms";
        r.source = source;
        r.passed = x.syntactically_equal(y);
        r.verdict = r.passed ? "syntactic equality" : "syntactic difference";
        r.computed = std::to_string(x.size()) + " vs " + std::to_string(y.size()) + " terms";
        if (!r.passed) {
            TautClass diff = x - y;
            for (const auto& [k, e] : diff.terms)
                r.witness.push_back({{"key", k}, {"class", describe(e.stratum)}, {"difference", to_string(e.coeff)}});
        }
    });
}

Stratum decorated(const Shape& shape, const std::map<int, int>& psi, const std::map<int, std::vector<int>>& kappa = {}) {
    Stratum s = Stratum::bare(make_graph(shape));
    for (auto [h, e] : psi) s.psi[h] = e;
    for (const auto& [v, k] : kappa) s.kappa[v] = k;
    return s;
}

TautClass bare_class(const Shape& shape) { return single(Stratum::bare(make_graph(shape))); }

TautClass psi_class(int g, const std::vector<int>& e) { return single(psi_monomial(g, e)); }

// --- Witten-Kontsevich spot values ---

std::vector<CheckRecord> wk_spot(const SuiteOptions& opt) {
    std::vector<CheckRecord> out;
    out.push_back(value_check("integral of 1 over M_{0,3}", {{"g", 0}, {"n", 3}}, {1}, Source::definition, opt,
                              [](CheckRecord&) {
                                  return std::vector<Rational>{integrate(bare_class({{0}, {}, {{0, 1}, {0, 2}, {0, 3}}}))};
                              }));
    out.push_back(value_check("psi_1^4 over M_{2,1}, recursion and strata integral", {{"g", 2}, {"psi", {4}}},
                              {Rational(1, 1152), Rational(1, 1152)}, Source::published, opt,
                              [](CheckRecord&) {
                                  return std::vector<Rational>{wk_integral(2, {4}), integrate(psi_class(2, {4}))};
                              }));
    out.push_back(value_check("psi_1 over M_{1,1}", {{"g", 1}, {"psi", {1}}}, {Rational(1, 24)}, Source::oracle, opt,
                              [](CheckRecord&) { return std::vector<Rational>{integrate(psi_class(1, {1}))}; }));
    return out;
}

// --- genus two, one point ---

std::vector<TautClass> one_point_tests() {
    return {psi_class(2, {1}), bare_class({{1}, {{0, 0}}, {{0, 1}}}), boundary_divisor(2, 1, 1, {1})};
}

TautClass published_b23() {
    Shape s{{1, 1}, {{0, 1}}, {{1, 1}}};
    return psi_class(2, {3}) - single(decorated(s, {{2, 2}}));
}

std::vector<CheckRecord> genus2_one_point(const SuiteOptions& opt) {
    std::vector<CheckRecord> out;
    std::vector<Rational> expect{Rational(1, 1152), 0, Rational(1, 576)};
    for (Side side : {Side::A, Side::B}) {
        std::string name = side == Side::A ? "A" : "B";
        out.push_back(value_check(name + "^2_3 against (psi_1, delta_0, delta_1)", class_inputs(2, {3}), expect,
                                  Source::published, opt, [&](CheckRecord& r) {
                                      TautClass x = build_class(side, 2, {3});
                                      add_keys(r, x);
                                      return pair_all(x, one_point_tests());
                                  }));
    }
    out.push_back(syntactic_check("B^2_3 two-term expression", class_inputs(2, {3}), Source::published, opt,
                                  [] { return std::pair{b_class({2, {3}}), published_b23()}; }));
    out.push_back(syntactic_check("chain formula for B^2_3", class_inputs(2, {3}), Source::oracle, opt,
                                  [] { return std::pair{b_chain(2, 3), b_class({2, {3}})}; }));
    out.push_back(equality_check("A^2_3 = B^2_3", class_inputs(2, {3}), Source::published, opt, opt.pairing,
                                 [] { return std::pair{a_class({2, {3}}), b_class({2, {3}})}; }));
    return out;
}

// --- genus two, two points ---

std::vector<std::pair<std::string, TautClass>> two_point_basis() {
    std::vector<std::pair<std::string, TautClass>> b;
    b.emplace_back("delta_22", single(decorated({{2, 0}, {{0, 1}}, {{1, 1}, {1, 2}}}, {{0, 1}})));
    b.emplace_back("delta_11|", bare_class({{1, 0, 1}, {{0, 1}, {1, 2}}, {{1, 1}, {1, 2}}}));
    b.emplace_back("delta_11|1", bare_class({{1, 0, 1}, {{0, 1}, {1, 2}}, {{0, 1}, {1, 2}}}));
    b.emplace_back("delta_11|2", bare_class({{1, 0, 1}, {{0, 1}, {1, 2}}, {{0, 2}, {1, 1}}}));
    b.emplace_back("delta_11|12", bare_class({{1, 1, 0}, {{0, 1}, {1, 2}}, {{2, 1}, {2, 2}}}));
    b.emplace_back("delta_01|", bare_class({{0, 1}, {{0, 1}, {0, 0}}, {{0, 1}, {0, 2}}}));
    b.emplace_back("delta_01|1", bare_class({{0, 1}, {{0, 1}, {0, 0}}, {{0, 2}, {1, 1}}}));
    b.emplace_back("delta_01|2", bare_class({{0, 1}, {{0, 1}, {0, 0}}, {{0, 1}, {1, 2}}}));
    b.emplace_back("delta_01|12", bare_class({{0, 1}, {{0, 1}, {0, 0}}, {{1, 1}, {1, 2}}}));
    b.emplace_back("delta_0|", bare_class({{1, 0}, {{0, 1}, {0, 1}}, {{1, 1}, {1, 2}}}));
    b.emplace_back("delta_0|1", bare_class({{1, 0}, {{0, 1}, {0, 1}}, {{0, 1}, {1, 2}}}));
    b.emplace_back("delta_0|2", bare_class({{1, 0}, {{0, 1}, {0, 1}}, {{0, 2}, {1, 1}}}));
    b.emplace_back("delta_0|12", bare_class({{1, 0}, {{0, 1}, {0, 0}}, {{1, 1}, {1, 2}}}));
    b.emplace_back("delta_00", bare_class({{0}, {{0, 0}, {0, 0}}, {{0, 1}, {0, 2}}}));
    return b;
}

TautClass published_b21() {
    TautClass x = psi_class(2, {2, 1});
    Shape sep{{2, 0}, {{0, 1}}, {{1, 1}, {1, 2}}};
    x -= single(decorated(sep, {{0, 2}}), 3);
    Shape ell{{1, 1}, {{0, 1}}, {{1, 1}, {1, 2}}};
    x -= single(decorated(ell, {{2, 1}, {3, 1}}));
    x -= single(decorated(ell, {{2, 2}}));
    Shape chain{{1, 1, 0}, {{0, 1}, {1, 2}}, {{2, 1}, {2, 2}}};
    x += single(decorated(chain, {{2, 1}}), 3);
    return x;
}

std::vector<CheckRecord> genus2_two_point(const SuiteOptions& opt) {
    std::vector<CheckRecord> out;
    std::vector<Rational> expect(14, 0);
    expect[0] = Rational(1, 384);
    expect[2] = Rational(1, 576);
    expect[4] = Rational(1, 192);
    auto basis = two_point_basis();
    std::vector<TautClass> tests;
    for (auto& [n, c] : basis) tests.push_back(c);
    for (Side side : {Side::A, Side::B}) {
        std::string name = side == Side::A ? "A" : "B";
        out.push_back(value_check(name + "^2_{2,1} against the 14-class basis of R^2(M_{2,2})", class_inputs(2, {2, 1}),
                                  expect, Source::published, opt, [&](CheckRecord& r) {
                                      TautClass x = build_class(side, 2, {2, 1});
                                      add_keys(r, x);
                                      return pair_all(x, tests);
                                  }));
    }
    out.push_back(syntactic_check("B^2_{2,1} five-term expression", class_inputs(2, {2, 1}), Source::published, opt,
                                  [] { return std::pair{b_class({2, {2, 1}}), published_b21()}; }));
    out.push_back(equality_check("A^2_{2,1} = B^2_{2,1}", class_inputs(2, {2, 1}), Source::published, opt, opt.pairing,
                                 [] { return std::pair{a_class({2, {2, 1}}), b_class({2, {2, 1}})}; }));
    return out;
}

// --- genus two, three points ---

std::vector<CheckRecord> genus2_three_point(const SuiteOptions& opt) {
    std::vector<CheckRecord> out;
    auto tests = three_point_test_classes();
    std::vector<TautClass> xs;
    for (auto& [n, c] : tests) xs.push_back(c);
    out.push_back(value_check("A^2_{1,1,1} - B^2_{1,1,1} against the seven test classes", class_inputs(2, {1, 1, 1}),
                              std::vector<Rational>(7, 0), Source::published, opt, [&](CheckRecord& r) {
                                  TautClass diff = a_class({2, {1, 1, 1}}) - b_class({2, {1, 1, 1}});
                                  add_keys(r, diff);
                                  return pair_all(diff, xs);
                              }));
    out.push_back(equality_check("A^2_{1,1,1} = B^2_{1,1,1}", class_inputs(2, {1, 1, 1}), Source::published, opt,
                                 opt.pairing, [] { return std::pair{a_class({2, {1, 1, 1}}), b_class({2, {1, 1, 1}})}; }));
    return out;
}

const std::vector<std::vector<int>>& published_matrix() {
    static const std::vector<std::vector<int>> m{{0, 1, 0, 1, 1, 0, 0, 0, 2},   {0, 3, 0, 3, 0, 1, 1, 1, 3},
                                                 {0, 6, 0, 6, 0, 0, 6, 6, 0},   {0, 1, 0, 1, 3, 0, 0, 0, 3},
                                                 {1, 9, 1, 9, 27, 3, 3, 3, 27}, {1, 4, 0, 4, 4, 2, 1, 1, 8},
                                                 {0, -2, 1, 0, 2, 0, 2, 0, 2}};
    return m;
}

std::vector<CheckRecord> intersection_matrix(const SuiteOptions& opt) {
    std::vector<CheckRecord> out;
    auto tests = three_point_test_classes();
    auto betas = beta_classes();
    std::vector<std::vector<Rational>> computed(tests.size());
    for (std::size_t i = 0; i < tests.size(); ++i) {
        std::vector<Rational> expect;
        for (int v : published_matrix()[i]) expect.push_back(v);
        out.push_back(value_check("row " + tests[i].first + " against beta_1..beta_9", {{"row", tests[i].first}}, expect,
                                  Source::published, opt, [&](CheckRecord& r) {
                                      std::vector<Rational> row;
                                      for (const TautClass& b : betas) {
                                          add_keys(r, b);
                                          row.push_back(pair(tests[i].second, b));
                                      }
                                      computed[i] = row;
                                      return row;
                                  }));
    }
    out.push_back(value_check("rank of the intersection matrix", Json::object(), {7}, Source::published, opt,
                              [&](CheckRecord&) { return std::vector<Rational>{matrix_rank(computed)}; }));
    std::vector<std::vector<Rational>> relations{{0, 1, 0, -1, 0, 0, 1, -1, 0},
                                                 {1, 1, 2, 0, Rational(1, 3), 0, Rational(1, 3), Rational(-4, 3),
                                                  Rational(-2, 3)}};
    for (std::size_t k = 0; k < relations.size(); ++k) {
        out.push_back(value_check("genus-zero relation " + std::to_string(k + 1) + " among the beta classes",
                                  {{"coefficients", join(relations[k])}}, std::vector<Rational>(7, 0), Source::published,
                                  opt, [&](CheckRecord&) {
                                      std::vector<Rational> v;
                                      for (const auto& row : computed) {
                                          if (row.size() != 9) throw std::runtime_error("matrix row missing");
                                          Rational s = 0;
                                          for (int j = 0; j < 9; ++j) s += relations[k][j] * row[j];
                                          v.push_back(s);
                                      }
                                      return v;
                                  }));
    }
    return out;
}

// --- remaining restricted genus-two relations ---

TautClass times_psi1(int g, int n, const TautClass& x) {
    std::vector<int> e(n, 0);
    e[0] = 1;
    return multiply(psi_class(g, e), x);
}

// 2 gl_*(x * [M_{0,3}]) with x on M_{2,2}: marking 1 stays, marking 2 is glued to a point carrying 2 and 3.
TautClass glued_with_point(const TautClass& x) {
    StableGraph gr = make_graph({{2, 0}, {{0, 1}}, {{0, 1}, {1, 2}, {1, 3}}});
    int leg1 = gr.leg(1);
    TautClass a = relabel(x, {{1, leg1}, {2, 0}});
    std::vector<int> hb = gr.half_edges_at(1);
    TautClass point = single(Stratum::bare(trivial_graph(0, hb)));
    return glue_push(gr, std::vector<TautClass>{a, point}, standard_ambient(2, 3)).scaled(Rational(2));
}

TautClass published_b31() {
    Shape ell{{1, 1}, {{0, 1}}, {{1, 1}, {1, 2}}};
    return psi_class(2, {3, 1}) - single(decorated(ell, {{2, 2}, {3, 1}})) - single(decorated(ell, {{2, 3}}));
}

TautClass published_b22() {
    Shape ell{{1, 1}, {{0, 1}}, {{1, 1}, {1, 2}}};
    return psi_class(2, {2, 2}) - single(decorated(ell, {{2, 2}, {3, 1}})) - single(decorated(ell, {{2, 1}, {3, 2}}));
}

std::vector<CheckRecord> genus2_remaining(const SuiteOptions& opt) {
    std::vector<CheckRecord> out;
    out.push_back(syntactic_check("B^2_{3,1} = psi_1 B^2_{2,1}", class_inputs(2, {3, 1}), Source::published, opt,
                                  [] { return std::pair{b_class({2, {3, 1}}), times_psi1(2, 2, b_class({2, {2, 1}}))}; }));
    out.push_back(syntactic_check("B^2_{2,2} = psi_1 B^2_{1,2}", class_inputs(2, {2, 2}), Source::published, opt,
                                  [] { return std::pair{b_class({2, {2, 2}}), times_psi1(2, 2, b_class({2, {1, 2}}))}; }));
    out.push_back(syntactic_check("B^2_{3,1} three-term expression", class_inputs(2, {3, 1}), Source::published, opt,
                                  [] { return std::pair{b_class({2, {3, 1}}), published_b31()}; }));
    out.push_back(syntactic_check("B^2_{2,2} three-term expression", class_inputs(2, {2, 2}), Source::published, opt,
                                  [] { return std::pair{b_class({2, {2, 2}}), published_b22()}; }));
    out.push_back(equality_check("A^2_{3,1} = psi_1 A^2_{2,1}", class_inputs(2, {3, 1}), Source::published, opt,
                                 opt.pairing, [] {
                                     return std::pair{a_class({2, {3, 1}}), times_psi1(2, 2, a_class({2, {2, 1}}))};
                                 }));
    out.push_back(equality_check("A^2_{2,2} = psi_1 A^2_{1,2}", class_inputs(2, {2, 2}), Source::published, opt,
                                 opt.pairing, [] {
                                     return std::pair{a_class({2, {2, 2}}), times_psi1(2, 2, a_class({2, {1, 2}}))};
                                 }));
    for (const std::vector<int>& d : std::vector<std::vector<int>>{{3, 1}, {2, 2}, {2, 1, 1}, {1, 1, 1, 1}})
        out.push_back(equality_check("A^2_" + join(d) + " = B^2_" + join(d), class_inputs(2, d), Source::published, opt,
                                     opt.pairing, [&] { return std::pair{a_class({2, d}), b_class({2, d})}; }));
    out.push_back(equality_check("A^2_{2,1,1} - psi_1 A^2_{1,1,1} = 2 gl_*(A^2_{2,1} x [M_{0,3}])",
                                 class_inputs(2, {2, 1, 1}), Source::published, opt, opt.pairing, [] {
                                     TautClass lhs = a_class({2, {2, 1, 1}}) - times_psi1(2, 3, a_class({2, {1, 1, 1}}));
                                     return std::pair{lhs, glued_with_point(a_class({2, {2, 1}}))};
                                 }));
    out.push_back(equality_check("B^2_{2,1,1} - psi_1 B^2_{1,1,1} = 2 gl_*(B^2_{2,1} x [M_{0,3}])",
                                 class_inputs(2, {2, 1, 1}), Source::published, opt, opt.pairing, [] {
                                      TautClass lhs = b_class({2, {2, 1, 1}}) - times_psi1(2, 3, b_class({2, {1, 1, 1}}));
                                      return std::pair{lhs, glued_with_point(b_class({2, {2, 1}}))};
                                  }));
    return out;
}

// --- genus zero and one ---

void for_each_d(int n, int max_total, const std::function<void(const std::vector<int>&)>& f) {
    std::vector<int> d(n, 0);
    std::function<void(int, int)> rec = [&](int i, int left) {
        if (i == n) {
            f(d);
            return;
        }
        for (int x = 0; x <= left; ++x) {
            d[i] = x;
            rec(i + 1, left - x);
        }
        d[i] = 0;
    };
    rec(0, max_total);
}

std::vector<CheckRecord> genus0(const SuiteOptions& opt) {
    std::vector<CheckRecord> out;
    for (int n = 3; n <= 5; ++n)
        for_each_d(n, 3, [&](const std::vector<int>& d) {
            out.push_back(equality_check("A^0_" + join(d) + " = B^0_" + join(d), class_inputs(0, d), Source::oracle, opt,
                                         opt.pairing, [&] { return std::pair{a_class({0, d}), b_class({0, d})}; }));
        });
    return out;
}

std::vector<CheckRecord> genus1(const SuiteOptions& opt) {
    std::vector<CheckRecord> out;
    std::vector<std::vector<int>> ds{{1},    {1, 1},    {1, 1, 1}, {2},       {3},       {1, 0},    {0, 1},
                                     {2, 0}, {2, 1},    {1, 2},    {3, 0},    {1, 1, 0}, {2, 0, 0}, {0, 0, 1},
                                     {4},    {2, 2},    {3, 1},    {2, 1, 0}, {1, 0, 0}};
    for (const auto& d : ds)
        out.push_back(equality_check("A^1_" + join(d) + " = B^1_" + join(d), class_inputs(1, d), Source::oracle, opt,
                                     opt.pairing, [&] { return std::pair{a_class({1, d}), b_class({1, d})}; }));
    out.push_back(syntactic_check("A^1_(1) = lambda_1", class_inputs(1, {1}), Source::oracle, opt,
                                  [] { return std::pair{a_class({1, {1}}), lambda_top(1, 1)}; }));
    return out;
}

// --- lambda_2 ---

std::vector<CheckRecord> lambda2(const SuiteOptions& opt) {
    std::vector<CheckRecord> out;
    std::vector<TautClass> tests{single(kappa_monomial(2, 0, {1})), bare_class({{1}, {{0, 0}}, {}}),
                                 bare_class({{1, 1}, {{0, 1}}, {}})};
    std::vector<Rational> expect{Rational(7, 5760), 0, Rational(1, 576)};
    TautClass formula = single(kappa_monomial(2, 0, {0, 1}), Rational(1, 2)) -
                        single(decorated({{1, 1}, {{0, 1}}, {}}, {}, {{1, {1}}}), Rational(1, 2));
    auto half_push = [](const TautClass& x) { return pushforward_forget(x, 1).scaled(Rational(1, 2)); };
    std::vector<std::pair<std::string, std::function<TautClass()>>> cands{
        {"lambda_2", [] { return lambda_top(2, 0); }},
        {"lambda_2 strata form", [] { return lambda_class(2, 0); }},
        {"kappa_2/2 - (1/2)[kappa_1 on one side of the separating edge]", [&] { return formula; }},
        {"(1/2) pi_* B^2_3", [&] { return half_push(b_class({2, {3}})); }},
        {"(1/2) pi_* A^2_3", [&] { return half_push(a_class({2, {3}})); }}};
    for (const auto& [name, build] : cands)
        out.push_back(value_check(name + " against (kappa_1, delta_irr, delta_sep)", {{"g", 2}, {"n", 0}}, expect,
                                  Source::oracle, opt, [&](CheckRecord& r) {
                                      TautClass x = build();
                                      add_keys(r, x);
                                      return pair_all(x, tests);
                                  }));
    out.push_back(syntactic_check("(1/2) pi_* B^2_3 equals the two-term lambda_2 expression", {{"g", 2}, {"n", 0}},
                                  Source::published, opt,
                                  [&] { return std::pair{half_push(b_class({2, {3}})), formula}; }));
    out.push_back(equality_check("lambda_2 equals the two-term expression", {{"g", 2}, {"n", 0}}, Source::published, opt,
                                 opt.pairing, [&] { return std::pair{lambda_top(2, 0), formula}; }));
    return out;
}

// --- properties ---

StableGraph permuted(const StableGraph& g, const std::vector<int>& vp, const std::vector<int>& hp) {
    StableGraph r;
    r.genus.assign(g.num_vertices(), 0);
    r.vertex.assign(g.num_half_edges(), 0);
    r.partner.assign(g.num_half_edges(), -1);
    r.label.assign(g.num_half_edges(), -1);
    for (int v = 0; v < g.num_vertices(); ++v) r.genus[vp[v]] = g.genus[v];
    for (int h = 0; h < g.num_half_edges(); ++h) {
        r.vertex[hp[h]] = vp[g.vertex[h]];
        r.partner[hp[h]] = g.partner[h] < 0 ? -1 : hp[g.partner[h]];
        r.label[hp[h]] = g.label[h];
    }
    return r;
}

std::vector<StableGraph> fuzz_graphs(std::size_t count) {
    std::vector<StableGraph> all;
    std::vector<std::pair<int, std::vector<int>>> spaces{{2, {1, 2}}, {1, {1, 2, 3}}, {0, {1, 2, 3, 4, 5, 6}}, {2, {1}}};
    for (const auto& [g, ms] : spaces)
        for (int e = 1; e <= 3 * g - 3 + static_cast<int>(ms.size()); ++e)
            for (const StableGraph& gr : enumerate_graphs(g, ms, e)) all.push_back(gr);
    std::mt19937 rng(20240615);
    std::shuffle(all.begin(), all.end(), rng);
    if (all.size() > count) all.resize(count);
    return all;
}

CheckRecord canonical_fuzz(const SuiteOptions& opt) {
    return run_check("canonical labels are invariant under relabeling", {{"graphs", 50}, {"relabelings", 100}}, opt,
                     [](CheckRecord& r) {
                         std::vector<StableGraph> graphs = fuzz_graphs(50);
                         std::mt19937 rng(7);
                         long mismatches = 0, collisions = 0, trials = 0;
                         std::map<std::string, std::size_t> seen;
                         for (std::size_t i = 0; i < graphs.size(); ++i) {
                             const StableGraph& g = graphs[i];
                             std::string key = graph_key(g);
                             auto [it, fresh] = seen.emplace(key, i);
                             if (!fresh && !isomorphic(graphs[it->second], g)) ++collisions;
                             Stratum s = Stratum::bare(g);
                             std::uniform_int_distribution<int> coin(0, 3);
                             for (int h = 0; h < g.num_half_edges(); ++h) s.psi[h] = coin(rng) == 0 ? 1 : 0;
                             for (int v = 0; v < g.num_vertices(); ++v)
                                 if (coin(rng) == 0) s.kappa[v] = {1};
                             std::string skey = canonical_form(s).key;
                             std::vector<int> vp(g.num_vertices()), hp(g.num_half_edges());
                             for (int k = 0; k < 100; ++k) {
                                 std::iota(vp.begin(), vp.end(), 0);
                                 std::iota(hp.begin(), hp.end(), 0);
                                 std::shuffle(vp.begin(), vp.end(), rng);
                                 std::shuffle(hp.begin(), hp.end(), rng);
                                 StableGraph p = permuted(g, vp, hp);
                                 Stratum t = Stratum::bare(p);
                                 for (int h = 0; h < g.num_half_edges(); ++h) t.psi[hp[h]] = s.psi[h];
                                 for (int v = 0; v < g.num_vertices(); ++v) t.kappa[vp[v]] = s.kappa[v];
                                 ++trials;
                                 if (graph_key(p) != key || canonical_form(t).key != skey) ++mismatches;
                             }
                         }
                         r.expected = "0 mismatches, 0 collisions";
                         r.computed = std::to_string(mismatches) + " mismatches, " + std::to_string(collisions) +
                                      " collisions in " + std::to_string(trials) + " relabelings of " +
                                      std::to_string(graphs.size()) + " graphs";
                         r.source = Source::definition;
                         r.passed = mismatches == 0 && collisions == 0 && graphs.size() == 50;
                         r.verdict = r.passed ? "value match" : "value mismatch";
                     });
}

std::vector<CheckRecord> divisibility(const SuiteOptions& opt) {
    std::vector<CheckRecord> out;
    for (int g = 0; g <= 2; ++g)
        for (int n = 1; n <= 3; ++n)
            for (int m = 1; m <= 3; ++m) {
                if (2 * g - 2 + n <= 0) continue;
                Json in{{"g", g}, {"n", n}, {"m", m}};
                out.push_back(run_check("A-tilde divisible by the sum of multiplicities", in, opt, [&](CheckRecord& r) {
                    ATildeQuotient q = divide_a_tilde(g, m, n);
                    r.expected = "remainder 0";
                    r.source = Source::published;
                    r.passed = q.remainder_pairs_to_zero;
                    if (q.remainder.is_zero()) {
                        r.computed = "remainder 0";
                        r.verdict = "syntactic equality";
                    } else {
                        r.computed = std::to_string(q.remainder.size()) + " remainder terms pairing to zero";
                        r.verdict = r.passed ? "pairing equality" : "pairing inequality with witness";
                        r.assumptions.push_back("pairing-level equality");
                    }
                }));
            }
    return out;
}

std::vector<CheckRecord> phi_identity(const SuiteOptions& opt) {
    std::vector<CheckRecord> out;
    std::mt19937 rng(11);
    for (int g = 0; g <= 2; ++g)
        for (int n = 2; n <= 4; ++n)
            for (int m = 1; m <= 3; ++m) {
                if (2 * g - 2 + n <= 0) continue;
                Json in{{"g", g}, {"n", n}, {"m", m}};
                out.push_back(run_check("inserted-vertex coefficients cancel when a_0 = 0", in, opt, [&](CheckRecord& r) {
                    std::map<int, MultiPoly> values;
                    MultiPoly last(n - 1, 1);
                    for (int i = 1; i < n; ++i) {
                        values[i] = MultiPoly::variable(n - 1, i - 1, 1);
                        last -= values[i];
                    }
                    values[n] = last;
                    values[0] = MultiPoly(n - 1, 1);
                    std::vector<StableGraph> trees = enumerate_stable_trees(g, n, m);
                    std::shuffle(trees.begin(), trees.end(), rng);
                    if (trees.size() > 25) trees.resize(25);
                    long bad = 0;
                    for (const StableGraph& t : trees) {
                        PhiMaps phi = phi_maps(t);
                        MultiPoly total(n - 1, 1);
                        for (const auto& s : phi.legs) total += coeff_a(s, flow(s, values));
                        for (const auto& s : phi.edges) total += coeff_a(s, flow(s, values));
                        if (!total.is_zero()) ++bad;
                    }
                    r.expected = "0 nonvanishing sums";
                    r.computed = std::to_string(bad) + " nonvanishing sums over " + std::to_string(trees.size()) + " trees";
                    r.source = Source::published;
                    r.passed = bad == 0;
                    r.verdict = r.passed ? "value match" : "value mismatch";
                }));
            }
    return out;
}

std::vector<std::vector<int>> sorted_ds(int n, int lo, int hi) {
    std::vector<std::vector<int>> out;
    for_each_d(n, hi, [&](const std::vector<int>& d) {
        int s = std::accumulate(d.begin(), d.end(), 0);
        if (s >= lo && std::is_sorted(d.rbegin(), d.rend())) out.push_back(d);
    });
    return out;
}

std::vector<CheckRecord> string_dilaton(const SuiteOptions& opt) {
    std::vector<CheckRecord> out;
    auto report = [&](const std::string& id, Side side, int g, const std::vector<int>& d, auto check) {
        Json in = class_inputs(g, d);
        in["side"] = side == Side::A ? "A" : "B";
        out.push_back(run_check(id, in, opt, [&](CheckRecord& r) {
            r.expected = "equal classes";
            r.source = Source::published;
            fill_report(r, check(side, g, d, opt.pairing));
        }));
    };
    for (int g = 0; g <= 2; ++g)
        for (int n = 1; n <= 3; ++n) {
            if (2 * g - 2 + n <= 0) continue;
            for (const auto& d : sorted_ds(n, std::max(0, 2 * g - 1), 4))
                for (Side side : {Side::A, Side::B})
                    report("string equation", side, g, d,
                           [](Side s, int gg, const std::vector<int>& dd, const PairingOptions& p) {
                               return check_string(s, gg, dd, p);
                           });
            for (const auto& d : sorted_ds(n, std::max(0, 2 * g - 2), 4)) {
                if (n == 3 && g == 2 && std::accumulate(d.begin(), d.end(), 0) > 3) continue;
                for (Side side : {Side::A, Side::B})
                    report("dilaton equation", side, g, d,
                           [](Side s, int gg, const std::vector<int>& dd, const PairingOptions& p) {
                               return check_dilaton(s, gg, dd, p);
                           });
            }
        }
    return out;
}

std::vector<CheckRecord> vanishing_checks(const SuiteOptions& opt) {
    std::vector<CheckRecord> out;
    out.push_back(run_check("Getzler relation pairs to zero on M_{1,4}", {{"g", 1}, {"n", 4}}, opt, [](CheckRecord& r) {
        TautClass rel = getzler_relation();
        add_keys(r, rel);
        r.expected = "zero class";
        r.source = Source::published;
        fill_report(r, equal_by_pairing(rel, TautClass(rel.ambient)));
        if (!is_symmetric(rel)) {
            r.passed = false;
            r.verdict = "relation is not symmetric";
        }
    }));
    for (auto [g, n] : std::vector<std::pair<int, int>>{{1, 2}, {1, 3}, {2, 1}, {2, 2}})
        out.push_back(run_check("lambda_g^2 pairs to zero", {{"g", g}, {"n", n}}, opt, [&](CheckRecord& r) {
            TautClass l = lambda_class(g, n);
            TautClass sq = multiply(l, l);
            add_keys(r, sq);
            r.expected = "zero class";
            r.source = Source::oracle;
            fill_report(r, equal_by_pairing(sq, TautClass(sq.ambient)));
        }));
    return out;
}

std::vector<CheckRecord> product_laws(const SuiteOptions& opt) {
    std::vector<CheckRecord> out;
    std::mt19937 rng(3);
    for (auto [g, n] : std::vector<std::pair<int, int>>{{0, 6}, {1, 3}, {2, 1}, {1, 4}}) {
        out.push_back(run_check("products are commutative and associative", {{"g", g}, {"n", n}}, opt, [&](CheckRecord& r) {
            Ambient a = standard_ambient(g, n);
            std::vector<std::vector<Stratum>> by_degree;
            for (int k = 0; k <= 2; ++k) by_degree.push_back(decorated_strata(a, k));
            long trials = 0, comm = 0, assoc = 0, pairing_only = 0;
            for (int t = 0; t < 12; ++t) {
                std::vector<TautClass> xyz;
                int total = 0;
                for (int i = 0; i < 3; ++i) {
                    int k = std::uniform_int_distribution<int>(0, 1)(rng) + (i == 0 ? 1 : 0);
                    if (total + k > a.dimension()) k = 0;
                    total += k;
                    const auto& pool = by_degree[k];
                    xyz.push_back(single(pool[std::uniform_int_distribution<std::size_t>(0, pool.size() - 1)(rng)]));
                }
                ++trials;
                TautClass xy = multiply(xyz[0], xyz[1]);
                if (!xy.syntactically_equal(multiply(xyz[1], xyz[0]))) ++comm;
                TautClass left = multiply(xy, xyz[2]), right = multiply(xyz[0], multiply(xyz[1], xyz[2]));
                if (!left.syntactically_equal(right)) {
                    PairingReport rep = equal_by_pairing(left, right);
                    if (rep.equal) ++pairing_only;
                    else ++assoc;
                }
            }
            r.expected = "0 failures";
            r.computed = std::to_string(comm) + " commutativity and " + std::to_string(assoc) +
                         " associativity failures in " + std::to_string(trials) + " triples (" +
                         std::to_string(pairing_only) + " equal only by pairing)";
            r.source = Source::definition;
            r.passed = comm == 0 && assoc == 0;
            r.verdict = !r.passed ? "value mismatch" : pairing_only ? "pairing equality" : "syntactic equality";
        }));
    }
    return out;
}

std::vector<CheckRecord> properties(const SuiteOptions& opt) {
    std::vector<CheckRecord> out;
    out.push_back(canonical_fuzz(opt));
    for (auto part : {divisibility(opt), phi_identity(opt), string_dilaton(opt), vanishing_checks(opt), product_laws(opt)})
        out.insert(out.end(), part.begin(), part.end());
    return out;
}

}  // namespace

std::string to_string(Source s) {
    switch (s) {
        case Source::published: return "published";
        case Source::oracle: return "independent oracle";
        case Source::definition: return "by definition";
    }
    return "";
}

bool SuiteReport::passed() const { return failures() == 0 && !checks.empty(); }

std::size_t SuiteReport::failures() const {
    return static_cast<std::size_t>(std::count_if(checks.begin(), checks.end(), [](const CheckRecord& c) { return !c.passed; }));
}

StableGraph make_graph(const Shape& s) {
    StableGraph g;
    for (int x : s.genus) g.add_vertex(x);
    for (auto [a, b] : s.edges) g.add_edge(a, b);
    for (auto [v, m] : s.legs) g.add_leg(v, m);
    return g;
}

TautClass labeled_sum(const std::vector<int>& genus, const std::vector<std::pair<int, int>>& edges,
                      const std::vector<int>& legs_per_vertex) {
    int n = std::accumulate(legs_per_vertex.begin(), legs_per_vertex.end(), 0);
    int g = std::accumulate(genus.begin(), genus.end(), 0) + static_cast<int>(edges.size()) -
            static_cast<int>(genus.size()) + 1;
    TautClass out(standard_ambient(g, n));
    std::map<std::string, Stratum> seen;
    std::vector<int> where(n, 0);
    std::function<void(int)> rec = [&](int i) {
        if (i == n) {
            std::vector<int> cnt(genus.size(), 0);
            for (int w : where) ++cnt[w];
            if (cnt != legs_per_vertex) return;
            Shape s{genus, edges, {}};
            for (int m = 0; m < n; ++m) s.legs.emplace_back(where[m], m + 1);
            StableGraph gr = make_graph(s);
            if (!validate(gr).empty()) throw std::invalid_argument("labeled_sum: unstable shape");
            CanonicalStratum c = canonical_form(Stratum::bare(gr));
            seen.emplace(c.key, c.stratum);
            return;
        }
        for (std::size_t v = 0; v < genus.size(); ++v) {
            where[i] = static_cast<int>(v);
            rec(i + 1);
        }
    };
    rec(0);
    for (const auto& [k, st] : seen) out += single(st);
    return out;
}

TautClass getzler_relation() {
    std::vector<std::pair<int, int>> chain{{0, 1}, {1, 2}};
    TautClass r = labeled_sum({0, 1, 0}, chain, {2, 0, 2});
    r += labeled_sum({1, 0, 0}, chain, {1, 1, 2}).scaled(Rational(-1, 3));
    r += labeled_sum({1, 0, 0}, chain, {0, 2, 2}).scaled(Rational(-1, 6));
    r += labeled_sum({1, 0, 0}, chain, {0, 1, 3}).scaled(Rational(1, 2));
    r += labeled_sum({0, 0}, {{0, 1}, {0, 0}}, {1, 3}).scaled(Rational(1, 24));
    r += labeled_sum({0, 0}, {{0, 1}, {0, 0}}, {0, 4}).scaled(Rational(1, 24));
    r += labeled_sum({0, 0}, {{0, 1}, {0, 1}}, {2, 2}).scaled(Rational(-1, 12));
    return r;
}

std::vector<std::pair<std::string, TautClass>> three_point_test_classes() {
    Stratum psi_kappa = psi_monomial(2, {1, 0, 0});
    psi_kappa.kappa[0] = {0, 1};
    Shape delta{{1, 1}, {{0, 1}}, {{1, 1}, {1, 2}, {1, 3}}};
    return {{"psi_1^3", psi_class(2, {3, 0, 0})},
            {"psi_1^2 psi_2", psi_class(2, {2, 1, 0})},
            {"psi_1 psi_2 psi_3", psi_class(2, {1, 1, 1})},
            {"kappa_3", single(kappa_monomial(2, 3, {0, 0, 1}))},
            {"kappa_1 kappa_2", single(kappa_monomial(2, 3, {1, 1}))},
            {"psi_1 kappa_2", single(psi_kappa)},
            {"psi_1^2 delta", single(decorated(delta, {{2, 2}}))}};
}

std::vector<TautClass> beta_classes() {
    using E = std::vector<std::pair<int, int>>;
    E two_loops{{0, 1}, {0, 0}, {0, 0}}, loop_each{{0, 1}, {0, 0}, {1, 1}}, double_loop{{0, 1}, {0, 1}, {0, 0}},
        triple{{0, 1}, {0, 1}, {0, 1}}, double_loop_b{{0, 1}, {0, 1}, {1, 1}};
    return {labeled_sum({0, 0}, two_loops, {0, 3}),   labeled_sum({0, 0}, loop_each, {0, 3}),
            labeled_sum({0, 0}, double_loop, {0, 3}), labeled_sum({0, 0}, triple, {0, 3}),
            labeled_sum({0, 0}, two_loops, {1, 2}),   labeled_sum({0, 0}, double_loop, {1, 2}),
            labeled_sum({0, 0}, loop_each, {1, 2}),   labeled_sum({0, 0}, triple, {1, 2}),
            labeled_sum({0, 0}, double_loop_b, {1, 2})};
}

int matrix_rank(std::vector<std::vector<Rational>> m) {
    int rank = 0;
    std::size_t cols = m.empty() ? 0 : m[0].size();
    for (std::size_t c = 0; c < cols && rank < static_cast<int>(m.size()); ++c) {
        std::size_t p = rank;
        while (p < m.size() && m[p][c] == 0) ++p;
        if (p == m.size()) continue;
        std::swap(m[p], m[rank]);
        for (std::size_t i = 0; i < m.size(); ++i) {
            if (static_cast<int>(i) == rank || m[i][c] == 0) continue;
            Rational f = m[i][c] / m[rank][c];
            for (std::size_t j = c; j < cols; ++j) m[i][j] -= f * m[rank][j];
        }
        ++rank;
    }
    return rank;
}

std::vector<CheckRecord> run_group(CheckGroup group, const SuiteOptions& opt) {
    switch (group) {
        case CheckGroup::wk_spot: return wk_spot(opt);
        case CheckGroup::genus2_one_point: return genus2_one_point(opt);
        case CheckGroup::genus2_two_point: return genus2_two_point(opt);
        case CheckGroup::genus2_three_point: return genus2_three_point(opt);
        case CheckGroup::intersection_matrix: return intersection_matrix(opt);
        case CheckGroup::genus2_remaining: return genus2_remaining(opt);
        case CheckGroup::genus0: return genus0(opt);
        case CheckGroup::genus1: return genus1(opt);
        case CheckGroup::lambda2: return lambda2(opt);
        case CheckGroup::properties: return properties(opt);
    }
    return {};
}

std::vector<std::string> suite_names() {
    return {"genus0", "genus1", "genus2-restricted", "lambda2", "matrix", "properties"};
}

std::vector<CheckGroup> suite_groups(const std::string& name) {
    if (name == "genus0") return {CheckGroup::genus0};
    if (name == "genus1") return {CheckGroup::genus1};
    if (name == "genus2-restricted")
        return {CheckGroup::wk_spot, CheckGroup::genus2_one_point, CheckGroup::genus2_two_point,
                CheckGroup::genus2_three_point, CheckGroup::genus2_remaining};
    if (name == "lambda2") return {CheckGroup::lambda2};
    if (name == "matrix") return {CheckGroup::intersection_matrix};
    if (name == "properties") return {CheckGroup::properties};
    throw std::invalid_argument("unknown suite: " + name);
}

SuiteReport run_suite(const std::string& name, const SuiteOptions& opt) {
    std::vector<CheckGroup> groups = suite_groups(name);
    if (opt.jobs > 0) omp_set_num_threads(opt.jobs);
    SuiteReport rep;
    rep.suite = name;
    auto t0 = Clock::now();
    for (CheckGroup g : groups) {
        auto part = run_group(g, opt);
        rep.checks.insert(rep.checks.end(), part.begin(), part.end());
    }
    rep.seconds = std::chrono::duration<double>(Clock::now() - t0).count();
    return rep;
}

Json record_to_json(const CheckRecord& r) {
    Json j;
    j["id"] = r.id;
    j["inputs"] = r.inputs;
    j["expected"] = r.expected;
    j["source"] = to_string(r.source);
    j["computed"] = r.computed;
    j["verdict"] = r.verdict;
    j["passed"] = r.passed;
    j["seconds"] = r.seconds;
    j["assumptions"] = r.assumptions;
    j["class_keys"] = r.class_keys;
    j["witness"] = r.witness;
    return j;
}

Json suite_to_json(const SuiteReport& r) {
    Json j;
    j["suite"] = r.suite;
    j["passed"] = r.passed();
    j["failures"] = r.failures();
    j["seconds"] = r.seconds;
    Json checks = Json::array();
    for (const auto& c : r.checks) checks.push_back(record_to_json(c));
    j["checks"] = std::move(checks);
    return j;
}

std::string suite_to_text(const SuiteReport& r) {
    std::ostringstream os;
    for (const auto& c : r.checks) {
        os << (c.passed ? "PASS " : "FAIL ") << c.id << " " << c.inputs.dump() << "\n"
           << "     expected " << c.expected << " [" << to_string(c.source) << "]\n"
           << "     computed " << c.computed << "\n"
           << "     verdict  " << c.verdict << "\n";
        if (!c.witness.empty()) os << "     witness  " << c.witness.dump() << "\n";
    }
    os << "suite " << r.suite << ": " << (r.checks.size() - r.failures()) << "/" << r.checks.size() << " checks passed";
    os.precision(3);
    os << std::fixed << " in " << r.seconds << " s\n";
    return os.str();
}

}  // namespace taut
