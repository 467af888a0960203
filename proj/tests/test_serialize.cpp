#include <set>

#include "support.hpp"
#include "taut/abclasses.hpp"
#include "taut/drcycle.hpp"
#include "taut/enumerate.hpp"
#include "taut/serialize.hpp"

using namespace taut;

TEST_CASE("graphs survive a JSON round trip") {
    for (int g = 0; g <= 2; ++g)
        for (int n = 0; n <= 2; ++n) {
            if (2 * g - 2 + n <= 0) continue;
            std::vector<int> ms;
            for (int i = 1; i <= n; ++i) ms.push_back(i);
            for (int e = 0; e <= 3 * g - 3 + n; ++e)
            for (const StableGraph& gr : enumerate_graphs(g, ms, e)) {
                StableGraph back = graph_from_json(Json::parse(graph_to_json(gr).dump()));
                CHECK(back.genus == gr.genus);
                CHECK(back.vertex == gr.vertex);
                CHECK(back.partner == gr.partner);
                CHECK(back.label == gr.label);
            }
        }
}

TEST_CASE("malformed graphs are rejected") {
    CHECK_THROWS(graph_from_json(Json::parse(R"({"vertices":[0],"half_edges":[0,0],"edges":[],"legs":{"1":0,"2":1}})")));
    CHECK_THROWS(graph_from_json(Json::parse(R"({"vertices":[0],"half_edges":[0,0,1],"edges":[],"legs":{}})")));
    CHECK_THROWS(graph_from_json(Json::parse(R"({"vertices":[1],"half_edges":[0,0],"edges":[[0,0]],"legs":{"1":1}})")));
    CHECK_THROWS(graph_from_json(Json::parse(R"({"vertices":[1],"half_edges":[0],"edges":[],"legs":{}})")));
}

TEST_CASE("classes survive a JSON round trip") {
    for (const auto& x : {b_class({2, {2, 1}}), a_class({1, {1, 1}}), b_class({2, {1, 1, 1}}), boundary_divisor(2, 2, 1, {1})}) {
        TautClass back = class_from_json(Json::parse(class_to_json(x).dump()));
        CHECK(back.syntactically_equal(x));
        CHECK(class_to_json(back) == class_to_json(x));
    }
    PolyTautClass dr = hain_dr(1, {MultiPoly::variable(2, 0, 1), MultiPoly::variable(2, 1, 1) * Rational(-3, 2),
                                   MultiPoly::variable(2, 0, 1) * Rational(-1) + MultiPoly::variable(2, 1, 1) * Rational(3, 2)});
    PolyTautClass back = poly_class_from_json(Json::parse(class_to_json(dr).dump()));
    CHECK(class_to_json(back) == class_to_json(dr));
    REQUIRE(back.terms.size() == dr.terms.size());
    for (const auto& [k, e] : dr.terms) CHECK(back.terms.at(k).coeff == e.coeff);
}

TEST_CASE("ct flag and markings are preserved") {
    PolyTautClass x = hain_dr(1, {1, 2, 4}, {MultiPoly::variable(1, 0, 1), MultiPoly::variable(1, 0, 1) * Rational(-1),
                                             MultiPoly(1, 1)});
    PolyTautClass r = poly_class_from_json(class_to_json(x));
    CHECK(r.ct == x.ct);
    CHECK(r.ambient == x.ambient);
    CHECK(class_to_json(r) == class_to_json(x));
}

TEST_CASE("exported zero class has no terms") {
    Json j = Json::parse(export_class(TautClass(standard_ambient(2, 1)), ExportFormat::json));
    CHECK(j.at("terms").empty());
    CHECK(j.at("ambient") == Json::array({2, 1}));
}

TEST_CASE("exported one-point genus-two B-class has coefficients 1 and -1") {
    Json j = Json::parse(export_class(b_class({2, {3}}), ExportFormat::json));
    REQUIRE(j.at("terms").size() == 2);
    std::multiset<std::string> coeffs;
    for (const Json& t : j.at("terms")) coeffs.insert(t.at("coeff").get<std::string>());
    CHECK(coeffs == std::multiset<std::string>{"1", "-1"});
    CHECK(export_class(b_class({2, {3}}), ExportFormat::text).find("-1") != std::string::npos);
}

TEST_CASE("pairing report lists differences") {
    TautClass a = b_class({2, {3}});
    PairingReport r = equal_by_pairing(a, a + a);
    Json j = report_to_json(r);
    CHECK(j.at("equal") == false);
    bool witness = false;
    for (const Json& e : j.at("entries"))
        if (e.at("difference") != "0") witness = true;
    CHECK(witness);
    CHECK(report_to_text(r).find("witness") != std::string::npos);
}
