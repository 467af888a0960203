#include "taut/serialize.hpp"

#include <sstream>
#include <stdexcept>

namespace taut {

namespace {

Json stratum_to_json(const Stratum& s) {
    Json j;
    j["graph"] = graph_to_json(s.graph);
    j["kappa"] = s.kappa;
    j["psi"] = s.psi;
    std::vector<int> lam(s.lambda.begin(), s.lambda.end());
    j["lambda"] = lam;
    return j;
}

Stratum stratum_from_json(const Json& j) {
    Stratum s = Stratum::bare(graph_from_json(j.at("graph")));
    auto kappa = j.at("kappa").get<std::vector<std::vector<int>>>();
    auto psi = j.at("psi").get<std::vector<int>>();
    auto lam = j.at("lambda").get<std::vector<int>>();
    if (kappa.size() != s.kappa.size() || psi.size() != s.psi.size() || lam.size() != s.lambda.size())
        throw std::invalid_argument("decoration sizes do not match the graph");
    s.kappa = kappa;
    s.psi = psi;
    for (std::size_t v = 0; v < lam.size(); ++v) s.lambda[v] = static_cast<uint8_t>(lam[v] != 0);
    return s;
}

Json ambient_to_json(const Ambient& a) {
    Json j = Json::array({a.g, a.n()});
    return j;
}

template <class C, class F>
Json combination_to_json(const Combination<C>& x, F coeff_json) {
    Json j;
    j["ambient"] = ambient_to_json(x.ambient);
    if (x.ambient.markings != standard_ambient(x.ambient.g, x.ambient.n()).markings) j["markings"] = x.ambient.markings;
    j["ct"] = x.ct;
    Json terms = Json::array();
    for (const auto& [k, e] : x.terms) {
        Json t = stratum_to_json(e.stratum);
        t["key"] = k;
        t["coeff"] = coeff_json(e.coeff);
        terms.push_back(std::move(t));
    }
    j["terms"] = std::move(terms);
    return j;
}

template <class C, class F>
Combination<C> combination_from_json(const Json& j, F coeff_parse) {
    auto amb = j.at("ambient").get<std::vector<int>>();
    if (amb.size() != 2) throw std::invalid_argument("ambient must be [g, n]");
    Ambient a = standard_ambient(amb[0], amb[1]);
    if (j.contains("markings")) a.markings = j.at("markings").get<std::vector<int>>();
    Combination<C> x(a, j.value("ct", false));
    for (const Json& t : j.at("terms")) x.add(stratum_from_json(t), coeff_parse(t.at("coeff")));
    return x;
}

template <class C, class F>
std::string combination_to_text(const Combination<C>& x, F coeff_text) {
    std::ostringstream os;
    os << "ambient g=" << x.ambient.g << " n=" << x.ambient.n() << (x.ct ? " ct" : "") << "\n";
    for (const auto& [k, e] : x.terms) os << coeff_text(e.coeff) << "\t" << describe(e.stratum) << "\n";
    return os.str();
}

}  // namespace

Json graph_to_json(const StableGraph& g) {
    Json j;
    j["vertices"] = g.genus;
    j["half_edges"] = g.vertex;
    Json edges = Json::array();
    for (auto [h, p] : g.edges()) edges.push_back(Json::array({h, p}));
    j["edges"] = std::move(edges);
    Json legs = Json::object();
    std::vector<int> ms = g.markings();
    for (int m : ms) legs[std::to_string(m)] = g.leg(m);
    j["legs"] = std::move(legs);
    return j;
}

StableGraph graph_from_json(const Json& j) {
    StableGraph g;
    for (int x : j.at("vertices").get<std::vector<int>>()) g.add_vertex(x);
    for (int v : j.at("half_edges").get<std::vector<int>>()) {
        if (v < 0 || v >= g.num_vertices()) throw std::invalid_argument("half-edge attached to unknown vertex");
        g.add_half_edge(v);
    }
    int nh = g.num_half_edges();
    auto in_range = [&](int h) {
        if (h < 0 || h >= nh) throw std::invalid_argument("half-edge id out of range");
        return h;
    };
    for (const Json& e : j.at("edges")) {
        int h = in_range(e.at(0).get<int>()), p = in_range(e.at(1).get<int>());
        if (g.partner[h] >= 0 || g.partner[p] >= 0 || g.label[h] >= 0 || h == p) throw std::invalid_argument("half-edge used twice");
        g.partner[h] = p;
        g.partner[p] = h;
    }
    for (const auto& [m, h] : j.at("legs").items()) {
        int x = in_range(h.get<int>());
        if (g.partner[x] >= 0 || g.label[x] >= 0) throw std::invalid_argument("half-edge used twice");
        g.label[x] = std::stoi(m);
    }
    for (int h = 0; h < nh; ++h)
        if (g.partner[h] < 0 && g.label[h] < 0) throw std::invalid_argument("dangling half-edge");
    auto bad = validate(g);
    if (!bad.empty()) throw std::invalid_argument("invalid graph: " + bad.front().condition);
    return g;
}

Json poly_to_json(const MultiPoly& p) {
    Json j;
    j["variables"] = Json::array({p.nvars(), p.offset()});
    Json terms = Json::array();
    for (const auto& [e, c] : p.terms()) {
        std::vector<int> ex(e.begin(), e.end());
        terms.push_back(Json::array({ex, to_string(c)}));
    }
    j["monomials"] = std::move(terms);
    return j;
}

MultiPoly poly_from_json(const Json& j) {
    auto vars = j.at("variables").get<std::vector<int>>();
    if (vars.size() != 2) throw std::invalid_argument("variables must be [count, offset]");
    MultiPoly p(vars[0], vars[1]);
    for (const Json& t : j.at("monomials")) {
        auto ex = t.at(0).get<std::vector<int>>();
        Exponents e;
        for (int x : ex) {
            if (x < 0 || x > 255) throw std::invalid_argument("exponent out of range");
            e.push_back(static_cast<uint8_t>(x));
        }
        p.add_term(e, parse_rational(t.at(1).get<std::string>()));
    }
    return p;
}

Json class_to_json(const TautClass& x) {
    return combination_to_json(x, [](const Rational& r) { return Json(to_string(r)); });
}

Json class_to_json(const PolyTautClass& x) {
    return combination_to_json(x, [](const MultiPoly& p) { return poly_to_json(p); });
}

TautClass class_from_json(const Json& j) {
    return combination_from_json<Rational>(j, [](const Json& c) { return parse_rational(c.get<std::string>()); });
}

PolyTautClass poly_class_from_json(const Json& j) {
    return combination_from_json<MultiPoly>(j, [](const Json& c) { return poly_from_json(c); });
}

std::string class_to_text(const TautClass& x) {
    return combination_to_text(x, [](const Rational& r) { return to_string(r); });
}

std::string class_to_text(const PolyTautClass& x) {
    return combination_to_text(x, [](const MultiPoly& p) { return "(" + p.to_string() + ")"; });
}

std::string export_class(const TautClass& x, ExportFormat f) {
    return f == ExportFormat::json ? class_to_json(x).dump(2) : class_to_text(x);
}

std::string export_class(const PolyTautClass& x, ExportFormat f) {
    return f == ExportFormat::json ? class_to_json(x).dump(2) : class_to_text(x);
}

Json report_to_json(const PairingReport& r) {
    Json j;
    j["verdict"] = r.verdict();
    j["equal"] = r.equal;
    j["syntactic"] = r.syntactic;
    j["assumptions"] = r.assumptions;
    Json entries = Json::array();
    for (const auto& e : r.entries) {
        Json x;
        x["key"] = e.key;
        x["class"] = e.description;
        x["x"] = to_string(e.x);
        x["y"] = to_string(e.y);
        x["difference"] = to_string(e.x - e.y);
        entries.push_back(std::move(x));
    }
    j["entries"] = std::move(entries);
    return j;
}

std::string report_to_text(const PairingReport& r) {
    std::ostringstream os;
    os << "verdict: " << r.verdict() << "\n";
    for (const auto& a : r.assumptions) os << "assumption: " << a << "\n";
    for (const auto& e : r.entries) {
        if (e.x == e.y) continue;
        os << "witness: " << e.description << "  x=" << to_string(e.x) << "  y=" << to_string(e.y) << "\n";
    }
    return os.str();
}

}  // namespace taut
