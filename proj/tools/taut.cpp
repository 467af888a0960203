#include <omp.h>

#include <fstream>
#include <iostream>
#include <regex>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "taut/abclasses.hpp"
#include "taut/drcycle.hpp"
#include "taut/serialize.hpp"
#include "taut/suites.hpp"

using namespace taut;

namespace {

enum Exit { ok = 0, failed = 1, error = 2 };

std::vector<std::string> split_commas(const std::string& s) {
    std::vector<std::string> out;
    std::stringstream ss(s);
    std::string item;
    while (std::getline(ss, item, ',')) out.push_back(item);
    return out;
}

std::vector<int> parse_d(const std::string& s) {
    std::vector<int> d;
    for (const auto& x : split_commas(s)) d.push_back(std::stoi(x));
    return d;
}

int variable_count(const std::string& s) {
    int k = 0;
    std::regex var("a([0-9]+)");
    for (auto it = std::sregex_iterator(s.begin(), s.end(), var); it != std::sregex_iterator(); ++it)
        k = std::max(k, std::stoi((*it)[1].str()));
    return k;
}

void emit(const std::string& text, const std::string& path) {
    if (path.empty()) {
        std::cout << text;
        if (!text.empty() && text.back() != '\n') std::cout << "\n";
        return;
    }
    std::ofstream f(path);
    if (!f) throw std::runtime_error("cannot write " + path);
    f << text << "\n";
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Tautological classes, double ramification cycles and the A/B class comparison"};
    app.require_subcommand(1);

    bool json = false;
    int jobs = 0;
    std::string output;
    auto common = [&](CLI::App* c) {
        c->add_flag("--json", json, "JSON output instead of text");
        c->add_option("--jobs", jobs, "OpenMP threads (0 keeps the default)")->check(CLI::NonNegativeNumber);
        c->add_option("--output", output, "write the result to a file");
    };

    int g = 0;
    std::string d_text, mults_text;
    int vars = 0;

    auto* dr = app.add_subcommand("dr", "compact-type DR cycle with linear-form multiplicities");
    dr->add_option("--g", g, "genus")->required()->check(CLI::NonNegativeNumber);
    dr->add_option("--mults", mults_text, "comma list of linear forms in a1, a2, ... summing to zero")->required();
    dr->add_option("--vars", vars, "number of variables (default: largest index used)");
    common(dr);

    auto* a = app.add_subcommand("a-class", "A-class for genus g and degrees d");
    auto* b = app.add_subcommand("b-class", "B-class for genus g and degrees d");
    auto* cmp = app.add_subcommand("compare", "compare A- and B-classes by pairing");
    for (auto* c : {a, b, cmp}) {
        c->add_option("--g", g, "genus")->required()->check(CLI::NonNegativeNumber);
        c->add_option("--d", d_text, "comma list of degrees")->required();
        common(c);
    }

    std::string suite;
    double timeout = 0;
    std::size_t limit = 0;
    bool orbits = false, no_timing = false;
    auto* rs = app.add_subcommand("run_suite", "run a verification suite");
    rs->add_option("--suite", suite, "suite name")->required()->check(CLI::IsMember(suite_names()));
    rs->add_option("--timeout-per-check", timeout, "mark checks slower than this many seconds as failed");
    rs->add_option("--limit", limit, "truncate the pairing spanning set of heavy comparisons");
    rs->add_flag("--orbits", orbits, "pair symmetric classes against orbit representatives only");
    rs->add_flag("--no-timing", no_timing, "omit wall times for byte-stable reports");
    common(rs);
    for (auto* c : {a, b, cmp}) {
        c->add_option("--limit", limit, "truncate the pairing spanning set");
        c->add_flag("--orbits", orbits, "pair symmetric classes against orbit representatives only");
    }

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        return app.exit(e) == 0 ? ok : error;
    }

    try {
        if (jobs > 0) omp_set_num_threads(jobs);
        ExportFormat fmt = json ? ExportFormat::json : ExportFormat::text;
        PairingOptions popt;
        popt.limit = limit;
        popt.spanning = orbits ? SpanningSet::orbits : SpanningSet::all;

        if (*dr) {
            int k = vars ? vars : variable_count(mults_text);
            std::vector<MultiPoly> mults;
            for (const auto& s : split_commas(mults_text)) mults.push_back(parse_linear_form(s, k, 1));
            emit(export_class(hain_dr(g, mults), fmt), output);
            return ok;
        }
        if (*a || *b) {
            std::vector<int> d = parse_d(d_text);
            TautClass x = *a ? a_class({g, d}) : b_class({g, d});
            emit(export_class(x, fmt), output);
            return ok;
        }
        if (*cmp) {
            std::vector<int> d = parse_d(d_text);
            TautClass xa = a_class({g, d}), xb = b_class({g, d});
            PairingReport rep = equal_by_pairing(xa, xb, popt);
            if (json) {
                Json j;
                j["g"] = g;
                j["d"] = d;
                j["a_class"] = class_to_json(xa);
                j["b_class"] = class_to_json(xb);
                j["report"] = report_to_json(rep);
                emit(j.dump(2), output);
            } else {
                emit("A-class:\n" + class_to_text(xa) + "B-class:\n" + class_to_text(xb) + report_to_text(rep), output);
            }
            return rep.equal ? ok : failed;
        }
        if (*rs) {
            SuiteOptions sopt;
            sopt.jobs = jobs;
            sopt.timeout_per_check = timeout;
            sopt.pairing = popt;
            SuiteReport rep = run_suite(suite, sopt);
            if (no_timing) {
                rep.seconds = 0;
                for (auto& c : rep.checks) c.seconds = 0;
            }
            emit(json ? suite_to_json(rep).dump(2) : suite_to_text(rep), output);
            return rep.passed() ? ok : failed;
        }
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return error;
    }
    return error;
}
