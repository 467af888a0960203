#ifndef TAUT_SUITES_HPP
#define TAUT_SUITES_HPP

#include <string>
#include <utility>
#include <vector>

#include "taut/pairing.hpp"
#include "taut/serialize.hpp"

namespace taut {

// Where an expected value comes from.
enum class Source { published, oracle, definition };
std::string to_string(Source s);

struct CheckRecord {
    std::string id;
    Json inputs = Json::object();
    std::string expected;
    Source source = Source::oracle;
    std::string computed;
    std::string verdict;
    bool passed = false;
    double seconds = 0;
    std::vector<std::string> assumptions;
    std::vector<std::string> class_keys;
    Json witness = Json::array();
};

struct SuiteReport {
    std::string suite;
    std::vector<CheckRecord> checks;
    double seconds = 0;
    bool passed() const;
    std::size_t failures() const;
};

struct SuiteOptions {
    int jobs = 0;                    // 0 keeps the OpenMP default
    double timeout_per_check = 0;    // seconds, 0 = none; checked after each check finishes
    PairingOptions pairing;          // spanning set used by the heavy genus-two comparisons
};

enum class CheckGroup {
    wk_spot,
    genus2_one_point,
    genus2_two_point,
    genus2_three_point,
    intersection_matrix,
    genus2_remaining,
    genus0,
    genus1,
    lambda2,
    properties
};

std::vector<CheckRecord> run_group(CheckGroup group, const SuiteOptions& opt = {});

std::vector<std::string> suite_names();
std::vector<CheckGroup> suite_groups(const std::string& name);
SuiteReport run_suite(const std::string& name, const SuiteOptions& opt = {});

Json record_to_json(const CheckRecord& r);
Json suite_to_json(const SuiteReport& r);
std::string suite_to_text(const SuiteReport& r);

// Graph with genera, edges (a == b gives a loop) and legs given as (vertex, marking).
struct Shape {
    std::vector<int> genus;
    std::vector<std::pair<int, int>> edges;
    std::vector<std::pair<int, int>> legs;
};
StableGraph make_graph(const Shape& s);

// Sum of xi_* over the distinct ways to distribute markings 1..n with legs_per_vertex[v] on v.
TautClass labeled_sum(const std::vector<int>& genus, const std::vector<std::pair<int, int>>& edges,
                      const std::vector<int>& legs_per_vertex);

// Getzler's relation in R^2 of M_{1,4}.
TautClass getzler_relation();

// The seven test classes on M_{2,3} and the nine classes spanning the symmetric b_1 = 2 part.
std::vector<std::pair<std::string, TautClass>> three_point_test_classes();
std::vector<TautClass> beta_classes();

// Rank over Q.
int matrix_rank(std::vector<std::vector<Rational>> m);

}  // namespace taut

#endif
