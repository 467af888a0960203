#include <chrono>
#include <cstdio>
#include <string>
#include <vector>

#include "taut/suites.hpp"

using namespace taut;

namespace {

struct Criterion {
    int number;
    std::string title;
    std::vector<CheckGroup> groups;
};

}  // namespace

int main() {
    std::vector<Criterion> criteria{
        {1, "Witten-Kontsevich spot values", {CheckGroup::wk_spot}},
        {2, "genus 2, one point: A and B against (psi_1, delta_0, delta_1)", {CheckGroup::genus2_one_point}},
        {3, "genus 2, two points: A and B against the 14-class basis", {CheckGroup::genus2_two_point}},
        {4, "genus 2, three points: A - B against seven classes and the 7x9 matrix",
         {CheckGroup::genus2_three_point, CheckGroup::intersection_matrix}},
        {5, "genus 2, remaining restricted relations", {CheckGroup::genus2_remaining}},
        {6, "genus 0 and 1 A = B", {CheckGroup::genus0, CheckGroup::genus1}},
        {7, "lambda_2 expression", {CheckGroup::lambda2}},
        {8, "property suites", {CheckGroup::properties}},
    };
    bool all = true;
    for (const Criterion& c : criteria) {
        auto t0 = std::chrono::steady_clock::now();
        std::size_t total = 0, passed = 0;
        std::vector<std::string> failures;
        for (CheckGroup g : c.groups)
            for (const CheckRecord& r : run_group(g)) {
                ++total;
                if (r.passed) ++passed;
                else failures.push_back(r.id + " " + r.inputs.dump() + ": " + r.verdict);
            }
        double s = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
        bool ok = total > 0 && passed == total;
        all = all && ok;
        std::printf("criterion %d: %s  %s (%zu/%zu checks, %.2f s)\n", c.number, ok ? "PASS" : "FAIL", c.title.c_str(),
                    passed, total, s);
        for (const auto& f : failures) std::printf("    failed: %s\n", f.c_str());
        std::fflush(stdout);
    }
    return all ? 0 : 1;
}
