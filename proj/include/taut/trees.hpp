#ifndef TAUT_TREES_HPP
#define TAUT_TREES_HPP

#include <map>
#include <string>
#include <vector>

#include "taut/exactmath.hpp"
#include "taut/graph.hpp"

namespace taut {

struct RootedView {
    int root = 0;
    std::vector<int> parent_half;                // half-edge at v towards the root, -1 at root
    std::vector<std::vector<int>> children_half; // H^e_+ half-edges at v
    std::vector<int> level;                      // root has level 1
    std::vector<std::vector<int>> descendants;   // includes v
    std::vector<int> r;                          // 2g(v)-2+n(v)
};

RootedView root_tree(const StableGraph& tree, int root);

// Unique flow a: H -> linear forms. leg_values maps marking -> value.
std::vector<MultiPoly> flow(const StableGraph& tree, const std::map<int, MultiPoly>& leg_values);

// a(Gamma) for a tree rooted at the vertex carrying marking 0.
MultiPoly coeff_a(const StableGraph& tree, const std::vector<MultiPoly>& flow_values);

// Leg values a_1..a_n as variables 0..n-1 (offset 1), a_0 = -sum.
std::map<int, MultiPoly> standard_leg_values(int n);

// Phi_l for every leg and Phi_e for every edge of a tree with markings 1..n.
struct PhiMaps {
    std::vector<StableGraph> legs;
    std::vector<StableGraph> edges;
};
PhiMaps phi_maps(const StableGraph& tree);

// Rooted tree with level structure, markings 1..n, extra legs stored as counts.
struct CompleteTree {
    StableGraph tree;           // carries only the markings
    int root = 0;
    std::vector<int> level;     // 1-based
    std::vector<int> extra;     // |F[v]|
    std::vector<int> q;         // per half-edge; -1 outside H^em_+
    int depth = 1;

    int marking_count() const { return tree.num_legs(); }
    bool strongly_stable(int v) const;
    std::vector<int> em_half_edges(int v) const;  // H^em_+[v]
    std::string key() const;
};

std::vector<std::string> complete_tree_violations(const CompleteTree& t);
bool is_admissible(const CompleteTree& t);

// Omega^{B,g}_d.
std::vector<CompleteTree> enumerate_B_trees(int g, const std::vector<int>& d);

}  // namespace taut

#endif
