#ifndef TAUT_ENUMERATE_HPP
#define TAUT_ENUMERATE_HPP

#include <memory>
#include <vector>

#include "taut/graph.hpp"

namespace taut {

// Graphs obtained from g by splitting one vertex along a new edge (loops included unless trees_only).
std::vector<StableGraph> one_edge_degenerations(const StableGraph& g, bool trees_only);

// All isomorphism classes of stable graphs of genus g with the given markings and exactly
// `edges` edges, in canonical form.
std::vector<StableGraph> enumerate_graphs(int g, const std::vector<int>& markings, int edges, bool trees_only = false);

// ST^m_{g,n}: stable trees with m vertices, legs 1..n, or 0..n when with_zero is set.
std::vector<StableGraph> enumerate_stable_trees(int g, int n, int m, bool with_zero = false);

struct LabeledDegeneration {
    StableGraph graph;  // markings 0..n-1
    long automorphisms;
};

// Cached enumeration of graphs of type (g, n) with k edges, markings 0..n-1.
std::shared_ptr<const std::vector<LabeledDegeneration>> cached_degenerations(int g, int n, int k, bool trees_only);

void clear_enumeration_cache();

}  // namespace taut

#endif
