#ifndef TAUT_GRAPH_HPP
#define TAUT_GRAPH_HPP

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

namespace taut {

// Dual graph of a stable curve. Half-edges are numbered 0..nh-1; each belongs to one
// vertex. Legs have partner -1 and a marking label; edge half-edges have label -1.
class StableGraph {
public:
    std::vector<int> genus;
    std::vector<int> vertex;
    std::vector<int> partner;
    std::vector<int> label;

    int add_vertex(int g);
    int add_half_edge(int v);
    int add_leg(int v, int marking);
    std::pair<int, int> add_edge(int v1, int v2);

    int num_vertices() const { return static_cast<int>(genus.size()); }
    int num_half_edges() const { return static_cast<int>(vertex.size()); }
    int num_edges() const;
    int num_legs() const;
    int b1() const { return num_edges() - num_vertices() + 1; }
    int total_genus() const;
    bool is_tree() const { return b1() == 0; }
    int valence(int v) const;
    std::vector<int> half_edges_at(int v) const;
    std::vector<std::vector<int>> half_edges_by_vertex() const;
    std::vector<std::pair<int, int>> edges() const;  // (h, partner) with h < partner
    std::vector<int> markings() const;                // sorted
    int leg(int marking) const;                       // half-edge carrying marking, or -1
    bool is_loop(int h) const { return partner[h] >= 0 && vertex[partner[h]] == vertex[h]; }
    int dimension() const;                            // 3g-3+n of the ambient space
    int vertex_dimension(int v) const { return 3 * genus[v] - 3 + valence(v); }
};

// Graph with everything collapsed to one vertex.
StableGraph trivial_graph(int g, const std::vector<int>& markings);

struct Violation {
    std::string condition;
    std::string detail;
};

std::vector<Violation> validate(const StableGraph& g);

// Result of canonical labeling. vertex_map[v] and half_map[h] give the new ids.
struct Canonical {
    StableGraph graph;
    std::vector<int> vertex_map;
    std::vector<int> half_map;
    std::vector<int> code;
    long automorphisms = 1;
};

// Canonical labeling respecting per-vertex tags and per-half-edge tags. Legs keep labels.
Canonical canonicalize(const StableGraph& g, const std::vector<std::vector<int>>& vertex_tags,
                       const std::vector<int>& half_tags);
Canonical canonicalize(const StableGraph& g);
std::string code_key(const std::vector<int>& code);
std::string graph_key(const StableGraph& g);

// Count of automorphisms fixing legs, by exhaustive search over vertex and half-edge bijections.
long brute_force_automorphisms(const StableGraph& g);

struct GraphIso {
    std::vector<int> vertex_map;  // a-vertex -> b-vertex
    std::vector<int> half_map;    // a-half-edge -> b-half-edge
};

// All isomorphisms a -> b preserving genera and leg labels.
std::vector<GraphIso> isomorphisms(const StableGraph& a, const StableGraph& b, bool first_only = false);
bool isomorphic(const StableGraph& a, const StableGraph& b);

// Contracts the given edges (each identified by either of its half-edges). vertex_image[v]
// gives the vertex of the result that v maps to; half_image[h] is the surviving half-edge id
// or -1 when h belonged to a contracted edge.
struct Contraction {
    StableGraph graph;
    std::vector<int> vertex_image;
    std::vector<int> half_image;
};
Contraction contract_edges(const StableGraph& g, const std::vector<int>& edge_half_edges);

// Renames markings; labels not present in the map stay unchanged.
StableGraph relabel_markings(const StableGraph& g, const std::vector<std::pair<int, int>>& renaming);

}  // namespace taut

#endif
