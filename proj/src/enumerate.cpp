#include "taut/enumerate.hpp"

#include <map>
#include <mutex>
#include <numeric>
#include <shared_mutex>
#include <stdexcept>
#include <tuple>

namespace taut {

std::vector<StableGraph> one_edge_degenerations(const StableGraph& g, bool trees_only) {
    std::vector<StableGraph> out;
    auto hev = g.half_edges_by_vertex();
    for (int v = 0; v < g.num_vertices(); ++v) {
        int gv = g.genus[v];
        if (!trees_only && gv >= 1) {
            StableGraph d = g;
            d.genus[v] = gv - 1;
            d.add_edge(v, v);
            out.push_back(std::move(d));
        }
        const auto& hs = hev[v];
        int k = static_cast<int>(hs.size());
        for (long mask = 0; mask < (1L << k); ++mask) {
            int c1 = __builtin_popcountl(mask);
            for (int g1 = 0; g1 <= gv; ++g1) {
                int g0 = gv - g1;
                if (2 * g1 - 2 + c1 + 1 <= 0 || 2 * g0 - 2 + (k - c1) + 1 <= 0) continue;
                StableGraph d = g;
                d.genus[v] = g0;
                int w = d.add_vertex(g1);
                for (int i = 0; i < k; ++i)
                    if ((mask >> i) & 1) d.vertex[hs[i]] = w;
                d.add_edge(v, w);
                out.push_back(std::move(d));
            }
        }
    }
    return out;
}

std::vector<StableGraph> enumerate_graphs(int g, const std::vector<int>& markings, int edges, bool trees_only) {
    if (2 * g - 2 + static_cast<int>(markings.size()) <= 0) throw std::invalid_argument("unstable (g,n)");
    std::map<std::vector<int>, StableGraph> level;
    Canonical c0 = canonicalize(trivial_graph(g, markings));
    level.emplace(c0.code, c0.graph);
    for (int e = 0; e < edges; ++e) {
        std::map<std::vector<int>, StableGraph> next;
        for (const auto& [code, gr] : level)
            for (auto& d : one_edge_degenerations(gr, trees_only)) {
                Canonical c = canonicalize(d);
                next.emplace(std::move(c.code), std::move(c.graph));
            }
        level = std::move(next);
    }
    std::vector<StableGraph> out;
    for (auto& [code, gr] : level) out.push_back(std::move(gr));
    return out;
}

std::vector<StableGraph> enumerate_stable_trees(int g, int n, int m, bool with_zero) {
    std::vector<int> markings;
    for (int i = with_zero ? 0 : 1; i <= n; ++i) markings.push_back(i);
    if (m < 1) return {};
    return enumerate_graphs(g, markings, m - 1, true);
}

namespace {
std::shared_mutex cache_mutex;
std::map<std::tuple<int, int, int, bool>, std::shared_ptr<const std::vector<LabeledDegeneration>>> cache;
}  // namespace

std::shared_ptr<const std::vector<LabeledDegeneration>> cached_degenerations(int g, int n, int k, bool trees_only) {
    auto key = std::make_tuple(g, n, k, trees_only);
    {
        std::shared_lock lk(cache_mutex);
        auto it = cache.find(key);
        if (it != cache.end()) return it->second;
    }
    std::vector<int> markings(n);
    std::iota(markings.begin(), markings.end(), 0);
    auto v = std::make_shared<std::vector<LabeledDegeneration>>();
    if (2 * g - 2 + n > 0)
        for (auto& gr : enumerate_graphs(g, markings, k, trees_only)) {
            long aut = canonicalize(gr).automorphisms;
            v->push_back({std::move(gr), aut});
        }
    std::unique_lock lk(cache_mutex);
    auto [it, inserted] = cache.emplace(key, v);
    return it->second;
}

void clear_enumeration_cache() {
    std::unique_lock lk(cache_mutex);
    cache.clear();
}

}  // namespace taut
