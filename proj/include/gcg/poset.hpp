#pragma once

#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "gcg/common.hpp"
#include "gcg/graph.hpp"

namespace gcg {

// Unchecked poset data as read from JSON.
struct PosetData {
    std::vector<std::string> small;
    std::vector<std::string> big;
    std::vector<std::pair<std::string, std::string>> edges;  // (small, big)
};

ValidationReport validate_poset_data(const PosetData& d);

// A 1-dimensional poset. Vertices are indexed small-first, in listing order;
// that order is the canonical id order used throughout.
class OneDimPoset {
public:
    OneDimPoset() = default;
    // Throws InputError when validate_poset_data reports a problem.
    explicit OneDimPoset(PosetData d);

    int size() const { return static_cast<int>(ids_.size()); }
    int small_count() const { return n_small_; }
    int big_count() const { return size() - n_small_; }
    bool is_small(int x) const { return x < n_small_; }
    bool is_big(int x) const { return x >= n_small_; }
    const std::string& id(int x) const { return ids_[x]; }
    int index(const std::string& id) const;  // -1 if unknown
    int valence(int x) const { return static_cast<int>(nbrs_[x].size()); }
    // Sorted neighbours: bigs above a small, smalls below a big.
    const std::vector<int>& nbrs(int x) const { return nbrs_[x]; }
    bool leq(int v, int w) const;
    const std::vector<std::pair<int, int>>& edges() const { return edges_; }
    const PosetData& data() const { return data_; }

private:
    PosetData data_;
    int n_small_ = 0;
    std::vector<std::string> ids_;
    std::map<std::string, int> index_;
    std::vector<std::vector<int>> nbrs_;
    std::vector<std::pair<int, int>> edges_;
};

// Geometric realisation. Vertex i of the graph is poset vertex i.
struct RealisationGraph {
    Graph graph;
    std::vector<char> small;
    std::vector<std::string> ids;
};

RealisationGraph realise(const OneDimPoset& q);

// Edge count of a shortest cycle of |Q|; nullopt for forests.
std::optional<long long> girth(const RealisationGraph& g);
std::optional<long long> poset_girth(const OneDimPoset& q);

// Largest k with q k-huge (girth >= 2k); a large sentinel for forests.
int hugeness(const OneDimPoset& q);
constexpr int kHugeForest = 1 << 20;

Certificate check_huge(const OneDimPoset& q, int k);
ValidationReport check_convention(const OneDimPoset& q);

// Star of a small vertex in |Q|; vertex 0 of the result is v.
RealisationGraph up_set(const OneDimPoset& q, const std::string& v);

// Repeatedly removes valence-one vertices.
OneDimPoset simplify(const OneDimPoset& q);

// Poset of simplices of a graph: vertices small, edges big.
OneDimPoset simplices_of_graph(const std::vector<std::string>& vertices,
                               const std::vector<std::pair<std::string, std::string>>& edges);

std::string to_dot(const OneDimPoset& q);

json poset_to_json(const OneDimPoset& q);
PosetData poset_data_from_json(const json& j);
OneDimPoset poset_from_json(const json& j);

}  // namespace gcg
