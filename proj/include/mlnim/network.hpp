#pragma once

#include <cstdint>
#include <filesystem>
#include <string>
#include <string_view>
#include <tuple>
#include <vector>

#include "mlnim/errors.hpp"

namespace mlnim {

/// Basic size counters of a multilayer network.
struct NetworkStats {
    int layer_count = 0;
    int actor_count = 0;
    std::int64_t node_count = 0;  // sum over actors of the number of layers they appear in
    std::int64_t edge_count = 0;  // sum over layers of the layer edge count
};

/// Single-layer projection: actors are connected if at least one layer connects them.
struct FlattenedGraph {
    int actor_count = 0;
    std::vector<std::vector<int>> adjacency;  // sorted actor indices
    std::int64_t edge_count = 0;

    int degree(int actor) const { return static_cast<int>(adjacency[actor].size()); }
};

/// Counters for input rows the loader normalised away.
struct LoadReport {
    long self_loops_dropped = 0;
    long duplicate_edges_dropped = 0;

    long warnings() const { return self_loops_dropped + duplicate_edges_dropped; }
};

/// An edge given by layer name and the two endpoint actor names.
using EdgeTriple = std::tuple<std::string, std::string, std::string>;

/// Immutable multilayer network: a set of actors, an ordered list of layers, and one
/// simple undirected graph per layer over the actors present in it. Actors and layers
/// are addressed by dense indices; names are kept sorted lexicographically, which makes
/// the index order the universal tie-break order used across the library.
class MultilayerNetwork {
 public:
    /// Builds a network from edge triples plus optional isolated (layer, actor) nodes.
    /// Self-loops and repeated edges are dropped; counts go to `report` when given.
    static MultilayerNetwork build(const std::vector<EdgeTriple>& edges,
                                   const std::vector<std::pair<std::string, std::string>>&
                                       isolated_nodes = {},
                                   LoadReport* report = nullptr);

    int actor_count() const { return static_cast<int>(actor_names_.size()); }
    int layer_count() const { return static_cast<int>(layer_names_.size()); }

    const std::string& actor_name(int actor) const { return actor_names_[actor]; }
    const std::string& layer_name(int layer) const { return layer_names_[layer]; }
    const std::vector<std::string>& actor_names() const { return actor_names_; }
    const std::vector<std::string>& layer_names() const { return layer_names_; }

    /// Index of a named actor; throws LookupError for unknown names.
    int actor_index(std::string_view name) const;
    /// Index of a named layer; throws LookupError for unknown names.
    int layer_index(std::string_view name) const;

    bool has_node(int actor, int layer) const { return present_[layer][actor] != 0; }
    /// Layers where the actor has a node (never empty).
    const std::vector<int>& actor_layers(int actor) const { return presence_[actor]; }

    /// Neighbour actor indices of the actor's node in one layer (sorted; empty when absent).
    const std::vector<int>& neighbours(int layer, int actor) const {
        return adjacency_[layer][actor];
    }
    /// Degree of the actor's node in one layer (0 when absent or isolated there).
    int degree(int layer, int actor) const {
        return static_cast<int>(adjacency_[layer][actor].size());
    }
    std::int64_t layer_edge_count(int layer) const { return layer_edges_[layer]; }
    /// Number of actors present in a layer.
    int layer_node_count(int layer) const { return layer_nodes_[layer]; }

    bool is_multiplex() const { return multiplex_; }
    NetworkStats stats() const;

    /// Sum of node degrees over all layers where the actor is present.
    std::int64_t degree_centrality(int actor) const;
    std::int64_t degree_centrality(std::string_view actor) const {
        return degree_centrality(actor_index(actor));
    }

    /// Actors within `hops` (1 or 2) of the given actor, excluding it, sorted.
    /// One hop unions the layer adjacencies; two hops walk the flattened graph.
    std::vector<int> neighbourhood(int actor, int hops) const;
    std::vector<std::string> neighbourhood(std::string_view actor, int hops) const;

    /// Flattens the network: an actor pair is connected iff some layer connects it.
    FlattenedGraph squeeze() const;

 private:
    std::vector<std::string> actor_names_;            // sorted
    std::vector<std::string> layer_names_;            // sorted
    std::vector<std::vector<int>> presence_;          // actor -> sorted layers
    std::vector<std::vector<char>> present_;          // layer -> actor -> 0/1
    std::vector<std::vector<std::vector<int>>> adjacency_;  // layer -> actor -> sorted actors
    std::vector<std::int64_t> layer_edges_;
    std::vector<int> layer_nodes_;
    bool multiplex_ = false;
};

/// Reads a layer-edge-list file. Data lines are `<layer> <actor> <actor>` with extra
/// trailing tokens ignored; `#node <layer> <actor>` declares an isolated node; other
/// lines starting with `#` are comments. Throws ParseError / StructureError / ConfigError.
MultilayerNetwork load_network(const std::filesystem::path& path, LoadReport* report = nullptr);

/// Writes the network in the same layer-edge-list format (round-trips with load_network).
void save_network(const MultilayerNetwork& net, const std::filesystem::path& path);

}  // namespace mlnim
