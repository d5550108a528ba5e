#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

namespace mpxgat {

using NodeId = std::uint32_t;
using LayerId = std::uint32_t;
using Edge = std::pair<NodeId, NodeId>;

// How to treat inter-layer components that are not transitively closed:
// reject the input, or complete them into cliques.
enum class InterClosure { strict, close };

// Undirected, unweighted multiplex graph. Nodes carry dense 0-based ids and
// belong to exactly one horizontal layer. Intra-layer edges stay within a
// layer; inter-layer edges join nodes of different layers and every
// connected component of the vertical network is a clique (or an isolated
// node), with at most one counterpart per foreign layer.
//
// Immutable after construction; safe to share across threads.
class MultiplexGraph {
public:
    MultiplexGraph() = default;

    std::size_t node_count() const { return node_layer_.size(); }
    std::size_t layer_count() const { return layer_nodes_.size(); }
    LayerId layer_of(NodeId u) const { return node_layer_[u]; }
    std::size_t layer_size(LayerId k) const { return layer_nodes_[k].size(); }

    // Global node ids of layer k, ascending.
    const std::vector<NodeId>& layer_nodes(LayerId k) const { return layer_nodes_[k]; }

    // Sorted neighbor lists, global ids.
    const std::vector<NodeId>& intra_neighbors(NodeId u) const { return intra_adj_[u]; }
    const std::vector<NodeId>& inter_neighbors(NodeId u) const { return inter_adj_[u]; }

    // Each undirected edge once, u < v, lexicographic order.
    const std::vector<Edge>& intra_edges() const { return intra_edges_; }
    const std::vector<Edge>& inter_edges() const { return inter_edges_; }

    std::size_t intra_edge_count() const { return intra_edges_.size(); }
    std::size_t inter_edge_count() const { return inter_edges_.size(); }
    std::size_t edge_count() const { return intra_edges_.size() + inter_edges_.size(); }

    bool has_intra_edge(NodeId u, NodeId v) const;
    bool has_inter_edge(NodeId u, NodeId v) const;

    // Validates every structural invariant; throws InputError on violation
    // (duplicate-free symmetry, layer membership, per-foreign-layer
    // uniqueness, clique closure). Called by build_multiplex.
    void validate() const;

private:
    friend MultiplexGraph build_multiplex(const std::vector<LayerId>&,
                                          const std::vector<Edge>&,
                                          const std::vector<Edge>&,
                                          InterClosure);

    std::vector<LayerId> node_layer_;
    std::vector<std::vector<NodeId>> layer_nodes_;
    std::vector<std::vector<NodeId>> intra_adj_;
    std::vector<std::vector<NodeId>> inter_adj_;
    std::vector<Edge> intra_edges_;
    std::vector<Edge> inter_edges_;
};

// Builds a validated graph from a per-node layer assignment and edge lists.
// Edges may appear in either direction and repeatedly; they are
// symmetrized and deduplicated. Self-loops are rejected.
MultiplexGraph build_multiplex(const std::vector<LayerId>& node_layer,
                               const std::vector<Edge>& intra_edges,
                               const std::vector<Edge>& inter_edges,
                               InterClosure closure = InterClosure::strict);

struct LccResult {
    MultiplexGraph graph;
    // original_ids[new_id] = node id in the input graph
    std::vector<NodeId> original_ids;
};

// Induced subgraph on the largest component of the union graph
// (intra plus inter edges). Ties break toward the component containing the
// smallest original node id. Node ids are re-indexed densely, preserving
// relative order. Layers that lose all nodes are dropped.
LccResult largest_connected_component(const MultiplexGraph& g);

} // namespace mpxgat
