#include "mpxgat/graph.hpp"

#include <algorithm>
#include <numeric>
#include <set>

#include "mpxgat/errors.hpp"
#include "mpxgat/log.hpp"

namespace mpxgat {

namespace {

bool adj_contains(const std::vector<NodeId>& sorted, NodeId v) {
    return std::binary_search(sorted.begin(), sorted.end(), v);
}

// Deduplicated symmetric adjacency from an undirected edge list.
std::vector<std::vector<NodeId>> build_adjacency(std::size_t n, const std::vector<Edge>& edges) {
    std::vector<std::vector<NodeId>> adj(n);
    for (const auto& [u, v] : edges) {
        adj[u].push_back(v);
        adj[v].push_back(u);
    }
    for (auto& nbrs : adj) {
        std::sort(nbrs.begin(), nbrs.end());
        nbrs.erase(std::unique(nbrs.begin(), nbrs.end()), nbrs.end());
    }
    return adj;
}

std::vector<Edge> canonical_edges(const std::vector<std::vector<NodeId>>& adj) {
    std::vector<Edge> edges;
    for (NodeId u = 0; u < adj.size(); ++u)
        for (NodeId v : adj[u])
            if (u < v) edges.emplace_back(u, v);
    return edges;
}

} // namespace

bool MultiplexGraph::has_intra_edge(NodeId u, NodeId v) const {
    return adj_contains(intra_adj_[u], v);
}

bool MultiplexGraph::has_inter_edge(NodeId u, NodeId v) const {
    return adj_contains(inter_adj_[u], v);
}

void MultiplexGraph::validate() const {
    const std::size_t n = node_count();
    std::size_t layer_total = 0;
    for (LayerId k = 0; k < layer_count(); ++k) {
        layer_total += layer_nodes_[k].size();
        for (NodeId u : layer_nodes_[k])
            if (node_layer_[u] != k)
                throw InternalError("layer membership table out of sync");
    }
    if (layer_total != n)
        throw InternalError("layer sizes do not sum to node count");

    for (const auto& [u, v] : intra_edges_) {
        if (u == v) throw InputError(strcat("self-loop at node ", u));
        if (node_layer_[u] != node_layer_[v])
            throw InputError(strcat("intra-layer edge (", u, ",", v, ") crosses layers ",
                                    node_layer_[u], " and ", node_layer_[v]));
    }
    for (const auto& [u, v] : inter_edges_) {
        if (u == v) throw InputError(strcat("self-loop at node ", u));
        if (node_layer_[u] == node_layer_[v])
            throw InputError(strcat("inter-layer edge (", u, ",", v, ") lies within layer ",
                                    node_layer_[u]));
    }

    // Symmetry and no duplicates are structural after build_adjacency; check
    // the remaining vertical-network invariants.
    for (NodeId u = 0; u < n; ++u) {
        std::set<LayerId> seen;
        for (NodeId v : inter_adj_[u]) {
            if (!seen.insert(node_layer_[v]).second)
                throw InputError(strcat("node ", u, " has two counterparts on layer ",
                                        node_layer_[v]));
        }
    }

    // Clique closure: every two neighbors of u must be adjacent themselves.
    for (NodeId u = 0; u < n; ++u) {
        const auto& nbrs = inter_adj_[u];
        for (std::size_t a = 0; a < nbrs.size(); ++a) {
            for (std::size_t b = a + 1; b < nbrs.size(); ++b) {
                if (!adj_contains(inter_adj_[nbrs[a]], nbrs[b]))
                    throw InputError(strcat("inter-layer component is not a clique: nodes (",
                                            nbrs[a], ",", u, ",", nbrs[b],
                                            ") form an open path"));
            }
        }
    }
}

MultiplexGraph build_multiplex(const std::vector<LayerId>& node_layer,
                               const std::vector<Edge>& intra_edges,
                               const std::vector<Edge>& inter_edges,
                               InterClosure closure) {
    const std::size_t n = node_layer.size();
    auto check_endpoint = [&](NodeId u) {
        if (u >= n) throw InputError(strcat("edge endpoint ", u, " out of range (N=", n, ")"));
    };
    for (const auto& [u, v] : intra_edges) { check_endpoint(u); check_endpoint(v); }
    for (const auto& [u, v] : inter_edges) { check_endpoint(u); check_endpoint(v); }

    MultiplexGraph g;
    g.node_layer_ = node_layer;
    LayerId max_layer = 0;
    for (LayerId k : node_layer) max_layer = std::max(max_layer, k);
    g.layer_nodes_.resize(n == 0 ? 0 : max_layer + 1);
    for (NodeId u = 0; u < n; ++u) g.layer_nodes_[node_layer[u]].push_back(u);

    g.intra_adj_ = build_adjacency(n, intra_edges);
    g.inter_adj_ = build_adjacency(n, inter_edges);

    if (closure == InterClosure::close) {
        // Complete each vertical component into a clique.
        std::vector<int> comp(n, -1);
        std::vector<std::vector<NodeId>> members;
        for (NodeId s = 0; s < n; ++s) {
            if (comp[s] >= 0 || g.inter_adj_[s].empty()) continue;
            int c = static_cast<int>(members.size());
            members.push_back({});
            std::vector<NodeId> stack{s};
            comp[s] = c;
            while (!stack.empty()) {
                NodeId u = stack.back();
                stack.pop_back();
                members[c].push_back(u);
                for (NodeId v : g.inter_adj_[u])
                    if (comp[v] < 0) { comp[v] = c; stack.push_back(v); }
            }
        }
        std::vector<Edge> closed;
        for (const auto& m : members)
            for (std::size_t a = 0; a < m.size(); ++a)
                for (std::size_t b = a + 1; b < m.size(); ++b)
                    closed.emplace_back(m[a], m[b]);
        g.inter_adj_ = build_adjacency(n, closed);
    }

    g.intra_edges_ = canonical_edges(g.intra_adj_);
    g.inter_edges_ = canonical_edges(g.inter_adj_);
    g.validate();
    return g;
}

LccResult largest_connected_component(const MultiplexGraph& g) {
    const std::size_t n = g.node_count();
    if (n == 0) throw InputError("largest_connected_component: empty graph");

    std::vector<int> comp(n, -1);
    std::vector<std::size_t> comp_size;
    for (NodeId s = 0; s < n; ++s) {
        if (comp[s] >= 0) continue;
        int c = static_cast<int>(comp_size.size());
        comp_size.push_back(0);
        std::vector<NodeId> stack{s};
        comp[s] = c;
        while (!stack.empty()) {
            NodeId u = stack.back();
            stack.pop_back();
            ++comp_size[c];
            for (NodeId v : g.intra_neighbors(u))
                if (comp[v] < 0) { comp[v] = c; stack.push_back(v); }
            for (NodeId v : g.inter_neighbors(u))
                if (comp[v] < 0) { comp[v] = c; stack.push_back(v); }
        }
    }

    // Largest component; components are discovered in order of their
    // smallest node id, so the first maximum is the tie-break winner.
    int best = 0;
    for (int c = 1; c < static_cast<int>(comp_size.size()); ++c)
        if (comp_size[c] > comp_size[best]) best = c;

    LccResult result;
    std::vector<NodeId> remap(n, 0);
    for (NodeId u = 0; u < n; ++u) {
        if (comp[u] == best) {
            remap[u] = static_cast<NodeId>(result.original_ids.size());
            result.original_ids.push_back(u);
        }
    }

    // Re-index layers densely as well: drop layers with no surviving nodes.
    std::vector<LayerId> layer_remap(g.layer_count(), 0);
    std::vector<bool> layer_used(g.layer_count(), false);
    for (NodeId u : result.original_ids) layer_used[g.layer_of(u)] = true;
    LayerId next = 0;
    for (LayerId k = 0; k < g.layer_count(); ++k)
        if (layer_used[k]) layer_remap[k] = next++;

    std::vector<LayerId> node_layer;
    node_layer.reserve(result.original_ids.size());
    for (NodeId u : result.original_ids) node_layer.push_back(layer_remap[g.layer_of(u)]);

    std::vector<Edge> intra, inter;
    for (const auto& [u, v] : g.intra_edges())
        if (comp[u] == best && comp[v] == best) intra.emplace_back(remap[u], remap[v]);
    for (const auto& [u, v] : g.inter_edges())
        if (comp[u] == best && comp[v] == best) inter.emplace_back(remap[u], remap[v]);

    result.graph = build_multiplex(node_layer, intra, inter);
    return result;
}

} // namespace mpxgat
