#pragma once

#include <cstdint>
#include <vector>

#include "mpxgat/graph.hpp"

namespace mpxgat {

enum class NegMode { sampled, exhaustive };

// Negative-example policy. sampled draws k_test (k_train) times the
// corresponding positive count uniformly without replacement; exhaustive
// materializes the full marked-node negative sets (test side) and is only
// permitted for graphs up to 2,000 nodes.
struct NegPolicy {
    NegMode mode = NegMode::sampled;
    double k_train = 1.0;
    double k_test = 10.0;
};

// Whether the intra-layer test positives are restricted to marked-node
// pairs (default) or subsampled from all intra edges.
enum class IntraTestScope { marked, global };

struct SplitOptions {
    double marked_fraction = 0.2;
    double intra_test_fraction = 0.2;
    NegPolicy neg_policy;
    IntraTestScope intra_scope = IntraTestScope::marked;
    // Re-draw the marked set with seed+1..seed+attempts when a class ends up
    // with zero test positives; 0 disables resampling and raises instead.
    int resample_attempts = 16;
};

// Marked-node train/test partition. Positives partition the graph's edge
// sets per class; negatives are valid non-edges of the matching class and
// all eight example lists are pairwise disjoint.
struct SplitSpec {
    std::vector<NodeId> marked_nodes; // sorted
    std::vector<Edge> train_pos_intra, train_pos_inter;
    std::vector<Edge> test_pos_intra, test_pos_inter;
    std::vector<Edge> train_neg_intra, train_neg_inter;
    std::vector<Edge> test_neg_intra, test_neg_inter;
    std::uint64_t seed = 0;

    bool is_marked(NodeId u) const;
};

SplitSpec generate_split(const MultiplexGraph& g, const SplitOptions& options, std::uint64_t seed);

// Spec-protocol convenience overload.
SplitSpec generate_split(const MultiplexGraph& g, double marked_fraction,
                         double intra_test_fraction, const NegPolicy& neg_policy,
                         std::uint64_t seed);

// Fresh uniform non-edges for one training epoch: ratio times the train
// positive count per class, excluding every edge, every split example and
// the extra exclusions (validation pairs). Deterministic in (seed, epoch).
// Falls back to with-replacement draws from the feasible pool (with a
// warning) when the pool is smaller than the request.
struct EpochNegatives {
    std::vector<Edge> intra;
    std::vector<Edge> inter;
    bool saturated = false;
};

EpochNegatives resample_train_negatives(const MultiplexGraph& g, const SplitSpec& split,
                                        std::uint64_t epoch, std::uint64_t seed,
                                        double ratio = 1.0,
                                        const std::vector<Edge>& extra_exclude = {});

} // namespace mpxgat
