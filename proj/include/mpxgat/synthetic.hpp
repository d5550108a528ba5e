#pragma once

#include <cstdint>
#include <vector>

#include "mpxgat/graph.hpp"

namespace mpxgat {

// Desk-scale synthetic multiplex generator.
//
// Intra edges are Erdos-Renyi per layer. A fraction inter_coverage of
// min(layer_sizes) units receives a full cross-layer clique (one node per
// layer). With planted_correlation rho > 0, the intra neighborhood of a
// counterpart node copies its layer-0 mirror edge with probability rho and
// resamples it Bernoulli(intra_density) otherwise, so inter-linked nodes
// have statistically similar neighborhoods. rho = 1 with equal layer sizes
// and full coverage copies layer 0 exactly.
MultiplexGraph synthetic_multiplex(const std::vector<std::size_t>& layer_sizes,
                                   double intra_density,
                                   double inter_coverage,
                                   double planted_correlation,
                                   std::uint64_t seed);

} // namespace mpxgat
