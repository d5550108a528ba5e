#include "mpxgat/synthetic.hpp"

#include <algorithm>
#include <cmath>

#include "mpxgat/errors.hpp"
#include "mpxgat/rng.hpp"

namespace mpxgat {

MultiplexGraph synthetic_multiplex(const std::vector<std::size_t>& layer_sizes,
                                   double intra_density,
                                   double inter_coverage,
                                   double planted_correlation,
                                   std::uint64_t seed) {
    if (layer_sizes.empty()) throw InputError("synthetic_multiplex: need at least one layer");
    auto check01 = [](double x, const char* name) {
        if (!(x >= 0.0 && x <= 1.0))
            throw InputError(std::string("synthetic_multiplex: ") + name + " must lie in [0,1]");
    };
    check01(intra_density, "intra_density");
    check01(inter_coverage, "inter_coverage");
    check01(planted_correlation, "planted_correlation");

    const std::size_t L = layer_sizes.size();
    std::size_t n = 0;
    std::size_t min_layer = layer_sizes[0];
    std::vector<std::size_t> base(L);
    for (std::size_t k = 0; k < L; ++k) {
        base[k] = n;
        n += layer_sizes[k];
        min_layer = std::min(min_layer, layer_sizes[k]);
        if (layer_sizes[k] == 0) throw InputError("synthetic_multiplex: empty layer");
    }

    const std::size_t units = static_cast<std::size_t>(std::floor(inter_coverage * static_cast<double>(min_layer)));
    if (units > min_layer)
        throw InputError("synthetic_multiplex: requested more counterpart pairings than the smallest layer holds");

    std::vector<LayerId> node_layer(n);
    for (std::size_t k = 0; k < L; ++k)
        for (std::size_t i = 0; i < layer_sizes[k]; ++i)
            node_layer[base[k] + i] = static_cast<LayerId>(k);

    Rng rng(seed);

    // Layer 0 is plain Erdos-Renyi; it seeds the planted pattern.
    std::vector<Edge> intra;
    const std::size_t n0 = layer_sizes[0];
    std::vector<bool> base_pattern(n0 * n0, false);
    for (std::size_t i = 0; i < n0; ++i) {
        for (std::size_t j = i + 1; j < n0; ++j) {
            if (rng.bernoulli(intra_density)) {
                base_pattern[i * n0 + j] = true;
                intra.emplace_back(static_cast<NodeId>(base[0] + i), static_cast<NodeId>(base[0] + j));
            }
        }
    }

    // Unit t occupies local index t on every layer; copy the layer-0 edge
    // with probability rho for counterpart pairs, resample otherwise.
    for (std::size_t k = 1; k < L; ++k) {
        const std::size_t nk = layer_sizes[k];
        for (std::size_t i = 0; i < nk; ++i) {
            for (std::size_t j = i + 1; j < nk; ++j) {
                bool present;
                if (i < units && j < units && rng.bernoulli(planted_correlation)) {
                    present = base_pattern[i * n0 + j];
                } else {
                    present = rng.bernoulli(intra_density);
                }
                if (present)
                    intra.emplace_back(static_cast<NodeId>(base[k] + i), static_cast<NodeId>(base[k] + j));
            }
        }
    }

    std::vector<Edge> inter;
    for (std::size_t t = 0; t < units; ++t)
        for (std::size_t a = 0; a < L; ++a)
            for (std::size_t b = a + 1; b < L; ++b)
                inter.emplace_back(static_cast<NodeId>(base[a] + t), static_cast<NodeId>(base[b] + t));

    return build_multiplex(node_layer, intra, inter);
}

} // namespace mpxgat
