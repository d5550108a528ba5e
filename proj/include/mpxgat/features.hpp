#pragma once

#include <cstddef>
#include <vector>

#include "mpxgat/graph.hpp"

namespace mpxgat {

// Node feature matrix. The default encoding is the identity one-hot, which
// is stored as a hot-column index per row instead of a dense N x N block;
// models exploit this by turning the first-layer product into a row gather.
class FeatureMatrix {
public:
    static FeatureMatrix one_hot(std::size_t n);
    static FeatureMatrix dense(std::size_t rows, std::size_t dim, std::vector<double> values);

    std::size_t rows() const { return rows_; }
    std::size_t dim() const { return dim_; }
    bool is_one_hot() const { return one_hot_; }

    double value(std::size_t i, std::size_t j) const;
    std::vector<double> dense_row(std::size_t i) const;

    // One-hot mode only: column holding the 1 for row i. Used both by the
    // gather fast path and by permutation tests that relabel nodes.
    std::size_t hot_column(std::size_t i) const { return hot_[i]; }
    void set_hot_column(std::size_t i, std::size_t col);

    const std::vector<double>& dense_values() const { return values_; }

    // Actual storage footprint, for the sparse-representation check.
    std::size_t memory_bytes() const;

private:
    std::size_t rows_ = 0;
    std::size_t dim_ = 0;
    bool one_hot_ = true;
    std::vector<std::size_t> hot_;
    std::vector<double> values_;
};

// N x N identity rows (Kronecker delta features).
FeatureMatrix one_hot_features(const MultiplexGraph& g);

} // namespace mpxgat
