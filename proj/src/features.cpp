#include "mpxgat/features.hpp"

#include <numeric>

#include "mpxgat/errors.hpp"

namespace mpxgat {

FeatureMatrix FeatureMatrix::one_hot(std::size_t n) {
    FeatureMatrix f;
    f.rows_ = n;
    f.dim_ = n;
    f.one_hot_ = true;
    f.hot_.resize(n);
    std::iota(f.hot_.begin(), f.hot_.end(), std::size_t{0});
    return f;
}

FeatureMatrix FeatureMatrix::dense(std::size_t rows, std::size_t dim, std::vector<double> values) {
    if (values.size() != rows * dim)
        throw InternalError("FeatureMatrix::dense: value count does not match shape");
    FeatureMatrix f;
    f.rows_ = rows;
    f.dim_ = dim;
    f.one_hot_ = false;
    f.values_ = std::move(values);
    return f;
}

double FeatureMatrix::value(std::size_t i, std::size_t j) const {
    if (one_hot_) return hot_[i] == j ? 1.0 : 0.0;
    return values_[i * dim_ + j];
}

std::vector<double> FeatureMatrix::dense_row(std::size_t i) const {
    std::vector<double> row(dim_, 0.0);
    if (one_hot_) {
        row[hot_[i]] = 1.0;
    } else {
        for (std::size_t j = 0; j < dim_; ++j) row[j] = values_[i * dim_ + j];
    }
    return row;
}

void FeatureMatrix::set_hot_column(std::size_t i, std::size_t col) {
    if (!one_hot_) throw InternalError("set_hot_column on dense features");
    if (col >= dim_) throw InternalError("hot column out of range");
    hot_[i] = col;
}

std::size_t FeatureMatrix::memory_bytes() const {
    return hot_.capacity() * sizeof(std::size_t) + values_.capacity() * sizeof(double);
}

FeatureMatrix one_hot_features(const MultiplexGraph& g) {
    return FeatureMatrix::one_hot(g.node_count());
}

} // namespace mpxgat
