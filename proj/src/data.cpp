#include "gakde/data.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

namespace gakde {

DataSet::DataSet(std::vector<double> coords, int dim)
    : coords_(std::move(coords)), dim_(dim) {
    if (dim_ < 1) throw std::invalid_argument("DataSet: dim must be >= 1");
    if (coords_.empty() || coords_.size() % static_cast<std::size_t>(dim_) != 0)
        throw std::invalid_argument("DataSet: coordinate count not a multiple of dim");
    for (double v : coords_) {
        if (!std::isfinite(v))
            throw std::invalid_argument("DataSet: non-finite coordinate");
    }
}

double DataSet::mean_marginal_sd() const {
    const std::size_t n = size();
    if (n < 2) return 0.0;
    double sd_sum = 0.0;
    for (int a = 0; a < dim_; ++a) {
        double mean = 0.0;
        for (std::size_t i = 0; i < n; ++i) mean += row(i)[a];
        mean /= static_cast<double>(n);
        double ss = 0.0;
        for (std::size_t i = 0; i < n; ++i) {
            const double c = row(i)[a] - mean;
            ss += c * c;
        }
        sd_sum += std::sqrt(ss / static_cast<double>(n - 1));
    }
    return sd_sum / static_cast<double>(dim_);
}

ScalarBandwidth make_bandwidth(double h) {
    if (!(h > 0.0) || !std::isfinite(h))
        throw std::invalid_argument("ScalarBandwidth: h must be positive and finite");
    return ScalarBandwidth{h};
}

WeightVector::WeightVector(std::vector<double> beta) : beta_(std::move(beta)) {
    if (beta_.empty()) throw std::invalid_argument("WeightVector: empty");
    double sum = 0.0;
    for (double w : beta_) {
        if (!std::isfinite(w) || w < 0.0)
            throw std::invalid_argument("WeightVector: weights must be non-negative");
        sum += w;
    }
    if (std::abs(sum - 1.0) > 1e-12)
        throw std::invalid_argument("WeightVector: weights must sum to 1, got " +
                                    std::to_string(sum));
    uniform_ = true;
    for (double w : beta_) {
        if (w != beta_.front()) {
            uniform_ = false;
            break;
        }
    }
}

WeightVector WeightVector::uniform(std::size_t b) {
    if (b == 0) throw std::invalid_argument("WeightVector: b must be >= 1");
    return WeightVector(std::vector<double>(b, 1.0 / static_cast<double>(b)));
}

void check_indices(const DataSet& data, std::span<const GeneIndex> indices) {
    const auto n = static_cast<GeneIndex>(data.size());
    for (GeneIndex g : indices) {
        if (g < 0 || g >= n)
            throw std::invalid_argument("row index " + std::to_string(g) +
                                        " out of range [0, " + std::to_string(n) + ")");
    }
}

}  // namespace gakde
