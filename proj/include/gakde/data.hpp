#ifndef GAKDE_DATA_HPP
#define GAKDE_DATA_HPP

#include <cstdint>
#include <span>
#include <vector>

namespace gakde {

using GeneIndex = std::int32_t;

// N x d sample with stable row ids 0..N-1, stored row-major. The row index
// is the identity of a point everywhere in this library; coordinates are
// never compared for equality.
class DataSet {
public:
    // Takes ownership of row-major coordinates; every value must be finite.
    DataSet(std::vector<double> coords, int dim);

    int dim() const { return dim_; }
    std::size_t size() const { return coords_.size() / static_cast<std::size_t>(dim_); }

    std::span<const double> row(std::size_t i) const {
        return {coords_.data() + i * static_cast<std::size_t>(dim_),
                static_cast<std::size_t>(dim_)};
    }

    const std::vector<double>& coords() const { return coords_; }

    // Mean of the d marginal sample standard deviations (n-1 denominator);
    // 0 when fewer than two rows.
    double mean_marginal_sd() const;

private:
    std::vector<double> coords_;
    int dim_;
};

// Smoothing matrix restricted to h^2 I_d; a single positive scale.
struct ScalarBandwidth {
    double h;
};

// Validates h > 0 and finite.
ScalarBandwidth make_bandwidth(double h);

// Non-negative weights summing to 1 (within 1e-12 absolute).
class WeightVector {
public:
    explicit WeightVector(std::vector<double> beta);

    static WeightVector uniform(std::size_t b);

    std::size_t size() const { return beta_.size(); }
    double operator[](std::size_t i) const { return beta_[i]; }
    const std::vector<double>& values() const { return beta_; }
    bool is_uniform() const { return uniform_; }

private:
    std::vector<double> beta_;
    bool uniform_;
};

// Throws std::invalid_argument unless every index is in [0, data.size()).
void check_indices(const DataSet& data, std::span<const GeneIndex> indices);

}  // namespace gakde

#endif
