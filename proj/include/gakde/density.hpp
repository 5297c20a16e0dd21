#ifndef GAKDE_DENSITY_HPP
#define GAKDE_DENSITY_HPP

#include <span>
#include <vector>

#include "gakde/data.hpp"

namespace gakde {

// Gaussian product kernel with scalar bandwidth:
//   K_h(diff) = (2 pi)^{-d/2} h^{-d} exp(-|diff|^2 / (2 h^2)).
double kernel_eval(std::span<const double> diff, ScalarBandwidth h);

// (2 pi h^2)^{-d/2}; the kernel value at diff = 0.
double kernel_at_zero(int dim, ScalarBandwidth h);

// Weighted KDE over the rows selected by `indices`:
//   sum_i beta_i K_h(x - X_{indices[i]}).
double kde_eval(const DataSet& data, std::span<const GeneIndex> indices,
                const WeightVector& beta, ScalarBandwidth h,
                std::span<const double> x);

// Exact integral of the squared KDE via the Gaussian convolution identity:
//   int f^2 = sum_i sum_j beta_i beta_j (4 pi h^2)^{-d/2}
//             exp(-|X_i - X_j|^2 / (4 h^2)).
double kde_squared_integral(const DataSet& data, std::span<const GeneIndex> indices,
                            const WeightVector& beta, ScalarBandwidth h);

// The final estimator: distinct support rows with merged gamma weights.
// Self-contained (carries copies of the support coordinates) so that a
// saved estimator can be evaluated without the original sample.
struct SparseKde {
    int dim = 0;
    ScalarBandwidth h{1.0};
    std::vector<GeneIndex> support;  // distinct row ids, ascending
    std::vector<double> gamma;       // per support point, > 0, sums to 1
    std::vector<double> points;      // support coordinates, row-major

    double eval(std::span<const double> x) const;
    std::span<const double> point(std::size_t i) const {
        return {points.data() + i * static_cast<std::size_t>(dim),
                static_cast<std::size_t>(dim)};
    }
};

// Collapses a chromosome into its sparse representation:
//   gamma(i) = sum over gene slots j with genes[j] = i of beta_j.
// The resulting density equals the raw chromosome's KDE at every x.
SparseKde sparse_kde_from_chromosome(const DataSet& data,
                                     std::span<const GeneIndex> genes,
                                     const WeightVector& beta, ScalarBandwidth h);

}  // namespace gakde

#endif
