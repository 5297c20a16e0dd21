#include "gakde/density.hpp"

#include <cmath>
#include <map>
#include <stdexcept>

namespace gakde {

namespace {

constexpr double kTwoPi = 6.283185307179586476925286766559;

double squared_distance(std::span<const double> a, std::span<const double> b) {
    double s = 0.0;
    for (std::size_t i = 0; i < a.size(); ++i) {
        const double c = a[i] - b[i];
        s += c * c;
    }
    return s;
}

}  // namespace

double kernel_at_zero(int dim, ScalarBandwidth h) {
    return std::pow(kTwoPi * h.h * h.h, -0.5 * dim);
}

double kernel_eval(std::span<const double> diff, ScalarBandwidth h) {
    if (!(h.h > 0.0) || !std::isfinite(h.h))
        throw std::invalid_argument("kernel_eval: h must be positive and finite");
    double d2 = 0.0;
    for (double v : diff) {
        if (!std::isfinite(v)) throw std::invalid_argument("kernel_eval: non-finite diff");
        d2 += v * v;
    }
    const int dim = static_cast<int>(diff.size());
    return kernel_at_zero(dim, h) * std::exp(-d2 / (2.0 * h.h * h.h));
}

double kde_eval(const DataSet& data, std::span<const GeneIndex> indices,
                const WeightVector& beta, ScalarBandwidth h,
                std::span<const double> x) {
    check_indices(data, indices);
    if (indices.size() != beta.size())
        throw std::invalid_argument("kde_eval: |indices| != |beta|");
    if (x.size() != static_cast<std::size_t>(data.dim()))
        throw std::invalid_argument("kde_eval: x has wrong dimension");
    const double k0 = kernel_at_zero(data.dim(), h);
    const double inv_2h2 = 1.0 / (2.0 * h.h * h.h);
    double sum = 0.0;
    for (std::size_t i = 0; i < indices.size(); ++i) {
        const double d2 = squared_distance(x, data.row(static_cast<std::size_t>(indices[i])));
        sum += beta[i] * std::exp(-d2 * inv_2h2);
    }
    return k0 * sum;
}

double kde_squared_integral(const DataSet& data, std::span<const GeneIndex> indices,
                            const WeightVector& beta, ScalarBandwidth h) {
    check_indices(data, indices);
    if (indices.size() != beta.size())
        throw std::invalid_argument("kde_squared_integral: |indices| != |beta|");
    const double inv_4h2 = 1.0 / (4.0 * h.h * h.h);
    double sum = 0.0;
    for (std::size_t i = 0; i < indices.size(); ++i) {
        sum += beta[i] * beta[i];
        const auto xi = data.row(static_cast<std::size_t>(indices[i]));
        for (std::size_t j = i + 1; j < indices.size(); ++j) {
            const double d2 = squared_distance(xi, data.row(static_cast<std::size_t>(indices[j])));
            sum += 2.0 * beta[i] * beta[j] * std::exp(-d2 * inv_4h2);
        }
    }
    return std::pow(2.0 * kTwoPi * h.h * h.h, -0.5 * data.dim()) * sum;
}

double SparseKde::eval(std::span<const double> x) const {
    const double k0 = std::pow(kTwoPi * h.h * h.h, -0.5 * dim);
    const double inv_2h2 = 1.0 / (2.0 * h.h * h.h);
    double sum = 0.0;
    for (std::size_t i = 0; i < support.size(); ++i) {
        const double d2 = squared_distance(x, point(i));
        sum += gamma[i] * std::exp(-d2 * inv_2h2);
    }
    return k0 * sum;
}

SparseKde sparse_kde_from_chromosome(const DataSet& data,
                                     std::span<const GeneIndex> genes,
                                     const WeightVector& beta, ScalarBandwidth h) {
    check_indices(data, genes);
    if (genes.size() != beta.size())
        throw std::invalid_argument("sparse_kde_from_chromosome: |genes| != |beta|");
    std::map<GeneIndex, double> merged;
    for (std::size_t j = 0; j < genes.size(); ++j) merged[genes[j]] += beta[j];

    SparseKde kde;
    kde.dim = data.dim();
    kde.h = h;
    for (const auto& [row, gamma] : merged) {
        if (gamma <= 0.0) continue;  // possible only with zero beta entries
        kde.support.push_back(row);
        kde.gamma.push_back(gamma);
        const auto coords = data.row(static_cast<std::size_t>(row));
        kde.points.insert(kde.points.end(), coords.begin(), coords.end());
    }
    return kde;
}

}  // namespace gakde
