#ifndef GAKDE_MIXTURE_HPP
#define GAKDE_MIXTURE_HPP

#include <optional>
#include <span>
#include <string>
#include <vector>

#include "gakde/data.hpp"
#include "gakde/density.hpp"
#include "gakde/rng.hpp"

namespace gakde {

struct GaussianComponent {
    double weight = 1.0;
    std::vector<double> mean;
    std::vector<double> cov;  // d x d row-major, symmetric positive-definite
};

struct GaussianMixture {
    int dim = 0;
    std::vector<GaussianComponent> components;
};

// Validates weights (positive, summing to 1 within 1e-12), dimensions, and
// symmetry/positive-definiteness of every covariance.
void validate(const GaussianMixture& m);

enum class BuiltinMixture { type_c, type_l, type_c_3d };

// Simulation ground truths: the bivariate skewed and quadrimodal designs
// and the trivariate skewed design, with their exact printed parameters.
GaussianMixture builtin_mixture(BuiltinMixture name);

// Parses "type_c" | "type_l" | "type_c_3d".
std::optional<BuiltinMixture> parse_mixture_name(const std::string& name);
std::string mixture_name(BuiltinMixture name);

double mixture_pdf(const GaussianMixture& m, std::span<const double> x);

// Mean vector of the mixture (weighted component means).
std::vector<double> mixture_mean(const GaussianMixture& m);

// Largest marginal standard deviation over components and axes.
double mixture_max_std(const GaussianMixture& m);

// n i.i.d. draws: pick a component by weight, then mean + L z with L the
// Cholesky factor and z standard normal. Deterministic given the stream.
DataSet mixture_sample(const GaussianMixture& m, std::size_t n, Rng& rng);

// Exact integrated squared error between the estimator and the truth.
// All three terms are Gaussian convolution integrals in closed form:
//   int (f_hat - f)^2 = int f_hat^2 - 2 sum_i sum_k gamma_i w_k
//     N(X_i; mu_k, Sigma_k + h^2 I) + sum_a sum_b w_a w_b
//     N(mu_a; mu_b, Sigma_a + Sigma_b).
// Clamped at 0 against roundoff. Support coordinates are read from `data`.
double ise_exact(const SparseKde& kde, const DataSet& data, const GaussianMixture& m);

// Trapezoid quadrature of (f_hat - f)^2 over the box
// [mixture mean +- 6 (max component std + h)] per axis; the independent
// oracle for ise_exact. Supports d <= 3 only.
double ise_numeric(const SparseKde& kde, const DataSet& data, const GaussianMixture& m,
                   int grid_per_dim);

}  // namespace gakde

#endif
