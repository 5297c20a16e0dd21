#include "gakde/mixture.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "gakde/errors.hpp"

namespace gakde {

namespace {

constexpr double kTwoPi = 6.283185307179586476925286766559;

// Lower Cholesky factor of a small dense SPD matrix (row-major).
// Throws std::invalid_argument when the matrix is not positive-definite.
std::vector<double> cholesky(const std::vector<double>& a, int d) {
    std::vector<double> l(static_cast<std::size_t>(d) * d, 0.0);
    for (int i = 0; i < d; ++i) {
        for (int j = 0; j <= i; ++j) {
            double s = a[static_cast<std::size_t>(i) * d + j];
            for (int k = 0; k < j; ++k)
                s -= l[static_cast<std::size_t>(i) * d + k] * l[static_cast<std::size_t>(j) * d + k];
            if (i == j) {
                if (!(s > 0.0))
                    throw std::invalid_argument("covariance not positive-definite");
                l[static_cast<std::size_t>(i) * d + i] = std::sqrt(s);
            } else {
                l[static_cast<std::size_t>(i) * d + j] =
                    s / l[static_cast<std::size_t>(j) * d + j];
            }
        }
    }
    return l;
}

constexpr int kMaxStackDim = 16;

// Gaussian density N(x; mu, Sigma) from the Cholesky factor of Sigma.
double gaussian_pdf_chol(std::span<const double> x, std::span<const double> mu,
                         const std::vector<double>& l, int d) {
    // Forward-solve L y = (x - mu); quadratic form is |y|^2.
    double stack_y[kMaxStackDim];
    std::vector<double> heap_y;
    double* y = stack_y;
    if (d > kMaxStackDim) {
        heap_y.resize(static_cast<std::size_t>(d));
        y = heap_y.data();
    }
    double quad = 0.0;
    double log_det_half = 0.0;
    for (int i = 0; i < d; ++i) {
        double s = x[static_cast<std::size_t>(i)] - mu[static_cast<std::size_t>(i)];
        for (int k = 0; k < i; ++k) s -= l[static_cast<std::size_t>(i) * d + k] * y[k];
        y[i] = s / l[static_cast<std::size_t>(i) * d + i];
        quad += y[i] * y[i];
        log_det_half += std::log(l[static_cast<std::size_t>(i) * d + i]);
    }
    return std::exp(-0.5 * quad - log_det_half - 0.5 * d * std::log(kTwoPi));
}

double gaussian_pdf(std::span<const double> x, std::span<const double> mu,
                    const std::vector<double>& cov, int d) {
    return gaussian_pdf_chol(x, mu, cholesky(cov, d), d);
}

GaussianComponent bivariate(double weight, double m1, double m2, double v1, double v2,
                            double rho) {
    GaussianComponent c;
    c.weight = weight;
    c.mean = {m1, m2};
    const double cov12 = rho * std::sqrt(v1) * std::sqrt(v2);
    c.cov = {v1, cov12, cov12, v2};
    return c;
}

GaussianComponent trivariate_diag(double weight, double m, double v) {
    GaussianComponent c;
    c.weight = weight;
    c.mean = {m, m, m};
    c.cov = {v, 0, 0, 0, v, 0, 0, 0, v};
    return c;
}

}  // namespace

void validate(const GaussianMixture& m) {
    if (m.dim < 1) throw std::invalid_argument("GaussianMixture: dim must be >= 1");
    if (m.components.empty())
        throw std::invalid_argument("GaussianMixture: no components");
    double wsum = 0.0;
    for (const auto& c : m.components) {
        if (!(c.weight > 0.0)) throw std::invalid_argument("component weight must be > 0");
        wsum += c.weight;
        const auto d = static_cast<std::size_t>(m.dim);
        if (c.mean.size() != d || c.cov.size() != d * d)
            throw std::invalid_argument("component dimension mismatch");
        for (std::size_t i = 0; i < d; ++i)
            for (std::size_t j = i + 1; j < d; ++j)
                if (std::abs(c.cov[i * d + j] - c.cov[j * d + i]) > 1e-12)
                    throw std::invalid_argument("covariance not symmetric");
        cholesky(c.cov, m.dim);  // positive-definiteness
    }
    if (std::abs(wsum - 1.0) > 1e-12)
        throw std::invalid_argument("component weights must sum to 1");
}

GaussianMixture builtin_mixture(BuiltinMixture name) {
    GaussianMixture m;
    const double v23 = (2.0 / 3.0) * (2.0 / 3.0);
    const double v59 = (5.0 / 9.0) * (5.0 / 9.0);
    switch (name) {
        case BuiltinMixture::type_c:
            // Skewed: three concentric-axis components along the diagonal.
            m.dim = 2;
            m.components = {
                bivariate(1.0 / 5.0, 0.0, 0.0, 1.0, 1.0, 0.0),
                bivariate(1.0 / 5.0, 0.5, 0.5, v23, v23, 0.0),
                bivariate(3.0 / 5.0, 13.0 / 12.0, 13.0 / 12.0, v59, v59, 0.0),
            };
            break;
        case BuiltinMixture::type_l:
            // Quadrimodal: equal-variance components with mixed correlations.
            m.dim = 2;
            m.components = {
                bivariate(1.0 / 8.0, -1.0, 1.0, v23, v23, 2.0 / 5.0),
                bivariate(3.0 / 8.0, -1.0, 1.0, v23, v23, 3.0 / 5.0),
                bivariate(1.0 / 8.0, -1.0, 1.0, v23, v23, -7.0 / 10.0),
                bivariate(3.0 / 8.0, 1.0, 1.0, v23, v23, -1.0 / 2.0),
            };
            break;
        case BuiltinMixture::type_c_3d:
            m.dim = 3;
            m.components = {
                trivariate_diag(1.0 / 5.0, 0.0, 1.0),
                trivariate_diag(1.0 / 5.0, 0.5, v23),
                trivariate_diag(3.0 / 5.0, 13.0 / 12.0, v59),
            };
            break;
    }
    validate(m);
    return m;
}

std::optional<BuiltinMixture> parse_mixture_name(const std::string& name) {
    if (name == "type_c") return BuiltinMixture::type_c;
    if (name == "type_l") return BuiltinMixture::type_l;
    if (name == "type_c_3d") return BuiltinMixture::type_c_3d;
    return std::nullopt;
}

std::string mixture_name(BuiltinMixture name) {
    switch (name) {
        case BuiltinMixture::type_c: return "type_c";
        case BuiltinMixture::type_l: return "type_l";
        case BuiltinMixture::type_c_3d: return "type_c_3d";
    }
    return "";
}

double mixture_pdf(const GaussianMixture& m, std::span<const double> x) {
    if (x.size() != static_cast<std::size_t>(m.dim))
        throw std::invalid_argument("mixture_pdf: x has wrong dimension");
    for (double v : x)
        if (!std::isfinite(v)) throw std::invalid_argument("mixture_pdf: non-finite x");
    double sum = 0.0;
    for (const auto& c : m.components)
        sum += c.weight * gaussian_pdf(x, c.mean, c.cov, m.dim);
    return sum;
}

std::vector<double> mixture_mean(const GaussianMixture& m) {
    std::vector<double> mean(static_cast<std::size_t>(m.dim), 0.0);
    for (const auto& c : m.components)
        for (int a = 0; a < m.dim; ++a)
            mean[static_cast<std::size_t>(a)] += c.weight * c.mean[static_cast<std::size_t>(a)];
    return mean;
}

double mixture_max_std(const GaussianMixture& m) {
    double vmax = 0.0;
    for (const auto& c : m.components)
        for (int a = 0; a < m.dim; ++a)
            vmax = std::max(vmax, c.cov[static_cast<std::size_t>(a) * m.dim + a]);
    return std::sqrt(vmax);
}

DataSet mixture_sample(const GaussianMixture& m, std::size_t n, Rng& rng) {
    if (n < 1) throw std::invalid_argument("mixture_sample: n must be >= 1");
    validate(m);
    const auto d = static_cast<std::size_t>(m.dim);
    std::vector<std::vector<double>> factors;
    factors.reserve(m.components.size());
    for (const auto& c : m.components) factors.push_back(cholesky(c.cov, m.dim));

    std::vector<double> coords;
    coords.reserve(n * d);
    std::vector<double> z(d);
    for (std::size_t i = 0; i < n; ++i) {
        const double u = rng.uniform01();
        std::size_t k = 0;
        double acc = 0.0;
        for (; k + 1 < m.components.size(); ++k) {
            acc += m.components[k].weight;
            if (u < acc) break;
        }
        for (std::size_t a = 0; a < d; ++a) z[a] = rng.normal();
        const auto& l = factors[k];
        const auto& mu = m.components[k].mean;
        for (std::size_t r = 0; r < d; ++r) {
            double v = mu[r];
            for (std::size_t cidx = 0; cidx <= r; ++cidx) v += l[r * d + cidx] * z[cidx];
            coords.push_back(v);
        }
    }
    return DataSet(std::move(coords), m.dim);
}

double ise_exact(const SparseKde& kde, const DataSet& data, const GaussianMixture& m) {
    if (kde.dim != m.dim || data.dim() != m.dim)
        throw std::invalid_argument("ise_exact: dimension mismatch");
    const auto d = static_cast<std::size_t>(m.dim);
    const double h2 = kde.h.h * kde.h.h;

    // int f_hat^2: pairwise kernel convolutions over the support.
    double quad = 0.0;
    {
        const double pref = std::pow(2.0 * kTwoPi * h2, -0.5 * m.dim);
        for (std::size_t i = 0; i < kde.support.size(); ++i) {
            const auto xi = data.row(static_cast<std::size_t>(kde.support[i]));
            quad += kde.gamma[i] * kde.gamma[i];
            for (std::size_t j = i + 1; j < kde.support.size(); ++j) {
                const auto xj = data.row(static_cast<std::size_t>(kde.support[j]));
                double d2 = 0.0;
                for (std::size_t a = 0; a < d; ++a) {
                    const double c = xi[a] - xj[a];
                    d2 += c * c;
                }
                quad += 2.0 * kde.gamma[i] * kde.gamma[j] * std::exp(-d2 / (4.0 * h2));
            }
        }
        quad *= pref;
    }

    // Cross term: sum_i sum_k gamma_i w_k N(X_i; mu_k, Sigma_k + h^2 I).
    double cross = 0.0;
    for (const auto& c : m.components) {
        std::vector<double> cov = c.cov;
        for (std::size_t a = 0; a < d; ++a) cov[a * d + a] += h2;
        const auto l = cholesky(cov, m.dim);
        for (std::size_t i = 0; i < kde.support.size(); ++i) {
            const auto xi = data.row(static_cast<std::size_t>(kde.support[i]));
            cross += kde.gamma[i] * c.weight * gaussian_pdf_chol(xi, c.mean, l, m.dim);
        }
    }

    // int f^2: pairwise component convolutions.
    double truth_sq = 0.0;
    for (std::size_t a = 0; a < m.components.size(); ++a) {
        for (std::size_t b = 0; b < m.components.size(); ++b) {
            std::vector<double> cov(d * d);
            for (std::size_t i = 0; i < d * d; ++i)
                cov[i] = m.components[a].cov[i] + m.components[b].cov[i];
            truth_sq += m.components[a].weight * m.components[b].weight *
                        gaussian_pdf(m.components[a].mean, m.components[b].mean, cov, m.dim);
        }
    }

    return std::max(0.0, quad - 2.0 * cross + truth_sq);
}

double ise_numeric(const SparseKde& kde, const DataSet& data, const GaussianMixture& m,
                   int grid_per_dim) {
    if (m.dim > 3)
        throw UnsupportedDimensionError("ise_numeric supports d <= 3");
    if (kde.dim != m.dim || data.dim() != m.dim)
        throw std::invalid_argument("ise_numeric: dimension mismatch");
    if (grid_per_dim < 16)
        throw std::invalid_argument("ise_numeric: grid_per_dim must be >= 16");

    const auto d = static_cast<std::size_t>(m.dim);
    const std::vector<double> center = mixture_mean(m);
    const double half = 6.0 * (mixture_max_std(m) + kde.h.h);
    const auto n = static_cast<std::size_t>(grid_per_dim);

    std::vector<double> steps(d), lo(d);
    for (std::size_t a = 0; a < d; ++a) {
        lo[a] = center[a] - half;
        steps[a] = 2.0 * half / static_cast<double>(n - 1);
    }

    double cell = 1.0;
    for (std::size_t a = 0; a < d; ++a) cell *= steps[a];

    std::size_t total = 1;
    for (std::size_t a = 0; a < d; ++a) total *= n;

    std::vector<std::vector<double>> factors;
    factors.reserve(m.components.size());
    for (const auto& c : m.components) factors.push_back(cholesky(c.cov, m.dim));

    double sum = 0.0;
    std::vector<double> x(d);
    std::vector<std::size_t> idx(d, 0);
    for (std::size_t flat = 0; flat < total; ++flat) {
        std::size_t rem = flat;
        double w = 1.0;
        for (std::size_t a = d; a-- > 0;) {
            idx[a] = rem % n;
            rem /= n;
            x[a] = lo[a] + steps[a] * static_cast<double>(idx[a]);
            if (idx[a] == 0 || idx[a] == n - 1) w *= 0.5;  // trapezoid edge weight
        }
        double truth = 0.0;
        for (std::size_t k = 0; k < m.components.size(); ++k)
            truth += m.components[k].weight *
                     gaussian_pdf_chol(x, m.components[k].mean, factors[k], m.dim);
        const double diff = kde.eval(x) - truth;
        sum += w * diff * diff;
    }
    return sum * cell;
}

}  // namespace gakde
