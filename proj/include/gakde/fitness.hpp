#ifndef GAKDE_FITNESS_HPP
#define GAKDE_FITNESS_HPP

#include <cstdint>
#include <optional>
#include <span>
#include <unordered_map>
#include <vector>

#include "gakde/data.hpp"

namespace gakde {

// Which form of the cross-validation data-fit term to use. `paper` divides
// the beta-weighted double sum by the raw pair count C; `per_test_mean`
// renormalizes each test row by its remaining beta mass and averages over
// test rows, the textbook leave-out mean.
enum class CvVariant { paper, per_test_mean };

// Result of evaluating a chromosome: the CV criterion (lower is better),
// its negation v (the fitness proper, higher is better), the bandwidth the
// criterion was evaluated at, and the number of valid test/train pairs.
struct FitnessValue {
    double criterion = 0.0;
    double v = 0.0;  // always -criterion
    ScalarBandwidth h_star{1.0};
    std::uint64_t c_pairs = 0;
};

struct BandwidthSearchConfig {
    double h_lo_factor = 0.05;
    double h_hi_factor = 5.0;
    double rel_tol = 1e-3;
    int max_iters = 60;
};

void validate(const BandwidthSearchConfig& cfg);

// Leave-training-out least-squares CV criterion at a fixed bandwidth:
//   criterion = int f_hat^2
//             - (2/C) sum_{k=1..N} sum_{l=1..b} [row k != gene l]
//                       beta_l K_h(X_k - X_{gene l}),
// with C the count of pairs with row k != gene l. Row inequality is by
// index, never by coordinate comparison. Throws DegenerateFitnessError
// when C = 0 (only possible for N = 1).
FitnessValue cv_criterion(const DataSet& data, std::span<const GeneIndex> genes,
                          const WeightVector& beta, ScalarBandwidth h,
                          CvVariant variant = CvVariant::paper);

// Minimizes the CV criterion over h by golden-section search on log h.
// The bracket is [h_lo_factor, h_hi_factor] times the reference scale
//   h_ref = (4/(d+2))^{1/(d+4)} b^{-1/(d+4)} sigma_bar,
// where sigma_bar is the mean marginal sample SD of the chromosome's
// points, falling back to the full-data value when the chromosome has zero
// spread. Returns the best (h, criterion) pair evaluated, which is the
// geometric midpoint of the final bracket unless an interior probe beat it.
FitnessValue optimize_bandwidth(const DataSet& data, std::span<const GeneIndex> genes,
                                const WeightVector& beta,
                                const BandwidthSearchConfig& cfg,
                                CvVariant variant = CvVariant::paper);

// Memo table for chromosome fitness. With uniform beta the criterion is a
// pure function of the gene multiset, so entries are keyed by the sorted
// gene vector; with non-uniform beta slot order matters and the raw gene
// vector is the key. Not internally synchronized: the GA engine performs
// all lookups and inserts on one thread and only fans out the pure
// evaluations, so results never depend on worker scheduling.
class FitnessCache {
public:
    explicit FitnessCache(bool order_sensitive) : order_sensitive_(order_sensitive) {}

    std::optional<FitnessValue> lookup(std::span<const GeneIndex> genes) const;
    void insert(std::span<const GeneIndex> genes, const FitnessValue& value);
    std::size_t size() const { return table_.size(); }

private:
    struct KeyHash {
        std::size_t operator()(const std::vector<GeneIndex>& key) const;
    };
    std::vector<GeneIndex> make_key(std::span<const GeneIndex> genes) const;

    bool order_sensitive_;
    std::unordered_map<std::vector<GeneIndex>, FitnessValue, KeyHash> table_;
};

namespace detail {

// Precomputed squared distances for one chromosome, shared by every
// criterion evaluation during a bandwidth search. Both criterion terms are
// bandwidth-independent apart from the exponentials, so the search touches
// no coordinates after construction.
class CvWorkspace {
public:
    CvWorkspace(const DataSet& data, std::span<const GeneIndex> genes,
                const WeightVector& beta);

    double criterion_at(double h, CvVariant variant) const;
    std::uint64_t c_pairs() const { return c_pairs_; }
    int dim() const { return dim_; }

private:
    int dim_;
    std::size_t n_rows_;
    std::size_t n_genes_;
    std::vector<double> beta_;
    double beta_total_;
    double beta_sq_sum_;
    std::vector<double> gene_dist2_;  // packed upper triangle, i < j
    std::vector<double> test_dist2_;  // n_rows x n_genes, row-major
    std::vector<double> row_kept_beta_;  // per test row: beta mass of slots with gene != row
    std::uint64_t c_pairs_;
    std::size_t n_prime_;  // test rows with any kept beta mass
};

}  // namespace detail

}  // namespace gakde

#endif
