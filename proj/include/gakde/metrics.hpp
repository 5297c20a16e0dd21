#ifndef GAKDE_METRICS_HPP
#define GAKDE_METRICS_HPP

#include <cstdint>
#include <map>
#include <span>
#include <vector>

#include "gakde/ga.hpp"
#include "gakde/mixture.hpp"

namespace gakde {

// Condensation summary of a final chromosome: distinct support points,
// the largest multiplicity of any single point, and the condensation
// ratio distinct / N.
struct CondensationStats {
    int distinct_count = 0;
    int max_multiplicity = 0;
    double dcr = 0.0;
    std::map<GeneIndex, int> multiplicity_histogram;
};

CondensationStats condensation_stats(const SparseKde& kde, const Chromosome& chrom,
                                     std::size_t n);

// Aggregate of t repeated GA runs on one fixed dataset. ise_star_trace[g-1]
// is the mean ISE of the runs' incumbents at generation g.
struct TrialSummary {
    std::vector<double> ise_per_run;
    double ise_star = 0.0;
    double ise_star_sd = 0.0;
    bool sd_defined = false;  // false when t = 1
    std::vector<double> ise_star_trace;
};

// Pure aggregation of already-computed runs (shared with the CLI, which
// keeps the GaResults for reporting).
TrialSummary summarize_runs(std::span<const GaResult> runs, const DataSet& data,
                            const GaussianMixture& truth, const GaConfig& cfg);

// t independent GA runs on the same dataset, seeded by `seeds`; ISE of
// each incumbent via ise_exact.
TrialSummary ise_star(const DataSet& data, const GaussianMixture& truth,
                      const GaConfig& cfg, std::span<const std::uint64_t> seeds,
                      int threads = 1);

struct MiseResult {
    double value = 0.0;
    double sd = 0.0;
    bool sd_defined = false;
    std::vector<double> ise_per_dataset;
};

// s fresh datasets of size n, one GA run each; mean and SD of the final
// ISEs. Dataset i is sampled with Rng(seeds[i]); its GA run is seeded with
// derive_seed(seeds[i], 1).
MiseResult mise(const GaussianMixture& truth, const GaConfig& cfg, std::size_t s,
                std::size_t n, std::span<const std::uint64_t> seeds, int threads = 1);

struct BaselineResult {
    ScalarBandwidth h{1.0};
    SparseKde kde;
    double score = 0.0;  // LSCV value at h
};

// Full-sample KDE with uniform 1/N weights; h minimizes the classical
// leave-one-out LSCV score by the same golden-section machinery as the
// chromosome fitness. Requires N >= 2 and nonzero data spread.
BaselineResult lscv_baseline(const DataSet& data,
                             const BandwidthSearchConfig& cfg = {});

}  // namespace gakde

#endif
