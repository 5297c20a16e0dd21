#ifndef GAKDE_GA_HPP
#define GAKDE_GA_HPP

#include <cstdint>
#include <optional>
#include <vector>

#include "gakde/data.hpp"
#include "gakde/density.hpp"
#include "gakde/fitness.hpp"
#include "gakde/rng.hpp"

namespace gakde {

enum class MutationSource { elite, original };

// Full parameter set of one GA run. Defaults mirror the simulation
// settings (B, G, p_u, p_m, p_e) = (50, 100, 0.475, 0.05, 0.1), b = 25.
struct GaConfig {
    std::size_t b = 25;       // subsample (chromosome) size
    std::size_t B = 50;       // population size, even
    int G = 100;              // final generation
    double p_u = 0.475;       // crossover probability
    double p_m = 0.05;        // mutation probability
    double p_e = 0.1;         // elite fraction
    MutationSource mutation_source = MutationSource::elite;
    CvVariant cv_variant = CvVariant::paper;
    std::optional<WeightVector> beta;  // defaults to uniform 1/b
    BandwidthSearchConfig bw_cfg{};
    std::uint64_t seed = 0;

    WeightVector effective_beta() const;
    // clamp(round(p_e B), 1, B-2); requires B >= 4.
    std::size_t n_elite() const;
};

// Throws std::invalid_argument on any violated invariant. Generation
// stepping additionally requires B >= 4 so that at least one elite and two
// bred survivors coexist; that check lives in step_generation/run.
void validate(const GaConfig& cfg);

struct Chromosome {
    std::vector<GeneIndex> genes;
    std::optional<FitnessValue> fitness;
};

struct Population {
    std::vector<Chromosome> members;
    int generation = 1;
};

struct TraceRecord {
    int generation = 0;
    double best_criterion = 0.0;
    double best_h = 0.0;
    int distinct_count = 0;
    std::vector<GeneIndex> best_genes;  // incumbent at this generation
};

struct GaResult {
    Chromosome best;
    SparseKde kde;
    std::vector<TraceRecord> trace;
    std::size_t evaluations = 0;  // fitness evaluations actually computed
};

// B chromosomes of b uniform draws (with replacement) of row indices.
// Draw order: member by member, slot by slot.
Population init_population(const DataSet& data, const GaConfig& cfg, Rng& rng);

// Ensures every member carries a FitnessValue and stably sorts by
// descending fitness v (ascending criterion). `cache` may be null;
// `threads <= 1` runs serially. Output is identical for any thread count.
Population evaluate_and_sort(Population pop, const DataSet& data, const GaConfig& cfg,
                             FitnessCache* cache = nullptr, int threads = 1,
                             std::size_t* eval_count = nullptr);

// Breeds two children gene slot by gene slot. Per slot, one categorical
// draw picks mutation (both children get independent draws from the elite's
// genes, or from all rows when mutation_source = original), crossover
// (parents' genes swapped), or reproduction (genes copied).
std::pair<Chromosome, Chromosome> breed_pair(const Chromosome& parent_a,
                                             const Chromosome& parent_b,
                                             const Chromosome& elite,
                                             const DataSet& data, const GaConfig& cfg,
                                             Rng& rng);

// One generation: sort, pair adjacent members, breed B children, evaluate
// and sort them, then keep n_elite parents plus the top B - n_elite
// children. All randomness is drawn sequentially before any parallel
// fitness evaluation.
Population step_generation(Population pop, const DataSet& data, const GaConfig& cfg,
                           Rng& rng, FitnessCache* cache = nullptr, int threads = 1,
                           std::size_t* eval_count = nullptr);

// Runs the full loop: init at generation 1, step until generation G.
// `best` is the minimum-criterion chromosome ever observed (ties keep the
// earlier one); the trace has one record per generation.
GaResult run(const DataSet& data, const GaConfig& cfg, int threads = 1);

}  // namespace gakde

#endif
