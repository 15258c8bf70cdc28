#pragma once

#include <map>
#include <optional>
#include <random>
#include <vector>

#include "offsearch/evaluators.hpp"
#include "offsearch/gene.hpp"

namespace offsearch {

struct GaParams {
    std::size_t gene_length = 1;
    std::size_t population = 2;     // M
    std::size_t generations = 1;    // T
    double crossover_rate = 0.9;    // Pc
    double mutation_rate = 0.05;    // Pm
    std::uint64_t rng_seed = 0;
    double timeout_seconds = 180.0;
    double penalty_seconds = 1000.0;

    std::vector<std::string> validate() const;
};

// M and T default to the gene length, capped by the configured values.
GaParams resolve_ga_params(const GaParams& configured, std::size_t gene_length);

struct Individual {
    Gene bits;
    std::optional<double> fitness;
    std::optional<Measurement> measurement;
};

struct Generation {
    int index = 0;
    std::vector<Individual> members;
    std::size_t elite_index = 0; // maximal fitness, ties to lexicographically smallest bits
};

// (processing time)^(-1/2); penalized statuses use penalty_seconds.
double goodness_of_fit(const Measurement& m, double penalty_seconds = 1000.0);

using Rng = std::mt19937_64;

// M distinct bit vectors drawn uniformly; throws InfeasibleDistinct when
// 2^gene_length < M.
Generation initial_population(const GaParams& params, Rng& rng);

// Member 0 is the elite copied unchanged; the rest come from roulette-selected
// parent pairs, single-point crossover with probability Pc, then per-bit
// mutation with probability Pm. All members of `current` must be measured.
Generation next_generation(const Generation& current, const GaParams& params, Rng& rng);

struct MeasureRecord {
    Gene bits;
    Measurement measurement;
    double fitness = 0.0;
    int generation = 0;
};

struct GaResult {
    Individual best;
    std::vector<Generation> generations;
    std::vector<MeasureRecord> records; // one per measured pattern, in order
    std::size_t evaluator_calls = 0;
};

// Runs T generations against the evaluator; every distinct bit vector is
// measured at most once per search (cached).
GaResult run_ga(PatternEvaluator& evaluator, const GaParams& params, int parallel_workers = 1);

} // namespace offsearch
