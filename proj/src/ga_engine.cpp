#include "offsearch/ga_engine.hpp"

#include <algorithm>
#include <cmath>
#include <set>
#include <thread>

#include "offsearch/errors.hpp"

namespace offsearch {

std::vector<std::string> GaParams::validate() const {
    std::vector<std::string> errs;
    if (gene_length < 1)
        errs.push_back("gene_length must be >= 1");
    if (population < 2)
        errs.push_back("population must be >= 2");
    if (gene_length >= 2 && population > gene_length)
        errs.push_back("population must not exceed the gene length");
    if (generations < 1)
        errs.push_back("generations must be >= 1");
    if (crossover_rate < 0.0 || crossover_rate > 1.0)
        errs.push_back("crossover_rate must be in [0,1]");
    if (mutation_rate < 0.0 || mutation_rate > 1.0)
        errs.push_back("mutation_rate must be in [0,1]");
    if (penalty_seconds <= timeout_seconds)
        errs.push_back("penalty_seconds must exceed timeout_seconds");
    return errs;
}

GaParams resolve_ga_params(const GaParams& configured, std::size_t gene_length) {
    GaParams p = configured;
    p.gene_length = gene_length;
    std::size_t cap = std::max<std::size_t>(gene_length, 2);
    p.population = std::max<std::size_t>(2, std::min(configured.population, cap));
    p.generations = std::max<std::size_t>(1, std::min(configured.generations, cap));
    return p;
}

double goodness_of_fit(const Measurement& m, double penalty_seconds) {
    double t = m.status == MeasureStatus::Ok ? m.time_seconds : penalty_seconds;
    t = std::max(t, 1e-12); // guard a degenerate zero-time model
    return std::pow(t, -0.5);
}

namespace {

std::size_t elite_of(const std::vector<Individual>& members) {
    std::size_t best = 0;
    for (std::size_t i = 1; i < members.size(); ++i) {
        double fi = members[i].fitness.value();
        double fb = members[best].fitness.value();
        if (fi > fb || (fi == fb && gene_lex_less(members[i].bits, members[best].bits)))
            best = i;
    }
    return best;
}

// Roulette draw: probability proportional to fitness; uniform fallback when
// every fitness is zero.
std::size_t select_parent(const std::vector<Individual>& members, double fitness_sum, Rng& rng) {
    if (fitness_sum <= 0.0) {
        std::uniform_int_distribution<std::size_t> d(0, members.size() - 1);
        return d(rng);
    }
    std::uniform_real_distribution<double> d(0.0, fitness_sum);
    double u = d(rng);
    double acc = 0.0;
    for (std::size_t i = 0; i < members.size(); ++i) {
        acc += members[i].fitness.value();
        if (u < acc)
            return i;
    }
    return members.size() - 1;
}

void mutate(Gene& g, double pm, Rng& rng) {
    std::uniform_real_distribution<double> d(0.0, 1.0);
    for (auto& b : g)
        if (d(rng) < pm)
            b = b ? 0 : 1;
}

} // namespace

Generation initial_population(const GaParams& params, Rng& rng) {
    const std::size_t L = params.gene_length;
    if (L < 64 && (1ull << L) < params.population)
        throw InfeasibleDistinct("cannot draw " + std::to_string(params.population) +
                                 " distinct genes of length " + std::to_string(L));
    Generation g;
    g.index = 0;
    std::set<Gene> seen;
    std::uniform_int_distribution<int> bit(0, 1);
    while (g.members.size() < params.population) {
        Gene bits(L);
        for (auto& b : bits)
            b = static_cast<std::uint8_t>(bit(rng));
        if (seen.insert(bits).second)
            g.members.push_back({std::move(bits), std::nullopt, std::nullopt});
    }
    return g;
}

Generation next_generation(const Generation& current, const GaParams& params, Rng& rng) {
    Generation next;
    next.index = current.index + 1;
    next.members.reserve(params.population);
    next.members.push_back({current.members[current.elite_index].bits, std::nullopt, std::nullopt});

    double fitness_sum = 0.0;
    for (const auto& ind : current.members)
        fitness_sum += ind.fitness.value();

    std::uniform_real_distribution<double> unit(0.0, 1.0);
    while (next.members.size() < params.population) {
        const Gene& p1 = current.members[select_parent(current.members, fitness_sum, rng)].bits;
        const Gene& p2 = current.members[select_parent(current.members, fitness_sum, rng)].bits;
        Gene c1 = p1, c2 = p2;
        if (params.gene_length >= 2 && unit(rng) < params.crossover_rate) {
            std::uniform_int_distribution<std::size_t> point(1, params.gene_length - 1);
            std::size_t x = point(rng);
            for (std::size_t i = x; i < params.gene_length; ++i)
                std::swap(c1[i], c2[i]);
        }
        mutate(c1, params.mutation_rate, rng);
        mutate(c2, params.mutation_rate, rng);
        next.members.push_back({std::move(c1), std::nullopt, std::nullopt});
        if (next.members.size() < params.population)
            next.members.push_back({std::move(c2), std::nullopt, std::nullopt});
    }
    return next;
}

namespace {

struct EvalCache {
    std::map<Gene, std::pair<Measurement, double>> by_bits;
};

void measure_generation(Generation& gen, PatternEvaluator& evaluator, const GaParams& params,
                        EvalCache& cache, std::vector<MeasureRecord>& records,
                        std::size_t& evaluator_calls, int workers) {
    // Distinct unmeasured genes, in first-appearance order.
    std::vector<Gene> pending;
    for (const auto& ind : gen.members)
        if (!cache.by_bits.count(ind.bits) &&
            std::find(pending.begin(), pending.end(), ind.bits) == pending.end())
            pending.push_back(ind.bits);

    std::vector<Measurement> results(pending.size());
    auto eval_one = [&](std::size_t i) {
        results[i] = evaluator.evaluate(
            OffloadPattern::loops(evaluator.device().kind, pending[i]));
    };
    if (workers > 1 && pending.size() > 1) {
        std::size_t n_threads = std::min<std::size_t>(workers, pending.size());
        std::vector<std::thread> pool;
        for (std::size_t t = 0; t < n_threads; ++t)
            pool.emplace_back([&, t] {
                for (std::size_t i = t; i < pending.size(); i += n_threads)
                    eval_one(i);
            });
        for (auto& th : pool)
            th.join();
    } else {
        for (std::size_t i = 0; i < pending.size(); ++i)
            eval_one(i);
    }
    evaluator_calls += pending.size();

    for (std::size_t i = 0; i < pending.size(); ++i) {
        double fit = goodness_of_fit(results[i], params.penalty_seconds);
        cache.by_bits.emplace(pending[i], std::make_pair(results[i], fit));
        records.push_back({pending[i], results[i], fit, gen.index});
    }
    for (auto& ind : gen.members) {
        const auto& [m, fit] = cache.by_bits.at(ind.bits);
        ind.measurement = m;
        ind.fitness = fit;
    }
    gen.elite_index = elite_of(gen.members);
}

} // namespace

GaResult run_ga(PatternEvaluator& evaluator, const GaParams& params, int parallel_workers) {
    if (auto errs = params.validate(); !errs.empty())
        throw ConfigError(errs);

    Rng rng(params.rng_seed);
    GaResult result;
    EvalCache cache;

    Generation gen = initial_population(params, rng);
    for (std::size_t t = 0; t < params.generations; ++t) {
        gen.index = static_cast<int>(t);
        measure_generation(gen, evaluator, params, cache, result.records,
                           result.evaluator_calls, parallel_workers);
        result.generations.push_back(gen);
        if (t + 1 < params.generations)
            gen = next_generation(gen, params, rng);
    }

    const MeasureRecord* best = nullptr;
    for (const auto& rec : result.records) {
        if (!best || rec.fitness > best->fitness ||
            (rec.fitness == best->fitness && gene_lex_less(rec.bits, best->bits)))
            best = &rec;
    }
    result.best = {best->bits, best->fitness, best->measurement};
    return result;
}

} // namespace offsearch
