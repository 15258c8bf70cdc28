#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <map>
#include <set>

#include "offsearch/errors.hpp"
#include "offsearch/ga_engine.hpp"

using namespace offsearch;

namespace {

Measurement ok_in(double seconds) {
    Measurement m;
    m.time_seconds = seconds;
    m.status = MeasureStatus::Ok;
    return m;
}

// Test-only evaluator over an arbitrary fitness-by-bits function.
class FunctionEvaluator final : public PatternEvaluator {
  public:
    using TimeFn = std::function<double(const Gene&)>;
    explicit FunctionEvaluator(std::size_t gene_length, TimeFn fn)
        : fn_(std::move(fn)) {
        device_.kind = DeviceKind::ManyCoreCpu;
        device_.name = "virtual";
        device_.price = 1.0;
        (void)gene_length;
    }
    BaselineResult measure_baseline() override { return {}; }
    Measurement evaluate(const OffloadPattern& p) override {
        ++calls;
        return ok_in(fn_(p.bits));
    }
    const DeviceSpec& device() const override { return device_; }

    std::size_t calls = 0;

  private:
    TimeFn fn_;
    DeviceSpec device_;
};

GaParams params_for(std::size_t L, std::size_t m, std::size_t t, std::uint64_t seed) {
    GaParams p;
    p.gene_length = L;
    p.population = m;
    p.generations = t;
    p.rng_seed = seed;
    return p;
}

} // namespace

TEST_CASE("goodness of fit is (time)^(-1/2) with the 1000 s penalty") {
    CHECK(goodness_of_fit(ok_in(1.0)) == doctest::Approx(1.0).epsilon(1e-12));

    Measurement to;
    to.status = MeasureStatus::Timeout;
    to.time_seconds = 180.0;
    // 1000^(-1/2), frozen from an independent evaluation
    CHECK(std::abs(goodness_of_fit(to) - 0.03162277660168379) < 1e-15);

    Measurement wrong;
    wrong.status = MeasureStatus::WrongResult;
    CHECK(goodness_of_fit(wrong) == goodness_of_fit(to));
    Measurement cfail;
    cfail.status = MeasureStatus::CompileFail;
    CHECK(goodness_of_fit(cfail) == goodness_of_fit(to));

    // 51.3 s, the single-core 3mm time; value frozen from 1/sqrt(51.3)
    CHECK(std::abs(goodness_of_fit(ok_in(51.3)) - 0.13961796943056518) < 1e-12);

    // strictly decreasing in t over sampled pairs, and matching t^(-1/2)
    for (int i = 1; i <= 1000; ++i) {
        double t = 0.003 * i;
        CHECK(std::abs(goodness_of_fit(ok_in(t)) - std::pow(t, -0.5)) < 1e-12);
        if (i > 1)
            CHECK(goodness_of_fit(ok_in(t)) < goodness_of_fit(ok_in(0.003 * (i - 1))));
    }
}

TEST_CASE("penalty ordering: any penalized pattern scores below any ok pattern under 1000 s") {
    Measurement penalized;
    penalized.status = MeasureStatus::Timeout;
    for (double t : {0.01, 1.0, 51.3, 500.0, 999.9})
        CHECK(goodness_of_fit(penalized) < goodness_of_fit(ok_in(t)));
}

TEST_CASE("initial population: distinct, seeded, full coverage when forced") {
    Rng rng(77);
    GaParams p = params_for(2, 2, 1, 77);
    Generation g = initial_population(p, rng);
    REQUIRE(g.members.size() == 2);
    CHECK(g.members[0].bits != g.members[1].bits);

    Rng rng2(77);
    Generation h = initial_population(p, rng2);
    CHECK(h.members[0].bits == g.members[0].bits);
    CHECK(h.members[1].bits == g.members[1].bits);

    SUBCASE("gene length 1 forces {0} and {1}") {
        Rng r(3);
        GaParams q = params_for(1, 2, 1, 3);
        Generation gg = initial_population(q, r);
        std::set<Gene> seen;
        for (const auto& ind : gg.members)
            seen.insert(ind.bits);
        CHECK(seen == std::set<Gene>{{0}, {1}});
    }
    SUBCASE("gene length 4 with M=16 enumerates all patterns once") {
        Rng r(11);
        GaParams q = params_for(4, 16, 1, 11);
        // the M <= gene-length policy is a default, not a hard cap here
        Generation gg = initial_population(q, r);
        std::set<Gene> seen;
        for (const auto& ind : gg.members)
            seen.insert(ind.bits);
        CHECK(seen.size() == 16);
    }
    SUBCASE("2^L < M is infeasible") {
        Rng r(1);
        GaParams q = params_for(2, 5, 1, 1);
        CHECK_THROWS_AS(initial_population(q, r), InfeasibleDistinct);
    }
}

TEST_CASE("next generation: elite copy and degenerate operators") {
    GaParams p = params_for(3, 3, 2, 9);
    Generation cur;
    cur.index = 0;
    cur.members = {{Gene{1, 0, 1}, 0.5, ok_in(4.0)},
                   {Gene{0, 1, 0}, 0.3, ok_in(11.1)},
                   {Gene{0, 0, 1}, 0.2, ok_in(25.0)}};
    cur.elite_index = 0;

    SUBCASE("Pc=0, Pm=0: every child equals some parent") {
        p.crossover_rate = 0.0;
        p.mutation_rate = 0.0;
        Rng rng(123);
        Generation next = next_generation(cur, p, rng);
        REQUIRE(next.members.size() == 3);
        CHECK(next.members[0].bits == cur.members[0].bits); // elite first
        for (const auto& child : next.members) {
            bool is_parent = false;
            for (const auto& parent : cur.members)
                is_parent = is_parent || parent.bits == child.bits;
            CHECK(is_parent);
        }
    }
    SUBCASE("Pm=1 with no crossover flips every bit") {
        p.crossover_rate = 0.0;
        p.mutation_rate = 1.0;
        Rng rng(123);
        Generation next = next_generation(cur, p, rng);
        for (std::size_t i = 1; i < next.members.size(); ++i) {
            const Gene& child = next.members[i].bits;
            bool matches_flip = false;
            for (const auto& parent : cur.members) {
                Gene flip = parent.bits;
                for (auto& b : flip)
                    b = b ? 0 : 1;
                matches_flip = matches_flip || flip == child;
            }
            CHECK(matches_flip);
        }
        CHECK(next.members[0].bits == Gene{1, 0, 1}); // elite untouched
    }
}

TEST_CASE("roulette selection tracks fitness proportions") {
    // fitnesses (0.5, 0.3, 0.2) -> selection probabilities (0.5, 0.3, 0.2)
    GaParams p = params_for(3, 3, 2, 0);
    p.crossover_rate = 0.0;
    p.mutation_rate = 0.0;
    Generation cur;
    cur.members = {{Gene{1, 1, 1}, 0.5, ok_in(4.0)},
                   {Gene{0, 1, 0}, 0.3, ok_in(11.1)},
                   {Gene{0, 0, 1}, 0.2, ok_in(25.0)}};
    cur.elite_index = 0;

    std::map<Gene, int> counts;
    Rng rng(20240601);
    const int rounds = 5000;
    for (int i = 0; i < rounds; ++i) {
        Generation next = next_generation(cur, p, rng);
        for (std::size_t k = 1; k < next.members.size(); ++k)
            counts[next.members[k].bits] += 1;
    }
    double total = 0;
    for (const auto& [bits, n] : counts)
        total += n;
    CHECK(counts[Gene{1, 1, 1}] / total == doctest::Approx(0.5).epsilon(0.05));
    CHECK(counts[Gene{0, 1, 0}] / total == doctest::Approx(0.3).epsilon(0.05));
    CHECK(counts[Gene{0, 0, 1}] / total == doctest::Approx(0.2).epsilon(0.05));
}

TEST_CASE("all-zero fitness falls back to uniform selection") {
    GaParams p = params_for(2, 2, 2, 0);
    p.crossover_rate = 0.0;
    p.mutation_rate = 0.0;
    Generation cur;
    cur.members = {{Gene{1, 0}, 0.0, ok_in(1.0)}, {Gene{0, 1}, 0.0, ok_in(1.0)}};
    cur.elite_index = 1; // lexicographic tie-break would pick {0,1}
    Rng rng(5);
    Generation next = next_generation(cur, p, rng);
    REQUIRE(next.members.size() == 2);
    bool from_parents = next.members[1].bits == Gene{1, 0} || next.members[1].bits == Gene{0, 1};
    CHECK(from_parents);
}

TEST_CASE("run_ga: caching, determinism, elite monotonicity, history shape") {
    auto rough = [](const Gene& g) {
        // separable landscape with a ridge: prefer bits 1 and 3 set
        double t = 40.0;
        if (g[1])
            t -= 18.0;
        if (g[3])
            t -= 15.0;
        t += 2.0 * g[0] + 1.0 * g[2] + 0.5 * g[4] + 0.25 * g[5];
        return t;
    };
    FunctionEvaluator eval(6, rough);
    GaParams p = params_for(6, 6, 6, 42);
    GaResult r = run_ga(eval, p);

    // cache soundness: every evaluator call is a distinct bit vector
    CHECK(eval.calls == r.records.size());
    std::set<Gene> distinct;
    for (const auto& rec : r.records)
        distinct.insert(rec.bits);
    CHECK(distinct.size() == r.records.size());
    CHECK(r.records.size() <= 36); // at most M*T distinct measurements

    // elite monotonicity across generations
    REQUIRE(r.generations.size() == 6);
    double prev = -1.0;
    for (const auto& gen : r.generations) {
        double elite = gen.members[gen.elite_index].fitness.value();
        CHECK(elite >= prev);
        prev = elite;
    }

    // determinism: identical params give identical history
    FunctionEvaluator eval2(6, rough);
    GaResult r2 = run_ga(eval2, p);
    REQUIRE(r2.records.size() == r.records.size());
    for (std::size_t i = 0; i < r.records.size(); ++i) {
        CHECK(r2.records[i].bits == r.records[i].bits);
        CHECK(r2.records[i].generation == r.records[i].generation);
        CHECK(r2.records[i].fitness == r.records[i].fitness);
    }

    // concurrent evaluation must not change results
    FunctionEvaluator eval3(6, rough);
    GaResult r3 = run_ga(eval3, p, 4);
    REQUIRE(r3.records.size() == r.records.size());
    for (std::size_t i = 0; i < r.records.size(); ++i)
        CHECK(r3.records[i].bits == r.records[i].bits);
    CHECK(r3.best.bits == r.best.bits);
}

TEST_CASE("run_ga with T=1 returns a member of the initial population") {
    auto fn = [](const Gene& g) { return 10.0 - gene_popcount(g); };
    FunctionEvaluator eval(5, fn);
    GaParams p = params_for(5, 5, 1, 7);
    GaResult r = run_ga(eval, p);
    REQUIRE(r.generations.size() == 1);
    bool member = false;
    for (const auto& ind : r.generations[0].members)
        member = member || ind.bits == r.best.bits;
    CHECK(member);
    CHECK(eval.calls <= 5);
}

TEST_CASE("popcount-increasing fitness drives the GA to all-ones") {
    // brute-force oracle over all 2^6 patterns: fitness strictly increases
    // with popcount, so all-ones is the unique optimum
    auto fn = [](const Gene& g) { return 64.0 / (1.0 + gene_popcount(g)); };
    {
        Gene best;
        double best_t = 1e9;
        for (int mask = 0; mask < 64; ++mask) {
            Gene g(6);
            for (int b = 0; b < 6; ++b)
                g[b] = (mask >> b) & 1;
            double t = fn(g);
            if (t < best_t) {
                best_t = t;
                best = g;
            }
        }
        CHECK(best == Gene(6, 1));
    }
    FunctionEvaluator eval(6, fn);
    GaParams p = params_for(6, 6, 6, 7);
    GaResult r = run_ga(eval, p);
    CHECK(r.best.bits == Gene(6, 1));
}

TEST_CASE("resolve_ga_params clamps M and T to the gene length") {
    GaParams configured;
    configured.population = 20;
    configured.generations = 20;
    GaParams p = resolve_ga_params(configured, 6);
    CHECK(p.population == 6);
    CHECK(p.generations == 6);
    GaParams q = resolve_ga_params(configured, 120);
    CHECK(q.population == 20);
    CHECK(q.generations == 20);
    GaParams tiny = resolve_ga_params(configured, 1);
    CHECK(tiny.population == 2);
    CHECK(tiny.gene_length == 1);
}

TEST_CASE("invalid params are rejected with every violation listed") {
    GaParams p = params_for(4, 6, 0, 1);
    p.crossover_rate = 1.5;
    p.penalty_seconds = 10.0;
    p.timeout_seconds = 20.0;
    auto errs = p.validate();
    CHECK(errs.size() == 4);
}
