// Serial reference vs OpenMP build of each parallel kernel, on Cart-Pole
// workloads of campaign size.

#include "support.hpp"

#include "starla/experiments.hpp"
#include "starla/replay.hpp"

#include <benchmark/benchmark.h>

using namespace starla;

namespace {

struct Workload {
    EnvironmentConfig env = [] {
        auto e = EnvironmentConfig::defaults(EnvKind::cart_pole);
        e.initial_ranges = {{-2.3, 2.3}, {-2.5, 2.5}, {-0.15, 0.15}, {-1.0, 1.0}};
        return e;
    }();
    QNetwork agent = support::random_net(env, 1, {64, 64});
    std::vector<Episode> episodes = run_random_episodes(env, agent, 400, 2);
    std::vector<State> states = collect_states(episodes);
    Surrogate surrogate = [this] {
        ForestParams fp;
        fp.trees = 20;
        return train_surrogate(episodes, agent, AbstractionLevel(0.05), fp, 0.3, 3);
    }();
    Dataset data = build_dataset(episodes, surrogate.index, agent);
    std::vector<Episode> offspring = [this] {
        std::vector<Episode> out;
        for (std::size_t i = 0; i + 1 < episodes.size(); i += 2) {
            const std::size_t f = std::min(episodes[i].length(), episodes[i + 1].length()) / 2;
            auto [a, b] = splice(episodes[i], f, episodes[i + 1], f);
            out.push_back(std::move(a));
            out.push_back(std::move(b));
        }
        return out;
    }();
};

const Workload& work()
{
    static const Workload w;
    return w;
}

template <bool Parallel>
void keys(benchmark::State& st)
{
    const auto& w = work();
    for (auto _ : st)
        benchmark::DoNotOptimize(Parallel ? compute_keys(w.states, w.agent, AbstractionLevel(1.0))
                                          : compute_keys_serial(w.states, w.agent, AbstractionLevel(1.0)));
    st.SetItemsProcessed(st.iterations() * static_cast<std::int64_t>(w.states.size()));
}

template <bool Parallel>
void forest(benchmark::State& st)
{
    const auto& w = work();
    ForestParams fp;
    fp.trees = 50;
    for (auto _ : st)
        benchmark::DoNotOptimize(Parallel ? train_forest(w.data, fp) : train_forest_serial(w.data, fp));
}

template <bool Parallel>
void episodes(benchmark::State& st)
{
    const auto& w = work();
    for (auto _ : st)
        benchmark::DoNotOptimize(Parallel ? run_random_episodes(w.env, w.agent, 500, 4)
                                          : run_random_episodes_serial(w.env, w.agent, 500, 4));
}

template <bool Parallel>
void replay(benchmark::State& st)
{
    const auto& w = work();
    for (auto _ : st)
        benchmark::DoNotOptimize(Parallel ? replay_all(w.offspring, w.agent, w.env)
                                          : replay_all_serial(w.offspring, w.agent, w.env));
}

template <bool Parallel>
void fitness(benchmark::State& st)
{
    const auto& w = work();
    const SearchModels models{&w.env, &w.agent, &w.surrogate.forest, &w.surrogate.index};
    std::vector<Individual> pop(w.offspring.size());
    for (auto _ : st) {
        st.PauseTiming();
        for (std::size_t i = 0; i < pop.size(); ++i)
            pop[i].episode = w.offspring[i];
        SearchKeyTable table(w.surrogate.index);
        st.ResumeTiming();
        if (Parallel)
            evaluate_population(pop, models, table, 1.0);
        else
            evaluate_population_serial(pop, models, table, 1.0);
        benchmark::DoNotOptimize(pop.data());
    }
}

} // namespace

BENCHMARK(keys<false>)->Name("compute_keys/serial")->Unit(benchmark::kMillisecond);
BENCHMARK(keys<true>)->Name("compute_keys/openmp")->Unit(benchmark::kMillisecond);
BENCHMARK(forest<false>)->Name("train_forest/serial")->Unit(benchmark::kMillisecond);
BENCHMARK(forest<true>)->Name("train_forest/openmp")->Unit(benchmark::kMillisecond);
BENCHMARK(episodes<false>)->Name("random_episodes/serial")->Unit(benchmark::kMillisecond);
BENCHMARK(episodes<true>)->Name("random_episodes/openmp")->Unit(benchmark::kMillisecond);
BENCHMARK(replay<false>)->Name("replay_all/serial")->Unit(benchmark::kMillisecond);
BENCHMARK(replay<true>)->Name("replay_all/openmp")->Unit(benchmark::kMillisecond);
BENCHMARK(fitness<false>)->Name("evaluate_population/serial")->Unit(benchmark::kMillisecond);
BENCHMARK(fitness<true>)->Name("evaluate_population/openmp")->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
