#include <benchmark/benchmark.h>

#include "tint/exploration.hpp"
#include "tint/ingestion.hpp"
#include "tint/simulation.hpp"

namespace {

using namespace tint;

struct Fixture {
  LatentCategory latent;
  MetaphorSetup setup;
};

const Fixture& fixture() {
  static const Fixture f = [] {
    auto latent = survey_to_latent(
        load_survey(TINT_FIXTURE_DIR "/survey.csv", StrengthMode::lenient),
        StrengthMode::lenient);
    MetaphorSetup setup;
    setup.source_root = latent.id_of("dancer");
    setup.target_root = latent.id_of("butterfly");
    for (const char* s : {"dance", "stage", "woman", "night", "dress", "music", "beauty", "grace"})
      setup.source_initials.push_back(latent.id_of(s));
    for (const char* s : {"flower", "fly", "woman", "wing", "sky", "spring", "transience", "color"})
      setup.target_initials.push_back(latent.id_of(s));
    return Fixture{std::move(latent), std::move(setup)};
  }();
  return f;
}

TrialConfig config(Algorithm algorithm, double beta) {
  TrialConfig c;
  c.algorithm = algorithm;
  c.policy = beta > 0 ? SelectionPolicy::softmax(beta) : SelectionPolicy::hardmax();
  c.setup = fixture().setup;
  return c;
}

void BM_Trial(benchmark::State& state) {
  const auto algorithm = state.range(0) ? Algorithm::relation_based : Algorithm::object_based;
  auto c = config(algorithm, 1.0);
  for (auto _ : state) {
    ++c.rng_seed;
    benchmark::DoNotOptimize(run_trial(fixture().latent, c));
  }
}
BENCHMARK(BM_Trial)->Arg(0)->Arg(1)->ArgName("relation");

void BM_Ensemble(benchmark::State& state) {
  const auto algorithm = state.range(0) ? Algorithm::relation_based : Algorithm::object_based;
  const auto c = config(algorithm, 1.0);
  for (auto _ : state) {
    benchmark::DoNotOptimize(run_ensemble(fixture().latent, c, 1000, 7));
  }
  state.SetItemsProcessed(state.iterations() * 1000);
}
BENCHMARK(BM_Ensemble)->Arg(0)->Arg(1)->ArgName("relation")->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
