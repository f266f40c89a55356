#include "commands.hpp"

#include <spdlog/spdlog.h>

#include <fstream>
#include <iomanip>
#include <ostream>

#include "tint/error.hpp"
#include "tint/evaluation.hpp"
#include "tint/exploration.hpp"
#include "tint/results_io.hpp"
#include "tint/simulation.hpp"

namespace tint::cli {

void apply_overrides(RunManifest& manifest, const Overrides& overrides) {
  if (overrides.out) manifest.output_dir = *overrides.out;
  if (overrides.threads) manifest.threads = *overrides.threads;
  if (overrides.seed) manifest.sweep.master_seed = *overrides.seed;
  if (overrides.beta_grid) manifest.sweep.betas = parse_beta_grid(*overrides.beta_grid);
}

namespace {

ImageId resolve_label(const LatentCategory& latent, const RunManifest& m,
                      const std::string& label, const std::string& key) {
  if (auto id = latent.find(label)) return *id;
  throw InputError("unknown image '" + label + "' in " + key + " (not in survey " +
                       m.survey.filename().string() + ")",
                   m.file.string(), m.line_of(key));
}

}  // namespace

Inputs load_inputs(const RunManifest& m) {
  spdlog::debug("loading survey {}", m.survey.string());
  LatentCategory latent = survey_to_latent(load_survey(m.survey, m.strengths), m.strengths);

  MetaphorSetup setup;
  setup.source_root = resolve_label(latent, m, m.source_root, "source_root");
  setup.target_root = resolve_label(latent, m, m.target_root, "target_root");
  for (const auto& l : m.source_initials) {
    setup.source_initials.push_back(resolve_label(latent, m, l, "source_initials"));
  }
  for (const auto& l : m.target_initials) {
    setup.target_initials.push_back(resolve_label(latent, m, l, "target_initials"));
  }
  try {
    validate_setup(latent, setup);
  } catch (const InputError& e) {
    throw InputError(e.message(), m.file.string());
  }

  spdlog::debug("loading interpretation data {}", m.interpretation.string());
  InterpretationData human = load_interpretation(m.interpretation);
  spdlog::debug("loading similarity matrix {}", m.similarity.string());
  SimilarityMatrix similarity = load_similarity(m.similarity);
  try {
    human.scores.require_pairs(m.source_initials, m.target_initials, "interpretation data");
  } catch (const InputError& e) {
    throw InputError(e.message(), m.interpretation.string());
  }
  try {
    similarity.values.require_pairs(m.source_initials, m.target_initials, "similarity matrix");
  } catch (const InputError& e) {
    throw InputError(e.message(), m.similarity.string());
  }

  try {
    m.sweep.validate();
    if (std::find(m.sweep.algorithms.begin(), m.sweep.algorithms.end(),
                  Algorithm::relation_based) != m.sweep.algorithms.end() &&
        setup.source_initials.size() < 2) {
      throw InputError("the relation-based algorithm needs at least two source initials");
    }
  } catch (const InputError& e) {
    throw InputError(e.message(), m.file.string());
  }
  if (std::filesystem::exists(m.output_dir) && !std::filesystem::is_directory(m.output_dir)) {
    throw InputError("output path " + m.output_dir.string() + " exists and is not a directory",
                     m.file.string(), m.line_of("output_dir"));
  }

  return Inputs{std::move(latent), std::move(setup), std::move(human), std::move(similarity)};
}

int cmd_validate(const RunManifest& manifest, std::ostream& out) {
  const Inputs in = load_inputs(manifest);
  out << "ok: " << in.latent.size() << " images, " << in.setup.source_initials.size()
      << " source initials, " << in.setup.target_initials.size() << " target initials, "
      << manifest.sweep.points().size() << " config points x " << manifest.sweep.n_trials
      << " trials\n";
  return kExitOk;
}

int cmd_run(const RunManifest& manifest, std::ostream& out) {
  const Inputs in = load_inputs(manifest);
  const auto points = manifest.sweep.points();
  spdlog::info("running {} config points x {} trials on {} thread(s)", points.size(),
               manifest.sweep.n_trials, manifest.threads);

  const auto sweep = run_sweep(in.latent, in.setup, manifest.sweep, manifest.threads);
  std::vector<EvaluatedPoint> rows;
  rows.reserve(sweep.size());
  for (const auto& entry : sweep) {
    rows.push_back({entry.point, evaluate(entry.ensemble, in.human, in.similarity,
                                          manifest.evaluation)});
  }

  std::filesystem::create_directories(manifest.output_dir);
  auto open = [&](const char* name) {
    std::ofstream f(manifest.output_dir / name, std::ios::binary);
    if (!f) throw Error("cannot write " + (manifest.output_dir / name).string());
    return f;
  };
  {
    auto f = open("correspondences.csv");
    write_correspondence_csv(f, sweep);
  }
  {
    auto f = open("evaluation.csv");
    write_evaluation_csv(f, rows);
  }
  {
    auto f = open("summary.json");
    f << sweep_summary(manifest.sweep, sweep, rows).dump(2) << '\n';
  }

  out << std::left << std::setw(10) << "algorithm" << std::setw(9) << "policy"
      << std::setw(10) << "metric" << std::setw(10) << "beta" << std::setw(10)
      << "data_fit" << std::setw(11) << "mean_width" << "novelty\n";
  auto cell = [](const std::optional<double>& v) {
    return v ? format_number(std::round(*v * 1e4) / 1e4) : std::string("-");
  };
  for (const auto& row : rows) {
    out << std::setw(10) << to_string(row.point.algorithm) << std::setw(9)
        << to_string(row.point.policy) << std::setw(10) << to_string(row.point.metric)
        << std::setw(10) << cell(row.point.beta) << std::setw(10) << cell(row.report.data_fit)
        << std::setw(11) << cell(row.report.mean_width) << cell(row.report.novelty) << '\n';
  }
  out << "wrote " << (manifest.output_dir / "correspondences.csv").string() << ", "
      << (manifest.output_dir / "evaluation.csv").string() << ", "
      << (manifest.output_dir / "summary.json").string() << '\n';
  return kExitOk;
}

int cmd_trial(const RunManifest& manifest, const TrialRequest& request, std::ostream& out) {
  const Inputs in = load_inputs(manifest);
  const LatentCategory& latent = in.latent;

  TrialConfig config;
  config.algorithm = request.algorithm;
  config.policy = request.policy == PolicyKind::softmax ? SelectionPolicy::softmax(request.beta)
                                                        : SelectionPolicy::hardmax();
  config.metric = request.metric;
  config.rng_seed = request.seed;
  config.setup = in.setup;
  config.softmax_conflict_resolution = request.softmax_conflict_resolution;

  const TrialOutcome outcome = run_trial(latent, config);
  const LawReport laws = check_functor_laws(outcome.functor, outcome.elicited);
  const auto& source = latent.label(in.setup.source_root);
  const auto& target = latent.label(in.setup.target_root);

  out << "trial: algorithm=" << to_string(config.algorithm)
      << " policy=" << to_string(config.policy.kind);
  if (config.policy.kind == PolicyKind::softmax) out << " beta=" << format_number(config.policy.beta);
  if (config.algorithm == Algorithm::relation_based) out << " metric=" << to_string(config.metric);
  out << " seed=" << request.seed << '\n';
  out << "metaphor: \"" << target << " is " << source << "\" elicits " << target << " -> "
      << source << '\n';
  out << "elicited: " << outcome.elicited.arrow_count() << " arrows ("
      << outcome.draws.size() << " Bernoulli draws)\n";
  out << "functor " << source << "\\C -> " << target << "\\C: " << outcome.functor.size()
      << " of " << in.setup.source_initials.size() << " source objects mapped, width "
      << width(outcome.functor) << '\n';

  for (ImageId b : in.setup.source_initials) {
    const Correspondence* c = outcome.functor.find(b);
    if (c == nullptr) {
      out << "  " << latent.label(b) << " -> (unmapped)\n";
      continue;
    }
    out << "  " << latent.label(b) << " -> " << latent.label(c->target) << "  witness "
        << latent.label(b) << "->" << latent.label(c->target)
        << " mu=" << format_number(c->witness_weight);
    if (c->via == Correspondence::Via::triangle) out << " d=" << format_number(c->distance);
    out << "  \"" << latent.label(b) << " for " << source << " is " << latent.label(c->target)
        << " for " << target << "\"\n";
  }

  out << "laws: " << (laws.lawful() ? "lawful" : "violations") << " (objects "
      << laws.objects_checked << ", triangles " << laws.triangles_checked << ", squares "
      << laws.squares_checked << ")\n";
  for (const LawViolation& v : laws.violations) {
    out << "  " << to_string(v.kind) << ": missing " << latent.label(v.missing.dom) << "->"
        << latent.label(v.missing.cod);
    if (v.edge) {
      out << " (image of " << latent.label(v.edge->dom) << "->" << latent.label(v.edge->cod)
          << ")";
    }
    out << '\n';
  }
  return kExitOk;
}

int guarded(const std::function<int()>& command, std::ostream& err) {
  try {
    return command();
  } catch (const InputError& e) {
    err << "error: " << e.what() << '\n';
    return kExitInvalidInput;
  } catch (const std::exception& e) {
    err << "runtime failure: " << e.what() << '\n';
    return kExitRuntimeFailure;
  }
}

}  // namespace tint::cli
