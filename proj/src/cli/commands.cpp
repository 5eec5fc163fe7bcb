#include "sostrust/cli/commands.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <atomic>
#include <chrono>
#include <fstream>
#include <map>
#include <thread>

#include "sostrust/hybrid/io.hpp"
#include "sostrust/io.hpp"
#include "sostrust/metrics/requirements.hpp"
#include "sostrust/metrics/serialization.hpp"
#include "sostrust/simtrust/evaluation.hpp"
#include "sostrust/simtrust/io.hpp"
#include "sostrust/simtrust/synth.hpp"
#include "sostrust/tdg/grid.hpp"
#include "sostrust/tdg/io.hpp"

namespace sostrust::cli {

namespace fs = std::filesystem;
using nlohmann::json;

namespace {

void check_keys(const json& j, std::initializer_list<std::string_view> allowed, std::string_view where) {
  if (!j.is_object()) throw std::invalid_argument(std::string(where) + " must be a JSON object");
  for (const auto& [key, _] : j.items()) {
    if (std::find(allowed.begin(), allowed.end(), key) == allowed.end()) {
      throw std::invalid_argument("unknown " + std::string(where) + " key '" + key + "'");
    }
  }
}

std::size_t count_of(const json& config, const char* key, std::size_t fallback) {
  if (!config.contains(key)) return fallback;
  if (!config[key].is_number_unsigned()) {
    throw std::invalid_argument(std::string(key) + " must be a non-negative integer");
  }
  return config[key].get<std::size_t>();
}

std::uint64_t seed_of(const json& config) { return count_of(config, "seed", 1); }

fs::path resolve(const fs::path& config_dir, const json& value) {
  fs::path p = value.get<std::string>();
  return p.is_absolute() ? p : config_dir / p;
}

std::ofstream open_output(const fs::path& path) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw std::runtime_error("cannot write " + path.string());
  return out;
}

void write_json(const fs::path& path, const json& j) { open_output(path) << j.dump(2) << '\n'; }

CommandResult check_metrics(const json& config, const fs::path& out_dir) {
  check_keys(config, {"seed", "trials", "max_history", "metric_config", "weighted_storage_cap", "samples"},
             "check-metrics config");
  metrics::SuiteConfig suite;
  suite.seed = seed_of(config);
  if (config.contains("trials")) {
    if (!config["trials"].is_number_integer() || config["trials"].get<long long>() <= 0) {
      throw std::invalid_argument("trials must be positive");
    }
    suite.trials = config["trials"].get<std::size_t>();
  }
  suite.max_history = count_of(config, "max_history", suite.max_history);
  suite.max_samples = count_of(config, "samples", suite.max_samples);
  if (config.contains("metric_config")) config["metric_config"].get_to(suite.metric);
  const std::size_t weighted_cap = count_of(config, "weighted_storage_cap", 5);

  json report = json::object();
  CommandResult result;
  for (auto kind : {metrics::MetricKind::continuous, metrics::MetricKind::weighted, metrics::MetricKind::wses}) {
    metrics::SuiteConfig cfg = suite;
    if (kind == metrics::MetricKind::weighted) cfg.metric.storage_cap = weighted_cap;
    const auto r = metrics::run_requirement_suite(kind, cfg);
    report[std::string(metrics::to_string(kind))] = r;
    if (kind == metrics::MetricKind::wses && (r.r1_witnesses > 0 || r.r2_witnesses > 0)) {
      result.exit_code = kExitWitness;
      result.message = "WSES produced requirement witnesses";
    }
  }
  write_json(out_dir / "report.json", report);
  result.outputs.push_back("report.json");
  if (result.message.empty()) {
    result.message = "wses r1=" + report["wses"]["r1"].get<std::string>() +
                     " r2=" + report["wses"]["r2"].get<std::string>() +
                     "; continuous r2 witnesses=" + std::to_string(report["continuous"]["r2_witnesses"].get<std::size_t>()) +
                     "; weighted r2 witnesses=" + std::to_string(report["weighted"]["r2_witnesses"].get<std::size_t>());
  }
  return result;
}

CommandResult eval_simtrust(const json& config, const fs::path& config_dir, const fs::path& out_dir) {
  check_keys(config, {"seed", "synthetic", "corpus", "profiles", "theta_trust", "theta_sim", "cf_theta", "top_n"},
             "eval-simtrust config");
  simtrust::EvaluationConfig eval;
  eval.simtrust.theta_trust = config.value("theta_trust", eval.simtrust.theta_trust);
  eval.simtrust.theta_sim = config.value("theta_sim", eval.simtrust.theta_sim);
  eval.cf_theta = config.value("cf_theta", eval.cf_theta);
  eval.top_n = count_of(config, "top_n", eval.top_n);

  CommandResult result;
  simtrust::Corpus corpus;
  std::vector<simtrust::UserProfile> profiles;
  if (config.contains("corpus") || config.contains("profiles")) {
    if (!config.contains("corpus") || !config.contains("profiles")) {
      throw std::invalid_argument("eval-simtrust needs both 'corpus' and 'profiles'");
    }
    corpus = simtrust::read_corpus(resolve(config_dir, config["corpus"]));
    profiles = simtrust::read_profiles(resolve(config_dir, config["profiles"]));
  } else {
    simtrust::SynthConfig synth;
    if (config.contains("synthetic")) config["synthetic"].get_to(synth);
    synth.seed = seed_of(config);
    auto data = simtrust::synth_corpus(synth);
    corpus = std::move(data.corpus);
    profiles = std::move(data.profiles);
    auto corpus_out = open_output(out_dir / "corpus.jsonl");
    simtrust::write_corpus(corpus_out, corpus);
    auto profiles_out = open_output(out_dir / "profiles.jsonl");
    simtrust::write_profiles(profiles_out, profiles);
    result.outputs.insert(result.outputs.end(), {"corpus.jsonl", "profiles.jsonl"});
  }

  const auto rows = simtrust::compare_recommenders(corpus, std::move(profiles), eval);
  auto csv = open_output(out_dir / "evaluation.csv");
  simtrust::write_evaluation_csv(csv, rows);
  const double st = simtrust::mean_f1(rows, "simtrust");
  const double cf = simtrust::mean_f1(rows, "jaccard_cf");
  write_json(out_dir / "summary.json",
             {{"users", rows.size() / 2}, {"simtrust_mean_f1", st}, {"jaccard_cf_mean_f1", cf}});
  result.outputs.insert(result.outputs.end(), {"evaluation.csv", "summary.json"});
  result.message = "mean f1 simtrust=" + io::format_double(st) + " jaccard_cf=" + io::format_double(cf);
  return result;
}

CommandResult run_tdg(const json& config, const fs::path& out_dir) {
  const auto scenario = config.get<tdg::ScenarioConfig>();
  const auto run = tdg::run_scenario(scenario);
  auto csv = open_output(out_dir / "series.csv");
  tdg::write_series_csv(csv, run.series);
  const json summary = tdg::summary_json(run);
  write_json(out_dir / "summary.json", summary);
  CommandResult result{kExitOk, {"series.csv", "summary.json"}, ""};
  for (const auto& s : summary) {
    result.message += (result.message.empty() ? "" : "; ") + s["type"].get<std::string>() +
                      " final=" + io::format_double(s["mean_reputation_final"].get<double>());
  }
  return result;
}

CommandResult run_hybrid(const json& config, const fs::path& config_dir, const fs::path& out_dir) {
  check_keys(config, {"seed", "audience", "specialization"}, "run-hybrid config");
  CommandResult result;
  json summary = json::object();

  if (config.contains("audience")) {
    const json& a = config["audience"];
    check_keys(a, {"ledger", "viewers", "corpus", "rater_profiles", "theta_trust", "metric_config", "items"},
               "audience config");
    hybrid::AudienceConfig cfg;
    cfg.theta_trust = a.value("theta_trust", cfg.theta_trust);
    if (a.contains("metric_config")) a["metric_config"].get_to(cfg.metric);
    const auto ledger = hybrid::read_ledger(resolve(config_dir, a.at("ledger")));
    const auto viewers = simtrust::read_profiles(resolve(config_dir, a.at("viewers")));
    std::map<std::string, simtrust::UserProfile> raters;
    if (a.contains("rater_profiles")) {
      for (auto& p : simtrust::read_profiles(resolve(config_dir, a["rater_profiles"]))) {
        const std::string id = p.id;
        raters.emplace(id, std::move(p));
      }
    }
    const hybrid::TagResolver resolver =
        a.contains("corpus") ? hybrid::TagResolver(simtrust::read_corpus(resolve(config_dir, a["corpus"])))
                             : hybrid::TagResolver();
    std::vector<std::string> items;
    if (a.contains("items")) {
      items = a["items"].get<std::vector<std::string>>();
    } else {
      for (const auto& r : ledger) {
        if (std::find(items.begin(), items.end(), r.item) == items.end()) items.push_back(r.item);
      }
    }
    auto csv = open_output(out_dir / "audience.csv");
    csv << "item,viewer,trust,qualifying\n";
    for (const auto& item : items) {
      for (const auto& viewer : viewers) {
        const auto rating = hybrid::audience_rating(item, ledger, viewer, raters, resolver, cfg);
        csv << item << ',' << viewer.id << ',' << io::format_double(rating.trust.value()) << ','
            << rating.qualifying << '\n';
      }
    }
    result.outputs.push_back("audience.csv");
    summary["audience_rows"] = items.size() * viewers.size();
  }

  if (config.contains("specialization")) {
    auto spec = config["specialization"].get<hybrid::SpecializationConfig>();
    spec.seed = seed_of(config);
    const auto run = hybrid::specialization_run(spec);
    auto csv = open_output(out_dir / "specialization.csv");
    hybrid::write_specialization_csv(csv, run);
    result.outputs.push_back("specialization.csv");

    const std::size_t window = std::min<std::size_t>(100, spec.rounds);
    auto shares = json::array();
    if (spec.rounds > 0) {
      for (const auto& skill : spec.skills) {
        for (const auto& agent : run.profiles) {
          shares.push_back({{"skill", skill},
                            {"agent", agent.agent},
                            {"final_share", hybrid::delegated_share(run, skill, agent.agent,
                                                                    spec.rounds - window, spec.rounds - 1)}});
        }
      }
    }
    summary["specialization"] = {{"window_rounds", window}, {"shares", shares}};
  }
  if (result.outputs.empty()) {
    throw std::invalid_argument("run-hybrid config needs 'audience' and/or 'specialization'");
  }
  write_json(out_dir / "summary.json", summary);
  result.outputs.push_back("summary.json");
  result.message = "wrote " + std::to_string(result.outputs.size()) + " files";
  return result;
}

}  // namespace

CommandResult run_command(CommandKind kind, const json& config, const fs::path& config_dir,
                          const fs::path& out_dir) {
  const auto started = std::chrono::steady_clock::now();
  CommandResult result;
  switch (kind) {
    case CommandKind::check_metrics:
      result = check_metrics(config, out_dir);
      break;
    case CommandKind::eval_simtrust:
      result = eval_simtrust(config, config_dir, out_dir);
      break;
    case CommandKind::run_tdg:
      result = run_tdg(config, out_dir);
      break;
    case CommandKind::run_hybrid:
      result = run_hybrid(config, config_dir, out_dir);
      break;
  }
  const std::chrono::duration<double> elapsed = std::chrono::steady_clock::now() - started;
  write_json(out_dir / "metadata.json", {{"command", to_string(kind)},
                                         {"seed", seed_of(config)},
                                         {"config_hash", config_hash(config)},
                                         {"config", config},
                                         {"outputs", result.outputs},
                                         {"exit_code", result.exit_code},
                                         {"wall_time_seconds", elapsed.count()}});
  return result;
}

namespace {

struct Job {
  std::string label;
  json config;
  fs::path dir;
  CommandResult result;
  std::string error;
};

int execute(const RunManifest& manifest, std::ostream& out, std::ostream& err) {
  json base;
  try {
    base = load_config(manifest);
    prepare_output_dir(manifest.out_dir, manifest.force);
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  }
  const fs::path config_dir = manifest.config_path ? manifest.config_path->parent_path() : fs::current_path();

  std::vector<Job> jobs;
  try {
    for (auto& [label, config] : expand_sweep(base, manifest.sweep)) {
      fs::path dir = label.empty() ? manifest.out_dir : manifest.out_dir / label;
      jobs.push_back({label, std::move(config), std::move(dir), {}, {}});
    }
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  }

  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i = next++; i < jobs.size(); i = next++) {
      Job& job = jobs[i];
      try {
        fs::create_directories(job.dir);
        job.result = run_command(manifest.command, job.config, config_dir, job.dir);
      } catch (const std::exception& e) {
        const std::string where = manifest.config_path ? manifest.config_path->string() + ": " : "";
        job.error = where + e.what();
        job.result.exit_code = kExitUsage;
      }
    }
  };
  const std::size_t threads =
      std::min<std::size_t>(jobs.size(), std::max(1u, std::thread::hardware_concurrency()));
  std::vector<std::thread> pool;
  for (std::size_t t = 1; t < threads; ++t) pool.emplace_back(worker);
  worker();
  for (auto& t : pool) t.join();

  int code = kExitOk;
  for (const Job& job : jobs) {
    const std::string prefix = job.label.empty() ? "" : "[" + job.label + "] ";
    if (!job.error.empty()) {
      err << prefix << "error: " << job.error << '\n';
    } else {
      out << prefix << to_string(manifest.command) << ": " << job.result.message << '\n';
    }
    code = std::max(code, job.result.exit_code);
  }
  if (!manifest.sweep.empty()) {
    json index = json::array();
    for (const Job& job : jobs) {
      index.push_back({{"label", job.label}, {"config_hash", config_hash(job.config)}, {"exit_code", job.result.exit_code}});
    }
    write_json(manifest.out_dir / "sweep.json", index);
  }
  return code;
}

}  // namespace

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Trust metric experiments: requirement checks, SimTrust evaluation, grid attack scenarios "
               "and tag/rating hybrids."};
  app.name("trustsim");
  app.require_subcommand(1);

  RunManifest manifest;
  std::string config_path;
  std::uint64_t seed = 0;
  std::vector<std::string> sweeps;

  const std::pair<CommandKind, const char*> commands[] = {
      {CommandKind::check_metrics, "Check R1/R2 on the continuous, weighted and WSES metrics"},
      {CommandKind::eval_simtrust, "Compare SimTrust and Jaccard CF recommendations"},
      {CommandKind::run_tdg, "Run a trusted desktop grid attack scenario"},
      {CommandKind::run_hybrid, "Run audience-filtered ratings and skill specialization"},
  };
  std::map<CLI::App*, CommandKind> kinds;
  std::vector<CLI::Option*> seed_options;
  for (const auto& [kind, description] : commands) {
    CLI::App* sub = app.add_subcommand(std::string(to_string(kind)), description);
    sub->add_option("--config", config_path, "JSON config file")->check(CLI::ExistingFile);
    sub->add_option("--out", manifest.out_dir, "Output directory")->required();
    seed_options.push_back(sub->add_option("--seed", seed, "Seed override"));
    sub->add_flag("--force", manifest.force, "Write into a non-empty output directory");
    sub->add_option("--sweep", sweeps, "KEY=V1,V2,... (repeatable)");
    kinds.emplace(sub, kind);
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    app.exit(e, out, err);
    return kExitOk;
  } catch (const CLI::CallForAllHelp& e) {
    app.exit(e, out, err);
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n\n" << app.help();
    return kExitUsage;
  }

  for (const auto& [sub, kind] : kinds) {
    if (sub->parsed()) manifest.command = kind;
  }
  if (!config_path.empty()) manifest.config_path = config_path;
  for (auto* opt : seed_options) {
    if (opt->count() > 0) manifest.seed = seed;
  }
  try {
    for (const auto& s : sweeps) manifest.sweep.push_back(parse_sweep(s));
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  }
  return execute(manifest, out, err);
}

}  // namespace sostrust::cli
