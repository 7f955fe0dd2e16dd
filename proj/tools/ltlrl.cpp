#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <memory>
#include <optional>
#include <sstream>
#include <string>

#include "CLI11.hpp"
#include "json.hpp"
#include "ltlrl/env/model_io.hpp"
#include "ltlrl/env/session.hpp"
#include "ltlrl/harness/episode_log.hpp"
#include "ltlrl/harness/experiment.hpp"
#include "ltlrl/harness/needle.hpp"
#include "ltlrl/harness/replay.hpp"
#include "ltlrl/harness/test_file.hpp"
#include "ltlrl/ltl/parser.hpp"
#include "ltlrl/rl/config.hpp"
#include "ltlrl/rl/engine.hpp"

namespace {

using namespace ltlrl;

enum Exit : int {
  kOk = 0,
  kUnsatisfied = 1,
  kUsage = 2,
  kModel = 3,
  kFormula = 4,
  kIo = 5,
  kNotEnabled = 6,
};

class IoError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct Common {
  std::string model;
  std::string formula;
  std::string formula_file;
  std::uint64_t seed = 0;
};

struct Options {
  Common common;
  rl::LearnerConfig config;
  std::string engine = "farlead";
  bool no_shaping = false;
  bool no_prediction = false;
  std::string out;
  std::string log;
  std::size_t reps = 100;
  std::size_t threads = 1;
  std::string csv;
  std::string summary;
  bool no_wall_time = false;
  std::string test;
  std::size_t times = 1;
  int depth = 3;
  int decoys = 6;
  std::string level;
};

void add_common(CLI::App* cmd, Common& c) {
  cmd->add_option("--model", c.model, "application model (JSON)")->required();
  auto* inline_f = cmd->add_option("--formula", c.formula, "LTL formula");
  auto* file_f = cmd->add_option("--formula-file", c.formula_file, "file holding the formula");
  inline_f->excludes(file_f);
  cmd->add_option("--seed", c.seed, "random seed");
}

void add_learner(CLI::App* cmd, Options& o) {
  auto& c = o.config;
  cmd->add_option("--engine", o.engine, "farlead or random")
      ->check(CLI::IsMember({"farlead", "random"}));
  cmd->add_option("--episodes", c.max_episodes, "maximum episodes (E)")->capture_default_str();
  cmd->add_option("--steps", c.max_steps, "maximum steps per episode (K)")->capture_default_str();
  cmd->add_option("--t0", c.temperature0, "initial temperature")->capture_default_str();
  cmd->add_option("--delta-t", c.temperature_step, "temperature decrement")->capture_default_str();
  cmd->add_option("--t-min", c.temperature_min, "minimum temperature")->capture_default_str();
  cmd->add_option("--eps0", c.epsilon0, "initial exploration rate")->capture_default_str();
  cmd->add_option("--eps-decay", c.epsilon_decay, "exploration decay factor")->capture_default_str();
  cmd->add_option("--eps-min", c.epsilon_min, "minimum exploration rate")->capture_default_str();
  cmd->add_option("--eta0", c.eta0, "initial learning rate")->capture_default_str();
  cmd->add_option("--eta-decay", c.eta_decay, "learning rate decay factor")->capture_default_str();
  cmd->add_option("--eta-min", c.eta_min, "minimum learning rate")->capture_default_str();
  cmd->add_option("--lambda", c.lambda, "eligibility discount")->capture_default_str();
  cmd->add_option("--alpha", c.alpha, "doubleness ratio")->capture_default_str();
  cmd->add_option("--rho", c.rho, "bound on |Q|")->capture_default_str();
  cmd->add_option("--e-min", c.eligibility_min, "eligibility threshold")->capture_default_str();
  cmd->add_option("--tail", c.tail_length, "maximum tail length (h)")->capture_default_str();
  cmd->add_flag("--no-reward-shaping", o.no_shaping, "reward only decided verdicts");
  cmd->add_flag("--no-prediction", o.no_prediction, "do not prune actions before deciding");
}

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw IoError("cannot open '" + path + "'");
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

ltl::Formula load_formula(const Common& c) {
  if (c.formula.empty() && c.formula_file.empty())
    throw CLI::RequiredError("--formula or --formula-file");
  return ltl::parse(c.formula_file.empty() ? c.formula : read_file(c.formula_file));
}

std::shared_ptr<const env::AppModel> load(const Common& c) {
  return std::make_shared<const env::AppModel>(env::load_model(c.model));
}

rl::LearnerConfig learner(const Options& o) {
  rl::LearnerConfig c = o.config;
  c.seed = o.common.seed;
  if (o.no_shaping) c.reward_shaping = false;
  if (o.no_prediction) c.reward_prediction = false;
  return c;
}

rl::EngineKind engine(const Options& o) {
  return o.engine == "random" ? rl::EngineKind::Random : rl::EngineKind::Farlead;
}

std::ofstream open_out(const std::string& path) {
  std::ofstream out(path);
  if (!out) throw IoError("cannot write '" + path + "'");
  return out;
}

int cmd_generate(const Options& o) {
  const auto formula = load_formula(o.common);
  const auto model = load(o.common);
  const auto config = learner(o);

  std::optional<std::ofstream> log;
  if (!o.log.empty()) log = open_out(o.log);
  rl::EpisodeObserver observer;
  if (log) observer = [&](const rl::EpisodeLog& e) { harness::write_episode(*log, e); };

  const auto result = rl::generate(model, formula, config, engine(o), observer);
  if (result.satisfied() && !o.out.empty()) {
    try {
      harness::write_test(harness::to_records(result.test), o.out);
    } catch (const harness::TestFileError& e) {
      throw IoError(e.what());
    }
  }
  const auto& s = result.stats;
  nlohmann::json stats{{"outcome", rl::to_string(s.outcome)}, {"episodes", s.episodes},
                       {"steps", s.steps},                    {"wallTimeMs", s.wall_ms},
                       {"seed", s.seed}};
  std::cout << stats.dump() << '\n';
  return result.satisfied() ? kOk : kUnsatisfied;
}

int cmd_replay(const Options& o) {
  const auto formula = load_formula(o.common);
  const auto model = load(o.common);
  const auto test = harness::read_test(o.test);

  const auto r = harness::replay(model, formula, test, o.common.seed);
  for (const auto& s : r.steps)
    std::cout << "k=" << s.k << "  " << s.action << "  L=" << s.labels.to_string()
              << "  phi=" << s.formula.to_string() << "  r=" << s.reward << '\n';
  const char* verdict = r.verdict == ltl::Verdict::Kind::True    ? "true"
                        : r.verdict == ltl::Verdict::Kind::False ? "false"
                                                                 : "undetermined";
  std::cout << "verdict: " << verdict << '\n';
  if (r.skipped > 0) std::cout << "unexecuted actions: " << r.skipped << '\n';

  bool ok = r.satisfied();
  if (o.times > 1) {
    const auto rel = harness::replay_many(model, formula, test, o.times, o.common.seed);
    std::cout << "satisfied: " << rel.satisfied << "/" << rel.runs << '\n';
    ok = rel.satisfied == rel.runs;
  }
  return ok ? kOk : kUnsatisfied;
}

int cmd_experiment(const Options& o) {
  const auto formula = load_formula(o.common);
  const auto model = load(o.common);

  harness::ExperimentSpec spec;
  spec.engine = engine(o);
  spec.config = learner(o);
  spec.repetitions = o.reps;
  spec.seed_base = o.common.seed;
  spec.threads = o.threads;
  const auto runs = harness::run_experiment(model, formula, spec);

  if (o.csv.empty()) {
    harness::write_csv(std::cout, runs, !o.no_wall_time);
  } else {
    auto out = open_out(o.csv);
    harness::write_csv(out, runs, !o.no_wall_time);
  }
  const auto summary = harness::summarize(runs);
  if (o.summary.empty()) {
    harness::write_summary(std::cerr, summary);
  } else {
    auto out = open_out(o.summary);
    harness::write_summary(out, summary);
  }
  return kOk;
}

int cmd_parse(const Options& o) {
  std::cout << load_formula(o.common).to_string() << '\n';
  return kOk;
}

int cmd_needle(const Options& o) {
  const harness::NeedleShape shape{o.depth, o.decoys};
  if (!o.level.empty()) {
    std::cout << harness::needle_formula(o.level.front(), shape) << '\n';
    return kOk;
  }
  const auto doc = harness::needle_model(shape);
  env::model_from_json(doc);
  if (o.out.empty()) {
    std::cout << doc.dump(2) << '\n';
  } else {
    auto out = open_out(o.out);
    out << doc.dump(2) << '\n';
  }
  return kOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"LTL-guided test generation over simulated GUI models"};
  app.require_subcommand(1);
  Options o;

  auto* gen = app.add_subcommand("generate", "search for a test satisfying a formula");
  add_common(gen, o.common);
  add_learner(gen, o);
  gen->add_option("--out", o.out, "write the test here on success");
  gen->add_option("--log", o.log, "episode log (JSON lines)");

  auto* rep = app.add_subcommand("replay", "run a test file and report its verdict");
  add_common(rep, o.common);
  rep->add_option("--test", o.test, "test file")->required();
  rep->add_option("--times", o.times, "repeat and report the satisfaction rate")
      ->check(CLI::PositiveNumber);

  auto* exp = app.add_subcommand("experiment", "seeded repetitions with CSV output");
  add_common(exp, o.common);
  add_learner(exp, o);
  exp->add_option("--reps", o.reps, "repetitions")->check(CLI::PositiveNumber)->capture_default_str();
  exp->add_option("--threads", o.threads, "worker threads, 0 for all cores")->capture_default_str();
  exp->add_option("--csv", o.csv, "CSV output (default stdout)");
  exp->add_option("--summary", o.summary, "summary output (default stderr)");
  exp->add_flag("--no-wall-time", o.no_wall_time, "write 0 in the wallTimeMs column");

  auto* parse = app.add_subcommand("parse", "print a formula in canonical form");
  parse->add_option("--formula", o.common.formula, "LTL formula");
  parse->add_option("--formula-file", o.common.formula_file, "file holding the formula");

  auto* needle = app.add_subcommand("needle", "write the synthetic needle model or its formula");
  needle->add_option("--depth", o.depth, "pages between Home and Goal")->capture_default_str();
  needle->add_option("--decoys", o.decoys, "wrong clicks per page")->capture_default_str();
  needle->add_option("--level", o.level, "print the formula of detail level a, b or c")
      ->check(CLI::IsMember({"a", "b", "c"}));
  needle->add_option("--out", o.out, "model output (default stdout)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kOk : kUsage;
  }

  try {
    if (gen->parsed()) return cmd_generate(o);
    if (rep->parsed()) return cmd_replay(o);
    if (exp->parsed()) return cmd_experiment(o);
    if (parse->parsed()) return cmd_parse(o);
    if (needle->parsed()) return cmd_needle(o);
  } catch (const CLI::Error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const ltl::ParseError& e) {
    std::cerr << "formula error: " << e.what() << '\n';
    return kFormula;
  } catch (const env::ModelError& e) {
    std::cerr << "model error: " << e.what() << '\n';
    return kModel;
  } catch (const env::ActionNotEnabled& e) {
    std::cerr << "replay error: " << e.what() << '\n';
    return kNotEnabled;
  } catch (const harness::TestFileError& e) {
    std::cerr << "test file error: " << e.what() << '\n';
    return kIo;
  } catch (const IoError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kIo;
  } catch (const rl::ConfigError& e) {
    std::cerr << "config error: " << e.what() << '\n';
    return kUsage;
  }
  return kUsage;
}
