#include <gtest/gtest.h>
#include <sys/wait.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <functional>
#include <set>
#include <sstream>

#include "json.hpp"
#include "ltlrl/env/model_io.hpp"
#include "ltlrl/env/session.hpp"
#include "ltlrl/harness/episode_log.hpp"
#include "ltlrl/harness/experiment.hpp"
#include "ltlrl/harness/needle.hpp"
#include "ltlrl/harness/replay.hpp"
#include "ltlrl/harness/test_file.hpp"
#include "ltlrl/ltl/parser.hpp"

using namespace ltlrl;
using namespace ltlrl::harness;
namespace fs = std::filesystem;

namespace {

const char* const kPhi0 =
    "X ([activity~Main] U ([activity~About] & X ([activity~About] U [activity~Main])))";

std::shared_ptr<const env::AppModel> chesswalk() {
  static auto m =
      std::make_shared<const env::AppModel>(env::load_model(LTLRL_MODELS_DIR "/chesswalk.json"));
  return m;
}

std::vector<ActionRecord> script(std::initializer_list<std::vector<std::string>> steps) {
  std::vector<ActionRecord> out;
  for (const auto& s : steps) out.push_back({s[0], {s.begin() + 1, s.end()}});
  return out;
}

const auto kEpisode3 = script({{"reinitialize", "MainActivity"}, {"click", "239", "669"}, {"back"}});
const auto kEpisode1 = script({{"reinitialize", "MainActivity"}, {"pauseresume"}, {"back"}});

fs::path temp(const std::string& name) { return fs::temp_directory_path() / ("ltlrl_" + name); }

std::string slurp(const fs::path& p) {
  std::ifstream in(p);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

int run_cli(const std::string& args) {
  const std::string cmd = std::string(LTLRL_CLI_PATH) + " " + args + " >/dev/null 2>&1";
  const int status = std::system(cmd.c_str());
  return WIFEXITED(status) ? WEXITSTATUS(status) : -1;
}

std::string models(const std::string& name) { return std::string(LTLRL_MODELS_DIR) + "/" + name; }

}  // namespace

// --- test files -------------------------------------------------------------

TEST(TestFile, RoundTrip) {
  const auto path = temp("roundtrip_test.json");
  write_test(kEpisode3, path);
  EXPECT_EQ(read_test(path), kEpisode3);
  fs::remove(path);
}

TEST(TestFile, Errors) {
  EXPECT_THROW(read_test("/nonexistent/test.json"), TestFileError);
  EXPECT_THROW(test_from_json(nlohmann::json::object()), TestFileError);
  EXPECT_THROW(test_from_json(nlohmann::json::parse(R"([{"params": []}])")), TestFileError);
  EXPECT_THROW(test_from_json(nlohmann::json::parse(R"([{"type": "click", "params": [1, 2]}])")),
               TestFileError);
  const auto path = temp("broken_test.json");
  std::ofstream(path) << "[{";
  EXPECT_THROW(read_test(path), TestFileError);
  fs::remove(path);
}

// --- replay -----------------------------------------------------------------

TEST(Replay, SatisfyingSequence) {
  const auto r = replay(chesswalk(), ltl::parse(kPhi0), kEpisode3);
  EXPECT_TRUE(r.satisfied());
  ASSERT_EQ(r.steps.size(), 3u);
  EXPECT_EQ(r.steps[0].reward, 0.0);
  EXPECT_DOUBLE_EQ(r.steps[1].reward, 1.0 / 3.0);
  EXPECT_EQ(r.steps[2].reward, 1.0);
}

TEST(Replay, ViolatingSequence) {
  const auto r = replay(chesswalk(), ltl::parse(kPhi0), kEpisode1);
  EXPECT_EQ(r.verdict, ltl::Verdict::Kind::False);
  ASSERT_EQ(r.steps.size(), 3u);
  EXPECT_EQ(r.steps[2].k, 2u);
  EXPECT_EQ(r.steps[2].reward, -1.0);
}

TEST(Replay, StopsOnceDecided) {
  auto longer = kEpisode3;
  longer.push_back({"pauseresume", {}});
  const auto r = replay(chesswalk(), ltl::parse(kPhi0), longer);
  EXPECT_TRUE(r.satisfied());
  EXPECT_EQ(r.skipped, 1u);
}

TEST(Replay, UndecidedWhenScriptRunsOut) {
  const auto r = replay(chesswalk(), ltl::parse(kPhi0), script({{"reinitialize", "MainActivity"}}));
  EXPECT_EQ(r.verdict, ltl::Verdict::Kind::Undetermined);
}

TEST(Replay, ModelDrift) {
  EXPECT_THROW(replay(chesswalk(), ltl::parse(kPhi0), script({{"back"}})), env::ActionNotEnabled);
}

TEST(Replay, DeterministicModelIsFullyReliable) {
  const auto rel = replay_many(chesswalk(), ltl::parse(kPhi0), kEpisode3, 10);
  EXPECT_EQ(rel.runs, 10u);
  EXPECT_EQ(rel.satisfied, 10u);
  EXPECT_EQ(rel.rate(), 1.0);
}

TEST(Replay, FlakyModelIsPartlyReliable) {
  auto flaky = std::make_shared<const env::AppModel>(env::load_model(models("flaky.json")));
  const auto test = script({{"reinitialize", "MainActivity"}, {"click", "240", "130"}});
  const auto rel = replay_many(flaky, ltl::parse("X [activity~Detail]"), test, 200, 5);
  EXPECT_GT(rel.satisfied, 110u);
  EXPECT_LT(rel.satisfied, 170u);
}

// --- logs -------------------------------------------------------------------

TEST(EpisodeLog, RecordsMirrorTableColumns) {
  rl::LearnerConfig c;
  c.seed = 7;
  std::stringstream out;
  const auto r = rl::generate(chesswalk(), ltl::parse(kPhi0), c, rl::EngineKind::Farlead,
                              [&](const rl::EpisodeLog& l) { write_episode(out, l); });
  ASSERT_TRUE(r.satisfied());
  std::size_t steps = 0, ends = 0;
  for (std::string line; std::getline(out, line);) {
    const auto j = nlohmann::json::parse(line);
    ASSERT_TRUE(j.contains("i"));
    if (j.contains("end")) {
      ++ends;
      continue;
    }
    ++steps;
    for (const char* key : {"k", "action", "L", "phi", "r", "delta"}) EXPECT_TRUE(j.contains(key)) << key;
    EXPECT_NO_THROW(ltl::parse(j.at("phi").get<std::string>()));
  }
  EXPECT_EQ(steps, r.stats.steps);
  EXPECT_EQ(ends, r.stats.episodes);
}

// --- experiments ------------------------------------------------------------

TEST(Experiment, OrderStableAcrossThreadCounts) {
  ExperimentSpec spec;
  spec.repetitions = 12;
  spec.seed_base = 100;
  spec.config.max_episodes = 50;
  spec.threads = 1;
  const auto f = ltl::parse(kPhi0);
  const auto serial = run_experiment(chesswalk(), f, spec);
  spec.threads = 4;
  const auto parallel = run_experiment(chesswalk(), f, spec);
  ASSERT_EQ(serial.size(), 12u);
  for (std::size_t i = 0; i < serial.size(); ++i) {
    EXPECT_EQ(serial[i].seed, 100 + i);
    EXPECT_EQ(serial[i].seed, parallel[i].seed);
    EXPECT_EQ(serial[i].outcome, parallel[i].outcome);
    EXPECT_EQ(serial[i].episodes, parallel[i].episodes);
    EXPECT_EQ(serial[i].steps, parallel[i].steps);
  }
}

TEST(Experiment, RejectsZeroRepetitions) {
  ExperimentSpec spec;
  spec.repetitions = 0;
  EXPECT_THROW(run_experiment(chesswalk(), ltl::parse(kPhi0), spec), std::invalid_argument);
}

TEST(Experiment, SingleRepetitionSummary) {
  ExperimentSpec spec;
  spec.repetitions = 1;
  spec.seed_base = 7;
  const auto runs = run_experiment(chesswalk(), ltl::parse(kPhi0), spec);
  rl::LearnerConfig c;
  c.seed = 7;
  const auto single = rl::generate(chesswalk(), ltl::parse(kPhi0), c);
  const auto s = summarize(runs);
  EXPECT_EQ(s.reps, 1u);
  EXPECT_EQ(s.failures, single.satisfied() ? 0u : 1u);
  EXPECT_EQ(s.max_steps, single.stats.steps);
  EXPECT_EQ(s.median_steps, single.stats.steps);
  EXPECT_EQ(s.mean_steps, double(single.stats.steps));
  EXPECT_EQ(s.mean_wall_ms, runs[0].wall_ms);
}

TEST(Csv, RowsAndRecomputableSummary) {
  ExperimentSpec spec;
  spec.repetitions = 9;
  spec.config.max_episodes = 20;
  spec.engine = rl::EngineKind::Random;
  const auto runs = run_experiment(chesswalk(), ltl::parse(kPhi0), spec);
  std::stringstream csv;
  write_csv(csv, runs);
  const std::string text = csv.str();
  EXPECT_EQ(std::count(text.begin(), text.end(), '\n'), 10);
  const auto back = read_csv(csv);
  ASSERT_EQ(back.size(), runs.size());
  const auto a = summarize(runs), b = summarize(back);
  EXPECT_EQ(a.failures, b.failures);
  EXPECT_EQ(a.max_steps, b.max_steps);
  EXPECT_EQ(a.median_steps, b.median_steps);
  EXPECT_DOUBLE_EQ(a.mean_steps, b.mean_steps);
  EXPECT_NEAR(a.max_wall_ms, b.max_wall_ms, 1e-3);
}

TEST(Csv, WithoutWallTime) {
  std::vector<rl::RunStats> runs(2);
  runs[0] = {rl::Outcome::Satisfied, 3, 10, 12.5, 4};
  runs[1] = {rl::Outcome::Exhausted, 500, 2000, 99.25, 5};
  std::stringstream out;
  write_csv(out, runs, false);
  EXPECT_EQ(out.str(),
            "rep,seed,outcome,episodes,steps,wallTimeMs\n"
            "0,4,satisfied,3,10,0\n"
            "1,5,exhausted,500,2000,0\n");
  std::stringstream timed;
  write_csv(timed, runs, true);
  EXPECT_NE(timed.str().find("0,4,satisfied,3,10,12.500\n"), std::string::npos);
}

TEST(Csv, ReadRejectsGarbage) {
  std::stringstream bad_header("a,b\n");
  EXPECT_THROW(read_csv(bad_header), std::runtime_error);
  std::stringstream bad_row("rep,seed,outcome,episodes,steps,wallTimeMs\n0,1,maybe,1,1,0\n");
  EXPECT_THROW(read_csv(bad_row), std::runtime_error);
}

TEST(Summary, Text) {
  std::vector<rl::RunStats> runs(3);
  runs[0] = {rl::Outcome::Satisfied, 1, 4, 1.0, 0};
  runs[1] = {rl::Outcome::Exhausted, 5, 20, 3.0, 1};
  runs[2] = {rl::Outcome::Satisfied, 2, 6, 2.0, 2};
  const auto s = summarize(runs);
  EXPECT_EQ(s.failures, 1u);
  EXPECT_EQ(s.median_steps, 6u);
  EXPECT_EQ(s.max_steps, 20u);
  EXPECT_DOUBLE_EQ(s.mean_steps, 10.0);
  std::stringstream out;
  write_summary(out, s);
  EXPECT_NE(out.str().find("failures: 1\n"), std::string::npos);
  EXPECT_NE(out.str().find("maxWallTimeMs: 3.000\n"), std::string::npos);
}

// --- needle model -----------------------------------------------------------

TEST(Needle, ShapeAndFormulas) {
  const auto model = env::model_from_json(needle_model());
  for (const auto& st : model.states()) {
    if (st.id == "home" || st.id == "pagea" || st.id == "pageb")
      EXPECT_GE(model.enabled_actions(st).size(), 8u) << st.id;
  }
  for (char level : {'a', 'b', 'c'}) EXPECT_NO_THROW(ltl::parse(needle_formula(level)));
  EXPECT_EQ(needle_formula('a'),
            "X ([activity~PageAActivity] & X ([activity~PageBActivity] & X ([activity~GoalActivity])))");
  EXPECT_THROW(needle_formula('d'), std::invalid_argument);
}

TEST(Needle, UniqueSatisfyingPath) {
  auto model = std::make_shared<const env::AppModel>(env::model_from_json(needle_model()));
  const auto f = ltl::parse(needle_formula('a'));
  // brute force over every 4-step action sequence
  std::size_t satisfying = 0;
  std::function<void(std::vector<ActionRecord>&)> walk = [&](std::vector<ActionRecord>& prefix) {
    if (prefix.size() == 4) {
      if (replay(model, f, prefix).satisfied()) ++satisfying;
      return;
    }
    env::EnvSession s(model, 0);
    for (const auto& r : prefix) {
      for (const auto& a : s.enabled_actions())
        if (a.display() == r.display()) {
          s.execute(a);
          break;
        }
    }
    std::vector<env::GuiAction> options = s.enabled_actions();
    for (const auto& a : options) {
      prefix.push_back({a.type, a.params});
      walk(prefix);
      prefix.pop_back();
    }
  };
  std::vector<ActionRecord> prefix;
  walk(prefix);
  EXPECT_EQ(satisfying, 1u);
}

// --- command line -----------------------------------------------------------

TEST(Cli, ExitCodesArePartitioned) {
  const std::string chess = "--model " + models("chesswalk.json");
  const std::string out = temp("cli_test.json").string();
  const std::string phi = std::string("--formula '") + kPhi0 + "'";

  const int ok = run_cli("generate " + chess + " " + phi + " --seed 7 --out " + out);
  const int exhausted = run_cli("generate " + chess +
                                " --formula 'X ([activity~Main] & [activity=NoSuchActivityZZZ])' --episodes 5");
  const int usage = run_cli("generate --bogus-flag");
  const int model = run_cli("generate --model /nonexistent.json " + phi);
  const int formula = run_cli("generate " + chess + " --formula 'X ([activity~Main] &'");

  EXPECT_EQ(ok, 0);
  EXPECT_EQ(exhausted, 1);
  EXPECT_EQ(usage, 2);
  EXPECT_EQ(model, 3);
  EXPECT_EQ(formula, 4);
  EXPECT_EQ(std::set<int>({ok, exhausted, usage, model, formula}).size(), 5u);

  EXPECT_EQ(run_cli("replay " + chess + " " + phi + " --test " + out + " --times 10"), 0);
  EXPECT_EQ(run_cli("replay " + chess + " " + phi + " --test /nonexistent/test.json"), 5);
  const auto drift = temp("cli_drift.json");
  write_test(script({{"back"}}), drift);
  EXPECT_EQ(run_cli("replay " + chess + " " + phi + " --test " + drift.string()), 6);
  EXPECT_EQ(run_cli("generate " + chess + " " + phi + " --steps 0"), 2);
  EXPECT_EQ(run_cli("generate " + chess), 2);
  fs::remove(out);
  fs::remove(drift);
}

TEST(Cli, GeneratedTestReplays) {
  const auto out = temp("cli_generated.json");
  const auto log = temp("cli_generated.jsonl");
  ASSERT_EQ(run_cli("generate --model " + models("chesswalk.json") + " --formula '" + kPhi0 +
                    "' --seed 7 --out " + out.string() + " --log " + log.string()),
            0);
  const auto test = read_test(out);
  EXPECT_TRUE(replay(chesswalk(), ltl::parse(kPhi0), test).satisfied());
  EXPECT_EQ(test.back().type, "back");
  EXPECT_FALSE(slurp(log).empty());
  fs::remove(out);
  fs::remove(log);
}
