#include <gtest/gtest.h>

#include <algorithm>
#include <random>
#include <set>

#include "json.hpp"
#include "ltlrl/env/labeling.hpp"
#include "ltlrl/env/model_io.hpp"
#include "ltlrl/env/session.hpp"
#include "support/generators.hpp"

using namespace ltlrl;
using namespace ltlrl::env;
using nlohmann::json;

namespace {

std::shared_ptr<const AppModel> chesswalk() {
  static auto m = std::make_shared<const AppModel>(load_model(LTLRL_MODELS_DIR "/chesswalk.json"));
  return m;
}

const GuiAction& find(const std::vector<GuiAction>& actions, const std::string& display) {
  auto it = std::find_if(actions.begin(), actions.end(),
                         [&](const GuiAction& a) { return a.display() == display; });
  if (it == actions.end()) throw std::runtime_error("no action " + display);
  return *it;
}

json minimal() {
  return json::parse(R"({
    "initial": {"MainActivity": "main"},
    "states": [
      {"id": "main", "attributes": {"activity": "MainActivity", "package": "x"},
       "widgets": [{"objectID": "0:0", "text": "Go", "bounds": [0, 0, 100, 100]}],
       "actions": [{"type": "click", "on": "0:0", "transitions": [{"to": "main", "weight": 1}]}]}
    ]
  })");
}

void expect_model_error(const json& doc, const std::string& fragment) {
  try {
    model_from_json(doc);
    ADD_FAILURE() << "expected ModelError containing '" << fragment << "'";
  } catch (const ModelError& e) {
    EXPECT_NE(std::string(e.what()).find(fragment), std::string::npos) << e.what();
  }
}

}  // namespace

TEST(LoadModel, ChesswalkStates) {
  std::set<std::string> ids;
  for (const auto& s : chesswalk()->states()) ids.insert(s.id);
  EXPECT_EQ(ids, (std::set<std::string>{"main", "about", "game", "settings", "settings_muted",
                                        "browser", "outside"}));
  EXPECT_TRUE(chesswalk()->dont_care().is_dont_care());
  EXPECT_TRUE(chesswalk()->dont_care().attributes.empty());
  EXPECT_TRUE(chesswalk()->dont_care().widgets.empty());
}

TEST(LoadModel, SaveLoadRoundTrip) {
  const json once = model_to_json(*chesswalk());
  const json twice = model_to_json(model_from_json(once));
  EXPECT_EQ(once, twice);
  const auto path = std::filesystem::temp_directory_path() / "ltlrl_roundtrip.json";
  save_model(*chesswalk(), path);
  EXPECT_EQ(model_to_json(load_model(path)), once);
  std::filesystem::remove(path);
}

TEST(LoadModel, MinimalIsValid) { EXPECT_NO_THROW(model_from_json(minimal())); }

TEST(LoadModel, WeightsMustSumToOne) {
  json doc = minimal();
  doc["states"][0]["actions"][0]["transitions"][0]["weight"] = 0.9;
  expect_model_error(doc, "weights sum to");
}

TEST(LoadModel, ValidationErrors) {
  json doc = minimal();
  doc["states"] = json::array();
  expect_model_error(doc, "no states");

  doc = minimal();
  doc["states"][0]["actions"][0]["transitions"][0]["to"] = "nowhere";
  expect_model_error(doc, "dangling transition target 'nowhere'");

  doc = minimal();
  doc["states"].push_back(doc["states"][0]);
  expect_model_error(doc, "duplicate state id 'main'");

  doc = minimal();
  doc["states"][0]["attributes"].erase("package");
  expect_model_error(doc, "lacks the 'package' attribute");

  doc = minimal();
  doc["states"][0]["widgets"][0]["bounds"] = {0, 0, 100, 900};
  expect_model_error(doc, "outside the screen");

  doc = minimal();
  doc["states"][0]["widgets"][0]["bounds"] = {10, 10, 10, 50};
  expect_model_error(doc, "degenerate bounds");

  doc = minimal();
  doc["states"][0]["actions"] = json::array();
  expect_model_error(doc, "no enabled action");

  doc = minimal();
  doc["states"][0]["actions"].push_back(
      {{"type", "reinitialize"}, {"params", {"MainActivity"}}, {"transitions", {{{"to", "main"}}}}});
  expect_model_error(doc, "only enabled in the don't-care state");

  doc = minimal();
  doc["states"][0]["actions"].push_back(
      {{"type", "click"}, {"params", {"a", "b"}}, {"transitions", {{{"to", "main"}}}}});
  expect_model_error(doc, "two integer coordinates");

  doc = minimal();
  doc["states"][0]["actions"].push_back(doc["states"][0]["actions"][0]);
  expect_model_error(doc, "declared twice");

  doc = minimal();
  doc["states"][0]["actions"][0]["on"] = "9:9";
  expect_model_error(doc, "unknown widget '9:9'");

  doc = minimal();
  doc["states"][0]["actions"][0]["transitions"][0]["weight"] = -1;
  expect_model_error(doc, "positive");

  doc = minimal();
  doc["initial"] = {{"MainActivity", "ghost"}};
  expect_model_error(doc, "unknown state 'ghost'");
}

TEST(LoadModel, MalformedJsonReportsOffset) {
  try {
    parse_model("{\"states\": [");
    FAIL();
  } catch (const ModelError& e) {
    EXPECT_NE(std::string(e.what()).find("malformed JSON at byte"), std::string::npos);
  }
  EXPECT_THROW(load_model("/nonexistent/model.json"), ModelError);
}

TEST(LoadModel, ClickCoordinatesBindToWidget) {
  json doc = minimal();
  doc["states"][0]["actions"].push_back(
      {{"type", "click"}, {"params", {50, 50}}, {"transitions", {{{"to", "main"}}}}});
  doc["states"][0]["actions"].erase(0);
  const AppModel m = model_from_json(doc);
  const auto& a = m.state(0).actions.at(0).action;
  EXPECT_EQ(a.target, "0:0");
  EXPECT_EQ(a.detail, "Go");
}

TEST(EnabledActions, DontCareOffersOnlyReinitialize) {
  EnvSession s(chesswalk(), 1);
  const auto& actions = s.enabled_actions();
  ASSERT_EQ(actions.size(), 1u);
  EXPECT_EQ(actions[0].type, "reinitialize");
  EXPECT_EQ(actions[0].display(), "reinitialize MainActivity");
}

TEST(EnabledActions, MainScreenActions) {
  EnvSession s(chesswalk(), 1);
  s.execute(s.enabled_actions()[0]);
  const auto& actions = s.enabled_actions();
  EXPECT_NO_THROW(find(actions, "click 239 669"));
  EXPECT_NO_THROW(find(actions, "back"));
  EXPECT_NO_THROW(find(actions, "pauseresume"));
  EXPECT_TRUE(std::is_sorted(actions.begin(), actions.end(), [](const auto& a, const auto& b) {
    return a.signature() < b.signature();
  }));
}

TEST(EnabledActions, NoReinitializeOutsideDontCare) {
  for (const auto& st : chesswalk()->states())
    for (const auto& a : chesswalk()->enabled_actions(st)) EXPECT_NE(a.type, "reinitialize");
}

TEST(Execute, ChesswalkTransitions) {
  EnvSession s(chesswalk(), 3);
  EXPECT_TRUE(s.at_dont_care());
  EXPECT_EQ(s.execute(s.enabled_actions()[0]).id, "main");
  EXPECT_EQ(s.execute(find(s.enabled_actions(), "pauseresume")).id, "main");
  EXPECT_EQ(s.execute(find(s.enabled_actions(), "click 239 669")).id, "about");
  EXPECT_EQ(s.execute(find(s.enabled_actions(), "back")).id, "main");
  EXPECT_EQ(s.step_count(), 4u);
  s.reset();
  EXPECT_TRUE(s.at_dont_care());
  EXPECT_EQ(s.step_count(), 4u);
}

TEST(Execute, RejectsActionNotEnabled) {
  EnvSession s(chesswalk(), 3);
  GuiAction back{"back", {}, "", ""};
  EXPECT_THROW(s.execute(back), ActionNotEnabled);
  EXPECT_EQ(s.step_count(), 0u);
}

TEST(Execute, SeededStochasticTransitionsRepeat) {
  auto flaky = std::make_shared<const AppModel>(load_model(LTLRL_MODELS_DIR "/flaky.json"));
  auto run = [&](std::uint64_t seed) {
    EnvSession s(flaky, seed);
    std::vector<std::string> seen;
    for (int i = 0; i < 200; ++i) {
      s.reset();
      s.execute(s.enabled_actions()[0]);
      seen.push_back(s.execute(find(s.enabled_actions(), "click 240 130")).id);
    }
    return seen;
  };
  const auto a = run(11);
  EXPECT_EQ(a, run(11));
  const auto detail = std::count(a.begin(), a.end(), "detail");
  EXPECT_GT(detail, 110);
  EXPECT_LT(detail, 170);
}

TEST(StateLabeling, ActivityAtoms) {
  const std::vector<ltl::AtomicProposition> alphabet{fixtures::P(), fixtures::Q()};
  const auto& m = *chesswalk();
  EXPECT_EQ(state_labeling(m.state(*m.find_state("main")), alphabet), ltl::Labeling{fixtures::P()});
  EXPECT_EQ(state_labeling(m.state(*m.find_state("outside")), alphabet), ltl::Labeling{});
  EXPECT_EQ(state_labeling(m.state(*m.find_state("main")), {}), ltl::Labeling{});
  EXPECT_EQ(state_labeling(m.dont_care(), alphabet), ltl::Labeling{});
}

TEST(StateLabeling, WidgetKeys) {
  const auto& m = *chesswalk();
  const ltl::AtomicProposition text("text", ltl::Match::Contains, "About");
  const ltl::AtomicProposition oid("objectID", ltl::Match::Equals, "0:0:0:1");
  const ltl::AtomicProposition on("checked", ltl::Match::Equals, "true");
  const ltl::AtomicProposition off("checked", ltl::Match::Equals, "false");
  const std::vector<ltl::AtomicProposition> alphabet{text, oid, on, off};
  EXPECT_EQ(state_labeling(m.state(*m.find_state("main")), alphabet), (ltl::Labeling{text, oid}));
  EXPECT_EQ(state_labeling(m.state(*m.find_state("settings")), alphabet), ltl::Labeling{on});
  EXPECT_EQ(state_labeling(m.state(*m.find_state("settings_muted")), alphabet), ltl::Labeling{off});
}

TEST(StateLabeling, ContextualAttributes) {
  auto flaky = load_model(LTLRL_MODELS_DIR "/flaky.json");
  const ltl::AtomicProposition crashed("crashed", ltl::Match::Equals, "true");
  EXPECT_EQ(state_labeling(flaky.state(*flaky.find_state("error")), std::vector{crashed}),
            ltl::Labeling{crashed});
  EXPECT_TRUE(state_labeling(flaky.state(*flaky.find_state("main")), std::vector{crashed}).empty());
}

TEST(ActionLabeling, TypeDetailAndObjectId) {
  EnvSession s(chesswalk(), 1);
  const ltl::AtomicProposition click_atom("actionType", ltl::Match::Equals, "click");
  const std::vector<ltl::AtomicProposition> clicks{click_atom};
  EXPECT_TRUE(action_labeling(s.enabled_actions()[0], clicks).empty());

  s.execute(s.enabled_actions()[0]);
  const ltl::AtomicProposition back("actionType", ltl::Match::Equals, "back");
  EXPECT_EQ(action_labeling(find(s.enabled_actions(), "back"), std::vector{back}),
            ltl::Labeling{back});

  const ltl::AtomicProposition about("actionDetail", ltl::Match::Contains, "About");
  const ltl::AtomicProposition oid("actionObjectID", ltl::Match::Equals, "0:0:0:1");
  const auto& click = find(s.enabled_actions(), "click 239 669");
  EXPECT_EQ(action_labeling(click, std::vector{about, oid, click_atom}),
            (ltl::Labeling{about, oid, click_atom}));
  EXPECT_TRUE(action_labeling(find(s.enabled_actions(), "back"), std::vector{about}).empty());
}

TEST(LabelingProperty, MonotoneInAlphabet) {
  std::vector<ltl::AtomicProposition> pool{
      fixtures::P(), fixtures::Q(),
      {"activity", ltl::Match::Equals, "MainActivity"},
      {"text", ltl::Match::Contains, "e"},
      {"objectID", ltl::Match::Contains, "0:0"},
      {"checked", ltl::Match::Equals, "true"},
      {"package", ltl::Match::Equals, "chesswalk"},
      {"actionType", ltl::Match::Equals, "click"},
      {"actionType", ltl::Match::Equals, "back"},
      {"actionDetail", ltl::Match::Contains, "o"},
      {"actionObjectID", ltl::Match::Contains, "0:0"}};
  std::mt19937_64 rng(5);
  std::size_t cases = 0;
  for (int trial = 0; trial < 300; ++trial) {
    std::vector<ltl::AtomicProposition> small, big;
    for (const auto& a : pool) {
      const auto r = rng() % 3;
      if (r == 0) small.push_back(a);
      if (r != 2) big.push_back(a);
    }
    for (const auto& st : chesswalk()->states()) {
      const auto ls = state_labeling(st, small);
      const auto lb = state_labeling(st, big);
      for (const auto& a : ls) EXPECT_TRUE(lb.contains(a));
      for (const auto& act : chesswalk()->enabled_actions(st)) {
        const auto as = action_labeling(act, small);
        const auto ab = action_labeling(act, big);
        for (const auto& a : as) EXPECT_TRUE(ab.contains(a));
        ++cases;
      }
    }
  }
  EXPECT_GT(cases, 1000u);
}
