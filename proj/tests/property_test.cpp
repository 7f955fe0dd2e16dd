#include <gtest/gtest.h>

#include <memory>

#include "ltlrl/env/model_io.hpp"
#include "ltlrl/harness/needle.hpp"
#include "support/properties.hpp"

using namespace ltlrl;
using namespace ltlrl::fixtures;

namespace {

std::shared_ptr<const env::AppModel> model_file(const char* name) {
  return std::make_shared<const env::AppModel>(env::load_model(std::string(LTLRL_MODELS_DIR "/") + name));
}

std::vector<std::shared_ptr<const env::AppModel>> all_models() {
  return {model_file("chesswalk.json"), model_file("flaky.json"),
          std::make_shared<const env::AppModel>(env::model_from_json(harness::needle_model()))};
}

void expect_holds(const PropertyResult& r) {
  EXPECT_GT(r.cases, 0u);
  EXPECT_EQ(r.violations, 0u) << r.first;
}

}  // namespace

TEST(Property, QValuesStayWithinRho) { expect_holds(q_clamp(11, 200)); }

TEST(Property, PolicyIsADistribution) { expect_holds(policy_normalization(12, 2000)); }

TEST(Property, AnnealingNeverIncreases) { expect_holds(annealing_monotonicity(13, 50)); }

TEST(Property, SimplifyIsIdempotent) { expect_holds(simplify_idempotence(14, 2000)); }

TEST(Property, PrunedActionsAlwaysFalsify) { expect_holds(pruning_soundness(all_models(), 15, 150)); }

TEST(Property, ProgressionStepIsExact) { expect_holds(progression_exactness(16, 300)); }

TEST(Property, StepInvariants) { expect_holds(step_invariants(17, 2000)); }

TEST(Property, TailRespectsBound) { expect_holds(tail_bound(18, 200)); }

TEST(Property, SessionsAreDeterministic) {
  for (const auto& m : all_models()) expect_holds(env_determinism(m, 19, 100));
}
