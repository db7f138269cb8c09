#include <gtest/gtest.h>

#include <algorithm>
#include <random>

#include "random_model.hpp"
#include "sbc/model.hpp"
#include "vm_tables.hpp"

namespace sbc {
namespace {

SystemModel ping_model() {
  SystemModel m;
  m.name = "M";
  m.agents = {{AgentKind::actor, "A", std::nullopt}, {AgentKind::block, "B", std::nullopt}};
  m.channels = {{"ping", {{Direction::in, "x", "Int"}}}};
  Region r;
  r.id = "R";
  r.initial = "s1";
  r.states = {"s1", "s2"};
  r.transitions = {{"s1", {"A", "ping", "B"}, "s2"}, {"s2", {"A", "ping", "B"}, "s1"}};
  m.regions.push_back(r);
  return m;
}

std::vector<Rule> rules(const std::vector<Diagnostic>& diags) {
  std::vector<Rule> out;
  for (const auto& d : diags) out.push_back(d.rule);
  return out;
}

TEST(Validate, VendingMachineIsValid) {
  EXPECT_TRUE(validate(testing::vm::load_model()).empty());
}

TEST(Validate, MinimalModelIsValid) { EXPECT_TRUE(validate(ping_model()).empty()); }

TEST(Validate, TransitionToUndeclaredState) {
  SystemModel m = ping_model();
  m.regions[0].transitions = {{"s1", {"A", "ping", "B"}, "s9"}};
  const auto diags = validate(m);
  ASSERT_EQ(diags.size(), 1u);
  EXPECT_EQ(diags[0].rule, Rule::undeclared_state);
  EXPECT_EQ(diags[0].location.scope, Location::Scope::transition);
  EXPECT_EQ(diags[0].location.region, "R");
  EXPECT_EQ(diags[0].location.row, 0u);
}

TEST(Validate, CalleeMustBeBlock) {
  SystemModel m = ping_model();
  m.regions[0].transitions[1].interaction.callee = "A";
  const auto diags = validate(m);
  ASSERT_EQ(diags.size(), 1u);
  EXPECT_EQ(diags[0].rule, Rule::callee_not_block);
  EXPECT_EQ(rule_code(diags[0].rule), "CALLEE_NOT_BLOCK");
  EXPECT_EQ(diags[0].location.row, 1u);
}

TEST(Validate, InitialMustBeAState) {
  SystemModel m = ping_model();
  m.regions[0].initial = "s9";
  EXPECT_EQ(rules(validate(m)), std::vector<Rule>{Rule::initial_not_in_states});
}

TEST(Validate, ChannelOverloadRejected) {
  SystemModel m = ping_model();
  m.channels.push_back({"ping", {}});
  EXPECT_EQ(rules(validate(m)), std::vector<Rule>{Rule::channel_overload});

  m.channels.back() = m.channels.front();
  EXPECT_EQ(rules(validate(m)), std::vector<Rule>{Rule::duplicate_channel});
}

TEST(Validate, DuplicateParameterNames) {
  SystemModel m = ping_model();
  m.channels[0].params.push_back({Direction::out, "x", "Real"});
  EXPECT_EQ(rules(validate(m)), std::vector<Rule>{Rule::duplicate_param});
}

TEST(Validate, AgentIdsUniqueAcrossKinds) {
  SystemModel m = ping_model();
  m.agents.push_back({AgentKind::block, "A", std::nullopt});
  EXPECT_EQ(rules(validate(m)), std::vector<Rule>{Rule::duplicate_agent});
}

TEST(Validate, StatesDisjointAcrossRegions) {
  SystemModel m = ping_model();
  Region other = m.regions[0];
  other.id = "R2";
  m.regions.push_back(other);
  EXPECT_EQ(rules(validate(m)),
            (std::vector<Rule>{Rule::state_collision, Rule::state_collision}));

  m.regions[1].id = "R";
  auto r = rules(validate(m));
  EXPECT_NE(std::find(r.begin(), r.end(), Rule::duplicate_region_id), r.end());
}

TEST(Validate, DuplicateRowRejected) {
  SystemModel m = ping_model();
  m.regions[0].transitions.push_back(m.regions[0].transitions[0]);
  const auto diags = validate(m);
  ASSERT_EQ(diags.size(), 1u);
  EXPECT_EQ(diags[0].rule, Rule::duplicate_row);
  EXPECT_EQ(diags[0].location.row, 2u);
}

TEST(Validate, UndeclaredReferencesAreDiagnosedNotThrown) {
  SystemModel m = ping_model();
  m.regions[0].transitions[0].interaction = {"Nobody", "nothing", "Nowhere"};
  EXPECT_EQ(rules(validate(m)), (std::vector<Rule>{Rule::undeclared_agent,
                                                   Rule::undeclared_channel,
                                                   Rule::undeclared_agent}));
}

TEST(Validate, SelfLoopsAndEmptyParamsAreLegal) {
  SystemModel m = ping_model();
  m.channels.push_back({"tick", {}});
  m.regions[0].transitions.push_back({"s1", {"B", "tick", "B"}, "s1"});
  EXPECT_TRUE(validate(m).empty());
}

TEST(Validate, GeneratedModelsAreValid) {
  std::mt19937_64 rng(7);
  for (int i = 0; i < 300; ++i) {
    const SystemModel m = testing::random_valid_model(rng);
    ASSERT_TRUE(validate(m).empty()) << "model " << i;
  }
}

// Single mutations of a valid model each produce at least one diagnostic:
// validate() == [] implies the invariants hold.
TEST(Validate, MutationsAreCaught) {
  std::mt19937_64 rng(11);
  int checked = 0;
  for (int i = 0; i < 300; ++i) {
    SystemModel m = testing::random_valid_model(rng);
    if (m.regions.empty() || m.regions[0].transitions.empty()) continue;
    ++checked;
    Transition& t = m.regions[0].transitions[0];
    switch (i % 5) {
      case 0:
        t.target = "nowhere";
        break;
      case 1:
        for (const Agent& a : m.agents) {
          if (a.kind == AgentKind::actor) t.interaction.callee = a.id;
        }
        break;
      case 2:
        t.interaction.channel = "undeclared";
        break;
      case 3:
        m.regions[0].transitions.push_back(t);
        break;
      case 4:
        m.channels.push_back({m.channels[0].name, {{Direction::inout, "zz", "T"}}});
        break;
    }
    EXPECT_FALSE(validate(m).empty()) << "mutation " << i % 5;
  }
  EXPECT_GT(checked, 100);
}

TEST(Classify, TableRows) {
  const SystemModel vm = testing::vm::load_model();
  EXPECT_EQ(classify(vm, {"Customer", "acceptCoin", "CoinReceptacle"}), InteractionType::type1);
  EXPECT_EQ(classify(vm, {"CoinReceptacle", "depositCoin", "CoinStore"}),
            InteractionType::type2);
  EXPECT_EQ(classify(vm, {"Vendor", "refillChangeCoin", "CoinStore"}), InteractionType::type1);
  EXPECT_THROW(classify(vm, {"Ghost", "acceptCoin", "CoinStore"}), std::out_of_range);
}

TEST(Classify, Type1IffCallerIsActor) {
  std::mt19937_64 rng(3);
  for (int i = 0; i < 200; ++i) {
    const SystemModel m = testing::random_valid_model(rng);
    for (const Region& r : m.regions) {
      for (const Transition& t : r.transitions) {
        const bool actor = m.find_agent(t.interaction.caller)->kind == AgentKind::actor;
        EXPECT_EQ(classify(m, t.interaction) == InteractionType::type1, actor);
      }
    }
  }
}

TEST(Compose, VendingMachineHas21Rows) {
  const SystemModel vm = testing::vm::load_model();
  const ComposedSystem sys = compose(vm.regions);
  EXPECT_EQ(sys.rows.size(), 21u);
  std::vector<std::size_t> per_region;
  for (const Region& r : vm.regions) {
    per_region.push_back(static_cast<std::size_t>(std::count_if(
        sys.rows.begin(), sys.rows.end(), [&](const SystemRow& row) { return row.region == r.id; })));
  }
  EXPECT_EQ(per_region, (std::vector<std::size_t>{4, 6, 9, 1, 1}));
}

TEST(Compose, EmptyAndSingle) {
  EXPECT_TRUE(compose(std::span<const Region>{}).rows.empty());

  const SystemModel m = ping_model();
  const ComposedSystem sys = compose(m.regions);
  ASSERT_EQ(sys.rows.size(), m.regions[0].transitions.size());
  for (std::size_t i = 0; i < sys.rows.size(); ++i) {
    EXPECT_EQ(sys.rows[i].transition, m.regions[0].transitions[i]);
    EXPECT_EQ(sys.rows[i].region, "R");
  }
}

TEST(Compose, Errors) {
  const SystemModel m = ping_model();
  std::vector<Region> regions{m.regions[0], m.regions[0]};
  try {
    compose(regions);
    FAIL() << "expected CompositionError";
  } catch (const CompositionError& e) {
    EXPECT_EQ(e.rule(), Rule::duplicate_region_id);
  }
  regions[1].id = "R2";
  try {
    compose(regions);
    FAIL() << "expected CompositionError";
  } catch (const CompositionError& e) {
    EXPECT_EQ(e.rule(), Rule::state_collision);
  }
}

TEST(Compose, AssociativeAndCountPreserving) {
  std::mt19937_64 rng(5);
  for (int i = 0; i < 200; ++i) {
    const SystemModel m = testing::random_valid_model(rng);
    const ComposedSystem all = compose(m.regions);
    std::size_t total = 0;
    for (const Region& r : m.regions) total += r.transitions.size();
    EXPECT_EQ(all.rows.size(), total);

    for (std::size_t split = 0; split <= m.regions.size(); ++split) {
      std::span<const Region> regions(m.regions);
      const ComposedSystem left = compose(regions.first(split));
      const ComposedSystem right = compose(regions.subspan(split));
      EXPECT_EQ(compose(left, right), all);
    }
  }
}

TEST(ReachabilityLint, VendingMachineClean) {
  EXPECT_TRUE(reachability_lint(testing::vm::load_model()).empty());
}

TEST(ReachabilityLint, IsolatedStateWarned) {
  SystemModel m = ping_model();
  m.regions[0].transitions.clear();
  m.regions[0].states = {"a", "b"};
  m.regions[0].initial = "a";
  const auto diags = reachability_lint(m);
  ASSERT_EQ(diags.size(), 1u);
  EXPECT_EQ(diags[0].rule, Rule::unreachable_state);
  EXPECT_EQ(diags[0].severity, Severity::warning);
  EXPECT_NE(diags[0].message.find("'b'"), std::string::npos);
}

TEST(ReachabilityLint, CycleClean) {
  SystemModel m = ping_model();
  m.regions[0].states = {"a", "b"};
  m.regions[0].initial = "a";
  m.regions[0].transitions = {{"a", {"A", "ping", "B"}, "b"}, {"b", {"A", "ping", "B"}, "a"}};
  EXPECT_TRUE(reachability_lint(m).empty());
}

}  // namespace
}  // namespace sbc
