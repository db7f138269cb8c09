#include "sbc/simulator.hpp"

#include <limits>
#include <map>

namespace sbc::sim {

Configuration initial(const SystemModel& model) {
  Configuration c;
  c.current.reserve(model.regions.size());
  for (const Region& r : model.regions) c.current.push_back(r.initial);
  return c;
}

std::vector<TraceStep> enabled(const SystemModel& model, const Configuration& config) {
  std::vector<TraceStep> out;
  for (std::size_t ri = 0; ri < model.regions.size(); ++ri) {
    for (const Transition& t : model.regions[ri].transitions) {
      if (t.source == config.current[ri]) out.push_back({ri, t});
    }
  }
  return out;
}

std::uint64_t uniform_below(std::mt19937_64& rng, std::uint64_t bound) {
  constexpr std::uint64_t max = std::numeric_limits<std::uint64_t>::max();
  const std::uint64_t limit = max - (max % bound + 1) % bound;
  std::uint64_t x;
  do {
    x = rng();
  } while (x > limit);
  return x % bound;
}

Scheduler::Scheduler(Policy policy) : policy_(policy), rng_(policy.seed) {}

std::size_t Scheduler::choose(const std::vector<TraceStep>& candidates,
                              std::size_t region_count) {
  if (policy_.kind == Policy::Kind::uniform_random) {
    return static_cast<std::size_t>(uniform_below(rng_, candidates.size()));
  }
  const std::size_t start = last_region_ ? (*last_region_ + 1) % region_count : 0;
  for (std::size_t k = 0; k < region_count; ++k) {
    const std::size_t region = (start + k) % region_count;
    for (std::size_t i = 0; i < candidates.size(); ++i) {
      if (candidates[i].region == region) {
        last_region_ = region;
        return i;
      }
    }
  }
  return 0;  // unreachable for non-empty candidates
}

std::optional<Fired> step(const SystemModel& model, const Configuration& config,
                          Scheduler& scheduler) {
  std::vector<TraceStep> candidates = enabled(model, config);
  if (candidates.empty()) return std::nullopt;
  const std::size_t pick = scheduler.choose(candidates, model.regions.size());
  Fired fired{std::move(candidates[pick]), config};
  fired.next.current[fired.step.region] = fired.step.transition.target;
  return fired;
}

RunResult run(const SystemModel& model, const Policy& policy, std::size_t max_steps) {
  RunResult result;
  Scheduler scheduler(policy);
  Configuration config = initial(model);
  result.trace.reserve(max_steps);
  while (result.trace.size() < max_steps) {
    auto fired = step(model, config, scheduler);
    if (!fired) {
      result.deadlocked = true;
      break;
    }
    config = std::move(fired->next);
    result.trace.push_back(std::move(fired->step));
  }
  return result;
}

Acceptance accepts(const SystemModel& model, const std::vector<Label>& trace) {
  Acceptance result;
  const Configuration start = initial(model);

  // parents[k] maps each configuration reachable after k+1 labels to one
  // predecessor at level k.
  std::vector<std::map<Configuration, Configuration>> parents;
  std::vector<Configuration> frontier{start};

  for (std::size_t pos = 0; pos < trace.size(); ++pos) {
    const Label& want = trace[pos];
    std::map<Configuration, Configuration> level;
    for (const Configuration& c : frontier) {
      for (const TraceStep& s : enabled(model, c)) {
        const Interaction& in = s.transition.interaction;
        if (in.caller != want.caller || in.channel != want.channel || in.callee != want.callee) {
          continue;
        }
        Configuration next = c;
        next.current[s.region] = s.transition.target;
        level.emplace(std::move(next), c);
      }
    }
    if (level.empty()) {
      result.rejected_at = pos + 1;
      return result;
    }
    frontier.clear();
    for (const auto& [c, parent] : level) frontier.push_back(c);
    parents.push_back(std::move(level));
  }

  result.accepted = true;
  result.witness.resize(trace.size() + 1);
  result.witness[trace.size()] = frontier.front();
  for (std::size_t k = trace.size(); k > 0; --k) {
    result.witness[k - 1] = parents[k - 1].at(result.witness[k]);
  }
  return result;
}

}  // namespace sbc::sim
