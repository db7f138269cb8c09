#ifndef SBC_SIMULATOR_HPP
#define SBC_SIMULATOR_HPP

#include <cstdint>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "sbc/model.hpp"

namespace sbc::sim {

/// Active state of each region, indexed like SystemModel::regions.
struct Configuration {
  std::vector<std::string> current;

  bool operator==(const Configuration&) const = default;
  auto operator<=>(const Configuration&) const = default;
};

struct TraceStep {
  std::size_t region = 0;  // index into SystemModel::regions
  Transition transition;

  bool operator==(const TraceStep&) const = default;
};

struct Policy {
  enum class Kind { uniform_random, round_robin };
  Kind kind = Kind::round_robin;
  std::uint64_t seed = 0;

  static Policy uniform(std::uint64_t seed) { return {Kind::uniform_random, seed}; }
  static Policy round_robin() { return {Kind::round_robin, 0}; }
};

Configuration initial(const SystemModel& model);

/// Transitions leaving each region's active state, in region then row order.
/// Empty means deadlock.
std::vector<TraceStep> enabled(const SystemModel& model, const Configuration& config);

struct Fired {
  TraceStep step;
  Configuration next;
};

/// Mutable choice state for one policy: the generator for uniform_random,
/// the last-fired region for round_robin. One instance per run.
class Scheduler {
 public:
  explicit Scheduler(Policy policy);

  const Policy& policy() const { return policy_; }

  /// Picks one of `candidates` (non-empty) and advances internal state.
  std::size_t choose(const std::vector<TraceStep>& candidates, std::size_t region_count);

 private:
  Policy policy_;
  std::mt19937_64 rng_;
  std::optional<std::size_t> last_region_;
};

/// Fires one enabled transition chosen by `scheduler`; nullopt on deadlock.
std::optional<Fired> step(const SystemModel& model, const Configuration& config,
                          Scheduler& scheduler);

struct RunResult {
  std::vector<TraceStep> trace;
  bool deadlocked = false;
};

/// Steps from initial() until `max_steps` transitions fired or deadlock.
RunResult run(const SystemModel& model, const Policy& policy, std::size_t max_steps);

struct Label {
  std::string caller;
  std::string channel;
  std::string callee;

  bool operator==(const Label&) const = default;
  auto operator<=>(const Label&) const = default;
};

struct Acceptance {
  bool accepted = false;
  /// 1-based trace position at which no configuration could continue.
  std::size_t rejected_at = 0;
  /// initial() followed by one configuration per trace label.
  std::vector<Configuration> witness;
};

/// Breadth-first search over region interleavings for a run whose labels
/// match `trace` in order.
Acceptance accepts(const SystemModel& model, const std::vector<Label>& trace);

/// Uniform integer in [0, bound) from the raw 64-bit generator output.
/// Rejection sampling keeps the result identical across standard libraries.
std::uint64_t uniform_below(std::mt19937_64& rng, std::uint64_t bound);

}  // namespace sbc::sim

#endif  // SBC_SIMULATOR_HPP
