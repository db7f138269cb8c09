#ifndef SBC_MODEL_HPP
#define SBC_MODEL_HPP

#include <cstddef>
#include <optional>
#include <set>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace sbc {

enum class Direction { in, out, inout };

std::string_view to_string(Direction d);
std::optional<Direction> parse_direction(std::string_view text);

/// True for `[A-Za-z_][A-Za-z0-9_]*`.
bool is_identifier(std::string_view text);

struct Parameter {
  Direction direction = Direction::in;
  std::string name;
  std::string ptype;

  bool operator==(const Parameter&) const = default;
  auto operator<=>(const Parameter&) const = default;
};

/// A channel name together with its ordered parameter list.
struct ChannelSignature {
  std::string name;
  std::vector<Parameter> params;

  bool operator==(const ChannelSignature&) const = default;
};

enum class AgentKind { actor, block };

std::string_view to_string(AgentKind k);

struct Agent {
  AgentKind kind = AgentKind::block;
  std::string id;
  std::optional<std::string> display;

  /// Display name when present, id otherwise.
  const std::string& label() const { return display ? *display : id; }

  bool operator==(const Agent&) const = default;
};

/// A handshake `caller --channel--> callee`. Referenced by id.
struct Interaction {
  std::string caller;
  std::string channel;
  std::string callee;

  bool operator==(const Interaction&) const = default;
  auto operator<=>(const Interaction&) const = default;
};

/// One row of a region's transition relation.
struct Transition {
  std::string source;
  Interaction interaction;
  std::string target;

  bool operator==(const Transition&) const = default;
  auto operator<=>(const Transition&) const = default;
};

struct Region {
  std::string id;
  std::set<std::string> states;
  std::string initial;
  std::vector<Transition> transitions;

  bool operator==(const Region&) const = default;
};

/// A system ITG: declarations plus orthogonal regions.
struct SystemModel {
  std::string name;
  std::vector<Agent> agents;
  std::vector<ChannelSignature> channels;
  std::vector<Region> regions;

  const Agent* find_agent(std::string_view id) const;
  const ChannelSignature* find_channel(std::string_view name) const;
  std::optional<std::size_t> region_index(std::string_view id) const;

  bool operator==(const SystemModel&) const = default;
};

// ---------------------------------------------------------------------------
// Diagnostics

enum class Severity { error, warning };

enum class Rule {
  invalid_identifier,
  duplicate_agent,
  duplicate_channel,
  channel_overload,
  duplicate_param,
  duplicate_region_id,
  initial_not_in_states,
  undeclared_state,
  state_collision,
  duplicate_row,
  undeclared_agent,
  undeclared_channel,
  callee_not_block,
  unreachable_state,
};

/// Upper-case rule code, e.g. "CALLEE_NOT_BLOCK".
std::string_view rule_code(Rule r);

/// What a diagnostic points at. `index` is the position in the owning
/// declaration list (agents, channels or regions); `row` is the transition
/// index inside the region when scope == transition.
struct Location {
  enum class Scope { model, agent, channel, region, transition };
  Scope scope = Scope::model;
  std::size_t index = 0;
  std::size_t row = 0;
  std::string region;

  bool operator==(const Location&) const = default;
};

struct Diagnostic {
  Severity severity = Severity::error;
  Rule rule{};
  Location location;
  std::string message;

  bool operator==(const Diagnostic&) const = default;
};

/// Checks every well-formedness rule and returns all violations in model
/// order. Never throws on malformed references.
std::vector<Diagnostic> validate(const SystemModel& model);

/// Warns for each state unreachable from its region's initial state.
std::vector<Diagnostic> reachability_lint(const SystemModel& model);

// ---------------------------------------------------------------------------
// Interaction classes

enum class InteractionType { type1, type2 };

/// type1 when the caller is an actor, type2 when it is a block.
InteractionType classify(const Agent& caller);
/// Resolves the caller in `model`. Throws std::out_of_range if unknown.
InteractionType classify(const SystemModel& model, const Interaction& interaction);

// ---------------------------------------------------------------------------
// Orthogonal composition

struct SystemRow {
  std::string region;
  Transition transition;

  bool operator==(const SystemRow&) const = default;
};

/// The system transition relation: region-tagged disjoint union of the
/// per-region relations, in region then row order.
struct ComposedSystem {
  std::vector<std::string> region_ids;
  std::set<std::string> states;
  std::vector<SystemRow> rows;

  bool operator==(const ComposedSystem&) const = default;
};

class CompositionError : public std::runtime_error {
 public:
  CompositionError(Rule rule, const std::string& what)
      : std::runtime_error(what), rule_(rule) {}
  Rule rule() const noexcept { return rule_; }

 private:
  Rule rule_;
};

/// Throws CompositionError (state_collision / duplicate_region_id).
ComposedSystem compose(std::span<const Region> regions);
/// lhs ∥ rhs. Same error contract.
ComposedSystem compose(const ComposedSystem& lhs, const ComposedSystem& rhs);

}  // namespace sbc

#endif  // SBC_MODEL_HPP
