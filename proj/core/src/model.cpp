#include "sbc/model.hpp"

#include <algorithm>
#include <deque>
#include <map>

namespace sbc {

std::string_view to_string(Direction d) {
  switch (d) {
    case Direction::in:
      return "in";
    case Direction::out:
      return "out";
    case Direction::inout:
      return "inout";
  }
  return "in";
}

std::optional<Direction> parse_direction(std::string_view text) {
  if (text == "in") return Direction::in;
  if (text == "out") return Direction::out;
  if (text == "inout") return Direction::inout;
  return std::nullopt;
}

std::string_view to_string(AgentKind k) {
  return k == AgentKind::actor ? "actor" : "block";
}

bool is_identifier(std::string_view text) {
  if (text.empty()) return false;
  auto alpha = [](char c) {
    return (c >= 'a' && c <= 'z') || (c >= 'A' && c <= 'Z') || c == '_';
  };
  if (!alpha(text.front())) return false;
  return std::all_of(text.begin() + 1, text.end(), [&](char c) {
    return alpha(c) || (c >= '0' && c <= '9');
  });
}

const Agent* SystemModel::find_agent(std::string_view id) const {
  auto it = std::find_if(agents.begin(), agents.end(),
                         [&](const Agent& a) { return a.id == id; });
  return it == agents.end() ? nullptr : &*it;
}

const ChannelSignature* SystemModel::find_channel(std::string_view name) const {
  auto it = std::find_if(channels.begin(), channels.end(),
                         [&](const ChannelSignature& c) { return c.name == name; });
  return it == channels.end() ? nullptr : &*it;
}

std::optional<std::size_t> SystemModel::region_index(std::string_view id) const {
  for (std::size_t i = 0; i < regions.size(); ++i) {
    if (regions[i].id == id) return i;
  }
  return std::nullopt;
}

std::string_view rule_code(Rule r) {
  switch (r) {
    case Rule::invalid_identifier:
      return "INVALID_IDENTIFIER";
    case Rule::duplicate_agent:
      return "DUPLICATE_AGENT";
    case Rule::duplicate_channel:
      return "DUPLICATE_CHANNEL";
    case Rule::channel_overload:
      return "CHANNEL_OVERLOAD";
    case Rule::duplicate_param:
      return "DUPLICATE_PARAM";
    case Rule::duplicate_region_id:
      return "DUPLICATE_REGION_ID";
    case Rule::initial_not_in_states:
      return "INITIAL_NOT_IN_STATES";
    case Rule::undeclared_state:
      return "UNDECLARED_STATE";
    case Rule::state_collision:
      return "STATE_COLLISION";
    case Rule::duplicate_row:
      return "DUPLICATE_ROW";
    case Rule::undeclared_agent:
      return "UNDECLARED_AGENT";
    case Rule::undeclared_channel:
      return "UNDECLARED_CHANNEL";
    case Rule::callee_not_block:
      return "CALLEE_NOT_BLOCK";
    case Rule::unreachable_state:
      return "UNREACHABLE_STATE";
  }
  return "UNKNOWN";
}

namespace {

class DiagnosticSink {
 public:
  void add(Rule rule, Location loc, std::string message,
           Severity severity = Severity::error) {
    out_.push_back(Diagnostic{severity, rule, std::move(loc), std::move(message)});
  }
  std::vector<Diagnostic> take() { return std::move(out_); }

 private:
  std::vector<Diagnostic> out_;
};

Location at_agent(std::size_t i) { return {Location::Scope::agent, i, 0, {}}; }
Location at_channel(std::size_t i) { return {Location::Scope::channel, i, 0, {}}; }
Location at_region(std::size_t i, const Region& r) {
  return {Location::Scope::region, i, 0, r.id};
}
Location at_row(std::size_t i, const Region& r, std::size_t row) {
  return {Location::Scope::transition, i, row, r.id};
}

std::string quoted(std::string_view s) { return "'" + std::string(s) + "'"; }

void check_identifier(DiagnosticSink& sink, std::string_view text,
                      std::string_view what, const Location& loc) {
  if (!is_identifier(text)) {
    sink.add(Rule::invalid_identifier, loc,
             std::string(what) + " " + quoted(text) + " is not a valid identifier");
  }
}

void check_agents(const SystemModel& model, DiagnosticSink& sink) {
  std::set<std::string> seen;
  for (std::size_t i = 0; i < model.agents.size(); ++i) {
    const Agent& a = model.agents[i];
    check_identifier(sink, a.id, "agent id", at_agent(i));
    if (!seen.insert(a.id).second) {
      sink.add(Rule::duplicate_agent, at_agent(i),
               "agent " + quoted(a.id) + " is declared more than once");
    }
  }
}

void check_channels(const SystemModel& model, DiagnosticSink& sink) {
  std::map<std::string, std::size_t> first;
  for (std::size_t i = 0; i < model.channels.size(); ++i) {
    const ChannelSignature& c = model.channels[i];
    check_identifier(sink, c.name, "channel name", at_channel(i));

    std::set<std::string> names;
    for (const Parameter& p : c.params) {
      check_identifier(sink, p.name, "parameter name", at_channel(i));
      check_identifier(sink, p.ptype, "parameter type", at_channel(i));
      if (!names.insert(p.name).second) {
        sink.add(Rule::duplicate_param, at_channel(i),
                 "parameter " + quoted(p.name) + " repeated in channel " + quoted(c.name));
      }
    }

    auto [it, inserted] = first.emplace(c.name, i);
    if (inserted) continue;
    if (model.channels[it->second].params == c.params) {
      sink.add(Rule::duplicate_channel, at_channel(i),
               "channel " + quoted(c.name) + " is declared more than once");
    } else {
      sink.add(Rule::channel_overload, at_channel(i),
               "channel " + quoted(c.name) + " is redeclared with a different parameter list");
    }
  }
}

void check_transition(const SystemModel& model, const Region& region,
                      std::size_t ri, std::size_t row, const Transition& t,
                      DiagnosticSink& sink) {
  const Location loc = at_row(ri, region, row);
  for (const std::string* s : {&t.source, &t.target}) {
    if (!region.states.contains(*s)) {
      sink.add(Rule::undeclared_state, loc,
               "state " + quoted(*s) + " is not a state of region " + quoted(region.id));
    }
  }
  const Interaction& in = t.interaction;
  if (model.find_agent(in.caller) == nullptr) {
    sink.add(Rule::undeclared_agent, loc, "caller " + quoted(in.caller) + " is not declared");
  }
  if (model.find_channel(in.channel) == nullptr) {
    sink.add(Rule::undeclared_channel, loc, "channel " + quoted(in.channel) + " is not declared");
  }
  const Agent* callee = model.find_agent(in.callee);
  if (callee == nullptr) {
    sink.add(Rule::undeclared_agent, loc, "callee " + quoted(in.callee) + " is not declared");
  } else if (callee->kind != AgentKind::block) {
    sink.add(Rule::callee_not_block, loc,
             "callee " + quoted(in.callee) + " is an actor; callees must be blocks");
  }
}

void check_regions(const SystemModel& model, DiagnosticSink& sink) {
  std::set<std::string> region_ids;
  std::map<std::string, std::string> owner;  // state -> first region declaring it
  for (std::size_t ri = 0; ri < model.regions.size(); ++ri) {
    const Region& r = model.regions[ri];
    check_identifier(sink, r.id, "region id", at_region(ri, r));
    if (!region_ids.insert(r.id).second) {
      sink.add(Rule::duplicate_region_id, at_region(ri, r),
               "region " + quoted(r.id) + " is declared more than once");
    }
    if (!r.states.contains(r.initial)) {
      sink.add(Rule::initial_not_in_states, at_region(ri, r),
               "initial state " + quoted(r.initial) + " is not a state of region " + quoted(r.id));
    }
    for (const std::string& s : r.states) {
      check_identifier(sink, s, "state id", at_region(ri, r));
      auto [it, inserted] = owner.emplace(s, r.id);
      if (!inserted) {
        sink.add(Rule::state_collision, at_region(ri, r),
                 "state " + quoted(s) + " is shared by regions " + quoted(it->second) +
                     " and " + quoted(r.id));
      }
    }

    std::set<Transition> rows;
    for (std::size_t row = 0; row < r.transitions.size(); ++row) {
      const Transition& t = r.transitions[row];
      check_transition(model, r, ri, row, t, sink);
      if (!rows.insert(t).second) {
        sink.add(Rule::duplicate_row, at_row(ri, r, row),
                 "transition repeats an earlier row of region " + quoted(r.id));
      }
    }
  }
}

}  // namespace

std::vector<Diagnostic> validate(const SystemModel& model) {
  DiagnosticSink sink;
  if (!is_identifier(model.name)) {
    sink.add(Rule::invalid_identifier, {},
             "system name " + quoted(model.name) + " is not a valid identifier");
  }
  check_agents(model, sink);
  check_channels(model, sink);
  check_regions(model, sink);
  return sink.take();
}

std::vector<Diagnostic> reachability_lint(const SystemModel& model) {
  DiagnosticSink sink;
  for (std::size_t ri = 0; ri < model.regions.size(); ++ri) {
    const Region& r = model.regions[ri];
    std::multimap<std::string, std::string> edges;
    for (const Transition& t : r.transitions) edges.emplace(t.source, t.target);

    std::set<std::string> seen{r.initial};
    std::deque<std::string> work{r.initial};
    while (!work.empty()) {
      const std::string s = work.front();
      work.pop_front();
      auto [lo, hi] = edges.equal_range(s);
      for (auto it = lo; it != hi; ++it) {
        if (seen.insert(it->second).second) work.push_back(it->second);
      }
    }
    for (const std::string& s : r.states) {
      if (!seen.contains(s)) {
        sink.add(Rule::unreachable_state, at_region(ri, r),
                 "state " + quoted(s) + " is unreachable from initial state " +
                     quoted(r.initial),
                 Severity::warning);
      }
    }
  }
  return sink.take();
}

InteractionType classify(const Agent& caller) {
  return caller.kind == AgentKind::actor ? InteractionType::type1 : InteractionType::type2;
}

InteractionType classify(const SystemModel& model, const Interaction& interaction) {
  const Agent* caller = model.find_agent(interaction.caller);
  if (caller == nullptr) {
    throw std::out_of_range("unknown caller '" + interaction.caller + "'");
  }
  return classify(*caller);
}

ComposedSystem compose(const ComposedSystem& lhs, const ComposedSystem& rhs) {
  ComposedSystem out = lhs;
  for (const std::string& id : rhs.region_ids) {
    if (std::find(out.region_ids.begin(), out.region_ids.end(), id) != out.region_ids.end()) {
      throw CompositionError(Rule::duplicate_region_id, "region '" + id + "' composed twice");
    }
    out.region_ids.push_back(id);
  }
  for (const std::string& s : rhs.states) {
    if (!out.states.insert(s).second) {
      throw CompositionError(Rule::state_collision,
                             "state '" + s + "' belongs to more than one region");
    }
  }
  out.rows.insert(out.rows.end(), rhs.rows.begin(), rhs.rows.end());
  return out;
}

ComposedSystem compose(std::span<const Region> regions) {
  ComposedSystem out;
  for (const Region& r : regions) {
    ComposedSystem single;
    single.region_ids.push_back(r.id);
    single.states = r.states;
    single.rows.reserve(r.transitions.size());
    for (const Transition& t : r.transitions) single.rows.push_back({r.id, t});
    out = compose(out, single);
  }
  return out;
}

}  // namespace sbc
