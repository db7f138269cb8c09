#include "sbc/render.hpp"

#include <algorithm>
#include <cctype>
#include <set>
#include <sstream>

namespace sbc::render {

std::string params_cell(std::span<const Parameter> params) {
  std::string out;
  for (std::size_t i = 0; i < params.size(); ++i) {
    if (i > 0) out += "; ";
    out += to_string(params[i].direction);
    out += ' ';
    out += params[i].name;
    out += ": ";
    out += params[i].ptype;
  }
  return out;
}

std::vector<std::string> csv_header(ViewKind kind) {
  switch (kind) {
    case ViewKind::itgr:
      return {"state_from", "caller", "channel", "params", "callee", "state_to"};
    case ViewKind::ibdr:
      return {"caller", "channel", "params", "callee"};
    case ViewKind::smdr:
      return {"region", "state_from", "channel", "state_to"};
    case ViewKind::adr:
      return {"region", "state_from", "channel", "params", "callee", "state_to"};
  }
  return {};
}

CsvDoc to_csv(const ViewRelation& view) {
  CsvDoc doc;
  doc.header = csv_header(view.kind);
  doc.rows.reserve(view.rows.size());
  for (const ViewRow& r : view.rows) {
    switch (view.kind) {
      case ViewKind::itgr:
        doc.rows.push_back({r.source, r.caller, r.channel, params_cell(r.params), r.callee, r.target});
        break;
      case ViewKind::ibdr:
        doc.rows.push_back({r.caller, r.channel, params_cell(r.params), r.callee});
        break;
      case ViewKind::smdr:
        doc.rows.push_back({r.region, r.source, r.channel, r.target});
        break;
      case ViewKind::adr:
        doc.rows.push_back({r.region, r.source, r.channel, params_cell(r.params), r.callee, r.target});
        break;
    }
  }
  return doc;
}

std::string csv_escape(const std::string& cell) {
  if (cell.find_first_of(",\"\r\n") == std::string::npos) return cell;
  std::string out = "\"";
  for (char c : cell) {
    if (c == '"') out += '"';
    out += c;
  }
  out += '"';
  return out;
}

std::string CsvDoc::str() const {
  std::string out;
  auto line = [&out](const std::vector<std::string>& cells) {
    for (std::size_t i = 0; i < cells.size(); ++i) {
      if (i > 0) out += ',';
      out += csv_escape(cells[i]);
    }
    out += '\n';
  };
  line(header);
  for (const auto& r : rows) line(r);
  return out;
}

// ---------------------------------------------------------------------------
// DOT

namespace {

bool is_dot_keyword(const std::string& text) {
  std::string lower(text.size(), '\0');
  std::transform(text.begin(), text.end(), lower.begin(),
                 [](unsigned char c) { return static_cast<char>(std::tolower(c)); });
  return lower == "node" || lower == "edge" || lower == "graph" || lower == "digraph" ||
         lower == "subgraph" || lower == "strict";
}

std::string dot_string(const std::string& text) {
  std::string out = "\"";
  for (char c : text) {
    if (c == '"' || c == '\\') {
      out += '\\';
      out += c;
    } else if (c == '\n') {
      out += "\\n";
    } else {
      out += c;
    }
  }
  out += '"';
  return out;
}

// State nodes of one region: initial first, then in order of first mention,
// then any remaining declared states.
std::vector<std::string> ordered_states(const Region& region,
                                        const std::vector<const ViewRow*>& rows) {
  std::vector<std::string> out;
  std::set<std::string> seen;
  auto add = [&](const std::string& s) {
    if (!s.empty() && seen.insert(s).second) out.push_back(s);
  };
  add(region.initial);
  for (const ViewRow* r : rows) {
    add(r->source);
    add(r->target);
  }
  for (const std::string& s : region.states) add(s);
  return out;
}

// Shared cluster layout for the region-structured views.
template <typename EdgeLabel>
DotDoc regions_to_dot(const SystemModel& model, const std::string& graph_name,
                      const std::vector<ViewRow>& rows, EdgeLabel edge_label) {
  std::ostringstream os;
  os << "digraph " << dot_id(graph_name) << " {\n";
  os << "  rankdir=LR;\n";
  for (const Region& region : model.regions) {
    std::vector<const ViewRow*> mine;
    for (const ViewRow& r : rows) {
      if (r.region == region.id) mine.push_back(&r);
    }
    const std::string entry = region.id + ":entry";
    os << "  subgraph " << dot_id("cluster_" + region.id) << " {\n";
    os << "    label=" << dot_string(region.id) << ";\n";
    os << "    " << dot_id(entry) << " [shape=point, style=invis];\n";
    for (const std::string& s : ordered_states(region, mine)) {
      os << "    " << dot_id(s) << " [shape=circle];\n";
    }
    os << "    " << dot_id(entry) << " -> " << dot_id(region.initial) << ";\n";
    for (const ViewRow* r : mine) {
      os << "    " << dot_id(r->source) << " -> " << dot_id(r->target)
         << " [label=" << dot_string(edge_label(*r)) << "];\n";
    }
    os << "  }\n";
  }
  os << "}\n";
  return {os.str()};
}

}  // namespace

std::string dot_id(const std::string& text) {
  if (is_identifier(text) && !is_dot_keyword(text)) return text;
  return dot_string(text);
}

DotDoc to_dot_itg(const SystemModel& model) {
  return regions_to_dot(model, model.name + "_itg", project_itgr(model).rows,
                        [](const ViewRow& r) {
                          return r.caller + "." + r.channel + "→" + r.callee;
                        });
}

DotDoc to_dot_smd(const ViewRelation& view, const SystemModel& model) {
  return regions_to_dot(model, model.name + "_smd", view.rows,
                        [](const ViewRow& r) { return r.channel; });
}

DotDoc to_dot_ad(const ViewRelation& view, const SystemModel& model) {
  return regions_to_dot(model, model.name + "_ad", view.rows, [](const ViewRow& r) {
    return r.channel + " [" + params_cell(r.params) + "] " + r.callee;
  });
}

DotDoc to_dot_ibd(const ViewRelation& view, const SystemModel& model) {
  std::vector<std::string> agents;
  std::set<std::string> seen;
  for (const ViewRow& r : view.rows) {
    for (const std::string* id : {&r.caller, &r.callee}) {
      if (seen.insert(*id).second) agents.push_back(*id);
    }
  }

  std::ostringstream os;
  os << "digraph " << dot_id(model.name + "_ibd") << " {\n";
  for (const std::string& id : agents) {
    const Agent* a = model.find_agent(id);
    const bool actor = a != nullptr && a->kind == AgentKind::actor;
    os << "  " << dot_id(id) << " [label=" << dot_string(a ? a->label() : id)
       << ", shape=" << (actor ? "doubleoctagon" : "box") << "];\n";
  }
  for (const ViewRow& r : view.rows) {
    os << "  " << dot_id(r.caller) << " -> " << dot_id(r.callee) << " [label="
       << dot_string(r.channel + "(" + params_cell(r.params) + ")") << "];\n";
  }
  os << "}\n";
  return {os.str()};
}

}  // namespace sbc::render
