#include "sbc/projection.hpp"

#include <set>

namespace sbc {

std::string_view to_string(ViewKind k) {
  switch (k) {
    case ViewKind::itgr:
      return "itgr";
    case ViewKind::ibdr:
      return "ibd";
    case ViewKind::smdr:
      return "smd";
    case ViewKind::adr:
      return "ad";
  }
  return "itgr";
}

bool conforms(ViewKind kind, const ViewRow& row) {
  const bool has_region = !row.region.empty();
  const bool has_source = !row.source.empty();
  const bool has_caller = !row.caller.empty();
  const bool has_channel = !row.channel.empty();
  const bool has_params = !row.params.empty();
  const bool has_callee = !row.callee.empty();
  const bool has_target = !row.target.empty();
  switch (kind) {
    case ViewKind::itgr:
      return has_source && has_caller && has_channel && has_callee && has_target;
    case ViewKind::ibdr:
      return !has_region && !has_source && has_caller && has_channel && has_callee &&
             !has_target;
    case ViewKind::smdr:
      return has_region && has_source && !has_caller && has_channel && !has_params &&
             !has_callee && has_target;
    case ViewKind::adr:
      return has_region && has_source && !has_caller && has_channel && has_callee &&
             has_target;
  }
  return false;
}

namespace {

std::vector<Parameter> params_of(const SystemModel& model, const std::string& channel) {
  const ChannelSignature* c = model.find_channel(channel);
  return c ? c->params : std::vector<Parameter>{};
}

ViewRow itgr_row(const SystemModel& model, const SystemRow& r) {
  const Transition& t = r.transition;
  return ViewRow{r.region,
                 t.source,
                 t.interaction.caller,
                 t.interaction.channel,
                 params_of(model, t.interaction.channel),
                 t.interaction.callee,
                 t.target};
}

// Appends `row` unless an identical one was already kept in `seen`.
void insert_distinct(ViewRelation& out, std::set<ViewRow>& seen, ViewRow row) {
  if (seen.insert(row).second) out.rows.push_back(std::move(row));
}

// Column selection applied per region, then orthogonal (region-tagged)
// union. Relation semantics collapse duplicates within a region; rows of
// different regions never merge because the region column differs.
template <typename Select>
ViewRelation project_per_region(const SystemModel& model, ViewKind kind, Select select) {
  ViewRelation out{kind, {}};
  std::set<ViewRow> seen;
  for (const SystemRow& r : compose(model.regions).rows) {
    insert_distinct(out, seen, select(itgr_row(model, r)));
  }
  return out;
}

}  // namespace

ViewRelation project_itgr(const SystemModel& model) {
  ViewRelation out{ViewKind::itgr, {}};
  for (const SystemRow& r : compose(model.regions).rows) {
    out.rows.push_back(itgr_row(model, r));
  }
  return out;
}

ViewRelation project_ibd(const SystemModel& model) {
  // Per-region SELECT into a bag, then SELECT DISTINCT over the whole bag.
  std::vector<ViewRow> bag;
  for (const Region& region : model.regions) {
    for (const Transition& t : region.transitions) {
      ViewRow row;
      row.caller = t.interaction.caller;
      row.channel = t.interaction.channel;
      row.params = params_of(model, t.interaction.channel);
      row.callee = t.interaction.callee;
      bag.push_back(std::move(row));
    }
  }
  ViewRelation out{ViewKind::ibdr, {}};
  std::set<ViewRow> seen;
  for (ViewRow& row : bag) insert_distinct(out, seen, std::move(row));
  return out;
}

ViewRelation project_smd(const SystemModel& model) {
  return project_per_region(model, ViewKind::smdr, [](ViewRow row) {
    row.caller.clear();
    row.params.clear();
    row.callee.clear();
    return row;
  });
}

ViewRelation project_ad(const SystemModel& model) {
  return project_per_region(model, ViewKind::adr, [](ViewRow row) {
    row.caller.clear();
    return row;
  });
}

ViewRelation project(const SystemModel& model, ViewKind kind) {
  switch (kind) {
    case ViewKind::itgr:
      return project_itgr(model);
    case ViewKind::ibdr:
      return project_ibd(model);
    case ViewKind::smdr:
      return project_smd(model);
    case ViewKind::adr:
      return project_ad(model);
  }
  return project_itgr(model);
}

}  // namespace sbc
