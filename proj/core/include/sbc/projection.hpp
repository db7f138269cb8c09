#ifndef SBC_PROJECTION_HPP
#define SBC_PROJECTION_HPP

#include <string>
#include <string_view>
#include <vector>

#include "sbc/model.hpp"

namespace sbc {

enum class ViewKind { itgr, ibdr, smdr, adr };

std::string_view to_string(ViewKind k);

/// One row of a projected relation. Which columns are populated depends on
/// the owning view's kind; the others stay empty.
///
///   ITGR: source caller channel params callee target (region kept for provenance)
///   IBDR:        caller channel params callee
///   SMDR: region source     channel            target
///   ADR:  region source     channel params callee target
struct ViewRow {
  std::string region;
  std::string source;
  std::string caller;
  std::string channel;
  std::vector<Parameter> params;
  std::string callee;
  std::string target;

  bool operator==(const ViewRow&) const = default;
  auto operator<=>(const ViewRow&) const = default;
};

struct ViewRelation {
  ViewKind kind = ViewKind::itgr;
  std::vector<ViewRow> rows;

  bool operator==(const ViewRelation&) const = default;
};

/// Whether `row` fills exactly the columns of `kind`. Params may be empty
/// for kinds that carry them.
bool conforms(ViewKind kind, const ViewRow& row);

/// The composed system relation with parameters resolved from channel
/// declarations, one row per transition.
ViewRelation project_itgr(const SystemModel& model);

/// Distinct (caller, channel, params, callee), first-occurrence order.
ViewRelation project_ibd(const SystemModel& model);

/// Per region (source, channel, target); duplicates collapse inside a region
/// only.
ViewRelation project_smd(const SystemModel& model);

/// Per region (source, channel, params, callee, target); duplicates collapse
/// inside a region only.
ViewRelation project_ad(const SystemModel& model);

/// Dispatches on `kind`.
ViewRelation project(const SystemModel& model, ViewKind kind);

}  // namespace sbc

#endif  // SBC_PROJECTION_HPP
