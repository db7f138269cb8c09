#ifndef SBC_RENDER_HPP
#define SBC_RENDER_HPP

#include <span>
#include <string>
#include <vector>

#include "sbc/model.hpp"
#include "sbc/projection.hpp"

namespace sbc::render {

struct CsvDoc {
  std::vector<std::string> header;
  std::vector<std::vector<std::string>> rows;

  /// RFC-4180-style text with LF line endings.
  std::string str() const;
};

/// `dir name: type` entries joined by "; ". Empty for no parameters.
std::string params_cell(std::span<const Parameter> params);

std::vector<std::string> csv_header(ViewKind kind);
CsvDoc to_csv(const ViewRelation& view);

/// Quotes a cell when it contains a comma, quote or line break.
std::string csv_escape(const std::string& cell);

struct DotDoc {
  std::string text;
};

/// Full system ITG, one cluster per region, edges `caller.channel→callee`.
DotDoc to_dot_itg(const SystemModel& model);
/// SMDR view, edges labelled with the channel. `model` supplies the initial
/// state of each region.
DotDoc to_dot_smd(const ViewRelation& view, const SystemModel& model);
/// ADR view, edges labelled `channel [params] callee`.
DotDoc to_dot_ad(const ViewRelation& view, const SystemModel& model);
/// IBDR view: one node per agent, one edge per row labelled `channel(params)`.
/// `model` supplies agent kinds and display names.
DotDoc to_dot_ibd(const ViewRelation& view, const SystemModel& model);

/// Bare DOT ID when `text` is one, a quoted string otherwise.
std::string dot_id(const std::string& text);

}  // namespace sbc::render

#endif  // SBC_RENDER_HPP
