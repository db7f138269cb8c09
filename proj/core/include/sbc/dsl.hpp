#ifndef SBC_DSL_HPP
#define SBC_DSL_HPP

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "sbc/model.hpp"

namespace sbc::dsl {

/// 1-based position of a token in the source text.
struct SourceSpan {
  std::size_t line = 1;
  std::size_t column = 1;
  std::size_t length = 0;

  bool operator==(const SourceSpan&) const = default;
};

struct ParseDiagnostic {
  SourceSpan span;
  std::string message;
  std::string code;  // LEX_ERROR or SYNTAX_ERROR
};

/// Spans of the declarations that produced each model element, parallel to
/// the model's vectors. Lets callers map a Diagnostic back to the file.
struct SourceMap {
  SourceSpan system;
  std::vector<SourceSpan> agents;
  std::vector<SourceSpan> channels;
  std::vector<SourceSpan> regions;
  std::vector<std::vector<SourceSpan>> transitions;

  SourceSpan locate(const Location& loc) const;
};

struct ParseResult {
  std::optional<SystemModel> model;
  SourceMap source_map;
  std::vector<ParseDiagnostic> diagnostics;

  bool ok() const { return model.has_value(); }
};

/// Parses `.itg` text. Stops at the first lexical or syntax error.
///
///   model      := "system" IDENT decl* region*
///   decl       := ("actor" | "block") IDENT STRING? | "channel" IDENT "(" paramlist? ")"
///   paramlist  := param ("," param)*
///   param      := ("in" | "out" | "inout") IDENT ":" IDENT
///   region     := "region" IDENT "initial" IDENT "{" trans* "}"
///   trans      := IDENT "->" IDENT ":" IDENT IDENT IDENT
///
/// Keywords are contextual. A region's state set is the declared initial
/// state plus every state named by its transitions.
ParseResult parse(std::string_view text);

/// Canonical text form; parse(print(m)) == m for every valid model.
std::string print(const SystemModel& model);

}  // namespace sbc::dsl

#endif  // SBC_DSL_HPP
