#include "cli.hpp"

#include <unistd.h>

#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <optional>
#include <sstream>
#include <variant>

#include "CLI11.hpp"
#include "sbc/dsl.hpp"
#include "sbc/model.hpp"
#include "sbc/projection.hpp"
#include "sbc/render.hpp"
#include "sbc/simulator.hpp"

namespace sbc::cli {

namespace {

namespace fs = std::filesystem;

std::optional<std::string> read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) return std::nullopt;
  std::ostringstream buf;
  buf << in.rdbuf();
  if (in.bad()) return std::nullopt;
  return buf.str();
}

// Writes to `<path>.tmp.<pid>` then renames, so a failed run never leaves a
// partial file behind.
bool write_atomically(const std::string& path, const std::string& content) {
  const fs::path target(path);
  fs::path tmp = target;
  tmp += ".tmp." + std::to_string(::getpid());
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    if (!out) return false;
    out << content;
    out.flush();
    if (!out) {
      std::error_code ec;
      fs::remove(tmp, ec);
      return false;
    }
  }
  std::error_code ec;
  fs::rename(tmp, target, ec);
  if (ec) {
    fs::remove(tmp, ec);
    return false;
  }
  return true;
}

class Reporter {
 public:
  Reporter(std::ostream& err, const Options& options, std::string file)
      : err_(err), color_(options.color), file_(std::move(file)) {}

  void diagnostic(const dsl::SourceSpan& span, std::string_view code, std::string_view message,
                  Severity severity = Severity::error) {
    err_ << file_ << ':' << span.line << ':' << span.column << ": ";
    if (color_) err_ << (severity == Severity::error ? "\033[1;31m" : "\033[1;33m");
    err_ << code;
    if (color_) err_ << "\033[0m";
    err_ << ": " << message << '\n';
  }

  void io_error(const std::string& path, std::string_view what) {
    err_ << path << ": error: " << what << '\n';
  }

 private:
  std::ostream& err_;
  bool color_;
  std::string file_;
};

struct Loaded {
  SystemModel model;
  dsl::SourceMap source_map;
};

// Reads, parses and validates. Returns the exit status on failure.
std::variant<Loaded, int> load(const std::string& path, std::ostream& err,
                               const Options& options, bool lint = false) {
  Reporter report(err, options, path);
  auto text = read_file(path);
  if (!text) {
    report.io_error(path, "cannot read file");
    return kIoError;
  }
  dsl::ParseResult parsed = dsl::parse(*text);
  if (!parsed.ok()) {
    for (const auto& d : parsed.diagnostics) report.diagnostic(d.span, d.code, d.message);
    return kDiagnostics;
  }
  auto diags = validate(*parsed.model);
  if (lint && diags.empty()) {
    auto warnings = reachability_lint(*parsed.model);
    diags.insert(diags.end(), warnings.begin(), warnings.end());
  }
  bool errors = false;
  for (const Diagnostic& d : diags) {
    report.diagnostic(parsed.source_map.locate(d.location), rule_code(d.rule), d.message,
                      d.severity);
    errors = errors || d.severity == Severity::error;
  }
  if (errors) return kDiagnostics;
  return Loaded{std::move(*parsed.model), std::move(parsed.source_map)};
}

// Sends `content` to `out_path` (atomically) or to `out` when no path given.
int emit(const std::string& content, const std::string& out_path, std::ostream& out,
         std::ostream& err, const Options& options) {
  if (out_path.empty() || out_path == "-") {
    out << content;
    return kSuccess;
  }
  if (!write_atomically(out_path, content)) {
    Reporter(err, options, out_path).io_error(out_path, "cannot write file");
    return kIoError;
  }
  return kSuccess;
}

std::optional<ViewKind> view_from_name(const std::string& name) {
  if (name == "ibd") return ViewKind::ibdr;
  if (name == "smd") return ViewKind::smdr;
  if (name == "ad") return ViewKind::adr;
  if (name == "itgr") return ViewKind::itgr;
  return std::nullopt;
}

std::string render_view(const SystemModel& model, ViewKind kind, const std::string& format) {
  const ViewRelation view = project(model, kind);
  if (format == "csv") return render::to_csv(view).str();
  switch (kind) {
    case ViewKind::itgr:
      return render::to_dot_itg(model).text;
    case ViewKind::ibdr:
      return render::to_dot_ibd(view, model).text;
    case ViewKind::smdr:
      return render::to_dot_smd(view, model).text;
    case ViewKind::adr:
      return render::to_dot_ad(view, model).text;
  }
  return {};
}

std::string format_trace(const SystemModel& model, const std::vector<sim::TraceStep>& trace) {
  std::string out;
  for (std::size_t i = 0; i < trace.size(); ++i) {
    const sim::TraceStep& s = trace[i];
    const Transition& t = s.transition;
    out += std::to_string(i + 1) + '\t' + model.regions[s.region].id + '\t' + t.source + '\t' +
           t.interaction.caller + '\t' + t.interaction.channel + '\t' + t.interaction.callee +
           '\t' + t.target + '\n';
  }
  return out;
}

std::string format_configuration(const SystemModel& model, const sim::Configuration& c) {
  std::string out;
  for (std::size_t i = 0; i < c.current.size(); ++i) {
    if (i > 0) out += '\t';
    out += model.regions[i].id + '=' + c.current[i];
  }
  return out;
}

std::vector<std::string> split_tabs(const std::string& line) {
  std::vector<std::string> fields;
  std::size_t start = 0;
  for (;;) {
    const std::size_t tab = line.find('\t', start);
    fields.push_back(line.substr(start, tab - start));
    if (tab == std::string::npos) return fields;
    start = tab + 1;
  }
}

struct Args {
  std::string model;
  std::string view;
  std::string format = "csv";
  std::string out;
  std::size_t steps = 100;
  std::string policy = "roundrobin";
  std::optional<std::uint64_t> seed;
  std::string trace;
  bool lint = false;
};

int cmd_validate(const Args& a, std::ostream& err, const Options& options) {
  auto loaded = load(a.model, err, options, a.lint);
  if (auto* code = std::get_if<int>(&loaded)) return *code;
  return kSuccess;
}

int cmd_project(const Args& a, std::ostream& out, std::ostream& err, const Options& options) {
  auto kind = view_from_name(a.view);
  if (!kind) {
    err << "unknown view '" << a.view << "'\n";
    return kUsage;
  }
  auto loaded = load(a.model, err, options);
  if (auto* code = std::get_if<int>(&loaded)) return *code;
  const auto& model = std::get<Loaded>(loaded).model;
  return emit(render_view(model, *kind, a.format), a.out, out, err, options);
}

int cmd_simulate(const Args& a, std::ostream& out, std::ostream& err, const Options& options) {
  sim::Policy policy = sim::Policy::round_robin();
  if (a.policy == "uniform") {
    if (!a.seed) {
      err << "--policy uniform requires --seed\n";
      return kUsage;
    }
    policy = sim::Policy::uniform(*a.seed);
  }
  auto loaded = load(a.model, err, options);
  if (auto* code = std::get_if<int>(&loaded)) return *code;
  const auto& model = std::get<Loaded>(loaded).model;
  const sim::RunResult result = sim::run(model, policy, a.steps);
  if (result.deadlocked) err << "deadlock after " << result.trace.size() << " steps\n";
  return emit(format_trace(model, result.trace), a.out, out, err, options);
}

int cmd_accepts(const Args& a, std::ostream& out, std::ostream& err, const Options& options) {
  auto loaded = load(a.model, err, options);
  if (auto* code = std::get_if<int>(&loaded)) return *code;
  const auto& model = std::get<Loaded>(loaded).model;

  auto text = read_file(a.trace);
  if (!text) {
    Reporter(err, options, a.trace).io_error(a.trace, "cannot read file");
    return kIoError;
  }
  std::vector<sim::Label> trace;
  std::istringstream lines(*text);
  std::string line;
  for (std::size_t n = 1; std::getline(lines, line); ++n) {
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty()) continue;
    auto fields = split_tabs(line);
    if (fields.size() != 3) {
      err << a.trace << ':' << n << ": expected <caller>\\t<channel>\\t<callee>\n";
      return kDiagnostics;
    }
    for (const std::string* agent : {&fields[0], &fields[2]}) {
      if (model.find_agent(*agent) == nullptr) {
        err << a.trace << ':' << n << ": unknown agent '" << *agent << "'\n";
        return kDiagnostics;
      }
    }
    if (model.find_channel(fields[1]) == nullptr) {
      err << a.trace << ':' << n << ": unknown channel '" << fields[1] << "'\n";
      return kDiagnostics;
    }
    trace.push_back({fields[0], fields[1], fields[2]});
  }

  const sim::Acceptance result = sim::accepts(model, trace);
  if (!result.accepted) {
    out << "rejected at step " << result.rejected_at << '\n';
    return kDiagnostics;
  }
  out << "accepted\n";
  for (std::size_t k = 0; k < result.witness.size(); ++k) {
    out << k << '\t' << format_configuration(model, result.witness[k]) << '\n';
  }
  return kSuccess;
}

int cmd_print(const Args& a, std::ostream& out, std::ostream& err, const Options& options) {
  Reporter report(err, options, a.model);
  auto text = read_file(a.model);
  if (!text) {
    report.io_error(a.model, "cannot read file");
    return kIoError;
  }
  dsl::ParseResult parsed = dsl::parse(*text);
  if (!parsed.ok()) {
    for (const auto& d : parsed.diagnostics) report.diagnostic(d.span, d.code, d.message);
    return kDiagnostics;
  }
  return emit(dsl::print(*parsed.model), a.out, out, err, options);
}

}  // namespace

bool color_from_env() {
  const char* env = std::getenv("SBC_ITG_COLOR");
  if (env != nullptr && std::string_view(env) == "never") return false;
  return ::isatty(STDERR_FILENO) != 0;
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err,
        const Options& options) {
  CLI::App app{"Compile, project and simulate interaction transition graph models", "sbc-itg"};
  app.require_subcommand(1);
  Args a;

  auto* validate = app.add_subcommand("validate", "Check a model and report diagnostics");
  validate->add_option("model", a.model, "Model file (.itg)")->required();
  validate->add_flag("--lint", a.lint, "Also warn about unreachable states");

  auto* project = app.add_subcommand("project", "Project a view relation from a model");
  project->add_option("model", a.model, "Model file (.itg)")->required();
  project->add_option("view", a.view, "View: ibd, smd, ad or itgr")
      ->required()
      ->check(CLI::IsMember({"ibd", "smd", "ad", "itgr"}));
  project->add_option("--format", a.format, "Output format")
      ->check(CLI::IsMember({"csv", "dot"}));
  project->add_option("--out", a.out, "Output path (default: standard output)");

  auto* simulate = app.add_subcommand("simulate", "Run the model and print a trace");
  simulate->add_option("model", a.model, "Model file (.itg)")->required();
  simulate->add_option("--steps", a.steps, "Maximum number of steps");
  simulate->add_option("--policy", a.policy, "Choice policy")
      ->check(CLI::IsMember({"uniform", "roundrobin"}));
  simulate->add_option("--seed", a.seed, "Seed for --policy uniform");
  simulate->add_option("--out", a.out, "Output path (default: standard output)");

  auto* accepts = app.add_subcommand("accepts", "Check whether the model can produce a trace");
  accepts->add_option("model", a.model, "Model file (.itg)")->required();
  accepts->add_option("trace", a.trace, "Trace file: <caller>\\t<channel>\\t<callee> per line")
      ->required();

  auto* print = app.add_subcommand("print", "Reformat a model canonically");
  print->add_option("model", a.model, "Model file (.itg)")->required();
  print->add_option("--out", a.out, "Output path (default: standard output)");

  std::vector<const char*> argv{"sbc-itg"};
  for (const auto& s : args) argv.push_back(s.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kSuccess;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kSuccess;
  } catch (const CLI::ParseError& e) {
    err << e.what() << '\n';
    return kUsage;
  }

  if (validate->parsed()) return cmd_validate(a, err, options);
  if (project->parsed()) return cmd_project(a, out, err, options);
  if (simulate->parsed()) return cmd_simulate(a, out, err, options);
  if (accepts->parsed()) return cmd_accepts(a, out, err, options);
  if (print->parsed()) return cmd_print(a, out, err, options);
  return kUsage;
}

}  // namespace sbc::cli
