#include "sbc/dsl.hpp"

#include <sstream>

namespace sbc::dsl {

namespace {

enum class Tok { ident, string, lparen, rparen, comma, colon, lbrace, rbrace, arrow, end };

std::string_view describe(Tok t) {
  switch (t) {
    case Tok::ident:
      return "identifier";
    case Tok::string:
      return "string";
    case Tok::lparen:
      return "'('";
    case Tok::rparen:
      return "')'";
    case Tok::comma:
      return "','";
    case Tok::colon:
      return "':'";
    case Tok::lbrace:
      return "'{'";
    case Tok::rbrace:
      return "'}'";
    case Tok::arrow:
      return "'->'";
    case Tok::end:
      return "end of input";
  }
  return "token";
}

struct Token {
  Tok kind = Tok::end;
  std::string text;  // identifier text or unescaped string contents
  SourceSpan span;
};

struct Failure {
  ParseDiagnostic diagnostic;
};

class Lexer {
 public:
  explicit Lexer(std::string_view text) : text_(text) {}

  std::vector<Token> run() {
    std::vector<Token> out;
    for (;;) {
      skip_trivia();
      Token t = next();
      const bool done = t.kind == Tok::end;
      out.push_back(std::move(t));
      if (done) return out;
    }
  }

 private:
  bool at_end() const { return pos_ >= text_.size(); }
  char peek(std::size_t ahead = 0) const {
    return pos_ + ahead < text_.size() ? text_[pos_ + ahead] : '\0';
  }

  void advance() {
    if (text_[pos_] == '\n') {
      ++line_;
      col_ = 1;
    } else {
      ++col_;
    }
    ++pos_;
  }

  void skip_trivia() {
    while (!at_end()) {
      const char c = peek();
      if (c == ' ' || c == '\t' || c == '\r' || c == '\n') {
        advance();
      } else if (c == '#') {
        while (!at_end() && peek() != '\n') advance();
      } else {
        return;
      }
    }
  }

  [[noreturn]] void fail(SourceSpan span, std::string message) {
    throw Failure{{span, std::move(message), "LEX_ERROR"}};
  }

  static bool ident_start(char c) {
    return (c >= 'a' && c <= 'z') || (c >= 'A' && c <= 'Z') || c == '_';
  }
  static bool ident_char(char c) { return ident_start(c) || (c >= '0' && c <= '9'); }

  Token next() {
    Token t;
    t.span = {line_, col_, 0};
    const std::size_t start = pos_;
    if (at_end()) {
      t.kind = Tok::end;
      return t;
    }
    const char c = peek();
    if (ident_start(c)) {
      while (!at_end() && ident_char(peek())) advance();
      t.kind = Tok::ident;
      t.text = std::string(text_.substr(start, pos_ - start));
    } else if (c == '"') {
      t.kind = Tok::string;
      advance();
      for (;;) {
        if (at_end() || peek() == '\n') {
          fail({t.span.line, t.span.column, pos_ - start}, "unterminated string literal");
        }
        const char ch = peek();
        if (ch == '"') {
          advance();
          break;
        }
        if (ch == '\\') {
          const char esc = peek(1);
          if (esc != '"' && esc != '\\') {
            fail({line_, col_, 2}, "unknown escape sequence in string literal");
          }
          advance();
          advance();
          t.text.push_back(esc);
          continue;
        }
        t.text.push_back(ch);
        advance();
      }
    } else if (c == '-' && peek(1) == '>') {
      advance();
      advance();
      t.kind = Tok::arrow;
    } else {
      switch (c) {
        case '(':
          t.kind = Tok::lparen;
          break;
        case ')':
          t.kind = Tok::rparen;
          break;
        case ',':
          t.kind = Tok::comma;
          break;
        case ':':
          t.kind = Tok::colon;
          break;
        case '{':
          t.kind = Tok::lbrace;
          break;
        case '}':
          t.kind = Tok::rbrace;
          break;
        default: {
          std::string shown = (c >= 0x20 && c < 0x7f) ? std::string(1, c) : "\\x" + hex(c);
          fail({line_, col_, 1}, "unexpected character '" + shown + "'");
        }
      }
      advance();
    }
    t.span.length = pos_ - start;
    return t;
  }

  static std::string hex(char c) {
    static constexpr char digits[] = "0123456789abcdef";
    const auto u = static_cast<unsigned char>(c);
    return {digits[u >> 4], digits[u & 0xf]};
  }

  std::string_view text_;
  std::size_t pos_ = 0;
  std::size_t line_ = 1;
  std::size_t col_ = 1;
};

class Parser {
 public:
  explicit Parser(std::vector<Token> tokens) : toks_(std::move(tokens)) {}

  SystemModel run(SourceMap& map) {
    SystemModel m;
    expect_keyword("system");
    map.system = peek().span;
    m.name = expect(Tok::ident, "system name").text;

    while (is_keyword("actor") || is_keyword("block") || is_keyword("channel")) {
      if (is_keyword("channel")) {
        map.channels.push_back(peek().span);
        m.channels.push_back(channel());
      } else {
        map.agents.push_back(peek().span);
        m.agents.push_back(agent());
      }
    }
    while (is_keyword("region")) {
      map.regions.push_back(peek().span);
      map.transitions.emplace_back();
      m.regions.push_back(region(map.transitions.back()));
    }
    if (peek().kind != Tok::end) {
      syntax_error(peek(), "expected 'actor', 'block', 'channel' or 'region'");
    }
    return m;
  }

 private:
  const Token& peek(std::size_t ahead = 0) const {
    const std::size_t i = pos_ + ahead;
    return i < toks_.size() ? toks_[i] : toks_.back();
  }
  const Token& take() {
    const Token& t = peek();
    if (pos_ < toks_.size() - 1) ++pos_;
    return t;
  }

  bool is_keyword(std::string_view kw) const {
    return peek().kind == Tok::ident && peek().text == kw;
  }

  [[noreturn]] static void syntax_error(const Token& at, const std::string& message) {
    std::string found = at.kind == Tok::ident    ? "'" + at.text + "'"
                        : at.kind == Tok::string ? "string \"" + at.text + "\""
                                                 : std::string(describe(at.kind));
    throw Failure{{at.span, message + ", found " + found, "SYNTAX_ERROR"}};
  }

  const Token& expect(Tok kind, std::string_view what) {
    if (peek().kind != kind) syntax_error(peek(), "expected " + std::string(what));
    return take();
  }

  void expect_keyword(std::string_view kw) {
    if (!is_keyword(kw)) syntax_error(peek(), "expected '" + std::string(kw) + "'");
    take();
  }

  Agent agent() {
    Agent a;
    a.kind = take().text == "actor" ? AgentKind::actor : AgentKind::block;
    a.id = expect(Tok::ident, "agent id").text;
    if (peek().kind == Tok::string) a.display = take().text;
    return a;
  }

  ChannelSignature channel() {
    take();
    ChannelSignature c;
    c.name = expect(Tok::ident, "channel name").text;
    expect(Tok::lparen, "'('");
    if (peek().kind != Tok::rparen) {
      c.params.push_back(param());
      while (peek().kind == Tok::comma) {
        take();
        c.params.push_back(param());
      }
    }
    expect(Tok::rparen, "',' or ')'");
    return c;
  }

  Parameter param() {
    Parameter p;
    const Token& dir = peek();
    auto d = dir.kind == Tok::ident ? parse_direction(dir.text) : std::nullopt;
    if (!d) syntax_error(dir, "expected parameter direction 'in', 'out' or 'inout'");
    take();
    p.direction = *d;
    p.name = expect(Tok::ident, "parameter name").text;
    expect(Tok::colon, "':'");
    p.ptype = expect(Tok::ident, "parameter type").text;
    return p;
  }

  Region region(std::vector<SourceSpan>& rows) {
    take();
    Region r;
    r.id = expect(Tok::ident, "region id").text;
    expect_keyword("initial");
    r.initial = expect(Tok::ident, "initial state").text;
    r.states.insert(r.initial);
    expect(Tok::lbrace, "'{'");
    while (peek().kind == Tok::ident) {
      // `state X` declares an otherwise unmentioned state.
      if (peek().text == "state" && peek(1).kind == Tok::ident) {
        take();
        r.states.insert(take().text);
        continue;
      }
      rows.push_back(peek().span);
      Transition t;
      t.source = take().text;
      expect(Tok::arrow, "'->'");
      t.target = expect(Tok::ident, "target state").text;
      expect(Tok::colon, "':'");
      t.interaction.caller = expect(Tok::ident, "caller").text;
      t.interaction.channel = expect(Tok::ident, "channel").text;
      t.interaction.callee = expect(Tok::ident, "callee").text;
      r.states.insert(t.source);
      r.states.insert(t.target);
      r.transitions.push_back(std::move(t));
    }
    expect(Tok::rbrace, "transition or '}'");
    return r;
  }

  std::vector<Token> toks_;
  std::size_t pos_ = 0;
};

void print_string(std::ostream& os, const std::string& s) {
  os << '"';
  for (char c : s) {
    if (c == '"' || c == '\\') os << '\\';
    os << c;
  }
  os << '"';
}

}  // namespace

SourceSpan SourceMap::locate(const Location& loc) const {
  auto pick = [](const std::vector<SourceSpan>& v, std::size_t i, SourceSpan fallback) {
    return i < v.size() ? v[i] : fallback;
  };
  switch (loc.scope) {
    case Location::Scope::model:
      return system;
    case Location::Scope::agent:
      return pick(agents, loc.index, system);
    case Location::Scope::channel:
      return pick(channels, loc.index, system);
    case Location::Scope::region:
      return pick(regions, loc.index, system);
    case Location::Scope::transition:
      if (loc.index < transitions.size()) {
        return pick(transitions[loc.index], loc.row, pick(regions, loc.index, system));
      }
      return system;
  }
  return system;
}

ParseResult parse(std::string_view text) {
  ParseResult result;
  try {
    auto tokens = Lexer(text).run();
    result.model = Parser(std::move(tokens)).run(result.source_map);
  } catch (const Failure& f) {
    result.model.reset();
    result.source_map = {};
    result.diagnostics.push_back(f.diagnostic);
  }
  return result;
}

std::string print(const SystemModel& model) {
  std::ostringstream os;
  os << "system " << model.name << '\n';

  if (!model.agents.empty() || !model.channels.empty()) os << '\n';
  for (const Agent& a : model.agents) {
    os << to_string(a.kind) << ' ' << a.id;
    if (a.display) {
      os << ' ';
      print_string(os, *a.display);
    }
    os << '\n';
  }
  for (const ChannelSignature& c : model.channels) {
    os << "channel " << c.name << '(';
    for (std::size_t i = 0; i < c.params.size(); ++i) {
      const Parameter& p = c.params[i];
      if (i > 0) os << ", ";
      os << to_string(p.direction) << ' ' << p.name << ": " << p.ptype;
    }
    os << ")\n";
  }

  for (const Region& r : model.regions) {
    std::set<std::string> mentioned{r.initial};
    for (const Transition& t : r.transitions) {
      mentioned.insert(t.source);
      mentioned.insert(t.target);
    }
    os << "\nregion " << r.id << " initial " << r.initial << " {\n";
    for (const std::string& s : r.states) {
      if (!mentioned.contains(s)) os << "  state " << s << '\n';
    }
    for (const Transition& t : r.transitions) {
      os << "  " << t.source << " -> " << t.target << " : " << t.interaction.caller << ' '
         << t.interaction.channel << ' ' << t.interaction.callee << '\n';
    }
    os << "}\n";
  }
  return os.str();
}

}  // namespace sbc::dsl
