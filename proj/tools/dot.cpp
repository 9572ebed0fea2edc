#include "dot.hpp"

#include <cctype>
#include <optional>
#include <set>
#include <sstream>

namespace coxar::dot {

ParseError::ParseError(const std::string& what, std::size_t line, std::size_t column)
    : std::invalid_argument(what + " at line " + std::to_string(line) + ", column " + std::to_string(column)),
      line_(line),
      column_(column) {}

namespace {

std::string quote(const std::string& s) {
  std::string out = "\"";
  for (char c : s) {
    if (c == '"' || c == '\\') out += '\\';
    if (c == '\n') {
      out += "\\n";
      continue;
    }
    out += c;
  }
  return out + '"';
}

void write_attributes(std::ostringstream& os, const Attributes& attributes) {
  if (attributes.empty()) return;
  os << " [";
  bool first = true;
  for (const auto& [key, value] : attributes) {
    os << (first ? "" : ", ") << key << '=' << quote(value);
    first = false;
  }
  os << ']';
}

enum class Kind { Id, Arrow, LBrace, RBrace, LBracket, RBracket, Equals, Comma, Semicolon, End };

struct Token {
  Kind kind;
  std::string text;
  std::size_t line;
  std::size_t column;
};

class Lexer {
 public:
  explicit Lexer(std::string_view text) : text_(text) {}

  Token next() {
    skip_blank();
    const std::size_t line = line_, column = column_;
    if (pos_ >= text_.size()) return {Kind::End, "", line, column};
    const char c = text_[pos_];
    auto single = [&](Kind kind) {
      advance();
      return Token{kind, std::string(1, c), line, column};
    };
    switch (c) {
      case '{': return single(Kind::LBrace);
      case '}': return single(Kind::RBrace);
      case '[': return single(Kind::LBracket);
      case ']': return single(Kind::RBracket);
      case '=': return single(Kind::Equals);
      case ',': return single(Kind::Comma);
      case ';': return single(Kind::Semicolon);
      default: break;
    }
    if (c == '-' && pos_ + 1 < text_.size() && text_[pos_ + 1] == '>') {
      advance();
      advance();
      return {Kind::Arrow, "->", line, column};
    }
    if (c == '"') return quoted(line, column);
    if (bare(c)) {
      std::string word;
      while (pos_ < text_.size() && bare(text_[pos_]) && !arrow_ahead()) {
        word += text_[pos_];
        advance();
      }
      return {Kind::Id, word, line, column};
    }
    throw ParseError(std::string("unexpected character '") + c + "'", line, column);
  }

 private:
  static bool bare(char c) { return std::isalnum(static_cast<unsigned char>(c)) || c == '_' || c == '.' || c == '-'; }
  bool arrow_ahead() const { return text_[pos_] == '-' && pos_ + 1 < text_.size() && text_[pos_ + 1] == '>'; }

  void advance() {
    if (text_[pos_] == '\n') {
      ++line_;
      column_ = 1;
    } else {
      ++column_;
    }
    ++pos_;
  }

  void skip_blank() {
    while (pos_ < text_.size()) {
      if (std::isspace(static_cast<unsigned char>(text_[pos_]))) {
        advance();
      } else if (text_.substr(pos_, 2) == "//") {
        while (pos_ < text_.size() && text_[pos_] != '\n') advance();
      } else {
        break;
      }
    }
  }

  Token quoted(std::size_t line, std::size_t column) {
    advance();
    std::string value;
    while (true) {
      if (pos_ >= text_.size() || text_[pos_] == '\n') throw ParseError("unterminated string", line, column);
      const char c = text_[pos_];
      if (c == '"') {
        advance();
        return {Kind::Id, value, line, column};
      }
      if (c == '\\') {
        const std::size_t escape_line = line_, escape_column = column_;
        advance();
        if (pos_ >= text_.size()) throw ParseError("unterminated string", line, column);
        const char e = text_[pos_];
        if (e == 'n') value += '\n';
        else if (e == '"' || e == '\\') value += e;
        else throw ParseError(std::string("unknown escape '\\") + e + "'", escape_line, escape_column);
        advance();
        continue;
      }
      value += c;
      advance();
    }
  }

  std::string_view text_;
  std::size_t pos_ = 0;
  std::size_t line_ = 1;
  std::size_t column_ = 1;
};

class Parser {
 public:
  explicit Parser(std::string_view text) : lexer_(text) { shift(); }

  Graph graph() {
    const Token head = expect(Kind::Id, "'digraph'");
    if (head.text != "digraph") throw ParseError("expected 'digraph'", head.line, head.column);
    Graph g;
    g.name = expect(Kind::Id, "graph name").text;
    expect(Kind::LBrace, "'{'");
    std::set<std::string> declared;
    while (current_.kind != Kind::RBrace) {
      const Token first = expect(Kind::Id, "node id or '}'");
      if (current_.kind == Kind::Arrow) {
        shift();
        const Token second = expect(Kind::Id, "edge target");
        for (const Token* end : {&first, &second})
          if (!declared.count(end->text)) throw ParseError("undeclared node \"" + end->text + "\"", end->line, end->column);
        g.edges.push_back({first.text, second.text, attributes()});
      } else {
        if (!declared.insert(first.text).second)
          throw ParseError("duplicate node \"" + first.text + "\"", first.line, first.column);
        g.nodes.push_back({first.text, attributes()});
      }
      expect(Kind::Semicolon, "';'");
    }
    shift();
    if (current_.kind != Kind::End) throw ParseError("trailing input after '}'", current_.line, current_.column);
    return g;
  }

 private:
  void shift() { current_ = lexer_.next(); }

  Token expect(Kind kind, const char* what) {
    if (current_.kind != kind) {
      const std::string found = current_.kind == Kind::End ? "end of input" : "'" + current_.text + "'";
      throw ParseError(std::string("expected ") + what + ", found " + found, current_.line, current_.column);
    }
    Token t = current_;
    shift();
    return t;
  }

  Attributes attributes() {
    Attributes out;
    if (current_.kind != Kind::LBracket) return out;
    shift();
    while (true) {
      const Token key = expect(Kind::Id, "attribute name");
      expect(Kind::Equals, "'='");
      const Token value = expect(Kind::Id, "attribute value");
      if (!out.emplace(key.text, value.text).second)
        throw ParseError("repeated attribute '" + key.text + "'", key.line, key.column);
      if (current_.kind == Kind::Comma) {
        shift();
        continue;
      }
      expect(Kind::RBracket, "',' or ']'");
      return out;
    }
  }

  Lexer lexer_;
  Token current_{Kind::End, "", 1, 1};
};

}  // namespace

std::string write(const Graph& graph) {
  std::ostringstream os;
  os << "digraph " << quote(graph.name) << " {\n";
  for (const auto& n : graph.nodes) {
    os << "  " << quote(n.id);
    write_attributes(os, n.attributes);
    os << ";\n";
  }
  for (const auto& e : graph.edges) {
    os << "  " << quote(e.from) << " -> " << quote(e.to);
    write_attributes(os, e.attributes);
    os << ";\n";
  }
  os << "}\n";
  return os.str();
}

Graph parse(std::string_view text) { return Parser(text).graph(); }

}  // namespace coxar::dot
