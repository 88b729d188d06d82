#include "arsat/io.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

namespace arsat {

ParseError::ParseError(const std::string& message, std::size_t line, std::size_t column)
    : std::runtime_error("line " + std::to_string(line) + ", column " + std::to_string(column) +
                         ": " + message),
      line_(line),
      column_(column) {}

void SymbolTable::declare(const std::string& name, Kind kind, std::optional<std::size_t> arity,
                          std::size_t line, std::size_t column) {
  auto [it, inserted] = entries_.try_emplace(name, Entry{kind, arity});
  if (inserted) return;
  Entry& e = it->second;
  if (e.kind != kind) {
    throw ParseError("symbol '" + name + "' used both as predicate and as function", line,
                     column);
  }
  if (!arity) return;
  if (!e.arity) {
    e.arity = arity;
  } else if (*e.arity != *arity) {
    throw ParseError("arity conflict for '" + name + "': " + std::to_string(*e.arity) + " vs " +
                         std::to_string(*arity),
                     line, column);
  }
}

namespace {

void declare_term(SymbolTable& table, const Term& t) {
  if (!t.is_function()) return;
  table.declare(t.name(), SymbolTable::Kind::Function, t.arity(), 0, 0);
  for (const auto& a : t.args()) declare_term(table, a);
}

}  // namespace

SymbolTable SymbolTable::of(const std::vector<Clause>& clauses) {
  SymbolTable table;
  for (const auto& c : clauses) {
    for (const auto& atom : c.atoms()) {
      table.declare(atom.predicate, Kind::Predicate, atom.arity(), 0, 0);
      for (const auto& t : atom.args) declare_term(table, t);
    }
  }
  return table;
}

namespace {

bool ident_char(char c) {
  return std::isalnum(static_cast<unsigned char>(c)) || c == '_';
}

// Recursive-descent reader over one line.
class LineReader {
 public:
  LineReader(std::string_view text, std::size_t line, std::size_t column_offset,
             SymbolTable& symbols)
      : text_(text), line_(line), offset_(column_offset), symbols_(symbols) {}

  [[noreturn]] void fail(const std::string& message) const {
    throw ParseError(message, line_, offset_ + pos_ + 1);
  }

  void skip_space() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  bool at_end() {
    skip_space();
    return pos_ == text_.size();
  }

  bool peek(std::string_view token) {
    skip_space();
    return text_.substr(pos_, token.size()) == token;
  }

  bool accept(std::string_view token) {
    if (!peek(token)) return false;
    pos_ += token.size();
    return true;
  }

  void expect(std::string_view token) {
    if (!accept(token)) fail("expected '" + std::string(token) + "'");
  }

  void expect_end() {
    if (!at_end()) fail("unexpected '" + std::string(1, text_[pos_]) + "'");
  }

  std::string identifier() {
    skip_space();
    if (pos_ < text_.size() && text_[pos_] == '#') {
      fail("'#' names are reserved for frozen constants");
    }
    std::size_t start = pos_;
    if (pos_ == text_.size() || !std::isalpha(static_cast<unsigned char>(text_[pos_]))) {
      fail("expected an identifier");
    }
    while (pos_ < text_.size() && ident_char(text_[pos_])) ++pos_;
    return std::string(text_.substr(start, pos_ - start));
  }

  std::string symbol() {
    std::size_t column = column_here();
    std::string name = identifier();
    if (!std::islower(static_cast<unsigned char>(name[0]))) {
      throw ParseError("expected a symbol starting with a lowercase letter, got '" + name + "'",
                       line_, column);
    }
    return name;
  }

  Term term() {
    std::size_t column = column_here();
    std::string name = identifier();
    if (std::isupper(static_cast<unsigned char>(name[0]))) return Term::variable(name);
    std::vector<Term> args = arguments();
    symbols_.declare(name, SymbolTable::Kind::Function, args.size(), line_, column);
    return Term::function(name, std::move(args));
  }

  Atom atom() {
    std::size_t column = column_here();
    std::string name = identifier();
    if (!std::islower(static_cast<unsigned char>(name[0]))) {
      throw ParseError("predicate '" + name + "' must start with a lowercase letter", line_,
                       column);
    }
    std::vector<Term> args = arguments();
    symbols_.declare(name, SymbolTable::Kind::Predicate, args.size(), line_, column);
    return Atom(name, std::move(args));
  }

  std::vector<Atom> atom_list() {
    std::vector<Atom> atoms;
    skip_space();
    if (peek("->") || at_end()) return atoms;
    atoms.push_back(atom());
    while (accept(",")) atoms.push_back(atom());
    return atoms;
  }

  Clause clause() {
    std::vector<Atom> ante = atom_list();
    expect("->");
    std::vector<Atom> succ = atom_list();
    expect_end();
    return Clause(std::move(ante), std::move(succ));
  }

  std::vector<std::string> order() {
    std::vector<std::string> out;
    if (at_end()) return out;
    for (;;) {
      std::size_t column = column_here();
      std::string name = symbol();
      if (std::find(out.begin(), out.end(), name) != out.end()) {
        throw ParseError("symbol '" + name + "' listed twice in order", line_, column);
      }
      symbols_.declare(name, SymbolTable::Kind::Function, std::nullopt, line_, column);
      out.push_back(std::move(name));
      if (!accept(">")) break;
    }
    expect_end();
    return out;
  }

  RewriteRule rule() {
    Atom lhs = atom();
    expect("->");
    Atom rhs = atom();
    expect_end();
    return RewriteRule(std::move(lhs), std::move(rhs));
  }

 private:
  std::vector<Term> arguments() {
    std::vector<Term> args;
    if (!accept("(")) return args;
    args.push_back(term());
    while (accept(",")) args.push_back(term());
    expect(")");
    return args;
  }

  std::size_t column_here() {
    skip_space();
    return offset_ + pos_ + 1;
  }

  std::string_view text_;
  std::size_t pos_ = 0;
  std::size_t line_;
  std::size_t offset_;
  SymbolTable& symbols_;
};

struct Line {
  std::size_t number;
  std::string keyword;
  std::string_view body;
  std::size_t body_column;  // 0-based offset of body within the raw line
};

// Splits into non-blank, comment-stripped lines of the form `keyword: body`.
std::vector<Line> split_lines(std::string_view text) {
  std::vector<Line> out;
  std::size_t number = 0;
  while (!text.empty()) {
    ++number;
    std::size_t eol = text.find('\n');
    std::string_view raw = text.substr(0, eol);
    text = eol == std::string_view::npos ? std::string_view{} : text.substr(eol + 1);
    if (!raw.empty() && raw.back() == '\r') raw.remove_suffix(1);
    if (auto pct = raw.find('%'); pct != std::string_view::npos) raw = raw.substr(0, pct);
    std::size_t first = raw.find_first_not_of(" \t");
    if (first == std::string_view::npos) continue;
    std::size_t colon = raw.find(':', first);
    if (colon == std::string_view::npos) {
      throw ParseError("expected 'keyword:' at start of line", number, first + 1);
    }
    std::string keyword(raw.substr(first, colon - first));
    while (!keyword.empty() && std::isspace(static_cast<unsigned char>(keyword.back()))) {
      keyword.pop_back();
    }
    out.push_back({number, keyword, raw.substr(colon + 1), colon + 1});
  }
  return out;
}

std::string join_order(const std::vector<std::string>& order) {
  std::string out;
  for (std::size_t i = 0; i < order.size(); ++i) {
    if (i) out += " > ";
    out += order[i];
  }
  return out;
}

}  // namespace

Problem parse_problem(std::string_view text) {
  Problem problem;
  SymbolTable symbols;
  bool seen_order = false;
  for (const auto& line : split_lines(text)) {
    LineReader reader(line.body, line.number, line.body_column, symbols);
    if (line.keyword == "order") {
      if (seen_order) throw ParseError("duplicate order declaration", line.number, 1);
      seen_order = true;
      problem.order = reader.order();
    } else if (line.keyword == "clause") {
      problem.clauses.push_back(reader.clause());
    } else if (line.keyword == "query") {
      problem.queries.push_back(reader.clause());
    } else {
      throw ParseError("unknown keyword '" + line.keyword + "'", line.number, 1);
    }
  }
  return problem;
}

std::string serialize_problem(const Problem& problem) {
  std::string out;
  if (!problem.order.empty()) out += "order: " + join_order(problem.order) + "\n";
  for (const auto& c : problem.clauses) out += "clause: " + c.to_string() + "\n";
  for (const auto& q : problem.queries) out += "query: " + q.to_string() + "\n";
  return out;
}

Clause parse_clause(std::string_view text, SymbolTable& symbols) {
  LineReader reader(text, 1, 0, symbols);
  return reader.clause();
}

Clause parse_clause(std::string_view text) {
  SymbolTable symbols;
  return parse_clause(text, symbols);
}

OrderingContext context_for(const Problem& problem) {
  OrderingContext ctx{Precedence(problem.order)};
  ctx.precedence.extend_with(problem.clauses);
  return ctx;
}

std::string serialize_state(const SaturationState& state) {
  std::ostringstream out;
  out << "saturated: " << (state.status == SaturationStatus::Saturated ? "true" : "limit") << "\n";
  std::string order = join_order(state.ordering.precedence.symbols());
  out << "order:" << (order.empty() ? "" : " " + order) << "\n";
  std::vector<Clause> clauses = state.clauses;
  std::sort(clauses.begin(), clauses.end());
  for (const auto& c : clauses) out << "clause: " << c.to_string() << "\n";
  for (const auto& r : state.rules) out << "rule: " << r.to_string() << "\n";
  return out.str();
}

SaturationState parse_state(std::string_view text) {
  SaturationState state;
  SymbolTable symbols;
  auto lines = split_lines(text);
  if (lines.empty() || lines.front().keyword != "saturated") {
    throw ParseError("state file must start with 'saturated: true|limit'",
                     lines.empty() ? 1 : lines.front().number, 1);
  }
  bool seen_order = false;
  for (std::size_t i = 0; i < lines.size(); ++i) {
    const auto& line = lines[i];
    LineReader reader(line.body, line.number, line.body_column, symbols);
    if (line.keyword == "saturated") {
      if (i != 0) throw ParseError("duplicate header", line.number, 1);
      if (reader.accept("true")) {
        state.status = SaturationStatus::Saturated;
      } else if (reader.accept("limit")) {
        state.status = SaturationStatus::LimitReached;
      } else {
        reader.fail("expected 'true' or 'limit'");
      }
      reader.expect_end();
    } else if (line.keyword == "order") {
      if (seen_order) throw ParseError("duplicate order declaration", line.number, 1);
      seen_order = true;
      state.ordering.precedence = Precedence(reader.order());
    } else if (line.keyword == "clause") {
      state.clauses.push_back(reader.clause());
    } else if (line.keyword == "rule") {
      state.rules.insert(reader.rule());
    } else {
      throw ParseError("unknown keyword '" + line.keyword + "'", line.number, 1);
    }
  }
  state.ordering.precedence.extend_with(state.clauses);
  return state;
}

std::string serialize_certificate(const LocalCertificate& cert) {
  std::string out;
  for (const auto& a : cert.atom_universe) out += "universe: " + a.to_string() + "\n";
  for (const auto& c : cert.instances) out += "instance: " + c.to_string() + "\n";
  for (const auto& c : cert.negated_goal) out += "negated: " + c.to_string() + "\n";
  return out;
}

LocalCertificate parse_certificate(std::string_view text) {
  LocalCertificate cert;
  SymbolTable symbols;
  for (const auto& line : split_lines(text)) {
    LineReader reader(line.body, line.number, line.body_column, symbols);
    if (line.keyword == "universe") {
      cert.atom_universe.insert(reader.atom());
      reader.expect_end();
    } else if (line.keyword == "instance") {
      cert.instances.push_back(reader.clause());
    } else if (line.keyword == "negated") {
      cert.negated_goal.push_back(reader.clause());
    } else {
      throw ParseError("unknown keyword '" + line.keyword + "'", line.number, 1);
    }
  }
  return cert;
}

}  // namespace arsat
