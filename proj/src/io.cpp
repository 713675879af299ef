#include "ontodp/io.hpp"

#include <fstream>
#include <sstream>
#include <vector>

#include "ontodp/errors.hpp"

namespace ontodp {

namespace {

std::string_view trim(std::string_view sv) {
  while (!sv.empty() && (sv.front() == ' ' || sv.front() == '\t' || sv.front() == '\r'))
    sv.remove_prefix(1);
  while (!sv.empty() && (sv.back() == ' ' || sv.back() == '\t' || sv.back() == '\r'))
    sv.remove_suffix(1);
  return sv;
}

std::vector<std::string> split_whitespace(std::string_view sv) {
  std::vector<std::string> out;
  std::size_t i = 0;
  while (i < sv.size()) {
    while (i < sv.size() && (sv[i] == ' ' || sv[i] == '\t')) ++i;
    std::size_t start = i;
    while (i < sv.size() && sv[i] != ' ' && sv[i] != '\t') ++i;
    if (i > start) out.emplace_back(sv.substr(start, i - start));
  }
  return out;
}

std::vector<std::string_view> split_on(std::string_view sv, char sep) {
  std::vector<std::string_view> out;
  std::size_t start = 0;
  for (std::size_t i = 0; i <= sv.size(); ++i) {
    if (i == sv.size() || sv[i] == sep) {
      out.push_back(sv.substr(start, i - start));
      start = i + 1;
    }
  }
  return out;
}

bool is_comment_or_blank(std::string_view sv) {
  return sv.empty() || sv.front() == '#';
}

std::string require_token(std::string_view raw, const std::string& source,
                          std::size_t line, const char* what) {
  const std::string token{trim(raw)};
  if (!is_valid_token(token))
    throw ParseError(source, line, std::string("invalid ") + what + " '" + token + "'");
  return token;
}

// `pred(term, term)`; terms are constants or ?variables.
Atom parse_atom(std::string_view raw, const std::string& source, std::size_t line) {
  const std::string_view sv = trim(raw);
  const std::size_t open = sv.find('(');
  if (open == std::string_view::npos || sv.back() != ')')
    throw ParseError(source, line, "malformed atom '" + std::string(sv) + "'");
  Atom atom;
  atom.predicate = require_token(sv.substr(0, open), source, line, "predicate");
  const std::string_view args = sv.substr(open + 1, sv.size() - open - 2);
  const auto parts = split_on(args, ',');
  if (parts.size() != 2)
    throw ParseError(source, line, "atom '" + std::string(sv) + "' needs exactly 2 terms");
  auto parse_term = [&](std::string_view term_raw) {
    std::string term{trim(term_raw)};
    if (is_variable(term)) {
      if (!is_valid_token(std::string_view(term).substr(1)))
        throw ParseError(source, line, "invalid variable '" + term + "'");
      return term;
    }
    return require_token(term, source, line, "term");
  };
  atom.subject = parse_term(parts[0]);
  atom.object = parse_term(parts[1]);
  return atom;
}

std::ifstream open_or_throw(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError(path, 0, "cannot open file");
  return in;
}

}  // namespace

Graph parse_triples(std::istream& in, const std::string& source) {
  std::vector<Triple> triples;
  std::string line;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    const std::string_view sv = trim(line);
    if (is_comment_or_blank(sv)) continue;
    auto tokens = split_whitespace(sv);
    if (!tokens.empty() && tokens.back() == ".") tokens.pop_back();
    if (tokens.size() != 3)
      throw ParseError(source, lineno,
                       "expected 3 tokens, got " + std::to_string(tokens.size()));
    for (const std::string& token : tokens)
      if (!is_valid_token(token))
        throw ParseError(source, lineno, "invalid token '" + token + "'");
    triples.push_back({tokens[0], tokens[1], tokens[2]});
  }
  return Graph(std::move(triples));
}

Graph load_triples(const std::string& path) {
  auto in = open_or_throw(path);
  return parse_triples(in, path);
}

Schema parse_schema(std::istream& in, const std::string& source) {
  Schema schema;
  // Constraints are applied after all declarations so file order is free.
  std::vector<std::pair<std::size_t, CardinalityConstraint>> pending;
  std::string line;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    const std::string_view sv = trim(line);
    if (is_comment_or_blank(sv)) continue;
    const auto tokens = split_whitespace(sv);
    if (tokens[0] == "typePredicate") {
      if (tokens.size() != 2)
        throw ParseError(source, lineno, "typePredicate takes one name");
      schema.set_type_predicate(require_token(tokens[1], source, lineno, "predicate"));
    } else if (tokens[0] == "predicate") {
      if (tokens.size() != 5)
        throw ParseError(source, lineno,
                         "expected: predicate <name> <subjType> <objType> "
                         "<mutable|immutable>");
      PredicateSignature sig;
      sig.subject_type = require_token(tokens[2], source, lineno, "type");
      sig.object_type = require_token(tokens[3], source, lineno, "type");
      if (tokens[4] == "mutable")
        sig.is_mutable = true;
      else if (tokens[4] == "immutable")
        sig.is_mutable = false;
      else
        throw ParseError(source, lineno, "expected mutable or immutable, got '" +
                                             tokens[4] + "'");
      schema.declare_predicate(require_token(tokens[1], source, lineno, "predicate"),
                               std::move(sig));
    } else if (tokens[0] == "cardinality") {
      if (tokens.size() != 5)
        throw ParseError(source, lineno,
                         "expected: cardinality <type> <predicate> "
                         "<exactly|atMost|atLeast> <n>");
      CardinalityConstraint c;
      c.node_type = require_token(tokens[1], source, lineno, "type");
      c.predicate = require_token(tokens[2], source, lineno, "predicate");
      if (tokens[3] == "exactly")
        c.comparator = Comparator::exactly;
      else if (tokens[3] == "atMost")
        c.comparator = Comparator::at_most;
      else if (tokens[3] == "atLeast")
        c.comparator = Comparator::at_least;
      else
        throw ParseError(source, lineno,
                         "expected exactly, atMost or atLeast, got '" + tokens[3] + "'");
      try {
        c.bound = std::stoull(tokens[4]);
      } catch (const std::exception&) {
        throw ParseError(source, lineno, "invalid bound '" + tokens[4] + "'");
      }
      pending.emplace_back(lineno, std::move(c));
    } else {
      throw ParseError(source, lineno, "unknown directive '" + tokens[0] + "'");
    }
  }
  for (auto& [constraint_line, constraint] : pending) {
    try {
      schema.add_constraint(std::move(constraint));
    } catch (const SchemaViolation& e) {
      throw ParseError(source, constraint_line, e.what());
    }
  }
  return schema;
}

Schema load_schema(const std::string& path) {
  auto in = open_or_throw(path);
  return parse_schema(in, path);
}

RuleSet parse_rules(std::istream& in, const std::string& source) {
  RuleSet rules;
  std::string line;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    const std::string_view sv = trim(line);
    if (is_comment_or_blank(sv)) continue;
    const std::size_t arrow = sv.find("=>");
    if (arrow == std::string_view::npos)
      throw ParseError(source, lineno, "rule needs '=>'");
    if (sv.find("=>", arrow + 2) != std::string_view::npos)
      throw ParseError(source, lineno, "rule has more than one '=>'");
    Rule rule;
    for (std::string_view part : split_on(sv.substr(0, arrow), '&'))
      rule.body.push_back(parse_atom(part, source, lineno));
    rule.head = parse_atom(sv.substr(arrow + 2), source, lineno);
    if (rule.body.empty())
      throw ParseError(source, lineno, "rule body must be non-empty");
    if (!rule.is_safe())
      throw ParseError(source, lineno, "unsafe rule: head variable missing from body");
    rules.rules.push_back(std::move(rule));
  }
  return rules;
}

RuleSet load_rules(const std::string& path) {
  auto in = open_or_throw(path);
  return parse_rules(in, path);
}

CountQuery parse_query(std::istream& in, const std::string& source) {
  std::string joined;
  std::string line;
  while (std::getline(in, line)) {
    const std::string_view sv = trim(line);
    if (is_comment_or_blank(sv)) continue;
    joined += std::string(sv) + " ";
  }
  const std::string_view sv = trim(joined);
  if (sv.empty()) throw ParseError(source, 1, "empty query");

  auto expect_keyword = [&](std::string_view& rest, std::string_view keyword) {
    rest = trim(rest);
    if (rest.substr(0, keyword.size()) != keyword)
      throw ParseError(source, 1, "expected '" + std::string(keyword) + "'");
    rest.remove_prefix(keyword.size());
  };

  std::string_view rest = sv;
  expect_keyword(rest, "COUNT");
  expect_keyword(rest, "DISTINCT");
  rest = trim(rest);
  const std::size_t var_end = rest.find(' ');
  if (var_end == std::string_view::npos)
    throw ParseError(source, 1, "expected counted variable and WHERE clause");
  CountQuery query;
  query.counted_variable = std::string(rest.substr(0, var_end));
  if (!is_variable(query.counted_variable) ||
      !is_valid_token(std::string_view(query.counted_variable).substr(1)))
    throw ParseError(source, 1,
                     "invalid counted variable '" + query.counted_variable + "'");
  rest.remove_prefix(var_end);
  expect_keyword(rest, "WHERE");
  for (std::string_view part : split_on(trim(rest), '&'))
    query.pattern.push_back(parse_atom(part, source, 1));
  if (query.pattern.empty()) throw ParseError(source, 1, "query pattern is empty");

  bool counted_occurs = false;
  for (const Atom& atom : query.pattern)
    if (atom.subject == query.counted_variable || atom.object == query.counted_variable)
      counted_occurs = true;
  if (!counted_occurs)
    throw ParseError(source, 1, "counted variable '" + query.counted_variable +
                                    "' does not occur in the pattern");
  return query;
}

CountQuery load_query(const std::string& path) {
  auto in = open_or_throw(path);
  return parse_query(in, path);
}

std::string to_canonical(const Graph& g) {
  std::string out;
  for (const Triple& t : g.triples()) {
    out += to_string(t);
    out += '\n';
  }
  return out;
}

void write_canonical(std::ostream& out, const Graph& g) {
  out << to_canonical(g);
}

}  // namespace ontodp
