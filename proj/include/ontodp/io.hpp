#pragma once

#include <iosfwd>
#include <string>

#include "ontodp/graph.hpp"
#include "ontodp/query.hpp"
#include "ontodp/rule.hpp"
#include "ontodp/schema.hpp"

namespace ontodp {

// Line-oriented formats. '#' lines are comments, blank lines are ignored,
// identifiers are literal tokens (no prefix declarations). All parsers
// throw ParseError carrying the source name and line number.

/// `subject predicate object [.]`, whitespace separated.
Graph parse_triples(std::istream& in, const std::string& source = "<input>");
Graph load_triples(const std::string& path);

/// `predicate <name> <subjType> <objType> <mutable|immutable>`,
/// `cardinality <type> <predicate> <exactly|atMost|atLeast> <n>`,
/// `typePredicate <name>`.
Schema parse_schema(std::istream& in, const std::string& source = "<input>");
Schema load_schema(const std::string& path);

/// One rule per line: `atom & atom & ... => atom`, atoms `pred(?x,const)`,
/// whitespace insensitive.
RuleSet parse_rules(std::istream& in, const std::string& source = "<input>");
RuleSet load_rules(const std::string& path);

/// One query per file: `COUNT DISTINCT ?var WHERE atom & atom & ...`.
CountQuery parse_query(std::istream& in, const std::string& source = "<input>");
CountQuery load_query(const std::string& path);

/// Canonical serialization: one `s p o .` line per triple, sorted
/// lexicographically by subject, predicate, object.
std::string to_canonical(const Graph& g);
void write_canonical(std::ostream& out, const Graph& g);

}  // namespace ontodp
