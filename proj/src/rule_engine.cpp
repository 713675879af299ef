#include "ontodp/rule_engine.hpp"

#include <algorithm>
#include <bit>
#include <cstdint>
#include <numeric>

#include "ontodp/errors.hpp"

namespace ontodp {

namespace {

// Binds term to value, extending s. Fails on a conflicting prior binding or
// a mismatching constant.
bool unify_term(const std::string& term, const std::string& value, Substitution& s) {
  if (!is_variable(term)) return term == value;
  auto [it, inserted] = s.emplace(term, value);
  return inserted || it->second == value;
}

bool unify_atom(const Atom& atom, const Triple& t, Substitution& s) {
  return atom.predicate == t.predicate && unify_term(atom.subject, t.subject, s) &&
         unify_term(atom.object, t.object, s);
}

// Extends every substitution in `frontier` over the atoms of `pattern`
// starting at `next`, skipping `skip` (already bound), against g.
void join_remaining(const std::vector<Atom>& pattern, std::size_t next, std::size_t skip,
                    const Graph& g, std::vector<Substitution>& frontier) {
  for (std::size_t i = next; i < pattern.size(); ++i) {
    if (i == skip) continue;
    std::vector<Substitution> extended;
    for (const Substitution& partial : frontier) {
      for (const Triple& t : g.triples()) {
        Substitution s = partial;
        if (unify_atom(pattern[i], t, s)) extended.push_back(std::move(s));
      }
    }
    frontier = std::move(extended);
    if (frontier.empty()) return;
  }
}

// True iff some substitution maps the head atom onto t. Repeated head
// variables force equal triple components.
bool head_unifies(const Atom& head, const Triple& t) {
  Substitution s;
  return unify_atom(head, t, s);
}

}  // namespace

std::set<Substitution> match_pattern(const std::vector<Atom>& pattern, const Graph& g) {
  std::vector<Substitution> frontier{Substitution{}};
  join_remaining(pattern, 0, pattern.size(), g, frontier);
  return {frontier.begin(), frontier.end()};
}

std::set<Substitution> match(const Rule& rule, const Graph& g) {
  return match_pattern(rule.body, g);
}

Triple instantiate(const Atom& atom, const Substitution& s) {
  auto resolve = [&s](const std::string& term) {
    return is_variable(term) ? s.at(term) : term;
  };
  return {resolve(atom.subject), atom.predicate, resolve(atom.object)};
}

Graph saturate(const Graph& g, const RuleSet& rules, std::size_t triple_cap) {
  if (g.size() > triple_cap)
    throw FixpointBudgetExceeded("input already exceeds the triple cap of " +
                                 std::to_string(triple_cap));
  if (rules.empty()) return g;

  Graph current = g;
  std::vector<Triple> delta = g.triples();
  while (!delta.empty()) {
    std::set<Triple> fresh;
    for (const Rule& rule : rules.rules) {
      // Semi-naive round: every new derivation must read at least one delta
      // triple, so seed each body position with delta and join the rest
      // against the full graph.
      for (std::size_t i = 0; i < rule.body.size(); ++i) {
        for (const Triple& seed_triple : delta) {
          Substitution seed;
          if (!unify_atom(rule.body[i], seed_triple, seed)) continue;
          std::vector<Substitution> frontier{std::move(seed)};
          join_remaining(rule.body, 0, i, current, frontier);
          for (const Substitution& s : frontier) {
            Triple derived = instantiate(rule.head, s);
            if (!current.has(derived)) fresh.insert(std::move(derived));
          }
        }
      }
    }
    delta.assign(fresh.begin(), fresh.end());
    if (delta.empty()) break;
    std::vector<Triple> merged = current.triples();
    merged.insert(merged.end(), delta.begin(), delta.end());
    current = Graph(std::move(merged));
    if (current.size() > triple_cap)
      throw FixpointBudgetExceeded("fixpoint exceeded the triple cap of " +
                                   std::to_string(triple_cap));
  }
  return current;
}

bool is_saturated(const Graph& g, const RuleSet& rules, std::size_t triple_cap) {
  return saturate(g, rules, triple_cap) == g;
}

std::set<Graph> antecedents(const Graph& g, const RuleSet& rules, std::size_t cap,
                            std::size_t triple_cap) {
  if (!is_saturated(g, rules, triple_cap))
    throw NotSaturated("antecedents require a saturated database");

  std::vector<Triple> candidates;
  for (const Triple& t : g.triples())
    for (const Rule& rule : rules.rules)
      if (head_unifies(rule.head, t)) {
        candidates.push_back(t);
        break;
      }
  if (candidates.size() > cap)
    throw AntecedentBudgetExceeded(std::to_string(candidates.size()) +
                                   " removable triples exceed the cap of " +
                                   std::to_string(cap));

  const std::uint32_t subset_count = std::uint32_t{1} << candidates.size();
  std::vector<std::uint32_t> order(subset_count);
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(), [](std::uint32_t a, std::uint32_t b) {
    return std::popcount(a) < std::popcount(b);
  });

  // Monotone rules: if removing S fails to re-saturate, removing any
  // superset of S fails too, so failing masks prune upward.
  std::set<Graph> out;
  std::vector<std::uint32_t> failing;
  for (std::uint32_t mask : order) {
    bool pruned = false;
    for (std::uint32_t f : failing)
      if ((mask & f) == f) {
        pruned = true;
        break;
      }
    if (pruned) continue;

    std::vector<Triple> kept;
    kept.reserve(g.size());
    std::size_t candidate_index = 0;
    for (const Triple& t : g.triples()) {
      if (candidate_index < candidates.size() && t == candidates[candidate_index]) {
        const bool removed = (mask >> candidate_index) & 1u;
        ++candidate_index;
        if (removed) continue;
      }
      kept.push_back(t);
    }
    Graph sub(std::move(kept));
    if (saturate(sub, rules, triple_cap) == g)
      out.insert(std::move(sub));
    else
      failing.push_back(mask);
  }
  return out;
}

}  // namespace ontodp
