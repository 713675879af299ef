#include "ontodp/graph.hpp"

#include <algorithm>

namespace ontodp {

Graph::Graph(std::vector<Triple> triples) : triples_(std::move(triples)) {
  std::sort(triples_.begin(), triples_.end());
  triples_.erase(std::unique(triples_.begin(), triples_.end()), triples_.end());
}

bool Graph::has(const Triple& t) const {
  return std::binary_search(triples_.begin(), triples_.end(), t);
}

Graph Graph::with(const Triple& t) const {
  if (has(t)) return *this;
  Graph out;
  out.triples_.reserve(triples_.size() + 1);
  auto pos = std::lower_bound(triples_.begin(), triples_.end(), t);
  out.triples_.insert(out.triples_.end(), triples_.begin(), pos);
  out.triples_.push_back(t);
  out.triples_.insert(out.triples_.end(), pos, triples_.end());
  return out;
}

Graph Graph::without(const Triple& t) const {
  if (!has(t)) return *this;
  Graph out;
  out.triples_.reserve(triples_.size() - 1);
  for (const Triple& x : triples_)
    if (x != t) out.triples_.push_back(x);
  return out;
}

std::set<std::string> Graph::nodes() const {
  std::set<std::string> out;
  for (const Triple& t : triples_) {
    out.insert(t.subject);
    out.insert(t.object);
  }
  return out;
}

bool contains(const Graph& inner, const Graph& outer) {
  return std::includes(outer.triples().begin(), outer.triples().end(),
                       inner.triples().begin(), inner.triples().end());
}

namespace {

std::size_t intersection_size(const Graph& g1, const Graph& g2) {
  std::size_t common = 0;
  auto it1 = g1.triples().begin();
  auto it2 = g2.triples().begin();
  while (it1 != g1.triples().end() && it2 != g2.triples().end()) {
    if (*it1 < *it2) {
      ++it1;
    } else if (*it2 < *it1) {
      ++it2;
    } else {
      ++common;
      ++it1;
      ++it2;
    }
  }
  return common;
}

}  // namespace

std::size_t edge_distance(const Graph& g1, const Graph& g2) {
  return g1.size() + g2.size() - 2 * intersection_size(g1, g2);
}

std::optional<std::size_t> bounded_edge_distance(const Graph& g1, const Graph& g2) {
  if (g1.size() != g2.size()) return std::nullopt;
  return g1.size() - intersection_size(g1, g2);
}

}  // namespace ontodp
