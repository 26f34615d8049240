#pragma once

#include <map>
#include <string>
#include <utility>
#include <vector>

namespace purify {

struct TraceNode {
  std::string effect;
  std::string arg;
};

/// Dependency graph of executed effects. An edge (from, to) means `to`
/// depends on `from`. Node ids are indices into `nodes`.
struct TraceDag {
  std::vector<TraceNode> nodes;
  std::vector<std::pair<int, int>> edges;

  static TraceDag single(std::string effect, std::string arg);

  /// Disjoint union: no dependency between the two sides.
  static TraceDag parallel(const TraceDag& a, const TraceDag& b);

  /// Union where every source of `b` depends on every sink of `a`.
  static TraceDag sequential(const TraceDag& a, const TraceDag& b);

  std::size_t size() const { return nodes.size(); }
};

/// Number of nodes on the longest dependency path. Throws CyclicDag.
long dyn_span(const TraceDag& d);

/// Node count.
long dyn_work(const TraceDag& d);

/// Critical-path time with unbounded workers: each node finishes at its
/// latency plus the latest finish among its dependencies. Throws UnknownEffect
/// when a node's effect has no latency.
double simulate_latency(const TraceDag& d, const std::map<std::string, double>& latency_ms);

/// Label-preserving isomorphism of the reachability relations.
bool isomorphic(const TraceDag& a, const TraceDag& b);

/// Graphviz rendering; nodes labeled `name(arg)`, edges in dependency order.
std::string to_dot(const TraceDag& d);

/// Node ids in a topological order. Throws CyclicDag.
std::vector<int> topo_order(const TraceDag& d);

}  // namespace purify
