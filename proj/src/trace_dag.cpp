#include "purify/trace_dag.hpp"

#include <algorithm>
#include <functional>
#include <sstream>

#include "purify/diagnostics.hpp"
#include "purify/pretty.hpp"

namespace purify {

TraceDag TraceDag::single(std::string effect, std::string arg) {
  TraceDag d;
  d.nodes.push_back({std::move(effect), std::move(arg)});
  return d;
}

TraceDag TraceDag::parallel(const TraceDag& a, const TraceDag& b) {
  TraceDag d = a;
  const int shift = static_cast<int>(a.nodes.size());
  d.nodes.insert(d.nodes.end(), b.nodes.begin(), b.nodes.end());
  for (auto [from, to] : b.edges) d.edges.emplace_back(from + shift, to + shift);
  return d;
}

TraceDag TraceDag::sequential(const TraceDag& a, const TraceDag& b) {
  TraceDag d = parallel(a, b);
  const int na = static_cast<int>(a.nodes.size());
  std::vector<bool> has_out(a.nodes.size(), false);
  std::vector<bool> has_in(b.nodes.size(), false);
  for (auto [from, to] : a.edges) has_out[from] = true;
  for (auto [from, to] : b.edges) has_in[to] = true;
  for (int s = 0; s < na; ++s) {
    if (has_out[s]) continue;
    for (int t = 0; t < static_cast<int>(b.nodes.size()); ++t) {
      if (!has_in[t]) d.edges.emplace_back(s, t + na);
    }
  }
  return d;
}

std::vector<int> topo_order(const TraceDag& d) {
  const int n = static_cast<int>(d.nodes.size());
  std::vector<int> indeg(n, 0);
  std::vector<std::vector<int>> out(n);
  for (auto [from, to] : d.edges) {
    if (from < 0 || from >= n || to < 0 || to >= n) {
      throw Error(ErrorKind::CyclicDag, "edge references a missing node");
    }
    out[from].push_back(to);
    ++indeg[to];
  }
  std::vector<int> order;
  std::vector<int> ready;
  for (int i = n - 1; i >= 0; --i) {
    if (indeg[i] == 0) ready.push_back(i);
  }
  while (!ready.empty()) {
    int v = ready.back();
    ready.pop_back();
    order.push_back(v);
    for (int w : out[v]) {
      if (--indeg[w] == 0) ready.push_back(w);
    }
  }
  if (static_cast<int>(order.size()) != n) {
    throw Error(ErrorKind::CyclicDag, "trace graph has a cycle");
  }
  return order;
}

namespace {

// Longest-path style recurrence over a topological order.
template <typename Cost>
double critical_path(const TraceDag& d, Cost&& cost) {
  const int n = static_cast<int>(d.nodes.size());
  std::vector<std::vector<int>> preds(n);
  for (auto [from, to] : d.edges) preds[to].push_back(from);
  std::vector<double> finish(n, 0.0);
  double best = 0.0;
  for (int v : topo_order(d)) {
    double start = 0.0;
    for (int p : preds[v]) start = std::max(start, finish[p]);
    finish[v] = start + cost(d.nodes[v]);
    best = std::max(best, finish[v]);
  }
  return best;
}

}  // namespace

long dyn_span(const TraceDag& d) {
  return static_cast<long>(critical_path(d, [](const TraceNode&) { return 1.0; }));
}

long dyn_work(const TraceDag& d) { return static_cast<long>(d.nodes.size()); }

double simulate_latency(const TraceDag& d, const std::map<std::string, double>& latency_ms) {
  return critical_path(d, [&](const TraceNode& node) {
    auto it = latency_ms.find(node.effect);
    if (it == latency_ms.end()) {
      throw Error(ErrorKind::UnknownEffect, "no latency configured for effect '" + node.effect + "'");
    }
    return it->second;
  });
}

namespace {

using Matrix = std::vector<std::vector<char>>;

Matrix reachability(const TraceDag& d) {
  const int n = static_cast<int>(d.nodes.size());
  Matrix r(n, std::vector<char>(n, 0));
  std::vector<std::vector<int>> out(n);
  for (auto [from, to] : d.edges) out[from].push_back(to);
  auto order = topo_order(d);
  for (auto it = order.rbegin(); it != order.rend(); ++it) {
    int v = *it;
    for (int w : out[v]) {
      r[v][w] = 1;
      for (int k = 0; k < n; ++k) r[v][k] |= r[w][k];
    }
  }
  return r;
}

// Colour refinement over the reachability relation, seeded by node labels.
std::vector<long> refine(const TraceDag& d, const Matrix& r,
                         std::map<std::vector<long>, long>& palette) {
  const int n = static_cast<int>(d.nodes.size());
  std::vector<long> colour(n);
  // Label ids must agree across both graphs, so they go through the shared palette.
  for (int i = 0; i < n; ++i) {
    std::vector<long> key = {-1};
    for (char c : d.nodes[i].effect) key.push_back(c);
    key.push_back(-2);
    for (char c : d.nodes[i].arg) key.push_back(c);
    auto [it, fresh] = palette.emplace(key, static_cast<long>(palette.size()));
    (void)fresh;
    colour[i] = it->second;
  }
  for (int round = 0; round < n + 1; ++round) {
    std::vector<long> next(n);
    for (int i = 0; i < n; ++i) {
      std::vector<long> up, down;
      for (int j = 0; j < n; ++j) {
        if (r[j][i]) up.push_back(colour[j]);
        if (r[i][j]) down.push_back(colour[j]);
      }
      std::sort(up.begin(), up.end());
      std::sort(down.begin(), down.end());
      std::vector<long> key = {-3, colour[i], -4};
      key.insert(key.end(), up.begin(), up.end());
      key.push_back(-5);
      key.insert(key.end(), down.begin(), down.end());
      auto [it, fresh] = palette.emplace(key, static_cast<long>(palette.size()));
      (void)fresh;
      next[i] = it->second;
    }
    if (next == colour) break;
    colour = std::move(next);
  }
  return colour;
}

}  // namespace

bool isomorphic(const TraceDag& a, const TraceDag& b) {
  if (a.nodes.size() != b.nodes.size()) return false;
  const int n = static_cast<int>(a.nodes.size());
  if (n == 0) return true;
  Matrix ra = reachability(a);
  Matrix rb = reachability(b);

  // Both graphs are refined in lockstep so colours are comparable.
  std::map<std::vector<long>, long> palette;
  std::vector<long> ca, cb;
  {
    TraceDag both = TraceDag::parallel(a, b);
    Matrix r(2 * n, std::vector<char>(2 * n, 0));
    for (int i = 0; i < n; ++i) {
      for (int j = 0; j < n; ++j) {
        r[i][j] = ra[i][j];
        r[n + i][n + j] = rb[i][j];
      }
    }
    auto c = refine(both, r, palette);
    ca.assign(c.begin(), c.begin() + n);
    cb.assign(c.begin() + n, c.end());
  }
  {
    auto sa = ca, sb = cb;
    std::sort(sa.begin(), sa.end());
    std::sort(sb.begin(), sb.end());
    if (sa != sb) return false;
  }

  std::vector<int> map_to(n, -1);
  std::vector<char> used(n, 0);
  long budget = 2'000'000;
  std::function<bool(int)> extend = [&](int i) -> bool {
    if (i == n) return true;
    for (int j = 0; j < n; ++j) {
      if (used[j] || cb[j] != ca[i]) continue;
      if (--budget < 0) return false;
      bool ok = true;
      for (int k = 0; k < i && ok; ++k) {
        int mk = map_to[k];
        ok = ra[i][k] == rb[j][mk] && ra[k][i] == rb[mk][j];
      }
      if (!ok) continue;
      map_to[i] = j;
      used[j] = 1;
      if (extend(i + 1)) return true;
      used[j] = 0;
      map_to[i] = -1;
    }
    return false;
  };
  return extend(0);
}

std::string to_dot(const TraceDag& d) {
  std::ostringstream out;
  out << "digraph trace {\n  graph [v=\"1\"];\n";
  auto order = topo_order(d);
  for (int v : order) {
    std::string label = d.nodes[v].effect + "(" + d.nodes[v].arg + ")";
    out << "  n" << v << " [label=" << quote_string(label) << "];\n";
  }
  std::vector<int> rank(d.nodes.size());
  for (std::size_t i = 0; i < order.size(); ++i) rank[order[i]] = static_cast<int>(i);
  auto edges = d.edges;
  std::sort(edges.begin(), edges.end(), [&](auto x, auto y) {
    return std::make_pair(rank[x.first], rank[x.second]) < std::make_pair(rank[y.first], rank[y.second]);
  });
  for (auto [from, to] : edges) out << "  n" << from << " -> n" << to << ";\n";
  out << "}\n";
  return out.str();
}

}  // namespace purify
