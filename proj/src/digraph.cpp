#include "omp/digraph.hpp"

#include <algorithm>
#include <unordered_set>

namespace omp {

int Digraph::indexOf(const std::string& label) const {
  for (int i = 0; i < nodeCount(); ++i)
    if (labels[i] == label) return i;
  return -1;
}

int Digraph::indexOfOrThrow(const std::string& label) const {
  int i = indexOf(label);
  if (i < 0) throw PreconditionError("node '" + label + "' not in digraph");
  return i;
}

bool Digraph::hasArc(int u, int v) const {
  return std::find(arcs.begin(), arcs.end(), std::make_pair(u, v)) != arcs.end();
}

void Digraph::deriveSourceSink() {
  std::vector<int> indeg(nodeCount(), 0), outdeg(nodeCount(), 0);
  for (auto [u, v] : arcs) {
    ++outdeg[u];
    ++indeg[v];
  }
  source = sink = -1;
  for (int i = 0; i < nodeCount(); ++i) {
    if (indeg[i] == 0) {
      if (source >= 0) throw PreconditionError("digraph has multiple sources");
      source = i;
    }
    if (outdeg[i] == 0) {
      if (sink >= 0) throw PreconditionError("digraph has multiple sinks");
      sink = i;
    }
  }
  if (source < 0) throw PreconditionError("digraph has no source");
  if (sink < 0) throw PreconditionError("digraph has no sink");
}

void Digraph::validate() const {
  std::unordered_set<std::string> seen;
  for (const auto& l : labels)
    if (!seen.insert(l).second)
      throw PreconditionError("duplicate node label '" + l + "'");
  std::unordered_set<long long> arcSeen;
  for (auto [u, v] : arcs) {
    if (u < 0 || v < 0 || u >= nodeCount() || v >= nodeCount())
      throw PreconditionError("arc endpoint out of range");
    if (u == v) throw PreconditionError("self-arc at '" + labels[u] + "'");
    if (!arcSeen.insert(static_cast<long long>(u) * 1000000 + v).second)
      throw PreconditionError("duplicate arc");
  }
  if (source < 0 || sink < 0) throw PreconditionError("source/sink not set");
}

Digraph toDigraph(const ProgramDigraph& d) {
  Digraph out;
  for (size_t i = 0; i < d.nodes.size(); ++i)
    out.labels.push_back(d.nodeName(static_cast<int>(i)));
  out.arcs = d.arcs;
  out.source = d.source;
  out.sink = d.sink;
  return out;
}

std::optional<std::vector<int>> monotonePathAvoiding(const Digraph& d,
                                                     const std::vector<int>& forbidden) {
  std::vector<bool> blocked(d.nodeCount(), false);
  for (int v : forbidden) {
    if (v == d.source || v == d.sink)
      throw PreconditionError("forbidden set must exclude source and sink");
    blocked.at(v) = true;
  }
  std::vector<std::vector<int>> adj(d.nodeCount());
  for (auto [u, v] : d.arcs) adj[u].push_back(v);
  for (auto& a : adj) std::sort(a.begin(), a.end());
  std::vector<int> parent(d.nodeCount(), -1);
  std::vector<int> stack{d.source};
  std::vector<bool> visited(d.nodeCount(), false);
  visited[d.source] = true;
  while (!stack.empty()) {
    int u = stack.back();
    stack.pop_back();
    if (u == d.sink) {
      std::vector<int> path;
      for (int x = u; x != -1; x = parent[x]) path.push_back(x);
      std::reverse(path.begin(), path.end());
      return path;
    }
    for (int v : adj[u]) {
      if (visited[v] || blocked[v]) continue;
      visited[v] = true;
      parent[v] = u;
      stack.push_back(v);
    }
  }
  return std::nullopt;
}

}  // namespace omp
