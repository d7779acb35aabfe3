#include "omp/holt_klee.hpp"

#include <algorithm>
#include <bit>
#include <queue>

#include "omp/tracer.hpp"

namespace omp {

// ---------------------------------------------------------------------------
// maxIndependentPaths
// ---------------------------------------------------------------------------

namespace {

struct FlowNetwork {
  // Node-split network: vertex v -> in node 2v, out node 2v+1.
  int n = 0;
  struct Edge {
    int to;
    int cap;
    int flow = 0;
  };
  std::vector<Edge> edges;
  std::vector<std::vector<int>> out;  // edge indices per network node

  void addEdge(int u, int v, int cap) {
    out[u].push_back(static_cast<int>(edges.size()));
    edges.push_back({v, cap});
    out[v].push_back(static_cast<int>(edges.size()));
    edges.push_back({u, 0});
  }
};

}  // namespace

MengerResult maxIndependentPaths(const Digraph& d) {
  d.validate();
  const int n = d.nodeCount();
  const int s = d.source, t = d.sink;
  const int bigCap = n + 2;

  FlowNetwork net;
  net.n = 2 * n;
  net.out.resize(net.n);
  auto inNode = [](int v) { return 2 * v; };
  auto outNode = [](int v) { return 2 * v + 1; };
  for (int v = 0; v < n; ++v)
    net.addEdge(inNode(v), outNode(v), (v == s || v == t) ? bigCap : 1);
  // Arcs sorted for deterministic augmentation.
  auto arcs = d.arcs;
  std::sort(arcs.begin(), arcs.end());
  for (auto [u, v] : arcs)
    net.addEdge(outNode(u), inNode(v), (u == s && v == t) ? 1 : bigCap);

  // Edmonds-Karp.
  int flowValue = 0;
  while (true) {
    std::vector<int> prevEdge(net.n, -1);
    std::vector<bool> visited(net.n, false);
    std::queue<int> q;
    q.push(outNode(s));
    visited[outNode(s)] = true;
    while (!q.empty() && !visited[inNode(t)]) {
      int u = q.front();
      q.pop();
      for (int ei : net.out[u]) {
        const auto& e = net.edges[ei];
        if (e.cap - e.flow <= 0 || visited[e.to]) continue;
        visited[e.to] = true;
        prevEdge[e.to] = ei;
        q.push(e.to);
      }
    }
    if (!visited[inNode(t)]) break;
    for (int x = inNode(t); x != outNode(s);) {
      int ei = prevEdge[x];
      net.edges[ei].flow += 1;
      net.edges[ei ^ 1].flow -= 1;
      x = net.edges[ei ^ 1].to;
    }
    ++flowValue;
  }
  if (flowValue == 0)
    throw PreconditionError("sink unreachable from source");

  MengerResult result;
  result.count = flowValue;

  // Path decomposition: follow unit flow from the source.
  {
    std::vector<int> used(net.edges.size(), 0);
    for (int p = 0; p < flowValue; ++p) {
      std::vector<int> path{s};
      int cur = outNode(s);
      for (int steps = 0;; ++steps) {
        if (steps > net.n) throw InternalError("flow decomposition walk too long");
        int chosen = -1;
        for (int ei : net.out[cur]) {
          if ((ei & 1) != 0) continue;  // skip residual edges
          if (net.edges[ei].flow - used[ei] >= 1) {
            chosen = ei;
            break;
          }
        }
        if (chosen < 0) throw InternalError("flow decomposition stuck");
        used[chosen] += 1;
        cur = net.edges[chosen].to;  // an in node
        int v = cur / 2;
        path.push_back(v);
        if (v == t) break;
        int split = -1;
        for (int ei : net.out[cur]) {
          if ((ei & 1) != 0) continue;
          if (net.edges[ei].to == outNode(v) && net.edges[ei].flow - used[ei] >= 1) {
            split = ei;
            break;
          }
        }
        if (split < 0) throw InternalError("flow decomposition stuck at a split edge");
        used[split] += 1;
        cur = outNode(v);
      }
      result.system.paths.push_back(std::move(path));
    }
  }

  // Min cut from residual reachability.
  {
    std::vector<bool> reach(net.n, false);
    std::queue<int> q;
    q.push(outNode(s));
    reach[outNode(s)] = true;
    while (!q.empty()) {
      int u = q.front();
      q.pop();
      for (int ei : net.out[u]) {
        const auto& e = net.edges[ei];
        if (e.cap - e.flow <= 0 || reach[e.to]) continue;
        reach[e.to] = true;
        q.push(e.to);
      }
    }
    for (size_t ei = 0; ei < net.edges.size(); ei += 2) {
      const auto& e = net.edges[ei];
      int from = net.edges[ei ^ 1].to;
      if (!reach[from] || reach[e.to] || e.flow < e.cap) continue;
      if (e.to == from + 1 && from % 2 == 0) {
        result.cut.nodes.push_back(from / 2);  // split arc of an internal vertex
      } else {
        int u = (from - 1) / 2, v = e.to / 2;
        if (u == s && v == t) result.cut.directArcs.emplace_back(u, v);
        else throw InternalError("min cut crosses an uncuttable arc");
      }
    }
    std::sort(result.cut.nodes.begin(), result.cut.nodes.end());
  }

  // Verify the path system.
  if (static_cast<int>(result.system.paths.size()) != flowValue)
    throw InternalError("path system size != flow value");
  std::vector<int> uses(n, 0);
  for (const auto& p : result.system.paths) {
    if (p.front() != s || p.back() != t)
      throw InternalError("path endpoints invalid");
    for (size_t i = 0; i + 1 < p.size(); ++i)
      if (!d.hasArc(p[i], p[i + 1])) throw InternalError("path uses a non-arc");
    for (size_t i = 1; i + 1 < p.size(); ++i) ++uses[p[i]];
  }
  for (int v = 0; v < n; ++v)
    if (uses[v] > 1) throw InternalError("paths share internal vertex");

  // Verify the cut disconnects.
  {
    if (result.cut.size() != flowValue)
      throw InternalError("cut size != flow value");
    std::vector<bool> blocked(n, false);
    for (int v : result.cut.nodes) {
      if (v == s || v == t) throw InternalError("cut contains source or sink");
      blocked[v] = true;
    }
    std::vector<std::vector<int>> adj(n);
    for (auto [u, v] : d.arcs) {
      bool isCutArc = std::find(result.cut.directArcs.begin(), result.cut.directArcs.end(),
                                std::make_pair(u, v)) != result.cut.directArcs.end();
      if (!isCutArc) adj[u].push_back(v);
    }
    std::vector<bool> vis(n, false);
    std::queue<int> q;
    q.push(s);
    vis[s] = true;
    while (!q.empty()) {
      int u = q.front();
      q.pop();
      for (int v : adj[u]) {
        if (vis[v] || blocked[v]) continue;
        vis[v] = true;
        q.push(v);
      }
    }
    if (vis[t]) throw InternalError("cut does not disconnect source from sink");
  }
  return result;
}

// ---------------------------------------------------------------------------
// Holt-Klee verdicts
// ---------------------------------------------------------------------------

HoltKleeVerdict checkHoltKlee(const OMProgram& program) {
  program.requireValid();
  Digraph d = toDigraph(orient(program));
  HoltKleeVerdict verdict;
  verdict.required = program.rank() - 1;
  verdict.menger = maxIndependentPaths(d);
  verdict.k = verdict.menger.count;
  verdict.holds = verdict.k >= verdict.required;
  return verdict;
}

HoltKleeVerdict checkHoltKleeDigraph(const Digraph& d, int dimension) {
  HoltKleeVerdict verdict;
  verdict.required = dimension;
  verdict.menger = maxIndependentPaths(d);
  verdict.k = verdict.menger.count;
  verdict.holds = verdict.k >= verdict.required;
  return verdict;
}

// ---------------------------------------------------------------------------
// coveringCovector
// ---------------------------------------------------------------------------

SignVector coveringCovector(const OMProgram& program, std::uint32_t nodeMask) {
  const OrientedMatroid& mfg = program.contractFG();
  const GroundSet& programGround = *program.matroid().ground();
  std::uint32_t mask = translateMask(programGround, *mfg.ground(), nodeMask);

  SignVector result = SignVector::zero(mfg.ground());
  for (int e : maskToIndices(mask)) {
    std::optional<SignVector> pick;
    for (const auto& canonical : mfg.cocircuits()) {
      for (const SignVector& y : {canonical, canonical.negated()}) {
        if (y.chr(e) != '+') continue;
        if (y.negativeMask() & mask) continue;
        pick = y;
        break;
      }
      if (pick) break;
    }
    if (!pick) {
      // The contrapositive witness: a circuit of M/g through f, nonnegative
      // on the node, certifying that the node is the source or the sink.
      const OrientedMatroid& mg = program.contractG();
      std::uint32_t maskMg = translateMask(programGround, *mg.ground(), nodeMask);
      int fMg = mg.ground()->indexOfOrThrow(program.fLabel());
      std::optional<SignVector> witness;
      for (const auto& canonical : mg.circuits()) {
        for (const SignVector& x : {canonical, canonical.negated()}) {
          std::uint32_t supp = x.supportMask();
          if ((supp & ~(maskMg | (1u << fMg))) != 0) continue;
          if (x.negativeMask() & maskMg) continue;
          if (x.chr(fMg) == '0') continue;
          witness = x;
          break;
        }
        if (witness) break;
      }
      throw CoveringCovectorError(
          "node " + maskToString(programGround, nodeMask) +
              " admits no covering covector at " + mfg.ground()->label(e) +
              " (it is the source or the sink)",
          witness);
    }
    result = result.compose(*pick);
  }
  for (int e : maskToIndices(mask))
    if (result.chr(e) != '+')
      throw InternalError("covering covector is not positive on the node");
  return result;
}

// ---------------------------------------------------------------------------
// Avoidance certificates
// ---------------------------------------------------------------------------

bool verifyAvoidanceCertificate(const OMProgram& program,
                                const std::vector<std::uint32_t>& nodes,
                                const AvoidanceCertificate& cert) {
  program.requireValid();
  if (nodes.size() != cert.cocircuits.size())
    throw PreconditionError("one cocircuit per avoided node required");
  const OrientedMatroid& mfg = program.contractFG();
  auto report = validateLocalization(mfg, cert.sigmaTilde);
  if (!report.valid) throw PreconditionError("certificate localization is invalid");

  ProgramDigraph kf = orient(program);
  for (std::uint32_t v : nodes) {
    int idx = kf.indexOfNode(v);
    if (idx < 0) throw PreconditionError("avoided set contains a non-node");
    if (idx == kf.source || idx == kf.sink)
      throw PreconditionError("avoided set may not contain the source or the sink");
  }

  OrientedMatroid mtilde = extend(mfg, cert.sigmaTilde);
  int h = mtilde.ground()->indexOfOrThrow(cert.sigmaTilde.newLabel());
  const GroundSet& programGround = *program.matroid().ground();
  for (size_t i = 0; i < nodes.size(); ++i) {
    const SignVector& z = cert.cocircuits[i];
    if (!z.ground()->sameAs(*mtilde.ground())) return false;
    if (!mtilde.cocircuits().containsSigned(z)) return false;
    if (z.chr(h) != '+') return false;
    std::uint32_t mask = translateMask(programGround, *mtilde.ground(), nodes[i]);
    if (z.negativeMask() & mask) return false;
  }

  // The traced path built from the lifted extension must avoid the nodes.
  Localization sigma = liftExtension(program, cert.sigmaTilde);
  TraceResult trace = tracePath(program, sigma);
  for (int nodeIdx : trace.path.nodes) {
    std::uint32_t nodeMask = trace.kf.nodes[nodeIdx];
    for (std::uint32_t avoided : nodes)
      if (nodeMask == avoided)
        throw InternalError("certified path passes through an avoided node " +
                            maskToString(programGround, avoided));
  }
  return true;
}

AvoidanceSearchResult searchAvoidingExtension(const OMProgram& program,
                                              const std::vector<std::uint32_t>& nodes,
                                              long long budget) {
  program.requireValid();
  const OrientedMatroid& mfg = program.contractFG();
  ProgramDigraph kf = orient(program);
  for (std::uint32_t v : nodes) {
    int idx = kf.indexOfNode(v);
    if (idx < 0) throw PreconditionError("avoided set contains a non-node");
    if (idx == kf.source || idx == kf.sink)
      throw PreconditionError("avoided set may not contain the source or the sink");
  }
  const GroundSet& programGround = *program.matroid().ground();

  AvoidanceSearchResult result;
  for (std::uint32_t base : mfg.bases()) {
    std::vector<int> order = maskToIndices(base);
    std::sort(order.begin(), order.end());
    do {
      const int k = static_cast<int>(order.size());
      for (std::uint32_t signs = 0; signs < (1u << k); ++signs) {
        if (result.tried >= budget) {
          result.budgetExhausted = true;
          return result;
        }
        ++result.tried;
        LexicographicRule rule;
        for (int i = 0; i < k; ++i)
          rule.terms.emplace_back(order[i],
                                  (signs & (1u << i)) ? Sign::Minus : Sign::Plus);
        Localization sigmaTilde = localizationFromLex(mfg, rule);
        OrientedMatroid mtilde = extend(mfg, sigmaTilde);
        int h = mtilde.ground()->indexOfOrThrow(sigmaTilde.newLabel());

        std::vector<SignVector> zs;
        bool allFound = true;
        for (std::uint32_t nodeMask : nodes) {
          std::uint32_t mask = translateMask(programGround, *mtilde.ground(), nodeMask);
          std::optional<SignVector> z;
          for (const auto& canonical : mtilde.cocircuits()) {
            for (const SignVector& y : {canonical, canonical.negated()}) {
              if (y.chr(h) != '+') continue;
              if (y.negativeMask() & mask) continue;
              z = y;
              break;
            }
            if (z) break;
          }
          if (!z) {
            allFound = false;
            break;
          }
          zs.push_back(std::move(*z));
        }
        if (!allFound) continue;
        AvoidanceCertificate cert{sigmaTilde, std::move(zs)};
        if (verifyAvoidanceCertificate(program, nodes, cert)) {
          result.certificate = std::move(cert);
          return result;
        }
      }
    } while (std::next_permutation(order.begin(), order.end()));
  }
  return result;
}

bool verifyLeviCertificate(const OrientedMatroid& mPrime, const std::vector<SignVector>& ys,
                           const Localization& sigma, const std::vector<SignVector>& ws) {
  if (ys.size() != ws.size())
    throw PreconditionError("one W covector per Y covector required");
  auto report = validateLocalization(mPrime, sigma);
  if (!report.valid) throw PreconditionError("invalid localization");
  for (const auto& y : ys)
    if (!mPrime.isCovector(y)) throw PreconditionError("Y is not a covector of the base OM");
  OrientedMatroid mhat = extend(mPrime, sigma);
  int h = mhat.ground()->indexOfOrThrow(sigma.newLabel());
  for (size_t i = 0; i < ws.size(); ++i) {
    const SignVector& w = ws[i];
    if (!w.ground()->sameAs(*mhat.ground())) return false;
    if (w.chr(h) != '0') return false;
    for (int e = 0; e < mhat.groundSize(); ++e) {
      if (e == h) continue;
      if (w.chr(e) != ys[i].chr(e < h ? e : e - 1)) return false;
    }
    if (!mhat.isCovector(w)) return false;
  }
  return true;
}

// ---------------------------------------------------------------------------
// Vertex connectivity
// ---------------------------------------------------------------------------

int vertexConnectivity(const UndirectedGraph& g) {
  const int n = static_cast<int>(g.nodes.size());
  if (n <= 1) return 0;
  std::vector<std::vector<bool>> adj(n, std::vector<bool>(n, false));
  for (auto [u, v] : g.edges) adj[u][v] = adj[v][u] = true;
  bool complete = true;
  for (int i = 0; i < n && complete; ++i)
    for (int j = i + 1; j < n && complete; ++j)
      if (!adj[i][j]) complete = false;
  if (complete) return n - 1;

  int best = n;
  for (int spair = 0; spair < n; ++spair) {
    for (int tpair = spair + 1; tpair < n; ++tpair) {
      if (adj[spair][tpair]) continue;
      Digraph d;
      for (int i = 0; i < n; ++i) d.labels.push_back("n" + std::to_string(i));
      for (auto [u, v] : g.edges) {
        d.arcs.emplace_back(u, v);
        d.arcs.emplace_back(v, u);
      }
      d.source = spair;
      d.sink = tpair;
      best = std::min(best, maxIndependentPaths(d).count);
    }
  }
  return best;
}

}  // namespace omp
