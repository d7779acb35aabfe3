#include "omp/tracer.hpp"

#include <algorithm>
#include <bit>

namespace omp {

namespace {

std::string patternName(IntervalPattern p) {
  switch (p) {
    case IntervalPattern::FH: return "[f,h]";
    case IntervalPattern::FNegH: return "[f,-h]";
    case IntervalPattern::NegHNegF: return "[-h,-f]";
  }
  return "?";
}

}  // namespace

PathTracer::PathTracer(const OMProgram& program, Localization sigmaOfMg)
    : program_(program), sigma_(std::move(sigmaOfMg)), kf_(orient(program)),
      mhat_(extend(program.contractG(), sigma_)),
      mhatDelF_(deleteElement(mhat_, mhat_.ground()->indexOfOrThrow(program.fLabel()))) {
  fMhat_ = mhat_.ground()->indexOfOrThrow(program_.fLabel());
  hMhat_ = mhat_.ground()->indexOfOrThrow(sigma_.newLabel());
  if (!isGeneralPosition(mhat_, hMhat_))
    throw PreconditionError("extension element is not in general position in Mhat");
  if (mhatDelF_.rank() != program_.rank() - 1)
    throw PreconditionError("deleting f from Mhat drops the rank (f is a coloop)");
  int hDelF = mhatDelF_.ground()->indexOfOrThrow(sigma_.newLabel());
  if (!isGeneralPosition(mhatDelF_, hDelF))
    throw PreconditionError("extension element is not in general position in Mhat\\f");
  // Mhat \ f \ h must recover M \ f / g.
  OrientedMatroid back = deleteElement(mhatDelF_, hDelF);
  if (!(back.cocircuits() == program_.deleteFContractG().cocircuits()))
    throw InternalError("Mhat\\f does not extend M\\f/g");
  buildKh();
}

void PathTracer::buildKh() {
  kh_.ground = kf_.ground;
  kh_.nodes = kf_.nodes;
  const GroundSet& programGround = *program_.matroid().ground();
  const GroundSet& minorGround = *mhatDelF_.ground();
  int hIdx = minorGround.indexOfOrThrow(sigma_.newLabel());

  for (auto [i, j] : kf_.undirectedEdges()) {
    std::uint32_t v = kf_.nodes[i], w = kf_.nodes[j];
    std::uint32_t inter = translateMask(programGround, minorGround, v & w);
    std::uint32_t vOnly = translateMask(programGround, minorGround, v & ~w);
    std::uint32_t wOnly = translateMask(programGround, minorGround, w & ~v);
    std::optional<SignVector> edgeCo;
    for (const auto& canonical : mhatDelF_.cocircuits()) {
      for (const SignVector& y : {canonical, canonical.negated()}) {
        if ((y.zeroMask() & inter) != inter) continue;
        if ((y.positiveMask() & wOnly) != wOnly) continue;
        if ((y.negativeMask() & vOnly) != vOnly) continue;
        if (edgeCo) throw InternalError("K_h edge cocircuit not unique");
        edgeCo = y;
      }
    }
    if (!edgeCo) throw InternalError("no K_h edge cocircuit for an edge of K_f");
    char yh = edgeCo->chr(hIdx);
    if (yh == '0')
      throw DegeneracyError("K_h edge cocircuit vanishes at h; h is not in general position");
    if (yh == '-') kh_.arcs.emplace_back(i, j);
    else kh_.arcs.emplace_back(j, i);
  }

  std::vector<int> indeg(kh_.nodes.size(), 0), outdeg(kh_.nodes.size(), 0);
  for (auto [u, v] : kh_.arcs) {
    ++outdeg[u];
    ++indeg[v];
  }
  kh_.source = kh_.sink = -1;
  for (size_t i = 0; i < kh_.nodes.size(); ++i) {
    if (indeg[i] == 0) {
      if (kh_.source >= 0) throw InternalError("K_h has multiple sources");
      kh_.source = static_cast<int>(i);
    }
    if (outdeg[i] == 0) {
      if (kh_.sink >= 0) throw InternalError("K_h has multiple sinks");
      kh_.sink = static_cast<int>(i);
    }
  }
  if (kh_.source < 0 || kh_.sink < 0) throw InternalError("K_h lacks a source or a sink");
}

bool PathTracer::membership(std::uint32_t programMask, IntervalPattern pattern) const {
  const GroundSet& programGround = *program_.matroid().ground();
  const GroundSet& hatGround = *mhat_.ground();
  std::uint32_t mask = translateMask(programGround, hatGround, programMask);
  std::string entries(hatGround.size(), '0');
  for (int i : maskToIndices(mask)) entries[i] = '+';
  switch (pattern) {
    case IntervalPattern::FH:
      entries[fMhat_] = '-';
      entries[hMhat_] = '-';
      break;
    case IntervalPattern::FNegH:
      entries[fMhat_] = '-';
      entries[hMhat_] = '+';
      break;
    case IntervalPattern::NegHNegF:
      entries[fMhat_] = '+';
      entries[hMhat_] = '+';
      break;
  }
  return mhat_.isVector(SignVector(mhat_.ground(), std::move(entries)));
}

// Walks the component of `anchor` inside the interval digraph of `pattern`;
// returns the node sequence from `expectedFar` to `anchor`.
std::vector<int> PathTracer::walkComponent(IntervalPattern pattern, int anchor,
                                           int expectedFar) const {
  const int n = static_cast<int>(kf_.nodes.size());
  std::vector<bool> member(n, false);
  for (int i = 0; i < n; ++i) member[i] = membership(kf_.nodes[i], pattern);
  if (!member[anchor])
    throw InternalError("anchor node is not a member of " + patternName(pattern));

  const GroundSet& programGround = *program_.matroid().ground();
  const GroundSet& hatGround = *mhat_.ground();

  std::vector<std::vector<int>> adj(n);
  for (auto [i, j] : kf_.undirectedEdges()) {
    if (!member[i] || !member[j]) continue;
    std::uint32_t tau = kf_.nodes[i] & kf_.nodes[j];
    if (!membership(tau, pattern)) continue;

    // Sign sanity on the ridge cocircuit of Mhat, per the interval digraph
    // definition, plus agreement of the induced orientation with K_f.
    std::uint32_t inter = translateMask(programGround, hatGround, tau);
    std::uint32_t iOnly = translateMask(programGround, hatGround, kf_.nodes[i] & ~kf_.nodes[j]);
    std::uint32_t jOnly = translateMask(programGround, hatGround, kf_.nodes[j] & ~kf_.nodes[i]);
    std::optional<SignVector> ridgeCo;
    for (const auto& canonical : mhat_.cocircuits()) {
      for (const SignVector& y : {canonical, canonical.negated()}) {
        if ((y.zeroMask() & inter) != inter) continue;
        if ((y.positiveMask() & jOnly) != jOnly) continue;
        if ((y.negativeMask() & iOnly) != iOnly) continue;
        ridgeCo = y;
      }
    }
    if (!ridgeCo) throw InternalError("no ridge cocircuit in Mhat for a member ridge");
    char yf = ridgeCo->chr(fMhat_), yh = ridgeCo->chr(hMhat_);
    if (yf == '0' || yh == '0')
      throw DegeneracyError("ridge cocircuit vanishes at f or h");
    bool expectOpposite = pattern != IntervalPattern::FNegH;
    if ((yf != yh) != expectOpposite)
      throw InternalError("ridge cocircuit signs at f,h contradict " + patternName(pattern));
    // Arc direction integrity: leaves the cell whose side disagrees with f.
    bool arcIToJ = yf == '-';
    if (arcIToJ ? !kf_.hasArc(i, j) : !kf_.hasArc(j, i))
      throw InternalError("interval digraph arc disagrees with K_f");

    adj[i].push_back(j);
    adj[j].push_back(i);
  }
  for (int i = 0; i < n; ++i)
    if (member[i] && adj[i].size() > 2)
      throw DegeneracyError("more than two admissible ridges at node " + kf_.nodeName(i) +
                            " in " + patternName(pattern));

  // The component of the anchor must be a simple path ending at expectedFar.
  std::vector<int> path{anchor};
  int prev = -1, cur = anchor;
  // Walk in one direction, then the other; assemble with anchor inside.
  std::vector<int> left, right;
  if (!adj[anchor].empty()) {
    prev = anchor;
    cur = adj[anchor][0];
    while (true) {
      left.push_back(cur);
      int next = -1;
      for (int x : adj[cur])
        if (x != prev) next = x;
      if (next < 0) break;
      if (next == anchor) throw InternalError("interval component contains a cycle");
      prev = cur;
      cur = next;
    }
  }
  if (adj[anchor].size() > 1) {
    prev = anchor;
    cur = adj[anchor][1];
    while (true) {
      right.push_back(cur);
      int next = -1;
      for (int x : adj[cur])
        if (x != prev) next = x;
      if (next < 0) break;
      if (next == anchor) throw InternalError("interval component contains a cycle");
      prev = cur;
      cur = next;
    }
  }
  // Path from one endpoint through anchor to the other.
  std::vector<int> component;
  for (auto it = left.rbegin(); it != left.rend(); ++it) component.push_back(*it);
  component.push_back(anchor);
  for (int x : right) component.push_back(x);

  // The anchor must be an endpoint of its component (the paths of the
  // construction end at it), and the far endpoint must be as expected.
  if (component.front() != anchor && component.back() != anchor)
    throw InternalError("anchor is interior to its " + patternName(pattern) + " component");
  if (component.back() == anchor) std::reverse(component.begin(), component.end());
  // Now component.front() == anchor.
  if (component.back() != expectedFar)
    throw InternalError("component of " + patternName(pattern) + " ends at " +
                        kf_.nodeName(component.back()) + " instead of " +
                        kf_.nodeName(expectedFar));
  std::reverse(component.begin(), component.end());  // expectedFar ... anchor
  return component;
}

TracedPath PathTracer::trace() const {
  int joint = kh_.sink;
  // Prefix: component of K_[f,-h] from source(K_f) to sink(K_h).
  std::vector<int> prefix = walkComponent(IntervalPattern::FNegH, joint, kf_.source);
  // Suffix: component of K_[-h,-f] from sink(K_h) to sink(K_f), walked from
  // the joint; walkComponent returns expectedFar..anchor so flip roles.
  std::vector<int> suffix = walkComponent(IntervalPattern::NegHNegF, joint, kf_.sink);
  std::reverse(suffix.begin(), suffix.end());  // joint ... sink(K_f)

  TracedPath path;
  path.nodes = prefix;
  path.jointPos = static_cast<int>(prefix.size()) - 1;
  for (size_t i = 1; i < suffix.size(); ++i) path.nodes.push_back(suffix[i]);

  // Postconditions: simple, monotone, correct endpoints, segments meet only
  // at the joint.
  std::vector<bool> seen(kf_.nodes.size(), false);
  for (int x : path.nodes) {
    if (seen[x]) throw InternalError("traced path revisits " + kf_.nodeName(x));
    seen[x] = true;
  }
  if (path.nodes.front() != kf_.source || path.nodes.back() != kf_.sink)
    throw InternalError("traced path endpoints are not source and sink of K_f");
  for (size_t i = 0; i + 1 < path.nodes.size(); ++i)
    if (!kf_.hasArc(path.nodes[i], path.nodes[i + 1]))
      throw InternalError("traced path uses a non-arc of K_f");
  return path;
}

// ---------------------------------------------------------------------------
// Entry points
// ---------------------------------------------------------------------------

ProgramDigraph buildKh(const OMProgram& program, const Localization& sigmaOfMg) {
  return PathTracer(program, sigmaOfMg).kh();
}

bool intervalMembership(const OMProgram& program, const Localization& sigmaOfMg,
                        std::uint32_t nodeMask, IntervalPattern pattern) {
  return PathTracer(program, sigmaOfMg).membership(nodeMask, pattern);
}

TraceResult tracePath(const OMProgram& program, const Localization& sigmaOfMg) {
  PathTracer tracer(program, sigmaOfMg);
  return {tracer.kf(), tracer.kh(), tracer.extended(), tracer.sigma(), tracer.trace()};
}

TraceResult traceFacetAvoiding(const OMProgram& program, const std::string& elementLabel) {
  int e = program.matroid().ground()->indexOfOrThrow(elementLabel);
  ProgramDigraph kf = orient(program);
  std::uint32_t bit = 1u << e;
  if ((kf.nodes[kf.source] & bit) == 0 || (kf.nodes[kf.sink] & bit) == 0)
    throw PreconditionError("element " + elementLabel +
                            " must belong to both the source and the sink face");
  Localization sigma = perturbationExtension(program, e);
  TraceResult result = tracePath(program, sigma);
  for (size_t i = 1; i + 1 < result.path.nodes.size(); ++i) {
    if (result.kf.nodes[result.path.nodes[i]] & bit)
      throw InternalError("facet-avoiding path passes through " + elementLabel);
  }
  return result;
}

Localization liftedLexLocalization(const OMProgram& program, const LexicographicRule& rule) {
  Localization sigmaTilde = localizationFromLex(program.contractFG(), rule);
  return liftExtension(program, sigmaTilde);
}

Localization defaultLiftedLocalization(const OMProgram& program) {
  const OrientedMatroid& mfg = program.contractFG();
  auto allBases = mfg.bases();
  if (allBases.empty()) throw PreconditionError("M/{f,g} has no base");
  LexicographicRule rule;
  for (int i : maskToIndices(allBases.front())) rule.terms.emplace_back(i, Sign::Plus);
  return liftedLexLocalization(program, rule);
}

}  // namespace omp
