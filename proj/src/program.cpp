#include "omp/program.hpp"

#include <algorithm>
#include <bit>
#include <sstream>

namespace omp {

// ---------------------------------------------------------------------------
// OMProgram
// ---------------------------------------------------------------------------

OMProgram::OMProgram(OrientedMatroid m, const std::string& fLabel, const std::string& gLabel)
    : m_(std::move(m)),
      f_(m_.ground()->indexOfOrThrow(fLabel)),
      g_(m_.ground()->indexOfOrThrow(gLabel)) {
  if (f_ == g_) throw PreconditionError("objective and right-hand-side coincide");
}

std::uint32_t OMProgram::coordinateMask() const {
  std::uint32_t full = (1u << m_.groundSize()) - 1;
  return full & ~(1u << f_) & ~(1u << g_);
}

const ProgramValidation& OMProgram::validation() const {
  if (!validation_) validation_ = validateProgram(m_, fLabel(), gLabel());
  return *validation_;
}

void OMProgram::requireValid() const {
  const auto& v = validation();
  if (!v.ok()) {
    std::string msg = "invalid program:";
    for (const auto& d : v.details) msg += " " + d + ";";
    throw PreconditionError(msg);
  }
}

const OrientedMatroid& OMProgram::deleteF() const {
  if (!deleteF_) deleteF_ = deleteElement(m_, f_);
  return *deleteF_;
}

const OrientedMatroid& OMProgram::contractG() const {
  if (!contractG_) contractG_ = contractElement(m_, g_);
  return *contractG_;
}

const OrientedMatroid& OMProgram::contractFG() const {
  if (!contractFG_) contractFG_ = contractElements(m_, {fLabel(), gLabel()});
  return *contractFG_;
}

const OrientedMatroid& OMProgram::deleteFContractG() const {
  if (!deleteFContractG_)
    deleteFContractG_ = contractElement(deleteF(), deleteF().ground()->indexOfOrThrow(gLabel()));
  return *deleteFContractG_;
}

ProgramValidation validateProgram(const OrientedMatroid& m, const std::string& fLabel,
                                  const std::string& gLabel) {
  ProgramValidation report;
  int f = m.ground()->indexOfOrThrow(fLabel);
  int g = m.ground()->indexOfOrThrow(gLabel);
  if (f == g) throw PreconditionError("f and g coincide");

  report.noLoops = m.loops().empty();
  if (!report.noLoops) report.details.push_back("ground set contains loops");

  OrientedMatroid mDelF = deleteElement(m, f);
  int gDel = mDelF.ground()->indexOfOrThrow(gLabel);

  // Bounded: every nonnegative cocircuit of M\f has g in its support.
  report.bounded = true;
  for (const auto& canonical : mDelF.cocircuits()) {
    for (const SignVector& y : {canonical, canonical.negated()}) {
      if (!y.isNonnegative()) continue;
      if (y.chr(gDel) == '0') {
        report.bounded = false;
        report.details.push_back("unbounded: nonnegative cocircuit " + y.str() +
                                 " of M\\f avoids g");
      }
    }
  }

  // Acyclic: for every e in [n], a nonnegative cocircuit of M\f with Y_e = +.
  report.acyclic = true;
  for (int e = 0; e < mDelF.groundSize(); ++e) {
    if (e == gDel) continue;
    bool found = false;
    for (const auto& canonical : mDelF.cocircuits()) {
      for (const SignVector& y : {canonical, canonical.negated()}) {
        if (y.isNonnegative() && y.chr(e) == '+') {
          found = true;
          break;
        }
      }
      if (found) break;
    }
    if (!found) {
      report.acyclic = false;
      report.details.push_back("not acyclic: no nonnegative cocircuit of M\\f is positive at " +
                               mDelF.ground()->label(e));
    }
  }

  // Nondegenerate objective: circuits through f have support r+1.
  report.fNondegenerate = true;
  for (const auto& c : m.circuits()) {
    std::uint32_t s = c.supportMask();
    if ((s & (1u << f)) && std::popcount(s) != m.rank() + 1) {
      report.fNondegenerate = false;
      report.details.push_back("degenerate objective: circuit " + c.canonical().str() +
                               " through f has support of size " +
                               std::to_string(std::popcount(s)));
    }
  }
  return report;
}

// ---------------------------------------------------------------------------
// Faces
// ---------------------------------------------------------------------------

namespace {

// Face masks (over the minor's own ground, excluding g) of the nonnegative
// covectors of an OM whose ground still contains g.
std::vector<std::uint32_t> nonnegativeFaceMasks(const OrientedMatroid& om, int gIdx) {
  std::vector<std::uint32_t> out;
  std::uint32_t coordMask = ((1u << om.groundSize()) - 1) & ~(gIdx >= 0 ? (1u << gIdx) : 0u);
  for (const auto& y : om.covectorSpan()) {
    if (!y.isNonnegative()) continue;
    out.push_back(coordMask & ~y.supportMask());
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

}  // namespace

std::vector<Face> faces(const OMProgram& program) {
  program.requireValid();
  const OrientedMatroid& mDelF = program.deleteF();
  int gDel = mDelF.ground()->indexOfOrThrow(program.gLabel());

  auto masks = nonnegativeFaceMasks(mDelF, gDel);

  // The poset from M\{f,g} must agree (the program is bounded).
  {
    const OrientedMatroid& mfg = deleteElements(program.matroid(),
                                                {program.fLabel(), program.gLabel()});
    auto masks2 = nonnegativeFaceMasks(mfg, -1);
    std::vector<std::uint32_t> translated;
    for (auto m2 : masks2)
      translated.push_back(translateMask(*mfg.ground(), *mDelF.ground(), m2));
    std::sort(translated.begin(), translated.end());
    if (translated != masks)
      throw InternalError("face posets of M\\f and M\\{f,g} disagree");
  }

  std::vector<Face> out;
  const GroundSet& programGround = *program.matroid().ground();
  for (std::uint32_t mask : masks) {
    int rank = mDelF.rankOf(mask);
    out.push_back({translateMask(*mDelF.ground(), programGround, mask), rank});
  }
  std::sort(out.begin(), out.end(), [](const Face& a, const Face& b) {
    if (a.rank != b.rank) return a.rank < b.rank;
    return a.elements < b.elements;
  });
  return out;
}

UndirectedGraph emGraph(const OMProgram& program) {
  program.requireValid();
  const OrientedMatroid& mDelF = program.deleteF();
  const GroundSet& programGround = *program.matroid().ground();
  const int r = program.rank();

  UndirectedGraph g;
  for (const auto& face : faces(program))
    if (face.rank == r - 1) g.nodes.push_back(face.elements);
  std::sort(g.nodes.begin(), g.nodes.end());

  auto minorMask = [&](std::uint32_t programMask) {
    return translateMask(programGround, *mDelF.ground(), programMask);
  };
  for (size_t i = 0; i < g.nodes.size(); ++i)
    for (size_t j = i + 1; j < g.nodes.size(); ++j) {
      std::uint32_t inter = g.nodes[i] & g.nodes[j];
      if (mDelF.rankOf(minorMask(inter)) == r - 2)
        g.edges.emplace_back(static_cast<int>(i), static_cast<int>(j));
    }
  return g;
}

// ---------------------------------------------------------------------------
// ProgramDigraph
// ---------------------------------------------------------------------------

int ProgramDigraph::indexOfNode(std::uint32_t mask) const {
  auto it = std::lower_bound(nodes.begin(), nodes.end(), mask);
  if (it == nodes.end() || *it != mask) return -1;
  return static_cast<int>(it - nodes.begin());
}

bool ProgramDigraph::hasArc(int u, int v) const {
  return std::find(arcs.begin(), arcs.end(), std::make_pair(u, v)) != arcs.end();
}

std::vector<std::pair<int, int>> ProgramDigraph::undirectedEdges() const {
  std::vector<std::pair<int, int>> out;
  for (auto [u, v] : arcs) out.emplace_back(std::min(u, v), std::max(u, v));
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

std::string ProgramDigraph::nodeName(int i) const {
  return maskToString(*ground, nodes.at(i));
}

ProgramDigraph orient(const OMProgram& program) {
  program.requireValid();
  const OrientedMatroid& m = program.matroid();
  const int fIdx = program.fIndex();
  const int gIdx = program.gIndex();
  const std::uint32_t coord = program.coordinateMask();

  UndirectedGraph g = emGraph(program);
  ProgramDigraph d;
  d.ground = m.ground();
  d.nodes = g.nodes;

  // Node cocircuits: zero exactly on the node within [n], nonnegative on
  // E\f, with f and g in the support.
  for (std::uint32_t v : d.nodes) {
    std::optional<SignVector> found;
    for (const auto& canonical : m.cocircuits()) {
      for (const SignVector& y : {canonical, canonical.negated()}) {
        if (y.chr(gIdx) != '+') continue;
        if (y.chr(fIdx) == '0') continue;
        if ((y.negativeMask() & coord) != 0) continue;
        if ((y.zeroMask() & coord) != v) continue;
        if (found) throw InternalError("multiple node cocircuits for " +
                                       maskToString(*m.ground(), v));
        found = y;
      }
    }
    if (!found)
      throw InternalError("no node cocircuit for " + maskToString(*m.ground(), v));
  }

  for (auto [i, j] : g.edges) {
    std::uint32_t v = d.nodes[i], w = d.nodes[j];
    std::uint32_t inter = v & w;
    std::uint32_t vOnly = v & ~w, wOnly = w & ~v;
    // Eliminating g between the node cocircuits yields the edge cocircuit:
    // zero on the intersection and on g, positive toward w, negative toward v.
    std::optional<SignVector> edgeCo;
    for (const auto& canonical : m.cocircuits()) {
      for (const SignVector& y : {canonical, canonical.negated()}) {
        if (y.chr(gIdx) != '0') continue;
        if ((y.zeroMask() & inter) != inter) continue;
        if ((y.positiveMask() & wOnly) != wOnly) continue;
        if ((y.negativeMask() & vOnly) != vOnly) continue;
        if (edgeCo) throw InternalError("edge cocircuit not unique for " +
                                        maskToString(*m.ground(), inter));
        edgeCo = y;
      }
    }
    if (!edgeCo)
      throw InternalError("no edge cocircuit for ridge " + maskToString(*m.ground(), inter));
    char yf = edgeCo->chr(fIdx);
    if (yf == '0')
      throw DegeneracyError("edge cocircuit vanishes at f despite nondegeneracy");

    // Fundamental-circuit cross-check: for every admissible base B inside
    // ([n] \ supp(Y'')) + {e,g}, the circuit X(B,f) meets Y'' on {e,f} and
    // the arc leaves v iff X_e is negative.
    for (int e : maskToIndices(vOnly)) {
      std::uint32_t allowed = (coord & edgeCo->zeroMask()) | (1u << e) | (1u << gIdx);
      auto allowedIdx = maskToIndices(allowed);
      if (static_cast<int>(allowedIdx.size()) >= m.rank()) {
        for (const auto& subset : Chirotope::sortedSubsets(
                 static_cast<int>(allowedIdx.size()), m.rank())) {
          std::uint32_t base = 0;
          for (int k : subset) base |= 1u << allowedIdx[k];
          if (!m.isBase(base)) continue;
          SignVector x = m.fundamentalCircuit(base, fIdx);
          std::uint32_t common = x.supportMask() & edgeCo->supportMask();
          if (common != ((1u << e) | (1u << fIdx)))
            throw InternalError("fundamental circuit support check failed");
          bool leavesV1 = yf == '-';
          bool leavesV2 = x.chr(e) == '-';
          if (leavesV1 != leavesV2)
            throw InternalError("orientation rules disagree on edge " +
                                maskToString(*m.ground(), inter));
        }
      }
    }

    if (yf == '-') d.arcs.emplace_back(i, j);
    else d.arcs.emplace_back(j, i);
  }

  // Unique source and sink.
  std::vector<int> indeg(d.nodes.size(), 0), outdeg(d.nodes.size(), 0);
  for (auto [u, v] : d.arcs) {
    ++outdeg[u];
    ++indeg[v];
  }
  for (size_t i = 0; i < d.nodes.size(); ++i) {
    if (indeg[i] == 0) {
      if (d.source >= 0) throw InternalError("multiple sources in K_f");
      d.source = static_cast<int>(i);
    }
    if (outdeg[i] == 0) {
      if (d.sink >= 0) throw InternalError("multiple sinks in K_f");
      d.sink = static_cast<int>(i);
    }
  }
  if (d.source < 0 || d.sink < 0) throw InternalError("K_f lacks a source or a sink");
  return d;
}

std::pair<std::uint32_t, std::uint32_t> sourceSink(const OMProgram& program,
                                                   const ProgramDigraph& kf) {
  std::vector<int> indeg(kf.nodes.size(), 0), outdeg(kf.nodes.size(), 0);
  for (auto [u, v] : kf.arcs) {
    ++outdeg[u];
    ++indeg[v];
  }
  int src = -1, snk = -1;
  for (size_t i = 0; i < kf.nodes.size(); ++i) {
    if (indeg[i] == 0) {
      if (src >= 0) throw PreconditionError("multiple sources");
      src = static_cast<int>(i);
    }
    if (outdeg[i] == 0) {
      if (snk >= 0) throw PreconditionError("multiple sinks");
      snk = static_cast<int>(i);
    }
  }
  if (src < 0 || snk < 0) throw PreconditionError("source or sink missing");

  // Convex-hull cross-check in M/g: f covered by the source, -f by the sink.
  const OrientedMatroid& mg = program.contractG();
  const GroundSet& programGround = *program.matroid().ground();
  int fMg = mg.ground()->indexOfOrThrow(program.fLabel());
  auto toMg = [&](std::uint32_t mask) {
    std::uint32_t out = 0;
    for (int i = 0; i < static_cast<int>(programGround.size()); ++i)
      if (mask & (1u << i)) out |= 1u << mg.ground()->indexOfOrThrow(programGround.label(i));
    return out;
  };
  if (!mg.convMembership(fMg, toMg(kf.nodes[src]), Sign::Plus))
    throw InternalError("source fails the conv cross-check (f not covered)");
  if (!mg.convMembership(fMg, toMg(kf.nodes[snk]), Sign::Minus))
    throw InternalError("sink fails the conv cross-check (-f not covered)");
  return {kf.nodes[src], kf.nodes[snk]};
}

}  // namespace omp
