#include "omp/pomcp.hpp"

#include <algorithm>
#include <bit>

namespace omp {

// ---------------------------------------------------------------------------
// Property (P)
// ---------------------------------------------------------------------------

PropertyPResult checkPropertyP(const OrientedMatroid& n) {
  const int size = n.groundSize();
  if (size % 2 != 0) throw PreconditionError("property (P) needs a 2n-element ground set");
  const int half = size / 2;
  if (n.rank() != half)
    throw PreconditionError("property (P) needs rank n on 2n elements");
  PropertyPResult result;
  result.holds = true;
  for (const auto& c : n.circuits()) {
    bool good = false;
    for (int i = 0; i < half && !good; ++i) {
      char a = c.chr(i), b = c.chr(half + i);
      if (a != '0' && a == b) good = true;
    }
    if (!good) {
      result.holds = false;
      result.violatingCircuit = c;
      return result;
    }
  }
  return result;
}

std::vector<std::uint32_t> cubeSubdivision(int n) {
  if (n < 1) throw PreconditionError("cube dimension must be at least 1");
  if (2 * n > config::kMaxGroundSize)
    throw CapExceededError("cube dimension exceeds the ground-set cap");
  std::vector<std::uint32_t> cells;
  for (std::uint32_t pick = 0; pick < (1u << n); ++pick) {
    std::uint32_t cell = 0;
    for (int i = 0; i < n; ++i)
      cell |= (pick & (1u << i)) ? (1u << (n + i)) : (1u << i);
    cells.push_back(cell);
  }
  std::sort(cells.begin(), cells.end());
  return cells;
}

// ---------------------------------------------------------------------------
// Subdivision validation
// ---------------------------------------------------------------------------

std::vector<Face> restrictionFaces(const OrientedMatroid& n, std::uint32_t cellMask) {
  std::vector<int> dropped;
  for (int i = 0; i < n.groundSize(); ++i)
    if (!(cellMask & (1u << i))) dropped.push_back(i);
  OrientedMatroid restriction = n;
  // Delete elements outside the cell, highest index first so indices hold.
  for (auto it = dropped.rbegin(); it != dropped.rend(); ++it)
    restriction = deleteElement(restriction, *it);

  std::vector<Face> out;
  std::vector<std::uint32_t> seen;
  const GroundSet& full = *n.ground();
  for (const auto& y : restriction.covectorSpan()) {
    if (!y.isNonnegative()) continue;
    std::uint32_t faceMask =
        cellMask & ~translateMask(*restriction.ground(), full, y.supportMask());
    if (std::find(seen.begin(), seen.end(), faceMask) != seen.end()) continue;
    seen.push_back(faceMask);
    out.push_back({faceMask, n.rankOf(faceMask)});
  }
  std::sort(out.begin(), out.end(), [](const Face& a, const Face& b) {
    if (a.rank != b.rank) return a.rank < b.rank;
    return a.elements < b.elements;
  });
  return out;
}

namespace {

// Faces of N itself (complements of nonnegative covector supports).
std::vector<Face> omFaces(const OrientedMatroid& n) {
  std::uint32_t full = (1u << n.groundSize()) - 1;
  return restrictionFaces(n, full);
}

std::vector<Localization> defaultExtensionSample(const OrientedMatroid& n) {
  std::vector<Localization> sample;
  auto bases = n.bases();
  int budget = 4;
  for (std::uint32_t base : bases) {
    if (budget-- <= 0) break;
    auto idx = maskToIndices(base);
    LexicographicRule plus, alt;
    for (size_t i = 0; i < idx.size(); ++i) {
      plus.terms.emplace_back(idx[i], Sign::Plus);
      alt.terms.emplace_back(idx[i], i % 2 ? Sign::Minus : Sign::Plus);
    }
    sample.push_back(localizationFromLex(n, plus, "f"));
    sample.push_back(localizationFromLex(n, alt, "f"));
  }
  return sample;
}

}  // namespace

SubdivisionReport validateSubdivision(const OrientedMatroid& n,
                                      const std::vector<std::uint32_t>& cells,
                                      const std::vector<Localization>& extensionSample) {
  SubdivisionReport report;
  const GroundSet& ground = *n.ground();
  const int cellRank = n.rank();

  // No nonnegative cocircuits.
  for (const auto& canonical : n.cocircuits()) {
    for (const SignVector& y : {canonical, canonical.negated()}) {
      if (y.isNonnegative()) {
        report.noNonnegativeCocircuits = false;
        report.violations.push_back({"nonneg-cocircuit", "nonnegative cocircuit " + y.str()});
      }
    }
  }

  // Condition 1: every cell has full rank.
  for (std::uint32_t cell : cells) {
    if (n.rankOf(cell) != cellRank) {
      report.cond1 = false;
      report.violations.push_back(
          {"1", "cell " + maskToString(ground, cell) + " has rank " +
                    std::to_string(n.rankOf(cell)) + " != " + std::to_string(cellRank)});
    }
  }

  // Condition 3: pairwise intersections are common faces of the restrictions.
  std::vector<std::vector<Face>> cellFaces;
  cellFaces.reserve(cells.size());
  for (std::uint32_t cell : cells) cellFaces.push_back(restrictionFaces(n, cell));
  auto isFaceOf = [&](size_t cellIdx, std::uint32_t mask) {
    for (const auto& f : cellFaces[cellIdx])
      if (f.elements == mask) return true;
    return false;
  };
  for (size_t i = 0; i < cells.size(); ++i) {
    for (size_t j = i + 1; j < cells.size(); ++j) {
      std::uint32_t inter = cells[i] & cells[j];
      if (!isFaceOf(i, inter) || !isFaceOf(j, inter)) {
        report.cond3 = false;
        report.violations.push_back(
            {"3", maskToString(ground, inter) + " is not a common face of " +
                      maskToString(ground, cells[i]) + " and " +
                      maskToString(ground, cells[j])});
      }
    }
  }

  // Condition 4: every facet of a cell lies in a facet of N or in exactly
  // two cells.
  std::vector<Face> facesOfN = omFaces(n);
  for (size_t i = 0; i < cells.size(); ++i) {
    for (const auto& facet : cellFaces[i]) {
      if (facet.rank != cellRank - 1) continue;
      bool inFacetOfN = false;
      for (const auto& f : facesOfN)
        if (f.rank == cellRank - 1 && (facet.elements & ~f.elements) == 0) {
          inFacetOfN = true;
          break;
        }
      if (inFacetOfN) continue;
      int containing = 0;
      for (std::uint32_t cell : cells)
        if ((facet.elements & ~cell) == 0) ++containing;
      if (containing != 2) {
        report.cond4 = false;
        report.violations.push_back(
            {"4", "facet " + maskToString(ground, facet.elements) + " of cell " +
                      maskToString(ground, cells[i]) + " lies in " +
                      std::to_string(containing) + " cells"});
      }
    }
  }

  // Condition 2, sampled: conv membership localizes to intersections.
  auto sample = extensionSample.empty() ? defaultExtensionSample(n) : extensionSample;
  report.cond2Samples = static_cast<int>(sample.size());
  for (const auto& sigma : sample) {
    OrientedMatroid ext = extend(n, sigma);
    int f = ext.ground()->indexOfOrThrow(sigma.newLabel());
    for (size_t i = 0; i < cells.size(); ++i) {
      if (!ext.convMembership(f, cells[i], Sign::Plus)) continue;
      for (size_t j = 0; j < cells.size(); ++j) {
        if (i == j) continue;
        if (!ext.convMembership(f, cells[j], Sign::Plus)) continue;
        if (!ext.convMembership(f, cells[i] & cells[j], Sign::Plus)) {
          report.cond2SampledOk = false;
          report.violations.push_back(
              {"2(sampled)", "extension " + sigma.newLabel() + " lies in conv of " +
                                 maskToString(ground, cells[i]) + " and " +
                                 maskToString(ground, cells[j]) +
                                 " but not of their intersection"});
        }
      }
    }
  }
  return report;
}

SubdivisionReport validateSubdivision(const OrientedMatroid& n,
                                      const std::vector<std::uint32_t>& cells) {
  return validateSubdivision(n, cells, {});
}

// ---------------------------------------------------------------------------
// Subdivision digraph
// ---------------------------------------------------------------------------

ProgramDigraph subdivisionDigraph(const OrientedMatroid& n,
                                  const std::vector<std::uint32_t>& cells,
                                  const Localization& sigmaF) {
  OrientedMatroid ext = extend(n, sigmaF);
  int f = ext.ground()->indexOfOrThrow(sigmaF.newLabel());
  if (!isGeneralPosition(ext, f))
    throw PreconditionError("subdivision extension is not in general position");

  ProgramDigraph d;
  d.ground = n.ground();
  d.nodes = cells;
  std::sort(d.nodes.begin(), d.nodes.end());

  const int cellRank = n.rank();
  for (size_t i = 0; i < d.nodes.size(); ++i) {
    for (size_t j = i + 1; j < d.nodes.size(); ++j) {
      std::uint32_t inter = d.nodes[i] & d.nodes[j];
      if (n.rankOf(inter) != cellRank - 1) continue;
      // Cocircuit of N+f vanishing on the ridge, normalized to + at f.
      std::optional<SignVector> ridge;
      for (const auto& canonical : ext.cocircuits()) {
        for (const SignVector& y : {canonical, canonical.negated()}) {
          if (y.chr(f) != '+') continue;
          if ((y.zeroMask() & inter) != inter) continue;
          if (ridge) throw InternalError("ridge cocircuit not unique");
          ridge = y;
        }
      }
      if (!ridge) throw InternalError("no ridge cocircuit with -f- in support");
      std::uint32_t iOnly = d.nodes[i] & ~d.nodes[j];
      std::uint32_t jOnly = d.nodes[j] & ~d.nodes[i];
      bool iPos = (ridge->positiveMask() & iOnly) == iOnly;
      bool iNeg = (ridge->negativeMask() & iOnly) == iOnly;
      bool jPos = (ridge->positiveMask() & jOnly) == jOnly;
      bool jNeg = (ridge->negativeMask() & jOnly) == jOnly;
      if (!((iPos && jNeg) || (iNeg && jPos)))
        throw DegeneracyError("cells are not separated by the ridge cocircuit (not a subdivision?)");
      if (iPos) d.arcs.emplace_back(static_cast<int>(i), static_cast<int>(j));
      else d.arcs.emplace_back(static_cast<int>(j), static_cast<int>(i));
    }
  }

  // Source: unique cell sigma with a vector X, X_+ = sigma, X_- = {f}.
  // Sink: unique cell with a nonnegative vector X, X_+ = sigma + {f}.
  int structSource = -1, structSink = -1;
  {
    std::vector<int> indeg(d.nodes.size(), 0), outdeg(d.nodes.size(), 0);
    for (auto [u, v] : d.arcs) {
      ++outdeg[u];
      ++indeg[v];
    }
    for (size_t i = 0; i < d.nodes.size(); ++i) {
      if (indeg[i] == 0) {
        if (structSource >= 0) throw InternalError("multiple structural sources");
        structSource = static_cast<int>(i);
      }
      if (outdeg[i] == 0) {
        if (structSink >= 0) throw InternalError("multiple structural sinks");
        structSink = static_cast<int>(i);
      }
    }
  }
  int coverSource = -1, coverSink = -1;
  for (size_t i = 0; i < d.nodes.size(); ++i) {
    std::uint32_t mask = translateMask(*n.ground(), *ext.ground(), d.nodes[i]);
    std::string src(ext.groundSize(), '0');
    for (int b : maskToIndices(mask)) src[b] = '+';
    std::string snk = src;
    src[f] = '-';
    snk[f] = '+';
    if (ext.isVector(SignVector(ext.ground(), src))) {
      if (coverSource >= 0) throw DegeneracyError("f covered by more than one cell");
      coverSource = static_cast<int>(i);
    }
    if (ext.isVector(SignVector(ext.ground(), snk))) {
      if (coverSink >= 0) throw DegeneracyError("-f covered by more than one cell");
      coverSink = static_cast<int>(i);
    }
  }
  if (coverSource < 0 || coverSink < 0)
    throw DegeneracyError("f or -f is covered by no cell (not a subdivision?)");
  if (coverSource != structSource || coverSink != structSink)
    throw InternalError("covering cells disagree with structural source/sink");
  d.source = coverSource;
  d.sink = coverSink;
  return d;
}

// ---------------------------------------------------------------------------
// POMCP
// ---------------------------------------------------------------------------

OrientedMatroid pomcpMatroid(const RationalMatrix& m) {
  if (m.rows() != m.cols()) throw PreconditionError("POMCP matrix must be square");
  const int n = m.rows();
  RationalMatrix t(n, 2 * n);
  for (int i = 0; i < n; ++i) {
    t.at(i, i) = 1;
    for (int j = 0; j < n; ++j) t.at(i, n + j) = -m.at(j, i);
  }
  std::vector<std::string> labels;
  for (int i = 1; i <= 2 * n; ++i) labels.push_back(std::to_string(i));
  return OrientedMatroid::fromMatrix(GroundSet::make(labels), t);
}

PomcpInstance makePomcpInstance(const RationalMatrix& m, const LexicographicRule& rule) {
  OrientedMatroid n = pomcpMatroid(m);
  auto p = checkPropertyP(n);
  if (!p.holds)
    throw PreconditionError("matrix does not satisfy property (P); violating circuit " +
                            p.violatingCircuit->str());
  Localization sigma = localizationFromLex(n, rule, "f");
  return {std::move(n), std::move(sigma)};
}

PomcpInstance makePomcpInstance(const RationalMatrix& m) {
  LexicographicRule rule;
  for (int i = 0; i < m.rows(); ++i) rule.terms.emplace_back(i, Sign::Plus);
  return makePomcpInstance(m, rule);
}

bool pMatrixCheck(const RationalMatrix& m) {
  if (m.rows() != m.cols()) throw PreconditionError("P-matrix check needs a square matrix");
  const int n = m.rows();
  for (std::uint32_t subset = 1; subset < (1u << n); ++subset) {
    auto idx = maskToIndices(subset);
    RationalMatrix sub(static_cast<int>(idx.size()), static_cast<int>(idx.size()));
    for (size_t a = 0; a < idx.size(); ++a)
      for (size_t b = 0; b < idx.size(); ++b)
        sub.at(static_cast<int>(a), static_cast<int>(b)) = m.at(idx[a], idx[b]);
    if (sub.det() <= 0) return false;
  }
  return true;
}

PomcpVerdict checkPomcpHoltKlee(const PomcpInstance& instance) {
  const int half = instance.n.groundSize() / 2;
  auto cells = cubeSubdivision(half);
  ProgramDigraph d = subdivisionDigraph(instance.n, cells, instance.extension);

  PomcpVerdict verdict;
  verdict.required = half;
  verdict.menger = maxIndependentPaths(toDigraph(d));
  verdict.k = verdict.menger.count;
  verdict.holds = verdict.k >= verdict.required;

  // Unique sink on every cube face (including the cube itself).
  verdict.uniqueSinkPerFace = true;
  std::vector<int> cellIndexOf(1u << (2 * half), -1);
  for (size_t i = 0; i < d.nodes.size(); ++i) cellIndexOf[d.nodes[i]] = static_cast<int>(i);
  for (std::uint32_t fixed = 0; fixed < (1u << half) && verdict.uniqueSinkPerFace; ++fixed) {
    // Assignments of the fixed pairs: bit i chooses side n+i.
    std::vector<int> freePairs, fixedPairs;
    for (int i = 0; i < half; ++i)
      (fixed & (1u << i) ? fixedPairs : freePairs).push_back(i);
    for (std::uint32_t choice = 0; choice < (1u << fixedPairs.size()); ++choice) {
      std::vector<int> faceCells;
      for (std::uint32_t pick = 0; pick < (1u << freePairs.size()); ++pick) {
        std::uint32_t cell = 0;
        for (size_t a = 0; a < fixedPairs.size(); ++a) {
          int i = fixedPairs[a];
          cell |= (choice & (1u << a)) ? (1u << (half + i)) : (1u << i);
        }
        for (size_t a = 0; a < freePairs.size(); ++a) {
          int i = freePairs[a];
          cell |= (pick & (1u << a)) ? (1u << (half + i)) : (1u << i);
        }
        faceCells.push_back(cellIndexOf[cell]);
      }
      int sinks = 0;
      for (int ci : faceCells) {
        bool hasOut = false;
        for (auto [u, v] : d.arcs)
          if (u == ci && std::find(faceCells.begin(), faceCells.end(), v) != faceCells.end())
            hasOut = true;
        if (!hasOut) ++sinks;
      }
      if (sinks != 1) {
        verdict.uniqueSinkPerFace = false;
        break;
      }
    }
  }
  return verdict;
}

}  // namespace omp
