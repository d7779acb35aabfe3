#pragma once

#include "omp/extension.hpp"
#include "omp/holt_klee.hpp"
#include "omp/om.hpp"
#include "omp/program.hpp"

namespace omp {

// ---------------------------------------------------------------------------
// Subdivisions of an oriented matroid and P-matrix complementarity cubes.
// ---------------------------------------------------------------------------

struct PropertyPResult {
  bool holds = false;
  std::optional<SignVector> violatingCircuit;
};

// Every circuit must have a complementary pair i, n+i with equal nonzero
// signs.  Ground set must have 2n elements with rank n.
PropertyPResult checkPropertyP(const OrientedMatroid& n);

// The 2^n complementary bases {B : |B n {i, n+i}| = 1}, as masks.
std::vector<std::uint32_t> cubeSubdivision(int n);

struct SubdivisionViolation {
  std::string condition;  // "1", "3", "4", "nonneg-cocircuit", "2(sampled)"
  std::string detail;
};

struct SubdivisionReport {
  bool cond1 = true, cond3 = true, cond4 = true;
  bool noNonnegativeCocircuits = true;
  bool cond2SampledOk = true;  // checked only against a finite extension
  int cond2Samples = 0;        // sample; reported as "sampled", never proved
  std::vector<SubdivisionViolation> violations;
  bool checkedOk() const { return cond1 && cond3 && cond4 && noNonnegativeCocircuits; }
};

// Conditions 1, 3, 4 of the subdivision definition checked exactly; the
// universally quantified condition 2 sampled over the given extensions
// (a default lexicographic family when none are supplied).
SubdivisionReport validateSubdivision(const OrientedMatroid& n,
                                      const std::vector<std::uint32_t>& cells,
                                      const std::vector<Localization>& extensionSample);
SubdivisionReport validateSubdivision(const OrientedMatroid& n,
                                      const std::vector<std::uint32_t>& cells);

// Faces of the restriction N(cell), as masks over N's ground with ranks.
std::vector<Face> restrictionFaces(const OrientedMatroid& n, std::uint32_t cellMask);

// Digraph over the cells: edges where the intersection has corank 1,
// oriented by the cocircuit of N+f vanishing there with + at f; source and
// sink are the unique cells covering f and -f.
ProgramDigraph subdivisionDigraph(const OrientedMatroid& n,
                                  const std::vector<std::uint32_t>& cells,
                                  const Localization& sigmaF);

// ---------------------------------------------------------------------------
// P-matrix oriented matroid complementarity problems
// ---------------------------------------------------------------------------

struct PomcpInstance {
  OrientedMatroid n;       // rank n on [2n], property (P)
  Localization extension;  // element f
};

// OM whose vectors are the sign vectors of the row space of [M | I]
// (equivalently: realized here by [I | -M^T]).
OrientedMatroid pomcpMatroid(const RationalMatrix& m);
// Instance with property (P) enforced; default extension is the
// lexicographic rule (all +) over the base {1..n}.
PomcpInstance makePomcpInstance(const RationalMatrix& m);
PomcpInstance makePomcpInstance(const RationalMatrix& m, const LexicographicRule& rule);

// All 2^n - 1 principal minors positive, exact arithmetic.
bool pMatrixCheck(const RationalMatrix& m);

struct PomcpVerdict {
  bool holds = false;
  int k = 0;
  int required = 0;  // n
  bool uniqueSinkPerFace = false;
  MengerResult menger;
};

PomcpVerdict checkPomcpHoltKlee(const PomcpInstance& instance);

}  // namespace omp
