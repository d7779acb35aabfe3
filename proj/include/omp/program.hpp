#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "omp/om.hpp"

namespace omp {

// ---------------------------------------------------------------------------
// OMProgram: an oriented matroid of rank r on [n] u {f,g} with designated
// objective element f and right-hand-side element g.
// ---------------------------------------------------------------------------

struct ProgramValidation {
  bool bounded = false;         // every nonnegative cocircuit of M\f covers g
  bool acyclic = false;         // every e in [n] has a nonnegative cocircuit with +
  bool fNondegenerate = false;  // circuits through f have support r+1
  bool noLoops = false;
  std::vector<std::string> details;
  bool ok() const { return bounded && acyclic && fNondegenerate && noLoops; }
};

class OMProgram {
 public:
  OMProgram(OrientedMatroid m, const std::string& fLabel, const std::string& gLabel);

  const OrientedMatroid& matroid() const { return m_; }
  int rank() const { return m_.rank(); }
  int fIndex() const { return f_; }
  int gIndex() const { return g_; }
  const std::string& fLabel() const { return m_.ground()->label(f_); }
  const std::string& gLabel() const { return m_.ground()->label(g_); }
  // Mask of the coordinate elements [n] over the program ground set.
  std::uint32_t coordinateMask() const;

  const ProgramValidation& validation() const;
  void requireValid() const;

  // Cached minors.
  const OrientedMatroid& deleteF() const;           // M \ f
  const OrientedMatroid& contractG() const;         // M / g
  const OrientedMatroid& contractFG() const;        // M / {f,g}
  const OrientedMatroid& deleteFContractG() const;  // M \ f / g

 private:
  OrientedMatroid m_;
  int f_, g_;
  mutable std::optional<ProgramValidation> validation_;
  mutable std::optional<OrientedMatroid> deleteF_, contractG_, contractFG_, deleteFContractG_;
};

ProgramValidation validateProgram(const OrientedMatroid& m, const std::string& fLabel,
                                  const std::string& gLabel);

// ---------------------------------------------------------------------------
// Faces of the oriented matroid polytope of M\f: F = [n] \ support(Y) for Y
// a nonnegative covector, ordered by inclusion.  Masks use program-ground
// element indices (f and g bits never set).
// ---------------------------------------------------------------------------

struct Face {
  std::uint32_t elements;
  int rank;  // rank of the element set in M\f (Las Vergnas lattice rank)
  bool operator==(const Face&) const = default;
};

std::vector<Face> faces(const OMProgram& program);

struct UndirectedGraph {
  std::vector<std::uint32_t> nodes;  // rank-(r-1) faces, sorted
  std::vector<std::pair<int, int>> edges;
};

// Graph of the Edmonds-Mandel sphere: nodes are the rank-(r-1) faces,
// adjacent when the intersection has rank r-2.
UndirectedGraph emGraph(const OMProgram& program);

// ---------------------------------------------------------------------------
// ProgramDigraph: K_f (or K_h, or a subdivision digraph).
// ---------------------------------------------------------------------------

struct ProgramDigraph {
  GroundPtr ground;                       // ground set the node masks refer to
  std::vector<std::uint32_t> nodes;       // sorted
  std::vector<std::pair<int, int>> arcs;  // (from,to) node indices
  int source = -1, sink = -1;

  int indexOfNode(std::uint32_t mask) const;
  bool hasArc(int u, int v) const;
  std::vector<std::pair<int, int>> undirectedEdges() const;
  std::string nodeName(int i) const;
};

// Orients the Edmonds-Mandel graph by eliminating g: for adjacent nodes v,v'
// the cocircuit Y'' vanishing on their intersection and on g points the arc
// toward v' exactly when Y''_f agrees with the v-side.  The fundamental
// circuit rule is asserted to agree for every admissible base.
ProgramDigraph orient(const OMProgram& program);

// Unique out-degree-0 and in-degree-0 node; cross-checked against the convex
// hull characterization (f covered by the source, -f by the sink).
std::pair<std::uint32_t, std::uint32_t> sourceSink(const OMProgram& program,
                                                   const ProgramDigraph& kf);

}  // namespace omp
