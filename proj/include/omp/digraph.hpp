#pragma once

#include <optional>
#include <string>
#include <vector>

#include "omp/program.hpp"
#include "omp/sign.hpp"

namespace omp {

// ---------------------------------------------------------------------------
// Digraph: a plain labeled digraph with a unique source and sink.  Program
// digraphs convert into this form for Menger computations and export; figure
// digraphs from the catalog live here directly.
// ---------------------------------------------------------------------------

struct Digraph {
  std::vector<std::string> labels;
  std::vector<std::pair<int, int>> arcs;  // deduplicated, no self-arcs
  int source = -1, sink = -1;
  std::optional<int> dimensionHint;

  int nodeCount() const { return static_cast<int>(labels.size()); }
  int indexOf(const std::string& label) const;
  int indexOfOrThrow(const std::string& label) const;
  bool hasArc(int u, int v) const;

  // Fills source/sink from in/out degrees; throws unless both are unique.
  void deriveSourceSink();
  // Structural checks: labels distinct, arcs in range, deduplicated.
  void validate() const;
};

Digraph toDigraph(const ProgramDigraph& d);

// Directed source-to-sink path whose internal nodes avoid `forbidden`;
// nullopt when none exists.
std::optional<std::vector<int>> monotonePathAvoiding(const Digraph& d,
                                                     const std::vector<int>& forbidden);

}  // namespace omp
