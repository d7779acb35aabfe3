#pragma once

#include <optional>

#include "omp/digraph.hpp"
#include "omp/extension.hpp"
#include "omp/program.hpp"

namespace omp {

// ---------------------------------------------------------------------------
// Menger: maximum internally vertex-disjoint directed source-to-sink paths.
// ---------------------------------------------------------------------------

struct PathSystem {
  std::vector<std::vector<int>> paths;  // node index sequences, source..sink
};

// Removal of `nodes` plus `directArcs` (source->sink arcs, which no vertex
// set can cover) destroys every directed source-to-sink path.
struct CutCertificate {
  std::vector<int> nodes;
  std::vector<std::pair<int, int>> directArcs;
  int size() const { return static_cast<int>(nodes.size() + directArcs.size()); }
};

struct MengerResult {
  int count = 0;
  PathSystem system;
  CutCertificate cut;
};

// Unit node capacities after node splitting, source/sink uncapacitated;
// deterministic augmentation order.  Both certificates are verified before
// returning.
MengerResult maxIndependentPaths(const Digraph& d);

// ---------------------------------------------------------------------------
// Holt-Klee verdicts
// ---------------------------------------------------------------------------

struct HoltKleeVerdict {
  bool holds = false;
  int k = 0;         // max independent monotone paths
  int required = 0;  // r-1 (or the supplied dimension)
  MengerResult menger;
};

HoltKleeVerdict checkHoltKlee(const OMProgram& program);
HoltKleeVerdict checkHoltKleeDigraph(const Digraph& d, int dimension);

// ---------------------------------------------------------------------------
// Avoidance certificates (the separating-extension machinery).
// ---------------------------------------------------------------------------

struct CoveringCovectorError : Error {
  CoveringCovectorError(const std::string& msg, std::optional<SignVector> witness)
      : Error(msg), witnessCircuit(std::move(witness)) {}
  std::optional<SignVector> witnessCircuit;  // circuit through f certifying source/sink
};

// Covector of M/{f,g} positive on every element of the node, built by
// composing per-element nonnegative cocircuits.  Errors (with the circuit
// witness) when the node is the source or the sink.
SignVector coveringCovector(const OMProgram& program, std::uint32_t nodeMask);

struct AvoidanceCertificate {
  Localization sigmaTilde;             // localization of M/{f,g} by h
  std::vector<SignVector> cocircuits;  // Z^i on [n] + {h}, one per avoided node
};

// Checks each Z^i is a cocircuit of extend(M/{f,g}, sigmaTilde) with
// Z^i_h = + and Z^i >= 0 on the i-th node; on success lifts the extension,
// traces the path, and asserts it avoids every given node.
bool verifyAvoidanceCertificate(const OMProgram& program,
                                const std::vector<std::uint32_t>& nodes,
                                const AvoidanceCertificate& cert);

struct AvoidanceSearchResult {
  std::optional<AvoidanceCertificate> certificate;
  bool budgetExhausted = false;
  long long tried = 0;
};

// Bounded search over lexicographic localizations of M/{f,g} (bases, sign
// patterns, base orderings).  A miss is not a disproof.
AvoidanceSearchResult searchAvoidingExtension(const OMProgram& program,
                                              const std::vector<std::uint32_t>& nodes,
                                              long long budget = 10000);

// Generalized Levi intersection property, per-instance check: each W^i must
// be a covector of extend(mPrime, sigma) vanishing at h and matching Y^i
// elsewhere.
bool verifyLeviCertificate(const OrientedMatroid& mPrime, const std::vector<SignVector>& ys,
                           const Localization& sigma, const std::vector<SignVector>& ws);

// Undirected vertex connectivity (for the (r-1)-connectivity property).
int vertexConnectivity(const UndirectedGraph& g);

}  // namespace omp
