#pragma once

#include <cstdint>
#include <memory>
#include <mutex>
#include <optional>
#include <unordered_map>
#include <unordered_set>
#include <vector>

#include "omp/rational.hpp"
#include "omp/sign.hpp"

namespace omp {

// ---------------------------------------------------------------------------
// Chirotope: alternating sign map on r-element subsets of the ground set.
// ---------------------------------------------------------------------------

class Chirotope {
 public:
  Chirotope(int rank, int groundSize);

  int rank() const { return rank_; }
  int groundSize() const { return groundSize_; }

  // Sign on a sorted r-subset given as an index mask.
  Sign basisSign(std::uint32_t mask) const;
  void setBasisSign(std::uint32_t mask, Sign s);
  // Alternating extension to an arbitrary ordered tuple; zero on repeats.
  Sign orderedSign(std::vector<int> tuple) const;
  bool identicallyZero() const;

  // String over '+','-','0' with the r-subsets in lexicographic order.
  std::string toString() const;
  static Chirotope fromString(int rank, int groundSize, const std::string& s);

  // All r-subsets of {0..groundSize-1} in lexicographic order.
  static std::vector<std::vector<int>> sortedSubsets(int groundSize, int k);

  bool operator==(const Chirotope& other) const;

 private:
  int rank_;
  int groundSize_;
  std::unordered_map<std::uint32_t, Sign> signs_;  // only nonzero entries
};

// ---------------------------------------------------------------------------
// Axiom verification report
// ---------------------------------------------------------------------------

struct AxiomViolation {
  std::string axiom;  // "Y0", "Y1", "Y2", "Y3", "minimality", "rank"
  std::string detail;
};

struct AxiomReport {
  bool ok() const { return violations.empty(); }
  std::vector<AxiomViolation> violations;
  int covectorCount = 0;
  long long pairsChecked = 0;
  bool exhaustive = true;
};

// ---------------------------------------------------------------------------
// OrientedMatroid
//
// Primary representation is the canonical cocircuit set (one representative
// per {Y,-Y} pair).  A chirotope and an exact rational realization are
// optional accelerators.  Values are immutable after construction; derived
// data (circuits, covector span) is cached lazily and published atomically.
// ---------------------------------------------------------------------------

class OrientedMatroid {
 public:
  // OM realized by the matrix: covectors are the sign vectors of the row
  // space.  The matrix must have exactly `rows()` = rank many rows and full
  // row rank (verified by exact elimination).
  static OrientedMatroid fromMatrix(GroundPtr ground, const RationalMatrix& m);
  // Stores the canonicalized set without validating the axioms.
  static OrientedMatroid fromCocircuits(GroundPtr ground, int rank,
                                        const std::vector<SignVector>& cocircuits);
  static OrientedMatroid fromChirotope(GroundPtr ground, const Chirotope& chi);
  // No validation, empty cocircuit set allowed (rank-0 minors).
  static OrientedMatroid fromPartsUnchecked(GroundPtr ground, int rank,
                                            SignVectorSet cocircuits,
                                            std::optional<Chirotope> chi = std::nullopt,
                                            std::optional<RationalMatrix> realization = std::nullopt);

  const GroundPtr& ground() const { return ground_; }
  int groundSize() const { return ground_->size(); }
  int rank() const { return rank_; }
  const SignVectorSet& cocircuits() const { return cocircuits_; }
  const std::optional<Chirotope>& chirotope() const { return chirotope_; }
  const std::optional<RationalMatrix>& realization() const { return realization_; }

  // Minimal-support nonzero sign vectors orthogonal to every cocircuit.
  // Computed from the chirotope when present, by brute force otherwise.
  const SignVectorSet& circuits() const;
  // Closure of cocircuits (both signs) and zero under composition.
  const std::vector<SignVector>& covectorSpan() const;
  bool isCovector(const SignVector& v) const;
  // Orthogonal to every cocircuit.
  bool isVector(const SignVector& v) const;

  bool isIndependent(std::uint32_t mask) const;
  int rankOf(std::uint32_t mask) const;
  std::uint32_t closure(std::uint32_t mask) const;
  bool isBase(std::uint32_t mask) const;
  std::vector<std::uint32_t> bases() const;
  bool isLoop(int e) const;
  bool isColoop(int e) const;
  std::vector<int> loops() const;

  // Unique circuit with support in base+p, sign + at p.
  SignVector fundamentalCircuit(std::uint32_t baseMask, int p) const;
  // Unique cocircuit with support in (E \ base)+q, sign + at q.
  SignVector fundamentalCocircuit(std::uint32_t baseMask, int q) const;
  // sign=+ : p in conv(A); sign=- : -p in conv(A).  Pre: p not in A.
  bool convMembership(int p, std::uint32_t subsetMask, Sign sign) const;

  // Checks Y0-Y3 on the covector span, cocircuit minimality, and the rank
  // against the longest chain.  maxPairs==0 checks every covector pair;
  // maxPairs>0 samples that many pairs with the given seed.
  AxiomReport verifyAxioms(long long maxPairs = 0, std::uint64_t seed = 1) const;

  bool operator==(const OrientedMatroid& other) const;

 private:
  OrientedMatroid() = default;
  const std::vector<std::uint32_t>& circuitSupports() const;

  GroundPtr ground_;
  int rank_ = 0;
  SignVectorSet cocircuits_;
  std::optional<Chirotope> chirotope_;
  std::optional<RationalMatrix> realization_;

  // Shared between copies; guards only the lazily published caches below.
  mutable std::shared_ptr<std::mutex> cacheMu_ = std::make_shared<std::mutex>();
  mutable std::shared_ptr<const SignVectorSet> circuitsCache_;
  mutable std::shared_ptr<const std::vector<std::uint32_t>> circuitSupportsCache_;
  mutable std::shared_ptr<const std::vector<SignVector>> spanCache_;
  mutable std::shared_ptr<const std::unordered_set<std::string>> spanIndexCache_;
};

// Minors.  delete: restrict cocircuits to E\e and keep the minimal-support
// ones.  contract: keep cocircuits vanishing at e.  (M\e)* = M*/e holds.
OrientedMatroid deleteElement(const OrientedMatroid& m, int e);
OrientedMatroid contractElement(const OrientedMatroid& m, int e);
OrientedMatroid deleteElements(const OrientedMatroid& m, const std::vector<std::string>& labels);
OrientedMatroid contractElements(const OrientedMatroid& m, const std::vector<std::string>& labels);

// OM on the same ground set whose cocircuits are the circuits of m.
OrientedMatroid dual(const OrientedMatroid& m);

// Flips the sign of element e in every covector (and the realization column).
OrientedMatroid reorientElement(const OrientedMatroid& m, int e);

}  // namespace omp
