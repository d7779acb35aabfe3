#pragma once

#include "omp/digraph.hpp"
#include "omp/extension.hpp"
#include "omp/program.hpp"

namespace omp {

// ---------------------------------------------------------------------------
// Monotone source-to-sink paths via an auxiliary general-position extension h
// of M/g: the alternate orientation K_h, the interval digraphs K_[f,h],
// K_[f,-h], K_[-h,-f], and the concatenated path through the sink of K_h.
// ---------------------------------------------------------------------------

enum class IntervalPattern {
  FH,       // vector with X_+ = v,           X_- = {f,h}
  FNegH,    // vector with X_+ = v + {h},     X_- = {f}
  NegHNegF  // vector with X_+ = v + {f,h},   X_- = empty
};

struct TracedPath {
  std::vector<int> nodes;  // K_f node indices, source first, sink last
  int jointPos = 0;        // position of sink(K_h): prefix is K_[f,-h]
};

struct TraceResult {
  ProgramDigraph kf;
  ProgramDigraph kh;
  OrientedMatroid extended;  // Mhat = extend(M/g, sigma) on [n] + {f,h}
  Localization sigma;        // of M/g
  TracedPath path;
};

class PathTracer {
 public:
  // sigma must be a valid localization of M/g whose extension has h in
  // general position (also after deleting f).
  PathTracer(const OMProgram& program, Localization sigmaOfMg);

  const ProgramDigraph& kf() const { return kf_; }
  const ProgramDigraph& kh() const { return kh_; }
  const OrientedMatroid& extended() const { return mhat_; }
  const Localization& sigma() const { return sigma_; }

  // Whether the node (or ridge) given as a program-ground mask carries the
  // pattern's witness vector in Mhat.
  bool membership(std::uint32_t programMask, IntervalPattern pattern) const;

  TracedPath trace() const;

 private:
  void buildKh();
  std::vector<int> walkComponent(IntervalPattern pattern, int anchor, int expectedFar) const;

  const OMProgram& program_;
  Localization sigma_;
  ProgramDigraph kf_;
  OrientedMatroid mhat_;
  OrientedMatroid mhatDelF_;
  ProgramDigraph kh_;
  int fMhat_ = -1, hMhat_ = -1;
};

// Spec-level entry points.
ProgramDigraph buildKh(const OMProgram& program, const Localization& sigmaOfMg);
bool intervalMembership(const OMProgram& program, const Localization& sigmaOfMg,
                        std::uint32_t nodeMask, IntervalPattern pattern);
TraceResult tracePath(const OMProgram& program, const Localization& sigmaOfMg);
// Path whose internal nodes avoid element e (which must lie in both the
// source and the sink face), via the perturbation extension of e.
TraceResult traceFacetAvoiding(const OMProgram& program, const std::string& elementLabel);

// Lift of a lexicographic localization of M/{f,g} to M/g.
Localization liftedLexLocalization(const OMProgram& program, const LexicographicRule& rule);
// Default: lexicographic rule (all +) over the first base of M/{f,g}.
Localization defaultLiftedLocalization(const OMProgram& program);

}  // namespace omp
