#pragma once

#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

#include "omp/om.hpp"

namespace omp {

class OMProgram;

// ---------------------------------------------------------------------------
// LexicographicRule: ordered signed element list [e1^s1, ..., ek^sk].
// ---------------------------------------------------------------------------

struct LexicographicRule {
  std::vector<std::pair<int, Sign>> terms;  // (element index, sign)

  // Parses "lex:e1+,e4-,e2+" (the "lex:" prefix is optional).
  static LexicographicRule parse(const GroundSet& ground, const std::string& spec);
  std::string toString(const GroundSet& ground) const;
};

// ---------------------------------------------------------------------------
// Localization: a signing of the canonical cocircuits of a base OM, extended
// to all cocircuits by sigma(-Y) = -sigma(Y), defining a single-element
// extension by `newLabel`.
// ---------------------------------------------------------------------------

class Localization {
 public:
  Localization(OrientedMatroid base, std::string newLabel, std::vector<Sign> values);

  const OrientedMatroid& base() const { return base_; }
  const std::string& newLabel() const { return newLabel_; }
  // Values indexed in canonical cocircuit order of base().cocircuits().
  const std::vector<Sign>& values() const { return values_; }
  // Sign for an arbitrary (possibly negated) cocircuit of the base.
  Sign sigmaOf(const SignVector& cocircuit) const;
  bool identicallyZero() const;

 private:
  OrientedMatroid base_;
  std::string newLabel_;
  std::vector<Sign> values_;
  std::unordered_map<std::string, int> index_;  // canonical cocircuit -> position
};

// sigma(Y) = s_i * Y_{e_i} for the first i with Y_{e_i} != 0, else 0.
Localization localizationFromLex(const OrientedMatroid& m, const LexicographicRule& rule,
                                 const std::string& newLabel = "h");

// ---------------------------------------------------------------------------
// Las Vergnas localization validation: sigma must define a single-element
// extension of every rank-2 contraction of the base OM.
// ---------------------------------------------------------------------------

struct LocalizationViolation {
  std::uint32_t flatMask;  // corank-2 flat whose contraction fails
  std::string detail;
};

struct LocalizationReport {
  bool valid = true;
  std::vector<LocalizationViolation> violations;
};

LocalizationReport validateLocalization(const OrientedMatroid& m, const Localization& sigma);

// Single-element extension defined by a valid localization.  Cocircuits are
// the lifted ones plus, per corank-2 flat crossed by the new element, the
// cocircuit vanishing at the new element.  Deleting the new element recovers
// the base OM; the rank is preserved.
OrientedMatroid extend(const OrientedMatroid& m, const Localization& sigma);

// True iff every circuit of mhat containing e has support of size rank+1.
bool isGeneralPosition(const OrientedMatroid& mhat, int e);

// ---------------------------------------------------------------------------
// Program-level extensions (Lemma machinery of the path construction).
// ---------------------------------------------------------------------------

// Lifts a localization of M/{f,g} to a localization of M/g: sigma(Y) = Y_f
// when Y_f != 0, else the value of sigmaTilde on Y with f removed.  The
// extended OM Mhat satisfies Mhat/f = extend(M/{f,g}, sigmaTilde); both the
// validity of the result and that identity are asserted.
Localization liftExtension(const OMProgram& program, const Localization& sigmaTilde);

// Localization of M/g producing h as a perturbation of element e: the
// lexicographic rule [e^+, b2^+, ...] over a base of M/g through e.  Asserts
// the same-sign property (every cocircuit of the extension containing both h
// and e has equal signs there) and that h is in general position.
Localization perturbationExtension(const OMProgram& program, int e);

// Corank-2 flats of an OM together with the cyclic order of the cocircuits
// vanishing on them (the rank-2 contraction's 2k-gon).  Shared machinery for
// validation and extension; exposed for tests.
struct Corank2Flat {
  std::uint32_t flatMask;
  std::vector<SignVector> cycle;  // 2k signed cocircuits in cyclic order
};
std::vector<Corank2Flat> corank2Flats(const OrientedMatroid& m);

}  // namespace omp
