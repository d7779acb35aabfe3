#include "omp/extension.hpp"

#include <algorithm>
#include <bit>
#include <sstream>

#include "omp/program.hpp"

namespace omp {

// ---------------------------------------------------------------------------
// LexicographicRule
// ---------------------------------------------------------------------------

LexicographicRule LexicographicRule::parse(const GroundSet& ground, const std::string& spec) {
  std::string body = spec;
  if (body.rfind("lex:", 0) == 0) body = body.substr(4);
  if (body.empty()) throw PreconditionError("empty lexicographic rule");
  LexicographicRule rule;
  std::uint32_t seen = 0;
  std::istringstream is(body);
  std::string term;
  while (std::getline(is, term, ',')) {
    if (term.size() < 2) throw PreconditionError("malformed lex term '" + term + "'");
    char sc = term.back();
    if (sc != '+' && sc != '-')
      throw PreconditionError("lex term '" + term + "' must end in + or -");
    int idx = ground.indexOfOrThrow(term.substr(0, term.size() - 1));
    if (seen & (1u << idx))
      throw PreconditionError("duplicate element in lex rule: " + term);
    seen |= 1u << idx;
    rule.terms.emplace_back(idx, sc == '+' ? Sign::Plus : Sign::Minus);
  }
  if (rule.terms.empty()) throw PreconditionError("empty lexicographic rule");
  return rule;
}

std::string LexicographicRule::toString(const GroundSet& ground) const {
  std::ostringstream os;
  os << "lex:";
  for (size_t i = 0; i < terms.size(); ++i) {
    if (i) os << ',';
    os << ground.label(terms[i].first) << signChar(terms[i].second);
  }
  return os.str();
}

// ---------------------------------------------------------------------------
// Localization
// ---------------------------------------------------------------------------

Localization::Localization(OrientedMatroid base, std::string newLabel,
                           std::vector<Sign> values)
    : base_(std::move(base)), newLabel_(std::move(newLabel)), values_(std::move(values)) {
  if (static_cast<int>(values_.size()) != base_.cocircuits().size())
    throw PreconditionError("localization value count != cocircuit count");
  if (base_.ground()->indexOf(newLabel_) >= 0)
    throw PreconditionError("extension label '" + newLabel_ + "' already in ground set");
  int i = 0;
  for (const auto& y : base_.cocircuits()) index_[y.str()] = i++;
}

Sign Localization::sigmaOf(const SignVector& cocircuit) const {
  SignVector canon = cocircuit.canonical();
  auto it = index_.find(canon.str());
  if (it == index_.end())
    throw PreconditionError("sign vector is not a cocircuit of the base OM");
  Sign v = values_[it->second];
  return canon == cocircuit ? v : negate(v);
}

bool Localization::identicallyZero() const {
  return std::all_of(values_.begin(), values_.end(),
                     [](Sign s) { return s == Sign::Zero; });
}

Localization localizationFromLex(const OrientedMatroid& m, const LexicographicRule& rule,
                                 const std::string& newLabel) {
  if (rule.terms.empty()) throw PreconditionError("empty lexicographic rule");
  for (const auto& [e, s] : rule.terms) {
    (void)s;
    if (e < 0 || e >= m.groundSize())
      throw PreconditionError("lex rule element out of range");
  }
  std::vector<Sign> values;
  for (const auto& y : m.cocircuits()) {
    Sign v = Sign::Zero;
    for (const auto& [e, s] : rule.terms) {
      if (y.chr(e) != '0') {
        v = product(s, y.sign(e));
        break;
      }
    }
    values.push_back(v);
  }
  return Localization(m, newLabel, std::move(values));
}

// ---------------------------------------------------------------------------
// Corank-2 flats and their cocircuit cycles
// ---------------------------------------------------------------------------

std::vector<Corank2Flat> corank2Flats(const OrientedMatroid& m) {
  std::vector<Corank2Flat> out;
  if (m.rank() < 2) return out;
  const int target = m.rank() - 2;
  auto cocircuits = m.cocircuits().asVector();
  std::vector<std::uint32_t> flats;
  for (size_t i = 0; i < cocircuits.size(); ++i) {
    for (size_t j = i + 1; j < cocircuits.size(); ++j) {
      std::uint32_t a = cocircuits[i].zeroMask() & cocircuits[j].zeroMask();
      if (m.rankOf(a) != target) continue;
      std::uint32_t flat = m.closure(a);
      if (std::find(flats.begin(), flats.end(), flat) == flats.end())
        flats.push_back(flat);
    }
  }
  std::sort(flats.begin(), flats.end());

  for (std::uint32_t flat : flats) {
    // Cocircuits of the rank-2 contraction M/flat: those vanishing on it.
    std::vector<SignVector> members;
    for (const auto& y : cocircuits)
      if ((y.supportMask() & flat) == 0) members.push_back(y);
    if (members.size() < 2)
      throw InternalError("rank-2 contraction with fewer than two cocircuit classes");
    std::vector<SignVector> ring;
    for (const auto& y : members) {
      ring.push_back(y);
      ring.push_back(y.negated());
    }
    const size_t sz = ring.size();
    // Conformal adjacency gives the 2k-gon.
    std::vector<std::vector<int>> adj(sz);
    for (size_t i = 0; i < sz; ++i)
      for (size_t j = 0; j < sz; ++j) {
        if (i == j) continue;
        if (ring[i].separation(ring[j]) == 0) adj[i].push_back(static_cast<int>(j));
      }
    for (size_t i = 0; i < sz; ++i)
      if (adj[i].size() != 2)
        throw InternalError("rank-2 contraction cocircuit cycle is not a 2k-gon at flat " +
                            maskToString(*m.ground(), flat));
    std::vector<SignVector> cycle;
    std::vector<bool> used(sz, false);
    int cur = 0, prev = -1;
    for (size_t step = 0; step < sz; ++step) {
      cycle.push_back(ring[cur]);
      used[cur] = true;
      int nxt = adj[cur][0] == prev ? adj[cur][1] : adj[cur][0];
      if (step + 1 < sz && used[nxt])
        throw InternalError("cocircuit cycle closed early at flat " +
                            maskToString(*m.ground(), flat));
      prev = cur;
      cur = nxt;
    }
    out.push_back({flat, std::move(cycle)});
  }
  return out;
}

// ---------------------------------------------------------------------------
// validateLocalization
// ---------------------------------------------------------------------------

namespace {

std::string cycleSigns(const std::vector<Sign>& vals) {
  std::string s;
  for (Sign v : vals) s.push_back(signChar(v));
  return s;
}

// Valid rank-2 localization patterns around the 2k-gon: all zero, or at most
// one antipodal zero pair sitting at sign boundaries with the +'s contiguous.
bool validCyclePattern(const std::vector<Sign>& vals, std::string* why) {
  const int n = static_cast<int>(vals.size());
  int zeros = 0;
  for (Sign v : vals)
    if (v == Sign::Zero) ++zeros;
  if (zeros == n) return true;
  if (zeros > 2) {
    if (why) *why = "zero on more than one cocircuit pair";
    return false;
  }
  // Every zero must sit between opposite nonzero neighbors.
  for (int i = 0; i < n; ++i) {
    if (vals[i] != Sign::Zero) continue;
    Sign a = vals[(i + n - 1) % n], b = vals[(i + 1) % n];
    if (a == Sign::Zero || b == Sign::Zero || a != negate(b)) {
      if (why) *why = "zero not at a sign boundary";
      return false;
    }
  }
  // The nonzero subsequence must change sign exactly twice around the cycle.
  std::vector<Sign> nz;
  for (Sign v : vals)
    if (v != Sign::Zero) nz.push_back(v);
  int changes = 0;
  for (size_t i = 0; i < nz.size(); ++i)
    if (nz[i] != nz[(i + 1) % nz.size()]) ++changes;
  if (changes != 2) {
    if (why) *why = "signs change " + std::to_string(changes) + " times around the cycle";
    return false;
  }
  return true;
}

}  // namespace

LocalizationReport validateLocalization(const OrientedMatroid& m, const Localization& sigma) {
  if (!sigma.base().ground()->sameAs(*m.ground()) ||
      !(sigma.base().cocircuits() == m.cocircuits()))
    throw PreconditionError("localization does not belong to this OM");
  LocalizationReport report;
  if (m.rank() >= 1 && sigma.identicallyZero()) {
    report.valid = false;
    report.violations.push_back(
        {0, "sigma is identically zero: the new element would be a loop"});
    return report;
  }
  for (const auto& flat : corank2Flats(m)) {
    std::vector<Sign> vals;
    vals.reserve(flat.cycle.size());
    for (const auto& y : flat.cycle) vals.push_back(sigma.sigmaOf(y));
    std::string why;
    if (!validCyclePattern(vals, &why)) {
      report.valid = false;
      report.violations.push_back(
          {flat.flatMask, "contraction at flat " + maskToString(*m.ground(), flat.flatMask) +
                              ": pattern " + cycleSigns(vals) + " (" + why + ")"});
    }
  }
  return report;
}

// ---------------------------------------------------------------------------
// extend
// ---------------------------------------------------------------------------

OrientedMatroid extend(const OrientedMatroid& m, const Localization& sigma) {
  auto report = validateLocalization(m, sigma);
  if (!report.valid) {
    std::string msg = "invalid localization";
    if (!report.violations.empty()) msg += ": " + report.violations.front().detail;
    throw PreconditionError(msg);
  }
  auto newGround = m.ground()->withAppended(sigma.newLabel());
  SignVectorSet cocircuits(newGround);
  // Lifted cocircuits.
  for (const auto& y : m.cocircuits())
    cocircuits.insert(y.extendedBy(newGround, sigma.sigmaOf(y)));
  // One new cocircuit per corank-2 flat strictly crossed by the new element.
  for (const auto& flat : corank2Flats(m)) {
    bool anyZero = false;
    for (const auto& y : flat.cycle)
      if (sigma.sigmaOf(y) == Sign::Zero) {
        anyZero = true;
        break;
      }
    if (anyZero) continue;  // new element sits on an existing flat or misses it
    const int n = static_cast<int>(flat.cycle.size());
    int boundary = -1;
    for (int i = 0; i < n; ++i) {
      if (sigma.sigmaOf(flat.cycle[i]) == Sign::Plus &&
          sigma.sigmaOf(flat.cycle[(i + 1) % n]) == Sign::Minus) {
        boundary = i;
        break;
      }
    }
    if (boundary < 0) throw InternalError("no sign boundary on a fully signed cycle");
    SignVector z = flat.cycle[boundary].compose(flat.cycle[(boundary + 1) % n]);
    cocircuits.insert(z.extendedBy(newGround, Sign::Zero));
  }
  return OrientedMatroid::fromPartsUnchecked(newGround, m.rank(), std::move(cocircuits));
}

bool isGeneralPosition(const OrientedMatroid& mhat, int e) {
  if (e < 0 || e >= mhat.groundSize()) throw PreconditionError("element out of range");
  std::uint32_t bit = 1u << e;
  for (const auto& c : mhat.circuits()) {
    std::uint32_t s = c.supportMask();
    if ((s & bit) && std::popcount(s) != mhat.rank() + 1) return false;
  }
  return true;
}

// ---------------------------------------------------------------------------
// liftExtension and perturbationExtension
// ---------------------------------------------------------------------------

Localization liftExtension(const OMProgram& program, const Localization& sigmaTilde) {
  const OrientedMatroid& mfg = program.contractFG();
  if (!sigmaTilde.base().ground()->sameAs(*mfg.ground()) ||
      !(sigmaTilde.base().cocircuits() == mfg.cocircuits()))
    throw PreconditionError("sigmaTilde is not a localization of M/{f,g}");
  auto tildeReport = validateLocalization(mfg, sigmaTilde);
  if (!tildeReport.valid) throw PreconditionError("sigmaTilde is not a valid localization");

  const OrientedMatroid& mg = program.contractG();
  int fIdx = mg.ground()->indexOfOrThrow(program.fLabel());
  auto fgGround = mfg.ground();
  std::vector<Sign> values;
  for (const auto& y : mg.cocircuits()) {
    if (y.chr(fIdx) != '0') {
      values.push_back(y.sign(fIdx));
    } else {
      SignVector reduced = y.restrictedTo(fgGround, {fIdx});
      values.push_back(sigmaTilde.sigmaOf(reduced));
    }
  }
  Localization sigma(mg, sigmaTilde.newLabel(), std::move(values));
  auto report = validateLocalization(mg, sigma);
  if (!report.valid)
    throw InternalError("lifted localization failed the Las Vergnas criterion: " +
                        (report.violations.empty() ? std::string("?")
                                                   : report.violations.front().detail));
  // Contraction identity: Mhat/f equals the extension of M/{f,g} by sigmaTilde.
  OrientedMatroid mhat = extend(mg, sigma);
  OrientedMatroid mhatModF = contractElement(mhat, mhat.ground()->indexOfOrThrow(program.fLabel()));
  OrientedMatroid mtilde = extend(mfg, sigmaTilde);
  if (!(mhatModF.cocircuits() == mtilde.cocircuits()))
    throw InternalError("lifted extension does not contract to the given extension");
  return sigma;
}

Localization perturbationExtension(const OMProgram& program, int e) {
  const OrientedMatroid& mg = program.contractG();
  const std::string& label = program.matroid().ground()->label(e);
  int eIdx = mg.ground()->indexOf(label);
  if (eIdx < 0 || label == program.fLabel() || label == program.gLabel())
    throw PreconditionError("perturbation element must lie in [n]");
  if (mg.isLoop(eIdx)) throw PreconditionError("perturbation element is a loop in M/g");

  // Greedily complete {e} to a base of M/g in ground order.
  std::uint32_t base = 1u << eIdx;
  for (int i = 0; i < mg.groundSize() && std::popcount(base) < mg.rank(); ++i) {
    std::uint32_t bit = 1u << i;
    if ((base & bit) == 0 && mg.isIndependent(base | bit)) base |= bit;
  }
  if (std::popcount(base) != mg.rank())
    throw InternalError("could not complete a base through the perturbation element");
  LexicographicRule rule;
  rule.terms.emplace_back(eIdx, Sign::Plus);
  for (int i : maskToIndices(base))
    if (i != eIdx) rule.terms.emplace_back(i, Sign::Plus);
  Localization sigma = localizationFromLex(mg, rule);

  // Same-sign property: every cocircuit of the extension containing h and e
  // carries equal signs there; h must be in general position.
  OrientedMatroid mhat = extend(mg, sigma);
  int hIdx = mhat.ground()->indexOfOrThrow(sigma.newLabel());
  int eHat = mhat.ground()->indexOfOrThrow(label);
  for (const auto& y : mhat.cocircuits()) {
    char ch = y.chr(hIdx), ce = y.chr(eHat);
    if (ch != '0' && ce != '0' && ch != ce)
      throw InternalError("perturbation extension violates the same-sign property");
  }
  if (!isGeneralPosition(mhat, hIdx))
    throw InternalError("perturbation extension is not in general position");
  return sigma;
}

}  // namespace omp
