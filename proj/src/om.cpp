#include "omp/om.hpp"

#include <algorithm>
#include <bit>
#include <random>
#include <sstream>

namespace omp {

// ---------------------------------------------------------------------------
// Chirotope
// ---------------------------------------------------------------------------

Chirotope::Chirotope(int rank, int groundSize) : rank_(rank), groundSize_(groundSize) {
  if (rank < 0 || rank > groundSize)
    throw PreconditionError("chirotope rank out of range");
}

Sign Chirotope::basisSign(std::uint32_t mask) const {
  auto it = signs_.find(mask);
  return it == signs_.end() ? Sign::Zero : it->second;
}

void Chirotope::setBasisSign(std::uint32_t mask, Sign s) {
  if (std::popcount(mask) != rank_)
    throw PreconditionError("chirotope subset size != rank");
  if (s == Sign::Zero) signs_.erase(mask);
  else signs_[mask] = s;
}

Sign Chirotope::orderedSign(std::vector<int> tuple) const {
  if (static_cast<int>(tuple.size()) != rank_)
    throw PreconditionError("chirotope tuple size != rank");
  // Sort with transposition parity; repeated entries give zero.
  bool negatePar = false;
  for (size_t i = 0; i < tuple.size(); ++i) {
    for (size_t j = i + 1; j < tuple.size(); ++j) {
      if (tuple[j] < tuple[i]) {
        std::swap(tuple[i], tuple[j]);
        negatePar = !negatePar;
      } else if (tuple[j] == tuple[i]) {
        return Sign::Zero;
      }
    }
  }
  std::uint32_t mask = 0;
  for (int x : tuple) mask |= (1u << x);
  Sign s = basisSign(mask);
  return negatePar ? negate(s) : s;
}

bool Chirotope::identicallyZero() const { return signs_.empty(); }

std::vector<std::vector<int>> Chirotope::sortedSubsets(int groundSize, int k) {
  std::vector<std::vector<int>> out;
  if (k < 0 || k > groundSize) return out;
  std::vector<int> cur(k);
  // Lexicographic enumeration of k-subsets.
  auto rec = [&](auto&& self, int start, int depth) -> void {
    if (depth == k) {
      out.push_back(cur);
      return;
    }
    for (int i = start; i < groundSize - (k - depth - 1); ++i) {
      cur[depth] = i;
      self(self, i + 1, depth + 1);
    }
  };
  rec(rec, 0, 0);
  if (k == 0) out.push_back({});
  return out;
}

std::string Chirotope::toString() const {
  std::string s;
  for (const auto& subset : sortedSubsets(groundSize_, rank_)) {
    std::uint32_t mask = indicesToMask(subset);
    s.push_back(signChar(basisSign(mask)));
  }
  return s;
}

Chirotope Chirotope::fromString(int rank, int groundSize, const std::string& s) {
  Chirotope chi(rank, groundSize);
  auto subsets = sortedSubsets(groundSize, rank);
  if (s.size() != subsets.size())
    throw PreconditionError("chirotope string length " + std::to_string(s.size()) +
                            " != C(" + std::to_string(groundSize) + "," +
                            std::to_string(rank) + ")");
  for (size_t i = 0; i < subsets.size(); ++i) {
    Sign v = signFromChar(s[i]);
    if (v != Sign::Zero) chi.setBasisSign(indicesToMask(subsets[i]), v);
  }
  if (chi.identicallyZero())
    throw PreconditionError("chirotope is identically zero");
  return chi;
}

bool Chirotope::operator==(const Chirotope& other) const {
  if (rank_ != other.rank_ || groundSize_ != other.groundSize_) return false;
  return toString() == other.toString();
}

// ---------------------------------------------------------------------------
// Construction
// ---------------------------------------------------------------------------

namespace {

// Cocircuits derived from a chirotope: one per independent (r-1)-subset.
SignVectorSet cocircuitsFromChirotope(const GroundPtr& ground, const Chirotope& chi) {
  const int n = ground->size();
  const int r = chi.rank();
  SignVectorSet out(ground);
  for (const auto& subset : Chirotope::sortedSubsets(n, r - 1)) {
    std::uint32_t subsetMask = indicesToMask(subset);
    std::string entries(n, '0');
    bool nonzero = false;
    for (int e = 0; e < n; ++e) {
      if (subsetMask & (1u << e)) continue;
      std::vector<int> tuple = subset;
      tuple.push_back(e);
      Sign s = chi.orderedSign(std::move(tuple));
      entries[e] = signChar(s);
      if (s != Sign::Zero) nonzero = true;
    }
    if (nonzero) out.insert(SignVector(ground, std::move(entries)));
  }
  return out;
}

}  // namespace

OrientedMatroid OrientedMatroid::fromMatrix(GroundPtr ground, const RationalMatrix& m) {
  if (ground->size() != m.cols())
    throw PreconditionError("ground set size != matrix column count");
  const int r = m.rows();
  if (r < 1) throw PreconditionError("matrix needs at least one row");
  if (m.rank() != r)
    throw PreconditionError("matrix rank " + std::to_string(m.rank()) +
                            " != row count " + std::to_string(r));
  Chirotope chi(r, m.cols());
  for (const auto& subset : Chirotope::sortedSubsets(m.cols(), r)) {
    Sign s = signOf(m.detColumns(subset));
    if (s != Sign::Zero) chi.setBasisSign(indicesToMask(subset), s);
  }
  OrientedMatroid om;
  om.ground_ = ground;
  om.rank_ = r;
  om.cocircuits_ = cocircuitsFromChirotope(ground, chi);
  om.chirotope_ = std::move(chi);
  om.realization_ = m;
  return om;
}

OrientedMatroid OrientedMatroid::fromCocircuits(GroundPtr ground, int rank,
                                                const std::vector<SignVector>& cocircuits) {
  SignVectorSet set(ground);
  for (const auto& v : cocircuits) {
    if (v.size() != ground->size())
      throw PreconditionError("cocircuit length != ground set size");
    if (!v.isZero()) set.insert(SignVector(ground, v.str()));
  }
  if (set.empty())
    throw PreconditionError("cocircuit set empty after canonicalization");
  OrientedMatroid om;
  om.ground_ = std::move(ground);
  om.rank_ = rank;
  om.cocircuits_ = std::move(set);
  return om;
}

OrientedMatroid OrientedMatroid::fromChirotope(GroundPtr ground, const Chirotope& chi) {
  if (chi.groundSize() != ground->size())
    throw PreconditionError("chirotope ground size mismatch");
  if (chi.identicallyZero()) throw PreconditionError("chirotope is identically zero");
  OrientedMatroid om;
  om.ground_ = ground;
  om.rank_ = chi.rank();
  om.cocircuits_ = cocircuitsFromChirotope(ground, chi);
  om.chirotope_ = chi;
  return om;
}

OrientedMatroid OrientedMatroid::fromPartsUnchecked(GroundPtr ground, int rank,
                                                    SignVectorSet cocircuits,
                                                    std::optional<Chirotope> chi,
                                                    std::optional<RationalMatrix> realization) {
  OrientedMatroid om;
  om.ground_ = std::move(ground);
  om.rank_ = rank;
  om.cocircuits_ = std::move(cocircuits);
  om.chirotope_ = std::move(chi);
  om.realization_ = std::move(realization);
  return om;
}

bool OrientedMatroid::operator==(const OrientedMatroid& other) const {
  return ground_->sameAs(*other.ground_) && rank_ == other.rank_ &&
         cocircuits_ == other.cocircuits_;
}

// ---------------------------------------------------------------------------
// Circuits
// ---------------------------------------------------------------------------

namespace {

// All sign vectors on n elements whose first nonzero entry is '+',
// enumerated via base-3 counting; callback returns false to stop.
template <typename F>
void enumerateCanonicalSignVectors(int n, F&& visit) {
  std::string cur(n, '0');
  // Position of first nonzero is fixed to '+', remaining positions free.
  for (int first = n - 1; first >= 0; --first) {
    std::fill(cur.begin(), cur.end(), '0');
    cur[first] = '+';
    int tail = n - first - 1;
    long long total = 1;
    for (int i = 0; i < tail; ++i) total *= 3;
    for (long long code = 0; code < total; ++code) {
      long long c = code;
      for (int i = 0; i < tail; ++i) {
        int d = static_cast<int>(c % 3);
        c /= 3;
        cur[first + 1 + i] = d == 0 ? '0' : (d == 1 ? '+' : '-');
      }
      visit(cur);
    }
  }
}

}  // namespace

const SignVectorSet& OrientedMatroid::circuits() const {
  {
    std::lock_guard<std::mutex> lk(*cacheMu_);
    if (circuitsCache_) return *circuitsCache_;
  }
  const int n = groundSize();
  auto result = std::make_shared<SignVectorSet>(ground_);
  if (chirotope_) {
    const Chirotope& chi = *chirotope_;
    const int r = rank_;
    for (const auto& subset : Chirotope::sortedSubsets(n, r + 1)) {
      std::string entries(n, '0');
      bool nonzero = false;
      for (int i = 0; i <= r; ++i) {
        std::vector<int> rest;
        rest.reserve(r);
        for (int j = 0; j <= r; ++j)
          if (j != i) rest.push_back(subset[j]);
        Sign s = chi.orderedSign(std::move(rest));
        if (i % 2 == 1) s = negate(s);
        entries[subset[i]] = signChar(s);
        if (s != Sign::Zero) nonzero = true;
      }
      if (nonzero) result->insert(SignVector(ground_, std::move(entries)));
    }
    // Loops (zero columns) form singleton circuits not seen by the minor rule.
    for (int e = 0; e < n; ++e) {
      if (isLoop(e)) {
        std::string entries(n, '0');
        entries[e] = '+';
        result->insert(SignVector(ground_, std::move(entries)));
      }
    }
  } else {
    if (n > config::bruteForceCap())
      throw CapExceededError(
          "circuit enumeration over 3^" + std::to_string(n) +
          " sign vectors exceeds the brute-force cap of " +
          std::to_string(config::bruteForceCap()) +
          " elements; construct the oriented matroid from a chirotope or matrix");
    auto signedCocircuits = cocircuits_.signedVectors();
    std::vector<SignVector> vectors;
    enumerateCanonicalSignVectors(n, [&](const std::string& s) {
      SignVector cand(ground_, s);
      for (const auto& y : signedCocircuits)
        if (!cand.orthogonal(y)) return;
      vectors.push_back(std::move(cand));
    });
    for (auto& v : minimalSupportFilter(std::move(vectors))) result->insert(v);
  }
  std::lock_guard<std::mutex> lk(*cacheMu_);
  if (!circuitsCache_) circuitsCache_ = result;
  return *circuitsCache_;
}

const std::vector<std::uint32_t>& OrientedMatroid::circuitSupports() const {
  {
    std::lock_guard<std::mutex> lk(*cacheMu_);
    if (circuitSupportsCache_) return *circuitSupportsCache_;
  }
  auto supports = std::make_shared<std::vector<std::uint32_t>>();
  for (const auto& c : circuits()) supports->push_back(c.supportMask());
  std::lock_guard<std::mutex> lk(*cacheMu_);
  if (!circuitSupportsCache_) circuitSupportsCache_ = supports;
  return *circuitSupportsCache_;
}

// ---------------------------------------------------------------------------
// Covector span
// ---------------------------------------------------------------------------

const std::vector<SignVector>& OrientedMatroid::covectorSpan() const {
  {
    std::lock_guard<std::mutex> lk(*cacheMu_);
    if (spanCache_) return *spanCache_;
  }
  if (groundSize() > config::bruteForceCap())
    throw CapExceededError("covector span exceeds brute-force cap of " +
                           std::to_string(config::bruteForceCap()) + " elements");
  auto generators = cocircuits_.signedVectors();
  auto index = std::make_shared<std::unordered_set<std::string>>();
  std::vector<SignVector> span;
  std::vector<size_t> frontier;
  auto add = [&](SignVector v) {
    if (index->insert(v.str()).second) {
      span.push_back(std::move(v));
      frontier.push_back(span.size() - 1);
    }
  };
  add(SignVector::zero(ground_));
  for (const auto& g : generators) add(g);
  while (!frontier.empty()) {
    std::vector<size_t> next;
    for (size_t i : frontier) {
      SignVector base = span[i];
      for (const auto& g : generators) {
        SignVector comp = base.compose(g);
        if (index->insert(comp.str()).second) {
          span.push_back(std::move(comp));
          next.push_back(span.size() - 1);
        }
      }
    }
    frontier = std::move(next);
  }
  std::sort(span.begin(), span.end(), SignVector::canonicalLess);
  auto spanPtr = std::make_shared<std::vector<SignVector>>(std::move(span));
  std::lock_guard<std::mutex> lk(*cacheMu_);
  if (!spanCache_) {
    spanCache_ = spanPtr;
    spanIndexCache_ = index;
  }
  return *spanCache_;
}

bool OrientedMatroid::isCovector(const SignVector& v) const {
  covectorSpan();
  std::shared_ptr<const std::unordered_set<std::string>> idx;
  {
    std::lock_guard<std::mutex> lk(*cacheMu_);
    idx = spanIndexCache_;
  }
  return idx->count(v.str()) > 0;
}

bool OrientedMatroid::isVector(const SignVector& v) const {
  for (const auto& y : cocircuits_) {
    if (!v.orthogonal(y)) return false;
  }
  return true;
}

// ---------------------------------------------------------------------------
// Matroid queries
// ---------------------------------------------------------------------------

bool OrientedMatroid::isIndependent(std::uint32_t mask) const {
  for (std::uint32_t s : circuitSupports())
    if ((s & mask) == s) return false;
  return true;
}

int OrientedMatroid::rankOf(std::uint32_t mask) const {
  std::uint32_t indep = 0;
  for (int e = 0; e < groundSize(); ++e) {
    std::uint32_t bit = 1u << e;
    if (!(mask & bit)) continue;
    if (isIndependent(indep | bit)) indep |= bit;
  }
  return std::popcount(indep);
}

std::uint32_t OrientedMatroid::closure(std::uint32_t mask) const {
  int r = rankOf(mask);
  std::uint32_t cl = mask;
  for (int e = 0; e < groundSize(); ++e) {
    std::uint32_t bit = 1u << e;
    if (cl & bit) continue;
    if (rankOf(mask | bit) == r) cl |= bit;
  }
  return cl;
}

bool OrientedMatroid::isBase(std::uint32_t mask) const {
  return std::popcount(mask) == rank_ && isIndependent(mask);
}

std::vector<std::uint32_t> OrientedMatroid::bases() const {
  std::vector<std::uint32_t> out;
  for (const auto& subset : Chirotope::sortedSubsets(groundSize(), rank_)) {
    std::uint32_t mask = indicesToMask(subset);
    if (isIndependent(mask)) out.push_back(mask);
  }
  return out;
}

bool OrientedMatroid::isLoop(int e) const {
  for (const auto& y : cocircuits_)
    if (y.chr(e) != '0') return false;
  return true;
}

bool OrientedMatroid::isColoop(int e) const {
  std::uint32_t bit = 1u << e;
  for (const auto& y : cocircuits_)
    if (y.supportMask() == bit) return true;
  return false;
}

std::vector<int> OrientedMatroid::loops() const {
  std::vector<int> out;
  for (int e = 0; e < groundSize(); ++e)
    if (isLoop(e)) out.push_back(e);
  return out;
}

SignVector OrientedMatroid::fundamentalCircuit(std::uint32_t baseMask, int p) const {
  if (!isBase(baseMask)) throw PreconditionError("not a base");
  if (baseMask & (1u << p)) throw PreconditionError("p lies in the base");
  std::uint32_t allowed = baseMask | (1u << p);
  for (const auto& c : circuits()) {
    std::uint32_t s = c.supportMask();
    if ((s & ~allowed) == 0 && (s & (1u << p))) {
      return c.chr(p) == '+' ? c : c.negated();
    }
  }
  throw InternalError("fundamental circuit not found");
}

SignVector OrientedMatroid::fundamentalCocircuit(std::uint32_t baseMask, int q) const {
  if (!isBase(baseMask)) throw PreconditionError("not a base");
  if (!(baseMask & (1u << q))) throw PreconditionError("q not in the base");
  std::uint32_t full = (groundSize() >= 32) ? ~0u : ((1u << groundSize()) - 1);
  std::uint32_t allowed = (full & ~baseMask) | (1u << q);
  for (const auto& y : cocircuits_) {
    std::uint32_t s = y.supportMask();
    if ((s & ~allowed) == 0 && (s & (1u << q))) {
      return y.chr(q) == '+' ? y : y.negated();
    }
  }
  throw InternalError("fundamental cocircuit not found");
}

bool OrientedMatroid::convMembership(int p, std::uint32_t subsetMask, Sign sign) const {
  if (subsetMask & (1u << p))
    throw PreconditionError("conv membership requires p outside the subset");
  std::uint32_t pbit = 1u << p;
  for (const auto& canonical : circuits()) {
    for (const SignVector& x : {canonical, canonical.negated()}) {
      if (sign == Sign::Plus) {
        // X_+ subset of A, X_- = {p}.
        if (x.negativeMask() == pbit && (x.positiveMask() & ~subsetMask) == 0)
          return true;
      } else {
        // Positive circuit with p in X_+ and X_+ subset of A+p.
        if (x.negativeMask() == 0 && (x.positiveMask() & pbit) &&
            (x.positiveMask() & ~(subsetMask | pbit)) == 0)
          return true;
      }
    }
  }
  return false;
}

// ---------------------------------------------------------------------------
// Axiom verification
// ---------------------------------------------------------------------------

namespace {

long long pow3(int k) {
  long long v = 1;
  while (k-- > 0) v *= 3;
  return v;
}

}  // namespace

AxiomReport OrientedMatroid::verifyAxioms(long long maxPairs, std::uint64_t seed) const {
  AxiomReport report;
  const auto& span = covectorSpan();
  report.covectorCount = static_cast<int>(span.size());
  std::unordered_set<std::string> index;
  for (const auto& v : span) index.insert(v.str());
  const int n = groundSize();

  // Y0: zero covector present.
  if (!index.count(std::string(n, '0')))
    report.violations.push_back({"Y0", "zero covector missing"});

  // Y1: negation closure.
  for (const auto& v : span) {
    if (!index.count(v.negated().str())) {
      report.violations.push_back({"Y1", "negation of " + v.str() + " missing"});
      break;
    }
  }

  // Buckets: for each element, the span members vanishing there.
  std::vector<std::vector<const SignVector*>> zeroBucket(n);
  for (const auto& v : span)
    for (int e = 0; e < n; ++e)
      if (v.chr(e) == '0') zeroBucket[e].push_back(&v);

  // Y2 + Y3 over covector pairs.
  auto checkPair = [&](const SignVector& x, const SignVector& y) {
    SignVector comp = x.compose(y);
    if (!index.count(comp.str())) {
      if (report.violations.size() < 32)
        report.violations.push_back(
            {"Y2", x.str() + " o " + y.str() + " = " + comp.str() + " not a covector"});
      return;
    }
    std::uint32_t sep = x.separation(y);
    if (!sep) return;
    auto sepIdx = maskToIndices(sep);
    for (int e : sepIdx) {
      // Witness: Z_e = 0 and Z_f = (XoY)_f off the separator.
      bool found = false;
      long long enumCost = pow3(static_cast<int>(sepIdx.size()) - 1);
      if (enumCost <= static_cast<long long>(zeroBucket[e].size())) {
        std::vector<int> freePos;
        for (int f : sepIdx)
          if (f != e) freePos.push_back(f);
        std::string cand = comp.str();
        cand[e] = '0';
        long long total = pow3(static_cast<int>(freePos.size()));
        for (long long code = 0; code < total && !found; ++code) {
          long long c = code;
          for (int fp : freePos) {
            int d = static_cast<int>(c % 3);
            c /= 3;
            cand[fp] = d == 0 ? '0' : (d == 1 ? '+' : '-');
          }
          if (index.count(cand)) found = true;
        }
      } else {
        for (const SignVector* z : zeroBucket[e]) {
          bool match = true;
          for (int f = 0; f < n && match; ++f) {
            if (sep & (1u << f)) continue;
            if (z->chr(f) != comp.chr(f)) match = false;
          }
          if (match) {
            found = true;
            break;
          }
        }
      }
      if (!found && report.violations.size() < 32)
        report.violations.push_back({"Y3", "no elimination witness for " + x.str() +
                                               ", " + y.str() + " at element " +
                                               ground_->label(e)});
    }
  };

  const long long m = static_cast<long long>(span.size());
  const long long allPairs = m * (m - 1) / 2;
  if (maxPairs <= 0 || maxPairs >= allPairs) {
    for (size_t i = 0; i < span.size(); ++i)
      for (size_t j = i + 1; j < span.size(); ++j) checkPair(span[i], span[j]);
    report.pairsChecked = allPairs;
    report.exhaustive = true;
  } else {
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<size_t> pick(0, span.size() - 1);
    for (long long t = 0; t < maxPairs; ++t) {
      size_t i = pick(rng), j = pick(rng);
      if (i == j) continue;
      checkPair(span[i], span[j]);
    }
    report.pairsChecked = maxPairs;
    report.exhaustive = false;
  }

  // Declared cocircuits must be exactly the minimal-support nonzero covectors.
  std::vector<SignVector> canonicalSpan;
  for (const auto& v : span)
    if (!v.isZero() && v.isCanonical()) canonicalSpan.push_back(v);
  SignVectorSet minimal(ground_);
  for (auto& v : minimalSupportFilter(std::move(canonicalSpan))) minimal.insert(v);
  if (!(minimal == cocircuits_)) {
    std::ostringstream os;
    os << "declared cocircuits differ from minimal-support covectors:";
    for (const auto& v : minimal)
      if (!cocircuits_.containsSigned(v)) os << " missing " << v.str();
    for (const auto& v : cocircuits_)
      if (!minimal.containsSigned(v)) os << " extra " << v.str();
    report.violations.push_back({"minimality", os.str()});
  }

  // Rank equals the length of a maximal chain in the covector order.
  {
    std::vector<const SignVector*> byPop;
    byPop.reserve(span.size());
    for (const auto& v : span) byPop.push_back(&v);
    std::sort(byPop.begin(), byPop.end(), [](const SignVector* a, const SignVector* b) {
      return std::popcount(a->supportMask()) < std::popcount(b->supportMask());
    });
    std::vector<int> height(byPop.size(), 0);
    int best = 0;
    for (size_t i = 0; i < byPop.size(); ++i) {
      std::uint32_t si = byPop[i]->supportMask();
      for (size_t j = 0; j < i; ++j) {
        if (height[j] + 1 <= height[i]) continue;
        std::uint32_t sj = byPop[j]->supportMask();
        if ((sj & si) != sj || sj == si) continue;
        // X < Y iff X agrees with Y on its support.
        bool leq = true;
        for (int e = 0; e < n && leq; ++e) {
          char ce = byPop[j]->chr(e);
          if (ce != '0' && ce != byPop[i]->chr(e)) leq = false;
        }
        if (leq) height[i] = height[j] + 1;
      }
      best = std::max(best, height[i]);
    }
    if (best != rank_)
      report.violations.push_back(
          {"rank", "declared rank " + std::to_string(rank_) +
                       " but longest covector chain has length " + std::to_string(best)});
  }
  return report;
}

// ---------------------------------------------------------------------------
// Minors, dual, reorientation
// ---------------------------------------------------------------------------

OrientedMatroid deleteElement(const OrientedMatroid& m, int e) {
  if (e < 0 || e >= m.groundSize()) throw PreconditionError("element out of range");
  bool coloop = m.isColoop(e);
  auto newGround = m.ground()->without({e});
  std::vector<SignVector> restricted;
  for (const auto& y : m.cocircuits()) {
    SignVector r = y.restrictedTo(newGround, {e});
    if (!r.isZero()) restricted.push_back(r.canonical());
  }
  SignVectorSet cocircuits(newGround);
  for (auto& v : minimalSupportFilter(std::move(restricted))) cocircuits.insert(v);
  int newRank = m.rank() - (coloop ? 1 : 0);
  std::optional<Chirotope> chi;
  if (m.chirotope()) {
    Chirotope reduced(newRank, newGround->size());
    for (const auto& subset : Chirotope::sortedSubsets(newGround->size(), newRank)) {
      std::vector<int> lifted;
      for (int i : subset) lifted.push_back(i < e ? i : i + 1);
      if (coloop) lifted.push_back(e);
      Sign s = m.chirotope()->orderedSign(std::move(lifted));
      if (s != Sign::Zero) reduced.setBasisSign(indicesToMask(subset), s);
    }
    if (!reduced.identicallyZero()) chi = std::move(reduced);
  }
  std::optional<RationalMatrix> realization;
  if (m.realization() && !coloop) {
    std::vector<int> keep;
    for (int c = 0; c < m.groundSize(); ++c)
      if (c != e) keep.push_back(c);
    realization = m.realization()->selectColumns(keep);
  }
  return OrientedMatroid::fromPartsUnchecked(newGround, newRank, std::move(cocircuits),
                                             std::move(chi), std::move(realization));
}

OrientedMatroid contractElement(const OrientedMatroid& m, int e) {
  if (e < 0 || e >= m.groundSize()) throw PreconditionError("element out of range");
  bool loop = m.isLoop(e);
  auto newGround = m.ground()->without({e});
  SignVectorSet cocircuits(newGround);
  for (const auto& y : m.cocircuits()) {
    if (y.chr(e) != '0') continue;
    SignVector r = y.restrictedTo(newGround, {e});
    if (!r.isZero()) cocircuits.insert(r);
  }
  int newRank = m.rank() - (loop ? 0 : 1);
  std::optional<Chirotope> chi;
  if (m.chirotope() && !loop) {
    Chirotope reduced(newRank, newGround->size());
    for (const auto& subset : Chirotope::sortedSubsets(newGround->size(), newRank)) {
      std::vector<int> lifted;
      for (int i : subset) lifted.push_back(i < e ? i : i + 1);
      lifted.push_back(e);
      Sign s = m.chirotope()->orderedSign(std::move(lifted));
      if (s != Sign::Zero) reduced.setBasisSign(indicesToMask(subset), s);
    }
    if (!reduced.identicallyZero()) chi = std::move(reduced);
  } else if (m.chirotope() && loop) {
    Chirotope reduced(newRank, newGround->size());
    for (const auto& subset : Chirotope::sortedSubsets(newGround->size(), newRank)) {
      std::vector<int> lifted;
      for (int i : subset) lifted.push_back(i < e ? i : i + 1);
      Sign s = m.chirotope()->orderedSign(std::move(lifted));
      if (s != Sign::Zero) reduced.setBasisSign(indicesToMask(subset), s);
    }
    if (!reduced.identicallyZero()) chi = std::move(reduced);
  }
  return OrientedMatroid::fromPartsUnchecked(newGround, newRank, std::move(cocircuits),
                                             std::move(chi), std::nullopt);
}

namespace {
OrientedMatroid minorByLabels(const OrientedMatroid& m, const std::vector<std::string>& labels,
                              bool deletion) {
  OrientedMatroid cur = m;
  for (const auto& label : labels) {
    int idx = cur.ground()->indexOfOrThrow(label);
    cur = deletion ? deleteElement(cur, idx) : contractElement(cur, idx);
  }
  return cur;
}
}  // namespace

OrientedMatroid deleteElements(const OrientedMatroid& m, const std::vector<std::string>& labels) {
  return minorByLabels(m, labels, true);
}

OrientedMatroid contractElements(const OrientedMatroid& m, const std::vector<std::string>& labels) {
  return minorByLabels(m, labels, false);
}

OrientedMatroid dual(const OrientedMatroid& m) {
  SignVectorSet cocircuits(m.ground());
  for (const auto& c : m.circuits()) cocircuits.insert(c);
  return OrientedMatroid::fromPartsUnchecked(m.ground(), m.groundSize() - m.rank(),
                                             std::move(cocircuits));
}

OrientedMatroid reorientElement(const OrientedMatroid& m, int e) {
  if (e < 0 || e >= m.groundSize()) throw PreconditionError("element out of range");
  SignVectorSet cocircuits(m.ground());
  for (const auto& y : m.cocircuits()) {
    std::string s = y.str();
    s[e] = s[e] == '+' ? '-' : (s[e] == '-' ? '+' : '0');
    cocircuits.insert(SignVector(m.ground(), std::move(s)));
  }
  std::optional<Chirotope> chi;
  if (m.chirotope()) {
    Chirotope flipped(m.rank(), m.groundSize());
    for (const auto& subset : Chirotope::sortedSubsets(m.groundSize(), m.rank())) {
      std::uint32_t mask = indicesToMask(subset);
      Sign s = m.chirotope()->basisSign(mask);
      if (mask & (1u << e)) s = negate(s);
      if (s != Sign::Zero) flipped.setBasisSign(mask, s);
    }
    chi = std::move(flipped);
  }
  std::optional<RationalMatrix> realization;
  if (m.realization()) {
    RationalMatrix r = *m.realization();
    for (int row = 0; row < r.rows(); ++row) r.at(row, e) = -r.at(row, e);
    realization = std::move(r);
  }
  return OrientedMatroid::fromPartsUnchecked(m.ground(), m.rank(), std::move(cocircuits),
                                             std::move(chi), std::move(realization));
}

}  // namespace omp
