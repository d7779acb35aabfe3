#include "omp/sign.hpp"

#include <algorithm>
#include <atomic>
#include <bit>
#include <sstream>
#include <unordered_set>

namespace omp {

namespace config {
namespace {
std::atomic<int> g_cap{12};
}
int bruteForceCap() { return g_cap.load(); }
void setBruteForceCap(int cap) {
  if (cap < 1 || cap > kMaxGroundSize)
    throw PreconditionError("brute-force cap must be in [1," +
                            std::to_string(kMaxGroundSize) + "]");
  g_cap.store(cap);
}
}  // namespace config

Sign signFromChar(char c) {
  switch (c) {
    case '+': return Sign::Plus;
    case '-': return Sign::Minus;
    case '0': return Sign::Zero;
    default:
      throw PreconditionError(std::string("invalid sign character '") + c + "'");
  }
}

// ---------------------------------------------------------------------------
// GroundSet
// ---------------------------------------------------------------------------

GroundSet::GroundSet(std::vector<std::string> labels) : labels_(std::move(labels)) {}

std::shared_ptr<const GroundSet> GroundSet::make(std::vector<std::string> labels) {
  if (static_cast<int>(labels.size()) > config::kMaxGroundSize)
    throw CapExceededError("ground set exceeds cap of " +
                           std::to_string(config::kMaxGroundSize) + " elements");
  std::unordered_set<std::string> seen;
  for (const auto& l : labels) {
    if (l.empty()) throw PreconditionError("empty element label");
    if (!seen.insert(l).second)
      throw PreconditionError("duplicate element label '" + l + "'");
  }
  return std::shared_ptr<const GroundSet>(new GroundSet(std::move(labels)));
}

int GroundSet::indexOf(const std::string& label) const {
  for (int i = 0; i < size(); ++i)
    if (labels_[i] == label) return i;
  return -1;
}

int GroundSet::indexOfOrThrow(const std::string& label) const {
  int i = indexOf(label);
  if (i < 0) throw PreconditionError("element '" + label + "' not in ground set");
  return i;
}

std::shared_ptr<const GroundSet> GroundSet::without(const std::vector<int>& indices) const {
  std::vector<bool> drop(labels_.size(), false);
  for (int i : indices) {
    if (i < 0 || i >= size()) throw PreconditionError("index out of range");
    drop[i] = true;
  }
  std::vector<std::string> rest;
  for (int i = 0; i < size(); ++i)
    if (!drop[i]) rest.push_back(labels_[i]);
  return make(std::move(rest));
}

std::shared_ptr<const GroundSet> GroundSet::withAppended(const std::string& label) const {
  auto labels = labels_;
  labels.push_back(label);
  return make(std::move(labels));
}

std::string maskToString(const GroundSet& ground, std::uint32_t mask) {
  std::ostringstream os;
  os << '{';
  bool first = true;
  for (int i = 0; i < ground.size(); ++i) {
    if (mask & (1u << i)) {
      if (!first) os << ',';
      os << ground.label(i);
      first = false;
    }
  }
  os << '}';
  return os.str();
}

std::vector<int> maskToIndices(std::uint32_t mask) {
  std::vector<int> out;
  for (int i = 0; i < 32; ++i)
    if (mask & (1u << i)) out.push_back(i);
  return out;
}

std::uint32_t indicesToMask(const std::vector<int>& indices) {
  std::uint32_t m = 0;
  for (int i : indices) m |= (1u << i);
  return m;
}

std::uint32_t translateMask(const GroundSet& from, const GroundSet& to, std::uint32_t mask) {
  std::uint32_t out = 0;
  for (int i = 0; i < from.size(); ++i)
    if (mask & (1u << i)) out |= 1u << to.indexOfOrThrow(from.label(i));
  return out;
}

// ---------------------------------------------------------------------------
// SignVector
// ---------------------------------------------------------------------------

SignVector::SignVector(GroundPtr ground, std::string entries)
    : ground_(std::move(ground)), entries_(std::move(entries)) {
  if (!ground_) throw PreconditionError("null ground set");
  if (static_cast<int>(entries_.size()) != ground_->size())
    throw PreconditionError("sign vector length " + std::to_string(entries_.size()) +
                            " does not match ground set size " +
                            std::to_string(ground_->size()));
  for (char c : entries_) signFromChar(c);
}

SignVector SignVector::zero(GroundPtr ground) {
  std::string s(ground->size(), '0');
  return SignVector(std::move(ground), std::move(s));
}

SignVector SignVector::fromSigns(GroundPtr ground, const std::vector<Sign>& signs) {
  std::string s;
  s.reserve(signs.size());
  for (Sign x : signs) s.push_back(signChar(x));
  return SignVector(std::move(ground), std::move(s));
}

Sign SignVector::sign(int i) const { return signFromChar(entries_.at(i)); }

bool SignVector::isZero() const {
  return entries_.find_first_not_of('0') == std::string::npos;
}

std::uint32_t SignVector::supportMask() const {
  std::uint32_t m = 0;
  for (int i = 0; i < size(); ++i)
    if (entries_[i] != '0') m |= (1u << i);
  return m;
}

std::uint32_t SignVector::zeroMask() const {
  return ~supportMask() & ((size() >= 32) ? ~0u : ((1u << size()) - 1));
}

std::uint32_t SignVector::positiveMask() const {
  std::uint32_t m = 0;
  for (int i = 0; i < size(); ++i)
    if (entries_[i] == '+') m |= (1u << i);
  return m;
}

std::uint32_t SignVector::negativeMask() const {
  std::uint32_t m = 0;
  for (int i = 0; i < size(); ++i)
    if (entries_[i] == '-') m |= (1u << i);
  return m;
}

bool SignVector::isNonnegative() const { return negativeMask() == 0; }

SignVector SignVector::negated() const {
  std::string s = entries_;
  for (char& c : s) {
    if (c == '+') c = '-';
    else if (c == '-') c = '+';
  }
  return SignVector(ground_, std::move(s));
}

void SignVector::requireSameGround(const SignVector& other) const {
  if (ground_ == other.ground_) return;
  if (!ground_ || !other.ground_ || !ground_->sameAs(*other.ground_))
    throw GroundMismatchError("sign vectors live on different ground sets");
}

SignVector SignVector::compose(const SignVector& other) const {
  requireSameGround(other);
  std::string s = entries_;
  for (int i = 0; i < size(); ++i)
    if (s[i] == '0') s[i] = other.entries_[i];
  return SignVector(ground_, std::move(s));
}

std::uint32_t SignVector::separation(const SignVector& other) const {
  requireSameGround(other);
  std::uint32_t m = 0;
  for (int i = 0; i < size(); ++i) {
    char a = entries_[i], b = other.entries_[i];
    if ((a == '+' && b == '-') || (a == '-' && b == '+')) m |= (1u << i);
  }
  return m;
}

bool SignVector::orthogonal(const SignVector& other) const {
  requireSameGround(other);
  bool sep = false, agree = false;
  for (int i = 0; i < size(); ++i) {
    char a = entries_[i], b = other.entries_[i];
    if (a == '0' || b == '0') continue;
    if (a == b) agree = true;
    else sep = true;
    if (sep && agree) return true;
  }
  return sep == agree;
}

bool SignVector::conformsTo(const SignVector& other) const {
  return separation(other) == 0;
}

SignVector SignVector::canonical() const {
  for (char c : entries_) {
    if (c == '+') return *this;
    if (c == '-') return negated();
  }
  return *this;
}

bool SignVector::isCanonical() const {
  for (char c : entries_) {
    if (c == '+') return true;
    if (c == '-') return false;
  }
  return true;
}

bool SignVector::canonicalLess(const SignVector& a, const SignVector& b) {
  auto key = [](char c) { return c == '+' ? 0 : (c == '0' ? 1 : 2); };
  const auto& x = a.entries_;
  const auto& y = b.entries_;
  for (size_t i = 0; i < std::min(x.size(), y.size()); ++i) {
    int kx = key(x[i]), ky = key(y[i]);
    if (kx != ky) return kx < ky;
  }
  return x.size() < y.size();
}

SignVector SignVector::restrictedTo(GroundPtr newGround,
                                    const std::vector<int>& dropped) const {
  std::vector<bool> drop(entries_.size(), false);
  for (int i : dropped) drop.at(i) = true;
  std::string s;
  for (int i = 0; i < size(); ++i)
    if (!drop[i]) s.push_back(entries_[i]);
  return SignVector(std::move(newGround), std::move(s));
}

SignVector SignVector::extendedBy(GroundPtr newGround, Sign s) const {
  std::string e = entries_;
  e.push_back(signChar(s));
  return SignVector(std::move(newGround), std::move(e));
}

bool SignVector::operator==(const SignVector& other) const {
  if (entries_ != other.entries_) return false;
  if (ground_ == other.ground_) return true;
  return ground_ && other.ground_ && ground_->sameAs(*other.ground_);
}

// ---------------------------------------------------------------------------
// SignVectorSet
// ---------------------------------------------------------------------------

bool SignVectorSet::insert(const SignVector& v) {
  if (!ground_) ground_ = v.ground();
  if (v.isZero()) return false;
  return items_.insert(v.canonical()).second;
}

bool SignVectorSet::containsSigned(const SignVector& v) const {
  return items_.count(v.canonical()) > 0;
}

std::vector<SignVector> SignVectorSet::signedVectors() const {
  std::vector<SignVector> out;
  out.reserve(items_.size() * 2);
  for (const auto& v : items_) {
    out.push_back(v);
    out.push_back(v.negated());
  }
  return out;
}

bool SignVectorSet::operator==(const SignVectorSet& other) const {
  if (items_.size() != other.items_.size()) return false;
  auto it = items_.begin();
  auto jt = other.items_.begin();
  for (; it != items_.end(); ++it, ++jt)
    if (it->str() != jt->str()) return false;
  return true;
}

std::vector<SignVector> minimalSupportFilter(std::vector<SignVector> vectors) {
  std::sort(vectors.begin(), vectors.end(), [](const SignVector& a, const SignVector& b) {
    int pa = std::popcount(a.supportMask());
    int pb = std::popcount(b.supportMask());
    if (pa != pb) return pa < pb;
    return SignVector::canonicalLess(a, b);
  });
  std::vector<SignVector> kept;
  std::vector<std::uint32_t> keptSupports;
  for (auto& v : vectors) {
    std::uint32_t s = v.supportMask();
    bool dominated = false;
    for (std::uint32_t k : keptSupports) {
      if ((k & s) == k && k != s) {
        dominated = true;
        break;
      }
    }
    if (!dominated) {
      keptSupports.push_back(s);
      kept.push_back(std::move(v));
    }
  }
  return kept;
}

}  // namespace omp
