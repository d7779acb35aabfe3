#pragma once

#include <cstdint>
#include <memory>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

namespace omp {

// ---------------------------------------------------------------------------
// Errors
// ---------------------------------------------------------------------------

struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct GroundMismatchError : Error {
  using Error::Error;
};

struct CapExceededError : Error {
  using Error::Error;
};

struct PreconditionError : Error {
  using Error::Error;
};

struct DegeneracyError : Error {
  using Error::Error;
};

struct InternalError : Error {
  using Error::Error;
};

namespace config {
// Cap on 3^|E| brute-force sweeps.  Above this constructions must go through
// a chirotope or realization.
int bruteForceCap();
void setBruteForceCap(int cap);
// Hard cap on ground-set size (mask arithmetic uses 32-bit words).
inline constexpr int kMaxGroundSize = 16;
}  // namespace config

// ---------------------------------------------------------------------------
// Sign
// ---------------------------------------------------------------------------

enum class Sign : std::int8_t { Minus = -1, Zero = 0, Plus = 1 };

constexpr Sign negate(Sign s) { return static_cast<Sign>(-static_cast<int>(s)); }
constexpr Sign product(Sign a, Sign b) {
  return static_cast<Sign>(static_cast<int>(a) * static_cast<int>(b));
}
constexpr char signChar(Sign s) {
  return s == Sign::Plus ? '+' : (s == Sign::Minus ? '-' : '0');
}
Sign signFromChar(char c);

// ---------------------------------------------------------------------------
// GroundSet: an ordered sequence of distinct element labels.
// ---------------------------------------------------------------------------

class GroundSet {
 public:
  static std::shared_ptr<const GroundSet> make(std::vector<std::string> labels);

  int size() const { return static_cast<int>(labels_.size()); }
  const std::string& label(int i) const { return labels_.at(i); }
  const std::vector<std::string>& labels() const { return labels_; }
  // Index of a label, or -1 if absent.
  int indexOf(const std::string& label) const;
  int indexOfOrThrow(const std::string& label) const;
  bool sameAs(const GroundSet& other) const { return labels_ == other.labels_; }

  // Ground set with the elements at the given (sorted) indices removed.
  std::shared_ptr<const GroundSet> without(const std::vector<int>& indices) const;
  // Ground set with one more label appended.
  std::shared_ptr<const GroundSet> withAppended(const std::string& label) const;

 private:
  explicit GroundSet(std::vector<std::string> labels);
  std::vector<std::string> labels_;
};

using GroundPtr = std::shared_ptr<const GroundSet>;

// Renders an element-index mask as "{a,b,c}" using ground labels.
std::string maskToString(const GroundSet& ground, std::uint32_t mask);
std::vector<int> maskToIndices(std::uint32_t mask);
std::uint32_t indicesToMask(const std::vector<int>& indices);
// Re-indexes a mask from one ground set to another by label.
std::uint32_t translateMask(const GroundSet& from, const GroundSet& to, std::uint32_t mask);

// ---------------------------------------------------------------------------
// SignVector: a dense vector over {+,0,-} indexed by a ground set.  Stored as
// a string over '+','0','-' so rendering, hashing and comparison are direct.
// ---------------------------------------------------------------------------

class SignVector {
 public:
  SignVector() = default;
  SignVector(GroundPtr ground, std::string entries);
  static SignVector zero(GroundPtr ground);
  // Entries given as sign values.
  static SignVector fromSigns(GroundPtr ground, const std::vector<Sign>& signs);

  const GroundPtr& ground() const { return ground_; }
  int size() const { return static_cast<int>(entries_.size()); }
  Sign sign(int i) const;
  char chr(int i) const { return entries_.at(i); }
  const std::string& str() const { return entries_; }

  bool isZero() const;
  std::uint32_t supportMask() const;
  std::uint32_t zeroMask() const;
  std::uint32_t positiveMask() const;
  std::uint32_t negativeMask() const;
  bool isNonnegative() const;

  SignVector negated() const;
  // (X o Y)_e = X_e if X_e != 0 else Y_e.
  SignVector compose(const SignVector& other) const;
  // S(X,Y) = { e : X_e = -Y_e != 0 }, as a mask.
  std::uint32_t separation(const SignVector& other) const;
  // S(X,Y) and S(X,-Y) both empty or both nonempty.
  bool orthogonal(const SignVector& other) const;
  bool conformsTo(const SignVector& other) const;  // separation empty

  // Canonical representative of {X,-X}: first nonzero entry is '+'.
  SignVector canonical() const;
  bool isCanonical() const;

  // Entry-wise order with '+' < '0' < '-' at every position.
  static bool canonicalLess(const SignVector& a, const SignVector& b);

  // Drops the coordinates at `indices` (sorted ascending); result lives on
  // `newGround` which must be the matching reduced ground set.
  SignVector restrictedTo(GroundPtr newGround, const std::vector<int>& dropped) const;
  // Appends one entry for a ground set extended by one element.
  SignVector extendedBy(GroundPtr newGround, Sign s) const;

  bool operator==(const SignVector& other) const;
  bool operator!=(const SignVector& other) const { return !(*this == other); }

  void requireSameGround(const SignVector& other) const;

 private:
  GroundPtr ground_;
  std::string entries_;
};

// ---------------------------------------------------------------------------
// SignVectorSet: a canonical set of sign vectors storing exactly one
// representative of each {X,-X} pair, ordered canonically.
// ---------------------------------------------------------------------------

class SignVectorSet {
 public:
  SignVectorSet() = default;
  explicit SignVectorSet(GroundPtr ground) : ground_(std::move(ground)) {}

  const GroundPtr& ground() const { return ground_; }
  // Inserts canonical(v); returns false if already present or zero.
  bool insert(const SignVector& v);
  // True if v or -v is in the set.
  bool containsSigned(const SignVector& v) const;
  bool empty() const { return items_.empty(); }
  int size() const { return static_cast<int>(items_.size()); }

  auto begin() const { return items_.begin(); }
  auto end() const { return items_.end(); }
  std::vector<SignVector> asVector() const { return {items_.begin(), items_.end()}; }
  // All members together with their negations.
  std::vector<SignVector> signedVectors() const;

  bool operator==(const SignVectorSet& other) const;

 private:
  struct Less {
    bool operator()(const SignVector& a, const SignVector& b) const {
      return SignVector::canonicalLess(a, b);
    }
  };
  GroundPtr ground_;
  std::set<SignVector, Less> items_;
};

// Keeps only the minimal-support members of a family of canonical sign
// vectors (support comparison by set inclusion).
std::vector<SignVector> minimalSupportFilter(std::vector<SignVector> vectors);

}  // namespace omp
