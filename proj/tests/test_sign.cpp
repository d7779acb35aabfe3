#include "doctest.h"
#include "helpers.hpp"
#include "omp/sign.hpp"

#include <random>

using namespace omp;
using omp::testing::groundOfSize;

namespace {

SignVector sv(const GroundPtr& g, const std::string& s) { return SignVector(g, s); }

// Every sign vector on a small ground set, including zero.
std::vector<std::string> allSignStrings(int n) {
  std::vector<std::string> out;
  long long total = 1;
  for (int i = 0; i < n; ++i) total *= 3;
  for (long long code = 0; code < total; ++code) {
    long long c = code;
    std::string s(n, '0');
    for (int i = 0; i < n; ++i) {
      int d = static_cast<int>(c % 3);
      c /= 3;
      s[i] = d == 0 ? '0' : (d == 1 ? '+' : '-');
    }
    out.push_back(s);
  }
  return out;
}

}  // namespace

TEST_CASE("composition follows the first-nonzero rule") {
  auto g = groundOfSize(3);
  CHECK(sv(g, "+0-").compose(sv(g, "0++")).str() == "++-");
  CHECK(sv(g, "+0-").compose(SignVector::zero(g)).str() == "+0-");
  CHECK(SignVector::zero(g).compose(sv(g, "+0-")).str() == "+0-");
  auto g2 = groundOfSize(2);
  CHECK(sv(g2, "+0").compose(sv(g2, "--")).str() == "+-");
  // Idempotent on equal arguments.
  CHECK(sv(g, "+-0").compose(sv(g, "+-0")).str() == "+-0");
}

TEST_CASE("composition is associative") {
  // Entrywise: the value at e depends only on the entries at e, so checking
  // all 27 entry triples proves associativity for every length.
  auto g1 = groundOfSize(1);
  for (char a : {'+', '0', '-'})
    for (char b : {'+', '0', '-'})
      for (char c : {'+', '0', '-'}) {
        auto x = sv(g1, std::string(1, a));
        auto y = sv(g1, std::string(1, b));
        auto z = sv(g1, std::string(1, c));
        CHECK(x.compose(y).compose(z) == x.compose(y.compose(z)));
      }
  // Exhaustive on all triples for small lengths.
  for (int n : {2, 3}) {
    auto g = groundOfSize(n);
    auto all = allSignStrings(n);
    for (const auto& a : all)
      for (const auto& b : all)
        for (const auto& c : all) {
          auto x = sv(g, a), y = sv(g, b), z = sv(g, c);
          REQUIRE(x.compose(y).compose(z) == x.compose(y.compose(z)));
        }
  }
  // Seeded random triples at the cap size.
  auto g6 = groundOfSize(6);
  auto all6 = allSignStrings(6);
  std::mt19937_64 rng(7);
  std::uniform_int_distribution<size_t> pick(0, all6.size() - 1);
  for (int t = 0; t < 20000; ++t) {
    auto x = sv(g6, all6[pick(rng)]);
    auto y = sv(g6, all6[pick(rng)]);
    auto z = sv(g6, all6[pick(rng)]);
    REQUIRE(x.compose(y).compose(z) == x.compose(y.compose(z)));
  }
}

TEST_CASE("separation set") {
  auto g = groundOfSize(3);
  CHECK(maskToIndices(sv(g, "+-0").separation(sv(g, "--+"))) == std::vector<int>{0});
  auto x = sv(g, "+0-");
  CHECK(x.separation(x) == 0u);
  CHECK(x.separation(x.negated()) == x.supportMask());
  // Separation is contained in both supports.
  auto all = allSignStrings(3);
  for (const auto& a : all)
    for (const auto& b : all) {
      auto s = sv(g, a).separation(sv(g, b));
      REQUIRE((s & sv(g, a).supportMask()) == s);
      REQUIRE((s & sv(g, b).supportMask()) == s);
    }
}

TEST_CASE("orthogonality") {
  auto g = groundOfSize(3);
  CHECK(sv(g, "++0").orthogonal(sv(g, "+-0")));
  CHECK_FALSE(sv(g, "+00").orthogonal(sv(g, "+00")));
  CHECK(sv(g, "+00").orthogonal(sv(g, "0+-")));  // disjoint supports
  // Symmetry and sign invariance.
  auto all = allSignStrings(3);
  for (const auto& a : all)
    for (const auto& b : all) {
      auto x = sv(g, a), y = sv(g, b);
      bool o = x.orthogonal(y);
      REQUIRE(y.orthogonal(x) == o);
      REQUIRE(x.negated().orthogonal(y) == o);
    }
}

TEST_CASE("ground-set mismatch is rejected") {
  auto g3 = groundOfSize(3);
  auto h3 = GroundSet::make({"a", "b", "c"});
  CHECK_THROWS_AS(sv(g3, "+00").compose(sv(h3, "0+0")), GroundMismatchError);
  CHECK_THROWS_AS(sv(g3, "+00").separation(sv(h3, "0+0")), GroundMismatchError);
  CHECK_THROWS_AS(sv(g3, "+00").orthogonal(sv(h3, "0+0")), GroundMismatchError);
}

TEST_CASE("canonical representative and ordering") {
  auto g = groundOfSize(3);
  CHECK(sv(g, "-+0").canonical().str() == "+-0");
  CHECK(sv(g, "0-+").canonical().str() == "0+-");
  CHECK(sv(g, "000").canonical().str() == "000");
  // '+' < '0' < '-' entrywise.
  CHECK(SignVector::canonicalLess(sv(g, "+00"), sv(g, "0++")));
  CHECK(SignVector::canonicalLess(sv(g, "0++"), sv(g, "0+-")));
  CHECK_FALSE(SignVector::canonicalLess(sv(g, "+00"), sv(g, "+00")));
}

TEST_CASE("sign vector set keeps one representative per negation pair") {
  auto g = groundOfSize(3);
  SignVectorSet set(g);
  CHECK(set.insert(sv(g, "-+0")));
  CHECK_FALSE(set.insert(sv(g, "+-0")));  // same pair
  CHECK_FALSE(set.insert(SignVector::zero(g)));
  CHECK(set.size() == 1);
  CHECK(set.containsSigned(sv(g, "-+0")));
  CHECK(set.containsSigned(sv(g, "+-0")));
  CHECK_FALSE(set.containsSigned(sv(g, "++0")));
  CHECK(set.signedVectors().size() == 2);
}

TEST_CASE("minimal support filter keeps incomparable supports") {
  auto g = groundOfSize(3);
  auto kept = minimalSupportFilter({sv(g, "++0"), sv(g, "+00"), sv(g, "+++"), sv(g, "0+0")});
  REQUIRE(kept.size() == 2);
  CHECK(kept[0].str() == "+00");
  CHECK(kept[1].str() == "0+0");
}

TEST_CASE("ground set basics") {
  CHECK_THROWS_AS(GroundSet::make({"a", "a"}), PreconditionError);
  auto g = GroundSet::make({"x", "y", "z"});
  CHECK(g->indexOf("y") == 1);
  CHECK(g->indexOf("w") == -1);
  CHECK_THROWS_AS(g->indexOfOrThrow("w"), PreconditionError);
  auto reduced = g->without({1});
  CHECK(reduced->labels() == std::vector<std::string>{"x", "z"});
  auto extended = g->withAppended("w");
  CHECK(extended->size() == 4);
  CHECK_THROWS_AS(g->withAppended("x"), PreconditionError);
  CHECK(maskToString(*g, 0b101) == "{x,z}");
}

TEST_CASE("rendering round-trip") {
  auto g = groundOfSize(4);
  for (const auto& s : {"+-0+", "0000", "++++"}) {
    CHECK(sv(g, s).str() == s);
  }
  CHECK_THROWS_AS(sv(g, "+-0x"), PreconditionError);
  CHECK_THROWS_AS(sv(g, "+-0"), PreconditionError);
}
