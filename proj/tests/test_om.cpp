#include "doctest.h"
#include "helpers.hpp"
#include "omp/om.hpp"

#include <random>
#include <set>

using namespace omp;
using namespace omp::testing;

namespace {

// The running example: rank-2 OM on 3 elements realized by [[1,0,1],[0,1,1]].
OrientedMatroid exampleOM() {
  return OrientedMatroid::fromMatrix(groundOfSize(3), intMatrix({{1, 0, 1}, {0, 1, 1}}));
}

std::set<std::string> canonicalStrings(const SignVectorSet& set) {
  std::set<std::string> out;
  for (const auto& v : set) out.insert(v.str());
  return out;
}

}  // namespace

TEST_CASE("fromMatrix on the running example") {
  auto m = exampleOM();
  CHECK(m.rank() == 2);
  CHECK(m.groundSize() == 3);
  CHECK(canonicalStrings(m.cocircuits()) ==
        std::set<std::string>{"0++", "+0+", "+-0"});
  CHECK(m.chirotope().has_value());
  CHECK(m.realization().has_value());
}

TEST_CASE("fromMatrix rejects rank-deficient input") {
  CHECK_THROWS_AS(
      OrientedMatroid::fromMatrix(groundOfSize(3), intMatrix({{1, 0, 1}, {2, 0, 2}})),
      PreconditionError);
}

TEST_CASE("identity matrix gives the uniform coordinate OM") {
  auto m = OrientedMatroid::fromMatrix(groundOfSize(3), intMatrix({{1, 0, 0}, {0, 1, 0}, {0, 0, 1}}));
  CHECK(m.rank() == 3);
  CHECK(canonicalStrings(m.cocircuits()) ==
        std::set<std::string>{"+00", "0+0", "00+"});
  CHECK(m.circuits().empty());  // all subsets independent
  CHECK(m.bases().size() == 1);
}

TEST_CASE("positive row scaling leaves the OM unchanged") {
  auto a = exampleOM();
  auto b = OrientedMatroid::fromMatrix(groundOfSize(3),
                                       intMatrix({{3, 0, 3}, {0, 5, 5}}));
  CHECK(a == b);
  CHECK(a.chirotope()->toString() == b.chirotope()->toString());
}

TEST_CASE("covector span matches the grid enumeration oracle") {
  auto m = exampleOM();
  auto oracle = gridSpanOracle(*m.realization(), 3);
  const auto& span = m.covectorSpan();
  CHECK(span.size() == 13);  // zero, 6 cocircuits, 6 topes
  CHECK(span.size() == oracle.size());
  for (const auto& v : span) CHECK(oracle.count(v.str()) == 1);
  // Span contains every cocircuit.
  for (const auto& y : m.cocircuits()) CHECK(m.isCovector(y));
}

TEST_CASE("covector span of a rank-1 single-element OM") {
  auto m = OrientedMatroid::fromMatrix(groundOfSize(1), intMatrix({{2}}));
  const auto& span = m.covectorSpan();
  REQUIRE(span.size() == 3);
  std::set<std::string> strs;
  for (const auto& v : span) strs.insert(v.str());
  CHECK(strs == std::set<std::string>{"0", "+", "-"});
}

TEST_CASE("circuits of the running example") {
  auto m = exampleOM();
  CHECK(canonicalStrings(m.circuits()) == std::set<std::string>{"++-"});
  for (const auto& c : m.circuits())
    for (const auto& y : m.cocircuits()) CHECK(c.orthogonal(y));
}

TEST_CASE("chirotope and brute-force circuit paths agree") {
  std::mt19937_64 rng(11);
  std::uniform_int_distribution<int> entry(-2, 2);
  for (int trial = 0; trial < 40; ++trial) {
    int r = 1 + static_cast<int>(rng() % 3);
    int n = r + 1 + static_cast<int>(rng() % 3);
    RationalMatrix mat(r, n);
    for (int i = 0; i < r; ++i)
      for (int j = 0; j < n; ++j) mat.at(i, j) = entry(rng);
    if (mat.rank() != r) continue;
    auto viaChirotope = OrientedMatroid::fromMatrix(groundOfSize(n), mat);
    // Same cocircuits, no chirotope: forces the 3^n orthogonality sweep.
    auto bruteForce = OrientedMatroid::fromCocircuits(
        viaChirotope.ground(), r, viaChirotope.cocircuits().asVector());
    REQUIRE(viaChirotope.circuits() == bruteForce.circuits());
  }
}

TEST_CASE("verifyAxioms passes on realized OMs") {
  auto report = exampleOM().verifyAxioms();
  CHECK(report.ok());
  CHECK(report.exhaustive);
  auto id = OrientedMatroid::fromMatrix(groundOfSize(4),
                                        intMatrix({{1, 0, 0, 1}, {0, 1, 0, 1}, {0, 0, 1, -1}}));
  CHECK(id.verifyAxioms().ok());
}

TEST_CASE("verifyAxioms reports minimality violations") {
  auto g = groundOfSize(3);
  auto m = OrientedMatroid::fromCocircuits(
      g, 1, {SignVector(g, "++0"), SignVector(g, "+00")});
  auto report = m.verifyAxioms();
  CHECK_FALSE(report.ok());
  bool foundMinimality = false;
  for (const auto& v : report.violations)
    if (v.axiom == "minimality") foundMinimality = true;
  CHECK(foundMinimality);
}

TEST_CASE("verifyAxioms flags a broken elimination axiom") {
  // Cocircuits of the example with one pair removed: composition closure
  // still holds but elimination between the survivors fails.
  auto g = groundOfSize(3);
  auto m = OrientedMatroid::fromCocircuits(g, 2,
                                           {SignVector(g, "0++"), SignVector(g, "+0+")});
  auto report = m.verifyAxioms();
  CHECK_FALSE(report.ok());
  bool foundY3 = false;
  for (const auto& v : report.violations)
    if (v.axiom == "Y3") foundY3 = true;
  CHECK(foundY3);
}

TEST_CASE("fromCocircuits canonicalizes and rejects empty input") {
  auto g = groundOfSize(3);
  auto m = exampleOM();
  auto roundTrip = OrientedMatroid::fromCocircuits(m.ground(), 2, m.cocircuits().asVector());
  CHECK(roundTrip.cocircuits() == m.cocircuits());
  // Both orientations of a pair collapse to one representative.
  auto m2 = OrientedMatroid::fromCocircuits(g, 1, {SignVector(g, "+-0"), SignVector(g, "-+0")});
  CHECK(m2.cocircuits().size() == 1);
  CHECK_THROWS_AS(OrientedMatroid::fromCocircuits(g, 1, {}), PreconditionError);
  CHECK_THROWS_AS(OrientedMatroid::fromCocircuits(g, 1, {SignVector::zero(g)}),
                  PreconditionError);
}

TEST_CASE("dual swaps circuits and cocircuits") {
  auto m = exampleOM();
  auto d = dual(m);
  CHECK(d.rank() == 1);
  CHECK(d.cocircuits() == m.circuits());
  auto dd = dual(d);
  CHECK(dd.rank() == m.rank());
  CHECK(dd.cocircuits() == m.cocircuits());
}

TEST_CASE("deletion and contraction of the running example") {
  auto m = exampleOM();
  // Contract e3: remaining rank-1 OM on {e1,e2} with cocircuit +-.
  auto c = contractElement(m, 2);
  CHECK(c.rank() == 1);
  CHECK(canonicalStrings(c.cocircuits()) == std::set<std::string>{"+-"});
  // Delete e3: rank stays 2 (e3 is not a coloop).
  auto d = deleteElement(m, 2);
  CHECK(d.rank() == 2);
  CHECK(canonicalStrings(d.cocircuits()) == std::set<std::string>{"0+", "+0"});
  CHECK_THROWS_AS(deleteElement(m, 7), PreconditionError);
}

TEST_CASE("minor-duality identity on small realized OMs") {
  std::mt19937_64 rng(23);
  std::uniform_int_distribution<int> entry(-2, 2);
  int tested = 0;
  while (tested < 25) {
    int r = 1 + static_cast<int>(rng() % 2);
    int n = 3 + static_cast<int>(rng() % 3);
    RationalMatrix mat(r, n);
    for (int i = 0; i < r; ++i)
      for (int j = 0; j < n; ++j) mat.at(i, j) = entry(rng);
    if (mat.rank() != r) continue;
    auto m = OrientedMatroid::fromMatrix(groundOfSize(n), mat);
    if (!m.loops().empty()) continue;
    ++tested;
    for (int e = 0; e < n; ++e) {
      auto lhs = dual(deleteElement(m, e));
      auto rhs = contractElement(dual(m), e);
      REQUIRE(lhs.rank() == rhs.rank());
      REQUIRE(lhs.cocircuits() == rhs.cocircuits());
      auto lhs2 = dual(contractElement(m, e));
      auto rhs2 = deleteElement(dual(m), e);
      REQUIRE(lhs2.rank() == rhs2.rank());
      REQUIRE(lhs2.cocircuits() == rhs2.cocircuits());
    }
  }
}

TEST_CASE("rank function is greedy-consistent, monotone and submodular") {
  auto m = OrientedMatroid::fromMatrix(
      groundOfSize(5), intMatrix({{1, 0, 1, 1, 0}, {0, 1, 1, 0, 1}, {0, 0, 0, 1, 1}}));
  std::uint32_t full = (1u << 5) - 1;
  CHECK(m.rankOf(full) == 3);
  CHECK(m.rankOf(0) == 0);
  for (std::uint32_t a = 0; a <= full; ++a) {
    // Against the realization.
    auto idx = maskToIndices(a);
    REQUIRE(m.rankOf(a) == m.realization()->rankOfColumns(idx));
    for (std::uint32_t b = 0; b <= full; ++b) {
      if ((a & b) == a)
        REQUIRE(m.rankOf(a) <= m.rankOf(b));  // monotone on subsets
      REQUIRE(m.rankOf(a | b) + m.rankOf(a & b) <= m.rankOf(a) + m.rankOf(b));
    }
  }
}

TEST_CASE("fundamental circuits and cocircuits") {
  auto m = exampleOM();
  std::uint32_t base = 0b011;  // {e1,e2}
  REQUIRE(m.isBase(base));
  auto x = m.fundamentalCircuit(base, 2);
  CHECK(x.str() == "--+");  // the circuit ++- signed to be + at e3
  CHECK(x.chr(2) == '+');
  CHECK((x.supportMask() & ~(base | 0b100u)) == 0);
  auto y = m.fundamentalCocircuit(base, 0);
  CHECK(y.str() == "+0+");
  CHECK(y.chr(0) == '+');
  // Orthogonality of fundamental pairs.
  CHECK(x.orthogonal(y));
  CHECK_THROWS_AS(m.fundamentalCircuit(0b110, 2), PreconditionError);  // {e2,e3}+e3
  CHECK_THROWS_AS(m.fundamentalCocircuit(base, 2), PreconditionError);
}

TEST_CASE("convex membership via circuits") {
  auto m = exampleOM();
  // e3 = e1 + e2 realizably, so e3 lies in conv{e1,e2}.
  CHECK(m.convMembership(2, 0b011, Sign::Plus));
  CHECK_FALSE(m.convMembership(2, 0b001, Sign::Plus));
  CHECK_FALSE(m.convMembership(0, 0, Sign::Plus));
  // No positive circuit here, so -e3 is not in conv.
  CHECK_FALSE(m.convMembership(2, 0b011, Sign::Minus));
  CHECK_THROWS_AS(m.convMembership(1, 0b010, Sign::Plus), PreconditionError);
  // A configuration with 0 in the interior: -e3 in conv{e1,e2}.
  auto m2 = OrientedMatroid::fromMatrix(groundOfSize(3),
                                        intMatrix({{1, 0, -1}, {0, 1, -1}}));
  CHECK(m2.convMembership(2, 0b011, Sign::Minus));
}

TEST_CASE("loops and coloops") {
  auto m = OrientedMatroid::fromMatrix(groundOfSize(3), intMatrix({{1, 1, 0}}));
  CHECK(m.isLoop(2));
  CHECK(m.loops() == std::vector<int>{2});
  auto m2 = OrientedMatroid::fromMatrix(groundOfSize(3),
                                        intMatrix({{1, 1, 0}, {0, 0, 1}}));
  CHECK(m2.isColoop(2));
  CHECK_FALSE(m2.isColoop(0));
  auto del = deleteElement(m2, 2);
  CHECK(del.rank() == 1);  // coloop deletion drops rank
  auto con = contractElement(m, 2);
  CHECK(con.rank() == 1);  // loop contraction keeps rank
}

TEST_CASE("reorientation flips one coordinate") {
  auto m = exampleOM();
  auto r = reorientElement(m, 2);
  CHECK(canonicalStrings(r.cocircuits()) ==
        std::set<std::string>{"0+-", "+0-", "+-0"});
  auto rr = reorientElement(r, 2);
  CHECK(rr == m);
  CHECK(rr.chirotope()->toString() == m.chirotope()->toString());
}

TEST_CASE("brute-force cap is enforced with guidance") {
  std::vector<SignVector> cocircuits;
  auto g = groundOfSize(13);
  std::string s(13, '0');
  s[0] = '+';
  cocircuits.emplace_back(g, s);
  auto m = OrientedMatroid::fromCocircuits(g, 1, cocircuits);
  CHECK_THROWS_AS(m.circuits(), CapExceededError);
  CHECK_THROWS_AS(m.covectorSpan(), CapExceededError);
}

TEST_CASE("chirotope string round-trip") {
  auto m = exampleOM();
  std::string s = m.chirotope()->toString();
  CHECK(s.size() == 3);  // C(3,2) subsets in lex order
  auto rebuilt = OrientedMatroid::fromChirotope(m.ground(),
                                                Chirotope::fromString(2, 3, s));
  CHECK(rebuilt == m);
  CHECK_THROWS_AS(Chirotope::fromString(2, 3, "000"), PreconditionError);
  CHECK_THROWS_AS(Chirotope::fromString(2, 3, "+-"), PreconditionError);
}
