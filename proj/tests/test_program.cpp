#include "doctest.h"
#include "helpers.hpp"
#include "omp/catalog.hpp"
#include "omp/holt_klee.hpp"
#include "omp/program.hpp"

#include <map>
#include <set>

using namespace omp;
using namespace omp::testing;

namespace {

// Geometric oracle: orient polytope edges by increasing objective value and
// name each vertex by its tight constraint set.
struct GeometricVertex {
  std::vector<std::string> tight;
  int objective;
};

std::set<std::pair<std::string, std::string>> geometricArcs(
    const std::vector<GeometricVertex>& vertices, const GroundSet& ground, int sharedTight) {
  auto mask = [&](const GeometricVertex& v) {
    std::uint32_t m = 0;
    for (const auto& l : v.tight) m |= 1u << ground.indexOfOrThrow(l);
    return m;
  };
  std::set<std::pair<std::string, std::string>> arcs;
  for (size_t i = 0; i < vertices.size(); ++i)
    for (size_t j = 0; j < vertices.size(); ++j) {
      if (i == j) continue;
      std::uint32_t shared = mask(vertices[i]) & mask(vertices[j]);
      if (__builtin_popcount(shared) != sharedTight) continue;
      if (vertices[i].objective < vertices[j].objective)
        arcs.insert({maskToString(ground, mask(vertices[i])),
                     maskToString(ground, mask(vertices[j]))});
    }
  return arcs;
}

}  // namespace

TEST_CASE("cube program is valid") {
  auto program = catalogGet("cube3-program").program.value();
  const auto& v = program.validation();
  CHECK(v.bounded);
  CHECK(v.acyclic);
  CHECK(v.fNondegenerate);
  CHECK(v.noLoops);
  CHECK(v.ok());
  CHECK(program.rank() == 4);
  CHECK(program.matroid().groundSize() == 8);
}

TEST_CASE("prism program is valid") {
  auto program = catalogGet("prism3-program").program.value();
  CHECK(program.validation().ok());
  CHECK(program.rank() == 4);
  CHECK(program.matroid().groundSize() == 7);
}

TEST_CASE("objective parallel to a coordinate is degenerate") {
  auto ground = GroundSet::make({"e1", "e2", "e3", "e4", "e5", "e6", "f", "g"});
  auto m = intMatrix({{1, 0, 0, -1, 0, 0, 1, 0},
                      {0, 1, 0, 0, -1, 0, 0, 0},
                      {0, 0, 1, 0, 0, -1, 0, 0},
                      {0, 0, 0, 1, 1, 1, 0, 1}});
  auto report = validateProgram(OrientedMatroid::fromMatrix(ground, m), "f", "g");
  CHECK_FALSE(report.fNondegenerate);
}

TEST_CASE("unbounded feasible cone fails the bounded check") {
  // One equation y1 - y2 = 1 with objective y1: the ray (t+1, t) escapes.
  auto ground = GroundSet::make({"e1", "e2", "f", "g"});
  auto m = intMatrix({{1, 1, 1, 0}, {1, 0, 1, 1}});
  auto report = validateProgram(OrientedMatroid::fromMatrix(ground, m), "f", "g");
  CHECK_FALSE(report.bounded);
}

TEST_CASE("coordinate forced to zero fails the acyclic check") {
  // y1 + y2 = 0 with y >= 0 pins the feasible set to the origin.
  auto ground = GroundSet::make({"e1", "e2", "f", "g"});
  auto m = intMatrix({{1, -1, 1, 0}, {0, 0, 1, 1}});
  auto report = validateProgram(OrientedMatroid::fromMatrix(ground, m), "f", "g");
  CHECK_FALSE(report.acyclic);
}

TEST_CASE("faces of the cube program count 8/12/6") {
  auto program = catalogGet("cube3-program").program.value();
  auto fs = faces(program);
  std::map<int, int> byRank;
  for (const auto& f : fs) ++byRank[f.rank];
  CHECK(byRank[3] == 8);  // vertices of the cube = facets of the sphere
  CHECK(byRank[2] == 12);
  CHECK(byRank[1] == 6);
  CHECK(byRank[0] == 1);  // bottom face (empty set)
  // Inclusion is rank-monotone.
  for (const auto& a : fs)
    for (const auto& b : fs)
      if ((a.elements & b.elements) == a.elements) CHECK(a.rank <= b.rank);
}

TEST_CASE("Edmonds-Mandel graph of the cube program is the 3-cube graph") {
  auto program = catalogGet("cube3-program").program.value();
  auto g = emGraph(program);
  CHECK(g.nodes.size() == 8);
  CHECK(g.edges.size() == 12);
  std::vector<int> degree(8, 0);
  for (auto [u, v] : g.edges) {
    ++degree[u];
    ++degree[v];
  }
  for (int d : degree) CHECK(d == 3);
  CHECK(vertexConnectivity(g) == 3);  // (r-1)-connected
}

TEST_CASE("Edmonds-Mandel graph of the prism program is the prism graph") {
  auto program = catalogGet("prism3-program").program.value();
  auto g = emGraph(program);
  CHECK(g.nodes.size() == 6);
  CHECK(g.edges.size() == 9);
  CHECK(vertexConnectivity(g) == 3);
}

TEST_CASE("cube orientation matches the geometric oracle") {
  auto program = catalogGet("cube3-program").program.value();
  auto d = orient(program);
  const GroundSet& ground = *program.matroid().ground();
  // Vertices of the unit cube: tight sets and objective x1+x2+x3 values.
  std::vector<GeometricVertex> vertices;
  for (int x1 : {0, 1})
    for (int x2 : {0, 1})
      for (int x3 : {0, 1}) {
        GeometricVertex v;
        v.tight = {x1 ? "e4" : "e1", x2 ? "e5" : "e2", x3 ? "e6" : "e3"};
        v.objective = x1 + x2 + x3;
        vertices.push_back(v);
      }
  auto oracle = geometricArcs(vertices, ground, 2);
  std::set<std::pair<std::string, std::string>> actual;
  for (auto [u, v] : d.arcs) actual.insert({d.nodeName(u), d.nodeName(v)});
  CHECK(actual == oracle);
  CHECK(d.arcs.size() == 12);
  // Unique source at the origin, sink at the all-ones vertex.
  CHECK(d.nodeName(d.source) == "{e1,e2,e3}");
  CHECK(d.nodeName(d.sink) == "{e4,e5,e6}");
}

TEST_CASE("prism orientation matches the geometric oracle") {
  auto program = catalogGet("prism3-program").program.value();
  auto d = orient(program);
  const GroundSet& ground = *program.matroid().ground();
  // Facets: e1:x=0, e2:y=0, e3:z=0, e4:x+y=1, e5:z=1; objective x+2y+4z.
  std::vector<GeometricVertex> vertices = {
      {{"e1", "e2", "e3"}, 0}, {{"e2", "e4", "e3"}, 1}, {{"e1", "e4", "e3"}, 2},
      {{"e1", "e2", "e5"}, 4}, {{"e2", "e4", "e5"}, 5}, {{"e1", "e4", "e5"}, 6}};
  auto oracle = geometricArcs(vertices, ground, 2);
  std::set<std::pair<std::string, std::string>> actual;
  for (auto [u, v] : d.arcs) actual.insert({d.nodeName(u), d.nodeName(v)});
  CHECK(actual == oracle);
  CHECK(d.nodeName(d.source) == "{e1,e2,e3}");
  CHECK(d.nodeName(d.sink) == "{e1,e4,e5}");
}

TEST_CASE("reversing the objective reverses every arc") {
  auto program = catalogGet("cube3-program").program.value();
  auto d = orient(program);
  auto reversed = OMProgram(reorientElement(program.matroid(), program.fIndex()), "f", "g");
  auto dr = orient(reversed);
  REQUIRE(d.nodes == dr.nodes);
  std::set<std::pair<int, int>> flipped;
  for (auto [u, v] : dr.arcs) flipped.insert({v, u});
  std::set<std::pair<int, int>> original(d.arcs.begin(), d.arcs.end());
  CHECK(original == flipped);
  CHECK(d.source == dr.sink);
  CHECK(d.sink == dr.source);
}

TEST_CASE("every face of the cube digraph has a unique sink and source") {
  auto program = catalogGet("cube3-program").program.value();
  auto d = orient(program);
  // Proper faces of rank >= r-2 with at least 2 nodes: restrict and count.
  for (const auto& face : faces(program)) {
    std::vector<int> members;
    for (size_t i = 0; i < d.nodes.size(); ++i)
      if ((face.elements & d.nodes[i]) == face.elements) members.push_back(static_cast<int>(i));
    if (members.size() < 2) continue;
    int sinks = 0, sources = 0;
    for (int i : members) {
      bool out = false, in = false;
      for (auto [u, v] : d.arcs) {
        bool uIn = std::find(members.begin(), members.end(), u) != members.end();
        bool vIn = std::find(members.begin(), members.end(), v) != members.end();
        if (!uIn || !vIn) continue;
        if (u == i) out = true;
        if (v == i) in = true;
      }
      if (!out) ++sinks;
      if (!in) ++sources;
    }
    CHECK(sinks == 1);
    CHECK(sources == 1);
  }
}

TEST_CASE("sourceSink agrees with the convex-hull characterization") {
  for (const char* name : {"cube3-program", "prism3-program"}) {
    auto program = catalogGet(name).program.value();
    auto d = orient(program);
    auto [src, snk] = sourceSink(program, d);
    CHECK(src == d.nodes[d.source]);
    CHECK(snk == d.nodes[d.sink]);
  }
}

TEST_CASE("orient refuses invalid programs") {
  auto ground = GroundSet::make({"e1", "e2", "f", "g"});
  auto m = intMatrix({{1, 1, 1, 0}, {1, 0, 1, 1}});  // unbounded fixture
  OMProgram program(OrientedMatroid::fromMatrix(ground, m), "f", "g");
  CHECK_THROWS_AS(orient(program), PreconditionError);
  CHECK_THROWS_AS(faces(program), PreconditionError);
}
