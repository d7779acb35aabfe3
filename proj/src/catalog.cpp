#include "omp/catalog.hpp"

#include <algorithm>

namespace omp {

namespace {

Digraph makeDigraph(std::vector<std::string> labels,
                    const std::vector<std::pair<std::string, std::string>>& arcs, int d) {
  Digraph g;
  g.labels = std::move(labels);
  for (const auto& [u, v] : arcs)
    g.arcs.emplace_back(g.indexOfOrThrow(u), g.indexOfOrThrow(v));
  g.dimensionHint = d;
  g.deriveSourceSink();
  g.validate();
  return g;
}

// Triangular prism orientation with only two independent monotone paths;
// the nodes marked A and B cover every monotone path.
Digraph fig1Prism() {
  return makeDigraph({"v1", "A", "v3", "B", "v5", "v6"},
                     {{"v1", "A"},
                      {"v1", "v3"},
                      {"v1", "B"},
                      {"v3", "A"},
                      {"A", "v5"},
                      {"B", "v5"},
                      {"B", "v6"},
                      {"v6", "v3"},
                      {"v6", "v5"}},
                     3);
}

// Cyclic 3-polytope with 6 vertices, same two-path phenomenon.
Digraph fig1Cyclic() {
  return makeDigraph({"A", "v2", "v3", "v4", "v5", "B"},
                     {{"A", "B"},
                      {"A", "v2"},
                      {"A", "v3"},
                      {"A", "v5"},
                      {"v4", "v2"},
                      {"v4", "A"},
                      {"v4", "B"},
                      {"v3", "v2"},
                      {"v3", "v5"},
                      {"v3", "B"},
                      {"v2", "B"},
                      {"B", "v5"}},
                     3);
}

// 3-cube orientation with a two-node cover of all monotone paths.
Digraph fig1Cube() {
  return makeDigraph({"v1", "v2", "v3", "B", "A", "v6", "v7", "v8"},
                     {{"v1", "v2"},
                      {"v1", "A"},
                      {"v1", "v3"},
                      {"A", "v6"},
                      {"v3", "B"},
                      {"v2", "B"},
                      {"A", "v7"},
                      {"v7", "v3"},
                      {"v6", "v2"},
                      {"v7", "v8"},
                      {"v6", "v8"},
                      {"B", "v8"}},
                     3);
}

// Rank-4 program digraph whose six internal nodes form a monotone cycle.
Digraph fig2Cycle() {
  return makeDigraph({"v", "v2", "v3", "v4", "v5", "v6", "v7", "w"},
                     {{"v", "v2"},
                      {"v", "v5"},
                      {"v", "v3"},
                      {"v6", "v5"},
                      {"v3", "v4"},
                      {"v4", "v2"},
                      {"v5", "v7"},
                      {"v7", "v3"},
                      {"v2", "v6"},
                      {"v7", "w"},
                      {"v6", "w"},
                      {"v4", "w"}},
                     3);
}

RationalMatrix intRows(const std::vector<std::vector<int>>& rows) {
  std::vector<std::vector<Rational>> r;
  for (const auto& row : rows) {
    std::vector<Rational> v(row.begin(), row.end());
    r.push_back(std::move(v));
  }
  return RationalMatrix::fromRows(std::move(r));
}

// Cube LP in standard form: y_i + s_i = 1, objective y1+y2+y3 (shifted by 1
// so no vertex lies on the objective hyperplane).  The matrix realizes the
// program matroid directly: its row space is the solution-space span.
OMProgram cube3Program() {
  auto ground = GroundSet::make({"e1", "e2", "e3", "e4", "e5", "e6", "f", "g"});
  auto m = intRows({{1, 0, 0, -1, 0, 0, 1, 0},
                    {0, 1, 0, 0, -1, 0, 1, 0},
                    {0, 0, 1, 0, 0, -1, 1, 0},
                    {0, 0, 0, 1, 1, 1, 1, 1}});
  return OMProgram(OrientedMatroid::fromMatrix(ground, m), "f", "g");
}

// Triangular prism: x,y >= 0, x+y <= 1, 0 <= z <= 1, objective x+2y+4z+1.
OMProgram prism3Program() {
  auto ground = GroundSet::make({"e1", "e2", "e3", "e4", "e5", "f", "g"});
  auto m = intRows({{1, 0, 0, -1, 0, 1, 0},
                    {0, 1, 0, -1, 0, 2, 0},
                    {0, 0, 1, 0, -1, 4, 0},
                    {0, 0, 0, 1, 1, 1, 1}});
  return OMProgram(OrientedMatroid::fromMatrix(ground, m), "f", "g");
}

}  // namespace

std::vector<std::string> catalogNames() {
  return {"fig1-prism", "fig1-cyclic", "fig1-cube",      "fig2-cycle",
          "cube3-program", "prism3-program", "pomcp-identity-2", "pomcp-pd-3"};
}

CatalogEntry catalogGet(const std::string& name) {
  CatalogEntry entry;
  entry.name = name;
  if (name == "fig1-prism") {
    entry.kind = CatalogKind::DigraphOnly;
    entry.digraph = fig1Prism();
    entry.provenance = "triangular prism orientation (Felsner-Gaertner-Tschirschnitz)";
  } else if (name == "fig1-cyclic") {
    entry.kind = CatalogKind::DigraphOnly;
    entry.digraph = fig1Cyclic();
    entry.provenance = "cyclic 3-polytope orientation (Fukuda-Moriyama-Okamoto)";
  } else if (name == "fig1-cube") {
    entry.kind = CatalogKind::DigraphOnly;
    entry.digraph = fig1Cube();
    entry.provenance = "3-cube orientation (Stickney-Watson)";
  } else if (name == "fig2-cycle") {
    entry.kind = CatalogKind::DigraphOnly;
    entry.digraph = fig2Cycle();
    entry.provenance = "rank-4 program digraph with a monotone cycle (Edmonds-Fukuda-Mandel)";
  } else if (name == "cube3-program") {
    entry.kind = CatalogKind::Program;
    entry.program = cube3Program();
    entry.provenance = "3-cube linear program, objective x1+x2+x3";
  } else if (name == "prism3-program") {
    entry.kind = CatalogKind::Program;
    entry.program = prism3Program();
    entry.provenance = "triangular prism linear program, objective x+2y+4z";
  } else if (name == "pomcp-identity-2") {
    entry.kind = CatalogKind::Pomcp;
    entry.pomcpMatrix = intRows({{1, 0}, {0, 1}});
    entry.provenance = "2x2 identity P-matrix complementarity instance";
  } else if (name == "pomcp-pd-3") {
    entry.kind = CatalogKind::Pomcp;
    entry.pomcpMatrix = intRows({{2, 1, 0}, {1, 2, 1}, {0, 1, 2}});
    entry.provenance = "3x3 positive-definite P-matrix complementarity instance";
  } else {
    throw PreconditionError("unknown catalog entry '" + name + "'");
  }
  return entry;
}

}  // namespace omp
