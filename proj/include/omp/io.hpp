#pragma once

#include <variant>

#include "omp/digraph.hpp"
#include "omp/om.hpp"
#include "omp/program.hpp"

namespace omp {

struct ParseError : Error {
  ParseError(const std::string& msg, int line, int column = 0)
      : Error("parse error at line " + std::to_string(line) +
              (column > 0 ? ", column " + std::to_string(column) : "") + ": " + msg),
        line(line),
        column(column) {}
  int line;
  int column;
};

// ---------------------------------------------------------------------------
// Line-oriented OM / program / digraph formats.
//
//   OM rank=<r> n=<|E|> labels=<comma-separated>
//   cocircuits:            |  chirotope: <string>  |  matrix:
//   <one sign string/line> |                       |  <r rows of rationals>
//
// A program file appends:  program: f=<label> g=<label>
//
//   DIGRAPH n=<count> [d=<dim>]
//   node <label>
//   arc <from> <to>
// ---------------------------------------------------------------------------

OrientedMatroid parseOM(const std::string& text);
std::string serializeOM(const OrientedMatroid& m);

OMProgram parseProgram(const std::string& text);
std::string serializeProgram(const OMProgram& p);

Digraph parseDigraph(const std::string& text);
std::string serializeDigraph(const Digraph& d);

using ParsedFile = std::variant<OrientedMatroid, OMProgram, Digraph>;
ParsedFile parseAny(const std::string& text);
ParsedFile parseFile(const std::string& path);

std::string readTextFile(const std::string& path);

// ---------------------------------------------------------------------------
// DOT export: source drawn as a double circle, sink as a double octagon;
// optional path and cut highlighting.
// ---------------------------------------------------------------------------

struct DotOptions {
  std::string graphName = "omp";
  std::vector<std::vector<int>> highlightPaths;
  std::vector<int> highlightCut;
};

std::string exportDot(const Digraph& d, const DotOptions& options = {});

}  // namespace omp
