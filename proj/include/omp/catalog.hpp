#pragma once

#include <optional>

#include "omp/digraph.hpp"
#include "omp/program.hpp"
#include "omp/rational.hpp"

namespace omp {

// ---------------------------------------------------------------------------
// Built-in examples: the three unique-sink orientations without three
// independent paths, the rank-4 program digraph with a monotone cycle, two
// realizable LP programs, and two P-matrix complementarity instances.
// ---------------------------------------------------------------------------

enum class CatalogKind { DigraphOnly, Program, Pomcp };

struct CatalogEntry {
  std::string name;
  CatalogKind kind = CatalogKind::DigraphOnly;
  std::optional<Digraph> digraph;            // DigraphOnly
  std::optional<OMProgram> program;          // Program
  std::optional<RationalMatrix> pomcpMatrix; // Pomcp
  std::string provenance;
};

std::vector<std::string> catalogNames();
CatalogEntry catalogGet(const std::string& name);

}  // namespace omp
