#include "omp/io.hpp"

#include <fstream>
#include <sstream>

namespace omp {

namespace {

std::vector<std::string> splitLines(const std::string& text) {
  std::vector<std::string> lines;
  std::istringstream is(text);
  std::string line;
  while (std::getline(is, line)) {
    if (!line.empty() && line.back() == '\r') line.pop_back();
    lines.push_back(line);
  }
  return lines;
}

std::vector<std::string> splitOn(const std::string& s, char sep) {
  std::vector<std::string> out;
  std::istringstream is(s);
  std::string tok;
  while (std::getline(is, tok, sep)) out.push_back(tok);
  return out;
}

std::string trim(const std::string& s) {
  size_t a = s.find_first_not_of(" \t");
  if (a == std::string::npos) return "";
  size_t b = s.find_last_not_of(" \t");
  return s.substr(a, b - a + 1);
}

// "key=value" reader for header lines.
std::string headerValue(const std::string& line, const std::string& key, int lineNo) {
  std::string needle = key + "=";
  size_t pos = line.find(needle);
  if (pos == std::string::npos)
    throw ParseError("missing '" + key + "=' in header", lineNo);
  size_t start = pos + needle.size();
  size_t end = line.find(' ', start);
  return line.substr(start, end == std::string::npos ? std::string::npos : end - start);
}

struct OMParseOutput {
  OrientedMatroid om;
  std::optional<std::pair<std::string, std::string>> programLine;  // f, g labels
};

OMParseOutput parseOMLines(const std::vector<std::string>& lines) {
  if (lines.empty()) throw ParseError("empty file", 1);
  if (lines[0].rfind("OM ", 0) != 0) throw ParseError("expected 'OM' header", 1);
  int rank = 0, n = 0;
  try {
    rank = std::stoi(headerValue(lines[0], "rank", 1));
    n = std::stoi(headerValue(lines[0], "n", 1));
  } catch (const std::exception&) {
    throw ParseError("malformed rank/n in header", 1);
  }
  auto labels = splitOn(headerValue(lines[0], "labels", 1), ',');
  if (static_cast<int>(labels.size()) != n)
    throw ParseError("label count " + std::to_string(labels.size()) + " != n=" +
                         std::to_string(n), 1);
  GroundPtr ground;
  try {
    ground = GroundSet::make(labels);
  } catch (const Error& e) {
    throw ParseError(e.what(), 1);
  }

  size_t i = 1;
  while (i < lines.size() && trim(lines[i]).empty()) ++i;
  if (i >= lines.size()) throw ParseError("missing body section", static_cast<int>(i + 1));
  std::string section = trim(lines[i]);

  std::optional<std::pair<std::string, std::string>> programLine;
  auto tryProgramLine = [&](const std::string& line, int lineNo) {
    if (line.rfind("program:", 0) != 0) return false;
    std::string f = headerValue(line, "f", lineNo);
    std::string g = headerValue(line, "g", lineNo);
    programLine = {{f, g}};
    return true;
  };

  OrientedMatroid om = [&]() -> OrientedMatroid {
    if (section == "cocircuits:") {
      std::vector<SignVector> cocircuits;
      for (size_t j = i + 1; j < lines.size(); ++j) {
        std::string line = trim(lines[j]);
        if (line.empty()) continue;
        if (tryProgramLine(line, static_cast<int>(j + 1))) continue;
        if (static_cast<int>(line.size()) != n)
          throw ParseError("sign string length != n", static_cast<int>(j + 1));
        for (size_t c = 0; c < line.size(); ++c)
          if (line[c] != '+' && line[c] != '-' && line[c] != '0')
            throw ParseError(std::string("invalid sign character '") + line[c] + "'",
                             static_cast<int>(j + 1), static_cast<int>(c + 1));
        cocircuits.emplace_back(ground, line);
      }
      if (cocircuits.empty())
        throw ParseError("no cocircuits given", static_cast<int>(lines.size()));
      return OrientedMatroid::fromCocircuits(ground, rank, cocircuits);
    }
    if (section.rfind("chirotope:", 0) == 0) {
      std::string chi = trim(section.substr(std::string("chirotope:").size()));
      for (size_t j = i + 1; j < lines.size(); ++j) {
        std::string line = trim(lines[j]);
        if (line.empty()) continue;
        if (tryProgramLine(line, static_cast<int>(j + 1))) continue;
        throw ParseError("unexpected content after chirotope", static_cast<int>(j + 1));
      }
      for (size_t c = 0; c < chi.size(); ++c)
        if (chi[c] != '+' && chi[c] != '-' && chi[c] != '0')
          throw ParseError(std::string("invalid sign character '") + chi[c] + "'",
                           static_cast<int>(i + 1), static_cast<int>(c + 1));
      try {
        return OrientedMatroid::fromChirotope(ground, Chirotope::fromString(rank, n, chi));
      } catch (const Error& e) {
        throw ParseError(e.what(), static_cast<int>(i + 1));
      }
    }
    if (section == "matrix:") {
      std::vector<std::vector<Rational>> rows;
      for (size_t j = i + 1; j < lines.size(); ++j) {
        std::string line = trim(lines[j]);
        if (line.empty()) continue;
        if (tryProgramLine(line, static_cast<int>(j + 1))) continue;
        std::vector<Rational> row;
        std::istringstream is(line);
        std::string tok;
        while (is >> tok) {
          try {
            row.push_back(parseRational(tok));
          } catch (const Error& e) {
            throw ParseError(e.what(), static_cast<int>(j + 1));
          }
        }
        if (static_cast<int>(row.size()) != n)
          throw ParseError("matrix row has " + std::to_string(row.size()) +
                               " entries, expected " + std::to_string(n),
                           static_cast<int>(j + 1));
        rows.push_back(std::move(row));
      }
      if (static_cast<int>(rows.size()) != rank)
        throw ParseError("matrix must have rank=" + std::to_string(rank) + " rows",
                         static_cast<int>(lines.size()));
      try {
        return OrientedMatroid::fromMatrix(ground, RationalMatrix::fromRows(std::move(rows)));
      } catch (const Error& e) {
        throw ParseError(e.what(), static_cast<int>(i + 1));
      }
    }
    throw ParseError("expected 'cocircuits:', 'chirotope:' or 'matrix:'",
                     static_cast<int>(i + 1));
  }();
  if (om.rank() != rank)
    throw ParseError("declared rank " + std::to_string(rank) + " != constructed rank " +
                         std::to_string(om.rank()), 1);
  return {std::move(om), programLine};
}

}  // namespace

OrientedMatroid parseOM(const std::string& text) {
  auto out = parseOMLines(splitLines(text));
  if (out.programLine) throw ParseError("unexpected 'program:' line in an OM file", 1);
  return std::move(out.om);
}

std::string serializeOM(const OrientedMatroid& m) {
  std::ostringstream os;
  os << "OM rank=" << m.rank() << " n=" << m.groundSize() << " labels=";
  for (int i = 0; i < m.groundSize(); ++i) {
    if (i) os << ',';
    os << m.ground()->label(i);
  }
  os << '\n';
  if (m.realization()) {
    os << "matrix:\n";
    const auto& r = *m.realization();
    for (int i = 0; i < r.rows(); ++i) {
      for (int j = 0; j < r.cols(); ++j) {
        if (j) os << ' ';
        os << rationalToString(r.at(i, j));
      }
      os << '\n';
    }
  } else if (m.chirotope()) {
    os << "chirotope: " << m.chirotope()->toString() << '\n';
  } else {
    os << "cocircuits:\n";
    for (const auto& y : m.cocircuits()) os << y.str() << '\n';
  }
  return os.str();
}

OMProgram parseProgram(const std::string& text) {
  auto out = parseOMLines(splitLines(text));
  if (!out.programLine) throw ParseError("missing 'program: f=<..> g=<..>' line", 1);
  try {
    return OMProgram(std::move(out.om), out.programLine->first, out.programLine->second);
  } catch (const Error& e) {
    throw ParseError(e.what(), 1);
  }
}

std::string serializeProgram(const OMProgram& p) {
  std::ostringstream os;
  os << serializeOM(p.matroid());
  os << "program: f=" << p.fLabel() << " g=" << p.gLabel() << '\n';
  return os.str();
}

Digraph parseDigraph(const std::string& text) {
  auto lines = splitLines(text);
  if (lines.empty() || lines[0].rfind("DIGRAPH", 0) != 0)
    throw ParseError("expected 'DIGRAPH' header", 1);
  int n = 0;
  try {
    n = std::stoi(headerValue(lines[0], "n", 1));
  } catch (const std::exception&) {
    throw ParseError("malformed n in header", 1);
  }
  Digraph d;
  if (lines[0].find(" d=") != std::string::npos) {
    try {
      d.dimensionHint = std::stoi(headerValue(lines[0], "d", 1));
    } catch (const std::exception&) {
      throw ParseError("malformed d in header", 1);
    }
  }
  std::vector<std::pair<std::string, std::string>> arcSpecs;
  for (size_t j = 1; j < lines.size(); ++j) {
    std::string line = trim(lines[j]);
    if (line.empty()) continue;
    std::istringstream is(line);
    std::string kind;
    is >> kind;
    if (kind == "node") {
      std::string label;
      if (!(is >> label)) throw ParseError("node line needs a label", static_cast<int>(j + 1));
      d.labels.push_back(label);
    } else if (kind == "arc") {
      std::string u, v;
      if (!(is >> u >> v)) throw ParseError("arc line needs two labels", static_cast<int>(j + 1));
      arcSpecs.emplace_back(u, v);
    } else {
      throw ParseError("expected 'node' or 'arc'", static_cast<int>(j + 1));
    }
  }
  if (static_cast<int>(d.labels.size()) != n)
    throw ParseError("node count != n in header", 1);
  for (const auto& [u, v] : arcSpecs) {
    int ui = d.indexOf(u), vi = d.indexOf(v);
    if (ui < 0) throw ParseError("arc references unknown node '" + u + "'", 1);
    if (vi < 0) throw ParseError("arc references unknown node '" + v + "'", 1);
    d.arcs.emplace_back(ui, vi);
  }
  try {
    d.deriveSourceSink();
    d.validate();
  } catch (const Error& e) {
    throw ParseError(e.what(), 1);
  }
  return d;
}

std::string serializeDigraph(const Digraph& d) {
  std::ostringstream os;
  os << "DIGRAPH n=" << d.nodeCount();
  if (d.dimensionHint) os << " d=" << *d.dimensionHint;
  os << '\n';
  for (const auto& l : d.labels) os << "node " << l << '\n';
  for (auto [u, v] : d.arcs) os << "arc " << d.labels[u] << ' ' << d.labels[v] << '\n';
  return os.str();
}

ParsedFile parseAny(const std::string& text) {
  auto lines = splitLines(text);
  if (!lines.empty() && lines[0].rfind("DIGRAPH", 0) == 0) return parseDigraph(text);
  auto out = parseOMLines(lines);
  if (out.programLine)
    return OMProgram(std::move(out.om), out.programLine->first, out.programLine->second);
  return std::move(out.om);
}

std::string readTextFile(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw PreconditionError("cannot open file '" + path + "'");
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

ParsedFile parseFile(const std::string& path) { return parseAny(readTextFile(path)); }

// ---------------------------------------------------------------------------
// DOT export
// ---------------------------------------------------------------------------

namespace {
std::string quoted(const std::string& s) {
  std::string out = "\"";
  for (char c : s) {
    if (c == '"' || c == '\\') out.push_back('\\');
    out.push_back(c);
  }
  out.push_back('"');
  return out;
}
}  // namespace

std::string exportDot(const Digraph& d, const DotOptions& options) {
  static const char* palette[] = {"red", "blue", "darkgreen", "orange", "purple"};
  std::ostringstream os;
  os << "digraph " << options.graphName << " {\n";
  os << "  rankdir=LR;\n";
  std::vector<bool> inCut(d.nodeCount(), false);
  for (int v : options.highlightCut) inCut.at(v) = true;
  for (int i = 0; i < d.nodeCount(); ++i) {
    std::vector<std::string> attrs;
    if (i == d.source) attrs.push_back("shape=doublecircle");
    else if (i == d.sink) attrs.push_back("shape=doubleoctagon");
    if (inCut[i]) {
      attrs.push_back("style=filled");
      attrs.push_back("fillcolor=lightgray");
    }
    if (attrs.empty()) continue;
    os << "  " << quoted(d.labels[i]) << " [";
    for (size_t a = 0; a < attrs.size(); ++a) {
      if (a) os << ',';
      os << attrs[a];
    }
    os << "];\n";
  }
  // Arc color by the first highlighted path using it.
  auto pathColor = [&](int u, int v) -> const char* {
    for (size_t p = 0; p < options.highlightPaths.size(); ++p) {
      const auto& path = options.highlightPaths[p];
      for (size_t i = 0; i + 1 < path.size(); ++i)
        if (path[i] == u && path[i + 1] == v)
          return palette[p % (sizeof(palette) / sizeof(palette[0]))];
    }
    return nullptr;
  };
  for (auto [u, v] : d.arcs) {
    os << "  " << quoted(d.labels[u]) << " -> " << quoted(d.labels[v]);
    if (const char* color = pathColor(u, v))
      os << " [color=" << color << ",penwidth=2.0]";
    os << ";\n";
  }
  os << "}\n";
  return os.str();
}

}  // namespace omp
