#pragma once

#include <algorithm>
#include <random>
#include <set>
#include <string>
#include <vector>

#include "omp/digraph.hpp"
#include "omp/om.hpp"
#include "omp/rational.hpp"

namespace omp::testing {

inline RationalMatrix intMatrix(const std::vector<std::vector<int>>& rows) {
  std::vector<std::vector<Rational>> r;
  for (const auto& row : rows) r.emplace_back(row.begin(), row.end());
  return RationalMatrix::fromRows(std::move(r));
}

inline GroundPtr groundOfSize(int n, const std::string& prefix = "e") {
  std::vector<std::string> labels;
  for (int i = 1; i <= n; ++i) labels.push_back(prefix + std::to_string(i));
  return GroundSet::make(labels);
}

// Independent oracle for realized covector spans: enumerate sign vectors of
// integer combinations of the rows over a grid.  Sound for every output;
// complete on the small fixed matrices used in tests (checked by comparing
// cardinalities against the implementation).
inline std::set<std::string> gridSpanOracle(const RationalMatrix& m, int radius) {
  std::set<std::string> out;
  const int r = m.rows(), n = m.cols();
  std::vector<int> coef(r, -radius);
  while (true) {
    std::string signs(n, '0');
    for (int c = 0; c < n; ++c) {
      Rational v = 0;
      for (int i = 0; i < r; ++i) v += Rational(coef[i]) * m.at(i, c);
      signs[c] = signChar(signOf(v));
    }
    out.insert(signs);
    int i = 0;
    while (i < r && coef[i] == radius) coef[i++] = -radius;
    if (i == r) break;
    ++coef[i];
  }
  return out;
}

// Exhaustive minimum internal vertex cut (after removing direct source-sink
// arcs, which no vertex cut can cover).  Menger oracle for small digraphs.
inline int bruteForceMengerOracle(const Digraph& d) {
  int direct = 0;
  std::vector<std::pair<int, int>> arcs;
  for (auto [u, v] : d.arcs) {
    if (u == d.source && v == d.sink) ++direct;
    else arcs.push_back({u, v});
  }
  std::vector<int> internals;
  for (int i = 0; i < d.nodeCount(); ++i)
    if (i != d.source && i != d.sink) internals.push_back(i);
  auto reachable = [&](std::uint32_t removed) {
    std::vector<bool> vis(d.nodeCount(), false);
    std::vector<int> stack{d.source};
    vis[d.source] = true;
    while (!stack.empty()) {
      int u = stack.back();
      stack.pop_back();
      if (u == d.sink) return true;
      for (auto [a, b] : arcs) {
        if (a != u || vis[b]) continue;
        bool blocked = false;
        for (size_t i = 0; i < internals.size(); ++i)
          if ((removed & (1u << i)) && internals[i] == b) blocked = true;
        if (blocked) continue;
        vis[b] = true;
        stack.push_back(b);
      }
    }
    return false;
  };
  int best = static_cast<int>(internals.size());
  if (!reachable(0)) return direct;
  for (std::uint32_t removed = 0; removed < (1u << internals.size()); ++removed) {
    int size = __builtin_popcount(removed);
    if (size >= best) continue;
    if (!reachable(removed)) best = size;
  }
  return direct + best;
}

// Exhaustive maximum family of internally disjoint paths by backtracking.
inline int bruteForceMaxFamily(const Digraph& d) {
  std::vector<std::vector<int>> adj(d.nodeCount());
  for (auto [u, v] : d.arcs) adj[u].push_back(v);
  // All simple source->sink paths as internal-node masks.
  std::vector<std::uint32_t> pathMasks;
  std::vector<int> cur;
  std::uint32_t curMask = 0;
  auto dfs = [&](auto&& self, int u) -> void {
    if (u == d.sink) {
      pathMasks.push_back(curMask);
      return;
    }
    for (int v : adj[u]) {
      if (v != d.sink && (v == d.source || (curMask & (1u << v)))) continue;
      if (v != d.sink) curMask |= 1u << v;
      self(self, v);
      if (v != d.sink) curMask &= ~(1u << v);
    }
  };
  dfs(dfs, d.source);
  int best = 0;
  auto pick = [&](auto&& self, size_t from, std::uint32_t used, int count) -> void {
    best = std::max(best, count);
    for (size_t i = from; i < pathMasks.size(); ++i)
      if ((pathMasks[i] & used) == 0) self(self, i + 1, used | pathMasks[i], count + 1);
  };
  pick(pick, 0, 0, 0);
  return best;
}

// Tiny DOT syntax checker: digraph ID { stmt* } with node and edge
// statements, quoted identifiers, and [k=v,...] attribute lists.
inline bool dotGrammarCheck(const std::string& text, std::string* error = nullptr) {
  size_t pos = 0;
  auto fail = [&](const std::string& msg) {
    if (error) *error = msg + " at offset " + std::to_string(pos);
    return false;
  };
  auto skipWs = [&] {
    while (pos < text.size() && (text[pos] == ' ' || text[pos] == '\n' || text[pos] == '\t' ||
                                 text[pos] == '\r'))
      ++pos;
  };
  auto word = [&]() -> std::string {
    skipWs();
    size_t start = pos;
    while (pos < text.size() && (std::isalnum(static_cast<unsigned char>(text[pos])) ||
                                 text[pos] == '_' || text[pos] == '.' || text[pos] == '-'))
      ++pos;
    return text.substr(start, pos - start);
  };
  auto identifier = [&]() -> bool {
    skipWs();
    if (pos < text.size() && text[pos] == '"') {
      ++pos;
      while (pos < text.size() && text[pos] != '"') {
        if (text[pos] == '\\') ++pos;
        ++pos;
      }
      if (pos >= text.size()) return false;
      ++pos;  // closing quote
      return true;
    }
    return !word().empty();
  };
  auto attrList = [&]() -> bool {
    skipWs();
    if (pos >= text.size() || text[pos] != '[') return true;  // optional
    ++pos;
    while (true) {
      if (word().empty()) return false;
      skipWs();
      if (pos >= text.size() || text[pos] != '=') return false;
      ++pos;
      if (!identifier()) return false;
      skipWs();
      if (pos < text.size() && text[pos] == ',') {
        ++pos;
        continue;
      }
      break;
    }
    skipWs();
    if (pos >= text.size() || text[pos] != ']') return false;
    ++pos;
    return true;
  };

  if (word() != "digraph") return fail("expected 'digraph'");
  if (word().empty()) return fail("expected graph name");
  skipWs();
  if (pos >= text.size() || text[pos] != '{') return fail("expected '{'");
  ++pos;
  while (true) {
    skipWs();
    if (pos >= text.size()) return fail("unterminated graph");
    if (text[pos] == '}') {
      ++pos;
      break;
    }
    if (!identifier()) return fail("expected statement identifier");
    skipWs();
    // key=value graph attribute
    if (pos < text.size() && text[pos] == '=') {
      ++pos;
      if (!identifier()) return fail("expected attribute value");
    } else if (pos + 1 < text.size() && text[pos] == '-' && text[pos + 1] == '>') {
      pos += 2;
      if (!identifier()) return fail("expected edge target");
      if (!attrList()) return fail("bad attribute list");
    } else {
      if (!attrList()) return fail("bad attribute list");
    }
    skipWs();
    if (pos < text.size() && text[pos] == ';') ++pos;
  }
  skipWs();
  return pos == text.size() || fail("trailing content");
}

}  // namespace omp::testing
