#include "hyperreg/multigraph.hpp"

#include <algorithm>

namespace hyperreg {

std::string edge_kind_name(EdgeKind k) {
  switch (k) {
    case EdgeKind::Proper:
      return "proper";
    case EdgeKind::GoodLoop:
      return "good-loop";
    case EdgeKind::BadLoopMult3:
      return "bad-loop-mult3";
    case EdgeKind::BadLoopTwoRepeats:
      return "bad-loop-two-repeats";
  }
  return "?";
}

EdgeKind classify_edge(const EdgeVec& e) {
  int repeated = 0;   // vertices with multiplicity >= 2
  int max_run = 1;
  size_t i = 0;
  while (i < e.size()) {
    size_t j = i + 1;
    while (j < e.size() && e[j] == e[i]) ++j;
    const int run = static_cast<int>(j - i);
    if (run >= 2) ++repeated;
    max_run = std::max(max_run, run);
    i = j;
  }
  if (repeated == 0) return EdgeKind::Proper;
  if (max_run >= 3) return EdgeKind::BadLoopMult3;
  if (repeated >= 2) return EdgeKind::BadLoopTwoRepeats;
  return EdgeKind::GoodLoop;
}

bool sets_disjoint(const EdgeVec& a, const EdgeVec& b) {
  size_t i = 0, j = 0;
  while (i < a.size() && j < b.size()) {
    if (a[i] < b[j])
      ++i;
    else if (a[i] > b[j])
      ++j;
    else
      return false;
  }
  return true;
}

bool edge_contains(const EdgeVec& e, Vertex v) {
  for (Vertex x : e) {
    if (x == v) return true;
    if (x > v) return false;
  }
  return false;
}

void set_intersection(const EdgeVec& a, const EdgeVec& b, EdgeVec& out) {
  out.clear();
  size_t i = 0, j = 0;
  while (i < a.size() && j < b.size()) {
    if (a[i] < b[j]) {
      ++i;
    } else if (a[i] > b[j]) {
      ++j;
    } else {
      if (out.empty() || out.back() != a[i]) out.push_back(a[i]);
      ++i;
      ++j;
    }
  }
}

void replace_vertex(const EdgeVec& e, Vertex out, Vertex in, EdgeVec& result) {
  result.clear();
  bool removed = false;
  for (Vertex x : e) {
    if (!removed && x == out) {
      removed = true;
      continue;
    }
    result.push_back(x);
  }
  auto pos = std::upper_bound(result.begin(), result.end(), in);
  result.insert(pos, in);
}

bool all_distinct(const EdgeVec& e) {
  for (size_t i = 1; i < e.size(); ++i)
    if (e[i] == e[i - 1]) return false;
  return true;
}

void Multigraph::canonicalize() { std::sort(edges.begin(), edges.end()); }

std::vector<int> Multigraph::degrees() const {
  std::vector<int> deg(n, 0);
  for (const auto& e : edges)
    for (Vertex v : e) ++deg[v - 1];
  return deg;
}

bool Multigraph::is_regular(int d) const {
  for (int x : degrees())
    if (x != d) return false;
  return true;
}

bool Multigraph::is_simple() const {
  for (size_t i = 0; i < edges.size(); ++i) {
    if (classify_edge(edges[i]) != EdgeKind::Proper) return false;
    if (i > 0 && edges[i] == edges[i - 1]) return false;
  }
  return true;
}

}  // namespace hyperreg
