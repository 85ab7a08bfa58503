#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include <boost/container/small_vector.hpp>

#include "hyperreg/params.hpp"

namespace hyperreg {

using Vertex = int32_t;

// A k-edge as a multiset of vertex labels, canonical form: sorted ascending.
using EdgeVec = boost::container::small_vector<Vertex, 8>;

enum class EdgeKind {
  Proper,             // k distinct vertices
  GoodLoop,           // exactly one vertex twice, k-1 distinct vertices
  BadLoopMult3,       // some vertex with multiplicity >= 3
  BadLoopTwoRepeats,  // at least two vertices with multiplicity >= 2
};

inline bool is_loop(EdgeKind k) { return k != EdgeKind::Proper; }
inline bool is_bad_loop(EdgeKind k) {
  return k == EdgeKind::BadLoopMult3 || k == EdgeKind::BadLoopTwoRepeats;
}
std::string edge_kind_name(EdgeKind k);

// Classify a canonical (sorted) edge.
EdgeKind classify_edge(const EdgeVec& e);

// Sorted small-multiset helpers shared by the switching enumeration.
bool sets_disjoint(const EdgeVec& a, const EdgeVec& b);
bool edge_contains(const EdgeVec& e, Vertex v);
void set_intersection(const EdgeVec& a, const EdgeVec& b, EdgeVec& out);
// Remove one occurrence of `out` and insert `in`, keeping the edge sorted.
void replace_vertex(const EdgeVec& e, Vertex out, Vertex in, EdgeVec& result);
bool all_distinct(const EdgeVec& e);

// A k-multigraph: multiset of m edges. Canonical form sorts the edge list
// lexicographically so equality and multi-edge detection are plain compares.
struct Multigraph {
  int n = 0;
  int k = 0;
  std::vector<EdgeVec> edges;

  void canonicalize();
  std::vector<int> degrees() const;  // index v-1, multiplicity counted
  bool is_regular(int d) const;
  bool is_simple() const;  // canonical form required: no loops, no equal edges

  bool operator==(const Multigraph&) const = default;
  bool operator<(const Multigraph& o) const { return edges < o.edges; }
};

}  // namespace hyperreg
