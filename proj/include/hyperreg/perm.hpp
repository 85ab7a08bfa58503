#pragma once

#include <optional>
#include <span>
#include <vector>

#include "hyperreg/multigraph.hpp"
#include "hyperreg/rng.hpp"

namespace hyperreg {

// A permutation of the multiset with d copies of each label in [1,n].
// Blocks are the m consecutive k-tuples; block i covers positions [ik, ik+k).
using PermSeq = std::vector<Vertex>;

// The sorted sequence (1,...,1,2,...,2,...,n,...,n).
PermSeq canonical_perm(const Params& p);

bool is_valid_perm(const Params& p, const PermSeq& y);
void check_perm(const Params& p, const PermSeq& y);  // throws DomainError

// Uniform over all (nd)!/(d!)^n distinct multiset permutations, by an
// unbiased in-place Fisher-Yates shuffle of the canonical sequence.
PermSeq sample_permutation(const Params& p, Rng& rng);
void sample_permutation_into(const Params& p, Rng& rng, PermSeq& y);

// Lexicographic successor over distinct multiset permutations; false once
// the last permutation has been visited.
bool next_perm(PermSeq& y);

Multigraph build_multigraph(const Params& p, const PermSeq& y);

struct Classification {
  int loop_blocks = 0;   // blocks that are loops of any kind
  int good_loops = 0;    // loops with exactly k-1 distinct vertices
  bool has_multi_edge = false;
  bool has_bad_loop = false;
  std::optional<int> level;  // l with y in E_l, if y is in E at all
  long long cap = 0;         // loop cap L that was applied
};

Classification classify_perm(const Params& p, const PermSeq& y, const LPolicy& pol);

// Reusable-buffer classifier for full-scan loops.
class PermClassifier {
 public:
  explicit PermClassifier(const Params& p);

  const Classification& classify(const PermSeq& y, long long cap);

  // Per-block canonical edges and kinds from the last classify().
  std::span<const EdgeVec> blocks() const { return {sorted_.data(), sorted_.size()}; }
  std::span<const EdgeKind> kinds() const { return {kind_.data(), kind_.size()}; }
  // Number of unordered pairs of blocks that coincide as multisets.
  long long equal_block_pairs() const { return equal_pairs_; }

 private:
  Params p_;
  std::vector<EdgeVec> sorted_;
  std::vector<EdgeKind> kind_;
  std::vector<int> order_;
  long long equal_pairs_ = 0;
  Classification last_;
};

}  // namespace hyperreg
