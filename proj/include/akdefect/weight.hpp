#pragma once

#include <compare>
#include <cstddef>
#include <functional>
#include <string>
#include <vector>

#include "akdefect/abacus.hpp"
#include "akdefect/partition.hpp"

namespace akdefect {

// Node counts by residue (col - row + s_a) mod e.
struct ResidueVector {
  int e = 2;
  std::vector<int> counts;

  int total() const;
  std::string to_string() const;  // "3,3,2"
  auto operator<=>(const ResidueVector&) const = default;
};

ResidueVector residue_vector(const Multipartition& mp, const Multicharge& s, int e);

// sum_i c_{s_i} - 1/2 sum_{i in Z/e} (c_i - c_{i-1})^2
int fayers_weight(const Multipartition& mp, const Multicharge& s, int e);

// Picks one of `count` eligible moves; used to randomise the bead recursion.
using MoveChooser = std::function<std::size_t(std::size_t count)>;

struct Reduction {
  BetaConfig terminal;
  int moves = 0;
};

// Runs the bead recursion to its terminal abacus:
//   step 1: a bead x of runner c-1 that is a gap of runner c moves up to c;
//   step 3: (only when no step 1 applies) a bead x of runner l-1 with x-e a
//           gap of runner 0 inside the window moves to runner 0 at x-e.
// Without a chooser the moves are taken deterministically: step 1 with the
// smallest c and then the largest x, step 3 with the largest x.
Reduction uglov_reduce(const BetaConfig& start, int e, const MoveChooser& choose = {});

// Needs s in A_e^l and a valid window.
int uglov_weight(const Multipartition& mp, const Multicharge& s, int window, int e);

struct CoreResult {
  Multipartition core;
  Multicharge charges;  // terminal runner charges, not renormalised
  int weight = 0;
  bool operator==(const CoreResult&) const = default;
};

CoreResult core(const Multipartition& mp, const Multicharge& s, int window, int e);

struct ClassicalCore {
  Partition core;
  int weight = 0;
};

// Removes rim e-hooks, always the one through the topmost cell with hook e.
ClassicalCore ecore_classical(const Partition& p, int e);

// Hook multiset of the e-core is contained in that of p.
bool bgo_check(const Partition& p, int e);

// Block proxy: two multipartitions of equal rank share a proxy block iff
// their residue vectors agree.
inline ResidueVector proxy_block_key(const Multipartition& mp, const Multicharge& s, int e) {
  return residue_vector(mp, s, e);
}

}  // namespace akdefect
