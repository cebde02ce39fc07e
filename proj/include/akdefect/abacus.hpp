#pragma once

#include <span>
#include <string>
#include <utility>
#include <vector>

#include "akdefect/multiset.hpp"
#include "akdefect/partition.hpp"

namespace akdefect {

// An l-abacus cut at a window m: runner c holds the bead positions >= 1-m,
// strictly decreasing, always ending in 1-m. Positions <= -m are beads on
// every runner. The charge of runner c is (number of stored beads) - m.
class BetaConfig {
 public:
  BetaConfig(std::vector<std::vector<int>> runners, int window);

  int level() const { return static_cast<int>(runners_.size()); }
  int window() const { return window_; }
  const std::vector<int>& runner(int c) const { return runners_[static_cast<std::size_t>(c)]; }
  const std::vector<std::vector<int>>& runners() const { return runners_; }
  Multicharge charges() const;

  bool has_bead(int c, int position) const;
  // Empty positions strictly left of `position` on runner c.
  int gaps_left_of(int c, int position) const;
  // The first `count` empty positions of runner c, left to right.
  std::vector<int> first_gaps(int c, int count) const;
  int max_bead() const;

  // Reads every runner back into (partition, charge).
  Multipartition multipartition() const;

  bool operator==(const BetaConfig& other) const = default;

 private:
  std::vector<std::vector<int>> runners_;
  int window_;
};

struct ChargedHookMultiset {
  IntMultiset values;
  bool diagonal_included = true;
  bool operator==(const ChargedHookMultiset& other) const = default;
};

// (lam_1 - 1 + s + 1, ..., lam_{m+s} - (m+s) + s + 1). Requires m >= 1 and
// lam_{m+s} = 0, so the last entry is 1-m.
std::vector<int> beta_numbers(const Partition& p, int charge, int window);

BetaConfig multi_beta(const Multipartition& mp, const Multicharge& s, int window);

struct ChargedPartition {
  Partition partition;
  int charge = 0;
};

// Inverse of beta_numbers.
ChargedPartition partition_from_beta(std::span<const int> betas, int window);

// Brute force over ordered component pairs and nodes: h^{a,b}_{c,d} + s_a - s_b.
ChargedHookMultiset charged_hooks_direct(const Multipartition& mp, const Multicharge& s,
                                         bool include_diagonal);

// Bead/gap procedure: each bead x with delta(x) gaps to its left contributes
// x - y^b_d for the first delta(x) gaps y^b_d of each runner b.
ChargedHookMultiset charged_hooks_abacus(const BetaConfig& cfg, bool include_diagonal);

// H(x) for a single bead x of runner c (all runners b).
IntMultiset bead_hooks(const BetaConfig& cfg, int c, int bead);

// 0 is in H^{c2}(x) iff x is not a bead of c2 and c1 has fewer beads below x
// than c2.
bool zero_membership(const BetaConfig& cfg, int c1, int c2, int bead);

int n_k(const BetaConfig& cfg, int c, int bead, int k, int e);

// Multiplicity of 0 in H; needs weakly increasing charges.
int count_zero_hooks(const BetaConfig& cfg);

// Number of charged hooks divisible by e (diagonal included); needs the
// charges in A_e^l: s_0 <= ... <= s_{l-1} <= s_0 + e.
int count_divisible_hooks(const BetaConfig& cfg, int e);

bool in_fundamental_domain(const Multicharge& s, int e);

struct NormalizedCharge {
  Multicharge charges;
  // permutation[old component] = new component
  std::vector<int> permutation;
};

// Reduce every charge into [0, e) and sort (stable), landing in A_e^l.
NormalizedCharge normalize_multicharge(const Multicharge& s, int e);

// Component old -> permutation[old].
Multipartition permute_components(const Multipartition& mp, const std::vector<int>& permutation);

// Smallest-effort valid window: longest component + max |s_i| + 1.
int default_window(const Multipartition& mp, const Multicharge& s);

// One row per runner, runner l-1 on top; '#' bead, '.' gap, a '|' between
// positions -1 and 0, and a label row underneath.
std::string render_abacus(const BetaConfig& cfg);

}  // namespace akdefect
