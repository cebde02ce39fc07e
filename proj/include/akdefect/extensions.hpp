#pragma once

#include <vector>

#include "akdefect/partition.hpp"
#include "akdefect/schur.hpp"
#include "akdefect/weight.hpp"

namespace akdefect {

// Cyclic right shift by one d-package: (l^{pd-d..pd-1}, l^{0..d-1}, ...).
Multipartition sigma(const Multipartition& mp, int d);

struct SigmaOrbit {
  Multipartition representative;
  int orbit_size = 1;
  int stabilizer_order = 1;  // p / orbit_size
};

SigmaOrbit orbit(const Multipartition& mp, int d, int p);

// Charges must repeat with period d: r_{kd+j} = r_j.
bool is_periodic(const std::vector<int>& charges, int d);

// Defect of the G(l,p,n) irreducibles lying under V^mp. The Clifford
// constant |orbit|/p has valuation 0, so this is defect_general.
int glpn_defect(const Multipartition& mp, int d, int p, const CycloSpec& spec);

// specialize_integer(mp, s) == specialize_integer(sigma(mp), s) for
// d-periodic s. Throws BadSpecialisation when either side is bad.
bool sigma_schur_invariance(const Multipartition& mp, int d, int p, const Multicharge& s);

// The i-th l-package (components il .. il+l-1), 0-based.
Multipartition package(const Multipartition& mp, int l, int i);

// Sum of defect_integer over the d packages, each with the same charge s.
int yokonuma_defect(const Multipartition& mp, int d, int l, const Multicharge& s, int e);

struct PackageKey {
  int rank = 0;
  ResidueVector residues;
  auto operator<=>(const PackageKey&) const = default;
};

std::vector<PackageKey> yokonuma_block_key(const Multipartition& mp, int d, int l,
                                           const Multicharge& s, int e);

}  // namespace akdefect
