#pragma once

#include <span>
#include <string>
#include <vector>

#include "akdefect/laurent.hpp"
#include "akdefect/partition.hpp"

namespace akdefect {

// zeta_N^t with 0 <= t < N.
class RootOfUnity {
 public:
  RootOfUnity(int order, long exponent);

  int order() const { return order_; }
  int exponent() const { return exponent_; }
  // N / gcd(N, t)
  int multiplicative_order() const;
  bool is_one() const { return exponent_ == 0; }

  RootOfUnity pow(long k) const;
  // Both factors must live in the same ambient group.
  RootOfUnity operator*(const RootOfUnity& other) const;
  bool operator==(const RootOfUnity& other) const = default;

 private:
  int order_;
  int exponent_;
};

// q^h Q_a Q_b^{-1} - 1
struct PairFactor {
  int hook = 0;
  int a = 0;
  int b = 0;
  bool operator==(const PairFactor&) const = default;
};

// Cancellation-free Schur element of the generic Ariki-Koike algebra:
//   sign * q^{q_exponent} * prod [h]_q * prod (q^h Q_a/Q_b - 1).
struct GenericSchurFactors {
  int sign = 1;
  long q_exponent = 0;
  std::vector<int> q_integers;
  std::vector<PairFactor> pairs;

  // {"sign", "q_exp", "qints": [...], "pairs": [[h,a,b], ...]}
  std::string to_json() const;
  static GenericSchurFactors from_json(const std::string& text);
  // Product notation with trivial factors dropped; "1" for the empty product.
  std::string to_string() const;
  bool operator==(const GenericSchurFactors&) const = default;
};

GenericSchurFactors schur_factors(const Multipartition& mp);

// Q_i -> y^{s_i}, q -> y, fully expanded. Throws BadSpecialisation when some
// charged hook h + s_a - s_b (a != b) is zero.
LaurentPoly specialize_integer(const Multipartition& mp, const Multicharge& s);

// e >= 2: number of q-integer hooks divisible by e plus pair factors with
// e | h + s_a - s_b (zero counts as divisible).
// e == 1: number of pair factors with h + s_a - s_b != 0.
int defect_integer(const Multipartition& mp, const Multicharge& s, int e);

// Cyclotomic specialisation Q_i -> eta_l^i y^{r_i}, q -> y^r, followed by
// y -> eta. With root_twist off, Q_i -> y^{r_i} (no eta_l factor) and l need
// not divide N.
struct CycloSpec {
  int level = 1;
  std::vector<int> charges;
  int q_exponent = 1;
  RootOfUnity eta{1, 0};
  bool root_twist = true;

  void validate() const;
};

struct SpecialisedParameters {
  std::vector<RootOfUnity> xi;
  RootOfUnity u{1, 0};
};

// xi_i = eta_l^i eta^{r_i}, u = eta^r, all in Z/NZ.
SpecialisedParameters parameters_of(const CycloSpec& spec);

// nu_Phi of the specialised Schur element, Phi the minimal polynomial of eta
// over Q(eta_l). Computed factor by factor without expansion.
int defect_general(const Multipartition& mp, const CycloSpec& spec);

bool semisimple_check(std::span<const RootOfUnity> xi, const RootOfUnity& u, int n);

// Connected components of a ~ b iff u^h xi_a = xi_b for some -n < h < n.
// Classes are sorted, ordered by their smallest member.
std::vector<std::vector<int>> dipper_mathas_classes(std::span<const RootOfUnity> xi,
                                                    const RootOfUnity& u, int n);

// s_j in [0, e) with xi_{a_j} / xi_{a_1} = u^{s_j}; e = order of u.
std::vector<int> class_multicharge(std::span<const int> members, std::span<const RootOfUnity> xi,
                                   const RootOfUnity& u);

std::string format_classes(const std::vector<std::vector<int>>& classes);

}  // namespace akdefect
