#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <numeric>

#include "akdefect/abacus.hpp"
#include "akdefect/errors.hpp"
#include "akdefect/schur.hpp"
#include "oracles.hpp"

using namespace akdefect;

namespace {

bool good(const Multipartition& mp, const Multicharge& s) {
  return charged_hooks_direct(mp, s, false).values.count(0) == 0;
}

Multipartition restrict_to(const Multipartition& mp, const std::vector<int>& members) {
  std::vector<Partition> parts;
  for (int a : members) parts.push_back(mp[a]);
  return Multipartition(parts);
}

// Sum over Dipper-Mathas classes of the integer defect of the restricted
// multipartition.
int split_defect(const Multipartition& mp, const CycloSpec& spec) {
  SpecialisedParameters par = parameters_of(spec);
  int e = par.u.multiplicative_order();
  int total = 0;
  for (const auto& cls : dipper_mathas_classes(par.xi, par.u, mp.rank()))
    total += defect_integer(restrict_to(mp, cls), class_multicharge(cls, par.xi, par.u), e);
  return total;
}

}  // namespace

TEST_CASE("roots of unity") {
  RootOfUnity z(12, -8);
  CHECK(z.exponent() == 4);
  CHECK(z.multiplicative_order() == 3);
  CHECK(RootOfUnity(12, 0).multiplicative_order() == 1);
  CHECK(RootOfUnity(12, 0).is_one());
  CHECK(z.pow(3).is_one());
  CHECK(z * RootOfUnity(12, 8) == RootOfUnity(12, 0));
  CHECK_THROWS_AS(z * RootOfUnity(6, 1), InvalidArgument);
  CHECK_THROWS_AS(RootOfUnity(0, 1), InvalidArgument);
}

TEST_CASE("generic schur factors") {
  GenericSchurFactors one = schur_factors(parse_multipartition("1"));
  CHECK(one.sign == 1);
  CHECK(one.q_exponent == 0);
  CHECK(one.q_integers == std::vector<int>{1});
  CHECK(one.pairs.empty());
  CHECK(one.to_string() == "1");

  GenericSchurFactors two = schur_factors(parse_multipartition("1|0"));
  CHECK(two.sign == -1);
  CHECK(two.q_exponent == 0);
  CHECK(two.pairs == std::vector<PairFactor>{{0, 0, 1}});

  for (int l = 1; l <= 3; ++l)
    for (int n = 0; n <= 4; ++n)
      for (const auto& mp : enumerate_multipartitions(l, n)) {
        GenericSchurFactors f = schur_factors(mp);
        CHECK(f.q_integers.size() == static_cast<std::size_t>(n));
        CHECK(f.pairs.size() == static_cast<std::size_t>(n * (l - 1)));
        CHECK(f.sign == ((n * (l - 1)) % 2 ? -1 : 1));
        CHECK(f.q_exponent == -n_invariant(bar(mp)));
        std::vector<int> hooks;
        for (const auto& p : mp.components())
          for (int h : oracle::hooks(p)) hooks.push_back(h);
        std::sort(hooks.begin(), hooks.end());
        std::vector<int> got = f.q_integers;
        std::sort(got.begin(), got.end());
        CHECK(got == hooks);
        for (const auto& pf : f.pairs) CHECK(pf.a != pf.b);
        CHECK(GenericSchurFactors::from_json(f.to_json()) == f);
      }
}

TEST_CASE("integer specialisation") {
  CHECK(specialize_integer(parse_multipartition("1"), {0}) == LaurentPoly(1));
  CHECK(specialize_integer(parse_multipartition("1|0"), {0, 2}).to_string() == "1 - y^-2");
  CHECK_THROWS_AS(specialize_integer(parse_multipartition("1|0"), {0, 0}), BadSpecialisation);
}

TEST_CASE("integer defect: worked examples") {
  CHECK(defect_integer(parse_multipartition("3.1|2.1.1"), {0, 2}, 2) == 8);
  CHECK(defect_integer(parse_multipartition("2|1|1.1"), {0, 1, 2}, 3) == 1);
  CHECK(defect_integer(parse_multipartition("2|1|1.1"), {0, 1, 2}, 97) == 0);
}

TEST_CASE("integer defect against the expanded polynomial") {
  for (int e = 2; e <= 4; ++e)
    for (int l = 1; l <= 3; ++l)
      for (int n = 0; n <= (l == 3 ? 4 : 5); ++n)
        for (const auto& mp : enumerate_multipartitions(l, n))
          for (const auto& s : oracle::all_charges(l, 2 * e)) {
            if (!std::is_sorted(s.begin(), s.end())) continue;
            if (!good(mp, s)) {
              CHECK_THROWS_AS(specialize_integer(mp, s), BadSpecialisation);
              continue;
            }
            LaurentPoly p = specialize_integer(mp, s);
            CHECK(defect_integer(mp, s, e) == nu_phi(p, e));
            if (e == 2) {
              CHECK(defect_integer(mp, s, 1) == n * (l - 1));
              // degree bookkeeping
              int span = 0;
              GenericSchurFactors f = schur_factors(mp);
              for (int h : f.q_integers) span += h - 1;
              for (const auto& pf : f.pairs)
                span += std::abs(pf.hook + s[static_cast<std::size_t>(pf.a)] - s[static_cast<std::size_t>(pf.b)]);
              CHECK(p.span() == span);
            }
          }
}

TEST_CASE("choice of representatives mod e does not matter") {
  for (int e = 2; e <= 3; ++e)
    for (int l = 2; l <= 3; ++l)
      for (int n = 0; n <= 4; ++n)
        for (const auto& mp : enumerate_multipartitions(l, n))
          for (const auto& s : oracle::all_charges(l, e)) {
            Multicharge t = s;
            for (std::size_t i = 0; i < t.size(); ++i) t[i] += e * static_cast<int>(i % 2 ? -1 : 2);
            CHECK(defect_integer(mp, s, e) == defect_integer(mp, t, e));
          }
}

TEST_CASE("general defect: worked example") {
  CycloSpec spec;
  spec.level = 3;
  spec.charges = {0, 0, 1};
  spec.eta = RootOfUnity(12, 4);
  Multipartition mp = parse_multipartition("2|0|0");
  CHECK(defect_general(mp, spec) == 2);
  spec.eta = RootOfUnity(12, 8);
  CHECK(defect_general(mp, spec) == 0);
  spec.eta = RootOfUnity(10, 1);
  CHECK_THROWS_AS(defect_general(mp, spec), InvalidArgument);
  spec.eta = RootOfUnity(12, 4);
  spec.q_exponent = 0;
  CHECK_THROWS_AS(defect_general(mp, spec), InvalidArgument);
}

TEST_CASE("general defect: untwisted mode matches the integer defect") {
  for (int e = 2; e <= 4; ++e)
    for (int l = 1; l <= 3; ++l)
      for (int n = 0; n <= (l == 3 ? 4 : 5); ++n)
        for (const auto& mp : enumerate_multipartitions(l, n))
          for (const auto& s : oracle::sorted_charges(l, e)) {
            CycloSpec spec;
            spec.level = l;
            spec.charges = s;
            spec.eta = RootOfUnity(e, 1);
            spec.root_twist = false;
            if (!good(mp, s)) {
              CHECK_THROWS_AS(defect_general(mp, spec), BadSpecialisation);
              continue;
            }
            CHECK(defect_general(mp, spec) == defect_integer(mp, s, e));
          }
}

TEST_CASE("general defect splits over parameter classes") {
  int checked = 0;
  for (int N : {4, 6, 12})
    for (int t = 1; t < N; ++t)
      for (int l = 2; l <= 3; ++l) {
        if (N % l) continue;
        for (const auto& r : oracle::all_charges(l, 3))
          for (int n = 1; n <= 4; ++n) {
            CycloSpec spec;
            spec.level = l;
            spec.charges = r;
            spec.eta = RootOfUnity(N, t);
            SpecialisedParameters par = parameters_of(spec);
            if (par.u.multiplicative_order() < 2) continue;
            auto classes = dipper_mathas_classes(par.xi, par.u, n);
            if (classes.size() < 2) continue;
            for (const auto& mp : enumerate_multipartitions(l, n)) {
              CHECK(defect_general(mp, spec) == split_defect(mp, spec));
              ++checked;
            }
          }
      }
  CHECK(checked > 1000);
}

TEST_CASE("semisimple parameters give defect zero") {
  for (int N : {2, 4, 6, 8, 12})
    for (int t = 0; t < N; ++t)
      for (int l = 1; l <= 2; ++l) {
        if (N % l) continue;
        for (const auto& r : oracle::all_charges(l, 4)) {
          CycloSpec spec;
          spec.level = l;
          spec.charges = r;
          spec.eta = RootOfUnity(N, t);
          SpecialisedParameters par = parameters_of(spec);
          for (int n = 0; n <= 4; ++n) {
            if (!semisimple_check(par.xi, par.u, n)) continue;
            for (const auto& mp : enumerate_multipartitions(l, n)) CHECK(defect_general(mp, spec) == 0);
          }
        }
      }
}

TEST_CASE("semisimplicity predicate") {
  std::vector<RootOfUnity> xi{RootOfUnity(12, 0), RootOfUnity(12, 3)};
  CHECK(semisimple_check(xi, RootOfUnity(12, 1), 2));
  CHECK_FALSE(semisimple_check(xi, RootOfUnity(12, 4), 3));  // order 3 <= n
  std::vector<RootOfUnity> linked{RootOfUnity(12, 0), RootOfUnity(12, 1)};
  CHECK_FALSE(semisimple_check(linked, RootOfUnity(12, 1), 2));
  CHECK(semisimple_check(linked, RootOfUnity(12, 1), 1));
}

TEST_CASE("dipper-mathas classes") {
  std::vector<RootOfUnity> xi{RootOfUnity(12, 0), RootOfUnity(12, 3)};
  auto classes = dipper_mathas_classes(xi, RootOfUnity(12, 4), 3);
  CHECK(format_classes(classes) == "{{0},{1}}");
  std::vector<RootOfUnity> same(3, RootOfUnity(6, 2));
  CHECK(dipper_mathas_classes(same, RootOfUnity(6, 1), 1).size() == 1);
  std::vector<RootOfUnity> distinct{RootOfUnity(6, 0), RootOfUnity(6, 1), RootOfUnity(6, 2)};
  CHECK(dipper_mathas_classes(distinct, RootOfUnity(6, 0), 4).size() == 3);
  // chained through u: 0 ~ 1 ~ 2
  CHECK(format_classes(dipper_mathas_classes(distinct, RootOfUnity(6, 1), 2)) == "{{0,1,2}}");

  CHECK(class_multicharge(std::vector<int>{0}, distinct, RootOfUnity(6, 1)) == std::vector<int>{0});
  std::vector<RootOfUnity> pair{RootOfUnity(6, 0), RootOfUnity(6, 2)};
  RootOfUnity u(6, 1);
  std::vector<int> s = class_multicharge(std::vector<int>{0, 1}, pair, u);
  CHECK(s == std::vector<int>{0, 2});
  // any other valid choice is congruent mod e
  for (int alt = -12; alt <= 12; ++alt)
    if (pair[0] * u.pow(alt) == pair[1]) CHECK((alt - s[1]) % u.multiplicative_order() == 0);
}
