#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "akdefect/abacus.hpp"
#include "akdefect/errors.hpp"
#include "akdefect/weight.hpp"
#include "oracles.hpp"

using namespace akdefect;

TEST_CASE("residue vector") {
  Multipartition mp = parse_multipartition("2.1.1|2.1.1");
  ResidueVector r = residue_vector(mp, {0, 2}, 3);
  CHECK(r.counts == std::vector<int>{3, 3, 2});
  CHECK(r.total() == 8);
  CHECK(r.to_string() == "3,3,2");
  CHECK(residue_vector(parse_multipartition("0|0"), {0, 0}, 2).counts == std::vector<int>{0, 0});
}

TEST_CASE("fayers weight") {
  Multipartition mp = parse_multipartition("2.1.1|2.1.1");
  CHECK(fayers_weight(mp, {0, 2}, 3) == 4);
  CHECK(fayers_weight(parse_multipartition("2|0"), {0, 2}, 3) == 0);
  CHECK(fayers_weight(parse_multipartition("3.1|2.1.1"), {0, 2}, 2) == 8);
  // classical: weight = number of e-hooks removed
  for (int n = 0; n <= 9; ++n)
    for (const Partition& p : enumerate_partitions(n))
      for (int e = 2; e <= 4; ++e) {
        int w = 0;
        oracle::slide_core(p, e, &w);
        CHECK(fayers_weight(Multipartition{p}, {0}, e) == w);
      }
}

TEST_CASE("bead recursion: worked example") {
  Multipartition mp = parse_multipartition("2.1.1|2.1.1");
  CHECK_THROWS_AS(uglov_weight(mp, {0, 2}, 3, 3), InvalidArgument);
  CHECK(uglov_weight(mp, {0, 2}, 4, 3) == 4);
  CoreResult c = core(mp, {0, 2}, 4, 3);
  CHECK(format_multipartition(c.core) == "2|0");
  CHECK(c.charges == Multicharge{0, 2});
  CHECK(c.weight == 4);
  CHECK_THROWS_AS(uglov_weight(mp, {2, 0}, 6, 3), InvalidArgument);
}

TEST_CASE("bead recursion agrees with the weight formula, any move order, any window") {
  std::mt19937 rng(20241016);
  for (int e = 2; e <= 4; ++e)
    for (int l = 1; l <= 3; ++l)
      for (int n = 0; n <= 4; ++n)
        for (const auto& mp : enumerate_multipartitions(l, n))
          for (const auto& s : oracle::sorted_charges(l, e)) {
            int w = fayers_weight(mp, s, e);
            int m = default_window(mp, s);
            BetaConfig start = multi_beta(mp, s, m);
            Reduction det = uglov_reduce(start, e);
            CHECK(det.moves == w);
            CHECK(uglov_weight(mp, s, m + 3, e) == w);
            CHECK(core(mp, s, m + 3, e).core == core(mp, s, m, e).core);
            for (int trial = 0; trial < 20; ++trial) {
              Reduction r = uglov_reduce(start, e, [&](std::size_t k) {
                return std::uniform_int_distribution<std::size_t>(0, k - 1)(rng);
              });
              CHECK(r.moves == w);
            }
          }
}

TEST_CASE("cores have weight zero and nothing divisible") {
  for (int e = 2; e <= 3; ++e)
    for (int l = 1; l <= 2; ++l)
      for (int n = 0; n <= 5; ++n)
        for (const auto& mp : enumerate_multipartitions(l, n))
          for (const auto& s : oracle::sorted_charges(l, e)) {
            CoreResult c = core(mp, s, default_window(mp, s), e);
            CHECK(c.weight == fayers_weight(mp, s, e));
            int before = 0, after = 0;
            for (int x : s) before += x;
            for (int x : c.charges) after += x;
            CHECK(before == after);
            CHECK(fayers_weight(c.core, c.charges, e) == 0);
            int m = default_window(c.core, c.charges);
            CHECK(charged_hooks_abacus(multi_beta(c.core, c.charges, m), true).values.count_divisible(e) == 0);
            CHECK(c.core.rank() <= mp.rank());
          }
}

TEST_CASE("classical cores") {
  ClassicalCore c = ecore_classical(Partition{3, 1}, 2);
  CHECK(c.core == Partition{});
  CHECK(c.weight == 2);
  CHECK(ecore_classical(Partition{2, 1}, 2).core == Partition{2, 1});
  CHECK(ecore_classical(Partition{5, 4, 2, 1, 1}, 3).core == oracle::slide_core(Partition{5, 4, 2, 1, 1}, 3));
  for (int n = 0; n <= 10; ++n)
    for (const Partition& p : enumerate_partitions(n))
      for (int e = 2; e <= 5; ++e) {
        ClassicalCore cc = ecore_classical(p, e);
        int w = 0;
        CHECK(cc.core == oracle::slide_core(p, e, &w));
        CHECK(cc.weight == w);
        CHECK(bgo_check(p, e));
      }
}

TEST_CASE("bgo fails for the two-component example") {
  Multipartition lam = parse_multipartition("2.1.1|2.1.1");
  Multicharge s{0, 2};
  CoreResult c = core(lam, s, 4, 3);
  auto hl = charged_hooks_direct(lam, s, true).values;
  auto hm = charged_hooks_direct(c.core, c.charges, true).values;
  CHECK(hl == IntMultiset{-1, -1, 0, 1, 1, 1, 1, 2, 2, 2, 3, 3, 4, 4, 4, 6});
  CHECK(hm == IntMultiset{-2, -1, 1, 2});
  CHECK_FALSE(hl.contains(hm));
  CHECK(hm.count(-2) == 1);
  CHECK(hl.count(-2) == 0);
}

TEST_CASE("proxy key equals residue vector") {
  Multipartition mp = parse_multipartition("3|1");
  CHECK(proxy_block_key(mp, {0, 1}, 2) == residue_vector(mp, {0, 1}, 2));
}
