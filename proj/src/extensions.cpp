#include "akdefect/extensions.hpp"

#include "akdefect/errors.hpp"

namespace akdefect {

namespace {

int packages_of(const Multipartition& mp, int d) {
  require(d >= 1, "package size d must be positive");
  require(mp.level() % d == 0, "level is not divisible by the package size");
  return mp.level() / d;
}

}  // namespace

Multipartition sigma(const Multipartition& mp, int d) {
  const int l = mp.level();
  packages_of(mp, d);
  std::vector<Partition> out(static_cast<std::size_t>(l));
  for (int i = 0; i < l; ++i) out[static_cast<std::size_t>((i + d) % l)] = mp[i];
  return Multipartition(std::move(out));
}

SigmaOrbit orbit(const Multipartition& mp, int d, int p) {
  require(p >= 1, "p must be positive");
  require(mp.level() == p * d, "level must equal p*d");
  int size = 1;
  for (Multipartition cur = sigma(mp, d); cur != mp; cur = sigma(cur, d)) ++size;
  return {mp, size, p / size};
}

bool is_periodic(const std::vector<int>& charges, int d) {
  if (d < 1 || charges.size() % static_cast<std::size_t>(d) != 0) return false;
  for (std::size_t i = static_cast<std::size_t>(d); i < charges.size(); ++i)
    if (charges[i] != charges[i - static_cast<std::size_t>(d)]) return false;
  return true;
}

int glpn_defect(const Multipartition& mp, int d, int p, const CycloSpec& spec) {
  require(mp.level() == p * d, "level must equal p*d");
  require(is_periodic(spec.charges, d), "charges r_i must repeat with period d");
  return defect_general(mp, spec);
}

bool sigma_schur_invariance(const Multipartition& mp, int d, int p, const Multicharge& s) {
  require(mp.level() == p * d, "level must equal p*d");
  require(is_periodic(s, d), "multicharge must repeat with period d");
  return specialize_integer(mp, s) == specialize_integer(sigma(mp, d), s);
}

Multipartition package(const Multipartition& mp, int l, int i) {
  require(l >= 1 && mp.level() % l == 0, "level must be a multiple of l");
  require(i >= 0 && i < mp.level() / l, "package index out of range");
  std::vector<Partition> comps(mp.components().begin() + i * l, mp.components().begin() + (i + 1) * l);
  return Multipartition(std::move(comps));
}

int yokonuma_defect(const Multipartition& mp, int d, int l, const Multicharge& s, int e) {
  require(mp.level() == d * l, "level must equal d*l");
  require(static_cast<int>(s.size()) == l, "multicharge length must equal l");
  int total = 0;
  for (int i = 0; i < d; ++i) total += defect_integer(package(mp, l, i), s, e);
  return total;
}

std::vector<PackageKey> yokonuma_block_key(const Multipartition& mp, int d, int l,
                                           const Multicharge& s, int e) {
  require(mp.level() == d * l, "level must equal d*l");
  require(static_cast<int>(s.size()) == l, "multicharge length must equal l");
  std::vector<PackageKey> out;
  for (int i = 0; i < d; ++i) {
    const Multipartition pkg = package(mp, l, i);
    out.push_back({pkg.rank(), residue_vector(pkg, s, e)});
  }
  return out;
}

}  // namespace akdefect
