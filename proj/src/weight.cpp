#include "akdefect/weight.hpp"

#include <functional>
#include <set>
#include <sstream>

#include "akdefect/errors.hpp"

namespace akdefect {

int ResidueVector::total() const {
  int t = 0;
  for (int c : counts) t += c;
  return t;
}

std::string ResidueVector::to_string() const { return format_int_list(counts); }

namespace {

int mod(int a, int e) { return ((a % e) + e) % e; }

}  // namespace

ResidueVector residue_vector(const Multipartition& mp, const Multicharge& s, int e) {
  require(e >= 2, "e must be at least 2");
  require(static_cast<int>(s.size()) == mp.level(), "multicharge length must equal the level");
  ResidueVector out{e, std::vector<int>(static_cast<std::size_t>(e), 0)};
  for (const Node& x : mp.nodes())
    ++out.counts[static_cast<std::size_t>(mod(x.col - x.row + s[static_cast<std::size_t>(x.component)], e))];
  return out;
}

int fayers_weight(const Multipartition& mp, const Multicharge& s, int e) {
  const ResidueVector c = residue_vector(mp, s, e);
  auto at = [&](int i) { return c.counts[static_cast<std::size_t>(mod(i, e))]; };
  long twice = 0;
  for (int si : s) twice += 2L * at(si);
  for (int i = 0; i < e; ++i) {
    long d = at(i) - at(i - 1);
    twice -= d * d;
  }
  if (twice % 2 != 0 || twice < 0)
    throw InvariantViolation("residue formula produced a non-integral or negative weight");
  return static_cast<int>(twice / 2);
}

Reduction uglov_reduce(const BetaConfig& start, int e, const MoveChooser& choose) {
  require(e >= 2, "e must be at least 2");
  const int l = start.level();
  const int m = start.window();
  std::vector<std::set<int, std::greater<>>> runners;
  for (const auto& r : start.runners()) runners.emplace_back(r.begin(), r.end());
  auto bead = [&](int c, int x) { return x <= -m || runners[static_cast<std::size_t>(c)].count(x) > 0; };

  struct Move {
    int from;
    int to;
    int position;  // bead position on `from`
    int shift;     // new position = position - shift
  };

  int moves = 0;
  for (;;) {
    std::vector<Move> eligible;
    for (int c = 1; c < l && (choose || eligible.empty()); ++c)
      for (int x : runners[static_cast<std::size_t>(c - 1)])  // largest first
        if (!bead(c, x)) {
          eligible.push_back({c - 1, c, x, 0});
          if (!choose) break;
        }
    if (eligible.empty()) {
      for (int x : runners[static_cast<std::size_t>(l - 1)])
        if (x - e > -m && !bead(0, x - e)) {
          eligible.push_back({l - 1, 0, x, e});
          if (!choose) break;
        }
    }
    if (eligible.empty()) break;
    const Move mv = choose ? eligible.at(choose(eligible.size())) : eligible.front();
    runners[static_cast<std::size_t>(mv.from)].erase(mv.position);
    runners[static_cast<std::size_t>(mv.to)].insert(mv.position - mv.shift);
    ++moves;
  }

  std::vector<std::vector<int>> out;
  for (const auto& r : runners) out.emplace_back(r.begin(), r.end());
  return {BetaConfig(std::move(out), m), moves};
}

namespace {

BetaConfig checked_config(const Multipartition& mp, const Multicharge& s, int window, int e) {
  require(e >= 2, "e must be at least 2");
  require(static_cast<int>(s.size()) == mp.level(), "multicharge length must equal the level");
  require(in_fundamental_domain(s, e), "multicharge must lie in A_e^l");
  return multi_beta(mp, s, window);
}

}  // namespace

int uglov_weight(const Multipartition& mp, const Multicharge& s, int window, int e) {
  return uglov_reduce(checked_config(mp, s, window, e), e).moves;
}

CoreResult core(const Multipartition& mp, const Multicharge& s, int window, int e) {
  const Reduction r = uglov_reduce(checked_config(mp, s, window, e), e);
  return {r.terminal.multipartition(), r.terminal.charges(), r.moves};
}

ClassicalCore ecore_classical(const Partition& p, int e) {
  require(e >= 2, "e must be at least 2");
  std::vector<int> parts = p.parts();
  int removed = 0;
  for (;;) {
    const Partition current(parts);
    const Partition conj = conjugate(current);
    bool found = false;
    for (int i = 1; i <= current.length() && !found; ++i) {
      for (int j = 1; j <= current.part(i); ++j) {
        const int leg = conj.part(j) - i;
        if (current.part(i) - j + leg + 1 != e) continue;
        // rows i..i+leg-1 drop to lam_{r+1} - 1; row i+leg keeps j-1 cells
        for (int r = i; r < i + leg; ++r)
          parts[static_cast<std::size_t>(r - 1)] = current.part(r + 1) - 1;
        parts[static_cast<std::size_t>(i + leg - 1)] = j - 1;
        found = true;
        break;
      }
    }
    if (!found) break;
    ++removed;
  }
  return {Partition(parts), removed};
}

bool bgo_check(const Partition& p, int e) {
  return hooks_multiset(p).contains(hooks_multiset(ecore_classical(p, e).core));
}

}  // namespace akdefect
