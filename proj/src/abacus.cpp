#include "akdefect/abacus.hpp"

#include <algorithm>
#include <cstdlib>
#include <functional>
#include <iomanip>
#include <numeric>
#include <sstream>

#include "akdefect/errors.hpp"

namespace akdefect {

BetaConfig::BetaConfig(std::vector<std::vector<int>> runners, int window)
    : runners_(std::move(runners)), window_(window) {
  require(window_ >= 1, "abacus window must be positive");
  require(!runners_.empty(), "abacus needs at least one runner");
  for (const auto& r : runners_) {
    require(!r.empty() && r.back() == 1 - window_, "every runner must end at position 1-m");
    for (std::size_t i = 1; i < r.size(); ++i)
      require(r[i - 1] > r[i], "bead positions must be strictly decreasing");
  }
}

Multicharge BetaConfig::charges() const {
  Multicharge out;
  for (const auto& r : runners_) out.push_back(static_cast<int>(r.size()) - window_);
  return out;
}

bool BetaConfig::has_bead(int c, int position) const {
  if (position <= -window_) return true;
  const auto& r = runner(c);
  return std::binary_search(r.begin(), r.end(), position, std::greater<>());
}

int BetaConfig::gaps_left_of(int c, int position) const {
  if (position <= 1 - window_) return 0;
  // positions 1-m .. position-1, minus the beads among them
  int span = position - (1 - window_);
  int beads = 0;
  for (int x : runner(c))
    if (x < position) ++beads;
  return span - beads;
}

std::vector<int> BetaConfig::first_gaps(int c, int count) const {
  std::vector<int> out;
  for (int y = 2 - window_; static_cast<int>(out.size()) < count; ++y)
    if (!has_bead(c, y)) out.push_back(y);
  return out;
}

int BetaConfig::max_bead() const {
  int best = 1 - window_;
  for (const auto& r : runners_) best = std::max(best, r.front());
  return best;
}

Multipartition BetaConfig::multipartition() const {
  std::vector<Partition> comps;
  for (const auto& r : runners_) comps.push_back(partition_from_beta(r, window_).partition);
  return Multipartition(std::move(comps));
}

std::vector<int> beta_numbers(const Partition& p, int charge, int window) {
  require(window >= 1, "window m must be positive");
  require(window + charge > p.length(),
          "window too small: need lambda_{m+s} = 0 (m + s > number of parts)");
  std::vector<int> out;
  for (int j = 1; j <= window + charge; ++j) out.push_back(p.part(j) - j + charge + 1);
  return out;
}

BetaConfig multi_beta(const Multipartition& mp, const Multicharge& s, int window) {
  require(static_cast<int>(s.size()) == mp.level(), "multicharge length must equal the level");
  std::vector<std::vector<int>> runners;
  for (int c = 0; c < mp.level(); ++c)
    runners.push_back(beta_numbers(mp[c], s[static_cast<std::size_t>(c)], window));
  return BetaConfig(std::move(runners), window);
}

ChargedPartition partition_from_beta(std::span<const int> betas, int window) {
  require(window >= 1, "window m must be positive");
  require(!betas.empty() && betas.back() == 1 - window, "malformed beta tuple: last entry must be 1-m");
  for (std::size_t i = 1; i < betas.size(); ++i)
    require(betas[i - 1] > betas[i], "malformed beta tuple: entries must strictly decrease");
  const int charge = static_cast<int>(betas.size()) - window;
  std::vector<int> parts;
  for (std::size_t j = 1; j <= betas.size(); ++j)
    parts.push_back(betas[j - 1] + static_cast<int>(j) - charge - 1);
  return {Partition(std::move(parts)), charge};
}

ChargedHookMultiset charged_hooks_direct(const Multipartition& mp, const Multicharge& s,
                                         bool include_diagonal) {
  require(static_cast<int>(s.size()) == mp.level(), "multicharge length must equal the level");
  ChargedHookMultiset out{{}, include_diagonal};
  for (const Node& x : mp.nodes()) {
    for (int b = 0; b < mp.level(); ++b) {
      if (b == x.component && !include_diagonal) continue;
      out.values.insert(generalized_hook(mp[x.component], mp[b], x.row, x.col) +
                        s[static_cast<std::size_t>(x.component)] - s[static_cast<std::size_t>(b)]);
    }
  }
  return out;
}

namespace {

void add_bead_hooks(const BetaConfig& cfg, int c, int bead, bool include_diagonal, IntMultiset& out) {
  const int delta = cfg.gaps_left_of(c, bead);
  if (delta == 0) return;
  for (int b = 0; b < cfg.level(); ++b) {
    if (b == c && !include_diagonal) continue;
    for (int y : cfg.first_gaps(b, delta)) out.insert(bead - y);
  }
}

void require_bead(const BetaConfig& cfg, int c, int bead) {
  require(c >= 0 && c < cfg.level(), "runner index out of range");
  const auto& r = cfg.runner(c);
  require(std::binary_search(r.begin(), r.end(), bead, std::greater<>()),
          "position " + std::to_string(bead) + " is not a bead of runner " + std::to_string(c));
}

}  // namespace

ChargedHookMultiset charged_hooks_abacus(const BetaConfig& cfg, bool include_diagonal) {
  ChargedHookMultiset out{{}, include_diagonal};
  for (int c = 0; c < cfg.level(); ++c)
    for (int x : cfg.runner(c)) add_bead_hooks(cfg, c, x, include_diagonal, out.values);
  return out;
}

IntMultiset bead_hooks(const BetaConfig& cfg, int c, int bead) {
  require_bead(cfg, c, bead);
  IntMultiset out;
  add_bead_hooks(cfg, c, bead, true, out);
  return out;
}

bool zero_membership(const BetaConfig& cfg, int c1, int c2, int bead) {
  require_bead(cfg, c1, bead);
  require(c2 >= 0 && c2 < cfg.level(), "runner index out of range");
  if (cfg.has_bead(c2, bead)) return false;
  auto below = [&](int c) {
    const auto& r = cfg.runner(c);
    return std::count_if(r.begin(), r.end(), [&](int y) { return y < bead; });
  };
  return below(c1) < below(c2);
}

int n_k(const BetaConfig& cfg, int c, int bead, int k, int e) {
  require_bead(cfg, c, bead);
  require(k >= 0, "k must be nonnegative");
  int total = 0;
  if (k == 0) {
    for (int t = c + 1; t < cfg.level(); ++t)
      if (!cfg.has_bead(t, bead)) ++total;
    return total;
  }
  require(e >= 2, "e must be at least 2");
  const int target = bead - k * e;
  if (target <= -cfg.window()) return 0;
  for (int t = 0; t < cfg.level(); ++t)
    if (!cfg.has_bead(t, target)) ++total;
  return total;
}

int count_zero_hooks(const BetaConfig& cfg) {
  const auto s = cfg.charges();
  require(std::is_sorted(s.begin(), s.end()), "count_zero_hooks needs a weakly increasing multicharge");
  int total = 0;
  for (int c = 0; c < cfg.level(); ++c)
    for (int x : cfg.runner(c)) total += n_k(cfg, c, x, 0, 0);
  return total;
}

int count_divisible_hooks(const BetaConfig& cfg, int e) {
  require(e >= 2, "e must be at least 2");
  require(in_fundamental_domain(cfg.charges(), e), "multicharge must lie in A_e^l");
  int total = 0;
  for (int c = 0; c < cfg.level(); ++c) {
    for (int x : cfg.runner(c)) {
      total += n_k(cfg, c, x, 0, e);
      // once x - ke < 1 - m every later term vanishes
      for (int k = 1; x - k * e >= 1 - cfg.window(); ++k) total += n_k(cfg, c, x, k, e);
    }
  }
  return total;
}

bool in_fundamental_domain(const Multicharge& s, int e) {
  if (s.empty()) return false;
  return std::is_sorted(s.begin(), s.end()) && s.back() <= s.front() + e;
}

NormalizedCharge normalize_multicharge(const Multicharge& s, int e) {
  require(e >= 2, "e must be at least 2");
  std::vector<int> reduced;
  for (int v : s) reduced.push_back(((v % e) + e) % e);
  std::vector<int> order(s.size());
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(), [&](int a, int b) {
    return reduced[static_cast<std::size_t>(a)] < reduced[static_cast<std::size_t>(b)];
  });
  NormalizedCharge out;
  out.permutation.assign(s.size(), 0);
  for (std::size_t pos = 0; pos < order.size(); ++pos) {
    out.charges.push_back(reduced[static_cast<std::size_t>(order[pos])]);
    out.permutation[static_cast<std::size_t>(order[pos])] = static_cast<int>(pos);
  }
  return out;
}

Multipartition permute_components(const Multipartition& mp, const std::vector<int>& permutation) {
  require(static_cast<int>(permutation.size()) == mp.level(), "permutation length must equal the level");
  std::vector<Partition> comps(permutation.size());
  std::vector<bool> seen(permutation.size(), false);
  for (int a = 0; a < mp.level(); ++a) {
    int target = permutation[static_cast<std::size_t>(a)];
    require(target >= 0 && target < mp.level() && !seen[static_cast<std::size_t>(target)],
            "not a permutation");
    seen[static_cast<std::size_t>(target)] = true;
    comps[static_cast<std::size_t>(target)] = mp[a];
  }
  return Multipartition(std::move(comps));
}

int default_window(const Multipartition& mp, const Multicharge& s) {
  int longest = 0;
  for (const auto& p : mp.components()) longest = std::max(longest, p.length());
  int widest = 0;
  for (int v : s) widest = std::max(widest, std::abs(v));
  return longest + widest + 1;
}

std::string render_abacus(const BetaConfig& cfg) {
  const int lo = -cfg.window() - 1;
  const int hi = std::max(cfg.max_bead(), 0) + 2;
  std::ostringstream os;
  auto row = [&](auto&& cell, const std::string& head) {
    os << head;
    for (int x = lo; x <= hi; ++x) {
      if (x == 0) os << " |";
      os << std::setw(4) << cell(x);
    }
    os << '\n';
  };
  for (int c = cfg.level() - 1; c >= 0; --c) {
    std::ostringstream head;
    head << std::setw(4) << c << ':';
    row([&](int x) { return cfg.has_bead(c, x) ? "#" : "."; }, head.str());
  }
  row([](int x) { return std::to_string(x); }, "     ");
  return os.str();
}

}  // namespace akdefect
