#include "akdefect/partition.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <sstream>

#include "akdefect/errors.hpp"

namespace akdefect {

Partition::Partition(std::initializer_list<int> parts) : Partition(std::vector<int>(parts)) {}

Partition::Partition(std::vector<int> parts) : parts_(std::move(parts)) {
  while (!parts_.empty() && parts_.back() == 0) parts_.pop_back();
  for (std::size_t i = 0; i < parts_.size(); ++i) {
    require(parts_[i] > 0, "partition parts must be positive");
    require(i == 0 || parts_[i - 1] >= parts_[i], "partition parts must be weakly decreasing");
  }
  rank_ = std::accumulate(parts_.begin(), parts_.end(), 0);
}

Multipartition::Multipartition(std::vector<Partition> components)
    : components_(std::move(components)) {
  require(!components_.empty(), "a multipartition needs at least one component");
  for (const auto& p : components_) rank_ += p.rank();
}

Multipartition::Multipartition(std::initializer_list<Partition> components)
    : Multipartition(std::vector<Partition>(components)) {}

std::vector<Node> Multipartition::nodes() const {
  std::vector<Node> out;
  out.reserve(static_cast<std::size_t>(rank_));
  for (int a = 0; a < level(); ++a) {
    const auto& p = (*this)[a];
    for (int i = 1; i <= p.length(); ++i)
      for (int j = 1; j <= p.part(i); ++j) out.push_back({a, i, j});
  }
  return out;
}

Partition conjugate(const Partition& p) {
  std::vector<int> out(static_cast<std::size_t>(p.part(1)), 0);
  for (int part : p.parts())
    for (int k = 0; k < part; ++k) ++out[static_cast<std::size_t>(k)];
  return Partition(std::move(out));
}

int generalized_hook(const Partition& lam, const Partition& mu, int row, int col) {
  require(lam.contains_node(row, col), "node is not in the diagram");
  // mu'_col = number of rows of mu with at least col boxes
  int mu_col = 0;
  while (mu.part(mu_col + 1) >= col) ++mu_col;
  return lam.part(row) - row + mu_col - col + 1;
}

IntMultiset hooks_multiset(const Partition& p) {
  IntMultiset out;
  const Partition pc = conjugate(p);
  for (int i = 1; i <= p.length(); ++i)
    for (int j = 1; j <= p.part(i); ++j) out.insert(p.part(i) - i + pc.part(j) - j + 1);
  return out;
}

long n_invariant(const Partition& p) {
  long total = 0;
  for (int i = 1; i <= p.length(); ++i) total += static_cast<long>(i - 1) * p.part(i);
  return total;
}

Partition bar(const Multipartition& mp) {
  std::vector<int> all;
  for (const auto& p : mp.components()) all.insert(all.end(), p.parts().begin(), p.parts().end());
  std::sort(all.begin(), all.end(), std::greater<>());
  return Partition(std::move(all));
}

namespace {

void partitions_into(int n, int max_part, std::vector<int>& prefix, std::vector<Partition>& out) {
  if (n == 0) {
    out.emplace_back(prefix);
    return;
  }
  for (int k = std::min(n, max_part); k >= 1; --k) {
    prefix.push_back(k);
    partitions_into(n - k, k, prefix, out);
    prefix.pop_back();
  }
}

// Compositions of n into `level` nonnegative parts, decreasing lexicographic.
void rank_vectors(int n, int level, std::vector<int>& prefix, std::vector<std::vector<int>>& out) {
  if (static_cast<int>(prefix.size()) == level - 1) {
    prefix.push_back(n);
    out.push_back(prefix);
    prefix.pop_back();
    return;
  }
  for (int k = n; k >= 0; --k) {
    prefix.push_back(k);
    rank_vectors(n - k, level, prefix, out);
    prefix.pop_back();
  }
}

}  // namespace

std::vector<Partition> enumerate_partitions(int n) {
  require(n >= 0, "rank must be nonnegative");
  std::vector<Partition> out;
  std::vector<int> prefix;
  partitions_into(n, n, prefix, out);
  return out;
}

std::vector<Multipartition> enumerate_multipartitions(int level, int n) {
  require(level >= 1, "level must be at least 1");
  require(n >= 0, "rank must be nonnegative");
  std::vector<std::vector<Partition>> by_rank;
  for (int k = 0; k <= n; ++k) by_rank.push_back(enumerate_partitions(k));

  std::vector<std::vector<int>> ranks;
  std::vector<int> prefix;
  rank_vectors(n, level, prefix, ranks);

  std::vector<Multipartition> out;
  std::vector<Partition> current(static_cast<std::size_t>(level));
  for (const auto& rv : ranks) {
    std::function<void(int)> fill = [&](int a) {
      if (a == level) {
        out.emplace_back(current);
        return;
      }
      for (const auto& p : by_rank[static_cast<std::size_t>(rv[static_cast<std::size_t>(a)])]) {
        current[static_cast<std::size_t>(a)] = p;
        fill(a + 1);
      }
    };
    fill(0);
  }
  return out;
}

namespace {

int parse_int(const std::string& token, const char* what) {
  try {
    std::size_t used = 0;
    int value = std::stoi(token, &used);
    if (used != token.size()) throw ParseError(std::string("trailing characters in ") + what + ": '" + token + "'");
    return value;
  } catch (const std::logic_error&) {
    throw ParseError(std::string("expected an integer in ") + what + ", got '" + token + "'");
  }
}

std::vector<std::string> split(const std::string& text, char sep) {
  std::vector<std::string> out;
  std::string current;
  for (char c : text) {
    if (c == sep) {
      out.push_back(current);
      current.clear();
    } else {
      current += c;
    }
  }
  out.push_back(current);
  return out;
}

}  // namespace

Multipartition parse_multipartition(const std::string& text) {
  std::vector<Partition> comps;
  for (const auto& piece : split(text, '|')) {
    if (piece.empty()) throw ParseError("empty component in '" + text + "' (write 0 for the empty partition)");
    std::vector<int> parts;
    for (const auto& tok : split(piece, '.')) {
      int v = parse_int(tok, "multipartition");
      if (v < 0) throw ParseError("negative part in '" + text + "'");
      parts.push_back(v);
    }
    if (parts.size() > 1 && std::find(parts.begin(), parts.end(), 0) != parts.end())
      throw ParseError("zero parts are only allowed as the lone '0' component: '" + text + "'");
    if (!std::is_sorted(parts.begin(), parts.end(), std::greater<>()))
      throw ParseError("parts must be weakly decreasing in '" + text + "'");
    comps.emplace_back(std::move(parts));
  }
  return Multipartition(std::move(comps));
}

std::string format_partition(const Partition& p) {
  if (p.empty()) return "0";
  std::ostringstream os;
  for (int i = 1; i <= p.length(); ++i) {
    if (i > 1) os << '.';
    os << p.part(i);
  }
  return os.str();
}

std::string format_multipartition(const Multipartition& mp) {
  std::string out;
  for (int a = 0; a < mp.level(); ++a) {
    if (a > 0) out += '|';
    out += format_partition(mp[a]);
  }
  return out;
}

std::vector<int> parse_int_list(const std::string& text) {
  if (text.empty()) throw ParseError("empty integer list");
  std::vector<int> out;
  for (const auto& tok : split(text, ',')) out.push_back(parse_int(tok, "integer list"));
  return out;
}

std::string format_int_list(const std::vector<int>& values) {
  std::ostringstream os;
  for (std::size_t i = 0; i < values.size(); ++i) {
    if (i > 0) os << ',';
    os << values[i];
  }
  return os.str();
}

}  // namespace akdefect
