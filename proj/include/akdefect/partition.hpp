#pragma once

#include <compare>
#include <cstddef>
#include <initializer_list>
#include <string>
#include <vector>

#include "akdefect/multiset.hpp"

namespace akdefect {

// A weakly decreasing list of positive parts. Trailing zeros are never
// stored; part(i) reads 0 beyond the stored length.
class Partition {
 public:
  Partition() = default;
  Partition(std::initializer_list<int> parts);
  // Accepts trailing zeros (they are dropped); rejects negative or
  // increasing entries.
  explicit Partition(std::vector<int> parts);

  const std::vector<int>& parts() const { return parts_; }
  // Number of nonzero parts.
  int length() const { return static_cast<int>(parts_.size()); }
  int rank() const { return rank_; }
  bool empty() const { return parts_.empty(); }

  // 1-based row access; 0 for rows past the end.
  int part(int row) const {
    return row >= 1 && row <= length() ? parts_[static_cast<std::size_t>(row - 1)] : 0;
  }

  bool contains_node(int row, int col) const { return col >= 1 && col <= part(row); }

  auto operator<=>(const Partition& other) const { return parts_ <=> other.parts_; }
  bool operator==(const Partition& other) const { return parts_ == other.parts_; }

 private:
  std::vector<int> parts_;
  int rank_ = 0;
};

// Components are indexed from 0, rows and columns from 1.
struct Node {
  int component = 0;
  int row = 1;
  int col = 1;
};

class Multipartition {
 public:
  Multipartition() = default;
  explicit Multipartition(std::vector<Partition> components);
  Multipartition(std::initializer_list<Partition> components);

  int level() const { return static_cast<int>(components_.size()); }
  int rank() const { return rank_; }
  const Partition& operator[](int a) const { return components_[static_cast<std::size_t>(a)]; }
  const std::vector<Partition>& components() const { return components_; }

  // All nodes, component by component, row by row.
  std::vector<Node> nodes() const;

  auto operator<=>(const Multipartition& other) const {
    return components_ <=> other.components_;
  }
  bool operator==(const Multipartition& other) const { return components_ == other.components_; }

 private:
  std::vector<Partition> components_;
  int rank_ = 0;
};

using Multicharge = std::vector<int>;

Partition conjugate(const Partition& p);

// lam_i - i + mu'_j - j + 1 for the node (i, j) of lam.
int generalized_hook(const Partition& lam, const Partition& mu, int row, int col);

// Classical hook lengths, one per node.
IntMultiset hooks_multiset(const Partition& p);

// sum (i-1) lam_i
long n_invariant(const Partition& p);

// All parts of all components, sorted weakly decreasing.
Partition bar(const Multipartition& mp);

// (col - row) + s + 1
inline int charged_content(const Node& node, int s) { return node.col - node.row + s + 1; }

// Partitions of n in decreasing lexicographic order: (n), (n-1,1), ..., (1^n).
std::vector<Partition> enumerate_partitions(int n);

// Every l-multipartition of rank n exactly once. Ordered first by the vector
// of component ranks, decreasing lexicographically ((n,0,..) first), then by
// the parts of each component in decreasing lexicographic order.
std::vector<Multipartition> enumerate_multipartitions(int level, int n);

// Text grammar: components separated by '|', parts by '.', '0' for the empty
// partition. "3.1|2.1.1" is ((3,1),(2,1,1)).
Multipartition parse_multipartition(const std::string& text);
std::string format_multipartition(const Multipartition& mp);
std::string format_partition(const Partition& p);

// Comma separated integers, e.g. "0,-2,5".
std::vector<int> parse_int_list(const std::string& text);
std::string format_int_list(const std::vector<int>& values);

}  // namespace akdefect
