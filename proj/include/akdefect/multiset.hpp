#pragma once

#include <cstddef>
#include <initializer_list>
#include <map>
#include <string>
#include <vector>

namespace akdefect {

// Finite multiset of integers stored as value -> multiplicity, ordered by
// value. Multiplicities are always positive.
class IntMultiset {
 public:
  IntMultiset() = default;
  IntMultiset(std::initializer_list<int> values);
  explicit IntMultiset(const std::vector<int>& values);

  void insert(int value, int times = 1);
  void merge(const IntMultiset& other);

  int count(int value) const;
  std::size_t size() const { return size_; }
  bool empty() const { return size_ == 0; }

  // Number of elements h with h = 0 mod e (e >= 1).
  int count_divisible(int e) const;

  // True when every value occurs here at least as often as in `other`.
  bool contains(const IntMultiset& other) const;

  // Sorted expansion, smallest first.
  std::vector<int> values() const;
  const std::map<int, int>& table() const { return counts_; }

  // "-2^1 0^2 1^4"; the empty multiset is the empty string.
  std::string to_string() const;
  static IntMultiset parse(const std::string& text);

  bool operator==(const IntMultiset& other) const = default;

 private:
  std::map<int, int> counts_;
  std::size_t size_ = 0;
};

}  // namespace akdefect
