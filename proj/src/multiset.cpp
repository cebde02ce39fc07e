#include "akdefect/multiset.hpp"

#include <sstream>

#include "akdefect/errors.hpp"

namespace akdefect {

IntMultiset::IntMultiset(std::initializer_list<int> values) {
  for (int v : values) insert(v);
}

IntMultiset::IntMultiset(const std::vector<int>& values) {
  for (int v : values) insert(v);
}

void IntMultiset::insert(int value, int times) {
  if (times <= 0) return;
  counts_[value] += times;
  size_ += static_cast<std::size_t>(times);
}

void IntMultiset::merge(const IntMultiset& other) {
  for (const auto& [value, mult] : other.counts_) insert(value, mult);
}

int IntMultiset::count(int value) const {
  auto it = counts_.find(value);
  return it == counts_.end() ? 0 : it->second;
}

int IntMultiset::count_divisible(int e) const {
  require(e >= 1, "modulus must be positive");
  int total = 0;
  for (const auto& [value, mult] : counts_)
    if (value % e == 0) total += mult;
  return total;
}

bool IntMultiset::contains(const IntMultiset& other) const {
  for (const auto& [value, mult] : other.counts_)
    if (count(value) < mult) return false;
  return true;
}

std::vector<int> IntMultiset::values() const {
  std::vector<int> out;
  out.reserve(size_);
  for (const auto& [value, mult] : counts_) out.insert(out.end(), mult, value);
  return out;
}

std::string IntMultiset::to_string() const {
  std::ostringstream os;
  bool first = true;
  for (const auto& [value, mult] : counts_) {
    if (!first) os << ' ';
    first = false;
    os << value << '^' << mult;
  }
  return os.str();
}

IntMultiset IntMultiset::parse(const std::string& text) {
  IntMultiset out;
  std::istringstream is(text);
  std::string token;
  while (is >> token) {
    auto caret = token.find('^');
    if (caret == std::string::npos) throw ParseError("multiset entry without '^': " + token);
    try {
      std::size_t used = 0;
      int value = std::stoi(token.substr(0, caret), &used);
      if (used != caret) throw ParseError("bad multiset value: " + token);
      std::string tail = token.substr(caret + 1);
      int mult = std::stoi(tail, &used);
      if (used != tail.size() || mult <= 0) throw ParseError("bad multiplicity: " + token);
      out.insert(value, mult);
    } catch (const std::logic_error&) {
      throw ParseError("bad multiset entry: " + token);
    }
  }
  return out;
}

}  // namespace akdefect
