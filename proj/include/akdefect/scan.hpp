#pragma once

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "akdefect/partition.hpp"
#include "akdefect/weight.hpp"

namespace akdefect {

// {"core": "2|0", "charges": [0,2], "weight": 4}
std::string core_result_json(const CoreResult& result);
CoreResult core_result_from_json(const std::string& text);

using DefectFunction = std::function<int(const Multipartition&, const Multicharge&, int)>;

struct ScanOptions {
  int level = 1;
  int rank = 0;
  int e = 2;
  Multicharge charge;             // any integers; normalised into A_e^l
  int jobs = 1;
  std::optional<int> p;           // report sigma-orbit sizes with d = level / p
  std::optional<int> window;      // default: per member, default_window()
  DefectFunction defect_override; // test hook; defaults to defect_integer
};

struct MemberRecord {
  Multipartition multipartition;
  int fayers_weight = 0;
  int uglov_weight = 0;
  int divisible_hooks = 0;
  int defect = 0;
  CoreResult core;
  std::optional<int> orbit_size;

  bool consistent() const {
    return fayers_weight == uglov_weight && uglov_weight == divisible_hooks && divisible_hooks == defect;
  }
  bool operator==(const MemberRecord&) const = default;
};

struct ProxyBlock {
  int id = 0;
  ResidueVector key;
  std::vector<MemberRecord> members;
  int weight = 0;  // first member's
  int defect = 0;  // first member's
  // members disagree on defect, or some member's weights and defect differ
  bool violation = false;
  bool operator==(const ProxyBlock&) const = default;
};

struct ScanReport {
  int level = 1;
  int rank = 0;
  int e = 2;
  Multicharge input_charge;
  Multicharge charge;  // normalised, used for every computation
  std::optional<int> p;
  std::optional<int> window;
  std::vector<ProxyBlock> blocks;  // in order of first appearance
  bool violation = false;

  std::size_t member_count() const;
  std::size_t violation_count() const;

  std::string to_json() const;
  static ScanReport from_json(const std::string& text);
  std::string to_text() const;
  std::string to_csv() const;
  bool operator==(const ScanReport&) const = default;
};

// Enumerates every l-multipartition of the given rank, groups them by
// residue vector and checks that each block has one defect and that every
// member's weights match its defect. The report does not depend on `jobs`.
ScanReport run_scan(const ScanOptions& options);

}  // namespace akdefect
