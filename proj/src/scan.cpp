#include "akdefect/scan.hpp"

#include <algorithm>
#include <cstdlib>
#include <exception>
#include <map>
#include <sstream>
#include <thread>

#include <json.hpp>

#include "akdefect/abacus.hpp"
#include "akdefect/errors.hpp"
#include "akdefect/extensions.hpp"
#include "akdefect/schur.hpp"

namespace akdefect {

using nlohmann::json;

namespace {

json core_to_json(const CoreResult& r) {
  return json{{"core", format_multipartition(r.core)}, {"charges", r.charges}, {"weight", r.weight}};
}

CoreResult core_from_json(const json& j) {
  return CoreResult{parse_multipartition(j.at("core").get<std::string>()),
                    j.at("charges").get<Multicharge>(), j.at("weight").get<int>()};
}

json optional_int(const std::optional<int>& v) { return v ? json(*v) : json(nullptr); }

std::optional<int> read_optional_int(const json& j, const char* key) {
  if (!j.contains(key) || j.at(key).is_null()) return std::nullopt;
  return j.at(key).get<int>();
}

std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + "\"";
}

MemberRecord examine(const Multipartition& mp, const ScanOptions& opt, const Multicharge& s) {
  int m = opt.window ? *opt.window : default_window(mp, s);
  MemberRecord rec;
  rec.multipartition = mp;
  rec.fayers_weight = fayers_weight(mp, s, opt.e);
  rec.uglov_weight = uglov_weight(mp, s, m, opt.e);
  rec.divisible_hooks = count_divisible_hooks(multi_beta(mp, s, m), opt.e);
  rec.defect = opt.defect_override ? opt.defect_override(mp, s, opt.e) : defect_integer(mp, s, opt.e);
  rec.core = core(mp, s, m, opt.e);
  if (opt.p) rec.orbit_size = orbit(mp, opt.level / *opt.p, *opt.p).orbit_size;
  return rec;
}

}  // namespace

std::string core_result_json(const CoreResult& result) { return core_to_json(result).dump(); }

CoreResult core_result_from_json(const std::string& text) {
  try {
    return core_from_json(json::parse(text));
  } catch (const json::exception& ex) {
    throw ParseError(std::string("bad core json: ") + ex.what());
  }
}

ScanReport run_scan(const ScanOptions& opt) {
  require(opt.level >= 1, "level must be positive");
  require(opt.rank >= 0, "rank must be non-negative");
  require(opt.e >= 2, "scan needs e >= 2");
  require(static_cast<int>(opt.charge.size()) == opt.level, "charge length must equal the level");
  require(opt.jobs >= 1, "jobs must be positive");
  if (opt.p) require(*opt.p >= 1 && opt.level % *opt.p == 0, "p must divide the level");
  if (opt.window) require(*opt.window >= 1, "window must be positive");

  ScanReport report;
  report.level = opt.level;
  report.rank = opt.rank;
  report.e = opt.e;
  report.input_charge = opt.charge;
  report.charge = normalize_multicharge(opt.charge, opt.e).charges;
  report.p = opt.p;
  report.window = opt.window;

  const std::vector<Multipartition> all = enumerate_multipartitions(opt.level, opt.rank);
  std::vector<std::optional<MemberRecord>> records(all.size());
  std::vector<std::exception_ptr> errors(static_cast<std::size_t>(opt.jobs));

  auto work = [&](int worker) {
    try {
      for (std::size_t i = static_cast<std::size_t>(worker); i < all.size();
           i += static_cast<std::size_t>(opt.jobs))
        records[i] = examine(all[i], opt, report.charge);
    } catch (...) {
      errors[static_cast<std::size_t>(worker)] = std::current_exception();
    }
  };
  if (opt.jobs == 1) {
    work(0);
  } else {
    std::vector<std::thread> pool;
    for (int w = 0; w < opt.jobs; ++w) pool.emplace_back(work, w);
    for (auto& t : pool) t.join();
  }
  for (auto& err : errors)
    if (err) std::rethrow_exception(err);

  std::map<ResidueVector, std::size_t> index;
  for (std::size_t i = 0; i < all.size(); ++i) {
    MemberRecord& rec = *records[i];
    ResidueVector key = residue_vector(rec.multipartition, report.charge, opt.e);
    auto [it, fresh] = index.emplace(key, report.blocks.size());
    if (fresh) {
      ProxyBlock block;
      block.id = static_cast<int>(report.blocks.size());
      block.key = key;
      block.weight = rec.fayers_weight;
      block.defect = rec.defect;
      report.blocks.push_back(std::move(block));
    }
    ProxyBlock& block = report.blocks[it->second];
    if (rec.defect != block.defect || !rec.consistent()) block.violation = true;
    block.members.push_back(std::move(rec));
  }
  for (const auto& b : report.blocks) report.violation = report.violation || b.violation;
  return report;
}

std::size_t ScanReport::member_count() const {
  std::size_t n = 0;
  for (const auto& b : blocks) n += b.members.size();
  return n;
}

std::size_t ScanReport::violation_count() const {
  return static_cast<std::size_t>(
      std::count_if(blocks.begin(), blocks.end(), [](const ProxyBlock& b) { return b.violation; }));
}

std::string ScanReport::to_json() const {
  json blocks_j = json::array();
  for (const auto& b : blocks) {
    json members_j = json::array();
    for (const auto& m : b.members) {
      members_j.push_back({{"multipartition", format_multipartition(m.multipartition)},
                           {"fayers_weight", m.fayers_weight},
                           {"uglov_weight", m.uglov_weight},
                           {"divisible_hooks", m.divisible_hooks},
                           {"defect", m.defect},
                           {"core", core_to_json(m.core)},
                           {"orbit_size", optional_int(m.orbit_size)}});
    }
    blocks_j.push_back({{"id", b.id},
                        {"residue_key", b.key.counts},
                        {"weight", b.weight},
                        {"defect", b.defect},
                        {"violation", b.violation},
                        {"members", members_j}});
  }
  json j{{"level", level},
         {"rank", rank},
         {"e", e},
         {"input_charge", input_charge},
         {"charge", charge},
         {"p", optional_int(p)},
         {"window", optional_int(window)},
         {"violation", violation},
         {"blocks", blocks_j}};
  return j.dump(2);
}

ScanReport ScanReport::from_json(const std::string& text) {
  try {
    json j = json::parse(text);
    ScanReport r;
    r.level = j.at("level").get<int>();
    r.rank = j.at("rank").get<int>();
    r.e = j.at("e").get<int>();
    r.input_charge = j.at("input_charge").get<Multicharge>();
    r.charge = j.at("charge").get<Multicharge>();
    r.p = read_optional_int(j, "p");
    r.window = read_optional_int(j, "window");
    r.violation = j.at("violation").get<bool>();
    for (const auto& bj : j.at("blocks")) {
      ProxyBlock b;
      b.id = bj.at("id").get<int>();
      b.key = ResidueVector{r.e, bj.at("residue_key").get<std::vector<int>>()};
      b.weight = bj.at("weight").get<int>();
      b.defect = bj.at("defect").get<int>();
      b.violation = bj.at("violation").get<bool>();
      for (const auto& mj : bj.at("members")) {
        b.members.push_back(MemberRecord{parse_multipartition(mj.at("multipartition").get<std::string>()),
                                         mj.at("fayers_weight").get<int>(),
                                         mj.at("uglov_weight").get<int>(),
                                         mj.at("divisible_hooks").get<int>(),
                                         mj.at("defect").get<int>(),
                                         core_from_json(mj.at("core")),
                                         read_optional_int(mj, "orbit_size")});
      }
      r.blocks.push_back(std::move(b));
    }
    return r;
  } catch (const json::exception& ex) {
    throw ParseError(std::string("bad scan report: ") + ex.what());
  }
}

std::string ScanReport::to_text() const {
  std::ostringstream out;
  out << "scan l=" << level << " n=" << rank << " e=" << e << " charge=" << format_int_list(charge);
  if (charge != input_charge) out << " (from " << format_int_list(input_charge) << ")";
  out << "\n";
  out << "multipartitions: " << member_count() << "  blocks: " << blocks.size()
      << "  violations: " << violation_count() << "\n";
  for (const auto& b : blocks) {
    out << "block " << b.id << " key=" << b.key.to_string() << " weight=" << b.weight
        << " defect=" << b.defect << (b.violation ? " VIOLATION" : "") << "\n";
    for (const auto& m : b.members) {
      out << "  " << format_multipartition(m.multipartition) << "  core=" << format_multipartition(m.core.core);
      if (m.orbit_size) out << "  orbit=" << *m.orbit_size;
      if (!m.consistent())
        out << "  [fayers=" << m.fayers_weight << " uglov=" << m.uglov_weight
            << " hooks=" << m.divisible_hooks << " defect=" << m.defect << "]";
      out << "\n";
    }
  }
  out << (violation ? "FAIL" : "OK") << "\n";
  return out.str();
}

std::string ScanReport::to_csv() const {
  std::ostringstream out;
  out << "block_id,residue_key,multipartition,weight,defect,core";
  if (p) out << ",orbit_size";
  out << "\n";
  for (const auto& b : blocks) {
    for (const auto& m : b.members) {
      out << b.id << ',' << csv_field(b.key.to_string()) << ',' << csv_field(format_multipartition(m.multipartition))
          << ',' << m.fayers_weight << ',' << m.defect << ',' << csv_field(format_multipartition(m.core.core));
      if (p) out << ',' << (m.orbit_size ? std::to_string(*m.orbit_size) : "");
      out << "\n";
    }
  }
  return out.str();
}

}  // namespace akdefect
