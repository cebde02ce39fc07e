#include <CLI11.hpp>
#include <json.hpp>

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "akdefect/abacus.hpp"
#include "akdefect/errors.hpp"
#include "akdefect/extensions.hpp"
#include "akdefect/partition.hpp"
#include "akdefect/scan.hpp"
#include "akdefect/schur.hpp"
#include "akdefect/weight.hpp"

using namespace akdefect;
using nlohmann::json;

namespace {

constexpr int kOk = 0;
constexpr int kViolation = 1;
constexpr int kMalformed = 2;
constexpr int kBadSpecialisation = 3;

struct Common {
  std::string mp;
  std::string charge;
  std::optional<int> window;
  bool json = false;
};

Multicharge charge_for(const Multipartition& mp, const std::string& text) {
  if (text.empty()) return Multicharge(static_cast<std::size_t>(mp.level()), 0);
  Multicharge s = parse_int_list(text);
  require(static_cast<int>(s.size()) == mp.level(), "charge length must equal the level");
  return s;
}

// Moves (mp, s) into A_e^l when it is not already there.
std::pair<Multipartition, Multicharge> in_domain(const Multipartition& mp, const Multicharge& s, int e) {
  if (in_fundamental_domain(s, e)) return {mp, s};
  NormalizedCharge n = normalize_multicharge(s, e);
  return {permute_components(mp, n.permutation), n.charges};
}

std::pair<int, int> parse_roots(const std::string& text) {
  std::vector<int> v = parse_int_list(text);
  require(v.size() == 2, "--roots expects N,t");
  return {v[0], v[1]};
}

CycloSpec general_spec(int level, const std::string& roots, const std::string& rcharges, int qexp,
                       bool untwisted) {
  auto [order, t] = parse_roots(roots);
  CycloSpec spec;
  spec.level = level;
  spec.charges = rcharges.empty() ? std::vector<int>(static_cast<std::size_t>(level), 0) : parse_int_list(rcharges);
  spec.q_exponent = qexp;
  spec.eta = RootOfUnity(order, t);
  spec.root_twist = !untwisted;
  spec.validate();
  return spec;
}

void check_good(const Multipartition& mp, const Multicharge& s) {
  if (charged_hooks_direct(mp, s, false).values.count(0) > 0)
    throw BadSpecialisation("a charged hook vanishes; the specialisation is not good");
}

void add_common(CLI::App* cmd, Common& c, bool with_charge = true) {
  cmd->add_option("multipartition", c.mp, "e.g. 3.1|2.1.1")->required();
  if (with_charge) cmd->add_option("--charge,-s", c.charge, "multicharge, e.g. 0,2");
  cmd->add_flag("--json", c.json, "JSON output");
}

int run(int argc, char** argv) {
  CLI::App app{"Schur elements, defects, weights and cores of Ariki-Koike algebras"};
  app.require_subcommand(1);

  // hooks
  Common hk;
  bool diagonal = true;
  std::optional<int> hk_mod;
  auto* hooks = app.add_subcommand("hooks", "charged hook multiset");
  add_common(hooks, hk);
  hooks->add_flag("--diagonal,!--no-diagonal", diagonal, "include hooks within one component");
  hooks->add_option("--mod", hk_mod, "also count the hooks divisible by e")->check(CLI::PositiveNumber);
  hooks->add_option("--window", hk.window)->check(CLI::PositiveNumber);

  // defect
  Common df;
  int df_e = 0;
  bool general = false, untwisted = false;
  std::string roots, rcharges;
  int qexp = 1;
  auto* defect = app.add_subcommand("defect", "Phi-defect of the Schur element");
  add_common(defect, df);
  defect->add_option("--e", df_e, "e for Phi_e")->check(CLI::PositiveNumber);
  defect->add_flag("--general", general, "cyclotomic specialisation at a root of unity");
  defect->add_option("--roots", roots, "N,t for eta = zeta_N^t");
  defect->add_option("--rcharges", rcharges, "r_0,...,r_{l-1}");
  defect->add_option("--qexp", qexp, "q -> y^r, r nonzero");
  defect->add_flag("--untwisted", untwisted, "Q_i -> y^{r_i} without the eta_l twist");
  defect->add_option("--window", df.window)->check(CLI::PositiveNumber);

  // weight
  Common wt;
  int wt_e = 2;
  auto* weight = app.add_subcommand("weight", "Fayers weight, cross-checked by the bead recursion");
  add_common(weight, wt);
  weight->add_option("--e", wt_e)->required()->check(CLI::Range(2, 1 << 20));
  weight->add_option("--window", wt.window)->check(CLI::PositiveNumber);

  // core
  Common cr;
  int cr_e = 2;
  auto* corecmd = app.add_subcommand("core", "(e,s)-core");
  add_common(corecmd, cr);
  corecmd->add_option("--e", cr_e)->required()->check(CLI::Range(2, 1 << 20));
  corecmd->add_option("--window", cr.window)->check(CLI::PositiveNumber);

  // schur
  Common sc;
  auto* schur = app.add_subcommand("schur", "generic Schur element, or its integer specialisation");
  add_common(schur, sc);

  // abacus
  Common ab;
  auto* abacus = app.add_subcommand("abacus", "draw the l-abacus");
  add_common(abacus, ab);
  abacus->add_option("--window", ab.window)->check(CLI::PositiveNumber);

  // dm-classes
  int dm_order = 0, dm_u = 0, dm_n = 1;
  std::string dm_params;
  bool dm_json = false;
  auto* dm = app.add_subcommand("dm-classes", "Dipper-Mathas classes of the parameters");
  dm->add_option("--roots", dm_order, "N")->required()->check(CLI::PositiveNumber);
  dm->add_option("--params", dm_params, "exponents t_i with Q_i = zeta_N^{t_i}")->required();
  dm->add_option("--u", dm_u, "q = zeta_N^u")->required();
  dm->add_option("--n", dm_n, "rank")->required()->check(CLI::NonNegativeNumber);
  dm->add_flag("--json", dm_json);

  // yokonuma
  Common yk;
  int yk_d = 1, yk_l = 1, yk_e = 2;
  auto* yokonuma = app.add_subcommand("yokonuma", "Yokonuma-Hecke defect and block key");
  add_common(yokonuma, yk);
  yokonuma->add_option("--d", yk_d)->required()->check(CLI::PositiveNumber);
  yokonuma->add_option("--l", yk_l)->required()->check(CLI::PositiveNumber);
  yokonuma->add_option("--e", yk_e)->required()->check(CLI::PositiveNumber);

  // glpn
  Common gl;
  int gl_d = 1, gl_p = 1, gl_qexp = 1;
  std::string gl_roots, gl_rcharges;
  auto* glpn = app.add_subcommand("glpn", "defect of G(l,p,n) irreducibles under a multipartition");
  add_common(glpn, gl, false);
  glpn->add_option("--d", gl_d)->required()->check(CLI::PositiveNumber);
  glpn->add_option("--p", gl_p)->required()->check(CLI::PositiveNumber);
  glpn->add_option("--roots", gl_roots, "N,t")->required();
  glpn->add_option("--rcharges", gl_rcharges, "d-periodic r_0,...,r_{l-1}");
  glpn->add_option("--qexp", gl_qexp);

  // scan
  ScanOptions so;
  std::string so_charge, csv_path;
  std::optional<int> so_p, so_window;
  bool so_json = false;
  auto* scan = app.add_subcommand("scan", "check defect constancy on every proxy block");
  scan->add_option("--l", so.level)->required()->check(CLI::PositiveNumber);
  scan->add_option("--n", so.rank)->required()->check(CLI::NonNegativeNumber);
  scan->add_option("--e", so.e)->check(CLI::Range(2, 1 << 20));
  scan->add_option("--charge,-s", so_charge);
  scan->add_option("--jobs,-j", so.jobs)->envname("AKDEFECT_JOBS")->check(CLI::PositiveNumber);
  scan->add_option("--p", so_p)->check(CLI::PositiveNumber);
  scan->add_option("--window", so_window)->check(CLI::PositiveNumber);
  scan->add_option("--csv", csv_path, "also write a CSV table");
  scan->add_flag("--json", so_json, "print the report as JSON");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? kOk : kMalformed;
  }

  if (*hooks) {
    Multipartition mp = parse_multipartition(hk.mp);
    Multicharge s = charge_for(mp, hk.charge);
    int m = hk.window ? *hk.window : default_window(mp, s);
    ChargedHookMultiset h = charged_hooks_abacus(multi_beta(mp, s, m), diagonal);
    if (hk.json) {
      json j{{"hooks", h.values.values()}, {"size", h.values.size()}, {"diagonal", diagonal}};
      if (hk_mod) j["divisible"] = h.values.count_divisible(*hk_mod);
      std::cout << j.dump() << "\n";
    } else {
      std::cout << "H: " << format_int_list(h.values.values()) << "\n";
      std::cout << "size: " << h.values.size() << "\n";
      if (hk_mod) std::cout << "divisible by " << *hk_mod << ": " << h.values.count_divisible(*hk_mod) << "\n";
    }
    return kOk;
  }

  if (*defect) {
    Multipartition mp = parse_multipartition(df.mp);
    if (general) {
      require(!roots.empty(), "--general needs --roots N,t");
      int k = defect_general(mp, general_spec(mp.level(), roots, rcharges, qexp, untwisted));
      if (df.json)
        std::cout << json{{"defect", k}, {"weight", nullptr}, {"core", nullptr}}.dump() << "\n";
      else
        std::cout << k << "\n";
      return kOk;
    }
    require(df_e >= 1, "defect needs --e (or --general)");
    Multicharge s = charge_for(mp, df.charge);
    if (df_e == 1) check_good(mp, s);
    int k = defect_integer(mp, s, df_e);
    if (df.json) {
      json j{{"defect", k}, {"weight", nullptr}, {"core", nullptr}};
      if (df_e >= 2) {
        auto [mp2, s2] = in_domain(mp, s, df_e);
        int m = df.window ? *df.window : default_window(mp2, s2);
        CoreResult c = core(mp2, s2, m, df_e);
        j["weight"] = c.weight;
        j["core"] = json::parse(core_result_json(c));
      }
      std::cout << j.dump() << "\n";
    } else {
      std::cout << k << "\n";
    }
    return kOk;
  }

  if (*weight) {
    Multipartition mp = parse_multipartition(wt.mp);
    Multicharge s = charge_for(mp, wt.charge);
    auto [mp2, s2] = in_domain(mp, s, wt_e);
    int m = wt.window ? *wt.window : default_window(mp2, s2);
    int f = fayers_weight(mp2, s2, wt_e);
    int u = uglov_weight(mp2, s2, m, wt_e);
    if (wt.json)
      std::cout << json{{"weight", f}, {"fayers", f}, {"uglov", u}}.dump() << "\n";
    else
      std::cout << f << "\n";
    if (f != u) {
      std::cerr << "weights disagree: fayers " << f << ", bead recursion " << u << "\n";
      return kViolation;
    }
    return kOk;
  }

  if (*corecmd) {
    Multipartition mp = parse_multipartition(cr.mp);
    Multicharge s = charge_for(mp, cr.charge);
    auto [mp2, s2] = in_domain(mp, s, cr_e);
    int m = cr.window ? *cr.window : default_window(mp2, s2);
    CoreResult c = core(mp2, s2, m, cr_e);
    if (cr.json) {
      std::cout << core_result_json(c) << "\n";
    } else {
      std::cout << "core: " << format_multipartition(c.core) << "\n";
      std::cout << "charges: " << format_int_list(c.charges) << "\n";
      std::cout << "weight: " << c.weight << "\n";
    }
    return kOk;
  }

  if (*schur) {
    Multipartition mp = parse_multipartition(sc.mp);
    if (sc.charge.empty()) {
      GenericSchurFactors f = schur_factors(mp);
      std::cout << (sc.json ? f.to_json() : f.to_string()) << "\n";
    } else {
      LaurentPoly p = specialize_integer(mp, charge_for(mp, sc.charge));
      if (sc.json)
        std::cout << json{{"poly", p.serialize()}, {"text", p.to_string()}}.dump() << "\n";
      else
        std::cout << p.to_string() << "\n";
    }
    return kOk;
  }

  if (*abacus) {
    Multipartition mp = parse_multipartition(ab.mp);
    Multicharge s = charge_for(mp, ab.charge);
    int m = ab.window ? *ab.window : default_window(mp, s);
    BetaConfig cfg = multi_beta(mp, s, m);
    if (ab.json)
      std::cout << json{{"window", m}, {"runners", cfg.runners()}}.dump() << "\n";
    else
      std::cout << render_abacus(cfg);
    return kOk;
  }

  if (*dm) {
    std::vector<RootOfUnity> xi;
    for (int t : parse_int_list(dm_params)) xi.emplace_back(dm_order, t);
    RootOfUnity u(dm_order, dm_u);
    auto classes = dipper_mathas_classes(xi, u, dm_n);
    if (dm_json) {
      json cs = json::array();
      for (const auto& c : classes) cs.push_back(class_multicharge(c, xi, u));
      std::cout << json{{"classes", classes}, {"charges", cs}, {"semisimple", semisimple_check(xi, u, dm_n)}}.dump()
                << "\n";
    } else {
      std::cout << format_classes(classes) << "\n";
    }
    return kOk;
  }

  if (*yokonuma) {
    Multipartition mp = parse_multipartition(yk.mp);
    Multicharge s = yk.charge.empty() ? Multicharge(static_cast<std::size_t>(yk_l), 0) : parse_int_list(yk.charge);
    int k = yokonuma_defect(mp, yk_d, yk_l, s, yk_e);
    auto key = yokonuma_block_key(mp, yk_d, yk_l, s, yk_e);
    if (yk.json) {
      json kj = json::array();
      for (const auto& pk : key) kj.push_back({{"rank", pk.rank}, {"residues", pk.residues.counts}});
      std::cout << json{{"defect", k}, {"block_key", kj}}.dump() << "\n";
    } else {
      std::cout << k << "\n";
      for (std::size_t i = 0; i < key.size(); ++i)
        std::cout << "package " << i << ": rank " << key[i].rank << " residues " << key[i].residues.to_string()
                  << "\n";
    }
    return kOk;
  }

  if (*glpn) {
    Multipartition mp = parse_multipartition(gl.mp);
    CycloSpec spec = general_spec(mp.level(), gl_roots, gl_rcharges, gl_qexp, false);
    int k = glpn_defect(mp, gl_d, gl_p, spec);
    SigmaOrbit o = orbit(mp, gl_d, gl_p);
    if (gl.json)
      std::cout << json{{"defect", k}, {"orbit_size", o.orbit_size}, {"stabilizer_order", o.stabilizer_order}}.dump()
                << "\n";
    else
      std::cout << k << "\n"
                << "orbit " << o.orbit_size << ", stabilizer " << o.stabilizer_order << "\n";
    return kOk;
  }

  if (*scan) {
    so.charge = so_charge.empty() ? Multicharge(static_cast<std::size_t>(so.level), 0) : parse_int_list(so_charge);
    so.p = so_p;
    so.window = so_window;
    ScanReport report = run_scan(so);
    std::cout << (so_json ? report.to_json() + "\n" : report.to_text());
    if (!csv_path.empty()) {
      std::ofstream out(csv_path);
      if (!out) throw InvalidArgument("cannot write " + csv_path);
      out << report.to_csv();
    }
    return report.violation ? kViolation : kOk;
  }
  return kMalformed;
}

}  // namespace

int main(int argc, char** argv) {
  try {
    return run(argc, argv);
  } catch (const BadSpecialisation& e) {
    std::cerr << "bad specialisation: " << e.what() << "\n";
    return kBadSpecialisation;
  } catch (const ParseError& e) {
    std::cerr << "parse error: " << e.what() << "\n";
    return kMalformed;
  } catch (const InvalidArgument& e) {
    std::cerr << "invalid argument: " << e.what() << "\n";
    return kMalformed;
  } catch (const InvariantViolation& e) {
    std::cerr << "invariant violation: " << e.what() << "\n";
    return kViolation;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kViolation;
  }
}
