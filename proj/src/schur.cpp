#include "akdefect/schur.hpp"

#include <json.hpp>
#include <numeric>
#include <sstream>

#include "akdefect/errors.hpp"

namespace akdefect {

namespace {

long long mod(long long a, long long n) { return ((a % n) + n) % n; }

}  // namespace

RootOfUnity::RootOfUnity(int order, long exponent) : order_(order), exponent_(0) {
  require(order >= 1, "root of unity order must be positive");
  exponent_ = static_cast<int>(mod(exponent, order));
}

int RootOfUnity::multiplicative_order() const { return order_ / std::gcd(order_, exponent_ == 0 ? order_ : exponent_); }

RootOfUnity RootOfUnity::pow(long k) const {
  return RootOfUnity(order_, static_cast<long>(mod(static_cast<long long>(exponent_) * mod(k, order_), order_)));
}

RootOfUnity RootOfUnity::operator*(const RootOfUnity& other) const {
  require(order_ == other.order_, "roots of unity live in different ambient groups");
  return RootOfUnity(order_, static_cast<long>(exponent_) + other.exponent_);
}

std::string GenericSchurFactors::to_json() const {
  nlohmann::json pj = nlohmann::json::array();
  for (const auto& p : pairs) pj.push_back({p.hook, p.a, p.b});
  nlohmann::json j = {{"sign", sign}, {"q_exp", q_exponent}, {"qints", q_integers}, {"pairs", pj}};
  return j.dump();
}

GenericSchurFactors GenericSchurFactors::from_json(const std::string& text) {
  try {
    const auto j = nlohmann::json::parse(text);
    GenericSchurFactors out;
    out.sign = j.at("sign").get<int>();
    out.q_exponent = j.at("q_exp").get<long>();
    out.q_integers = j.at("qints").get<std::vector<int>>();
    for (const auto& p : j.at("pairs")) out.pairs.push_back({p.at(0).get<int>(), p.at(1).get<int>(), p.at(2).get<int>()});
    return out;
  } catch (const nlohmann::json::exception& ex) {
    throw ParseError(std::string("bad Schur factor JSON: ") + ex.what());
  }
}

std::string GenericSchurFactors::to_string() const {
  std::vector<std::string> parts;
  if (q_exponent != 0) parts.push_back(q_exponent == 1 ? "q" : "q^" + std::to_string(q_exponent));
  for (int h : q_integers)
    if (h != 1) parts.push_back("[" + std::to_string(h) + "]_q");
  for (const auto& p : pairs) {
    std::string power = p.hook == 0 ? "" : p.hook == 1 ? "q*" : "q^" + std::to_string(p.hook) + "*";
    parts.push_back("(" + power + "Q" + std::to_string(p.a) + "/Q" + std::to_string(p.b) + " - 1)");
  }
  std::string body;
  for (std::size_t i = 0; i < parts.size(); ++i) body += (i ? " " : "") + parts[i];
  if (body.empty()) body = "1";
  return sign < 0 ? "-" + body : body;
}

GenericSchurFactors schur_factors(const Multipartition& mp) {
  GenericSchurFactors out;
  const int n = mp.rank();
  const int l = mp.level();
  out.sign = (static_cast<long>(n) * (l - 1)) % 2 == 0 ? 1 : -1;
  out.q_exponent = -n_invariant(bar(mp));
  for (const Node& x : mp.nodes()) {
    const Partition& own = mp[x.component];
    out.q_integers.push_back(generalized_hook(own, own, x.row, x.col));
    for (int b = 0; b < l; ++b)
      if (b != x.component) out.pairs.push_back({generalized_hook(own, mp[b], x.row, x.col), x.component, b});
  }
  return out;
}

LaurentPoly specialize_integer(const Multipartition& mp, const Multicharge& s) {
  require(static_cast<int>(s.size()) == mp.level(), "multicharge length must equal the level");
  const GenericSchurFactors f = schur_factors(mp);
  std::vector<int> charged;
  for (const auto& p : f.pairs) {
    const int ch = p.hook + s[static_cast<std::size_t>(p.a)] - s[static_cast<std::size_t>(p.b)];
    if (ch == 0)
      throw BadSpecialisation("zero charged hook between components " + std::to_string(p.a) + " and " +
                              std::to_string(p.b) + ": the Schur element specialises to 0");
    charged.push_back(ch);
  }
  LaurentPoly out = LaurentPoly::monomial(static_cast<int>(f.q_exponent), f.sign);
  for (int h : f.q_integers) out *= LaurentPoly::q_integer(h);
  for (int ch : charged) out *= LaurentPoly::binomial(ch);
  return out;
}

int defect_integer(const Multipartition& mp, const Multicharge& s, int e) {
  require(e >= 1, "e must be positive");
  require(static_cast<int>(s.size()) == mp.level(), "multicharge length must equal the level");
  const GenericSchurFactors f = schur_factors(mp);
  int total = 0;
  for (const auto& p : f.pairs) {
    const int ch = p.hook + s[static_cast<std::size_t>(p.a)] - s[static_cast<std::size_t>(p.b)];
    if (e == 1 ? ch != 0 : ch % e == 0) ++total;
  }
  if (e >= 2)
    for (int h : f.q_integers)
      if (h % e == 0) ++total;
  return total;
}

void CycloSpec::validate() const {
  require(level >= 1, "level must be positive");
  require(static_cast<int>(charges.size()) == level, "need one charge r_i per component");
  require(q_exponent != 0, "q-exponent r must be nonzero");
  if (root_twist)
    require(eta.order() % level == 0, "the ambient order N must be divisible by the level l");
}

SpecialisedParameters parameters_of(const CycloSpec& spec) {
  spec.validate();
  const int N = spec.eta.order();
  SpecialisedParameters out;
  for (int i = 0; i < spec.level; ++i) {
    long long exp = static_cast<long long>(spec.eta.exponent()) * spec.charges[static_cast<std::size_t>(i)];
    if (spec.root_twist) exp += static_cast<long long>(i) * (N / spec.level);
    out.xi.emplace_back(N, static_cast<long>(mod(exp, N)));
  }
  out.u = spec.eta.pow(spec.q_exponent);
  return out;
}

int defect_general(const Multipartition& mp, const CycloSpec& spec) {
  spec.validate();
  require(mp.level() == spec.level, "multipartition level does not match the specialisation");
  const long long N = spec.eta.order();
  const long long t = spec.eta.exponent();
  const long long r = spec.q_exponent;
  const GenericSchurFactors f = schur_factors(mp);

  auto vanishes = [&](long long exponent) { return mod(exponent, N) == 0; };
  int total = 0;
  for (int h : f.q_integers) {
    // (y^{rh} - 1) / (y^r - 1) evaluated at eta
    total += (vanishes(mod(r * h, N) * t) ? 1 : 0) - (vanishes(mod(r, N) * t) ? 1 : 0);
  }
  for (const auto& p : f.pairs) {
    const long long M = r * p.hook + spec.charges[static_cast<std::size_t>(p.a)] -
                        spec.charges[static_cast<std::size_t>(p.b)];
    if (M == 0) {
      if (p.a == p.b)
        throw InvariantViolation("zero exponent on a diagonal factor: classical hooks are nonzero");
      if (!spec.root_twist)
        throw BadSpecialisation("factor Q_a/Q_b - 1 specialises to 0 without the eta_l twist");
      continue;  // eta_l^{a-b} - 1 is a nonzero constant
    }
    long long twist = spec.root_twist ? static_cast<long long>(p.a - p.b) * (N / spec.level) : 0;
    // roots of eta_l^{a-b} y^M - 1 are simple
    if (vanishes(twist + mod(M, N) * t)) ++total;
  }
  if (total < 0) throw InvariantViolation("negative valuation");
  return total;
}

namespace {

void require_common_order(std::span<const RootOfUnity> xi, const RootOfUnity& u) {
  for (const auto& x : xi)
    require(x.order() == u.order(), "all parameters must share one ambient order N");
}

bool related(const RootOfUnity& xa, const RootOfUnity& xb, const RootOfUnity& u, int n) {
  for (int h = -n + 1; h < n; ++h)
    if (u.pow(h) * xa == xb) return true;
  return false;
}

}  // namespace

bool semisimple_check(std::span<const RootOfUnity> xi, const RootOfUnity& u, int n) {
  require_common_order(xi, u);
  require(n >= 0, "rank must be nonnegative");
  // 1 + u + ... + u^{i-1} vanishes iff u != 1 and u^i = 1 (characteristic 0)
  const int e = u.multiplicative_order();
  if (e > 1 && e <= n) return false;
  for (std::size_t a = 0; a < xi.size(); ++a)
    for (std::size_t b = a + 1; b < xi.size(); ++b)
      if (related(xi[a], xi[b], u, n)) return false;
  return true;
}

std::vector<std::vector<int>> dipper_mathas_classes(std::span<const RootOfUnity> xi,
                                                    const RootOfUnity& u, int n) {
  require_common_order(xi, u);
  const int l = static_cast<int>(xi.size());
  std::vector<int> parent(static_cast<std::size_t>(l));
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](int a) {
    while (parent[static_cast<std::size_t>(a)] != a) a = parent[static_cast<std::size_t>(a)];
    return a;
  };
  for (int a = 0; a < l; ++a)
    for (int b = a + 1; b < l; ++b)
      if (related(xi[static_cast<std::size_t>(a)], xi[static_cast<std::size_t>(b)], u, n)) {
        const int ra = find(a), rb = find(b);
        parent[static_cast<std::size_t>(std::max(ra, rb))] = std::min(ra, rb);
      }
  std::vector<std::vector<int>> classes;
  std::vector<int> slot(static_cast<std::size_t>(l), -1);
  for (int a = 0; a < l; ++a) {
    const int root = find(a);
    if (slot[static_cast<std::size_t>(root)] < 0) {
      slot[static_cast<std::size_t>(root)] = static_cast<int>(classes.size());
      classes.emplace_back();
    }
    classes[static_cast<std::size_t>(slot[static_cast<std::size_t>(root)])].push_back(a);
  }
  return classes;
}

std::vector<int> class_multicharge(std::span<const int> members, std::span<const RootOfUnity> xi,
                                   const RootOfUnity& u) {
  require_common_order(xi, u);
  require(!members.empty(), "a class has at least one member");
  const int e = u.multiplicative_order();
  const RootOfUnity& base = xi[static_cast<std::size_t>(members[0])];
  std::vector<int> out;
  for (int a : members) {
    require(a >= 0 && a < static_cast<int>(xi.size()), "class member out of range");
    int found = -1;
    for (int s = 0; s < e && found < 0; ++s)
      if (base * u.pow(s) == xi[static_cast<std::size_t>(a)]) found = s;
    require(found >= 0, "parameter " + std::to_string(a) + " is not a power of u times the class base");
    out.push_back(found);
  }
  return out;
}

std::string format_classes(const std::vector<std::vector<int>>& classes) {
  std::string out = "{";
  for (std::size_t i = 0; i < classes.size(); ++i) {
    if (i) out += ",";
    out += "{";
    for (std::size_t j = 0; j < classes[i].size(); ++j) out += (j ? "," : "") + std::to_string(classes[i][j]);
    out += "}";
  }
  return out + "}";
}

}  // namespace akdefect
