#include "akdefect/laurent.hpp"

#include <mutex>
#include <sstream>
#include <vector>

#include "akdefect/errors.hpp"

namespace akdefect {

LaurentPoly::LaurentPoly(long constant) {
  if (constant != 0) terms_[0] = Rational(constant);
}

LaurentPoly LaurentPoly::monomial(int exponent, Rational coefficient) {
  LaurentPoly out;
  out.set(exponent, coefficient);
  return out;
}

LaurentPoly LaurentPoly::binomial(int exponent) { return monomial(exponent) - LaurentPoly(1); }

LaurentPoly LaurentPoly::q_integer(int h) {
  require(h >= 1, "q-integer needs a positive argument");
  LaurentPoly out;
  for (int k = 0; k < h; ++k) out.terms_[k] = 1;
  return out;
}

void LaurentPoly::set(int exponent, const Rational& value) {
  if (value == 0)
    terms_.erase(exponent);
  else
    terms_[exponent] = value;
}

Rational LaurentPoly::coefficient(int exponent) const {
  auto it = terms_.find(exponent);
  return it == terms_.end() ? Rational(0) : it->second;
}

int LaurentPoly::min_exponent() const {
  require(!is_zero(), "zero polynomial has no exponents");
  return terms_.begin()->first;
}

int LaurentPoly::max_exponent() const {
  require(!is_zero(), "zero polynomial has no exponents");
  return terms_.rbegin()->first;
}

int LaurentPoly::span() const { return max_exponent() - min_exponent(); }

LaurentPoly& LaurentPoly::operator+=(const LaurentPoly& other) {
  for (const auto& [k, v] : other.terms_) set(k, coefficient(k) + v);
  return *this;
}

LaurentPoly& LaurentPoly::operator-=(const LaurentPoly& other) {
  for (const auto& [k, v] : other.terms_) set(k, coefficient(k) - v);
  return *this;
}

LaurentPoly& LaurentPoly::operator*=(const LaurentPoly& other) {
  std::map<int, Rational> product;
  for (const auto& [a, x] : terms_)
    for (const auto& [b, y] : other.terms_) product[a + b] += x * y;
  terms_.clear();
  for (auto& [k, v] : product)
    if (v != 0) terms_.emplace(k, std::move(v));
  return *this;
}

LaurentPoly LaurentPoly::operator-() const {
  LaurentPoly out;
  for (const auto& [k, v] : terms_) out.terms_[k] = -v;
  return out;
}

std::string LaurentPoly::serialize() const {
  std::ostringstream os;
  bool first = true;
  for (const auto& [k, v] : terms_) {
    if (!first) os << ' ';
    first = false;
    os << '(' << k << ", " << v.get_num() << '/' << v.get_den() << ')';
  }
  return os.str();
}

LaurentPoly LaurentPoly::deserialize(const std::string& text) {
  LaurentPoly out;
  std::size_t pos = 0;
  while (true) {
    pos = text.find('(', pos);
    if (pos == std::string::npos) break;
    std::size_t close = text.find(')', pos);
    if (close == std::string::npos) throw ParseError("unterminated term in '" + text + "'");
    std::string body = text.substr(pos + 1, close - pos - 1);
    std::size_t comma = body.find(',');
    if (comma == std::string::npos) throw ParseError("term without ',' in '" + text + "'");
    try {
      int exponent = std::stoi(body.substr(0, comma));
      std::string coeff = body.substr(comma + 1);
      coeff.erase(0, coeff.find_first_not_of(' '));
      Rational value(coeff);
      value.canonicalize();
      if (value == 0 || out.terms_.count(exponent))
        throw ParseError("zero or repeated term in '" + text + "'");
      out.terms_[exponent] = value;
    } catch (const std::invalid_argument&) {
      throw ParseError("bad term in '" + text + "'");
    }
    pos = close + 1;
  }
  return out;
}

std::string LaurentPoly::to_string() const {
  if (is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    const int k = it->first;
    Rational v = it->second;
    if (first) {
      if (v < 0) os << '-';
    } else {
      os << (v < 0 ? " - " : " + ");
    }
    first = false;
    v = abs(v);
    const bool unit = v == 1;
    if (k == 0) {
      os << v;
      continue;
    }
    if (!unit) os << v << '*';
    os << 'y';
    if (k != 1) os << '^' << k;
  }
  return os.str();
}

LaurentPoly exact_divide(const LaurentPoly& p, const LaurentPoly& divisor) {
  require(!divisor.is_zero(), "division by the zero polynomial");
  if (p.is_zero()) return {};
  // Units of the Laurent ring are monomials: strip the lowest powers and
  // divide as ordinary polynomials.
  const int p_low = p.min_exponent();
  const int d_low = divisor.min_exponent();
  const int d_deg = divisor.max_exponent() - d_low;
  std::vector<Rational> rem(static_cast<std::size_t>(p.max_exponent() - p_low + 1));
  for (const auto& [k, v] : p.terms()) rem[static_cast<std::size_t>(k - p_low)] = v;
  std::vector<Rational> div(static_cast<std::size_t>(d_deg + 1));
  for (const auto& [k, v] : divisor.terms()) div[static_cast<std::size_t>(k - d_low)] = v;
  const Rational lead = div.back();

  LaurentPoly quotient;
  for (int top = static_cast<int>(rem.size()) - 1; top >= d_deg; --top) {
    const Rational c = rem[static_cast<std::size_t>(top)] / lead;
    if (c == 0) continue;
    const int shift = top - d_deg;
    for (int i = 0; i <= d_deg; ++i) rem[static_cast<std::size_t>(shift + i)] -= c * div[static_cast<std::size_t>(i)];
    quotient += LaurentPoly::monomial(shift + p_low - d_low, c);
  }
  for (const auto& r : rem)
    if (r != 0) throw InexactDivision("divisor does not divide the polynomial");
  return quotient;
}

LaurentPoly cyclotomic_poly(int e) {
  require(e >= 1, "cyclotomic index must be positive");
  static std::mutex guard;
  static std::map<int, LaurentPoly> cache;
  {
    std::lock_guard<std::mutex> lock(guard);
    auto it = cache.find(e);
    if (it != cache.end()) return it->second;
  }
  LaurentPoly result = LaurentPoly::binomial(e);
  for (int d = 1; d < e; ++d)
    if (e % d == 0) result = exact_divide(result, cyclotomic_poly(d));
  std::lock_guard<std::mutex> lock(guard);
  cache.emplace(e, result);
  return result;
}

int nu_phi(const LaurentPoly& p, int e) {
  require(!p.is_zero(), "valuation of the zero polynomial is undefined");
  const LaurentPoly phi = cyclotomic_poly(e);
  LaurentPoly current = p;
  int k = 0;
  for (;;) {
    try {
      current = exact_divide(current, phi);
    } catch (const InexactDivision&) {
      return k;
    }
    ++k;
  }
}

}  // namespace akdefect
