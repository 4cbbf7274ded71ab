#include "padicfrob/zeta_poly.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace padicfrob {

namespace {

void trim(ZetaPoly::Monomial& m) {
  while (!m.empty() && m.back() == 0) m.pop_back();
}

std::string monomial_string(const ZetaPoly::Monomial& m) {
  std::string out;
  for (std::size_t i = 0; i < m.size(); ++i) {
    if (m[i] == 0) continue;
    if (!out.empty()) out += "*";
    out += "z" + std::to_string(2 * i + 3);
    if (m[i] > 1) out += "^" + std::to_string(m[i]);
  }
  return out;
}

// Higher generators first: compare exponent vectors from the top slot down.
bool print_before(const ZetaPoly::Monomial& a, const ZetaPoly::Monomial& b) {
  std::size_t n = std::max(a.size(), b.size());
  for (std::size_t i = n; i-- > 0;) {
    unsigned ea = i < a.size() ? a[i] : 0;
    unsigned eb = i < b.size() ? b[i] : 0;
    if (ea != eb) return ea > eb;
  }
  return false;
}

}  // namespace

ZetaPoly::ZetaPoly(const Rational& c) {
  if (c != 0) terms_[Monomial{}] = c;
}

ZetaPoly ZetaPoly::z(unsigned m) {
  if (m < 2) throw std::invalid_argument("zeta generator index must be at least 2");
  ZetaPoly r;
  if (m % 2 == 0) return r;
  Monomial mono((m - 3) / 2 + 1, 0);
  mono.back() = 1;
  r.terms_[mono] = 1;
  return r;
}

bool ZetaPoly::is_constant() const {
  return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first.empty());
}

Rational ZetaPoly::constant_term() const {
  auto it = terms_.find(Monomial{});
  return it == terms_.end() ? Rational(0) : it->second;
}

unsigned ZetaPoly::weight(const Monomial& mono) {
  unsigned w = 0;
  for (std::size_t i = 0; i < mono.size(); ++i) w += mono[i] * static_cast<unsigned>(2 * i + 3);
  return w;
}

void ZetaPoly::add_term(const Monomial& mono, const Rational& c) {
  if (c == 0) return;
  auto [it, inserted] = terms_.emplace(mono, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

ZetaPoly& ZetaPoly::operator+=(const ZetaPoly& o) {
  for (const auto& [m, c] : o.terms_) add_term(m, c);
  return *this;
}

ZetaPoly& ZetaPoly::operator-=(const ZetaPoly& o) {
  for (const auto& [m, c] : o.terms_) add_term(m, -c);
  return *this;
}

ZetaPoly ZetaPoly::operator-() const {
  ZetaPoly r;
  for (const auto& [m, c] : terms_) r.terms_[m] = -c;
  return r;
}

ZetaPoly operator*(const ZetaPoly& a, const ZetaPoly& b) {
  ZetaPoly r;
  for (const auto& [ma, ca] : a.terms_)
    for (const auto& [mb, cb] : b.terms_) {
      ZetaPoly::Monomial m(std::max(ma.size(), mb.size()), 0);
      for (std::size_t i = 0; i < ma.size(); ++i) m[i] += ma[i];
      for (std::size_t i = 0; i < mb.size(); ++i) m[i] += mb[i];
      trim(m);
      r.add_term(m, ca * cb);
    }
  return r;
}

ZetaPoly& ZetaPoly::operator*=(const ZetaPoly& o) { return *this = *this * o; }

std::string ZetaPoly::to_string() const {
  if (terms_.empty()) return "0";
  std::vector<std::pair<Monomial, Rational>> items(terms_.begin(), terms_.end());
  std::sort(items.begin(), items.end(), [](const auto& x, const auto& y) { return print_before(x.first, y.first); });

  if (items.size() == 1) {
    const auto& [m, c] = items.front();
    if (m.empty()) return c.get_str();
    std::string mono = monomial_string(m);
    if (c == 1) return mono;
    if (c == -1) return "-" + mono;
    if (abs(c.get_num()) == 1) return (c < 0 ? "-" : "") + mono + "/" + c.get_den().get_str();
    return c.get_str() + " * " + mono;
  }

  BigInt den(1);
  for (const auto& it : items) {
    mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), it.second.get_den().get_mpz_t());
  }
  bool negate = items.front().second < 0;
  std::ostringstream body;
  bool first = true;
  for (const auto& [m, c] : items) {
    Rational scaled = c * den;
    if (negate) scaled = -scaled;
    BigInt k = scaled.get_num();
    if (first) {
      if (k < 0) body << "-";
    } else {
      body << (k < 0 ? " - " : " + ");
    }
    BigInt mag = abs(k);
    if (m.empty()) {
      body << mag.get_str();
    } else {
      if (mag != 1) body << mag.get_str() << "*";
      body << monomial_string(m);
    }
    first = false;
  }
  std::string out = body.str();
  if (den != 1) out = "(" + out + ")/" + den.get_str();
  else if (negate) out = "(" + out + ")";
  if (negate) out = "-" + out;
  return out;
}

}  // namespace padicfrob
