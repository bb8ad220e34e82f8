#include "gentle/poly.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace gentle {

Exponent add(const Exponent& a, const Exponent& b) {
  Exponent r(a);
  for (size_t i = 0; i < r.size(); ++i) r[i] += b[i];
  return r;
}

Exponent sub(const Exponent& a, const Exponent& b) {
  Exponent r(a);
  for (size_t i = 0; i < r.size(); ++i) r[i] -= b[i];
  return r;
}

std::string exponent_string(const Exponent& e) {
  std::string s = "(";
  for (size_t i = 0; i < e.size(); ++i) s += (i ? "," : "") + std::to_string(e[i]);
  return s + ")";
}

namespace {

int degree(const Exponent& e) { return std::accumulate(e.begin(), e.end(), 0); }

bool print_before(const Exponent& a, const Exponent& b) {
  int da = degree(a), db = degree(b);
  if (da != db) return da < db;
  return a > b;
}

std::string monomial_text(const Exponent& e, const std::vector<std::string>& names,
                          const std::string& var) {
  std::string s;
  for (size_t i = 0; i < e.size(); ++i) {
    if (e[i] == 0) continue;
    if (!s.empty()) s += "*";
    s += var + names[i];
    if (e[i] != 1) s += "^" + std::to_string(e[i]);
  }
  return s;
}

// Appends "c*m" with sign handling to a sum under construction.
void append_term(std::string& out, long long c, const std::string& mono) {
  bool neg = c < 0;
  long long a = neg ? -c : c;
  std::string body;
  if (mono.empty())
    body = std::to_string(a);
  else if (a == 1)
    body = mono;
  else
    body = std::to_string(a) + "*" + mono;
  if (out.empty())
    out = neg ? "-" + body : body;
  else
    out += (neg ? " - " : " + ") + body;
}

}  // namespace

YPolynomial YPolynomial::one(int nvars) { return monomial(Exponent(nvars, 0)); }

YPolynomial YPolynomial::monomial(const Exponent& e, long long coeff) {
  YPolynomial p(static_cast<int>(e.size()));
  p.add_term(e, coeff);
  return p;
}

long long YPolynomial::coeff(const Exponent& e) const {
  auto it = terms_.find(e);
  return it == terms_.end() ? 0 : it->second;
}

void YPolynomial::add_term(const Exponent& e, long long c) {
  if (c == 0) return;
  if (nvars_ == 0) nvars_ = static_cast<int>(e.size());
  auto [it, fresh] = terms_.try_emplace(e, c);
  if (!fresh) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

YPolynomial YPolynomial::operator+(const YPolynomial& o) const {
  YPolynomial r = *this;
  r.nvars_ = std::max(nvars_, o.nvars_);
  for (const auto& [e, c] : o.terms_) r.add_term(e, c);
  return r;
}

YPolynomial YPolynomial::operator-(const YPolynomial& o) const {
  YPolynomial r = *this;
  r.nvars_ = std::max(nvars_, o.nvars_);
  for (const auto& [e, c] : o.terms_) r.add_term(e, -c);
  return r;
}

YPolynomial YPolynomial::operator*(const YPolynomial& o) const {
  YPolynomial r(std::max(nvars_, o.nvars_));
  for (const auto& [e1, c1] : terms_)
    for (const auto& [e2, c2] : o.terms_) r.add_term(add(e1, e2), c1 * c2);
  return r;
}

YPolynomial YPolynomial::pow(int k) const {
  YPolynomial r = one(nvars_);
  for (int i = 0; i < k; ++i) r = r * *this;
  return r;
}

YPolynomial YPolynomial::divide_exact(const YPolynomial& o) const {
  if (o.is_zero()) throw std::domain_error("division by the zero polynomial");
  // std::map orders exponents lexicographically, a monomial order.
  const auto& [lead_e, lead_c] = *o.terms_.rbegin();
  YPolynomial rem = *this, quot(std::max(nvars_, o.nvars_));
  while (!rem.is_zero()) {
    const auto [e, c] = *rem.terms_.rbegin();
    Exponent q = sub(e, lead_e);
    bool ok = c % lead_c == 0;
    for (int v : q) ok = ok && v >= 0;
    if (!ok) throw std::domain_error("polynomial division is not exact");
    YPolynomial t = monomial(q, c / lead_c);
    quot = quot + t;
    rem = rem - t * o;
  }
  return quot;
}

std::vector<std::pair<Exponent, long long>> YPolynomial::ordered_terms() const {
  std::vector<std::pair<Exponent, long long>> v(terms_.begin(), terms_.end());
  std::sort(v.begin(), v.end(),
            [](const auto& a, const auto& b) { return print_before(a.first, b.first); });
  return v;
}

std::string YPolynomial::to_string(const std::vector<std::string>& names,
                                   const std::string& var) const {
  std::string out;
  for (const auto& [e, c] : ordered_terms()) append_term(out, c, monomial_text(e, names, var));
  return out.empty() ? "0" : out;
}

LaurentCC LaurentCC::monomial(const Exponent& x, const Exponent& y, long long c) {
  LaurentCC r(static_cast<int>(x.size()));
  r.add_term(x, y, c);
  return r;
}

void LaurentCC::add_term(const Exponent& x, const Exponent& y, long long c) {
  if (c == 0) return;
  if (nvars_ == 0) nvars_ = static_cast<int>(x.size());
  auto [it, fresh] = terms_.try_emplace({x, y}, c);
  if (!fresh) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

LaurentCC LaurentCC::operator+(const LaurentCC& o) const {
  LaurentCC r = *this;
  r.nvars_ = std::max(nvars_, o.nvars_);
  for (const auto& [k, c] : o.terms_) r.add_term(k.first, k.second, c);
  return r;
}

LaurentCC LaurentCC::operator-(const LaurentCC& o) const {
  LaurentCC r = *this;
  r.nvars_ = std::max(nvars_, o.nvars_);
  for (const auto& [k, c] : o.terms_) r.add_term(k.first, k.second, -c);
  return r;
}

LaurentCC LaurentCC::operator*(const LaurentCC& o) const {
  LaurentCC r(std::max(nvars_, o.nvars_));
  for (const auto& [k1, c1] : terms_)
    for (const auto& [k2, c2] : o.terms_)
      r.add_term(add(k1.first, k2.first), add(k1.second, k2.second), c1 * c2);
  return r;
}

LaurentCC LaurentCC::shift_x(const Exponent& shift) const {
  LaurentCC r(nvars_);
  for (const auto& [k, c] : terms_) r.add_term(add(k.first, shift), k.second, c);
  return r;
}

YPolynomial LaurentCC::at_x_one() const {
  YPolynomial r(nvars_);
  for (const auto& [k, c] : terms_) r.add_term(k.second, c);
  return r;
}

std::vector<std::pair<LaurentCC::Key, long long>> LaurentCC::ordered_terms() const {
  std::vector<std::pair<Key, long long>> v(terms_.begin(), terms_.end());
  std::sort(v.begin(), v.end(), [](const auto& a, const auto& b) {
    if (a.first.second != b.first.second) return print_before(a.first.second, b.first.second);
    return a.first.first > b.first.first;
  });
  return v;
}

std::string LaurentCC::to_string(const std::vector<std::string>& names) const {
  std::string out;
  for (const auto& [k, c] : ordered_terms()) {
    std::string x = monomial_text(k.first, names, "x");
    std::string y = monomial_text(k.second, names, "y");
    std::string mono = y.empty() ? x : (x.empty() ? y : y + "*" + x);
    append_term(out, c, mono);
  }
  return out.empty() ? "0" : out;
}

}  // namespace gentle
