#pragma once

#include <map>
#include <string>
#include <utility>
#include <vector>

namespace gentle {

using Exponent = std::vector<int>;

// Polynomial in y_1..y_n with integer coefficients; zero terms are never stored.
class YPolynomial {
 public:
  YPolynomial() = default;
  explicit YPolynomial(int nvars) : nvars_(nvars) {}
  static YPolynomial one(int nvars);
  static YPolynomial monomial(const Exponent& e, long long coeff = 1);

  int num_vars() const { return nvars_; }
  const std::map<Exponent, long long>& terms() const { return terms_; }
  long long coeff(const Exponent& e) const;
  void add_term(const Exponent& e, long long c);
  bool is_zero() const { return terms_.empty(); }

  YPolynomial operator+(const YPolynomial& o) const;
  YPolynomial operator-(const YPolynomial& o) const;
  YPolynomial operator*(const YPolynomial& o) const;
  YPolynomial pow(int k) const;
  bool operator==(const YPolynomial& o) const { return terms_ == o.terms_; }
  bool operator<(const YPolynomial& o) const { return terms_ < o.terms_; }

  // Exact division; throws std::domain_error if o does not divide *this.
  YPolynomial divide_exact(const YPolynomial& o) const;

  // Terms in printing order: total degree ascending, then exponent vectors
  // lexicographically descending.
  std::vector<std::pair<Exponent, long long>> ordered_terms() const;
  // "1 + y1 + 2*y1*y2^2"; names[i] labels variable i.
  std::string to_string(const std::vector<std::string>& names, const std::string& var = "y") const;

 private:
  int nvars_ = 0;
  std::map<Exponent, long long> terms_;
};

// Laurent polynomial in x with polynomial coefficients in y:
// keys (x exponent, y exponent).
class LaurentCC {
 public:
  using Key = std::pair<Exponent, Exponent>;
  LaurentCC() = default;
  explicit LaurentCC(int nvars) : nvars_(nvars) {}
  static LaurentCC monomial(const Exponent& x, const Exponent& y, long long c = 1);

  int num_vars() const { return nvars_; }
  const std::map<Key, long long>& terms() const { return terms_; }
  void add_term(const Exponent& x, const Exponent& y, long long c);

  LaurentCC operator+(const LaurentCC& o) const;
  LaurentCC operator-(const LaurentCC& o) const;
  LaurentCC operator*(const LaurentCC& o) const;
  bool operator==(const LaurentCC& o) const { return terms_ == o.terms_; }
  bool is_zero() const { return terms_.empty(); }

  // Multiply by x^shift.
  LaurentCC shift_x(const Exponent& shift) const;
  // Specialize x := 1.
  YPolynomial at_x_one() const;

  std::vector<std::pair<Key, long long>> ordered_terms() const;
  std::string to_string(const std::vector<std::string>& names) const;

 private:
  int nvars_ = 0;
  std::map<Key, long long> terms_;
};

Exponent add(const Exponent& a, const Exponent& b);
Exponent sub(const Exponent& a, const Exponent& b);
std::string exponent_string(const Exponent& e);

}  // namespace gentle
