#pragma once

#include <gmpxx.h>

#include <map>
#include <string>
#include <utility>
#include <vector>

namespace mtutte {

// C(n, k) with C(n, k) = 0 whenever k < 0 or n < k (including n < 0).
// This convention makes the coefficient sums total without case splits.
mpz_class binomial(long n, long k);

enum class Var { x, y };

// Univariate polynomial with exact integer coefficients, stored densely by
// degree. Canonical form: no trailing zero coefficients, so the zero
// polynomial has an empty coefficient vector and degree -1.
class UniPoly {
 public:
  UniPoly() = default;
  explicit UniPoly(std::vector<mpz_class> coeffs) : c_(std::move(coeffs)) { trim(); }

  static UniPoly constant(mpz_class c);
  static UniPoly monomial(int k, mpz_class c = 1);

  bool is_zero() const { return c_.empty(); }
  int degree() const { return static_cast<int>(c_.size()) - 1; }
  mpz_class coeff(int k) const;
  const std::vector<mpz_class>& coeffs() const { return c_; }

  UniPoly& operator+=(const UniPoly& o);
  friend UniPoly operator+(UniPoly a, const UniPoly& b) { return a += b; }
  friend UniPoly operator*(const UniPoly& a, const UniPoly& b);
  UniPoly scaled(const mpz_class& c) const;
  UniPoly negated() const { return scaled(-1); }

  mpq_class eval(const mpq_class& v) const;
  std::string str(const std::string& var = "x") const;

  bool operator==(const UniPoly&) const = default;

 private:
  void trim();
  std::vector<mpz_class> c_;
};

// Multiply by (-1)^s.
UniPoly negate_by_parity(const UniPoly& q, long s);

// Exact composition q(1 - x), evaluated by Horner's rule.
UniPoly substitute_one_minus(const UniPoly& q);

// Bivariate polynomial with exact integer coefficients, stored as a sparse
// term map keyed by (x-degree, y-degree). Canonical form: no stored
// coefficient is zero. The map's lexicographic (i, j) order is the
// serialization order of the JSON form.
class BivarPoly {
 public:
  using Key = std::pair<int, int>;
  using TermMap = std::map<Key, mpz_class>;

  BivarPoly() = default;

  static BivarPoly constant(mpz_class c);
  static BivarPoly monomial(int i, int j, mpz_class c = 1);
  // Exact expansion of (var + base_shift)^exponent.
  static BivarPoly binomial_power(long base_shift, int exponent, Var var);

  bool is_zero() const { return terms_.empty(); }
  mpz_class coeff(int i, int j) const;
  const TermMap& terms() const { return terms_; }
  int x_degree() const;  // -1 for the zero polynomial
  int y_degree() const;

  // Canonicalizing accumulate: drops the term if it cancels to zero.
  void add_term(int i, int j, const mpz_class& c);

  BivarPoly& operator+=(const BivarPoly& o);
  friend BivarPoly operator+(BivarPoly a, const BivarPoly& b) { return a += b; }
  friend BivarPoly operator*(const BivarPoly& a, const BivarPoly& b);
  BivarPoly scaled(const mpz_class& c) const;

  // Exchange the roles of x and y.
  BivarPoly swapped() const;

  // Slices p(0, y) and p(x, 0) as univariate polynomials.
  UniPoly at_x_zero() const;
  UniPoly at_y_zero() const;

  mpq_class eval(const mpq_class& x0, const mpq_class& y0) const;

  // Canonical text form, e.g. "x^2 + x + y": terms joined by " + ", unit
  // coefficients elided on nonconstant terms, lexicographically descending
  // by (x-degree, y-degree).
  std::string str() const;

  bool operator==(const BivarPoly&) const = default;

 private:
  TermMap terms_;
};

// p(x) * q(y) as a bivariate polynomial.
BivarPoly outer_product(const UniPoly& in_x, const UniPoly& in_y);
BivarPoly from_x_poly(const UniPoly& p);
BivarPoly from_y_poly(const UniPoly& p);

}  // namespace mtutte
