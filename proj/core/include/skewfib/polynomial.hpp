#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <utility>
#include <vector>

namespace skewfib {

// Sparse multivariate polynomial with exact integer coefficients. A monomial
// is a list of (variable, exponent) pairs with variables strictly ascending
// and exponents positive; the empty monomial is the constant term. Terms are
// kept in a map keyed lexicographically, which fixes a canonical ordering.
//
// The expansions in this project are tiny (a few thousand terms), so int64
// coefficients are ample.
class Poly {
 public:
  using Monomial = std::vector<std::pair<int, int>>;
  using TermMap = std::map<Monomial, std::int64_t>;

  Poly() = default;

  static Poly constant(std::int64_t c);
  static Poly variable(int var);
  static Poly monomial(Monomial m, std::int64_t coef);

  bool is_zero() const { return terms_.empty(); }
  const TermMap& terms() const { return terms_; }
  std::int64_t coefficient(const Monomial& m) const;

  Poly& operator+=(const Poly& other);
  Poly& operator-=(const Poly& other);
  Poly operator+(const Poly& other) const;
  Poly operator-(const Poly& other) const;
  Poly operator*(const Poly& other) const;
  Poly operator-() const;
  bool operator==(const Poly& other) const = default;

  std::string to_string() const;  // for diagnostics

 private:
  void add_term(const Monomial& m, std::int64_t coef);
  TermMap terms_;
};

Poly::Monomial mul_monomials(const Poly::Monomial& a, const Poly::Monomial& b);

}  // namespace skewfib
