#pragma once

#include <cstddef>
#include <initializer_list>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include <gmpxx.h>

namespace algebase {

/// Dense univariate polynomial with arbitrary-precision integer
/// coefficients. Index i holds the coefficient of X^i. The coefficient
/// vector is kept trimmed: the last stored entry is nonzero, and the zero
/// polynomial is the empty vector.
class IntPoly {
public:
  IntPoly() = default;
  explicit IntPoly(std::vector<mpz_class> coeffs) : c_(std::move(coeffs)) {
    trim();
  }
  IntPoly(std::initializer_list<long> coeffs) {
    c_.reserve(coeffs.size());
    for (long v : coeffs) c_.emplace_back(v);
    trim();
  }

  static IntPoly zero() { return IntPoly(); }
  static IntPoly one() { return constant(1); }
  static IntPoly constant(mpz_class v);
  /// coeff * X^k
  static IntPoly monomial(mpz_class coeff, std::size_t k);
  /// X^k - convenience for building composites.
  static IntPoly x_pow(std::size_t k) { return monomial(1, k); }

  bool is_zero() const { return c_.empty(); }
  /// Degree of the zero polynomial is -1, used as the "minus infinity"
  /// sentinel: every comparison must treat it as smaller than 0.
  int degree() const { return static_cast<int>(c_.size()) - 1; }
  std::size_t size() const { return c_.size(); }

  /// Coefficient of X^i; zero beyond the degree.
  const mpz_class& coeff(std::size_t i) const;
  const std::vector<mpz_class>& coeffs() const { return c_; }
  const mpz_class& leading() const;
  /// max |c_i| (0 for the zero polynomial).
  mpz_class height() const;
  bool is_monic() const { return !c_.empty() && c_.back() == 1; }

  mpz_class eval(const mpz_class& x) const;
  mpq_class eval(const mpq_class& x) const;
  /// den^degree * p(num/den), an exact integer. Used for exact sign tests
  /// at rational points without mpq overhead.
  mpz_class eval_scaled(const mpz_class& num, const mpz_class& den) const;
  /// Sign of p(x) for rational x, computed exactly.
  int sign_at(const mpq_class& x) const;

  IntPoly derivative() const;
  /// X^deg(p) * p(1/X). Errors on the zero polynomial; involutive when
  /// p(0) != 0.
  IntPoly reciprocal() const;
  /// p * X^k
  IntPoly shifted(std::size_t k) const;
  /// gcd of all coefficients, nonnegative; 0 for the zero polynomial.
  mpz_class content() const;
  /// p / content, sign-normalized to positive leading coefficient.
  IntPoly primitive_part() const;

  IntPoly operator-() const;
  IntPoly& operator+=(const IntPoly& o);
  IntPoly& operator-=(const IntPoly& o);
  friend IntPoly operator+(IntPoly a, const IntPoly& b) { return a += b; }
  friend IntPoly operator-(IntPoly a, const IntPoly& b) { return a -= b; }
  friend IntPoly operator*(const IntPoly& a, const IntPoly& b);
  friend IntPoly operator*(const IntPoly& a, const mpz_class& s);
  friend IntPoly operator*(const mpz_class& s, const IntPoly& a) { return a * s; }
  friend bool operator==(const IntPoly& a, const IntPoly& b) { return a.c_ == b.c_; }
  friend bool operator!=(const IntPoly& a, const IntPoly& b) { return !(a == b); }

  /// Canonical text form, highest power first, e.g. "x^3 - x - 1".
  std::string to_string() const;

  /// Coefficient list as decimal strings, low index first. Decimal strings
  /// keep values exact beyond the 64-bit range in any JSON consumer.
  std::vector<std::string> coeff_strings() const;
  static IntPoly from_coeff_strings(const std::vector<std::string>& strs);

private:
  void trim();
  std::vector<mpz_class> c_;
};

/// Parses "x^101 + x^11 + x - 1" style expressions: sums and differences of
/// terms `c`, `x`, `c*x^k`, `x^k` ("*" optional), whitespace-insensitive.
/// Throws ErrorKind::parse with position info; exponents above max_degree
/// are rejected.
IntPoly parse_poly(std::string_view text, std::size_t max_degree = 1000000);

/// Quotient and remainder of p by monic s (exact integer arithmetic).
std::pair<IntPoly, IntPoly> divmod_monic(const IntPoly& p, const IntPoly& s);
/// p mod s for monic s.
IntPoly mod_monic(const IntPoly& p, const IntPoly& s);

/// Exact division over the integers; nullopt when q does not divide p.
std::optional<IntPoly> try_div_exact(const IntPoly& p, const IntPoly& q);
/// Exact division; errors when the division is inexact.
IntPoly div_exact(const IntPoly& p, const IntPoly& q);

/// Primitive gcd over Q, normalized to integer primitive form with positive
/// leading coefficient. Errors when both inputs are zero.
IntPoly gcd_primitive(const IntPoly& p, const IntPoly& q);

/// Resultant with the standard sign convention, via the fraction-free
/// subresultant chain.
mpz_class resultant(const IntPoly& p, const IntPoly& q);

/// k-th cyclotomic polynomial, exact.
IntPoly cyclotomic(unsigned long k);

/// Euler totient, used to bound cyclotomic scans.
unsigned long euler_phi(unsigned long k);

} // namespace algebase
