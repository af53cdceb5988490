#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <optional>
#include <string>
#include <vector>

namespace ydn {

using Int = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

/// Exact element of a cyclotomic field Q(w_N).
///
/// Coordinates live in the power basis 1, w, ..., w^{phi(N)-1} modulo the N-th
/// cyclotomic polynomial. The conductor is kept minimal: after every operation
/// the element is pushed down into the smallest cyclotomic field containing
/// it, so rationals always have conductor 1 and equality is plain coordinate
/// comparison. No floating point anywhere.
class Cyclotomic {
public:
  Cyclotomic() : n_(1), c_(1, Rational(0)) {}
  Cyclotomic(long v) : n_(1), c_(1, Rational(v)) {}
  Cyclotomic(const Int& v) : n_(1), c_(1, Rational(v)) {}
  Cyclotomic(const Rational& v) : n_(1), c_(1, v) {}

  /// w_n^k, reduced to canonical form (conductor of a primitive m-th root is
  /// m itself unless m = 1, 2 or m == 2 mod 4).
  static Cyclotomic root_of_unity(long n, long k);

  long conductor() const { return n_; }
  const std::vector<Rational>& coords() const { return c_; }

  bool is_zero() const;
  bool is_one() const;
  bool is_rational() const { return n_ == 1; }
  std::optional<Rational> as_rational() const;

  Cyclotomic operator-() const;
  Cyclotomic& operator+=(const Cyclotomic& o);
  Cyclotomic& operator-=(const Cyclotomic& o);
  Cyclotomic& operator*=(const Cyclotomic& o);

  friend Cyclotomic operator+(Cyclotomic a, const Cyclotomic& b) { return a += b; }
  friend Cyclotomic operator-(Cyclotomic a, const Cyclotomic& b) { return a -= b; }
  friend Cyclotomic operator*(Cyclotomic a, const Cyclotomic& b) { return a *= b; }
  friend Cyclotomic operator/(const Cyclotomic& a, const Cyclotomic& b) {
    return a * b.inverse();
  }

  /// Multiplicative inverse; throws std::domain_error on zero.
  Cyclotomic inverse() const;
  Cyclotomic pow(long e) const;

  bool operator==(const Cyclotomic& o) const { return n_ == o.n_ && c_ == o.c_; }
  bool operator!=(const Cyclotomic& o) const { return !(*this == o); }

  /// Text form: "w(N)^k" for basis monomials, rationals as "a/b", linear
  /// combinations as sums. Used in the JSON output of braiding matrices.
  std::string to_string() const;

private:
  Cyclotomic(long n, std::vector<Rational> c) : n_(n), c_(std::move(c)) {}
  void canonicalize();

  long n_;                   // conductor, minimal
  std::vector<Rational> c_;  // phi(n_) coordinates in the power basis
};

Cyclotomic root_of_unity(long n, long k);

/// Least k >= 1 with x^k = 1; nullopt when x is not a root of unity.
/// The search is bounded by lcm(2, conductor).
std::optional<long> order_of(const Cyclotomic& x);

/// Monic integer coefficient vector of the N-th cyclotomic polynomial,
/// lowest degree first.
std::vector<Int> cyclotomic_polynomial(long n);

long euler_phi(long n);

}  // namespace ydn
