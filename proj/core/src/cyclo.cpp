#include "ydn/cyclo.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace ydn {

namespace {

// dense polynomials over Q, lowest degree first

void poly_trim(std::vector<Rational>& p) {
  while (!p.empty() && p.back() == 0) p.pop_back();
}

std::vector<Rational> poly_mul(const std::vector<Rational>& a,
                               const std::vector<Rational>& b) {
  if (a.empty() || b.empty()) return {};
  std::vector<Rational> r(a.size() + b.size() - 1, Rational(0));
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] == 0) continue;
    for (std::size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
  }
  poly_trim(r);
  return r;
}

// remainder of a modulo monic m
std::vector<Rational> poly_mod(std::vector<Rational> a,
                               const std::vector<Rational>& m) {
  poly_trim(a);
  const std::size_t dm = m.size() - 1;
  while (a.size() > dm) {
    Rational lead = a.back();
    std::size_t shift = a.size() - 1 - dm;
    if (lead != 0) {
      for (std::size_t i = 0; i < dm; ++i) a[shift + i] -= lead * m[i];
    }
    a.pop_back();
    poly_trim(a);
  }
  return a;
}

std::vector<Rational> poly_divexact(const std::vector<Rational>& a,
                                    const std::vector<Rational>& b) {
  // exact division, used for the cyclotomic polynomial recursion
  std::vector<Rational> rem = a, q;
  poly_trim(rem);
  q.assign(rem.size() >= b.size() ? rem.size() - b.size() + 1 : 0, Rational(0));
  while (rem.size() >= b.size() && !rem.empty()) {
    Rational f = rem.back() / b.back();
    std::size_t shift = rem.size() - b.size();
    q[shift] = f;
    for (std::size_t i = 0; i < b.size(); ++i) rem[shift + i] -= f * b[i];
    poly_trim(rem);
  }
  if (!rem.empty()) throw std::logic_error("poly_divexact: nonzero remainder");
  poly_trim(q);
  return q;
}

std::vector<long> divisors_of(long n) {
  std::vector<long> d;
  for (long i = 1; i * i <= n; ++i) {
    if (n % i == 0) {
      d.push_back(i);
      if (i != n / i) d.push_back(n / i);
    }
  }
  std::sort(d.begin(), d.end());
  return d;
}

// Phi_n over Q; divisors of n are filled bottom-up so each step only needs
// entries already in the cache
const std::vector<Rational>& cyclo_poly(long n) {
  static std::map<long, std::vector<Rational>> cache{{1, {Rational(-1), Rational(1)}}};
  static std::mutex mu;
  std::lock_guard<std::mutex> lock(mu);
  auto it = cache.find(n);
  if (it != cache.end()) return it->second;
  for (long d : divisors_of(n)) {
    if (cache.count(d)) continue;
    std::vector<Rational> num(static_cast<std::size_t>(d) + 1, Rational(0));
    num[0] = -1;
    num.back() = 1;
    std::vector<Rational> den{Rational(1)};
    for (long e : divisors_of(d)) {
      if (e < d) den = poly_mul(den, cache.at(e));
    }
    cache.emplace(d, poly_divexact(num, den));
  }
  return cache.at(n);
}

// tiny exact linear solve: A (rows x cols) * x = b, returns x if consistent
std::optional<std::vector<Rational>> solve_rational(
    std::vector<std::vector<Rational>> a, std::vector<Rational> b) {
  const std::size_t rows = a.size();
  const std::size_t cols = rows ? a[0].size() : 0;
  std::vector<std::size_t> pivot_cols;
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    std::size_t p = r;
    while (p < rows && a[p][c] == 0) ++p;
    if (p == rows) continue;
    std::swap(a[p], a[r]);
    std::swap(b[p], b[r]);
    Rational inv = a[r][c];
    for (std::size_t j = c; j < cols; ++j) a[r][j] /= inv;
    b[r] /= inv;
    for (std::size_t i = 0; i < rows; ++i) {
      if (i == r || a[i][c] == 0) continue;
      Rational f = a[i][c];
      for (std::size_t j = c; j < cols; ++j) a[i][j] -= f * a[r][j];
      b[i] -= f * b[r];
    }
    pivot_cols.push_back(c);
    ++r;
  }
  for (std::size_t i = r; i < rows; ++i) {
    if (b[i] != 0) return std::nullopt;
  }
  std::vector<Rational> x(cols, Rational(0));
  for (std::size_t i = 0; i < pivot_cols.size(); ++i) x[pivot_cols[i]] = b[i];
  return x;
}

}  // namespace

long euler_phi(long n) {
  long result = n, m = n;
  for (long p = 2; p * p <= m; ++p) {
    if (m % p == 0) {
      while (m % p == 0) m /= p;
      result -= result / p;
    }
  }
  if (m > 1) result -= result / m;
  return result;
}

std::vector<Int> cyclotomic_polynomial(long n) {
  if (n < 1) throw std::invalid_argument("cyclotomic_polynomial: n must be positive");
  const auto& q = cyclo_poly(n);
  std::vector<Int> out;
  out.reserve(q.size());
  for (const auto& c : q) {
    if (denominator(c) != 1) throw std::logic_error("cyclotomic polynomial not integral");
    out.push_back(numerator(c));
  }
  return out;
}

Cyclotomic Cyclotomic::root_of_unity(long n, long k) {
  if (n < 1) throw std::invalid_argument("root_of_unity: n must be positive");
  k %= n;
  if (k < 0) k += n;
  long g = std::gcd(k == 0 ? n : k, n);
  long m = n / g;  // primitive m-th root
  long e = k / g;
  // peel the conductor anomaly m == 2 (mod 4): w_{2u}^e = -w_u^{(u+1)/2 * e}
  if (m % 4 == 2) {
    long u = m / 2;  // odd
    long e2 = (((u + 1) / 2) % u) * (e % u) % u;
    Cyclotomic r = root_of_unity(u, e2);
    return -r;
  }
  if (m == 1) return Cyclotomic(1);
  if (m == 2) return Cyclotomic(-1);
  std::vector<Rational> c(static_cast<std::size_t>(e) + 1, Rational(0));
  c[static_cast<std::size_t>(e)] = 1;
  auto red = poly_mod(std::move(c), cyclo_poly(m));
  red.resize(static_cast<std::size_t>(euler_phi(m)), Rational(0));
  Cyclotomic out(m, std::move(red));
  out.canonicalize();
  return out;
}

bool Cyclotomic::is_zero() const {
  return std::all_of(c_.begin(), c_.end(), [](const Rational& r) { return r == 0; });
}

bool Cyclotomic::is_one() const { return n_ == 1 && c_[0] == 1; }

std::optional<Rational> Cyclotomic::as_rational() const {
  if (n_ == 1) return c_[0];
  return std::nullopt;
}

Cyclotomic Cyclotomic::operator-() const {
  Cyclotomic r = *this;
  for (auto& x : r.c_) x = -x;
  return r;
}

namespace {
// coordinates of x lifted from conductor n into conductor m (n | m)
std::vector<Rational> lift_coords(const std::vector<Rational>& c, long n, long m) {
  if (n == m) return c;
  long step = m / n;
  std::vector<Rational> p(c.size() * static_cast<std::size_t>(step) + 1, Rational(0));
  for (std::size_t i = 0; i < c.size(); ++i) p[i * static_cast<std::size_t>(step)] = c[i];
  auto red = poly_mod(std::move(p), cyclo_poly(m));
  red.resize(static_cast<std::size_t>(euler_phi(m)), Rational(0));
  return red;
}
}  // namespace

Cyclotomic& Cyclotomic::operator+=(const Cyclotomic& o) {
  long m = std::lcm(n_, o.n_);
  auto a = lift_coords(c_, n_, m);
  auto b = lift_coords(o.c_, o.n_, m);
  for (std::size_t i = 0; i < a.size(); ++i) a[i] += b[i];
  n_ = m;
  c_ = std::move(a);
  canonicalize();
  return *this;
}

Cyclotomic& Cyclotomic::operator-=(const Cyclotomic& o) {
  *this += -o;
  return *this;
}

Cyclotomic& Cyclotomic::operator*=(const Cyclotomic& o) {
  long m = std::lcm(n_, o.n_);
  auto a = lift_coords(c_, n_, m);
  auto b = lift_coords(o.c_, o.n_, m);
  auto prod = poly_mod(poly_mul(a, b), cyclo_poly(m));
  prod.resize(static_cast<std::size_t>(euler_phi(m)), Rational(0));
  n_ = m;
  c_ = std::move(prod);
  canonicalize();
  return *this;
}

Cyclotomic Cyclotomic::inverse() const {
  if (is_zero()) throw std::domain_error("division by zero in Q(w_N)");
  if (n_ == 1) return Cyclotomic(Rational(1) / c_[0]);
  // extended Euclid in Q[x]: u*p + v*Phi = 1, inverse = u mod Phi
  std::vector<Rational> r0 = cyclo_poly(n_);
  std::vector<Rational> r1 = c_;
  poly_trim(r1);
  std::vector<Rational> s0{}, s1{Rational(1)};  // coefficients of p
  while (true) {
    poly_trim(r1);
    if (r1.empty()) throw std::logic_error("cyclotomic inverse: unexpected gcd");
    if (r1.size() == 1) break;
    // r0 = q*r1 + r2
    std::vector<Rational> rem = r0, q(rem.size(), Rational(0));
    while (rem.size() >= r1.size() && !rem.empty()) {
      Rational f = rem.back() / r1.back();
      std::size_t shift = rem.size() - r1.size();
      q[shift] += f;
      for (std::size_t i = 0; i < r1.size(); ++i) rem[shift + i] -= f * r1[i];
      poly_trim(rem);
    }
    poly_trim(q);
    // s2 = s0 - q*s1
    auto qs1 = poly_mul(q, s1);
    std::vector<Rational> s2 = s0;
    if (s2.size() < qs1.size()) s2.resize(qs1.size(), Rational(0));
    for (std::size_t i = 0; i < qs1.size(); ++i) s2[i] -= qs1[i];
    poly_trim(s2);
    r0 = std::move(r1);
    r1 = std::move(rem);
    s0 = std::move(s1);
    s1 = std::move(s2);
  }
  Rational unit = r1[0];
  for (auto& x : s1) x /= unit;
  auto red = poly_mod(std::move(s1), cyclo_poly(n_));
  red.resize(static_cast<std::size_t>(euler_phi(n_)), Rational(0));
  Cyclotomic out(n_, std::move(red));
  out.canonicalize();
  return out;
}

Cyclotomic Cyclotomic::pow(long e) const {
  if (e < 0) return inverse().pow(-e);
  Cyclotomic base = *this, acc(1);
  while (e > 0) {
    if (e & 1) acc *= base;
    base *= base;
    e >>= 1;
  }
  return acc;
}

void Cyclotomic::canonicalize() {
  if (n_ == 1) return;
  if (is_zero()) {
    n_ = 1;
    c_.assign(1, Rational(0));
    return;
  }
  // fast path: rational elements have support {1} in the power basis
  bool tail_zero = true;
  for (std::size_t i = 1; i < c_.size(); ++i)
    if (c_[i] != 0) tail_zero = false;
  if (tail_zero) {
    Rational v = c_[0];
    n_ = 1;
    c_.assign(1, v);
    return;
  }
  // scan proper subfields Q(w_d), smallest first
  auto divs = divisors_of(n_);
  std::sort(divs.begin(), divs.end(), [](long a, long b) {
    long pa = euler_phi(a), pb = euler_phi(b);
    return pa != pb ? pa < pb : a < b;
  });
  for (long d : divs) {
    if (d == n_ || d == 1 || d % 4 == 2) continue;
    long phi_d = euler_phi(d);
    if (phi_d >= euler_phi(n_)) continue;
    // columns: coordinates of w_n^{i * n/d} for i < phi(d)
    std::vector<std::vector<Rational>> cols;
    for (long i = 0; i < phi_d; ++i) {
      std::vector<Rational> mono(static_cast<std::size_t>(i * (n_ / d)) + 1, Rational(0));
      mono.back() = 1;
      auto red = poly_mod(std::move(mono), cyclo_poly(n_));
      red.resize(static_cast<std::size_t>(euler_phi(n_)), Rational(0));
      cols.push_back(std::move(red));
    }
    std::vector<std::vector<Rational>> a(c_.size(), std::vector<Rational>(cols.size()));
    for (std::size_t i = 0; i < c_.size(); ++i)
      for (std::size_t j = 0; j < cols.size(); ++j) a[i][j] = cols[j][i];
    auto sol = solve_rational(std::move(a), c_);
    if (sol) {
      n_ = d;
      c_ = std::move(*sol);
      c_.resize(static_cast<std::size_t>(phi_d), Rational(0));
      return;
    }
  }
}

std::string Cyclotomic::to_string() const {
  if (is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (std::size_t i = 0; i < c_.size(); ++i) {
    if (c_[i] == 0) continue;
    if (!first) os << " + ";
    first = false;
    if (i == 0) {
      os << c_[0];
      continue;
    }
    std::string mono = "w(" + std::to_string(n_) + ")";
    if (i > 1) mono += "^" + std::to_string(i);
    if (c_[i] == 1) {
      os << mono;
    } else if (c_[i] == -1) {
      os << "-" << mono;
    } else {
      os << c_[i] << "*" << mono;
    }
  }
  return os.str();
}

Cyclotomic root_of_unity(long n, long k) { return Cyclotomic::root_of_unity(n, k); }

std::optional<long> order_of(const Cyclotomic& x) {
  if (x.is_zero()) return std::nullopt;
  long bound = std::lcm(2L, x.conductor());
  Cyclotomic p(1);
  for (long k = 1; k <= bound; ++k) {
    p *= x;
    if (p.is_one()) return k;
  }
  return std::nullopt;
}

}  // namespace ydn
