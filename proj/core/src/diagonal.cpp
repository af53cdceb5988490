#include "ydn/diagonal.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace ydn {

DiagonalBraiding DiagonalBraiding::from(std::vector<std::vector<Cyclotomic>> q) {
  for (const auto& row : q) {
    if (row.size() != q.size()) throw std::invalid_argument("q matrix not square");
    for (const auto& x : row) {
      if (x.is_zero()) throw std::invalid_argument("q matrix entries must be nonzero");
    }
  }
  return DiagonalBraiding{std::move(q)};
}

DiagonalBraiding DiagonalBraiding::principal_submatrix(
    const std::vector<std::size_t>& idx) const {
  std::vector<std::vector<Cyclotomic>> sub(idx.size(), std::vector<Cyclotomic>(idx.size()));
  for (std::size_t i = 0; i < idx.size(); ++i)
    for (std::size_t j = 0; j < idx.size(); ++j) sub[i][j] = q[idx[i]][idx[j]];
  return DiagonalBraiding{std::move(sub)};
}

GCM::GCM(std::vector<std::vector<long>> a) : a_(std::move(a)) {
  for (std::size_t i = 0; i < a_.size(); ++i) {
    if (a_[i].size() != a_.size()) throw std::invalid_argument("GCM not square");
    if (a_[i][i] != 2) throw std::invalid_argument("GCM diagonal must be 2");
    for (std::size_t j = 0; j < a_.size(); ++j) {
      if (i == j) continue;
      if (a_[i][j] > 0) throw std::invalid_argument("GCM off-diagonal must be <= 0");
      if ((a_[i][j] == 0) != (a_[j][i] == 0))
        throw std::invalid_argument("GCM zero pattern must be symmetric");
    }
  }
}

GCM GCM::principal_submatrix(const std::vector<std::size_t>& idx) const {
  std::vector<std::vector<long>> sub(idx.size(), std::vector<long>(idx.size()));
  for (std::size_t i = 0; i < idx.size(); ++i)
    for (std::size_t j = 0; j < idx.size(); ++j) sub[i][j] = a_[idx[i]][idx[j]];
  return GCM(std::move(sub));
}

std::variant<GCM, CartanFailure> cartan_exponents(const DiagonalBraiding& d) {
  const std::size_t th = d.rank();
  std::vector<long> ord(th);
  for (std::size_t i = 0; i < th; ++i) {
    if (d.q[i][i].is_one())
      return CartanFailure{CartanFailure::Kind::QiiOne, i, 0};
    auto o = order_of(d.q[i][i]);
    if (!o) return CartanFailure{CartanFailure::Kind::QiiNotRoot, i, 0};
    ord[i] = *o;
  }
  std::vector<std::vector<long>> a(th, std::vector<long>(th, 0));
  for (std::size_t i = 0; i < th; ++i) a[i][i] = 2;
  for (std::size_t i = 0; i < th; ++i) {
    Cyclotomic inv = d.q[i][i].inverse();
    for (std::size_t j = 0; j < th; ++j) {
      if (i == j) continue;
      Cyclotomic target = d.q[i][j] * d.q[j][i];
      Cyclotomic cur(1);
      bool found = false;
      for (long t = 0; t < ord[i]; ++t) {
        if (cur == target) {
          a[i][j] = -t;
          found = true;
          break;
        }
        cur *= inv;
      }
      if (!found) return CartanFailure{CartanFailure::Kind::NotCartan, i, j};
    }
  }
  return GCM(std::move(a));
}

std::vector<std::vector<std::size_t>> components(const GCM& a) {
  const std::size_t th = a.rank();
  std::vector<bool> seen(th, false);
  std::vector<std::vector<std::size_t>> out;
  for (std::size_t start = 0; start < th; ++start) {
    if (seen[start]) continue;
    std::vector<std::size_t> comp, stack{start};
    seen[start] = true;
    while (!stack.empty()) {
      std::size_t v = stack.back();
      stack.pop_back();
      comp.push_back(v);
      for (std::size_t w = 0; w < th; ++w) {
        if (!seen[w] && a.at(v, w) != 0) {
          seen[w] = true;
          stack.push_back(w);
        }
      }
    }
    std::sort(comp.begin(), comp.end());
    out.push_back(std::move(comp));
  }
  return out;
}

namespace {

// positive rational d_i with d_i a_ij = d_j a_ji, or nullopt
std::optional<std::vector<Rational>> symmetrizer(const GCM& a) {
  const std::size_t n = a.rank();
  std::vector<Rational> d(n, Rational(0));
  std::vector<bool> done(n, false);
  for (std::size_t start = 0; start < n; ++start) {
    if (done[start]) continue;
    d[start] = 1;
    done[start] = true;
    std::vector<std::size_t> stack{start};
    while (!stack.empty()) {
      std::size_t v = stack.back();
      stack.pop_back();
      for (std::size_t w = 0; w < n; ++w) {
        if (v == w || a.at(v, w) == 0) continue;
        Rational expected = d[v] * a.at(v, w) / a.at(w, v);
        if (!done[w]) {
          d[w] = expected;
          done[w] = true;
          stack.push_back(w);
        } else if (d[w] != expected) {
          return std::nullopt;
        }
      }
    }
  }
  return d;
}

std::vector<std::vector<Rational>> symmetrized(const GCM& a,
                                               const std::vector<Rational>& d) {
  const std::size_t n = a.rank();
  std::vector<std::vector<Rational>> b(n, std::vector<Rational>(n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) b[i][j] = d[i] * a.at(i, j);
  return b;
}

Rational det_rational(std::vector<std::vector<Rational>> b) {
  const std::size_t n = b.size();
  Rational det(1);
  for (std::size_t k = 0; k < n; ++k) {
    std::size_t p = k;
    while (p < n && b[p][k] == 0) ++p;
    if (p == n) return Rational(0);
    if (p != k) {
      std::swap(b[p], b[k]);
      det = -det;
    }
    det *= b[k][k];
    for (std::size_t i = k + 1; i < n; ++i) {
      if (b[i][k] == 0) continue;
      Rational f = b[i][k] / b[k][k];
      for (std::size_t j = k; j < n; ++j) b[i][j] -= f * b[k][j];
    }
  }
  return det;
}

std::vector<std::vector<Rational>> leading_block(
    const std::vector<std::vector<Rational>>& b, std::size_t k) {
  std::vector<std::vector<Rational>> sub(k, std::vector<Rational>(k));
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t j = 0; j < k; ++j) sub[i][j] = b[i][j];
  return sub;
}

// rank of a symmetric rational matrix
std::size_t rank_rational(std::vector<std::vector<Rational>> b) {
  const std::size_t n = b.size();
  std::size_t r = 0;
  for (std::size_t c = 0; c < n && r < n; ++c) {
    std::size_t p = r;
    while (p < n && b[p][c] == 0) ++p;
    if (p == n) continue;
    std::swap(b[p], b[r]);
    for (std::size_t i = 0; i < n; ++i) {
      if (i == r || b[i][c] == 0) continue;
      Rational f = b[i][c] / b[r][c];
      for (std::size_t j = 0; j < n; ++j) b[i][j] -= f * b[r][j];
    }
    ++r;
  }
  return r;
}

// positive semidefiniteness of a symmetric matrix via Schur complements,
// pivoting on positive diagonal entries only
bool is_psd(std::vector<std::vector<Rational>> b) {
  std::vector<std::size_t> active(b.size());
  std::iota(active.begin(), active.end(), 0);
  while (!active.empty()) {
    std::size_t pivot_pos = active.size();
    for (std::size_t ii = 0; ii < active.size(); ++ii) {
      std::size_t i = active[ii];
      if (b[i][i] < 0) return false;
      if (b[i][i] > 0 && pivot_pos == active.size()) pivot_pos = ii;
    }
    if (pivot_pos == active.size()) {
      // all remaining diagonal entries vanish: PSD iff the block is zero
      for (std::size_t i : active)
        for (std::size_t j : active)
          if (b[i][j] != 0) return false;
      return true;
    }
    std::size_t p = active[pivot_pos];
    for (std::size_t i : active) {
      if (i == p || b[i][p] == 0) continue;
      Rational f = b[i][p] / b[p][p];
      for (std::size_t j : active) b[i][j] -= f * b[p][j];
    }
    active.erase(active.begin() + static_cast<std::ptrdiff_t>(pivot_pos));
  }
  return true;
}

// Dynkin names for components already known to be of finite type
std::string finite_name(const GCM& a) {
  const std::size_t n = a.rank();
  if (n == 1) return "A1";
  std::vector<std::vector<std::size_t>> adj(n);
  long max_weight = 0;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) {
      long w = a.at(i, j) * a.at(j, i);
      if (w > 0) {
        adj[i].push_back(j);
        adj[j].push_back(i);
        max_weight = std::max(max_weight, w);
      }
    }
  if (max_weight == 3) return "G2";
  if (max_weight == 2) {
    if (n == 2) return "B2";
    // locate the double edge; F4 has it in the middle of a 4-path
    std::size_t u = 0, v = 0;
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j : adj[i])
        if (i < j && a.at(i, j) * a.at(j, i) == 2) {
          u = i;
          v = j;
        }
    bool u_end = adj[u].size() == 1, v_end = adj[v].size() == 1;
    if (!u_end && !v_end) return "F4";
    // path with the double edge at an end: B (short end root) or C (long)
    auto d = symmetrizer(a);
    std::size_t end = u_end ? u : v;
    Rational dmin = (*d)[0];
    for (const auto& x : *d) dmin = std::min(dmin, x);
    return ((*d)[end] == dmin ? "B" : "C") + std::to_string(n);
  }
  // simply laced
  std::size_t branch = n;
  for (std::size_t i = 0; i < n; ++i) {
    if (adj[i].size() > 2) branch = i;
  }
  if (branch == n) return "A" + std::to_string(n);
  // arm lengths from the branch vertex
  std::vector<std::size_t> arms;
  for (std::size_t start : adj[branch]) {
    std::size_t len = 1, prev = branch, cur = start;
    while (adj[cur].size() == 2) {
      std::size_t next = adj[cur][0] == prev ? adj[cur][1] : adj[cur][0];
      prev = cur;
      cur = next;
      ++len;
    }
    arms.push_back(len);
  }
  std::sort(arms.begin(), arms.end());
  if (arms == std::vector<std::size_t>{1, 1, n - 3} || (n == 4 && arms == std::vector<std::size_t>{1, 1, 1}))
    return "D" + std::to_string(n);
  if (arms == std::vector<std::size_t>{1, 2, 2}) return "E6";
  if (arms == std::vector<std::size_t>{1, 2, 3}) return "E7";
  if (arms == std::vector<std::size_t>{1, 2, 4}) return "E8";
  return "finite";
}

// affine names where recognized, otherwise plain "affine"
std::string affine_name(const GCM& a) {
  const std::size_t n = a.rank();
  if (n == 2 && a.at(0, 1) == -2 && a.at(1, 0) == -2) return "A1^(1)";
  bool cycle = true;
  for (std::size_t i = 0; i < n; ++i) {
    std::size_t deg = 0;
    for (std::size_t j = 0; j < n; ++j) {
      if (i == j) continue;
      if (a.at(i, j) != 0) {
        if (a.at(i, j) != -1 || a.at(j, i) != -1) cycle = false;
        ++deg;
      }
    }
    if (deg != 2) cycle = false;
  }
  if (cycle && n >= 3) return "A" + std::to_string(n - 1) + "^(1)";
  return "affine";
}

}  // namespace

TypeVerdict is_finite_type(const GCM& a) {
  TypeVerdict out{true, {}};
  for (const auto& comp : components(a)) {
    GCM sub = a.principal_submatrix(comp);
    ComponentReport rep{comp, false, "indefinite"};
    auto d = symmetrizer(sub);
    if (d) {
      auto b = symmetrized(sub, *d);
      // Sylvester: positive definite iff every leading principal minor is > 0
      bool pd = true;
      for (std::size_t k = 1; k <= sub.rank(); ++k) {
        if (!(det_rational(leading_block(b, k)) > 0)) {
          pd = false;
          break;
        }
      }
      if (pd) {
        rep.finite = true;
        rep.label = finite_name(sub);
      } else if (is_psd(b) && rank_rational(b) + 1 == sub.rank()) {
        rep.label = affine_name(sub);
      }
    }
    if (!rep.finite) out.finite = false;
    out.components.push_back(std::move(rep));
  }
  return out;
}

DiagonalAnalysis verdict_from_diagonal(const DiagonalBraiding& d) {
  auto res = cartan_exponents(d);
  if (std::holds_alternative<CartanFailure>(res)) {
    auto f = std::get<CartanFailure>(res);
    switch (f.kind) {
      case CartanFailure::Kind::QiiOne:
        // c(v (x) v) = v (x) v on the offending vector
        return {DiagonalVerdict::Infinite, "qii-one", std::nullopt, std::nullopt};
      case CartanFailure::Kind::QiiNotRoot:
        return {DiagonalVerdict::Inapplicable, "qii-not-root", std::nullopt, std::nullopt};
      case CartanFailure::Kind::NotCartan:
        return {DiagonalVerdict::Inapplicable, "not-cartan", std::nullopt, std::nullopt};
    }
  }
  GCM gcm = std::get<GCM>(res);
  TypeVerdict type = is_finite_type(gcm);
  if (type.finite)
    return {DiagonalVerdict::FinitePossible, "cartan-finite", gcm, type};
  return {DiagonalVerdict::Infinite, "cartan-not-finite", gcm, type};
}

std::string dynkin_report(const GCM& a, const TypeVerdict& t) {
  std::ostringstream os;
  for (const auto& comp : t.components) {
    os << "component {";
    for (std::size_t i = 0; i < comp.vertices.size(); ++i) {
      if (i) os << ' ';
      os << comp.vertices[i] + 1;
    }
    os << "} " << comp.label << (comp.finite ? " (finite)" : " (not finite)") << "\n";
    for (std::size_t x = 0; x < comp.vertices.size(); ++x) {
      for (std::size_t y = x + 1; y < comp.vertices.size(); ++y) {
        std::size_t i = comp.vertices[x], j = comp.vertices[y];
        long w = a.at(i, j) * a.at(j, i);
        if (w > 0) {
          os << "  " << i + 1 << " --" << w << "-- " << j + 1 << "\n";
        }
      }
    }
  }
  return os.str();
}

}  // namespace ydn
