#include "ydn/linalg.hpp"

#include <stdexcept>

namespace ydn {

CycMatrix CycMatrix::identity(std::size_t n) {
  CycMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m.at(i, i) = Cyclotomic(1);
  return m;
}

CycMatrix CycMatrix::from_rows(const std::vector<std::vector<Cyclotomic>>& rows) {
  if (rows.empty()) return {};
  CycMatrix m(rows.size(), rows[0].size());
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (rows[i].size() != m.cols_) throw std::invalid_argument("ragged rows");
    for (std::size_t j = 0; j < m.cols_; ++j) m.at(i, j) = rows[i][j];
  }
  return m;
}

CycMatrix CycMatrix::operator*(const CycMatrix& o) const {
  if (cols_ != o.rows_) throw std::invalid_argument("matrix shape mismatch");
  CycMatrix r(rows_, o.cols_);
  for (std::size_t i = 0; i < rows_; ++i) {
    for (std::size_t k = 0; k < cols_; ++k) {
      const Cyclotomic& x = at(i, k);
      if (x.is_zero()) continue;
      for (std::size_t j = 0; j < o.cols_; ++j) {
        if (o.at(k, j).is_zero()) continue;
        r.at(i, j) += x * o.at(k, j);
      }
    }
  }
  return r;
}

CycVector CycMatrix::apply(const CycVector& v) const {
  if (v.size() != cols_) throw std::invalid_argument("matrix/vector shape mismatch");
  CycVector r(rows_);
  for (std::size_t i = 0; i < rows_; ++i) {
    for (std::size_t j = 0; j < cols_; ++j) {
      if (!at(i, j).is_zero() && !v[j].is_zero()) r[i] += at(i, j) * v[j];
    }
  }
  return r;
}

CycMatrix CycMatrix::kronecker(const CycMatrix& o) const {
  CycMatrix r(rows_ * o.rows_, cols_ * o.cols_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) {
      if (at(i, j).is_zero()) continue;
      for (std::size_t k = 0; k < o.rows_; ++k)
        for (std::size_t l = 0; l < o.cols_; ++l)
          r.at(i * o.rows_ + k, j * o.cols_ + l) = at(i, j) * o.at(k, l);
    }
  return r;
}

bool CycMatrix::is_identity() const {
  if (rows_ != cols_) return false;
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) {
      if (i == j ? !at(i, j).is_one() : !at(i, j).is_zero()) return false;
    }
  return true;
}

std::optional<Cyclotomic> CycMatrix::scalar_value() const {
  if (rows_ != cols_ || rows_ == 0) return std::nullopt;
  Cyclotomic lambda = at(0, 0);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) {
      if (i == j ? at(i, j) != lambda : !at(i, j).is_zero()) return std::nullopt;
    }
  return lambda;
}

std::vector<std::size_t> rref(CycMatrix& m) {
  std::vector<std::size_t> pivots;
  std::size_t r = 0;
  for (std::size_t c = 0; c < m.cols() && r < m.rows(); ++c) {
    std::size_t p = r;
    while (p < m.rows() && m.at(p, c).is_zero()) ++p;
    if (p == m.rows()) continue;
    if (p != r) {
      for (std::size_t j = 0; j < m.cols(); ++j) std::swap(m.at(p, j), m.at(r, j));
    }
    Cyclotomic inv = m.at(r, c).inverse();
    for (std::size_t j = c; j < m.cols(); ++j) m.at(r, j) = m.at(r, j) * inv;
    for (std::size_t i = 0; i < m.rows(); ++i) {
      if (i == r || m.at(i, c).is_zero()) continue;
      Cyclotomic f = m.at(i, c);
      for (std::size_t j = c; j < m.cols(); ++j) m.at(i, j) -= f * m.at(r, j);
    }
    pivots.push_back(c);
    ++r;
  }
  return pivots;
}

std::size_t rank(CycMatrix m) { return rref(m).size(); }

std::vector<CycVector> kernel_basis(const CycMatrix& m0) {
  CycMatrix m = m0;
  auto pivots = rref(m);
  std::vector<bool> is_pivot(m.cols(), false);
  for (auto c : pivots) is_pivot[c] = true;
  std::vector<CycVector> basis;
  for (std::size_t free = 0; free < m.cols(); ++free) {
    if (is_pivot[free]) continue;
    CycVector v(m.cols());
    v[free] = Cyclotomic(1);
    for (std::size_t i = 0; i < pivots.size(); ++i) {
      v[pivots[i]] = -m.at(i, free);
    }
    basis.push_back(std::move(v));
  }
  return basis;
}

std::optional<CycVector> solve(const CycMatrix& a, const CycVector& b) {
  CycMatrix aug(a.rows(), a.cols() + 1);
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t j = 0; j < a.cols(); ++j) aug.at(i, j) = a.at(i, j);
    aug.at(i, a.cols()) = b[i];
  }
  auto pivots = rref(aug);
  if (!pivots.empty() && pivots.back() == a.cols()) return std::nullopt;
  CycVector x(a.cols());
  for (std::size_t i = 0; i < pivots.size(); ++i) x[pivots[i]] = aug.at(i, a.cols());
  return x;
}

std::optional<CycMatrix> solve_matrix(const CycMatrix& a, const CycMatrix& b) {
  if (a.rows() != b.rows()) throw std::invalid_argument("matrix shape mismatch");
  CycMatrix aug(a.rows(), a.cols() + b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t j = 0; j < a.cols(); ++j) aug.at(i, j) = a.at(i, j);
    for (std::size_t j = 0; j < b.cols(); ++j) aug.at(i, a.cols() + j) = b.at(i, j);
  }
  auto pivots = rref(aug);
  for (auto c : pivots) {
    if (c >= a.cols()) return std::nullopt;
  }
  CycMatrix x(a.cols(), b.cols());
  for (std::size_t i = 0; i < pivots.size(); ++i) {
    for (std::size_t j = 0; j < b.cols(); ++j) x.at(pivots[i], j) = aug.at(i, a.cols() + j);
  }
  return x;
}

bool linearly_independent(const std::vector<CycVector>& vs) {
  if (vs.empty()) return true;
  CycMatrix m(vs.size(), vs[0].size());
  for (std::size_t i = 0; i < vs.size(); ++i) {
    if (vs[i].size() != m.cols()) throw std::invalid_argument("ragged vectors");
    for (std::size_t j = 0; j < m.cols(); ++j) m.at(i, j) = vs[i][j];
  }
  return rank(std::move(m)) == vs.size();
}

}  // namespace ydn
