#pragma once

#include <optional>
#include <vector>

#include "ydn/cyclo.hpp"

namespace ydn {

using CycVector = std::vector<Cyclotomic>;

/// Dense matrix over the cyclotomic tower, row-major. Sizes here stay small
/// (representation matrices, diagonalization blocks, restricted braidings);
/// the big symmetrizer ranks have their own sparse path in the Nichols layer.
class CycMatrix {
public:
  CycMatrix() : rows_(0), cols_(0) {}
  CycMatrix(std::size_t rows, std::size_t cols)
      : rows_(rows), cols_(cols), a_(rows * cols) {}

  static CycMatrix identity(std::size_t n);
  static CycMatrix from_rows(const std::vector<std::vector<Cyclotomic>>& rows);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  Cyclotomic& at(std::size_t i, std::size_t j) { return a_[i * cols_ + j]; }
  const Cyclotomic& at(std::size_t i, std::size_t j) const { return a_[i * cols_ + j]; }

  CycMatrix operator*(const CycMatrix& o) const;
  CycVector apply(const CycVector& v) const;
  CycMatrix kronecker(const CycMatrix& o) const;

  bool operator==(const CycMatrix& o) const {
    return rows_ == o.rows_ && cols_ == o.cols_ && a_ == o.a_;
  }

  bool is_identity() const;
  /// lambda when the matrix equals lambda * Id, otherwise nullopt
  std::optional<Cyclotomic> scalar_value() const;

private:
  std::size_t rows_, cols_;
  std::vector<Cyclotomic> a_;
};

/// In-place reduced row echelon form; returns the pivot columns.
std::vector<std::size_t> rref(CycMatrix& m);

std::size_t rank(CycMatrix m);

/// Deterministic kernel basis: one vector per free column of the RREF,
/// normalized to 1 at its free position.
std::vector<CycVector> kernel_basis(const CycMatrix& m);

/// Exact solve A x = b; nullopt when inconsistent. Free variables are zero.
std::optional<CycVector> solve(const CycMatrix& a, const CycVector& b);

/// Solve A X = B column by column; nullopt when any column is inconsistent.
std::optional<CycMatrix> solve_matrix(const CycMatrix& a, const CycMatrix& b);

bool linearly_independent(const std::vector<CycVector>& vs);

}  // namespace ydn
