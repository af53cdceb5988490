#pragma once

#include <stdexcept>

#include "ydn/ydmod.hpp"

namespace ydn {

/// Sparse exact operator on V^{(x)d}; basis tuples are encoded big-endian in
/// mixed radix. Columns are kept sorted by row with merged coefficients.
class TensorOperator {
public:
  TensorOperator(int dim_v, int degree);

  int dim_v() const { return dim_v_; }
  int degree() const { return degree_; }
  long dim() const { return dim_; }

  const std::vector<std::pair<long, Cyclotomic>>& column(long j) const {
    return cols_[static_cast<std::size_t>(j)];
  }
  std::vector<std::pair<long, Cyclotomic>>& column(long j) {
    return cols_[static_cast<std::size_t>(j)];
  }

  static TensorOperator identity(int dim_v, int degree);

  /// this applied after other
  TensorOperator compose(const TensorOperator& other) const;
  TensorOperator& add(const TensorOperator& other);

  bool operator==(const TensorOperator& o) const;

  long encode(const std::vector<int>& tuple) const;
  std::vector<int> decode(long index) const;

private:
  friend TensorOperator braid_action(const BraidingOperator& c, int degree, int strand);
  friend TensorOperator quantum_symmetrizer(const BraidingOperator& c, int degree);

  int dim_v_, degree_;
  long dim_;
  std::vector<std::vector<std::pair<long, Cyclotomic>>> cols_;
};

/// The braid group generator sigma_strand: c in tensor legs (strand,
/// strand+1), identity elsewhere; 1 <= strand <= degree-1.
TensorOperator braid_action(const BraidingOperator& c, int degree, int strand);

/// Sum over all of S_degree of the braid lifts T_w along reduced words,
/// assembled over the weak order (well defined by Matsumoto since the sigma_i
/// satisfy the braid relations). S_0 = S_1 = id.
TensorOperator quantum_symmetrizer(const BraidingOperator& c, int degree);

enum class RankMethod { Sparse, Dense };

/// Exact rank over the cyclotomic field: Dense runs fraction-free Bareiss
/// elimination, Sparse runs division Gaussian elimination with
/// fewest-entries pivoting. Independent code paths; they must agree.
long rank_of(const TensorOperator& s, RankMethod method);

struct GradedDims {
  std::vector<long> dims;  // d_0, ..., d_dmax
  bool exhausted = false;  // a zero degree proves all later degrees vanish
  long total() const;
};

struct BudgetExceeded : std::runtime_error {
  explicit BudgetExceeded(GradedDims done, long degree, long needed)
      : std::runtime_error("tensor budget exceeded at degree " + std::to_string(degree) +
                           " (needs " + std::to_string(needed) + " basis elements)"),
        partial(std::move(done)) {}
  GradedDims partial;  // dims for the degrees that fit the budget
};

/// d_k = rank of the degree-k quantum symmetrizer of the module braiding.
/// Degrees whose tensor power exceeds the budget raise BudgetExceeded with
/// the completed prefix attached.
GradedDims hilbert_prefix(const YDModule& m, int dmax, long budget = 1000000,
                          RankMethod method = RankMethod::Sparse);
GradedDims hilbert_prefix(const BraidingOperator& c, int dmax, long budget = 1000000,
                          RankMethod method = RankMethod::Sparse);

}  // namespace ydn
