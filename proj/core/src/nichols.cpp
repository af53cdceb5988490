#include "ydn/nichols.hpp"

#include <algorithm>
#include <map>
#include <numeric>

namespace ydn {

namespace {

long checked_power(int base, int exp, long cap) {
  long v = 1;
  for (int i = 0; i < exp; ++i) {
    if (v > cap / std::max(base, 1)) return cap + 1;
    v *= base;
  }
  return v;
}

}  // namespace

TensorOperator::TensorOperator(int dim_v, int degree) : dim_v_(dim_v), degree_(degree) {
  if (dim_v < 1 || degree < 0) throw std::invalid_argument("bad tensor power shape");
  dim_ = checked_power(dim_v, degree, 1L << 50);
  cols_.resize(static_cast<std::size_t>(dim_));
}

long TensorOperator::encode(const std::vector<int>& tuple) const {
  long idx = 0;
  for (int t : tuple) idx = idx * dim_v_ + t;
  return idx;
}

std::vector<int> TensorOperator::decode(long index) const {
  std::vector<int> tuple(static_cast<std::size_t>(degree_));
  for (int k = degree_ - 1; k >= 0; --k) {
    tuple[static_cast<std::size_t>(k)] = static_cast<int>(index % dim_v_);
    index /= dim_v_;
  }
  return tuple;
}

TensorOperator TensorOperator::identity(int dim_v, int degree) {
  TensorOperator t(dim_v, degree);
  for (long j = 0; j < t.dim_; ++j)
    t.cols_[static_cast<std::size_t>(j)].push_back({j, Cyclotomic(1)});
  return t;
}

TensorOperator TensorOperator::compose(const TensorOperator& other) const {
  if (dim_ != other.dim_) throw std::invalid_argument("tensor operator shape mismatch");
  TensorOperator out(dim_v_, degree_);
  for (long j = 0; j < dim_; ++j) {
    std::map<long, Cyclotomic> acc;
    for (const auto& [mid, x] : other.cols_[static_cast<std::size_t>(j)]) {
      for (const auto& [row, y] : cols_[static_cast<std::size_t>(mid)]) {
        auto it = acc.find(row);
        if (it == acc.end()) {
          acc.emplace(row, x * y);
        } else {
          it->second += x * y;
          if (it->second.is_zero()) acc.erase(it);
        }
      }
    }
    auto& col = out.cols_[static_cast<std::size_t>(j)];
    col.assign(acc.begin(), acc.end());
  }
  return out;
}

TensorOperator& TensorOperator::add(const TensorOperator& other) {
  if (dim_ != other.dim_) throw std::invalid_argument("tensor operator shape mismatch");
  for (long j = 0; j < dim_; ++j) {
    auto& a = cols_[static_cast<std::size_t>(j)];
    const auto& b = other.cols_[static_cast<std::size_t>(j)];
    std::map<long, Cyclotomic> acc(a.begin(), a.end());
    for (const auto& [row, x] : b) {
      auto it = acc.find(row);
      if (it == acc.end()) {
        acc.emplace(row, x);
      } else {
        it->second += x;
        if (it->second.is_zero()) acc.erase(it);
      }
    }
    a.assign(acc.begin(), acc.end());
  }
  return *this;
}

bool TensorOperator::operator==(const TensorOperator& o) const {
  return dim_v_ == o.dim_v_ && degree_ == o.degree_ && cols_ == o.cols_;
}

TensorOperator braid_action(const BraidingOperator& c, int degree, int strand) {
  if (strand < 1 || strand > degree - 1)
    throw std::invalid_argument("strand index out of range");
  TensorOperator out(c.dim(), degree);
  const int leg = strand - 1;
  for (long j = 0; j < out.dim_; ++j) {
    auto tuple = out.decode(j);
    const auto& col = c.column(tuple[static_cast<std::size_t>(leg)],
                               tuple[static_cast<std::size_t>(leg) + 1]);
    auto& target = out.cols_[static_cast<std::size_t>(j)];
    std::map<long, Cyclotomic> acc;
    for (const auto& term : col) {
      auto t2 = tuple;
      t2[static_cast<std::size_t>(leg)] = term.a;
      t2[static_cast<std::size_t>(leg) + 1] = term.b;
      long row = out.encode(t2);
      auto it = acc.find(row);
      if (it == acc.end())
        acc.emplace(row, term.coeff);
      else
        it->second += term.coeff;
    }
    target.assign(acc.begin(), acc.end());
  }
  return out;
}

namespace {

// sigma_{leg} composed with t, without materializing sigma
TensorOperator apply_sigma(const BraidingOperator& c, int leg, const TensorOperator& t) {
  TensorOperator out(t.dim_v(), t.degree());
  for (long j = 0; j < t.dim(); ++j) {
    std::map<long, Cyclotomic> acc;
    for (const auto& [mid, x] : t.column(j)) {
      auto tuple = t.decode(mid);
      const auto& col = c.column(tuple[static_cast<std::size_t>(leg)],
                                 tuple[static_cast<std::size_t>(leg) + 1]);
      for (const auto& term : col) {
        auto t2 = tuple;
        t2[static_cast<std::size_t>(leg)] = term.a;
        t2[static_cast<std::size_t>(leg) + 1] = term.b;
        long row = t.encode(t2);
        auto it = acc.find(row);
        if (it == acc.end()) {
          acc.emplace(row, x * term.coeff);
        } else {
          it->second += x * term.coeff;
          if (it->second.is_zero()) acc.erase(it);
        }
      }
    }
    out.column(j).assign(acc.begin(), acc.end());
  }
  return out;
}

}  // namespace

TensorOperator quantum_symmetrizer(const BraidingOperator& c, int degree) {
  TensorOperator sum = TensorOperator::identity(c.dim(), degree);  // T_e
  if (degree <= 1) return sum;

  // breadth-first over the weak order: l(s_i w) = l(w) + 1 exactly when the
  // value i sits left of i+1 in w, and then T_{s_i w} = sigma_i T_w
  std::map<std::vector<int>, TensorOperator> level;
  std::vector<int> id_perm(static_cast<std::size_t>(degree));
  std::iota(id_perm.begin(), id_perm.end(), 0);
  level.emplace(id_perm, TensorOperator::identity(c.dim(), degree));

  while (!level.empty()) {
    std::map<std::vector<int>, TensorOperator> next;
    for (const auto& [w, t] : level) {
      for (int i = 0; i + 1 < degree; ++i) {
        std::size_t pos_i = 0, pos_i1 = 0;
        for (std::size_t p = 0; p < w.size(); ++p) {
          if (w[p] == i) pos_i = p;
          if (w[p] == i + 1) pos_i1 = p;
        }
        if (pos_i > pos_i1) continue;  // length would drop
        std::vector<int> w2 = w;
        std::swap(w2[pos_i], w2[pos_i1]);
        if (next.count(w2)) continue;
        next.emplace(std::move(w2), apply_sigma(c, i, t));
      }
    }
    for (const auto& [w, t] : next) sum.add(t);
    level = std::move(next);
  }
  return sum;
}

namespace {

// fraction-free Bareiss elimination; entries stay in the subring generated by
// the inputs, which keeps coefficient growth polynomial
long rank_dense(const TensorOperator& s) {
  const long n = s.dim();
  std::vector<std::vector<Cyclotomic>> a(static_cast<std::size_t>(n),
                                         std::vector<Cyclotomic>(static_cast<std::size_t>(n)));
  for (long j = 0; j < n; ++j)
    for (const auto& [row, x] : s.column(j))
      a[static_cast<std::size_t>(row)][static_cast<std::size_t>(j)] = x;

  long rank = 0;
  Cyclotomic prev_pivot(1);
  for (long col = 0; col < n && rank < n; ++col) {
    long pivot = -1;
    for (long r = rank; r < n; ++r) {
      if (!a[static_cast<std::size_t>(r)][static_cast<std::size_t>(col)].is_zero()) {
        pivot = r;
        break;
      }
    }
    if (pivot < 0) continue;
    std::swap(a[static_cast<std::size_t>(pivot)], a[static_cast<std::size_t>(rank)]);
    const auto& prow = a[static_cast<std::size_t>(rank)];
    Cyclotomic p = prow[static_cast<std::size_t>(col)];
    Cyclotomic prev_inv = prev_pivot.inverse();
    for (long r = rank + 1; r < n; ++r) {
      auto& row = a[static_cast<std::size_t>(r)];
      const Cyclotomic f = row[static_cast<std::size_t>(col)];
      if (f.is_zero()) {
        for (long cc = col + 1; cc < n; ++cc) {
          if (row[static_cast<std::size_t>(cc)].is_zero()) continue;
          row[static_cast<std::size_t>(cc)] =
              row[static_cast<std::size_t>(cc)] * p * prev_inv;
        }
        continue;
      }
      for (long cc = col + 1; cc < n; ++cc) {
        row[static_cast<std::size_t>(cc)] =
            (row[static_cast<std::size_t>(cc)] * p - f * prow[static_cast<std::size_t>(cc)]) *
            prev_inv;
      }
      row[static_cast<std::size_t>(col)] = Cyclotomic(0);
    }
    prev_pivot = p;
    ++rank;
  }
  return rank;
}

// division Gaussian elimination on sparse rows, fewest-entries pivot row
long rank_sparse(const TensorOperator& s) {
  const long n = s.dim();
  std::vector<std::map<long, Cyclotomic>> rows(static_cast<std::size_t>(n));
  for (long j = 0; j < n; ++j)
    for (const auto& [row, x] : s.column(j)) rows[static_cast<std::size_t>(row)].emplace(j, x);

  std::vector<bool> used(static_cast<std::size_t>(n), false);
  long rank = 0;
  while (true) {
    long best = -1;
    std::size_t best_size = 0;
    for (long r = 0; r < n; ++r) {
      if (used[static_cast<std::size_t>(r)] || rows[static_cast<std::size_t>(r)].empty())
        continue;
      if (best < 0 || rows[static_cast<std::size_t>(r)].size() < best_size) {
        best = r;
        best_size = rows[static_cast<std::size_t>(r)].size();
      }
    }
    if (best < 0) break;
    used[static_cast<std::size_t>(best)] = true;
    ++rank;
    auto pivot_row = rows[static_cast<std::size_t>(best)];
    const long pivot_col = pivot_row.begin()->first;
    const Cyclotomic pivot_inv = pivot_row.begin()->second.inverse();
    rows[static_cast<std::size_t>(best)].clear();
    for (long r = 0; r < n; ++r) {
      if (used[static_cast<std::size_t>(r)]) continue;
      auto& row = rows[static_cast<std::size_t>(r)];
      auto hit = row.find(pivot_col);
      if (hit == row.end()) continue;
      Cyclotomic f = hit->second * pivot_inv;
      row.erase(hit);
      for (const auto& [cc, x] : pivot_row) {
        if (cc == pivot_col) continue;
        auto it = row.find(cc);
        if (it == row.end()) {
          row.emplace(cc, -(f * x));
        } else {
          it->second -= f * x;
          if (it->second.is_zero()) row.erase(it);
        }
      }
    }
  }
  return rank;
}

}  // namespace

long rank_of(const TensorOperator& s, RankMethod method) {
  return method == RankMethod::Dense ? rank_dense(s) : rank_sparse(s);
}

long GradedDims::total() const {
  long t = 0;
  for (long d : dims) t += d;
  return t;
}

GradedDims hilbert_prefix(const BraidingOperator& c, int dmax, long budget,
                          RankMethod method) {
  if (dmax < 0) throw std::invalid_argument("dmax must be nonnegative");
  GradedDims out;
  bool dead = false;
  for (int k = 0; k <= dmax; ++k) {
    if (dead) {
      out.dims.push_back(0);
      continue;
    }
    if (k == 0) {
      out.dims.push_back(1);
      continue;
    }
    if (k == 1) {
      out.dims.push_back(c.dim());
      continue;
    }
    long needed = checked_power(c.dim(), k, budget);
    if (needed > budget) throw BudgetExceeded(std::move(out), k, needed);
    long d = rank_of(quantum_symmetrizer(c, k), method);
    out.dims.push_back(d);
    if (d == 0) {
      dead = true;
      out.exhausted = true;
    }
  }
  return out;
}

GradedDims hilbert_prefix(const YDModule& m, int dmax, long budget, RankMethod method) {
  return hilbert_prefix(braiding(m), dmax, budget, method);
}

}  // namespace ydn
