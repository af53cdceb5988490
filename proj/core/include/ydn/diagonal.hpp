#pragma once

#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "ydn/cyclo.hpp"

namespace ydn {

/// Braided vector space of diagonal type: c(v_i (x) v_j) = q_ij v_j (x) v_i.
struct DiagonalBraiding {
  std::vector<std::vector<Cyclotomic>> q;

  std::size_t rank() const { return q.size(); }
  /// Validates squareness and that every entry is nonzero.
  static DiagonalBraiding from(std::vector<std::vector<Cyclotomic>> q);
  DiagonalBraiding principal_submatrix(const std::vector<std::size_t>& idx) const;
};

/// Generalized Cartan matrix: a_ii = 2, a_ij <= 0 off the diagonal,
/// a_ij = 0 iff a_ji = 0.
class GCM {
public:
  explicit GCM(std::vector<std::vector<long>> a);

  std::size_t rank() const { return a_.size(); }
  long at(std::size_t i, std::size_t j) const { return a_[i][j]; }
  const std::vector<std::vector<long>>& entries() const { return a_; }
  GCM principal_submatrix(const std::vector<std::size_t>& idx) const;

  bool operator==(const GCM& o) const { return a_ == o.a_; }

private:
  std::vector<std::vector<long>> a_;
};

struct CartanFailure {
  enum class Kind { QiiOne, QiiNotRoot, NotCartan };
  Kind kind;
  std::size_t i = 0;
  std::size_t j = 0;  // meaningful for NotCartan
};

/// Solves q_ij q_ji = q_ii^{a_ij} for the unique exponent in the window
/// (-ord q_ii, 0]; the window has length ord(q_ii), so at most one solution
/// exists. Failures are ordinary outcomes, not errors.
std::variant<GCM, CartanFailure> cartan_exponents(const DiagonalBraiding& d);

/// Connected components of the graph with an edge i--j iff a_ij != 0.
std::vector<std::vector<std::size_t>> components(const GCM& a);

struct ComponentReport {
  std::vector<std::size_t> vertices;
  bool finite;
  std::string label;  // finite Dynkin name, "affine" (named when recognized), or "indefinite"
};

struct TypeVerdict {
  bool finite;
  std::vector<ComponentReport> components;
};

/// Finite-type test: symmetrizability plus positive definiteness of the
/// symmetrization, decided by Sylvester's leading principal minors in exact
/// rational arithmetic. The Dynkin catalogue only supplies names.
TypeVerdict is_finite_type(const GCM& a);

enum class DiagonalVerdict { Infinite, FinitePossible, Inapplicable };

struct DiagonalAnalysis {
  DiagonalVerdict verdict;
  std::string reason;  // "qii-one" | "qii-not-root" | "not-cartan" | "cartan-finite" | "cartan-not-finite"
  std::optional<GCM> gcm;
  std::optional<TypeVerdict> type;
};

/// The decision this artifact draws from one diagonal subspace. q_ii = 1
/// anywhere forces Infinite; a non-root q_ii or a non-Cartan braiding yields
/// no conclusion here.
DiagonalAnalysis verdict_from_diagonal(const DiagonalBraiding& d);

/// Text diagram of the components: vertices and edge multiplicities.
std::string dynkin_report(const GCM& a, const TypeVerdict& t);

}  // namespace ydn
