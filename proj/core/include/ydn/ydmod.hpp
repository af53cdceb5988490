#pragma once

#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "ydn/diagonal.hpp"
#include "ydn/linalg.hpp"
#include "ydn/permcore.hpp"
#include "ydn/reps.hpp"

namespace ydn {

/// The irreducible module attached to a conjugacy class and a representation
/// of the centralizer of its base point. Basis symbols g_i (x) v_k are
/// flattened as i * deg(rho) + k; the coaction degree of block i is t_i and
/// the action factors through g g_i = g_j gamma with gamma in the centralizer.
class YDModule {
public:
  int blocks() const { return static_cast<int>(section_.cls.size()); }
  int block_dim() const { return rho_.dim(); }
  int dim() const { return blocks() * block_dim(); }

  const CosetSection& section() const { return section_; }
  const Representation& rho() const { return rho_; }
  const Perm& base() const { return section_.base; }
  const Perm& degree_of_block(int i) const { return section_.cls[static_cast<std::size_t>(i)]; }

  int index(int block, int k) const { return block * block_dim() + k; }

  /// g . (g_i (x) -) = g_j (x) rho(gamma)(-); returns (j, rho(gamma)).
  std::pair<int, CycMatrix> act_block(const Perm& g, int i) const;
  CycVector act(const Perm& g, const CycVector& v) const;

private:
  friend YDModule build_module(const std::vector<Perm>& cls, const Perm& s,
                               const Representation& rho);
  YDModule(CosetSection section, Representation rho)
      : section_(std::move(section)), rho_(std::move(rho)) {}

  CosetSection section_;
  Representation rho_;
};

/// errors: rho's group is not the centralizer of s, s not in cls
YDModule build_module(const std::vector<Perm>& cls, const Perm& s, const Representation& rho);

/// Exact braiding on basis pairs of V (x) V, stored column-sparse. Columns of
/// a Yetter-Drinfeld braiding have the triangular shape
/// c(g_i v (x) g_j w) = g_h(gamma . w) (x) g_i v.
class BraidingOperator {
public:
  struct Term {
    int a, b;  // target basis pair
    Cyclotomic coeff;
  };

  explicit BraidingOperator(int dim)
      : dim_(dim), cols_(static_cast<std::size_t>(dim) * static_cast<std::size_t>(dim)) {}

  int dim() const { return dim_; }
  const std::vector<Term>& column(int a, int b) const {
    return cols_[static_cast<std::size_t>(a) * static_cast<std::size_t>(dim_) +
                 static_cast<std::size_t>(b)];
  }
  std::vector<Term>& column(int a, int b) {
    return cols_[static_cast<std::size_t>(a) * static_cast<std::size_t>(dim_) +
                 static_cast<std::size_t>(b)];
  }

private:
  int dim_;
  std::vector<std::vector<Term>> cols_;
};

BraidingOperator braiding(const YDModule& m);

/// The braided vector space c(v_a (x) v_b) = q_ab v_b (x) v_a.
BraidingOperator diagonal_braiding_operator(const DiagonalBraiding& q);

/// JSON dump: entries (a,b) -> [((a',b'), coefficient text)], stable order.
std::string braiding_to_json(const BraidingOperator& c);

struct AxiomReport {
  bool yd_ok = true;
  bool braid_ok = true;
  std::string witness;  // first violation, empty when everything passes
  bool ok() const { return yd_ok && braid_ok; }
};

/// Yetter-Drinfeld compatibility on generators times the whole basis, plus
/// the braid equation on basis triples (exhaustive for dim <= 12, seeded
/// random sample above).
AxiomReport verify_axioms(const YDModule& m);

struct NotClosed {
  int a, b;  // basis pair of W whose image escapes W (x) W
};

/// Restriction of c to the span of W when W (x) W is c-stable.
/// Throws on linearly dependent W.
std::variant<BraidingOperator, NotClosed> restrict_braiding(const BraidingOperator& c,
                                                            const std::vector<CycVector>& w);

/// q-matrix when the operator is diagonal in its basis.
std::optional<DiagonalBraiding> as_diagonal(const BraidingOperator& c);

struct Rank2Real {
  std::vector<CycVector> basis;  // {g_1 v, sigma (x) v} inside the module
  BraidingOperator op;
  DiagonalBraiding q;  // [[q_ss, q_ss^-1], [q_ss^-1, q_ss]]
};

/// The rank-2 subspace attached to sigma s sigma^{-1} = s^{-1} != s.
Rank2Real rank2_real_subspace(const YDModule& m, const Perm& sigma);

struct DiagonalizedModule {
  std::vector<CycVector> basis;  // simultaneous eigenvectors, block by block
  DiagonalBraiding q;
};

struct NotDiagonalizable {
  std::string reason;
};

/// For classes whose elements pairwise commute, every t_i stabilizes every
/// block; the blocks are diagonalized simultaneously. Eigenvalues are ordered
/// by (order, exponent) of the root of unity and eigenbases taken from the
/// row-reduced form, so the q-matrix is reproducible byte for byte.
std::variant<DiagonalizedModule, NotDiagonalizable> diagonalize_abelian_class(const YDModule& m);

struct EmbeddingReport {
  Cyclotomic scalar;     // q_{tau,tau}
  bool relation_ok;      // c(psi x (x) psi y) = scalar * (psi (x) psi) c(x (x) y)
  bool braided_morphism;  // relation_ok and scalar = 1
  std::string witness;   // first failing pair when relation_ok is false
};

/// psi(g_i v) = (g_i # h_1)(v (x) w) into the module of the juxtaposed class.
EmbeddingReport product_embedding(const YDModule& mpi, const YDModule& mprod,
                                  const CycVector& w);

}  // namespace ydn
