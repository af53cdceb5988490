#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "ydn/cyclo.hpp"

namespace ydn {

/// Permutation of {1..n}, stored as a 0-based image table. Cycle notation
/// exists only at the I/O boundary ("(1 2)(3 4)", "e"). Values are immutable
/// and compare lexicographically by image sequence.
class Perm {
public:
  explicit Perm(int degree);  // identity
  static Perm from_images(std::vector<int> images);  // 0-based; validates bijection
  static Perm from_cycles(int degree, const std::vector<std::vector<int>>& cycles);  // 1-based points
  static Perm parse(int degree, std::string_view text);

  int degree() const { return static_cast<int>(img_.size()); }
  int apply(int i) const { return img_[static_cast<std::size_t>(i)]; }  // 0-based
  const std::vector<int>& images() const { return img_; }

  bool is_identity() const;
  Perm inverse() const;

  friend Perm operator*(const Perm& p, const Perm& q);  // (p*q)(i) = p(q(i))

  bool operator==(const Perm& o) const { return img_ == o.img_; }
  bool operator!=(const Perm& o) const { return img_ != o.img_; }
  bool operator<(const Perm& o) const { return img_ < o.img_; }

  /// Disjoint cycles of length >= 2, 1-based points, each starting at its
  /// minimum, ordered by minimum point.
  std::vector<std::vector<int>> cycles() const;
  std::string to_cycle_string() const;

private:
  std::vector<int> img_;
};

Perm compose(const Perm& p, const Perm& q);
/// g |> h = g h g^{-1}
Perm conjugate(const Perm& g, const Perm& h);

/// Cycle type (1^{m_1}, 2^{m_2}, ...); fixed points are carried as 1-cycles.
class CycleType {
public:
  CycleType(int degree, std::map<int, int> multiplicities);
  static CycleType parse(int degree, std::string_view text);  // "2^2 3", fixed points inferred

  int degree() const { return degree_; }
  int multiplicity(int j) const;
  const std::map<int, int>& multiplicities() const { return mult_; }

  long order() const;  // lcm of cycle lengths
  Int class_size() const;
  Int centralizer_order() const;  // prod j^{m_j} m_j!
  std::string to_string() const;

  bool operator==(const CycleType& o) const {
    return degree_ == o.degree_ && mult_ == o.mult_;
  }
  bool operator<(const CycleType& o) const {
    return degree_ != o.degree_ ? degree_ < o.degree_ : mult_ < o.mult_;
  }

private:
  int degree_;
  std::map<int, int> mult_;  // j -> m_j, only nonzero entries
};

CycleType cycle_type(const Perm& p);
long order(const Perm& p);

/// All elements of the conjugacy class of the given type, lexicographic by
/// image sequence. Built by direct placement of disjoint cycles (no filter),
/// so the n!-filter remains available as an independent oracle in tests.
std::vector<Perm> enumerate_class(int n, const CycleType& t);

/// Deterministic base point of a class: cycles laid out on consecutive
/// points, longest first, so the class of j-cycles gets (1 2 ... j).
Perm canonical_rep(int n, const CycleType& t);

struct WreathFactor {
  int length;                            // j
  std::vector<std::vector<int>> cycles;  // the m_j j-cycles of the base point, 1-based
};

enum class GroupStructure { Trivial, Cyclic, ProductOfCyclics, Dihedral4, Wreath, Full };

/// Subgroup of S_n given by generators; element enumeration is lazy. For
/// centralizers the wreath-type factor decomposition is attached.
class Subgroup {
public:
  Subgroup() = default;  // empty placeholder; populate via the factories
  static Subgroup from_generators(int degree, std::vector<Perm> gens);

  int degree() const { return degree_; }
  const std::vector<Perm>& generators() const { return gens_; }
  const std::vector<Perm>& elements() const;  // cached closure
  Int order() const;
  bool contains(const Perm& g) const;

  GroupStructure structure() const { return structure_; }
  std::string structure_name() const;
  const std::optional<Perm>& centralized() const { return centralized_; }
  const std::vector<WreathFactor>& factors() const { return factors_; }

private:
  friend Subgroup centralizer(int n, const Perm& p);

  int degree_ = 0;
  std::vector<Perm> gens_;
  GroupStructure structure_ = GroupStructure::Wreath;
  std::optional<Perm> centralized_;
  std::vector<WreathFactor> factors_;
  std::optional<Int> order_;  // known up front for centralizers
  mutable std::vector<Perm> elements_;  // filled on demand
};

/// Full centralizer of p in S_n, with structure tags. Elements are found by
/// the n!-filter for n <= 8 and by closure of the structural generators
/// (cycle powers plus cycle-permuting blocks) above that.
Subgroup centralizer(int n, const Perm& p);

/// Numeration t_1 = s, t_2, ... of the class (remaining elements in lex
/// order) together with g_i, the lexicographically first solutions of
/// g_i s g_i^{-1} = t_i, g_1 = e.
struct CosetSection {
  Perm base;
  std::vector<Perm> cls;
  std::vector<Perm> reps;
  int index_of(const Perm& t) const;  // -1 when absent
};

CosetSection coset_section(const std::vector<Perm>& cls, const Perm& s);

/// sigma with sigma p sigma^{-1} = p^{-1}, built cycle by cycle: on a cycle
/// (c_1 ... c_j) it sends c_x to c_{j-x mod j}. Always an involution or the
/// identity; the postcondition is re-checked before returning.
Perm reversal_involution(const Perm& p);

/// Block juxtaposition S_n x S_p -> S_{n+p}.
Perm concat(const Perm& pi, const Perm& tau);

/// No common cycle length, fixed points (j = 1) included.
bool is_orthogonal(const Perm& pi, const Perm& tau);
bool is_orthogonal(const CycleType& a, const CycleType& b);

}  // namespace ydn
