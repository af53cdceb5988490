#pragma once

#include <map>
#include <memory>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "ydn/linalg.hpp"
#include "ydn/permcore.hpp"

namespace ydn {

/// rho(s) is not a scalar matrix: s is not central for rho's group, or rho is
/// not irreducible.
struct NonScalarAction : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// One-dimensional character of a centralizer S_n^pi in wreath coordinates:
/// per cycle length j, the value w_j^k on each j-cycle of pi and a sign
/// applied to the parity of the induced permutation of the j-cycles.
struct CharacterSpec {
  std::map<int, std::pair<int, int>> parts;  // j -> (exponent k, sign +-1)
};

/// Finite-dimensional representation over the cyclotomic field, determined by
/// values on generators. Characters of centralizers evaluate in closed form
/// from the wreath coordinates; matrix-backed representations evaluate by a
/// closure table. Immutable after construction.
class Representation {
public:
  int dim() const { return dim_; }
  const Subgroup& group() const { return group_; }
  const std::string& label() const { return label_; }

  CycMatrix matrix(const Perm& g) const;
  bool is_trivial() const;

  /// Closed-form character of a centralizer (group must carry wreath factors).
  static Representation character(const Subgroup& centralizer, CharacterSpec spec,
                                  std::string label);
  /// User-supplied matrices on the generators; inconsistent images are kept
  /// and reported by verify_representation rather than thrown here.
  static Representation from_generator_matrices(const Subgroup& g,
                                                const std::vector<CycMatrix>& images,
                                                std::string label = "user");
  /// Same, with an explicit generating set of g (the closure runs over gens).
  static Representation from_generator_matrices(const Subgroup& g,
                                                const std::vector<Perm>& gens,
                                                const std::vector<CycMatrix>& images,
                                                std::string label);
  /// Kronecker product over an orthogonal block juxtaposition.
  friend Representation outer_tensor(const Representation& rho, const Representation& lam);

  friend bool verify_representation(const Representation& rho);

private:
  Representation() = default;

  struct CharBackend {
    Perm base;
    CharacterSpec spec;
  };
  struct TableBackend {
    std::map<Perm, CycMatrix> table;
    bool consistent = true;
  };
  struct TensorBackend {
    std::shared_ptr<const Representation> left, right;
    int split = 0;  // first block degree
  };

  Cyclotomic char_value(const Perm& g) const;

  int dim_ = 1;
  Subgroup group_;
  std::string label_;
  int kind_ = 0;  // 0 char, 1 table, 2 tensor
  std::shared_ptr<const CharBackend> char_;
  std::shared_ptr<const TableBackend> table_;
  std::shared_ptr<const TensorBackend> tensor_;
};

Representation outer_tensor(const Representation& rho, const Representation& lam);

/// matrix(e) = Id plus multiplicativity: exhaustive over all element pairs
/// when |G| <= 24, generator pairs otherwise. Closure inconsistencies from
/// from_generator_matrices also report false.
bool verify_representation(const Representation& rho);

/// The scalar by which the base point acts (Schur); throws NonScalarAction.
Cyclotomic q_ss(const Perm& s, const Representation& rho);

/// The five irreducible representations of a dihedral centralizer of order 8:
/// four characters (A -> e1, B -> e2) and the faithful 2-dimensional one.
/// A is the lexicographically first 4-cycle squaring to the base point and
/// B its reversal involution.
std::vector<Representation> dihedral4_irreps(const Subgroup& group);
Representation dihedral4_rho2(const Subgroup& group);
Representation dihedral4_character(const Subgroup& group, int e1, int e2);

/// Label grammar: "eps", "sgn", "chi{j}" or "chi{j}^{k}", "d4:rho2",
/// "d4:(e1,e2)" with e in {1,-1,+,-}, and tensor words joined by "*" assigned
/// to the nontrivial centralizer factors by descending cycle length.
Representation build_character(std::string_view label, const Subgroup& centralizer);

}  // namespace ydn
