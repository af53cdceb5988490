#pragma once

#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "ydn/diagonal.hpp"
#include "ydn/permcore.hpp"
#include "ydn/reps.hpp"

namespace ydn {

enum class RuleId {
  TrivialBraiding,
  Registry,
  RealClass,
  OddOrder,
  MatiasDegree,
  DosDos,
  Reduction,
  DiagonalCartan,
};

/// "trivial-braiding", "registry", "real-class", "odd-order",
/// "matias-degree", "dosdos", "reduction", "diagonal-cartan"
std::string rule_name(RuleId rule);

struct Verdict;
struct OrbitVerdict;

/// One pipeline step. Every rule tried leaves a step; the deciding one
/// carries enough witness data to be re-checked by the underlying modules.
struct ReasonStep {
  RuleId rule;
  bool decided = false;
  std::string note;

  std::optional<std::string> base_point;  // s, cycle notation
  std::optional<std::string> sigma;       // reversing conjugator
  std::optional<std::string> q_ss_text;
  std::optional<DiagonalBraiding> q_matrix;
  std::optional<GCM> gcm;
  std::optional<std::string> split_pi, split_tau;  // type strings of a split
  std::vector<std::shared_ptr<const Verdict>> sub_pairs;
  std::vector<std::shared_ptr<const OrbitVerdict>> sub_orbits;
};

enum class Outcome { Infinite, KnownFinite, Unknown };

struct Verdict {
  Outcome outcome;
  std::optional<long> dim;            // KnownFinite only
  std::optional<std::string> source;  // citation tag from the registry
  int n;
  CycleType type;
  std::string rep_label;
  std::vector<ReasonStep> trace;
};

enum class OrbitOutcome { InfiniteForAllRho, Unknown };

struct OrbitVerdict {
  OrbitOutcome outcome;
  int n;
  CycleType type;
  std::vector<ReasonStep> trace;
};

struct RegistryEntry {
  long dim;
  std::string source;
};

/// Exact lookup of the printed finite cases; matches on the values of rho at
/// the canonical class data, no inference.
std::optional<RegistryEntry> known_finite_registry(int n, const CycleType& t,
                                                   const Representation& rho);

/// Decision for one (class, representation) pair. First applicable rule wins;
/// the trace records every rule tried. Unknown is an honest outcome.
Verdict pair_verdict(int n, const CycleType& t, const std::string& rep_label);
Verdict pair_verdict(int n, const CycleType& t, const Representation& rho,
                     const std::string& rep_label);

/// Class-level decision quantified over every irreducible representation.
OrbitVerdict orbit_verdict(int n, const CycleType& t);

struct TypeSplit {
  CycleType pi;
  CycleType tau;
};

/// All splits of the multiset of cycle lengths into orthogonal parts with
/// coprime orders and odd-order tau part; each is a candidate reduction.
std::vector<TypeSplit> reduction_decompose(const CycleType& t);

/// Re-checks the deciding witness by rebuilding it from the named modules.
bool verify_trace(const Verdict& v);
bool verify_trace(const OrbitVerdict& v);

}  // namespace ydn
