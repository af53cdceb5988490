#include "ydn/criteria.hpp"

#include <algorithm>
#include <numeric>

#include "ydn/ydmod.hpp"

namespace ydn {

std::string rule_name(RuleId rule) {
  switch (rule) {
    case RuleId::TrivialBraiding: return "trivial-braiding";
    case RuleId::Registry: return "registry";
    case RuleId::RealClass: return "real-class";
    case RuleId::OddOrder: return "odd-order";
    case RuleId::MatiasDegree: return "matias-degree";
    case RuleId::DosDos: return "dosdos";
    case RuleId::Reduction: return "reduction";
    case RuleId::DiagonalCartan: return "diagonal-cartan";
  }
  return "?";
}

namespace {

bool is_identity_type(const CycleType& t) {
  return t.multiplicity(1) == t.degree();
}

// (1^a, 2^2, odd cycles): the even lengths are exactly two transpositions
bool is_dosdos_type(const CycleType& t) {
  if (t.multiplicity(2) != 2) return false;
  for (auto [j, m] : t.multiplicities()) {
    if (j > 2 && j % 2 == 0 && m > 0) return false;
  }
  return true;
}

CycleType s4_core_type() { return CycleType(4, {{2, 2}}); }

// [[q, q^-1], [q^-1, q]], the subspace of the real-class argument
DiagonalBraiding real_pattern(const Cyclotomic& q) {
  Cyclotomic qi = q.inverse();
  return DiagonalBraiding::from({{q, qi}, {qi, q}});
}

ReasonStep step(RuleId rule, std::string note) {
  ReasonStep s;
  s.rule = rule;
  s.note = std::move(note);
  return s;
}

// the five-irreducible case analysis of the S4 core class of type (2,2)
std::vector<std::shared_ptr<const Verdict>> dosdos_core_analysis();

}  // namespace

std::optional<RegistryEntry> known_finite_registry(int n, const CycleType& t,
                                                   const Representation& rho) {
  if (rho.dim() != 1) return std::nullopt;
  auto value_at = [&](const char* text) { return rho.matrix(Perm::parse(n, text)).at(0, 0); };
  const Cyclotomic one(1), minus_one(-1);
  if (n == 3 && t == CycleType::parse(3, "2 1")) {
    if (value_at("(1 2)") == minus_one) return RegistryEntry{12, "ms"};
  }
  if (n == 4 && t == CycleType::parse(4, "4")) {
    if (value_at("(1 2 3 4)") == minus_one) return RegistryEntry{576, "AG2 6.12"};
  }
  if (n == 4 && t == CycleType::parse(4, "2 1^2")) {
    if (value_at("(1 2)") == minus_one && value_at("(3 4)") == one)
      return RegistryEntry{576, "FK"};
    if (value_at("(1 2)") == minus_one && value_at("(3 4)") == minus_one)
      return RegistryEntry{576, "ms"};
  }
  return std::nullopt;
}

std::vector<TypeSplit> reduction_decompose(const CycleType& t) {
  // assign whole length classes to the pi or tau side; orthogonality is then
  // automatic, and we keep splits with coprime orders and odd tau
  std::vector<std::pair<int, int>> classes(t.multiplicities().begin(),
                                           t.multiplicities().end());
  const std::size_t k = classes.size();
  std::vector<TypeSplit> out;
  if (k < 2) return out;
  for (std::size_t mask = 1; mask + 1 < (1u << k); ++mask) {
    std::map<int, int> pi_m, tau_m;
    long pi_deg = 0, tau_deg = 0;
    for (std::size_t i = 0; i < k; ++i) {
      auto [j, m] = classes[i];
      if (mask & (1u << i)) {
        pi_m[j] = m;
        pi_deg += static_cast<long>(j) * m;
      } else {
        tau_m[j] = m;
        tau_deg += static_cast<long>(j) * m;
      }
    }
    CycleType pi(static_cast<int>(pi_deg), pi_m);
    CycleType tau(static_cast<int>(tau_deg), tau_m);
    if (std::gcd(pi.order(), tau.order()) != 1) continue;
    if (tau.order() % 2 == 0) continue;
    out.push_back(TypeSplit{std::move(pi), std::move(tau)});
  }
  return out;
}

namespace {

// shared rule bodies -------------------------------------------------------

// the quantified, class-level rules; used by both verdict flavours
struct OrbitRules {
  static std::optional<ReasonStep> trivial(int, const CycleType& t) {
    if (!is_identity_type(t)) return std::nullopt;
    ReasonStep s = step(RuleId::TrivialBraiding,
                        "the orbit is trivial: c(v (x) v) = v (x) v for any rho");
    s.decided = true;
    return s;
  }

  static std::optional<ReasonStep> odd_order(int n, const CycleType& t) {
    if (t.order() % 2 == 0 || t.order() == 1) return std::nullopt;
    Perm s = canonical_rep(n, t);
    Perm sigma = reversal_involution(s);
    ReasonStep r = step(
        RuleId::OddOrder,
        "ord(s) is odd, so ord(q_ss) is odd for every rho: q_ss = 1 gives the trivial "
        "braiding and otherwise the rank-2 real subspace is of affine type");
    r.decided = true;
    r.base_point = s.to_cycle_string();
    r.sigma = sigma.to_cycle_string();
    return r;
  }

  static std::optional<ReasonStep> dosdos(int n, const CycleType& t) {
    if (!is_dosdos_type(t)) return std::nullopt;
    ReasonStep r = step(RuleId::DosDos,
                        "type (1^a, 2^2, odd cycles): reduce to the S4 core of type (2,2) "
                        "and settle all five centralizer irreducibles there");
    r.decided = true;
    r.base_point = canonical_rep(n, t).to_cycle_string();
    r.split_pi = s4_core_type().to_string();
    std::map<int, int> rest;
    long rest_deg = 0;
    for (auto [j, m] : t.multiplicities()) {
      int keep = j == 2 ? m - 2 : m;
      if (keep > 0) {
        rest[j] = keep;
        rest_deg += static_cast<long>(j) * keep;
      }
    }
    if (rest_deg > 0) r.split_tau = CycleType(static_cast<int>(rest_deg), rest).to_string();
    r.sub_pairs = dosdos_core_analysis();
    return r;
  }

  static std::optional<ReasonStep> reduction(int n, const CycleType& t);
};

std::optional<ReasonStep> OrbitRules::reduction(int, const CycleType& t) {
  for (const auto& split : reduction_decompose(t)) {
    OrbitVerdict sub = orbit_verdict(split.pi.degree(), split.pi);
    if (sub.outcome == OrbitOutcome::InfiniteForAllRho) {
      ReasonStep r = step(RuleId::Reduction,
                          "orthogonal split with coprime orders and odd tau: the pi part is "
                          "already infinite for every rho");
      r.decided = true;
      r.split_pi = split.pi.to_string();
      r.split_tau = split.tau.to_string();
      r.sub_orbits.push_back(std::make_shared<OrbitVerdict>(std::move(sub)));
      return r;
    }
  }
  return std::nullopt;
}

}  // namespace

OrbitVerdict orbit_verdict(int n, const CycleType& t) {
  if (t.degree() != n) throw std::invalid_argument("cycle type degree mismatch");
  OrbitVerdict v{OrbitOutcome::Unknown, n, t, {}};

  if (auto s = OrbitRules::trivial(n, t)) {
    v.trace.push_back(std::move(*s));
    v.outcome = OrbitOutcome::InfiniteForAllRho;
    return v;
  }
  v.trace.push_back(step(RuleId::TrivialBraiding, "orbit is not trivial"));

  if (auto s = OrbitRules::odd_order(n, t)) {
    v.trace.push_back(std::move(*s));
    v.outcome = OrbitOutcome::InfiniteForAllRho;
    return v;
  }
  v.trace.push_back(step(RuleId::OddOrder, "lcm of cycle lengths is even"));

  if (auto s = OrbitRules::dosdos(n, t)) {
    v.trace.push_back(std::move(*s));
    v.outcome = OrbitOutcome::InfiniteForAllRho;
    return v;
  }
  v.trace.push_back(step(RuleId::DosDos, "type is not (1^a, 2^2, odd cycles)"));

  if (auto s = OrbitRules::reduction(n, t)) {
    v.trace.push_back(std::move(*s));
    v.outcome = OrbitOutcome::InfiniteForAllRho;
    return v;
  }
  v.trace.push_back(step(RuleId::Reduction, "no split settles the pi part for every rho"));

  return v;
}

namespace {

constexpr long kDiagonalClassCap = 64;  // class size cap for building modules

std::optional<Representation> resolve_label(int n, const CycleType& t,
                                            const std::string& label) {
  Perm s = canonical_rep(n, t);
  return build_character(label, centralizer(n, s));
}

}  // namespace

Verdict pair_verdict(int n, const CycleType& t, const std::string& rep_label) {
  Perm s = canonical_rep(n, t);
  return pair_verdict(n, t, build_character(rep_label, centralizer(n, s)), rep_label);
}

Verdict pair_verdict(int n, const CycleType& t, const Representation& rho,
                     const std::string& rep_label) {
  if (t.degree() != n) throw std::invalid_argument("cycle type degree mismatch");
  Verdict v{Outcome::Unknown, std::nullopt, std::nullopt, n, t, rep_label, {}};
  Perm s = canonical_rep(n, t);
  const Cyclotomic q = q_ss(s, rho);

  // trivial braiding: trivial orbit, trivial rho, or q_ss = 1
  {
    ReasonStep r = step(RuleId::TrivialBraiding, "");
    r.base_point = s.to_cycle_string();
    r.q_ss_text = q.to_string();
    if (is_identity_type(t)) {
      r.decided = true;
      r.note = "the orbit is trivial, so c(v (x) v) = v (x) v";
    } else if (rho.is_trivial()) {
      r.decided = true;
      r.note = "rho is trivial, so c(v (x) v) = v (x) v";
    } else if (q.is_one()) {
      r.decided = true;
      r.note = "q_ss = 1, so c(v (x) v) = v (x) v on the base fiber";
    } else {
      r.note = "orbit and rho nontrivial, q_ss = " + q.to_string();
    }
    bool decided = r.decided;
    v.trace.push_back(std::move(r));
    if (decided) {
      v.outcome = Outcome::Infinite;
      return v;
    }
  }

  // registry of printed finite cases
  if (auto hit = known_finite_registry(n, t, rho)) {
    ReasonStep r = step(RuleId::Registry, "printed finite case [" + hit->source + "]");
    r.decided = true;
    v.trace.push_back(std::move(r));
    v.outcome = Outcome::KnownFinite;
    v.dim = hit->dim;
    v.source = hit->source;
    return v;
  }
  v.trace.push_back(step(RuleId::Registry, "no printed finite case for this pair"));

  // real class: sigma s sigma^-1 = s^-1 != s exists whenever ord(s) > 2
  if (order(s) > 2) {
    Perm sigma = reversal_involution(s);
    const bool odd = order(s) % 2 == 1;
    if (q != Cyclotomic(-1)) {
      ReasonStep r = step(odd ? RuleId::OddOrder : RuleId::RealClass,
                          "q_ss != -1 on a real class: the rank-2 subspace spanned by g_1 v "
                          "and sigma (x) v is diagonal of non-finite Cartan type");
      r.decided = true;
      r.base_point = s.to_cycle_string();
      r.sigma = sigma.to_cycle_string();
      r.q_ss_text = q.to_string();
      r.q_matrix = real_pattern(q);
      auto analysis = verdict_from_diagonal(*r.q_matrix);
      if (analysis.verdict != DiagonalVerdict::Infinite)
        throw std::logic_error("real-class subspace unexpectedly unobstructed");
      r.gcm = analysis.gcm;
      v.trace.push_back(std::move(r));
      v.outcome = Outcome::Infinite;
      return v;
    }
    v.trace.push_back(step(odd ? RuleId::OddOrder : RuleId::RealClass,
                           "q_ss = -1: the rank-2 real subspace is A1 x A1, no obstruction"));
  } else {
    v.trace.push_back(step(RuleId::RealClass, "s is an involution: s^-1 = s, no real-class subspace"));
  }

  // degree constraints
  {
    const auto w3 = root_of_unity(3, 1);
    ReasonStep r = step(RuleId::MatiasDegree, "");
    if (rho.dim() > 2 && q != Cyclotomic(-1)) {
      r.decided = true;
      r.note = "deg rho > 2 forces q_ss = -1 in any finite case; here q_ss = " + q.to_string();
      r.q_ss_text = q.to_string();
      v.trace.push_back(std::move(r));
      v.outcome = Outcome::Infinite;
      return v;
    }
    if (rho.dim() == 2 && q != Cyclotomic(-1) && q != w3 && q != w3 * w3) {
      r.decided = true;
      r.note = "deg rho = 2 forces q_ss in {-1, w3, w3^2} in any finite case; here q_ss = " +
               q.to_string();
      r.q_ss_text = q.to_string();
      v.trace.push_back(std::move(r));
      v.outcome = Outcome::Infinite;
      return v;
    }
    r.note = rho.dim() == 2
                 ? "deg rho = 2 permits q_ss in {-1, w3, w3^2}; constraint recorded"
                 : "degree constraint gives no conclusion";
    v.trace.push_back(std::move(r));
  }

  // two transpositions and odd cycles
  if (is_dosdos_type(t)) {
    if (n == 4 && t == s4_core_type()) {
      v.trace.push_back(step(
          RuleId::DosDos,
          "S4 core of type (2,2) with an explicit rho: deferred to the diagonal computation"));
    } else {
      auto r = OrbitRules::dosdos(n, t);
      v.trace.push_back(std::move(*r));
      v.outcome = Outcome::Infinite;
      return v;
    }
  } else {
    v.trace.push_back(step(RuleId::DosDos, "type is not (1^a, 2^2, odd cycles)"));
  }

  // orthogonal reduction at the class level
  if (auto r = OrbitRules::reduction(n, t)) {
    v.trace.push_back(std::move(*r));
    v.outcome = Outcome::Infinite;
    return v;
  }
  v.trace.push_back(step(RuleId::Reduction, "no split settles the pi part for every rho"));

  // diagonal analysis of the full module for commuting classes
  if (t.class_size() <= kDiagonalClassCap) {
    auto cls = enumerate_class(n, t);
    auto m = build_module(cls, s, rho);
    auto diag = diagonalize_abelian_class(m);
    if (std::holds_alternative<DiagonalizedModule>(diag)) {
      const auto& d = std::get<DiagonalizedModule>(diag);
      auto analysis = verdict_from_diagonal(d.q);
      ReasonStep r = step(RuleId::DiagonalCartan, "");
      r.base_point = s.to_cycle_string();
      r.q_matrix = d.q;
      r.gcm = analysis.gcm;
      if (analysis.verdict == DiagonalVerdict::Infinite) {
        r.decided = true;
        std::string labels;
        if (analysis.type) {
          for (const auto& comp : analysis.type->components) {
            if (!labels.empty()) labels += ", ";
            labels += comp.label;
          }
        }
        r.note = analysis.reason == "qii-one"
                     ? "the diagonalized braiding has q_ii = 1"
                     : "the diagonalized braiding is of Cartan type with components " + labels +
                           ", not of finite type";
        v.trace.push_back(std::move(r));
        v.outcome = Outcome::Infinite;
        return v;
      }
      r.note = analysis.verdict == DiagonalVerdict::FinitePossible
                   ? "the diagonalized braiding is of finite Cartan type: no obstruction"
                   : "the diagonalized braiding yields no conclusion (" + analysis.reason + ")";
      v.trace.push_back(std::move(r));
    } else {
      v.trace.push_back(step(RuleId::DiagonalCartan,
                             "class is not abelian: " +
                                 std::get<NotDiagonalizable>(diag).reason));
    }
  } else {
    v.trace.push_back(step(RuleId::DiagonalCartan, "class too large for the module budget"));
  }

  return v;
}

namespace {

std::vector<std::shared_ptr<const Verdict>> dosdos_core_analysis() {
  static const std::vector<std::shared_ptr<const Verdict>> cached = [] {
    std::vector<std::shared_ptr<const Verdict>> out;
    CycleType core = s4_core_type();
    for (const char* label : {"d4:(1,1)", "d4:(1,-1)", "d4:(-1,1)", "d4:(-1,-1)", "d4:rho2"}) {
      out.push_back(std::make_shared<Verdict>(pair_verdict(4, core, label)));
    }
    return out;
  }();
  return cached;
}

bool verify_step(const Verdict& v, const ReasonStep& r);

bool reverify_real(const ReasonStep& r, int n, const CycleType& t,
                   const std::optional<Representation>& rho) {
  if (!r.base_point || !r.sigma || !r.q_matrix) return false;
  Perm s = Perm::parse(n, *r.base_point);
  Perm sigma = Perm::parse(n, *r.sigma);
  if (cycle_type(s) != t) return false;
  if (conjugate(sigma, s) != s.inverse() || s.inverse() == s) return false;
  if (r.rule == RuleId::OddOrder && order(s) % 2 == 0) return false;
  // the q-matrix must be the real pattern for the actual q_ss, and obstructed
  if (rho) {
    Cyclotomic q = q_ss(s, *rho);
    if (real_pattern(q).q != r.q_matrix->q) return false;
  }
  auto analysis = verdict_from_diagonal(*r.q_matrix);
  if (analysis.verdict != DiagonalVerdict::Infinite) return false;
  // re-extract from the module when it is desk-sized
  if (rho && t.class_size() <= kDiagonalClassCap) {
    auto m = build_module(enumerate_class(n, t), s, *rho);
    auto sub = rank2_real_subspace(m, sigma);
    if (sub.q.q != r.q_matrix->q) return false;
  }
  return true;
}

bool verify_orbit_step(const OrbitVerdict& v, const ReasonStep& r) {
  switch (r.rule) {
    case RuleId::TrivialBraiding:
      return is_identity_type(v.type);
    case RuleId::OddOrder: {
      if (v.type.order() % 2 == 0 || v.type.order() == 1) return false;
      if (!r.base_point || !r.sigma) return false;
      Perm s = Perm::parse(v.n, *r.base_point);
      Perm sigma = Perm::parse(v.n, *r.sigma);
      return cycle_type(s) == v.type && conjugate(sigma, s) == s.inverse() &&
             !(s.inverse() == s);
    }
    case RuleId::DosDos: {
      if (!is_dosdos_type(v.type)) return false;
      if (r.sub_pairs.size() != 5) return false;
      for (const auto& sub : r.sub_pairs) {
        if (sub->outcome != Outcome::Infinite || !verify_trace(*sub)) return false;
      }
      // the split must be (2^2 core, odd remainder of coprime order)
      if (!r.split_pi || *r.split_pi != s4_core_type().to_string()) return false;
      if (r.split_tau) {
        CycleType tau = CycleType::parse(static_cast<int>(v.type.degree() - 4), *r.split_tau);
        if (tau.order() % 2 == 0) return false;
        if (std::gcd(tau.order(), 2L) != 1) return false;
      }
      return true;
    }
    case RuleId::Reduction: {
      if (!r.split_pi || !r.split_tau || r.sub_orbits.size() != 1) return false;
      const auto& sub = *r.sub_orbits[0];
      if (sub.outcome != OrbitOutcome::InfiniteForAllRho) return false;
      if (!verify_trace(sub)) return false;
      CycleType pi = sub.type;
      if (pi.to_string() != *r.split_pi) return false;
      CycleType tau = CycleType::parse(v.n - pi.degree(), *r.split_tau);
      if (!is_orthogonal(pi, tau)) return false;
      if (std::gcd(pi.order(), tau.order()) != 1) return false;
      if (tau.order() % 2 == 0) return false;
      // the split must reassemble the original type
      std::map<int, int> merged = pi.multiplicities();
      for (auto [j, m] : tau.multiplicities()) merged[j] += m;
      return CycleType(v.n, merged) == v.type;
    }
    default:
      return false;
  }
}

bool verify_step(const Verdict& v, const ReasonStep& r) {
  std::optional<Representation> rho;
  try {
    rho = resolve_label(v.n, v.type, v.rep_label);
  } catch (const std::exception&) {
    rho = std::nullopt;
  }
  switch (r.rule) {
    case RuleId::TrivialBraiding: {
      if (is_identity_type(v.type)) return true;
      if (!rho) return false;
      return rho->is_trivial() || q_ss(canonical_rep(v.n, v.type), *rho).is_one();
    }
    case RuleId::Registry: {
      if (!rho) return false;
      auto hit = known_finite_registry(v.n, v.type, *rho);
      return hit && v.dim && hit->dim == *v.dim && v.source && hit->source == *v.source;
    }
    case RuleId::RealClass:
    case RuleId::OddOrder:
      return reverify_real(r, v.n, v.type, rho);
    case RuleId::MatiasDegree: {
      if (!rho) return false;
      Cyclotomic q = q_ss(canonical_rep(v.n, v.type), *rho);
      const auto w3 = root_of_unity(3, 1);
      if (rho->dim() > 2) return q != Cyclotomic(-1);
      if (rho->dim() == 2) return q != Cyclotomic(-1) && q != w3 && q != w3 * w3;
      return false;
    }
    case RuleId::DosDos:
    case RuleId::Reduction: {
      OrbitVerdict shim{OrbitOutcome::InfiniteForAllRho, v.n, v.type, {}};
      return verify_orbit_step(shim, r);
    }
    case RuleId::DiagonalCartan: {
      if (!rho || !r.q_matrix) return false;
      auto m = build_module(enumerate_class(v.n, v.type), canonical_rep(v.n, v.type), *rho);
      auto diag = diagonalize_abelian_class(m);
      if (!std::holds_alternative<DiagonalizedModule>(diag)) return false;
      if (std::get<DiagonalizedModule>(diag).q.q != r.q_matrix->q) return false;
      auto analysis = verdict_from_diagonal(*r.q_matrix);
      return analysis.verdict == DiagonalVerdict::Infinite;
    }
  }
  return false;
}

}  // namespace

bool verify_trace(const Verdict& v) {
  if (v.outcome == Outcome::Unknown) {
    for (const auto& r : v.trace)
      if (r.decided) return false;
    return true;
  }
  for (const auto& r : v.trace) {
    if (r.decided) return verify_step(v, r);
  }
  return false;
}

bool verify_trace(const OrbitVerdict& v) {
  if (v.outcome == OrbitOutcome::Unknown) {
    for (const auto& r : v.trace)
      if (r.decided) return false;
    return true;
  }
  for (const auto& r : v.trace) {
    if (r.decided) return verify_orbit_step(v, r);
  }
  return false;
}

}  // namespace ydn
