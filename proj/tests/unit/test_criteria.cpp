#include <doctest.h>

#include <algorithm>
#include <numeric>

#include "ydn/criteria.hpp"
#include "ydn/ydmod.hpp"

using namespace ydn;

namespace {

CycleType T(int n, const char* text) { return CycleType::parse(n, text); }

const ReasonStep* deciding(const Verdict& v) {
  for (const auto& r : v.trace)
    if (r.decided) return &r;
  return nullptr;
}

std::vector<CycleType> all_types(int n) {
  std::vector<CycleType> out;
  // partitions of n by descending largest part
  std::vector<int> parts;
  auto rec = [&](auto&& self, int rest, int maxpart) -> void {
    if (rest == 0) {
      std::map<int, int> mult;
      for (int p : parts) ++mult[p];
      out.push_back(CycleType(n, mult));
      return;
    }
    for (int p = std::min(rest, maxpart); p >= 1; --p) {
      parts.push_back(p);
      self(self, rest - p, p);
      parts.pop_back();
    }
  };
  rec(rec, n, n);
  return out;
}

}  // namespace

TEST_CASE("pair verdict: the printed S3 finite case") {
  auto v = pair_verdict(3, T(3, "2 1"), "sgn");
  CHECK(v.outcome == Outcome::KnownFinite);
  CHECK(v.dim == 12);
  CHECK(v.source == "ms");
  REQUIRE(deciding(v) != nullptr);
  CHECK(deciding(v)->rule == RuleId::Registry);
  CHECK(verify_trace(v));
}

TEST_CASE("pair verdict: chi4 on the 4-cycles is infinite via the real class") {
  for (const char* label : {"chi4", "chi4^3"}) {
    auto v = pair_verdict(4, T(4, "4"), label);
    CHECK(v.outcome == Outcome::Infinite);
    REQUIRE(deciding(v) != nullptr);
    CHECK(deciding(v)->rule == RuleId::RealClass);
    CHECK(deciding(v)->sigma == "(1 3)");
    REQUIRE(deciding(v)->gcm.has_value());
    CHECK(deciding(v)->gcm->at(0, 1) == -2);
    CHECK(verify_trace(v));
  }
}

TEST_CASE("pair verdict: the (2,2) class with the 2-dim representation") {
  auto v = pair_verdict(4, T(4, "2^2"), "d4:rho2");
  CHECK(v.outcome == Outcome::Infinite);
  REQUIRE(deciding(v) != nullptr);
  CHECK(deciding(v)->rule == RuleId::DiagonalCartan);
  REQUIRE(deciding(v)->q_matrix.has_value());
  CHECK(deciding(v)->q_matrix->rank() == 6);
  for (std::size_t i = 0; i < 6; ++i)
    CHECK(deciding(v)->q_matrix->q[i][i] == Cyclotomic(-1));
  // two affine components of size 3
  REQUIRE(deciding(v)->gcm.has_value());
  auto comps = components(*deciding(v)->gcm);
  REQUIRE(comps.size() == 2);
  CHECK(comps[0].size() == 3);
  CHECK(comps[1].size() == 3);
  auto type = is_finite_type(*deciding(v)->gcm);
  CHECK(!type.finite);
  for (const auto& c : type.components) CHECK(c.label == "A2^(1)");
  CHECK(verify_trace(v));
}

TEST_CASE("pair verdict: characters of the (2,2) class fall to trivial braiding") {
  for (const char* label : {"d4:(1,1)", "d4:(1,-1)", "d4:(-1,1)", "d4:(-1,-1)"}) {
    auto v = pair_verdict(4, T(4, "2^2"), label);
    CHECK(v.outcome == Outcome::Infinite);
    REQUIRE(deciding(v) != nullptr);
    CHECK(deciding(v)->rule == RuleId::TrivialBraiding);
    CHECK(verify_trace(v));
  }
}

TEST_CASE("orbit verdicts") {
  auto odd = orbit_verdict(9, T(9, "3^3"));
  CHECK(odd.outcome == OrbitOutcome::InfiniteForAllRho);
  CHECK(odd.trace.back().rule == RuleId::OddOrder);
  CHECK(verify_trace(odd));

  auto dd = orbit_verdict(8, T(8, "2^2 3 1"));
  CHECK(dd.outcome == OrbitOutcome::InfiniteForAllRho);
  REQUIRE(!dd.trace.empty());
  CHECK(dd.trace.back().rule == RuleId::DosDos);
  CHECK(dd.trace.back().sub_pairs.size() == 5);
  CHECK(verify_trace(dd));

  auto four = orbit_verdict(4, T(4, "4"));
  CHECK(four.outcome == OrbitOutcome::Unknown);
  CHECK(verify_trace(four));

  auto trivial = orbit_verdict(5, T(5, "1^5"));
  CHECK(trivial.outcome == OrbitOutcome::InfiniteForAllRho);
  CHECK(trivial.trace.back().rule == RuleId::TrivialBraiding);
  CHECK(verify_trace(trivial));
}

TEST_CASE("reduction decomposition") {
  auto splits = reduction_decompose(T(7, "2^2 3"));
  REQUIRE(splits.size() == 1);
  CHECK(splits[0].pi.to_string() == "2^2");
  CHECK(splits[0].tau.to_string() == "3");

  CHECK(reduction_decompose(T(2, "2")).empty());

  auto both = reduction_decompose(T(8, "3 5"));
  REQUIRE(both.size() == 2);
  for (const auto& s : both) {
    CHECK(std::gcd(s.pi.order(), s.tau.order()) == 1);
    CHECK(s.tau.order() % 2 == 1);
  }

  // fixed points may ride on the tau side only when tau stays odd
  for (const auto& s : reduction_decompose(T(6, "2 1^4"))) {
    CHECK(s.tau.order() % 2 == 1);
  }
}

TEST_CASE("registry is an exact lookup") {
  auto check = [](int n, const char* type, const char* label,
                  std::optional<std::pair<long, const char*>> expect) {
    auto t = CycleType::parse(n, type);
    auto s = canonical_rep(n, t);
    auto rho = build_character(label, centralizer(n, s));
    auto hit = known_finite_registry(n, t, rho);
    if (!expect) {
      CHECK(!hit.has_value());
    } else {
      REQUIRE(hit.has_value());
      CHECK(hit->dim == expect->first);
      CHECK(hit->source == expect->second);
    }
  };
  check(3, "2 1", "sgn", {{12, "ms"}});
  check(3, "2 1", "eps", std::nullopt);
  check(4, "4", "chi4^2", {{576, "AG2 6.12"}});
  check(4, "4", "chi4", std::nullopt);
  check(4, "2 1^2", "sgn*eps", {{576, "FK"}});
  check(4, "2 1^2", "sgn*sgn", {{576, "ms"}});
  check(4, "2 1^2", "eps*sgn", std::nullopt);
  // n = 5 transposition finite cases are deliberately not encoded
  check(5, "2 1^3", "sgn*eps", std::nullopt);
  check(5, "2 1^3", "sgn*sgn", std::nullopt);
}

TEST_CASE("the hard open problem stays Unknown") {
  for (const char* label : {"sgn*eps", "sgn*sgn"}) {
    auto v = pair_verdict(6, T(6, "2 1^4"), label);
    CHECK(v.outcome == Outcome::Unknown);
    CHECK(verify_trace(v));
  }
}

TEST_CASE("main theorem consistency on S3..S6") {
  for (int n = 3; n <= 6; ++n) {
    for (const auto& t : all_types(n)) {
      if (t.order() % 2 == 1) {
        auto v = orbit_verdict(n, t);
        CHECK_MESSAGE(v.outcome == OrbitOutcome::InfiniteForAllRho, t.to_string());
        CHECK(verify_trace(v));
      }
    }
  }
  for (int n = 4; n <= 6; ++n) {
    for (const auto& t : all_types(n)) {
      bool dosdos_shape = t.multiplicity(2) == 2;
      for (auto [j, m] : t.multiplicities())
        if (j > 2 && j % 2 == 0 && m > 0) dosdos_shape = false;
      if (dosdos_shape) {
        auto v = orbit_verdict(n, t);
        CHECK_MESSAGE(v.outcome == OrbitOutcome::InfiniteForAllRho, t.to_string());
      }
    }
  }
}

TEST_CASE("registry and infiniteness rules are disjoint over S3 and S4") {
  for (int n = 3; n <= 4; ++n) {
    for (const auto& t : all_types(n)) {
      auto s = canonical_rep(n, t);
      auto cent = centralizer(n, s);
      std::vector<std::string> labels{"eps", "sgn"};
      if (n == 4 && t == T(4, "2^2"))
        labels = {"d4:(1,1)", "d4:(1,-1)", "d4:(-1,1)", "d4:(-1,-1)", "d4:rho2"};
      if (t.multiplicity(n) == 1) {
        for (int k = 0; k < n; ++k) labels.push_back("chi" + std::to_string(n) + "^" + std::to_string(k));
      }
      for (const auto& label : labels) {
        auto v = pair_verdict(n, t, label);
        if (v.outcome != Outcome::KnownFinite) continue;
        auto rho = build_character(label, cent);
        // no infiniteness rule may apply to a registry hit
        CHECK(t.multiplicity(1) != n);
        CHECK(!rho.is_trivial());
        auto q = q_ss(s, rho);
        CHECK(!q.is_one());
        if (order(s) > 2) CHECK(q == Cyclotomic(-1));
        CHECK(orbit_verdict(n, t).outcome == OrbitOutcome::Unknown);
        auto m = build_module(enumerate_class(n, t), s, rho);
        auto diag = diagonalize_abelian_class(m);
        if (std::holds_alternative<DiagonalizedModule>(diag)) {
          auto analysis = verdict_from_diagonal(std::get<DiagonalizedModule>(diag).q);
          CHECK(analysis.verdict != DiagonalVerdict::Infinite);
        }
      }
    }
  }
}

TEST_CASE("every trace in a mixed corpus re-verifies") {
  std::vector<Verdict> corpus;
  corpus.push_back(pair_verdict(3, T(3, "2 1"), "eps"));
  corpus.push_back(pair_verdict(3, T(3, "2 1"), "sgn"));
  corpus.push_back(pair_verdict(3, T(3, "3"), "chi3"));
  corpus.push_back(pair_verdict(4, T(4, "4"), "eps"));
  corpus.push_back(pair_verdict(4, T(4, "4"), "chi4"));
  corpus.push_back(pair_verdict(4, T(4, "4"), "chi4^2"));
  corpus.push_back(pair_verdict(4, T(4, "2^2"), "d4:rho2"));
  corpus.push_back(pair_verdict(4, T(4, "2 1^2"), "sgn*eps"));
  corpus.push_back(pair_verdict(4, T(4, "2 1^2"), "eps*sgn"));
  corpus.push_back(pair_verdict(5, T(5, "2^2 1"), "eps"));
  corpus.push_back(pair_verdict(6, T(6, "2 1^4"), "sgn*sgn"));
  corpus.push_back(pair_verdict(6, T(6, "3^2"), "sgn"));  // wreath factor, one label word
  for (const auto& v : corpus) {
    std::string what = v.rep_label + " on " + v.type.to_string();
    CHECK_MESSAGE(verify_trace(v), what);
  }
}

TEST_CASE("a five-cycle class with fixed points is infinite via odd order") {
  auto v = pair_verdict(6, T(6, "5 1"), "chi5");
  CHECK(v.outcome == Outcome::Infinite);
  REQUIRE(deciding(v) != nullptr);
  CHECK(deciding(v)->rule == RuleId::OddOrder);
  CHECK(verify_trace(v));
}
