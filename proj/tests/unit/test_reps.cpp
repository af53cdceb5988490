#include <doctest.h>

#include "ydn/reps.hpp"

using namespace ydn;

namespace {
Perm P(int n, const char* text) { return Perm::parse(n, text); }
Cyclotomic w(long n, long k = 1) { return root_of_unity(n, k); }
}  // namespace

TEST_CASE("characters of cyclic centralizers") {
  auto z4 = centralizer(4, P(4, "(1 2 3 4)"));
  auto chi42 = build_character("chi4^2", z4);
  CHECK(chi42.dim() == 1);
  CHECK(chi42.matrix(P(4, "(1 2 3 4)")).at(0, 0) == Cyclotomic(-1));
  auto chi4 = build_character("chi4", z4);
  CHECK(chi4.matrix(P(4, "(1 2 3 4)")).at(0, 0) == w(4));
  CHECK(chi4.matrix(P(4, "(1 3)(2 4)")).at(0, 0) == Cyclotomic(-1));  // tau^2

  auto z2 = centralizer(3, P(3, "(1 2)"));
  auto sgn = build_character("sgn", z2);
  CHECK(sgn.matrix(P(3, "(1 2)")).at(0, 0) == Cyclotomic(-1));

  auto eps = build_character("eps", z2);
  CHECK(eps.is_trivial());
  CHECK(eps.matrix(P(3, "(1 2)")).at(0, 0) == Cyclotomic(1));

  CHECK_THROWS_AS(build_character("chi3", z4), std::invalid_argument);
  CHECK_THROWS_AS(build_character("nonsense", z4), std::invalid_argument);
}

TEST_CASE("two-factor characters of the S4 transposition centralizer") {
  auto c = centralizer(4, P(4, "(1 2)"));  // <(12)> x <(34)>
  auto sgn_eps = build_character("sgn*eps", c);
  CHECK(sgn_eps.matrix(P(4, "(1 2)")).at(0, 0) == Cyclotomic(-1));
  CHECK(sgn_eps.matrix(P(4, "(3 4)")).at(0, 0) == Cyclotomic(1));
  auto eps_sgn = build_character("eps*sgn", c);
  CHECK(eps_sgn.matrix(P(4, "(1 2)")).at(0, 0) == Cyclotomic(1));
  CHECK(eps_sgn.matrix(P(4, "(3 4)")).at(0, 0) == Cyclotomic(-1));
  auto sgn_sgn = build_character("sgn*sgn", c);
  CHECK(sgn_sgn.matrix(P(4, "(1 2)(3 4)")).at(0, 0) == Cyclotomic(1));
  // whole-group sign restriction agrees with sgn*sgn here
  auto amb = build_character("sgn", c);
  for (const auto& g : c.elements()) CHECK(amb.matrix(g) == sgn_sgn.matrix(g));
}

TEST_CASE("block permutation signs in characters") {
  // centralizer of (12)(34) in S4 is D4; the sign part acts on cycle swaps
  auto c = centralizer(6, P(6, "(1 2)(3 4)"));  // factors: 2^2 and two fixed points
  auto chi = build_character("sgn*sgn", c);
  // (13)(24) swaps the two 2-cycles: j = 2 even, so the sgn word is blind to
  // the swap but each 2-cycle contributes w_2
  CHECK(chi.matrix(P(6, "(1 3)(2 4)")).at(0, 0) == Cyclotomic(1));
  CHECK(chi.matrix(P(6, "(5 6)")).at(0, 0) == Cyclotomic(-1));
  CHECK(chi.matrix(P(6, "(1 2)")).at(0, 0) == Cyclotomic(-1));
}

TEST_CASE("dihedral family matches the worked matrices") {
  auto d4 = centralizer(4, P(4, "(1 3)(2 4)"));
  auto rho = dihedral4_rho2(d4);
  CHECK(rho.dim() == 2);

  // the presentation is A = (1234), B = (13)
  CycMatrix expect_a(2, 2), expect_b(2, 2);
  expect_a.at(0, 1) = Cyclotomic(-1);
  expect_a.at(1, 0) = Cyclotomic(1);
  expect_b.at(0, 0) = Cyclotomic(-1);
  expect_b.at(1, 1) = Cyclotomic(1);
  CHECK(rho.matrix(P(4, "(1 2 3 4)")) == expect_a);
  CHECK(rho.matrix(P(4, "(1 3)")) == expect_b);

  // rho(a) = -Id, rho(b) = antidiag(1,1), rho(d) = antidiag(-1,-1)
  CycMatrix minus_id(2, 2), antidiag(2, 2), neg_antidiag(2, 2);
  minus_id.at(0, 0) = Cyclotomic(-1);
  minus_id.at(1, 1) = Cyclotomic(-1);
  antidiag.at(0, 1) = Cyclotomic(1);
  antidiag.at(1, 0) = Cyclotomic(1);
  neg_antidiag.at(0, 1) = Cyclotomic(-1);
  neg_antidiag.at(1, 0) = Cyclotomic(-1);
  CHECK(rho.matrix(P(4, "(1 3)(2 4)")) == minus_id);
  CHECK(rho.matrix(P(4, "(1 2)(3 4)")) == antidiag);
  CHECK(rho.matrix(P(4, "(1 4)(2 3)")) == neg_antidiag);

  auto irreps = dihedral4_irreps(d4);
  REQUIRE(irreps.size() == 5);
  CHECK(irreps[0].is_trivial());  // (1,1)
  for (const auto& r : irreps) CHECK(verify_representation(r));

  auto via_label = build_character("d4:(-1,1)", d4);
  CHECK(via_label.matrix(P(4, "(1 2 3 4)")).at(0, 0) == Cyclotomic(-1));
  CHECK(via_label.matrix(P(4, "(1 3)")).at(0, 0) == Cyclotomic(1));
  CHECK(build_character("d4:rho2", d4).dim() == 2);

  CHECK_THROWS_AS(dihedral4_rho2(centralizer(4, P(4, "(1 2)"))), std::invalid_argument);
}

TEST_CASE("verify_representation catches a violated dihedral relation") {
  auto gens = Subgroup::from_generators(4, {P(4, "(1 2 3 4)"), P(4, "(1 3)")});
  CycMatrix rot(2, 2), id2 = CycMatrix::identity(2);
  rot.at(0, 1) = Cyclotomic(-1);
  rot.at(1, 0) = Cyclotomic(1);
  // B -> Id forces BAB = A, but in the group BAB = A^{-1}
  auto broken = Representation::from_generator_matrices(gens, {rot, id2});
  CHECK(!verify_representation(broken));
}

TEST_CASE("registry representations verify exhaustively") {
  for (int n = 3; n <= 4; ++n) {
    std::vector<const char*> types = n == 3 ? std::vector<const char*>{"3", "2 1", "1^3"}
                                            : std::vector<const char*>{"4", "2^2", "3 1", "2 1^2", "1^4"};
    for (const char* t : types) {
      auto s = canonical_rep(n, CycleType::parse(n, t));
      auto c = centralizer(n, s);
      CHECK(verify_representation(build_character("eps", c)));
      CHECK(verify_representation(build_character("sgn", c)));
    }
  }
  auto z4 = centralizer(4, P(4, "(1 2 3 4)"));
  for (int k = 0; k < 4; ++k) {
    CHECK(verify_representation(build_character(("chi4^" + std::to_string(k)), z4)));
  }
}

TEST_CASE("q_ss") {
  auto z4 = centralizer(4, P(4, "(1 2 3 4)"));
  CHECK(q_ss(P(4, "(1 2 3 4)"), build_character("chi4^2", z4)) == Cyclotomic(-1));
  CHECK(q_ss(P(4, "(1 2 3 4)"), build_character("chi4", z4)) == w(4));

  auto d4 = centralizer(4, P(4, "(1 3)(2 4)"));
  CHECK(q_ss(P(4, "(1 3)(2 4)"), dihedral4_rho2(d4)) == Cyclotomic(-1));
  CHECK(q_ss(P(4, "(1 3)(2 4)"), build_character("eps", d4)) == Cyclotomic(1));

  // (13) is not central in D4 and rho2(13) is not scalar
  CHECK_THROWS_AS(q_ss(P(4, "(1 3)"), dihedral4_rho2(d4)), NonScalarAction);

  // order of q_ss divides the order of s for 1-dim characters
  for (const char* t : {"2 1", "3"}) {
    auto s = canonical_rep(3, CycleType::parse(3, t));
    auto c = centralizer(3, s);
    for (const char* lab : {"eps", "sgn"}) {
      auto q = q_ss(s, build_character(lab, c));
      auto o = order_of(q);
      REQUIRE(o.has_value());
      CHECK(order(s) % *o == 0);
    }
  }
}

TEST_CASE("outer tensor") {
  auto rho = build_character("sgn", centralizer(2, P(2, "(1 2)")));
  auto lam = build_character("chi3", centralizer(3, P(3, "(1 2 3)")));
  auto mu = outer_tensor(rho, lam);
  CHECK(mu.dim() == 1);
  CHECK(mu.group().degree() == 5);
  CHECK(mu.matrix(P(5, "(1 2)")).at(0, 0) == Cyclotomic(-1));
  CHECK(mu.matrix(P(5, "(3 4 5)")).at(0, 0) == w(3));

  // q-scalar multiplicativity
  auto s = concat(P(2, "(1 2)"), P(3, "(1 2 3)"));
  CHECK(q_ss(s, mu) == q_ss(P(2, "(1 2)"), rho) * q_ss(P(3, "(1 2 3)"), lam));

  // eps (x) eps is trivial
  auto te = outer_tensor(build_character("eps", centralizer(2, P(2, "(1 2)"))),
                         build_character("eps", centralizer(3, P(3, "(1 2 3)"))));
  CHECK(te.is_trivial());

  // Kronecker structure on a 2-dim factor
  auto d4 = centralizer(4, P(4, "(1 3)(2 4)"));
  auto big = outer_tensor(dihedral4_rho2(d4), lam);
  CHECK(big.dim() == 2);
  auto g = concat(P(4, "(1 2 3 4)"), P(3, "(1 2 3)"));
  CHECK(big.matrix(g) ==
        dihedral4_rho2(d4).matrix(P(4, "(1 2 3 4)")).kronecker(lam.matrix(P(3, "(1 2 3)"))));

  // non-orthogonal supports are rejected
  CHECK_THROWS_AS(outer_tensor(rho, build_character("sgn", centralizer(2, P(2, "(1 2)")))),
                  std::invalid_argument);
}
