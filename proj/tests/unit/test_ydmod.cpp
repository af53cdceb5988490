#include <doctest.h>

#include "ydn/ydmod.hpp"

using namespace ydn;

namespace {

Perm P(int n, const char* text) { return Perm::parse(n, text); }
Cyclotomic w3(long k = 1) { return root_of_unity(3, k); }

YDModule module_for(int n, const char* type, const char* label) {
  auto t = CycleType::parse(n, type);
  auto s = canonical_rep(n, t);
  auto c = centralizer(n, s);
  return build_module(enumerate_class(n, t), s, build_character(label, c));
}

CycVector unit_vec(int dim, int at) {
  CycVector v(static_cast<std::size_t>(dim));
  v[static_cast<std::size_t>(at)] = Cyclotomic(1);
  return v;
}

}  // namespace

TEST_CASE("module construction") {
  auto s = P(4, "(1 3)(2 4)");
  auto cls = enumerate_class(4, CycleType::parse(4, "2^2"));
  auto d4 = centralizer(4, s);
  auto m = build_module(cls, s, dihedral4_rho2(d4));
  CHECK(m.dim() == 6);
  CHECK(m.blocks() == 3);
  CHECK(m.degree_of_block(0) == s);

  auto m2 = module_for(3, "2 1", "sgn");
  CHECK(m2.dim() == 3);

  auto e1 = Perm(1);
  auto me = build_module({e1}, e1, build_character("eps", centralizer(1, e1)));
  CHECK(me.dim() == 1);
  auto c = braiding(me);
  REQUIRE(c.column(0, 0).size() == 1);
  CHECK(c.column(0, 0)[0].coeff == Cyclotomic(1));

  // wrong centralizer is rejected
  CHECK_THROWS_AS(build_module(cls, s, build_character("sgn", centralizer(4, P(4, "(1 2)")))),
                  std::invalid_argument);
}

TEST_CASE("braiding formulas from the worked one-dimensional case") {
  // M(O_{2,2}, mu) for every character mu: c(v_a (x) v_a) = mu(a) v_a (x) v_a
  // and mu(a) = 1 since a is a square in D4
  auto s = P(4, "(1 3)(2 4)");
  auto cls = enumerate_class(4, CycleType::parse(4, "2^2"));
  auto d4 = centralizer(4, s);
  for (int e1 : {1, -1}) {
    for (int e2 : {1, -1}) {
      auto m = build_module(cls, s, dihedral4_character(d4, e1, e2));
      auto c = braiding(m);
      REQUIRE(c.column(0, 0).size() == 1);
      CHECK(c.column(0, 0)[0].a == 0);
      CHECK(c.column(0, 0)[0].b == 0);
      CHECK(c.column(0, 0)[0].coeff == Cyclotomic(1));
    }
  }
}

TEST_CASE("braiding is basis-pair triangular") {
  for (const auto& m : {module_for(3, "2 1", "sgn"), module_for(4, "4", "chi4^2"),
                        module_for(4, "3 1", "chi3")}) {
    auto c = braiding(m);
    for (int a = 0; a < m.dim(); ++a)
      for (int b = 0; b < m.dim(); ++b)
        for (const auto& term : c.column(a, b)) CHECK(term.b == a);
  }
}

TEST_CASE("axioms hold for the S3 and S4 registry modules") {
  std::vector<YDModule> corpus;
  corpus.push_back(module_for(3, "2 1", "eps"));
  corpus.push_back(module_for(3, "2 1", "sgn"));
  for (int k = 0; k < 3; ++k)
    corpus.push_back(module_for(3, "3", ("chi3^" + std::to_string(k)).c_str()));
  for (int k = 0; k < 4; ++k)
    corpus.push_back(module_for(4, "4", ("chi4^" + std::to_string(k)).c_str()));
  {
    auto s = P(4, "(1 3)(2 4)");
    auto cls = enumerate_class(4, CycleType::parse(4, "2^2"));
    auto d4 = centralizer(4, s);
    for (const auto& rho : dihedral4_irreps(d4)) corpus.push_back(build_module(cls, s, rho));
  }
  for (const auto& m : corpus) {
    auto report = verify_axioms(m);
    CHECK_MESSAGE(report.ok(), report.witness);
  }
}

TEST_CASE("a broken representation fails the braid equation with a witness") {
  auto s = P(4, "(1 3)(2 4)");
  auto cls = enumerate_class(4, CycleType::parse(4, "2^2"));
  auto gens = Subgroup::from_generators(4, {P(4, "(1 2 3 4)"), P(4, "(1 3)")});
  CycMatrix rot(2, 2), id2 = CycMatrix::identity(2);
  rot.at(0, 1) = Cyclotomic(-1);
  rot.at(1, 0) = Cyclotomic(1);
  auto broken = Representation::from_generator_matrices(gens, {rot, id2});
  REQUIRE(!verify_representation(broken));
  auto m = build_module(cls, s, broken);
  auto report = verify_axioms(m);
  CHECK(!report.ok());
  CHECK(!report.witness.empty());
}

TEST_CASE("restriction to stable and unstable subspaces") {
  auto m = module_for(3, "2 1", "sgn");
  auto c = braiding(m);

  // single vector v_s: c(v (x) v) = -v (x) v, the exterior line
  auto single = restrict_braiding(c, {unit_vec(3, 0)});
  REQUIRE(std::holds_alternative<BraidingOperator>(single));
  auto q1 = as_diagonal(std::get<BraidingOperator>(single));
  REQUIRE(q1.has_value());
  CHECK(q1->q[0][0] == Cyclotomic(-1));

  // blocks 1 and 3 do not close: t_1 g_3 lands in block 2
  auto open = restrict_braiding(c, {unit_vec(3, 0), unit_vec(3, 2)});
  REQUIRE(std::holds_alternative<NotClosed>(open));

  // the whole space restricted in the standard basis reproduces the braiding
  auto whole = restrict_braiding(c, {unit_vec(3, 0), unit_vec(3, 1), unit_vec(3, 2)});
  REQUIRE(std::holds_alternative<BraidingOperator>(whole));

  CHECK_THROWS_AS(restrict_braiding(c, {unit_vec(3, 0), unit_vec(3, 0)}),
                  std::invalid_argument);
}

TEST_CASE("rank-2 real subspaces") {
  // s = (123), rho = chi_3: q-matrix [[w3, w3^2], [w3^2, w3]]
  auto m3 = module_for(3, "3", "chi3");
  auto r3 = rank2_real_subspace(m3, reversal_involution(P(3, "(1 2 3)")));
  CHECK(r3.q.q[0][0] == w3());
  CHECK(r3.q.q[0][1] == w3(2));
  CHECK(r3.q.q[1][0] == w3(2));
  CHECK(r3.q.q[1][1] == w3());

  // s = (1234), rho = chi_4^2: q = -1 is self-inverse
  auto m4 = module_for(4, "4", "chi4^2");
  auto r4 = rank2_real_subspace(m4, reversal_involution(P(4, "(1 2 3 4)")));
  for (auto& row : r4.q.q)
    for (auto& x : row) CHECK(x == Cyclotomic(-1));

  // q_12 = q_21 = q_11^-1 always
  auto m4b = module_for(4, "4", "chi4");
  auto r4b = rank2_real_subspace(m4b, reversal_involution(P(4, "(1 2 3 4)")));
  CHECK(r4b.q.q[0][1] == r4b.q.q[0][0].inverse());
  CHECK(r4b.q.q[1][0] == r4b.q.q[0][0].inverse());

  // s an involution: hypothesis fails
  auto m2 = module_for(3, "2 1", "sgn");
  CHECK_THROWS_AS(rank2_real_subspace(m2, P(3, "(1 2)")), std::invalid_argument);
}

TEST_CASE("diagonalization of the (2,2) module with the 2-dim representation") {
  auto s = P(4, "(1 3)(2 4)");
  auto cls = enumerate_class(4, CycleType::parse(4, "2^2"));
  auto d4 = centralizer(4, s);
  auto m = build_module(cls, s, dihedral4_rho2(d4));
  auto out = diagonalize_abelian_class(m);
  REQUIRE(std::holds_alternative<DiagonalizedModule>(out));
  const auto& diag = std::get<DiagonalizedModule>(out);
  REQUIRE(diag.q.rank() == 6);
  for (std::size_t i = 0; i < 6; ++i) CHECK(diag.q.q[i][i] == Cyclotomic(-1));

  // restriction to the eigenbasis agrees with the direct q-matrix
  auto restricted = restrict_braiding(braiding(m), diag.basis);
  REQUIRE(std::holds_alternative<BraidingOperator>(restricted));
  auto q2 = as_diagonal(std::get<BraidingOperator>(restricted));
  REQUIRE(q2.has_value());
  CHECK(q2->q == diag.q.q);

  // transpositions do not commute: not diagonalizable by this routine
  auto m2 = module_for(3, "2 1", "sgn");
  CHECK(std::holds_alternative<NotDiagonalizable>(diagonalize_abelian_class(m2)));
}

TEST_CASE("the paper's w-basis shows components {1,4,6} and {2,3,5}") {
  auto s = P(4, "(1 3)(2 4)");
  auto cls = enumerate_class(4, CycleType::parse(4, "2^2"));
  auto d4 = centralizer(4, s);
  auto m = build_module(cls, s, dihedral4_rho2(d4));

  // v1 = (1,1), v2 = (1,-1) in the fiber over the base point; sigma_j from
  // the worked computation
  CycVector e_v1(6), e_v2(6);
  e_v1[0] = Cyclotomic(1);
  e_v1[1] = Cyclotomic(1);
  e_v2[0] = Cyclotomic(1);
  e_v2[1] = Cyclotomic(-1);
  std::vector<CycVector> w;
  for (const char* sig : {"e", "(1 2)", "(2 3)"}) {
    w.push_back(m.act(P(4, sig), e_v1));
    w.push_back(m.act(P(4, sig), e_v2));
  }
  auto restricted = restrict_braiding(braiding(m), w);
  REQUIRE(std::holds_alternative<BraidingOperator>(restricted));
  auto q = as_diagonal(std::get<BraidingOperator>(restricted));
  REQUIRE(q.has_value());
  for (std::size_t i = 0; i < 6; ++i) CHECK(q->q[i][i] == Cyclotomic(-1));
  // edges inside {1,4,6} and {2,3,5} (0-based {0,3,5}, {1,2,4}), none across
  auto prod = [&](std::size_t i, std::size_t j) { return q->q[i][j] * q->q[j][i]; };
  CHECK(prod(0, 3) == Cyclotomic(-1));
  CHECK(prod(0, 5) == Cyclotomic(-1));
  CHECK(prod(3, 5) == Cyclotomic(-1));
  CHECK(prod(1, 2) == Cyclotomic(-1));
  CHECK(prod(1, 4) == Cyclotomic(-1));
  CHECK(prod(2, 4) == Cyclotomic(-1));
  CHECK(prod(0, 1) == Cyclotomic(1));
  CHECK(prod(0, 2) == Cyclotomic(1));
  CHECK(prod(0, 4) == Cyclotomic(1));
  CHECK(prod(3, 1) == Cyclotomic(1));
  CHECK(prod(3, 2) == Cyclotomic(1));
  CHECK(prod(3, 4) == Cyclotomic(1));
  CHECK(prod(5, 1) == Cyclotomic(1));
  CHECK(prod(5, 2) == Cyclotomic(1));
  CHECK(prod(5, 4) == Cyclotomic(1));
}

TEST_CASE("product embedding") {
  // pi = (12)(34) with a D4 character, tau = a 3-cycle
  auto s4 = P(4, "(1 3)(2 4)");
  auto cls4 = enumerate_class(4, CycleType::parse(4, "2^2"));
  auto d4 = centralizer(4, s4);
  auto mpi = build_module(cls4, s4, dihedral4_character(d4, -1, 1));

  auto tau = P(3, "(1 2 3)");
  auto prod_base = concat(s4, tau);
  auto cls7 = enumerate_class(7, cycle_type(prod_base));

  SUBCASE("lambda = eps gives a braided morphism") {
    auto lam = build_character("eps", centralizer(3, tau));
    auto mu = outer_tensor(dihedral4_character(d4, -1, 1), lam);
    auto mprod = build_module(cls7, prod_base, mu);
    auto report = product_embedding(mpi, mprod, {Cyclotomic(1)});
    CHECK(report.relation_ok);
    CHECK(report.scalar == Cyclotomic(1));
    CHECK(report.braided_morphism);
  }

  SUBCASE("lambda = chi3 twists by w3") {
    auto lam = build_character("chi3", centralizer(3, tau));
    auto mu = outer_tensor(dihedral4_character(d4, -1, 1), lam);
    auto mprod = build_module(cls7, prod_base, mu);
    auto report = product_embedding(mpi, mprod, {Cyclotomic(1)});
    CHECK(report.relation_ok);
    CHECK(report.scalar == root_of_unity(3, 1));
    CHECK(!report.braided_morphism);
  }
}

TEST_CASE("product embedding with trivial tau is the block inclusion") {
  auto s2 = P(2, "(1 2)");
  auto mpi = build_module({s2}, s2, build_character("sgn", centralizer(2, s2)));
  auto prod_base = concat(s2, Perm(1));
  auto cls3 = enumerate_class(3, cycle_type(prod_base));
  auto lam = build_character("eps", centralizer(1, Perm(1)));
  auto mu = outer_tensor(build_character("sgn", centralizer(2, s2)), lam);
  auto mprod = build_module(cls3, prod_base, mu);
  auto report = product_embedding(mpi, mprod, {Cyclotomic(1)});
  CHECK(report.relation_ok);
  CHECK(report.braided_morphism);
}

TEST_CASE("braiding json has stable entries") {
  auto m = module_for(3, "2 1", "sgn");
  auto text = braiding_to_json(braiding(m));
  CHECK(text.find("\"dim\": 3") != std::string::npos);
  CHECK(text.find("\"entries\"") != std::string::npos);
  CHECK(text == braiding_to_json(braiding(m)));
}
