#include <doctest.h>

#include <algorithm>
#include <numeric>
#include <random>

#include "ydn/permcore.hpp"

using namespace ydn;

namespace {

Perm P(int n, const char* text) { return Perm::parse(n, text); }

// independent oracle: all of S_n by next_permutation, filtered by type
std::vector<Perm> class_by_filter(int n, const CycleType& t) {
  std::vector<int> img(static_cast<std::size_t>(n));
  std::iota(img.begin(), img.end(), 0);
  std::vector<Perm> out;
  do {
    Perm g = Perm::from_images(img);
    if (cycle_type(g) == t) out.push_back(std::move(g));
  } while (std::next_permutation(img.begin(), img.end()));
  return out;
}

std::vector<Perm> all_of_sn(int n) {
  std::vector<int> img(static_cast<std::size_t>(n));
  std::iota(img.begin(), img.end(), 0);
  std::vector<Perm> out;
  do {
    out.push_back(Perm::from_images(img));
  } while (std::next_permutation(img.begin(), img.end()));
  return out;
}

}  // namespace

TEST_CASE("compose") {
  CHECK(P(2, "(1 2)") * P(2, "(1 2)") == Perm(2));
  CHECK(P(3, "(1 2)") * P(3, "(2 3)") == P(3, "(1 2 3)"));
  CHECK(Perm(3) * P(3, "(1 3)") == P(3, "(1 3)"));
  CHECK_THROWS_AS(P(3, "(1 2)") * P(4, "(1 2)"), std::invalid_argument);
}

TEST_CASE("conjugate") {
  CHECK(conjugate(P(3, "(1 2)"), P(3, "(2 3)")) == P(3, "(1 3)"));
  CHECK(conjugate(P(4, "(1 2 3 4)"), Perm(4)) == Perm(4));
  // sigma_2 |> a = b in the (2,2) class
  CHECK(conjugate(P(4, "(2 3)"), P(4, "(1 3)(2 4)")) == P(4, "(1 2)(3 4)"));
}

TEST_CASE("conjugation preserves cycle type") {
  for (const auto& g : all_of_sn(4))
    for (const auto& h : all_of_sn(4))
      CHECK(cycle_type(conjugate(g, h)) == cycle_type(h));
  std::mt19937 rng(7);
  auto s6 = all_of_sn(6);
  std::uniform_int_distribution<std::size_t> pick(0, s6.size() - 1);
  for (int i = 0; i < 500; ++i) {
    const Perm& g = s6[pick(rng)];
    const Perm& h = s6[pick(rng)];
    CHECK(cycle_type(conjugate(g, h)) == cycle_type(h));
  }
}

TEST_CASE("cycle types and order") {
  CHECK(cycle_type(P(4, "(1 2)(3 4)")) == CycleType::parse(4, "2^2"));
  CHECK(cycle_type(Perm(5)) == CycleType::parse(5, "1^5"));
  CHECK(cycle_type(P(5, "(1 2 3)(4 5)")) == CycleType::parse(5, "2 3"));
  CHECK(order(P(3, "(1 2 3)")) == 3);
  CHECK(order(P(5, "(1 2)(3 4 5)")) == 6);
  CHECK(order(Perm(4)) == 1);
  CHECK(CycleType::parse(6, "2").to_string() == "1^4 2");
  CHECK_THROWS_AS(CycleType::parse(3, "2^2"), std::invalid_argument);
}

TEST_CASE("enumerate_class matches the filter oracle") {
  auto c22 = enumerate_class(4, CycleType::parse(4, "2^2"));
  REQUIRE(c22.size() == 3);
  CHECK(c22[0] == P(4, "(1 2)(3 4)"));
  CHECK(std::count(c22.begin(), c22.end(), P(4, "(1 3)(2 4)")) == 1);
  CHECK(std::count(c22.begin(), c22.end(), P(4, "(1 4)(2 3)")) == 1);
  CHECK(enumerate_class(3, CycleType::parse(3, "2 1")).size() == 3);
  CHECK(enumerate_class(4, CycleType::parse(4, "4")).size() == 6);

  for (int n = 3; n <= 6; ++n) {
    auto all = all_of_sn(n);
    std::vector<CycleType> types;
    for (const auto& g : all) {
      auto t = cycle_type(g);
      if (std::find(types.begin(), types.end(), t) == types.end()) types.push_back(t);
    }
    for (const auto& t : types) {
      auto direct = enumerate_class(n, t);
      auto oracle = class_by_filter(n, t);
      CHECK(direct == oracle);  // same elements, same lexicographic order
    }
  }
}

TEST_CASE("centralizer structure and size") {
  auto d4 = centralizer(4, P(4, "(1 3)(2 4)"));
  CHECK(d4.order() == 8);
  CHECK(d4.structure() == GroupStructure::Dihedral4);
  CHECK(d4.contains(P(4, "(1 2 3 4)")));
  CHECK(d4.contains(P(4, "(1 3)")));
  // and it is exactly <(1234),(13)>
  auto gen = Subgroup::from_generators(4, {P(4, "(1 2 3 4)"), P(4, "(1 3)")});
  CHECK(gen.elements().size() == 8);
  for (const auto& g : gen.elements()) CHECK(d4.contains(g));

  auto zn = centralizer(5, P(5, "(1 2 3 4 5)"));
  CHECK(zn.order() == 5);
  CHECK(zn.structure() == GroupStructure::Cyclic);

  auto full = centralizer(4, Perm(4));
  CHECK(full.order() == 24);
  CHECK(full.structure() == GroupStructure::Full);

  auto z2z2 = centralizer(4, P(4, "(1 2)"));
  CHECK(z2z2.order() == 4);
  CHECK(z2z2.structure() == GroupStructure::ProductOfCyclics);
  CHECK(z2z2.structure_name() == "Z2 x Z2");
}

TEST_CASE("orbit-stabilizer, exhaustive for n <= 5") {
  for (int n = 3; n <= 5; ++n) {
    Int nfact = 1;
    for (int i = 2; i <= n; ++i) nfact *= i;
    for (const auto& s : all_of_sn(n)) {
      auto t = cycle_type(s);
      CHECK(t.class_size() * centralizer(n, s).order() == nfact);
    }
  }
}

TEST_CASE("coset sections") {
  auto s = P(4, "(1 3)(2 4)");
  auto cls = enumerate_class(4, CycleType::parse(4, "2^2"));
  auto sec = coset_section(cls, s);
  REQUIRE(sec.cls.size() == 3);
  CHECK(sec.cls[0] == s);
  CHECK(sec.reps[0] == Perm(4));
  for (std::size_t i = 0; i < sec.cls.size(); ++i) {
    CHECK(conjugate(sec.reps[i], s) == sec.cls[i]);
  }
  // the paper's (e, (12), (23)) is also a valid section for the same class
  CHECK(conjugate(P(4, "(1 2)"), s) == P(4, "(1 4)(2 3)"));
  CHECK(conjugate(P(4, "(2 3)"), s) == P(4, "(1 2)(3 4)"));

  auto central = coset_section({P(2, "(1 2)")}, P(2, "(1 2)"));
  CHECK(central.reps.size() == 1);

  auto o2 = enumerate_class(3, CycleType::parse(3, "2 1"));
  auto sec2 = coset_section(o2, P(3, "(1 2)"));
  for (std::size_t i = 0; i < sec2.cls.size(); ++i)
    CHECK(conjugate(sec2.reps[i], P(3, "(1 2)")) == sec2.cls[i]);

  CHECK_THROWS_AS(coset_section(o2, P(3, "(1 2 3)")), std::invalid_argument);
}

TEST_CASE("reversal involution uses the explicit transposition product") {
  CHECK(reversal_involution(P(4, "(1 2 3 4)")) == P(4, "(1 3)"));
  CHECK(conjugate(P(4, "(1 3)"), P(4, "(1 2 3 4)")) == P(4, "(1 4 3 2)"));
  CHECK(reversal_involution(P(3, "(1 2 3)")) == P(3, "(1 2)"));
  CHECK(reversal_involution(Perm(3)) == Perm(3));

  for (int n = 3; n <= 6; ++n) {
    for (const auto& p : all_of_sn(n)) {
      Perm sigma = reversal_involution(p);
      CHECK(conjugate(sigma, p) == p.inverse());
      CHECK((sigma * sigma).is_identity());
    }
  }
}

TEST_CASE("concat and orthogonality") {
  CHECK(concat(P(2, "(1 2)"), P(2, "(1 2)")) == P(4, "(1 2)(3 4)"));
  CHECK(is_orthogonal(P(4, "(1 2)(3 4)"), P(3, "(1 2 3)")));
  CHECK(!is_orthogonal(P(2, "(1 2)"), P(2, "(1 2)")));
  // fixed points count as common 1-cycles
  CHECK(!is_orthogonal(P(3, "(1 2)"), P(2, "e")));

  std::mt19937 rng(99);
  auto s4 = all_of_sn(4);
  auto s3 = all_of_sn(3);
  std::uniform_int_distribution<std::size_t> p4(0, s4.size() - 1), p3(0, s3.size() - 1);
  for (int i = 0; i < 300; ++i) {
    const Perm &pi = s4[p4(rng)], &tau = s3[p3(rng)];
    const Perm &g = s4[p4(rng)], &h = s3[p3(rng)];
    CHECK(conjugate(concat(g, h), concat(pi, tau)) ==
          concat(conjugate(g, pi), conjugate(h, tau)));
  }
}

TEST_CASE("orthogonal concat splits the centralizer order") {
  for (const auto& pi : all_of_sn(4)) {
    for (const auto& tau : all_of_sn(3)) {
      if (!is_orthogonal(pi, tau)) continue;
      auto whole = centralizer(7, concat(pi, tau));
      CHECK(whole.order() == centralizer(4, pi).order() * centralizer(3, tau).order());
    }
  }
}

TEST_CASE("cycle notation round-trip") {
  for (const char* text : {"e", "(1 2)", "(1 2)(3 4)", "(1 2 3 4 5)", "(2 4)(3 5)"}) {
    Perm p = P(5, text);
    CHECK(p.to_cycle_string() == text);
    CHECK(Perm::parse(5, p.to_cycle_string()) == p);
  }
  CHECK_THROWS_AS(P(3, "(1 2"), std::invalid_argument);
  CHECK_THROWS_AS(P(3, "(1 1)"), std::invalid_argument);
  CHECK_THROWS_AS(P(3, "(1 4)"), std::invalid_argument);
}

TEST_CASE("canonical representatives") {
  CHECK(canonical_rep(4, CycleType::parse(4, "4")) == P(4, "(1 2 3 4)"));
  CHECK(canonical_rep(4, CycleType::parse(4, "2^2")) == P(4, "(1 2)(3 4)"));
  CHECK(canonical_rep(3, CycleType::parse(3, "2")) == P(3, "(1 2)"));
  CHECK(canonical_rep(7, CycleType::parse(7, "2^2 3")) == P(7, "(1 2 3)(4 5)(6 7)"));
}
