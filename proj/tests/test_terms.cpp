#include <catch_amalgamated.hpp>

#include <random>
#include <set>

#include "globop/contraction.hpp"
#include "globop/io.hpp"
#include "globop/presentation.hpp"
#include "globop/term.hpp"

using namespace globop;

namespace {
PresentationPtr c0_terms(int max_dim = 2, int max_width = 4) {
  return make_presentation(build_complex(0, max_dim), Property::C,
                           Bounds{max_dim, max_width, 64, 100000});
}
}  // namespace

TEST_CASE("gamma: right and left unit laws") {
  auto P = c0_terms();
  TermArena& A = P->arena;
  TermId mu = A.generator("mu(1,0)");
  // right unit: unit outer absorbs
  CHECK(A.gamma(A.unit(1, 1), A.eta_pasting(mu)) == mu);
  // left unit: the all-units pasting of the outer's own arity shape
  TermPasting units = A.unit_pasting(A.arity(mu).tree, 1);
  CHECK(A.gamma(mu, units) == mu);
}

TEST_CASE("gamma: the inner factor of the worked example") {
  auto P = c0_terms();
  TermArena& A = P->arena;
  TermId t = parse_term(*P, "gamma(mu(1,0); u@1(1) *[1,0] mu(1,0))");
  TreeMatrix m = encode_tree(A.arity(t).tree);
  CHECK(m.top == std::vector<int>{1, 1, 1});
  CHECK(m.bot == std::vector<int>{0, 0});
  CHECK(A.dim(t) == 1);
  CHECK(A.src(t) == A.unit(1, 0));
  CHECK(A.tgt(t) == A.unit(1, 0));
}

TEST_CASE("gamma: outer flattening is associativity") {
  auto P = c0_terms();
  TermArena& A = P->arena;
  TermId mu = A.generator("mu(1,0)");
  TermId u1 = A.unit(1, 1);
  // gamma(gamma(mu; u*mu); Q) where Q fills three inputs
  TermId inner = parse_term(*P, "gamma(mu(1,0); u@1(1) *[1,0] mu(1,0))");
  TermPasting Q = A.star_pastings(
      A.star_pastings(A.eta_pasting(mu), A.eta_pasting(u1), 0),
      A.eta_pasting(u1), 0);
  TermId flat = A.gamma(inner, Q);
  // same composite built the other way round
  TermPasting R = A.star_pastings(
      A.eta_pasting(u1),
      A.eta_pasting(A.gamma(mu, A.star_pastings(A.eta_pasting(mu),
                                                A.eta_pasting(u1), 0))),
      0);
  TermId other = A.gamma(mu, R);
  CHECK(flat == other);
}

TEST_CASE("typing errors") {
  auto P = c0_terms();
  TermArena& A = P->arena;
  TermId mu = A.generator("mu(1,0)");
  CHECK_THROWS_AS(A.gamma(mu, A.eta_pasting(A.unit(1, 1))), ArityMismatch);
  auto P1 = make_presentation(build_complex(1, 1), Property::C,
                              Bounds{1, 4, 64, 10000});
  TermId F1 = P1->arena.generator("F1");
  // colour tree mismatch: F1 outputs colour 2, mu expects colour-1 inputs
  TermId mu1 = P1->arena.generator("mu(1,0)");
  CHECK_THROWS_AS(
      P1->arena.gamma(mu1, P1->arena.star_pastings(P1->arena.eta_pasting(F1),
                                                   P1->arena.eta_pasting(F1), 0)),
      Error);
}

TEST_CASE("boundaries of contraction and reflex cells") {
  auto P = c0_terms();
  TermArena& A = P->arena;
  TermId a = parse_term(*P, "gamma(mu(1,0); mu(1,0) *[1,0] u@1(1))");
  TermId b = parse_term(*P, "gamma(mu(1,0); u@1(1) *[1,0] mu(1,0))");
  TermId c = A.contraction(a, b);
  CHECK(A.dim(c) == 2);
  CHECK(A.src(c) == a);
  CHECK(A.tgt(c) == b);
  CHECK(A.arity(c).tree == embed_tree(A.arity(a).tree, 2));
  // reflex on a unit and the whisker on a general cell
  TermId r01 = A.reflex_unit(0, 1, 1);
  CHECK(A.src(r01) == A.unit(1, 0));
  CHECK(A.tgt(r01) == A.unit(1, 0));
  TermId r02 = A.reflex_unit(0, 2, 1);
  CHECK(A.src(r02) == r01);
  TermId w = A.reflex(1, 2, a);
  CHECK(A.src(w) == a);
  CHECK(A.tgt(w) == a);
  CHECK(A.arity(w).tree == embed_tree(A.arity(a).tree, 2));
}

TEST_CASE("contraction token preconditions") {
  auto P = c0_terms();
  TermArena& A = P->arena;
  TermId u1 = A.unit(1, 1);
  TermId mu = A.generator("mu(1,0)");
  CHECK_THROWS_AS(A.contraction(u1, mu), NotEligible);  // arities differ
  CHECK_THROWS_AS(A.contraction(A.unit(1, 0), A.generator("mu(1,0)")),
                  DimensionMismatch);
}

TEST_CASE("root pairs failing the loop property cannot be contracted") {
  auto P = make_presentation(build_complex(2, 1), Property::C,
                             Bounds{1, 3, 32, 10000});
  TermArena& A = P->arena;
  TermId tau = A.generator("tau");
  CHECK(A.is_root_term(tau));
  CHECK_FALSE(A.loop_property(tau, tau));
  CHECK(A.loop_property_two_way(tau, tau) == false);
  CHECK_THROWS_AS(A.contraction(tau, tau), NotEligible);
}

TEST_CASE("normalization is stable under serialization round trips") {
  auto P = make_presentation(build_complex(1, 2), Property::C,
                             Bounds{2, 3, 12, 100000});
  auto closed = free_operad(build_complex(1, 2), Property::IdU,
                            Bounds{2, 3, 8, 40000});
  std::mt19937 rng(424242);
  std::vector<TermId> pool;
  for (int d = 0; d <= 2; ++d)
    for (TermId t : closed->cells[d]) pool.push_back(t);
  REQUIRE(pool.size() > 50);
  std::uniform_int_distribution<std::size_t> pickp(0, pool.size() - 1);
  int rounds = 0;
  for (int i = 0; i < 1000; ++i) {
    TermId t = pool[pickp(rng)];
    // replay through the text grammar and the JSON codec in a fresh arena
    std::string s = term_str(closed->arena, t);
    TermId t2 = parse_term(*closed, s);
    CHECK(t2 == t);
    json j = term_to_json(closed->arena, t);
    TermId t3 = term_from_json(*closed, j);
    CHECK(t3 == t);
    ++rounds;
  }
  CHECK(rounds == 1000);
  (void)P;
}

TEST_CASE("apply_morphism: identity and the kappa relabeling oracle") {
  auto B0 = make_presentation(build_complex(0, 1), Property::C,
                              Bounds{1, 3, 32, 10000});
  auto B1 = make_presentation(build_complex(1, 1), Property::C,
                              Bounds{1, 3, 32, 10000});
  OperadMorphism idm = identity_operad_morphism(*B0);
  TermId t = parse_term(*B0, "gamma(mu(1,0); u@1(1) *[1,0] mu(1,0))");
  CHECK(apply_morphism(idm, t) == t);
  // kappa^0_1 sends the term to its nu-relabeling
  OperadMorphism kap = induced_morphism(coface(0, Side::target, 1), *B0, *B1);
  TermId img = apply_morphism(kap, t);
  TermId expect = parse_term(*B1, "gamma(nu(1,0); u@2(1) *[1,0] nu(1,0))");
  CHECK(img == expect);
  CHECK(check_morphism(kap).clean());
}

TEST_CASE("apply_morphism preserves arity trees") {
  auto B1 = free_operad(build_complex(1, 1), Property::Id, Bounds{1, 4, 10, 40000});
  auto B2 = make_presentation(build_complex(2, 1), Property::Id,
                              Bounds{1, 4, 16, 40000});
  OperadMorphism d1 = induced_morphism(coface(1, Side::source, 1), *B1, *B2);
  std::mt19937 rng(7);
  std::vector<TermId> pool;
  for (int d = 0; d <= 1; ++d)
    for (TermId t : B1->cells[d]) pool.push_back(t);
  std::uniform_int_distribution<std::size_t> pickp(0, pool.size() - 1);
  for (int i = 0; i < 500; ++i) {
    TermId t = pool[pickp(rng)];
    TermId img = apply_morphism(d1, t);
    CHECK(B2->arena.arity(img).tree == B1->arena.arity(t).tree);
    CHECK(B2->arena.dim(img) == B1->arena.dim(t));
  }
}

TEST_CASE("check_morphism flags a corrupted image") {
  auto B0 = make_presentation(build_complex(0, 1), Property::C,
                              Bounds{1, 3, 32, 10000});
  OperadMorphism bad = identity_operad_morphism(*B0);
  bad.gen_images["mu(1,0)"] = B0->arena.unit(1, 1);  // wrong arity
  MorphismReport rep = check_morphism(bad);
  REQUIRE_FALSE(rep.clean());
  CHECK(rep.violations[0].find("ArityMismatch") != std::string::npos);
}

TEST_CASE("equal_terms: normal-form identity vs the strictness congruence") {
  PointedCollection C0 = build_complex(0, 1);
  auto PC = free_operad(C0, Property::C, Bounds{1, 3, 9, 40000});
  TermId a = parse_term(*PC, "gamma(mu(1,0); mu(1,0) *[1,0] u@1(1))");
  TermId b = parse_term(*PC, "gamma(mu(1,0); u@1(1) *[1,0] mu(1,0))");
  CHECK(PC->equal_terms(a, a));
  CHECK_FALSE(PC->equal_terms(a, b));
  auto PS = free_operad(C0, Property::Su, Bounds{1, 3, 9, 40000});
  TermId a2 = parse_term(*PS, "gamma(mu(1,0); mu(1,0) *[1,0] u@1(1))");
  TermId b2 = parse_term(*PS, "gamma(mu(1,0); u@1(1) *[1,0] mu(1,0))");
  CHECK(PS->equal_terms(a2, b2));
}

TEST_CASE("out-of-bounds equality is rejected") {
  auto P = free_operad(build_complex(0, 1), Property::Id, Bounds{1, 2, 6, 10000});
  TermId big = parse_term(*P, "gamma(mu(1,0); mu(1,0) *[1,0] mu(1,0))");
  CHECK_THROWS_AS(P->equal_terms(big, big), OutOfBounds);
}
