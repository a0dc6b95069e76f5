#include <doctest.h>

#include <random>

#include "grouploc/equations.hpp"
#include "grouploc/errors.hpp"
#include "grouploc/homology.hpp"
#include "grouploc/parse.hpp"
#include "grouploc/report.hpp"

using namespace grouploc;

namespace {
Presentation P(const std::string& text, const std::string& name = "p") {
  return parse_presentation_text(text, name);
}
}  // namespace

TEST_CASE("system construction and validation") {
  auto z = P("< g | >", "z");
  auto s = make_system(z, 2, {parse_monomial("g", z.gens)});
  CHECK(s.n == 1);
  CHECK(s.indet_sums_zero);
  CHECK(validate_system(s, make_ring({2})));
  CHECK(validate_system(s, make_ring_all()));
  CHECK_FALSE(validate_system(s, make_ring({})));  // 2 not in D_Z

  // x^1 = g*x^2 has indeterminate exponent sum 2 on the right: never valid
  auto bad = make_system(z, 1, {parse_monomial("g*$1^2", z.gens)});
  CHECK_FALSE(bad.indet_sums_zero);
  CHECK_FALSE(validate_system(bad, make_ring({})));
  CHECK_FALSE(validate_system(bad, make_ring_all()));

  // commutator right-hand sides have zero sums by construction
  auto f2 = P("< x, y | >", "f2");
  auto comm = make_system(f2, 1, {parse_monomial("x*[y,$1]", f2.gens),
                                  parse_monomial("[$1,$2]*y^3", f2.gens)});
  CHECK(comm.indet_sums_zero);
  CHECK(validate_system(comm, make_ring({})));

  CHECK_THROWS_AS(make_system(z, 0, {parse_monomial("g", z.gens)}), Error);
  CHECK_THROWS_AS(make_system(z, 2, {parse_monomial("$2", z.gens)}), Error);  // $2, n = 1
}

TEST_CASE("checking candidate solutions") {
  auto z = P("< g | >", "z");
  auto s = make_system(z, 2, {parse_monomial("g", z.gens)});
  // g^2 = g is false, seen already in degree 1 of the Magnus quotient
  CHECK(check_solution(s, {parse_word("g", z.gens)}, 4).is_refuted());
  CHECK_THROWS_AS(check_solution(s, {}, 4), Error);  // arity

  // after adjoining, the fresh generator is an exact solution
  auto ext = adjoin_solutions(z, s, make_ring({2})).extended;
  auto s2 = make_system(ext, 2, {parse_monomial("g", ext.gens)});
  CHECK(check_solution(s2, {parse_word("z1", ext.gens)}, 4) == Verdict::verified_free());

  // an equality that only holds modulo the relators of a presented group
  auto torus = P("< x, y | [x,y] >", "torus");
  auto st = make_system(torus, 1, {parse_monomial("[x,$1]*$1", torus.gens)});
  auto v = check_solution(st, {parse_word("[x,y]", torus.gens)}, 3);
  CHECK(v.verified());
}

TEST_CASE("adjoining solutions") {
  auto z = P("< g | >", "z");
  auto ring = make_ring({2});
  auto s = make_system(z, 2, {parse_monomial("g", z.gens)});
  auto res = adjoin_solutions(z, s, ring);

  CHECK(res.extended.gens == std::vector<std::string>{"g", "z1"});
  REQUIRE(res.extended.relators.size() == 1);
  CHECK(res.extended.relators[0] == parse_word("z1^2*g^-1", res.extended.gens));
  CHECK(res.hom.provenance == HomProvenance::Adjunction);
  CHECK(res.hom.provenance_exponents == std::vector<Int>{2});
  CHECK(res.hom.status == Verdict::verified_free());
  CHECK(res.cert.h1.verdict == IsoVerdict::ISO);
  CHECK(res.cert.two_connected_over_R());

  // names skip generators that are already taken
  auto zz = P("< z1 | >", "zz");
  auto s3 = make_system(zz, 2, {parse_monomial("z1", zz.gens)});
  auto res3 = adjoin_solutions(zz, s3, ring);
  CHECK(res3.extended.gens == std::vector<std::string>{"z1", "z2"});

  // invalid systems are rejected outright
  auto bad = make_system(z, 2, {parse_monomial("g*$1^2", z.gens)});
  CHECK_THROWS_AS(adjoin_solutions(z, bad, ring), Error);
  CHECK_THROWS_AS(adjoin_solutions(z, s, make_ring({})), Error);  // e = 2 over Z

  // multi-equation system with cross-references between indeterminates
  auto f2 = P("< x, y | >", "f2");
  auto multi = make_system(
      f2, 3, {parse_monomial("x*[y,$2]", f2.gens), parse_monomial("[x,$1]*y", f2.gens)});
  auto resm = adjoin_solutions(f2, multi, make_ring({3}));
  CHECK(resm.extended.gens.size() == 4);
  CHECK(resm.extended.relators.size() == 2);
  CHECK(resm.cert.h1.verdict == IsoVerdict::ISO);
}

TEST_CASE("invisibility certificates: BS(1,2)") {
  auto bs = P("< a, t | t*a*t^-1*a^-2 >", "bs12");
  auto cert = make_certificate(bs, {parse_word("a", bs.gens)}, 1,
                               {parse_monomial("[t,$1]", bs.gens)});
  for (auto ring : {make_ring({}), make_ring({2}), make_ring_all()})
    CHECK(verify_invisibility_certificate(cert, ring, 3) == Verdict::verified_free());
}

TEST_CASE("invisibility certificates: refutations") {
  // <<a>> in the free group <a|> is visible in H_1 over every ring
  auto fa = P("< a | >", "fa");
  auto cert = make_certificate(fa, {parse_word("a", fa.gens)}, 1, {Monomial{}});
  for (auto ring : {make_ring({}), make_ring({2}), make_ring_all()})
    CHECK(verify_invisibility_certificate(cert, ring, 3).is_refuted());

  // exponent outside D_R
  auto c2 = P("< a | a^2 >");
  auto c = make_certificate(c2, {parse_word("a", c2.gens)}, 2, {Monomial{}});
  CHECK(verify_invisibility_certificate(c, make_ring({}), 3).is_refuted());
  CHECK(verify_invisibility_certificate(c, make_ring({2}), 3) == Verdict::verified_free());

  // witness shape violations are exact refutations
  auto bs = P("< a, t | t*a*t^-1*a^-2 >", "bs12");
  auto shape1 = make_certificate(bs, {parse_word("a", bs.gens)}, 1,
                                 {parse_monomial("$1", bs.gens)});  // erases to 1 but sum 1
  CHECK(verify_invisibility_certificate(shape1, make_ring({}), 3).is_refuted());
  auto shape2 = make_certificate(bs, {parse_word("a", bs.gens)}, 1,
                                 {parse_monomial("t*[a,$1]", bs.gens)});  // erases to t
  CHECK(verify_invisibility_certificate(shape2, make_ring({}), 3).is_refuted());

  // a false equality with a well-shaped witness: [x,y] = [x,[x,y]] fails at degree 2
  auto f2 = P("< x, y | >", "f2");
  auto wrong = make_certificate(f2, {parse_word("[x,y]", f2.gens)}, 1,
                                {parse_monomial("[x,$1]", f2.gens)});
  CHECK(verify_invisibility_certificate(wrong, make_ring({}), 4).is_refuted());

  // a = [a,a] in BS(1,2) is false but class-invisible: a lies in every gamma_k
  auto ghost = make_certificate(bs, {parse_word("a", bs.gens)}, 1,
                                {parse_monomial("[a,$1]", bs.gens)});
  CHECK(verify_invisibility_certificate(ghost, make_ring({}), 4) == Verdict::to_class(4));

  CHECK_THROWS_AS(make_certificate(bs, {parse_word("a", bs.gens)}, 1, {}), Error);
  CHECK_THROWS_AS(make_certificate(bs, {parse_word("a", bs.gens)}, 0, {Monomial{}}), Error);
}

TEST_CASE("product certificates") {
  auto p = P("< a, b | a^2, b^3 >", "p");
  auto c1 = make_certificate(p, {parse_word("a", p.gens)}, 2, {Monomial{}});
  auto c2 = make_certificate(p, {parse_word("b", p.gens)}, 3, {Monomial{}});
  auto q = make_ring_all();
  REQUIRE(verify_invisibility_certificate(c1, q, 3).verified());
  REQUIRE(verify_invisibility_certificate(c2, q, 3).verified());

  auto prod = product_certificate(c1, c2);
  CHECK(prod.e == 6);
  CHECK(prod.normal_generators.size() == 2);
  CHECK(verify_invisibility_certificate(prod, q, 3).verified());
  CHECK(verify_invisibility_certificate(prod, make_ring({2, 3}), 3).verified());

  // idempotent exponent: lcm(e, e) = e
  auto same = product_certificate(c1, c1);
  CHECK(same.e == 2);
  CHECK(verify_invisibility_certificate(same, q, 3).verified());

  auto other = P("< c | >", "other");
  auto c3 = make_certificate(other, {parse_word("c", other.gens)}, 1, {Monomial{}});
  CHECK_THROWS_AS(product_certificate(c1, c3), Error);  // ambient mismatch
}

TEST_CASE("random product certificates verify") {
  std::mt19937 rng(77);
  std::vector<long long> es{2, 3, 5};
  auto q = make_ring_all();
  for (int i = 0; i < 20; ++i) {
    long long e1 = es[rng() % 3], e2 = es[rng() % 3];
    auto p = make_presentation("p", {"a", "b"},
                               {parse_word("a", {"a", "b"}).pow(e1),
                                parse_word("b", {"a", "b"}).pow(e2)});
    auto c1 = make_certificate(p, {parse_word("a", p.gens)}, e1, {Monomial{}});
    auto c2 = make_certificate(p, {parse_word("b", p.gens)}, e2, {Monomial{}});
    REQUIRE(verify_invisibility_certificate(c1, q, 2).verified());
    REQUIRE(verify_invisibility_certificate(c2, q, 2).verified());
    auto prod = product_certificate(c1, c2);
    CHECK(verify_invisibility_certificate(prod, q, 2).verified());
    CHECK(prod.e == ilcm(e1, e2));
  }
}

TEST_CASE("quotient by an invisible subgroup") {
  auto bs = P("< a, t | t*a*t^-1*a^-2 >", "bs12");
  auto cert = make_certificate(bs, {parse_word("a", bs.gens)}, 1,
                               {parse_monomial("[t,$1]", bs.gens)});
  auto res = quotient_by_invisible(bs, cert, make_ring({}));
  CHECK(res.quotient.relators.size() == 2);
  CHECK(res.hom.provenance == HomProvenance::InvisibleQuotient);
  CHECK(res.certificate_verdict == Verdict::verified_free());
  CHECK(res.cert.h1.verdict == IsoVerdict::ISO);
  CHECK(res.cert.two_connected_over_R());

  // quotient of an unverifiable certificate is refused
  auto fa = P("< a | >", "fa");
  auto badc = make_certificate(fa, {parse_word("a", fa.gens)}, 1, {Monomial{}});
  CHECK_THROWS_AS(quotient_by_invisible(fa, badc, make_ring({})), Error);
}

TEST_CASE("canonical invisible certificates") {
  auto bs = P("< a, t | t*a*t^-1*a^-2 >", "bs12");
  auto cands = canonical_invisible_certificates(bs, make_ring({}), 3);
  REQUIRE(cands.size() == 1);
  CHECK(cands[0].verdict == Verdict::verified_free());
  CHECK(cands[0].cert.normal_generators[0] == parse_word("a", bs.gens));

  auto c2 = P("< a | a^2 >");
  CHECK(canonical_invisible_certificates(c2, make_ring({}), 3).empty());
  auto over_half = canonical_invisible_certificates(c2, make_ring({2}), 3);
  REQUIRE(over_half.size() == 1);
  CHECK(over_half[0].cert.e == 2);
  CHECK(over_half[0].verdict == Verdict::verified_free());

  CHECK(canonical_invisible_certificates(P("< x, y | >", "f2"), make_ring_all(), 3).empty());
}

TEST_CASE("system enumeration is deterministic and valid") {
  auto z = P("< g | >", "z");
  auto over_z = enumerate_systems(z, make_ring({}), 3);
  REQUIRE(over_z.size() == 3);
  CHECK(over_z[0].e == 1);
  CHECK(over_z[0].rhs[0].is_identity());
  CHECK(over_z[1].rhs[0] == parse_monomial("g", z.gens));
  CHECK(over_z[2].rhs[0] == parse_monomial("g^-1", z.gens));
  for (const auto& s : over_z) CHECK(validate_system(s, make_ring({})));

  auto again = enumerate_systems(z, make_ring({}), 3);
  for (std::size_t i = 0; i < 3; ++i) {
    CHECK(again[i].e == over_z[i].e);
    CHECK(again[i].rhs == over_z[i].rhs);
  }

  auto over_q = enumerate_systems(z, make_ring_all(), 8);
  CHECK(over_q.size() == 8);
  for (const auto& s : over_q) CHECK(validate_system(s, make_ring_all()));
}

TEST_CASE("towers: trivial budget") {
  auto z = P("< g | >", "z");
  TowerBudget none;
  none.depth = 0;
  auto t = build_tower(z, make_ring({2}), none);
  CHECK(t.levels.size() == 1);
  CHECK(t.steps.empty());
}

TEST_CASE("towers: automatic square roots") {
  auto z = P("< g | >", "z");
  TowerBudget b;
  b.depth = 2;
  b.auto_sqrt = true;
  auto t = build_tower(z, make_ring({2}), b);
  REQUIRE(t.levels.size() == 3);
  CHECK(t.levels[1].name == "z_P1");
  CHECK(t.levels[2].name == "z_P2");
  CHECK(t.levels[2].gens.size() == 3);
  for (const auto& step : t.steps) {
    CHECK(step.cert.h1.verdict == IsoVerdict::ISO);
    CHECK(step.cert.two_connected_over_R());
    CHECK(step.adjoined.size() == 1);
  }
  // H_1 over Z stays rank one the whole way up
  for (const auto& lvl : t.levels)
    CHECK(h1_with_R(lvl, make_ring({})) == RModuleInvariants{1, {}});
}

TEST_CASE("towers: explicit systems are rebased onto every level") {
  auto z = P("< g | >", "z");
  TowerBudget b;
  b.depth = 2;
  b.explicit_systems = {make_system(z, 2, {parse_monomial("g", z.gens)})};
  auto t = build_tower(z, make_ring({2}), b);
  REQUIRE(t.levels.size() == 3);
  CHECK(t.levels[2].gens.size() == 3);
  CHECK(t.levels[2].relators.size() == 2);
  // both adjoined generators square to g
  CHECK(t.levels[2].relators[1] == parse_word("z2^2*g^-1", t.levels[2].gens));
}

TEST_CASE("towers: killing invisible subgroups") {
  auto c2 = P("< a | a^2 >", "c2");
  TowerBudget b;
  b.depth = 1;
  b.kill_invisible = true;
  auto t = build_tower(c2, make_ring({2}), b);
  REQUIRE(t.levels.size() == 2);
  REQUIRE(t.steps.size() == 1);
  CHECK(t.steps[0].killed.size() == 1);
  CHECK(h1_with_R(t.levels[1], make_ring({2})).trivial());
  CHECK(t.steps[0].cert.h1.verdict == IsoVerdict::ISO);
  // the level-1 group is presented trivial: relators kill the only generator
  CHECK(trivial_by_relator_deletion(t.levels[1], parse_word("a", t.levels[1].gens)));
}

TEST_CASE("towers: degenerate levels still certify") {
  auto torus = P("< x, y | [x,y] >", "torus");
  TowerBudget b;
  b.depth = 1;  // nothing enabled: degenerate empty adjunction
  auto t = build_tower(torus, make_ring({}), b);
  REQUIRE(t.steps.size() == 1);
  CHECK(t.levels[1].gens == t.levels[0].gens);
  CHECK(t.steps[0].cert.h1.verdict == IsoVerdict::ISO);
  CHECK(t.steps[0].cert.two_connected_over_R());
}

TEST_CASE("tower JSON is deterministic") {
  auto z = P("< g | >", "z");
  TowerBudget b;
  b.depth = 2;
  b.auto_sqrt = true;
  b.kill_invisible = true;
  auto t1 = build_tower(z, make_ring({2}), b);
  auto t2 = build_tower(z, make_ring({2}), b);
  CHECK(tower_json(t1).dump(2) == tower_json(t2).dump(2));
}
