#include <doctest.h>

#include "grouploc/errors.hpp"
#include "grouploc/parse.hpp"
#include "grouploc/presentation.hpp"

using namespace grouploc;

namespace {
Presentation P(const std::string& text, const std::string& name = "p") {
  return parse_presentation_text(text, name);
}
}  // namespace

TEST_CASE("presentation parsing") {
  auto t = P("< x, y | [x,y] >");
  CHECK(t.gens == std::vector<std::string>{"x", "y"});
  REQUIRE(t.relators.size() == 1);
  CHECK(t.relators[0] == parse_word("x*y*x^-1*y^-1", t.gens));
  CHECK_FALSE(t.is_free());

  auto c2 = P("< a | a^2 >");
  CHECK(c2.gens == std::vector<std::string>{"a"});
  CHECK(c2.relators.size() == 1);

  CHECK_THROWS_AS(P("< a | b >"), Error);

  auto named = P("grp = < a, b | >", "fallback");
  CHECK(named.name == "grp");
  CHECK(named.is_free());

  // comments and whitespace
  auto com = P("# header\n< a |  # inline\n a^3 >");
  CHECK(com.relators.size() == 1);
}

TEST_CASE("parse/print round trip") {
  for (const char* text : {"< x, y | [x,y] >", "< a | a^2 >", "< a, b, c | a*b^-2, [a,c] >"}) {
    auto p = P(text);
    auto q = parse_presentation_text(print_presentation(p), p.name);
    CHECK(p.same_group(q));
  }
}

TEST_CASE("free groups") {
  auto f2 = free_group(2);
  CHECK(f2.gens == std::vector<std::string>{"x1", "x2"});
  CHECK(f2.relators.empty());
  CHECK(f2.is_free());
  CHECK(free_group(1).gens.size() == 1);
  CHECK_THROWS_AS(free_group(0), Error);
  CHECK_THROWS_AS(free_group(-1), Error);
}

TEST_CASE("generator lookup and well-formedness") {
  auto p = P("< x, y | >");
  CHECK(p.gen_index("y") == 1);
  CHECK_THROWS_AS(p.gen_index("z"), Error);
  CHECK_THROWS_AS(make_presentation("p", {"a", "a"}, {}), Error);
  // relators may not mention indeterminates or out-of-range generators
  CHECK_THROWS_AS(
      make_presentation("p", {"a"}, {Word::from_letters({{gen_sym(1), 1}})}), Error);
}

TEST_CASE("verdict lattice") {
  auto u = Verdict::unchecked();
  auto c2 = Verdict::to_class(2);
  auto c3 = Verdict::to_class(3);
  auto vf = Verdict::verified_free();
  auto rf = Verdict::refuted();

  CHECK(record_verification(u, c2) == c2);
  CHECK(record_verification(c3, c2) == c3);  // never downgraded
  CHECK(record_verification(c2, c3) == c3);
  CHECK(record_verification(c3, vf) == vf);
  CHECK(record_verification(vf, c3) == vf);
  CHECK(record_verification(vf, u) == vf);
  // REFUTED is terminal
  CHECK(record_verification(rf, vf) == rf);
  CHECK(record_verification(c3, rf) == rf);

  CHECK(compose_verdicts(vf, c3) == c3);
  CHECK(compose_verdicts(c2, c3) == c2);
  CHECK(compose_verdicts(vf, vf) == vf);
  CHECK(compose_verdicts(rf, vf) == rf);
  CHECK(compose_verdicts(u, vf) == u);

  CHECK(vf.verified());
  CHECK(c2.verified());
  CHECK_FALSE(u.verified());
  CHECK(rf.is_refuted());
  CHECK(vf.rank() > c3.rank());
  CHECK(c3.rank() > c2.rank());
}

TEST_CASE("identity and composition") {
  auto p = P("< x, y | [x,y] >");
  auto id = identity_hom(p);
  CHECK(id.status == Verdict::verified_free());
  Word w = parse_word("x*y^-2", p.gens);
  CHECK(id.apply(w) == w);

  GroupHom swap;
  swap.source = p;
  swap.target = p;
  swap.images = {parse_word("y", p.gens), parse_word("x", p.gens)};
  auto twice = compose(swap, swap);
  CHECK(twice.apply(w) == w);
  CHECK(twice.source.name == p.name);
}

TEST_CASE("adjoin_relators") {
  auto f2 = P("< x, y | >", "f2");
  auto [torus, proj] = adjoin_relators(f2, {parse_word("[x,y]", f2.gens)});
  CHECK(torus.relators.size() == 1);
  CHECK(proj.status == Verdict::verified_free());
  CHECK(proj.provenance == HomProvenance::None);
  CHECK(proj.apply(parse_word("x", f2.gens)) == parse_word("x", torus.gens));

  auto c2 = P("< a | a^2 >");
  auto [triv, _] = adjoin_relators(c2, {parse_word("a", c2.gens)});
  CHECK(triv.relators.size() == 2);

  auto [same, idh] = adjoin_relators(f2, {});
  CHECK(same.same_group(f2));
  CHECK(idh.status == Verdict::verified_free());
}

TEST_CASE("bounded exact triviality by relator deletion") {
  auto bs = P("< a, t | t*a*t^-1*a^-2 >", "bs12");
  // a^2 t a^-1 t^-1 is the inverse of the relator read off at a rotation
  CHECK(trivial_by_relator_deletion(bs, parse_word("a^2*t*a^-1*t^-1", bs.gens)));
  CHECK(trivial_by_relator_deletion(bs, Word{}));
  CHECK_FALSE(trivial_by_relator_deletion(bs, parse_word("a", bs.gens)));

  auto torus = P("< x, y | [x,y] >");
  CHECK(trivial_by_relator_deletion(torus, parse_word("[x,y]*[x,y]", torus.gens)));
  CHECK(trivial_by_relator_deletion(torus, parse_word("y*[x,y]*y^-1", torus.gens)));
  CHECK_FALSE(trivial_by_relator_deletion(torus, parse_word("x*y", torus.gens)));
}

TEST_CASE("check_hom_to_class") {
  auto f2 = P("< x, y | >", "f2");
  CHECK(check_hom_to_class(identity_hom(f2), 3) == Verdict::verified_free());

  // torus -> <x|>, x -> x, y -> 1: the relator image reduces freely
  auto torus = P("< x, y | [x,y] >", "torus");
  auto fx = P("< x | >", "fx");
  GroupHom h;
  h.source = torus;
  h.target = fx;
  h.images = {parse_word("x", fx.gens), Word{}};
  CHECK(check_hom_to_class(h, 2) == Verdict::verified_free());

  // <x|x^2> -> <x|>, x -> x: x^2 is nontrivial in the free target
  auto c2 = P("< x | x^2 >");
  GroupHom bad;
  bad.source = c2;
  bad.target = fx;
  bad.images = {parse_word("x", fx.gens)};
  CHECK(check_hom_to_class(bad, 1).is_refuted());
  // monotone: refuted stays refuted at higher class
  CHECK(check_hom_to_class(bad, 3).is_refuted());

  // presented target, image trivial only in the group: class-c verdict
  auto bs = P("< a, t | t*a*t^-1*a^-2 >", "bs12");
  auto c2b = P("< b | b^2 >");
  GroupHom toclass;
  toclass.source = c2b;
  toclass.target = bs;
  // b -> a^2 t a^-1 t^-1: image of b^2 is trivial in BS(1,2) via deletion, so exact
  toclass.images = {parse_word("a^2*t*a^-1*t^-1", bs.gens)};
  CHECK(check_hom_to_class(toclass, 2) == Verdict::verified_free());

  // b -> a: a^2 is trivial in every rational nilpotent quotient of BS(1,2) but
  // deletion cannot see it, so the verdict is class-bounded
  GroupHom trunc;
  trunc.source = c2b;
  trunc.target = bs;
  trunc.images = {parse_word("a", bs.gens)};
  CHECK(check_hom_to_class(trunc, 2) == Verdict::to_class(2));
}
