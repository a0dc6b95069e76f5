#include <doctest.h>

#include <random>
#include <vector>

#include "grouploc/errors.hpp"
#include "grouploc/parse.hpp"
#include "grouploc/words.hpp"

using namespace grouploc;

namespace {

const std::vector<std::string> kXY{"x", "y"};

Word W(const std::string& t) { return parse_word(t, kXY); }
Monomial M(const std::string& t) { return parse_monomial(t, kXY); }

// naive free reduction over unit letters, as an independent oracle
std::vector<std::pair<Sym, long long>> naive_reduce(
    std::vector<std::pair<Sym, long long>> units) {
  std::vector<std::pair<Sym, long long>> st;
  for (auto& u : units) {
    if (!st.empty() && st.back().first == u.first && st.back().second == -u.second)
      st.pop_back();
    else
      st.push_back(u);
  }
  return st;
}

Word random_word(std::mt19937& rng, int len) {
  std::uniform_int_distribution<int> g(0, 1), s(0, 1);
  std::vector<Letter> ls;
  for (int i = 0; i < len; ++i)
    ls.push_back({gen_sym(static_cast<std::uint32_t>(g(rng))), s(rng) ? 1LL : -1LL});
  return Word::from_letters(ls);
}

}  // namespace

TEST_CASE("free reduction examples") {
  CHECK(W("x*y*y^-1*x") == W("x^2"));
  CHECK(W("x^2").letters().size() == 1);
  CHECK(W("x^2").letters()[0].exp == 2);
  CHECK(Word{}.is_identity());
  CHECK(W("x*x^-1*x") == W("x"));
  CHECK(W("1").is_identity());
}

TEST_CASE("reduction matches a naive unit-letter oracle") {
  std::mt19937 rng(3);
  std::uniform_int_distribution<int> g(0, 1), s(0, 1), len(0, 14);
  for (int t = 0; t < 300; ++t) {
    std::vector<std::pair<Sym, long long>> units;
    std::vector<Letter> raw;
    int n = len(rng);
    for (int i = 0; i < n; ++i) {
      Sym sym = gen_sym(static_cast<std::uint32_t>(g(rng)));
      long long e = s(rng) ? 1 : -1;
      units.emplace_back(sym, e);
      raw.push_back({sym, e});
    }
    auto oracle = naive_reduce(units);
    Word w = Word::from_letters(raw);
    std::vector<std::pair<Sym, long long>> flat;
    for (const auto& l : w.letters()) {
      long long step = l.exp > 0 ? 1 : -1;
      for (long long k = 0; k != l.exp; k += step) flat.emplace_back(l.sym, step);
    }
    CHECK(flat == oracle);
  }
}

TEST_CASE("reduction is idempotent and kills w * w^-1") {
  std::mt19937 rng(5);
  for (int t = 0; t < 100; ++t) {
    Word w = random_word(rng, 12);
    CHECK(Word::from_letters(w.letters()) == w);
    CHECK((w * w.inverse()).is_identity());
    CHECK((w.inverse() * w).is_identity());
  }
}

TEST_CASE("powers") {
  Word w = W("x*y^-1");
  CHECK(w.pow(3) == w * w * w);
  CHECK(w.pow(0).is_identity());
  CHECK(w.pow(-2) == (w.inverse() * w.inverse()));
}

TEST_CASE("exponent sums") {
  CHECK(W("[x,y]").exponent_sum(0) == 0);
  CHECK(W("x^3*y^-1").exponent_sum(0) == 3);
  CHECK(W("x^3*y^-1").exponent_sum(1) == -1);

  std::mt19937 rng(9);
  for (int t = 0; t < 100; ++t) {
    Word u = random_word(rng, 8), v = random_word(rng, 8);
    for (std::uint32_t g = 0; g < 2; ++g)
      CHECK((u * v).exponent_sum(g) == u.exponent_sum(g) + v.exponent_sum(g));
  }
}

TEST_CASE("commutators and conjugation") {
  Word u = W("x*y"), v = W("y^-1*x");
  CHECK(commutator(u, u).is_identity());
  CHECK(commutator(u, v).inverse() == commutator(v, u));
  CHECK(conjugate(u, v) == u * v * u.inverse());
}

TEST_CASE("substitution") {
  const std::vector<std::string> g1{"g", "h"};
  Monomial m = parse_monomial("g*$1*g^-1", g1);
  CHECK(substitute(m, {parse_word("h", g1)}) == parse_word("g*h*g^-1", g1));
  CHECK(substitute(parse_monomial("g*$1", g1), {parse_word("g^-1", g1)}).is_identity());
  CHECK(substitute(parse_monomial("[g,$1]", g1), {parse_word("g", g1)}).is_identity());
  CHECK_THROWS_AS(substitute(parse_monomial("$2", g1), {parse_word("g", g1)}), Error);
}

TEST_CASE("substitution commutes with concatenation") {
  std::mt19937 rng(15);
  for (int t = 0; t < 60; ++t) {
    Word a = random_word(rng, 6);
    Monomial u = M("x*$1*y") * Monomial::from_letters({{indet_sym(1), -1}});
    Monomial v = M("$1^2*y^-1");
    CHECK(substitute(u * v, {a}) == substitute(u, {a}) * substitute(v, {a}));
  }
}

TEST_CASE("indeterminate handling") {
  Monomial m = M("x*$1*$2^-1");
  CHECK(m.has_indets());
  CHECK(m.max_indet() == 2);
  CHECK(m.exponent_sum(indet_sym(1)) == 1);
  CHECK(m.exponent_sum(indet_sym(2)) == -1);
  CHECK(erase_indets(m) == W("x"));
  CHECK(erase_indets(M("[x,$1]")).is_identity());
  CHECK_FALSE(W("x*y").mono().has_indets());
  CHECK_THROWS_AS(Word(M("$1")), Error);  // words are indeterminate-free
}

TEST_CASE("hom application") {
  std::vector<Word> images{W("x*y"), W("y^-1")};
  CHECK(apply_images(W("x*y"), images) == W("x*y*y^-1")); // = x
  CHECK(apply_images(W("x*y"), images) == W("x"));
  CHECK(apply_images(Word{}, images).is_identity());
}

TEST_CASE("printing round-trips through the parser") {
  std::mt19937 rng(21);
  for (int t = 0; t < 80; ++t) {
    Word w = random_word(rng, 10);
    CHECK(parse_word(word_to_string(w, kXY), kXY) == w);
  }
  CHECK(word_to_string(Word{}, kXY) == "1");
  Monomial m = M("x*$1^-2*y");
  CHECK(parse_monomial(word_to_string(m, kXY), kXY) == m);
}
