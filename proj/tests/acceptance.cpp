// Acceptance checks for the grouploc workbench: ten end-to-end criteria, one
// [PASS]/[FAIL] line each.  Invoked as: acceptance <grouploc-binary> <source-dir>.
#include <sys/wait.h>

#include <cstdio>
#include <functional>
#include <iostream>
#include <random>
#include <stdexcept>
#include <string>
#include <vector>

#include "grouploc/alexander.hpp"
#include "grouploc/equations.hpp"
#include "grouploc/homology.hpp"
#include "grouploc/magnus.hpp"
#include "grouploc/parse.hpp"

using namespace grouploc;

namespace {

std::string g_cli, g_src;

struct RunResult {
  int code = -1;
  std::string out;
};

std::string shell_quote(const std::string& s) {
  std::string q = "'";
  for (char c : s) q += (c == '\'') ? std::string("'\\''") : std::string(1, c);
  return q + "'";
}

RunResult run(const std::vector<std::string>& args) {
  std::string cmd = shell_quote(g_cli);
  for (const auto& a : args) cmd += " " + shell_quote(a);
  cmd += " 2>&1";
  RunResult r;
  FILE* p = popen(cmd.c_str(), "r");
  if (!p) throw std::runtime_error("popen failed");
  char buf[4096];
  std::size_t n;
  while ((n = fread(buf, 1, sizeof buf, p)) > 0) r.out.append(buf, n);
  int st = pclose(p);
  r.code = WIFEXITED(st) ? WEXITSTATUS(st) : -1;
  return r;
}

std::string data(const std::string& name) { return g_src + "/data/" + name; }

void expect(bool ok, const std::string& what) {
  if (!ok) throw std::runtime_error(what);
}

Presentation P(const std::string& text, const std::string& name) {
  return parse_presentation_text(text, name);
}

Word random_word(std::mt19937& rng, unsigned ngens, int len) {
  std::uniform_int_distribution<std::uint32_t> g(0, ngens - 1);
  std::uniform_int_distribution<int> s(0, 1);
  std::vector<Letter> ls;
  for (int i = 0; i < len; ++i) ls.push_back({gen_sym(g(rng)), s(rng) ? 1LL : -1LL});
  return Word::from_letters(ls);
}

// random valid R-nullhomologous system: plain generator words, with indeterminates
// folded in only through commutators so every indeterminate exponent sum vanishes
NullhomologousSystem random_system(const Presentation& p, std::mt19937& rng,
                                   const std::vector<long long>& allowed_e) {
  std::uniform_int_distribution<int> nd(1, 2), len(0, 3), coin(0, 1);
  std::uniform_int_distribution<std::size_t> ed(0, allowed_e.size() - 1);
  std::uniform_int_distribution<std::uint32_t> gd(0, static_cast<std::uint32_t>(p.gens.size()) - 1);
  int n = nd(rng);
  std::vector<Monomial> rhs;
  for (int i = 0; i < n; ++i) {
    std::vector<Letter> ls;
    int L = len(rng);
    for (int j = 0; j < L; ++j) ls.push_back({gen_sym(gd(rng)), coin(rng) ? 1LL : -1LL});
    Monomial w = Monomial::from_letters(ls);
    if (coin(rng)) {
      std::uniform_int_distribution<std::uint32_t> kd(1, static_cast<std::uint32_t>(n));
      Monomial ind = Monomial::from_letters({{indet_sym(kd(rng)), 1}});
      Monomial gen = Monomial::from_letters({{gen_sym(gd(rng)), 1}});
      w = w * commutator(ind, gen);
    }
    rhs.push_back(std::move(w));
  }
  return make_system(p, Int(allowed_e[ed(rng)]), std::move(rhs));
}

std::vector<Presentation> seed_presentations() {
  return {P("< g | >", "z"), P("< x, y | >", "f2"), P("< x, y | [x,y] >", "torus"),
          P("< a, b | a*b*a*b^-1*a^-1*b^-1 >", "trefoil")};
}

int mobius(int n) {
  int m = 1;
  for (int p = 2; p * p <= n; ++p) {
    if (n % p) continue;
    n /= p;
    if (n % p == 0) return 0;
    m = -m;
  }
  if (n > 1) m = -m;
  return m;
}

long long ipow(long long b, int e) {
  long long r = 1;
  while (e--) r *= b;
  return r;
}

// necklace formula for the free Lie algebra dimensions (Witt numbers)
long long witt(long long k, int n) {
  long long s = 0;
  for (int d = 1; d <= n; ++d)
    if (n % d == 0) s += mobius(d) * ipow(k, n / d);
  return s / n;
}

}  // namespace

int main(int argc, char** argv) {
  for (int i = 1; i < argc; ++i) {
    std::string a = argv[i];
    if (g_cli.empty()) g_cli = a;
    else if (g_src.empty()) g_src = a;
  }
  if (g_cli.empty() || g_src.empty()) {
    std::fprintf(stderr, "usage: acceptance <grouploc-binary> <source-dir>\n");
    return 1;
  }

  bool all_ok = true;
  auto crit = [&](int n, const std::string& label, const std::function<void()>& body) {
    std::string note;
    bool ok = true;
    try {
      body();
    } catch (const std::exception& e) {
      ok = false;
      note = e.what();
    }
    all_ok = all_ok && ok;
    std::cout << (ok ? "[PASS] " : "[FAIL] ") << n << ". " << label
              << (note.empty() ? "" : "  -- " + note) << "\n";
  };

  crit(1, "divisibility counterexample via the CLI", [&] {
    auto a = run({"divide", data("f2.grp"), "--u", "[x,y]", "--s", "x - 1"});
    expect(a.code == 2 && a.out.find("UNSOLVABLE") != std::string::npos,
           "s = x - 1 must be UNSOLVABLE with exit 2");
    auto b = run({"divide", data("f2.grp"), "--u", "[x,y]", "--s", "x"});
    expect(b.code == 0 && b.out.find("SOLVABLE") != std::string::npos,
           "unit s = x must be SOLVABLE with exit 0");
  });

  crit(2, "augmentation-zero divisors never solve (50 random)", [&] {
    auto f2 = P("< x, y | >", "f2");
    Word u = parse_word("[x,y]", f2.gens);
    std::mt19937 rng(1021);
    std::uniform_int_distribution<int> nt(2, 5), ex(0, 3), coef(-3, 3);
    int done = 0;
    while (done < 50) {
      LaurentPoly s(2);
      int terms = nt(rng);
      for (int t = 0; t < terms; ++t) {
        Expo e{ex(rng), ex(rng)};
        if (e[0] + e[1] > 3) continue;  // total degree <= 3
        int c = coef(rng);
        if (c) s.add_term(e, Rat(c));
      }
      s = s - LaurentPoly::constant(2, augmentation(s));
      if (s.is_zero()) continue;
      auto res = divisibility_test(f2, u, s);
      expect(!res.solvable, "augmentation-zero s divided the generator class");
      ++done;
    }
  });

  crit(3, "Magnus depth and Witt-number oracle", [&] {
    auto f2 = P("< x, y | >", "f2");
    auto lcs_degree = [&](const std::string& text) -> unsigned {
      MonomialTable tab(2, 5);
      Series s = magnus_expand(tab, parse_word(text, f2.gens));
      s[0] -= 1;
      std::size_t lead = first_support(s);
      expect(lead != MonomialTable::npos, "word vanished below the cap");
      return tab.degree(lead);
    };
    expect(lcs_degree("[x,y]") == 2, "lcs_degree([x,y]) != 2");
    expect(lcs_degree("[[x,y],y]") == 3, "lcs_degree([[x,y],y]) != 3");

    auto ranks = rational_lcs_quotient(f2, 5);
    std::vector<long long> expected{2, 1, 2, 3, 6};
    expect(ranks.dims == expected, "F2 LCS dimensions != [2,1,2,3,6]");
    for (int n = 1; n <= 5; ++n)
      expect(ranks.dims[static_cast<std::size_t>(n) - 1] == witt(2, n),
             "necklace oracle disagrees at degree " + std::to_string(n));
  });

  crit(4, "graded injectivity of adjunctions (20 random) and the collapse refuter", [&] {
    std::mt19937 rng(2201);
    auto Q = make_ring_all();
    auto seeds = seed_presentations();
    for (int i = 0; i < 20; ++i) {
      const auto& seed = seeds[static_cast<std::size_t>(i) % seeds.size()];
      auto s = random_system(seed, rng, {1, 2, 3, 5});
      auto ar = adjoin_solutions(seed, s, Q);
      auto rep = stallings_injectivity_check(ar.hom, 4, Q);
      expect(rep.injective, "adjunction " + std::to_string(i) + " not gradedly injective");
    }
    auto f2 = P("< x, y | >", "f2");
    auto z = P("< g | >", "z");
    GroupHom collapse;
    collapse.source = f2;
    collapse.target = z;
    collapse.images = {parse_word("g", z.gens), parse_word("g", z.gens)};
    expect(!stallings_injectivity_check(collapse, 2, Q).injective,
           "F2 -> F1 collapse must fail at q = 2");
  });

  crit(5, "square-root towers divide the seed class by exactly 2^d", [&] {
    auto ring = make_ring({2});
    for (int d = 1; d <= 3; ++d) {
      TowerBudget budget;
      budget.depth = d;
      budget.auto_sqrt = true;
      budget.class_bound = 3;
      auto tower = build_tower(P("< g | >", "z"), ring, budget);
      expect(tower.levels.size() == static_cast<std::size_t>(d) + 1, "missing levels");
      Word w = parse_word("g", tower.levels[0].gens);
      for (const auto& st : tower.steps) w = st.hom.apply(w);
      H1Data h1(tower.levels.back());
      auto k = h1.max_divisibility(w, Int(2));
      expect(k.has_value(), "seed class became zero");
      expect(*k == static_cast<unsigned>(d),
             "2-divisibility at depth " + std::to_string(d) + " is " + std::to_string(*k));
    }
  });

  crit(6, "H1 iso for 100 random adjunctions over four rings", [&] {
    std::mt19937 rng(3301);
    struct RingCase {
      CoefficientRing ring;
      std::vector<long long> es;
    };
    std::vector<RingCase> rings = {{make_ring({}), {1}},
                                   {make_ring({2}), {1, 2, 4}},
                                   {make_ring({2, 3}), {1, 2, 3, 6}},
                                   {make_ring_all(), {1, 2, 3, 5}}};
    auto seeds = seed_presentations();
    for (int i = 0; i < 100; ++i) {
      const auto& rc = rings[static_cast<std::size_t>(i) % rings.size()];
      const auto& seed = seeds[(static_cast<std::size_t>(i) / rings.size()) % seeds.size()];
      auto s = random_system(seed, rng, rc.es);
      expect(validate_system(s, rc.ring), "generated system invalid over " + rc.ring.name);
      auto ar = adjoin_solutions(seed, s, rc.ring);
      expect(ar.cert.h1.verdict == IsoVerdict::ISO,
             "adjunction " + std::to_string(i) + " not an H1 iso over " + rc.ring.name);
    }
  });

  crit(7, "invisibility: BS(1,2) certificate, free-group refuter, 20 product pairs", [&] {
    std::vector<CoefficientRing> rings = {make_ring({}), make_ring({2}), make_ring({2, 3}),
                                          make_ring_all()};
    auto bs = P("< a, t | t*a*t^-1*a^-2 >", "bs12");
    auto cert = make_certificate(bs, {parse_word("a", bs.gens)}, 1,
                                 {parse_monomial("[t,$1]", bs.gens)});
    for (const auto& r : rings)
      expect(verify_invisibility_certificate(cert, r, 3) == Verdict::verified_free(),
             "BS(1,2) certificate not VERIFIED_FREE over " + r.name);
    auto qr = quotient_by_invisible(bs, cert, make_ring({}), 3);
    expect(qr.cert.h1.verdict == IsoVerdict::ISO, "quotient map not an H1 iso over Z");
    auto inv = h1_with_R(qr.quotient, make_ring({}));
    expect(inv.free_rank == 1 && inv.torsion.empty(), "quotient H1 != Z");

    auto za = P("< a | >", "za");
    auto bad = make_certificate(za, {parse_word("a", za.gens)}, 1,
                                {parse_monomial("[a,$1]", za.gens)});
    for (const auto& r : rings)
      expect(verify_invisibility_certificate(bad, r, 3).is_refuted(),
             "<<a>> in the free group must be refuted over " + r.name);

    std::mt19937 rng(4407);
    std::uniform_int_distribution<long long> epick(2, 9);
    for (int i = 0; i < 20; ++i) {
      long long e1 = epick(rng), e2 = epick(rng);
      auto pp = P("< a, b | a^" + std::to_string(e1) + ", b^" + std::to_string(e2) + " >",
                  "pp");
      auto c1 = make_certificate(pp, {parse_word("a", pp.gens)}, Int(e1), {Monomial{}});
      auto c2 = make_certificate(pp, {parse_word("b", pp.gens)}, Int(e2), {Monomial{}});
      auto prod = product_certificate(c1, c2);
      expect(prod.e == ilcm(Int(e1), Int(e2)), "product exponent is not the lcm");
      expect(verify_invisibility_certificate(prod, make_ring_all(), 3).verified(),
             "product certificate failed to verify");
    }
  });

  crit(8, "Fox/Alexander oracles: trefoil ideal, free kh1 ranks, 200 identities", [&] {
    auto tre = P("< a, b | a*b*a*b^-1*a^-1*b^-1 >", "trefoil");
    auto d = alexander_matrix(tre);
    expect(d.matrix.size() == 1 && d.matrix[0].size() == 2, "trefoil matrix is not 1x2");
    auto ideal = parse_laurent("t^2 - t + 1", d.variables);
    expect(equal_up_to_unit(d.matrix[0][0], ideal) && equal_up_to_unit(d.matrix[0][1], ideal),
           "elementary ideal generator != t^2 - t + 1 up to unit");

    const char* frees[] = {"< x | >", "< x, y | >", "< x, y, z | >"};
    for (int mu = 1; mu <= 3; ++mu) {
      auto k = kh1_rank(P(frees[mu - 1], "f"));
      expect(k.rank == mu - 1, "kh1_rank(F_" + std::to_string(mu) + ") != mu - 1");
    }

    auto f3 = P("< x, y, z | >", "f3");
    auto df = alexander_matrix(f3);
    auto one = LaurentPoly::constant(3, Rat(1));
    std::mt19937 rng(5501);
    std::uniform_int_distribution<int> len(1, 12);
    for (int i = 0; i < 200; ++i) {
      Word w = random_word(rng, 3, len(rng));
      LaurentPoly lhs(3);
      for (std::size_t g = 0; g < 3; ++g)
        lhs = lhs + df.fox(w, g) * (df.gen_monomial(g) - one);
      expect(lhs == df.word_monomial(w) - one, "fundamental identity failed");
    }
  });

  crit(9, "solutions verified to class 4 agree in the class-4 quotient (30 random)", [&] {
    auto f2 = P("< x, y | >", "f2");
    NilpotentAlgebra alg(f2, 4);
    std::mt19937 rng(6601);
    std::uniform_int_distribution<int> len(1, 6), pick(0, 3);
    auto unit = [&](int i) {
      return Word::from_letters({{gen_sym(static_cast<std::uint32_t>(i % 2)),
                                  i < 2 ? 1LL : -1LL}});
    };
    for (int i = 0; i < 30; ++i) {
      Word u = random_word(rng, 2, len(rng));
      auto s = make_system(f2, 1, {u.mono()});
      // two candidate assignments differing by a weight-5 basic commutator
      Word x = parse_word("x", f2.gens), y = parse_word("y", f2.gens);
      Word c = commutator(x, y);
      for (int k = 0; k < 3; ++k) c = commutator(c, unit(pick(rng)));
      Word v1 = u, v2 = u * c;
      auto r1 = check_solution(s, {v1}, 4);
      auto r2 = check_solution(s, {v2}, 4);
      expect(r1.verified() && r2.verified(), "an assignment failed to verify to class 4");
      expect(alg.trivial_to_class(v1.inverse() * v2),
             "verified assignments differ in the class-4 quotient");
    }
  });

  crit(10, "byte-identical tower JSON across repeated runs", [&] {
    const std::vector<std::vector<std::string>> budgets = {
        {"tower", data("z.grp"), "--ring", "Z[1/2]", "--depth", "2", "--auto-sqrt", "--json"},
        {"tower", data("bs12.grp"), "--ring", "Z[1/2]", "--depth", "1", "--enumerate", "2",
         "--kill-invisible", "--json"},
    };
    for (const auto& args : budgets) {
      auto a = run(args);
      auto b = run(args);
      expect(a.code == 0 && !a.out.empty(), "tower run failed");
      expect(a.out == b.out, "tower JSON differs between runs");
    }
  });

  return all_ok ? 0 : 1;
}
