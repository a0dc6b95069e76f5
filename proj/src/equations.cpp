#include "grouploc/equations.hpp"

#include <algorithm>
#include <functional>
#include <optional>
#include <memory>
#include <set>
#include <sstream>

#include "grouploc/errors.hpp"
#include "grouploc/magnus.hpp"

namespace grouploc {

namespace {

long long small_exp(const Int& e) {
  if (e > Int(1'000'000)) fail(Err::CapExceeded, "exponent too large for word expansion");
  return static_cast<long long>(e);
}

void check_letters(const Monomial& m, std::size_t ngens, std::size_t nindet) {
  for (const auto& l : m.letters()) {
    if (l.sym.kind == SymKind::Gen && l.sym.id >= ngens)
      fail(Err::UnknownSymbol, "monomial uses an undeclared generator");
    if (l.sym.kind == SymKind::Indet && (l.sym.id == 0 || l.sym.id > nindet))
      fail(Err::UnassignedIndeterminate,
           "indeterminate $" + std::to_string(l.sym.id) + " out of range");
  }
}

Monomial shift_indets(const Monomial& m, std::uint32_t by) {
  std::vector<Letter> ls;
  for (auto l : m.letters()) {
    if (l.sym.kind == SymKind::Indet) l.sym.id += by;
    ls.push_back(l);
  }
  return Monomial::from_letters(ls);
}

}  // namespace

std::string NullhomologousSystem::str() const {
  std::ostringstream os;
  os << "exp " << to_string(e) << " {";
  for (std::size_t i = 0; i < rhs.size(); ++i)
    os << (i ? "; " : " ") << "$" << (i + 1) << " -> " << word_to_string(rhs[i], base.gens);
  os << (rhs.empty() ? "}" : " }");
  return os.str();
}

NullhomologousSystem make_system(Presentation base, Int e, std::vector<Monomial> rhs) {
  if (e < 1) fail(Err::NonPositive, "system exponent must be >= 1");
  NullhomologousSystem s;
  s.n = rhs.size();
  for (const auto& w : rhs) check_letters(w, base.gens.size(), s.n);
  s.base = std::move(base);
  s.e = std::move(e);
  s.rhs = std::move(rhs);
  s.indet_sums_zero = true;
  for (const auto& w : s.rhs)
    for (std::uint32_t k = 1; k <= s.n; ++k)
      if (w.exponent_sum(indet_sym(k)) != 0) s.indet_sums_zero = false;
  return s;
}

bool validate_system(const NullhomologousSystem& s, const CoefficientRing& ring) {
  return s.indet_sums_zero && in_denominator_set(ring, s.e);
}

Verdict check_solution(const NullhomologousSystem& s, const std::vector<Word>& assignment,
                       int class_bound) {
  if (class_bound < 1) fail(Err::NonPositive, "class bound must be >= 1");
  if (assignment.size() != s.n)
    fail(Err::ArityMismatch, "system has " + std::to_string(s.n) + " indeterminates, got " +
                                 std::to_string(assignment.size()) + " words");
  for (const auto& g : assignment)
    if (g.max_gen_plus1() > s.base.gens.size())
      fail(Err::UnknownSymbol, "assignment word outside the base alphabet");

  long long ee = small_exp(s.e);
  bool exact = true;
  std::unique_ptr<NilpotentAlgebra> alg;
  for (std::size_t i = 0; i < s.n; ++i) {
    Word d = assignment[i].pow(ee) * substitute(s.rhs[i], assignment).inverse();
    if (d.is_identity()) continue;
    if (trivial_by_relator_deletion(s.base, d)) continue;
    if (!alg)
      alg = std::make_unique<NilpotentAlgebra>(s.base, static_cast<unsigned>(class_bound));
    if (!alg->trivial_to_class(d))
      return Verdict::refuted("equation " + std::to_string(i + 1) +
                              " fails in the rational class-" + std::to_string(class_bound) +
                              " quotient");
    exact = false;
  }
  return exact ? Verdict::verified_free() : Verdict::to_class(class_bound);
}

AdjunctionResult adjoin_solutions(const Presentation& p, const NullhomologousSystem& s,
                                  const CoefficientRing& ring) {
  if (!s.base.same_group(p))
    fail(Err::InvalidSystem, "system is defined over a different presentation");
  if (!validate_system(s, ring))
    fail(Err::InvalidSystem, s.indet_sums_zero
                                 ? "exponent " + to_string(s.e) + " is not in D_R for " + ring.name
                                 : "an rhs word has a nonzero indeterminate exponent sum");

  std::set<std::string> used(p.gens.begin(), p.gens.end());
  Presentation ext = p;
  std::vector<Word> zwords;
  for (std::size_t i = 0, next = 1; i < s.n; ++i) {
    std::string name;
    do {
      name = "z" + std::to_string(next++);
    } while (used.count(name));
    used.insert(name);
    ext.gens.push_back(name);
    zwords.push_back(Word::from_letters(
        {{gen_sym(static_cast<std::uint32_t>(ext.gens.size() - 1)), 1}}));
  }
  long long ee = small_exp(s.e);
  for (std::size_t i = 0; i < s.n; ++i)
    ext.relators.push_back(zwords[i].pow(ee) * substitute(s.rhs[i], zwords).inverse());

  GroupHom h = identity_hom(p);
  h.target = ext;
  h.status = Verdict::verified_free("adjunction inclusion");
  h.provenance = HomProvenance::Adjunction;
  h.provenance_exponents = {s.e};
  AdjunctionResult out{std::move(ext), std::move(h), {}};
  out.cert = certify_omega_R(out.hom, ring);
  return out;
}

// ---- invisibility -------------------------------------------------------------------

std::string InvisibilityCertificate::str() const {
  std::ostringstream os;
  os << "exp " << to_string(e) << " {";
  for (std::size_t i = 0; i < normal_generators.size(); ++i)
    os << (i ? "; " : " ") << "gen " << word_to_string(normal_generators[i], ambient.gens)
       << " witness " << word_to_string(witness[i], ambient.gens);
  os << (normal_generators.empty() ? "}" : " }");
  return os.str();
}

InvisibilityCertificate make_certificate(Presentation ambient, std::vector<Word> gens,
                                         Int e, std::vector<Monomial> witness) {
  if (e < 1) fail(Err::NonPositive, "certificate exponent must be >= 1");
  if (gens.size() != witness.size())
    fail(Err::ArityMismatch, "one witness per normal generator required");
  for (const auto& a : gens)
    if (a.max_gen_plus1() > ambient.gens.size())
      fail(Err::UnknownSymbol, "normal generator outside the ambient alphabet");
  for (const auto& w : witness) check_letters(w, ambient.gens.size(), gens.size());
  return InvisibilityCertificate{std::move(ambient), std::move(gens), std::move(e),
                                 std::move(witness)};
}

Verdict verify_invisibility_certificate(const InvisibilityCertificate& cert,
                                        const CoefficientRing& ring, int class_bound) {
  if (class_bound < 1) fail(Err::NonPositive, "class bound must be >= 1");
  if (!in_denominator_set(ring, cert.e))
    return Verdict::refuted("exponent " + to_string(cert.e) + " is not invertible in " +
                            ring.name);

  H1Data h1(cert.ambient);
  for (std::size_t i = 0; i < cert.normal_generators.size(); ++i)
    if (!h1.class_zero(cert.normal_generators[i], ring))
      return Verdict::refuted("normal generator " +
                              word_to_string(cert.normal_generators[i], cert.ambient.gens) +
                              " has nonzero class in H_1 over " + ring.name);

  // witness shape: member of [G, <<a_1..a_n>>] iff erasing the tagged letters leaves a
  // freely trivial word and every indeterminate exponent sum vanishes
  for (std::size_t i = 0; i < cert.witness.size(); ++i) {
    const Monomial& w = cert.witness[i];
    bool shape = erase_indets(w).is_identity();
    for (std::uint32_t k = 1; shape && k <= cert.normal_generators.size(); ++k)
      if (w.exponent_sum(indet_sym(k)) != 0) shape = false;
    if (!shape)
      return Verdict::refuted("witness " + std::to_string(i + 1) +
                              " does not lie in the commutator form [G, <<a>>]");
  }

  long long ee = small_exp(cert.e);
  bool exact = true;
  std::unique_ptr<NilpotentAlgebra> alg;
  for (std::size_t i = 0; i < cert.normal_generators.size(); ++i) {
    Word d = cert.normal_generators[i].pow(ee) *
             substitute(cert.witness[i], cert.normal_generators).inverse();
    if (d.is_identity()) continue;
    if (trivial_by_relator_deletion(cert.ambient, d)) continue;
    if (!alg)
      alg = std::make_unique<NilpotentAlgebra>(cert.ambient,
                                               static_cast<unsigned>(class_bound));
    if (!alg->trivial_to_class(d))
      return Verdict::refuted("witness equality " + std::to_string(i + 1) +
                              " fails in the rational class-" + std::to_string(class_bound) +
                              " quotient");
    exact = false;
  }
  return exact ? Verdict::verified_free() : Verdict::to_class(class_bound);
}

InvisibilityCertificate product_certificate(const InvisibilityCertificate& c1,
                                            const InvisibilityCertificate& c2) {
  if (!c1.ambient.same_group(c2.ambient))
    fail(Err::AmbientMismatch, "certificates live over different ambient groups");
  Int L = ilcm(c1.e, c2.e);
  auto transport = [&L](const InvisibilityCertificate& c, std::uint32_t shift)
      -> std::vector<Monomial> {
    std::vector<Monomial> out;
    long long e = small_exp(c.e), m = small_exp(L / c.e);
    for (std::size_t i = 0; i < c.witness.size(); ++i) {
      Monomial w = shift_indets(c.witness[i], shift);
      Monomial tag = Monomial::from_letters(
          {{indet_sym(static_cast<std::uint32_t>(shift + i + 1)), 1}});
      Monomial acc;
      for (long long j = 0; j < m; ++j) {
        Monomial c_j = tag.pow(e * j);
        acc = acc * c_j * w * c_j.inverse();
      }
      out.push_back(std::move(acc));
    }
    return out;
  };

  std::vector<Word> gens = c1.normal_generators;
  gens.insert(gens.end(), c2.normal_generators.begin(), c2.normal_generators.end());
  std::vector<Monomial> wit = transport(c1, 0);
  auto w2 = transport(c2, static_cast<std::uint32_t>(c1.normal_generators.size()));
  wit.insert(wit.end(), w2.begin(), w2.end());
  return make_certificate(c1.ambient, std::move(gens), L, std::move(wit));
}

QuotientResult quotient_by_invisible(const Presentation& p,
                                     const InvisibilityCertificate& cert,
                                     const CoefficientRing& ring, int class_bound) {
  if (!cert.ambient.same_group(p))
    fail(Err::AmbientMismatch, "certificate ambient differs from the presentation");
  int c = std::max(class_bound, 2);
  Verdict v = verify_invisibility_certificate(cert, ring, c);
  if (!v.verified())
    fail(Err::UnverifiedCertificate,
         "certificate did not verify: " + v.str() + (v.note.empty() ? "" : " (" + v.note + ")"));

  auto [q, hom] = adjoin_relators(p, cert.normal_generators);
  hom.provenance = HomProvenance::InvisibleQuotient;
  hom.provenance_exponents = {cert.e};
  QuotientResult out{std::move(q), std::move(hom), {}, v};
  out.cert = certify_omega_R(out.hom, ring);
  return out;
}

std::vector<CandidateCertificate> canonical_invisible_certificates(
    const Presentation& p, const CoefficientRing& ring, int class_bound) {
  std::vector<CandidateCertificate> out;
  H1Data h1(p);
  for (std::size_t gi = 0; gi < p.gens.size(); ++gi) {
    Word a = Word::from_letters({{gen_sym(static_cast<std::uint32_t>(gi)), 1}});
    if (!h1.class_zero(a, ring)) continue;
    auto ord = h1.class_order(a);
    if (!ord || !in_denominator_set(ring, *ord)) continue;

    std::vector<Monomial> candidates;
    candidates.push_back(Monomial{});  // claims a^e is a consequence outright
    for (std::size_t ci = 0; ci < p.gens.size(); ++ci)
      for (long long sgn : {1LL, -1LL}) {
        Monomial c = Monomial::from_letters({{gen_sym(static_cast<std::uint32_t>(ci)), 1}});
        Monomial x1 = Monomial::from_letters({{indet_sym(1), sgn}});
        candidates.push_back(commutator(c, x1));
      }

    std::optional<CandidateCertificate> best;
    for (const auto& w : candidates) {
      auto cert = make_certificate(p, {a}, *ord, {w});
      Verdict v = verify_invisibility_certificate(cert, ring, class_bound);
      if (!v.verified()) continue;
      if (!best || v.rank() > best->verdict.rank())
        best = CandidateCertificate{std::move(cert), v};
      if (best->verdict.kind == Verdict::VerifiedFree) break;
    }
    if (best) out.push_back(std::move(*best));
  }
  return out;
}

// ---- towers -----------------------------------------------------------------------

std::vector<NullhomologousSystem> enumerate_systems(const Presentation& p,
                                                    const CoefficientRing& ring,
                                                    int count) {
  std::vector<NullhomologousSystem> out;
  if (count <= 0) return out;

  std::vector<Int> exps{1};
  if (ring.all) {
    exps.insert(exps.end(), {2, 3, 5, 7});
  } else {
    exps.insert(exps.end(), ring.inverted.begin(), ring.inverted.end());
  }

  // unit letters in enumeration order g_0 < g_0^-1 < ... < $1 < $1^-1
  std::vector<Letter> alphabet;
  for (std::size_t g = 0; g < p.gens.size(); ++g) {
    alphabet.push_back({gen_sym(static_cast<std::uint32_t>(g)), 1});
    alphabet.push_back({gen_sym(static_cast<std::uint32_t>(g)), -1});
  }
  alphabet.push_back({indet_sym(1), 1});
  alphabet.push_back({indet_sym(1), -1});

  constexpr std::size_t kMaxLen = 4;
  for (const Int& e : exps) {
    for (std::size_t len = 0; len <= kMaxLen; ++len) {
      std::vector<Letter> units;
      // DFS in lex order over freely reduced unit strings
      std::function<void(std::size_t)> go = [&](std::size_t pos) {
        if (static_cast<int>(out.size()) >= count) return;
        if (pos == len) {
          Monomial w = Monomial::from_letters(units);
          if (w.length() != len) return;  // collapsed powers: already enumerated shorter
          if (w.exponent_sum(indet_sym(1)) != 0) return;
          out.push_back(make_system(p, e, {w}));
          return;
        }
        for (std::size_t i = 0; i < alphabet.size(); ++i) {
          if (!units.empty()) {
            const Letter& prev = units.back();
            if (prev.sym == alphabet[i].sym && prev.exp == -alphabet[i].exp) continue;
          }
          units.push_back(alphabet[i]);
          go(pos + 1);
          units.pop_back();
          if (static_cast<int>(out.size()) >= count) return;
        }
      };
      go(0);
      if (static_cast<int>(out.size()) >= count) return out;
    }
  }
  return out;
}

ClosureTower build_tower(const Presentation& seed, const CoefficientRing& ring,
                         const TowerBudget& budget) {
  if (budget.depth < 0) fail(Err::NonPositive, "tower depth must be >= 0");
  ClosureTower tower;
  tower.ring = ring;
  tower.levels.push_back(seed);

  for (int k = 0; k < budget.depth; ++k) {
    const Presentation& cur = tower.levels.back();
    TowerStep step;

    std::vector<NullhomologousSystem> systems;
    if (budget.auto_sqrt) {
      for (const auto& h : H1Data(cur).free_basis_words())
        systems.push_back(make_system(cur, 2, {h.mono()}));
    }
    for (const auto& es : budget.explicit_systems) {
      bool fits = true;
      for (const auto& w : es.rhs)
        if (w.max_gen_plus1() > cur.gens.size()) fits = false;
      if (!fits) {
        tower.log.push_back("level " + std::to_string(k) +
                            ": skipped a system whose letters are not present");
        continue;
      }
      systems.push_back(make_system(cur, es.e, es.rhs));
    }
    if (budget.enumerate_cap > 0) {
      auto en = enumerate_systems(cur, ring, budget.enumerate_cap);
      systems.insert(systems.end(), en.begin(), en.end());
    }

    Presentation work = cur;
    std::vector<GroupHom> homs;
    for (auto& s : systems) {
      NullhomologousSystem rebased = make_system(work, s.e, s.rhs);
      auto ar = adjoin_solutions(work, rebased, ring);
      step.adjoined.push_back(rebased.str());
      work = std::move(ar.extended);
      homs.push_back(std::move(ar.hom));
    }

    if (budget.kill_invisible) {
      auto cands = canonical_invisible_certificates(work, ring, budget.class_bound);
      if (!cands.empty()) {
        InvisibilityCertificate combined = cands[0].cert;
        for (std::size_t i = 1; i < cands.size(); ++i)
          combined = product_certificate(combined, cands[i].cert);
        for (const auto& c : cands) step.killed.push_back(c.cert.str());
        auto qr = quotient_by_invisible(work, combined, ring, budget.class_bound);
        work = std::move(qr.quotient);
        homs.push_back(std::move(qr.hom));
      }
    }

    if (homs.empty()) {  // degenerate n = 0 system: identity adjunction
      auto ar = adjoin_solutions(work, make_system(work, 1, {}), ring);
      step.adjoined.push_back("exp 1 {}");
      work = std::move(ar.extended);
      homs.push_back(std::move(ar.hom));
    }

    GroupHom hom = homs[0];
    for (std::size_t i = 1; i < homs.size(); ++i) hom = compose(hom, homs[i]);
    work.name = seed.name + "_P" + std::to_string(k + 1);
    hom.target.name = work.name;
    step.cert = certify_omega_R(hom, ring);
    step.hom = std::move(hom);
    if (step.cert.h1.verdict != IsoVerdict::ISO)
      tower.log.push_back("level " + std::to_string(k + 1) +
                          ": H_1 isomorphism check FAILED");
    tower.log.push_back("level " + std::to_string(k + 1) + ": adjoined " +
                        std::to_string(step.adjoined.size()) + " system(s), killed " +
                        std::to_string(step.killed.size()) + " subgroup(s)");
    tower.levels.push_back(std::move(work));
    tower.steps.push_back(std::move(step));
  }
  return tower;
}

}  // namespace grouploc
