#include "grouploc/presentation.hpp"

#include <algorithm>
#include <memory>
#include <set>
#include <sstream>

#include "grouploc/errors.hpp"
#include "grouploc/magnus.hpp"

namespace grouploc {

std::size_t Presentation::gen_index(const std::string& g) const {
  for (std::size_t i = 0; i < gens.size(); ++i)
    if (gens[i] == g) return i;
  fail(Err::UnknownSymbol, "generator '" + g + "' not declared in <" + name + ">");
}

Presentation make_presentation(std::string name, std::vector<std::string> gens,
                               std::vector<Word> relators) {
  std::set<std::string> seen;
  for (const auto& g : gens) {
    if (g.empty()) fail(Err::ParseError, "empty generator name");
    if (!seen.insert(g).second) fail(Err::ParseError, "duplicate generator '" + g + "'");
  }
  for (const auto& r : relators)
    if (r.mono().max_gen_plus1() > gens.size())
      fail(Err::UnknownSymbol, "relator uses generator outside the alphabet");
  return Presentation{std::move(name), std::move(gens), std::move(relators)};
}

Presentation free_group(long long n) {
  if (n < 1) fail(Err::NonPositive, "free group needs at least one generator");
  std::vector<std::string> gens;
  for (long long i = 1; i <= n; ++i) gens.push_back("x" + std::to_string(i));
  return make_presentation("F" + std::to_string(n), std::move(gens), {});
}

std::string print_presentation(const Presentation& p) {
  std::ostringstream os;
  os << "< ";
  for (std::size_t i = 0; i < p.gens.size(); ++i) os << (i ? ", " : "") << p.gens[i];
  os << " | ";
  for (std::size_t i = 0; i < p.relators.size(); ++i)
    os << (i ? ", " : "") << word_to_string(p.relators[i], p.gens);
  os << " >";
  return os.str();
}

std::string Verdict::str() const {
  switch (kind) {
    case Unchecked: return "UNCHECKED";
    case VerifiedFree: return "VERIFIED_FREE";
    case VerifiedToClass: return "VERIFIED_TO_CLASS(" + std::to_string(class_bound) + ")";
    case Refuted: return "REFUTED";
  }
  return "UNCHECKED";
}

Verdict record_verification(const Verdict& cur, const Verdict& newer) {
  if (cur.kind == Verdict::Refuted) return cur;  // terminal
  if (newer.kind == Verdict::Refuted) return newer;
  return newer.rank() > cur.rank() ? newer : cur;
}

Verdict compose_verdicts(const Verdict& a, const Verdict& b) {
  if (a.kind == Verdict::Refuted || b.kind == Verdict::Refuted)
    return Verdict::refuted("composite of a refuted map");
  if (a.kind == Verdict::Unchecked || b.kind == Verdict::Unchecked)
    return Verdict::unchecked();
  return a.rank() < b.rank() ? a : b;
}

const char* provenance_name(HomProvenance p) {
  switch (p) {
    case HomProvenance::None: return "NONE";
    case HomProvenance::Adjunction: return "ADJUNCTION";
    case HomProvenance::InvisibleQuotient: return "INVISIBLE_QUOTIENT";
    case HomProvenance::Composite: return "COMPOSITE";
  }
  return "NONE";
}

GroupHom identity_hom(const Presentation& p) {
  GroupHom h;
  h.source = p;
  h.target = p;
  for (std::size_t i = 0; i < p.gens.size(); ++i)
    h.images.push_back(Word::from_letters({{gen_sym(static_cast<std::uint32_t>(i)), 1}}));
  h.status = Verdict::verified_free("identity");
  return h;
}

GroupHom compose(const GroupHom& f, const GroupHom& g) {
  if (!f.target.same_group(g.source))
    fail(Err::AmbientMismatch, "compose: middle groups differ");
  GroupHom h;
  h.source = f.source;
  h.target = g.target;
  for (const auto& w : f.images) h.images.push_back(g.apply(w));
  h.status = compose_verdicts(f.status, g.status);
  h.provenance =
      (f.provenance == HomProvenance::None || g.provenance == HomProvenance::None)
          ? HomProvenance::None
          : HomProvenance::Composite;
  h.provenance_exponents = f.provenance_exponents;
  h.provenance_exponents.insert(h.provenance_exponents.end(), g.provenance_exponents.begin(),
                                g.provenance_exponents.end());
  return h;
}

std::pair<Presentation, GroupHom> adjoin_relators(const Presentation& p,
                                                  const std::vector<Word>& extra) {
  Presentation q = p;
  for (const auto& w : extra) {
    if (w.mono().max_gen_plus1() > p.gens.size())
      fail(Err::UnknownSymbol, "adjoined relator uses generator outside the alphabet");
    q.relators.push_back(w);
  }
  GroupHom h = identity_hom(p);
  h.target = q;
  h.status = Verdict::verified_free("quotient map");
  return {std::move(q), std::move(h)};
}

namespace {

// unit-letter expansion (each letter split into |exp| single steps)
std::vector<Letter> units_of(const Monomial& m) {
  std::vector<Letter> u;
  for (const auto& l : m.letters()) {
    long long n = l.exp < 0 ? -l.exp : l.exp;
    for (long long i = 0; i < n; ++i) u.push_back({l.sym, l.exp < 0 ? -1 : 1});
  }
  return u;
}

Monomial from_units(const std::vector<Letter>& u) { return Monomial::from_letters(u); }

}  // namespace

bool trivial_by_relator_deletion(const Presentation& p, const Word& w, int max_passes) {
  if (w.is_identity()) return true;
  if (p.relators.empty()) return false;

  // all cyclic rotations of each relator and its inverse, as unit strings
  std::vector<std::vector<Letter>> patterns;
  for (const auto& r : p.relators) {
    for (const Monomial& base : {r.mono(), r.mono().inverse()}) {
      auto u = units_of(base);
      if (u.empty()) continue;
      for (std::size_t s = 0; s < u.size(); ++s) {
        std::vector<Letter> rot(u.begin() + static_cast<long>(s), u.end());
        rot.insert(rot.end(), u.begin(), u.begin() + static_cast<long>(s));
        patterns.push_back(std::move(rot));
      }
    }
  }

  std::vector<Letter> cur = units_of(w.mono());
  for (int pass = 0; pass < max_passes; ++pass) {
    bool changed = false;
    for (const auto& pat : patterns) {
      if (pat.size() > cur.size()) continue;
      for (std::size_t i = 0; i + pat.size() <= cur.size(); ++i) {
        bool hit = true;
        for (std::size_t j = 0; j < pat.size(); ++j)
          if (!(cur[i + j].sym == pat[j].sym) || cur[i + j].exp != pat[j].exp) {
            hit = false;
            break;
          }
        if (hit) {
          cur.erase(cur.begin() + static_cast<long>(i),
                    cur.begin() + static_cast<long>(i + pat.size()));
          cur = units_of(from_units(cur));  // re-reduce
          changed = true;
          break;
        }
      }
      if (changed) break;
    }
    if (cur.empty()) return true;
    if (!changed) return false;
  }
  return cur.empty();
}

Verdict check_hom_to_class(const GroupHom& h, int c) {
  if (c < 1) fail(Err::NonPositive, "class bound must be >= 1");
  for (const auto& w : h.images)
    if (w.mono().max_gen_plus1() > h.target.gens.size())
      fail(Err::UnknownSymbol, "image word uses generator outside the target alphabet");
  if (h.images.size() != h.source.gens.size())
    fail(Err::ArityMismatch, "one image per source generator required");

  bool exact = true;
  bool used_truncation = false;
  std::unique_ptr<NilpotentAlgebra> alg;  // built lazily; target may be free
  for (const auto& r : h.source.relators) {
    Word d = h.apply(r);
    if (d.is_identity()) continue;
    if (h.target.is_free())
      return Verdict::refuted("relator image " + word_to_string(d, h.target.gens) +
                              " is a nontrivial free word");
    if (trivial_by_relator_deletion(h.target, d)) continue;
    if (!alg) alg = std::make_unique<NilpotentAlgebra>(h.target, static_cast<unsigned>(c));
    if (!alg->trivial_to_class(d))
      return Verdict::refuted("relator image " + word_to_string(d, h.target.gens) +
                              " survives in the rational class-" + std::to_string(c) +
                              " quotient");
    exact = false;
    used_truncation = true;
  }
  (void)used_truncation;
  return exact ? Verdict::verified_free() : Verdict::to_class(c);
}

}  // namespace grouploc
