#pragma once
// Finitely presented groups, generator-image homomorphisms, and the verdict lattice
// used for every equality claim in a group with undecidable word problem.
#include <limits>
#include <string>
#include <utility>
#include <vector>

#include "grouploc/numbers.hpp"
#include "grouploc/words.hpp"

namespace grouploc {

struct Presentation {
  std::string name;
  std::vector<std::string> gens;
  std::vector<Word> relators;

  std::size_t gen_index(const std::string& g) const;  // UnknownSymbol if undeclared
  bool is_free() const { return relators.empty(); }
  // Structural identity (name excluded): what Ambient/source-target checks compare.
  bool same_group(const Presentation& o) const {
    return gens == o.gens && relators == o.relators;
  }
};

// Validates: distinct generators, relators within the alphabet (words are reduced by
// construction). Identity relators are kept verbatim.
Presentation make_presentation(std::string name, std::vector<std::string> gens,
                               std::vector<Word> relators);

Presentation free_group(long long n);  // gens x1..xn; NonPositive if n < 1

std::string print_presentation(const Presentation& p);

// ---- verdict lattice -------------------------------------------------------------
// UNCHECKED < VERIFIED_TO_CLASS(c) < VERIFIED_TO_CLASS(c') (c<c') < VERIFIED_FREE;
// REFUTED is terminal and never upgraded.
struct Verdict {
  enum Kind { Unchecked, VerifiedToClass, VerifiedFree, Refuted };
  Kind kind = Unchecked;
  int class_bound = 0;  // for VerifiedToClass
  std::string note;

  static Verdict unchecked() { return {}; }
  static Verdict verified_free(std::string n = "") { return {VerifiedFree, 0, std::move(n)}; }
  static Verdict to_class(int c, std::string n = "") { return {VerifiedToClass, c, std::move(n)}; }
  static Verdict refuted(std::string n = "") { return {Refuted, 0, std::move(n)}; }

  bool verified() const { return kind == VerifiedFree || kind == VerifiedToClass; }
  bool is_refuted() const { return kind == Refuted; }
  // strength for the lattice order; REFUTED handled separately (terminal)
  long long rank() const {
    switch (kind) {
      case Unchecked: return 0;
      case VerifiedToClass: return class_bound;
      case VerifiedFree: return std::numeric_limits<long long>::max();
      case Refuted: return -1;
    }
    return -1;
  }
  std::string str() const;
  bool operator==(const Verdict& o) const {
    return kind == o.kind && (kind != VerifiedToClass || class_bound == o.class_bound);
  }

 private:
  Verdict(Kind k, int c, std::string n) : kind(k), class_bound(c), note(std::move(n)) {}
  Verdict() = default;
  friend struct GroupHom;

 public:
  Verdict(Kind k) : kind(k) {}
};

// merge under the lattice: result of recording `newer` on top of `cur`
Verdict record_verification(const Verdict& cur, const Verdict& newer);
// conservative status of a composition
Verdict compose_verdicts(const Verdict& a, const Verdict& b);

// ---- homomorphisms ---------------------------------------------------------------
enum class HomProvenance { None, Adjunction, InvisibleQuotient, Composite };
const char* provenance_name(HomProvenance p);

struct GroupHom {
  Presentation source, target;
  std::vector<Word> images;  // one per source generator, over target generators
  Verdict status;            // UNCHECKED by default
  HomProvenance provenance = HomProvenance::None;
  std::vector<Int> provenance_exponents;  // adjunction/quotient exponents e

  Word apply(const Word& w) const { return apply_images(w, images); }
  GroupHom with_status(const Verdict& v) const {
    GroupHom h = *this;
    h.status = record_verification(status, v);
    return h;
  }
};

GroupHom identity_hom(const Presentation& p);
GroupHom compose(const GroupHom& f, const GroupHom& g);  // (g∘f): f.source -> g.target

// Quotient map p -> p/<<extra>>: relators appended, hom is identity on generators and
// exact by construction (VERIFIED_FREE).
std::pair<Presentation, GroupHom> adjoin_relators(const Presentation& p,
                                                  const std::vector<Word>& extra);

// Bounded exact triviality: free reduction plus deletion of relator occurrences
// (relators, inverses, cyclic rotations as unit-letter subwords). Sound, not complete.
bool trivial_by_relator_deletion(const Presentation& p, const Word& w, int max_passes = 64);

// Sound truncated well-definedness check of a hom: relator images must die in the
// target's rational class-c quotient. Free targets are decided exactly
// (VERIFIED_FREE/REFUTED); presented targets give REFUTED or VERIFIED_TO_CLASS(c),
// upgraded to VERIFIED_FREE when every image dies by relator deletion alone.
Verdict check_hom_to_class(const GroupHom& h, int c);

}  // namespace grouploc
