#pragma once
// Text front end: words, ring literals, Laurent polynomials, presentation/hom/system/
// certificate files. All errors carry line/col positions via Err::ParseError.
#include <string>
#include <utility>
#include <vector>

#include "grouploc/equations.hpp"
#include "grouploc/laurent.hpp"
#include "grouploc/presentation.hpp"
#include "grouploc/ring.hpp"
#include "grouploc/words.hpp"

namespace grouploc {

// word grammar: `*`-separated factors, `^` integer powers, `()`, `[u,v]`, `$k`, `1`
Word parse_word(const std::string& text, const std::vector<std::string>& gens);
Monomial parse_monomial(const std::string& text, const std::vector<std::string>& gens);
// free-standing words: generators declared implicitly in first-occurrence order
std::pair<Word, std::vector<std::string>> parse_word_infer(const std::string& text);

CoefficientRing parse_ring(const std::string& literal);  // Z | Q | Z[1/2,1/3]

LaurentPoly parse_laurent(const std::string& text, const std::vector<std::string>& vars);

// `name = < g1, g2 | r1, r2 >` or `< ... >`; `#` comments
Presentation parse_presentation_text(const std::string& text, const std::string& default_name);

struct ParsedHom {
  std::string name, src, dst;
  std::vector<std::pair<std::string, std::string>> images;  // generator -> word text
};
ParsedHom parse_hom_text(const std::string& text);  // hom name: src -> dst { g -> w; }
GroupHom resolve_hom(const ParsedHom& ph, const Presentation& src, const Presentation& dst);

struct ParsedSystem {
  std::string over;
  Int e = 1;
  std::vector<std::string> rhs;  // ordered $1..$n
};
ParsedSystem parse_system_text(const std::string& text);  // system over p exp e { $1 -> w; }
NullhomologousSystem resolve_system(const ParsedSystem& ps, const Presentation& base);

struct ParsedInvisible {
  std::string over;
  Int e = 1;
  std::vector<std::pair<std::string, std::string>> entries;  // (generator word, witness)
};
ParsedInvisible parse_invisible_text(const std::string& text);
InvisibilityCertificate resolve_invisible(const ParsedInvisible& pi,
                                          const Presentation& ambient);

std::string read_file(const std::string& path);  // ParseError when unreadable

}  // namespace grouploc
