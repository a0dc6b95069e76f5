#include "grouploc/parse.hpp"

#include <cctype>
#include <fstream>
#include <functional>
#include <sstream>

#include "grouploc/errors.hpp"

namespace grouploc {

namespace {

constexpr long long kMaxExp = 1LL << 40;

struct Tok {
  enum Kind { End, Ident, Number, Sym } kind = End;
  std::string text;
  Int num = 0;
  int line = 1, col = 1;
};

class Lexer {
 public:
  explicit Lexer(const std::string& s) : s_(s) { advance(); }

  const Tok& cur() const { return cur_; }
  bool is_sym(const char* t) const { return cur_.kind == Tok::Sym && cur_.text == t; }
  bool is_ident(const char* t) const { return cur_.kind == Tok::Ident && cur_.text == t; }

  [[noreturn]] void err(const std::string& expected) const {
    fail(Err::ParseError, "line " + std::to_string(cur_.line) + ", col " +
                              std::to_string(cur_.col) + ": expected " + expected +
                              (cur_.kind == Tok::End ? ", got end of input"
                                                     : ", got '" + cur_.text + "'"));
  }
  void expect_sym(const char* t) {
    if (!is_sym(t)) err(std::string("'") + t + "'");
    advance();
  }
  void expect_kw(const char* t) {
    if (!is_ident(t)) err(std::string("keyword '") + t + "'");
    advance();
  }
  std::string expect_ident(const char* what) {
    if (cur_.kind != Tok::Ident) err(what);
    std::string s = cur_.text;
    advance();
    return s;
  }
  Int expect_number(const char* what) {
    if (cur_.kind != Tok::Number) err(what);
    Int v = cur_.num;
    advance();
    return v;
  }
  void expect_end() {
    if (cur_.kind != Tok::End) err("end of input");
  }

  void advance() {
    while (i_ < s_.size()) {
      if (s_[i_] == '#') {
        while (i_ < s_.size() && s_[i_] != '\n') step();
      } else if (std::isspace(static_cast<unsigned char>(s_[i_]))) {
        step();
      } else {
        break;
      }
    }
    cur_ = Tok{Tok::End, "", 0, line_, col_};
    if (i_ >= s_.size()) return;
    char c = s_[i_];
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      std::string id;
      while (i_ < s_.size() &&
             (std::isalnum(static_cast<unsigned char>(s_[i_])) || s_[i_] == '_')) {
        id += s_[i_];
        step();
      }
      cur_.kind = Tok::Ident;
      cur_.text = std::move(id);
      return;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      std::string d;
      while (i_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[i_]))) {
        d += s_[i_];
        step();
      }
      cur_.kind = Tok::Number;
      cur_.text = d;
      cur_.num = Int(d);
      return;
    }
    if (c == '-' && i_ + 1 < s_.size() && s_[i_ + 1] == '>') {
      step();
      step();
      cur_.kind = Tok::Sym;
      cur_.text = "->";
      return;
    }
    cur_.kind = Tok::Sym;
    cur_.text = std::string(1, c);
    step();
  }

 private:
  void step() {
    if (s_[i_] == '\n') {
      ++line_;
      col_ = 1;
    } else {
      ++col_;
    }
    ++i_;
  }
  const std::string& s_;
  std::size_t i_ = 0;
  int line_ = 1, col_ = 1;
  Tok cur_;
};

// generator-name resolution; in infer mode unseen names extend the alphabet
struct Alphabet {
  const std::vector<std::string>* fixed = nullptr;
  std::vector<std::string>* inferred = nullptr;
  bool allow_indets = true;

  std::uint32_t resolve(const std::string& name, const Lexer& lx) {
    const std::vector<std::string>& gens = fixed ? *fixed : *inferred;
    for (std::size_t i = 0; i < gens.size(); ++i)
      if (gens[i] == name) return static_cast<std::uint32_t>(i);
    if (inferred) {
      inferred->push_back(name);
      return static_cast<std::uint32_t>(inferred->size() - 1);
    }
    (void)lx;
    fail(Err::UnknownSymbol, "unknown generator '" + name + "'");
  }
};

long long parse_signed_exp(Lexer& lx) {
  bool neg = false;
  if (lx.is_sym("-")) {
    neg = true;
    lx.advance();
  }
  Int v = lx.expect_number("an integer exponent");
  if (v > Int(kMaxExp)) fail(Err::CapExceeded, "exponent magnitude too large");
  long long e = static_cast<long long>(v);
  return neg ? -e : e;
}

Monomial parse_product(Lexer& lx, Alphabet& al);

Monomial parse_atom(Lexer& lx, Alphabet& al) {
  if (lx.cur().kind == Tok::Ident) {
    std::uint32_t g = al.resolve(lx.cur().text, lx);
    lx.advance();
    return Monomial::from_letters({{gen_sym(g), 1}});
  }
  if (lx.is_sym("$")) {
    lx.advance();
    Int k = lx.expect_number("an indeterminate index after '$'");
    if (!al.allow_indets)
      fail(Err::UnassignedIndeterminate, "indeterminates are not allowed in this word");
    if (k < 1) fail(Err::ParseError, "indeterminate indices start at $1");
    if (k > Int(1 << 20)) fail(Err::CapExceeded, "indeterminate index too large");
    return Monomial::from_letters({{indet_sym(static_cast<std::uint32_t>(k)), 1}});
  }
  if (lx.cur().kind == Tok::Number) {
    if (lx.cur().num != 1) lx.err("the identity word '1', a generator, '(', '[' or '$'");
    lx.advance();
    return Monomial{};
  }
  if (lx.is_sym("(")) {
    lx.advance();
    Monomial m = parse_product(lx, al);
    lx.expect_sym(")");
    return m;
  }
  if (lx.is_sym("[")) {
    lx.advance();
    Monomial u = parse_product(lx, al);
    lx.expect_sym(",");
    Monomial v = parse_product(lx, al);
    lx.expect_sym("]");
    return commutator(u, v);
  }
  lx.err("a generator, '1', '(', '[' or '$'");
}

Monomial parse_factor(Lexer& lx, Alphabet& al) {
  Monomial m = parse_atom(lx, al);
  if (lx.is_sym("^")) {
    lx.advance();
    m = m.pow(parse_signed_exp(lx));
  }
  return m;
}

Monomial parse_product(Lexer& lx, Alphabet& al) {
  Monomial m = parse_factor(lx, al);
  while (lx.is_sym("*")) {
    lx.advance();
    m = m * parse_factor(lx, al);
  }
  return m;
}

Monomial parse_full_word(const std::string& text, Alphabet& al) {
  Lexer lx(text);
  Monomial m = parse_product(lx, al);
  lx.expect_end();
  return m;
}

}  // namespace

Word parse_word(const std::string& text, const std::vector<std::string>& gens) {
  Alphabet al{&gens, nullptr, false};
  return Word(parse_full_word(text, al));
}

Monomial parse_monomial(const std::string& text, const std::vector<std::string>& gens) {
  Alphabet al{&gens, nullptr, true};
  return parse_full_word(text, al);
}

std::pair<Word, std::vector<std::string>> parse_word_infer(const std::string& text) {
  std::vector<std::string> gens;
  Alphabet al{nullptr, &gens, false};
  Word w(parse_full_word(text, al));
  return {std::move(w), std::move(gens)};
}

CoefficientRing parse_ring(const std::string& literal) {
  Lexer lx(literal);
  if (lx.is_ident("Q")) {
    lx.advance();
    lx.expect_end();
    return make_ring_all();
  }
  if (!lx.is_ident("Z")) lx.err("'Z', 'Q' or 'Z[1/p,...]'");
  lx.advance();
  std::vector<Int> primes;
  if (lx.is_sym("[")) {
    lx.advance();
    for (;;) {
      Int one = lx.expect_number("'1' of a 1/p fraction");
      if (one != 1) fail(Err::ParseError, "ring fractions must have numerator 1");
      lx.expect_sym("/");
      primes.push_back(lx.expect_number("a prime"));
      if (lx.is_sym(",")) {
        lx.advance();
        continue;
      }
      break;
    }
    lx.expect_sym("]");
  }
  lx.expect_end();
  return make_ring(std::move(primes));
}

LaurentPoly parse_laurent(const std::string& text, const std::vector<std::string>& vars) {
  Lexer lx(text);
  auto var_index = [&vars](const std::string& name) -> std::size_t {
    for (std::size_t i = 0; i < vars.size(); ++i)
      if (vars[i] == name) return i;
    fail(Err::UnknownSymbol, "unknown variable '" + name + "'");
  };

  std::function<LaurentPoly()> parse_expr;
  std::function<LaurentPoly()> parse_term_factor = [&]() -> LaurentPoly {
    if (lx.cur().kind == Tok::Number) {
      Int num = lx.expect_number("a number");
      Int den = 1;
      if (lx.is_sym("/")) {
        lx.advance();
        den = lx.expect_number("a denominator");
        if (den == 0) fail(Err::ZeroDivisor, "zero denominator in coefficient");
      }
      return LaurentPoly::constant(vars.size(), Rat(num) / Rat(den));
    }
    if (lx.cur().kind == Tok::Ident) {
      std::size_t v = var_index(lx.cur().text);
      lx.advance();
      long long e = 1;
      if (lx.is_sym("^")) {
        lx.advance();
        e = parse_signed_exp(lx);
      }
      return LaurentPoly::variable(vars.size(), v, e);
    }
    if (lx.is_sym("(")) {
      lx.advance();
      LaurentPoly p = parse_expr();
      lx.expect_sym(")");
      return p;
    }
    lx.err("a coefficient, variable or '('");
  };
  auto parse_term = [&]() -> LaurentPoly {
    LaurentPoly p = parse_term_factor();
    while (lx.is_sym("*")) {
      lx.advance();
      p = p * parse_term_factor();
    }
    return p;
  };
  parse_expr = [&]() -> LaurentPoly {
    bool neg = lx.is_sym("-");
    if (neg || lx.is_sym("+")) lx.advance();
    LaurentPoly p = parse_term();
    if (neg) p = -p;
    while (lx.is_sym("+") || lx.is_sym("-")) {
      bool minus = lx.is_sym("-");
      lx.advance();
      LaurentPoly q = parse_term();
      p = minus ? p - q : p + q;
    }
    return p;
  };
  LaurentPoly p = parse_expr();
  lx.expect_end();
  return p;
}

Presentation parse_presentation_text(const std::string& text,
                                     const std::string& default_name) {
  Lexer lx(text);
  std::string name = default_name;
  if (lx.cur().kind == Tok::Ident) {
    name = lx.expect_ident("a presentation name");
    lx.expect_sym("=");
  }
  lx.expect_sym("<");
  std::vector<std::string> gens;
  if (!lx.is_sym("|")) {
    for (;;) {
      gens.push_back(lx.expect_ident("a generator name"));
      if (lx.is_sym(",")) {
        lx.advance();
        continue;
      }
      break;
    }
  }
  lx.expect_sym("|");
  std::vector<Word> relators;
  if (!lx.is_sym(">")) {
    Alphabet al{&gens, nullptr, false};
    for (;;) {
      relators.push_back(Word(parse_product(lx, al)));
      if (lx.is_sym(",")) {
        lx.advance();
        continue;
      }
      break;
    }
  }
  lx.expect_sym(">");
  lx.expect_end();
  return make_presentation(std::move(name), std::move(gens), std::move(relators));
}

namespace {
// capture the raw text of one word up to ; } or , at depth 0 — used by the file
// formats that defer word parsing until the alphabet is known
std::string capture_word(Lexer& lx) {
  std::ostringstream os;
  int depth = 0;
  bool any = false;
  while (lx.cur().kind != Tok::End) {
    if (lx.is_sym("(") || lx.is_sym("[")) ++depth;
    if (lx.is_sym(")") || lx.is_sym("]")) --depth;
    if (depth == 0 && (lx.is_sym(";") || lx.is_sym("}"))) break;
    os << lx.cur().text << " ";
    any = true;
    lx.advance();
  }
  if (!any) lx.err("a word");
  return os.str();
}
}  // namespace

ParsedHom parse_hom_text(const std::string& text) {
  Lexer lx(text);
  ParsedHom ph;
  lx.expect_kw("hom");
  ph.name = lx.expect_ident("a homomorphism name");
  lx.expect_sym(":");
  ph.src = lx.expect_ident("a source presentation name");
  lx.expect_sym("->");
  ph.dst = lx.expect_ident("a target presentation name");
  lx.expect_sym("{");
  while (!lx.is_sym("}")) {
    std::string g = lx.expect_ident("a source generator");
    lx.expect_sym("->");
    ph.images.emplace_back(std::move(g), capture_word(lx));
    if (lx.is_sym(";")) lx.advance();
  }
  lx.expect_sym("}");
  lx.expect_end();
  return ph;
}

GroupHom resolve_hom(const ParsedHom& ph, const Presentation& src, const Presentation& dst) {
  if (ph.src != src.name)
    fail(Err::AmbientMismatch, "hom source '" + ph.src + "' is not '" + src.name + "'");
  if (ph.dst != dst.name)
    fail(Err::AmbientMismatch, "hom target '" + ph.dst + "' is not '" + dst.name + "'");
  GroupHom h;
  h.source = src;
  h.target = dst;
  h.images.assign(src.gens.size(), Word{});
  std::vector<bool> seen(src.gens.size(), false);
  for (const auto& [g, wtext] : ph.images) {
    std::size_t i = src.gen_index(g);
    if (seen[i]) fail(Err::ParseError, "duplicate image for generator '" + g + "'");
    seen[i] = true;
    h.images[i] = parse_word(wtext, dst.gens);
  }
  for (std::size_t i = 0; i < seen.size(); ++i)
    if (!seen[i])
      fail(Err::ArityMismatch, "no image given for generator '" + src.gens[i] + "'");
  return h;  // status UNCHECKED, provenance None: an externally supplied map
}

ParsedSystem parse_system_text(const std::string& text) {
  Lexer lx(text);
  ParsedSystem ps;
  lx.expect_kw("system");
  lx.expect_kw("over");
  ps.over = lx.expect_ident("a presentation name");
  lx.expect_kw("exp");
  ps.e = lx.expect_number("a positive exponent");
  lx.expect_sym("{");
  std::size_t next = 1;
  while (!lx.is_sym("}")) {
    lx.expect_sym("$");
    Int k = lx.expect_number("an indeterminate index");
    if (k != Int(next))
      fail(Err::ParseError, "system equations must be listed in order $1, $2, ...");
    ++next;
    lx.expect_sym("->");
    ps.rhs.push_back(capture_word(lx));
    if (lx.is_sym(";")) lx.advance();
  }
  lx.expect_sym("}");
  lx.expect_end();
  return ps;
}

NullhomologousSystem resolve_system(const ParsedSystem& ps, const Presentation& base) {
  if (ps.over != base.name)
    fail(Err::AmbientMismatch,
         "system is over '" + ps.over + "', presentation is '" + base.name + "'");
  std::vector<Monomial> rhs;
  for (const auto& t : ps.rhs) rhs.push_back(parse_monomial(t, base.gens));
  return make_system(base, ps.e, std::move(rhs));
}

ParsedInvisible parse_invisible_text(const std::string& text) {
  Lexer lx(text);
  ParsedInvisible pi;
  lx.expect_kw("invisible");
  lx.expect_kw("over");
  pi.over = lx.expect_ident("a presentation name");
  lx.expect_kw("exp");
  pi.e = lx.expect_number("a positive exponent");
  lx.expect_sym("{");
  while (!lx.is_sym("}")) {
    lx.expect_kw("gen");
    std::string g;
    {
      std::ostringstream os;
      while (!lx.is_ident("witness") && lx.cur().kind != Tok::End) {
        os << lx.cur().text << " ";
        lx.advance();
      }
      g = os.str();
      if (g.empty()) lx.err("a normal generator word");
    }
    lx.expect_kw("witness");
    pi.entries.emplace_back(std::move(g), capture_word(lx));
    if (lx.is_sym(";")) lx.advance();
  }
  lx.expect_sym("}");
  lx.expect_end();
  return pi;
}

InvisibilityCertificate resolve_invisible(const ParsedInvisible& pi,
                                          const Presentation& ambient) {
  if (pi.over != ambient.name)
    fail(Err::AmbientMismatch,
         "certificate is over '" + pi.over + "', presentation is '" + ambient.name + "'");
  std::vector<Word> gens;
  std::vector<Monomial> wit;
  for (const auto& [g, w] : pi.entries) {
    gens.push_back(parse_word(g, ambient.gens));
    wit.push_back(parse_monomial(w, ambient.gens));
  }
  return make_certificate(ambient, std::move(gens), pi.e, std::move(wit));
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) fail(Err::ParseError, "cannot open file: " + path);
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

}  // namespace grouploc
