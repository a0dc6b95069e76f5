#include "grouploc/words.hpp"

#include "grouploc/errors.hpp"

namespace grouploc {

namespace {
constexpr std::size_t kMaxWordLetters = 1u << 20;  // guards runaway pow/substitute
}

void push_reduced(std::vector<Letter>& out, Sym s, long long e) {
  if (e == 0) return;
  if (!out.empty() && out.back().sym == s) {
    out.back().exp += e;
    if (out.back().exp == 0) out.pop_back();
    return;
  }
  out.push_back(Letter{s, e});
}

Monomial Monomial::from_letters(const std::vector<Letter>& raw) {
  Monomial m;
  for (const Letter& l : raw) push_reduced(m.ls_, l.sym, l.exp);
  return m;
}

bool Monomial::has_indets() const {
  for (const Letter& l : ls_)
    if (l.sym.kind == SymKind::Indet) return true;
  return false;
}

std::size_t Monomial::length() const {
  std::size_t n = 0;
  for (const Letter& l : ls_) n += static_cast<std::size_t>(l.exp < 0 ? -l.exp : l.exp);
  return n;
}

Monomial Monomial::operator*(const Monomial& o) const {
  Monomial m;
  m.ls_ = ls_;
  for (const Letter& l : o.ls_) push_reduced(m.ls_, l.sym, l.exp);
  return m;
}

Monomial Monomial::inverse() const {
  Monomial m;
  m.ls_.reserve(ls_.size());
  for (auto it = ls_.rbegin(); it != ls_.rend(); ++it)
    m.ls_.push_back(Letter{it->sym, -it->exp});
  return m;
}

Monomial Monomial::pow(long long e) const {
  if (e == 0) return Monomial();
  if (ls_.size() == 1) {
    Monomial m;
    m.ls_.push_back(Letter{ls_[0].sym, ls_[0].exp * e});
    return m;
  }
  Monomial base = e < 0 ? inverse() : *this;
  unsigned long long k = e < 0 ? static_cast<unsigned long long>(-e)
                               : static_cast<unsigned long long>(e);
  Monomial acc;
  for (unsigned long long i = 0; i < k; ++i) {
    acc = acc * base;
    if (acc.length() > kMaxWordLetters) fail(Err::CapExceeded, "word length during pow");
  }
  return acc;
}

long long Monomial::exponent_sum(Sym s) const {
  long long n = 0;
  for (const Letter& l : ls_)
    if (l.sym == s) n += l.exp;
  return n;
}

std::uint32_t Monomial::max_indet() const {
  std::uint32_t m = 0;
  for (const Letter& l : ls_)
    if (l.sym.kind == SymKind::Indet && l.sym.id > m) m = l.sym.id;
  return m;
}

std::uint32_t Monomial::max_gen_plus1() const {
  std::uint32_t m = 0;
  for (const Letter& l : ls_)
    if (l.sym.kind == SymKind::Gen && l.sym.id + 1 > m) m = l.sym.id + 1;
  return m;
}

Word::Word(Monomial m) : m_(std::move(m)) {
  if (m_.has_indets()) fail(Err::UnassignedIndeterminate, "word contains indeterminates");
}

Word substitute(const Monomial& w, const std::vector<Word>& assignment) {
  std::vector<Letter> out;
  for (const Letter& l : w.letters()) {
    if (l.sym.kind == SymKind::Gen) {
      push_reduced(out, l.sym, l.exp);
      continue;
    }
    if (l.sym.id == 0 || l.sym.id > assignment.size())
      fail(Err::UnassignedIndeterminate, "$" + std::to_string(l.sym.id));
    Word v = assignment[l.sym.id - 1].pow(l.exp);
    for (const Letter& m : v.letters()) push_reduced(out, m.sym, m.exp);
    if (out.size() > kMaxWordLetters) fail(Err::CapExceeded, "word length during substitute");
  }
  return Word(Monomial::from_letters(out));
}

Monomial substitute_monomial(const Monomial& w, const std::vector<Monomial>& assignment) {
  std::vector<Letter> out;
  for (const Letter& l : w.letters()) {
    if (l.sym.kind == SymKind::Gen) {
      push_reduced(out, l.sym, l.exp);
      continue;
    }
    if (l.sym.id == 0 || l.sym.id > assignment.size())
      fail(Err::UnassignedIndeterminate, "$" + std::to_string(l.sym.id));
    Monomial v = assignment[l.sym.id - 1].pow(l.exp);
    for (const Letter& m : v.letters()) push_reduced(out, m.sym, m.exp);
    if (out.size() > kMaxWordLetters) fail(Err::CapExceeded, "word length during substitute");
  }
  return Monomial::from_letters(out);
}

Word apply_images(const Word& w, const std::vector<Word>& images) {
  std::vector<Letter> out;
  for (const Letter& l : w.letters()) {
    if (l.sym.id >= images.size()) fail(Err::UnknownSymbol, "generator index out of range");
    Word v = images[l.sym.id].pow(l.exp);
    for (const Letter& m : v.letters()) push_reduced(out, m.sym, m.exp);
    if (out.size() > kMaxWordLetters) fail(Err::CapExceeded, "word length during hom application");
  }
  return Word(Monomial::from_letters(out));
}

Word erase_indets(const Monomial& w) {
  std::vector<Letter> out;
  for (const Letter& l : w.letters())
    if (l.sym.kind == SymKind::Gen) push_reduced(out, l.sym, l.exp);
  return Word(Monomial::from_letters(out));
}

std::string word_to_string(const Monomial& w, const std::vector<std::string>& gen_names) {
  if (w.is_identity()) return "1";
  std::string s;
  bool first = true;
  for (const Letter& l : w.letters()) {
    if (!first) s += "*";
    first = false;
    if (l.sym.kind == SymKind::Gen) {
      if (l.sym.id >= gen_names.size()) fail(Err::UnknownSymbol, "generator index out of range");
      s += gen_names[l.sym.id];
    } else {
      s += "$" + std::to_string(l.sym.id);
    }
    if (l.exp != 1) s += "^" + std::to_string(l.exp);
  }
  return s;
}

}  // namespace grouploc
