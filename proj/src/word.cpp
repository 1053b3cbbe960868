#include "ordmon/word.hpp"

#include <cctype>

#include "ordmon/errors.hpp"

namespace ordmon {

namespace {

struct Cursor {
  const std::string& text;
  std::size_t pos = 0;

  bool done() const { return pos >= text.size(); }
  char peek() const { return text[pos]; }
  void skip_ws() {
    while (!done() && std::isspace(static_cast<unsigned char>(peek()))) ++pos;
  }
  [[noreturn]] void fail(const std::string& what) const {
    throw ValidationError("word parse error at offset " + std::to_string(pos) + ": " + what);
  }
  int read_int() {
    if (done() || !std::isdigit(static_cast<unsigned char>(peek()))) fail("expected an integer");
    long v = 0;
    while (!done() && std::isdigit(static_cast<unsigned char>(peek()))) {
      v = v * 10 + (peek() - '0');
      if (v > 1'000'000) fail("index too large");
      ++pos;
    }
    return static_cast<int>(v);
  }
};

GeneratorSymbol read_token(Cursor& c) {
  char k = c.peek();
  if (k != 'e' && k != 'f' && k != 'a' && k != 'b') c.fail("expected a generator token");
  ++c.pos;
  if (c.done() || c.peek() != '[') c.fail("expected '['");
  ++c.pos;
  int i = c.read_int();
  int j = 0;
  if (!c.done() && c.peek() == ',') {
    ++c.pos;
    j = c.read_int();
  }
  if (c.done() || c.peek() != ']') c.fail("expected ']'");
  ++c.pos;
  return GeneratorSymbol{static_cast<LetterKind>(k), i, j};
}

}  // namespace

Word parse_word(const std::string& text, Family fam, int n) {
  if (n < 1) throw ValidationError("chain size must be positive");
  Cursor c{text};
  c.skip_ws();
  if (c.done()) c.fail("empty input; the identity is written \"1\"");
  Word w{fam, n, {}};
  if (c.peek() == '1') {
    ++c.pos;
    c.skip_ws();
    if (!c.done()) c.fail("'1' must stand alone");
    return w;
  }
  while (!c.done()) {
    GeneratorSymbol sym = read_token(c);
    if (!letter_valid(fam, n, sym)) {
      throw ValidationError("'" + sym.token() + "' is not a " + family_name(fam) +
                            " generator on the " + std::to_string(n) + "-chain");
    }
    w.letters.push_back(sym);
    std::size_t before = c.pos;
    c.skip_ws();
    if (!c.done() && c.pos == before) c.fail("expected whitespace between tokens");
  }
  return w;
}

std::string format_word(const Word& w) {
  if (w.letters.empty()) return "1";
  std::string out;
  for (std::size_t k = 0; k < w.letters.size(); ++k) {
    if (k > 0) out.push_back(' ');
    out += w.letters[k].token();
  }
  return out;
}

PartialMap evaluate(const Word& w) {
  PartialMap acc = PartialMap::identity(w.n);
  for (const GeneratorSymbol& sym : w.letters) {
    acc = compose(acc, generator_map(w.family, sym, w.n));
  }
  return acc;
}

bool shortlex_less(const Word& a, const Word& b) {
  if (a.letters.size() != b.letters.size()) return a.letters.size() < b.letters.size();
  for (std::size_t k = 0; k < a.letters.size(); ++k) {
    if (a.letters[k] != b.letters[k]) return letter_less(a.family, a.letters[k], b.letters[k]);
  }
  return false;
}

Word concat(const Word& a, const Word& b) {
  if (a.family != b.family || a.n != b.n) {
    throw ValidationError("cannot concatenate words over different alphabets");
  }
  Word out = a;
  out.letters.insert(out.letters.end(), b.letters.begin(), b.letters.end());
  return out;
}

}  // namespace ordmon
