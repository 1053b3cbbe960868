#include "ordmon/letters.hpp"

#include <mutex>

#include "ordmon/errors.hpp"

namespace ordmon {

std::string GeneratorSymbol::token() const {
  std::string out(1, static_cast<char>(kind));
  out.push_back('[');
  out += std::to_string(i);
  if (binary()) {
    out.push_back(',');
    out += std::to_string(j);
  }
  out.push_back(']');
  return out;
}

GeneratorSymbol letter(LetterKind kind, int i) { return GeneratorSymbol{kind, i, 0}; }
GeneratorSymbol letter(LetterKind kind, int i, int j) { return GeneratorSymbol{kind, i, j}; }

bool letter_valid(Family fam, int n, const GeneratorSymbol& sym) {
  switch (fam) {
    case Family::D:
      return sym.kind == LetterKind::E && 1 <= sym.i && sym.i < sym.j && sym.j <= n;
    case Family::ID:
      if (sym.kind == LetterKind::F) return 1 <= sym.i && sym.i <= n && sym.j == 0;
      if (sym.kind == LetterKind::A) return 1 <= sym.i && sym.i < sym.j && sym.j <= n;
      return false;
    case Family::C:
      return sym.kind == LetterKind::E && 1 <= sym.i && sym.i <= n - 1 && sym.j == 0;
    case Family::IC:
      if (sym.kind == LetterKind::E) return 1 <= sym.i && sym.i <= n && sym.j == 0;
      if (sym.kind == LetterKind::A) return 1 <= sym.i && sym.i <= n - 1 && sym.j == 0;
      return false;
    case Family::PC:
      if (sym.kind == LetterKind::F) return 1 <= sym.i && sym.i <= n && sym.j == 0;
      if (sym.kind == LetterKind::E) return 1 <= sym.i && sym.i <= n - 1 && sym.j == 0;
      return false;
    case Family::PD:
      return false;  // no generator alphabet of its own
  }
  return false;
}

int letter_kind_rank(Family fam, LetterKind kind) {
  switch (fam) {
    case Family::D:
      if (kind == LetterKind::E) return 0;
      break;
    case Family::ID:
      if (kind == LetterKind::F) return 0;
      if (kind == LetterKind::A) return 1;
      break;
    case Family::C:
      if (kind == LetterKind::E) return 0;
      break;
    case Family::IC:
      if (kind == LetterKind::E) return 0;
      if (kind == LetterKind::A) return 1;
      break;
    case Family::PC:
      if (kind == LetterKind::F) return 0;
      if (kind == LetterKind::E) return 1;
      break;
    case Family::PD:
      break;
  }
  throw ValidationError(std::string("letter kind '") + static_cast<char>(kind) +
                        "' is not part of the " + family_name(fam) + " alphabet");
}

bool letter_less(Family fam, const GeneratorSymbol& a, const GeneratorSymbol& b) {
  int ra = letter_kind_rank(fam, a.kind);
  int rb = letter_kind_rank(fam, b.kind);
  if (ra != rb) return ra < rb;
  if (a.i != b.i) return a.i < b.i;
  return a.j < b.j;
}

std::vector<GeneratorSymbol> alphabet(Family fam, int n) {
  if (n < 1) throw ValidationError("chain size must be positive");
  std::vector<GeneratorSymbol> out;
  switch (fam) {
    case Family::D:
      for (int i = 1; i <= n; ++i)
        for (int j = i + 1; j <= n; ++j) out.push_back(letter(LetterKind::E, i, j));
      break;
    case Family::ID:
      for (int i = 1; i <= n; ++i) out.push_back(letter(LetterKind::F, i));
      for (int i = 1; i <= n; ++i)
        for (int j = i + 1; j <= n; ++j) out.push_back(letter(LetterKind::A, i, j));
      break;
    case Family::C:
      for (int i = 1; i <= n - 1; ++i) out.push_back(letter(LetterKind::E, i));
      break;
    case Family::IC:
      for (int i = 1; i <= n; ++i) out.push_back(letter(LetterKind::E, i));
      for (int i = 1; i <= n - 1; ++i) out.push_back(letter(LetterKind::A, i));
      break;
    case Family::PC:
      for (int i = 1; i <= n; ++i) out.push_back(letter(LetterKind::F, i));
      for (int i = 1; i <= n - 1; ++i) out.push_back(letter(LetterKind::E, i));
      break;
    case Family::PD:
      throw UnsupportedError("PD has no generator alphabet; use the bottom-adjoining view");
  }
  return out;
}

namespace {

// Pins the composition convention once per process: with x(ab) = (xa)b the
// product "send 3 to 1, then send 3 to 2" fixes the image 1, so it equals its
// own left factor; the opposite convention would give the right factor.
void composition_order_self_check() {
  PartialMap f13(3, {1, 2, 1});
  PartialMap f23(3, {1, 2, 2});
  if (compose(f13, f23) != f13 || compose(f23, f13) != f23) {
    throw std::logic_error("composition convention self-check failed");
  }
}

std::once_flag g_self_check_once;

}  // namespace

PartialMap generator_map(Family fam, const GeneratorSymbol& sym, int n) {
  std::call_once(g_self_check_once, composition_order_self_check);
  if (!letter_valid(fam, n, sym)) {
    throw ValidationError("'" + sym.token() + "' is not a " + family_name(fam) +
                          " generator on the " + std::to_string(n) + "-chain");
  }
  PartialMap id = PartialMap::identity(n);
  std::vector<int> images = id.images();
  switch (fam) {
    case Family::D:
      images[static_cast<std::size_t>(sym.j - 1)] = sym.i;  // e[i,j]: full, j -> i
      break;
    case Family::ID:
      if (sym.kind == LetterKind::F) {
        images[static_cast<std::size_t>(sym.i - 1)] = 0;    // f[i]: drop i
      } else {
        images[static_cast<std::size_t>(sym.i - 1)] = 0;    // a[i,j]: drop i, j -> i
        images[static_cast<std::size_t>(sym.j - 1)] = sym.i;
      }
      break;
    case Family::C:
      images[static_cast<std::size_t>(sym.i)] = sym.i;      // e[i]: full, i+1 -> i
      break;
    case Family::IC:
      if (sym.kind == LetterKind::E) {
        images[static_cast<std::size_t>(sym.i - 1)] = 0;    // e[i]: drop i
      } else {
        images[static_cast<std::size_t>(sym.i - 1)] = 0;    // a[i]: drop i, i+1 -> i
        images[static_cast<std::size_t>(sym.i)] = sym.i;
      }
      break;
    case Family::PC:
      if (sym.kind == LetterKind::F) {
        images[static_cast<std::size_t>(sym.i - 1)] = 0;    // f[i]: drop i
      } else {
        images[static_cast<std::size_t>(sym.i)] = sym.i;    // e[i]: full, i+1 -> i
      }
      break;
    case Family::PD:
      throw UnsupportedError("PD has no generator alphabet");
  }
  return PartialMap(n, std::move(images));
}

}  // namespace ordmon
