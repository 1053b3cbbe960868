#include "ordmon/normal_form.hpp"

#include <algorithm>
#include <cstdint>
#include <set>
#include <stdexcept>
#include <utility>

#include "ordmon/errors.hpp"

namespace ordmon {
namespace {

std::string n1(int i) { return std::to_string(i); }
std::string n2(int i, int j) { return std::to_string(i) + "," + std::to_string(j); }
std::string n3(int i, int j, int k) {
  return std::to_string(i) + "," + std::to_string(j) + "," + std::to_string(k);
}

// Mutable word under a presentation.  Every apply() matches one side of a
// relation in place, splices in the other side, and logs the step.  The
// budget of 10*len^2 applications (len = the input length) is a pure
// termination guard; the strategies below stay well under it.
class RewriteBuf {
 public:
  RewriteBuf(const Word& w, const Presentation& p) : p_(p), word_(w) {
    auto len = static_cast<std::int64_t>(w.letters.size());
    budget_ = std::max<std::int64_t>(50, 10 * len * len);
  }

  std::size_t size() const { return word_.letters.size(); }
  const GeneratorSymbol& at(std::size_t i) const { return word_.letters[i]; }
  const Word& word() const { return word_; }
  std::vector<RewriteStep> take_steps() { return std::move(steps_); }
  std::size_t mark() const { return steps_.size(); }

  void apply(const std::string& rel_id, std::size_t pos, Direction dir) {
    const Relation* r = p_.find(rel_id);
    if (r == nullptr)
      throw std::logic_error("normalize: unknown relation " + rel_id);
    const auto& from = dir == Direction::LR ? r->lhs.letters : r->rhs.letters;
    const auto& to = dir == Direction::LR ? r->rhs.letters : r->lhs.letters;
    auto& ls = word_.letters;
    if (pos + from.size() > ls.size() ||
        !std::equal(from.begin(), from.end(), ls.begin() + pos))
      throw std::logic_error("normalize: " + rel_id + " does not match at " +
                             std::to_string(pos));
    if (budget_ == 0)
      throw StepCapError("normalize: rewrite budget exhausted (10*len^2 applications)");
    --budget_;
    ls.erase(ls.begin() + pos, ls.begin() + pos + from.size());
    ls.insert(ls.begin() + pos, to.begin(), to.end());
    steps_.push_back(RewriteStep{rel_id, static_cast<int>(pos), dir});
  }

 private:
  const Presentation& p_;
  Word word_;
  std::vector<RewriteStep> steps_;
  std::int64_t budget_ = 0;
};

// ---------------------------------------------------------------------------
// Recognizers.  Each one re-parses the word against the canonical shape and
// checks every side condition; failure means "not normal", not an error.

std::optional<NormalFormDescriptor> recognize_d(const Word& w) {
  DNormalForm out;
  int last_j = 1;
  for (const auto& s : w.letters) {
    if (s.kind != LetterKind::E || !s.binary()) return std::nullopt;
    if (s.j <= last_j) return std::nullopt;
    last_j = s.j;
    out.pairs.emplace_back(s.i, s.j);
  }
  return NormalFormDescriptor{std::move(out)};
}

std::optional<NormalFormDescriptor> recognize_id(const Word& w) {
  IDNormalForm out;
  std::size_t k = 0;
  int last_f = 0;
  while (k < w.letters.size() && w.letters[k].kind == LetterKind::F) {
    const auto& s = w.letters[k];
    if (s.i <= last_f) return std::nullopt;
    last_f = s.i;
    out.f_indices.push_back(s.i);
    ++k;
  }
  int last_j = 1;
  std::set<int> ts, js;
  for (; k < w.letters.size(); ++k) {
    const auto& s = w.letters[k];
    if (s.kind != LetterKind::A || !s.binary()) return std::nullopt;
    if (s.j <= last_j) return std::nullopt;
    last_j = s.j;
    if (!ts.insert(s.i).second) return std::nullopt;
    js.insert(s.j);
    out.a_pairs.emplace_back(s.i, s.j);
  }
  for (int f : out.f_indices)
    if (ts.count(f) != 0 || js.count(f) != 0) return std::nullopt;
  return NormalFormDescriptor{std::move(out)};
}

// Splits a flat block of a/e letters into maximal descending-by-1 runs.
// Canonical words re-parse to their own run lists: across a boundary the
// next letter exceeds the previous tail, so greedy never over-merges.
std::vector<std::pair<int, int>> greedy_runs(const std::vector<GeneratorSymbol>& ls,
                                             std::size_t from) {
  std::vector<std::pair<int, int>> runs;
  for (std::size_t k = from; k < ls.size(); ++k) {
    int x = ls[k].i;
    if (!runs.empty() && x == runs.back().second - 1)
      runs.back().second = x;
    else
      runs.emplace_back(x, x);
  }
  return runs;
}

std::optional<NormalFormDescriptor> recognize_ic(const Word& w) {
  ICNormalForm out;
  std::size_t k = 0;
  int last_e = 0;
  while (k < w.letters.size() && w.letters[k].kind == LetterKind::E) {
    const auto& s = w.letters[k];
    if (s.binary() || s.i <= last_e) return std::nullopt;
    last_e = s.i;
    out.e_indices.push_back(s.i);
    ++k;
  }
  for (std::size_t r = k; r < w.letters.size(); ++r)
    if (w.letters[r].kind != LetterKind::A || w.letters[r].binary())
      return std::nullopt;
  out.runs = greedy_runs(w.letters, k);
  for (std::size_t s = 0; s + 1 < out.runs.size(); ++s)
    if (out.runs[s].first >= out.runs[s + 1].first ||
        out.runs[s].second >= out.runs[s + 1].second)
      return std::nullopt;
  for (int e : out.e_indices)
    for (const auto& [j, t] : out.runs)
      if ((t <= e && e <= j) || e == j + 1) return std::nullopt;
  return NormalFormDescriptor{std::move(out)};
}

std::optional<NormalFormDescriptor> recognize_pc(const Word& w) {
  PCNormalForm out;
  std::size_t k = 0;
  int last_f = 0;
  while (k < w.letters.size() && w.letters[k].kind == LetterKind::F) {
    const auto& s = w.letters[k];
    if (s.i <= last_f) return std::nullopt;
    last_f = s.i;
    out.f_indices.push_back(s.i);
    ++k;
  }
  for (std::size_t r = k; r < w.letters.size(); ++r)
    if (w.letters[r].kind != LetterKind::E || w.letters[r].binary())
      return std::nullopt;
  out.runs = greedy_runs(w.letters, k);
  for (std::size_t s = 0; s + 1 < out.runs.size(); ++s)
    if (out.runs[s].first >= out.runs[s + 1].first ||
        out.runs[s].second >= out.runs[s + 1].second)
      return std::nullopt;
  for (int f : out.f_indices)
    for (const auto& [j, i] : out.runs)
      if (f == j + 1) return std::nullopt;
  return NormalFormDescriptor{std::move(out)};
}

// ---------------------------------------------------------------------------
// Rendering and enumeration.

Word render_d(int n, const DNormalForm& d) {
  Word w{Family::D, n, {}};
  for (const auto& [i, j] : d.pairs) w.letters.push_back(letter(LetterKind::E, i, j));
  return w;
}

Word render_id(int n, const IDNormalForm& d) {
  Word w{Family::ID, n, {}};
  for (int f : d.f_indices) w.letters.push_back(letter(LetterKind::F, f));
  for (const auto& [t, j] : d.a_pairs) w.letters.push_back(letter(LetterKind::A, t, j));
  return w;
}

Word render_ic(int n, const ICNormalForm& d) {
  Word w{Family::IC, n, {}};
  for (int e : d.e_indices) w.letters.push_back(letter(LetterKind::E, e));
  for (const auto& [j, t] : d.runs)
    for (int x = j; x >= t; --x) w.letters.push_back(letter(LetterKind::A, x));
  return w;
}

Word render_pc(int n, const PCNormalForm& d) {
  Word w{Family::PC, n, {}};
  for (int f : d.f_indices) w.letters.push_back(letter(LetterKind::F, f));
  for (const auto& [j, i] : d.runs)
    for (int x = j; x >= i; --x) w.letters.push_back(letter(LetterKind::E, x));
  return w;
}

void gen_d(int n, int next_j, DNormalForm& cur, std::vector<Word>& out) {
  if (next_j > n) {
    out.push_back(render_d(n, cur));
    return;
  }
  gen_d(n, next_j + 1, cur, out);
  for (int i = 1; i < next_j; ++i) {
    cur.pairs.emplace_back(i, next_j);
    gen_d(n, next_j + 1, cur, out);
    cur.pairs.pop_back();
  }
}

void gen_id_pairs(int n, std::uint32_t fmask, int min_j, std::uint32_t used_t,
                  IDNormalForm& cur, std::vector<Word>& out) {
  out.push_back(render_id(n, cur));
  for (int j = min_j; j <= n; ++j) {
    if (fmask & (1u << j)) continue;
    for (int t = 1; t < j; ++t) {
      if ((fmask & (1u << t)) || (used_t & (1u << t))) continue;
      cur.a_pairs.emplace_back(t, j);
      gen_id_pairs(n, fmask, j + 1, used_t | (1u << t), cur, out);
      cur.a_pairs.pop_back();
    }
  }
}

void gen_ic_runs(int n, std::uint32_t emask, int min_j, int min_t,
                 ICNormalForm& cur, std::vector<Word>& out) {
  out.push_back(render_ic(n, cur));
  for (int j = min_j; j <= n - 1; ++j) {
    if (emask & (1u << (j + 1))) continue;
    for (int t = min_t; t <= j; ++t) {
      bool clear = true;
      for (int x = t; x <= j && clear; ++x)
        if (emask & (1u << x)) clear = false;
      if (!clear) continue;
      cur.runs.emplace_back(j, t);
      gen_ic_runs(n, emask, j + 1, t + 1, cur, out);
      cur.runs.pop_back();
    }
  }
}

void gen_pc_runs(int n, std::uint32_t fmask, int min_j, int min_i,
                 PCNormalForm& cur, std::vector<Word>& out) {
  out.push_back(render_pc(n, cur));
  for (int j = min_j; j <= n - 1; ++j) {
    if (fmask & (1u << (j + 1))) continue;
    for (int i = min_i; i <= j; ++i) {
      cur.runs.emplace_back(j, i);
      gen_pc_runs(n, fmask, j + 1, i + 1, cur, out);
      cur.runs.pop_back();
    }
  }
}

// ---------------------------------------------------------------------------
// Normalizer for D.  One left-to-right pass: the prefix already seen is kept
// canonical (second indices strictly ascending) and each new letter bubbles
// left until its second index fits, merging into the prefix when it ties.

void normalize_d(RewriteBuf& b) {
  std::size_t k = 1;
  while (k < b.size()) {
    std::size_t q = k;
    bool absorbed = false;
    while (q > 0) {
      int I = b.at(q - 1).i, J = b.at(q - 1).j;
      int i = b.at(q).i, j = b.at(q).j;
      if (J < j) break;
      if (J == j) {
        if (I == i)
          b.apply("D.1[" + n2(i, j) + "]", q - 1, Direction::LR);
        else
          b.apply("D.5[" + n3(I, i, j) + "]", q - 1, Direction::LR);
        absorbed = true;
        break;
      }
      if (I == j) {
        b.apply("D.3[" + n3(i, j, J) + "]", q - 1, Direction::RL);
      } else if (I == i) {
        b.apply("D.4[" + n3(i, j, J) + "]", q - 1, Direction::LR);
        b.apply("D.3[" + n3(i, j, J) + "]", q - 1, Direction::RL);
      } else if (std::pair(I, J) < std::pair(i, j)) {
        b.apply("D.2[" + n2(I, J) + "|" + n2(i, j) + "]", q - 1, Direction::LR);
      } else {
        b.apply("D.2[" + n2(i, j) + "|" + n2(I, J) + "]", q - 1, Direction::RL);
      }
      --q;
    }
    if (!absorbed) ++k;
  }
}

// ---------------------------------------------------------------------------
// Normalizer for ID.  Staged fixpoint: partial identities drift left, the
// f-prefix is sorted and squared down, adjacent a-letters are ordered by
// second index, repeated first indices collapse, and f-indices colliding
// with the a-part are pushed right until a relation eats them.

bool id_stage1(RewriteBuf& b) {  // move every f out of the a-zone
  bool any = false;
  for (;;) {
    std::size_t p = b.size();
    for (std::size_t q = 0; q + 1 < b.size(); ++q)
      if (b.at(q).kind == LetterKind::A && b.at(q + 1).kind == LetterKind::F) {
        p = q;
        break;
      }
    if (p == b.size()) return any;
    int t = b.at(p).i, j = b.at(p).j, m = b.at(p + 1).i;
    if (m == j)
      b.apply("ID.d2[" + n2(t, j) + "]", p, Direction::LR);
    else if (m == t)
      b.apply("ID.e2[" + n2(t, j) + "]", p, Direction::LR);
    else
      b.apply("ID.c[" + n1(m) + "|" + n2(t, j) + "]", p, Direction::RL);
    any = true;
  }
}

bool id_stage2(RewriteBuf& b) {  // canonicalize the f-prefix
  bool any = false;
  for (;;) {
    std::size_t p = b.size();
    for (std::size_t q = 0; q + 1 < b.size(); ++q)
      if (b.at(q).kind == LetterKind::F && b.at(q + 1).kind == LetterKind::F &&
          b.at(q).i >= b.at(q + 1).i) {
        p = q;
        break;
      }
    if (p == b.size()) return any;
    int u = b.at(p).i, v = b.at(p + 1).i;
    if (u == v)
      b.apply("ID.a[" + n1(u) + "]", p, Direction::LR);
    else
      b.apply("ID.b[" + n2(v, u) + "]", p, Direction::RL);
    any = true;
  }
}

bool id_stage3(RewriteBuf& b) {  // order adjacent a-letters by second index
  for (std::size_t p = 0; p + 1 < b.size(); ++p) {
    if (b.at(p).kind != LetterKind::A || b.at(p + 1).kind != LetterKind::A)
      continue;
    int u = b.at(p).i, v = b.at(p).j;
    int x = b.at(p + 1).i, y = b.at(p + 1).j;
    if (v < y) continue;
    if (v == y) {
      if (u == x) {
        b.apply("ID.d1[" + n2(u, v) + "]", p + 1, Direction::RL);
        b.apply("ID.e2[" + n2(u, v) + "]", p, Direction::LR);
        b.apply("ID.e1[" + n2(u, v) + "]", p + 1, Direction::LR);
        b.apply("ID.a[" + n1(u) + "]", p, Direction::LR);
      } else {
        b.apply("ID.d2[" + n2(u, v) + "]", p, Direction::RL);
        b.apply("ID.e1[" + n2(x, v) + "]", p + 1, Direction::LR);
        b.apply("ID.b[" + n2(x, v) + "]", p + 1, Direction::LR);
        b.apply("ID.d2[" + n2(u, v) + "]", p, Direction::LR);
      }
    } else if (u == y) {
      b.apply("ID.g[" + n3(x, u, v) + "]", p, Direction::LR);
    } else if (u == x) {
      b.apply("ID.d1[" + n2(u, y) + "]", p + 1, Direction::RL);
      b.apply("ID.e2[" + n2(u, v) + "]", p, Direction::LR);
      b.apply("ID.b[" + n2(u, v) + "]", p, Direction::LR);
      b.apply("ID.d1[" + n2(u, y) + "]", p + 1, Direction::LR);
    } else if (std::pair(u, v) < std::pair(x, y)) {
      b.apply("ID.f[" + n2(u, v) + "|" + n2(x, y) + "]", p, Direction::LR);
    } else {
      b.apply("ID.f[" + n2(x, y) + "|" + n2(u, v) + "]", p, Direction::RL);
    }
    return true;
  }
  return false;
}

bool id_stage4(RewriteBuf& b) {  // collapse a repeated first index
  std::size_t base = b.size();
  for (std::size_t q = 0; q < b.size(); ++q)
    if (b.at(q).kind == LetterKind::A) {
      base = q;
      break;
    }
  std::vector<std::pair<int, int>> pairs;
  for (std::size_t q = base; q < b.size(); ++q)
    pairs.emplace_back(b.at(q).i, b.at(q).j);
  for (std::size_t p = 1; p < pairs.size(); ++p) {
    std::size_t s = pairs.size();
    for (std::size_t r = p; r-- > 0;)
      if (pairs[r].first == pairs[p].first) {
        s = r;
        break;
      }
    if (s == pairs.size()) continue;
    // Insert f_{t_p} before pair p, walk it left to pair s, then fuse.
    b.apply("ID.d1[" + n2(pairs[p].first, pairs[p].second) + "]", base + p,
            Direction::RL);
    for (std::size_t r = p; r-- > s + 1;)
      b.apply("ID.c[" + n1(pairs[p].first) + "|" + n2(pairs[r].first, pairs[r].second) + "]",
              base + r, Direction::RL);
    b.apply("ID.e2[" + n2(pairs[s].first, pairs[s].second) + "]", base + s,
            Direction::LR);
    return true;
  }
  return false;
}

bool id_stage5(RewriteBuf& b) {  // push one colliding f-index into the a-part
  std::size_t base = 0;
  while (base < b.size() && b.at(base).kind == LetterKind::F) ++base;
  std::set<int> blocked;
  for (std::size_t q = base; q < b.size(); ++q) {
    blocked.insert(b.at(q).i);
    blocked.insert(b.at(q).j);
  }
  std::size_t p = base;
  for (std::size_t q = base; q-- > 0;)
    if (blocked.count(b.at(q).i) != 0) {
      p = q;
      break;
    }
  if (p == base) return false;
  int m = b.at(p).i;
  for (std::size_t q = p; q + 1 < b.size(); ++q) {
    const GeneratorSymbol& next = b.at(q + 1);
    if (next.kind == LetterKind::F) {
      b.apply("ID.b[" + n2(m, next.i) + "]", q, Direction::LR);
    } else if (next.i == m) {
      b.apply("ID.d1[" + n2(next.i, next.j) + "]", q, Direction::LR);
      return true;
    } else if (next.j == m) {
      b.apply("ID.e1[" + n2(next.i, next.j) + "]", q, Direction::LR);
      return true;
    } else {
      b.apply("ID.c[" + n1(m) + "|" + n2(next.i, next.j) + "]", q, Direction::LR);
    }
  }
  throw std::logic_error("normalize: blocked f-index never met its match");
}

void normalize_id(RewriteBuf& b) {
  for (;;) {
    bool changed = id_stage1(b);
    changed |= id_stage2(b);
    if (changed) continue;
    if (id_stage3(b) || id_stage4(b) || id_stage5(b)) continue;
    break;
  }
}

// ---------------------------------------------------------------------------
// Normalizer for IC.  Same staging idea, except the a-part is rebuilt into
// descending runs by a three-lemma insertion procedure.

void lemma_aba(RewriteBuf& b, int i, std::size_t p) {
  // a_{i+1} a_i a_{i+1} -> a_{i+1} a_i
  b.apply("IC.25b[" + n1(i + 1) + "]", p, Direction::RL);
  b.apply("IC.23[" + n1(i + 2) + "|" + n1(i) + "]", p + 1, Direction::LR);
  b.apply("IC.26a[" + n1(i + 1) + "]", p + 2, Direction::LR);
  b.apply("IC.25b[" + n1(i) + "]", p + 1, Direction::LR);
  b.apply("IC.23[" + n1(i + 2) + "|" + n1(i) + "]", p + 1, Direction::RL);
  b.apply("IC.25b[" + n1(i + 1) + "]", p, Direction::LR);
}

void lemma_square(RewriteBuf& b, int i, std::size_t p) {
  // a_i a_i -> e_i e_{i+1}
  b.apply("IC.25a[" + n1(i) + "]", p + 1, Direction::RL);
  b.apply("IC.26b[" + n1(i) + "]", p, Direction::LR);
  b.apply("IC.26a[" + n1(i) + "]", p + 1, Direction::LR);
  b.apply("IC.21[" + n1(i) + "]", p, Direction::LR);
}

void lemma_bab(RewriteBuf& b, int i, std::size_t p) {
  // a_i a_{i+1} a_i -> a_{i+1} a_i
  b.apply("IC.25a[" + n1(i) + "]", p + 2, Direction::RL);
  b.apply("IC.23[" + n1(i) + "|" + n1(i + 1) + "]", p + 1, Direction::RL);
  b.apply("IC.26b[" + n1(i) + "]", p, Direction::LR);
  b.apply("IC.25a[" + n1(i + 1) + "]", p + 1, Direction::LR);
  b.apply("IC.23[" + n1(i) + "|" + n1(i + 1) + "]", p, Direction::LR);
  b.apply("IC.25a[" + n1(i) + "]", p + 1, Direction::LR);
}

void ic_stage12(RewriteBuf& b) {  // e's drift left, e-block sorted and squared
  for (;;) {
    std::size_t p = b.size();
    for (std::size_t q = 0; q + 1 < b.size(); ++q)
      if (b.at(q).kind == LetterKind::A && b.at(q + 1).kind == LetterKind::E) {
        p = q;
        break;
      }
    if (p < b.size()) {
      int x = b.at(p).i, m = b.at(p + 1).i;
      if (m == x + 1)
        b.apply("IC.25b[" + n1(x) + "]", p, Direction::LR);
      else if (m == x)
        b.apply("IC.26b[" + n1(x) + "]", p, Direction::LR);
      else
        b.apply("IC.23[" + n1(m) + "|" + n1(x) + "]", p, Direction::RL);
      continue;
    }
    for (std::size_t q = 0; q + 1 < b.size(); ++q)
      if (b.at(q).kind == LetterKind::E && b.at(q + 1).kind == LetterKind::E &&
          b.at(q).i >= b.at(q + 1).i) {
        p = q;
        break;
      }
    if (p < b.size()) {
      int u = b.at(p).i, v = b.at(p + 1).i;
      if (u == v)
        b.apply("IC.21[" + n1(u) + "]", p, Direction::LR);
      else
        b.apply("IC.22[" + n2(v, u) + "]", p, Direction::RL);
      continue;
    }
    return;
  }
}

struct IcRun {
  int j, t;  // letters a_j a_{j-1} ... a_t
};

// Rebuilds the a-suffix into canonical runs.  Returns true when a square
// collapsed into partial identities mid-word, which obliges the caller to
// restart the whole pipeline.
bool ic_rebuild(RewriteBuf& b) {
  std::size_t base = 0;
  while (base < b.size() && b.at(base).kind == LetterKind::E) ++base;
  std::vector<IcRun> runs;
  auto start_of = [&](std::size_t q) {
    std::size_t pos = base;
    for (std::size_t r = 0; r < q; ++r)
      pos += static_cast<std::size_t>(runs[r].j - runs[r].t + 1);
    return pos;
  };
  std::size_t frontier = base;
  while (frontier < b.size()) {
    int i = b.at(frontier).i;
    std::size_t mover = frontier;
    std::size_t q = runs.size();
    for (;;) {
      if (q == 0) {
        runs.insert(runs.begin(), IcRun{i, i});
        break;
      }
      IcRun& run = runs[q - 1];
      if (i > run.j) {
        runs.insert(runs.begin() + static_cast<std::ptrdiff_t>(q), IcRun{i, i});
        break;
      }
      if (i > run.t) {
        // Slide next to the run's own a_{i-1}, then cancel against a_i.
        for (int y = run.t; y <= i - 2; ++y) {
          b.apply("IC.24[" + n2(y, i) + "]", mover - 1, Direction::LR);
          --mover;
        }
        lemma_aba(b, i - 1, mover - 2);
        break;
      }
      if (i == run.t) {
        lemma_square(b, i, mover - 1);
        return true;
      }
      if (i == run.t - 1) {
        if (q == 1 || runs[q - 2].t < i) {
          run.t = i;
          break;
        }
        // The run below ends at the same point: extend, then dissolve the
        // lower run into this one from its tail upward.
        run.t = i;
        IcRun lower = runs[q - 2];
        for (int x = lower.t; x <= lower.j; ++x) {
          std::size_t pos = start_of(q - 2) + static_cast<std::size_t>(lower.j - x);
          for (int y = run.j; y >= x + 2; --y) {
            b.apply("IC.24[" + n2(x, y) + "]", pos, Direction::LR);
            ++pos;
          }
          lemma_bab(b, x, pos);
        }
        runs.erase(runs.begin() + static_cast<std::ptrdiff_t>(q) - 2);
        break;
      }
      // i < run.t - 1: commute past the whole run and look further left.
      for (int y = run.t; y <= run.j; ++y) {
        b.apply("IC.24[" + n2(i, y) + "]", mover - 1, Direction::RL);
        --mover;
      }
      --q;
    }
    frontier = base;
    for (const IcRun& r : runs)
      frontier += static_cast<std::size_t>(r.j - r.t + 1);
  }
  return false;
}

bool ic_econflict(RewriteBuf& b) {  // push one colliding e-index right
  std::size_t base = 0;
  while (base < b.size() && b.at(base).kind == LetterKind::E) ++base;
  auto runs = greedy_runs([&] {
    std::vector<GeneratorSymbol> tail;
    for (std::size_t q = base; q < b.size(); ++q) tail.push_back(b.at(q));
    return tail;
  }(), 0);
  auto collides = [&](int m) {
    for (const auto& [j, t] : runs)
      if ((t <= m && m <= j) || m == j + 1) return true;
    return false;
  };
  std::size_t p = base;
  for (std::size_t q = base; q-- > 0;)
    if (collides(b.at(q).i)) {
      p = q;
      break;
    }
  if (p == base) return false;
  int m = b.at(p).i;
  for (std::size_t q = p; q + 1 < b.size(); ++q) {
    const GeneratorSymbol& next = b.at(q + 1);
    if (next.kind == LetterKind::E) {
      b.apply("IC.22[" + n2(m, next.i) + "]", q, Direction::LR);
    } else if (next.i == m) {
      b.apply("IC.25a[" + n1(m) + "]", q, Direction::LR);
      return true;
    } else if (next.i == m - 1) {
      b.apply("IC.26a[" + n1(m - 1) + "]", q, Direction::LR);
      return true;
    } else {
      b.apply("IC.23[" + n1(m) + "|" + n1(next.i) + "]", q, Direction::LR);
    }
  }
  throw std::logic_error("normalize: blocked e-index never met its match");
}

void normalize_ic(RewriteBuf& b) {
  for (;;) {
    ic_stage12(b);
    if (ic_rebuild(b)) continue;
    if (ic_econflict(b)) continue;
    break;
  }
}

}  // namespace

std::optional<NormalFormDescriptor> recognize(const Word& w) {
  if (w.family == Family::C || w.family == Family::PD)
    throw UnsupportedError(std::string("recognize: no canonical form for family ") +
                           family_name(w.family));
  for (const auto& s : w.letters)
    if (!letter_valid(w.family, w.n, s)) return std::nullopt;
  switch (w.family) {
    case Family::D:
      return recognize_d(w);
    case Family::ID:
      return recognize_id(w);
    case Family::IC:
      return recognize_ic(w);
    default:
      return recognize_pc(w);
  }
}

std::vector<Word> enumerate_normal_forms(Family fam, int n) {
  if (n < 1) throw ValidationError("enumerate_normal_forms: n must be at least 1");
  std::vector<Word> out;
  if (fam == Family::D) {
    DNormalForm cur;
    gen_d(n, 2, cur, out);
  } else if (fam == Family::ID) {
    for (std::uint32_t sub = 0; sub < (1u << n); ++sub) {
      // Bit i of the shifted mask stands for chain point i.
      std::uint32_t mask = sub << 1;
      IDNormalForm cur;
      for (int i = 1; i <= n; ++i)
        if (mask & (1u << i)) cur.f_indices.push_back(i);
      gen_id_pairs(n, mask, 2, 0, cur, out);
    }
  } else if (fam == Family::IC) {
    for (std::uint32_t sub = 0; sub < (1u << n); ++sub) {
      std::uint32_t mask = sub << 1;
      ICNormalForm cur;
      for (int i = 1; i <= n; ++i)
        if (mask & (1u << i)) cur.e_indices.push_back(i);
      gen_ic_runs(n, mask, 1, 1, cur, out);
    }
  } else if (fam == Family::PC) {
    for (std::uint32_t sub = 0; sub < (1u << n); ++sub) {
      std::uint32_t mask = sub << 1;
      PCNormalForm cur;
      for (int i = 1; i <= n; ++i)
        if (mask & (1u << i)) cur.f_indices.push_back(i);
      gen_pc_runs(n, mask, 1, 1, cur, out);
    }
  } else {
    throw UnsupportedError(std::string("enumerate_normal_forms: no canonical form for family ") +
                           family_name(fam));
  }
  std::sort(out.begin(), out.end(), shortlex_less);
  return out;
}

NormalizeResult normalize(const Word& w, const Presentation& p) {
  if (p.family != w.family || p.n != w.n)
    throw ValidationError("normalize: presentation does not match the word");
  for (const auto& s : w.letters)
    if (!letter_valid(w.family, w.n, s))
      throw ValidationError("normalize: foreign letter " + s.token());
  if (w.family != Family::D && w.family != Family::ID && w.family != Family::IC)
    throw UnsupportedError(std::string("normalize: no rewriting strategy for family ") +
                           family_name(w.family));
  RewriteBuf buf(w, p);
  switch (w.family) {
    case Family::D:
      normalize_d(buf);
      break;
    case Family::ID:
      normalize_id(buf);
      break;
    default:
      normalize_ic(buf);
      break;
  }
  Word out = buf.word();
  if (!recognize(out))
    throw std::logic_error("normalize: result is not canonical: " + format_word(out));
  return NormalizeResult{out, Derivation{w, buf.take_steps(), out}};
}

NormalizeResult normalize(const Word& w) {
  return normalize(w, build_presentation(w.family, w.n));
}

bool check_derivation(const Derivation& d, const Presentation& p) {
  if (d.start.family != p.family || d.start.n != p.n) return false;
  if (d.end.family != p.family || d.end.n != p.n) return false;
  std::vector<GeneratorSymbol> cur = d.start.letters;
  for (const auto& st : d.steps) {
    const Relation* r = p.find(st.relation_id);
    if (r == nullptr) return false;
    const auto& from = st.dir == Direction::LR ? r->lhs.letters : r->rhs.letters;
    const auto& to = st.dir == Direction::LR ? r->rhs.letters : r->lhs.letters;
    if (st.pos < 0) return false;
    auto pos = static_cast<std::size_t>(st.pos);
    if (pos + from.size() > cur.size() ||
        !std::equal(from.begin(), from.end(), cur.begin() + static_cast<std::ptrdiff_t>(pos)))
      return false;
    cur.erase(cur.begin() + static_cast<std::ptrdiff_t>(pos),
              cur.begin() + static_cast<std::ptrdiff_t>(pos + from.size()));
    cur.insert(cur.begin() + static_cast<std::ptrdiff_t>(pos), to.begin(), to.end());
  }
  return cur == d.end.letters;
}

Word factorize_ic(const PartialMap& alpha) {
  if (!alpha.in_family(Family::IC))
    throw ValidationError(
        "factorize_ic: map is not injective, order-decreasing and order-preserving");
  int n = alpha.n();
  Word w{Family::IC, n, {}};
  for (int x = 1; x <= n; ++x)
    if (!alpha.defined(x)) w.letters.push_back(letter(LetterKind::E, x));
  for (int x = 1; x <= n; ++x) {
    int t = alpha.apply(x);
    if (t != 0 && t != x)
      for (int y = x - 1; y >= t; --y) w.letters.push_back(letter(LetterKind::A, y));
  }
  return w;
}

}  // namespace ordmon
