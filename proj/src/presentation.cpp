#include "ordmon/presentation.hpp"

#include <mutex>
#include <sstream>

#include "ordmon/errors.hpp"

namespace ordmon {

namespace {

Word mk(Family fam, int n, std::vector<GeneratorSymbol> letters) {
  return Word{fam, n, std::move(letters)};
}

std::string idx2(int i, int j) { return std::to_string(i) + "," + std::to_string(j); }

GeneratorSymbol E(int i) { return letter(LetterKind::E, i); }
GeneratorSymbol E2(int i, int j) { return letter(LetterKind::E, i, j); }
GeneratorSymbol F(int i) { return letter(LetterKind::F, i); }
GeneratorSymbol A1(int i) { return letter(LetterKind::A, i); }
GeneratorSymbol A2(int i, int j) { return letter(LetterKind::A, i, j); }

void build_d(Presentation& p) {
  Family fam = Family::D;
  int n = p.n;
  auto add = [&](std::string id, std::vector<GeneratorSymbol> l, std::vector<GeneratorSymbol> r) {
    p.relations.push_back(Relation{std::move(id), mk(fam, n, std::move(l)), mk(fam, n, std::move(r))});
  };
  for (int i = 1; i <= n; ++i)
    for (int j = i + 1; j <= n; ++j)
      add("D.1[" + idx2(i, j) + "]", {E2(i, j), E2(i, j)}, {E2(i, j)});
  // Commutation only for index-disjoint pairs; each unordered pair once.
  for (int i = 1; i <= n; ++i)
    for (int j = i + 1; j <= n; ++j)
      for (int k = i; k <= n; ++k)
        for (int l = k + 1; l <= n; ++l) {
          if (std::pair(k, l) <= std::pair(i, j)) continue;
          if (k == i || k == j || l == i || l == j) continue;
          add("D.2[" + idx2(i, j) + "|" + idx2(k, l) + "]",
              {E2(i, j), E2(k, l)}, {E2(k, l), E2(i, j)});
        }
  for (int i = 1; i <= n; ++i)
    for (int j = i + 1; j <= n; ++j)
      for (int k = j + 1; k <= n; ++k) {
        std::string t = std::to_string(i) + "," + std::to_string(j) + "," + std::to_string(k);
        add("D.3[" + t + "]", {E2(i, j), E2(i, k)}, {E2(j, k), E2(i, j)});
        add("D.4[" + t + "]", {E2(i, k), E2(i, j)}, {E2(j, k), E2(i, j)});
      }
  for (int i = 1; i <= n; ++i)
    for (int j = 1; j <= n; ++j) {
      if (i == j) continue;  // that instance is D.1
      for (int k = std::max(i, j) + 1; k <= n; ++k) {
        std::string t = std::to_string(i) + "," + std::to_string(j) + "," + std::to_string(k);
        add("D.5[" + t + "]", {E2(i, k), E2(j, k)}, {E2(i, k)});
      }
    }
}

void build_id(Presentation& p) {
  Family fam = Family::ID;
  int n = p.n;
  auto add = [&](std::string id, std::vector<GeneratorSymbol> l, std::vector<GeneratorSymbol> r) {
    p.relations.push_back(Relation{std::move(id), mk(fam, n, std::move(l)), mk(fam, n, std::move(r))});
  };
  for (int i = 1; i <= n; ++i)
    add("ID.a[" + std::to_string(i) + "]", {F(i), F(i)}, {F(i)});
  for (int i = 1; i <= n; ++i)
    for (int j = i + 1; j <= n; ++j)
      add("ID.b[" + idx2(i, j) + "]", {F(i), F(j)}, {F(j), F(i)});
  for (int i = 1; i <= n; ++i)
    for (int j = i + 1; j <= n; ++j)
      for (int k = 1; k <= n; ++k) {
        if (k == i || k == j) continue;
        add("ID.c[" + std::to_string(k) + "|" + idx2(i, j) + "]",
            {F(k), A2(i, j)}, {A2(i, j), F(k)});
      }
  // The chained equalities split into two binary relations apiece.
  for (int i = 1; i <= n; ++i)
    for (int j = i + 1; j <= n; ++j) {
      add("ID.d1[" + idx2(i, j) + "]", {F(i), A2(i, j)}, {A2(i, j)});
      add("ID.d2[" + idx2(i, j) + "]", {A2(i, j), F(j)}, {A2(i, j)});
      add("ID.e1[" + idx2(i, j) + "]", {F(j), A2(i, j)}, {F(i), F(j)});
      add("ID.e2[" + idx2(i, j) + "]", {A2(i, j), F(i)}, {F(i), F(j)});
    }
  for (int i = 1; i <= n; ++i)
    for (int j = i + 1; j <= n; ++j)
      for (int k = i; k <= n; ++k)
        for (int l = k + 1; l <= n; ++l) {
          if (std::pair(k, l) <= std::pair(i, j)) continue;
          if (k == i || k == j || l == i || l == j) continue;
          add("ID.f[" + idx2(i, j) + "|" + idx2(k, l) + "]",
              {A2(i, j), A2(k, l)}, {A2(k, l), A2(i, j)});
        }
  for (int i = 1; i <= n; ++i)
    for (int j = i + 1; j <= n; ++j)
      for (int k = j + 1; k <= n; ++k) {
        std::string t = std::to_string(i) + "," + std::to_string(j) + "," + std::to_string(k);
        add("ID.g[" + t + "]", {A2(j, k), A2(i, j)}, {F(j), A2(i, k)});
      }
}

void build_c(Presentation& p) {
  Family fam = Family::C;
  int n = p.n;
  auto add = [&](std::string id, std::vector<GeneratorSymbol> l, std::vector<GeneratorSymbol> r) {
    p.relations.push_back(Relation{std::move(id), mk(fam, n, std::move(l)), mk(fam, n, std::move(r))});
  };
  for (int i = 1; i <= n - 1; ++i)
    add("C.11[" + std::to_string(i) + "]", {E(i), E(i)}, {E(i)});
  for (int i = 1; i <= n - 1; ++i)
    for (int j = i + 2; j <= n - 1; ++j)
      add("C.12[" + idx2(i, j) + "]", {E(i), E(j)}, {E(j), E(i)});
  for (int i = 1; i <= n - 2; ++i) {
    add("C.13[" + std::to_string(i) + "]", {E(i), E(i + 1), E(i)}, {E(i + 1), E(i)});
    add("C.14[" + std::to_string(i) + "]", {E(i + 1), E(i), E(i + 1)}, {E(i + 1), E(i)});
  }
}

void build_ic(Presentation& p) {
  Family fam = Family::IC;
  int n = p.n;
  auto add = [&](std::string id, std::vector<GeneratorSymbol> l, std::vector<GeneratorSymbol> r) {
    p.relations.push_back(Relation{std::move(id), mk(fam, n, std::move(l)), mk(fam, n, std::move(r))});
  };
  for (int i = 1; i <= n; ++i)
    add("IC.21[" + std::to_string(i) + "]", {E(i), E(i)}, {E(i)});
  for (int i = 1; i <= n; ++i)
    for (int j = i + 1; j <= n; ++j)
      add("IC.22[" + idx2(i, j) + "]", {E(i), E(j)}, {E(j), E(i)});
  for (int i = 1; i <= n; ++i)
    for (int j = 1; j <= n - 1; ++j) {
      if (!(i < j || i > j + 1)) continue;
      add("IC.23[" + std::to_string(i) + "|" + std::to_string(j) + "]",
          {E(i), A1(j)}, {A1(j), E(i)});
    }
  for (int i = 1; i <= n - 1; ++i)
    for (int j = i + 2; j <= n - 1; ++j)
      add("IC.24[" + idx2(i, j) + "]", {A1(i), A1(j)}, {A1(j), A1(i)});
  for (int i = 1; i <= n - 1; ++i) {
    std::string t = std::to_string(i);
    add("IC.25a[" + t + "]", {E(i), A1(i)}, {A1(i)});
    add("IC.25b[" + t + "]", {A1(i), E(i + 1)}, {A1(i)});
    add("IC.26a[" + t + "]", {E(i + 1), A1(i)}, {E(i), E(i + 1)});
    add("IC.26b[" + t + "]", {A1(i), E(i)}, {E(i), E(i + 1)});
  }
}

void build_pc(Presentation& p) {
  Family fam = Family::PC;
  int n = p.n;
  auto add = [&](std::string id, std::vector<GeneratorSymbol> l, std::vector<GeneratorSymbol> r) {
    p.relations.push_back(Relation{std::move(id), mk(fam, n, std::move(l)), mk(fam, n, std::move(r))});
  };
  for (int i = 1; i <= n - 1; ++i)
    add("PC.y1[" + std::to_string(i) + "]", {E(i), E(i)}, {E(i)});
  for (int i = 1; i <= n - 1; ++i)
    for (int j = i + 2; j <= n - 1; ++j)
      add("PC.y2[" + idx2(i, j) + "]", {E(i), E(j)}, {E(j), E(i)});
  for (int i = 1; i <= n - 2; ++i) {
    add("PC.y3[" + std::to_string(i) + "]", {E(i), E(i + 1), E(i)}, {E(i + 1), E(i)});
    add("PC.y4[" + std::to_string(i) + "]", {E(i + 1), E(i), E(i + 1)}, {E(i + 1), E(i)});
  }
  for (int i = 1; i <= n; ++i)
    add("PC.y5[" + std::to_string(i) + "]", {F(i), F(i)}, {F(i)});
  for (int i = 1; i <= n; ++i)
    for (int j = i + 1; j <= n; ++j)
      add("PC.y6[" + idx2(i, j) + "]", {F(i), F(j)}, {F(j), F(i)});
  for (int j = 1; j <= n; ++j)
    for (int i = 1; i <= n - 1; ++i) {
      if (!(j < i || j > i + 1)) continue;
      add("PC.y7[" + std::to_string(j) + "|" + std::to_string(i) + "]",
          {F(j), E(i)}, {E(i), F(j)});
    }
  for (int i = 1; i <= n - 1; ++i) {
    std::string t = std::to_string(i);
    add("PC.y8[" + t + "]", {F(i + 1), E(i)}, {F(i + 1)});
    add("PC.y9[" + t + "]", {E(i), F(i + 1)}, {E(i)});
    add("PC.y10[" + t + "]", {E(i), F(i)}, {F(i), F(i + 1)});
  }
}

void side_condition_self_check();
std::once_flag g_side_check_once;

}  // namespace

const Relation* Presentation::find(const std::string& id) const {
  if (index_.empty() && !relations.empty()) {
    for (std::size_t k = 0; k < relations.size(); ++k) index_[relations[k].id] = k;
  }
  auto it = index_.find(id);
  return it == index_.end() ? nullptr : &relations[it->second];
}

Presentation build_presentation(Family fam, int n) {
  if (n < 1) throw ValidationError("chain size must be positive");
  if (fam == Family::PD) {
    throw UnsupportedError("PD is presented through D on the extended chain, not directly");
  }
  std::call_once(g_side_check_once, side_condition_self_check);
  Presentation p;
  p.family = fam;
  p.n = n;
  p.letters = alphabet(fam, n);
  switch (fam) {
    case Family::D: build_d(p); break;
    case Family::ID: build_id(p); break;
    case Family::C: build_c(p); break;
    case Family::IC: build_ic(p); break;
    case Family::PC: build_pc(p); break;
    case Family::PD: break;
  }
  return p;
}

SoundnessReport check_soundness(const Presentation& p) {
  SoundnessReport report;
  report.family = p.family;
  report.n = p.n;
  report.all_hold = true;
  for (const Relation& rel : p.relations) {
    PartialMap lhs = evaluate(rel.lhs);
    PartialMap rhs = evaluate(rel.rhs);
    RelationCheck check{rel.id, true, 0};
    for (int x = 1; x <= p.n; ++x) {
      if (lhs.apply(x) != rhs.apply(x)) {
        check.holds = false;
        check.witness = x;
        report.all_hold = false;
        break;
      }
    }
    report.checks.push_back(std::move(check));
  }
  return report;
}

std::string export_presentation(const Presentation& p) {
  std::string out;
  for (const Relation& rel : p.relations) {
    out += rel.id;
    out += ": ";
    out += format_word(rel.lhs);
    out += " = ";
    out += format_word(rel.rhs);
    out.push_back('\n');
  }
  return out;
}

Presentation parse_presentation(const std::string& text, Family fam, int n) {
  Presentation p;
  p.family = fam;
  p.n = n;
  p.letters = alphabet(fam, n);
  std::istringstream in(text);
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
    auto fail = [&](const std::string& what) {
      throw ValidationError("presentation line " + std::to_string(lineno) + ": " + what);
    };
    std::size_t colon = line.find(": ");
    if (colon == std::string::npos) fail("expected '<id>: <lhs> = <rhs>'");
    std::size_t eq = line.find(" = ", colon + 2);
    if (eq == std::string::npos) fail("expected ' = '");
    Relation rel;
    rel.id = line.substr(0, colon);
    rel.lhs = parse_word(line.substr(colon + 2, eq - colon - 2), fam, n);
    rel.rhs = parse_word(line.substr(eq + 3), fam, n);
    p.relations.push_back(std::move(rel));
  }
  return p;
}

namespace {

bool sides_agree(Family fam, int n, std::vector<GeneratorSymbol> l, std::vector<GeneratorSymbol> r) {
  return evaluate(mk(fam, n, std::move(l))) == evaluate(mk(fam, n, std::move(r)));
}

void audit_commuting_pairs(std::vector<SideConditionFinding>& out, Family fam, int n,
                           const std::string& schema, LetterKind kind) {
  // Excluded from the pairwise-commutation schema: pairs sharing a point.
  for (int i = 1; i <= n; ++i)
    for (int j = i + 1; j <= n; ++j)
      for (int k = i; k <= n; ++k)
        for (int l = k + 1; l <= n; ++l) {
          if (std::pair(k, l) <= std::pair(i, j)) continue;
          if (k != i && k != j && l != i && l != j) continue;
          GeneratorSymbol a = letter(kind, i, j), b = letter(kind, k, l);
          out.push_back({schema, idx2(i, j) + "|" + idx2(k, l),
                         !sides_agree(fam, n, {a, b}, {b, a})});
        }
}

}  // namespace

std::vector<SideConditionFinding> audit_side_conditions(Family fam, int n) {
  std::vector<SideConditionFinding> out;
  switch (fam) {
    case Family::D:
      audit_commuting_pairs(out, fam, n, "D.2", LetterKind::E);
      for (int i = 1; i <= n; ++i)
        for (int k = i + 1; k <= n; ++k)
          out.push_back({"D.5", "i=j=" + std::to_string(i) + ",k=" + std::to_string(k),
                         !sides_agree(fam, n, {E2(i, k), E2(i, k)}, {E2(i, k)})});
      break;
    case Family::ID:
      for (int i = 1; i <= n; ++i)
        out.push_back({"ID.b", "i=j=" + std::to_string(i),
                       !sides_agree(fam, n, {F(i), F(i)}, {F(i), F(i)})});
      for (int i = 1; i <= n; ++i)
        for (int j = i + 1; j <= n; ++j)
          for (int k : {i, j})
            out.push_back({"ID.c", "k=" + std::to_string(k) + "|" + idx2(i, j),
                           !sides_agree(fam, n, {F(k), A2(i, j)}, {A2(i, j), F(k)})});
      audit_commuting_pairs(out, fam, n, "ID.f", LetterKind::A);
      break;
    case Family::C:
      for (int i = 1; i + 1 <= n - 1; ++i)
        out.push_back({"C.12", "j=i+1,i=" + std::to_string(i),
                       !sides_agree(fam, n, {E(i), E(i + 1)}, {E(i + 1), E(i)})});
      break;
    case Family::IC:
      for (int i = 1; i <= n; ++i)
        out.push_back({"IC.22", "i=j=" + std::to_string(i),
                       !sides_agree(fam, n, {E(i), E(i)}, {E(i), E(i)})});
      for (int j = 1; j <= n - 1; ++j)
        for (int i : {j, j + 1})
          out.push_back({"IC.23", "i=" + std::to_string(i) + "|j=" + std::to_string(j),
                         !sides_agree(fam, n, {E(i), A1(j)}, {A1(j), E(i)})});
      for (int i = 1; i + 1 <= n - 1; ++i)
        out.push_back({"IC.24", "j=i+1,i=" + std::to_string(i),
                       !sides_agree(fam, n, {A1(i), A1(i + 1)}, {A1(i + 1), A1(i)})});
      break;
    case Family::PC:
      for (int i = 1; i + 1 <= n - 1; ++i)
        out.push_back({"PC.y2", "j=i+1,i=" + std::to_string(i),
                       !sides_agree(fam, n, {E(i), E(i + 1)}, {E(i + 1), E(i)})});
      for (int i = 1; i <= n; ++i)
        out.push_back({"PC.y6", "i=j=" + std::to_string(i),
                       !sides_agree(fam, n, {F(i), F(i)}, {F(i), F(i)})});
      for (int i = 1; i <= n - 1; ++i)
        for (int j : {i, i + 1})
          out.push_back({"PC.y7", "j=" + std::to_string(j) + "|i=" + std::to_string(i),
                         !sides_agree(fam, n, {F(j), E(i)}, {E(i), F(j)})});
      break;
    case Family::PD:
      throw UnsupportedError("PD has no presentation schemas to audit");
  }
  return out;
}

namespace {

// Re-derives each schema guard concretely at n=4: guards that drop genuinely
// non-commuting (or otherwise unequal) instances must show as unsound, while
// guards that merely avoid duplicate instances must show as redundant.
void side_condition_self_check() {
  auto all_unsound = [](const std::vector<SideConditionFinding>& fs, const std::string& schema) {
    for (const auto& f : fs)
      if (f.schema == schema && !f.unsound) return false;
    return true;
  };
  auto all_redundant = [](const std::vector<SideConditionFinding>& fs, const std::string& schema) {
    for (const auto& f : fs)
      if (f.schema == schema && f.unsound) return false;
    return true;
  };
  auto any_unsound = [](const std::vector<SideConditionFinding>& fs, const std::string& schema) {
    for (const auto& f : fs)
      if (f.schema == schema && f.unsound) return true;
    return false;
  };
  bool ok = true;
  {
    auto fs = audit_side_conditions(Family::D, 4);
    ok = ok && any_unsound(fs, "D.2") && all_redundant(fs, "D.5");
  }
  {
    auto fs = audit_side_conditions(Family::ID, 4);
    ok = ok && all_redundant(fs, "ID.b") && all_unsound(fs, "ID.c") && any_unsound(fs, "ID.f");
  }
  ok = ok && all_unsound(audit_side_conditions(Family::C, 4), "C.12");
  {
    auto fs = audit_side_conditions(Family::IC, 4);
    ok = ok && all_redundant(fs, "IC.22") && all_unsound(fs, "IC.23") && all_unsound(fs, "IC.24");
  }
  {
    auto fs = audit_side_conditions(Family::PC, 4);
    ok = ok && all_unsound(fs, "PC.y2") && all_redundant(fs, "PC.y6") && all_unsound(fs, "PC.y7");
  }
  if (!ok) throw std::logic_error("side-condition self-check failed");
}

}  // namespace

}  // namespace ordmon
