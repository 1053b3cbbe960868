#include <algorithm>
#include <map>
#include <set>
#include <string>
#include <vector>

#include "doctest.h"
#include "oracles.hpp"
#include "ordmon/errors.hpp"
#include "ordmon/normal_form.hpp"

using namespace ordmon;

namespace {

bool is_normal(const std::string& text, Family fam, int n) {
  return recognize(parse_word(text, fam, n)).has_value();
}

// Every word over the alphabet with length <= max_len.
std::vector<Word> all_words(Family fam, int n, std::size_t max_len) {
  std::vector<Word> out{Word{fam, n, {}}};
  std::size_t layer_begin = 0;
  auto sigma = alphabet(fam, n);
  for (std::size_t len = 1; len <= max_len; ++len) {
    std::size_t layer_end = out.size();
    for (std::size_t k = layer_begin; k < layer_end; ++k) {
      for (const auto& sym : sigma) {
        Word w = out[k];
        w.letters.push_back(sym);
        out.push_back(std::move(w));
      }
    }
    layer_begin = layer_end;
  }
  return out;
}

}  // namespace

TEST_CASE("recognize accepts exactly the canonical shapes") {
  CHECK(is_normal("1", Family::D, 3));
  CHECK(is_normal("e[1,2] e[1,3]", Family::D, 3));
  CHECK(is_normal("e[1,2] e[2,3]", Family::D, 3));
  CHECK_FALSE(is_normal("e[1,3] e[1,2]", Family::D, 3));   // j must ascend
  CHECK_FALSE(is_normal("e[1,2] e[1,2]", Family::D, 3));   // j must ascend strictly
  CHECK_FALSE(is_normal("e[1,3] e[2,3]", Family::D, 3));

  CHECK(is_normal("1", Family::ID, 4));
  CHECK(is_normal("f[1] f[3] a[2,4]", Family::ID, 4));
  CHECK(is_normal("a[1,2] a[2,3]", Family::ID, 4));        // a later t may equal an earlier j
  CHECK(is_normal("f[2] a[1,3]", Family::ID, 4));
  CHECK_FALSE(is_normal("a[2,3] a[1,2]", Family::ID, 4));  // j must ascend
  CHECK_FALSE(is_normal("a[1,2] a[1,3]", Family::ID, 4));  // t's must be distinct
  CHECK_FALSE(is_normal("f[1] a[1,2]", Family::ID, 4));    // f meets a t
  CHECK_FALSE(is_normal("f[2] a[1,2]", Family::ID, 4));    // f meets a j
  CHECK_FALSE(is_normal("a[1,2] f[3]", Family::ID, 4));    // f's must prefix
  CHECK_FALSE(is_normal("f[3] f[1]", Family::ID, 4));      // f's must ascend

  CHECK(is_normal("1", Family::IC, 4));
  CHECK(is_normal("a[2] a[1]", Family::IC, 4));            // one run 2..1
  CHECK(is_normal("a[1] a[2]", Family::IC, 4));            // two runs
  CHECK(is_normal("a[2] a[1] a[3] a[2]", Family::IC, 4));
  CHECK(is_normal("e[4] a[2] a[1]", Family::IC, 4));
  CHECK_FALSE(is_normal("e[1] a[1]", Family::IC, 4));      // e inside the run interval
  CHECK_FALSE(is_normal("e[3] a[2] a[1]", Family::IC, 4)); // e right above the run top
  CHECK_FALSE(is_normal("a[1] a[1]", Family::IC, 4));
  CHECK_FALSE(is_normal("a[1] e[4]", Family::IC, 4));      // e's must prefix
  CHECK_FALSE(is_normal("a[3] a[2] a[3]", Family::IC, 4)); // runs must ascend in j
  CHECK_FALSE(is_normal("a[2] a[1] a[3] a[1]", Family::IC, 4));  // run bottoms must ascend

  CHECK(is_normal("1", Family::PC, 3));
  CHECK(is_normal("f[1] e[2] e[1]", Family::PC, 3));       // f may meet the run interior
  CHECK(is_normal("f[1] f[2] e[2]", Family::PC, 3));
  CHECK(is_normal("e[1] e[2]", Family::PC, 3));            // two runs
  CHECK(is_normal("e[2] e[1]", Family::PC, 3));            // one run
  CHECK_FALSE(is_normal("f[3] e[2]", Family::PC, 3));      // f right above the run top
  CHECK_FALSE(is_normal("e[1] f[1]", Family::PC, 3));      // f's must prefix
  CHECK_FALSE(is_normal("e[1] e[1]", Family::PC, 3));
  CHECK_FALSE(is_normal("e[2] e[1] e[2]", Family::PC, 3)); // run tops must ascend

  CHECK_THROWS_AS(recognize(parse_word("e[1]", Family::C, 3)), UnsupportedError);
  CHECK_THROWS_AS(recognize(Word{Family::PD, 3, {}}), UnsupportedError);
  // Letters outside the alphabet are not normal, whatever the shape.
  CHECK_FALSE(recognize(Word{Family::D, 3, {letter(LetterKind::E, 1, 5)}}).has_value());
}

TEST_CASE("recognized descriptors carry the parsed structure") {
  auto d = recognize(parse_word("e[1,2] e[2,3]", Family::D, 3));
  REQUIRE(d.has_value());
  auto dnf = std::get<DNormalForm>(*d);
  CHECK(dnf.pairs == std::vector<std::pair<int, int>>{{1, 2}, {2, 3}});

  auto id = recognize(parse_word("f[2] a[1,3]", Family::ID, 3));
  REQUIRE(id.has_value());
  auto idnf = std::get<IDNormalForm>(*id);
  CHECK(idnf.f_indices == std::vector<int>{2});
  CHECK(idnf.a_pairs == std::vector<std::pair<int, int>>{{1, 3}});

  auto ic = recognize(parse_word("e[4] a[2] a[1]", Family::IC, 4));
  REQUIRE(ic.has_value());
  auto icnf = std::get<ICNormalForm>(*ic);
  CHECK(icnf.e_indices == std::vector<int>{4});
  CHECK(icnf.runs == std::vector<std::pair<int, int>>{{2, 1}});

  auto pc = recognize(parse_word("f[1] e[2] e[1]", Family::PC, 3));
  REQUIRE(pc.has_value());
  auto pcnf = std::get<PCNormalForm>(*pc);
  CHECK(pcnf.f_indices == std::vector<int>{1});
  CHECK(pcnf.runs == std::vector<std::pair<int, int>>{{2, 1}});
}

TEST_CASE("enumeration counts match the counting sequences") {
  for (int n = 1; n <= 6; ++n) CHECK(enumerate_normal_forms(Family::D, n).size() == oracles::factorial(n));
  for (int n = 1; n <= 5; ++n) {
    CAPTURE(n);
    CHECK(enumerate_normal_forms(Family::ID, n).size() == oracles::bell(n + 1));
    CHECK(enumerate_normal_forms(Family::IC, n).size() == oracles::catalan(n + 1));
    CHECK(enumerate_normal_forms(Family::PC, n).size() == oracles::schroeder(n));
  }
  CHECK_THROWS_AS(enumerate_normal_forms(Family::C, 3), UnsupportedError);
  CHECK_THROWS_AS(enumerate_normal_forms(Family::PD, 3), UnsupportedError);
  CHECK_THROWS_AS(enumerate_normal_forms(Family::D, 0), ValidationError);
}

TEST_CASE("the normal words on the 3-chain, in shortlex order") {
  std::vector<std::string> got;
  for (const Word& w : enumerate_normal_forms(Family::D, 3)) got.push_back(format_word(w));
  CHECK(got == std::vector<std::string>{"1", "e[1,2]", "e[1,3]", "e[2,3]",
                                        "e[1,2] e[1,3]", "e[1,2] e[2,3]"});
}

TEST_CASE("enumeration is sorted, canonical, and bijective onto the monoid") {
  for (Family fam : {Family::D, Family::ID, Family::IC, Family::PC}) {
    for (int n = 1; n <= 5; ++n) {
      CAPTURE(family_name(fam));
      CAPTURE(n);
      auto nfs = enumerate_normal_forms(fam, n);
      for (std::size_t k = 0; k + 1 < nfs.size(); ++k) CHECK(shortlex_less(nfs[k], nfs[k + 1]));
      std::set<PartialMap> values;
      for (const Word& w : nfs) {
        CHECK(recognize(w).has_value());
        CHECK(values.insert(evaluate(w)).second);  // no two normal words collide
      }
      auto all = brute_force_enumerate(fam, n);
      CHECK(values == std::set<PartialMap>(all.begin(), all.end()));
    }
  }
}

TEST_CASE("normalization of pinned examples") {
  auto nf = [](const char* text, Family fam, int n) {
    return format_word(normalize(parse_word(text, fam, n)).word);
  };
  CHECK(nf("e[1,3] e[1,2]", Family::D, 3) == "e[1,2] e[1,3]");
  CHECK(nf("e[1,3] e[2,3]", Family::D, 3) == "e[1,3]");
  CHECK(nf("a[2,3] a[1,2]", Family::ID, 3) == "f[2] a[1,3]");
  CHECK(nf("a[1] a[1]", Family::IC, 3) == "e[1] e[2]");
  CHECK(nf("1", Family::D, 3) == "1");
  CHECK(nf("e[1] a[1]", Family::IC, 3) == "a[1]");
  CHECK(nf("e[2] a[1]", Family::IC, 3) == "e[1] e[2]");
}

TEST_CASE("normalization is sound, canonical, and idempotent on short words") {
  for (Family fam : {Family::D, Family::ID, Family::IC}) {
    auto p = build_presentation(fam, 3);
    for (const Word& w : all_words(fam, 3, 4)) {
      CAPTURE(family_name(fam));
      CAPTURE(format_word(w));
      NormalizeResult r = normalize(w, p);
      CHECK(evaluate(r.word) == evaluate(w));
      CHECK(recognize(r.word).has_value());
      CHECK(r.derivation.start == w);
      CHECK(r.derivation.end == r.word);
      CHECK(check_derivation(r.derivation, p));

      NormalizeResult again = normalize(r.word, p);
      CHECK(again.word == r.word);
      CHECK(again.derivation.steps.empty());
    }
  }
}

TEST_CASE("both sides of every relation normalize to the same word") {
  for (Family fam : {Family::D, Family::ID, Family::IC}) {
    auto p = build_presentation(fam, 4);
    for (const Relation& rel : p.relations) {
      CAPTURE(rel.id);
      CHECK(normalize(rel.lhs, p).word == normalize(rel.rhs, p).word);
    }
  }
}

TEST_CASE("derivation replay rejects tampering") {
  auto p = build_presentation(Family::D, 3);
  Word w = parse_word("e[1,3] e[1,2]", Family::D, 3);
  Derivation good = normalize(w, p).derivation;
  REQUIRE_FALSE(good.steps.empty());
  CHECK(check_derivation(good, p));

  Derivation bad = good;
  bad.steps[0].relation_id = "D.1[1,2]";
  CHECK_FALSE(check_derivation(bad, p));

  bad = good;
  bad.steps[0].relation_id = "no-such-relation";
  CHECK_FALSE(check_derivation(bad, p));

  bad = good;
  bad.steps[0].pos += 7;
  CHECK_FALSE(check_derivation(bad, p));

  bad = good;
  bad.end = parse_word("e[1,2]", Family::D, 3);
  CHECK_FALSE(check_derivation(bad, p));

  bad = good;
  bad.start.n = 4;
  CHECK_FALSE(check_derivation(bad, p));
}

TEST_CASE("normalize validates its inputs") {
  CHECK_THROWS_AS(normalize(parse_word("e[1] e[1]", Family::C, 3)), UnsupportedError);
  CHECK_THROWS_AS(normalize(parse_word("f[1] e[1]", Family::PC, 3)), UnsupportedError);
  CHECK_THROWS_AS(normalize(parse_word("e[1,2]", Family::D, 3), build_presentation(Family::ID, 3)),
                  ValidationError);
  CHECK_THROWS_AS(normalize(parse_word("e[1,2]", Family::D, 3), build_presentation(Family::D, 4)),
                  ValidationError);
  CHECK_THROWS_AS(normalize(Word{Family::D, 3, {letter(LetterKind::E, 1, 5)}}), ValidationError);
}

TEST_CASE("factorization over the injective preserving family") {
  CHECK(format_word(factorize_ic(PartialMap::identity(3))) == "1");
  CHECK(format_word(factorize_ic(PartialMap(3, {0, 1, 2}))) == "e[1] a[1] a[2]");
  CHECK(format_word(factorize_ic(PartialMap(3, {0, 1, 3}))) == "e[1] a[1]");
  CHECK(format_word(factorize_ic(PartialMap(2, {0, 0}))) == "e[1] e[2]");
  CHECK(format_word(factorize_ic(PartialMap(4, {0, 0, 1, 2}))) ==
        "e[1] e[2] a[2] a[1] a[3] a[2]");

  for (int n = 1; n <= 4; ++n) {
    CAPTURE(n);
    std::map<PartialMap, std::string> canon;
    for (const Word& w : enumerate_normal_forms(Family::IC, n)) canon[evaluate(w)] = format_word(w);
    for (const PartialMap& alpha : brute_force_enumerate(Family::IC, n)) {
      CAPTURE(alpha.to_string());
      Word w = factorize_ic(alpha);
      CHECK(evaluate(w) == alpha);
      // The factorization reaches alpha's canonical word up to the relations.
      CHECK(format_word(normalize(w).word) == canon.at(alpha));
    }
  }

  CHECK_THROWS_AS(factorize_ic(PartialMap(3, {1, 1, 3})), ValidationError);  // not injective
  CHECK_THROWS_AS(factorize_ic(PartialMap(3, {0, 2, 1})), ValidationError);  // not preserving
  CHECK_THROWS_AS(factorize_ic(PartialMap(3, {1, 3, 3})), ValidationError);  // not decreasing
}
