#include "doctest.h"
#include "oracles.hpp"
#include "ordmon/errors.hpp"
#include "ordmon/serialize.hpp"
#include "ordmon/verification.hpp"

using namespace ordmon;

TEST_CASE("generator closure reaches the whole monoid") {
  auto d4 = generators_generate(Family::D, 4);
  CHECK(d4.generates);
  CHECK(d4.closure_size == 24);
  auto c3 = generators_generate(Family::C, 3);
  CHECK(c3.generates);
  CHECK(c3.closure_size == 5);
  auto ic3 = generators_generate(Family::IC, 3);
  CHECK(ic3.generates);
  CHECK(ic3.closure_size == 14);
  auto pc3 = generators_generate(Family::PC, 3);
  CHECK(pc3.generates);
  CHECK(pc3.closure_size == 22);
}

TEST_CASE("the full pipeline passes on small chains") {
  for (Family fam : {Family::D, Family::ID, Family::IC, Family::PC}) {
    for (int n = 1; n <= 4; ++n) {
      CAPTURE(family_name(fam));
      CAPTURE(n);
      auto rep = verify_presentation(fam, n);
      CHECK(rep.family == family_name(fam));
      CHECK(rep.n == n);
      CHECK(rep.relations_sound);
      CHECK(rep.generators_generate);
      REQUIRE(rep.normal_form_count.has_value());
      CHECK(*rep.normal_form_count == rep.concrete_size);
      REQUIRE(rep.presented_size.has_value());  // cross-checked at this size
      CHECK(*rep.presented_size == rep.concrete_size);
      CHECK(rep.verdict == "pass");
      CHECK_FALSE(rep.failed_stage.has_value());
      if (fam == Family::PC) {
        CHECK(rep.derivations_checked == 0);  // no normalizer for PC
      } else {
        CHECK(rep.derivations_checked > 0);
      }
    }
  }
}

TEST_CASE("the chain monoid verifies through its presented size") {
  auto rep = verify_presentation(Family::C, 5);
  CHECK(rep.family == "C");
  CHECK(rep.relations_sound);
  CHECK(rep.generators_generate);
  CHECK(rep.concrete_size == oracles::catalan(5));
  CHECK_FALSE(rep.normal_form_count.has_value());
  REQUIRE(rep.presented_size.has_value());
  CHECK(*rep.presented_size == rep.concrete_size);
  CHECK(rep.derivations_checked == 0);
  CHECK(rep.verdict == "pass");
}

TEST_CASE("starved limits yield an incomplete verdict, not an exception") {
  VerifyOptions opts;
  opts.limits = CongruenceLimits{.max_states = 4, .max_steps = 100'000'000};
  auto rep = verify_presentation(Family::C, 4, opts);
  CHECK(rep.verdict == "incomplete");
  REQUIRE(rep.failed_stage.has_value());
  CHECK(*rep.failed_stage == "presented-size");
}

TEST_CASE("verification rejects the unpresented family") {
  CHECK_THROWS_AS(verify_presentation(Family::PD, 3), UnsupportedError);
}

TEST_CASE("verification reports serialize deterministically") {
  auto a = to_json(verify_presentation(Family::ID, 3)).dump();
  auto b = to_json(verify_presentation(Family::ID, 3)).dump();
  CHECK(a == b);
  CHECK(a.find("\"family\":\"ID\"") != std::string::npos);
}

TEST_CASE("the pipeline passes across the documented envelope") {
  auto pass = [](Family fam, int n) {
    CAPTURE(family_name(fam));
    CAPTURE(n);
    CHECK(verify_presentation(fam, n).verdict == "pass");
  };
  for (Family fam : {Family::D, Family::ID, Family::C, Family::IC, Family::PC}) {
    for (int n = 1; n <= 5; ++n) pass(fam, n);
  }
  for (int n = 6; n <= 7; ++n) pass(Family::D, n);
  for (int n = 6; n <= 8; ++n) pass(Family::C, n);
}

TEST_CASE("the bottom-adjoining map is an isomorphism") {
  for (int n = 1; n <= 3; ++n) {
    CAPTURE(n);
    auto rep = verify_pd_iso(n);
    CHECK(rep.n == n);
    CHECK(rep.pd_size == oracles::factorial(n + 1));
    CHECK(rep.d_next_size == rep.pd_size);
    CHECK(rep.size_match);
    CHECK(rep.bijective);
    CHECK(rep.homomorphic);
    CHECK(rep.verdict == "pass");
  }
}
