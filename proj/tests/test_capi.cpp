#include <cstring>
#include <string>
#include <vector>

#include "doctest.h"
#include "json.hpp"
#include "ordmon/ordmon.h"

namespace {

// Takes ownership of a C string result.
std::string take(char* s) {
  REQUIRE(s != nullptr);
  std::string out(s);
  ordmon_string_free(s);
  return out;
}

}  // namespace

TEST_CASE("map lifecycle through the C boundary") {
  ordmon_map* m = nullptr;
  const int images[3] = {1, 0, 2};
  REQUIRE(ordmon_map_create(3, images, &m) == ORDMON_OK);
  CHECK(ordmon_map_n(m) == 3);

  int buf[3] = {-1, -1, -1};
  REQUIRE(ordmon_map_images(m, buf, 3) == ORDMON_OK);
  CHECK(buf[0] == 1);
  CHECK(buf[1] == 0);
  CHECK(buf[2] == 2);
  CHECK(ordmon_map_images(m, buf, 2) == ORDMON_ERR_INVALID_ARGUMENT);

  int dec = 0, pres = 0, inj = 0, full = 0;
  REQUIRE(ordmon_map_classify(m, &dec, &pres, &inj, &full) == ORDMON_OK);
  CHECK(dec == 1);
  CHECK(pres == 1);
  CHECK(inj == 1);
  CHECK(full == 0);

  int member = 0;
  REQUIRE(ordmon_map_in_family(m, "ic", &member) == ORDMON_OK);
  CHECK(member == 1);
  REQUIRE(ordmon_map_in_family(m, "d", &member) == ORDMON_OK);
  CHECK(member == 0);
  CHECK(ordmon_map_in_family(m, "zz", &member) == ORDMON_ERR_INVALID_ARGUMENT);

  ordmon_map* id = nullptr;
  REQUIRE(ordmon_map_identity(3, &id) == ORDMON_OK);
  ordmon_map* out = nullptr;
  REQUIRE(ordmon_map_compose(m, id, &out) == ORDMON_OK);
  int buf2[3];
  REQUIRE(ordmon_map_images(out, buf2, 3) == ORDMON_OK);
  CHECK(std::memcmp(buf, buf2, sizeof buf) == 0);

  ordmon_map_free(out);
  ordmon_map_free(id);
  ordmon_map_free(m);
}

TEST_CASE("errors surface as status codes with messages") {
  ordmon_map* m = nullptr;
  const int bad[2] = {3, 1};
  CHECK(ordmon_map_create(2, bad, &m) == ORDMON_ERR_INVALID_ARGUMENT);
  CHECK(m == nullptr);
  CHECK(std::string(ordmon_last_error()).size() > 0);

  char* text = nullptr;
  CHECK(ordmon_enumerate_json("q", 3, &text) == ORDMON_ERR_INVALID_ARGUMENT);
  CHECK(text == nullptr);

  CHECK(ordmon_normalize("pc", 3, "f[1]", &text) == ORDMON_ERR_UNSUPPORTED);
  CHECK(ordmon_normalize("d", 3, "e[9,9]", &text) == ORDMON_ERR_INVALID_ARGUMENT);
  CHECK(ordmon_presentation_text("pd", 3, &text) == ORDMON_ERR_UNSUPPORTED);

  uint64_t count = 0;
  CHECK(ordmon_count("d", 40, &count) == ORDMON_ERR_RESOURCE_LIMIT);

  CHECK(ordmon_map_create(3, nullptr, &m) == ORDMON_ERR_INVALID_ARGUMENT);
  CHECK(ordmon_map_create(3, bad, nullptr) == ORDMON_ERR_INVALID_ARGUMENT);

  // A successful call clears the sticky message.
  uint64_t ok_count = 0;
  REQUIRE(ordmon_count("d", 3, &ok_count) == ORDMON_OK);
  CHECK(std::string(ordmon_last_error()).empty());
}

TEST_CASE("family-level queries") {
  uint64_t count = 0;
  REQUIRE(ordmon_count("pc", 3, &count) == ORDMON_OK);
  CHECK(count == 22);
  REQUIRE(ordmon_normal_form_count("pc", 3, &count) == ORDMON_OK);
  CHECK(count == 22);
  REQUIRE(ordmon_count("pd", 3, &count) == ORDMON_OK);
  CHECK(count == 24);
  CHECK(ordmon_normal_form_count("c", 3, &count) == ORDMON_ERR_UNSUPPORTED);

  char* text = nullptr;
  REQUIRE(ordmon_enumerate_json("c", 3, &text) == ORDMON_OK);
  auto arr = nlohmann::json::parse(take(text));
  REQUIRE(arr.is_array());
  CHECK(arr.size() == 5);
  CHECK(arr[0]["n"] == 3);
  CHECK(arr[0]["images"].size() == 3);

  REQUIRE(ordmon_presentation_text("d", 2, &text) == ORDMON_OK);
  CHECK(take(text) == "D.1[1,2]: e[1,2] e[1,2] = e[1,2]\n");

  REQUIRE(ordmon_presented_size("ic", 3, 0, 0, &text) == ORDMON_OK);
  auto ps = nlohmann::json::parse(take(text));
  CHECK(ps["status"] == "completed");
  CHECK(ps["size"] == 14);
  CHECK(ps["method"] == "coset-enumeration");

  REQUIRE(ordmon_presented_size("d", 5, 10, 0, &text) == ORDMON_OK);
  ps = nlohmann::json::parse(take(text));
  CHECK(ps["status"] == "exhausted");
  CHECK_FALSE(ps.contains("size"));

  REQUIRE(ordmon_cayley_dot("c", 2, &text) == ORDMON_OK);
  std::string dot = take(text);
  CHECK(dot.find("digraph") != std::string::npos);
  CHECK(dot.find("e[1]") != std::string::npos);
}

TEST_CASE("normalization through the C boundary") {
  char* text = nullptr;
  REQUIRE(ordmon_normalize("id", 3, "a[2,3] a[1,2]", &text) == ORDMON_OK);
  auto j = nlohmann::json::parse(take(text));
  CHECK(j["word"] == "f[2] a[1,3]");
  CHECK(j["derivation"]["start"] == "a[2,3] a[1,2]");
  CHECK(j["derivation"]["end"] == "f[2] a[1,3]");
  REQUIRE(j["derivation"]["steps"].is_array());
  CHECK(j["derivation"]["steps"].size() > 0);
  for (const auto& step : j["derivation"]["steps"]) {
    CHECK(step.contains("rel"));
    CHECK(step.contains("pos"));
    CHECK((step["dir"] == "LR" || step["dir"] == "RL"));
  }
}

TEST_CASE("verification through the C boundary") {
  char* text = nullptr;
  int pass = 0;
  REQUIRE(ordmon_verify("ic", 3, 0, 0, &text, &pass) == ORDMON_OK);
  CHECK(pass == 1);
  auto j = nlohmann::json::parse(take(text));
  CHECK(j["family"] == "IC");
  CHECK(j["n"] == 3);
  CHECK(j["verdict"] == "pass");
  CHECK(j["concrete_size"] == 14);

  REQUIRE(ordmon_verify("c", 4, 4, 0, &text, &pass) == ORDMON_OK);
  CHECK(pass == 0);
  j = nlohmann::json::parse(take(text));
  CHECK(j["verdict"] == "incomplete");
  CHECK(j["failed_stage"] == "presented-size");

  REQUIRE(ordmon_verify_pd(2, &text, &pass) == ORDMON_OK);
  CHECK(pass == 1);
  j = nlohmann::json::parse(take(text));
  CHECK(j["pd_size"] == 6);
  CHECK(j["d_next_size"] == 6);
  CHECK(j["verdict"] == "pass");
}

TEST_CASE("factorization through the C boundary") {
  char* text = nullptr;
  const int images[3] = {0, 1, 2};
  REQUIRE(ordmon_factorize_ic(3, images, &text) == ORDMON_OK);
  CHECK(take(text) == "e[1] a[1] a[2]");

  const int bad[3] = {1, 1, 3};
  CHECK(ordmon_factorize_ic(3, bad, &text) == ORDMON_ERR_INVALID_ARGUMENT);
}
