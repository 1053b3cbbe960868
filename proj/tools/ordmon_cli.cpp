// Command-line front end.  Every command is a thin adapter over the shared
// library's C interface; no algebra happens here.
//
// Exit codes: 0 success / verified, 1 verification fail, 2 usage error,
// 3 resource or step cap.

#include <cstdint>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "ordmon/ordmon.h"

namespace {

using Json = nlohmann::ordered_json;

constexpr int kExitPass = 0;
constexpr int kExitFail = 1;
constexpr int kExitUsage = 2;
constexpr int kExitResource = 3;

int exit_code_for(ordmon_status status) {
  switch (status) {
    case ORDMON_OK:
      return kExitPass;
    case ORDMON_ERR_INVALID_ARGUMENT:
    case ORDMON_ERR_UNSUPPORTED:
      return kExitUsage;
    case ORDMON_ERR_RESOURCE_LIMIT:
    case ORDMON_ERR_STEP_CAP:
      return kExitResource;
    default:
      return kExitFail;
  }
}

int report_error(ordmon_status status) {
  std::fprintf(stderr, "error: %s\n", ordmon_last_error());
  return exit_code_for(status);
}

// Takes ownership of a C string from the library.
std::string take(char* s) {
  std::string out = s == nullptr ? "" : s;
  ordmon_string_free(s);
  return out;
}

struct NRange {
  int lo = 0, hi = 0;
  bool single() const { return lo == hi; }
};

bool parse_n(const std::string& text, NRange& out) {
  auto parse_int = [](const std::string& part, int& v) {
    if (part.empty() || part.size() > 6) return false;
    for (char c : part)
      if (c < '0' || c > '9') return false;
    v = std::stoi(part);
    return v >= 1;
  };
  auto dots = text.find("..");
  if (dots == std::string::npos)
    return parse_int(text, out.lo) && (out.hi = out.lo, true);
  return parse_int(text.substr(0, dots), out.lo) &&
         parse_int(text.substr(dots + 2), out.hi) && out.lo <= out.hi;
}

bool parse_images(const std::string& row, std::vector<int>& out) {
  std::string cur;
  for (std::size_t k = 0; k <= row.size(); ++k) {
    if (k < row.size() && row[k] != ',') {
      if (row[k] < '0' || row[k] > '9') return false;
      cur.push_back(row[k]);
      continue;
    }
    if (cur.empty() || cur.size() > 6) return false;
    out.push_back(std::stoi(cur));
    cur.clear();
  }
  return !out.empty();
}

int emit(const std::string& text, const std::string& output_path) {
  if (output_path.empty()) {
    std::fwrite(text.data(), 1, text.size(), stdout);
    return kExitPass;
  }
  std::ofstream f(output_path, std::ios::binary);
  f.write(text.data(), static_cast<std::streamsize>(text.size()));
  if (!f) {
    std::fprintf(stderr, "error: cannot write %s\n", output_path.c_str());
    return kExitUsage;
  }
  return kExitPass;
}

std::uint64_t env_max_states() {
  const char* env = std::getenv("ORDMON_MAX_STATES");
  return env == nullptr ? 0 : std::strtoull(env, nullptr, 10);
}

int usage(const std::string& what) {
  std::fprintf(stderr, "error: %s\n", what.c_str());
  return kExitUsage;
}

int run_enumerate(const std::string& family, const NRange& nr,
                  const std::string& format, const std::string& output) {
  if (!nr.single()) return usage("enumerate takes a single --n");
  if (format == "dot") return usage("enumerate emits json or text");
  char* json = nullptr;
  ordmon_status st = ordmon_enumerate_json(family.c_str(), nr.lo, &json);
  if (st != ORDMON_OK) return report_error(st);
  std::string payload = take(json);
  if (format == "json") return emit(Json::parse(payload).dump(2) + "\n", output);
  std::string text;
  for (const auto& m : Json::parse(payload)) {
    std::string row;
    for (const auto& v : m.at("images")) {
      if (!row.empty()) row += ",";
      row += std::to_string(v.get<int>());
    }
    text += row + "\n";
  }
  return emit(text, output);
}

int run_normalize(const std::string& family, const NRange& nr, const std::string& word,
                  const std::string& format, const std::string& output) {
  if (!nr.single()) return usage("normalize takes a single --n");
  if (format == "dot") return usage("normalize emits json or text");
  char* json = nullptr;
  ordmon_status st = ordmon_normalize(family.c_str(), nr.lo, word.c_str(), &json);
  if (st != ORDMON_OK) return report_error(st);
  Json j = Json::parse(take(json));
  if (format == "json") return emit(j.dump(2) + "\n", output);
  return emit(j.at("word").get<std::string>() + "\n", output);
}

int run_verify(const std::string& family, const NRange& nr, const std::string& format,
               const std::string& output) {
  if (format == "dot") return usage("verify emits json or text");
  std::vector<std::string> families;
  if (family == "all")
    families = {"d", "id", "c", "ic", "pc"};
  else
    families = {family};
  Json reports = Json::array();
  std::string text;
  bool all_pass = true;
  for (int n = nr.lo; n <= nr.hi; ++n)
    for (const auto& fam : families) {
      char* json = nullptr;
      int pass = 0;
      ordmon_status st =
          ordmon_verify(fam.c_str(), n, env_max_states(), 0, &json, &pass);
      if (st != ORDMON_OK) return report_error(st);
      Json rep = Json::parse(take(json));
      reports.push_back(rep);
      text += fam + " n=" + std::to_string(n) + ": " +
              rep.at("verdict").get<std::string>() + "\n";
      all_pass = all_pass && pass == 1;
    }
  std::string payload =
      format == "json"
          ? (reports.size() == 1 ? reports.front().dump(2) : reports.dump(2)) + "\n"
          : text;
  int code = emit(payload, output);
  if (code != kExitPass) return code;
  return all_pass ? kExitPass : kExitFail;
}

int run_count(const std::string& family, const NRange& nr, const std::string& format,
              const std::string& output) {
  if (format == "dot") return usage("count emits json or text");
  Json rows = Json::array();
  std::string text;
  for (int n = nr.lo; n <= nr.hi; ++n) {
    std::uint64_t size = 0;
    ordmon_status st = ordmon_count(family.c_str(), n, &size);
    if (st != ORDMON_OK) return report_error(st);
    Json row = Json::object();
    row["n"] = n;
    row["size"] = size;
    rows.push_back(row);
    if (!text.empty()) text += ", ";
    text += std::to_string(size);
  }
  if (format == "json") return emit(rows.dump(2) + "\n", output);
  return emit(text + "\n", output);
}

int run_cayley(const std::string& family, const NRange& nr, const std::string& format,
               const std::string& output) {
  if (!nr.single()) return usage("cayley takes a single --n");
  if (format != "dot") return usage("cayley emits dot only");
  char* dot = nullptr;
  ordmon_status st = ordmon_cayley_dot(family.c_str(), nr.lo, &dot);
  if (st != ORDMON_OK) return report_error(st);
  return emit(take(dot), output);
}

int run_factorize(const std::string& map_row, const std::string& format,
                  const std::string& output) {
  if (format == "dot") return usage("factorize emits json or text");
  std::vector<int> images;
  if (!parse_images(map_row, images))
    return usage("--map wants a comma-separated image row, e.g. 0,1,2");
  char* word = nullptr;
  ordmon_status st =
      ordmon_factorize_ic(static_cast<int>(images.size()), images.data(), &word);
  if (st != ORDMON_OK) return report_error(st);
  std::string w = take(word);
  if (format == "json") {
    Json j = Json::object();
    j["word"] = w;
    return emit(j.dump(2) + "\n", output);
  }
  return emit(w + "\n", output);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"order-decreasing transformation monoids on a finite chain"};
  app.require_subcommand(1);

  std::string family, nrange_text = "1", word, map_row, format, output;

  auto add_common = [&](CLI::App* cmd) {
    cmd->add_option("--family", family, "family: d, pd, id, c, ic, pc")->required();
    cmd->add_option("--n", nrange_text, "chain size, a single N or a range a..b")->required();
    cmd->add_option("--format", format, "output format")
        ->check(CLI::IsMember({"json", "text", "dot"}));
    cmd->add_option("-o,--output", output, "write to a file instead of stdout");
    return cmd;
  };

  auto* cmd_enum = add_common(app.add_subcommand("enumerate", "list all elements"));
  auto* cmd_norm = add_common(app.add_subcommand("normalize", "canonical word"));
  cmd_norm->add_option("--word", word, "generator word, e.g. \"e[1,3] e[1,2]\"")
      ->required();
  auto* cmd_verify =
      add_common(app.add_subcommand("verify", "run the full correctness pipeline"));
  auto* cmd_count = add_common(app.add_subcommand("count", "element counts"));
  auto* cmd_cayley =
      add_common(app.add_subcommand("cayley", "right Cayley graph as DOT"));
  auto* cmd_fact = app.add_subcommand("factorize", "generator word for a member of IC");
  cmd_fact->add_option("--map", map_row, "image row, e.g. 0,1,2")->required();
  cmd_fact->add_option("--format", format, "output format")
      ->check(CLI::IsMember({"json", "text", "dot"}));
  cmd_fact->add_option("-o,--output", output, "write to a file instead of stdout");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? kExitPass : kExitUsage;
  }

  if (format.empty()) format = cmd_cayley->parsed() ? "dot" : "text";
  if (cmd_fact->parsed()) return run_factorize(map_row, format, output);

  NRange nr;
  if (!parse_n(nrange_text, nr)) return usage("--n wants N or a..b with 1 <= a <= b");
  if (cmd_enum->parsed()) return run_enumerate(family, nr, format, output);
  if (cmd_norm->parsed()) return run_normalize(family, nr, word, format, output);
  if (cmd_verify->parsed()) return run_verify(family, nr, format, output);
  if (cmd_count->parsed()) return run_count(family, nr, format, output);
  return run_cayley(family, nr, format, output);
}
