#include "ordmon/serialize.hpp"

#include "ordmon/errors.hpp"

namespace ordmon {

Json to_json(const PartialMap& m) {
  Json j = Json::object();
  j["n"] = m.n();
  j["images"] = m.images();
  return j;
}

PartialMap partial_map_from_json(const Json& j) {
  if (!j.is_object() || !j.contains("n") || !j.contains("images"))
    throw ValidationError("partial map JSON needs {\"n\", \"images\"}");
  return PartialMap(j.at("n").get<int>(), j.at("images").get<std::vector<int>>());
}

Json to_json(const RewriteStep& s) {
  Json j = Json::object();
  j["rel"] = s.relation_id;
  j["pos"] = s.pos;
  j["dir"] = s.dir == Direction::LR ? "LR" : "RL";
  return j;
}

Json to_json(const Derivation& d) {
  Json j = Json::object();
  j["start"] = format_word(d.start);
  j["steps"] = Json::array();
  for (const auto& s : d.steps) j["steps"].push_back(to_json(s));
  j["end"] = format_word(d.end);
  return j;
}

Derivation derivation_from_json(const Json& j, Family fam, int n) {
  if (!j.is_object() || !j.contains("start") || !j.contains("steps") || !j.contains("end"))
    throw ValidationError("derivation JSON needs {\"start\", \"steps\", \"end\"}");
  Derivation d;
  d.start = parse_word(j.at("start").get<std::string>(), fam, n);
  d.end = parse_word(j.at("end").get<std::string>(), fam, n);
  for (const auto& js : j.at("steps")) {
    std::string dir = js.at("dir").get<std::string>();
    if (dir != "LR" && dir != "RL")
      throw ValidationError("derivation step direction must be \"LR\" or \"RL\"");
    d.steps.push_back(RewriteStep{js.at("rel").get<std::string>(),
                                  js.at("pos").get<int>(),
                                  dir == "LR" ? Direction::LR : Direction::RL});
  }
  return d;
}

Json to_json(const SoundnessReport& r) {
  Json j = Json::object();
  j["family"] = family_name(r.family);
  j["n"] = r.n;
  j["all_hold"] = r.all_hold;
  j["checks"] = Json::array();
  for (const auto& c : r.checks) {
    Json jc = Json::object();
    jc["id"] = c.id;
    jc["holds"] = c.holds;
    jc["witness"] = c.witness;
    j["checks"].push_back(jc);
  }
  return j;
}

Json to_json(const PresentedSizeResult& r) {
  Json j = Json::object();
  j["status"] = r.status == PresentedSizeStatus::Completed ? "completed" : "exhausted";
  if (r.status == PresentedSizeStatus::Completed) j["size"] = r.size;
  j["method"] = r.method;
  return j;
}

Json to_json(const VerificationReport& r) {
  Json j = Json::object();
  j["family"] = r.family;
  j["n"] = r.n;
  j["relations_sound"] = r.relations_sound;
  j["generators_generate"] = r.generators_generate;
  j["concrete_size"] = r.concrete_size;
  if (r.normal_form_count) j["normal_form_count"] = *r.normal_form_count;
  if (r.presented_size) j["presented_size"] = *r.presented_size;
  j["derivations_checked"] = r.derivations_checked;
  j["verdict"] = r.verdict;
  if (r.failed_stage) j["failed_stage"] = *r.failed_stage;
  return j;
}

Json to_json(const PdIsoReport& r) {
  Json j = Json::object();
  j["n"] = r.n;
  j["pd_size"] = r.pd_size;
  j["d_next_size"] = r.d_next_size;
  j["size_match"] = r.size_match;
  j["bijective"] = r.bijective;
  j["homomorphic"] = r.homomorphic;
  j["verdict"] = r.verdict;
  return j;
}

}  // namespace ordmon
