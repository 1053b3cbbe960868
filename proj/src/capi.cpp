#include "ordmon/ordmon.h"

#include <cstdlib>
#include <cstring>
#include <exception>
#include <new>
#include <string>
#include <vector>

#include "ordmon/cayley.hpp"
#include "ordmon/chain_map.hpp"
#include "ordmon/congruence.hpp"
#include "ordmon/errors.hpp"
#include "ordmon/normal_form.hpp"
#include "ordmon/presentation.hpp"
#include "ordmon/serialize.hpp"
#include "ordmon/verification.hpp"
#include "ordmon/word.hpp"

struct ordmon_map {
  ordmon::PartialMap impl;
};

namespace {

thread_local std::string g_last_error;

template <typename Fn>
ordmon_status guarded(Fn&& fn) {
  try {
    fn();
    g_last_error.clear();
    return ORDMON_OK;
  } catch (const ordmon::ValidationError& e) {
    g_last_error = e.what();
    return ORDMON_ERR_INVALID_ARGUMENT;
  } catch (const ordmon::UnsupportedError& e) {
    g_last_error = e.what();
    return ORDMON_ERR_UNSUPPORTED;
  } catch (const ordmon::ResourceLimitError& e) {
    g_last_error = e.what();
    return ORDMON_ERR_RESOURCE_LIMIT;
  } catch (const ordmon::StepCapError& e) {
    g_last_error = e.what();
    return ORDMON_ERR_STEP_CAP;
  } catch (const std::exception& e) {
    g_last_error = e.what();
    return ORDMON_ERR_INTERNAL;
  }
}

char* copy_out(const std::string& s) {
  char* buf = static_cast<char*>(std::malloc(s.size() + 1));
  if (buf == nullptr) throw std::bad_alloc();
  std::memcpy(buf, s.c_str(), s.size() + 1);
  return buf;
}

void require(bool ok, const char* what) {
  if (!ok) throw ordmon::ValidationError(what);
}

ordmon::PartialMap map_from(int n, const int* images) {
  require(images != nullptr, "images must not be null");
  require(n >= 1, "n must be at least 1");
  return ordmon::PartialMap(n, std::vector<int>(images, images + n));
}

}  // namespace

extern "C" {

const char* ordmon_last_error(void) { return g_last_error.c_str(); }

void ordmon_string_free(char* s) { std::free(s); }

ordmon_status ordmon_map_create(int n, const int* images, ordmon_map** out) {
  return guarded([&] {
    require(out != nullptr, "out must not be null");
    *out = new ordmon_map{map_from(n, images)};
  });
}

ordmon_status ordmon_map_identity(int n, ordmon_map** out) {
  return guarded([&] {
    require(out != nullptr, "out must not be null");
    *out = new ordmon_map{ordmon::PartialMap::identity(n)};
  });
}

ordmon_status ordmon_map_compose(const ordmon_map* first, const ordmon_map* second,
                                 ordmon_map** out) {
  return guarded([&] {
    require(first != nullptr && second != nullptr && out != nullptr,
            "arguments must not be null");
    *out = new ordmon_map{ordmon::compose(first->impl, second->impl)};
  });
}

int ordmon_map_n(const ordmon_map* m) { return m == nullptr ? 0 : m->impl.n(); }

ordmon_status ordmon_map_images(const ordmon_map* m, int* buf, size_t buflen) {
  return guarded([&] {
    require(m != nullptr && buf != nullptr, "arguments must not be null");
    const auto& images = m->impl.images();
    require(buflen >= images.size(), "buffer too small for the image row");
    std::memcpy(buf, images.data(), images.size() * sizeof(int));
  });
}

ordmon_status ordmon_map_classify(const ordmon_map* m, int* order_decreasing,
                                  int* order_preserving, int* injective, int* full) {
  return guarded([&] {
    require(m != nullptr, "map must not be null");
    ordmon::PropertySet props = m->impl.classify();
    if (order_decreasing != nullptr) *order_decreasing = props.order_decreasing ? 1 : 0;
    if (order_preserving != nullptr) *order_preserving = props.order_preserving ? 1 : 0;
    if (injective != nullptr) *injective = props.injective ? 1 : 0;
    if (full != nullptr) *full = props.full ? 1 : 0;
  });
}

ordmon_status ordmon_map_in_family(const ordmon_map* m, const char* family, int* out) {
  return guarded([&] {
    require(m != nullptr && family != nullptr && out != nullptr,
            "arguments must not be null");
    *out = m->impl.in_family(ordmon::family_from_string(family)) ? 1 : 0;
  });
}

void ordmon_map_free(ordmon_map* m) { delete m; }

ordmon_status ordmon_enumerate_json(const char* family, int n, char** out) {
  return guarded([&] {
    require(family != nullptr && out != nullptr, "arguments must not be null");
    ordmon::Json arr = ordmon::Json::array();
    for (const auto& m :
         ordmon::brute_force_enumerate(ordmon::family_from_string(family), n))
      arr.push_back(ordmon::to_json(m));
    *out = copy_out(arr.dump());
  });
}

ordmon_status ordmon_count(const char* family, int n, uint64_t* out) {
  return guarded([&] {
    require(family != nullptr && out != nullptr, "arguments must not be null");
    *out = ordmon::brute_force_enumerate(ordmon::family_from_string(family), n).size();
  });
}

ordmon_status ordmon_normal_form_count(const char* family, int n, uint64_t* out) {
  return guarded([&] {
    require(family != nullptr && out != nullptr, "arguments must not be null");
    *out = ordmon::enumerate_normal_forms(ordmon::family_from_string(family), n).size();
  });
}

ordmon_status ordmon_normalize(const char* family, int n, const char* word, char** out) {
  return guarded([&] {
    require(family != nullptr && word != nullptr && out != nullptr,
            "arguments must not be null");
    ordmon::Family fam = ordmon::family_from_string(family);
    ordmon::NormalizeResult res = ordmon::normalize(ordmon::parse_word(word, fam, n));
    ordmon::Json j = ordmon::Json::object();
    j["word"] = ordmon::format_word(res.word);
    j["derivation"] = ordmon::to_json(res.derivation);
    *out = copy_out(j.dump());
  });
}

ordmon_status ordmon_verify(const char* family, int n, uint64_t max_states,
                            uint64_t max_steps, char** out, int* out_pass) {
  return guarded([&] {
    require(family != nullptr && out != nullptr, "arguments must not be null");
    ordmon::VerifyOptions opts;
    if (max_states != 0) opts.limits.max_states = max_states;
    if (max_steps != 0) opts.limits.max_steps = max_steps;
    ordmon::VerificationReport rep =
        ordmon::verify_presentation(ordmon::family_from_string(family), n, opts);
    *out = copy_out(ordmon::to_json(rep).dump());
    if (out_pass != nullptr) *out_pass = rep.verdict == "pass" ? 1 : 0;
  });
}

ordmon_status ordmon_verify_pd(int n, char** out, int* out_pass) {
  return guarded([&] {
    require(out != nullptr, "out must not be null");
    ordmon::PdIsoReport rep = ordmon::verify_pd_iso(n);
    *out = copy_out(ordmon::to_json(rep).dump());
    if (out_pass != nullptr) *out_pass = rep.verdict == "pass" ? 1 : 0;
  });
}

ordmon_status ordmon_presentation_text(const char* family, int n, char** out) {
  return guarded([&] {
    require(family != nullptr && out != nullptr, "arguments must not be null");
    *out = copy_out(ordmon::export_presentation(
        ordmon::build_presentation(ordmon::family_from_string(family), n)));
  });
}

ordmon_status ordmon_presented_size(const char* family, int n, uint64_t max_states,
                                    uint64_t max_steps, char** out) {
  return guarded([&] {
    require(family != nullptr && out != nullptr, "arguments must not be null");
    ordmon::CongruenceLimits limits;
    if (max_states != 0) limits.max_states = max_states;
    if (max_steps != 0) limits.max_steps = max_steps;
    ordmon::PresentedSizeResult res = ordmon::presented_size(
        ordmon::build_presentation(ordmon::family_from_string(family), n), limits);
    *out = copy_out(ordmon::to_json(res).dump());
  });
}

ordmon_status ordmon_cayley_dot(const char* family, int n, char** out) {
  return guarded([&] {
    require(family != nullptr && out != nullptr, "arguments must not be null");
    *out = copy_out(ordmon::cayley_dot(ordmon::family_from_string(family), n));
  });
}

ordmon_status ordmon_factorize_ic(int n, const int* images, char** out) {
  return guarded([&] {
    require(out != nullptr, "out must not be null");
    *out = copy_out(ordmon::format_word(ordmon::factorize_ic(map_from(n, images))));
  });
}

}  // extern "C"
