#include "ordmon/verification.hpp"

#include <algorithm>
#include <random>
#include <set>
#include <vector>

#include "ordmon/errors.hpp"
#include "ordmon/normal_form.hpp"

namespace ordmon {

GenerationCheck generators_generate(Family fam, int n) {
  std::vector<PartialMap> gen_maps;
  for (const auto& g : alphabet(fam, n)) gen_maps.push_back(generator_map(fam, g, n));
  std::set<PartialMap> seen;
  std::vector<PartialMap> queue{PartialMap::identity(n)};
  seen.insert(queue.front());
  for (std::size_t h = 0; h < queue.size(); ++h)
    for (const auto& g : gen_maps) {
      PartialMap next = compose(queue[h], g);
      if (seen.insert(next).second) queue.push_back(next);
    }
  auto all = brute_force_enumerate(fam, n);
  bool ok = seen.size() == all.size();
  for (const auto& m : all)
    if (ok && seen.count(m) == 0) ok = false;
  return GenerationCheck{ok, seen.size()};
}

namespace {

// Words of length <= 4 over the full alphabet, then seeded-random words of
// length <= max_len; every sampled word must normalize to a canonical word
// with the same evaluation, the result must be a fixpoint, and the logged
// derivation must replay.
bool sample_normalizer(const Presentation& p, const VerifyOptions& opts,
                       std::uint64_t& derivations_checked) {
  const auto letters = alphabet(p.family, p.n);
  std::vector<Word> sample;
  if (p.n <= opts.exhaustive_sample_max_n) {
    std::vector<Word> layer{Word{p.family, p.n, {}}};
    sample.push_back(layer.front());
    for (int len = 1; len <= 4; ++len) {
      std::vector<Word> next;
      for (const auto& w : layer)
        for (const auto& l : letters) {
          Word e = w;
          e.letters.push_back(l);
          next.push_back(e);
        }
      sample.insert(sample.end(), next.begin(), next.end());
      layer = std::move(next);
    }
  }
  if (p.n <= opts.random_sample_max_n && !letters.empty()) {
    std::mt19937 rng(opts.random_seed);
    for (int s = 0; s < opts.random_sample_count; ++s) {
      Word w{p.family, p.n, {}};
      auto len = rng() % static_cast<std::uint32_t>(opts.random_sample_max_len + 1);
      for (std::uint32_t k = 0; k < len; ++k)
        w.letters.push_back(letters[rng() % letters.size()]);
      sample.push_back(std::move(w));
    }
  }
  for (const auto& w : sample) {
    NormalizeResult res = normalize(w, p);
    if (!(evaluate(res.word) == evaluate(w))) return false;
    if (!recognize(res.word).has_value()) return false;
    if (!check_derivation(res.derivation, p)) return false;
    ++derivations_checked;
    NormalizeResult again = normalize(res.word, p);
    if (again.word != res.word || !again.derivation.steps.empty()) return false;
  }
  return true;
}

}  // namespace

VerificationReport verify_presentation(Family fam, int n, const VerifyOptions& opts) {
  if (fam == Family::PD)
    throw UnsupportedError("verify_presentation: PD is covered by verify_pd_iso");
  VerificationReport rep;
  rep.family = family_name(fam);
  rep.n = n;
  Presentation p = build_presentation(fam, n);

  auto incomplete = [&](const char* stage) {
    rep.verdict = "incomplete";
    rep.failed_stage = stage;
    return rep;
  };

  rep.relations_sound = check_soundness(p).all_hold;

  std::vector<PartialMap> concrete;
  try {
    concrete = brute_force_enumerate(fam, n);
    rep.concrete_size = concrete.size();
    rep.generators_generate = ordmon::generators_generate(fam, n).generates;
  } catch (const ResourceLimitError&) {
    return incomplete("brute-force-enumeration");
  }

  bool counts_match = false;
  if (fam != Family::C) {
    auto forms = enumerate_normal_forms(fam, n);
    rep.normal_form_count = forms.size();
    counts_match = forms.size() == concrete.size();
  }
  if (fam == Family::C || n <= opts.presented_cross_check_max_n) {
    PresentedSizeResult ps = presented_size(p, opts.limits);
    if (ps.status == PresentedSizeStatus::Completed) {
      rep.presented_size = ps.size;
      bool match = ps.size == concrete.size();
      counts_match = fam == Family::C ? match : (counts_match && match);
    } else if (fam == Family::C) {
      return incomplete("presented-size");
    }
  }

  bool sampling_ok = true;
  if (fam == Family::D || fam == Family::ID || fam == Family::IC) {
    try {
      sampling_ok = sample_normalizer(p, opts, rep.derivations_checked);
    } catch (const StepCapError&) {
      return incomplete("normalizer-sampling");
    }
  }

  bool pass = rep.relations_sound && rep.generators_generate && counts_match && sampling_ok;
  rep.verdict = pass ? "pass" : "fail";
  return rep;
}

PdIsoReport verify_pd_iso(int n) {
  PdIsoReport rep;
  rep.n = n;
  auto pd = brute_force_enumerate(Family::PD, n);
  auto d_next = brute_force_enumerate(Family::D, n + 1);
  rep.pd_size = pd.size();
  rep.d_next_size = d_next.size();
  rep.size_match = pd.size() == d_next.size();

  std::set<PartialMap> targets(d_next.begin(), d_next.end());
  std::set<PartialMap> images;
  bool into = true;
  for (const auto& m : pd) {
    PartialMap im = adjoin_bottom(m);
    if (targets.count(im) == 0) into = false;
    images.insert(im);
  }
  rep.bijective = into && images.size() == pd.size() && images.size() == d_next.size();

  rep.homomorphic = adjoin_bottom(PartialMap::identity(n)) == PartialMap::identity(n + 1);
  for (const auto& a : pd) {
    if (!rep.homomorphic) break;
    for (const auto& b : pd)
      if (!(adjoin_bottom(compose(a, b)) ==
            compose(adjoin_bottom(a), adjoin_bottom(b)))) {
        rep.homomorphic = false;
        break;
      }
  }
  rep.verdict = rep.size_match && rep.bijective && rep.homomorphic ? "pass" : "fail";
  return rep;
}

}  // namespace ordmon
